#pragma once

// Seeded isometry generators for the lattice property suites (verify-paper,
// tests and benchmarks).

#include <cstdint>
#include <vector>

#include <salem/latiso.hpp>

namespace salem::cli {

/// U + E8, basis e1, f1, then the E8 simple roots.
LatticePtr lattice_u_e8();
/// U + E8 + U, basis e1, f1, E8 simple roots, e2, f2.
LatticePtr lattice_u_e8_u();

LatticeVector unit_vector(std::size_t rank, std::size_t i);
/// e1 + f1, norm 2.
LatticeVector positive_witness(std::size_t rank);

/// Reflection roots for the random words on U + E8: the E8 simple roots,
/// e1 - f1 and e1 + alpha_8 (norm -2) and e1 + f1 (norm 2, swaps the cones).
std::vector<LatticeVector> reflection_roots_u_e8();

/// Cone-preserving random reflection word on U + E8: word length 8..30, and
/// squared when the word swaps the two cones.
Isometry cone_preserving_word(std::uint64_t seed);

/// Isotropic vectors of U + E8 + U: e1, e2, f2, e1 + e2 and e2 + f2 + alpha_i.
std::vector<LatticeVector> isotropic_vectors_u_e8_u();

/// Random word of 1..max_length letters, each a transvection E(e, w) with
/// random w orthogonal to e or a reflection in one of `roots` (which must be
/// orthogonal to e). Every letter fixes e.
Isometry fixing_word(const LatticePtr& lattice, const LatticeVector& e, const std::vector<LatticeVector>& roots,
                     unsigned max_length, std::uint64_t seed);

struct TransvectionDraw {
  LatticeVector e;
  Isometry f;
};

/// Product of 1..6 transvections E(e, w_i) on U + E8 + U sharing one
/// isotropic e drawn from isotropic_vectors_u_e8_u().
TransvectionDraw transvection_product(std::uint64_t seed);

/// Quasi-unipotent isometry of U + E8 fixing e1: fixing_word with the E8
/// simple roots as reflections.
Isometry quasi_unipotent_word(std::uint64_t seed);

}  // namespace salem::cli
