#include "salem/cli/suites.hpp"

#include <random>

namespace salem::cli {

namespace {

constexpr std::size_t kE8Offset = 2;

LatticeVector random_orthogonal(const Lattice& l, const std::vector<LatticeVector>& to, std::mt19937_64& rng) {
  const std::size_t r = l.rank();
  while (true) {
    LatticeVector w(r);
    bool nonzero = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (rng() % 3 != 0) continue;
      w[i] = static_cast<long>(rng() % 5) - 2;
      nonzero = nonzero || sgn(w[i]) != 0;
    }
    if (!nonzero) continue;
    bool ok = true;
    for (const auto& v : to) ok = ok && sgn(l.pair(v, w)) == 0;
    if (ok) return w;
  }
}

}  // namespace

LatticePtr lattice_u_e8() {
  static const LatticePtr l = std::make_shared<const Lattice>(direct_sum(gram_hyperbolic_plane(), gram_e8()));
  return l;
}

LatticePtr lattice_u_e8_u() {
  static const LatticePtr l = std::make_shared<const Lattice>(
      direct_sum(direct_sum(gram_hyperbolic_plane(), gram_e8()), gram_hyperbolic_plane()));
  return l;
}

LatticeVector unit_vector(std::size_t rank, std::size_t i) {
  LatticeVector v(rank);
  v[i] = 1;
  return v;
}

LatticeVector positive_witness(std::size_t rank) {
  LatticeVector v(rank);
  v[0] = 1;
  v[1] = 1;
  return v;
}

std::vector<LatticeVector> reflection_roots_u_e8() {
  std::vector<LatticeVector> roots;
  for (std::size_t i = 0; i < 8; ++i) roots.push_back(unit_vector(10, kE8Offset + i));
  LatticeVector a(10), b(10), c(10);
  a[0] = 1, a[1] = -1;
  b[0] = 1, b[kE8Offset + 7] = 1;
  c[0] = 1, c[1] = 1;
  roots.push_back(a);
  roots.push_back(b);
  roots.push_back(c);
  return roots;
}

Isometry cone_preserving_word(std::uint64_t seed) {
  static const std::vector<LatticeVector> roots = reflection_roots_u_e8();
  const unsigned length = 8 + static_cast<unsigned>(std::mt19937_64(seed)() % 23);
  Isometry f = random_isometry(lattice_u_e8(), roots, length, seed);
  if (!preserves_positive_cone(f, positive_witness(10))) f = compose(f, f);
  return f;
}

std::vector<LatticeVector> isotropic_vectors_u_e8_u() {
  const std::size_t r = 12;
  std::vector<LatticeVector> out{unit_vector(r, 0), unit_vector(r, 10), unit_vector(r, 11)};
  LatticeVector e1e2 = unit_vector(r, 0);
  e1e2[10] = 1;
  out.push_back(e1e2);
  for (std::size_t i = 0; i < 8; ++i) {
    LatticeVector v = unit_vector(r, kE8Offset + i);
    v[10] = 1;
    v[11] = 1;
    out.push_back(v);
  }
  return out;
}

Isometry fixing_word(const LatticePtr& lattice, const LatticeVector& e, const std::vector<LatticeVector>& roots,
                     unsigned max_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const unsigned length = 1 + static_cast<unsigned>(rng() % max_length);
  Isometry g = identity_isometry(lattice);
  for (unsigned i = 0; i < length; ++i) {
    if (roots.empty() || rng() % 2 == 0) {
      g = compose(g, eichler_transvection(lattice, e, random_orthogonal(*lattice, {e}, rng)));
    } else {
      g = compose(g, reflection_in_root(lattice, roots[rng() % roots.size()]));
    }
  }
  return g;
}

TransvectionDraw transvection_product(std::uint64_t seed) {
  static const std::vector<LatticeVector> isotropic = isotropic_vectors_u_e8_u();
  const LatticeVector& e = isotropic[std::mt19937_64(seed)() % isotropic.size()];
  return {e, fixing_word(lattice_u_e8_u(), e, {}, 6, seed)};
}

Isometry quasi_unipotent_word(std::uint64_t seed) {
  std::vector<LatticeVector> roots;
  for (std::size_t i = 0; i < 8; ++i) roots.push_back(unit_vector(10, kE8Offset + i));
  return fixing_word(lattice_u_e8(), unit_vector(10, 0), roots, 10, seed);
}

}  // namespace salem::cli
