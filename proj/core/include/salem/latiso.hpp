#pragma once

// Integral lattices given by a Gram matrix, certified isometries, and the
// standard generators of their orthogonal groups.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "salem/matrix.hpp"
#include "salem/salemclass.hpp"

namespace salem {

using LatticeVector = IntVector;

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric nonsingular integer matrix, from Sturm counts of
/// the squarefree parts of its characteristic polynomial.
Signature signature(const IntMatrix& gram);

class Lattice {
 public:
  /// Throws PreconditionError unless gram is square, symmetric and nonsingular.
  explicit Lattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& determinant() const { return det_; }
  Signature signature() const { return sig_; }
  bool is_even() const { return even_; }
  /// Signature (1, rank - 1).
  bool is_hyperbolic() const { return sig_.positive == 1 && sig_.negative + 1 == rank(); }

  Integer pair(const LatticeVector& u, const LatticeVector& v) const;
  Integer norm(const LatticeVector& v) const { return pair(v, v); }

 private:
  IntMatrix gram_;
  Integer det_;
  Signature sig_;
  bool even_ = false;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Matrix M acting on column coordinates with M^T G M = G.
class Isometry {
 public:
  const LatticePtr& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return m_; }
  std::size_t rank() const { return m_.rows(); }

  LatticeVector apply(const LatticeVector& v) const { return m_ * v; }

 private:
  friend Isometry verify_isometry(LatticePtr lattice, IntMatrix m);
  Isometry(LatticePtr lattice, IntMatrix m) : lattice_(std::move(lattice)), m_(std::move(m)) {}

  LatticePtr lattice_;
  IntMatrix m_;
};

/// Throws NotAnIsometry if M is not r x r or M^T G M != G. Raises
/// InvariantViolation if det M is not +-1 for a passing matrix.
Isometry verify_isometry(LatticePtr lattice, IntMatrix m);

Isometry identity_isometry(const LatticePtr& lattice);
/// f * g (apply g first). Throws PreconditionError on different lattices.
Isometry compose(const Isometry& f, const Isometry& g);
Isometry power(const Isometry& f, unsigned long n);

IntPoly char_poly(const Isometry& f);

/// True iff (w, M w) > 0. Throws PreconditionError unless the lattice is
/// hyperbolic and (w, w) > 0.
bool preserves_positive_cone(const Isometry& f, const LatticeVector& witness);

/// A positive-norm vector among the basis vectors and then among a*b_i + c*b_j
/// with |a|, |c| <= 3.
std::optional<LatticeVector> find_positive_witness(const Lattice& lattice);

struct IsometryReport {
  FactorReport report;
  bool preserves_cone = false;
};

/// char_poly followed by classify_poly. When the cone is preserved, checks
/// that every factor is cyclotomic except at most one simple Salem factor.
IsometryReport classify_isometry(const Isometry& f, const LatticeVector& witness, const Rational& width,
                                 unsigned digits);

/// s_v(x) = x - 2 (x, v)/(v, v) v for (v, v) = +-2.
Isometry reflection_in_root(const LatticePtr& lattice, const LatticeVector& v);

/// E(e, w)(x) = x + (x, e) w - (x, w) e - (w, w)/2 (x, e) e for isotropic e,
/// (e, w) = 0, on an even lattice.
Isometry eichler_transvection(const LatticePtr& lattice, const LatticeVector& e, const LatticeVector& w);

/// Product of word_length reflections drawn uniformly (std::mt19937_64,
/// index = draw mod |roots|) from `roots`.
Isometry random_isometry(const LatticePtr& lattice, const std::vector<LatticeVector>& roots, unsigned word_length,
                         std::uint64_t seed);

struct FixedIsotropicResult {
  bool fixed = false;
  std::optional<FactorReport> report;
};

/// Whether f(e) = e; if so classifies char_poly(f) and checks that every
/// factor is cyclotomic.
FixedIsotropicResult fixed_isotropic_check(const Isometry& f, const LatticeVector& e, const Rational& width,
                                           unsigned digits);

/// Warning text when a lattice declared supersingular over characteristic
/// `prime` with Artin invariant 1 does not have determinant -prime^2.
std::optional<std::string> supersingular_det_warning(const Lattice& lattice, unsigned long prime);

/// Gram matrices of standard lattices; E8 is negative definite in Bourbaki
/// node order.
IntMatrix gram_hyperbolic_plane();
IntMatrix gram_a1();
IntMatrix gram_e8();

}  // namespace salem
