#include "salem/latiso.hpp"

#include <random>
#include <utility>

#include "salem/error.hpp"
#include "salem/factorint.hpp"
#include "salem/realroots.hpp"

namespace salem {

namespace {

void require_length(const Lattice& lattice, const LatticeVector& v, const char* what) {
  if (v.size() != lattice.rank()) throw PreconditionError(std::string(what) + ": vector length differs from rank");
}

bool is_zero_vector(const LatticeVector& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

void check_cone_structure(const FactorReport& r) {
  if (r.salem_count > 1) throw InvariantViolation("cone-preserving isometry with more than one Salem factor");
  if (!r.all_cyclotomic_or_salem())
    throw InvariantViolation("cone-preserving isometry with a factor that is neither cyclotomic nor Salem");
}

}  // namespace

Signature signature(const IntMatrix& gram) {
  if (!is_symmetric(gram)) throw PreconditionError("signature: Gram matrix not symmetric");
  if (sgn(determinant(gram)) == 0) throw PreconditionError("signature: Gram matrix singular");
  const IntPoly cp = char_poly(gram);
  Signature sig;
  for (const auto& part : squarefree_decomposition(cp)) {
    const RatInterval positive_axis(Rational(0), cauchy_bound(part.factor));
    sig.positive += part.multiplicity * count_roots_in(sturm_chain(part.factor), positive_axis);
  }
  sig.negative = gram.rows() - sig.positive;
  return sig;
}

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw PreconditionError("Lattice: Gram matrix must be square");
  if (!is_symmetric(gram_)) throw PreconditionError("Lattice: Gram matrix not symmetric");
  det_ = salem::determinant(gram_);
  if (sgn(det_) == 0) throw PreconditionError("Lattice: Gram matrix singular");
  sig_ = salem::signature(gram_);
  even_ = true;
  for (std::size_t i = 0; i < rank(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) even_ = false;
}

Integer Lattice::pair(const LatticeVector& u, const LatticeVector& v) const {
  require_length(*this, u, "pair");
  require_length(*this, v, "pair");
  return dot(u, gram_ * v);
}

Isometry verify_isometry(LatticePtr lattice, IntMatrix m) {
  if (!lattice) throw PreconditionError("verify_isometry: null lattice");
  const std::size_t r = lattice->rank();
  if (m.rows() != r || m.cols() != r) throw NotAnIsometry("matrix size does not match lattice rank");
  if (transpose(m) * lattice->gram() * m != lattice->gram()) throw NotAnIsometry("M^T G M != G");
  const Integer d = determinant(m);
  if (d != 1 && d != -1) throw InvariantViolation("isometry with determinant other than +-1");
  return Isometry(std::move(lattice), std::move(m));
}

Isometry identity_isometry(const LatticePtr& lattice) { return verify_isometry(lattice, IntMatrix::identity(lattice->rank())); }

Isometry compose(const Isometry& f, const Isometry& g) {
  if (f.lattice() != g.lattice() && f.lattice()->gram() != g.lattice()->gram())
    throw PreconditionError("compose: isometries of different lattices");
  return verify_isometry(f.lattice(), f.matrix() * g.matrix());
}

Isometry power(const Isometry& f, unsigned long n) { return verify_isometry(f.lattice(), matrix_pow(f.matrix(), n)); }

IntPoly char_poly(const Isometry& f) { return char_poly(f.matrix()); }

bool preserves_positive_cone(const Isometry& f, const LatticeVector& witness) {
  const Lattice& l = *f.lattice();
  if (!l.is_hyperbolic()) throw PreconditionError("preserves_positive_cone: lattice is not hyperbolic");
  require_length(l, witness, "preserves_positive_cone");
  if (sgn(l.norm(witness)) <= 0) throw PreconditionError("preserves_positive_cone: witness norm must be positive");
  return sgn(l.pair(witness, f.apply(witness))) > 0;
}

std::optional<LatticeVector> find_positive_witness(const Lattice& lattice) {
  const std::size_t r = lattice.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (sgn(lattice.gram()(i, i)) > 0) {
      LatticeVector v(r);
      v[i] = 1;
      return v;
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (long a = 1; a <= 3; ++a)
        for (long c = -3; c <= 3; ++c) {
          if (c == 0) continue;
          LatticeVector v(r);
          v[i] = a;
          v[j] = c;
          if (sgn(lattice.norm(v)) > 0) return v;
        }
  return std::nullopt;
}

IsometryReport classify_isometry(const Isometry& f, const LatticeVector& witness, const Rational& width,
                                 unsigned digits) {
  IsometryReport out;
  out.preserves_cone = preserves_positive_cone(f, witness);
  out.report = classify_poly(char_poly(f), width, digits);
  if (out.preserves_cone) check_cone_structure(out.report);
  return out;
}

Isometry reflection_in_root(const LatticePtr& lattice, const LatticeVector& v) {
  require_length(*lattice, v, "reflection_in_root");
  const Integer n = lattice->norm(v);
  if (n != 2 && n != -2) throw PreconditionError("reflection_in_root: root norm must be +-2");
  // 2 / (v, v) = +-1.
  const int k = (n == 2) ? 1 : -1;
  const IntVector gv = lattice->gram() * v;
  const std::size_t r = lattice->rank();
  IntMatrix m = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) -= k * v[i] * gv[j];
  return verify_isometry(lattice, std::move(m));
}

Isometry eichler_transvection(const LatticePtr& lattice, const LatticeVector& e, const LatticeVector& w) {
  const Lattice& l = *lattice;
  require_length(l, e, "eichler_transvection");
  require_length(l, w, "eichler_transvection");
  if (!l.is_even()) throw PreconditionError("eichler_transvection: lattice must be even");
  if (is_zero_vector(e) || sgn(l.norm(e)) != 0) throw PreconditionError("eichler_transvection: e must be isotropic");
  if (sgn(l.pair(e, w)) != 0) throw PreconditionError("eichler_transvection: (e, w) must vanish");
  const IntVector ge = l.gram() * e;
  const IntVector gw = l.gram() * w;
  const Integer half = l.norm(w) / 2;
  const std::size_t r = l.rank();
  IntMatrix m = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) += w[i] * ge[j] - e[i] * gw[j] - half * e[i] * ge[j];
  return verify_isometry(lattice, std::move(m));
}

Isometry random_isometry(const LatticePtr& lattice, const std::vector<LatticeVector>& roots, unsigned word_length,
                         std::uint64_t seed) {
  if (roots.empty()) throw PreconditionError("random_isometry: empty root set");
  std::vector<IntMatrix> gens;
  gens.reserve(roots.size());
  for (const auto& v : roots) gens.push_back(reflection_in_root(lattice, v).matrix());
  std::mt19937_64 rng(seed);
  IntMatrix m = IntMatrix::identity(lattice->rank());
  for (unsigned i = 0; i < word_length; ++i) m = m * gens[rng() % gens.size()];
  return verify_isometry(lattice, std::move(m));
}

FixedIsotropicResult fixed_isotropic_check(const Isometry& f, const LatticeVector& e, const Rational& width,
                                           unsigned digits) {
  const Lattice& l = *f.lattice();
  require_length(l, e, "fixed_isotropic_check");
  if (is_zero_vector(e) || sgn(l.norm(e)) != 0) throw PreconditionError("fixed_isotropic_check: e must be isotropic");
  FixedIsotropicResult out;
  out.fixed = f.apply(e) == e;
  if (!out.fixed) return out;
  out.report = classify_poly(char_poly(f), width, digits);
  for (const auto& fac : out.report->factors)
    if (fac.cls.kind != PolyClass::Kind::kCyclotomic)
      throw InvariantViolation("isometry fixing an isotropic vector has a non-cyclotomic factor");
  return out;
}

std::optional<std::string> supersingular_det_warning(const Lattice& lattice, unsigned long prime) {
  const Integer expected = -Integer(prime) * Integer(prime);
  if (lattice.determinant() == expected) return std::nullopt;
  return "lattice tagged supersingular (Artin invariant 1, p = " + std::to_string(prime) + ") has determinant " +
         lattice.determinant().get_str() + ", expected " + expected.get_str();
}

IntMatrix gram_hyperbolic_plane() { return IntMatrix{{0, 1}, {1, 0}}; }

IntMatrix gram_a1() { return IntMatrix{{-2}}; }

IntMatrix gram_e8() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
  const std::size_t edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    g(e[0] - 1, e[1] - 1) = 1;
    g(e[1] - 1, e[0] - 1) = 1;
  }
  return g;
}

}  // namespace salem
