#pragma once

// Certified real-root counting, isolation and refinement with Sturm chains
// and exact rational arithmetic, plus enclosures of the largest root modulus.

#include <vector>

#include "salem/polyarith.hpp"

namespace salem {

/// Primitive parts of the signed remainder sequence of a squarefree polynomial.
struct SturmChain {
  std::vector<IntPoly> polys;

  /// Sign variations of the chain at v (zeros skipped).
  unsigned variations_at(const Rational& v) const;
  /// Sign variations at +infinity / -infinity.
  unsigned variations_at_pos_inf() const;
  unsigned variations_at_neg_inf() const;
};

/// Interval containing exactly `multiplicity` roots (counted with
/// multiplicity). Non-degenerate intervals have endpoints that are not roots.
struct RootEnclosure {
  RatInterval interval;
  unsigned multiplicity = 1;
};

/// Throws PreconditionError for non-squarefree or constant input.
SturmChain sturm_chain(const IntPoly& p);

/// Number of distinct real roots in the open interval (lo, hi). Throws
/// PreconditionError if an endpoint is a root.
unsigned count_roots_in(const SturmChain& chain, const RatInterval& iv);

/// Number of distinct real roots of p, over the whole line.
unsigned count_real_roots(const IntPoly& p);

/// 1 + max|c_i| / |lc|, a strict bound on the modulus of every root.
Rational cauchy_bound(const IntPoly& p);

/// Disjoint isolating enclosures of all distinct real roots in increasing
/// order. Exact rational roots hit during bisection become point intervals.
std::vector<RootEnclosure> isolate_real_roots(const IntPoly& p);

/// Bisects an isolating enclosure of a simple root down to the given width.
/// Throws PreconditionError if width <= 0 or the endpoint signs do not
/// certify a simple root.
RootEnclosure refine(const IntPoly& p, const RootEnclosure& e, const Rational& width);

/// Enclosure of max |z| over the complex roots z of p. Exact whenever all
/// roots are real or on the unit circle (or p is reciprocal with a
/// real-rooted trace polynomial). Otherwise Graeffe root-squaring bounds are
/// used and the result may be wider than requested; see graeffe_enclosure.
RatInterval max_abs_root_enclosure(const IntPoly& p, const Rational& width);

/// Enclosure of the largest root modulus from k rounds of Graeffe
/// root-squaring, k <= max_rounds, stopping as soon as the width target is met.
RatInterval graeffe_enclosure(const IntPoly& p, const Rational& width, unsigned max_rounds = 12);

}  // namespace salem
