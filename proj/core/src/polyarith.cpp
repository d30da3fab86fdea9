#include "salem/polyarith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "number_theory.hpp"
#include "salem/error.hpp"

namespace salem {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& r) { return IntPoly(std::vector<Integer>{-r, 1}); }

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPoly::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    int c = cmp(ca[i], cb[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

IntPoly poly_add(const IntPoly& p, const IntPoly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Integer> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return IntPoly(std::move(r));
}

IntPoly poly_neg(const IntPoly& p) {
  std::vector<Integer> r = p.coeffs();
  for (auto& c : r) c = -c;
  return IntPoly(std::move(r));
}

IntPoly poly_sub(const IntPoly& p, const IntPoly& q) { return poly_add(p, poly_neg(q)); }

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return IntPoly(std::move(r));
}

IntPoly poly_scale(const IntPoly& p, const Integer& c) {
  std::vector<Integer> r = p.coeffs();
  for (auto& x : r) x *= c;
  return IntPoly(std::move(r));
}

IntPoly poly_pow(const IntPoly& p, unsigned n) {
  IntPoly result{1};
  IntPoly base = p;
  while (n > 0) {
    if (n & 1u) result = poly_mul(result, base);
    n >>= 1;
    if (n > 0) base = poly_mul(base, base);
  }
  return result;
}

Rational poly_eval(const IntPoly& p, const Rational& v) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  return acc;
}

Integer poly_eval(const IntPoly& p, const Integer& v) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
  return acc;
}

int poly_sign_at(const IntPoly& p, const Rational& v) {
  if (p.is_zero()) return 0;
  // b^n p(a/b) = sum c_i a^i b^(n-i); b > 0 so the sign is unchanged.
  const Integer& a = v.get_num();
  const Integer& b = v.get_den();
  const auto& c = p.coeffs();
  Integer acc = c.back();
  Integer bpow = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    bpow *= b;
    acc = acc * a + c[k] * bpow;
  }
  return sgn(acc);
}

IntPoly poly_derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  const auto& c = p.coeffs();
  std::vector<Integer> r(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

Integer content(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("content: zero polynomial");
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

std::pair<Integer, IntPoly> content_primitive(const IntPoly& p) {
  Integer c = content(p);
  if (c == 1) return {c, p};
  std::vector<Integer> q = p.coeffs();
  for (auto& x : q) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return {c, IntPoly(std::move(q))};
}

IntPoly primitive_normalized(const IntPoly& p) {
  IntPoly q = content_primitive(p).second;
  return sgn(q.leading()) < 0 ? poly_neg(q) : q;
}

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo_divide: division by zero polynomial");
  if (a.degree() < b.degree()) return {{}, a};
  const long db = b.degree();
  const Integer lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  long e = a.degree() - db + 1;
  const auto& bc = b.coeffs();
  for (long k = a.degree(); k >= db; --k) {
    const Integer t = r[static_cast<std::size_t>(k)];
    // q = lb*q + t*x^(k-db);  r = lb*r - t*x^(k-db)*b
    for (auto& x : q) x *= lb;
    q[static_cast<std::size_t>(k - db)] += t;
    for (auto& x : r) x *= lb;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= t * bc[static_cast<std::size_t>(i)];
    r.pop_back();
    --e;
  }
  // Scale to exactly lb^(deg a - deg b + 1).
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : q) x *= f;
    for (auto& x : r) x *= f;
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) { return pseudo_divide(a, b).rem; }

namespace {

// Long division over Z; returns false as soon as a leading term is not divisible.
bool try_exact_divide(const IntPoly& a, const IntPoly& b, IntPoly* out) {
  if (b.is_zero()) throw PreconditionError("exact_quotient: division by zero polynomial");
  if (a.is_zero()) {
    *out = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  const long db = b.degree();
  const Integer& lb = b.coeffs().back();
  const auto& bc = b.coeffs();
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  Integer t;
  for (long k = a.degree(); k >= db; --k) {
    const Integer& top = r[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(k - db)] = t;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= t * bc[static_cast<std::size_t>(i)];
  }
  for (long i = 0; i < db; ++i)
    if (sgn(r[static_cast<std::size_t>(i)]) != 0) return false;
  *out = IntPoly(std::move(q));
  return true;
}

}  // namespace

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_exact_divide(a, b, &q)) throw PreconditionError("exact_quotient: divisor does not divide dividend in Z[x]");
  return q;
}

bool divides(const IntPoly& b, const IntPoly& a) {
  IntPoly q;
  return try_exact_divide(a, b, &q);
}

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

IntPoly divexact_scalar(const IntPoly& p, const Integer& d) {
  std::vector<Integer> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly subresultant_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("subresultant_gcd: both inputs are zero");
  if (p.is_zero()) return primitive_normalized(q);
  if (q.is_zero()) return primitive_normalized(p);
  IntPoly a = content_primitive(p).second;
  IntPoly b = content_primitive(q).second;
  if (a.degree() < b.degree()) std::swap(a, b);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly{1};
    a = b;
    b = divexact_scalar(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return primitive_normalized(b);
}

Integer resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant: zero polynomial");
  auto [ca, a] = content_primitive(p);
  auto [cb, b] = content_primitive(q);
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
    std::swap(ca, cb);
  }
  // Res(ca*a, cb*b) = ca^deg b * cb^deg a * Res(a, b)
  const Integer t =
      ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  if (b.degree() == 0) return s * t * ipow(b.leading(), static_cast<unsigned long>(a.degree()));

  Integer g = 1;
  Integer h = 1;
  while (b.degree() > 0) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = b;
    b = divexact_scalar(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  // deg b == 0 here: h <- h^(1 - deg a) * lc(b)^(deg a)
  const unsigned long da = static_cast<unsigned long>(a.degree());
  Integer num = ipow(b.leading(), da);
  Integer res;
  if (da == 0) {
    res = h;
  } else {
    Integer den = ipow(h, da - 1);
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * res;
}

bool is_reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("is_reciprocal: zero polynomial");
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

IntPoly trace_transform(const IntPoly& p) {
  if (!is_reciprocal(p)) throw PreconditionError("trace_transform: polynomial is not reciprocal");
  if (p.degree() % 2 != 0) throw PreconditionError("trace_transform: odd degree");
  const std::size_t d = static_cast<std::size_t>(p.degree() / 2);
  const auto& c = p.coeffs();
  // x^-d p(x) = c_d + sum_k c_{d+k} (x^k + x^-k), and x^k + x^-k = D_k(y)
  // with D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2}.
  IntPoly y = IntPoly{0, 1};
  IntPoly prev{2};
  IntPoly cur = y;
  IntPoly q = IntPoly::constant(c[d]);
  for (std::size_t k = 1; k <= d; ++k) {
    q = q + poly_scale(cur, c[d + k]);
    IntPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

IntPoly cyclotomic_poly(unsigned long n) {
  if (n == 0) throw PreconditionError("cyclotomic_poly: n must be positive");
  std::map<unsigned long, IntPoly> cache;
  for (unsigned long d : detail::divisors(n)) {
    IntPoly f = IntPoly::monomial(1, d) - IntPoly{1};
    for (const auto& [e, phi_e] : cache)
      if (d % e == 0) f = exact_quotient(f, phi_e);
    cache.emplace(d, std::move(f));
  }
  return cache.at(n);
}

std::vector<Rational> interpolate_naturals(const std::vector<Rational>& values) {
  const std::size_t m = values.size();
  std::vector<Rational> diff = values;
  std::vector<Rational> leading(m);
  for (std::size_t j = 0; j < m; ++j) {
    leading[j] = diff[0];
    for (std::size_t i = 0; i + 1 < m - j; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // sum_j leading[j] * C(N, j), expanding the falling factorials as we go.
  std::vector<Rational> coeffs(m);
  std::vector<Rational> falling{Rational(1)};  // N(N-1)...(N-j+1) / j!
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += leading[j] * falling[i];
    std::vector<Rational> next(falling.size() + 1);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * static_cast<unsigned long>(j);
    }
    for (auto& c : next) c /= static_cast<unsigned long>(j + 1);
    falling = std::move(next);
  }
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
  return coeffs;
}

RatInterval::RatInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw PreconditionError("RatInterval: lo > hi");
}

std::string to_decimal_floor(const Rational& v, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rational scaled = v * scale;
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool negative = sgn(n) < 0;
  std::string s = Integer(abs(n)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw PreconditionError("parse_rational: empty string");
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(t.substr(0, slash), 10) != 0 || den.set_str(t.substr(slash + 1), 10) != 0 || sgn(den) == 0)
      throw PreconditionError("parse_rational: malformed fraction '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  long exponent = 0;
  auto epos = t.find_first_of("eE");
  std::string mantissa = t;
  if (epos != std::string::npos) {
    mantissa = t.substr(0, epos);
    try {
      std::size_t used = 0;
      exponent = std::stol(t.substr(epos + 1), &used);
      if (used != t.size() - epos - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw PreconditionError("parse_rational: malformed exponent in '" + text + "'");
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  } else {
    digits = mantissa;
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw PreconditionError("parse_rational: malformed number '" + text + "'");
  Rational r{Integer(digits, 10)};
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) r /= p10; else r *= p10;
  return negative ? Rational(-r) : r;
}

}  // namespace salem
