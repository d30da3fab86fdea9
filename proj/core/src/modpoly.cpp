#include "modpoly.hpp"

#include <algorithm>

#include "salem/error.hpp"

namespace salem::detail {

std::uint64_t ModField::inv(std::uint64_t a) const {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a % p_);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw PreconditionError("ModField::inv: element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t ModField::reduce(const Integer& c) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p_);
  return r.get_ui();
}

void ModField::trim(ModPoly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly ModField::from(const IntPoly& f) const {
  ModPoly a;
  a.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) a.push_back(reduce(c));
  trim(a);
  return a;
}

ModPoly ModField::add(const ModPoly& a, const ModPoly& b) const {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  trim(r);
  return r;
}

ModPoly ModField::sub(const ModPoly& a, const ModPoly& b) const {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim(r);
  return r;
}

ModPoly ModField::mul(const ModPoly& a, const ModPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void ModField::divmod(const ModPoly& a, const ModPoly& b, ModPoly* q, ModPoly* r) const {
  if (b.empty()) throw PreconditionError("ModField::divmod: division by zero");
  ModPoly rem = a;
  ModPoly quo;
  if (rem.size() >= b.size()) {
    quo.assign(rem.size() - b.size() + 1, 0);
    const std::uint64_t lead_inv = inv(b.back());
    for (std::size_t k = rem.size(); k-- >= b.size();) {
      const std::uint64_t t = mul(rem[k], lead_inv);
      if (t != 0) {
        const std::size_t shift = k - (b.size() - 1);
        quo[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = sub(rem[shift + i], mul(t, b[i]));
      }
      if (k == 0) break;
    }
    rem.resize(b.size() - 1);
  }
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

ModPoly ModField::rem(const ModPoly& a, const ModPoly& b) const {
  ModPoly r;
  divmod(a, b, nullptr, &r);
  return r;
}

ModPoly ModField::quot(const ModPoly& a, const ModPoly& b) const {
  ModPoly q;
  divmod(a, b, &q, nullptr);
  return q;
}

ModPoly ModField::monic(const ModPoly& a) const {
  if (a.empty()) return a;
  const std::uint64_t li = inv(a.back());
  ModPoly r = a;
  for (auto& c : r) c = mul(c, li);
  return r;
}

ModPoly ModField::gcd(ModPoly a, ModPoly b) const {
  while (!b.empty()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

void ModField::xgcd(const ModPoly& a, const ModPoly& b, ModPoly* g, ModPoly* s, ModPoly* t) const {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{};
  ModPoly t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, &q, &r);
    ModPoly s2 = sub(s0, mul(q, s1));
    ModPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) throw PreconditionError("ModField::xgcd: both inputs zero");
  const std::uint64_t li = inv(r0.back());
  for (auto* v : {&r0, &s0, &t0})
    for (auto& c : *v) c = mul(c, li);
  *g = std::move(r0);
  *s = std::move(s0);
  *t = std::move(t0);
}

ModPoly ModField::derivative(const ModPoly& a) const {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
  trim(r);
  return r;
}

ModPoly ModField::powmod(const ModPoly& base, const Integer& e, const ModPoly& m) const {
  ModPoly result{1};
  result = rem(result, m);
  ModPoly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

std::vector<ModPoly> ModField::factor_squarefree(const ModPoly& f_in, std::mt19937_64& rng) const {
  std::vector<ModPoly> out;
  ModPoly f = monic(f_in);
  if (f.size() <= 1) return out;
  const ModPoly x{0, 1};
  ModPoly h = rem(x, f);
  const Integer p(static_cast<unsigned long>(p_));
  // Distinct-degree stage.
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, p, f);
    ModPoly g = gcd(sub(h, x), f);
    if (g.size() > 1) {
      auto parts = split_equal_degree(g, d, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      f = quot(f, g);
      h = rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::size_t ModField::count_irreducible_factors(const ModPoly& f_in) const {
  ModPoly f = monic(f_in);
  if (f.size() <= 1) return 0;
  const ModPoly x{0, 1};
  ModPoly h = rem(x, f);
  const Integer p(static_cast<unsigned long>(p_));
  std::size_t count = 0;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, p, f);
    ModPoly g = gcd(sub(h, x), f);
    if (g.size() > 1) {
      count += (g.size() - 1) / d;
      f = quot(f, g);
      h = rem(h, f);
    }
  }
  if (f.size() > 1) ++count;
  return count;
}

std::vector<ModPoly> ModField::split_equal_degree(const ModPoly& f, std::size_t d, std::mt19937_64& rng) const {
  const std::size_t n = f.size() - 1;
  if (n == d) return {f};
  // Cantor-Zassenhaus: a^((p^d - 1)/2) - 1 for odd p, the trace map for p = 2.
  Integer exponent;
  if (p_ != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p_, d);
    exponent = (exponent - 1) / 2;
  }
  while (true) {
    ModPoly a(n);
    for (auto& c : a) c = rng() % p_;
    trim(a);
    if (a.size() <= 1) continue;
    ModPoly b;
    if (p_ == 2) {
      ModPoly acc = rem(a, f);
      ModPoly term = acc;
      for (std::size_t i = 1; i < d; ++i) {
        term = rem(mul(term, term), f);
        acc = add(acc, term);
      }
      b = acc;
    } else {
      b = sub(powmod(a, exponent, f), ModPoly{1});
    }
    ModPoly g = gcd(b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      auto left = split_equal_degree(g, d, rng);
      auto right = split_equal_degree(quot(f, g), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

}  // namespace salem::detail
