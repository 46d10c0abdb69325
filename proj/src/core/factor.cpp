#include "k3/factor.hpp"

#include <algorithm>
#include <map>

namespace k3 {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr std::size_t kCandidateLimit = 400000;

// Prime factorization by trial division; `complete` is cleared when a
// composite cofactor above the trial limit remains.
std::map<BigInt, unsigned> factor_integer(BigInt n, bool& complete) {
  std::map<BigInt, unsigned> out;
  if (n < 0) n = -n;
  for (unsigned long p = 2; p <= kTrialLimit && BigInt(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[BigInt(p)];
      n /= p;
    }
  }
  if (n > 1) {
    if (n > BigInt(kTrialLimit) * kTrialLimit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) complete = false;
    ++out[n];
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt& n, bool& complete) {
  std::vector<BigInt> ds{1};
  for (const auto& [p, e] : factor_integer(n, complete)) {
    std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// Integer polynomial proportional to p with content 1.
std::vector<BigInt> primitive_integer(const Poly<Rational>& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) {
    BigInt d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.numerator() * (l / c.denominator());
    g = gcd(g, v);
    out.push_back(v);
  }
  if (g != 0) {
    for (auto& v : out) v /= g;
  }
  return out;
}

std::vector<Rational> rational_roots_impl(const Poly<Rational>& p, bool& complete) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  auto a = primitive_integer(p);
  std::size_t lo = 0;
  while (lo < a.size() && a[lo] == 0) ++lo;
  if (lo > 0) roots.emplace_back(0);
  if (a.size() - lo < 2) return roots;
  auto num = divisors(a[lo], complete);
  auto den = divisors(a.back(), complete);
  if (num.size() * den.size() > kCandidateLimit) {
    complete = false;
    return roots;
  }
  for (const auto& q : den) {
    for (const auto& n : num) {
      if (gcd(n, q) != 1) continue;
      for (int s : {1, -1}) {
        Rational r(BigInt(n * s), q);
        if (p(r).is_zero()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly<Rational>& p) {
  if (p.is_zero()) fail(ErrorCode::kPrecondition, "rational roots of the zero polynomial");
  bool complete = true;
  auto sq = squarefree_decompose(p);
  std::vector<Rational> out;
  for (const auto& f : sq.factors) {
    auto r = rational_roots_impl(f.factor, complete);
    out.insert(out.end(), r.begin(), r.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization<Rational> factor_over_q(const Poly<Rational>& p) {
  if (p.is_zero()) fail(ErrorCode::kPrecondition, "factorization of the zero polynomial");
  auto sq = squarefree_decompose(p);
  Factorization<Rational> out{sq.constant, {}};
  for (const auto& sf : sq.factors) {
    bool complete = true;
    Poly<Rational> rest = sf.factor;
    for (const auto& r : rational_roots_impl(sf.factor, complete)) {
      Poly<Rational> lin(p.var(), {-r, Rational(1)});
      rest = exact_div(rest, lin);
      out.factors.push_back({lin, sf.multiplicity, true});
    }
    if (rest.degree() < 1) continue;
    bool certified = false;
    if (rest.degree() == 2) {
      Rational disc = rest.coeff(1) * rest.coeff(1) - Rational(4) * rest.coeff(0);
      certified = !rational_sqrt(disc).has_value();
    } else if (rest.degree() == 3) {
      certified = complete;
    }
    out.factors.push_back({rest.monic(), sf.multiplicity, certified});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    return x.factor.to_string() < y.factor.to_string();
  });
  return out;
}

Factorization<QFunc> factor_over_qfunc(const Poly<QFunc>& p) {
  if (p.is_zero()) fail(ErrorCode::kPrecondition, "factorization of the zero polynomial");
  auto sq = squarefree_decompose(p);
  Factorization<QFunc> out{sq.constant, {}};
  for (const auto& sf : sq.factors) {
    const auto& g = sf.factor;
    if (g.degree() == 1) {
      out.factors.push_back({g, sf.multiplicity, true});
      continue;
    }
    if (g.degree() == 2) {
      QFunc b = g.coeff(1), c = g.coeff(0);
      QFunc disc = b * b - QFunc(4) * c;
      auto s = exact_sqrt(disc);
      if (!s) {
        out.factors.push_back({g, sf.multiplicity, true});
        continue;
      }
      QFunc half(Rational(1, 2));
      for (QFunc root : {(-b + *s) * half, (-b - *s) * half}) {
        out.factors.push_back({Poly<QFunc>(g.var(), {-root, QFunc(1)}), sf.multiplicity, true});
      }
      continue;
    }
    out.factors.push_back({g, sf.multiplicity, false});
  }
  return out;
}

}  // namespace k3
