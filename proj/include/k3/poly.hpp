#pragma once

#include <algorithm>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "k3/error.hpp"
#include "k3/rational.hpp"

namespace k3 {

template <class F>
concept FieldLike = std::regular<F> && requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<F>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

namespace detail {
// Coefficients that print as a sum or fraction are wrapped when multiplied.
inline bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-' || s[i] == '/' || s[i] == ' ') return true;
  }
  return false;
}
inline std::string join_var(const std::string& a, const std::string& b, bool a_const, bool b_const) {
  if (a == b || b.empty() || b_const) return a.empty() ? b : a;
  if (a.empty() || a_const) return b;
  fail(ErrorCode::kConfiguration, "polynomial variable mismatch: '" + a + "' vs '" + b + "'");
}
}  // namespace detail

// Dense univariate polynomial; c_[i] is the coefficient of var^i and the top
// coefficient is never zero. The zero polynomial has degree -1.
template <FieldLike F>
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::string var) : var_(std::move(var)) {}
  Poly(std::string var, std::vector<F> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c, std::string var = {}) { return Poly(std::move(var), {c}); }
  static Poly monomial(std::string var, const F& c, unsigned e) {
    std::vector<F> v(e + 1);
    v[e] = c;
    return Poly(std::move(var), std::move(v));
  }
  static Poly variable(std::string var) { return monomial(std::move(var), F(1), 1); }

  const std::string& var() const { return var_; }
  Poly with_var(std::string v) const { Poly p = *this; p.var_ = std::move(v); return p; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(); }
  const std::vector<F>& coeffs() const { return c_; }
  F leading() const { return c_.empty() ? F() : c_.back(); }
  F constant_term() const { return coeff(0); }

  Poly monic() const {
    if (is_zero()) return *this;
    F inv = leading().inverse();
    Poly r = *this;
    for (auto& c : r.c_) c = c * inv;
    return r;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return Poly(var_, std::move(d));
  }

  F operator()(const F& at) const {
    F acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  // p(inner(x)); the result carries inner's variable.
  Poly compose(const Poly& inner) const {
    Poly acc(inner.var_.empty() ? var_ : inner.var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it, acc.var_);
    return acc.with_var(inner.var_.empty() ? var_ : inner.var_);
  }

  // p(s * x)
  Poly scale_argument(const F& s) const {
    Poly r = *this;
    F pw(1);
    for (auto& c : r.c_) {
      c = c * pw;
      pw = pw * s;
    }
    r.trim();
    return r;
  }

  template <class Fn>
  auto map_coeffs(Fn fn) const -> Poly<std::decay_t<decltype(fn(std::declval<const F&>()))>> {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(fn(c));
    return Poly<G>(var_, std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    var_ = detail::join_var(var_, o.var_, is_constant(), o.is_constant());
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    var_ = detail::join_var(var_, o.var_, is_constant(), o.is_constant());
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    std::string v = detail::join_var(a.var_, b.var_, a.is_constant(), b.is_constant());
    if (a.is_zero() || b.is_zero()) return Poly(v);
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(v, std::move(r));
  }
  friend Poly operator*(const Poly& a, const F& s) {
    Poly r = a;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  friend Poly operator*(const F& s, const Poly& a) { return a * s; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_ != b.c_) return false;
    return a.is_constant() || a.var_ == b.var_;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    const std::string x = var_.empty() ? "x" : var_;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-' && !detail::needs_parens(cs);
      if (neg) cs = cs.substr(1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      std::string mono = i == 0 ? "" : (i == 1 ? x : x + "^" + std::to_string(i));
      if (i == 0) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else {
        out += (detail::needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::string var_;
  std::vector<F> c_;
};

template <class F>
Poly<F> pow(const Poly<F>& p, unsigned e) {
  Poly<F> r = Poly<F>::constant(F(1), p.var());
  Poly<F> b = p;
  while (e != 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
  std::string v = detail::join_var(a.var(), b.var(), a.is_constant(), b.is_constant());
  if (a.degree() < b.degree()) return {Poly<F>(v), a.with_var(v)};
  std::vector<F> rem = a.coeffs();
  std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  F inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    F c = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      rem[idx] = rem[idx] - c * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<F>(v, std::move(quo)), Poly<F>(v, std::move(rem))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

// Quotient a / b; fails if b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::kPrecondition, "inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return q;
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct ExtendedGcd {
  Poly<F> g;  // monic gcd
  Poly<F> s;  // s*a + t*b = g
  Poly<F> t;
};

template <class F>
ExtendedGcd<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
  const std::string v = detail::join_var(a.var(), b.var(), a.is_constant(), b.is_constant());
  Poly<F> r0 = a.with_var(v), r1 = b.with_var(v);
  Poly<F> s0 = Poly<F>::constant(F(1), v), s1(v);
  Poly<F> t0(v), t1 = Poly<F>::constant(F(1), v);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<F> s = s0 - q * s1;
    Poly<F> t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class F>
struct SquarefreeFactor {
  Poly<F> factor;  // monic, squarefree, nonconstant
  unsigned multiplicity = 0;
};

template <class F>
struct SquarefreeDecomposition {
  F constant;  // leading coefficient of the input
  std::vector<SquarefreeFactor<F>> factors;  // increasing multiplicity, pairwise coprime

  Poly<F> expand(const std::string& var) const {
    Poly<F> r = Poly<F>::constant(constant, var);
    for (const auto& f : factors) r = r * pow(f.factor, f.multiplicity);
    return r;
  }
};

// Yun's algorithm (characteristic zero).
template <class F>
SquarefreeDecomposition<F> squarefree_decompose(const Poly<F>& p) {
  if (p.is_zero()) fail(ErrorCode::kPrecondition, "squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition<F> out{p.leading(), {}};
  if (p.degree() == 0) return out;
  Poly<F> f = p.monic();
  Poly<F> fp = f.derivative();
  Poly<F> a = gcd(f, fp);
  Poly<F> b = exact_div(f, a);
  Poly<F> c = exact_div(fp, a);
  Poly<F> d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Poly<F> ai = gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
    if (ai.degree() > 0) out.factors.push_back({ai.monic(), i});
    ++i;
  }
  return out;
}

template <class F>
bool is_squarefree(const Poly<F>& p) {
  return gcd(p, p.derivative()).degree() <= 0;
}

}  // namespace k3
