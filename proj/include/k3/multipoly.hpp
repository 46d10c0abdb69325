#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3/poly.hpp"

namespace k3 {

// Ordered variable list shared by every polynomial of one ring.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const { return vars_ ? vars_->size() : 0; }
  bool empty() const { return !vars_; }
  const std::vector<std::string>& vars() const;
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    if (a.vars_ == b.vars_) return true;
    if (!a.vars_ || !b.vars_) return false;
    return *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

using Exponents = std::vector<unsigned>;

// Sparse polynomial over F; monomials are ordered lexicographically by the
// ring's variable list (first variable most significant).
template <FieldLike F>
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, F>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const Ring& ring, const F& c) {
    MultiPoly p(ring);
    if (!c.is_zero()) p.terms_.emplace(Exponents(ring.size(), 0), c);
    return p;
  }
  static MultiPoly variable(const Ring& ring, std::string_view name) {
    Exponents e(ring.size(), 0);
    e[ring.index(name)] = 1;
    return monomial(ring, std::move(e), F(1));
  }
  static MultiPoly monomial(const Ring& ring, Exponents e, const F& c) {
    if (e.size() != ring.size()) fail(ErrorCode::kConfiguration, "exponent vector size does not match ring");
    MultiPoly p(ring);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned e : terms_.begin()->first) if (e != 0) return false;
    return true;
  }
  F constant_value() const {
    if (!is_constant()) fail(ErrorCode::kPrecondition, "polynomial is not constant: " + to_string());
    return terms_.empty() ? F() : terms_.begin()->second;
  }
  std::size_t size() const { return terms_.size(); }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  unsigned degree_in(std::string_view name) const { return degree_in(ring_.index(name)); }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  bool is_homogeneous() const {
    std::optional<unsigned> deg;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      if (deg && *deg != s) return false;
      deg = s;
    }
    return true;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents f = e;
      --f[var];
      r.add_term(f, c * F(static_cast<long>(e[var])));
    }
    return r;
  }

  // Coefficient of var^k, as a polynomial in the same ring.
  MultiPoly coeff_in(std::size_t var, unsigned k) const {
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_) {
      if (e[var] != k) continue;
      Exponents f = e;
      f[var] = 0;
      r.add_term(f, c);
    }
    return r;
  }

  MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
    MultiPoly r(ring_);
    std::vector<MultiPoly> powers{constant(ring_, F(1))};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
      Exponents f = e;
      f[var] = 0;
      r += monomial(ring_, f, c) * powers[e[var]];
    }
    return r;
  }
  MultiPoly specialize(std::size_t var, const F& value) const { return substitute(var, constant(ring_, value)); }

  // Collapse to a univariate polynomial; fails if another variable occurs.
  Poly<F> to_univariate(std::size_t var) const {
    std::vector<F> c(degree_in(var) + 1);
    for (const auto& [e, coef] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i != var && e[i] != 0) fail(ErrorCode::kPrecondition, "polynomial is not univariate in " + ring_.vars()[var]);
      }
      c[e[var]] = coef;
    }
    return Poly<F>(ring_.vars()[var], std::move(c));
  }
  static MultiPoly from_univariate(const Ring& ring, std::size_t var, const Poly<F>& p) {
    MultiPoly r(ring);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      Exponents e(ring.size(), 0);
      e[var] = static_cast<unsigned>(i);
      r.add_term(e, p.coeffs()[i]);
    }
    return r;
  }

  template <class Fn>
  auto map_coeffs(Fn fn) const -> MultiPoly<std::decay_t<decltype(fn(std::declval<const F&>()))>> {
    MultiPoly<std::decay_t<decltype(fn(std::declval<const F&>()))>> r(ring_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  void add_term(const Exponents& e, const F& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.ring_.empty() ? b.ring_ : a.ring_);
    if (!a.ring_.empty() && !b.ring_.empty() && !(a.ring_ == b.ring_)) {
      fail(ErrorCode::kConfiguration, "multiplying polynomials from different rings");
    }
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const F& s) {
    MultiPoly r(a.ring_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
    return r;
  }
  friend MultiPoly operator*(const F& s, const MultiPoly& a) { return a * s; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_.vars()[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-' && !detail::needs_parens(cs);
      if (neg) cs = cs.substr(1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (mono.empty()) out += cs;
      else if (cs == "1") out += mono;
      else out += (detail::needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
    }
    return out;
  }

 private:
  void adopt(const MultiPoly& o) {
    if (ring_.empty()) {
      ring_ = o.ring_;
    } else if (!o.ring_.empty() && !(ring_ == o.ring_)) {
      fail(ErrorCode::kConfiguration, "adding polynomials from different rings");
    }
  }

  Ring ring_;
  TermMap terms_;
};

template <class F>
MultiPoly<F> pow(const MultiPoly<F>& p, unsigned e) {
  MultiPoly<F> r = MultiPoly<F>::constant(p.ring(), F(1));
  MultiPoly<F> b = p;
  while (e != 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return r;
}

// num/den with no cancellation beyond folding constant denominators. Zero
// tests go through a QuotientContext (or plain expansion for free rings).
template <FieldLike F>
struct MultiFrac {
  MultiPoly<F> num;
  MultiPoly<F> den;

  MultiFrac() = default;
  MultiFrac(MultiPoly<F> n) : num(std::move(n)), den(MultiPoly<F>::constant(num.ring(), F(1))) {}  // NOLINT
  MultiFrac(MultiPoly<F> n, MultiPoly<F> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  const Ring& ring() const { return num.ring().empty() ? den.ring() : num.ring(); }

  void normalize() {
    if (den.is_zero()) fail(ErrorCode::kDivisionByZero, "fraction with zero denominator");
    if (num.is_zero()) {
      den = MultiPoly<F>::constant(den.ring(), F(1));
      return;
    }
    if (den.is_constant()) {
      F c = den.constant_value();
      if (!(c == F(1))) {
        num = num * c.inverse();
        den = MultiPoly<F>::constant(den.ring(), F(1));
      }
    }
  }

  friend MultiFrac operator+(const MultiFrac& a, const MultiFrac& b) {
    if (a.den == b.den) return MultiFrac(a.num + b.num, a.den);
    return MultiFrac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend MultiFrac operator-(const MultiFrac& a, const MultiFrac& b) {
    if (a.den == b.den) return MultiFrac(a.num - b.num, a.den);
    return MultiFrac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend MultiFrac operator-(const MultiFrac& a) { return MultiFrac(-a.num, a.den); }
  friend MultiFrac operator*(const MultiFrac& a, const MultiFrac& b) {
    return MultiFrac(a.num * b.num, a.den * b.den);
  }
  friend MultiFrac operator/(const MultiFrac& a, const MultiFrac& b) {
    if (b.num.is_zero()) fail(ErrorCode::kDivisionByZero, "fraction division by zero");
    return MultiFrac(a.num * b.den, a.den * b.num);
  }
  friend MultiFrac operator*(const MultiFrac& a, const F& s) { return MultiFrac(a.num * s, a.den); }

  std::string to_string() const {
    if (den.is_constant()) return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
  }
};

template <class F>
MultiFrac<F> pow(const MultiFrac<F>& p, int e) {
  if (e < 0) return pow(MultiFrac<F>(p.den, p.num), -e);
  return MultiFrac<F>(pow(p.num, static_cast<unsigned>(e)), pow(p.den, static_cast<unsigned>(e)));
}

// Substitutes images[i] for variable i of p's ring. All images must live in
// one target ring. Uses one common denominator prod_i den_i^{max deg_i}.
template <class F>
MultiFrac<F> substitute(const MultiPoly<F>& p, const std::vector<MultiFrac<F>>& images) {
  const std::size_t n = p.ring().size();
  if (images.size() != n) fail(ErrorCode::kConfiguration, "substitution needs one image per variable");
  Ring target;
  for (const auto& im : images) {
    if (!im.ring().empty()) {
      target = im.ring();
      break;
    }
  }
  std::vector<unsigned> maxdeg(n, 0);
  for (std::size_t i = 0; i < n; ++i) maxdeg[i] = p.degree_in(i);
  std::vector<std::vector<MultiPoly<F>>> npow(n), dpow(n);
  for (std::size_t i = 0; i < n; ++i) {
    npow[i].push_back(MultiPoly<F>::constant(target, F(1)));
    dpow[i].push_back(MultiPoly<F>::constant(target, F(1)));
    for (unsigned k = 1; k <= maxdeg[i]; ++k) {
      npow[i].push_back(npow[i].back() * images[i].num);
      dpow[i].push_back(dpow[i].back() * images[i].den);
    }
  }
  MultiPoly<F> num(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<F> t = MultiPoly<F>::constant(target, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (maxdeg[i] == 0) continue;
      t = t * npow[i][e[i]];
      if (e[i] != maxdeg[i]) t = t * dpow[i][maxdeg[i] - e[i]];
    }
    num += t;
  }
  MultiPoly<F> den = MultiPoly<F>::constant(target, F(1));
  for (std::size_t i = 0; i < n; ++i) {
    if (maxdeg[i] != 0) den = den * dpow[i][maxdeg[i]];
  }
  return MultiFrac<F>(num, den);
}

template <class F>
MultiFrac<F> substitute(const MultiFrac<F>& f, const std::vector<MultiFrac<F>>& images) {
  auto n = substitute(f.num, images);
  auto d = substitute(f.den, images);
  return n / d;
}

// One rewrite rule head^exponent -> replacement.
template <FieldLike F>
struct Relation {
  std::size_t head = 0;
  unsigned exponent = 0;
  MultiPoly<F> replacement;
};

// Multivariate ring modulo a triangular system of monic rewrite rules. Normal
// forms have head-variable degree below the head exponent and are unique.
template <FieldLike F>
class QuotientContext {
 public:
  QuotientContext() = default;
  explicit QuotientContext(Ring ring) : ring_(std::move(ring)) {}

  QuotientContext& add_relation(std::string_view head, unsigned exponent, MultiPoly<F> replacement) {
    Relation<F> rel{ring_.index(head), exponent, std::move(replacement)};
    if (rel.exponent == 0) fail(ErrorCode::kConfiguration, "relation exponent must be positive");
    if (!rel.replacement.ring().empty() && !(rel.replacement.ring() == ring_)) {
      fail(ErrorCode::kConfiguration, "relation replacement is not in the context ring");
    }
    for (const auto& r : rels_) {
      if (r.head == rel.head) fail(ErrorCode::kConfiguration, "duplicate head variable " + std::string(head));
    }
    if (rel.replacement.depends_on(rel.head)) {
      fail(ErrorCode::kConfiguration, "replacement for " + std::string(head) + " contains its own head variable");
    }
    rels_.push_back(std::move(rel));
    check_acyclic();
    return *this;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Relation<F>>& relations() const { return rels_; }

  MultiPoly<F> reduce(const MultiPoly<F>& p) const {
    MultiPoly<F> cur = p;
    std::map<std::pair<std::size_t, unsigned>, MultiPoly<F>> cache;
    for (;;) {
      bool changed = false;
      MultiPoly<F> next(ring_);
      for (const auto& [e, c] : cur.terms()) {
        const Relation<F>* hit = nullptr;
        for (const auto& r : rels_) {
          if (e[r.head] >= r.exponent) {
            hit = &r;
            break;
          }
        }
        if (hit == nullptr) {
          next.add_term(e, c);
          continue;
        }
        changed = true;
        unsigned q = e[hit->head] / hit->exponent;
        Exponents f = e;
        f[hit->head] = e[hit->head] % hit->exponent;
        auto key = std::make_pair(hit->head, q);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, pow(hit->replacement, q)).first;
        next += MultiPoly<F>::monomial(ring_, f, c) * it->second;
      }
      cur = std::move(next);
      if (!changed) return cur;
    }
  }

  MultiPoly<F> residual(const MultiFrac<F>& a, const MultiFrac<F>& b) const {
    return reduce(a.num * b.den - b.num * a.den);
  }
  bool is_zero(const MultiFrac<F>& f) const {
    if (reduce(f.den).is_zero()) fail(ErrorCode::kDivisionByZero, "denominator vanishes in the quotient ring: " + f.den.to_string());
    return reduce(f.num).is_zero();
  }
  bool equal(const MultiFrac<F>& a, const MultiFrac<F>& b) const { return residual(a, b).is_zero(); }

 private:
  void check_acyclic() const {
    // edge i -> j when relation i's replacement mentions head j
    const std::size_t n = rels_.size();
    std::vector<int> state(n, 0);
    auto visit = [&](auto&& self, std::size_t i) -> void {
      if (state[i] == 1) fail(ErrorCode::kConfiguration, "relation system is not triangular (cyclic head dependency)");
      if (state[i] == 2) return;
      state[i] = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (rels_[i].replacement.depends_on(rels_[j].head)) self(self, j);
      }
      state[i] = 2;
    };
    for (std::size_t i = 0; i < n; ++i) visit(visit, i);
  }

  Ring ring_;
  std::vector<Relation<F>> rels_;
};

}  // namespace k3
