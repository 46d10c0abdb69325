#pragma once

#include <string>

#include "k3/poly.hpp"

namespace k3 {

// Element of F(x): num/den with gcd 1 and monic denominator. Used both for
// coordinate functions on curves and for the free-parameter fields Q(alpha),
// Q(beta).
template <FieldLike F>
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly<F>::constant(F(1))) {}
  template <class T>
    requires std::constructible_from<F, const T&> && (!std::same_as<T, Poly<F>>) && (!std::same_as<T, RatFunc>)
  RatFunc(const T& c) : RatFunc(Poly<F>::constant(F(c))) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::constant(F(1), num_.var())) {}  // NOLINT
  RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc variable(const std::string& var) { return RatFunc(Poly<F>::variable(var)); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  std::string var() const { return num_.var().empty() ? den_.var() : num_.var(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Value when constant; fails otherwise.
  F constant_value() const {
    if (!is_constant()) fail(ErrorCode::kPrecondition, "rational function is not constant: " + to_string());
    return num_.coeff(0) / den_.coeff(0);
  }

  RatFunc inverse() const {
    if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  F operator()(const F& at) const {
    F d = den_(at);
    if (d.is_zero()) fail(ErrorCode::kDivisionByZero, "rational function evaluated at a pole");
    return num_(at) / d;
  }

  // Substitute a rational function for the variable.
  RatFunc compose(const RatFunc& inner) const {
    RatFunc n, d;
    RatFunc pw(F(1));
    for (std::size_t i = 0; i < std::max(num_.coeffs().size(), den_.coeffs().size()); ++i) {
      n = n + RatFunc(num_.coeff(i)) * pw;
      d = d + RatFunc(den_.coeff(i)) * pw;
      pw = pw * inner;
    }
    return n / d;
  }

  RatFunc with_var(const std::string& v) const { return RatFunc(num_.with_var(v), den_.with_var(v)); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel first to keep degrees small.
    Poly<F> g1 = gcd(a.num_, b.den_);
    Poly<F> g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    r.normalize_leading();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string(), d = den_.to_string();
    if (detail::needs_parens(n)) n = "(" + n + ")";
    if (detail::needs_parens(d) || d.find('*') != std::string::npos || d.find('^') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void normalize() {
    if (den_.is_zero()) fail(ErrorCode::kDivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>::constant(F(1), den_.var());
      return;
    }
    Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    normalize_leading();
  }
  void normalize_leading() {
    F lc = den_.leading();
    if (!(lc == F(1))) {
      F inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
    std::string v = detail::join_var(num_.var(), den_.var(), num_.is_constant(), den_.is_constant());
    num_ = num_.with_var(v);
    den_ = den_.with_var(v);
  }

  Poly<F> num_;
  Poly<F> den_;
};

using QFunc = RatFunc<Rational>;

}  // namespace k3
