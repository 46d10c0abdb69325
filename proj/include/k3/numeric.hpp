#pragma once

#include <mpfr.h>

#include <string>

#include "k3/rational.hpp"

namespace k3 {

// MPFR value owning its precision. Binary operations round to the larger
// operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128);
  Real(long v, mpfr_prec_t prec);
  Real(const Rational& q, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t prec);
  static Real two_pow(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // floor(log2 |x|); very negative for zero.
  long exponent2() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }

  friend Real sqrt(const Real& a);
  friend Real abs(const Real& a);
  friend Real atan2(const Real& y, const Real& x);
  friend Real exp(const Real& a);
  friend Real cos(const Real& a);
  friend Real sin(const Real& a);
  friend Real round(const Real& a);
  friend Real floor(const Real& a);
  friend Real hypot(const Real& a, const Real& b);

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }
  Complex conj() const { return {re, -im}; }
  std::string to_string(int digits = 20) const;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b);
};

Real abs(const Complex& z);
Complex sqrt(const Complex& z);  // principal branch
Complex exp(const Complex& z);

}  // namespace k3
