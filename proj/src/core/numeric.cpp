#include "k3/numeric.hpp"

#include <algorithm>
#include <memory>

namespace k3 {

namespace {

mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.value().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::two_pow(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::unique_ptr<char, void (*)(char*)> guard(buf, [](char* p) { mpfr_free_str(p); });
  return std::string(buf);
}

long Real::exponent2() const {
  if (is_zero()) return -(1L << 40);
  return mpfr_get_exp(v_) - 1;
}

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}
Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}
Real atan2(const Real& y, const Real& x) {
  Real r(join(y, x));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}
Real exp(const Real& a) {
  Real r(a.precision());
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}
Real cos(const Real& a) {
  Real r(a.precision());
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}
Real sin(const Real& a) {
  Real r(a.precision());
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}
Real round(const Real& a) {
  Real r(a.precision());
  mpfr_round(r.v_, a.v_);
  return r;
}
Real floor(const Real& a) {
  Real r(a.precision());
  mpfr_floor(r.v_, a.v_);
  return r;
}
Real hypot(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

std::string Complex::to_string(int digits) const {
  std::string s = re.to_string(digits);
  if (im.sign() < 0) return s + " - " + (-im).to_string(digits) + "i";
  return s + " + " + im.to_string(digits) + "i";
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex sqrt(const Complex& z) {
  Real m = abs(z);
  if (m.is_zero()) return Complex(z.precision());
  Real two(2, z.precision());
  Real re = sqrt((m + z.re) / two);
  Real im = sqrt((m - z.re) / two);
  if (z.im.sign() < 0) im = -im;
  return {re, im};
}

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

}  // namespace k3
