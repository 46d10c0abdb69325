#include "k3/periods.hpp"

#include <cmath>
#include <numeric>

#include "k3/error.hpp"

namespace k3 {

namespace {

Real at_prec(const Real& x, int p) {
  Real r(p);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Complex at_prec(const Complex& z, int p) { return {at_prec(z.re, p), at_prec(z.im, p)}; }

Complex cplx(long re, long im, int p) { return {Real(re, p), Real(im, p)}; }

Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }

// Optimal AGM: at each step the square root closer to the arithmetic mean.
Complex agm(Complex a, Complex b) {
  const int p = a.precision();
  Real tol = Real::two_pow(-p + 4, p);
  for (int it = 0; it < 400; ++it) {
    if (abs(a - b) <= tol * abs(a)) return a;
    Complex a1 = (a + b) * Real::two_pow(-1, p);
    Complex b1 = sqrt(a * b);
    if (abs(a1 + b1) < abs(a1 - b1)) b1 = -b1;
    a = std::move(a1);
    b = std::move(b1);
  }
  fail(ErrorCode::kNumeric, "AGM did not converge");
}

Complex paired_sqrt(const Complex& x, const Complex& partner) {
  Complex s = sqrt(x);
  if (abs(s + partner) < abs(s - partner)) s = -s;
  return s;
}

Complex raw_tau(const std::array<Complex, 3>& e) {
  const int p = e[0].precision();
  Complex a = sqrt(e[0] - e[2]);
  Complex b = paired_sqrt(e[0] - e[1], a);
  Complex ib = cplx(0, 1, p) * b;
  Complex c = paired_sqrt(e[1] - e[2], ib);
  Complex m1 = agm(a, b);
  Complex m2 = agm(c, ib);
  Complex tau = m1 / m2;
  if (tau.im.sign() < 0) tau = -tau;
  return tau;
}

void check_distinct(const std::array<Complex, 3>& e) {
  const int p = e[0].precision();
  Real scale = abs(e[0]) + abs(e[1]) + abs(e[2]) + Real(1, p);
  Real tol = scale * Real::two_pow(-p / 2, p);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (abs(e[i] - e[j]) < tol) fail(ErrorCode::kDomain, "coincident roots: the cubic is singular");
    }
  }
}

PeriodRatio from_roots(const std::array<Complex, 3>& lo, const std::array<Complex, 3>& hi, int bits) {
  if (bits < 64) fail(ErrorCode::kPrecondition, "precisionBits must be at least 64");
  check_distinct(lo);
  PeriodRatio out;
  out.precision = bits;
  out.tau_raw = raw_tau(lo);
  out.tau = reduce_to_fundamental_domain(out.tau_raw);
  Complex t_hi = reduce_to_fundamental_domain(raw_tau(hi));
  Real diff = abs(at_prec(t_hi, bits) - out.tau);
  Real floor_v = Real::two_pow(-bits, bits);
  out.error_bound = diff < floor_v ? floor_v : diff;
  return out;
}

long sigma(long n, int k) {
  long s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long t = 1;
    for (int i = 0; i < k; ++i) t *= d;
    s += t;
  }
  return s;
}

Complex theta_sum(const Complex& q, int p, int sign, int terms) {
  // 1 + 2 sum sign^n q^{n^2}
  Complex acc = cplx(1, 0, p);
  Complex qn2 = cplx(1, 0, p);
  Complex q2n1 = q;  // q^{2n-1}
  for (int n = 1; n <= terms; ++n) {
    qn2 = qn2 * q2n1;
    q2n1 = q2n1 * q * q;
    Complex t = qn2 * Real(2, p);
    acc = (sign < 0 && n % 2 == 1) ? acc - t : acc + t;
  }
  return acc;
}

}  // namespace

Complex complex_from(const Rational& re, const Rational& im, int precision_bits) {
  return {Real(re, precision_bits), Real(im, precision_bits)};
}

std::array<Complex, 3> cubic_roots(const Poly<Rational>& cubic, int precision_bits) {
  if (cubic.degree() != 3) fail(ErrorCode::kDomain, "cubic_roots needs a cubic");
  if (!is_squarefree(cubic)) fail(ErrorCode::kDomain, "coincident roots: " + cubic.to_string() + " is not squarefree");
  const int p = precision_bits;
  Poly<Rational> m = cubic.monic();
  std::array<Complex, 3> c{complex_from(m.coeff(0), Rational(0), p), complex_from(m.coeff(1), Rational(0), p),
                           complex_from(m.coeff(2), Rational(0), p)};
  auto eval = [&](const Complex& z) { return ((z + c[2]) * z + c[1]) * z + c[0]; };
  std::array<Complex, 3> z;
  Complex seed = complex_from(Rational(2, 5), Rational(9, 10), p);
  z[0] = cplx(1, 0, p);
  for (int k = 1; k < 3; ++k) z[k] = z[k - 1] * seed;
  Real tol = Real::two_pow(-p + 6, p);
  for (int it = 0; it < 2000; ++it) {
    Real change(0, p);
    for (int k = 0; k < 3; ++k) {
      Complex den = cplx(1, 0, p);
      for (int j = 0; j < 3; ++j) {
        if (j != k) den = den * (z[k] - z[j]);
      }
      Complex step = eval(z[k]) / den;
      z[k] = z[k] - step;
      Real s = abs(step);
      if (change < s) change = s;
    }
    if (change < tol) return z;
  }
  fail(ErrorCode::kNumeric, "root finder did not converge for " + cubic.to_string());
}

PeriodRatio period_ratio_numeric(const std::array<Complex, 3>& e, int precision_bits) {
  std::array<Complex, 3> lo{at_prec(e[0], precision_bits), at_prec(e[1], precision_bits), at_prec(e[2], precision_bits)};
  std::array<Complex, 3> hi{at_prec(e[0], precision_bits + 32), at_prec(e[1], precision_bits + 32),
                            at_prec(e[2], precision_bits + 32)};
  return from_roots(lo, hi, precision_bits);
}

PeriodRatio period_ratio_cubic(const Poly<Rational>& cubic, int precision_bits) {
  if (precision_bits < 64) fail(ErrorCode::kPrecondition, "precisionBits must be at least 64");
  return from_roots(cubic_roots(cubic, precision_bits), cubic_roots(cubic, precision_bits + 32), precision_bits);
}

std::array<Complex, 3> roots_for_tau(const Complex& tau, int precision_bits) {
  const int p = precision_bits;
  if (tau.im.sign() <= 0) fail(ErrorCode::kDomain, "tau must lie in the upper half plane");
  Complex t = at_prec(tau, p);
  Real pi = Real::pi(p);
  Complex q = exp(Complex{Real(0, p), pi} * t);  // e^{i pi tau}
  Complex q4 = exp(Complex{Real(0, p), pi * Real::two_pow(-2, p)} * t);
  int terms = p / 2 + 20;
  Complex th3 = theta_sum(q, p, 1, terms);
  Complex th4 = theta_sum(q, p, -1, terms);
  // theta2 = 2 q^{1/4} sum q^{n(n+1)}
  Complex s = cplx(1, 0, p), qn = cplx(1, 0, p), q2n = q * q;  // q^{n(n+1)}, step q^{2(n+1)}
  for (int n = 1; n <= terms; ++n) {
    qn = qn * q2n;
    q2n = q2n * q * q;
    s = s + qn;
  }
  Complex th2 = q4 * s * Real(2, p);
  auto p4 = [](const Complex& z) { Complex z2 = z * z; return z2 * z2; };
  Complex t2 = p4(th2), t3 = p4(th3), t4 = p4(th4);
  Real third = Real(1, p) / Real(3, p);
  return {(t3 + t4) * third, (t2 - t4) * third, -(t2 + t3) * third};
}

Complex reduce_to_fundamental_domain(const Complex& tau) {
  if (tau.im.sign() <= 0) fail(ErrorCode::kDomain, "tau must lie in the upper half plane");
  const int p = tau.precision();
  Complex t = tau;
  Real one_minus = Real(1, p) - Real::two_pow(-p / 2, p);
  for (int it = 0; it < 10000; ++it) {
    t.re = t.re - round(t.re);
    if (norm2(t) < one_minus) {
      t = cplx(-1, 0, p) / t;
      continue;
    }
    // boundary identifications: keep Re tau <= 0 on the arc and Re tau = -1/2 on the sides
    Real delta = Real::two_pow(-p / 2, p);
    if (norm2(t) < Real(1, p) + delta && delta < t.re) t = cplx(-1, 0, p) / t;
    if (Real(1, p) * Real::two_pow(-1, p) - delta < t.re) t.re = t.re - Real(1, p);
    return t;
  }
  fail(ErrorCode::kNumeric, "fundamental-domain reduction did not terminate");
}

Complex j_from_tau(const Complex& tau) {
  Complex t = reduce_to_fundamental_domain(tau);
  const int p = t.precision();
  Real two_pi = Real::pi(p) * Real(2, p);
  Complex q = exp(Complex{Real(0, p), two_pi} * t);
  int terms = p / 4 + 20;
  Complex e4 = cplx(1, 0, p), e6 = cplx(1, 0, p), qn = cplx(1, 0, p);
  for (int n = 1; n <= terms; ++n) {
    qn = qn * q;
    e4 = e4 + qn * Real(240 * sigma(n, 3), p);
    e6 = e6 - qn * Real(504 * sigma(n, 5), p);
  }
  Complex e43 = e4 * e4 * e4;
  return e43 * Real(1728, p) / (e43 - e6 * e6);
}

std::string cm_verdict_name(CmVerdict v) {
  switch (v) {
    case CmVerdict::kIsogenousToE: return "IsogenousToE";
    case CmVerdict::kNotDetected: return "NotDetected";
    case CmVerdict::kInconclusive: return "Inconclusive";
  }
  return "?";
}

CmResult cm_isogeny_check(const Complex& tau, int max_conductor, const Real& error) {
  if (tau.im.sign() <= 0) fail(ErrorCode::kDomain, "tau must lie in the upper half plane");
  if (max_conductor < 1) fail(ErrorCode::kPrecondition, "maxConductor must be positive");
  CmResult out;
  Complex t = reduce_to_fundamental_domain(tau);
  const int p = t.precision();
  Real tol = error * Real::two_pow(20, p);
  if (tol > Real(Rational(1, 1000000), p)) {
    out.verdict = CmVerdict::kInconclusive;
    out.note = "precision insufficient: error bound " + error.to_string(6);
    return out;
  }
  const long amax = std::max(64L, 2L * max_conductor + 2);
  Real n2 = norm2(t);
  for (long a = 1; a <= amax; ++a) {
    Real ra(a, p);
    Real bb = -(ra * Real(2, p) * t.re);
    Real cc = ra * n2;
    Real br = round(bb), cr = round(cc);
    Real slack = tol * ra * Real(8, p) * (Real(1, p) + n2);
    if (slack < abs(bb - br) || slack < abs(cc - cr)) continue;
    out.a = a;
    out.b = std::lround(br.to_double());
    out.c = std::lround(cr.to_double());
    long g = std::gcd(std::gcd(out.a, std::labs(out.b)), std::labs(out.c));
    if (g != 1) continue;
    out.discriminant = out.b * out.b - 4 * out.a * out.c;
    long d = -out.discriminant;
    long m = 0;
    if (d > 0 && d % 4 == 0) {
      long r = std::lround(std::sqrt(static_cast<double>(d / 4)));
      for (long k = std::max(0L, r - 2); k <= r + 2; ++k) {
        if (k * k == d / 4) m = k;
      }
    }
    if (m > 0 && m <= max_conductor) {
      out.verdict = CmVerdict::kIsogenousToE;
      out.conductor = static_cast<int>(m);
      out.note = "tau satisfies an integral quadratic relation of discriminant " + std::to_string(out.discriminant) +
                 " (numeric evidence within the stated margin)";
    } else if (m > 0) {
      out.verdict = CmVerdict::kNotDetected;
      out.note = "discriminant " + std::to_string(out.discriminant) + " has conductor above the bound";
    } else {
      out.verdict = CmVerdict::kNotDetected;
      out.note = "CM by discriminant " + std::to_string(out.discriminant) + ", not an order of Q(i)";
    }
    return out;
  }
  out.verdict = CmVerdict::kNotDetected;
  out.note = "no integral quadratic relation with leading coefficient <= " + std::to_string(amax);
  return out;
}

}  // namespace k3
