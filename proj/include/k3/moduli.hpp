#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3/fields.hpp"
#include "k3/report.hpp"

namespace k3 {

// 2x2 matrices over Q(z), z^4 = -1; i = z^2, sqrt2 = z - z^3.
struct Mat2 {
  std::array<NumberField, 4> e;  // a b / c d

  static Mat2 of(NumberField a, NumberField b, NumberField c, NumberField d) { return {{a, b, c, d}}; }
  static Mat2 ints(long a, long b, long c, long d) { return of(a, b, c, d); }
  static Mat2 identity() { return ints(1, 0, 0, 1); }

  const NumberField& a() const { return e[0]; }
  const NumberField& b() const { return e[1]; }
  const NumberField& c() const { return e[2]; }
  const NumberField& d() const { return e[3]; }
  NumberField det() const { return e[0] * e[3] - e[1] * e[2]; }
  Mat2 adj() const { return of(e[3], -e[1], -e[2], e[0]); }
  Mat2 inverse() const;
  Mat2 conj_transpose() const;
  Mat2 scaled(const NumberField& s) const { return of(s * e[0], s * e[1], s * e[2], s * e[3]); }
  std::string to_string() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.e == y.e; }
};

NumberField z8_i();
NumberField z8_sqrt2();

// M ~ N: M adj(N) is a nonzero scalar.
bool scalar_equivalent(const Mat2& m, const Mat2& n);

enum class Group { kSL2Z, kH0, kH2, kSU11, kG0, kGamma };
std::string group_name(Group g);
Group parse_group(const std::string& s);

struct GroupMembershipReport {
  std::string group;
  bool member = false;
  std::string witness;
};

// Throws kDomain when an entry lies outside Q(z).
GroupMembershipReport membership(const Mat2& m, Group g);
// Some scalar multiple of m is a member; SL2Z, H0 and H2 only.
GroupMembershipReport membership_up_to_scalar(const Mat2& m, Group g);

// K = [[1, i], [i, 1]]
Mat2 cayley_k();
Mat2 cayley(const Mat2& m);          // closed formula for K M K^-1
Mat2 cayley_product(const Mat2& m);  // K M K^-1 by multiplication
Mat2 inverse_cayley(const Mat2& n);

struct ModuliMatrices {
  Mat2 l_prime;    // [[1, 0], [0, i]]
  Mat2 l;          // T(L') = diag(z^-1, z)
  Mat2 upsilon_l;  // (1/sqrt2) [[1, -1], [1, 1]]
  Mat2 t;          // [[1, 0], [1, 1]]
  Mat2 fricke;     // [[0, -1/sqrt2], [sqrt2, 0]]
  std::vector<Mat2> h0_generators, h2_generators, g0_generators;
};

const ModuliMatrices& moduli_matrices();

struct FrickeReport {
  VerificationReport report;
  std::vector<std::string> notes;
};

FrickeReport fricke_checks();

struct PeriodPoint {
  NumberField w;
  bool inside = false;
  NumberField form_value;  // tz T zbar, T = diag(2, 2, -2, -2)
  VerificationReport checks;
};

PeriodPoint period_point(const NumberField& z2, const NumberField& z4);

// Q(z, w) = 2(z zbar - w wbar) against diag(2, 2, -2, -2) on Z[i]^2.
VerificationReport gaussian_form_check(int box = 2);

}  // namespace k3
