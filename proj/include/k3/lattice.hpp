#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3/rational.hpp"
#include "k3/report.hpp"

namespace k3 {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix int_identity(int n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_transpose(const IntMatrix& a);
std::string int_matrix_string(const IntMatrix& a);

struct GramLattice {
  std::string name;
  IntMatrix gram;

  int rank() const { return static_cast<int>(gram.size()); }
  bool is_even() const;
};

// Root lattices are negative definite: A1 = [2] as in the transcendental
// lattice, E7 with -2 on the diagonal. "N" is U + E7^2 + A1(-1)^2.
GramLattice lattice_u();
GramLattice lattice_a1();
GramLattice lattice_e7();
GramLattice lattice_twist(const GramLattice& l, long n);
GramLattice lattice_sum(const std::vector<GramLattice>& parts);
GramLattice lattice_diag(const std::vector<long>& d);
// U, A1, A1(-1), E7, N, T (= A1^2 + A1(-1)^2); throws kPrecondition otherwise.
GramLattice lattice_preset(const std::string& name);

struct SmithForm {
  std::vector<BigInt> diagonal;  // d1 | d2 | ..., nonnegative
  IntMatrix u, v;                // u G v = diag
};

SmithForm smith_normal_form(const IntMatrix& g);

struct LatticeInvariants {
  int rank = 0;
  int s_plus = 0, s_minus = 0;
  BigInt determinant;
  std::vector<BigInt> invariant_factors;  // nontrivial ones
  int ell = 0;
  bool two_elementary = false;
  int delta = 0;
  std::vector<Rational> discriminant_values;  // q(x_i) on the Smith generators
};

LatticeInvariants lattice_invariants(const GramLattice& l);

struct RealizationVector {
  std::array<long, 4> a{};
  long n() const { return a[0] * a[0] + a[1] * a[1] - a[2] * a[2] - a[3] * a[3]; }
  std::array<long, 4> rho() const { return {a[1], -a[0], -a[3], a[2]}; }
};

long minor_gcd(const RealizationVector& v);

struct TnResult {
  long n = 0;
  bool obstructed = false;
  std::optional<RealizationVector> vector;
  std::string method;                   // "odd", "0 mod 4", "brute force", "2 mod 4 obstruction"
  std::vector<std::string> transcript;  // certificate or mod-4 argument
};

TnResult tn_search(long n);
// Primitive vectors with |a_i| <= bound and form value n.
std::vector<RealizationVector> tn_brute_force(long n, long bound, bool first_only = false);
GramLattice tn_gram(const RealizationVector& v);

struct Rank4Solution {
  long n, m, b, c;
  bool two_elementary;
  int delta;
};

struct Rank4Report {
  VerificationReport report;
  std::vector<Rank4Solution> solutions;  // |det B| = 16, signature (2, 2)
  long bound = 0;
};

// B = [[A1(n)^2, C], [C^T, A1(m)^2]], C = [[b, c], [-c, b]].
IntMatrix rank4_block(long n, long m, long b, long c);
Rank4Report rank4_classification_check(long bound = 4);

GramLattice kummer_tn(long m);

}  // namespace k3
