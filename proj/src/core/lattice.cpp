#include "k3/lattice.hpp"

#include <numeric>
#include <sstream>

#include "k3/error.hpp"

namespace k3 {

IntMatrix int_identity(int n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<BigInt>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
  return out;
}

IntMatrix int_transpose(const IntMatrix& a) {
  if (a.empty()) return a;
  IntMatrix out(a[0].size(), std::vector<BigInt>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

std::string int_matrix_string(const IntMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.size(); ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < a[i].size(); ++j) os << (j ? ", " : "") << a[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

bool GramLattice::is_even() const {
  for (size_t i = 0; i < gram.size(); ++i) {
    if (gram[i][i] % 2 != 0) return false;
  }
  return true;
}

GramLattice lattice_u() { return {"U", {{0, 1}, {1, 0}}}; }
GramLattice lattice_a1() { return {"A1", {{2}}}; }

GramLattice lattice_e7() {
  // chain 0-1-2-3-4-5, node 6 on node 2
  IntMatrix g(7, std::vector<BigInt>(7, 0));
  for (int i = 0; i < 7; ++i) g[i][i] = -2;
  auto edge = [&](int i, int j) { g[i][j] = g[j][i] = 1; };
  for (int i = 0; i < 5; ++i) edge(i, i + 1);
  edge(2, 6);
  return {"E7", g};
}

GramLattice lattice_twist(const GramLattice& l, long n) {
  GramLattice out{l.name + "(" + std::to_string(n) + ")", l.gram};
  for (auto& row : out.gram)
    for (auto& x : row) x *= n;
  return out;
}

GramLattice lattice_sum(const std::vector<GramLattice>& parts) {
  int n = 0;
  std::string name;
  for (const auto& p : parts) {
    n += p.rank();
    name += (name.empty() ? "" : "+") + p.name;
  }
  IntMatrix g(n, std::vector<BigInt>(n, 0));
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i)
      for (int j = 0; j < p.rank(); ++j) g[off + i][off + j] = p.gram[i][j];
    off += p.rank();
  }
  return {name, g};
}

GramLattice lattice_diag(const std::vector<long>& d) {
  IntMatrix g(d.size(), std::vector<BigInt>(d.size(), 0));
  std::string name = "diag(";
  for (size_t i = 0; i < d.size(); ++i) {
    g[i][i] = d[i];
    name += (i ? "," : "") + std::to_string(d[i]);
  }
  return {name + ")", g};
}

GramLattice lattice_preset(const std::string& name) {
  if (name == "U") return lattice_u();
  if (name == "A1") return lattice_a1();
  if (name == "A1(-1)") return lattice_twist(lattice_a1(), -1);
  if (name == "E7") return lattice_e7();
  if (name == "N") {
    GramLattice a = lattice_twist(lattice_a1(), -1);
    GramLattice out = lattice_sum({lattice_u(), lattice_e7(), lattice_e7(), a, a});
    out.name = "N";
    return out;
  }
  if (name == "T") {
    GramLattice out = lattice_diag({2, 2, -2, -2});
    out.name = "T";
    return out;
  }
  fail(ErrorCode::kPrecondition, "unknown lattice preset '" + name + "' (U, A1, A1(-1), E7, N, T)");
}

SmithForm smith_normal_form(const IntMatrix& g0) {
  int n = static_cast<int>(g0.size());
  int m = n ? static_cast<int>(g0[0].size()) : 0;
  IntMatrix d = g0;
  IntMatrix u = int_identity(n), v = int_identity(m);
  auto swap_rows = [&](int i, int j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](int dst, int src, const BigInt& q) {  // row dst -= q row src
    for (int j = 0; j < m; ++j) d[dst][j] -= q * d[src][j];
    for (int j = 0; j < n; ++j) u[dst][j] -= q * u[src][j];
  };
  auto add_col = [&](int dst, int src, const BigInt& q) {
    for (int i = 0; i < n; ++i) d[i][dst] -= q * d[i][src];
    for (int i = 0; i < m; ++i) v[i][dst] -= q * v[i][src];
  };
  int r = std::min(n, m);
  for (int t = 0; t < r; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < m; ++j)
          if (d[i][j] != 0 && (pi < 0 || abs(d[i][j]) < abs(d[pi][pj]))) pi = i, pj = j;
      if (pi < 0) break;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        BigInt q = d[i][t] / d[t][t];
        add_row(i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < m; ++j) {
        if (d[t][j] == 0) continue;
        BigInt q = d[t][j] / d[t][t];
        add_col(j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i)
        for (int j = t + 1; j < m; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(t, bad, BigInt(-1));
    }
    if (d[t][t] < 0) {
      for (int j = 0; j < m; ++j) d[t][j] = -d[t][j];
      for (int j = 0; j < n; ++j) u[t][j] = -u[t][j];
    }
  }
  SmithForm out;
  for (int t = 0; t < r; ++t) out.diagonal.push_back(d[t][t]);
  out.u = u;
  out.v = v;
  return out;
}

namespace {

struct Congruent {
  std::vector<Rational> pivots;
  bool degenerate = false;
};

Congruent diagonalize(const IntMatrix& g) {
  int n = static_cast<int>(g.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(g[i][j]);
  Congruent out;
  for (int t = 0; t < n; ++t) {
    if (a[t][t].is_zero()) {
      int k = -1;
      for (int i = t + 1; i < n && k < 0; ++i)
        if (!a[i][i].is_zero()) k = i;
      if (k >= 0) {
        std::swap(a[t], a[k]);
        for (auto& row : a) std::swap(row[t], row[k]);
      } else {
        for (int i = t + 1; i < n && k < 0; ++i)
          if (!a[t][i].is_zero()) k = i;
        if (k < 0) {
          bool zero_row = true;
          for (int j = t; j < n; ++j) zero_row = zero_row && a[t][j].is_zero();
          if (zero_row) {
            out.degenerate = true;
            return out;
          }
        }
        // row/column t += row/column k; the new pivot is 2 a[t][k]
        for (int j = 0; j < n; ++j) a[t][j] = a[t][j] + a[k][j];
        for (int i = 0; i < n; ++i) a[i][t] = a[i][t] + a[i][k];
      }
    }
    Rational p = a[t][t];
    for (int i = t + 1; i < n; ++i) {
      if (a[i][t].is_zero()) continue;
      Rational f = a[i][t] / p;
      for (int j = t; j < n; ++j) a[i][j] = a[i][j] - f * a[t][j];
      for (int j = t; j < n; ++j) a[j][i] = a[i][j];
    }
    out.pivots.push_back(p);
  }
  return out;
}

}  // namespace

LatticeInvariants lattice_invariants(const GramLattice& l) {
  int n = l.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (l.gram[i][j] != l.gram[j][i]) fail(ErrorCode::kPrecondition, "Gram matrix is not symmetric");
  Congruent c = diagonalize(l.gram);
  if (c.degenerate) fail(ErrorCode::kDomain, "lattice " + l.name + " is degenerate");
  LatticeInvariants out;
  out.rank = n;
  Rational det(1);
  for (const auto& p : c.pivots) {
    (p.sign() > 0 ? out.s_plus : out.s_minus)++;
    det = det * p;
  }
  out.determinant = det.numerator();
  SmithForm s = smith_normal_form(l.gram);
  out.two_elementary = true;
  for (int i = 0; i < n; ++i) {
    const BigInt& d = s.diagonal[i];
    if (d == 1) continue;
    out.invariant_factors.push_back(d);
    if (d != 2) out.two_elementary = false;
    std::vector<Rational> x(n);
    for (int k = 0; k < n; ++k) x[k] = Rational(s.v[k][i]) / Rational(d);
    Rational q(0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) q = q + x[a] * Rational(l.gram[a][b]) * x[b];
    out.discriminant_values.push_back(q);
  }
  out.ell = static_cast<int>(out.invariant_factors.size());
  out.delta = 0;
  for (const auto& q : out.discriminant_values)
    if (!q.is_integer()) out.delta = 1;
  return out;
}

long minor_gcd(const RealizationVector& v) {
  std::array<long, 4> r0 = v.a, r1 = v.rho();
  long g = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g = std::gcd(g, r0[i] * r1[j] - r0[j] * r1[i]);
  return g;
}

std::vector<RealizationVector> tn_brute_force(long n, long bound, bool first_only) {
  std::vector<RealizationVector> out;
  for (long a1 = -bound; a1 <= bound; ++a1)
    for (long a2 = -bound; a2 <= bound; ++a2)
      for (long a3 = -bound; a3 <= bound; ++a3)
        for (long a4 = -bound; a4 <= bound; ++a4) {
          RealizationVector v{{a1, a2, a3, a4}};
          if (v.n() != n || minor_gcd(v) != 1) continue;
          out.push_back(v);
          if (first_only) return out;
        }
  return out;
}

namespace {

std::string vec_string(const RealizationVector& v) {
  return "(" + std::to_string(v.a[0]) + ", " + std::to_string(v.a[1]) + ", " + std::to_string(v.a[2]) + ", " +
         std::to_string(v.a[3]) + ")";
}

}  // namespace

TnResult tn_search(long n) {
  if (n < 1) fail(ErrorCode::kPrecondition, "tn_search needs n >= 1");
  TnResult out;
  out.n = n;
  if (n % 4 == 2) {
    out.obstructed = true;
    out.method = "2 mod 4 obstruction";
    auto& t = out.transcript;
    t.push_back("squares are 0 or 1 mod 4, and a1^2 + a2^2 - a3^2 - a4^2 = n = 2 mod 4");
    t.push_back("so (a1^2, a2^2, a3^2, a4^2) = (1,1,0,0) or (0,0,1,1) mod 4");
    t.push_back("case (1,1,0,0): a1, a2 odd, a3, a4 even");
    t.push_back("  minors of [[a1,a2,a3,a4],[a2,-a1,-a4,a3]]: -(a1^2+a2^2), -(a1a4+a2a3), a1a3-a2a4, a1a3-a2a4, a1a4+a2a3, a3^2+a4^2");
    t.push_back("  a1^2+a2^2 = 2 mod 4; every other minor has an even factor in each term, and a3^2+a4^2 = 0 mod 4");
    t.push_back("case (0,0,1,1): the same with the roles of (a1,a2) and (a3,a4) exchanged");
    t.push_back("all 2x2 minors are even: Lambda(a) is not primitive, T_n is not realized");
    long bound = 12;
    auto found = tn_brute_force(n, bound, true);
    t.push_back("exhaustive check |a_i| <= " + std::to_string(bound) + ": " +
                (found.empty() ? std::string("no primitive vector") : "found " + vec_string(found[0]) + " (contradiction)"));
    return out;
  }
  RealizationVector v;
  if (n % 2 == 1) {
    long k = (n - 1) / 2;
    v.a = {k + 1, 0, k, 0};
    out.method = "odd";
    out.transcript.push_back("n = 2k+1 with k = " + std::to_string(k) + ": a = (k+1, 0, k, 0), (k+1)^2 - k^2 = 2k+1");
    if (k >= 1) {
      long literal = (k + 1) * (k + 1) * (k + 1) * (k + 1) - k * k * k * k;
      out.transcript.push_back("literal a1 = (k+1)^2, a3 = k^2 gives " + std::to_string(literal) + ", not n");
    }
  } else {
    long k = n / 2 - 1;
    v.a = {k + 1, 1, k, 0};
    out.method = "0 mod 4";
    out.transcript.push_back("n = 2(k+1) with odd k = " + std::to_string(k) + ": a = (k+1, 1, k, 0), (k+1)^2 + 1 - k^2 = 2k+2");
  }
  if (v.n() != n || minor_gcd(v) != 1) {
    out.transcript.push_back("recipe vector " + vec_string(v) + " rejected");
    auto found = tn_brute_force(n, 12, true);
    if (found.empty()) fail(ErrorCode::kDomain, "no realization vector found for n = " + std::to_string(n));
    v = found[0];
    out.method = "brute force";
  }
  out.vector = v;
  out.transcript.push_back("a = " + vec_string(v) + ", form value " + std::to_string(v.n()) + ", minor gcd " +
                           std::to_string(minor_gcd(v)));
  return out;
}

GramLattice tn_gram(const RealizationVector& v) {
  std::array<long, 4> x = v.a, y = v.rho();
  auto b = [](const std::array<long, 4>& p, const std::array<long, 4>& q) {
    return BigInt(2 * (p[0] * q[0] + p[1] * q[1] - p[2] * q[2] - p[3] * q[3]));
  };
  return {"T(" + vec_string(v) + ")", {{b(x, x), b(x, y)}, {b(y, x), b(y, y)}}};
}

IntMatrix rank4_block(long n, long m, long b, long c) {
  return {{2 * n, 0, b, c}, {0, 2 * n, -c, b}, {b, -c, 2 * m, 0}, {c, b, 0, 2 * m}};
}

namespace {

BigInt det4(const IntMatrix& a) {
  Congruent c = diagonalize(a);
  if (c.degenerate) return 0;
  Rational d(1);
  for (const auto& p : c.pivots) d = d * p;
  return d.numerator();
}

}  // namespace

Rank4Report rank4_classification_check(long bound) {
  Rank4Report out;
  out.bound = bound;
  IntMatrix j = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  IntMatrix jt = int_transpose(j);
  bool isometry = true, det_identity = true;
  std::string det_witness;
  for (long n = -bound; n <= bound; ++n)
    for (long m = -bound; m <= bound; ++m)
      for (long b = -bound; b <= bound; ++b)
        for (long c = -bound; c <= bound; ++c) {
          IntMatrix g = rank4_block(n, m, b, c);
          if (int_mul(int_mul(jt, g), j) != g) isometry = false;
          BigInt d = det4(g);
          BigInt e = 4 * n * m - b * b - c * c;
          if (d != e * e && det_identity) {
            det_identity = false;
            det_witness = "(n,m,b,c) = (" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
          }
          if (abs(d) != 16) continue;
          LatticeInvariants inv = lattice_invariants({"B", g});
          if (inv.s_plus != 2 || inv.s_minus != 2) continue;
          out.solutions.push_back({n, m, b, c, inv.two_elementary, inv.delta});
        }
  auto& rep = out.report;
  rep.add("J = A + A is an isometry of every B in the box", isometry);
  rep.add("det B = (4nm - b^2 - c^2)^2 on the box", det_identity, det_witness);
  LatticeInvariants neg = lattice_invariants({"B", rank4_block(1, 1, 0, 0)});
  bool neg_fails = abs(neg.determinant) == 16 && !(neg.s_plus == 2 && neg.s_minus == 2);
  rep.add("negative control (n,m,b,c) = (1,1,0,0) fails the signature condition", neg_fails,
          "signature (" + std::to_string(neg.s_plus) + "," + std::to_string(neg.s_minus) + ")");
  auto has = [&](long n, long m) {
    for (const auto& s : out.solutions)
      if (s.n == n && s.m == m && s.b == 0 && s.c == 0) return true;
    return false;
  };
  rep.add("(n,m) = (1,-1) and (-1,1) with b = c = 0 satisfy |det| = 16 and signature (2,2)", has(1, -1) && has(-1, 1));
  std::vector<std::string> extra;
  int two_el = 0, two_el_extra = 0;
  for (const auto& s : out.solutions) {
    bool literal = s.b == 0 && s.c == 0 && s.n * s.m == -1;
    if (s.two_elementary) ++two_el;
    if (!literal) {
      if (s.two_elementary) ++two_el_extra;
      if (extra.size() < 4) {
        extra.push_back("(" + std::to_string(s.n) + "," + std::to_string(s.m) + "," + std::to_string(s.b) + "," +
                        std::to_string(s.c) + ")");
      }
    }
  }
  size_t literal_count = 0;
  for (const auto& s : out.solutions)
    if (s.b == 0 && s.c == 0 && s.n * s.m == -1) ++literal_count;
  std::string w = std::to_string(out.solutions.size()) + " solutions in |n|,|m|,|b|,|c| <= " + std::to_string(bound) + ", " +
                  std::to_string(out.solutions.size() - literal_count) + " with (b,c) != (0,0) or nm != -1, e.g.";
  for (const auto& e : extra) w += " " + e;
  w += "; " + std::to_string(two_el) + " are 2-elementary, " + std::to_string(two_el_extra) + " of them outside b = c = 0, nm = -1";
  rep.add("|det B| = 16 and signature (2,2) force b = c = 0 and nm = -1", out.solutions.size() == literal_count, w);
  return out;
}

GramLattice kummer_tn(long m) {
  if (m < 1) fail(ErrorCode::kPrecondition, "kummer_tn needs m >= 1");
  GramLattice out = lattice_diag({4 * m, 4 * m});
  out.name = "T(Km, m=" + std::to_string(m) + ")";
  return out;
}

}  // namespace k3
