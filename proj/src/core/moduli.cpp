#include "k3/moduli.hpp"

#include "k3/error.hpp"

namespace k3 {

namespace {

using NF = NumberField;

NF to_z8(const NF& x) {
  const auto& ctx = x.context();
  if (!ctx || x.in_base() || ctx == fields::zeta8()) return x;
  if (ctx == fields::gaussian()) return NF(x.coord(0)) + NF(x.coord(1)) * z8_i();
  fail(ErrorCode::kDomain, "entry " + x.to_string() + " is not in Q(zeta8)");
}

Mat2 to_z8(const Mat2& m) { return Mat2::of(to_z8(m.e[0]), to_z8(m.e[1]), to_z8(m.e[2]), to_z8(m.e[3])); }

bool is_rational(const NF& x) { return x.in_base(); }
bool is_int(const NF& x) { return x.in_base() && x.base_value().is_integer(); }
bool is_even(const NF& x) { return is_int(x) && (x.base_value() / Rational(2)).is_integer(); }

bool is_gaussian_int(const NF& x) {
  NF y = to_z8(x);
  return y.coord(1).is_zero() && y.coord(3).is_zero() && y.coord(0).is_integer() && y.coord(2).is_integer();
}

NF half() { return NF(Rational(1, 2)); }

}  // namespace

NF z8_i() { return fields::i_in_zeta8(); }
NF z8_sqrt2() { return fields::sqrt2_in_zeta8(); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2::of(x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3], x.e[2] * y.e[0] + x.e[3] * y.e[2],
                  x.e[2] * y.e[1] + x.e[3] * y.e[3]);
}

Mat2 Mat2::inverse() const {
  NF d = det();
  if (d.is_zero()) fail(ErrorCode::kDivisionByZero, "singular matrix " + to_string());
  return adj().scaled(d.inverse());
}

Mat2 Mat2::conj_transpose() const {
  auto c = [](const NF& x) { return fields::conjugate(to_z8(x)); };
  return of(c(e[0]), c(e[2]), c(e[1]), c(e[3]));
}

std::string Mat2::to_string() const {
  return "[[" + e[0].to_string() + ", " + e[1].to_string() + "], [" + e[2].to_string() + ", " + e[3].to_string() + "]]";
}

bool scalar_equivalent(const Mat2& m, const Mat2& n) {
  Mat2 p = m * n.adj();
  return p.e[1].is_zero() && p.e[2].is_zero() && p.e[0] == p.e[3] && !p.e[0].is_zero();
}

std::string group_name(Group g) {
  switch (g) {
    case Group::kSL2Z: return "SL2Z";
    case Group::kH0: return "H0";
    case Group::kH2: return "H2";
    case Group::kSU11: return "SU11";
    case Group::kG0: return "G0";
    case Group::kGamma: return "Gamma";
  }
  return "?";
}

Group parse_group(const std::string& s) {
  for (Group g : {Group::kSL2Z, Group::kH0, Group::kH2, Group::kSU11, Group::kG0, Group::kGamma})
    if (group_name(g) == s) return g;
  fail(ErrorCode::kParse, "unknown group '" + s + "' (SL2Z, H0, H2, SU11, G0, Gamma)");
}

GroupMembershipReport membership(const Mat2& m0, Group g) {
  Mat2 m = to_z8(m0);
  GroupMembershipReport out{group_name(g), false, {}};
  auto reject = [&](std::string w) {
    out.witness = std::move(w);
    return out;
  };
  if (g == Group::kSL2Z || g == Group::kH0 || g == Group::kH2) {
    for (const auto& x : m.e)
      if (!is_int(x)) return reject("entry " + x.to_string() + " is not a rational integer");
    if (!(m.det() == NF(1))) return reject("det = " + m.det().to_string());
    if (g == Group::kH0) {
      if (!is_even(m.a() + m.d())) return reject("a + d = " + (m.a() + m.d()).to_string() + " is odd");
      if (!is_even(m.b() + m.c())) return reject("b + c = " + (m.b() + m.c()).to_string() + " is odd");
    }
    if (g == Group::kH2 && !is_even(m.c())) return reject("c = " + m.c().to_string() + " is odd");
    out.member = true;
    out.witness = "congruences hold";
    return out;
  }
  if (g == Group::kG0 || g == Group::kGamma) {
    for (const auto& x : m.e)
      if (!is_gaussian_int(x)) return reject("entry " + x.to_string() + " is not in Z[i]");
  }
  Mat2 q = Mat2::ints(1, 0, 0, -1);
  Mat2 h = m.conj_transpose() * q * m;
  if (!(h == q)) return reject("M* diag(1,-1) M = " + h.to_string());
  if (g != Group::kGamma && !(m.det() == NF(1))) return reject("det = " + m.det().to_string());
  out.member = true;
  out.witness = g == Group::kGamma ? "unitary for diag(1,-1) over Z[i]" : "M* diag(1,-1) M = diag(1,-1), det 1";
  return out;
}

GroupMembershipReport membership_up_to_scalar(const Mat2& m0, Group g) {
  if (g != Group::kSL2Z && g != Group::kH0 && g != Group::kH2) {
    fail(ErrorCode::kPrecondition, "membership up to scalar is decided for SL2Z, H0 and H2 only");
  }
  Mat2 m = to_z8(m0);
  GroupMembershipReport out{group_name(g) + " (up to scalar)", false, {}};
  NF lead;
  for (const auto& x : m.e)
    if (!x.is_zero()) {
      lead = x;
      break;
    }
  if (lead.is_zero()) {
    out.witness = "zero matrix";
    return out;
  }
  Mat2 n = m.scaled(lead.inverse());
  for (const auto& x : n.e)
    if (!is_rational(x)) {
      out.witness = "entry ratio " + x.to_string() + " is not rational";
      return out;
    }
  Rational d = n.det().base_value();
  auto root = d.sign() > 0 ? rational_sqrt(d) : std::nullopt;
  if (!root) {
    out.witness = "normalized det " + d.to_string() + " is not a positive rational square";
    return out;
  }
  n = n.scaled(NF(root->inverse()));
  auto r = membership(n, g);
  out.member = r.member;
  out.witness = "representative " + n.to_string() + ": " + r.witness;
  return out;
}

Mat2 cayley_k() { return Mat2::of(NF(1), z8_i(), z8_i(), NF(1)); }

Mat2 cayley(const Mat2& m0) {
  Mat2 m = to_z8(m0);
  auto su = membership(m, Group::kSU11);
  if (!su.member) fail(ErrorCode::kPrecondition, "cayley needs M in SU(1,1): " + su.witness);
  NF ra = fields::real_part(m.a()), ia = fields::imag_part(m.a());
  NF rb = fields::real_part(m.b()), ib = fields::imag_part(m.b());
  return Mat2::of(ra + ib, rb + ia, rb - ia, ra - ib);
}

Mat2 cayley_product(const Mat2& m) {
  Mat2 k = cayley_k();
  return k * to_z8(m) * k.inverse();
}

Mat2 inverse_cayley(const Mat2& n0) {
  Mat2 n = to_z8(n0);
  for (const auto& x : n.e)
    if (!(fields::conjugate(x) == x)) fail(ErrorCode::kPrecondition, "inverse_cayley needs real entries, got " + x.to_string());
  if (!(n.det() == NF(1))) fail(ErrorCode::kPrecondition, "inverse_cayley needs det 1");
  NF i = z8_i();
  NF a = half() * (n.a() + n.d() + i * (n.b() - n.c()));
  NF b = half() * (n.b() + n.c() + i * (n.a() - n.d()));
  return Mat2::of(a, b, fields::conjugate(b), fields::conjugate(a));
}

const ModuliMatrices& moduli_matrices() {
  static const ModuliMatrices m = [] {
    ModuliMatrices out;
    NF i = z8_i(), s2 = z8_sqrt2(), z = NF::generator(fields::zeta8());
    out.l_prime = Mat2::of(NF(1), NF(0), NF(0), i);
    out.l = Mat2::of(z.inverse(), NF(0), NF(0), z);
    out.upsilon_l = Mat2::ints(1, -1, 1, 1).scaled(s2.inverse());
    out.t = Mat2::ints(1, 0, 1, 1);
    out.fricke = Mat2::of(NF(0), -s2.inverse(), s2, NF(0));
    out.h0_generators = {Mat2::ints(0, -1, 1, 0), Mat2::ints(1, 2, 0, 1), Mat2::ints(1, 0, 2, 1), Mat2::ints(-1, 0, 0, -1)};
    out.h2_generators = {Mat2::ints(1, 1, 0, 1), Mat2::ints(1, 0, 2, 1), Mat2::ints(-1, 0, 0, -1)};
    NF one(1);
    out.g0_generators = {Mat2::of(-i, NF(0), NF(0), i), Mat2::of(one + i, one, one, one - i),
                         Mat2::of(one - i, one, one, one + i), Mat2::ints(-1, 0, 0, -1)};
    return out;
  }();
  return m;
}

FrickeReport fricke_checks() {
  const ModuliMatrices& mm = moduli_matrices();
  FrickeReport out;
  auto& rep = out.report;
  auto all = [&](const std::string& name, const std::vector<Mat2>& gens, auto&& map, Group g) {
    bool ok = true;
    std::string w;
    for (const auto& x : gens) {
      Mat2 y = map(x);
      auto r = membership(y, g);
      if (!r.member) {
        ok = false;
        w += x.to_string() + " -> " + y.to_string() + ": " + r.witness + "; ";
      }
    }
    rep.add(name, ok, ok ? std::to_string(gens.size()) + " generators" : w);
  };
  auto certified = [&](const std::vector<Mat2>& gens, Group g) {
    for (const auto& x : gens)
      if (!membership(x, g).member) return false;
    return true;
  };
  rep.add("generators of H0 are certified members", certified(mm.h0_generators, Group::kH0));
  rep.add("generators of H[2] are certified members", certified(mm.h2_generators, Group::kH2));
  rep.add("generators of G0 are certified members", certified(mm.g0_generators, Group::kG0));

  Mat2 t = mm.t, ti = mm.t.inverse(), f = mm.fricke, fi = mm.fricke.inverse();
  all("(i) T g T^-1 in H[2] for g in H0", mm.h0_generators, [&](const Mat2& g) { return t * g * ti; }, Group::kH2);
  all("(ii) T^-1 h T in H0 for h in H[2]", mm.h2_generators, [&](const Mat2& h) { return ti * h * t; }, Group::kH0);
  Mat2 f2 = f * f;
  rep.add("(iii) F^2 ~ I", scalar_equivalent(f2, Mat2::identity()), "F^2 = " + f2.to_string());
  all("(iv) F h F^-1 in H[2] for h in H[2]", mm.h2_generators, [&](const Mat2& h) { return f * h * fi; }, Group::kH2);
  Mat2 v = fi * t * mm.upsilon_l * ti;
  auto rv = membership_up_to_scalar(v, Group::kH2);
  rep.add("(v) F^-1 T Upsilon(L) T^-1 in H[2] up to scalar", rv.member, rv.witness);
  Mat2 l2 = mm.l * mm.l;
  auto r6 = membership(l2, Group::kG0);
  rep.add("(vi) L^2 in G0", r6.member, "L^2 = " + l2.to_string() + ": " + r6.witness);
  Mat2 li = mm.l.inverse();
  all("(vii) L^-1 g L in G0 for g in G0", mm.g0_generators, [&](const Mat2& g) { return li * g * mm.l; }, Group::kG0);

  Mat2 cl = cayley(mm.l);
  rep.add("Upsilon(L) = cayley(T(L'))", cl == mm.upsilon_l, cl.to_string());
  rep.add("T(L') ~ L'", scalar_equivalent(mm.l, mm.l_prime));
  all("cayley maps G0 generators into H0", mm.g0_generators, [&](const Mat2& g) { return cayley(g); }, Group::kH0);
  all("inverse_cayley maps H0 generators into G0", mm.h0_generators, [&](const Mat2& h) { return inverse_cayley(h); },
      Group::kG0);

  std::string literal;
  for (const auto& g : mm.h0_generators) {
    Mat2 y = t * g * ti;
    auto r = membership(y, Group::kH0);
    if (!r.member) {
      literal = "T g T^-1 = " + y.to_string() + " for g = " + g.to_string() + ": " + r.witness;
      break;
    }
  }
  out.notes.push_back(literal.empty() ? "literal reading T H0 T^-1 = H0 holds on generators"
                                      : "literal reading T H0 T^-1 = H0 fails: " + literal);
  return out;
}

PeriodPoint period_point(const NF& z2_0, const NF& z4_0) {
  NF z2 = to_z8(z2_0), z4 = to_z8(z4_0);
  if (z2.is_zero()) fail(ErrorCode::kPrecondition, "period_point needs z2 != 0");
  PeriodPoint out;
  NF i = z8_i();
  std::array<NF, 4> z{i * z2, z2, i * z4, z4};
  out.w = z4 / z2;
  NF n2 = z2 * fields::conjugate(z2), n4 = z4 * fields::conjugate(z4);
  Rational a2 = n2.base_value(), a4 = n4.base_value();
  out.inside = a2 > a4;
  std::array<long, 4> tdiag{2, 2, -2, -2};
  NF form;
  for (int k = 0; k < 4; ++k) form = form + NF(tdiag[k]) * z[k] * fields::conjugate(z[k]);
  out.form_value = form;
  // J = A + A, A = [[0, -1], [1, 0]]
  std::array<NF, 4> jz{-z[1], z[0], -z[3], z[2]};
  bool eig = true;
  for (int k = 0; k < 4; ++k) eig = eig && jz[k] == i * z[k];
  out.checks.add("J z = i z", eig);
  out.checks.add("tz T zbar = 4(|z2|^2 - |z4|^2)", form == NF(4) * (n2 - n4), form.to_string());
  NF wn = out.w * fields::conjugate(out.w);
  out.checks.add("inside agrees with |w| < 1", out.inside == (wn.base_value() < Rational(1)));
  return out;
}

VerificationReport gaussian_form_check(int box) {
  VerificationReport rep;
  // z = x + i y -> x e1 + y e2, w = u + i v -> u e3 + v e4; i acts as J
  bool values = true, jmul = true, polar = true;
  std::string witness;
  auto form = [](const std::array<long, 4>& p, const std::array<long, 4>& q) {
    return 2 * (p[0] * q[0] + p[1] * q[1] - p[2] * q[2] - p[3] * q[3]);
  };
  int count = 0;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      for (long u = -box; u <= box; ++u)
        for (long v = -box; v <= box; ++v) {
          std::array<long, 4> p{x, y, u, v};
          long q = 2 * (x * x + y * y - u * u - v * v);
          if (form(p, p) != q) {
            values = false;
            witness = "(" + std::to_string(x) + "+" + std::to_string(y) + "i, " + std::to_string(u) + "+" + std::to_string(v) + "i)";
          }
          // J p corresponds to (i z, i w)
          std::array<long, 4> jp{-y, x, -v, u};
          if (form(jp, jp) != q) jmul = false;
          // the Hermitian form 2(z conj(z') - w conj(w')) has real part b(p, p')
          for (int k = 0; k < 4; ++k) {
            std::array<long, 4> e{0, 0, 0, 0};
            e[k] = 1;
            // Re(z conj(z')) with z = x + i y, z' = e0 + i e1
            long re_h = 2 * ((x * e[0] + y * e[1]) - (u * e[2] + v * e[3]));
            if (form(p, e) != re_h) polar = false;
          }
          ++count;
        }
  rep.add("diag(2,2,-2,-2) equals 2(|z|^2 - |w|^2) on Z[i]^2", values,
          values ? std::to_string(count) + " pairs with |coords| <= " + std::to_string(box) : witness);
  rep.add("J acts as multiplication by i and preserves the form", jmul);
  rep.add("the bilinear form is the real part of 2(z z'bar - w w'bar)", polar);
  return rep;
}

}  // namespace k3
