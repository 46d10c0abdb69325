#include "k3/fields.hpp"

namespace k3 {
namespace fields {

namespace {

NFContext make(const char* name, std::vector<Rational> coeffs) {
  return NumberField::make_context(name, Poly<Rational>(name, std::move(coeffs)));
}

}  // namespace

NFContext gaussian() {
  static const NFContext ctx = make("i", {1, 0, 1});
  return ctx;
}

NFContext zeta8() {
  static const NFContext ctx = make("z", {1, 0, 0, 0, 1});
  return ctx;
}

NFContext sqrt2() {
  static const NFContext ctx = make("s", {-2, 0, 1});
  return ctx;
}

NFContext fourth_root7() {
  static const NFContext ctx = make("t", {-7, 0, 0, 0, 1});
  return ctx;
}

NumberField i_in_zeta8() { return NumberField(zeta8(), {0, 0, 1}); }
NumberField sqrt2_in_zeta8() { return NumberField(zeta8(), {0, 1, 0, -1}); }

AlgExt<NumberField>::ContextPtr gaussian_over(const NFContext& base) {
  std::vector<NumberField> m{NumberField(base, {1}), NumberField(), NumberField(base, {1})};
  return AlgExt<NumberField>::make_context("I", Poly<NumberField>("I", m));
}

NumberField conjugate(const NumberField& x) {
  const auto& ctx = x.context();
  if (!ctx || x.in_base()) return x;
  if (ctx == gaussian()) return x.apply_automorphism(NumberField(ctx, {0, -1}));
  if (ctx == zeta8()) return x.apply_automorphism(NumberField(ctx, {0, 0, 0, -1}));
  if (ctx == sqrt2() || ctx == fourth_root7()) return x;
  fail(ErrorCode::kDomain, "no complex conjugation known for field " + ctx->name);
}

NumberField real_part(const NumberField& x) { return (x + conjugate(x)) * NumberField(Rational(1, 2)); }

NumberField imag_part(const NumberField& x) {
  const auto& ctx = x.context();
  if (!ctx || x.in_base()) return NumberField();
  NumberField i;
  if (ctx == gaussian()) i = NumberField::generator(ctx);
  else if (ctx == zeta8()) i = i_in_zeta8();
  else if (ctx == sqrt2() || ctx == fourth_root7()) return NumberField();
  else fail(ErrorCode::kDomain, "no imaginary unit known for field " + ctx->name);
  return (x - conjugate(x)) / (NumberField(Rational(2)) * i);
}

}  // namespace fields

std::optional<Rational> exact_sqrt(const Rational& x) { return rational_sqrt(x); }

std::optional<QFunc> exact_sqrt(const QFunc& x) {
  if (x.is_zero()) return QFunc();
  auto half = [](const Poly<Rational>& p) -> std::optional<Poly<Rational>> {
    auto sq = squarefree_decompose(p);
    auto c = rational_sqrt(sq.constant);
    if (!c) return std::nullopt;
    Poly<Rational> r = Poly<Rational>::constant(*c, p.var());
    for (const auto& f : sq.factors) {
      if (f.multiplicity % 2 != 0) return std::nullopt;
      r = r * pow(f.factor, f.multiplicity / 2);
    }
    return r;
  };
  auto n = half(x.num());
  auto d = half(x.den());
  if (!n || !d) return std::nullopt;
  return QFunc(*n, *d);
}

}  // namespace k3
