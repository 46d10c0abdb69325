#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3/poly.hpp"

namespace k3 {

template <FieldLike Base>
struct ExtensionContext {
  std::string name;       // printed symbol for the generator
  Poly<Base> modulus;     // monic, degree >= 2; assumed irreducible
};

// Element of Base[theta]/(m(theta)). Elements built from plain scalars carry no
// context until combined with a context-bearing element; they behave as Base.
template <FieldLike Base>
class AlgExt {
 public:
  using Context = ExtensionContext<Base>;
  using ContextPtr = std::shared_ptr<const Context>;

  AlgExt() = default;
  AlgExt(const Base& b) {  // NOLINT(google-explicit-constructor)
    if (!b.is_zero()) coords_.push_back(b);
  }
  template <class T>
    requires(!std::same_as<T, Base>) && (!std::same_as<T, AlgExt>) && std::constructible_from<Base, const T&>
  AlgExt(const T& v) : AlgExt(Base(v)) {}  // NOLINT(google-explicit-constructor)
  AlgExt(ContextPtr ctx, std::vector<Base> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) { reduce(); }

  static ContextPtr make_context(std::string name, Poly<Base> modulus) {
    if (modulus.degree() < 2) fail(ErrorCode::kConfiguration, "extension modulus must have degree >= 2");
    if (!(modulus.leading() == Base(1))) fail(ErrorCode::kConfiguration, "extension modulus must be monic");
    return std::make_shared<const Context>(Context{std::move(name), modulus.with_var(name)});
  }
  static AlgExt generator(const ContextPtr& ctx) { return AlgExt(ctx, {Base(), Base(1)}); }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Base>& coords() const { return coords_; }
  Base coord(std::size_t i) const { return i < coords_.size() ? coords_[i] : Base(); }
  int degree() const { return ctx_ ? ctx_->modulus.degree() : 1; }

  bool is_zero() const { return coords_.empty(); }
  bool in_base() const { return coords_.size() <= 1; }
  Base base_value() const {
    if (!in_base()) fail(ErrorCode::kPrecondition, "element is not in the base field: " + to_string());
    return coord(0);
  }

  AlgExt inverse() const {
    if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero field element");
    if (in_base()) return AlgExt(ctx_, {coords_[0].inverse()});
    auto e = xgcd(as_poly(), ctx_->modulus);
    if (e.g.degree() > 0) throw ReducibilityWitness(e.g.to_string());
    return AlgExt(ctx_, e.s.coeffs());
  }

  // Image under the automorphism sending the generator to `image`.
  AlgExt apply_automorphism(const AlgExt& image) const {
    AlgExt acc;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) acc = acc * image + AlgExt(*it);
    return acc.with_context(ctx_);
  }

  Poly<Base> as_poly() const { return Poly<Base>(ctx_ ? ctx_->name : std::string("theta"), coords_); }

  friend AlgExt operator+(const AlgExt& a, const AlgExt& b) {
    AlgExt r(join(a, b), {});
    r.coords_.resize(std::max(a.coords_.size(), b.coords_.size()));
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] = a.coord(i) + b.coord(i);
    r.trim();
    return r;
  }
  friend AlgExt operator-(const AlgExt& a, const AlgExt& b) {
    AlgExt r(join(a, b), {});
    r.coords_.resize(std::max(a.coords_.size(), b.coords_.size()));
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] = a.coord(i) - b.coord(i);
    r.trim();
    return r;
  }
  friend AlgExt operator-(const AlgExt& a) {
    AlgExt r = a;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend AlgExt operator*(const AlgExt& a, const AlgExt& b) {
    auto ctx = join(a, b);
    if (a.is_zero() || b.is_zero()) return AlgExt(ctx, {});
    std::vector<Base> r(a.coords_.size() + b.coords_.size() - 1);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      for (std::size_t j = 0; j < b.coords_.size(); ++j) r[i + j] = r[i + j] + a.coords_[i] * b.coords_[j];
    }
    return AlgExt(ctx, std::move(r));
  }
  friend AlgExt operator/(const AlgExt& a, const AlgExt& b) {
    if (b.is_zero()) fail(ErrorCode::kDivisionByZero, "field division by zero");
    return a * b.inverse();
  }
  AlgExt& operator+=(const AlgExt& o) { return *this = *this + o; }
  AlgExt& operator-=(const AlgExt& o) { return *this = *this - o; }
  AlgExt& operator*=(const AlgExt& o) { return *this = *this * o; }

  friend bool operator==(const AlgExt& a, const AlgExt& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && !(a.in_base() && b.in_base())) return false;
    return a.coords_ == b.coords_;
  }

  AlgExt pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgExt r = AlgExt(ctx_, {Base(1)}), b = *this;
    while (e != 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e != 0) b = b * b;
    }
    return r;
  }

  std::string to_string() const {
    if (coords_.empty()) return "0";
    return Poly<Base>(ctx_ ? ctx_->name : std::string("theta"), coords_).to_string();
  }

 private:
  static ContextPtr join(const AlgExt& a, const AlgExt& b) {
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_ || a.ctx_ == b.ctx_) return a.ctx_;
    if (a.ctx_->name == b.ctx_->name && a.ctx_->modulus == b.ctx_->modulus) return a.ctx_;
    fail(ErrorCode::kConfiguration, "field elements from different extensions (" + a.ctx_->name + ", " + b.ctx_->name + ")");
  }
  AlgExt with_context(const ContextPtr& c) const {
    AlgExt r = *this;
    if (!r.ctx_) r.ctx_ = c;
    return r;
  }
  void trim() {
    while (!coords_.empty() && coords_.back().is_zero()) coords_.pop_back();
  }
  void reduce() {
    trim();
    if (!ctx_) {
      if (coords_.size() > 1) fail(ErrorCode::kConfiguration, "extension coordinates without a context");
      return;
    }
    if (static_cast<int>(coords_.size()) <= ctx_->modulus.degree()) return;
    Poly<Base> r = Poly<Base>(ctx_->name, coords_) % ctx_->modulus;
    coords_ = r.coeffs();
  }

  ContextPtr ctx_;
  std::vector<Base> coords_;
};

using NumberField = AlgExt<Rational>;
using NumberFieldTower = AlgExt<AlgExt<Rational>>;

}  // namespace k3
