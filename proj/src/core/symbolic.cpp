#include "k3/symbolic.hpp"

namespace k3 {

std::vector<SymFrac> identity_images(const Ring& r) {
  std::vector<SymFrac> out;
  for (const auto& v : r.vars()) out.push_back(sym_frac_var(r, v));
  return out;
}

void set_image(std::vector<SymFrac>& images, const Ring& r, std::string_view name, SymFrac value) {
  images.at(r.index(name)) = std::move(value);
}

SymFrac to_sym(const Ring& r, const Rational& c) { return sym_frac(r, NumberField(c)); }
SymFrac to_sym(const Ring& r, const NumberField& c) { return sym_frac(r, c); }

bool sym_is_zero(const SymFrac& f) { return f.num.is_zero(); }

}  // namespace k3
