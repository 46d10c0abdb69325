#pragma once

#include <optional>

#include "k3/algext.hpp"
#include "k3/ratfunc.hpp"

namespace k3 {

using NFContext = NumberField::ContextPtr;

namespace fields {

NFContext gaussian();      // i, i^2 + 1
NFContext zeta8();         // z, z^4 + 1
NFContext sqrt2();         // s, s^2 - 2
NFContext fourth_root7();  // t, t^4 - 7

NumberField i_in_zeta8();      // z^2
NumberField sqrt2_in_zeta8();  // z - z^3

// i adjoined over a base number field (tower level two).
AlgExt<NumberField>::ContextPtr gaussian_over(const NFContext& base);

// Complex conjugation for the fields above; real fields map to themselves.
NumberField conjugate(const NumberField& x);
NumberField real_part(const NumberField& x);
NumberField imag_part(const NumberField& x);

}  // namespace fields

// Square roots inside the same field, when they exist and can be decided.
std::optional<Rational> exact_sqrt(const Rational& x);
std::optional<QFunc> exact_sqrt(const QFunc& x);

}  // namespace k3
