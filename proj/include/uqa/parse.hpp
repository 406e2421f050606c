#pragma once

// Text syntax for scalars, weights and algebra elements. Node indices are
// 1-based in text.
//
//   element := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ((['*'] | '/') factor)*      juxtaposition multiplies
//   factor  := atom ['^' ['-'] integer]
//   atom    := integer | 'q' | '(' element ')' | 'E' i | 'F' i | 'K' i | 'K' '(' weight ')'
//   weight  := ['+'|'-'] wterm (('+'|'-') wterm)* | '0'
//   wterm   := [integer ['*']] ('w'|'a') i
//
// `K<i>` is K_{alpha_i}; `K(weight)` is K_mu with mu in fundamental-weight
// (`w`) and simple-root (`a`) coordinates. Products are taken in the written
// order and straightened. Division and negative powers are allowed only for
// scalars, and negative powers also for torus factors.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "uqa/uq_algebra.hpp"

namespace uqa {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

Scalar parse_scalar(std::string_view text);
Weight parse_weight(std::string_view text, const CartanDatum& datum);
AlgebraElement parse_element(std::string_view text, const UqAlgebra& alg);

/// Canonical text forms; every one re-parses to the same value.
std::string render_monomial(const Monomial& m);
std::string render_element(const AlgebraElement& a);

}  // namespace uqa
