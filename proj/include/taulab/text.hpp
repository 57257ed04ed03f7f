#pragma once

// Text forms of orders, elements and cuts.
//
//   order := Z | Q | lex(order,order) | sum(order,order) | rev(order)
//   elem  := integer | p/q | (elem,elem) | left(elem) | right(elem)
//   cut   := inL(elem) | surd(p,q,r,s) | topOfCopy(elem) | seam | elem
//
// Errors are ParseError with a 1-based column.

#include "taulab/completion.hpp"

#include <string_view>

namespace taulab {

OrderExpr parse_order(std::string_view text);
Elem parse_elem(const OrderExpr& order, std::string_view text);
/// A bare element literal is read as inL(elem).
CutPoint parse_cut(const OrderExpr& order, std::string_view text);

}  // namespace taulab
