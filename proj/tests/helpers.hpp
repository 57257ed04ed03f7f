#pragma once

#include "taulab/completion.hpp"
#include "taulab/sampling.hpp"
#include "taulab/text.hpp"

namespace th {

using namespace taulab;

inline OrderExpr Zo() { return OrderExpr::integers(); }
inline OrderExpr Qo() { return OrderExpr::rationals(); }
inline OrderExpr LZZ() { return OrderExpr::lex(OrderExpr::integers(), OrderExpr::integers()); }

inline Elem z(long v) { return Elem::integer(v); }
inline Elem q(long num, long den = 1) { return Elem::rational(make_rational(num, den)); }
inline Elem zz(long major, long minor) { return Elem::pair(LZZ(), z(major), z(minor)); }

inline CutPoint in(const Elem& x) { return CutPoint::in_l(x); }
inline CutPoint sqrt2() { return CutPoint::surd(Surd(0, 1, 2, 1)); }
inline CutPoint top(long j) { return CutPoint::top_of_copy(LZZ(), z(j)); }

/// Q and lex(Z,Z), the two orders with gaps.
inline std::vector<OrderExpr> gapped_orders() { return {Qo(), LZZ()}; }
inline std::vector<OrderExpr> all_orders() { return {Zo(), Qo(), LZZ()}; }

}  // namespace th
