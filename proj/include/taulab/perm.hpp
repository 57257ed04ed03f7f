#pragma once

// Finite-support permutations of an order's elements. The bottom point z of
// L_z is never moved.

#include "taulab/orders.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace taulab {

class FinitePerm {
 public:
  static FinitePerm identity(const OrderExpr& order);
  static FinitePerm swap(const Elem& a, const Elem& b);
  /// Disjoint cycles (a0 a1 ... ak): a0 -> a1 -> ... -> ak -> a0.
  static FinitePerm from_cycles(const OrderExpr& order, const std::vector<std::vector<Elem>>& cycles);
  /// Product of the transpositions (a_i b_i); the pairs must be pairwise disjoint.
  static FinitePerm pair_swaps(const OrderExpr& order, const std::vector<std::pair<Elem, Elem>>& pairs);

  const OrderExpr& order() const { return order_; }
  bool is_identity() const { return moved_.empty(); }
  /// Moved points in ascending order.
  std::vector<Elem> support() const;

  Elem operator()(const Elem& x) const;
  FinitePerm inverse() const;

  /// Cycle notation, e.g. "(1 2)(3 4)", or "id".
  std::string to_string() const;

  friend bool operator==(const FinitePerm& a, const FinitePerm& b);

 private:
  FinitePerm(OrderExpr order, std::map<Elem, Elem, ElemLess> moved)
      : order_(std::move(order)), moved_(std::move(moved)) {}

  OrderExpr order_;
  std::map<Elem, Elem, ElemLess> moved_;  // only points with p(x) != x
  friend FinitePerm compose(const FinitePerm& p, const FinitePerm& q);
};

/// p o q.
FinitePerm compose(const FinitePerm& p, const FinitePerm& q);

}  // namespace taulab
