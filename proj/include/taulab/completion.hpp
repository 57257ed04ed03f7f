#pragma once

// Dedekind completion of the supported orders: cut points (elements of the
// order plus explicitly described gaps), their comparison, the minimality
// witnesses and the unique extension of an automorphism to the completion.

#include "taulab/orders.hpp"
#include "taulab/surd.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace taulab {

/// In lex(Z, M): the gap directly above every element of copy `minor_index`.
struct TopOfCopy {
  Elem minor_index;
};

/// In sum(A, B) with A lacking a maximum and B a minimum: the gap between the summands.
struct Seam {};

using GapDescriptor = std::variant<TopOfCopy, Surd, Seam>;

class CutPoint {
 public:
  static CutPoint in_l(Elem x);
  static CutPoint surd(Surd s);
  static CutPoint top_of_copy(const OrderExpr& lex, Elem minor_index);
  static CutPoint seam(const OrderExpr& sum);
  /// Validates that the gap variant belongs to the order.
  static CutPoint gap(const OrderExpr& order, GapDescriptor g);

  const OrderExpr& order() const { return order_; }
  bool is_gap() const { return std::holds_alternative<GapDescriptor>(value_); }
  const Elem& elem() const;
  const GapDescriptor& gap() const;

  /// The cut literal: inL(x), surd(p,q,r,s), topOfCopy(j) or seam.
  std::string to_string() const;

  friend bool operator==(const CutPoint& a, const CutPoint& b);

 private:
  CutPoint(OrderExpr order, std::variant<Elem, GapDescriptor> value)
      : order_(std::move(order)), value_(std::move(value)) {}

  OrderExpr order_;
  std::variant<Elem, GapDescriptor> value_;
};

std::strong_ordering cmp_cut(const CutPoint& c1, const CutPoint& c2);
bool is_gap(const CutPoint& c);

struct CutLess {
  bool operator()(const CutPoint& a, const CutPoint& b) const { return cmp_cut(a, b) < 0; }
};

enum class GapFamily { None, Surd, TopOfCopy, Seam };

struct CompletionSpec {
  OrderExpr order;
  GapFamily gap_family;
  bool is_complete;

  std::string describe() const;
};

/// Supported for Z, Q and lex(Z,Z); UnsupportedOrder otherwise.
CompletionSpec complete(const OrderExpr& order);

struct M1Witness {
  Elem below;
  Elem above_or_equal;
};

/// Elements of L with below <= c <= above_or_equal.
M1Witness witness_m1(const CutPoint& c);

/// Some x in L with c <= x < c2. Throws EmptyTrace unless c < c2.
Elem witness_m2(const CutPoint& c, const CutPoint& c2);

/// Some x in L with c1 < x < c2, or nullopt when none exists (e.g. consecutive integers).
std::optional<Elem> element_strictly_between(const CutPoint& c1, const CutPoint& c2);

CutPoint sup_finite(std::span<const CutPoint> cuts);
CutPoint inf_finite(std::span<const CutPoint> cuts);

/// The extension F of an automorphism f to the completion, F(c) = sup f[L ∩ (., c]].
class CompletionMap {
 public:
  explicit CompletionMap(Automorphism f) : f_(std::move(f)) {}

  const Automorphism& automorphism() const { return f_; }
  const OrderExpr& order() const { return f_.order(); }

  Elem operator()(const Elem& x) const { return apply(f_, x); }
  CutPoint operator()(const CutPoint& c) const;
  CompletionMap inverse() const { return CompletionMap(taulab::inverse(f_)); }

 private:
  Automorphism f_;
};

/// Throws UnsupportedOrder unless f acts on an order with a supported completion.
CompletionMap extend_automorphism(const Automorphism& f);

enum class Direction { Increasing, Decreasing };

/// A strictly monotone sequence of cuts with a claimed limit, checked up to a bound.
struct SequenceFamily {
  std::function<CutPoint(std::size_t)> term;
  Direction direction = Direction::Increasing;
  CutPoint declared_limit;
  std::size_t verification_bound = 1000;
  std::string label;
};

struct SequenceReport {
  bool passed = true;
  /// "monotone", "side" or "approach" when a check fails.
  std::string failed_check;
  std::optional<std::size_t> index;
  std::optional<CutPoint> witness;
  std::size_t terms_checked = 0;
  std::size_t approach_samples = 0;
  /// Limits are only ever certified up to verification_bound.
  std::string status() const { return passed ? "certified-to-bound" : "failed:" + failed_check; }
};

/// Checks the first N terms are strictly monotone and on the correct side of the
/// declared limit, then that each of `samples` seeded cuts strictly between term 0
/// and the limit is passed by some term below index N.
SequenceReport verify_sequence_family(const SequenceFamily& s, std::uint64_t seed = 0, std::size_t samples = 100);

}  // namespace taulab
