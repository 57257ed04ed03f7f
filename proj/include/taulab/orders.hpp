#pragma once

// Symbolic linear orders built from Z and Q, their elements and automorphisms.
//
// Lex(A, B) is "B-many copies of A": an element is a pair (major in A, minor
// in B) and pairs compare by the minor coordinate first, then the major one.
// This is the anti-lexicographic (ordinal product) convention, so lex(Z,Z)
// is Z copies of Z laid out along Z.

#include "taulab/numeric.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taulab {

class OrderExpr {
 public:
  enum class Kind { Z, Q, Lex, Sum, Reverse };

  static OrderExpr integers();
  static OrderExpr rationals();
  static OrderExpr lex(OrderExpr major, OrderExpr minor);
  static OrderExpr sum(OrderExpr left, OrderExpr right);
  static OrderExpr reverse(OrderExpr inner);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const OrderExpr& major() const;
  const OrderExpr& minor() const;
  const OrderExpr& left() const;
  const OrderExpr& right() const;
  const OrderExpr& inner() const;

  /// True when a Sum node occurs anywhere in the expression.
  bool contains_sum() const;

  /// Canonical text in the expression grammar, e.g. "lex(Z,Z)".
  std::string to_string() const;

  friend bool operator==(const OrderExpr& a, const OrderExpr& b);

 private:
  struct Node;
  explicit OrderExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const OrderExpr& child(Kind expected, std::size_t i) const;

  std::shared_ptr<const Node> node_;
};

enum class Side { Left, Right };

/// An element of an OrderExpr. Values are immutable and carry their order.
class Elem {
 public:
  static Elem integer(Integer v);
  static Elem rational(Rational v);
  static Elem pair(const OrderExpr& lex, Elem major, Elem minor);
  static Elem left(const OrderExpr& sum, Elem inner);
  static Elem right(const OrderExpr& sum, Elem inner);
  static Elem reversed(const OrderExpr& rev, Elem inner);

  const OrderExpr& order() const;

  const Integer& as_integer() const;
  const Rational& as_rational() const;
  const Elem& major() const;
  const Elem& minor() const;
  Side side() const;
  /// The wrapped element of a Sum or Reverse value.
  const Elem& inner() const;

  std::string to_string() const;

  friend bool operator==(const Elem& a, const Elem& b);

 private:
  struct Node;
  explicit Elem(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws OrderMismatch unless x is an element of order.
void require_member(const OrderExpr& order, const Elem& x);

std::strong_ordering cmp(const OrderExpr& order, const Elem& x, const Elem& y);
std::strong_ordering cmp(const Elem& x, const Elem& y);

struct ElemLess {
  bool operator()(const Elem& a, const Elem& b) const { return cmp(a, b) < 0; }
};

/// Some x with lo < x < hi, or nullopt if the interval is empty.
/// Throws EmptyInterval when lo >= hi.
std::optional<Elem> element_between(const OrderExpr& order, const Elem& lo, const Elem& hi);

/// A fixed, canonical element of the order (0, (0,0), left(0), ...).
Elem some_element(const OrderExpr& order);
/// Some element strictly above / below x; every supported order lacks endpoints.
Elem element_above(const Elem& x);
Elem element_below(const Elem& x);
/// Immediate successor / predecessor in the order, when one exists.
std::optional<Elem> successor(const Elem& x);
std::optional<Elem> predecessor(const Elem& x);

/// x -> slope * x + offset on Q, slope > 0.
struct Affine {
  Rational slope;
  Rational offset;

  Rational operator()(const Rational& x) const { return slope * x + offset; }
  Affine inverse() const;
  friend bool operator==(const Affine&, const Affine&) = default;
};

class Automorphism {
 public:
  enum class Kind { Identity, Shift, Translate, PiecewiseLinear, LexMap, Composite, Reversed };

  struct Override;

  static Automorphism identity(const OrderExpr& order);
  /// x -> x + k on Z.
  static Automorphism shift(Integer k);
  /// x -> x + q on Q.
  static Automorphism translate(Rational q);
  /// Continuous piecewise-affine map on Q with rational breakpoints.
  /// pieces.size() == breakpoints.size() + 1; piece i applies below breakpoint i.
  static Automorphism piecewise_linear(std::vector<Rational> breakpoints, std::vector<Affine> pieces);
  static Automorphism affine(Rational slope, Rational offset);
  /// (a, b) -> (g_b(a), minor(b)) where g_b is the override for copy b, or default_major.
  static Automorphism lex_map(const OrderExpr& lex, Automorphism minor, std::vector<Override> overrides,
                              Automorphism default_major);
  /// parts[0] o parts[1] o ... ; the last part is applied first.
  static Automorphism composite(std::vector<Automorphism> parts);
  /// An automorphism of inner, acting on rev(inner).
  static Automorphism reversed(const OrderExpr& rev, Automorphism inner);

  const OrderExpr& order() const;
  Kind kind() const;

  const Integer& shift_amount() const;
  const Rational& translation() const;
  const std::vector<Rational>& breakpoints() const;
  const std::vector<Affine>& pieces() const;
  const Automorphism& minor_map() const;
  const std::vector<Override>& overrides() const;
  const Automorphism& default_major() const;
  const std::vector<Automorphism>& parts() const;
  const Automorphism& inner() const;

  /// The major map used on copy `minor` of a LexMap.
  const Automorphism& major_map_for(const Elem& minor) const;
  /// Index of the piece of a PiecewiseLinear map that applies at x.
  std::size_t piece_index(const Rational& x) const;

  std::string to_string() const;

 private:
  struct Node;
  explicit Automorphism(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Automorphism::Override {
  Elem minor;
  Automorphism major;
};

Elem apply(const Automorphism& f, const Elem& x);
Automorphism inverse(const Automorphism& f);
/// f o g: apply(compose(f, g), x) == apply(f, apply(g, x)).
Automorphism compose(const Automorphism& f, const Automorphism& g);

/// An automorphism f of order with f(x) == y. Throws UnsupportedOrder for Sum.
Automorphism automorphism_moving(const OrderExpr& order, const Elem& x, const Elem& y);

// ---------------------------------------------------------------------------

struct OrderExpr::Node {
  Kind kind;
  std::vector<OrderExpr> children;
};

struct LexValue {
  Elem major;
  Elem minor;
};
struct SumValue {
  Side side;
  Elem inner;
};
struct RevValue {
  Elem inner;
};

struct Elem::Node {
  OrderExpr order;
  std::variant<Integer, Rational, LexValue, SumValue, RevValue> value;
};

struct Automorphism::Node {
  OrderExpr order;
  Kind kind;
  Integer shift;
  Rational translation;
  std::vector<Rational> breakpoints;
  std::vector<Affine> pieces;
  std::vector<Automorphism> maps;  // LexMap: {minor, default}; Composite: parts; Reversed: {inner}
  std::vector<Override> overrides;
};

}  // namespace taulab
