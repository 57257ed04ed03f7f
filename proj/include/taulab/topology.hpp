#pragma once

// The topologies tau_c on L_z = {z} + L. Every member of tau_c is one of the
// basic opens below, so all reasoning happens on those:
//
//   tau_c = { empty, L_z } + { [z,a) : a in L~ } + { (z,b) : b <= c }
//
// Orders containing a Sum node are rejected by this layer.

#include "taulab/completion.hpp"
#include "taulab/perm.hpp"
#include "taulab/sampling.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace taulab {

/// Throws UnsupportedOrder for orders this layer does not accept.
void require_topology_order(const OrderExpr& order);

/// A point of L_z: the bottom z (below all of L) or an element of L.
class Point {
 public:
  static Point bottom(const OrderExpr& order) { return Point(order, std::nullopt); }
  static Point in(Elem x) {
    OrderExpr o = x.order();
    return Point(std::move(o), std::move(x));
  }

  const OrderExpr& order() const { return order_; }
  bool is_bottom() const { return !x_; }
  const Elem& elem() const;

  std::string to_string() const { return x_ ? x_->to_string() : "z"; }
  friend bool operator==(const Point& a, const Point& b);

 private:
  Point(OrderExpr order, std::optional<Elem> x) : order_(std::move(order)), x_(std::move(x)) {}

  OrderExpr order_;
  std::optional<Elem> x_;
};

std::strong_ordering cmp_point(const Point& a, const Point& b);

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return cmp_point(a, b) < 0; }
};

class BasicOpen {
 public:
  enum class Kind { Empty, Full, LeftRay, PuncturedRay };

  static BasicOpen empty(const OrderExpr& order);
  static BasicOpen full(const OrderExpr& order);
  /// [z, a)
  static BasicOpen left_ray(CutPoint a);
  /// (z, b)
  static BasicOpen punctured_ray(CutPoint b);

  Kind kind() const { return kind_; }
  bool is_ray() const { return kind_ == Kind::LeftRay || kind_ == Kind::PuncturedRay; }
  const OrderExpr& order() const { return order_; }
  const CutPoint& cut() const;

  std::string to_string() const;
  friend bool operator==(const BasicOpen& a, const BasicOpen& b);

 private:
  BasicOpen(Kind kind, OrderExpr order, std::optional<CutPoint> cut)
      : kind_(kind), order_(std::move(order)), cut_(std::move(cut)) {}

  Kind kind_;
  OrderExpr order_;
  std::optional<CutPoint> cut_;
};

bool mem(const Point& p, const BasicOpen& o);
/// Extensional inclusion.
bool basic_subset(const BasicOpen& o1, const BasicOpen& o2);

/// base with finitely many points added and removed; the set (base + added) - removed.
///
/// Always canonical: added is disjoint from base, removed lies inside base, and
/// among ray bases the one needing the fewest modifications is chosen (ties go
/// to the smaller cut). Two values are extensionally equal iff they compare equal.
class PerturbedOpen {
 public:
  explicit PerturbedOpen(BasicOpen base) : base_(std::move(base)) {}
  PerturbedOpen(BasicOpen base, std::vector<Point> added, std::vector<Point> removed);

  const BasicOpen& base() const { return base_; }
  const std::vector<Point>& added() const { return added_; }
  const std::vector<Point>& removed() const { return removed_; }
  bool is_pure() const { return added_.empty() && removed_.empty(); }
  const OrderExpr& order() const { return base_.order(); }

  std::string to_string() const;
  friend bool operator==(const PerturbedOpen& a, const PerturbedOpen& b);

 private:
  void canonicalize();

  BasicOpen base_;
  std::vector<Point> added_;    // sorted, unique
  std::vector<Point> removed_;  // sorted, unique
};

bool mem(const Point& p, const PerturbedOpen& w);

/// p[O] as a perturbed open.
PerturbedOpen perm_image_open(const FinitePerm& p, const BasicOpen& o);
PerturbedOpen perm_image(const FinitePerm& p, const PerturbedOpen& w);

class TopDescriptor {
 public:
  enum class Kind { TauC, TauArrow, TauArrowAllPunct, PermImage };

  static TopDescriptor tau_c(CutPoint c);
  /// The rays [z,a) plus empty and L_z: the meet of all tau_x, x in L.
  static TopDescriptor tau_arrow(const OrderExpr& order);
  /// tau_arrow plus every punctured ray: the union of all tau_x, x in L.
  static TopDescriptor tau_arrow_all_punct(const OrderExpr& order);
  static TopDescriptor perm_image(FinitePerm p, const TopDescriptor& base);

  Kind kind() const { return kind_; }
  const OrderExpr& order() const { return order_; }
  const CutPoint& cut() const;
  const FinitePerm& perm() const;
  const TopDescriptor& base() const;

  std::string to_string() const;
  friend bool operator==(const TopDescriptor& a, const TopDescriptor& b);

 private:
  TopDescriptor(Kind kind, OrderExpr order) : kind_(kind), order_(std::move(order)) {}

  Kind kind_;
  OrderExpr order_;
  std::optional<CutPoint> cut_;
  std::shared_ptr<const FinitePerm> perm_;
  std::shared_ptr<const TopDescriptor> base_;
};

bool in_topology(const BasicOpen& o, const TopDescriptor& t);
/// For PermImage(p, base): pulls w back along p and asks base. Other
/// topologies contain w only when it is a plain basic open.
bool in_topology(const PerturbedOpen& w, const TopDescriptor& t);

struct TopLeq {
  enum class Verdict { StrictlyLess, Equal, NotLeq };
  Verdict verdict;
  /// In the larger topology but not the smaller one.
  std::optional<BasicOpen> witness;
  /// An L-point inside the witness and outside the corresponding ray of the smaller topology.
  std::optional<Elem> sep;
};

/// tau_{c1} vs tau_{c2}; mirrors cmp_cut.
TopLeq top_leq(const CutPoint& c1, const CutPoint& c2);

/// Marker for the family of all tau_x with x ranging over L.
struct AllOfL {
  OrderExpr order;
};

/// The topology generated by the union of tau_c, c in A: tau_{sup A}.
TopDescriptor join(std::span<const CutPoint> a);
/// Throws UncertifiedLimit unless the sequence verifies.
TopDescriptor join(const SequenceFamily& s, std::uint64_t seed = 0);
TopDescriptor join(const AllOfL& all);
/// The intersection of tau_c, c in A: tau_{inf A}.
TopDescriptor meet(std::span<const CutPoint> a);
TopDescriptor meet(const SequenceFamily& s, std::uint64_t seed = 0);
TopDescriptor meet(const AllOfL& all);

/// The topology generated by tau_{x1} and the punctured rays (z,b), b in B,
/// where every b satisfies x1 < b <= x2. Throws OutOfSandwich otherwise.
TopDescriptor saturate_sandwich(const Elem& x1, const Elem& x2, std::span<const CutPoint> b);
TopDescriptor saturate_sandwich(const Elem& x1, const Elem& x2, const SequenceFamily& b, std::uint64_t seed = 0);

/// A random basic open: empty, full or a ray at a sampled cut.
BasicOpen sample_basic_open(const CompletionSpec& spec, Rng& rng, const SampleShape& shape = {});
/// A random member of tau_c.
BasicOpen sample_member(const CompletionSpec& spec, const CutPoint& c, Rng& rng, const SampleShape& shape = {});
/// z with probability 1/8, otherwise a sampled element.
Point sample_point(const CompletionSpec& spec, Rng& rng, const SampleShape& shape = {});

}  // namespace taulab
