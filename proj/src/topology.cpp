#include "taulab/topology.hpp"

#include "taulab/error.hpp"

#include <algorithm>

namespace taulab {

void require_topology_order(const OrderExpr& order) {
  if (order.contains_sum()) {
    throw Error(ErrorKind::UnsupportedOrder,
                order.to_string() + ": sum orders are not accepted by the topology layer; give a homogeneous form");
  }
}

namespace {

void require_same(const OrderExpr& a, const OrderExpr& b) {
  if (!(a == b)) throw Error(ErrorKind::OrderMismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace

// ---- Point --------------------------------------------------------------------------

const Elem& Point::elem() const {
  if (!x_) throw Error(ErrorKind::InvalidArgument, "the bottom point is not an element of L");
  return *x_;
}

bool operator==(const Point& a, const Point& b) { return cmp_point(a, b) == 0; }

std::strong_ordering cmp_point(const Point& a, const Point& b) {
  require_same(a.order(), b.order());
  if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() <=> !b.is_bottom();
  return cmp(a.elem(), b.elem());
}

// ---- BasicOpen ----------------------------------------------------------------------

BasicOpen BasicOpen::empty(const OrderExpr& order) {
  require_topology_order(order);
  return BasicOpen(Kind::Empty, order, std::nullopt);
}

BasicOpen BasicOpen::full(const OrderExpr& order) {
  require_topology_order(order);
  return BasicOpen(Kind::Full, order, std::nullopt);
}

BasicOpen BasicOpen::left_ray(CutPoint a) {
  require_topology_order(a.order());
  OrderExpr o = a.order();
  return BasicOpen(Kind::LeftRay, std::move(o), std::move(a));
}

BasicOpen BasicOpen::punctured_ray(CutPoint b) {
  require_topology_order(b.order());
  OrderExpr o = b.order();
  return BasicOpen(Kind::PuncturedRay, std::move(o), std::move(b));
}

const CutPoint& BasicOpen::cut() const {
  if (!cut_) throw Error(ErrorKind::InvalidArgument, to_string() + " has no cut");
  return *cut_;
}

std::string BasicOpen::to_string() const {
  switch (kind_) {
    case Kind::Empty: return "empty";
    case Kind::Full: return "full";
    case Kind::LeftRay: return "leftRay(" + cut_->to_string() + ")";
    case Kind::PuncturedRay: return "puncturedRay(" + cut_->to_string() + ")";
  }
  return "?";
}

bool operator==(const BasicOpen& a, const BasicOpen& b) {
  if (a.kind_ != b.kind_ || !(a.order_ == b.order_)) return false;
  return !a.is_ray() || *a.cut_ == *b.cut_;
}

bool mem(const Point& p, const BasicOpen& o) {
  require_same(p.order(), o.order());
  switch (o.kind()) {
    case BasicOpen::Kind::Empty: return false;
    case BasicOpen::Kind::Full: return true;
    case BasicOpen::Kind::LeftRay: return p.is_bottom() || cmp_cut(CutPoint::in_l(p.elem()), o.cut()) < 0;
    case BasicOpen::Kind::PuncturedRay: return !p.is_bottom() && cmp_cut(CutPoint::in_l(p.elem()), o.cut()) < 0;
  }
  return false;
}

bool basic_subset(const BasicOpen& o1, const BasicOpen& o2) {
  using K = BasicOpen::Kind;
  require_same(o1.order(), o2.order());
  if (o1.kind() == K::Empty || o2.kind() == K::Full) return true;
  // Rays are nonempty and never all of L_z.
  if (o1.kind() == K::Full || o2.kind() == K::Empty) return false;
  if (o1.kind() == K::LeftRay && o2.kind() == K::PuncturedRay) return false;
  return cmp_cut(o1.cut(), o2.cut()) <= 0;
}

// ---- PerturbedOpen ----------------------------------------------------------------------

namespace {

void sort_unique(std::vector<Point>& v) {
  std::sort(v.begin(), v.end(), PointLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p, PointLess{});
}

// L-elements x with lo <= x < hi, where lo = InL(start); nullopt when there are
// infinitely many or more than `limit`.
std::optional<std::vector<Elem>> finite_run(const Elem& start, const CutPoint& hi, std::size_t limit) {
  std::vector<Elem> out;
  Elem x = start;
  while (cmp_cut(CutPoint::in_l(x), hi) < 0) {
    if (out.size() >= limit) return std::nullopt;
    out.push_back(x);
    auto next = successor(x);
    if (!next) return std::nullopt;
    x = *next;
  }
  return out;
}

}  // namespace

PerturbedOpen::PerturbedOpen(BasicOpen base, std::vector<Point> added, std::vector<Point> removed)
    : base_(std::move(base)), added_(std::move(added)), removed_(std::move(removed)) {
  for (const auto& p : added_) require_same(p.order(), base_.order());
  for (const auto& p : removed_) require_same(p.order(), base_.order());
  canonicalize();
}

void PerturbedOpen::canonicalize() {
  sort_unique(added_);
  sort_unique(removed_);
  const BasicOpen base = base_;
  const std::vector<Point> add = added_;
  const std::vector<Point> rem = removed_;
  auto in_w = [&](const Point& p) { return !contains(rem, p) && (contains(add, p) || mem(p, base)); };

  std::vector<Point> touched = add;
  touched.insert(touched.end(), rem.begin(), rem.end());
  sort_unique(touched);

  auto diff_against = [&](const BasicOpen& ray, const std::vector<Point>& points) {
    std::pair<std::vector<Point>, std::vector<Point>> d;
    for (const auto& p : points) {
      const bool want = in_w(p);
      const bool has = mem(p, ray);
      if (want && !has) d.first.push_back(p);
      if (!want && has) d.second.push_back(p);
    }
    return d;
  };

  if (!base.is_ray()) {
    std::tie(added_, removed_) = diff_against(base, touched);
    return;
  }

  const BasicOpen::Kind kind = in_w(Point::bottom(base.order())) ? BasicOpen::Kind::LeftRay
                                                                 : BasicOpen::Kind::PuncturedRay;
  auto make_ray = [&](const CutPoint& c) {
    return kind == BasicOpen::Kind::LeftRay ? BasicOpen::left_ray(c) : BasicOpen::punctured_ray(c);
  };

  std::vector<CutPoint> candidates{base.cut()};
  for (const auto& p : touched) {
    if (p.is_bottom()) continue;
    candidates.push_back(CutPoint::in_l(p.elem()));
    if (auto s = successor(p.elem())) candidates.push_back(CutPoint::in_l(*s));
  }
  std::sort(candidates.begin(), candidates.end(), CutLess{});
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Point> l_points;
  for (const auto& p : touched) {
    if (!p.is_bottom()) l_points.push_back(p);
  }
  const std::size_t limit = 2 * touched.size() + 2;

  std::optional<BasicOpen> best;
  std::pair<std::vector<Point>, std::vector<Point>> best_diff;
  for (const auto& a : candidates) {
    // Moving the cut from base.cut() to a changes membership on the L-points in
    // between; only finitely many such moves can beat the base itself.
    std::vector<Point> points = l_points;
    const auto order_ab = cmp_cut(a, base.cut());
    if (order_ab != 0) {
      const CutPoint& lo = order_ab < 0 ? a : base.cut();
      const CutPoint& hi = order_ab < 0 ? base.cut() : a;
      if (lo.is_gap()) continue;
      auto run = finite_run(lo.elem(), hi, limit);
      if (!run) continue;
      for (auto& x : *run) points.push_back(Point::in(std::move(x)));
      sort_unique(points);
    }
    BasicOpen ray = make_ray(a);
    auto d = diff_against(ray, points);
    if (!best || d.first.size() + d.second.size() < best_diff.first.size() + best_diff.second.size()) {
      best = ray;
      best_diff = std::move(d);
    }
  }
  base_ = *best;
  added_ = std::move(best_diff.first);
  removed_ = std::move(best_diff.second);
}

std::string PerturbedOpen::to_string() const {
  std::string out = base_.to_string();
  auto list = [](const std::vector<Point>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s + "}";
  };
  if (!added_.empty()) out += " + " + list(added_);
  if (!removed_.empty()) out += " - " + list(removed_);
  return out;
}

bool operator==(const PerturbedOpen& a, const PerturbedOpen& b) {
  return a.base_ == b.base_ && a.added_ == b.added_ && a.removed_ == b.removed_;
}

bool mem(const Point& p, const PerturbedOpen& w) {
  if (contains(w.removed(), p)) return false;
  return contains(w.added(), p) || mem(p, w.base());
}

PerturbedOpen perm_image(const FinitePerm& p, const PerturbedOpen& w) {
  require_same(p.order(), w.order());
  const FinitePerm inv = p.inverse();
  std::vector<Point> points = w.added();
  points.insert(points.end(), w.removed().begin(), w.removed().end());
  for (auto& x : p.support()) points.push_back(Point::in(std::move(x)));
  sort_unique(points);

  std::vector<Point> added, removed;
  for (const auto& y : points) {
    // y is in p[w] iff its preimage is in w.
    const Point pre = y.is_bottom() ? y : Point::in(inv(y.elem()));
    const bool want = mem(pre, w);
    const bool has = mem(y, w.base());
    if (want && !has) added.push_back(y);
    if (!want && has) removed.push_back(y);
  }
  return PerturbedOpen(w.base(), std::move(added), std::move(removed));
}

PerturbedOpen perm_image_open(const FinitePerm& p, const BasicOpen& o) { return perm_image(p, PerturbedOpen(o)); }

// ---- TopDescriptor ----------------------------------------------------------------------

TopDescriptor TopDescriptor::tau_c(CutPoint c) {
  require_topology_order(c.order());
  TopDescriptor t(Kind::TauC, c.order());
  t.cut_ = std::move(c);
  return t;
}

TopDescriptor TopDescriptor::tau_arrow(const OrderExpr& order) {
  require_topology_order(order);
  return TopDescriptor(Kind::TauArrow, order);
}

TopDescriptor TopDescriptor::tau_arrow_all_punct(const OrderExpr& order) {
  require_topology_order(order);
  return TopDescriptor(Kind::TauArrowAllPunct, order);
}

TopDescriptor TopDescriptor::perm_image(FinitePerm p, const TopDescriptor& base) {
  require_same(p.order(), base.order());
  TopDescriptor t(Kind::PermImage, base.order());
  t.perm_ = std::make_shared<const FinitePerm>(std::move(p));
  t.base_ = std::make_shared<const TopDescriptor>(base);
  return t;
}

const CutPoint& TopDescriptor::cut() const {
  if (!cut_) throw Error(ErrorKind::InvalidArgument, to_string() + " has no cut");
  return *cut_;
}

const FinitePerm& TopDescriptor::perm() const {
  if (!perm_) throw Error(ErrorKind::InvalidArgument, to_string() + " is not a permutation image");
  return *perm_;
}

const TopDescriptor& TopDescriptor::base() const {
  if (!base_) throw Error(ErrorKind::InvalidArgument, to_string() + " is not a permutation image");
  return *base_;
}

std::string TopDescriptor::to_string() const {
  switch (kind_) {
    case Kind::TauC: return "tau(" + cut_->to_string() + ")";
    case Kind::TauArrow: return "tauArrow";
    case Kind::TauArrowAllPunct: return "tauArrowAllPunct";
    case Kind::PermImage: return perm_->to_string() + "[" + base_->to_string() + "]";
  }
  return "?";
}

bool operator==(const TopDescriptor& a, const TopDescriptor& b) {
  if (a.kind_ != b.kind_ || !(a.order_ == b.order_)) return false;
  switch (a.kind_) {
    case TopDescriptor::Kind::TauC: return *a.cut_ == *b.cut_;
    case TopDescriptor::Kind::PermImage: return *a.perm_ == *b.perm_ && *a.base_ == *b.base_;
    default: return true;
  }
}

bool in_topology(const BasicOpen& o, const TopDescriptor& t) {
  require_same(o.order(), t.order());
  const bool punctured = o.kind() == BasicOpen::Kind::PuncturedRay;
  switch (t.kind()) {
    case TopDescriptor::Kind::TauC: return !punctured || cmp_cut(o.cut(), t.cut()) <= 0;
    case TopDescriptor::Kind::TauArrow: return !punctured;
    case TopDescriptor::Kind::TauArrowAllPunct: return true;
    case TopDescriptor::Kind::PermImage: return in_topology(PerturbedOpen(o), t);
  }
  return false;
}

bool in_topology(const PerturbedOpen& w, const TopDescriptor& t) {
  require_same(w.order(), t.order());
  if (t.kind() == TopDescriptor::Kind::PermImage) {
    return in_topology(perm_image(t.perm().inverse(), w), t.base());
  }
  return w.is_pure() && in_topology(w.base(), t);
}

// ---- comparison, joins and meets ------------------------------------------------------------

TopLeq top_leq(const CutPoint& c1, const CutPoint& c2) {
  const auto c = cmp_cut(c1, c2);
  if (c == 0) return {TopLeq::Verdict::Equal, std::nullopt, std::nullopt};
  if (c < 0) return {TopLeq::Verdict::StrictlyLess, BasicOpen::punctured_ray(c2), witness_m2(c1, c2)};
  return {TopLeq::Verdict::NotLeq, BasicOpen::punctured_ray(c1), witness_m2(c2, c1)};
}

namespace {

void require_common_order(std::span<const CutPoint> a) {
  if (a.empty()) throw Error(ErrorKind::EmptyFamily, "empty family of cuts");
  for (const auto& c : a) require_same(c.order(), a.front().order());
  require_topology_order(a.front().order());
}

void require_certified(const SequenceFamily& s, std::uint64_t seed) {
  SequenceReport r = verify_sequence_family(s, seed);
  if (!r.passed) {
    std::string what = "sequence '" + s.label + "' " + r.status();
    if (r.index) what += " at index " + std::to_string(*r.index);
    if (r.witness) what += " witness " + r.witness->to_string();
    throw Error(ErrorKind::UncertifiedLimit, what);
  }
}

}  // namespace

TopDescriptor join(std::span<const CutPoint> a) {
  require_common_order(a);
  return TopDescriptor::tau_c(sup_finite(a));
}

TopDescriptor join(const SequenceFamily& s, std::uint64_t seed) {
  require_certified(s, seed);
  return TopDescriptor::tau_c(s.direction == Direction::Increasing ? s.declared_limit : s.term(0));
}

TopDescriptor join(const AllOfL& all) { return TopDescriptor::tau_arrow_all_punct(all.order); }

TopDescriptor meet(std::span<const CutPoint> a) {
  require_common_order(a);
  return TopDescriptor::tau_c(inf_finite(a));
}

TopDescriptor meet(const SequenceFamily& s, std::uint64_t seed) {
  require_certified(s, seed);
  return TopDescriptor::tau_c(s.direction == Direction::Decreasing ? s.declared_limit : s.term(0));
}

TopDescriptor meet(const AllOfL& all) { return TopDescriptor::tau_arrow(all.order); }

namespace {

void require_in_sandwich(const CutPoint& b, const CutPoint& lo, const CutPoint& hi) {
  if (cmp_cut(b, lo) <= 0 || cmp_cut(b, hi) > 0) {
    throw Error(ErrorKind::OutOfSandwich,
                b.to_string() + " is not in (" + lo.to_string() + ", " + hi.to_string() + "]");
  }
}

}  // namespace

TopDescriptor saturate_sandwich(const Elem& x1, const Elem& x2, std::span<const CutPoint> b) {
  const CutPoint lo = CutPoint::in_l(x1);
  const CutPoint hi = CutPoint::in_l(x2);
  for (const auto& c : b) require_in_sandwich(c, lo, hi);
  if (b.empty()) return TopDescriptor::tau_c(lo);
  return TopDescriptor::tau_c(sup_finite(b));
}

TopDescriptor saturate_sandwich(const Elem& x1, const Elem& x2, const SequenceFamily& b, std::uint64_t seed) {
  const CutPoint lo = CutPoint::in_l(x1);
  const CutPoint hi = CutPoint::in_l(x2);
  const CutPoint first = b.term(0);
  require_in_sandwich(first, lo, hi);
  require_certified(b, seed);
  if (b.direction == Direction::Increasing) {
    // Terms climb towards the limit, which must itself stay below x2.
    if (cmp_cut(b.declared_limit, hi) > 0) require_in_sandwich(b.declared_limit, lo, hi);
    return TopDescriptor::tau_c(b.declared_limit);
  }
  if (cmp_cut(b.declared_limit, lo) < 0) {
    throw Error(ErrorKind::OutOfSandwich, "sequence '" + b.label + "' descends below " + lo.to_string());
  }
  return TopDescriptor::tau_c(first);
}

// ---- sampling ---------------------------------------------------------------------------

BasicOpen sample_basic_open(const CompletionSpec& spec, Rng& rng, const SampleShape& shape) {
  switch (rng.uniform(0, 9)) {
    case 0: return BasicOpen::empty(spec.order);
    case 1: return BasicOpen::full(spec.order);
    default: break;
  }
  CutPoint c = sample_cut(spec, rng, shape);
  return rng.chance(1, 2) ? BasicOpen::left_ray(std::move(c)) : BasicOpen::punctured_ray(std::move(c));
}

BasicOpen sample_member(const CompletionSpec& spec, const CutPoint& c, Rng& rng, const SampleShape& shape) {
  const std::int64_t roll = rng.uniform(0, 19);
  if (roll == 0) return BasicOpen::empty(spec.order);
  if (roll == 1) return BasicOpen::full(spec.order);
  if (roll < 10) return BasicOpen::left_ray(sample_cut(spec, rng, shape));
  if (roll == 10) return BasicOpen::punctured_ray(c);
  // A punctured ray at or below c.
  auto below = sample_elem_between(spec, std::nullopt, c, rng, shape);
  CutPoint lo = CutPoint::in_l(*below);
  if (rng.chance(1, 2)) return BasicOpen::punctured_ray(lo);
  auto b = sample_cut_between(spec, lo, c, rng, shape);
  return BasicOpen::punctured_ray(b ? *b : lo);
}

Point sample_point(const CompletionSpec& spec, Rng& rng, const SampleShape& shape) {
  if (rng.chance(1, 8)) return Point::bottom(spec.order);
  return Point::in(sample_elem(spec.order, rng, shape));
}

}  // namespace taulab
