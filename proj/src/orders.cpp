#include "taulab/orders.hpp"

#include "taulab/error.hpp"

#include <algorithm>

namespace taulab {

// ---- OrderExpr -------------------------------------------------------------

OrderExpr OrderExpr::integers() {
  static const OrderExpr z(std::make_shared<const Node>(Node{Kind::Z, {}}));
  return z;
}

OrderExpr OrderExpr::rationals() {
  static const OrderExpr q(std::make_shared<const Node>(Node{Kind::Q, {}}));
  return q;
}

OrderExpr OrderExpr::lex(OrderExpr major, OrderExpr minor) {
  return OrderExpr(std::make_shared<const Node>(Node{Kind::Lex, {std::move(major), std::move(minor)}}));
}

OrderExpr OrderExpr::sum(OrderExpr left, OrderExpr right) {
  return OrderExpr(std::make_shared<const Node>(Node{Kind::Sum, {std::move(left), std::move(right)}}));
}

OrderExpr OrderExpr::reverse(OrderExpr inner) {
  return OrderExpr(std::make_shared<const Node>(Node{Kind::Reverse, {std::move(inner)}}));
}

OrderExpr::Kind OrderExpr::kind() const { return node_->kind; }

const OrderExpr& OrderExpr::child(Kind expected, std::size_t i) const {
  if (node_->kind != expected) {
    throw Error(ErrorKind::InvalidArgument, "order " + to_string() + " has no such component");
  }
  return node_->children[i];
}

const OrderExpr& OrderExpr::major() const { return child(Kind::Lex, 0); }
const OrderExpr& OrderExpr::minor() const { return child(Kind::Lex, 1); }
const OrderExpr& OrderExpr::left() const { return child(Kind::Sum, 0); }
const OrderExpr& OrderExpr::right() const { return child(Kind::Sum, 1); }
const OrderExpr& OrderExpr::inner() const { return child(Kind::Reverse, 0); }

bool OrderExpr::contains_sum() const {
  if (node_->kind == Kind::Sum) return true;
  return std::any_of(node_->children.begin(), node_->children.end(),
                     [](const OrderExpr& c) { return c.contains_sum(); });
}

std::string OrderExpr::to_string() const {
  switch (node_->kind) {
    case Kind::Z: return "Z";
    case Kind::Q: return "Q";
    case Kind::Lex: return "lex(" + major().to_string() + "," + minor().to_string() + ")";
    case Kind::Sum: return "sum(" + left().to_string() + "," + right().to_string() + ")";
    case Kind::Reverse: return "rev(" + inner().to_string() + ")";
  }
  return "?";
}

bool operator==(const OrderExpr& a, const OrderExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  return a.node_->children == b.node_->children;
}

// ---- Elem ------------------------------------------------------------------

Elem Elem::integer(Integer v) {
  return Elem(std::make_shared<const Node>(Node{OrderExpr::integers(), std::move(v)}));
}

Elem Elem::rational(Rational v) {
  v.canonicalize();
  return Elem(std::make_shared<const Node>(Node{OrderExpr::rationals(), std::move(v)}));
}

Elem Elem::pair(const OrderExpr& lex, Elem major, Elem minor) {
  require_member(lex.major(), major);
  require_member(lex.minor(), minor);
  return Elem(std::make_shared<const Node>(Node{lex, LexValue{std::move(major), std::move(minor)}}));
}

Elem Elem::left(const OrderExpr& sum, Elem inner) {
  require_member(sum.left(), inner);
  return Elem(std::make_shared<const Node>(Node{sum, SumValue{Side::Left, std::move(inner)}}));
}

Elem Elem::right(const OrderExpr& sum, Elem inner) {
  require_member(sum.right(), inner);
  return Elem(std::make_shared<const Node>(Node{sum, SumValue{Side::Right, std::move(inner)}}));
}

Elem Elem::reversed(const OrderExpr& rev, Elem inner) {
  require_member(rev.inner(), inner);
  return Elem(std::make_shared<const Node>(Node{rev, RevValue{std::move(inner)}}));
}

const OrderExpr& Elem::order() const { return node_->order; }

namespace {

template <class T>
const T& value_as(const std::variant<Integer, Rational, LexValue, SumValue, RevValue>& v, const char* what) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw Error(ErrorKind::InvalidArgument, std::string("element is not ") + what);
}

}  // namespace

const Integer& Elem::as_integer() const { return value_as<Integer>(node_->value, "an integer"); }
const Rational& Elem::as_rational() const { return value_as<Rational>(node_->value, "a rational"); }
const Elem& Elem::major() const { return value_as<LexValue>(node_->value, "a pair").major; }
const Elem& Elem::minor() const { return value_as<LexValue>(node_->value, "a pair").minor; }
Side Elem::side() const { return value_as<SumValue>(node_->value, "a sum element").side; }

const Elem& Elem::inner() const {
  if (const auto* s = std::get_if<SumValue>(&node_->value)) return s->inner;
  return value_as<RevValue>(node_->value, "a wrapped element").inner;
}

std::string Elem::to_string() const {
  switch (order().kind()) {
    case OrderExpr::Kind::Z: return taulab::to_string(as_integer());
    case OrderExpr::Kind::Q: return taulab::to_string(as_rational());
    case OrderExpr::Kind::Lex: return "(" + major().to_string() + "," + minor().to_string() + ")";
    case OrderExpr::Kind::Sum:
      return (side() == Side::Left ? "left(" : "right(") + inner().to_string() + ")";
    case OrderExpr::Kind::Reverse: return inner().to_string();
  }
  return "?";
}

bool operator==(const Elem& a, const Elem& b) {
  if (a.node_ == b.node_) return true;
  if (!(a.order() == b.order())) return false;
  return cmp(a.order(), a, b) == 0;
}

void require_member(const OrderExpr& order, const Elem& x) {
  if (!(x.order() == order)) {
    throw Error(ErrorKind::OrderMismatch,
                "element " + x.to_string() + " of " + x.order().to_string() + " used with " + order.to_string());
  }
}

// ---- comparison and neighbours -------------------------------------------------

namespace {

std::strong_ordering cmp_unchecked(const Elem& x, const Elem& y) {
  switch (x.order().kind()) {
    case OrderExpr::Kind::Z: return cmp(x.as_integer(), y.as_integer()) <=> 0;
    case OrderExpr::Kind::Q: return cmp(x.as_rational(), y.as_rational()) <=> 0;
    case OrderExpr::Kind::Lex: {
      auto c = cmp_unchecked(x.minor(), y.minor());
      return c != 0 ? c : cmp_unchecked(x.major(), y.major());
    }
    case OrderExpr::Kind::Sum:
      if (x.side() != y.side()) {
        return x.side() == Side::Left ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return cmp_unchecked(x.inner(), y.inner());
    case OrderExpr::Kind::Reverse: return cmp_unchecked(y.inner(), x.inner());
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering cmp(const OrderExpr& order, const Elem& x, const Elem& y) {
  require_member(order, x);
  require_member(order, y);
  return cmp_unchecked(x, y);
}

std::strong_ordering cmp(const Elem& x, const Elem& y) { return cmp(x.order(), x, y); }

Elem some_element(const OrderExpr& order) {
  switch (order.kind()) {
    case OrderExpr::Kind::Z: return Elem::integer(0);
    case OrderExpr::Kind::Q: return Elem::rational(0);
    case OrderExpr::Kind::Lex:
      return Elem::pair(order, some_element(order.major()), some_element(order.minor()));
    case OrderExpr::Kind::Sum: return Elem::left(order, some_element(order.left()));
    case OrderExpr::Kind::Reverse: return Elem::reversed(order, some_element(order.inner()));
  }
  throw Error(ErrorKind::UnsupportedOrder, order.to_string());
}

namespace {

Elem rewrap(const Elem& like, Elem inner) {
  const OrderExpr& o = like.order();
  switch (o.kind()) {
    case OrderExpr::Kind::Sum:
      return like.side() == Side::Left ? Elem::left(o, std::move(inner)) : Elem::right(o, std::move(inner));
    case OrderExpr::Kind::Reverse: return Elem::reversed(o, std::move(inner));
    default: throw Error(ErrorKind::InvalidArgument, "rewrap on unwrapped order");
  }
}

Elem step(const Elem& x, bool up) {
  const OrderExpr& o = x.order();
  switch (o.kind()) {
    case OrderExpr::Kind::Z: return Elem::integer(x.as_integer() + (up ? 1 : -1));
    case OrderExpr::Kind::Q: return Elem::rational(x.as_rational() + (up ? 1 : -1));
    case OrderExpr::Kind::Lex: return Elem::pair(o, step(x.major(), up), x.minor());
    case OrderExpr::Kind::Sum: return rewrap(x, step(x.inner(), up));
    case OrderExpr::Kind::Reverse: return rewrap(x, step(x.inner(), !up));
  }
  throw Error(ErrorKind::UnsupportedOrder, o.to_string());
}

std::optional<Elem> adjacent(const Elem& x, bool up) {
  const OrderExpr& o = x.order();
  switch (o.kind()) {
    case OrderExpr::Kind::Z: return step(x, up);
    case OrderExpr::Kind::Q: return std::nullopt;
    case OrderExpr::Kind::Lex: {
      // Copies have no endpoints, so a neighbour must lie in the same copy.
      auto m = adjacent(x.major(), up);
      if (!m) return std::nullopt;
      return Elem::pair(o, *m, x.minor());
    }
    case OrderExpr::Kind::Sum: {
      auto m = adjacent(x.inner(), up);
      if (!m) return std::nullopt;
      return rewrap(x, *m);
    }
    case OrderExpr::Kind::Reverse: {
      auto m = adjacent(x.inner(), !up);
      if (!m) return std::nullopt;
      return rewrap(x, *m);
    }
  }
  return std::nullopt;
}

std::optional<Elem> between_unchecked(const Elem& lo, const Elem& hi) {
  const OrderExpr& o = lo.order();
  switch (o.kind()) {
    case OrderExpr::Kind::Z:
      if (hi.as_integer() - lo.as_integer() >= 2) return Elem::integer(lo.as_integer() + 1);
      return std::nullopt;
    case OrderExpr::Kind::Q: return Elem::rational((lo.as_rational() + hi.as_rational()) / 2);
    case OrderExpr::Kind::Lex: {
      if (cmp_unchecked(lo.minor(), hi.minor()) == 0) {
        auto m = between_unchecked(lo.major(), hi.major());
        if (!m) return std::nullopt;
        return Elem::pair(o, *m, lo.minor());
      }
      if (auto copy = between_unchecked(lo.minor(), hi.minor())) return Elem::pair(o, lo.major(), *copy);
      return Elem::pair(o, step(lo.major(), true), lo.minor());
    }
    case OrderExpr::Kind::Sum:
      if (lo.side() != hi.side()) return rewrap(lo, step(lo.inner(), true));
      if (auto m = between_unchecked(lo.inner(), hi.inner())) return rewrap(lo, *m);
      return std::nullopt;
    case OrderExpr::Kind::Reverse:
      if (auto m = between_unchecked(hi.inner(), lo.inner())) return rewrap(lo, *m);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Elem element_above(const Elem& x) { return step(x, true); }
Elem element_below(const Elem& x) { return step(x, false); }
std::optional<Elem> successor(const Elem& x) { return adjacent(x, true); }
std::optional<Elem> predecessor(const Elem& x) { return adjacent(x, false); }

std::optional<Elem> element_between(const OrderExpr& order, const Elem& lo, const Elem& hi) {
  if (cmp(order, lo, hi) >= 0) {
    throw Error(ErrorKind::EmptyInterval, lo.to_string() + " is not below " + hi.to_string());
  }
  return between_unchecked(lo, hi);
}

// ---- Automorphism --------------------------------------------------------------

Affine Affine::inverse() const { return Affine{1 / slope, -offset / slope}; }

Automorphism Automorphism::identity(const OrderExpr& order) {
  Node n{order, Kind::Identity, 0, 0, {}, {}, {}, {}};
  return Automorphism(std::make_shared<const Node>(std::move(n)));
}

Automorphism Automorphism::shift(Integer k) {
  Node n{OrderExpr::integers(), Kind::Shift, std::move(k), 0, {}, {}, {}, {}};
  return Automorphism(std::make_shared<const Node>(std::move(n)));
}

Automorphism Automorphism::translate(Rational q) {
  q.canonicalize();
  Node n{OrderExpr::rationals(), Kind::Translate, 0, std::move(q), {}, {}, {}, {}};
  return Automorphism(std::make_shared<const Node>(std::move(n)));
}

Automorphism Automorphism::piecewise_linear(std::vector<Rational> breakpoints, std::vector<Affine> pieces) {
  if (pieces.size() != breakpoints.size() + 1) {
    throw Error(ErrorKind::InvalidArgument, "piecewise map needs one more piece than breakpoints");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw Error(ErrorKind::InvalidArgument, "breakpoints must be strictly ascending");
    }
  }
  for (const Affine& a : pieces) {
    if (sgn(a.slope) <= 0) throw Error(ErrorKind::InvalidArgument, "piece slopes must be positive");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i](breakpoints[i]) != pieces[i + 1](breakpoints[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "pieces disagree at breakpoint " + taulab::to_string(breakpoints[i]));
    }
  }
  Node n{OrderExpr::rationals(), Kind::PiecewiseLinear, 0, 0, std::move(breakpoints), std::move(pieces), {}, {}};
  return Automorphism(std::make_shared<const Node>(std::move(n)));
}

Automorphism Automorphism::affine(Rational slope, Rational offset) {
  return piecewise_linear({}, {Affine{std::move(slope), std::move(offset)}});
}

Automorphism Automorphism::lex_map(const OrderExpr& lex, Automorphism minor, std::vector<Override> overrides,
                                   Automorphism default_major) {
  if (!lex.is(OrderExpr::Kind::Lex)) throw Error(ErrorKind::UnsupportedOrder, "LexMap on " + lex.to_string());
  if (!(minor.order() == lex.minor()) || !(default_major.order() == lex.major())) {
    throw Error(ErrorKind::OrderMismatch, "LexMap components do not match " + lex.to_string());
  }
  for (const Override& ov : overrides) {
    require_member(lex.minor(), ov.minor);
    if (!(ov.major.order() == lex.major())) {
      throw Error(ErrorKind::OrderMismatch, "LexMap override does not act on " + lex.major().to_string());
    }
  }
  std::sort(overrides.begin(), overrides.end(),
            [](const Override& a, const Override& b) { return cmp(a.minor, b.minor) < 0; });
  for (std::size_t i = 0; i + 1 < overrides.size(); ++i) {
    if (overrides[i].minor == overrides[i + 1].minor) {
      throw Error(ErrorKind::InvalidArgument, "duplicate LexMap override for copy " + overrides[i].minor.to_string());
    }
  }
  Node n{lex, Kind::LexMap, 0, 0, {}, {}, {std::move(minor), std::move(default_major)}, std::move(overrides)};
  return Automorphism(std::make_shared<const Node>(std::move(n)));
}

Automorphism Automorphism::composite(std::vector<Automorphism> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "empty composite");
  for (const auto& p : parts) {
    if (!(p.order() == parts.front().order())) {
      throw Error(ErrorKind::OrderMismatch, "composite parts act on different orders");
    }
  }
  OrderExpr order = parts.front().order();
  Node n{order, Kind::Composite, 0, 0, {}, {}, std::move(parts), {}};
  return Automorphism(std::make_shared<const Node>(std::move(n)));
}

Automorphism Automorphism::reversed(const OrderExpr& rev, Automorphism inner) {
  if (!rev.is(OrderExpr::Kind::Reverse) || !(inner.order() == rev.inner())) {
    throw Error(ErrorKind::OrderMismatch, "reversed map does not act on " + rev.to_string());
  }
  Node n{rev, Kind::Reversed, 0, 0, {}, {}, {std::move(inner)}, {}};
  return Automorphism(std::make_shared<const Node>(std::move(n)));
}

const OrderExpr& Automorphism::order() const { return node_->order; }
Automorphism::Kind Automorphism::kind() const { return node_->kind; }
const Integer& Automorphism::shift_amount() const { return node_->shift; }
const Rational& Automorphism::translation() const { return node_->translation; }
const std::vector<Rational>& Automorphism::breakpoints() const { return node_->breakpoints; }
const std::vector<Affine>& Automorphism::pieces() const { return node_->pieces; }
const Automorphism& Automorphism::minor_map() const { return node_->maps.at(0); }
const std::vector<Automorphism::Override>& Automorphism::overrides() const { return node_->overrides; }
const Automorphism& Automorphism::default_major() const { return node_->maps.at(1); }
const std::vector<Automorphism>& Automorphism::parts() const { return node_->maps; }
const Automorphism& Automorphism::inner() const { return node_->maps.at(0); }

const Automorphism& Automorphism::major_map_for(const Elem& minor) const {
  const auto& ov = node_->overrides;
  auto it = std::lower_bound(ov.begin(), ov.end(), minor,
                             [](const Override& o, const Elem& m) { return cmp(o.minor, m) < 0; });
  if (it != ov.end() && it->minor == minor) return it->major;
  return default_major();
}

std::size_t Automorphism::piece_index(const Rational& x) const {
  const auto& b = node_->breakpoints;
  return static_cast<std::size_t>(std::upper_bound(b.begin(), b.end(), x) - b.begin());
}

std::string Automorphism::to_string() const {
  switch (kind()) {
    case Kind::Identity: return "Identity";
    case Kind::Shift: return "Shift(" + taulab::to_string(shift_amount()) + ")";
    case Kind::Translate: return "Translate(" + taulab::to_string(translation()) + ")";
    case Kind::PiecewiseLinear: {
      std::string s = "PiecewiseLinear[";
      for (std::size_t i = 0; i < pieces().size(); ++i) {
        if (i > 0) s += " |" + taulab::to_string(breakpoints()[i - 1]) + "| ";
        s += taulab::to_string(pieces()[i].slope) + "x+" + taulab::to_string(pieces()[i].offset);
      }
      return s + "]";
    }
    case Kind::LexMap: {
      std::string s = "LexMap(minor=" + minor_map().to_string() + ", overrides={";
      for (std::size_t i = 0; i < overrides().size(); ++i) {
        if (i > 0) s += ", ";
        s += overrides()[i].minor.to_string() + ": " + overrides()[i].major.to_string();
      }
      return s + "}, default=" + default_major().to_string() + ")";
    }
    case Kind::Composite: {
      std::string s = "Composite(";
      for (std::size_t i = 0; i < parts().size(); ++i) s += (i > 0 ? " o " : "") + parts()[i].to_string();
      return s + ")";
    }
    case Kind::Reversed: return "Reversed(" + inner().to_string() + ")";
  }
  return "?";
}

Elem apply(const Automorphism& f, const Elem& x) {
  require_member(f.order(), x);
  switch (f.kind()) {
    case Automorphism::Kind::Identity: return x;
    case Automorphism::Kind::Shift: return Elem::integer(x.as_integer() + f.shift_amount());
    case Automorphism::Kind::Translate: return Elem::rational(x.as_rational() + f.translation());
    case Automorphism::Kind::PiecewiseLinear: {
      const Rational& q = x.as_rational();
      return Elem::rational(f.pieces()[f.piece_index(q)](q));
    }
    case Automorphism::Kind::LexMap:
      return Elem::pair(f.order(), apply(f.major_map_for(x.minor()), x.major()), apply(f.minor_map(), x.minor()));
    case Automorphism::Kind::Composite: {
      Elem y = x;
      for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) y = apply(*it, y);
      return y;
    }
    case Automorphism::Kind::Reversed: return Elem::reversed(f.order(), apply(f.inner(), x.inner()));
  }
  throw Error(ErrorKind::UnsupportedOrder, f.to_string());
}

Automorphism inverse(const Automorphism& f) {
  switch (f.kind()) {
    case Automorphism::Kind::Identity: return f;
    case Automorphism::Kind::Shift: return Automorphism::shift(-f.shift_amount());
    case Automorphism::Kind::Translate: return Automorphism::translate(-f.translation());
    case Automorphism::Kind::PiecewiseLinear: {
      std::vector<Rational> breaks;
      for (std::size_t i = 0; i < f.breakpoints().size(); ++i) breaks.push_back(f.pieces()[i](f.breakpoints()[i]));
      std::vector<Affine> pieces;
      for (const Affine& a : f.pieces()) pieces.push_back(a.inverse());
      return Automorphism::piecewise_linear(std::move(breaks), std::move(pieces));
    }
    case Automorphism::Kind::LexMap: {
      // Copy b is carried onto copy minor(b); undo its major map there.
      std::vector<Automorphism::Override> ov;
      for (const auto& o : f.overrides()) ov.push_back({apply(f.minor_map(), o.minor), inverse(o.major)});
      return Automorphism::lex_map(f.order(), inverse(f.minor_map()), std::move(ov), inverse(f.default_major()));
    }
    case Automorphism::Kind::Composite: {
      std::vector<Automorphism> parts;
      for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) parts.push_back(inverse(*it));
      return Automorphism::composite(std::move(parts));
    }
    case Automorphism::Kind::Reversed: return Automorphism::reversed(f.order(), inverse(f.inner()));
  }
  throw Error(ErrorKind::UnsupportedOrder, f.to_string());
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (!(f.order() == g.order())) {
    throw Error(ErrorKind::OrderMismatch, "compose " + f.order().to_string() + " with " + g.order().to_string());
  }
  using K = Automorphism::Kind;
  if (f.kind() == K::Identity) return g;
  if (g.kind() == K::Identity) return f;
  if (f.kind() == K::Shift && g.kind() == K::Shift) return Automorphism::shift(f.shift_amount() + g.shift_amount());
  if (f.kind() == K::Translate && g.kind() == K::Translate) {
    return Automorphism::translate(f.translation() + g.translation());
  }
  std::vector<Automorphism> parts;
  for (const Automorphism* h : {&f, &g}) {
    if (h->kind() == K::Composite) {
      parts.insert(parts.end(), h->parts().begin(), h->parts().end());
    } else {
      parts.push_back(*h);
    }
  }
  return Automorphism::composite(std::move(parts));
}

Automorphism automorphism_moving(const OrderExpr& order, const Elem& x, const Elem& y) {
  require_member(order, x);
  require_member(order, y);
  switch (order.kind()) {
    case OrderExpr::Kind::Z: return Automorphism::shift(y.as_integer() - x.as_integer());
    case OrderExpr::Kind::Q: return Automorphism::translate(y.as_rational() - x.as_rational());
    case OrderExpr::Kind::Lex: {
      // Move copy x.minor onto copy y.minor, remapping only the source copy.
      Automorphism minor = automorphism_moving(order.minor(), x.minor(), y.minor());
      Automorphism major = automorphism_moving(order.major(), x.major(), y.major());
      std::vector<Automorphism::Override> ov;
      if (major.kind() != Automorphism::Kind::Identity) ov.push_back({x.minor(), major});
      return Automorphism::lex_map(order, std::move(minor), std::move(ov), Automorphism::identity(order.major()));
    }
    case OrderExpr::Kind::Reverse:
      return Automorphism::reversed(order, automorphism_moving(order.inner(), x.inner(), y.inner()));
    case OrderExpr::Kind::Sum: break;
  }
  throw Error(ErrorKind::UnsupportedOrder, "no homogeneity witness for " + order.to_string());
}

}  // namespace taulab
