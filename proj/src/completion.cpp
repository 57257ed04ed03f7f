#include "taulab/completion.hpp"

#include "taulab/error.hpp"
#include "taulab/sampling.hpp"

#include <algorithm>

namespace taulab {

// ---- CutPoint ----------------------------------------------------------------

CutPoint CutPoint::in_l(Elem x) {
  OrderExpr order = x.order();
  return CutPoint(std::move(order), std::move(x));
}

CutPoint CutPoint::surd(Surd s) { return CutPoint(OrderExpr::rationals(), GapDescriptor(std::move(s))); }

CutPoint CutPoint::top_of_copy(const OrderExpr& lex, Elem minor_index) {
  return gap(lex, TopOfCopy{std::move(minor_index)});
}

CutPoint CutPoint::seam(const OrderExpr& sum) { return gap(sum, Seam{}); }

CutPoint CutPoint::gap(const OrderExpr& order, GapDescriptor g) {
  if (std::holds_alternative<Surd>(g)) {
    if (!order.is(OrderExpr::Kind::Q)) throw Error(ErrorKind::OrderMismatch, "surd gap in " + order.to_string());
  } else if (const auto* t = std::get_if<TopOfCopy>(&g)) {
    if (!order.is(OrderExpr::Kind::Lex) || !order.major().is(OrderExpr::Kind::Z)) {
      throw Error(ErrorKind::OrderMismatch, "topOfCopy gap in " + order.to_string());
    }
    require_member(order.minor(), t->minor_index);
  } else if (!order.is(OrderExpr::Kind::Sum)) {
    throw Error(ErrorKind::OrderMismatch, "seam gap in " + order.to_string());
  }
  return CutPoint(order, std::move(g));
}

const Elem& CutPoint::elem() const {
  if (const Elem* x = std::get_if<Elem>(&value_)) return *x;
  throw Error(ErrorKind::InvalidArgument, "cut " + to_string() + " is a gap");
}

const GapDescriptor& CutPoint::gap() const {
  if (const auto* g = std::get_if<GapDescriptor>(&value_)) return *g;
  throw Error(ErrorKind::InvalidArgument, "cut " + to_string() + " is not a gap");
}

std::string CutPoint::to_string() const {
  if (!is_gap()) return "inL(" + elem().to_string() + ")";
  const GapDescriptor& g = gap();
  if (const auto* s = std::get_if<Surd>(&g)) return s->to_string();
  if (const auto* t = std::get_if<TopOfCopy>(&g)) return "topOfCopy(" + t->minor_index.to_string() + ")";
  return "seam";
}

bool operator==(const CutPoint& a, const CutPoint& b) {
  return a.order() == b.order() && cmp_cut(a, b) == 0;
}

bool is_gap(const CutPoint& c) { return c.is_gap(); }

// ---- comparison ----------------------------------------------------------------

namespace {

std::strong_ordering gap_vs_elem(const GapDescriptor& g, const Elem& x) {
  if (const auto* s = std::get_if<Surd>(&g)) return compare(*s, x.as_rational());
  if (const auto* t = std::get_if<TopOfCopy>(&g)) {
    return cmp(x.minor(), t->minor_index) <= 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return x.side() == Side::Left ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering gap_vs_gap(const GapDescriptor& g1, const GapDescriptor& g2) {
  if (g1.index() != g2.index()) throw Error(ErrorKind::OrderMismatch, "gaps of different families");
  if (const auto* s = std::get_if<Surd>(&g1)) return compare(*s, std::get<Surd>(g2));
  if (const auto* t = std::get_if<TopOfCopy>(&g1)) return cmp(t->minor_index, std::get<TopOfCopy>(g2).minor_index);
  return std::strong_ordering::equal;
}

std::strong_ordering flip(std::strong_ordering o) { return 0 <=> o; }

}  // namespace

std::strong_ordering cmp_cut(const CutPoint& c1, const CutPoint& c2) {
  if (!(c1.order() == c2.order())) {
    throw Error(ErrorKind::OrderMismatch, c1.to_string() + " in " + c1.order().to_string() + " vs " +
                                              c2.to_string() + " in " + c2.order().to_string());
  }
  if (!c1.is_gap() && !c2.is_gap()) return cmp(c1.elem(), c2.elem());
  if (c1.is_gap() && !c2.is_gap()) return gap_vs_elem(c1.gap(), c2.elem());
  if (!c1.is_gap()) return flip(gap_vs_elem(c2.gap(), c1.elem()));
  return gap_vs_gap(c1.gap(), c2.gap());
}

// ---- completion spec ------------------------------------------------------------

std::string CompletionSpec::describe() const {
  switch (gap_family) {
    case GapFamily::None: return order.to_string() + " is Dedekind complete: no gaps";
    case GapFamily::Surd: return order.to_string() + " completes by the irrational cuts surd(p,q,r,s)";
    case GapFamily::TopOfCopy:
      return order.to_string() + " completes to (Z+1)Z: one gap topOfCopy(j) above each copy j; gaps form a copy of Z";
    case GapFamily::Seam: return order.to_string() + " has a seam gap between its summands";
  }
  return order.to_string();
}

CompletionSpec complete(const OrderExpr& order) {
  switch (order.kind()) {
    case OrderExpr::Kind::Z: return {order, GapFamily::None, true};
    case OrderExpr::Kind::Q: return {order, GapFamily::Surd, false};
    case OrderExpr::Kind::Lex:
      if (order.major().is(OrderExpr::Kind::Z) && order.minor().is(OrderExpr::Kind::Z)) {
        return {order, GapFamily::TopOfCopy, false};
      }
      break;
    default: break;
  }
  throw Error(ErrorKind::UnsupportedOrder, "no completion available for " + order.to_string());
}

// ---- minimality witnesses ----------------------------------------------------------

M1Witness witness_m1(const CutPoint& c) {
  if (!c.is_gap()) return {c.elem(), c.elem()};
  const GapDescriptor& g = c.gap();
  if (const auto* s = std::get_if<Surd>(&g)) {
    const Integer f = s->floor();
    return {Elem::rational(Rational(f)), Elem::rational(Rational(f + 1))};
  }
  const OrderExpr& o = c.order();
  if (const auto* t = std::get_if<TopOfCopy>(&g)) {
    const Elem a = some_element(o.major());
    return {Elem::pair(o, a, t->minor_index), Elem::pair(o, a, element_above(t->minor_index))};
  }
  return {Elem::left(o, some_element(o.left())), Elem::right(o, some_element(o.right()))};
}

Elem witness_m2(const CutPoint& c, const CutPoint& c2) {
  if (cmp_cut(c, c2) >= 0) {
    throw Error(ErrorKind::EmptyTrace, "no element in [" + c.to_string() + ", " + c2.to_string() + ")");
  }
  auto fits = [&](const Elem& x) {
    const CutPoint cx = CutPoint::in_l(x);
    return cmp_cut(c, cx) <= 0 && cmp_cut(cx, c2) < 0;
  };
  if (c2.is_gap()) {
    Elem x = witness_m1(c2).below;
    if (fits(x)) return x;
  }
  if (!c.is_gap()) return c.elem();
  if (!c2.is_gap()) {
    Elem x = element_below(c2.elem());
    if (fits(x)) return x;
  }
  Elem up = witness_m1(c).above_or_equal;
  if (fits(up)) return up;
  if (const auto* s = std::get_if<Surd>(&c.gap())) {
    for (unsigned bits = 1; bits <= 1u << 16; bits *= 2) {
      Elem x = Elem::rational(s->upper_dyadic(bits));
      if (fits(x)) return x;
    }
  }
  throw Error(ErrorKind::EmptyTrace, "search failed in [" + c.to_string() + ", " + c2.to_string() + ")");
}

std::optional<Elem> element_strictly_between(const CutPoint& c1, const CutPoint& c2) {
  if (cmp_cut(c1, c2) >= 0) {
    throw Error(ErrorKind::EmptyInterval, c1.to_string() + " is not below " + c2.to_string());
  }
  Elem x = witness_m2(c1, c2);
  if (cmp_cut(CutPoint::in_l(x), c1) > 0) return x;
  // Here c1 == inL(x).
  if (!c2.is_gap()) return element_between(x.order(), x, c2.elem());
  if (const auto* s = std::get_if<Surd>(&c2.gap())) {
    for (unsigned bits = 1; bits <= 1u << 16; bits *= 2) {
      Rational y = s->lower_dyadic(bits);
      if (y > x.as_rational()) return Elem::rational(y);
    }
    throw Error(ErrorKind::EmptyTrace, "dyadic search below " + c2.to_string() + " failed");
  }
  // The lower part of a gap has no last element; one step up stays below it.
  Elem y = element_above(x);
  if (cmp_cut(CutPoint::in_l(y), c2) < 0) return y;
  throw Error(ErrorKind::EmptyTrace, "no element between " + c1.to_string() + " and " + c2.to_string());
}

CutPoint sup_finite(std::span<const CutPoint> cuts) {
  if (cuts.empty()) throw Error(ErrorKind::EmptyFamily, "sup of an empty family");
  return *std::max_element(cuts.begin(), cuts.end(), CutLess{});
}

CutPoint inf_finite(std::span<const CutPoint> cuts) {
  if (cuts.empty()) throw Error(ErrorKind::EmptyFamily, "inf of an empty family");
  return *std::min_element(cuts.begin(), cuts.end(), CutLess{});
}

// ---- extension of automorphisms --------------------------------------------------------

namespace {

CutPoint map_gap(const Automorphism& f, const CutPoint& c) {
  using K = Automorphism::Kind;
  const GapDescriptor& g = c.gap();
  switch (f.kind()) {
    case K::Identity: return c;
    case K::Translate: return CutPoint::surd(std::get<Surd>(g) + f.translation());
    case K::PiecewiseLinear: {
      const Surd& s = std::get<Surd>(g);
      std::size_t piece = 0;
      while (piece < f.breakpoints().size() && compare(s, f.breakpoints()[piece]) > 0) ++piece;
      const Affine& a = f.pieces()[piece];
      return CutPoint::surd(s.affine(a.slope, a.offset));
    }
    case K::LexMap: {
      // Whole copies map onto whole copies, so the gap above copy j goes above copy f(j).
      const auto& t = std::get<TopOfCopy>(g);
      return CutPoint::top_of_copy(f.order(), apply(f.minor_map(), t.minor_index));
    }
    case K::Composite: {
      CutPoint out = c;
      for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) out = map_gap(*it, out);
      return out;
    }
    case K::Shift:
    case K::Reversed: break;
  }
  throw Error(ErrorKind::UnsupportedOrder, "cannot extend " + f.to_string() + " to gap " + c.to_string());
}

}  // namespace

CutPoint CompletionMap::operator()(const CutPoint& c) const {
  if (!(c.order() == f_.order())) {
    throw Error(ErrorKind::OrderMismatch, "cut " + c.to_string() + " not in " + f_.order().to_string());
  }
  if (!c.is_gap()) return CutPoint::in_l(apply(f_, c.elem()));
  return map_gap(f_, c);
}

CompletionMap extend_automorphism(const Automorphism& f) {
  (void)complete(f.order());
  return CompletionMap(f);
}

// ---- sequence families ----------------------------------------------------------------

SequenceReport verify_sequence_family(const SequenceFamily& s, std::uint64_t seed, std::size_t samples) {
  SequenceReport report;
  const bool increasing = s.direction == Direction::Increasing;
  const std::size_t n = s.verification_bound;
  auto fail = [&](std::string check, std::optional<std::size_t> index, std::optional<CutPoint> witness) {
    report.passed = false;
    report.failed_check = std::move(check);
    report.index = index;
    report.witness = std::move(witness);
    return report;
  };
  if (n == 0) return fail("bound", std::nullopt, std::nullopt);

  std::vector<CutPoint> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    CutPoint t = s.term(i);
    if (!(t.order() == s.declared_limit.order())) return fail("order", i, t);
    if (i > 0) {
      auto c = cmp_cut(terms.back(), t);
      if (increasing ? c >= 0 : c <= 0) return fail("monotone", i, t);
    }
    auto side = cmp_cut(t, s.declared_limit);
    if (increasing ? side >= 0 : side <= 0) return fail("side", i, t);
    terms.push_back(std::move(t));
    report.terms_checked = i + 1;
  }

  CompletionSpec spec = [&] {
    try {
      return complete(s.declared_limit.order());
    } catch (const Error&) {
      return CompletionSpec{s.declared_limit.order(), GapFamily::None, false};
    }
  }();
  if (!spec.is_complete && spec.gap_family == GapFamily::None) return fail("unsupported-order", std::nullopt, std::nullopt);

  Rng rng(seed);
  const std::optional<CutPoint> lo = increasing ? terms.front() : s.declared_limit;
  const std::optional<CutPoint> hi = increasing ? s.declared_limit : terms.front();
  for (std::size_t k = 0; k < samples; ++k) {
    auto x = sample_elem_between(spec, lo, hi, rng);
    if (!x) return fail("approach", std::nullopt, std::nullopt);
    const CutPoint cx = CutPoint::in_l(*x);
    // First term strictly past the sample; terms are monotone so binary search applies.
    auto it = increasing
                  ? std::upper_bound(terms.begin(), terms.end(), cx, CutLess{})
                  : std::upper_bound(terms.begin(), terms.end(), cx,
                                     [](const CutPoint& a, const CutPoint& b) { return cmp_cut(a, b) > 0; });
    if (it == terms.end()) return fail("approach", std::nullopt, cx);
    report.approach_samples = k + 1;
  }
  return report;
}

}  // namespace taulab
