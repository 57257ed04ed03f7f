#include "taulab/homeo.hpp"

#include "taulab/error.hpp"

#include <algorithm>
#include <map>

namespace taulab {

HomeoMap homeo_from_automorphism(const Automorphism& phi, const CutPoint& source) {
  require_topology_order(phi.order());
  if (!(source.order() == phi.order())) {
    throw Error(ErrorKind::OrderMismatch, source.to_string() + " is not a cut of " + phi.order().to_string());
  }
  CompletionMap ext = extend_automorphism(phi);
  CutPoint target = ext(source);
  return HomeoMap{phi, std::nullopt, source, std::move(target), std::move(ext)};
}

HomeoMap homeo_from_automorphism(const Automorphism& phi, const Elem& x1) {
  return homeo_from_automorphism(phi, CutPoint::in_l(x1));
}

Point map_point(const HomeoMap& h, const Point& p) {
  if (p.is_bottom()) return h.bottom_image ? Point::in(*h.bottom_image) : p;
  return Point::in(apply(h.f, p.elem()));
}

namespace {

BasicOpen map_open(const CompletionMap& f, const BasicOpen& o) {
  switch (o.kind()) {
    case BasicOpen::Kind::LeftRay: return BasicOpen::left_ray(f(o.cut()));
    case BasicOpen::Kind::PuncturedRay: return BasicOpen::punctured_ray(f(o.cut()));
    default: return o;
  }
}

}  // namespace

BasicOpen image_of_open(const HomeoMap& h, const BasicOpen& o) {
  if (!(o.order() == h.f.order())) throw Error(ErrorKind::OrderMismatch, o.to_string());
  return map_open(h.extension, o);
}

BasicOpen preimage_of_open(const HomeoMap& h, const BasicOpen& o) {
  if (!(o.order() == h.f.order())) throw Error(ErrorKind::OrderMismatch, o.to_string());
  return map_open(h.extension.inverse(), o);
}

// ---- verification ---------------------------------------------------------------------

bool HomeoReport::passed() const { return first_failure() == nullptr; }

const CheckResult* HomeoReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

constexpr std::size_t kMaxWitnesses = 3;

void fail(CheckResult& r, std::string witness) {
  r.passed = false;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(witness));
}

CheckResult check_trace(const HomeoMap& h, const CompletionSpec& spec, std::size_t budget, std::uint64_t seed) {
  CheckResult r{"trace", true, 0, {}};
  const CutPoint image = h.extension(h.source);
  const Automorphism inv = inverse(h.f);
  const auto rel = cmp_cut(image, h.target);
  if (rel > 0) {
    // Some element of (z,source) lands at or above the target.
    const Elem y = witness_m2(h.target, image);
    fail(r, apply(inv, y).to_string() + " in (z," + h.source.to_string() + ") maps to " + y.to_string() +
                " outside (z," + h.target.to_string() + ")");
  } else if (rel < 0) {
    const Elem y = witness_m2(image, h.target);
    fail(r, y.to_string() + " in (z," + h.target.to_string() + ") has preimage " + apply(inv, y).to_string() +
                " outside (z," + h.source.to_string() + ")");
  }
  Rng rng(Rng::derive(seed, "trace"));
  for (std::size_t i = 0; i < budget && r.passed; ++i, ++r.samples) {
    if (auto x = sample_elem_between(spec, std::nullopt, h.source, rng)) {
      const Elem fx = apply(h.f, *x);
      if (cmp_cut(CutPoint::in_l(fx), h.target) >= 0) {
        fail(r, x->to_string() + " maps to " + fx.to_string() + " outside (z," + h.target.to_string() + ")");
      }
    }
    if (auto y = sample_elem_between(spec, std::nullopt, h.target, rng)) {
      const Elem gy = apply(inv, *y);
      if (cmp_cut(CutPoint::in_l(gy), h.source) >= 0) {
        fail(r, y->to_string() + " has preimage " + gy.to_string() + " outside (z," + h.source.to_string() + ")");
      }
    }
  }
  return r;
}

}  // namespace

HomeoReport verify_homeo(const HomeoMap& h, std::size_t budget, std::uint64_t seed) {
  const CompletionSpec spec = complete(h.f.order());
  HomeoReport report;

  CheckResult fixed{"f(z)=z", true, 1, {}};
  if (h.bottom_image) fail(fixed, "z maps to " + h.bottom_image->to_string());
  report.checks.push_back(std::move(fixed));

  CheckResult target{"target=F(source)", true, 1, {}};
  const CutPoint image = h.extension(h.source);
  if (!(image == h.target)) {
    fail(target, "F(" + h.source.to_string() + ") = " + image.to_string() + ", not " + h.target.to_string());
  }
  report.checks.push_back(std::move(target));

  const TopDescriptor src = TopDescriptor::tau_c(h.source);
  const TopDescriptor dst = TopDescriptor::tau_c(h.target);

  CheckResult open{"open", true, 0, {}};
  Rng rng_open(Rng::derive(seed, "open"));
  for (std::size_t i = 0; i < budget; ++i, ++open.samples) {
    const BasicOpen o = sample_member(spec, h.source, rng_open);
    const BasicOpen img = image_of_open(h, o);
    if (!in_topology(img, dst)) fail(open, o.to_string() + " maps to " + img.to_string());
  }
  report.checks.push_back(std::move(open));

  CheckResult continuous{"continuous", true, 0, {}};
  Rng rng_cont(Rng::derive(seed, "continuous"));
  for (std::size_t i = 0; i < budget; ++i, ++continuous.samples) {
    const BasicOpen o = sample_member(spec, h.target, rng_cont);
    const BasicOpen pre = preimage_of_open(h, o);
    if (!in_topology(pre, src)) fail(continuous, o.to_string() + " pulls back to " + pre.to_string());
  }
  report.checks.push_back(std::move(continuous));

  CheckResult conj{"conjugation", true, 0, {}};
  Rng rng_conj(Rng::derive(seed, "conjugation"));
  for (std::size_t i = 0; i < budget; ++i, ++conj.samples) {
    const Point p = sample_point(spec, rng_conj);
    const BasicOpen o = sample_basic_open(spec, rng_conj);
    const Point hp = map_point(h, p);
    const BasicOpen ho = image_of_open(h, o);
    if (mem(p, o) != mem(hp, ho)) {
      fail(conj, p.to_string() + (mem(p, o) ? " in " : " not in ") + o.to_string() + " but " + hp.to_string() +
                     (mem(hp, ho) ? " in " : " not in ") + ho.to_string());
    }
  }
  report.checks.push_back(std::move(conj));

  report.checks.push_back(check_trace(h, spec, budget, seed));
  return report;
}

// ---- chain classes ------------------------------------------------------------------------

namespace {

/// An automorphism whose extension sends gap c0 to gap c1, when one is known.
std::optional<Automorphism> gap_automorphism(const CutPoint& c0, const CutPoint& c1) {
  const OrderExpr& order = c0.order();
  if (c0 == c1) return Automorphism::identity(order);
  const GapDescriptor& g0 = c0.gap();
  const GapDescriptor& g1 = c1.gap();
  if (const auto* t0 = std::get_if<TopOfCopy>(&g0)) {
    const auto& t1 = std::get<TopOfCopy>(g1);
    // The gaps form a copy of the minor order; move copy j0 onto copy j1 wholesale.
    Automorphism minor = automorphism_moving(order.minor(), t0->minor_index, t1.minor_index);
    return Automorphism::lex_map(order, minor, {}, Automorphism::identity(order.major()));
  }
  if (const auto* s0 = std::get_if<Surd>(&g0)) {
    const auto& s1 = std::get<Surd>(g1);
    if (s0->r() != s1.r()) return std::nullopt;
    const Rational slope = make_rational(s1.q() * s0->s(), s1.s() * s0->q());
    if (sign(slope) <= 0) return std::nullopt;
    const Rational offset = make_rational(s1.p(), s1.s()) - slope * make_rational(s0->p(), s0->s());
    if (!(s0->affine(slope, offset) == s1)) return std::nullopt;
    if (slope == 1) return Automorphism::translate(offset);
    return Automorphism::affine(slope, offset);
  }
  return std::nullopt;
}

}  // namespace

ChainClass same_chain_class(const CutPoint& c1, const CutPoint& c2) {
  if (!(c1.order() == c2.order())) {
    throw Error(ErrorKind::OrderMismatch, c1.to_string() + " vs " + c2.to_string());
  }
  require_topology_order(c1.order());
  if (!c1.is_gap() && !c2.is_gap()) {
    Automorphism f = automorphism_moving(c1.order(), c1.elem(), c2.elem());
    return {ChainClass::Verdict::Yes, homeo_from_automorphism(f, c1.elem()), std::nullopt,
            "automorphism " + f.to_string() + " moves one point to the other"};
  }
  if (c1.is_gap() != c2.is_gap()) {
    const CutPoint& gap = c1.is_gap() ? c1 : c2;
    const CutPoint& point = c1.is_gap() ? c2 : c1;
    return {ChainClass::Verdict::No, std::nullopt, Obstruction{gap, point},
            "(z," + gap.to_string() + "] and (z," + gap.to_string() + ") have the same trace on L, while " +
                point.elem().to_string() + " separates (z," + point.to_string() + "] from (z," + point.to_string() + ")"};
  }
  if (auto f = gap_automorphism(c1, c2)) {
    return {ChainClass::Verdict::Yes, homeo_from_automorphism(*f, c1), std::nullopt,
            "gap automorphism " + f->to_string()};
  }
  return {ChainClass::Verdict::Unknown, std::nullopt, std::nullopt,
          "no automorphism of this order is known to move " + c1.to_string() + " to " + c2.to_string()};
}

CheckResult validate_obstruction(const Obstruction& o, std::size_t samples, std::uint64_t seed) {
  CheckResult r{"obstruction", true, 0, {}};
  if (!o.gap.is_gap() || o.point.is_gap()) {
    fail(r, "obstruction needs a gap and an L-point");
    return r;
  }
  const CompletionSpec spec = complete(o.gap.order());
  const Elem& x0 = o.point.elem();
  // (z,x0] contains x0; (z,x0) does not.
  if (mem(Point::in(x0), BasicOpen::punctured_ray(o.point))) fail(r, x0.to_string() + " lies in its punctured ray");
  Rng rng(Rng::derive(seed, "obstruction"));
  for (std::size_t i = 0; i < samples && r.passed; ++i, ++r.samples) {
    const Elem x = sample_elem(spec.order, rng);
    const CutPoint cx = CutPoint::in_l(x);
    const auto side = cmp_cut(cx, o.gap);
    if (side == 0) {
      fail(r, x.to_string() + " equals the gap " + o.gap.to_string());
    } else if (side < 0) {
      // No last element below the gap: (z,gap] and (z,gap) agree on L.
      auto y = element_strictly_between(cx, o.gap);
      if (!y || cmp_cut(CutPoint::in_l(*y), cx) <= 0 || cmp_cut(CutPoint::in_l(*y), o.gap) >= 0) {
        fail(r, x.to_string() + " has no larger element below " + o.gap.to_string());
      }
    } else {
      auto y = element_strictly_between(o.gap, cx);
      if (!y || cmp_cut(CutPoint::in_l(*y), o.gap) <= 0) {
        fail(r, x.to_string() + " has no smaller element above " + o.gap.to_string());
      }
    }
  }
  return r;
}

GapHomeo homeo_between_gaps(const CutPoint& c0, const CutPoint& c1, std::size_t budget, std::uint64_t seed) {
  if (!(c0.order() == c1.order())) throw Error(ErrorKind::OrderMismatch, c0.to_string() + " vs " + c1.to_string());
  if (!c0.is_gap() || !c1.is_gap()) {
    throw Error(ErrorKind::InvalidArgument, "homeo_between_gaps needs two gaps");
  }
  auto f = gap_automorphism(c0, c1);
  if (!f) {
    throw Error(ErrorKind::UnsupportedOrder,
                "no gap automorphism from " + c0.to_string() + " to " + c1.to_string() + " in " + c0.order().to_string());
  }
  HomeoMap map = homeo_from_automorphism(*f, c0);
  HomeoReport verification = verify_homeo(map, budget, seed);

  const CompletionSpec spec = complete(c0.order());
  const CompletionMap& F = map.extension;
  CheckResult m{"meet-formula", true, 0, {}};
  Rng rng(Rng::derive(seed, "meet-formula"));
  const CutPoint above = CutPoint::in_l(witness_m1(c0).above_or_equal);
  for (std::size_t i = 0; i < budget; ++i, ++m.samples) {
    if (auto x = sample_elem_between(spec, c0, above, rng)) {
      const CutPoint fx = F(CutPoint::in_l(*x));
      if (cmp_cut(fx, c1) <= 0) fail(m, x->to_string() + " above the source gap maps to " + fx.to_string());
    }
    const CutPoint b = sample_cut(spec, rng);
    const CutPoint fb = F(b);
    const bool in0 = cmp_cut(b, c0) <= 0;
    if (in0 != (cmp_cut(fb, c1) <= 0)) {
      fail(m, "puncturedRay(" + b.to_string() + ") changes side: image puncturedRay(" + fb.to_string() + ")");
    } else if (!in0) {
      // (z,b) misses some tau_y with c0 < y < b; its image misses tau_F(y).
      auto y = element_strictly_between(c0, b);
      if (!y) {
        fail(m, "no element between " + c0.to_string() + " and " + b.to_string());
        continue;
      }
      const CutPoint fy = F(CutPoint::in_l(*y));
      if (cmp_cut(fy, c1) <= 0 || cmp_cut(fb, fy) <= 0) {
        fail(m, "separator " + y->to_string() + " for " + b.to_string() + " is not carried across");
      }
    }
  }
  return GapHomeo{std::move(map), std::move(verification), std::move(m)};
}

// ---- chains -----------------------------------------------------------------------------

bool chains_equal(const FinitePerm& p, const FinitePerm& q) {
  if (!(p.order() == q.order())) throw Error(ErrorKind::OrderMismatch, "permutations of different orders");
  // q^-1 o p is the identity exactly when p and q agree pointwise.
  return p == q;
}

std::optional<std::pair<Elem, Elem>> chain_violation(const FinitePerm& p, const FinitePerm& q) {
  if (chains_equal(p, q)) return std::nullopt;
  const FinitePerm r = compose(q.inverse(), p);
  // r permutes its support; a non-identity permutation of a finite chain has an
  // inversion between neighbours.
  const std::vector<Elem> s = r.support();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (cmp(r(s[i]), r(s[i + 1])) > 0) return std::make_pair(s[i], s[i + 1]);
  }
  throw Error(ErrorKind::SearchExhausted, "no inversion in " + r.to_string());
}

namespace {

PerturbedOpen search_witness(const FinitePerm& a, const Elem& xa, const FinitePerm& b, const Elem& yb,
                             std::size_t budget) {
  std::vector<CutPoint> cuts;
  auto push = [&](const Elem& e) {
    CutPoint c = CutPoint::in_l(e);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(std::move(c));
  };
  const std::vector<Elem> sa = a.support();
  const std::vector<Elem> sb = b.support();
  for (const auto* s : {&sa, &sb}) {
    for (const auto& e : *s) {
      push(e);
      push(element_above(e));
    }
  }
  for (const auto* s : {&sa, &sb}) {
    for (const auto& e : *s) push(element_below(e));
  }

  const TopDescriptor other = TopDescriptor::perm_image(b, TopDescriptor::tau_c(CutPoint::in_l(yb)));
  const CutPoint cx = CutPoint::in_l(xa);
  std::size_t tried = 0;
  for (const auto& c : cuts) {
    std::vector<BasicOpen> bases{BasicOpen::left_ray(c)};
    if (cmp_cut(c, cx) <= 0) bases.push_back(BasicOpen::punctured_ray(c));
    for (const auto& base : bases) {
      if (++tried > budget) {
        throw Error(ErrorKind::SearchExhausted, "no witness within " + std::to_string(budget) + " candidates");
      }
      PerturbedOpen o = perm_image_open(a, base);
      if (!in_topology(o, other)) return o;
    }
  }
  throw Error(ErrorKind::SearchExhausted,
              "no witness for " + a.to_string() + " against " + b.to_string() + " among " + std::to_string(tried) +
                  " candidates");
}

}  // namespace

std::pair<PerturbedOpen, PerturbedOpen> incomparable_witness(const FinitePerm& p, const Elem& x, const FinitePerm& q,
                                                             const Elem& y, std::size_t budget) {
  if (chains_equal(p, q)) throw Error(ErrorKind::InvalidArgument, "the chains of " + p.to_string() + " coincide");
  require_member(p.order(), x);
  require_member(q.order(), y);
  return {search_witness(p, x, q, y, budget), search_witness(q, y, p, x, budget)};
}

std::vector<std::pair<Elem, Elem>> chain_pairs(const OrderExpr& order, std::size_t k) {
  std::vector<std::pair<Elem, Elem>> pairs;
  Elem e = some_element(order);
  for (std::size_t i = 0; i < k; ++i) {
    Elem next = element_above(e);
    pairs.emplace_back(e, next);
    e = element_above(next);
  }
  return pairs;
}

FinitePerm pair_swap(const OrderExpr& order, const std::vector<std::pair<Elem, Elem>>& pairs, std::uint64_t mask) {
  std::vector<std::pair<Elem, Elem>> chosen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1u) chosen.push_back(pairs[i]);
  }
  return FinitePerm::pair_swaps(order, chosen);
}

std::size_t count_distinct_chains(std::size_t k, const OrderExpr& order) {
  if (k > 20) throw Error(ErrorKind::InvalidArgument, "count_distinct_chains supports k <= 20");
  require_topology_order(order);
  const auto pairs = chain_pairs(order, k);
  std::vector<FinitePerm> perms;
  perms.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) perms.push_back(pair_swap(order, pairs, mask));

  if (k <= 10) {
    std::vector<const FinitePerm*> reps;
    for (const auto& p : perms) {
      bool seen = false;
      for (const auto* r : reps) {
        if (chains_equal(p, *r)) {
          seen = true;
          break;
        }
      }
      if (!seen) reps.push_back(&p);
    }
    return reps.size();
  }
  // Sorting by cycle notation groups equal permutations together.
  std::multimap<std::string, const FinitePerm*> by_key;
  for (const auto& p : perms) by_key.emplace(p.to_string(), &p);
  std::size_t count = 0;
  const FinitePerm* prev = nullptr;
  for (const auto& [key, p] : by_key) {
    if (!prev || !chains_equal(*prev, *p)) ++count;
    prev = p;
  }
  return count;
}

TopDescriptor ChainDescriptor::member(const CutPoint& c) const {
  if (parameters == Parameters::L && c.is_gap()) {
    throw Error(ErrorKind::InvalidArgument, c.to_string() + " is not an element of L");
  }
  if (parameters == Parameters::GapClass && !c.is_gap()) {
    throw Error(ErrorKind::InvalidArgument, c.to_string() + " is not a gap");
  }
  TopDescriptor base = TopDescriptor::tau_c(c);
  if (perm.is_identity()) return base;
  return TopDescriptor::perm_image(perm, base);
}

}  // namespace taulab
