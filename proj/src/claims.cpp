#include "taulab/claims.hpp"

#include "taulab/error.hpp"
#include "taulab/homeo.hpp"
#include "taulab/sampling.hpp"
#include "taulab/text.hpp"
#include "taulab/topology.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <utility>

namespace taulab {

bool Report::passed() const {
  return std::all_of(records.begin(), records.end(), [](const ClaimRecord& r) { return r.passed; });
}

namespace {

struct Anchor {
  std::string_view id;
  std::string_view anchor;
};

constexpr Anchor kAnchors[] = {
    {"inclusion", "c1 < c2 <=> tau(c1) is a proper subset of tau(c2)"},
    {"homeo", "f in Aut(L): f[[z,a)] = [z,F(a)), f[(z,b)] = (z,F(b)); tau(x1) ~= tau(f(x1))"},
    {"neighborhood", "meet of the tau(c)-neighbourhoods of x is {x} <=> x = z"},
    {"gap", "c in L~ \\ L => tau(c) !~= tau(x0)"},
    {"joinmeet", "join tau(c), c in A = tau(sup A); meet tau(c), c in A = tau(inf A); meet over L = tau_arrow"},
    {"sandwich", "tau(x1) <= O <= tau(x2), O generated by punctured rays => O = tau(sup B)"},
    {"chains", "L^f = L^g <=> g^-1 f in Aut(L_z); 2^k pair swaps give 2^k chains"},
    {"gapclass", "c, c' in L~ \\ L => tau(c) ~= tau(c')"},
};

struct Outcome {
  std::size_t samples = 0;
  bool passed = true;
  std::vector<std::string> witnesses;

  void fail(std::string w) {
    passed = false;
    if (witnesses.size() < 5) witnesses.push_back(std::move(w));
  }
};

using ClaimFn = std::function<Outcome(const CompletionSpec&, Rng&, std::uint64_t, std::size_t)>;

std::string verdict_name(TopLeq::Verdict v) {
  switch (v) {
    case TopLeq::Verdict::StrictlyLess: return "StrictlyLess";
    case TopLeq::Verdict::Equal: return "Equal";
    case TopLeq::Verdict::NotLeq: return "NotLeq";
  }
  return "?";
}

TopDescriptor tau(const CutPoint& c) { return TopDescriptor::tau_c(c); }
BasicOpen punct(const CutPoint& c) { return BasicOpen::punctured_ray(c); }
Point in(const Elem& x) { return Point::in(x); }
CutPoint cut(const Elem& x) { return CutPoint::in_l(x); }

// ---- inclusion ---------------------------------------------------------------------

Outcome inclusion_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t, std::size_t n) {
  Outcome out;
  for (std::size_t i = 0; i < n; ++i, ++out.samples) {
    const CutPoint c1 = sample_cut(spec, rng);
    const CutPoint c2 = (i % 10 == 0) ? c1 : sample_cut(spec, rng);
    const auto ord = cmp_cut(c1, c2);
    const TopLeq r = top_leq(c1, c2);
    const TopLeq back = top_leq(c2, c1);
    const auto expected = ord < 0 ? TopLeq::Verdict::StrictlyLess
                                  : (ord == 0 ? TopLeq::Verdict::Equal : TopLeq::Verdict::NotLeq);
    const auto expected_back = ord > 0 ? TopLeq::Verdict::StrictlyLess
                                       : (ord == 0 ? TopLeq::Verdict::Equal : TopLeq::Verdict::NotLeq);
    const std::string pair = "(" + c1.to_string() + ", " + c2.to_string() + ")";
    if (r.verdict != expected || back.verdict != expected_back) {
      out.fail(pair + ": top_leq says " + verdict_name(r.verdict) + ", cmp_cut disagrees");
      continue;
    }
    if (ord == 0) continue;
    const CutPoint& small = ord < 0 ? c1 : c2;
    const CutPoint& large = ord < 0 ? c2 : c1;
    const BasicOpen& w = *r.witness;
    const Elem& sep = *r.sep;
    if (!in_topology(w, tau(large)) || in_topology(w, tau(small))) {
      out.fail(pair + ": witness " + w.to_string() + " does not separate the topologies");
    }
    if (!mem(in(sep), w) || mem(in(sep), punct(small))) {
      out.fail(pair + ": separating element " + sep.to_string() + " fails");
    }
  }
  return out;
}

// ---- homeomorphisms ---------------------------------------------------------------

Outcome homeo_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t seed, std::size_t n) {
  Outcome out;
  constexpr std::size_t kPairs = 100;
  for (std::size_t i = 0; i < kPairs; ++i) {
    const Elem x1 = sample_elem(spec.order, rng);
    const Elem x2 = sample_elem(spec.order, rng);
    const Automorphism f = automorphism_moving(spec.order, x1, x2);
    if (!(apply(f, x1) == x2)) {
      out.fail(f.to_string() + " does not move " + x1.to_string() + " to " + x2.to_string());
      continue;
    }
    const HomeoMap h = homeo_from_automorphism(f, x1);
    const HomeoReport rep = verify_homeo(h, n, Rng::derive(seed, "homeo/" + std::to_string(i)));
    out.samples += n;
    if (const CheckResult* bad = rep.first_failure()) {
      out.fail(x1.to_string() + " -> " + x2.to_string() + ": " + bad->name + ": " +
               (bad->witnesses.empty() ? std::string("failed") : bad->witnesses.front()));
    }
  }
  return out;
}

// ---- neighbourhoods of points --------------------------------------------------------

Outcome neighborhood_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t, std::size_t n) {
  Outcome out;
  const Point z = Point::bottom(spec.order);
  for (std::size_t i = 0; i < n; ++i, ++out.samples) {
    const CutPoint c = sample_cut(spec, rng);
    const TopDescriptor t = tau(c);
    // Every open around x reaches down past x, so it also holds y < x.
    const Elem x = sample_elem(spec.order, rng);
    const Elem y = element_below(x);
    for (int k = 0; k < 4; ++k) {
      const BasicOpen o = sample_member(spec, c, rng);
      if (mem(in(x), o) && !mem(in(y), o)) {
        out.fail("in " + t.to_string() + ": " + o.to_string() + " holds " + x.to_string() + " but not " +
                 y.to_string());
      }
    }
    // z is cut off from every other point by a left ray.
    const Elem w = sample_elem(spec.order, rng);
    const BasicOpen ray = BasicOpen::left_ray(cut(w));
    if (!in_topology(ray, t) || !mem(z, ray) || mem(in(w), ray)) {
      out.fail("in " + t.to_string() + ": " + ray.to_string() + " does not isolate z from " + w.to_string());
    }
  }
  return out;
}

// ---- gap points ----------------------------------------------------------------------------

CutPoint canonical_gap(const CompletionSpec& spec) {
  if (spec.gap_family == GapFamily::Surd) return CutPoint::surd(Surd(0, 1, 2, 1));
  return CutPoint::top_of_copy(spec.order, some_element(spec.order.minor()));
}

Outcome gap_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t seed, std::size_t n) {
  Outcome out;
  if (spec.gap_family == GapFamily::None) return out;
  std::vector<CutPoint> gaps{canonical_gap(spec)};
  for (int i = 0; i < 9; ++i) gaps.push_back(*sample_gap(spec, rng));
  for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
    const CutPoint& g = gaps[gi];
    const std::size_t points = gi == 0 ? 100 : 10;
    for (std::size_t k = 0; k < points; ++k) {
      const CutPoint x = cut(sample_elem(spec.order, rng));
      const ChainClass a = same_chain_class(g, x);
      const ChainClass b = same_chain_class(x, g);
      if (a.verdict != ChainClass::Verdict::No || b.verdict != ChainClass::Verdict::No || !a.obstruction) {
        out.fail(g.to_string() + " vs " + x.to_string() + ": expected No");
        continue;
      }
      if (k == 0) {
        const std::size_t budget = gi == 0 ? n : std::max<std::size_t>(1, n / 10);
        const CheckResult check =
            validate_obstruction(*a.obstruction, budget, Rng::derive(seed, "gap/" + std::to_string(gi)));
        out.samples += check.samples;
        if (!check.passed) out.fail(g.to_string() + ": " + check.witnesses.front());
        // Any map claiming tau_gap -> tau_x must break the trace check.
        HomeoMap fake{Automorphism::identity(spec.order), std::nullopt, g, x,
                      extend_automorphism(Automorphism::identity(spec.order))};
        const HomeoReport rep = verify_homeo(fake, 50, seed);
        const CheckResult* bad = rep.first_failure();
        if (!bad) out.fail("identity map " + g.to_string() + " -> " + x.to_string() + " verified");
      }
      ++out.samples;
    }
  }
  return out;
}

// ---- joins and meets -------------------------------------------------------------------

SequenceFamily rational_family(Rational start, Rational width, bool increasing, bool geometric) {
  // start + width * (1 - u_n) climbing to start + width, or start + width * u_n falling to start,
  // with u_n = 1/(n+1) or 2^-n.
  auto u = [geometric](std::size_t n) {
    return geometric ? make_rational(Integer(1), Integer(1) << static_cast<unsigned>(n))
                     : make_rational(1, static_cast<long>(n + 1));
  };
  SequenceFamily s{
      [=](std::size_t n) {
        return CutPoint::in_l(Elem::rational(increasing ? Rational(start + width * (1 - u(n))) : Rational(start + width * u(n))));
      },
      increasing ? Direction::Increasing : Direction::Decreasing,
      CutPoint::in_l(Elem::rational(increasing ? start + width : start)),
      geometric ? std::size_t{200} : std::size_t{1000},
      std::string(increasing ? "up" : "down") + (geometric ? "-geometric" : "-harmonic") + " to " +
          to_string(increasing ? Rational(start + width) : start)};
  return s;
}

SequenceFamily surd_family(const Surd& v, bool increasing) {
  // Dyadic brackets pushed one more step away stay strictly monotone.
  SequenceFamily s{
      [=](std::size_t n) {
        const unsigned bits = static_cast<unsigned>(n + 1);
        const Rational step = make_rational(Integer(1), Integer(1) << bits);
        return CutPoint::in_l(
            Elem::rational(increasing ? Rational(v.lower_dyadic(bits) - step) : Rational(v.upper_dyadic(bits) + step)));
      },
      increasing ? Direction::Increasing : Direction::Decreasing, CutPoint::surd(v), 200,
      std::string(increasing ? "up" : "down") + " to " + v.to_string()};
  return s;
}

SequenceFamily copy_family(const OrderExpr& order, long copy, long offset, bool increasing) {
  // (offset + n, j) climbs to topOfCopy(j); (offset - n, j + 1) falls to it.
  SequenceFamily s{
      [=](std::size_t n) {
        const long k = static_cast<long>(n);
        return CutPoint::in_l(increasing ? Elem::pair(order, Elem::integer(offset + k), Elem::integer(copy))
                                         : Elem::pair(order, Elem::integer(offset - k), Elem::integer(copy + 1)));
      },
      increasing ? Direction::Increasing : Direction::Decreasing,
      CutPoint::top_of_copy(order, Elem::integer(copy)), 1000,
      std::string(increasing ? "up" : "down") + " to topOfCopy(" + std::to_string(copy) + ")"};
  return s;
}

std::pair<CutPoint, CutPoint> bracket(const CutPoint& c) {
  const M1Witness w = witness_m1(c);
  return {cut(element_below(w.below)), cut(element_above(w.above_or_equal))};
}

/// First cached term on the far side of b from the limit direction, or nullopt.
std::optional<std::size_t> term_passing(const std::vector<CutPoint>& terms, const CutPoint& b, bool increasing) {
  for (std::size_t lo = 0, hi = terms.size(); lo < hi;) {
    const std::size_t mid = (lo + hi) / 2;
    const bool past = increasing ? cmp_cut(terms[mid], b) >= 0 : cmp_cut(terms[mid], b) < 0;
    if (past) {
      hi = mid;
      if (lo == hi) return mid;
    } else {
      lo = mid + 1;
      if (lo == hi) return lo < terms.size() ? std::optional<std::size_t>(lo) : std::nullopt;
    }
  }
  return std::nullopt;
}

Outcome joinmeet_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t seed, std::size_t n) {
  Outcome out;
  // Finite families.
  constexpr std::size_t kFamilies = 50;
  const std::size_t per_family = std::max<std::size_t>(1, n / kFamilies);
  for (std::size_t i = 0; i < kFamilies; ++i) {
    std::vector<CutPoint> a;
    const auto k = rng.uniform(1, 5);
    for (std::int64_t j = 0; j < k; ++j) a.push_back(sample_cut(spec, rng));
    const CutPoint hi = *std::max_element(a.begin(), a.end(), CutLess{});
    const CutPoint lo = *std::min_element(a.begin(), a.end(), CutLess{});
    const TopDescriptor jn = join(a);
    const TopDescriptor mt = meet(a);
    if (!(jn == tau(hi)) || !(mt == tau(lo))) {
      out.fail("finite family: join " + jn.to_string() + ", meet " + mt.to_string());
      continue;
    }
    for (std::size_t s = 0; s < per_family; ++s, ++out.samples) {
      const CutPoint b = sample_cut(spec, rng);
      const bool in_some = std::any_of(a.begin(), a.end(), [&](const CutPoint& c) { return cmp_cut(b, c) <= 0; });
      const bool in_all = std::all_of(a.begin(), a.end(), [&](const CutPoint& c) { return cmp_cut(b, c) <= 0; });
      if (in_topology(punct(b), jn) != in_some || in_topology(punct(b), mt) != in_all) {
        out.fail("finite family: puncturedRay(" + b.to_string() + ") misplaced");
      }
      const BasicOpen ray = BasicOpen::left_ray(b);
      if (!in_topology(ray, jn) || !in_topology(ray, mt)) out.fail("finite family: " + ray.to_string() + " missing");
    }
  }

  // Certified monotone sequences.
  const auto catalog = sequence_catalog(spec.order);
  const std::size_t per_sequence = catalog.empty() ? 0 : std::max<std::size_t>(1, n / catalog.size());
  for (std::size_t si = 0; si < catalog.size(); ++si) {
    const SequenceFamily& s = catalog[si];
    const bool up = s.direction == Direction::Increasing;
    const std::uint64_t sseed = Rng::derive(seed, "sequence/" + std::to_string(si));
    TopDescriptor limit_side = up ? join(s, sseed) : meet(s, sseed);
    TopDescriptor start_side = up ? meet(s, sseed) : join(s, sseed);
    if (!(limit_side == tau(s.declared_limit)) || !(start_side == tau(s.term(0)))) {
      out.fail(s.label + ": got " + limit_side.to_string() + " and " + start_side.to_string());
      continue;
    }
    std::vector<CutPoint> terms;
    for (std::size_t k = 0; k < s.verification_bound; ++k) terms.push_back(s.term(k));
    const auto [lo, hi] = bracket(s.declared_limit);
    for (std::size_t k = 0; k < per_sequence; ++k, ++out.samples) {
      std::optional<CutPoint> b = (k % 10 == 0) ? s.declared_limit : sample_cut_between(spec, lo, hi, rng);
      if (!b) continue;
      const bool expected = cmp_cut(*b, s.declared_limit) <= 0;
      if (in_topology(punct(*b), limit_side) != expected) {
        out.fail(s.label + ": puncturedRay(" + b->to_string() + ") misplaced");
        continue;
      }
      const auto rel = cmp_cut(*b, s.declared_limit);
      if (up && rel < 0 && !term_passing(terms, *b, true)) {
        out.fail(s.label + ": no term reaches " + b->to_string());
      }
      if (!up && rel > 0 && !term_passing(terms, *b, false)) {
        out.fail(s.label + ": no term drops below " + b->to_string());
      }
    }
  }

  // The whole chain.
  const TopDescriptor all_meet = meet(AllOfL{spec.order});
  const TopDescriptor all_join = join(AllOfL{spec.order});
  if (!(all_meet == TopDescriptor::tau_arrow(spec.order)) ||
      !(all_join == TopDescriptor::tau_arrow_all_punct(spec.order))) {
    out.fail("whole-chain meet/join: " + all_meet.to_string() + ", " + all_join.to_string());
  }
  for (std::size_t k = 0; k < std::max<std::size_t>(1, n / 10); ++k, ++out.samples) {
    const CutPoint b = sample_cut(spec, rng);
    Elem below = witness_m1(b).below;
    if (cmp_cut(cut(below), b) >= 0) below = element_below(below);
    const Elem above = witness_m1(b).above_or_equal;
    if (in_topology(punct(b), tau(cut(below))) || in_topology(punct(b), all_meet)) {
      out.fail("puncturedRay(" + b.to_string() + ") survives the meet over L");
    }
    if (!in_topology(punct(b), tau(cut(above))) || !in_topology(punct(b), all_join)) {
      out.fail("puncturedRay(" + b.to_string() + ") missing from the union over L");
    }
  }
  return out;
}

// ---- sandwiches ----------------------------------------------------------------------------

Outcome sandwich_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t seed, std::size_t n) {
  Outcome out;
  const std::size_t iterations = std::max<std::size_t>(100, n / 10);
  for (std::size_t i = 0; i < iterations; ++i, ++out.samples) {
    const Elem x1 = sample_elem(spec.order, rng);
    const Elem x2 = *sample_elem_between(spec, cut(x1), std::nullopt, rng);
    const CutPoint c1 = cut(x1);
    const CutPoint c2 = cut(x2);
    std::vector<CutPoint> b;
    const auto k = rng.uniform(0, 5);
    for (std::int64_t j = 0; j < k; ++j) {
      std::optional<CutPoint> c = rng.chance(1, 4) ? std::nullopt : sample_cut_between(spec, c1, c2, rng);
      b.push_back(c ? *c : c2);
    }
    const TopDescriptor got = saturate_sandwich(x1, x2, b);
    const CutPoint sup = b.empty() ? c1 : sup_finite(b);
    const std::string label = "(" + x1.to_string() + ", " + x2.to_string() + "]";
    if (!(got == tau(sup))) {
      out.fail(label + ": saturated to " + got.to_string() + ", expected " + tau(sup).to_string());
      continue;
    }
    for (const auto& c : b) {
      if (!in_topology(punct(c), got)) out.fail(label + ": generator " + c.to_string() + " lost");
    }
    if (!in_topology(punct(c1), got) || !in_topology(punct(got.cut()), tau(c2))) {
      out.fail(label + ": " + got.to_string() + " leaves the sandwich");
    }
    if (auto beyond = sample_cut_between(spec, sup, bracket(c2).second, rng)) {
      if (in_topology(punct(*beyond), got)) out.fail(label + ": " + got.to_string() + " is too large");
    }
    try {
      (void)saturate_sandwich(x1, x2, std::vector<CutPoint>{c1});
      out.fail(label + ": generator at x1 accepted");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfSandwich) throw;
    }

    if (spec.order.is(OrderExpr::Kind::Q) && i % 10 == 0) {
      const Rational a = x1.as_rational();
      const Rational w = x2.as_rational() - a;
      SequenceFamily s = rational_family(a + w / 2, w / 2, true, false);
      const TopDescriptor seq = saturate_sandwich(x1, x2, s, Rng::derive(seed, "sandwich/" + std::to_string(i)));
      if (!(seq == tau(c2))) out.fail(label + ": sequence saturated to " + seq.to_string());
    }
  }
  return out;
}

// ---- chains --------------------------------------------------------------------------------

Outcome chains_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t, std::size_t) {
  Outcome out;
  for (std::size_t k = 1; k <= 10; ++k) {
    const std::size_t got = count_distinct_chains(k, spec.order);
    out.samples += std::size_t{1} << k;
    if (got != (std::size_t{1} << k)) {
      out.fail("k = " + std::to_string(k) + ": " + std::to_string(got) + " chains");
    }
  }
  constexpr std::size_t kPairs = 6;
  const auto pairs = chain_pairs(spec.order, kPairs);
  std::vector<FinitePerm> perms;
  for (std::uint64_t mask = 0; mask < (1u << kPairs); ++mask) perms.push_back(pair_swap(spec.order, pairs, mask));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (!chains_equal(perms[i], perms[i])) out.fail(perms[i].to_string() + " differs from itself");
    for (std::size_t j = i + 1; j < perms.size(); ++j, ++out.samples) {
      const FinitePerm& p = perms[i];
      const FinitePerm& q = perms[j];
      if (chains_equal(p, q) || !chain_violation(p, q)) {
        out.fail(p.to_string() + " vs " + q.to_string() + ": chains not told apart");
        continue;
      }
      const Elem x = sample_elem(spec.order, rng);
      const Elem y = sample_elem(spec.order, rng);
      const auto [o1, o2] = incomparable_witness(p, x, q, y);
      const TopDescriptor tp = TopDescriptor::perm_image(p, tau(cut(x)));
      const TopDescriptor tq = TopDescriptor::perm_image(q, tau(cut(y)));
      if (!in_topology(o1, tp) || in_topology(o1, tq) || !in_topology(o2, tq) || in_topology(o2, tp)) {
        out.fail(p.to_string() + " vs " + q.to_string() + ": witnesses " + o1.to_string() + " / " + o2.to_string());
      }
    }
  }
  return out;
}

// ---- gap classes -------------------------------------------------------------------------

Outcome gapclass_claim(const CompletionSpec& spec, Rng& rng, std::uint64_t seed, std::size_t n) {
  Outcome out;
  if (spec.gap_family == GapFamily::None) return out;
  constexpr std::size_t kPairs = 25;
  const std::size_t budget = std::max<std::size_t>(100, n / 10);
  for (std::size_t i = 0; i < kPairs; ++i) {
    const CutPoint c0 = *sample_gap(spec, rng);
    CutPoint c1 = c0;
    if (spec.gap_family == GapFamily::Surd) {
      const Surd& s = std::get<Surd>(c0.gap());
      const Rational t = sample_elem(spec.order, rng).as_rational();
      // Every fifth pair uses a non-unit slope.
      const Rational slope = (i % 5 == 4) ? make_rational(rng.uniform(1, 9), rng.uniform(1, 9)) : Rational(1);
      c1 = CutPoint::surd(s.affine(slope, t));
    } else {
      c1 = *sample_gap(spec, rng);
    }
    const GapHomeo g = homeo_between_gaps(c0, c1, budget, Rng::derive(seed, "gapclass/" + std::to_string(i)));
    out.samples += budget;
    if (!g.passed()) {
      const CheckResult* bad = g.verification.first_failure();
      const CheckResult& r = bad ? *bad : g.meet_formula;
      out.fail(c0.to_string() + " -> " + c1.to_string() + ": " + r.name + ": " +
               (r.witnesses.empty() ? std::string("failed") : r.witnesses.front()));
    }
    if (same_chain_class(c0, c1).verdict != ChainClass::Verdict::Yes) {
      out.fail(c0.to_string() + " and " + c1.to_string() + " not placed in one class");
    }
  }
  return out;
}

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> r = {
      {"inclusion", inclusion_claim}, {"homeo", homeo_claim},       {"neighborhood", neighborhood_claim},
      {"gap", gap_claim},             {"joinmeet", joinmeet_claim}, {"sandwich", sandwich_claim},
      {"chains", chains_claim},       {"gapclass", gapclass_claim},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string_view claim_anchor(std::string_view id) {
  for (const auto& a : kAnchors) {
    if (a.id == id) return a.anchor;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown claim '" + std::string(id) + "'");
}

OrderExpr suite_order(std::string_view text) {
  OrderExpr order = parse_order(text);
  require_topology_order(order);
  (void)complete(order);
  return order;
}

std::vector<SequenceFamily> sequence_catalog(const OrderExpr& order) {
  std::vector<SequenceFamily> out;
  if (order.is(OrderExpr::Kind::Q)) {
    const Rational starts[] = {0, -3, make_rational(5, 2), 7, make_rational(-1, 3), 100};
    for (std::size_t i = 0; i < std::size(starts); ++i) {
      const Rational width = make_rational(static_cast<long>(i % 3 + 1), 1);
      out.push_back(rational_family(starts[i], width, true, i % 2 == 1));
      out.push_back(rational_family(starts[i], width, false, i % 2 == 0));
    }
    const Surd surds[] = {Surd(0, 1, 2, 1), Surd(1, -1, 3, 2), Surd(-4, 3, 5, 1), Surd(7, 2, 11, 3)};
    for (const auto& s : surds) {
      out.push_back(surd_family(s, true));
      out.push_back(surd_family(s, false));
    }
  } else if (order.is(OrderExpr::Kind::Lex)) {
    for (long j = -5; j < 5; ++j) {
      out.push_back(copy_family(order, j, 3 * j, true));
      out.push_back(copy_family(order, j, -2 * j, false));
    }
  }
  return out;
}

ClaimRecord run_claim(std::string_view id, const OrderExpr& order, std::uint64_t seed, std::size_t samples) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& kv) { return kv.first == id; });
  if (it == reg.end()) throw Error(ErrorKind::InvalidArgument, "unknown claim '" + std::string(id) + "'");

  ClaimRecord rec;
  rec.claim_id = std::string(id);
  rec.paper_anchor = std::string(claim_anchor(id));
  rec.order = order.to_string();
  const auto start = std::chrono::steady_clock::now();
  try {
    const CompletionSpec spec = complete(order);
    Rng rng(Rng::derive(seed, id));
    Outcome o = it->second(spec, rng, seed, samples);
    rec.samples = o.samples;
    rec.passed = o.passed;
    rec.witnesses = std::move(o.witnesses);
  } catch (const std::exception& e) {
    rec.passed = false;
    rec.witnesses.push_back(std::string("exception: ") + e.what());
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

Report run_suite(const SuiteConfig& config) {
  if (config.samples == 0) throw Error(ErrorKind::InvalidArgument, "--samples must be positive");
  if (config.format != "json" && config.format != "text") {
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + config.format + "'");
  }
  const std::vector<std::string>& ids = config.claims.empty() ? claim_ids() : config.claims;
  for (const auto& id : ids) (void)claim_anchor(id);
  const OrderExpr order = suite_order(config.order_text);

  Report report{config, {}};
  for (const auto& id : ids) {
    ClaimRecord rec = run_claim(id, order, config.seed, config.samples);
    if (!config.timing) rec.elapsed_ms = 0;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace taulab
