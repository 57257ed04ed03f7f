#include "taulab/sampling.hpp"

#include "taulab/error.hpp"

#include <array>

namespace taulab {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : label) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  // splitmix64 finaliser
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Elem sample_elem(const OrderExpr& order, Rng& rng, const SampleShape& shape) {
  switch (order.kind()) {
    case OrderExpr::Kind::Z: return Elem::integer(rng.uniform(-shape.radius, shape.radius));
    case OrderExpr::Kind::Q: {
      const std::int64_t den = rng.uniform(1, shape.max_den);
      const std::int64_t num = rng.uniform(-shape.radius * den, shape.radius * den);
      return Elem::rational(make_rational(num, den));
    }
    case OrderExpr::Kind::Lex:
      return Elem::pair(order, sample_elem(order.major(), rng, shape), sample_elem(order.minor(), rng, shape));
    case OrderExpr::Kind::Sum:
      return rng.chance(1, 2) ? Elem::left(order, sample_elem(order.left(), rng, shape))
                              : Elem::right(order, sample_elem(order.right(), rng, shape));
    case OrderExpr::Kind::Reverse: return Elem::reversed(order, sample_elem(order.inner(), rng, shape));
  }
  throw Error(ErrorKind::UnsupportedOrder, order.to_string());
}

namespace {

constexpr std::array<int, 11> kRadicands = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17};

Surd random_surd(Rng& rng, const SampleShape& shape) {
  const std::int64_t r = kRadicands[static_cast<std::size_t>(rng.uniform(0, kRadicands.size() - 1))];
  std::int64_t q = rng.uniform(1, 3);
  if (rng.chance(1, 2)) q = -q;
  const std::int64_t s = rng.uniform(1, std::max<std::int64_t>(1, shape.max_den / 2));
  const std::int64_t p = rng.uniform(-shape.radius * s, shape.radius * s);
  return Surd(p, q, r, s);
}

/// Uniform-ish pick from an integer range that may be unbounded on either side;
/// wide ranges are sampled near their ends.
std::optional<Integer> pick_integer(const std::optional<Integer>& lo, const std::optional<Integer>& hi, Rng& rng,
                                    std::int64_t radius) {
  if (lo && hi) {
    if (*lo > *hi) return std::nullopt;
    const Integer width = *hi - *lo;
    if (width <= 2 * radius) return Integer(*lo + rng.uniform(0, width.get_si()));
    return rng.chance(1, 2) ? Integer(*lo + rng.uniform(0, radius)) : Integer(*hi - rng.uniform(0, radius));
  }
  if (lo) return Integer(*lo + rng.uniform(0, 2 * radius));
  if (hi) return Integer(*hi - rng.uniform(0, 2 * radius));
  return Integer(rng.uniform(-radius, radius));
}

std::optional<Elem> between_z(const std::optional<CutPoint>& lo, const std::optional<CutPoint>& hi, Rng& rng,
                              const SampleShape& shape) {
  std::optional<Integer> l, h;
  if (lo) l = lo->elem().as_integer() + 1;
  if (hi) h = hi->elem().as_integer() - 1;
  auto v = pick_integer(l, h, rng, shape.radius);
  if (!v) return std::nullopt;
  return Elem::integer(*v);
}

std::optional<Rational> rational_bound(const CutPoint& c, bool from_above, unsigned bits) {
  if (!c.is_gap()) return c.elem().as_rational();
  const Surd& s = std::get<Surd>(c.gap());
  return from_above ? s.upper_dyadic(bits) : s.lower_dyadic(bits);
}

std::optional<Elem> between_q(const std::optional<CutPoint>& lo, const std::optional<CutPoint>& hi, Rng& rng,
                              const SampleShape& shape) {
  Rational a, b;
  for (unsigned bits = 16;; bits *= 2) {
    std::optional<Rational> la, hb;
    if (lo) la = rational_bound(*lo, true, bits);
    if (hi) hb = rational_bound(*hi, false, bits);
    if (!la && !hb) {
      la = Rational(-shape.radius);
      hb = Rational(shape.radius);
    }
    if (!la) la = *hb - 2 * shape.radius;
    if (!hb) hb = *la + 2 * shape.radius;
    a = *la;
    b = *hb;
    if (a < b) break;
    if (a == b && lo && hi && lo->is_gap() && hi->is_gap()) return Elem::rational(a);
    if (bits > (1u << 14)) return std::nullopt;
  }
  const std::int64_t g = rng.uniform(2, std::max<std::int64_t>(2, shape.grid));
  const std::int64_t k = rng.uniform(1, g - 1);
  return Elem::rational(a + (b - a) * make_rational(k, g));
}

// Position of a cut of lex(Z,Z): copy index plus major coordinate, with
// topOfCopy(j) sitting at (j, +infinity).
struct LexPos {
  Integer copy;
  std::optional<Integer> major;
};

LexPos lex_pos(const CutPoint& c) {
  if (c.is_gap()) return {std::get<TopOfCopy>(c.gap()).minor_index.as_integer(), std::nullopt};
  return {c.elem().minor().as_integer(), c.elem().major().as_integer()};
}

std::optional<Elem> between_lex(const OrderExpr& order, const std::optional<CutPoint>& lo,
                                const std::optional<CutPoint>& hi, Rng& rng, const SampleShape& shape) {
  std::optional<Integer> first_copy, last_copy, min_major, max_major;
  if (lo) {
    LexPos p = lex_pos(*lo);
    if (p.major) {
      first_copy = p.copy;
      min_major = *p.major + 1;
    } else {
      first_copy = p.copy + 1;
    }
  }
  if (hi) {
    LexPos p = lex_pos(*hi);
    last_copy = p.copy;
    if (p.major) max_major = *p.major - 1;
  }
  if (!first_copy && !last_copy) {
    first_copy = Integer(-shape.radius);
    last_copy = Integer(shape.radius);
  }
  if (!first_copy) first_copy = *last_copy - shape.radius;
  if (!last_copy) last_copy = *first_copy + shape.radius;
  if (*first_copy > *last_copy) return std::nullopt;

  auto copy = pick_integer(first_copy, last_copy, rng, shape.radius);
  std::optional<Integer> lo_major = (*copy == *first_copy) ? min_major : std::nullopt;
  std::optional<Integer> hi_major = (*copy == *last_copy) ? max_major : std::nullopt;
  auto major = pick_integer(lo_major, hi_major, rng, shape.radius);
  if (!major) return std::nullopt;
  return Elem::pair(order, Elem::integer(*major), Elem::integer(*copy));
}

}  // namespace

std::optional<CutPoint> sample_gap(const CompletionSpec& spec, Rng& rng, const SampleShape& shape) {
  switch (spec.gap_family) {
    case GapFamily::None: return std::nullopt;
    case GapFamily::Surd: return CutPoint::surd(random_surd(rng, shape));
    case GapFamily::TopOfCopy:
      return CutPoint::top_of_copy(spec.order, sample_elem(spec.order.minor(), rng, shape));
    case GapFamily::Seam: return CutPoint::seam(spec.order);
  }
  return std::nullopt;
}

CutPoint sample_cut(const CompletionSpec& spec, Rng& rng, const SampleShape& shape) {
  if (spec.gap_family != GapFamily::None && rng.chance(1, 2)) return *sample_gap(spec, rng, shape);
  return CutPoint::in_l(sample_elem(spec.order, rng, shape));
}

std::optional<Elem> sample_elem_between(const CompletionSpec& spec, const std::optional<CutPoint>& lo,
                                        const std::optional<CutPoint>& hi, Rng& rng, const SampleShape& shape) {
  if (lo && hi && cmp_cut(*lo, *hi) >= 0) return std::nullopt;
  switch (spec.order.kind()) {
    case OrderExpr::Kind::Z: return between_z(lo, hi, rng, shape);
    case OrderExpr::Kind::Q: return between_q(lo, hi, rng, shape);
    case OrderExpr::Kind::Lex:
      if (spec.gap_family == GapFamily::TopOfCopy) return between_lex(spec.order, lo, hi, rng, shape);
      break;
    default: break;
  }
  throw Error(ErrorKind::UnsupportedOrder, "no interval sampler for " + spec.order.to_string());
}

std::optional<CutPoint> sample_cut_between(const CompletionSpec& spec, const CutPoint& lo, const CutPoint& hi,
                                           Rng& rng, const SampleShape& shape) {
  if (cmp_cut(lo, hi) >= 0) return std::nullopt;
  if (spec.gap_family == GapFamily::Surd && rng.chance(1, 2)) {
    auto x1 = sample_elem_between(spec, lo, hi, rng, shape);
    if (x1) {
      auto x2 = sample_elem_between(spec, CutPoint::in_l(*x1), hi, rng, shape);
      if (x2) {
        const Integer r = kRadicands[static_cast<std::size_t>(rng.uniform(0, kRadicands.size() - 1))];
        return CutPoint::surd(surd_between(x1->as_rational(), x2->as_rational(), r));
      }
    }
  }
  if (spec.gap_family == GapFamily::TopOfCopy && rng.chance(1, 2)) {
    LexPos l = lex_pos(lo);
    LexPos h = lex_pos(hi);
    const Integer jmin = l.major ? l.copy : Integer(l.copy + 1);
    const Integer jmax = h.copy - 1;
    if (auto j = pick_integer(jmin, jmax, rng, shape.radius)) {
      return CutPoint::top_of_copy(spec.order, Elem::integer(*j));
    }
  }
  if (auto x = sample_elem_between(spec, lo, hi, rng, shape)) return CutPoint::in_l(*x);
  return std::nullopt;
}

}  // namespace taulab
