#pragma once

// Reference implementations used only by the tests. Each one decides its
// question from definitions, independently of the library's own algorithms.

#include "taulab/completion.hpp"
#include "taulab/finite.hpp"
#include "taulab/perm.hpp"
#include "taulab/topology.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using namespace taulab;

/// (p + q sqrt r) / s to 2048 bits. Good enough to separate distinct small surds.
inline mpf_class surd_value(const Surd& v) {
  mpf_class root(0, 2048);
  mpf_class rr(v.r(), 2048);
  mpf_sqrt(root.get_mpf_t(), rr.get_mpf_t());
  mpf_class out(mpf_class(v.p(), 2048) + mpf_class(v.q(), 2048) * root, 2048);
  return mpf_class(out / mpf_class(v.s(), 2048), 2048);
}

inline int sgn(const mpf_class& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int surd_vs_rational(const Surd& a, const Rational& b) {
  return sgn(mpf_class(surd_value(a) - mpf_class(b, 2048), 2048));
}

inline int surd_vs_surd(const Surd& a, const Surd& b) {
  if (a == b) return 0;
  return sgn(mpf_class(surd_value(a) - surd_value(b), 2048));
}

/// Position of a cut of lex(Z,Z) on a doubled line: (a,j) -> (j, 2a), topOfCopy(j) -> (j, +inf).
struct LexKey {
  long copy;
  bool top;
  long twice;
  auto operator<=>(const LexKey&) const = default;
};

inline LexKey lex_key(const CutPoint& c) {
  if (c.is_gap()) return {std::get<TopOfCopy>(c.gap()).minor_index.as_integer().get_si(), true, 0};
  return {c.elem().minor().as_integer().get_si(), false, 2 * c.elem().major().as_integer().get_si()};
}

/// The element's position on the real line (Q and Z) as an exact-ish value.
inline mpf_class real_value(const CutPoint& c) {
  if (c.is_gap()) return surd_value(std::get<Surd>(c.gap()));
  if (c.elem().order().is(OrderExpr::Kind::Z)) return mpf_class(c.elem().as_integer(), 2048);
  return mpf_class(c.elem().as_rational(), 2048);
}

/// Cut comparison from positions alone.
inline int cut_order(const CutPoint& a, const CutPoint& b) {
  if (a.order().is(OrderExpr::Kind::Lex)) {
    const auto ka = lex_key(a);
    const auto kb = lex_key(b);
    return ka < kb ? -1 : (kb < ka ? 1 : 0);
  }
  if (a.is_gap() && b.is_gap() && std::get<Surd>(a.gap()) == std::get<Surd>(b.gap())) return 0;
  return sgn(mpf_class(real_value(a) - real_value(b), 2048));
}

/// Point x of L inside the ray by definition: x < a for [z,a), x < b for (z,b).
inline bool member(const Point& p, const BasicOpen& o) {
  switch (o.kind()) {
    case BasicOpen::Kind::Empty: return false;
    case BasicOpen::Kind::Full: return true;
    case BasicOpen::Kind::LeftRay: return p.is_bottom() || cut_order(CutPoint::in_l(p.elem()), o.cut()) < 0;
    case BasicOpen::Kind::PuncturedRay: return !p.is_bottom() && cut_order(CutPoint::in_l(p.elem()), o.cut()) < 0;
  }
  return false;
}

/// x in p[O] iff p^-1(x) in O; z is fixed.
inline bool member_of_image(const Point& x, const FinitePerm& p, const BasicOpen& o) {
  if (x.is_bottom()) return member(x, o);
  return member(Point::in(p.inverse()(x.elem())), o);
}

/// Membership in tau_c straight from the defining list of opens.
inline bool in_tau(const BasicOpen& o, const CutPoint& c) {
  if (o.kind() != BasicOpen::Kind::PuncturedRay) return true;
  return cut_order(o.cut(), c) <= 0;
}

// ---- finite topologies -------------------------------------------------------------

/// Every family of subsets of {0..n-1} checked against the axioms, n <= 4.
inline std::vector<std::uint32_t> all_topologies_by_closure(std::size_t n) {
  const std::uint32_t subsets = 1u << n;
  const std::uint32_t full = subsets - 1;
  std::vector<std::uint32_t> out;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t f = 0; f < families; ++f) {
    if (!(f & 1u) || !((f >> full) & 1u)) continue;
    bool ok = true;
    for (std::uint32_t a = 0; a < subsets && ok; ++a) {
      if (!((f >> a) & 1u)) continue;
      for (std::uint32_t b = 0; b < subsets; ++b) {
        if (((f >> b) & 1u) && (!((f >> (a | b)) & 1u) || !((f >> (a & b)) & 1u))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(static_cast<std::uint32_t>(f));
  }
  return out;
}

inline std::uint32_t image_of_family(std::size_t n, std::uint32_t f, const std::vector<int>& pi) {
  std::uint32_t out = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!((f >> s) & 1u)) continue;
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1u) t |= 1u << pi[i];
    }
    out |= 1u << t;
  }
  return out;
}

/// Orbit count via Burnside: the mean number of topologies each permutation fixes.
inline std::size_t burnside_orbits(std::size_t n, const std::vector<std::uint32_t>& tops) {
  std::vector<int> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<int>(i);
  std::size_t fixed = 0;
  std::size_t group = 0;
  do {
    ++group;
    for (std::uint32_t t : tops) fixed += image_of_family(n, t, pi) == t;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return fixed / group;
}

}  // namespace oracle
