#include "taulab/finite.hpp"

#include "taulab/error.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace taulab {

namespace {

void require_size(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a finite space needs at least one point");
  if (n > cap) {
    throw Error(ErrorKind::SizeTooLarge, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
}

std::uint32_t full_set(std::size_t n) { return (1u << n) - 1; }

bool has(Family f, std::uint32_t s) { return (f >> s) & 1u; }

std::uint32_t permute_set(std::uint32_t s, const std::vector<std::uint8_t>& pi) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (s >> i & 1u) out |= 1u << pi[i];
  }
  return out;
}

// images[p][S] = pi_p[S] for every permutation p and subset S.
std::vector<std::vector<std::uint32_t>> set_images(std::size_t n, const std::vector<std::vector<std::uint8_t>>& perms) {
  std::vector<std::vector<std::uint32_t>> out(perms.size(), std::vector<std::uint32_t>(std::size_t{1} << n));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) out[p][s] = permute_set(s, perms[p]);
  }
  return out;
}

Family apply_images(Family f, const std::vector<std::uint32_t>& images) {
  Family out = 0;
  for (Family rest = f; rest; rest &= rest - 1) out |= Family{1} << images[std::countr_zero(rest)];
  return out;
}

std::vector<std::vector<std::size_t>> classes_from(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& same) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> placed(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (placed[i]) continue;
    classes.push_back({i});
    placed[i] = true;
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!placed[j] && same(i, j)) {
        classes.back().push_back(j);
        placed[j] = true;
      }
    }
  }
  return classes;
}

}  // namespace

std::size_t FiniteTop::size() const { return static_cast<std::size_t>(std::popcount(opens)); }

std::string FiniteTop::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!has(opens, s)) continue;
    if (!first) out += ",";
    first = false;
    out += "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1u) out += std::to_string(i);
    }
    out += "}";
  }
  return out + "}";
}

bool is_topology(std::size_t n, Family f) {
  require_size(n, kMaxFinitePoints);
  if (!has(f, 0) || !has(f, full_set(n))) return false;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (!has(f, a)) continue;
    for (std::uint32_t b = a + 1; b < (1u << n); ++b) {
      if (has(f, b) && (!has(f, a | b) || !has(f, a & b))) return false;
    }
  }
  return true;
}

Family generated_topology(std::size_t n, Family f) {
  require_size(n, kMaxFinitePoints);
  Family g = f | 1u | (Family{1} << full_set(n));
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      if (!has(g, a)) continue;
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if (!has(g, b)) continue;
        const Family add = (Family{1} << (a | b)) | (Family{1} << (a & b));
        if ((g | add) != g) {
          g |= add;
          grew = true;
        }
      }
    }
  }
  return g;
}

Family finite_meet(Family a, Family b) { return a & b; }

Family finite_join(std::size_t n, Family a, Family b) { return generated_topology(n, a | b); }

Family discrete(std::size_t n) {
  require_size(n, kMaxFinitePoints);
  return n == 5 ? ~Family{0} : (Family{1} << (1u << n)) - 1;
}

Family antidiscrete(std::size_t n) {
  require_size(n, kMaxFinitePoints);
  return 1u | (Family{1} << full_set(n));
}

std::vector<FiniteTop> enumerate_topologies(std::size_t n) {
  require_size(n, kMaxFinitePoints);
  // Topologies on a finite set correspond to preorders: the opens are the up-sets.
  std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) off_diagonal.emplace_back(i, j);
    }
  }
  std::vector<FiniteTop> out;
  std::vector<std::uint32_t> up(n);
  for (std::uint32_t rel = 0; rel < (1u << off_diagonal.size()); ++rel) {
    for (std::size_t i = 0; i < n; ++i) up[i] = 1u << i;
    for (std::size_t k = 0; k < off_diagonal.size(); ++k) {
      if (rel >> k & 1u) up[off_diagonal[k].first] |= 1u << off_diagonal[k].second;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((up[i] >> j & 1u) && (up[j] & ~up[i])) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    Family f = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool upward = true;
      for (std::size_t i = 0; i < n && upward; ++i) {
        if ((s >> i & 1u) && (up[i] & ~s)) upward = false;
      }
      if (upward) f |= Family{1} << s;
    }
    out.push_back({n, f});
  }
  std::sort(out.begin(), out.end(), [](const FiniteTop& a, const FiniteTop& b) { return a.opens < b.opens; });
  return out;
}

std::vector<std::vector<std::uint8_t>> permutations(std::size_t n) {
  std::vector<std::uint8_t> pi(n);
  std::iota(pi.begin(), pi.end(), std::uint8_t{0});
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

Family permute_family(std::size_t n, Family f, const std::vector<std::uint8_t>& pi) {
  if (pi.size() != n) throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
  Family out = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (has(f, s)) out |= Family{1} << permute_set(s, pi);
  }
  return out;
}

Family canonical_form(std::size_t n, Family f) {
  Family best = f;
  for (const auto& pi : permutations(n)) best = std::min(best, permute_family(n, f, pi));
  return best;
}

std::vector<std::vector<std::size_t>> homeo_classes(std::size_t n) {
  const auto tops = enumerate_topologies(n);
  const auto images = set_images(n, permutations(n));
  std::map<Family, std::vector<std::size_t>> by_rep;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    Family rep = tops[i].opens;
    for (const auto& img : images) rep = std::min(rep, apply_images(tops[i].opens, img));
    by_rep[rep].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(by_rep.size());
  for (auto& kv : by_rep) out.push_back(std::move(kv.second));
  return out;
}

CondensationRelation condensation_preorder(std::size_t n) {
  require_size(n, kMaxCondensationPoints);
  CondensationRelation rel{n, enumerate_topologies(n), {}, {}, {}};
  const auto images = set_images(n, permutations(n));
  const std::size_t m = rel.tops.size();
  // orbit[i][p] = pi_p[tops[i]]
  std::vector<std::vector<Family>> orbit(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& img : images) orbit[i].push_back(apply_images(rel.tops[i].opens, img));
  }
  rel.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Family target = rel.tops[j].opens;
      rel.leq[i][j] = std::any_of(orbit[i].begin(), orbit[i].end(), [&](Family f) { return (f & ~target) == 0; });
    }
  }
  rel.bijective_classes = classes_from(m, [&](std::size_t i, std::size_t j) { return rel.leq[i][j] && rel.leq[j][i]; });
  rel.homeo_classes = classes_from(m, [&](std::size_t i, std::size_t j) {
    return std::find(orbit[i].begin(), orbit[i].end(), rel.tops[j].opens) != orbit[i].end();
  });
  return rel;
}

ReversibilityCensus reversibility_census(std::size_t n) {
  const CondensationRelation rel = condensation_preorder(n);
  const auto images = set_images(n, permutations(n));
  ReversibilityCensus census{n, {}, {}};
  std::vector<std::size_t> class_size(rel.tops.size());
  for (const auto& cls : rel.bijective_classes) {
    for (std::size_t i : cls) class_size[i] = cls.size();
  }
  for (std::size_t i = 0; i < rel.tops.size(); ++i) {
    const Family t = rel.tops[i].opens;
    bool invariant = true;
    bool reversible = true;
    for (const auto& img : images) {
      const Family moved = apply_images(t, img);
      if (moved != t) invariant = false;
      // A continuous self-bijection pulls every open back to an open.
      if ((moved & ~t) == 0 && moved != t) reversible = false;
    }
    if (invariant && class_size[i] == 1) census.strongly_reversible.push_back(i);
    if (reversible) census.reversible.push_back(i);
  }
  return census;
}

std::vector<std::size_t> maximal_chains_in_class(std::size_t n, std::size_t index) {
  const auto tops = enumerate_topologies(n);
  if (index >= tops.size()) throw Error(ErrorKind::InvalidArgument, "topology index out of range");
  std::vector<Family> cls;
  for (const auto& pi : permutations(n)) cls.push_back(permute_family(n, tops[index].opens, pi));
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());

  auto below = [](Family a, Family b) { return a != b && (a & ~b) == 0; };
  auto covers = [&](Family a, Family b) {
    if (!below(a, b)) return false;
    return std::none_of(cls.begin(), cls.end(), [&](Family c) { return below(a, c) && below(c, b); });
  };
  std::vector<std::size_t> lengths;
  std::function<void(Family, std::size_t)> extend = [&](Family top, std::size_t len) {
    bool extended = false;
    for (Family next : cls) {
      if (covers(top, next)) {
        extended = true;
        extend(next, len + 1);
      }
    }
    if (!extended) lengths.push_back(len);
  };
  for (Family start : cls) {
    const bool minimal = std::none_of(cls.begin(), cls.end(), [&](Family c) { return below(c, start); });
    if (minimal) extend(start, 1);
  }
  return lengths;
}

FiniteReportRow finite_report_row(std::size_t n) {
  FiniteReportRow row{n, enumerate_topologies(n).size(), homeo_classes(n).size(), std::nullopt, std::nullopt,
                      std::nullopt};
  if (n <= kMaxCondensationPoints) {
    const CondensationRelation rel = condensation_preorder(n);
    row.condensation_classes_equal_homeo_classes = rel.bijective_classes == rel.homeo_classes;
    const ReversibilityCensus census = reversibility_census(n);
    row.strongly_reversible_count = census.strongly_reversible.size();
    row.all_reversible = census.reversible.size() == row.topology_count;
  }
  return row;
}

}  // namespace taulab
