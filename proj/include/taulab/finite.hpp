#pragma once

// Exhaustive topology bookkeeping on an n-point set, n <= 5.
//
// A subset of {0..n-1} is a bitmask; a family of subsets is a 32-bit mask whose
// bit S is set when subset S belongs to the family.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace taulab {

using Family = std::uint32_t;

constexpr std::size_t kMaxFinitePoints = 5;
/// The n! condensation matrix is built only up to this size.
constexpr std::size_t kMaxCondensationPoints = 4;

struct FiniteTop {
  std::size_t n;
  Family opens;

  std::size_t size() const;
  std::string to_string() const;
  friend bool operator==(const FiniteTop&, const FiniteTop&) = default;
};

/// Contains the empty and full sets and is closed under pairwise union and intersection.
bool is_topology(std::size_t n, Family f);
/// The smallest topology containing f.
Family generated_topology(std::size_t n, Family f);
Family finite_meet(Family a, Family b);
Family finite_join(std::size_t n, Family a, Family b);

Family discrete(std::size_t n);
Family antidiscrete(std::size_t n);

/// All topologies on n points, sorted by family mask. Throws SizeTooLarge for n > 5.
std::vector<FiniteTop> enumerate_topologies(std::size_t n);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<std::uint8_t>> permutations(std::size_t n);
/// pi[f] = { pi[S] : S in f }.
Family permute_family(std::size_t n, Family f, const std::vector<std::uint8_t>& pi);
/// The least mask in the orbit of f under all permutations.
Family canonical_form(std::size_t n, Family f);

/// Orbits of the symmetric group, as lists of indices into enumerate_topologies(n);
/// ordered by canonical representative.
std::vector<std::vector<std::size_t>> homeo_classes(std::size_t n);

struct CondensationRelation {
  std::size_t n;
  std::vector<FiniteTop> tops;
  /// leq[i][j]: some continuous bijection tops[j] -> tops[i], i.e. pi[tops[i]] is contained in tops[j].
  std::vector<std::vector<bool>> leq;
  /// Classes of the symmetric core of leq.
  std::vector<std::vector<std::size_t>> bijective_classes;
  std::vector<std::vector<std::size_t>> homeo_classes;
};

/// Throws SizeTooLarge for n > 4.
CondensationRelation condensation_preorder(std::size_t n);

struct ReversibilityCensus {
  std::size_t n;
  /// Indices into enumerate_topologies(n).
  std::vector<std::size_t> strongly_reversible;
  std::vector<std::size_t> reversible;
};

/// Throws SizeTooLarge for n > 4.
ReversibilityCensus reversibility_census(std::size_t n);

/// Lengths of the inclusion-maximal chains inside the homeomorphism class of
/// enumerate_topologies(n)[index].
std::vector<std::size_t> maximal_chains_in_class(std::size_t n, std::size_t index);

struct FiniteReportRow {
  std::size_t n;
  std::size_t topology_count;
  std::size_t homeo_class_count;
  /// Absent above the condensation size cap.
  std::optional<std::size_t> strongly_reversible_count;
  std::optional<bool> condensation_classes_equal_homeo_classes;
  std::optional<bool> all_reversible;
};

FiniteReportRow finite_report_row(std::size_t n);

}  // namespace taulab
