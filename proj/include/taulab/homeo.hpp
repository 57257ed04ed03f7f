#pragma once

// Homeomorphisms between the tau_c, the chain-class question for two cuts, and
// the chains f[tau_x] obtained from finite-support permutations f.

#include "taulab/topology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace taulab {

/// A map of L_z built from an automorphism f of L, sending tau_source onto
/// tau_target. bottom_image is empty for a genuine homeomorphism (z -> z);
/// setting it produces a deliberately broken map.
struct HomeoMap {
  Automorphism f;
  std::optional<Elem> bottom_image;
  CutPoint source;
  CutPoint target;
  CompletionMap extension;
};

/// Source InL(x1), target InL(phi(x1)). Throws UnsupportedOrder outside the
/// supported completions.
HomeoMap homeo_from_automorphism(const Automorphism& phi, const Elem& x1);
/// Source c, target F(c) for the extension F of phi.
HomeoMap homeo_from_automorphism(const Automorphism& phi, const CutPoint& source);

Point map_point(const HomeoMap& h, const Point& p);
/// [z,a) -> [z,F(a)), (z,b) -> (z,F(b)).
BasicOpen image_of_open(const HomeoMap& h, const BasicOpen& o);
BasicOpen preimage_of_open(const HomeoMap& h, const BasicOpen& o);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t samples = 0;
  std::vector<std::string> witnesses;
};

struct HomeoReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Null when every check passed.
  const CheckResult* first_failure() const;
};

/// Checks f(z)=z, target=F(source), openness, continuity, point conjugation and
/// the trace (z,source) -> (z,target) on `budget` sampled opens and points each.
HomeoReport verify_homeo(const HomeoMap& h, std::size_t budget = 1000, std::uint64_t seed = 0);

/// Why tau_gap and tau_point are not homeomorphic: the trace of (z,gap] equals
/// that of (z,gap) while (z,point] has the extra point `point`.
struct Obstruction {
  CutPoint gap;
  CutPoint point;
};

struct ChainClass {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict;
  std::optional<HomeoMap> map;
  std::optional<Obstruction> obstruction;
  std::string reason;
};

ChainClass same_chain_class(const CutPoint& c1, const CutPoint& c2);

/// Re-checks an obstruction on sampled elements: no element equals the gap,
/// every element below it has a larger one still below it, and the point lies
/// in its own closed trace but not in its punctured ray.
CheckResult validate_obstruction(const Obstruction& o, std::size_t samples = 1000, std::uint64_t seed = 0);

struct GapHomeo {
  HomeoMap map;
  HomeoReport verification;
  /// F carries the tau_x, x above c0, onto tau_{F(x)} with F(x) above c1, and
  /// punctured rays keep their side of the gap.
  CheckResult meet_formula;

  bool passed() const { return verification.passed() && meet_formula.passed; }
};

/// A homeomorphism tau_{c0} -> tau_{c1} between gaps: a minor shift in lex(Z,Z),
/// a positive rational affine map between surds sharing a radicand.
/// Throws UnsupportedOrder otherwise.
GapHomeo homeo_between_gaps(const CutPoint& c0, const CutPoint& c1, std::size_t budget = 100,
                            std::uint64_t seed = 0);

/// True iff q^-1 o p is order-preserving; for finite support that means the identity.
bool chains_equal(const FinitePerm& p, const FinitePerm& q);
/// An inversion x < y of q^-1 o p (so r(x) > r(y)), when the chains differ.
std::optional<std::pair<Elem, Elem>> chain_violation(const FinitePerm& p, const FinitePerm& q);

/// O1 in p[tau_x] \ q[tau_y] and O2 in q[tau_y] \ p[tau_x]. Rays are tried at
/// cuts on and next to the supports. Throws SearchExhausted after `budget` candidates.
std::pair<PerturbedOpen, PerturbedOpen> incomparable_witness(const FinitePerm& p, const Elem& x, const FinitePerm& q,
                                                             const Elem& y, std::size_t budget = 1000);

/// The k disjoint pairs (e_2i, e_2i+1) of consecutive elements stepping up from
/// some_element(order).
std::vector<std::pair<Elem, Elem>> chain_pairs(const OrderExpr& order, std::size_t k);
/// The pair-swap permutation selecting the pairs whose bit is set in mask.
FinitePerm pair_swap(const OrderExpr& order, const std::vector<std::pair<Elem, Elem>>& pairs, std::uint64_t mask);

/// Number of distinct chains among the 2^k pair-swap permutations; k <= 20.
std::size_t count_distinct_chains(std::size_t k, const OrderExpr& order = OrderExpr::rationals());

/// The chain {perm[tau_c] : c in the parameter set}.
struct ChainDescriptor {
  enum class Parameters { L, Completion, GapClass };
  FinitePerm perm;
  Parameters parameters = Parameters::L;

  /// perm[tau_c]; throws InvalidArgument when c is outside the parameter set.
  TopDescriptor member(const CutPoint& c) const;
};

}  // namespace taulab
