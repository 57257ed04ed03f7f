#pragma once

// Seeded verification suites, one per claim about the tau_c family.

#include "taulab/completion.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace taulab {

struct SuiteConfig {
  std::string order_text = "Q";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  /// Empty means every claim.
  std::vector<std::string> claims;
  std::string out;
  std::string format = "json";
  /// When false, elapsedMs is reported as 0 so reports compare byte for byte.
  bool timing = true;
};

struct ClaimRecord {
  std::string claim_id;
  std::string paper_anchor;
  std::string order;
  std::size_t samples = 0;
  bool passed = true;
  std::vector<std::string> witnesses;
  double elapsed_ms = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<ClaimRecord> records;

  bool passed() const;
};

/// inclusion, homeo, neighborhood, gap, joinmeet, sandwich, chains, gapclass.
const std::vector<std::string>& claim_ids();
/// The fixed formula label attached to a claim; throws InvalidArgument for unknown ids.
std::string_view claim_anchor(std::string_view id);

/// The order the suites run on. Throws ParseError, or UnsupportedOrder for
/// sums and orders without a supported completion.
OrderExpr suite_order(std::string_view text);

/// One claim on one order; the seed fully determines every sample.
ClaimRecord run_claim(std::string_view id, const OrderExpr& order, std::uint64_t seed, std::size_t samples);

/// Validates the whole configuration before running anything.
Report run_suite(const SuiteConfig& config);

/// Monotone families with known limits used by the join/meet suite; empty for Z.
std::vector<SequenceFamily> sequence_catalog(const OrderExpr& order);

}  // namespace taulab
