#pragma once

// Seeded, platform-independent sampling of elements and cuts.

#include "taulab/completion.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace taulab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi], lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

  /// An independent stream keyed by a label, derived only from this stream's seed.
  static std::uint64_t derive(std::uint64_t seed, std::string_view label);

 private:
  std::mt19937_64 engine_;
};

struct SampleShape {
  std::int64_t radius = 20;   // integer parts and copy indices in [-radius, radius]
  std::int64_t max_den = 16;  // rational denominators
  std::int64_t grid = 64;     // resolution used when sampling inside an interval
};

Elem sample_elem(const OrderExpr& order, Rng& rng, const SampleShape& shape = {});
/// Nullopt when the completion has no gaps.
std::optional<CutPoint> sample_gap(const CompletionSpec& spec, Rng& rng, const SampleShape& shape = {});
/// An L-point or (when the completion has them) a gap, roughly half and half.
CutPoint sample_cut(const CompletionSpec& spec, Rng& rng, const SampleShape& shape = {});

/// An element strictly between lo and hi; a missing bound means unbounded on that side.
/// Nullopt when the interval holds no element.
std::optional<Elem> sample_elem_between(const CompletionSpec& spec, const std::optional<CutPoint>& lo,
                                        const std::optional<CutPoint>& hi, Rng& rng,
                                        const SampleShape& shape = {});

/// A cut strictly between lo and hi (gap or L-point), or nullopt if none is found.
std::optional<CutPoint> sample_cut_between(const CompletionSpec& spec, const CutPoint& lo, const CutPoint& hi,
                                           Rng& rng, const SampleShape& shape = {});

}  // namespace taulab
