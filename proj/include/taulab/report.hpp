#pragma once

// JSON and plain-text rendering of suite and explorer results.

#include "taulab/claims.hpp"
#include "taulab/finite.hpp"

#include <string>
#include <vector>

namespace taulab {

struct FiniteReport {
  std::vector<std::size_t> sizes;
  std::string format = "json";
  std::vector<FiniteReportRow> rows;
};

/// Schema: {config, records[], summary}. Output ends with a newline.
std::string render_report(const Report& report, const std::string& format);
std::string render_finite(const FiniteReport& report);

/// Throws InvalidArgument naming the path on IO failure.
void write_output(const std::string& text, const std::string& path);

}  // namespace taulab
