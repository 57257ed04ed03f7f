#include "taulab/cli.hpp"

#include "taulab/claims.hpp"
#include "taulab/error.hpp"
#include "taulab/homeo.hpp"
#include "taulab/report.hpp"
#include "taulab/text.hpp"
#include "taulab/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace taulab {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string order = "Q";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::vector<std::string> claims;
  std::string out;
  std::string format = "json";
  std::vector<std::size_t> n;
  std::string c1;
  std::string c2;
  bool no_timing = false;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_output(text, o.out);
  }
}

void require_format(const std::string& format) {
  if (format != "json" && format != "text") {
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + format + "'");
  }
}

int run_verify(const Options& o, std::ostream& out) {
  SuiteConfig config;
  config.order_text = o.order;
  config.seed = o.seed;
  config.samples = o.samples;
  config.claims = o.claims;
  config.out = o.out;
  config.format = o.format;
  config.timing = !o.no_timing;
  const Report report = run_suite(config);
  emit(render_report(report, o.format), o, out);
  return report.passed() ? kPass : kFail;
}

int run_finite(const Options& o, std::ostream& out) {
  require_format(o.format);
  FiniteReport report;
  report.sizes = o.n.empty() ? std::vector<std::size_t>{1, 2, 3, 4} : o.n;
  report.format = o.format;
  for (std::size_t n : report.sizes) {
    if (n == 0 || n > kMaxFinitePoints) {
      throw Error(ErrorKind::SizeTooLarge, "--n must lie in 1.." + std::to_string(kMaxFinitePoints));
    }
  }
  for (std::size_t n : report.sizes) report.rows.push_back(finite_report_row(n));
  emit(render_finite(report), o, out);
  return kPass;
}

int run_complete(const Options& o, std::ostream& out) {
  emit(complete(parse_order(o.order)).describe() + "\n", o, out);
  return kPass;
}

std::pair<CutPoint, CutPoint> cut_args(const Options& o, const OrderExpr& order) {
  if (o.c1.empty() || o.c2.empty()) throw Error(ErrorKind::InvalidArgument, "--c1 and --c2 are required");
  return {parse_cut(order, o.c1), parse_cut(order, o.c2)};
}

int run_compare(const Options& o, std::ostream& out) {
  require_format(o.format);
  const OrderExpr order = suite_order(o.order);
  const auto [c1, c2] = cut_args(o, order);
  const TopLeq r = top_leq(c1, c2);
  const char* verdict = r.verdict == TopLeq::Verdict::StrictlyLess ? "StrictlyLess"
                        : r.verdict == TopLeq::Verdict::Equal      ? "Equal"
                                                                   : "NotLeq";
  const std::string witness = r.witness ? r.witness->to_string() : "";
  const std::string sep = r.sep ? r.sep->to_string() : "";
  if (o.format == "json") {
    nlohmann::ordered_json doc = {{"c1", c1.to_string()}, {"c2", c2.to_string()}, {"verdict", verdict}};
    doc["witness"] = r.witness ? nlohmann::ordered_json(witness) : nlohmann::ordered_json(nullptr);
    doc["sep"] = r.sep ? nlohmann::ordered_json(sep) : nlohmann::ordered_json(nullptr);
    emit(doc.dump(2) + "\n", o, out);
  } else {
    std::string text = std::string(verdict) + "\n";
    if (r.witness) text += "witness " + witness + "\nsep " + sep + "\n";
    emit(text, o, out);
  }
  return kPass;
}

nlohmann::ordered_json checks_json(const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"samples", c.samples}, {"witnesses", c.witnesses}});
  }
  return arr;
}

int run_homeo(const Options& o, std::ostream& out) {
  require_format(o.format);
  const OrderExpr order = suite_order(o.order);
  const auto [c1, c2] = cut_args(o, order);
  nlohmann::ordered_json doc = {{"source", c1.to_string()}, {"target", c2.to_string()}};
  bool passed = false;
  std::vector<CheckResult> checks;
  if (is_gap(c1) && is_gap(c2)) {
    const GapHomeo g = homeo_between_gaps(c1, c2, o.samples, o.seed);
    checks = g.verification.checks;
    checks.push_back(g.meet_formula);
    doc["map"] = g.map.f.to_string();
    passed = g.passed();
  } else {
    const ChainClass cls = same_chain_class(c1, c2);
    if (cls.verdict == ChainClass::Verdict::Yes && cls.map) {
      const HomeoReport rep = verify_homeo(*cls.map, o.samples, o.seed);
      checks = rep.checks;
      doc["map"] = cls.map->f.to_string();
      passed = rep.passed();
    } else {
      doc["map"] = nullptr;
      doc["reason"] = cls.reason;
      if (cls.obstruction) {
        doc["obstruction"] = {{"gap", cls.obstruction->gap.to_string()},
                              {"point", cls.obstruction->point.to_string()}};
      }
    }
  }
  doc["checks"] = checks_json(checks);
  doc["passed"] = passed;
  if (o.format == "json") {
    emit(doc.dump(2) + "\n", o, out);
  } else {
    std::ostringstream text;
    text << c1.to_string() << " -> " << c2.to_string() << ": " << (passed ? "homeomorphic" : "not verified") << "\n";
    if (doc.contains("reason")) text << "  " << doc["reason"].get<std::string>() << "\n";
    for (const auto& c : checks) {
      text << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.samples << " samples)\n";
      for (const auto& w : c.witnesses) text << "    witness: " << w << "\n";
    }
    emit(text.str(), o, out);
  }
  return passed ? kPass : kFail;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seeded verification of the tau_c topologies on linear orders"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "Order expression, e.g. Q or lex(Z,Z)");
    sub->add_option("--seed", o.seed, "Seed for every sampled check");
    sub->add_option("--samples", o.samples, "Sample budget")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--format", o.format, "json or text");
  };
  CLI::App* verify = app.add_subcommand("verify", "Run claim suites");
  common(verify);
  verify->add_option("--claims", o.claims, "Comma-separated claim ids")->delimiter(',');
  verify->add_flag("--no-timing", o.no_timing, "Report elapsedMs as 0");
  CLI::App* finite = app.add_subcommand("finite", "Finite topology explorer");
  common(finite);
  finite->add_option("--n", o.n, "Point counts, comma-separated")->delimiter(',');
  CLI::App* completion = app.add_subcommand("complete", "Describe the completion of an order");
  common(completion);
  CLI::App* compare = app.add_subcommand("compare", "Compare tau_c1 with tau_c2");
  common(compare);
  compare->add_option("--c1", o.c1, "First cut")->required();
  compare->add_option("--c2", o.c2, "Second cut")->required();
  CLI::App* homeo = app.add_subcommand("homeo", "Build and verify a map tau_c1 -> tau_c2");
  common(homeo);
  homeo->add_option("--c1", o.c1, "Source cut")->required();
  homeo->add_option("--c2", o.c2, "Target cut")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return run_verify(o, out);
    if (*finite) return run_finite(o, out);
    if (*completion) return run_complete(o, out);
    if (*compare) return run_compare(o, out);
    return run_homeo(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace taulab
