#include <gtest/gtest.h>

#include <set>
#include <string>

#include "grover/errors.hpp"
#include "grover_cli/commands.hpp"
#include "grover_cli/render.hpp"
#include "grover_cli/selector.hpp"
#include "support/corpus.hpp"

using namespace grover;
using namespace grover::cli;

namespace {

const Tolerances kDefaults{};

std::multiset<std::pair<std::string, int>> eigen_multiset(const Json& spectrum) {
  std::multiset<std::pair<std::string, int>> out;
  for (const auto& e : spectrum.at("eigenvalues")) {
    out.emplace(e.at("value").get<std::string>(), e.at("multiplicity").get<int>());
  }
  return out;
}

int exit_of(auto&& fn) {
  try {
    return fn().exit_code;
  } catch (const std::exception& e) {
    return exit_code_for(e);
  }
}

}  // namespace

TEST(Selector, ParsesEveryForm) {
  EXPECT_EQ(parse_selector("uc:12").kind, SelectorKind::uc);
  EXPECT_EQ(parse_selector("cycle:6").params, (std::vector<std::int64_t>{6}));
  EXPECT_EQ(parse_selector("complete:4").kind, SelectorKind::complete);
  EXPECT_EQ(parse_selector("circulant:8:1,2,6,7").params, (std::vector<std::int64_t>{8, 1, 2, 6, 7}));
  EXPECT_EQ(parse_selector("named:hamming:3:3").params, (std::vector<std::int64_t>{3, 3}));
  EXPECT_EQ(parse_selector("named:kbip:3").kind, SelectorKind::kbip);
  EXPECT_EQ(parse_selector("named:ktri:2").kind, SelectorKind::ktri);
  const Selector f = parse_selector("file:some/dir:with:colons.txt");
  EXPECT_EQ(f.kind, SelectorKind::file);
  EXPECT_EQ(f.path, "some/dir:with:colons.txt");
}

TEST(Selector, RejectsMalformedText) {
  for (const char* bad : {"uc", "uc:", "uc:x", "uc:12:3", "ring:5", "circulant:8", "circulant:8:1,,7",
                          "named:hamming:3", "named:petersen:1", "named:", "file:", "cycle:6 "}) {
    EXPECT_THROW(parse_selector(bad), UsageError) << bad;
  }
}

TEST(Selector, ResolvesGraphs) {
  EXPECT_EQ(resolve(parse_selector("uc:12")).graph.edge_count(), 24u);
  EXPECT_EQ(resolve(parse_selector("complete:5")).graph.edge_count(), 10u);
  EXPECT_EQ(resolve(parse_selector("named:kbip:3")).graph.vertex_count(), 6u);
  EXPECT_EQ(resolve(parse_selector("named:ktri:2")).graph.edge_count(), 12u);
  EXPECT_EQ(resolve(parse_selector("named:hamming:3:3")).graph.vertex_count(), 27u);
  const auto rg = resolve(parse_selector("file:" + fixtures::data_path("path3.txt")));
  EXPECT_EQ(rg.graph.edge_count(), 2u);
  EXPECT_FALSE(rg.circulant.has_value());
}

TEST(Selector, InvalidParametersAreValidationErrors) {
  EXPECT_THROW(resolve(parse_selector("uc:1")), ValidationError);
  EXPECT_THROW(resolve(parse_selector("cycle:2")), ValidationError);
  EXPECT_THROW(resolve(parse_selector("circulant:8:2,6")), ValidationError);
  EXPECT_THROW(resolve(parse_selector("circulant:8:1,2")), ValidationError);
  EXPECT_THROW(resolve(parse_selector("circulant:8:9,7")), ValidationError);
  EXPECT_THROW(resolve(parse_selector("file:/nonexistent/graph.txt")), ValidationError);
}

TEST(Report, NumberFormatting) {
  EXPECT_EQ(format_number(1e-9), "1e-09");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_value(-1e-16), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_THROW(parse_number("1e-9x"), UsageError);
  EXPECT_THROW(make_tolerances(0.0, 1e-7, 1e-6), UsageError);
  EXPECT_EQ(make_tolerances(0.1234567890123456, 1e-7, 1e-6).identity, 0.123456789012);
}

TEST(Report, RoundTripsThroughJson) {
  const Tolerances tol = make_tolerances(2.5e-10, 3e-8, 1.0 / 7.0);
  const std::vector<Outcome> outcomes{
      cmd_spectrum("uc:12", tol), cmd_period("cycle:6", 144, tol), cmd_pst("uc:12", std::nullopt, tol),
      cmd_verify({Suite::sec5}, tol)};
  for (const auto& o : outcomes) {
    const std::string text = render_json(o.report);
    const RunReport back = report_from_json(Json::parse(text));
    EXPECT_EQ(back, o.report) << o.report.command;
    EXPECT_EQ(render_json(back), text);
  }
}

TEST(Report, SchemaHasTopLevelFields) {
  const Json j = to_json(cmd_spectrum("cycle:6", kDefaults).report);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "selector", "tolerances", "results", "version"}));
  EXPECT_EQ(j["tolerances"]["identity"], "1e-09");
  EXPECT_EQ(j["tolerances"]["amplitude"], "1e-07");
  EXPECT_EQ(j["tolerances"]["cluster"], "1e-06");
  EXPECT_THROW(report_from_json(Json::parse(R"({"command": "x"})")), UsageError);
}

TEST(Spectrum, Examples) {
  const Json uc12 = cmd_spectrum("uc:12", kDefaults).report.results;
  EXPECT_TRUE(uc12["adjacency"]["exact"].get<bool>());
  EXPECT_EQ(eigen_multiset(uc12["adjacency"]),
            (std::multiset<std::pair<std::string, int>>{{"4", 1}, {"2", 2}, {"0", 6}, {"-2", 2}, {"-4", 1}}));

  const Json c6 = cmd_spectrum("cycle:6", kDefaults).report.results;
  EXPECT_EQ(eigen_multiset(c6["adjacency"]),
            (std::multiset<std::pair<std::string, int>>{{"2", 1}, {"1", 2}, {"-1", 2}, {"-2", 1}}));

  const Json p3 = cmd_spectrum("file:" + fixtures::data_path("path3.txt"), kDefaults).report.results;
  EXPECT_FALSE(p3["adjacency"]["exact"].get<bool>());
  EXPECT_EQ(eigen_multiset(p3["adjacency"]),
            (std::multiset<std::pair<std::string, int>>{{"1.41421356237", 1}, {"0", 1}, {"-1.41421356237", 1}}));
  EXPECT_EQ(p3["spectral_map_check"]["status"], "agree");
}

TEST(Spectrum, EvolutionMultiplicitiesSumToArcCount) {
  for (const char* sel : {"uc:12", "cycle:5", "named:hamming:2:3", "named:kbip:3", "complete:4"}) {
    const Json r = cmd_spectrum(sel, kDefaults).report.results;
    int total = 0;
    for (const auto& e : r["evolution"]["eigenvalues"]) total += e["multiplicity"].get<int>();
    EXPECT_EQ(total, r["graph"]["arcs"].get<int>()) << sel;
  }
}

TEST(Period, Examples) {
  const Json uc16 = cmd_period("uc:16", 144, kDefaults).report.results;
  EXPECT_TRUE(uc16["periodic"].get<bool>());
  EXPECT_EQ(uc16["period"], 4);
  EXPECT_TRUE(uc16["agree"].get<bool>());

  const Outcome uc10 = cmd_period("uc:10", 144, kDefaults);
  EXPECT_FALSE(uc10.report.results["periodic"].get<bool>());
  EXPECT_EQ(uc10.exit_code, kExitOk);

  const Json h33 = cmd_period("named:hamming:3:3", 144, kDefaults).report.results;
  EXPECT_EQ(h33["period"], 12);
  std::set<int> orders;
  for (const auto& e : h33["spectral"]["evidence"]) orders.insert(e["order"].get<int>());
  EXPECT_EQ(orders, (std::set<int>{1, 2, 3, 4, 6}));
}

TEST(Period, ShortHorizonIsNotADisagreement) {
  const Outcome o = cmd_period("uc:12", 5, kDefaults);
  EXPECT_EQ(o.exit_code, kExitOk);
  EXPECT_FALSE(o.report.results["bruteforce"]["periodic"].get<bool>());
  EXPECT_EQ(o.report.results["period"], 12);
}

TEST(Pst, Examples) {
  const Json uc12 = cmd_pst("uc:12", std::nullopt, kDefaults).report.results;
  ASSERT_EQ(uc12["certificates"].size(), 12u);
  for (const auto& c : uc12["certificates"]) {
    EXPECT_EQ(c["time"], 6);
    EXPECT_EQ(c["target"].get<int>(), (c["source"].get<int>() + 6) % 12);
    EXPECT_EQ(c["method"], "both");
  }
  EXPECT_EQ(uc12["criterion"]["mismatches"], 0);

  EXPECT_TRUE(cmd_pst("uc:18", std::nullopt, kDefaults).report.results["certificates"].empty());

  const Json c8 = cmd_pst("cycle:8", std::nullopt, kDefaults).report.results;
  ASSERT_EQ(c8["certificates"].size(), 8u);
  for (const auto& c : c8["certificates"]) {
    EXPECT_EQ(c["time"], 4);
    EXPECT_EQ(c["target"].get<int>(), (c["source"].get<int>() + 4) % 8);
  }
}

TEST(Pst, NonPeriodicGraphSearchesToTauMax) {
  const Json k4 = cmd_pst("complete:4", 7, kDefaults).report.results;
  EXPECT_FALSE(k4["periodic"].get<bool>());
  EXPECT_EQ(k4["horizon"], 7);
  EXPECT_EQ(k4["criterion"]["per_tau"].size(), 7u);
}

TEST(Pst, LabelledFileCertificatesCarryLabels) {
  const Json p3 = cmd_pst("file:" + fixtures::data_path("path3_labelled.txt"), 10, kDefaults).report.results;
  for (const auto& c : p3["certificates"]) {
    EXPECT_TRUE(c.contains("source_label"));
    EXPECT_TRUE(c.contains("target_label"));
  }
}

TEST(Verify, Examples) {
  const Outcome t36 = cmd_verify({Suite::thm36, 30}, kDefaults);
  EXPECT_EQ(t36.exit_code, kExitOk);
  EXPECT_EQ(t36.report.results["suites"]["thm36"]["periodic_at"],
            Json::parse("[2,3,4,6,8,9,12,16,18,24,27]"));

  const Outcome t46 = cmd_verify({Suite::thm46, 24}, kDefaults);
  EXPECT_EQ(t46.exit_code, kExitOk);
  EXPECT_EQ(t46.report.results["suites"]["thm46"]["pst_at"], Json::parse("[2,4,6,12]"));

  const Outcome s5 = cmd_verify({Suite::sec5}, kDefaults);
  EXPECT_EQ(s5.exit_code, kExitOk);
  std::vector<std::string> graphs;
  for (const auto& row : s5.report.results["suites"]["sec5"]["table"]) graphs.push_back(row["graph"]);
  EXPECT_EQ(graphs, (std::vector<std::string>{"C6", "K3,3", "K2,2,2", "H(3,3)", "UC(12)"}));
}

TEST(Verify, SmallRandomizedSweepPasses) {
  VerifyOptions opt{Suite::thm42, 10};
  opt.samples = 20;
  opt.tau_max = 20;
  const Outcome o = cmd_verify(opt, kDefaults);
  EXPECT_EQ(o.exit_code, kExitOk);
  EXPECT_EQ(o.report.results["suites"]["thm42"]["table"].size(), 20u);
}

TEST(Verify, GuardsAreValidationErrors) {
  EXPECT_THROW(cmd_verify({Suite::thm36, 101}, kDefaults), ValidationError);
  EXPECT_THROW(cmd_verify({Suite::thm46, 31}, kDefaults), ValidationError);
  EXPECT_THROW(cmd_verify({Suite::thm42, 31}, kDefaults), ValidationError);
  EXPECT_THROW(parse_suite("thm99"), UsageError);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_of([] { return cmd_spectrum("bogus", kDefaults); }), kExitUsage);
  EXPECT_EQ(exit_of([] { return cmd_spectrum("uc:1", kDefaults); }), kExitValidation);
  EXPECT_EQ(exit_of([] { return cmd_spectrum("circulant:6:2,4", kDefaults); }), kExitValidation);
  EXPECT_EQ(exit_of([] { return cmd_period("uc:12", 0, kDefaults); }), kExitUsage);
  EXPECT_EQ(exit_of([] { return cmd_period("uc:12", 144, kDefaults); }), kExitOk);
  EXPECT_EQ(exit_code_for(ConsistencyError("x")), kExitConsistency);
  EXPECT_EQ(exit_code_for(DomainError("x")), kExitValidation);
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  for (const char* sel : {"uc:12", "named:hamming:3:3", "circulant:10:1,3,7,9"}) {
    for (Format f : {Format::text, Format::json, Format::csv}) {
      EXPECT_EQ(render(cmd_spectrum(sel, kDefaults).report, f), render(cmd_spectrum(sel, kDefaults).report, f));
      EXPECT_EQ(render(cmd_pst(sel, 12, kDefaults).report, f), render(cmd_pst(sel, 12, kDefaults).report, f));
    }
  }
  VerifyOptions opt{Suite::thm42, 8};
  opt.samples = 5;
  EXPECT_EQ(render_json(cmd_verify(opt, kDefaults).report), render_json(cmd_verify(opt, kDefaults).report));
}

TEST(Render, CsvTables) {
  const std::string spec = render_csv(cmd_spectrum("cycle:4", kDefaults).report);
  EXPECT_EQ(spec.substr(0, spec.find('\n')), "source,value,multiplicity,exact");
  const std::string verify = render_csv(cmd_verify({Suite::sec5}, kDefaults).report);
  EXPECT_EQ(verify.substr(0, verify.find('\n')),
            "suite,graph,degree,periodic,period,hoffman_residual,walk_regular,label,expected,pass");
  EXPECT_NE(verify.find("sec5,\"K3,3\""), std::string::npos);
}
