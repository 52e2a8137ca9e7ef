#include <gtest/gtest.h>

#include <cmath>

#include "riskax/io.hpp"
#include "riskax/riskax.hpp"

using namespace riskax;
using io::json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, RandomVariableRoundTrip) {
  Sampler s(71);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = s.index(1, 20);
    const CostRandomVariable z(s.space(n), s.costs(n, false));
    const auto back = io::random_variable_from_json(io::parse(io::to_json(z).dump()));
    EXPECT_EQ(std::vector<double>(back.values().begin(), back.values().end()),
              std::vector<double>(z.values().begin(), z.values().end()));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(back.probs()[i], z.probs()[i], 1e-15);
  }
}

TEST(Io, RandomVariableErrorsCarryPaths) {
  EXPECT_EQ(error_of([] { (void)io::random_variable_from_json(io::parse(R"({"probs":[0.5,"x"],"values":[1,2]})")); }),
            "/probs/1: expected a number");
  EXPECT_EQ(error_of([] { (void)io::random_variable_from_json(io::parse(R"({"probs":[1]})")); }),
            "/values: missing required key");
  EXPECT_EQ(error_of([] { (void)io::random_variable_from_json(io::parse(R"({"probs":[1],"values":[1],"w":2})")); }),
            "/w: unknown key");
  EXPECT_NE(error_of([] { (void)io::random_variable_from_json(io::parse(R"({"probs":[0.5],"values":[1,2]})")); })
                .find("equal length"),
            std::string::npos);
  EXPECT_NE(error_of([] { (void)io::random_variable_from_json(io::parse(R"({"probs":[0.5,0.6],"values":[1,2]})")); })
                .find("sum to"),
            std::string::npos);
  EXPECT_EQ(error_of([] { (void)io::random_variable_from_json(io::parse("[1,2]")); }), "/: expected an object");
}

TEST(Io, MalformedJsonNamesTheSource) {
  const auto msg = error_of([] { (void)io::parse("{\"probs\": [", "z.json"); });
  EXPECT_EQ(msg.rfind("z.json: malformed JSON", 0), 0u);
  EXPECT_NE(error_of([] { (void)io::load("/nonexistent/z.json"); }).find("cannot open"), std::string::npos);
}

TEST(Io, MetricRoundTripEveryKind) {
  const std::vector<MetricSpec> specs{
      MetricSpec::expected(),        MetricSpec::worst_case(),     MetricSpec::var(0.3),
      MetricSpec::cvar(0.1 + 0.2),   MetricSpec::mean_variance(2), MetricSpec::entropic(0.5),
      MetricSpec::semideviation(0.25), MetricSpec::mixture(SpectralMeasure({{0.3, 0.5}, {1.0, 0.5}}))};
  for (const auto& spec : specs) {
    const auto back = io::metric_from_json(io::parse(io::to_json(spec).dump()));
    EXPECT_EQ(back, spec) << spec.name();
  }
}

TEST(Io, MetricDefaultsAndErrors) {
  EXPECT_EQ(io::metric_from_json(io::parse(R"({"kind":"entropic"})")), MetricSpec::entropic(1.0));
  EXPECT_EQ(io::metric_from_json(io::parse(R"({"kind":"semideviation"})")), MetricSpec::semideviation(1.0));
  EXPECT_EQ(io::metric_from_json(io::parse(R"({"kind":"mean_variance"})")), MetricSpec::mean_variance(1.0));
  EXPECT_NE(error_of([] { (void)io::metric_from_json(io::parse(R"({"kind":"median"})")); }).find("/kind"),
            std::string::npos);
  EXPECT_NE(error_of([] { (void)io::metric_from_json(io::parse(R"({"kind":"cvar"})")); }).find("/alpha"),
            std::string::npos);
  EXPECT_NE(error_of([] { (void)io::metric_from_json(io::parse(R"({"kind":"var","alpha":1})")); }).find("out of range"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              (void)io::metric_from_json(io::parse(R"({"kind":"mixture","atoms":[{"alpha":0.3,"weight":"a"}]})"));
            }).find("/atoms/0/weight"),
            std::string::npos);
  EXPECT_NE(error_of([] { (void)io::metric_from_json(io::parse(R"({"kind":"cvar","alpha":0.3,"beta":1})")); })
                .find("/beta: unknown key"),
            std::string::npos);
}

TEST(Io, SetFunctionRoundTripAndErrors) {
  const auto g = distortion_set_function(SpectralMeasure::point(0.3), ProbabilitySpace({0.4, 0.4, 0.2}));
  EXPECT_EQ(io::set_function_from_json(io::parse(io::to_json(g).dump())), g);
  EXPECT_NE(error_of([] { (void)io::set_function_from_json(io::parse(R"({"n":2,"table":[0,1]})")); }).find("2^2"),
            std::string::npos);
  EXPECT_NE(error_of([] { (void)io::set_function_from_json(io::parse(R"({"n":-1,"table":[0,1]})")); }).find("/n"),
            std::string::npos);
}

TEST(Io, EnvelopeRoundTrip) {
  const auto env = envelope_of(SetFunction::from(3, [](Subset a) { return a ? 1.0 : 0.0; }));
  const auto back = io::envelope_from_json(io::parse(io::to_json(env).dump()));
  EXPECT_EQ(back.vertices(), env.vertices());
}

TEST(Io, TreeRoundTripAndErrors) {
  Sampler s(72);
  for (int t = 0; t < 50; ++t) {
    const auto tree = random_tree(s);
    const auto back = io::tree_from_json(io::parse(io::to_json(tree).dump()));
    EXPECT_EQ(back.costs(), tree.costs());
    EXPECT_EQ(back.size(), tree.size());
    for (NodeId v = 0; v < tree.size(); ++v) EXPECT_EQ(back.node(v).probs, tree.node(v).probs);
  }
  EXPECT_NE(error_of([] {
              (void)io::tree_from_json(io::parse(R"({"children":[{"p":0.5,"node":{"cost":"x"}}]})"));
            }).find("/children/0/node/cost"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              (void)io::tree_from_json(io::parse(R"({"children":[{"p":0.5,"node":{}},{"p":0.4,"node":{}}]})"));
            }).find("sum to"),
            std::string::npos);
  EXPECT_NE(error_of([] { (void)io::tree_from_json(io::parse(R"({"children":[{"prob":1,"node":{}}]})")); })
                .find("/children/0/prob: unknown key"),
            std::string::npos);
}

TEST(Io, AuditReportCounterexampleReplays) {
  const auto m = metric_under_test(MetricSpec::semideviation(1.0));
  const auto report = audit_all(m, 500, 0);
  const json j = io::parse(io::to_json(report).dump());
  EXPECT_EQ(j["metric"], m.name);
  EXPECT_EQ(j["claimed"], json({"A1", "A2", "A3", "A4", "A6"}));
  std::size_t replayed = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& entry = j["axioms"][i];
    EXPECT_EQ(entry["verdict"], std::string(to_string(report.verdicts[i].verdict)));
    if (!entry.contains("counterexample")) continue;
    const AuditCase c = io::audit_case_from_json(entry["counterexample"]);
    const RelationCheck r = check_relation(kAxioms[i], m.eval, c);
    EXPECT_TRUE(r.violated());
    EXPECT_NEAR(r.lhs, entry["counterexample"]["lhs"].get<double>(), 1e-9 * (1.0 + std::abs(r.lhs)));
    ++replayed;
  }
  EXPECT_GE(replayed, 1u);
}

TEST(Io, NodeValues) {
  const auto t = fig5_instance();
  const auto v = compounded_eval(t, MetricSpec::cvar(2.0 / 3.0));
  const json j = io::node_values_to_json(t, v.node_values);
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j[0]["node"], "root");
  EXPECT_EQ(j[1]["node"], "0");
  EXPECT_EQ(j[3]["depth"], 2);
}
