#include "cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "riskax/io.hpp"
#include "riskax/riskax.hpp"

namespace riskax::cli {
namespace {

using io::json;

struct Options {
  bool as_json = false;
  std::string metric;
  std::string rv;
  std::string g;
  std::string tree_file;
  std::string mode = "compounded";
  std::string demo_name;
  std::string tree_demo_name;
  std::size_t trials = kDefaultAuditTrials;
  std::uint64_t seed = 0;
};

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- commands ---------------------------------------------------------------

void cmd_eval(const Options& o, std::ostream& out) {
  const MetricSpec spec = io::metric_from_json(io::load(o.metric));
  const CostRandomVariable z = io::random_variable_from_json(io::load(o.rv));
  const double value = evaluate(spec, z);
  if (o.as_json)
    print_json(out, {{"metric", io::to_json(spec)}, {"name", spec.name()}, {"value", value}});
  else
    out << num(value) << "\n";
}

void cmd_audit(const Options& o, std::ostream& out) {
  const MetricSpec spec = io::metric_from_json(io::load(o.metric));
  const AuditReport report = audit_all(metric_under_test(spec), o.trials, o.seed);
  if (o.as_json) {
    print_json(out, io::to_json(report));
    return;
  }
  out << render_report(report) << "\n";
  const AuditReport one[] = {report};
  out << render_table(one);
}

void cmd_choquet(const Options& o, std::ostream& out) {
  const SetFunction g = io::set_function_from_json(io::load(o.g));
  const CostRandomVariable z = io::random_variable_from_json(io::load(o.rv));
  const bool monotone = static_cast<bool>(check_monotone(g));
  const bool normalized = static_cast<bool>(check_normalized(g));
  const bool checked = g.outcomes() <= kMaxSubmodularCheckOutcomes;
  const bool submodular = checked && static_cast<bool>(check_submodular(g));
  const double value = choquet_integral(z, g);
  if (o.as_json) {
    json j{{"value", value}, {"monotone", monotone}, {"normalized", normalized}};
    j["submodular"] = checked ? json(submodular) : json(nullptr);
    print_json(out, j);
    return;
  }
  out << num(value) << "\n";
  out << "monotone: " << (monotone ? "yes" : "no") << ", normalized: " << (normalized ? "yes" : "no")
      << ", submodular: " << (checked ? (submodular ? "yes" : "no") : "not checked (n > 12)") << "\n";
}

void cmd_envelope(const Options& o, std::ostream& out) {
  const RiskEnvelope env = envelope_of(io::set_function_from_json(io::load(o.g)));
  if (o.as_json) {
    print_json(out, io::to_json(env));
    return;
  }
  out << "[\n";
  for (std::size_t i = 0; i < env.vertices().size(); ++i)
    out << "  " << json(env.vertices()[i]).dump() << (i + 1 < env.vertices().size() ? ",\n" : "\n");
  out << "]\n";
}

void cmd_tree_eval(const Options& o, std::ostream& out) {
  const MetricSpec spec = io::metric_from_json(io::load(o.metric));
  const ScenarioTree tree = io::tree_from_json(io::load(o.tree_file));
  if (o.mode == "static") {
    const double root = static_eval(tree, spec);
    if (o.as_json)
      print_json(out, {{"mode", "static"}, {"metric", io::to_json(spec)}, {"root", root}});
    else
      out << num(root) << "\n";
    return;
  }
  const CompoundedValues values = compounded_eval(tree, spec);
  if (o.as_json) {
    print_json(out, {{"mode", "compounded"},
                     {"metric", io::to_json(spec)},
                     {"root", values.root()},
                     {"nodes", io::node_values_to_json(tree, values.node_values)}});
    return;
  }
  out << num(values.root()) << "\n";
  for (NodeId v = 0; v < tree.size(); ++v)
    out << "  " << std::setw(12) << std::left << tree.path_label(v) << " depth " << tree.node(v).depth << "  "
        << num(values.node_values[v]) << "\n";
}

json fig5_json(const Fig5Demo& d) {
  return {{"static_root", d.static_root},
          {"static_stage1", d.static_stage1},
          {"compounded_root", d.compounded.root()},
          {"compounded_nodes", io::node_values_to_json(d.tree, d.compounded.node_values)},
          {"tree", io::to_json(d.tree)}};
}

void demo_fig5_cmd(const Options& o, std::ostream& out) {
  const Fig5Demo d = demo_fig5();
  if (o.as_json)
    print_json(out, fig5_json(d));
  else
    out << d.render();
}

void cmd_demo(const Options& o, std::ostream& out) {
  if (o.demo_name == "table1") {
    const Table1Demo d = demo_table1();
    if (o.as_json)
      print_json(out, {{"mean_variance_z", d.mean_variance_z},
                       {"mean_variance_zprime", d.mean_variance_zprime},
                       {"z_pointwise_cheaper", d.z_pointwise_cheaper},
                       {"monotonicity", io::to_json(d.monotonicity)}});
    else
      out << d.render();
  } else if (o.demo_name == "table2") {
    const Table2Demo d = demo_table2();
    if (o.as_json)
      print_json(out, {{"var_z", d.var_z}, {"var_zprime", d.var_zprime}, {"cvar_z", d.cvar_z}, {"cvar_zprime", d.cvar_zprime}});
    else
      out << d.render();
  } else if (o.demo_name == "table3") {
    std::vector<AuditReport> reports;
    for (const auto& m : table3_metrics()) reports.push_back(audit_all(m, o.trials, o.seed));
    if (o.as_json) {
      json rs = json::array();
      for (const auto& r : reports) rs.push_back(io::to_json(r));
      print_json(out, {{"trials", o.trials}, {"seed", o.seed}, {"reports", rs}});
    } else {
      out << "axiom audit, " << o.trials << " random trials per axiom, seed " << o.seed << "\n\n"
          << render_table(reports);
    }
  } else {
    demo_fig5_cmd(o, out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Evaluate, cross-check and audit risk metrics over finite cost distributions", "riskax"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "Machine-readable JSON output"); };
  const std::string metric_help = "Metric spec: a JSON file or inline JSON, e.g. {\"kind\":\"cvar\",\"alpha\":0.3}";
  const std::string rv_help = "Random variable: JSON file or inline {\"probs\":[...],\"values\":[...]}";
  const std::string g_help = "Set function: JSON file or inline {\"n\":N,\"table\":[...2^N entries]}";

  auto* eval = app.add_subcommand("eval", "Evaluate a metric on a random variable");
  eval->add_option("--metric", o.metric, metric_help)->required();
  eval->add_option("--rv", o.rv, rv_help)->required();
  add_json(eval);

  auto* audit = app.add_subcommand("audit", "Audit a metric against axioms A1-A6");
  audit->add_option("--metric", o.metric, metric_help)->required();
  audit->add_option("--trials", o.trials, "Random trials per axiom")->capture_default_str()->check(CLI::PositiveNumber);
  audit->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_json(audit);

  auto* choquet = app.add_subcommand("choquet", "Choquet integral of a random variable against a capacity");
  choquet->add_option("--g", o.g, g_help)->required();
  choquet->add_option("--rv", o.rv, rv_help)->required();
  add_json(choquet);

  auto* envelope = app.add_subcommand("envelope", "Core vertices (risk envelope) of a submodular capacity, n <= 7");
  envelope->add_option("--g", o.g, g_help)->required();
  add_json(envelope);

  auto* tree = app.add_subcommand("tree", "Static and compounded risk on scenario trees");
  tree->require_subcommand(1);
  auto* tree_eval = tree->add_subcommand("eval", "Evaluate a metric on a scenario tree");
  tree_eval->add_option("--mode", o.mode, "static: metric of the total cost; compounded: nested one-step metric")
      ->check(CLI::IsMember({"static", "compounded"}))
      ->capture_default_str();
  tree_eval->add_option("--metric", o.metric, metric_help)->required();
  tree_eval->add_option("tree", o.tree_file, "Scenario tree JSON file or inline JSON")->required();
  add_json(tree_eval);
  auto* tree_demo = tree->add_subcommand("demo", "Built-in scenario-tree examples");
  tree_demo->add_option("name", o.tree_demo_name, "Example name")->required()->check(CLI::IsMember({"fig5"}));
  add_json(tree_demo);

  auto* demo = app.add_subcommand("demo", "Reproduce the reference examples");
  demo->add_option("name", o.demo_name, "table1 | table2 | table3 | fig5")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3", "fig5"}));
  demo->add_option("--trials", o.trials, "Random trials per axiom (table3)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  demo->add_option("--seed", o.seed, "Random seed (table3)")->capture_default_str();
  add_json(demo);

  // CLI11 takes the arguments reversed and without the program name.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed())
      cmd_eval(o, out);
    else if (audit->parsed())
      cmd_audit(o, out);
    else if (choquet->parsed())
      cmd_choquet(o, out);
    else if (envelope->parsed())
      cmd_envelope(o, out);
    else if (tree_eval->parsed())
      cmd_tree_eval(o, out);
    else if (tree_demo->parsed())
      demo_fig5_cmd(o, out);
    else if (demo->parsed())
      cmd_demo(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const io::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace riskax::cli
