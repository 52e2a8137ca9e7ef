#ifndef RISKAX_IO_HPP
#define RISKAX_IO_HPP

// JSON interchange for random variables, metric specs, set functions,
// envelopes, scenario trees and audit reports. Decoding errors are raised as
// ValidationError with a JSON-pointer path to the offending value.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "riskax/audit.hpp"
#include "riskax/choquet.hpp"
#include "riskax/dynamic.hpp"
#include "riskax/envelope.hpp"
#include "riskax/probability.hpp"
#include "riskax/static_metrics.hpp"

namespace riskax::io {

using json = nlohmann::json;

/// A decoding error already qualified with the JSON path of the offending value.
class JsonPathError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

namespace detail {

inline std::string child_path(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
inline std::string child_path(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw JsonPathError((path.empty() ? "/" : path) + ": " + what);
}

inline const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

inline void reject_unknown_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto k : known) ok = ok || it.key() == k;
    if (!ok) fail(child_path(path, it.key()), "unknown key");
  }
}

inline const json& field(const json& j, std::string_view key, const std::string& path) {
  const auto it = j.find(std::string(key));
  if (it == j.end()) fail(child_path(path, key), "missing required key");
  return *it;
}

inline double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

inline double number_or(const json& j, std::string_view key, double fallback, const std::string& path) {
  const auto it = j.find(std::string(key));
  return it == j.end() ? fallback : number(*it, child_path(path, key));
}

inline std::vector<double> number_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], child_path(path, i)));
  return out;
}

// Re-raise constructor validation errors with the path of the object.
template <class F>
auto validated(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const JsonPathError&) {
    throw;
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

}  // namespace detail

/// Parses `text` as JSON; `source` names the input in error messages.
[[nodiscard]] inline json parse(std::string_view text, const std::string& source = "<inline>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": malformed JSON (" + std::string(e.what()) + ")");
  }
}

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
[[nodiscard]] inline json load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse(arg);
  std::ifstream in(arg);
  if (!in) throw ValidationError(arg + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), arg);
}

// ---- random variables ------------------------------------------------------

[[nodiscard]] inline CostRandomVariable random_variable_from_json(const json& j, const std::string& path = "") {
  detail::require_object(j, path);
  detail::reject_unknown_keys(j, path, {"probs", "values"});
  auto probs = detail::number_array(detail::field(j, "probs", path), detail::child_path(path, "probs"));
  auto values = detail::number_array(detail::field(j, "values", path), detail::child_path(path, "values"));
  if (probs.size() != values.size())
    detail::fail(path, "probs and values must have equal length (" + std::to_string(probs.size()) + " vs " +
                           std::to_string(values.size()) + ")");
  return detail::validated(path, [&] { return CostRandomVariable(std::move(probs), std::move(values)); });
}

[[nodiscard]] inline json to_json(const CostRandomVariable& z) {
  return {{"probs", std::vector<double>(z.probs().begin(), z.probs().end())},
          {"values", std::vector<double>(z.values().begin(), z.values().end())}};
}

// ---- metric specs ----------------------------------------------------------

[[nodiscard]] inline MetricSpec metric_from_json(const json& j, const std::string& path = "") {
  using detail::child_path;
  detail::require_object(j, path);
  const json& kind_j = detail::field(j, "kind", path);
  if (!kind_j.is_string()) detail::fail(child_path(path, "kind"), "expected a string");
  const auto kind = kind_j.get<std::string>();
  auto alpha = [&] { return detail::number(detail::field(j, "alpha", path), child_path(path, "alpha")); };
  return detail::validated(path, [&]() -> MetricSpec {
    if (kind == "expected") {
      detail::reject_unknown_keys(j, path, {"kind"});
      return MetricSpec::expected();
    }
    if (kind == "worst_case") {
      detail::reject_unknown_keys(j, path, {"kind"});
      return MetricSpec::worst_case();
    }
    if (kind == "var") {
      detail::reject_unknown_keys(j, path, {"kind", "alpha"});
      return MetricSpec::var(alpha());
    }
    if (kind == "cvar") {
      detail::reject_unknown_keys(j, path, {"kind", "alpha"});
      return MetricSpec::cvar(alpha());
    }
    if (kind == "mean_variance") {
      detail::reject_unknown_keys(j, path, {"kind", "beta"});
      return MetricSpec::mean_variance(detail::number_or(j, "beta", 1.0, path));
    }
    if (kind == "entropic") {
      detail::reject_unknown_keys(j, path, {"kind", "theta"});
      return MetricSpec::entropic(detail::number_or(j, "theta", 1.0, path));
    }
    if (kind == "semideviation") {
      detail::reject_unknown_keys(j, path, {"kind", "c"});
      return MetricSpec::semideviation(detail::number_or(j, "c", 1.0, path));
    }
    if (kind == "mixture") {
      detail::reject_unknown_keys(j, path, {"kind", "atoms"});
      const auto atoms_path = child_path(path, "atoms");
      const json& atoms_j = detail::field(j, "atoms", path);
      if (!atoms_j.is_array()) detail::fail(atoms_path, "expected an array");
      std::vector<SpectralAtom> atoms;
      for (std::size_t i = 0; i < atoms_j.size(); ++i) {
        const auto ap = child_path(atoms_path, i);
        detail::require_object(atoms_j[i], ap);
        detail::reject_unknown_keys(atoms_j[i], ap, {"alpha", "weight"});
        atoms.push_back({detail::number(detail::field(atoms_j[i], "alpha", ap), child_path(ap, "alpha")),
                         detail::number(detail::field(atoms_j[i], "weight", ap), child_path(ap, "weight"))});
      }
      return MetricSpec::mixture(SpectralMeasure(std::move(atoms)));
    }
    detail::fail(child_path(path, "kind"), "unknown metric kind '" + kind + "'");
  });
}

[[nodiscard]] inline json to_json(const MetricSpec& spec) {
  return std::visit(riskax::detail::overloaded{
                        [](const metric::Expected&) { return json{{"kind", "expected"}}; },
                        [](const metric::WorstCase&) { return json{{"kind", "worst_case"}}; },
                        [](const metric::ValueAtRisk& m) { return json{{"kind", "var"}, {"alpha", m.alpha}}; },
                        [](const metric::ConditionalValueAtRisk& m) {
                          return json{{"kind", "cvar"}, {"alpha", m.alpha}};
                        },
                        [](const metric::MeanVariance& m) { return json{{"kind", "mean_variance"}, {"beta", m.beta}}; },
                        [](const metric::Entropic& m) { return json{{"kind", "entropic"}, {"theta", m.theta}}; },
                        [](const metric::Semideviation& m) { return json{{"kind", "semideviation"}, {"c", m.c}}; },
                        [](const metric::Mixture& m) {
                          json atoms = json::array();
                          for (const auto& a : m.nu.atoms()) atoms.push_back({{"alpha", a.level}, {"weight", a.weight}});
                          return json{{"kind", "mixture"}, {"atoms", atoms}};
                        },
                    },
                    spec.kind());
}

// ---- set functions and envelopes -------------------------------------------

[[nodiscard]] inline SetFunction set_function_from_json(const json& j, const std::string& path = "") {
  detail::require_object(j, path);
  detail::reject_unknown_keys(j, path, {"n", "table"});
  const json& n_j = detail::field(j, "n", path);
  if (!n_j.is_number_unsigned()) detail::fail(detail::child_path(path, "n"), "expected a nonnegative integer");
  auto table = detail::number_array(detail::field(j, "table", path), detail::child_path(path, "table"));
  return detail::validated(path, [&] { return SetFunction(n_j.get<std::size_t>(), std::move(table)); });
}

[[nodiscard]] inline json to_json(const SetFunction& g) {
  return {{"n", g.outcomes()}, {"table", std::vector<double>(g.table().begin(), g.table().end())}};
}

[[nodiscard]] inline json to_json(const RiskEnvelope& env) { return env.vertices(); }

[[nodiscard]] inline RiskEnvelope envelope_from_json(const json& j, const std::string& path = "") {
  if (!j.is_array()) detail::fail(path, "expected an array of pmf arrays");
  std::vector<Pmf> vertices;
  for (std::size_t i = 0; i < j.size(); ++i) vertices.push_back(detail::number_array(j[i], detail::child_path(path, i)));
  return detail::validated(path, [&] { return RiskEnvelope(std::move(vertices)); });
}

// ---- scenario trees --------------------------------------------------------

[[nodiscard]] inline TreeSpec tree_spec_from_json(const json& j, const std::string& path = "") {
  using detail::child_path;
  detail::require_object(j, path);
  detail::reject_unknown_keys(j, path, {"cost", "children"});
  TreeSpec t;
  t.cost = detail::number_or(j, "cost", 0.0, path);
  if (const auto it = j.find("children"); it != j.end()) {
    const auto cp = child_path(path, "children");
    if (!it->is_array()) detail::fail(cp, "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto bp = child_path(cp, i);
      const json& b = (*it)[i];
      detail::require_object(b, bp);
      detail::reject_unknown_keys(b, bp, {"p", "node"});
      const double p = detail::number(detail::field(b, "p", bp), child_path(bp, "p"));
      t.children.push_back({p, tree_spec_from_json(detail::field(b, "node", bp), child_path(bp, "node"))});
    }
  }
  return t;
}

[[nodiscard]] inline ScenarioTree tree_from_json(const json& j) {
  auto spec = tree_spec_from_json(j);
  return detail::validated("", [&] { return ScenarioTree(spec); });
}

[[nodiscard]] inline json to_json(const TreeSpec& t) {
  json j{{"cost", t.cost}};
  if (!t.children.empty()) {
    json children = json::array();
    for (const auto& b : t.children) children.push_back({{"p", b.prob}, {"node", to_json(b.node)}});
    j["children"] = std::move(children);
  }
  return j;
}

[[nodiscard]] inline json to_json(const ScenarioTree& t) { return to_json(t.to_spec()); }

/// Per-node values keyed by child-index path.
[[nodiscard]] inline json node_values_to_json(const ScenarioTree& t, std::span<const double> values) {
  json out = json::array();
  for (NodeId v = 0; v < t.size(); ++v)
    out.push_back({{"node", t.path_label(v)}, {"depth", t.node(v).depth}, {"value", values[v]}});
  return out;
}

// ---- audit reports ---------------------------------------------------------

[[nodiscard]] inline json axiom_list(const AxiomSet& s) {
  json out = json::array();
  for (std::size_t i = 0; i < 6; ++i)
    if (s.test(i)) out.push_back(std::string(label(kAxioms[i])));
  return out;
}

[[nodiscard]] inline json to_json(const PropertyVerdict& v) {
  json j{{"axiom", std::string(label(v.property))},
         {"name", std::string(describe(v.property))},
         {"verdict", std::string(to_string(v.verdict))},
         {"trials", v.trials}};
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    json inputs = json::array();
    for (const auto& z : c.instance.inputs) inputs.push_back(to_json(z));
    j["counterexample"] = {{"source", c.instance.source}, {"inputs", inputs},         {"parameter", c.instance.parameter},
                           {"lhs", c.check.lhs},          {"rhs", c.check.rhs},       {"excess", c.check.excess},
                           {"tolerance", c.check.tolerance}};
  }
  return j;
}

[[nodiscard]] inline json to_json(const AuditReport& r) {
  json axioms = json::array();
  for (const auto& v : r.verdicts) axioms.push_back(to_json(v));
  return {{"metric", r.metric},
          {"seed", r.seed},
          {"trials", r.trials},
          {"claimed", axiom_list(r.claimed)},
          {"unrefuted", axiom_list(r.unrefuted())},
          {"discrepancies", axiom_list(r.discrepancies())},
          {"axioms", axioms}};
}

/// Reads back the counterexample of one axiom entry of an audit report so it
/// can be replayed.
[[nodiscard]] inline AuditCase audit_case_from_json(const json& j, const std::string& path = "") {
  detail::require_object(j, path);
  AuditCase c;
  const json& src = detail::field(j, "source", path);
  if (!src.is_string()) detail::fail(detail::child_path(path, "source"), "expected a string");
  c.source = src.get<std::string>();
  const json& inputs = detail::field(j, "inputs", path);
  if (!inputs.is_array()) detail::fail(detail::child_path(path, "inputs"), "expected an array");
  for (std::size_t i = 0; i < inputs.size(); ++i)
    c.inputs.push_back(random_variable_from_json(inputs[i], detail::child_path(detail::child_path(path, "inputs"), i)));
  c.parameter = detail::number_or(j, "parameter", 0.0, path);
  return c;
}

}  // namespace riskax::io

#endif  // RISKAX_IO_HPP
