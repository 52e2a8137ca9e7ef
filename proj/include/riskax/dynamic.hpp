#ifndef RISKAX_DYNAMIC_HPP
#define RISKAX_DYNAMIC_HPP

// Scenario trees for a fixed policy, static versus compounded (nested)
// risk evaluation, and falsifiers for the local property and time
// consistency of a dynamic evaluator.
//
// Costs label nodes: the root carries Z_0, a node at depth k carries its
// stage cost Z_k and the leaves carry the terminal cost. Each root-to-leaf
// path is one outcome.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riskax/probability.hpp"
#include "riskax/sampling.hpp"
#include "riskax/static_metrics.hpp"
#include "riskax/verdict.hpp"

namespace riskax {

inline constexpr std::size_t kMaxTreeDepth = 16;
inline constexpr std::size_t kMaxTreeBranching = 16;

struct TreeBranch;

/// Nested, user-facing description of a tree (mirrors the JSON format).
struct TreeSpec {
  double cost = 0.0;
  std::vector<TreeBranch> children;
};

struct TreeBranch {
  double prob = 0.0;
  TreeSpec node;
};

using NodeId = std::size_t;

struct TreeNode {
  double cost = 0.0;
  std::size_t depth = 0;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  std::vector<double> probs;  // transition probability to each child
  NodeId subtree_end = 0;     // one past the last node of this subtree
};

/// Validated, flattened scenario tree. Nodes are stored in preorder, so the
/// subtree of node v is the contiguous id range [v, node(v).subtree_end).
class ScenarioTree {
 public:
  explicit ScenarioTree(const TreeSpec& spec) {
    flatten(spec, std::nullopt, 0, "");
    std::optional<std::size_t> leaf_depth;
    for (const auto& n : nodes_) {
      if (!n.children.empty()) continue;
      if (leaf_depth && *leaf_depth != n.depth)
        throw ValidationError("all leaves must sit at the same depth (found " + std::to_string(*leaf_depth) +
                              " and " + std::to_string(n.depth) + ")");
      leaf_depth = n.depth;
    }
    horizon_ = *leaf_depth;
    if (horizon_ == 0) throw ValidationError("scenario tree needs at least one stage below the root");
  }

  [[nodiscard]] static NodeId root() noexcept { return 0; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] std::size_t horizon() const noexcept { return horizon_; }
  [[nodiscard]] const TreeNode& node(NodeId v) const { return nodes_.at(v); }
  [[nodiscard]] bool is_leaf(NodeId v) const { return nodes_.at(v).children.empty(); }
  [[nodiscard]] bool in_subtree(NodeId top, NodeId v) const { return v >= top && v < nodes_.at(top).subtree_end; }

  [[nodiscard]] std::vector<NodeId> nodes_at_depth(std::size_t k) const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < nodes_.size(); ++v)
      if (nodes_[v].depth == k) out.push_back(v);
    return out;
  }

  [[nodiscard]] std::vector<double> costs() const {
    std::vector<double> c(nodes_.size());
    for (NodeId v = 0; v < nodes_.size(); ++v) c[v] = nodes_[v].cost;
    return c;
  }

  /// Same shape and probabilities with new node costs.
  [[nodiscard]] ScenarioTree with_costs(std::span<const double> costs) const {
    if (costs.size() != nodes_.size()) throw ValidationError("cost vector does not match the tree size");
    ScenarioTree t = *this;
    for (NodeId v = 0; v < nodes_.size(); ++v) {
      if (!std::isfinite(costs[v])) throw ValidationError("node costs must be finite");
      t.nodes_[v].cost = costs[v];
    }
    return t;
  }

  /// Child-index path, e.g. "root", "0", "1.0".
  [[nodiscard]] std::string path_label(NodeId v) const {
    std::vector<std::size_t> steps;
    for (NodeId cur = v; nodes_.at(cur).parent; cur = *nodes_[cur].parent) {
      const auto& sib = nodes_[*nodes_[cur].parent].children;
      steps.push_back(static_cast<std::size_t>(std::find(sib.begin(), sib.end(), cur) - sib.begin()));
    }
    if (steps.empty()) return "root";
    std::string s;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) s += (s.empty() ? "" : ".") + std::to_string(*it);
    return s;
  }

  [[nodiscard]] TreeSpec to_spec(NodeId v = root()) const {
    TreeSpec s;
    s.cost = nodes_.at(v).cost;
    for (std::size_t i = 0; i < nodes_[v].children.size(); ++i)
      s.children.push_back({nodes_[v].probs[i], to_spec(nodes_[v].children[i])});
    return s;
  }

 private:
  NodeId flatten(const TreeSpec& spec, std::optional<NodeId> parent, std::size_t depth, const std::string& where) {
    const std::string at = where.empty() ? "root" : where;
    if (depth > kMaxTreeDepth) throw ValidationError("tree deeper than " + std::to_string(kMaxTreeDepth) + " at " + at);
    if (spec.children.size() > kMaxTreeBranching)
      throw ValidationError("node " + at + " has more than " + std::to_string(kMaxTreeBranching) + " children");
    if (!std::isfinite(spec.cost)) throw ValidationError("node " + at + " has a non-finite cost");
    const NodeId id = nodes_.size();
    nodes_.push_back({spec.cost, depth, parent, {}, {}, 0});
    if (!spec.children.empty()) {
      std::vector<double> probs;
      for (const auto& b : spec.children) probs.push_back(b.prob);
      try {
        const ProbabilitySpace normalized(probs);
        nodes_[id].probs.assign(normalized.probs().begin(), normalized.probs().end());
      } catch (const ValidationError& e) {
        throw ValidationError("node " + at + ": transition " + e.what());
      }
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        const std::string child_at = where.empty() ? std::to_string(i) : where + "." + std::to_string(i);
        const NodeId c = flatten(spec.children[i].node, id, depth + 1, child_at);
        nodes_[id].children.push_back(c);
      }
    }
    nodes_[id].subtree_end = nodes_.size();
    return id;
  }

  std::vector<TreeNode> nodes_;
  std::size_t horizon_ = 0;
};

/// Cost accumulated along each root-to-leaf path below `from` (the cost of
/// `from` itself included), weighted by the conditional path probability.
[[nodiscard]] inline CostRandomVariable total_cost_distribution(const ScenarioTree& tree,
                                                                NodeId from = ScenarioTree::root()) {
  std::vector<double> probs, values;
  auto walk = [&](auto&& self, NodeId v, double p, double acc) -> void {
    const auto& n = tree.node(v);
    acc += n.cost;
    if (n.children.empty()) {
      probs.push_back(p);
      values.push_back(acc);
      return;
    }
    for (std::size_t i = 0; i < n.children.size(); ++i) self(self, n.children[i], p * n.probs[i], acc);
  };
  walk(walk, from, 1.0, 0.0);
  return CostRandomVariable(std::move(probs), std::move(values));
}

/// The metric applied once to the total cost, viewed from the root.
[[nodiscard]] inline double static_eval(const ScenarioTree& tree, const MetricSpec& spec,
                                        NodeId from = ScenarioTree::root()) {
  return evaluate(spec, total_cost_distribution(tree, from));
}

struct CompoundedValues {
  std::vector<double> node_values;  // risk-to-go per node, including the node's own cost

  [[nodiscard]] double root() const { return node_values.front(); }
};

/// Nested evaluation: value(leaf) = cost; value(v) = cost(v) +
/// rho_{depth(v)}(child values under the transition probabilities of v).
/// `stage_metrics[k]` is the one-step metric at depth k; a single entry is
/// used at every depth.
[[nodiscard]] inline CompoundedValues compounded_eval(const ScenarioTree& tree,
                                                      std::span<const MetricSpec> stage_metrics) {
  if (stage_metrics.size() != 1 && stage_metrics.size() != tree.horizon())
    throw ValidationError("need one one-step metric or one per stage (" + std::to_string(tree.horizon()) + ")");
  for (const auto& m : stage_metrics)
    if (!m.is_distortion())
      throw ValidationError("one-step metric " + m.name() + " is not a distortion metric");
  CompoundedValues out;
  out.node_values.assign(tree.size(), 0.0);
  for (NodeId v = tree.size(); v-- > 0;) {
    const auto& n = tree.node(v);
    if (n.children.empty()) {
      out.node_values[v] = n.cost;
      continue;
    }
    std::vector<double> child_values;
    child_values.reserve(n.children.size());
    for (NodeId c : n.children) child_values.push_back(out.node_values[c]);
    const auto& rho = stage_metrics[stage_metrics.size() == 1 ? 0 : n.depth];
    out.node_values[v] = n.cost + evaluate(rho, CostRandomVariable(n.probs, std::move(child_values)));
  }
  return out;
}

[[nodiscard]] inline CompoundedValues compounded_eval(const ScenarioTree& tree, const MetricSpec& one_step) {
  return compounded_eval(tree, std::span<const MetricSpec>(&one_step, 1));
}

/// Two-stage tree: the root branches 50/50 to x1 and x1'; x1 ends in
/// terminal costs {1, -3}, x1' in {0, 0}, each 50/50; stage costs are zero.
/// CVaR at 2/3 is <= 0 at both stage-one nodes, yet the static CVaR of the
/// terminal cost seen from the root is 0.375.
[[nodiscard]] inline ScenarioTree fig5_instance() {
  auto leaf = [](double c) { return TreeSpec{c, {}}; };
  TreeSpec x1{0.0, {{0.5, leaf(1.0)}, {0.5, leaf(-3.0)}}};
  TreeSpec x1p{0.0, {{0.5, leaf(0.0)}, {0.5, leaf(0.0)}}};
  return ScenarioTree(TreeSpec{0.0, {{0.5, x1}, {0.5, x1p}}});
}

/// A dynamic evaluator maps a tree to one risk-to-go value per node.
struct DynamicEvaluator {
  std::string name;
  std::function<std::vector<double>(const ScenarioTree&)> values;
};

[[nodiscard]] inline DynamicEvaluator compounded_evaluator(const MetricSpec& one_step) {
  if (!one_step.is_distortion())
    throw ValidationError("one-step metric " + one_step.name() + " is not a distortion metric");
  return {"compounded " + one_step.name(),
          [one_step](const ScenarioTree& t) { return compounded_eval(t, one_step).node_values; }};
}

/// Per node: the metric applied to the total cost of the node's subtree.
[[nodiscard]] inline DynamicEvaluator static_evaluator(const MetricSpec& spec) {
  return {"static " + spec.name(), [spec](const ScenarioTree& t) {
            std::vector<double> out(t.size());
            for (NodeId v = 0; v < t.size(); ++v) out[v] = static_eval(t, spec, v);
            return out;
          }};
}

/// Per node: the metric applied over all root paths, with costs counted from
/// the node on paths through it and in full elsewhere. Scenarios that can no
/// longer occur keep their weight, so this evaluator lacks the local property.
[[nodiscard]] inline DynamicEvaluator root_conditioned_evaluator(const MetricSpec& spec) {
  return {"root-conditioned " + spec.name(), [spec](const ScenarioTree& t) {
            std::vector<double> out(t.size());
            for (NodeId v = 0; v < t.size(); ++v) {
              double prefix = 0.0;
              for (auto p = t.node(v).parent; p; p = t.node(*p).parent) prefix += t.node(*p).cost;
              std::vector<double> probs, values;
              auto walk = [&](auto&& self, NodeId u, double pr, double acc) -> void {
                acc += t.node(u).cost;
                if (t.is_leaf(u)) {
                  probs.push_back(pr);
                  values.push_back(t.in_subtree(v, u) ? acc - prefix : acc);
                  return;
                }
                for (std::size_t i = 0; i < t.node(u).children.size(); ++i)
                  self(self, t.node(u).children[i], pr * t.node(u).probs[i], acc);
              };
              walk(walk, ScenarioTree::root(), 1.0, 0.0);
              out[v] = evaluate(spec, CostRandomVariable(std::move(probs), std::move(values)));
            }
            return out;
          }};
}

/// Two cost assignments on one tree shape that refute a property.
struct TreeWitness {
  std::string source;
  ScenarioTree tree;               // carries the first cost assignment
  std::vector<double> alt_costs;   // the second cost assignment
  NodeId node = 0;                 // where the relation failed
  std::size_t step = 0;            // premise depth k (time consistency only)
  double lhs = 0.0;
  double rhs = 0.0;
};

struct FalsifierVerdict {
  Verdict verdict = Verdict::NoViolationFound;
  std::size_t trials = 0;        // cases evaluated
  std::size_t premise_unmet = 0; // sampled cases discarded because the premise failed
  std::optional<TreeWitness> witness;

  [[nodiscard]] bool violated() const noexcept { return verdict == Verdict::Violated; }
};

inline constexpr double kLocalPropertyTolerance = 1e-9;
inline constexpr double kTimeConsistencyTolerance = 1e-7;

/// Random tree with uniform horizon 1..max_depth and 1..max_branching
/// children per internal node.
[[nodiscard]] inline ScenarioTree random_tree(Sampler& s, std::size_t max_depth = 4, std::size_t max_branching = 3) {
  const std::size_t horizon = s.index(1, max_depth);
  const bool lattice = s.chance(0.25);
  auto cost = [&] { return lattice ? static_cast<double>(s.index(0, 6)) - 3.0 : s.uniform(-10.0, 10.0); };
  auto build = [&](auto&& self, std::size_t depth) -> TreeSpec {
    TreeSpec t{cost(), {}};
    if (depth == horizon) return t;
    const std::size_t k = s.index(depth == 0 ? 2 : 1, std::max<std::size_t>(max_branching, 2));
    const auto probs = s.pmf(k);
    for (std::size_t i = 0; i < k; ++i) t.children.push_back({probs[i], self(self, depth + 1)});
    return t;
  };
  return ScenarioTree(build(build, 0));
}

/// Perturbs every cost outside the subtree of `node` and flags any change of
/// the node's value beyond 1e-9.
[[nodiscard]] inline FalsifierVerdict check_local_property(const ScenarioTree& tree, const DynamicEvaluator& eval,
                                                           NodeId node, std::size_t trials, std::uint64_t seed) {
  if (node >= tree.size() || tree.is_leaf(node))
    throw ValidationError("local property check needs an internal node");
  FalsifierVerdict v;
  const double base = eval.values(tree).at(node);
  Sampler s(seed, 101);
  const auto costs = tree.costs();
  for (std::size_t t = 0; t < trials; ++t) {
    ++v.trials;
    auto perturbed = costs;
    for (NodeId u = 0; u < tree.size(); ++u)
      if (!tree.in_subtree(node, u) && s.chance(0.5)) perturbed[u] += s.uniform(-10.0, 10.0);
    const double now = eval.values(tree.with_costs(perturbed)).at(node);
    if (std::abs(now - base) > kLocalPropertyTolerance) {
      v.verdict = Verdict::Violated;
      v.witness = TreeWitness{"trial " + std::to_string(t), tree, perturbed, node, 0, base, now};
      return v;
    }
  }
  return v;
}

namespace detail {

struct ConsistencyCase {
  std::string source;
  ScenarioTree tree;
  std::vector<double> alt_costs;
  std::size_t step;
};

// Premise: equal costs above depth k and rho_k(Z) <= rho_k(Z') at every
// depth-k node. Conclusion: rho_l(Z) <= rho_l(Z') at every node above depth k.
inline std::optional<bool> consistency_holds(const DynamicEvaluator& eval, const ConsistencyCase& c,
                                             TreeWitness* witness) {
  const auto& t = c.tree;
  const auto alt = t.with_costs(c.alt_costs);
  for (NodeId v = 0; v < t.size(); ++v)
    if (t.node(v).depth < c.step && t.node(v).cost != c.alt_costs[v]) return std::nullopt;
  const auto a = eval.values(t);
  const auto b = eval.values(alt);
  for (NodeId v : t.nodes_at_depth(c.step)) {
    const double slack = 1e-12 * (1.0 + std::abs(a[v]) + std::abs(b[v]));
    if (a[v] > b[v] + slack) return std::nullopt;
  }
  for (NodeId v = 0; v < t.size(); ++v) {
    if (t.node(v).depth >= c.step) continue;
    if (a[v] > b[v] + kTimeConsistencyTolerance) {
      if (witness) *witness = TreeWitness{c.source, t, c.alt_costs, v, c.step, a[v], b[v]};
      return false;
    }
  }
  return true;
}

inline ConsistencyCase random_consistency_case(const DynamicEvaluator& eval, Sampler& s, std::size_t trial) {
  ScenarioTree tree = random_tree(s);
  const std::size_t k = s.index(1, tree.horizon());
  auto z = tree.costs();
  auto zp = z;
  if (s.chance(0.5)) {
    // Raise tail costs of the second assignment.
    for (NodeId v = 0; v < tree.size(); ++v)
      if (tree.node(v).depth >= k && s.chance(0.5)) zp[v] += s.uniform(0.0, 5.0);
  } else {
    // Fresh tail costs; then order each depth-k subtree pair by swapping.
    for (NodeId v = 0; v < tree.size(); ++v)
      if (tree.node(v).depth >= k) zp[v] = s.uniform(-10.0, 10.0);
    const auto a = eval.values(tree);
    const auto b = eval.values(tree.with_costs(zp));
    for (NodeId v : tree.nodes_at_depth(k)) {
      if (a[v] <= b[v]) continue;
      for (NodeId u = v; u < tree.node(v).subtree_end; ++u) std::swap(z[u], zp[u]);
    }
  }
  return {"trial " + std::to_string(trial), tree.with_costs(z), std::move(zp), k};
}

}  // namespace detail

/// Samples cost-stream pairs that satisfy the time-consistency premise at a
/// random step k and flags any node above k whose ordering flips by more
/// than 1e-7. The reconstructed two-stage counterexample is replayed first.
[[nodiscard]] inline FalsifierVerdict check_time_consistency(const DynamicEvaluator& eval, std::size_t trials,
                                                             std::uint64_t seed) {
  FalsifierVerdict v;
  auto run = [&](const detail::ConsistencyCase& c) {
    TreeWitness w{c.source, c.tree, {}, 0, 0, 0.0, 0.0};
    const auto holds = detail::consistency_holds(eval, c, &w);
    ++v.trials;
    if (!holds) {
      ++v.premise_unmet;
      return false;
    }
    if (!*holds) {
      v.verdict = Verdict::Violated;
      v.witness = std::move(w);
      return true;
    }
    return false;
  };
  const ScenarioTree fig5 = fig5_instance();
  if (run({"two-stage counterexample vs. zero costs", fig5, std::vector<double>(fig5.size(), 0.0), 1})) return v;
  Sampler s(seed, 202);
  for (std::size_t t = 0; t < trials; ++t)
    if (run(detail::random_consistency_case(eval, s, t))) return v;
  return v;
}

struct Fig5Demo {
  double static_root = 0.0;
  std::vector<double> static_stage1;  // static CVaR of each depth-1 subtree
  CompoundedValues compounded;
  ScenarioTree tree = fig5_instance();

  [[nodiscard]] std::string render() const {
    std::ostringstream os;
    os << std::setprecision(10);
    os << "scenario tree: root -> x1, x1' (0.5 each); x1 -> terminal {1, -3}; x1' -> terminal {0, 0}\n"
       << "metric: CVaR at alpha = 2/3, acceptable iff value <= 0 (up to 1e-12 rounding)\n\n"
       << "node   static            compounded\n";
    const auto stage1 = tree.nodes_at_depth(1);
    os << std::left << "x0     " << std::setw(18) << static_root << compounded.root() << "\n";
    for (std::size_t i = 0; i < stage1.size(); ++i)
      os << (i == 0 ? "x1     " : "x1'    ") << std::setw(18) << static_stage1[i]
         << compounded.node_values[stage1[i]] << "\n";
    os << std::right;
    os << "\nstatic: acceptable at every stage-one node, yet unacceptable from the root ("
       << static_root << " > 0)\n"
       << "compounded: root value " << compounded.root() << " is consistent with the stage-one values\n";
    return os.str();
  }
};

[[nodiscard]] inline Fig5Demo demo_fig5() {
  Fig5Demo d;
  const auto spec = MetricSpec::cvar(2.0 / 3.0);
  d.static_root = static_eval(d.tree, spec);
  for (NodeId v : d.tree.nodes_at_depth(1)) d.static_stage1.push_back(static_eval(d.tree, spec, v));
  d.compounded = compounded_eval(d.tree, spec);
  return d;
}

}  // namespace riskax

#endif  // RISKAX_DYNAMIC_HPP
