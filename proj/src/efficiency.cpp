#include "pcm/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace pcm {

std::vector<IndexPair> PreferenceDigraph::arcs() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (has_arc(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::size_t PreferenceDigraph::out_degree(std::size_t node) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += has_arc(node, j) ? 1 : 0;
  return d;
}

std::size_t PreferenceDigraph::in_degree(std::size_t node) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += has_arc(i, node) ? 1 : 0;
  return d;
}

namespace {

void check_dimensions(const PairwiseComparisonMatrix& a, const WeightVector& w) {
  if (a.order() != w.size()) {
    std::ostringstream msg;
    msg << "matrix order " << a.order() << " does not match weight vector length " << w.size();
    throw PcmError(ErrorCode::DimensionMismatch, msg.str());
  }
}

}  // namespace

DominanceCheck check_dominance(const PairwiseComparisonMatrix& a, const WeightVector& reference,
                               const WeightVector& candidate, double eps) {
  check_dimensions(a, reference);
  check_dimensions(a, candidate);
  DominanceCheck check;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double before = std::abs(a(i, j) - reference[i] / reference[j]);
      const double after = std::abs(a(i, j) - candidate[i] / candidate[j]);
      if (after > before + eps) check.weakly_better_everywhere = false;
      if (after < before - eps) check.strictly_improved.push_back({i, j});
    }
  }
  return check;
}

PreferenceDigraph build_digraph(const PairwiseComparisonMatrix& a, const WeightVector& w,
                                double eps_arc) {
  check_dimensions(a, w);
  const std::size_t n = a.order();
  PreferenceDigraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && w[i] / w[j] >= a(i, j) * (1.0 - eps_arc)) g.add_arc(i, j);
    }
  }
  return g;
}

std::vector<Component> strongly_connected_components(const PreferenceDigraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<Component> components;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t u = 0; u < n; ++u) {
      if (!g.has_arc(v, u)) continue;
      if (index[u] == kUnvisited) {
        visit(u);
        low[v] = std::min(low[v], low[u]);
      } else if (on_stack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      Component comp;
      std::size_t u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = 0;
        comp.push_back(u);
      } while (u != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnvisited) visit(v);
  }
  // Tarjan emits sinks first.
  std::reverse(components.begin(), components.end());
  return components;
}

WeightVector improve_dominating(const PairwiseComparisonMatrix& a, const WeightVector& w,
                                const PreferenceDigraph& digraph) {
  check_dimensions(a, w);
  if (digraph.size() != a.order()) {
    throw PcmError(ErrorCode::DimensionMismatch, "digraph size does not match matrix order");
  }
  const auto components = strongly_connected_components(digraph);
  if (components.size() <= 1) {
    throw PcmError(ErrorCode::GraphIsStronglyConnected,
                   "digraph is strongly connected; the weight vector is efficient");
  }

  const std::size_t n = a.order();
  std::vector<char> in_source(n, 0);
  for (std::size_t s : components.front()) in_source[s] = 1;

  // No arc enters the source component, so every boundary ratio w_s/w_t
  // overestimates a_st. Shrinking the component by theta < 1 improves all of
  // them until the tightest one becomes exact.
  double theta = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    if (!in_source[s]) continue;
    for (std::size_t t = 0; t < n; ++t) {
      if (in_source[t]) continue;
      theta = std::max(theta, a(s, t) * w[t] / w[s]);
    }
  }
  if (!(theta > 0.0 && theta < 1.0)) {
    std::ostringstream msg;
    msg << "source component has no overestimated boundary (scale factor " << theta << ")";
    throw PcmError(ErrorCode::NumericalBreakdown, msg.str());
  }

  Vector scaled = w.values();
  for (std::size_t s = 0; s < n; ++s) {
    if (in_source[s]) scaled(static_cast<Eigen::Index>(s)) *= theta;
  }
  WeightVector witness(scaled);
  if (!check_dominance(a, w, witness).dominates()) {
    throw PcmError(ErrorCode::NumericalBreakdown, "constructed vector failed the dominance check");
  }
  return witness;
}

EfficiencyVerdict is_efficient(const PairwiseComparisonMatrix& a, const WeightVector& w,
                               double eps_arc) {
  const auto digraph = build_digraph(a, w, eps_arc);
  EfficiencyVerdict verdict;
  verdict.scc_partition = strongly_connected_components(digraph);
  verdict.efficient = verdict.scc_partition.size() == 1;
  if (!verdict.efficient) {
    verdict.witness = improve_dominating(a, w, digraph);
    verdict.improved_positions = check_dominance(a, w, *verdict.witness).strictly_improved;
  }
  return verdict;
}

std::optional<WeightVector> dominance_search(const PairwiseComparisonMatrix& a,
                                             const WeightVector& w, std::size_t budget,
                                             std::uint64_t seed) {
  check_dimensions(a, w);
  if (budget == 0) throw PcmError(ErrorCode::ParameterDomain, "trial budget must be at least 1");

  constexpr double kStep = 1e-3;
  constexpr std::size_t kStagnation = 200;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
  std::uniform_real_distribution<double> log_step(std::log1p(-kStep), std::log1p(kStep));

  Vector current = w.values();
  std::size_t idle = 0;
  for (std::size_t trial = 0; trial < budget; ++trial) {
    Vector proposal = current;
    proposal(static_cast<Eigen::Index>(pick(rng))) *= std::exp(log_step(rng));
    WeightVector candidate(proposal);

    // Always judged against the original vector, so slack never accumulates.
    const auto check = check_dominance(a, w, candidate);
    if (check.dominates()) return candidate;
    if (check.weakly_better_everywhere) {
      current = candidate.values();
      idle = 0;
    } else if (++idle >= kStagnation) {
      current = w.values();
      idle = 0;
    }
  }
  return std::nullopt;
}

}  // namespace pcm
