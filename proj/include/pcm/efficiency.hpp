#ifndef PCM_EFFICIENCY_HPP_
#define PCM_EFFICIENCY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "pcm/core.hpp"

namespace pcm {

namespace tol {
/// Relative slack for arc inclusion: i -> j iff w_i/w_j >= a_ij (1 - kArc).
inline constexpr double kArc = 1e-9;
/// Absolute slack on the approximation-error comparisons of dominance.
inline constexpr double kDominance = 1e-12;
}  // namespace tol

/// Arc i -> j whenever the weight ratio w_i/w_j does not underestimate a_ij.
class PreferenceDigraph {
 public:
  explicit PreferenceDigraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool has_arc(std::size_t from, std::size_t to) const { return adj_[from * n_ + to] != 0; }
  void add_arc(std::size_t from, std::size_t to) { adj_[from * n_ + to] = 1; }

  /// Arcs in row-major order.
  std::vector<IndexPair> arcs() const;
  std::size_t out_degree(std::size_t node) const;
  std::size_t in_degree(std::size_t node) const;

 private:
  std::size_t n_;
  std::vector<char> adj_;
};

using Component = std::vector<std::size_t>;

struct EfficiencyVerdict {
  bool efficient = false;
  /// Strongly connected components in topological order of the condensation
  /// (sources first); nodes within a component are sorted.
  std::vector<Component> scc_partition;
  std::optional<WeightVector> witness;
  std::vector<IndexPair> improved_positions;
};

/// Outcome of comparing a candidate's approximation errors against a
/// reference vector's, pair by pair.
struct DominanceCheck {
  bool weakly_better_everywhere = true;
  std::vector<IndexPair> strictly_improved;

  bool dominates() const { return weakly_better_everywhere && !strictly_improved.empty(); }
};

DominanceCheck check_dominance(const PairwiseComparisonMatrix& a, const WeightVector& reference,
                               const WeightVector& candidate, double eps = tol::kDominance);

PreferenceDigraph build_digraph(const PairwiseComparisonMatrix& a, const WeightVector& w,
                                double eps_arc = tol::kArc);

/// Tarjan's algorithm; components come out sources first.
std::vector<Component> strongly_connected_components(const PreferenceDigraph& g);

EfficiencyVerdict is_efficient(const PairwiseComparisonMatrix& a, const WeightVector& w,
                               double eps_arc = tol::kArc);

/// Shrinks the first source component of the condensation until its tightest
/// boundary ratio meets the matrix entry. The result is checked against the
/// dominance definition before it is returned.
WeightVector improve_dominating(const PairwiseComparisonMatrix& a, const WeightVector& w,
                                const PreferenceDigraph& digraph);

/// Random single-coordinate rescaling walk looking for any vector that
/// dominates `w`. A hit certifies inefficiency; a miss certifies nothing.
std::optional<WeightVector> dominance_search(const PairwiseComparisonMatrix& a,
                                             const WeightVector& w, std::size_t budget,
                                             std::uint64_t seed);

}  // namespace pcm

#endif  // PCM_EFFICIENCY_HPP_
