#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "pcm/efficiency.hpp"
#include "pcm/perturbation.hpp"
#include "pcm/spectral.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pcm;

namespace {

PairwiseComparisonMatrix inefficient4() {
  Matrix m(4, 4);
  m << 1, 1, 1.0 / 5, 1.0 / 5, 1, 1, 1.0 / 3, 1.0 / 7, 5, 3, 1, 1.0 / 4, 5, 7, 4, 1;
  return validate_pcm(m);
}

PairwiseComparisonMatrix toy3() {
  Matrix m = Matrix::Ones(3, 3);
  m(0, 1) = 2.0;
  m(1, 0) = 0.5;
  return validate_pcm(m);
}

std::set<IndexPair> arc_set(const PreferenceDigraph& g) {
  const auto arcs = g.arcs();
  return {arcs.begin(), arcs.end()};
}

}  // namespace

TEST_CASE("digraph of inefficient 4x4 example") {
  const auto a = inefficient4();
  const auto w = perron_eigenpair(a).w_em;
  const auto g = build_digraph(a, w);
  CHECK(g.out_degree(1) == 0);
  CHECK(arc_set(g) == std::set<IndexPair>{{0, 1}, {0, 2}, {2, 3}, {3, 0}, {2, 1}, {3, 1}});

  const auto sccs = strongly_connected_components(g);
  REQUIRE(sccs.size() == 2);
  CHECK(sccs[0] == Component{0, 2, 3});
  CHECK(sccs[1] == Component{1});
}

TEST_CASE("digraph of A_1.5") {
  const auto a = build_simple_perturbed({{2, 4, 8}, 1.5, {0, 1}});
  const auto g = build_digraph(a, perron_eigenpair(a).w_em);
  CHECK(arc_set(g) == std::set<IndexPair>{{1, 0}, {0, 2}, {0, 3}, {2, 1}, {3, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("digraph of a consistent matrix is complete") {
  gen::Rng rng(1);
  const auto w = gen::random_weights(rng, 6);
  const auto g = build_digraph(from_weights(w), w);
  CHECK(g.arcs().size() == 30);
}

TEST_CASE("build_digraph and is_efficient check dimensions") {
  CHECK_THROWS_AS(build_digraph(inefficient4(), WeightVector::uniform(3)), PcmError);
  CHECK_THROWS_AS(is_efficient(inefficient4(), WeightVector::uniform(5)), PcmError);
}

TEST_CASE("tarjan on hand-built graphs") {
  PreferenceDigraph chain(4);
  chain.add_arc(2, 0);
  chain.add_arc(0, 3);
  chain.add_arc(3, 1);
  const auto c = strongly_connected_components(chain);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == Component{2});
  CHECK(c[3] == Component{1});

  PreferenceDigraph cycle(3);
  cycle.add_arc(0, 1);
  cycle.add_arc(1, 2);
  cycle.add_arc(2, 0);
  CHECK(strongly_connected_components(cycle).size() == 1);
}

TEST_CASE("is_efficient verdicts") {
  SUBCASE("inefficient 4x4 example eigenvector is inefficient") {
    const auto a = inefficient4();
    const auto v = is_efficient(a, perron_eigenpair(a).w_em);
    CHECK_FALSE(v.efficient);
    CHECK(v.witness.has_value());
    CHECK(v.improved_positions.size() == 6);
  }
  SUBCASE("A_1.5 eigenvector is efficient") {
    const auto a = build_simple_perturbed({{2, 4, 8}, 1.5, {0, 1}});
    const auto v = is_efficient(a, perron_eigenpair(a).w_em);
    CHECK(v.efficient);
    CHECK_FALSE(v.witness.has_value());
  }
  SUBCASE("parametric family eigenvector is inefficient") {
    const auto a = parametric_inefficient(4, 2, 3);
    CHECK_FALSE(is_efficient(a, perron_eigenpair(a).w_em).efficient);
  }
  SUBCASE("consistent eigenvector is efficient") {
    gen::Rng rng(8);
    const auto a = from_weights(gen::random_weights(rng, 7));
    CHECK(is_efficient(a, perron_eigenpair(a).w_em).efficient);
  }
  SUBCASE("uniform weights against the perturbed 3x3 toy tie into one component") {
    CHECK(is_efficient(toy3(), WeightVector::uniform(3)).efficient);
  }
}

TEST_CASE("improve_dominating on inefficient 4x4 example raises w2 to w1") {
  const auto a = inefficient4();
  const auto w = perron_eigenpair(a).w_em;
  const auto witness = improve_dominating(a, w, build_digraph(a, w));
  WeightVector expected(std::vector<double>{w[0], w[0], w[2], w[3]});
  CHECK((witness.values() - expected.values()).cwiseAbs().maxCoeff() <= 1e-12);

  std::vector<std::pair<int, int>> strict;
  CHECK(oracle::dominance(a.entries(), w.values(), witness.values(), 1e-12, &strict) == 1);
  std::sort(strict.begin(), strict.end());
  CHECK(strict == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 2}, {1, 3}, {2, 1}, {3, 1}});
}

TEST_CASE("improve_dominating on a three-component toy") {
  // Arcs 2->1, 2->3, 3->1 (one-based); node 2 is the source and shrinks to 2.
  const auto a = toy3();
  const WeightVector w(std::vector<double>{1, 3, 2});
  const auto g = build_digraph(a, w);
  CHECK(strongly_connected_components(g).size() == 3);
  const auto witness = improve_dominating(a, w, g);
  const WeightVector expected(std::vector<double>{1, 2, 2});
  CHECK((witness.values() - expected.values()).cwiseAbs().maxCoeff() <= 1e-15);

  const auto check = check_dominance(a, w, witness);
  CHECK(check.dominates());
  CHECK(std::find(check.strictly_improved.begin(), check.strictly_improved.end(), IndexPair{0, 1}) !=
        check.strictly_improved.end());
}

TEST_CASE("improve_dominating rejects strongly connected graphs") {
  const auto a = build_simple_perturbed({{2, 4, 8}, 1.5, {0, 1}});
  const auto w = perron_eigenpair(a).w_em;
  try {
    improve_dominating(a, w, build_digraph(a, w));
    FAIL("expected GraphIsStronglyConnected");
  } catch (const PcmError& e) {
    CHECK(e.code() == ErrorCode::GraphIsStronglyConnected);
  }
}

TEST_CASE("dominance_search") {
  SUBCASE("finds a dominator for inefficient 4x4 example") {
    const auto a = inefficient4();
    const auto w = perron_eigenpair(a).w_em;
    const auto found = dominance_search(a, w, 10000, 42);
    REQUIRE(found.has_value());
    CHECK(oracle::dominance(a.entries(), w.values(), found->values(), 1e-12) == 1);
  }
  SUBCASE("finds nothing for A_1.5") {
    const auto a = build_simple_perturbed({{2, 4, 8}, 1.5, {0, 1}});
    CHECK_FALSE(dominance_search(a, perron_eigenpair(a).w_em, 10000, 42).has_value());
  }
  SUBCASE("finds nothing for an exact fit") {
    gen::Rng rng(21);
    const auto w = gen::random_weights(rng, 5);
    CHECK_FALSE(dominance_search(from_weights(w), w, 2000, 7).has_value());
  }
  SUBCASE("deterministic per seed") {
    const auto a = inefficient4();
    const auto w = perron_eigenpair(a).w_em;
    const auto x = dominance_search(a, w, 10000, 5);
    const auto y = dominance_search(a, w, 10000, 5);
    REQUIRE(x.has_value());
    REQUIRE(y.has_value());
    CHECK(x->values() == y->values());
  }
  SUBCASE("budget must be positive") {
    CHECK_THROWS_AS(dominance_search(inefficient4(), WeightVector::uniform(4), 0, 1), PcmError);
  }
}

TEST_CASE("property: simple perturbed eigenvectors give the expected arc pattern") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = gen::spec(rng, 3, 10, 0.01, 100, 1e-6);
    const auto a = build_simple_perturbed(s);
    const auto w = perron_eigenpair(a).w_em;
    const auto g = build_digraph(a, w);
    CHECK(strongly_connected_components(g).size() == 1);

    // For delta < 1 nodes 0 and 1 swap roles.
    const std::size_t hi = s.delta > 1 ? 0 : 1;
    const std::size_t lo = 1 - hi;
    CHECK(g.has_arc(lo, hi));
    CHECK_FALSE(g.has_arc(hi, lo));
    for (std::size_t j = 2; j < s.order(); ++j) {
      CHECK(g.has_arc(hi, j));
      CHECK_FALSE(g.has_arc(j, hi));
      CHECK(g.has_arc(j, lo));
      CHECK_FALSE(g.has_arc(lo, j));
      for (std::size_t k = 2; k < s.order(); ++k)
        if (k != j) CHECK(g.has_arc(j, k));
    }
  }
}

TEST_CASE("property: every node pair carries an arc and witnesses dominate") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform_int(rng, 3, 9);
    const auto a = gen::random_pcm(rng, n);
    const auto w = trial % 2 ? perron_eigenpair(a).w_em : gen::random_weights(rng, n);
    const auto g = build_digraph(a, w);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) CHECK((g.has_arc(i, j) || g.has_arc(j, i)));
    const auto v = is_efficient(a, w);
    if (!v.efficient) {
      REQUIRE(v.witness.has_value());
      CHECK(oracle::dominance(a.entries(), w.values(), v.witness->values(), 1e-12) == 1);
    }
  }
}
