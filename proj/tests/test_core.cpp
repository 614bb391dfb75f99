#include "doctest.h"
#include "pcm/core.hpp"
#include "pcm/perturbation.hpp"
#include "pcm/spectral.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pcm;

namespace {

Matrix rows4(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix inefficient4() {
  return rows4({{1, 1, 1.0 / 5, 1.0 / 5}, {1, 1, 1.0 / 3, 1.0 / 7}, {5, 3, 1, 1.0 / 4}, {5, 7, 4, 1}});
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const PcmError& e) {
    return e.code();
  }
  FAIL("expected PcmError");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("validate_pcm accepts reciprocal positive matrices") {
  const auto a = validate_pcm(rows4({{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}}));
  CHECK(a.order() == 3);
  CHECK(a(2, 0) == 0.25);

  const auto b = validate_pcm(inefficient4());
  CHECK(b.order() == 4);
  CHECK(b(3, 1) == doctest::Approx(7.0));
}

TEST_CASE("validate_pcm rejects malformed input") {
  CHECK(code_of([] { validate_pcm(rows4({{1, 2}, {0.5, 1}})); }) == ErrorCode::OrderTooSmall);
  CHECK(code_of([] { validate_pcm(Matrix::Ones(3, 4)); }) == ErrorCode::NonSquare);

  Matrix neg = Matrix::Ones(3, 3);
  neg(0, 2) = -1.0;
  CHECK(code_of([&] { validate_pcm(neg); }) == ErrorCode::NonPositiveEntry);

  Matrix skew = Matrix::Ones(3, 3);
  skew(0, 1) = 2.0;
  skew(1, 0) = 0.6;
  CHECK(code_of([&] { validate_pcm(skew); }) == ErrorCode::ReciprocityViolation);

  Matrix diag = Matrix::Ones(3, 3);
  diag(1, 1) = 2.0;
  CHECK(code_of([&] { validate_pcm(diag); }) == ErrorCode::ReciprocityViolation);
}

TEST_CASE("validation makes reciprocity bit-exact") {
  Matrix m = rows4({{1, 3, 7}, {1.0 / 3 * (1 + 1e-10), 1, 0.1}, {1.0 / 7, 10, 1}});
  const auto a = validate_pcm(m);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a(i, i) == 1.0);
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(a(j, i) == 1.0 / a(i, j));
  }
}

TEST_CASE("is_consistent") {
  SUBCASE("perturbation factor 1 is consistent") {
    Matrix m(4, 4);
    const double x[] = {1, 2.5, 0.3, 7};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = x[j] / x[i];
    CHECK(is_consistent(validate_pcm(m)).consistent);
  }
  SUBCASE("A_1.5 is inconsistent") {
    const auto a = build_simple_perturbed({{2, 4, 8}, 1.5, {0, 1}});
    const auto r = is_consistent(a);
    CHECK_FALSE(r.consistent);
    CHECK(r.max_deviation > 0.1);
  }
  SUBCASE("inefficient 4x4 example fails the (1,2,4) triad") {
    const auto a = validate_pcm(inefficient4());
    const auto r = is_consistent(a);
    CHECK_FALSE(r.consistent);
    // a_12 a_24 = 1/7 against a_14 = 1/5.
    CHECK(std::abs(a(0, 1) * a(1, 3) - a(0, 3)) / a(0, 3) == doctest::Approx(2.0 / 7));
    CHECK(r.max_deviation >= 2.0 / 7);
  }
}

TEST_CASE("from_weights and ratio_matrix") {
  const auto a = from_weights(WeightVector(std::vector<double>{0.5, 0.25, 0.25}));
  CHECK(a.entries().isApprox(rows4({{1, 2, 2}, {0.5, 1, 1}, {0.5, 1, 1}}), 1e-15));

  CHECK(from_weights(WeightVector::uniform(5)).entries().isApprox(Matrix::Ones(5, 5)));
  CHECK(ratio_matrix(WeightVector::uniform(4)) == Matrix::Ones(4, 4));

  // Displayed ratio matrices, compared after 4-digit truncation.
  const auto w11 = WeightVector(std::vector<double>{0.07777933, 0.07732534, 0.24353753, 0.60135778});
  const Matrix r11 = ratio_matrix(w11);
  CHECK(oracle::truncate(r11(0, 1), 4) == doctest::Approx(1.0058).epsilon(1e-12));
  CHECK(oracle::truncate(r11(3, 0), 4) == doctest::Approx(7.7315).epsilon(1e-12));

  const auto w51 = WeightVector(std::vector<double>{0.57313428, 0.23374121, 0.12874966, 0.06437483});
  const Matrix r51 = ratio_matrix(w51);
  CHECK(oracle::truncate(r51(0, 1), 4) == doctest::Approx(2.4520).epsilon(1e-12));
  CHECK(oracle::truncate(r51(0, 3), 4) == doctest::Approx(8.9030).epsilon(1e-12));
}

TEST_CASE("WeightVector rejects non-positive components") {
  CHECK(code_of([] { WeightVector(std::vector<double>{1, 0, 2}); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { WeightVector(std::vector<double>{}); }) == ErrorCode::InvalidWeights);
  const WeightVector w(std::vector<double>{2, 6, 2});
  CHECK(w.values().sum() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(0.6));
}

TEST_CASE("property: consistent round trips through the eigenvector") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform_int(rng, 3, 12);
    const auto w = gen::random_weights(rng, n);
    const auto a = from_weights(w);
    CHECK(is_consistent(a).consistent);
    CHECK_NOTHROW(validate_pcm(ratio_matrix(w)));
    const auto pair = perron_eigenpair(a);
    CHECK((pair.w_em.values() - w.values()).cwiseAbs().maxCoeff() <= 1e-10);
  }
}
