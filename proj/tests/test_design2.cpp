#include <doctest.h>

#include <cmath>
#include <vector>

#include "framekit/design2.hpp"

using namespace framekit;

namespace {

WeightedFrame uniform_weights(const Frame& f) {
  return {f, std::vector<double>(static_cast<std::size_t>(f.size()),
                                 1.0 / static_cast<double>(f.size()))};
}

// Rotates vector `j` by `angle` towards a direction orthogonal to it.
Frame perturb(Frame f, std::int64_t j, double angle) {
  Eigen::VectorXcd v = f.vectors.col(j);
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(f.dim());
  w(0) = 1.0;
  w -= v * inner(w, v);
  if (w.norm() < 0.5) {
    w.setZero();
    w(1) = 1.0;
    w -= v * inner(w, v);
  }
  w /= w.norm();
  f.vectors.col(j) = std::cos(angle) * v + std::sin(angle) * w;
  return f;
}

}  // namespace

TEST_SUITE("design2") {

TEST_CASE("closed-form weights at K=3") {
  CHECK(singer_alpha(3) == Rational(1, 12));  // 7/84
  CHECK(singer_beta(3) == Rational(3, 28));
  CHECK(picket_alpha(3) == Rational(1, 12));
  CHECK(picket_beta(3) == Rational(3, 32));
}

TEST_CASE("weight normalization is exact for 2 <= K <= 50") {
  for (std::int64_t K = 2; K <= 50; ++K) {
    const std::int64_t Ms = K * K - K + 1;
    const std::int64_t Mp = K * K - 1;
    CHECK(Rational(K) * singer_alpha(K) + Rational(Ms) * singer_beta(K) == Rational(1));
    CHECK(Rational(K) * picket_alpha(K) + Rational(Mp) * picket_beta(K) == Rational(1));
    CHECK(singer_alpha(K).to_double() > 0.0);
    CHECK(singer_beta(K).to_double() > 0.0);
    CHECK(picket_alpha(K).to_double() <= 1.0);
    CHECK(picket_beta(K).to_double() <= 1.0);
  }
}

TEST_CASE("singer weights attach by label class") {
  const auto wf = singer_weights(singer_ogf(2));
  REQUIRE(wf.weights.size() == 10);
  for (int i = 0; i < 3; ++i) CHECK(wf.weights[i] == doctest::Approx(1.0 / 12.0));
  for (int j = 3; j < 10; ++j) CHECK(wf.weights[j] == doctest::Approx(3.0 / 28.0));
}

TEST_CASE("design sum hits 2/(K(K+1)) for the weighted Singer family") {
  for (std::int64_t q : {2, 3, 4}) {
    const auto wf = singer_weights(singer_ogf(q));
    const auto cert = design_sum(wf, 2);
    const double K = static_cast<double>(wf.frame.dim());
    CHECK(cert.target == doctest::Approx(2.0 / (K * (K + 1.0))).epsilon(1e-15));
    CHECK(cert.defect <= 1e-9);
    CHECK(cert.verdict);
  }
}

TEST_CASE("design sum hits 2/(K(K+1)) for the weighted picket family") {
  for (std::int64_t q : {3, 4, 5}) {
    const auto wf = picket_weights(picket_ogf(q));
    const auto cert = design_sum(wf, 2);
    CHECK(cert.defect <= 1e-9);
    CHECK(cert.verdict);
  }
}

TEST_CASE("uniform weights on a tight frame give 1/K at t=1") {
  const auto wf = uniform_weights(cyclic_frame(to_sequence(singer_set(2, 1))));
  const auto cert = design_sum(wf, 1);
  CHECK(cert.target == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(cert.defect <= 1e-12);
  CHECK(cert.verdict);
}

TEST_CASE("projector sums match the design sums") {
  CHECK(projector_sum_check(uniform_weights(cyclic_frame(to_sequence(singer_set(2, 1)))), 1) <=
        1e-9);
  CHECK(projector_sum_check(singer_weights(singer_ogf(2)), 2) <= 1e-8);
  CHECK(projector_sum_check(picket_weights(picket_ogf(4)), 2) <= 1e-8);
}

TEST_CASE("both characterizations agree on every generated design up to K=5") {
  std::vector<WeightedFrame> designs;
  for (std::int64_t q : {2, 3, 4}) designs.push_back(singer_weights(singer_ogf(q)));
  for (std::int64_t q : {3, 4, 5}) designs.push_back(picket_weights(picket_ogf(q)));
  for (const auto& wf : designs) {
    const bool sum_ok = design_sum(wf, 2).verdict;
    const bool proj_ok = projector_sum_check(wf, 2) <= 1e-8;
    CHECK(sum_ok == proj_ok);
    CHECK(sum_ok);
    CHECK(wf.frame.size() >= wf.frame.dim() * wf.frame.dim());  // 2-design size bound
  }
}

TEST_CASE("perturbing one vector breaks both certificates") {
  const auto wf = singer_weights(singer_ogf(2));
  WeightedFrame bad{perturb(wf.frame, 5, 0.1), wf.weights};
  const auto cert = design_sum(bad, 2);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.defect > 1e-3);
  CHECK(projector_sum_check(bad, 2) > 1e-3);
}

TEST_CASE("shape mismatches are rejected") {
  try {
    singer_weights(picket_ogf(3));  // 8 cyclic vectors, not K^2-K+1 = 7
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == errc::shape_mismatch);
  }
  try {
    picket_weights(singer_ogf(2));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == errc::shape_mismatch);
  }
}

TEST_CASE("prerequisite failures are rejected") {
  Frame f = singer_ogf(2);
  f.vectors.col(4) = f.vectors.col(3);  // duplicate cyclic vector: not equiangular
  try {
    singer_weights(f);
    FAIL("expected PrereqFailed");
  } catch (const Error& e) {
    CHECK(e.code() == errc::prereq_failed);
  }

  Frame g = picket_ogf(3);
  g.vectors.col(5) *= std::polar(1.0, 0.3);  // phase twist keeps flatness, breaks the blocks
  try {
    picket_weights(g);
    FAIL("expected PrereqFailed");
  } catch (const Error& e) {
    CHECK(e.code() == errc::prereq_failed);
  }
}

TEST_CASE("projector check caps the dimension at t=2") {
  Frame big;
  big.vectors = Eigen::MatrixXcd::Identity(17, 17);
  for (std::int64_t i = 0; i < 17; ++i) big.labels.push_back(Label::basis(i));
  try {
    projector_sum_check(uniform_weights(big), 2);
    FAIL("expected DimTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == errc::dim_too_large);
  }
}

TEST_CASE("design_sum validates the weights") {
  const Frame f = singer_ogf(2);
  WeightedFrame wf{f, std::vector<double>(10, 0.2)};  // sums to 2
  CHECK_THROWS_AS(design_sum(wf, 2), Error);
  WeightedFrame neg{f, std::vector<double>(10, 0.1)};
  neg.weights[0] = -0.1;
  neg.weights[1] = 0.3;
  CHECK_THROWS_AS(design_sum(neg, 2), Error);
}

TEST_CASE("picket weights accept block labels") {
  const auto blocks = picket_blocks(to_sequence(relative_set(3, 1)));
  Frame assembled;
  assembled.vectors.resize(3, 11);
  assembled.vectors.leftCols(3) = Eigen::MatrixXcd::Identity(3, 3);
  for (std::int64_t i = 0; i < 3; ++i) assembled.labels.push_back(Label::basis(i));
  std::int64_t col = 3;
  for (const auto& b : blocks) {
    for (std::int64_t j = 0; j < b.size(); ++j) {
      assembled.vectors.col(col++) = b.vectors.col(j);
      assembled.labels.push_back(b.labels[static_cast<std::size_t>(j)]);
    }
  }
  const auto wf = picket_weights(assembled);
  CHECK(design_sum(wf, 2).verdict);
}

}  // TEST_SUITE
