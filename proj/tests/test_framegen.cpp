#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "framekit/analysis.hpp"
#include "framekit/framegen.hpp"

using namespace framekit;

namespace {

double mag(const Frame& f, std::int64_t a, std::int64_t b) {
  return std::abs(inner(f.vectors.col(a), f.vectors.col(b)));
}

bool is_flat(const Frame& f, double tau = kTauFlat) {
  const double target = 1.0 / std::sqrt(static_cast<double>(f.dim()));
  for (std::int64_t j = 0; j < f.size(); ++j) {
    for (std::int64_t i = 0; i < f.dim(); ++i) {
      if (std::abs(std::abs(f.vectors(i, j)) - target) > tau) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("framegen") {

TEST_CASE("one-dimensional cyclic frame is the scalar 1") {
  const Frame f = cyclic_frame({1, {0}});
  CHECK(f.size() == 1);
  CHECK(f.dim() == 1);
  CHECK(std::abs(f.vectors(0, 0) - std::complex<double>(1.0, 0.0)) < 1e-15);
}

TEST_CASE("the (7,3,1) cyclic frame is flat and equiangular") {
  const Frame f = cyclic_frame({7, {0, 1, 3}});
  CHECK(f.size() == 7);
  CHECK(is_flat(f));
  const double want = std::sqrt(2.0) / 3.0;
  for (std::int64_t a = 0; a < 7; ++a) {
    for (std::int64_t b = a + 1; b < 7; ++b) {
      CHECK(mag(f, a, b) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("the picket fence cyclic frame takes two off-peak values") {
  const Frame f = cyclic_frame({8, {0, 1, 3}});
  CHECK(mag(f, 0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(mag(f, 0, 1) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("cyclic frames reject repeated exponents") {
  CHECK_THROWS_AS(cyclic_frame({8, {0, 1, 9}}), Error);  // 9 = 1 mod 8
  try {
    cyclic_frame({7, {0, 0, 3}});
    FAIL("expected DuplicateExponents");
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_exponents);
  }
}

TEST_CASE("adjoining a basis to the Singer frame gives the 10-vector OGF") {
  const Frame f = singer_ogf(2);
  CHECK(f.size() == 10);
  CHECK(f.dim() == 3);
  CHECK(f.labels[0] == Label::basis(0));
  CHECK(f.labels[3] == Label::cyclic(0));
  CHECK(coherence(f) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("adjoining a basis to the picket frame gives the 11-vector OGF") {
  const Frame f = picket_ogf(3);
  CHECK(f.size() == 11);
  CHECK(coherence(f) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("adjoining to an empty flat set returns the basis") {
  Frame empty;
  empty.vectors.resize(4, 0);
  const Frame f = adjoin_basis(empty);
  CHECK(f.size() == 4);
  CHECK((f.vectors - Eigen::MatrixXcd::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("adjoin_basis rejects non-flat input") {
  Frame basis;
  basis.vectors = Eigen::MatrixXcd::Identity(3, 3);
  basis.labels.assign(3, Label::custom());
  try {
    adjoin_basis(basis);
    FAIL("expected NotFlat");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_flat);
  }
}

TEST_CASE("chirps at K=2 are three unbiased orthonormal bases") {
  const Frame f = chirp_mub(2);
  REQUIRE(f.size() == 6);
  // All 12 cross-base inner products have magnitude 1/sqrt(2).
  int cross = 0;
  for (std::int64_t a = 0; a < 6; ++a) {
    for (std::int64_t b = 0; b < 6; ++b) {
      if (a / 2 == b / 2) continue;
      CHECK(mag(f, a, b) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
      ++cross;
    }
  }
  CHECK(cross == 24);  // 12 unordered pairs
}

TEST_CASE("chirps at odd primes form K+1 mutually unbiased bases") {
  for (std::int64_t K : {3, 5}) {
    const Frame f = chirp_mub(K);
    REQUIRE(f.size() == K * (K + 1));
    for (std::int64_t a = 0; a < f.size(); ++a) {
      for (std::int64_t b = a + 1; b < f.size(); ++b) {
        const bool same_base = f.labels[static_cast<std::size_t>(a)].a ==
                               f.labels[static_cast<std::size_t>(b)].a;
        const double m = mag(f, a, b);
        if (same_base) {
          CHECK(m < 1e-12);
        } else {
          CHECK(m ==
                doctest::Approx(1.0 / std::sqrt(static_cast<double>(K))).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("each chirp base is orthonormal") {
  const Frame f = chirp_mub(7);
  for (std::int64_t k = 0; k <= 7; ++k) {
    const Eigen::MatrixXcd base = f.vectors.middleCols(k * 7, 7);
    CHECK((base.adjoint() * base - Eigen::MatrixXcd::Identity(7, 7)).norm() < 1e-12);
  }
}

TEST_CASE("chirp_mub rejects composite K") {
  try {
    chirp_mub(4);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_prime);
  }
}

TEST_CASE("the five-vector frame in C^2 reproduces the published magnitudes") {
  const Frame f = example_5_2();
  REQUIRE(f.size() == 5);
  REQUIRE(f.dim() == 2);
  CHECK(mag(f, 0, 1) < 1e-15);  // orthonormal basis pair
  for (std::int64_t a = 2; a < 5; ++a) {
    for (std::int64_t b = a + 1; b < 5; ++b) {
      CHECK(mag(f, a, b) == doctest::Approx(0.5).epsilon(1e-12));
    }
    for (std::int64_t e = 0; e < 2; ++e) {
      CHECK(mag(f, e, a) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("picket blocks partition the cyclic frame") {
  const auto blocks = picket_blocks({8, {0, 1, 3}});
  REQUIRE(blocks.size() == 2);
  std::int64_t total = 0;
  for (const auto& b : blocks) {
    CHECK(b.size() == 4);
    total += b.size();
    for (std::int64_t a = 0; a < b.size(); ++a) {
      for (std::int64_t c = a + 1; c < b.size(); ++c) {
        CHECK(mag(b, a, c) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
      }
    }
    const auto tight = tightness(b);
    CHECK(tight.bound == doctest::Approx(4.0 / 3.0));
    CHECK(tight.residual < 1e-9);
  }
  CHECK(total == 8);  // K^2 - 1
  CHECK(mutually_unbiased(blocks[0], blocks[1]));
}

TEST_CASE("picket_blocks rejects non-picket sequences") {
  try {
    picket_blocks({8, {0, 1, 2}});
    FAIL("expected NotPicketFence");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_picket_fence);
  }
  CHECK_THROWS_AS(picket_blocks({9, {0, 1, 3}}), Error);  // modulus is not K^2-1
}

TEST_CASE("dropping basis vectors keeps the coherence of the picket OGF") {
  const Frame f = picket_ogf(3);
  const Frame g = drop_basis_vectors(f, 1);
  CHECK(g.size() == 10);  // K^2 + 1
  CHECK(coherence(g) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  std::int64_t basis_left = 0;
  for (const auto& label : g.labels) basis_left += label.kind == Label::Kind::basis ? 1 : 0;
  CHECK(basis_left == 2);

  const Frame f5 = picket_ogf(5);
  CHECK(drop_basis_vectors(f5, 3).size() == 26);  // K^2 + 1 at count = K-2
}

TEST_CASE("drop_basis_vectors rejects out-of-range counts") {
  const Frame f = picket_ogf(3);
  for (std::int64_t count : {0, 2, 5}) {
    try {
      drop_basis_vectors(f, count);
      FAIL("expected TooManyRemoved");
    } catch (const Error& e) {
      CHECK(e.code() == errc::too_many_removed);
    }
  }
}

TEST_CASE("cyclic inner products depend only on the index difference") {
  for (const GeneratingSequence& seq :
       {GeneratingSequence{7, {0, 1, 3}}, GeneratingSequence{24, {0, 1, 3, 11, 20}},
        GeneratingSequence{64, {0, 3, 5, 17, 40}}}) {
    const Frame f = cyclic_frame(seq);
    const std::int64_t M = f.size();
    for (std::int64_t j = 0; j < M; ++j) {
      for (std::int64_t l = 0; l < M; ++l) {
        const double lhs = mag(f, j, l);
        const double rhs = mag(f, 0, ((l - j) % M + M) % M);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("adjoined coherence is the larger of the flat coherence and 1/sqrt(K)") {
  for (std::int64_t q : {2, 3, 4}) {
    const Frame cyc = cyclic_frame(to_sequence(singer_set(q, 1)));
    const Frame f = adjoin_basis(cyc);
    const double want =
        std::max(coherence(cyc), 1.0 / std::sqrt(static_cast<double>(cyc.dim())));
    CHECK(coherence(f) == doctest::Approx(want).epsilon(1e-12));
  }
  const Frame pf = cyclic_frame(to_sequence(relative_set(3, 1)));
  CHECK(coherence(adjoin_basis(pf)) ==
        doctest::Approx(std::max(coherence(pf), 1.0 / std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("adjoining a tight flat frame keeps tightness with bound (M+K)/K") {
  for (std::int64_t q : {2, 3}) {
    const Frame cyc = cyclic_frame(to_sequence(singer_set(q, 1)));
    REQUIRE(tightness(cyc).is_tight);
    const Frame f = adjoin_basis(cyc);
    const auto t = tightness(f);
    CHECK(t.is_tight);
    CHECK(t.bound == doctest::Approx(static_cast<double>(f.size()) / f.dim()));
  }
}

TEST_CASE("cyclic frames are flat to machine precision") {
  for (std::int64_t q : {2, 3, 5}) {
    CHECK(is_flat(cyclic_frame(to_sequence(singer_set(q, 1))), 1e-12));
    CHECK(is_flat(cyclic_frame(to_sequence(relative_set(q, 1))), 1e-12));
  }
}

}  // TEST_SUITE
