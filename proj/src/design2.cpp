#include "framekit/design2.hpp"

#include <cmath>
#include <string>

namespace framekit {
namespace {

void check_flat(const Frame& f, double tau) {
  const double target = 1.0 / std::sqrt(static_cast<double>(f.dim()));
  for (std::int64_t j = 0; j < f.size(); ++j) {
    for (std::int64_t i = 0; i < f.dim(); ++i) {
      if (std::abs(std::abs(f.vectors(i, j)) - target) > tau) {
        fail(errc::prereq_failed, "vector " + std::to_string(j) + " is not flat");
      }
    }
  }
}

std::vector<double> assemble_weights(const Frame& f, const Rational& alpha,
                                     const Rational& beta, std::int64_t K, std::int64_t M) {
  // Normalization holds exactly before any floating-point conversion.
  if (!(Rational(K) * alpha + Rational(M) * beta == Rational(1))) {
    fail(errc::prereq_failed, "weight normalization identity failed");
  }
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(f.size()));
  for (const auto& label : f.labels) {
    w.push_back(label.kind == Label::Kind::basis ? alpha.to_double() : beta.to_double());
  }
  return w;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Rational singer_alpha(std::int64_t K) {
  return Rational(K * K - K + 1, K * (K * K * K + 1));
}

Rational singer_beta(std::int64_t K) { return Rational(K, K * K * K + 1); }

Rational picket_alpha(std::int64_t K) { return Rational(1, K * (K + 1)); }

Rational picket_beta(std::int64_t K) { return Rational(K, (K + 1) * (K * K - 1)); }

WeightedFrame singer_weights(const Frame& f, double tau_tight, double tau_angle) {
  const std::int64_t K = f.dim();
  const std::int64_t M = K * K - K + 1;
  const Frame basis = subframe_by_kind(f, Label::Kind::basis);
  const Frame cyclic = subframe_by_kind(f, Label::Kind::cyclic);
  if (basis.size() != K || cyclic.size() != M || basis.size() + cyclic.size() != f.size()) {
    fail(errc::shape_mismatch, "expected K basis vectors plus K^2-K+1 cyclic vectors");
  }

  check_flat(cyclic, tau_angle);
  if (!equiangularity(cyclic, tau_angle).is_equiangular) {
    fail(errc::prereq_failed, "cyclic part is not equiangular");
  }
  if (!tightness(cyclic, tau_tight).is_tight) {
    fail(errc::prereq_failed, "cyclic part is not tight");
  }

  return {f, assemble_weights(f, singer_alpha(K), singer_beta(K), K, M)};
}

WeightedFrame picket_weights(const Frame& f, double tau_tight, double tau_angle) {
  const std::int64_t K = f.dim();
  const std::int64_t M = K * K - 1;
  const Frame basis = subframe_by_kind(f, Label::Kind::basis);
  Frame rest = subframe_by_kind(f, Label::Kind::cyclic);
  bool block_labels = false;
  if (rest.size() == 0) {
    rest = subframe_by_kind(f, Label::Kind::block);
    block_labels = true;
  }
  if (basis.size() != K || rest.size() != M || basis.size() + rest.size() != f.size()) {
    fail(errc::shape_mismatch, "expected K basis vectors plus K^2-1 cyclic vectors");
  }

  check_flat(rest, tau_angle);

  // Regroup into the K-1 blocks and certify each as a tight equiangular
  // frame, pairwise mutually unbiased.
  std::vector<Frame> blocks(static_cast<std::size_t>(K - 1));
  for (auto& b : blocks) b.vectors.resize(K, 0);
  for (std::int64_t j = 0; j < rest.size(); ++j) {
    const auto& label = rest.labels[static_cast<std::size_t>(j)];
    const std::int64_t l = block_labels ? label.a : label.a % (K - 1);
    auto& b = blocks[static_cast<std::size_t>(l)];
    b.vectors.conservativeResize(Eigen::NoChange, b.vectors.cols() + 1);
    b.vectors.col(b.vectors.cols() - 1) = rest.vectors.col(j);
    b.labels.push_back(label);
  }
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const auto& b = blocks[l];
    if (b.size() != K + 1) {
      fail(errc::shape_mismatch, "block " + std::to_string(l) + " does not have K+1 vectors");
    }
    if (!equiangularity(b, tau_angle).is_equiangular) {
      fail(errc::prereq_failed, "block " + std::to_string(l) + " is not equiangular");
    }
    if (!tightness(b, tau_tight).is_tight) {
      fail(errc::prereq_failed, "block " + std::to_string(l) + " is not tight");
    }
    for (std::size_t l2 = 0; l2 < l; ++l2) {
      if (!mutually_unbiased(b, blocks[l2], tau_angle)) {
        fail(errc::prereq_failed, "blocks " + std::to_string(l2) + " and " + std::to_string(l) +
                                      " are not mutually unbiased");
      }
    }
  }

  return {f, assemble_weights(f, picket_alpha(K), picket_beta(K), K, M)};
}

DesignCertificate design_sum(const WeightedFrame& wf, int t, double tau) {
  if (t < 1) fail(errc::invalid_argument, "design order t must be >= 1");
  const auto n = wf.frame.size();
  if (static_cast<std::int64_t>(wf.weights.size()) != n) {
    fail(errc::shape_mismatch, "weight count does not match frame size");
  }
  double total = 0.0;
  for (double w : wf.weights) {
    if (!(w > 0.0 && w <= 1.0)) fail(errc::invalid_argument, "weights must lie in (0, 1]");
    total += w;
  }
  if (std::abs(total - 1.0) > kTauWeight) {
    fail(errc::invalid_argument, "weights must sum to 1");
  }

  const Eigen::MatrixXcd g = gramian(wf.frame);
  double sum = 0.0;
  for (std::int64_t a = 0; a < n; ++a) {
    double row = 0.0;
    for (std::int64_t b = 0; b < n; ++b) {
      double m2t = std::norm(g(a, b));
      for (int i = 1; i < t; ++i) m2t *= std::norm(g(a, b));
      row += wf.weights[static_cast<std::size_t>(b)] * m2t;
    }
    sum += wf.weights[static_cast<std::size_t>(a)] * row;
  }

  DesignCertificate cert;
  cert.t = t;
  cert.target = Rational(1, binomial(wf.frame.dim() + t - 1, t)).to_double();
  cert.achieved = sum;
  cert.defect = std::abs(sum - cert.target);
  cert.tolerance = tau;
  cert.verdict = cert.defect <= tau;
  return cert;
}

double projector_sum_check(const WeightedFrame& wf, int t) {
  if (t != 1 && t != 2) fail(errc::invalid_argument, "projector check supports t in {1, 2}");
  const std::int64_t K = wf.frame.dim();
  if (t == 2 && K > kMaxProjectorDim) {
    fail(errc::dim_too_large, "K exceeds the t=2 matrix cap");
  }
  if (static_cast<std::int64_t>(wf.weights.size()) != wf.frame.size()) {
    fail(errc::shape_mismatch, "weight count does not match frame size");
  }

  const std::int64_t dim = t == 1 ? K : K * K;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t j = 0; j < wf.frame.size(); ++j) {
    const Eigen::MatrixXcd proj = wf.frame.vectors.col(j) * wf.frame.vectors.col(j).adjoint();
    sum += wf.weights[static_cast<std::size_t>(j)] * (t == 1 ? proj : kron(proj, proj));
  }

  Eigen::MatrixXcd sym;
  if (t == 1) {
    sym = Eigen::MatrixXcd::Identity(K, K);
  } else {
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t i = 0; i < K; ++i) {
      for (std::int64_t j = 0; j < K; ++j) {
        swap(i * K + j, j * K + i) = 1.0;
      }
    }
    sym = 0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + swap);
  }
  const double coeff = Rational(1, binomial(K + t - 1, t)).to_double();
  return (sum - coeff * sym).norm();
}

}  // namespace framekit
