#include "framekit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace framekit {
namespace {

double sqr(double x) { return x * x; }

}  // namespace

std::complex<double> inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  // Eigen's dot() conjugates its first argument.
  return b.dot(a);
}

Eigen::MatrixXcd gramian(const Frame& f) {
  const std::int64_t n = f.size();
  Eigen::MatrixXcd g(n, n);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      g(a, b) = inner(f.vectors.col(a), f.vectors.col(b));
    }
  }
  return g;
}

double coherence(const Frame& f) {
  if (f.size() < 2) fail(errc::too_few_vectors, "coherence needs at least two vectors");
  const Eigen::MatrixXcd g = gramian(f);
  double mu = 0.0;
  for (std::int64_t a = 0; a < f.size(); ++a) {
    for (std::int64_t b = a + 1; b < f.size(); ++b) {
      mu = std::max(mu, std::abs(g(a, b)));
    }
  }
  return mu;
}

double welch_bound(std::int64_t N, std::int64_t K) {
  if (K < 1 || N < K) fail(errc::invalid_argument, "welch_bound needs N >= K >= 1");
  if (N == K) return 0.0;
  return std::sqrt(static_cast<double>(N - K) /
                   (static_cast<double>(K) * static_cast<double>(N - 1)));
}

OrthoplexCheck orthoplex_check(const Frame& f, double tau) {
  const std::int64_t K = f.dim();
  const std::int64_t N = f.size();
  OrthoplexCheck check;
  check.bound = 1.0 / std::sqrt(static_cast<double>(K));
  check.applicable = N >= K * K + 1;
  check.max_frame_size_bound = 2 * (K * K - 1);
  check.within_size_cap = N <= check.max_frame_size_bound;
  if (check.applicable && N >= 2) {
    // Squared magnitudes against the exact rational 1/K.
    const double mu2 = sqr(coherence(f));
    check.is_ogf = std::abs(mu2 - 1.0 / static_cast<double>(K)) <= tau;
  }
  return check;
}

TightnessResult tightness(const Frame& f, double tau) {
  const std::int64_t K = f.dim();
  const std::int64_t N = f.size();
  TightnessResult r;
  r.bound = static_cast<double>(N) / static_cast<double>(K);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(K, K);
  for (std::int64_t j = 0; j < N; ++j) {
    s += f.vectors.col(j) * f.vectors.col(j).adjoint();
  }
  r.residual = (s - r.bound * Eigen::MatrixXcd::Identity(K, K)).norm();
  r.is_tight = r.residual <= tau;
  return r;
}

EquiangularityResult equiangularity(const Frame& f, double tau) {
  if (f.size() < 2) fail(errc::too_few_vectors, "equiangularity needs at least two vectors");
  const Eigen::MatrixXcd g = gramian(f);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::int64_t a = 0; a < f.size(); ++a) {
    for (std::int64_t b = a + 1; b < f.size(); ++b) {
      const double m = std::abs(g(a, b));
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  EquiangularityResult r;
  r.spread = hi - lo;
  r.is_equiangular = r.spread <= tau;
  r.common_value = 0.5 * (hi + lo);
  return r;
}

bool mutually_unbiased(const Frame& f1, const Frame& f2, double tau) {
  if (f1.dim() != f2.dim()) fail(errc::dim_mismatch, "frames live in different dimensions");
  const double target = 1.0 / static_cast<double>(f1.dim());
  for (std::int64_t a = 0; a < f1.size(); ++a) {
    for (std::int64_t b = 0; b < f2.size(); ++b) {
      const double m2 = std::norm(inner(f1.vectors.col(a), f2.vectors.col(b)));
      if (std::abs(m2 - target) > tau) return false;
    }
  }
  return true;
}

std::vector<ModulationOperator> modulation_operators(const Frame& f) {
  const std::int64_t M = f.size();
  const std::int64_t K = f.dim();
  std::vector<Eigen::MatrixXcd> projectors;
  projectors.reserve(static_cast<std::size_t>(M));
  for (std::int64_t j = 0; j < M; ++j) {
    projectors.push_back(f.vectors.col(j) * f.vectors.col(j).adjoint());
  }
  std::vector<ModulationOperator> ops;
  ops.reserve(static_cast<std::size_t>(M));
  for (std::int64_t xi = 0; xi < M; ++xi) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(K, K);
    for (std::int64_t j = 0; j < M; ++j) {
      x += unit_phase(xi * j, M) * projectors[static_cast<std::size_t>(j)];
    }
    ops.push_back({xi, std::move(x)});
  }
  return ops;
}

ModulationEntryCheck cyclic_modulation_entries(const Frame& f, double tau) {
  const std::int64_t M = f.size();
  const std::int64_t K = f.dim();
  const double big = static_cast<double>(M) / static_cast<double>(K);
  const auto ops = modulation_operators(f);

  ModulationEntryCheck check;
  check.supports_disjoint = true;
  Eigen::MatrixXi owner = Eigen::MatrixXi::Constant(K, K, -1);
  for (const auto& op : ops) {
    for (std::int64_t a = 0; a < K; ++a) {
      for (std::int64_t b = 0; b < K; ++b) {
        const double mag = std::abs(op.matrix(a, b));
        const double defect = std::min(mag, std::abs(mag - big));
        check.worst_entry_defect = std::max(check.worst_entry_defect, defect);
        if (mag > big / 2.0) {
          if (owner(a, b) != -1) check.supports_disjoint = false;
          owner(a, b) = static_cast<int>(op.xi);
        }
      }
    }
  }
  check.pass = check.supports_disjoint && check.worst_entry_defect <= tau;
  return check;
}

FourierCheck fourier_identity_check(const Frame& f, double tau) {
  const std::int64_t M = f.size();
  const auto ops = modulation_operators(f);

  // Hilbert-Schmidt Gram of the modulation operators: tr(X_xi X_eta^*).
  Eigen::MatrixXcd hs(M, M);
  for (std::int64_t xi = 0; xi < M; ++xi) {
    for (std::int64_t eta = 0; eta < M; ++eta) {
      hs(xi, eta) = (ops[static_cast<std::size_t>(xi)].matrix.array() *
                     ops[static_cast<std::size_t>(eta)].matrix.array().conjugate())
                        .sum();
    }
  }

  FourierCheck check;
  const Eigen::MatrixXcd g = gramian(f);
  const double m2 = static_cast<double>(M) * static_cast<double>(M);
  for (std::int64_t a = 0; a < M; ++a) {
    for (std::int64_t b = 0; b < M; ++b) {
      std::complex<double> sum = 0.0;
      for (std::int64_t xi = 0; xi < M; ++xi) {
        for (std::int64_t eta = 0; eta < M; ++eta) {
          sum += unit_phase(b * eta - a * xi, M) * hs(xi, eta);
        }
      }
      check.lemma_defect =
          std::max(check.lemma_defect, std::abs(sum - m2 * std::norm(g(a, b))));
    }
  }

  for (std::int64_t xi = 0; xi < M; ++xi) {
    for (std::int64_t eta = 0; eta < M; ++eta) {
      if (xi != eta) check.max_hs_cross = std::max(check.max_hs_cross, std::abs(hs(xi, eta)));
    }
  }
  check.hs_orthogonal = check.max_hs_cross <= tau;

  if (check.hs_orthogonal) {
    for (std::int64_t a = 0; a < M; ++a) {
      std::complex<double> sum = 0.0;
      for (std::int64_t xi = 0; xi < M; ++xi) {
        sum += unit_phase(a * xi, M) * hs(xi, xi);
      }
      check.corollary_defect =
          std::max(check.corollary_defect, std::abs(sum - m2 * std::norm(g(a, 0))));
    }
  }
  return check;
}

PicketValueCheck certify_picket_values(const Frame& f, std::int64_t K, double tau) {
  if (f.dim() != K || f.size() != K * K - 1) {
    fail(errc::invalid_argument, "expected the cyclic frame of a picket fence sequence");
  }
  const std::int64_t M = K * K - 1;
  PicketValueCheck check;
  check.pass = true;
  for (std::int64_t a = 0; a < M; ++a) {
    const double m2 = std::norm(inner(f.vectors.col(0), f.vectors.col(a)));
    double want = 1.0 / static_cast<double>(K);
    if (a == 0) {
      want = 1.0;
    } else if (a % (K - 1) == 0) {
      want = 1.0 / static_cast<double>(K * K);
    }
    const double defect = std::abs(m2 - want);
    check.worst_defect = std::max(check.worst_defect, defect);
    if (defect > tau && check.pass) {
      check.pass = false;
      check.first_violation = a;
    }
  }
  return check;
}

AnalysisReport analyze(const Frame& f, double tau_tight, double tau_angle, double tau_norm) {
  AnalysisReport r;
  r.n_vectors = f.size();
  r.dim = f.dim();
  r.tau_tight = tau_tight;
  r.tau_angle = tau_angle;
  r.tau_norm = tau_norm;
  if (f.size() == 0 || f.dim() == 0) {
    fail(errc::too_few_vectors, "cannot analyze an empty frame");
  }

  for (std::int64_t j = 0; j < f.size(); ++j) {
    r.max_norm_defect = std::max(r.max_norm_defect, std::abs(f.vectors.col(j).norm() - 1.0));
  }
  r.unit_norm = r.max_norm_defect <= tau_norm;

  r.coherence = f.size() >= 2 ? coherence(f) : 0.0;
  r.welch_bound = f.size() >= f.dim() ? welch_bound(f.size(), f.dim()) : 0.0;

  const auto ortho = orthoplex_check(f, tau_angle);
  r.orthoplex_bound = ortho.bound;
  r.orthoplex_applicable = ortho.applicable;
  r.is_ogf = ortho.is_ogf;
  r.max_frame_size_bound = ortho.max_frame_size_bound;
  r.within_size_cap = ortho.within_size_cap;

  const auto tight = tightness(f, tau_tight);
  r.tightness_residual = tight.residual;
  r.tight_bound = tight.bound;
  r.is_tight = tight.is_tight;

  if (f.size() >= 2) {
    const auto equi = equiangularity(f, tau_angle);
    r.is_equiangular = equi.is_equiangular;
    r.equiangular_value = equi.common_value;
  } else {
    r.is_equiangular = true;
  }
  return r;
}

}  // namespace framekit
