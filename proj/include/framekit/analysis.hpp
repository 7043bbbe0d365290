#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "framekit/framegen.hpp"

namespace framekit {

inline constexpr double kTauTight = 1e-9;
inline constexpr double kTauAngle = 1e-9;
inline constexpr double kTauFourier = 1e-8;

// Library-wide inner product convention: linear in the first argument,
// conjugate-linear in the second.
std::complex<double> inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

// G[a][b] = <f_a, f_b>.
Eigen::MatrixXcd gramian(const Frame& f);

// Maximum off-diagonal Gramian magnitude; needs at least two vectors.
double coherence(const Frame& f);

// sqrt((N-K)/(K(N-1))) for N >= K >= 1.
double welch_bound(std::int64_t N, std::int64_t K);

struct OrthoplexCheck {
  bool applicable = false;  // N >= K^2 + 1
  double bound = 0.0;       // 1/sqrt(K)
  bool is_ogf = false;
  std::int64_t max_frame_size_bound = 0;  // 2(K^2 - 1)
  bool within_size_cap = false;
};

OrthoplexCheck orthoplex_check(const Frame& f, double tau = kTauAngle);

struct TightnessResult {
  double residual = 0.0;  // ||S - (N/K) I||_F
  double bound = 0.0;     // N/K
  bool is_tight = false;
};

TightnessResult tightness(const Frame& f, double tau = kTauTight);

struct EquiangularityResult {
  bool is_equiangular = false;
  double common_value = 0.0;
  double spread = 0.0;  // max - min off-diagonal magnitude
};

EquiangularityResult equiangularity(const Frame& f, double tau = kTauAngle);

// True iff every cross inner product has squared magnitude 1/K within tau.
bool mutually_unbiased(const Frame& f1, const Frame& f2, double tau = kTauAngle);

struct ModulationOperator {
  std::int64_t xi = 0;
  Eigen::MatrixXcd matrix;
};

// X_xi = sum_j w_M^{xi j} f_j f_j^* over the frame's index set Z_M, M = N.
std::vector<ModulationOperator> modulation_operators(const Frame& f);

// For cyclic frames the nonzero entries of X_xi sit where n_b - n_a = xi and
// equal M/K; entries are checked against {0, M/K} and for disjoint supports.
struct ModulationEntryCheck {
  bool pass = false;
  double worst_entry_defect = 0.0;  // distance to the nearer of {0, M/K}
  bool supports_disjoint = false;
};

ModulationEntryCheck cyclic_modulation_entries(const Frame& f, double tau = kTauFourier);

struct FourierCheck {
  double lemma_defect = 0.0;  // double-sum identity, all index pairs
  bool hs_orthogonal = false;
  double max_hs_cross = 0.0;      // max |<X_xi, X_zeta>| over xi != zeta
  double corollary_defect = 0.0;  // single-sum form, checked when orthogonal
};

FourierCheck fourier_identity_check(const Frame& f, double tau = kTauFourier);

struct PicketValueCheck {
  bool pass = false;
  std::int64_t first_violation = -1;
  double worst_defect = 0.0;
};

// |<h_0, h_a>| must equal 1 (a = 0), 1/K (a != 0, a = 0 mod K-1) or
// 1/sqrt(K), compared on squared magnitudes.
PicketValueCheck certify_picket_values(const Frame& f, std::int64_t K, double tau = kTauAngle);

struct AnalysisReport {
  std::int64_t n_vectors = 0;
  std::int64_t dim = 0;
  bool unit_norm = false;
  double max_norm_defect = 0.0;
  double coherence = 0.0;
  double welch_bound = 0.0;
  double orthoplex_bound = 0.0;
  bool orthoplex_applicable = false;
  std::int64_t max_frame_size_bound = 0;
  bool within_size_cap = false;
  double tightness_residual = 0.0;
  double tight_bound = 0.0;
  bool is_tight = false;
  bool is_equiangular = false;
  double equiangular_value = 0.0;
  bool is_ogf = false;
  double tau_tight = kTauTight;
  double tau_angle = kTauAngle;
  double tau_norm = kTauNorm;
};

AnalysisReport analyze(const Frame& f, double tau_tight = kTauTight,
                       double tau_angle = kTauAngle, double tau_norm = kTauNorm);

}  // namespace framekit
