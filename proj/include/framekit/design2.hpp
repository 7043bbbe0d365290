#pragma once

#include <cstdint>
#include <vector>

#include "framekit/analysis.hpp"
#include "framekit/framegen.hpp"
#include "framekit/rational.hpp"

namespace framekit {

inline constexpr double kTauDesign = 1e-9;
inline constexpr double kTauProjector = 1e-8;
inline constexpr double kTauWeight = 1e-12;
inline constexpr std::int64_t kMaxProjectorDim = 16;  // K cap for t = 2

struct WeightedFrame {
  Frame frame;
  std::vector<double> weights;  // positive, summing to 1
};

struct DesignCertificate {
  int t = 0;
  double target = 0.0;    // 1/binom(K+t-1, t)
  double achieved = 0.0;  // weighted Gramian power sum
  double defect = 0.0;
  double tolerance = 0.0;
  bool verdict = false;
};

// Closed-form weights for the two frame families. Shapes and the flat-ETF /
// mutually-unbiased-block prerequisites are certified before any weight is
// attached; the normalization K*alpha + M*beta = 1 is checked in exact
// rational arithmetic.
WeightedFrame singer_weights(const Frame& f, double tau_tight = kTauTight,
                             double tau_angle = kTauAngle);
WeightedFrame picket_weights(const Frame& f, double tau_tight = kTauTight,
                             double tau_angle = kTauAngle);

// Exact weight values, exposed for the normalization identities.
Rational singer_alpha(std::int64_t K);
Rational singer_beta(std::int64_t K);
Rational picket_alpha(std::int64_t K);
Rational picket_beta(std::int64_t K);

// Weighted Gramian power sum over all ordered pairs (diagonal included)
// against 1/binom(K+t-1, t).
DesignCertificate design_sum(const WeightedFrame& wf, int t, double tau = kTauDesign);

// Frobenius distance of sum_j w_j (f_j f_j^*)^{tensor t} from
// binom(K+t-1,t)^{-1} times the symmetric-subspace projector.
double projector_sum_check(const WeightedFrame& wf, int t);

}  // namespace framekit
