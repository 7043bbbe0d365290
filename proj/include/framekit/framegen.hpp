#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "framekit/designsets.hpp"
#include "framekit/error.hpp"

namespace framekit {

inline constexpr double kTauNorm = 1e-12;
inline constexpr double kTauFlat = 1e-12;

struct Label {
  enum class Kind { basis, cyclic, chirp, block, custom };
  Kind kind = Kind::custom;
  std::int64_t a = 0;  // basis(i), cyclic(j), chirp(k, .), block(l, .)
  std::int64_t b = 0;  // chirp(., i), block(., j)

  static Label basis(std::int64_t i) { return {Kind::basis, i, 0}; }
  static Label cyclic(std::int64_t j) { return {Kind::cyclic, j, 0}; }
  static Label chirp(std::int64_t k, std::int64_t i) { return {Kind::chirp, k, i}; }
  static Label block(std::int64_t l, std::int64_t j) { return {Kind::block, l, j}; }
  static Label custom() { return {Kind::custom, 0, 0}; }

  friend bool operator==(const Label&, const Label&) = default;
};

// Ordered list of vectors in C^K stored as columns. Constructors keep basis
// vectors first, then cyclic/chirp vectors in index order.
struct Frame {
  Eigen::MatrixXcd vectors;  // K x N
  std::vector<Label> labels;

  std::int64_t dim() const { return vectors.rows(); }
  std::int64_t size() const { return vectors.cols(); }
  Eigen::VectorXcd col(std::int64_t j) const { return vectors.col(j); }
};

struct GeneratingSequence {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> exponents;
};

GeneratingSequence to_sequence(const DesignSet& s);

// e^{2*pi*i * num/den} with the angle reduced to [0, 1) in integer arithmetic
// before any trigonometry.
std::complex<double> unit_phase(std::int64_t num, std::int64_t den);

// M flat vectors in C^K; vector j has l-th coordinate
// exp(2*pi*i*j*n_l/M)/sqrt(K).
Frame cyclic_frame(const GeneratingSequence& seq);

// Canonical basis followed by the input vectors; input must be flat.
Frame adjoin_basis(const Frame& flat, double tau_flat = kTauFlat);

// K+1 mutually unbiased bases of C^K for prime K: the canonical basis
// (labelled chirp(0, i)) plus K quadratic-phase bases. For odd K the phases
// are the K-th roots of unity with exponent -(k)l^2 + il; at K = 2 the
// quadratic phase needs 4th roots of unity (squares collapse mod 2), giving
// the standard triple of unbiased bases in C^2.
Frame chirp_mub(std::int64_t K);

// The five-vector frame in C^2: canonical basis plus (e_1 + w^j e_2)/sqrt(2)
// over the cube roots of unity.
Frame example_5_2();

// Splits the cyclic frame of a picket fence sequence into K-1 blocks of K+1
// vectors; block l collects indices congruent to l mod (K-1).
std::vector<Frame> picket_blocks(const GeneratingSequence& seq);

// Removes the last `count` basis-labelled vectors, 1 <= count <= K-2.
Frame drop_basis_vectors(const Frame& f, std::int64_t count);

// Subframe of all vectors with the given label kind, in stored order.
Frame subframe_by_kind(const Frame& f, Label::Kind kind);

// Convenience compositions used by the CLI and the certification suites.
Frame singer_ogf(std::int64_t q, std::int64_t field_cap = kDefaultFieldCap);
Frame picket_ogf(std::int64_t q, std::int64_t field_cap = kDefaultFieldCap);

}  // namespace framekit
