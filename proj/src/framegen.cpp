#include "framekit/framegen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace framekit {

GeneratingSequence to_sequence(const DesignSet& s) {
  return GeneratingSequence{s.modulus, s.elements};
}

std::complex<double> unit_phase(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(den));
}

Frame cyclic_frame(const GeneratingSequence& seq) {
  const std::int64_t M = seq.modulus;
  const auto K = static_cast<std::int64_t>(seq.exponents.size());
  if (M < 1 || K < 1) fail(errc::invalid_argument, "need M >= 1 and a nonempty sequence");
  std::set<std::int64_t> residues;
  for (std::int64_t n : seq.exponents) {
    std::int64_t r = n % M;
    if (r < 0) r += M;
    if (!residues.insert(r).second) {
      fail(errc::duplicate_exponents, "exponent " + std::to_string(n) + " repeats mod M");
    }
  }

  Frame f;
  f.vectors.resize(K, M);
  f.labels.reserve(static_cast<std::size_t>(M));
  const double scale = 1.0 / std::sqrt(static_cast<double>(K));
  for (std::int64_t j = 0; j < M; ++j) {
    for (std::int64_t l = 0; l < K; ++l) {
      f.vectors(l, j) = scale * unit_phase(j * seq.exponents[static_cast<std::size_t>(l)], M);
    }
    f.labels.push_back(Label::cyclic(j));
  }
  return f;
}

Frame adjoin_basis(const Frame& flat, double tau_flat) {
  const std::int64_t K = flat.dim();
  if (K < 1) fail(errc::invalid_argument, "frame has no ambient dimension");
  const double target = 1.0 / std::sqrt(static_cast<double>(K));
  for (std::int64_t j = 0; j < flat.size(); ++j) {
    double worst = 0.0;
    for (std::int64_t i = 0; i < K; ++i) {
      worst = std::max(worst, std::abs(std::abs(flat.vectors(i, j)) - target));
    }
    if (worst > tau_flat) {
      fail(errc::not_flat, "vector " + std::to_string(j) +
                               " deviates from flatness by " + std::to_string(worst));
    }
  }

  Frame f;
  f.vectors.resize(K, K + flat.size());
  f.vectors.leftCols(K) = Eigen::MatrixXcd::Identity(K, K);
  f.vectors.rightCols(flat.size()) = flat.vectors;
  for (std::int64_t i = 0; i < K; ++i) f.labels.push_back(Label::basis(i));
  f.labels.insert(f.labels.end(), flat.labels.begin(), flat.labels.end());
  return f;
}

Frame chirp_mub(std::int64_t K) {
  if (!is_prime(K)) fail(errc::not_prime, std::to_string(K) + " is not prime");

  Frame f;
  f.vectors.resize(K, K * (K + 1));
  const double scale = 1.0 / std::sqrt(static_cast<double>(K));
  for (std::int64_t i = 0; i < K; ++i) {
    f.vectors.col(i).setZero();
    f.vectors(i, i) = 1.0;
    f.labels.push_back(Label::chirp(0, i));
  }
  for (std::int64_t k = 1; k <= K; ++k) {
    for (std::int64_t i = 0; i < K; ++i) {
      const std::int64_t colidx = k * K + i;
      for (std::int64_t l0 = 0; l0 < K; ++l0) {
        const std::int64_t l = l0 + 1;
        std::complex<double> phase;
        if (K == 2) {
          phase = unit_phase(-k * l * l, 4) * unit_phase((i + 1) * l, 2);
        } else {
          phase = unit_phase(-k * l * l + (i + 1) * l, K);
        }
        f.vectors(l0, colidx) = scale * phase;
      }
      f.labels.push_back(Label::chirp(k, i));
    }
  }
  return f;
}

Frame example_5_2() {
  Frame cyc = cyclic_frame(GeneratingSequence{3, {0, 1}});
  return adjoin_basis(cyc);
}

std::vector<Frame> picket_blocks(const GeneratingSequence& seq) {
  const auto K = static_cast<std::int64_t>(seq.exponents.size());
  if (K < 2 || seq.modulus != K * K - 1) {
    fail(errc::not_picket_fence, "sequence length and modulus do not match K^2 - 1");
  }
  std::vector<std::int64_t> sorted = seq.exponents;
  for (auto& x : sorted) {
    x %= seq.modulus;
    if (x < 0) x += seq.modulus;
  }
  std::sort(sorted.begin(), sorted.end());
  DesignSet s = make_relative_set(K + 1, K - 1, sorted, 1);
  if (const auto check = verify_design(s); !check.pass) {
    std::string msg = "difference property fails";
    if (check.witness) {
      msg += " at x=" + std::to_string(check.witness->x) + " (count " +
             std::to_string(check.witness->count) + ", expected " +
             std::to_string(check.witness->expected) + ")";
    }
    fail(errc::not_picket_fence, msg);
  }

  const Frame full = cyclic_frame(seq);
  std::vector<Frame> blocks(static_cast<std::size_t>(K - 1));
  for (std::int64_t l = 0; l < K - 1; ++l) {
    Frame& b = blocks[static_cast<std::size_t>(l)];
    b.vectors.resize(K, K + 1);
    for (std::int64_t j = 0; j <= K; ++j) {
      b.vectors.col(j) = full.vectors.col(j * (K - 1) + l);
      b.labels.push_back(Label::block(l, j));
    }
  }
  return blocks;
}

Frame drop_basis_vectors(const Frame& f, std::int64_t count) {
  const std::int64_t K = f.dim();
  std::vector<std::int64_t> basis_cols;
  for (std::int64_t j = 0; j < f.size(); ++j) {
    if (f.labels[static_cast<std::size_t>(j)].kind == Label::Kind::basis) basis_cols.push_back(j);
  }
  if (count < 1 || count > K - 2 || count > static_cast<std::int64_t>(basis_cols.size())) {
    fail(errc::too_many_removed,
         "count must satisfy 1 <= count <= K-2 and not exceed the basis vectors present");
  }
  std::set<std::int64_t> dropped(basis_cols.end() - count, basis_cols.end());

  Frame out;
  out.vectors.resize(K, f.size() - count);
  std::int64_t w = 0;
  for (std::int64_t j = 0; j < f.size(); ++j) {
    if (dropped.count(j)) continue;
    out.vectors.col(w++) = f.vectors.col(j);
    out.labels.push_back(f.labels[static_cast<std::size_t>(j)]);
  }
  return out;
}

Frame subframe_by_kind(const Frame& f, Label::Kind kind) {
  std::vector<std::int64_t> cols;
  for (std::int64_t j = 0; j < f.size(); ++j) {
    if (f.labels[static_cast<std::size_t>(j)].kind == kind) cols.push_back(j);
  }
  Frame out;
  out.vectors.resize(f.dim(), static_cast<std::int64_t>(cols.size()));
  std::int64_t w = 0;
  for (std::int64_t j : cols) {
    out.vectors.col(w++) = f.vectors.col(j);
    out.labels.push_back(f.labels[static_cast<std::size_t>(j)]);
  }
  return out;
}

Frame singer_ogf(std::int64_t q, std::int64_t field_cap) {
  return adjoin_basis(cyclic_frame(to_sequence(singer_set(q, 1, field_cap))));
}

Frame picket_ogf(std::int64_t q, std::int64_t field_cap) {
  return adjoin_basis(cyclic_frame(to_sequence(relative_set(q, 1, field_cap))));
}

}  // namespace framekit
