#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "framekit/gf.hpp"

namespace framekit {

struct PlainKind {
  std::int64_t K = 0;
  std::int64_t lambda = 0;
  friend bool operator==(const PlainKind&, const PlainKind&) = default;
};

// (N, L, K, lambda)-relative difference set in Z_{N*L}; the forbidden
// subgroup is the multiples of N.
struct RelativeKind {
  std::int64_t N = 0;
  std::int64_t L = 0;
  std::int64_t K = 0;
  std::int64_t lambda = 0;
  friend bool operator==(const RelativeKind&, const RelativeKind&) = default;
};

using DesignKind = std::variant<PlainKind, RelativeKind>;

enum class ProvenanceTag { trace_constructed, searched, user_supplied };

struct Provenance {
  ProvenanceTag tag = ProvenanceTag::user_supplied;
  std::int64_t q = 0;  // trace-constructed only
  int n = 0;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct DesignSet {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> elements;  // strictly increasing residues
  DesignKind kind;
  Provenance provenance;
};

struct DifferenceSpectrum {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> counts;  // counts[x] = multiplicity of difference x
};

struct VerifyWitness {
  std::int64_t x = 0;
  std::int64_t count = 0;
  std::int64_t expected = 0;
};

struct VerifyResult {
  bool pass = false;
  std::optional<VerifyWitness> witness;
};

// Shape-validating constructors (sorted, distinct, in range, K matches).
DesignSet make_plain_set(std::int64_t modulus, std::vector<std::int64_t> elements,
                         std::int64_t lambda, Provenance provenance = {});
DesignSet make_relative_set(std::int64_t N, std::int64_t L, std::vector<std::int64_t> elements,
                            std::int64_t lambda, Provenance provenance = {});

// Singer difference set: zero-trace exponents of a primitive element of
// GF(q^{n+2}), taken in [0, (q^{n+2}-1)/(q-1)). Verified before return.
DesignSet singer_set(std::int64_t q, int n, std::int64_t field_cap = kDefaultFieldCap);

// Relative difference set: exponents i in Z_{q^{n+1}-1} with trace one.
// n = 1 yields picket fence sequences. Verified before return.
DesignSet relative_set(std::int64_t q, int n, std::int64_t field_cap = kDefaultFieldCap);

DifferenceSpectrum difference_spectrum(const DesignSet& s);

// Exact integer check of the declared difference property.
VerifyResult verify_design(const DesignSet& s);

// Lexicographically smallest among the modulus shift-translates.
std::vector<std::int64_t> canonical_shift(std::int64_t modulus,
                                          const std::vector<std::int64_t>& elements);

DesignSet shifted(const DesignSet& s, std::int64_t c);

struct SearchOptions {
  std::int64_t limit = 16;
  std::uint64_t node_budget = 1'000'000'000;
  int threads = 1;
};

enum class SearchStatus { complete, limit_reached, budget_exceeded };

struct SearchResult {
  std::vector<DesignSet> sets;  // canonical form, lexicographic order
  SearchStatus status = SearchStatus::complete;
  std::uint64_t nodes = 0;

  bool certified_nonexistence() const {
    return sets.empty() && status == SearchStatus::complete;
  }
};

// Exhaustive backtracking over subsets containing 0, second element fixed to
// the minimal circular gap. An empty complete result certifies nonexistence;
// a budget-exceeded result is inconclusive, never DNE.
SearchResult search_difference_sets(std::int64_t M, std::int64_t K, std::int64_t lambda = 1,
                                    const SearchOptions& options = {});

// Picket fence sequences for Z_{K^2-1}: forbidden subgroup generated by K+1.
SearchResult search_picket_fence(std::int64_t K, const SearchOptions& options = {});

}  // namespace framekit
