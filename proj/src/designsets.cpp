#include "framekit/designsets.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

namespace framekit {
namespace {

void check_shape(std::int64_t modulus, const std::vector<std::int64_t>& elements) {
  if (modulus < 1) fail(errc::invalid_argument, "modulus must be positive");
  if (elements.empty()) fail(errc::invalid_argument, "empty element list");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || elements[i] >= modulus) {
      fail(errc::invalid_argument, "element out of range [0, M)");
    }
    if (i > 0 && elements[i] <= elements[i - 1]) {
      fail(errc::invalid_argument, "elements must be strictly increasing");
    }
  }
}

std::int64_t kind_K(const DesignKind& kind) {
  return std::visit([](const auto& k) { return k.K; }, kind);
}

// One backtracking branch: second element fixed. Gap-canonical form (every
// circular gap >= a2) keeps the enumeration exhaustive up to shifts.
struct Branch {
  std::int64_t M = 0;
  std::int64_t K = 0;
  std::int64_t lambda = 0;
  const std::vector<char>* forbidden = nullptr;  // nullable
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t>* nodes = nullptr;

  std::int64_t a2 = 0;
  std::vector<std::int64_t> chosen;
  std::vector<std::int64_t> count;
  std::vector<std::vector<std::int64_t>> found;
  bool budget_hit = false;

  // Applies both ordered differences of (c, e) pairs incrementally so that
  // two new pairs landing in the same slot are caught.
  bool place(std::int64_t c) {
    std::size_t applied = 0;
    bool ok = true;
    for (; applied < chosen.size(); ++applied) {
      const std::int64_t d = c - chosen[applied];
      const std::int64_t dm = M - d;
      if (forbidden && (*forbidden)[static_cast<std::size_t>(d)]) {
        ok = false;
        break;
      }
      ++count[static_cast<std::size_t>(d)];
      ++count[static_cast<std::size_t>(dm)];
      if (count[static_cast<std::size_t>(d)] > lambda ||
          count[static_cast<std::size_t>(dm)] > lambda) {
        ok = false;
        ++applied;
        break;
      }
    }
    if (ok) {
      chosen.push_back(c);
      return true;
    }
    for (std::size_t i = 0; i < applied; ++i) {
      const std::int64_t d = c - chosen[i];
      --count[static_cast<std::size_t>(d)];
      --count[static_cast<std::size_t>(M - d)];
    }
    return false;
  }

  void remove() {
    const std::int64_t c = chosen.back();
    chosen.pop_back();
    for (std::int64_t e : chosen) {
      const std::int64_t d = c - e;
      --count[static_cast<std::size_t>(d)];
      --count[static_cast<std::size_t>(M - d)];
    }
  }

  void extend() {
    if (budget_hit) return;
    const auto t = static_cast<std::int64_t>(chosen.size());
    if (t == K) {
      found.push_back(chosen);
      return;
    }
    const std::int64_t lo = chosen.back() + a2;
    const std::int64_t hi = M - a2 * (K - t);
    for (std::int64_t c = lo; c <= hi; ++c) {
      if (nodes->fetch_add(1, std::memory_order_relaxed) >= budget) {
        budget_hit = true;
        return;
      }
      if (place(c)) {
        extend();
        remove();
        if (budget_hit) return;
      }
    }
  }

  void run() {
    chosen = {0};
    count.assign(static_cast<std::size_t>(M), 0);
    if (nodes->fetch_add(1, std::memory_order_relaxed) >= budget) {
      budget_hit = true;
      return;
    }
    if (!place(a2)) return;
    extend();
    remove();
  }
};

SearchResult run_search(std::int64_t M, std::int64_t K, std::int64_t lambda,
                        const std::vector<char>* forbidden, const DesignKind& kind,
                        const SearchOptions& options) {
  SearchResult result;
  std::atomic<std::uint64_t> nodes{0};

  std::vector<std::int64_t> a2_values;
  for (std::int64_t a2 = 1; a2 <= M / K; ++a2) {
    if (forbidden && (*forbidden)[static_cast<std::size_t>(a2)]) continue;
    a2_values.push_back(a2);
  }

  std::vector<Branch> branches(a2_values.size());
  for (std::size_t i = 0; i < a2_values.size(); ++i) {
    branches[i].M = M;
    branches[i].K = K;
    branches[i].lambda = lambda;
    branches[i].forbidden = forbidden;
    branches[i].budget = options.node_budget;
    branches[i].nodes = &nodes;
    branches[i].a2 = a2_values[i];
  }

  const int threads = std::max(1, options.threads);
  if (threads == 1 || branches.size() <= 1) {
    for (auto& b : branches) b.run();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size()) return;
        branches[i].run();
      }
    };
    std::vector<std::thread> pool;
    const auto nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), branches.size());
    pool.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  bool budget_hit = false;
  std::set<std::vector<std::int64_t>> canonical;
  for (const auto& b : branches) {
    budget_hit = budget_hit || b.budget_hit;
    for (const auto& raw : b.found) canonical.insert(canonical_shift(M, raw));
  }

  bool truncated = false;
  for (const auto& els : canonical) {
    if (static_cast<std::int64_t>(result.sets.size()) >= options.limit) {
      truncated = true;
      break;
    }
    DesignSet s;
    s.modulus = M;
    s.elements = els;
    s.kind = kind;
    s.provenance = {ProvenanceTag::searched, 0, 0};
    result.sets.push_back(std::move(s));
  }

  result.nodes = nodes.load();
  result.status = budget_hit      ? SearchStatus::budget_exceeded
                  : truncated     ? SearchStatus::limit_reached
                                  : SearchStatus::complete;
  return result;
}

}  // namespace

DesignSet make_plain_set(std::int64_t modulus, std::vector<std::int64_t> elements,
                         std::int64_t lambda, Provenance provenance) {
  check_shape(modulus, elements);
  if (lambda < 0) fail(errc::invalid_argument, "lambda must be nonnegative");
  DesignSet s;
  s.modulus = modulus;
  s.kind = PlainKind{static_cast<std::int64_t>(elements.size()), lambda};
  s.elements = std::move(elements);
  s.provenance = provenance;
  return s;
}

DesignSet make_relative_set(std::int64_t N, std::int64_t L, std::vector<std::int64_t> elements,
                            std::int64_t lambda, Provenance provenance) {
  if (N < 1 || L < 1) fail(errc::invalid_argument, "N and L must be positive");
  check_shape(N * L, elements);
  if (lambda < 1) fail(errc::invalid_argument, "lambda must be positive");
  DesignSet s;
  s.modulus = N * L;
  s.kind = RelativeKind{N, L, static_cast<std::int64_t>(elements.size()), lambda};
  s.elements = std::move(elements);
  s.provenance = provenance;
  return s;
}

DesignSet singer_set(std::int64_t q, int n, std::int64_t field_cap) {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  const auto [p, s] = factor_prime_power(q);
  std::int64_t ambient = 1;
  for (int i = 0; i < n + 2; ++i) {
    if (ambient > field_cap / q) {
      fail(errc::field_cap_exceeded, "q^{n+2} exceeds the field cap");
    }
    ambient *= q;
  }
  const FieldRef field = make_field(p, s * (n + 2), field_cap);
  const GFElement alpha = primitive_element(field);

  const std::int64_t M = (ambient - 1) / (q - 1);
  std::vector<std::int64_t> elements;
  GFElement x = one(field);
  for (std::int64_t i = 0; i < M; ++i) {
    if (relative_trace_raw(x, s).is_zero()) elements.push_back(i);
    x = x * alpha;
  }

  const std::int64_t K = (ambient / q - 1) / (q - 1);
  const std::int64_t lambda = (ambient / (q * q) - 1) / (q - 1);
  if (static_cast<std::int64_t>(elements.size()) != K) {
    throw std::logic_error("singer_set: trace-zero count mismatch");
  }
  DesignSet set = make_plain_set(M, std::move(elements), lambda,
                                 Provenance{ProvenanceTag::trace_constructed, q, n});
  if (!verify_design(set).pass) {
    throw std::logic_error("singer_set: constructed set failed verification");
  }
  return set;
}

DesignSet relative_set(std::int64_t q, int n, std::int64_t field_cap) {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  const auto [p, s] = factor_prime_power(q);
  std::int64_t ambient = 1;
  for (int i = 0; i < n + 1; ++i) {
    if (ambient > field_cap / q) {
      fail(errc::field_cap_exceeded, "q^{n+1} exceeds the field cap");
    }
    ambient *= q;
  }
  const FieldRef field = make_field(p, s * (n + 1), field_cap);
  const GFElement alpha = primitive_element(field);
  const GFElement target = one(field);

  const std::int64_t group = ambient - 1;
  std::vector<std::int64_t> elements;
  GFElement x = one(field);
  for (std::int64_t i = 0; i < group; ++i) {
    if (relative_trace_raw(x, s) == target) elements.push_back(i);
    x = x * alpha;
  }

  const std::int64_t N = (ambient - 1) / (q - 1);
  const std::int64_t L = q - 1;
  const std::int64_t K = ambient / q;
  const std::int64_t lambda = n == 1 ? 1 : ambient / (q * q);
  if (static_cast<std::int64_t>(elements.size()) != K) {
    throw std::logic_error("relative_set: trace-one count mismatch");
  }
  DesignSet set = make_relative_set(N, L, std::move(elements), lambda,
                                    Provenance{ProvenanceTag::trace_constructed, q, n});
  if (!verify_design(set).pass) {
    throw std::logic_error("relative_set: constructed set failed verification");
  }
  return set;
}

DifferenceSpectrum difference_spectrum(const DesignSet& s) {
  check_shape(s.modulus, s.elements);
  DifferenceSpectrum spec;
  spec.modulus = s.modulus;
  spec.counts.assign(static_cast<std::size_t>(s.modulus), 0);
  for (std::int64_t a : s.elements) {
    for (std::int64_t b : s.elements) {
      if (a == b) continue;
      std::int64_t d = (a - b) % s.modulus;
      if (d < 0) d += s.modulus;
      ++spec.counts[static_cast<std::size_t>(d)];
    }
  }
  return spec;
}

VerifyResult verify_design(const DesignSet& s) {
  const auto spectrum = difference_spectrum(s);
  const std::int64_t M = s.modulus;
  VerifyResult result;
  result.pass = true;

  auto expected_count = [&](std::int64_t x) -> std::int64_t {
    if (const auto* plain = std::get_if<PlainKind>(&s.kind)) return plain->lambda;
    const auto& rel = std::get<RelativeKind>(s.kind);
    return x % rel.N == 0 ? 0 : rel.lambda;
  };

  if (kind_K(s.kind) != static_cast<std::int64_t>(s.elements.size())) {
    result.pass = false;
    result.witness = VerifyWitness{-1, static_cast<std::int64_t>(s.elements.size()),
                                   kind_K(s.kind)};
    return result;
  }
  if (const auto* rel = std::get_if<RelativeKind>(&s.kind)) {
    if (rel->N * rel->L != M) {
      result.pass = false;
      result.witness = VerifyWitness{-1, M, rel->N * rel->L};
      return result;
    }
  }

  for (std::int64_t x = 1; x < M; ++x) {
    const std::int64_t want = expected_count(x);
    const std::int64_t got = spectrum.counts[static_cast<std::size_t>(x)];
    if (got != want) {
      result.pass = false;
      result.witness = VerifyWitness{x, got, want};
      return result;
    }
  }
  return result;
}

std::vector<std::int64_t> canonical_shift(std::int64_t modulus,
                                          const std::vector<std::int64_t>& elements) {
  std::vector<std::int64_t> best;
  for (std::int64_t e : elements) {
    std::vector<std::int64_t> shifted;
    shifted.reserve(elements.size());
    for (std::int64_t x : elements) {
      std::int64_t v = (x - e) % modulus;
      if (v < 0) v += modulus;
      shifted.push_back(v);
    }
    std::sort(shifted.begin(), shifted.end());
    if (best.empty() || shifted < best) best = std::move(shifted);
  }
  return best;
}

DesignSet shifted(const DesignSet& s, std::int64_t c) {
  DesignSet out = s;
  for (auto& x : out.elements) {
    x = (x + c) % s.modulus;
    if (x < 0) x += s.modulus;
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

SearchResult search_difference_sets(std::int64_t M, std::int64_t K, std::int64_t lambda,
                                    const SearchOptions& options) {
  if (M < 1 || K < 1 || K > M || lambda < 1) {
    fail(errc::invalid_argument, "need 1 <= K <= M and lambda >= 1");
  }
  const DesignKind kind = PlainKind{K, lambda};
  // Counting: a (M,K,lambda)-difference set needs K(K-1) = lambda(M-1).
  if (K * (K - 1) != lambda * (M - 1)) {
    return SearchResult{{}, SearchStatus::complete, 0};
  }
  if (K == 1) {
    SearchResult r;
    DesignSet s = make_plain_set(1, {0}, lambda, Provenance{ProvenanceTag::searched, 0, 0});
    r.sets.push_back(std::move(s));
    return r;
  }
  return run_search(M, K, lambda, nullptr, kind, options);
}

SearchResult search_picket_fence(std::int64_t K, const SearchOptions& options) {
  if (K < 2) fail(errc::invalid_argument, "picket fence search needs K >= 2");
  const std::int64_t M = K * K - 1;
  std::vector<char> forbidden(static_cast<std::size_t>(M), 0);
  for (std::int64_t x = K + 1; x < M; x += K + 1) forbidden[static_cast<std::size_t>(x)] = 1;
  const DesignKind kind = RelativeKind{K + 1, K - 1, K, 1};
  return run_search(M, K, 1, &forbidden, kind, options);
}

}  // namespace framekit
