#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "framekit/error.hpp"

namespace framekit {

// Largest field size p^m the library will instantiate. Guards the discrete
// log table and the exhaustive scans; every construction in scope is tiny.
inline constexpr std::int64_t kDefaultFieldCap = std::int64_t{1} << 20;

// GF(p^m) in polynomial-basis representation. The modulus is the first monic
// irreducible polynomial of degree m over Z_p in base-p code order (constant
// term is the least significant digit), so two specs with equal (p, m) are
// identical. For m = 1 the modulus is x.
struct FieldSpec {
  std::int64_t p = 0;                  // characteristic, prime
  int m = 0;                           // extension degree over Z_p
  std::vector<std::int64_t> modulus;   // length m+1, constant term first, monic
  std::int64_t size = 0;               // p^m

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p && a.m == b.m && a.modulus == b.modulus;
  }
};

using FieldRef = std::shared_ptr<const FieldSpec>;

class GFElement {
 public:
  GFElement() = default;
  GFElement(FieldRef field, std::vector<std::int64_t> coeffs);

  const FieldRef& field() const { return field_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  // Base-p integer encoding with the constant term least significant; the
  // deterministic "smallest element" ordering used throughout.
  std::int64_t code() const;
  bool is_zero() const;

  GFElement operator-() const;
  friend GFElement operator+(const GFElement& a, const GFElement& b);
  friend GFElement operator-(const GFElement& a, const GFElement& b);
  friend GFElement operator*(const GFElement& a, const GFElement& b);
  friend bool operator==(const GFElement& a, const GFElement& b);
  friend bool operator!=(const GFElement& a, const GFElement& b) { return !(a == b); }

  GFElement pow(std::int64_t e) const;  // e >= 0
  GFElement inverse() const;

 private:
  FieldRef field_;
  std::vector<std::int64_t> coeffs_;  // length m, reduced mod p
};

// Builds GF(p^m). Throws NotPrime for composite p, Overflow when p^m exceeds
// the cap.
FieldRef make_field(std::int64_t p, int m, std::int64_t cap = kDefaultFieldCap);

GFElement zero(const FieldRef& field);
GFElement one(const FieldRef& field);
GFElement from_code(const FieldRef& field, std::int64_t code);

std::int64_t multiplicative_order(const GFElement& x);

// Smallest nonzero element (code order) of multiplicative order p^m - 1.
GFElement primitive_element(const FieldRef& field);

// Relative trace onto GF(q), q = p^sub_degree: sum of x^{q^i} for
// i = 0 .. m/sub_degree - 1, returned inside x's field. Throws
// DegreeMismatch when sub_degree does not divide the extension degree.
GFElement relative_trace_raw(const GFElement& x, int sub_degree);

// Same sum, reported as an element of GF(q) via the canonical subfield
// embedding (the minimal-code root of GF(q)'s modulus inside x's field).
GFElement relative_trace(const GFElement& x, int sub_degree);

struct DiscreteLogTable {
  FieldRef field;
  std::vector<std::int64_t> exponent_by_code;  // -1 for zero

  std::int64_t at(const GFElement& x) const;
  std::size_t entries() const { return exponent_by_code.size() - 1; }
};

// exponent_by_code[alpha^i] = i for 0 <= i < p^m - 1. Throws NotPrimitive if
// alpha generates a proper subgroup.
DiscreteLogTable discrete_log_table(const FieldRef& field, const GFElement& alpha);

bool is_prime(std::int64_t n);

// q = p^s for a prime p; returns {p, s}. Throws NotPrimePower.
std::pair<std::int64_t, int> factor_prime_power(std::int64_t q);

// p^e with overflow guard against the cap.
std::int64_t checked_pow(std::int64_t p, int e, std::int64_t cap);

}  // namespace framekit
