#include "framekit/gf.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace framekit {
namespace {

using Poly = std::vector<std::int64_t>;  // constant term first

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// Remainder of a mod g over Z_p; g monic of degree d. Returns length-d vector.
Poly poly_mod(Poly a, const Poly& g, std::int64_t p) {
  const std::size_t d = g.size() - 1;
  while (a.size() > d) {
    const std::int64_t lead = mod_p(a.back(), p);
    if (lead != 0) {
      const std::size_t off = a.size() - 1 - d;
      for (std::size_t i = 0; i <= d; ++i) {
        a[off + i] = mod_p(a[off + i] - lead * g[i], p);
      }
    }
    a.pop_back();
  }
  a.resize(d, 0);
  for (auto& c : a) c = mod_p(c, p);
  return a;
}

bool is_zero_poly(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

Poly poly_from_code(std::int64_t code, std::size_t len, std::int64_t p) {
  Poly c(len, 0);
  for (std::size_t i = 0; i < len && code > 0; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

// Trial division by every monic polynomial of degree 1 .. deg/2.
bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly g = poly_from_code(code, d, p);
      g.push_back(1);
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

void check_same_field(const GFElement& a, const GFElement& b) {
  if (!(*a.field() == *b.field())) {
    fail(errc::invalid_argument, "operands belong to different fields");
  }
}

std::map<std::int64_t, int> factorize(std::int64_t n) {
  std::map<std::int64_t, int> fs;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++fs[d];
      n /= d;
    }
  }
  if (n > 1) ++fs[n];
  return fs;
}

GFElement scalar_mul(const GFElement& x, std::int64_t c) {
  const std::int64_t p = x.field()->p;
  c = mod_p(c, p);
  std::vector<std::int64_t> out(x.coeffs());
  for (auto& v : out) v = mod_p(v * c, p);
  return GFElement(x.field(), std::move(out));
}

// Mod-p Gaussian elimination: returns a basis of the kernel of the D x D
// matrix `cols` (stored column-major).
std::vector<std::vector<std::int64_t>> kernel_basis(std::vector<std::vector<std::int64_t>> cols,
                                                    std::int64_t p) {
  const std::size_t n = cols.size();        // number of columns
  const std::size_t rows = cols[0].size();  // D
  std::vector<int> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (cols[c][i] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    for (auto& col : cols) std::swap(col[r], col[sel]);
    // normalize pivot row
    std::int64_t inv = 1;
    {
      // Fermat inverse in Z_p
      std::int64_t b = cols[c][r], e = p - 2, acc = 1;
      while (e > 0) {
        if (e & 1) acc = mod_p(acc * b, p);
        b = mod_p(b * b, p);
        e >>= 1;
      }
      inv = acc;
    }
    for (auto& col : cols) col[r] = mod_p(col[r] * inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && cols[c][i] != 0) {
        const std::int64_t f = cols[c][i];
        for (auto& col : cols) col[i] = mod_p(col[i] - f * col[r], p);
      }
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] != -1) continue;
    std::vector<std::int64_t> v(n, 0);
    v[c] = 1;
    for (std::size_t c2 = 0; c2 < n; ++c2) {
      if (pivot_of_col[c2] != -1) {
        v[c2] = mod_p(-cols[c][pivot_of_col[c2]], p);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves B u = rhs over Z_p where B is rows x ncols (column-major). Throws
// DegreeMismatch when inconsistent.
std::vector<std::int64_t> solve_linear(std::vector<std::vector<std::int64_t>> cols,
                                       std::vector<std::int64_t> rhs, std::int64_t p) {
  const std::size_t ncols = cols.size();
  const std::size_t rows = rhs.size();
  std::vector<int> pivot_row_of_col(ncols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (cols[c][i] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    for (auto& col : cols) std::swap(col[r], col[sel]);
    std::swap(rhs[r], rhs[sel]);
    std::int64_t b = cols[c][r], e = p - 2, inv = 1;
    while (e > 0) {
      if (e & 1) inv = mod_p(inv * b, p);
      b = mod_p(b * b, p);
      e >>= 1;
    }
    for (auto& col : cols) col[r] = mod_p(col[r] * inv, p);
    rhs[r] = mod_p(rhs[r] * inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && cols[c][i] != 0) {
        const std::int64_t f = cols[c][i];
        for (auto& col : cols) col[i] = mod_p(col[i] - f * col[r], p);
        rhs[i] = mod_p(rhs[i] - f * rhs[r], p);
      }
    }
    pivot_row_of_col[c] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) fail(errc::degree_mismatch, "value does not lie in the requested subfield");
  }
  std::vector<std::int64_t> u(ncols, 0);
  for (std::size_t c = 0; c < ncols; ++c) {
    if (pivot_row_of_col[c] != -1) u[c] = rhs[pivot_row_of_col[c]];
  }
  return u;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::int64_t, int> factor_prime_power(std::int64_t q) {
  if (q < 2) fail(errc::not_prime_power, std::to_string(q) + " is not a prime power");
  const auto fs = factorize(q);
  if (fs.size() != 1) fail(errc::not_prime_power, std::to_string(q) + " is not a prime power");
  return {fs.begin()->first, fs.begin()->second};
}

std::int64_t checked_pow(std::int64_t p, int e, std::int64_t cap) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > cap / p) {
      fail(errc::overflow, "p^m exceeds the configured index-size limit");
    }
    v *= p;
  }
  return v;
}

GFElement::GFElement(FieldRef field, std::vector<std::int64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(field_->m), 0);
  for (auto& c : coeffs_) c = mod_p(c, field_->p);
}

std::int64_t GFElement::code() const {
  std::int64_t v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * field_->p + *it;
  return v;
}

bool GFElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

GFElement GFElement::operator-() const {
  std::vector<std::int64_t> out(coeffs_);
  for (auto& c : out) c = mod_p(-c, field_->p);
  return GFElement(field_, std::move(out));
}

GFElement operator+(const GFElement& a, const GFElement& b) {
  check_same_field(a, b);
  std::vector<std::int64_t> out(a.coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_p(out[i] + b.coeffs_[i], a.field_->p);
  return GFElement(a.field_, std::move(out));
}

GFElement operator-(const GFElement& a, const GFElement& b) { return a + (-b); }

GFElement operator*(const GFElement& a, const GFElement& b) {
  check_same_field(a, b);
  const auto& spec = *a.field_;
  Poly conv(2 * static_cast<std::size_t>(spec.m) - 1, 0);
  if (spec.m == 1) conv.resize(1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      conv[i + j] = mod_p(conv[i + j] + a.coeffs_[i] * b.coeffs_[j], spec.p);
    }
  }
  return GFElement(a.field_, poly_mod(std::move(conv), spec.modulus, spec.p));
}

bool operator==(const GFElement& a, const GFElement& b) {
  return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
}

GFElement GFElement::pow(std::int64_t e) const {
  if (e < 0) fail(errc::invalid_argument, "negative exponent");
  GFElement r = framekit::one(field_);
  GFElement b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

GFElement GFElement::inverse() const {
  if (is_zero()) fail(errc::invalid_argument, "inverse of zero");
  return pow(field_->size - 2);
}

FieldRef make_field(std::int64_t p, int m, std::int64_t cap) {
  if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (m < 1) fail(errc::invalid_argument, "extension degree must be positive");
  const std::int64_t size = checked_pow(p, m, cap);

  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->m = m;
  spec->size = size;
  if (m == 1) {
    spec->modulus = {0, 1};  // x
    return spec;
  }
  for (std::int64_t code = 0; code < size; ++code) {
    Poly f = poly_from_code(code, static_cast<std::size_t>(m), p);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      spec->modulus = std::move(f);
      return spec;
    }
  }
  fail(errc::invalid_argument, "no irreducible modulus found");  // unreachable
}

GFElement zero(const FieldRef& field) {
  return GFElement(field, std::vector<std::int64_t>(static_cast<std::size_t>(field->m), 0));
}

GFElement one(const FieldRef& field) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(field->m), 0);
  c[0] = 1;
  return GFElement(field, std::move(c));
}

GFElement from_code(const FieldRef& field, std::int64_t code) {
  if (code < 0 || code >= field->size) fail(errc::invalid_argument, "element code out of range");
  return GFElement(field, poly_from_code(code, static_cast<std::size_t>(field->m), field->p));
}

std::int64_t multiplicative_order(const GFElement& x) {
  if (x.is_zero()) fail(errc::invalid_argument, "zero has no multiplicative order");
  const std::int64_t n = x.field()->size - 1;
  std::int64_t order = n;
  const GFElement id = one(x.field());
  for (const auto& [prime, _] : factorize(n)) {
    while (order % prime == 0 && x.pow(order / prime) == id) order /= prime;
  }
  return order;
}

GFElement primitive_element(const FieldRef& field) {
  const std::int64_t n = field->size - 1;
  for (std::int64_t code = 1; code < field->size; ++code) {
    GFElement x = from_code(field, code);
    if (multiplicative_order(x) == n) return x;
  }
  fail(errc::invalid_argument, "no primitive element found");  // unreachable
}

GFElement relative_trace_raw(const GFElement& x, int sub_degree) {
  const auto& spec = *x.field();
  if (sub_degree < 1 || spec.m % sub_degree != 0) {
    fail(errc::degree_mismatch, "sub_degree " + std::to_string(sub_degree) +
                                    " does not divide extension degree " + std::to_string(spec.m));
  }
  const std::int64_t q = checked_pow(spec.p, sub_degree, spec.size);
  GFElement acc = x;
  GFElement t = x;
  for (int i = 1; i < spec.m / sub_degree; ++i) {
    t = t.pow(q);
    acc = acc + t;
  }
  return acc;
}

GFElement relative_trace(const GFElement& x, int sub_degree) {
  const GFElement t = relative_trace_raw(x, sub_degree);
  const auto& spec = *x.field();
  const FieldRef sub = make_field(spec.p, sub_degree);
  const std::int64_t p = spec.p;
  const int big_deg = spec.m;
  const int s = sub_degree;

  if (s == big_deg && sub->modulus == spec.modulus) {
    return GFElement(sub, t.coeffs());
  }

  // Subfield GF(q) inside x's field: kernel of y -> y^q - y.
  const std::int64_t q = checked_pow(p, s, spec.size);
  std::vector<std::vector<std::int64_t>> frob_cols;
  frob_cols.reserve(static_cast<std::size_t>(big_deg));
  for (int i = 0; i < big_deg; ++i) {
    std::vector<std::int64_t> unit(static_cast<std::size_t>(big_deg), 0);
    unit[static_cast<std::size_t>(i)] = 1;
    GFElement e(x.field(), unit);
    GFElement img = e.pow(q) - e;
    frob_cols.push_back(img.coeffs());
  }
  const auto kern = kernel_basis(frob_cols, p);

  // Minimal-code root of GF(q)'s modulus among the Frobenius conjugates of
  // the first root encountered in the kernel.
  GFElement root = zero(x.field());
  bool found = false;
  std::vector<std::int64_t> combo(kern.size(), 0);
  const std::int64_t total = checked_pow(p, static_cast<int>(kern.size()), kDefaultFieldCap);
  // idx = 0 covers the prime-field convention where the modulus is x itself.
  for (std::int64_t idx = 0; idx < total && !found; ++idx) {
    std::int64_t v = idx;
    for (auto& c : combo) {
      c = v % p;
      v /= p;
    }
    GFElement cand = zero(x.field());
    for (std::size_t j = 0; j < kern.size(); ++j) {
      if (combo[j] != 0) {
        GFElement base(x.field(), kern[j]);
        cand = cand + scalar_mul(base, combo[j]);
      }
    }
    // Horner evaluation of the subfield modulus at cand.
    GFElement val = scalar_mul(one(x.field()), sub->modulus.back());
    for (int i = s - 1; i >= 0; --i) {
      val = val * cand + scalar_mul(one(x.field()), sub->modulus[static_cast<std::size_t>(i)]);
    }
    if (val.is_zero()) {
      root = cand;
      found = true;
    }
  }
  if (!found) fail(errc::degree_mismatch, "subfield modulus has no root (internal)");

  GFElement beta = root;
  GFElement conj = root;
  for (int j = 1; j < s; ++j) {
    conj = conj.pow(p);
    if (conj.code() < beta.code()) beta = conj;
  }

  // Coordinates of the trace value in the basis {beta^j}.
  std::vector<std::vector<std::int64_t>> basis_cols;
  GFElement pw = one(x.field());
  for (int j = 0; j < s; ++j) {
    basis_cols.push_back(pw.coeffs());
    pw = pw * beta;
  }
  return GFElement(sub, solve_linear(std::move(basis_cols), t.coeffs(), p));
}

std::int64_t DiscreteLogTable::at(const GFElement& x) const {
  if (!(*x.field() == *field)) fail(errc::invalid_argument, "element from a different field");
  if (x.is_zero()) fail(errc::invalid_argument, "zero is not in the multiplicative group");
  return exponent_by_code[static_cast<std::size_t>(x.code())];
}

DiscreteLogTable discrete_log_table(const FieldRef& field, const GFElement& alpha) {
  if (!(*alpha.field() == *field)) fail(errc::invalid_argument, "alpha from a different field");
  if (alpha.is_zero()) fail(errc::not_primitive, "zero is not primitive");
  DiscreteLogTable table;
  table.field = field;
  table.exponent_by_code.assign(static_cast<std::size_t>(field->size), -1);
  GFElement acc = one(field);
  for (std::int64_t i = 0; i < field->size - 1; ++i) {
    const auto c = static_cast<std::size_t>(acc.code());
    if (table.exponent_by_code[c] != -1) {
      fail(errc::not_primitive, "element order is smaller than the group order");
    }
    table.exponent_by_code[c] = i;
    acc = acc * alpha;
  }
  return table;
}

}  // namespace framekit
