#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace ncbinom {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
public:
  explicit CMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0)
      throw DimensionError("CMatrix: dimension must be positive");
  }

  CMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0 || entries_.size() != dim * dim)
      throw DimensionError("CMatrix: expected " + std::to_string(dim * dim) +
                           " entries");
  }

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = 1.0;
    return m;
  }

  static CMatrix diagonal(const std::vector<Complex> &diag) {
    CMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
      m(i, i) = diag[i];
    return m;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Complex> &entries() const { return entries_; }

  Complex &operator()(std::size_t i, std::size_t j) {
    return entries_[i * dim_ + j];
  }
  const Complex &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  bool is_zero() const {
    for (const auto &z : entries_)
      if (z != Complex{})
        return false;
    return true;
  }

  bool all_finite() const {
    for (const auto &z : entries_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        return false;
    return true;
  }

  CMatrix transpose() const {
    CMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i)
      t += (*this)(i, i);
    return t;
  }

  CMatrix &operator+=(const CMatrix &o) {
    require_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] += o.entries_[i];
    return *this;
  }
  CMatrix &operator-=(const CMatrix &o) {
    require_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] -= o.entries_[i];
    return *this;
  }
  CMatrix &operator*=(Complex s) {
    for (auto &z : entries_)
      z *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  CMatrix operator-() const { return Complex(-1.0) * *this; }

  friend CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    a.require_dim(b);
    const std::size_t n = a.dim_;
    CMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{})
          continue;
        for (std::size_t j = 0; j < n; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const CMatrix &, const CMatrix &) = default;

  void require_dim(const CMatrix &o) const {
    if (o.dim_ != dim_)
      throw DimensionError("CMatrix: dimension mismatch (" +
                           std::to_string(dim_) + " vs " +
                           std::to_string(o.dim_) + ")");
  }

private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

inline double max_abs(const CMatrix &a) {
  double m = 0.0;
  for (const auto &z : a.entries())
    m = std::max(m, std::abs(z));
  return m;
}

/// Scaled by the largest entry so that squares neither overflow nor underflow.
inline double frob_norm(const CMatrix &a) {
  const double scale = max_abs(a);
  if (scale == 0.0 || !std::isfinite(scale))
    return scale;
  double s = 0.0;
  for (const auto &z : a.entries())
    s += std::norm(z / scale);
  return scale * std::sqrt(s);
}

/// a^n by repeated multiplication; a^0 = I.
inline CMatrix mat_pow(const CMatrix &a, unsigned n) {
  CMatrix r = CMatrix::identity(a.dim());
  for (unsigned i = 0; i < n; ++i)
    r = r * a;
  return r;
}

/// LU factorization with partial pivoting, PA = LU stored in place.
class LuDecomposition {
public:
  explicit LuDecomposition(const CMatrix &a) : lu_(a), perm_(a.dim()) {
    const std::size_t n = a.dim();
    const double threshold = static_cast<double>(n) *
                             std::numeric_limits<double>::epsilon() *
                             max_abs(a);
    for (std::size_t i = 0; i < n; ++i)
      perm_[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      for (std::size_t r = col + 1; r < n; ++r)
        if (std::abs(lu_(r, col)) > std::abs(lu_(pivot, col)))
          pivot = r;
      if (!(std::abs(lu_(pivot, col)) > threshold))
        throw SingularMatrixError("LU: pivot " + std::to_string(col) +
                                  " below threshold; matrix is singular");
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j)
          std::swap(lu_(col, j), lu_(pivot, j));
        std::swap(perm_[col], perm_[pivot]);
      }
      for (std::size_t r = col + 1; r < n; ++r) {
        Complex f = lu_(r, col) / lu_(col, col);
        lu_(r, col) = f;
        for (std::size_t j = col + 1; j < n; ++j)
          lu_(r, j) -= f * lu_(col, j);
      }
    }
  }

  std::size_t dim() const { return lu_.dim(); }

  CMatrix solve(const CMatrix &b) const {
    lu_.require_dim(b);
    const std::size_t n = dim();
    CMatrix x(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Complex> y(n);
      for (std::size_t i = 0; i < n; ++i) {
        Complex s = b(perm_[i], c);
        for (std::size_t k = 0; k < i; ++k)
          s -= lu_(i, k) * y[k];
        y[i] = s;
      }
      for (std::size_t i = n; i-- > 0;) {
        Complex s = y[i];
        for (std::size_t k = i + 1; k < n; ++k)
          s -= lu_(i, k) * x(k, c);
        x(i, c) = s / lu_(i, i);
      }
    }
    return x;
  }

private:
  CMatrix lu_;
  std::vector<std::size_t> perm_;
};

struct SolveResult {
  CMatrix solution;
  double relative_residual; ///< ||A X - B||_F / ||B||_F (absolute if B = 0)
};

inline SolveResult lu_solve(const CMatrix &a, const CMatrix &b) {
  CMatrix x = LuDecomposition(a).solve(b);
  double bn = frob_norm(b);
  double res = frob_norm(a * x - b);
  return SolveResult{std::move(x), bn > 0 ? res / bn : res};
}

/// {"dim": d, "entries": [[re, im], ...]} row-major.
inline nlohmann::json to_json(const CMatrix &m) {
  auto entries = nlohmann::json::array();
  for (const auto &z : m.entries())
    entries.push_back({z.real(), z.imag()});
  return {{"dim", m.dim()}, {"entries", entries}};
}

inline CMatrix matrix_from_json(const nlohmann::json &j) {
  auto dim = j.at("dim").get<std::size_t>();
  const auto &entries = j.at("entries");
  if (!entries.is_array() || entries.size() != dim * dim)
    throw DimensionError("matrix file: expected " + std::to_string(dim * dim) +
                         " entries");
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto &e : entries) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("matrix file: entry must be [re, im]");
    values.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  CMatrix m(dim, std::move(values));
  if (!m.all_finite())
    throw NumericError("matrix file: non-finite entry");
  return m;
}

} // namespace ncbinom
