#include "vh/poly_matrix.hpp"

#include <numeric>

#include "vh/errors.hpp"

namespace vh {

PolyMat::PolyMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

PolyMat::PolyMat(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

PolyMat PolyMat::identity(std::size_t n) {
  PolyMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  PolyMat r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

PolyMat PolyMat::operator-(const PolyMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  PolyMat r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  PolyMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const LaurentPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const LaurentPoly& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

PolyMat PolyMat::scaled(const LaurentPoly& k) const {
  PolyMat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
  return r;
}

bool PolyMat::operator==(const PolyMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string PolyMat::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ",\n [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

LaurentPoly det_rec(const PolyMat& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  if (n == 1) return m(rows[0], cols[0]);
  if (n == 2)
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  // pivot column: fewest nonzeros, first such on ties
  std::size_t best = 0, best_nz = n + 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < n; ++i) nz += !m(rows[i], cols[j]).is_zero();
    if (nz < best_nz) {
      best_nz = nz;
      best = j;
    }
  }
  if (best_nz == 0) return LaurentPoly();
  LaurentPoly acc;
  std::size_t col = cols[best];
  cols.erase(cols.begin() + best);
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly& a = m(rows[i], col);
    if (a.is_zero()) continue;
    std::size_t row = rows[i];
    rows.erase(rows.begin() + i);
    LaurentPoly minor = det_rec(m, rows, cols);
    rows.insert(rows.begin() + i, row);
    if (minor.is_zero()) continue;
    if ((i + best) % 2)
      acc -= a * minor;
    else
      acc += a * minor;
  }
  cols.insert(cols.begin() + best, col);
  return acc;
}

}  // namespace

LaurentPoly det(const PolyMat& m) {
  if (m.rows() != m.cols())
    throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  return det_rec(m, rows, cols);
}

PolyMat unit_inverse(const PolyMat& m) {
  if (m.rows() != m.cols()) throw NotSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  LaurentPoly d = det(m);
  const auto& t = d.terms();
  if (t.size() != 1 || t[0].p != 0 || t[0].q != 0 || abs(t[0].c) != 1)
    throw NotAUnit("determinant " + d.to_string() + " is not +-s^k");
  LaurentPoly dinv = LaurentPoly::monomial(t[0].c, -t[0].s);
  PolyMat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(m)(i, j) = (-1)^(i+j) det(m without row j, col i)
      PolyMat minor = delete_rows_cols(m, {j + 1}, {i + 1});
      LaurentPoly c = det(minor) * dinv;
      r(i, j) = (i + j) % 2 ? -c : c;
    }
  return r;
}

PolyMat delete_rows_cols(const PolyMat& m, const std::set<std::size_t>& rows, const std::set<std::size_t>& cols) {
  for (auto r : rows)
    if (r < 1 || r > m.rows()) throw IndexOutOfRange("row " + std::to_string(r) + " out of range");
  for (auto c : cols)
    if (c < 1 || c > m.cols()) throw IndexOutOfRange("column " + std::to_string(c) + " out of range");
  PolyMat out(m.rows() - rows.size(), m.cols() - cols.size());
  std::size_t oi = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows.count(i + 1)) continue;
    std::size_t oj = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (cols.count(j + 1)) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

PolyMat transpose(const PolyMat& m) {
  PolyMat r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

PolyMat diagonal(const std::vector<LaurentPoly>& entries) {
  PolyMat r(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) r(i, i) = entries[i];
  return r;
}

}  // namespace vh
