#ifndef VH_POLY_MATRIX_HPP
#define VH_POLY_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "vh/laurent.hpp"

namespace vh {

/// Dense row-major matrix of Laurent polynomials.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(std::size_t rows, std::size_t cols);
  PolyMat(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static PolyMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  PolyMat operator+(const PolyMat& o) const;
  PolyMat operator-(const PolyMat& o) const;
  PolyMat operator*(const PolyMat& o) const;
  PolyMat scaled(const LaurentPoly& k) const;
  bool operator==(const PolyMat& o) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> e_;
};

/// Laplace expansion along the column with the fewest nonzero entries.
/// Throws NotSquare.
LaurentPoly det(const PolyMat& m);

/// Inverse of a matrix whose determinant is +-s^k. Throws NotAUnit.
PolyMat unit_inverse(const PolyMat& m);

/// Removes the given rows and columns, 1-based. Throws IndexOutOfRange.
PolyMat delete_rows_cols(const PolyMat& m, const std::set<std::size_t>& rows,
                         const std::set<std::size_t>& cols);

PolyMat transpose(const PolyMat& m);

/// diag(entries)
PolyMat diagonal(const std::vector<LaurentPoly>& entries);

}  // namespace vh

#endif  // VH_POLY_MATRIX_HPP
