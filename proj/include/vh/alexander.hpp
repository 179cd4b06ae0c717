#ifndef VH_ALEXANDER_HPP
#define VH_ALEXANDER_HPP

#include <set>
#include <string>
#include <vector>

#include "vh/laurent.hpp"
#include "vh/poly_matrix.hpp"
#include "vh/word.hpp"

namespace vh {

/// Constant data for the three- or four-fold case: the action of the
/// generators on the homology of the infinite cyclic cover, in a fixed basis.
struct AlexCase {
  int i = 3;
  std::size_t dimension = 4;
  std::vector<std::string> basis_labels;
  /// 1-based, applied to Id - f_*.
  std::set<std::size_t> delete_rows, delete_cols;
  PolyMat Dx_mat, Dy_mat;
  PolyMat Dx_inv, Dy_inv;
};

/// i = 3: 4x4 matrices; i = 4: 6x6 matrices.
AlexCase make_alex_case(int i);

/// Same layout with caller-supplied generator matrices (used to exercise
/// the verification path with corrupted constants).
AlexCase make_alex_case(int i, PolyMat dx, PolyMat dy);

struct AlexResult {
  LaurentPoly delta;
  LeadingForm leading;
  bool q_divisible = false;
  /// Case 4 only: the transposed block failed q-divisibility and the
  /// untransposed block was used.
  bool untransposed_fallback = false;
};

/// W(Dx_mat, Dy_mat), multiplied left to right.
PolyMat fstar_matrix(const AlexCase& c, const GenWord& W);

/// Bordered matrix whose determinant is the Alexander polynomial.
/// `transpose_block` selects R^T (default) or R in the block.
PolyMat assemble_B(const AlexCase& c, const PolyMat& fstar, bool transpose_block = true);

/// det(assemble_B(c, fstar_matrix(c, W))) with the structural checks:
/// linearity in (p, q) for i = 3, divisibility by q for i = 4. Throws
/// StructuralAssertionFailed, and ZeroPolynomial when the determinant is 0.
AlexResult alexander_poly(const AlexCase& c, const GenWord& W);

}  // namespace vh

#endif  // VH_ALEXANDER_HPP
