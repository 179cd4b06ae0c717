#include "vh/alexander.hpp"

#include "vh/errors.hpp"

namespace vh {

namespace {

const LaurentPoly s = LaurentPoly::s_pow(1);
const LaurentPoly si = LaurentPoly::s_pow(-1);
const LaurentPoly one = 1;
const LaurentPoly zero;

PolyMat dx3() {
  return {{s, zero, zero, zero},
          {si, one, s - si, zero},
          {-si, zero, si, zero},
          {zero, zero, zero, one}};
}

PolyMat dy3() {
  return {{one, zero, one + s + s * s, one},
          {zero, one, zero, zero},
          {zero, zero, one, zero},
          {zero, zero, zero, one}};
}

PolyMat dx4() {
  return {{s, zero, zero, zero, zero, zero},
          {-(one + si), si, zero, -si, zero, zero},
          {zero, zero, one, zero, zero, zero},
          {zero, zero, zero, one, zero, zero},
          {si, one - si, zero, si, one, zero},
          {zero, zero, zero, zero, zero, one}};
}

PolyMat dy4() {
  PolyMat m = PolyMat::identity(6);
  m(0, 1) = one + s;
  m(0, 2) = one;
  return m;
}

}  // namespace

AlexCase make_alex_case(int i) {
  if (i == 3) return make_alex_case(3, dx3(), dy3());
  if (i == 4) return make_alex_case(4, dx4(), dy4());
  throw Error("Alexander case must be 3 or 4");
}

AlexCase make_alex_case(int i, PolyMat dx, PolyMat dy) {
  AlexCase c;
  c.i = i;
  if (i == 3) {
    c.dimension = 4;
    c.basis_labels = {"[y]", "[x1 x2^-1]", "[x1^2 x3]", "[x1]"};
    c.delete_rows = {4};
    c.delete_cols = {2};
  } else if (i == 4) {
    c.dimension = 6;
    c.basis_labels = {"[y^4]", "[x1 x3]", "[x1]", "[y^2]", "[x1 x2^-1]", "[x3 x4^-1]"};
    c.delete_rows = {3, 4};
    c.delete_cols = {5, 6};
  } else {
    throw Error("Alexander case must be 3 or 4");
  }
  if (dx.rows() != c.dimension || dx.cols() != c.dimension || dy.rows() != c.dimension ||
      dy.cols() != c.dimension)
    throw DimensionMismatch("generator matrices have the wrong size");
  c.Dx_inv = unit_inverse(dx);
  c.Dy_inv = unit_inverse(dy);
  c.Dx_mat = std::move(dx);
  c.Dy_mat = std::move(dy);
  return c;
}

PolyMat fstar_matrix(const AlexCase& c, const GenWord& W) {
  if (!W.empty() && (W.alphabet() != Alphabet::Subgroup || W.subgroup_index() != c.i))
    throw Error("fstar_matrix expects a subgroup word with i = " + std::to_string(c.i));
  PolyMat m = PolyMat::identity(c.dimension);
  for (const auto& syl : W.syllables()) {
    const PolyMat& g = syl.letter == Letter::A ? (syl.exp > 0 ? c.Dx_mat : c.Dx_inv)
                                               : (syl.exp > 0 ? c.Dy_mat : c.Dy_inv);
    std::int64_t k = syl.exp < 0 ? -syl.exp : syl.exp;
    for (std::int64_t r = 0; r < k; ++r) m = m * g;
  }
  return m;
}

PolyMat assemble_B(const AlexCase& c, const PolyMat& fstar, bool transpose_block) {
  if (fstar.rows() != c.dimension || fstar.cols() != c.dimension)
    throw DimensionMismatch("f_* has the wrong size for case " + std::to_string(c.i));
  PolyMat R = delete_rows_cols(PolyMat::identity(c.dimension) - fstar, c.delete_rows, c.delete_cols);
  PolyMat RT = transpose_block ? transpose(R) : R;
  const LaurentPoly p = LaurentPoly::p(), q = LaurentPoly::q();
  if (c.i == 3) {
    PolyMat b(4, 4);
    b(2, 0) = one - s;
    b(3, 0) = p;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t k = 0; k < 3; ++k) b(r, k + 1) = RT(r, k);
    b(3, 2) = -(q * si);
    return b;
  }
  PolyMat ma(5, 5), mb(5, 5);
  ma(2, 0) = one - s;
  ma(3, 0) = p;
  ma(4, 0) = p;
  ma(3, 4) = -(q * s);
  ma(4, 3) = -(q * si);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) mb(r, k + 1) = RT(r, k);
  return ma + mb * diagonal({one, one, one, p, one});
}

AlexResult alexander_poly(const AlexCase& c, const GenWord& W) {
  PolyMat f = fstar_matrix(c, W);
  AlexResult r;
  r.delta = det(assemble_B(c, f, true));
  if (c.i == 3) {
    if (!is_linear_pq(r.delta))
      throw StructuralAssertionFailed("case-3 determinant is not linear in p, q", r.delta.to_string());
  } else if (!q_divides(r.delta)) {
    LaurentPoly alt = det(assemble_B(c, f, false));
    if (!q_divides(alt))
      throw StructuralAssertionFailed("case-4 determinant is not divisible by q", r.delta.to_string());
    r.delta = std::move(alt);
    r.untransposed_fallback = true;
  }
  r.q_divisible = q_divides(r.delta);
  r.leading = leading_form(r.delta);
  return r;
}

}  // namespace vh
