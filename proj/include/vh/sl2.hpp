#ifndef VH_SL2_HPP
#define VH_SL2_HPP

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>

#include "vh/word.hpp"

namespace vh {

/// 2x2 integer matrix of determinant one. Entries are row-major.
class IntMat2 {
 public:
  /// Identity.
  IntMat2();
  /// Throws DeterminantViolation unless a11*a22 - a12*a21 == 1.
  IntMat2(mpz_class a11, mpz_class a12, mpz_class a21, mpz_class a22);

  static IntMat2 identity() { return IntMat2(); }

  const mpz_class& operator()(int r, int c) const { return e_[2 * r + c]; }
  mpz_class trace() const { return e_[0] + e_[3]; }

  IntMat2 operator*(const IntMat2& rhs) const;
  IntMat2 operator-() const;
  IntMat2 inverse() const;
  IntMat2 pow(std::int64_t n) const;

  bool operator==(const IntMat2& o) const { return e_ == o.e_; }

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  struct Unchecked {};
  IntMat2(Unchecked, mpz_class a11, mpz_class a12, mpz_class a21, mpz_class a22);

  std::array<mpz_class, 4> e_;
};

/// x -> [[1,-1],[0,1]], y -> [[1,0],[1,1]]
IntMat2 generator_matrix(Letter l, int subgroup_index = 0);

/// Product of generator matrices, left to right. Subgroup words are
/// evaluated with A -> x, B -> y^i.
IntMat2 mat_of_word(const GenWord& w);

/// |trace| > 2.
bool is_hyperbolic(const IntMat2& m);

struct LRFactorization {
  int sign;  // +1 or -1
  GenWord word;
};

/// Writes m = sign * (positive word in x^-1 and y). Throws NotLRFactorable
/// when neither m nor -m is reachable by such a word.
LRFactorization lr_factorization(const IntMat2& m);

}  // namespace vh

#endif  // VH_SL2_HPP
