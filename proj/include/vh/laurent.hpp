#ifndef VH_LAURENT_HPP
#define VH_LAURENT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vh {

/// Integer polynomial in the filling parameters p and q.
class PQCoef {
 public:
  struct Term {
    std::uint32_t p, q;
    mpz_class c;
  };

  PQCoef() = default;
  explicit PQCoef(mpz_class c);
  static PQCoef monomial(mpz_class c, std::uint32_t p, std::uint32_t q);

  bool is_zero() const { return terms_.empty(); }
  /// Sorted by (p, q) ascending, nonzero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  /// Coefficient of p^a q^b (zero if absent).
  mpz_class coeff(std::uint32_t a, std::uint32_t b) const;

  PQCoef operator+(const PQCoef& o) const;
  PQCoef operator-(const PQCoef& o) const;
  PQCoef operator-() const;
  PQCoef operator*(const PQCoef& o) const;
  bool operator==(const PQCoef& o) const;

  std::string to_string() const;

 private:
  friend class LaurentPoly;
  std::vector<Term> terms_;
};

/// Laurent polynomial in s over Z[p, q]. Stored as a flat list of
/// monomials c * p^a * q^b * s^k sorted by (k, a, b) with no zero
/// coefficient, so structural equality is mathematical equality.
class LaurentPoly {
 public:
  struct Term {
    std::int64_t s;
    std::uint32_t p, q;
    mpz_class c;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integer constants convert implicitly
  static LaurentPoly monomial(mpz_class c, std::int64_t s, std::uint32_t p = 0, std::uint32_t q = 0);
  static LaurentPoly s_pow(std::int64_t k) { return monomial(1, k); }
  static LaurentPoly p() { return monomial(1, 0, 1, 0); }
  static LaurentPoly q() { return monomial(1, 0, 0, 1); }
  /// Builds from arbitrary terms, combining duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Coefficient of s^k.
  PQCoef coeff(std::int64_t k) const;

  LaurentPoly add(const LaurentPoly& o) const;
  LaurentPoly sub(const LaurentPoly& o) const;
  LaurentPoly mul(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return a.add(b); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a.sub(b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return a.mul(b); }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool equals(const LaurentPoly& o) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.equals(b); }

  /// Descending s, e.g. "q*s^4 + 3*q*s^3 - q*s^-5"; "0" for zero.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly parse_laurent(std::string_view text);

struct LeadingForm {
  std::int64_t sdeg;
  PQCoef coef;
};

/// Highest power of s and its coefficient. Throws ZeroPolynomial.
LeadingForm leading_form(const LaurentPoly& d);

/// Every monomial has q-degree >= 1 (true for zero).
bool q_divides(const LaurentPoly& d);

/// f == +-s^k g for some k.
bool equal_up_to_unit(const LaurentPoly& f, const LaurentPoly& g);

/// Substitutes integers for p and q.
LaurentPoly specialize_pq(const LaurentPoly& d, long p, long q);

/// Every monomial has total (p, q)-degree exactly 1.
bool is_linear_pq(const LaurentPoly& d);

}  // namespace vh

#endif  // VH_LAURENT_HPP
