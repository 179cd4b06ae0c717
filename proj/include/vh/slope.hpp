#ifndef VH_SLOPE_HPP
#define VH_SLOPE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "vh/alexander.hpp"
#include "vh/word.hpp"

namespace vh {

/// Unoriented slope: coprime (a, b) with a > 0, or (0, 1).
struct Slope {
  std::int64_t a = 0, b = 1;

  bool operator==(const Slope&) const = default;
  auto operator<=>(const Slope&) const = default;
  /// "(a,b)"
  std::string to_string() const;
};

/// Throws ZeroVector for (0, 0).
Slope normalize(const mpz_class& a, const mpz_class& b);
inline Slope normalize(std::int64_t a, std::int64_t b) { return normalize(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b))); }

/// Parses "(a,b)" and normalizes.
Slope parse_slope(std::string_view text);

/// |a1 b2 - b1 a2|
std::int64_t intersection(const Slope& s1, const Slope& s2);

/// (total_expsum(u) - total_expsum(v)) / 12 for words with the same image
/// in SL2(Z). Subgroup words are expanded first. Throws MatrixMismatch and
/// NonIntegralTwist.
std::int64_t twist(const GenWord& u, const GenWord& v);

/// (a, b) -> normalize(a, b - a t)
Slope frame_transform(const Slope& s, std::int64_t t);

struct BetaSet {
  Slope beta31, beta32, beta41, beta42;
  std::int64_t t3 = 0, t4 = 0;
  std::int64_t n3 = 0, n4 = 0;
  std::int64_t m = 1;
};

/// The four slopes for f^m = W3(a, b^3) = W4(a, b^4), using the leading
/// coefficient p*n1 + q*n2 of the case-3 Alexander polynomial.
BetaSet beta_slopes(const GenWord& f, std::int64_t m, const GenWord& W3, const GenWord& W4,
                    const AlexResult& delta3);

/// {beta31, beta32} and {beta41, beta42} are disjoint.
bool vh_success(const BetaSet& b);

}  // namespace vh

#endif  // VH_SLOPE_HPP
