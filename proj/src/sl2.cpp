#include "vh/sl2.hpp"

#include <sstream>

#include "vh/errors.hpp"

namespace vh {

IntMat2::IntMat2() : e_{1, 0, 0, 1} {}

IntMat2::IntMat2(mpz_class a11, mpz_class a12, mpz_class a21, mpz_class a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  if (e_[0] * e_[3] - e_[1] * e_[2] != 1)
    throw DeterminantViolation("matrix " + to_string() + " does not have determinant 1");
}

IntMat2::IntMat2(Unchecked, mpz_class a11, mpz_class a12, mpz_class a21, mpz_class a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

IntMat2 IntMat2::operator*(const IntMat2& r) const {
  const auto& l = e_;
  IntMat2 out(Unchecked{}, l[0] * r.e_[0] + l[1] * r.e_[2], l[0] * r.e_[1] + l[1] * r.e_[3],
              l[2] * r.e_[0] + l[3] * r.e_[2], l[2] * r.e_[1] + l[3] * r.e_[3]);
  // det is multiplicative; a failure here means memory corruption or a bug
  if (out.e_[0] * out.e_[3] - out.e_[1] * out.e_[2] != 1)
    throw DeterminantViolation("product lost determinant 1");
  return out;
}

IntMat2 IntMat2::operator-() const {
  return IntMat2(Unchecked{}, -e_[0], -e_[1], -e_[2], -e_[3]);
}

IntMat2 IntMat2::inverse() const {
  return IntMat2(Unchecked{}, e_[3], -e_[1], -e_[2], e_[0]);
}

IntMat2 IntMat2::pow(std::int64_t n) const {
  IntMat2 base = n < 0 ? inverse() : *this;
  std::uint64_t k = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  IntMat2 acc;
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

std::string IntMat2::to_string() const {
  std::ostringstream os;
  os << "[[" << e_[0] << ',' << e_[1] << "],[" << e_[2] << ',' << e_[3] << "]]";
  return os.str();
}

IntMat2 generator_matrix(Letter l, int subgroup_index) {
  switch (l) {
    case Letter::X:
    case Letter::A:
      return IntMat2(1, -1, 0, 1);
    case Letter::Y:
      return IntMat2(1, 0, 1, 1);
    case Letter::B:
      return IntMat2(1, 0, subgroup_index, 1);
  }
  return IntMat2();
}

IntMat2 mat_of_word(const GenWord& w) {
  IntMat2 m;
  for (const auto& s : w.syllables()) {
    // generators are unipotent: g^e has the off-diagonal entry scaled by e
    mpz_class e = static_cast<long>(s.exp);
    switch (s.letter) {
      case Letter::X:
      case Letter::A:
        m = m * IntMat2(1, -e, 0, 1);
        break;
      case Letter::Y:
        m = m * IntMat2(1, 0, e, 1);
        break;
      case Letter::B:
        m = m * IntMat2(1, 0, e * w.subgroup_index(), 1);
        break;
    }
  }
  return m;
}

bool is_hyperbolic(const IntMat2& m) { return abs(m.trace()) > 2; }

LRFactorization lr_factorization(const IntMat2& m) {
  auto nonneg = [](const IntMat2& a) {
    return sgn(a(0, 0)) >= 0 && sgn(a(0, 1)) >= 0 && sgn(a(1, 0)) >= 0 && sgn(a(1, 1)) >= 0;
  };
  int sign = 1;
  IntMat2 h = m;
  if (!nonneg(h)) {
    h = -m;
    sign = -1;
    if (!nonneg(h)) throw NotLRFactorable("matrix " + m.to_string() + " has entries of both signs");
  }
  // Peel generators from the left: x^-1 = [[1,1],[0,1]] adds row 1 to row 0,
  // y = [[1,0],[1,1]] adds row 0 to row 1.
  std::vector<Syllable> letters;
  mpz_class a = h(0, 0), b = h(0, 1), c = h(1, 0), d = h(1, 1);
  while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
    if (a >= c && b >= d) {
      a -= c;
      b -= d;
      letters.push_back({Letter::X, -1});
    } else if (c >= a && d >= b) {
      c -= a;
      d -= b;
      letters.push_back({Letter::Y, 1});
    } else {
      throw NotLRFactorable("matrix " + m.to_string() + " is not a positive word in x^-1, y");
    }
  }
  return {sign, GenWord::monodromy(std::move(letters))};
}

}  // namespace vh
