#include "vh/slope.hpp"

#include <cctype>

#include "vh/errors.hpp"
#include "vh/sl2.hpp"

namespace vh {

namespace {

std::int64_t to_i64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw Error(std::string(what) + " exceeds 64 bits");
  return z.get_si();
}

}  // namespace

std::string Slope::to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Slope normalize(const mpz_class& a, const mpz_class& b) {
  if (a == 0 && b == 0) throw ZeroVector("slope (0,0)");
  mpz_class g = gcd(a, b);
  mpz_class x = a / g, y = b / g;
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  return {to_i64(x, "slope coordinate"), to_i64(y, "slope coordinate")};
}

Slope parse_slope(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 5 || t.front() != '(' || t.back() != ')') throw ParseError("bad slope \"" + std::string(text) + "\"");
  auto comma = t.find(',');
  if (comma == std::string::npos) throw ParseError("bad slope \"" + std::string(text) + "\"");
  try {
    mpz_class a(t.substr(1, comma - 1)), b(t.substr(comma + 1, t.size() - comma - 2));
    return normalize(a, b);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad slope \"" + std::string(text) + "\"");
  }
}

std::int64_t intersection(const Slope& s1, const Slope& s2) {
  mpz_class v = mpz_class(static_cast<long>(s1.a)) * s2.b - mpz_class(static_cast<long>(s1.b)) * s2.a;
  return to_i64(abs(v), "intersection number");
}

std::int64_t twist(const GenWord& u, const GenWord& v) {
  GenWord eu = expand_subgroup_word(u), ev = expand_subgroup_word(v);
  if (!(mat_of_word(eu) == mat_of_word(ev)))
    throw MatrixMismatch("twist of words with different matrices: \"" + u.to_string() + "\" vs \"" +
                         v.to_string() + "\"");
  std::int64_t d = total_expsum(eu) - total_expsum(ev);
  if (d % 12 != 0)
    throw NonIntegralTwist("exponent difference " + std::to_string(d) + " is not divisible by 12");
  return d / 12;
}

Slope frame_transform(const Slope& s, std::int64_t t) {
  mpz_class a = static_cast<long>(s.a);
  return normalize(a, mpz_class(static_cast<long>(s.b)) - a * static_cast<long>(t));
}

BetaSet beta_slopes(const GenWord& f, std::int64_t m, const GenWord& W3, const GenWord& W4,
                    const AlexResult& delta3) {
  BetaSet r;
  r.m = m;
  GenWord fm = f.pow(m);
  r.n3 = expsum(W3, Letter::A);
  r.n4 = expsum(W4, Letter::A);
  r.t3 = twist(fm, W3);
  r.t4 = twist(fm, W4);
  const PQCoef& lead = delta3.leading.coef;
  mpz_class n1 = lead.coeff(1, 0), n2 = lead.coeff(0, 1);
  r.beta31 = frame_transform(normalize(3, r.n3), r.t3);
  r.beta32 = frame_transform(normalize(-n2, n1), r.t3);
  r.beta41 = frame_transform(normalize(2, r.n4), r.t4);
  r.beta42 = frame_transform(Slope{1, 0}, r.t4);
  return r;
}

bool vh_success(const BetaSet& b) {
  for (const Slope& x : {b.beta31, b.beta32})
    for (const Slope& y : {b.beta41, b.beta42})
      if (x == y) return false;
  return true;
}

}  // namespace vh
