#include "vh/rewrite.hpp"

#include "vh/errors.hpp"

namespace vh {

namespace {

mpz_class mod(const mpz_class& a, int i) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(i));
  return r;
}

// Integer e minimizing |num - e*den|, den != 0; ties go to the smaller
// |e|, then to the positive one.
mpz_class best_quotient(const mpz_class& num, const mpz_class& den) {
  mpz_class lo;
  mpz_fdiv_q(lo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_class hi = lo + 1;
  mpz_class rlo = abs(num - lo * den), rhi = abs(num - hi * den);
  if (rlo != rhi) return rlo < rhi ? lo : hi;
  if (abs(lo) != abs(hi)) return abs(lo) < abs(hi) ? lo : hi;
  return lo > 0 ? lo : hi;
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("rewrite exponent exceeds 64 bits");
  return z.get_si();
}

}  // namespace

bool mod_normal_form(const IntMat2& g, int i) {
  return mod(g(0, 0), i) == 1 % i && mod(g(1, 0), i) == 0 && mod(g(1, 1), i) == 1 % i;
}

RewriteResult euclid_rewrite(const IntMat2& g, int i) {
  if (i != 3 && i != 4) throw Error("subgroup index must be 3 or 4");
  mpz_class h11 = g(0, 0), h12 = g(0, 1), h21 = g(1, 0), h22 = g(1, 1);
  std::vector<Syllable> stack;
  for (;;) {
    if (h21 != 0) {
      mpz_class x = best_quotient(h11, h21);
      if (abs(h11 - x * h21) < abs(h11)) {
        h11 -= x * h21;
        h12 -= x * h22;
        stack.push_back({Letter::A, to_i64(x)});
        continue;
      }
    }
    if (h11 != 0) {
      mpz_class ic = i * h11;
      mpz_class neg = -h21;
      mpz_class y = best_quotient(neg, ic);
      if (abs(h21 + y * ic) < abs(h21)) {
        h21 += y * ic;
        h22 += y * i * h12;
        stack.push_back({Letter::B, to_i64(y)});
        continue;
      }
    }
    break;
  }
  RewriteResult r;
  if (h11 == 1 && h21 == 0) {
    // h = [[1,h12],[0,1]] = a^(-h12)
    std::vector<Syllable> w;
    w.reserve(stack.size() + 1);
    for (const auto& s : stack) w.push_back({s.letter, -s.exp});
    w.push_back({Letter::A, to_i64(-h12)});
    r.member = true;
    r.word = GenWord::subgroup(i, std::move(w));
    return r;
  }
  if (mod_normal_form(g, i))
    throw IncompleteClassification("reduction of " + g.to_string() + " stuck at [[" +
                                   h11.get_str() + "," + h12.get_str() + "],[" + h21.get_str() +
                                   "," + h22.get_str() + "]] with no mod-" + std::to_string(i) +
                                   " obstruction");
  r.member = false;
  r.obstruction = std::array<int, 4>{static_cast<int>(mod(g(0, 0), i).get_si()),
                                     static_cast<int>(mod(g(0, 1), i).get_si()),
                                     static_cast<int>(mod(g(1, 0), i).get_si()),
                                     static_cast<int>(mod(g(1, 1), i).get_si())};
  return r;
}

PowerRewrite rewrite_power(const CosetTable& t, const GenWord& f, const std::optional<GenWord>& injected,
                           std::optional<std::int64_t> power) {
  const int i = t.index();
  std::int64_t m = power ? *power : minimal_power(t, f);
  if (m <= 0) throw Error("power must be positive");
  IntMat2 fm = mat_of_word(f).pow(m);
  if (injected) {
    if (injected->alphabet() != Alphabet::Subgroup || injected->subgroup_index() != i)
      throw CertificateFailure("injected word is not over the subgroup alphabet for i = " +
                               std::to_string(i));
    if (!(mat_of_word(*injected) == fm))
      throw CertificateFailure("injected word \"" + injected->to_string() + "\" evaluates to " +
                               mat_of_word(*injected).to_string() + ", expected " + fm.to_string());
    return {m, *injected};
  }
  RewriteResult r = euclid_rewrite(fm, i);
  if (!r.member)
    throw CertificateFailure("f^" + std::to_string(m) + " is not in the subgroup for i = " +
                             std::to_string(i));
  if (!(mat_of_word(*r.word) == fm)) throw CertificateFailure("rewriter certificate does not evaluate back");
  return {m, *r.word};
}

}  // namespace vh
