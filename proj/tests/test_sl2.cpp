#include <gtest/gtest.h>

#include <array>
#include <map>
#include <random>

#include "vh/coset_table.hpp"
#include "vh/errors.hpp"
#include "vh/sl2.hpp"

using namespace vh;

namespace {

using M2 = std::array<long long, 4>;

M2 mul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

// Letter-by-letter product with machine integers; shares nothing with
// mat_of_word's syllable shortcut.
M2 oracle(const GenWord& w) {
  const M2 x{1, -1, 0, 1}, xi{1, 1, 0, 1}, y{1, 0, 1, 1}, yi{1, 0, -1, 1};
  M2 m{1, 0, 0, 1};
  for (const auto& s : w.syllables()) {
    const M2& g = s.letter == Letter::X ? (s.exp > 0 ? x : xi) : (s.exp > 0 ? y : yi);
    for (long k = 0; k < std::abs(s.exp); ++k) m = mul(m, g);
  }
  return m;
}

M2 to_m2(const IntMat2& m) { return {m(0, 0).get_si(), m(0, 1).get_si(), m(1, 0).get_si(), m(1, 1).get_si()}; }

GenWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
  std::vector<Syllable> s;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int l = letter(rng);
    s.push_back({l < 2 ? Letter::X : Letter::Y, (l % 2) ? 1 : -1});
  }
  return GenWord::monodromy(s);
}

GenWord gen_word(const std::vector<Gen>& g) {
  std::vector<Syllable> s;
  for (Gen x : g) s.push_back({x < 2 ? Letter::X : Letter::Y, (x % 2) ? -1 : 1});
  return GenWord::monodromy(s);
}

}  // namespace

TEST(Sl2, GeneratorMatrices) {
  EXPECT_EQ(mat_of_word(parse_word("x")), IntMat2(1, -1, 0, 1));
  EXPECT_EQ(mat_of_word(parse_word("y")), IntMat2(1, 0, 1, 1));
  EXPECT_EQ(mat_of_word(parse_word("")), IntMat2::identity());
}

TEST(Sl2, FigureEightMatrix) {
  IntMat2 m = mat_of_word(parse_word("x^-1 y"));
  EXPECT_EQ(m, IntMat2(2, 1, 1, 1));
  EXPECT_EQ(m.trace(), 3);
}

TEST(Sl2, RelatorsEvaluateToIdentity) {
  for (const auto& r : sl2_relators()) EXPECT_EQ(mat_of_word(gen_word(r)), IntMat2::identity());
  // (ab)^3 = (aba)^2 = -Id
  EXPECT_EQ(mat_of_word(parse_word("(x y)^3")), -IntMat2::identity());
  EXPECT_EQ(mat_of_word(parse_word("(x y x)^2")), -IntMat2::identity());
}

TEST(Sl2, DeterminantEnforced) {
  EXPECT_THROW(IntMat2(1, 1, 1, 1), DeterminantViolation);
  EXPECT_THROW(IntMat2(2, 0, 0, 2), DeterminantViolation);
  EXPECT_NO_THROW(IntMat2(0, -1, 1, 0));
}

TEST(Sl2, SubgroupWordsExpandB) {
  EXPECT_EQ(mat_of_word(parse_word("B", 4)), IntMat2(1, 0, 4, 1));
  EXPECT_EQ(mat_of_word(parse_word("A^2 B^-1", 3)), mat_of_word(parse_word("x^2 y^-3")));
}

TEST(Sl2, RandomWordsAgreeWithOracleAndKeepDeterminant) {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 10000; ++t) {
    GenWord w = random_word(rng, 40);
    IntMat2 m = mat_of_word(w);
    ASSERT_EQ(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0), 1);
    ASSERT_EQ(to_m2(m), oracle(w)) << w.to_string();
  }
}

TEST(Sl2, Homomorphism) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    GenWord u = random_word(rng, 20), v = random_word(rng, 20);
    ASSERT_EQ(mat_of_word(u * v), mat_of_word(u) * mat_of_word(v));
    ASSERT_EQ(mat_of_word(u.inverse()), mat_of_word(u).inverse());
  }
}

TEST(Sl2, PowAgreesWithRepeatedProduct) {
  IntMat2 m = mat_of_word(parse_word("x^-2 y^3 x"));
  IntMat2 acc;
  for (int k = 0; k < 24; ++k) {
    ASSERT_EQ(m.pow(k), acc);
    acc = acc * m;
  }
  EXPECT_EQ(m.pow(-3), m.inverse().pow(3));
}

TEST(Sl2, Hyperbolicity) {
  EXPECT_TRUE(is_hyperbolic(IntMat2(2, 1, 1, 1)));
  EXPECT_FALSE(is_hyperbolic(IntMat2::identity()));
  EXPECT_FALSE(is_hyperbolic(IntMat2(1, -1, 0, 1)));
  EXPECT_FALSE(is_hyperbolic(IntMat2(0, -1, 1, 0)));
  EXPECT_TRUE(is_hyperbolic(-IntMat2(2, 1, 1, 1)));
}

TEST(Sl2, LRFactorizationExamples) {
  auto f = lr_factorization(IntMat2(2, 1, 1, 1));
  EXPECT_EQ(f.sign, 1);
  EXPECT_EQ(f.word.to_string(), "x^-1 y");
  auto id = lr_factorization(IntMat2::identity());
  EXPECT_EQ(id.sign, 1);
  EXPECT_TRUE(id.word.empty());
  EXPECT_THROW(lr_factorization(IntMat2(0, -1, 1, 0)), NotLRFactorable);
  auto neg = lr_factorization(-IntMat2(2, 1, 1, 1));
  EXPECT_EQ(neg.sign, -1);
  EXPECT_EQ(neg.word.to_string(), "x^-1 y");
}

// Every positive word of length <= 8 is recovered exactly, so the
// factorization is unique and of minimal length.
TEST(Sl2, LRFactorizationBruteForce) {
  std::map<M2, std::string> seen;
  for (int n = 0; n <= 8; ++n) {
    for (int bits = 0; bits < (1 << n); ++bits) {
      std::vector<Syllable> s;
      for (int k = 0; k < n; ++k) s.push_back((bits >> k) & 1 ? Syllable{Letter::Y, 1} : Syllable{Letter::X, -1});
      GenWord w = GenWord::monodromy(s);
      M2 m = oracle(w);
      auto [it, fresh] = seen.emplace(m, w.to_string());
      ASSERT_TRUE(fresh) << "two positive words give the same matrix: " << it->second << " / " << w.to_string();
      IntMat2 im(static_cast<long>(m[0]), static_cast<long>(m[1]), static_cast<long>(m[2]), static_cast<long>(m[3]));
      auto f = lr_factorization(im);
      ASSERT_EQ(f.sign, 1);
      ASSERT_EQ(f.word, w);
      auto g = lr_factorization(-im);
      ASSERT_EQ(g.sign, -1);
      ASSERT_EQ(g.word, w);
    }
  }
}

TEST(Sl2, LRRejectsMixedSigns) {
  EXPECT_THROW(lr_factorization(mat_of_word(parse_word("x y"))), NotLRFactorable);
  EXPECT_THROW(lr_factorization(IntMat2(1, -1, 0, 1)), NotLRFactorable);
}
