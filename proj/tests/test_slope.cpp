#include <gtest/gtest.h>

#include <random>

#include "vh/alexander.hpp"
#include "vh/coset_table.hpp"
#include "vh/errors.hpp"
#include "vh/rewrite.hpp"
#include "vh/sl2.hpp"
#include "vh/slope.hpp"

using namespace vh;

namespace {

const char* const kW3 = "(A^-1 B A B A^-1 B A B)^3";
const char* const kW4 = "(A^-2 B^-1 A^-1 B^-1 A^-1)^4";

GenWord gen_word(const std::vector<Gen>& g) {
  std::vector<Syllable> s;
  for (Gen x : g) s.push_back({x < 2 ? Letter::X : Letter::Y, (x % 2) ? -1 : 1});
  return GenWord::monodromy(s);
}

GenWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
  std::vector<Syllable> s;
  int n = len(rng);
  for (int k = 0; k < n; ++k) {
    int l = letter(rng);
    s.push_back({l < 2 ? Letter::X : Letter::Y, (l % 2) ? 1 : -1});
  }
  return GenWord::monodromy(s);
}

}  // namespace

TEST(Slope, Normalize) {
  EXPECT_EQ(normalize(3, 9), (Slope{1, 3}));
  EXPECT_EQ(normalize(-1, 0), (Slope{1, 0}));
  EXPECT_EQ(normalize(0, -5), (Slope{0, 1}));
  EXPECT_EQ(normalize(-6, 4), (Slope{3, -2}));
  EXPECT_THROW(normalize(0, 0), ZeroVector);
}

TEST(Slope, TextForm) {
  EXPECT_EQ((Slope{1, -12}).to_string(), "(1,-12)");
  EXPECT_EQ(parse_slope(" (3, -8) "), (Slope{3, -8}));
  EXPECT_EQ(parse_slope("(-2,4)"), (Slope{1, -2}));
  EXPECT_THROW(parse_slope("(1;2)"), ParseError);
  EXPECT_THROW(parse_slope("(a,2)"), ParseError);
}

TEST(Slope, Intersection) {
  EXPECT_EQ(intersection({1, 3}, {1, -4}), 7);
  EXPECT_EQ(intersection({1, 0}, {0, 1}), 1);
  EXPECT_EQ(intersection({2, 3}, {2, 3}), 0);
}

TEST(Slope, TwistExamples) {
  GenWord f12 = parse_word("(x^-1 y)^12");
  EXPECT_EQ(twist(f12, parse_word(kW3, 3)), -3);
  EXPECT_EQ(twist(f12, parse_word(kW4, 4)), 4);
  EXPECT_EQ(twist(f12, f12), 0);
  EXPECT_THROW(twist(f12, parse_word("A", 3)), MatrixMismatch);
}

TEST(Slope, FrameTransformExamples) {
  EXPECT_EQ(frame_transform({1, 0}, -3), (Slope{1, 3}));
  for (int t = -5; t <= 5; ++t) EXPECT_EQ(frame_transform({0, 1}, t), (Slope{0, 1}));
  EXPECT_EQ(frame_transform({1, -8}, 4), (Slope{1, -12}));
}

TEST(Slope, FrameTransformIsBijectionPreservingIntersection) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-30, 30), tt(-10, 10);
  for (int k = 0; k < 5000; ++k) {
    int a1 = c(rng), b1 = c(rng), a2 = c(rng), b2 = c(rng);
    if ((a1 == 0 && b1 == 0) || (a2 == 0 && b2 == 0)) continue;
    Slope s1 = normalize(a1, b1), s2 = normalize(a2, b2);
    int t = tt(rng);
    Slope h1 = frame_transform(s1, t), h2 = frame_transform(s2, t);
    ASSERT_EQ(frame_transform(h1, -t), s1);
    ASSERT_EQ(intersection(h1, h2), intersection(s1, s2));
  }
}

// Inserting relators anywhere changes the exponent total by the relator's
// total, and the twist comes out as that total over 12.
TEST(Slope, TwistIntegralUnderRelatorInsertion) {
  std::mt19937_64 rng(23);
  const auto& rels = sl2_relators();
  std::uniform_int_distribution<int> pick(0, 3), count(1, 3), sign(0, 1);
  for (int k = 0; k < 2000; ++k) {
    GenWord u = random_word(rng, 30);
    std::vector<Syllable> syl(u.syllables().begin(), u.syllables().end());
    std::int64_t inserted = 0;
    int n = count(rng);
    GenWord v = u;
    for (int j = 0; j < n; ++j) {
      GenWord r = gen_word(rels[pick(rng)]);
      if (sign(rng)) r = r.inverse();
      std::vector<Syllable> vs(v.syllables().begin(), v.syllables().end());
      std::uniform_int_distribution<std::size_t> pos(0, vs.size());
      std::size_t at = pos(rng);
      GenWord pre = GenWord::monodromy({vs.begin(), vs.begin() + at});
      GenWord post = GenWord::monodromy({vs.begin() + at, vs.end()});
      v = pre * r * post;
      inserted += total_expsum(r);
    }
    ASSERT_EQ(inserted % 12, 0);
    ASSERT_EQ(twist(u, v), -inserted / 12);
    ASSERT_EQ(twist(v, u), inserted / 12);
  }
}

TEST(Slope, FigureEightBetas) {
  CosetTable t3 = build_coset_table(3), t4 = build_coset_table(4);
  AlexCase a3 = make_alex_case(3);
  GenWord f = parse_word("x^-1 y");
  GenWord w3 = parse_word(kW3, 3), w4 = parse_word(kW4, 4);
  BetaSet b = beta_slopes(f, 12, w3, w4, alexander_poly(a3, w3));
  EXPECT_EQ(b.n3, 0);
  EXPECT_EQ(b.n4, -16);
  EXPECT_EQ(b.t3, -3);
  EXPECT_EQ(b.t4, 4);
  EXPECT_EQ(b.beta31, (Slope{1, 3}));
  EXPECT_EQ(b.beta32, (Slope{1, 3}));
  EXPECT_EQ(b.beta41, (Slope{1, -12}));
  EXPECT_EQ(b.beta42, (Slope{1, -4}));
  EXPECT_TRUE(vh_success(b));
}

TEST(Slope, SuccessPredicate) {
  BetaSet b;
  b.beta31 = b.beta32 = b.beta41 = b.beta42 = Slope{1, 2};
  EXPECT_FALSE(vh_success(b));
  b.beta41 = b.beta42 = Slope{1, 3};
  EXPECT_TRUE(vh_success(b));
  b.beta32 = Slope{1, 3};
  EXPECT_FALSE(vh_success(b));
}

// Each (AB)^3 insertion into W3 adds 3 to n3 and subtracts 1 from t3, so
// n3 - 3 t3 moves by exactly 6 and the twisted first slope generally
// changes. Frozen on the figure-eight certificate.
TEST(Slope, AB3InsertionShiftsFirstSlopeNumerator) {
  GenWord f12 = parse_word("(x^-1 y)^12");
  GenWord w3 = parse_word(kW3, 3);
  GenWord ab3 = parse_word("(A B)^3", 3);
  std::int64_t n = expsum(w3, Letter::A), t = twist(f12, w3);
  for (int k = 1; k <= 3; ++k) {
    GenWord wk = w3 * ab3.pow(k);
    std::int64_t nk = expsum(wk, Letter::A), tk = twist(f12, wk);
    EXPECT_EQ(nk, n + 3 * k);
    EXPECT_EQ(tk, t - k);
    EXPECT_EQ((nk - 3 * tk) - (n - 3 * t), 6 * k);
  }
  EXPECT_EQ(frame_transform(normalize(3, n), t), (Slope{1, 3}));
  GenWord w1 = w3 * ab3;
  EXPECT_EQ(frame_transform(normalize(3, expsum(w1, Letter::A)), twist(f12, w1)), (Slope{1, 5}));
}
