// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expected values are frozen here, independent of the
// fixtures compiled into the library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vh/census.hpp"
#include "vh/errors.hpp"
#include "vh/laurent.hpp"
#include "vh/poly_matrix.hpp"
#include "vh/reference.hpp"
#include "vh/rewrite.hpp"

using namespace vh;

namespace {

constexpr double kIndexSeconds = 1.0;
constexpr double kCensusSeconds = 60.0;
constexpr unsigned kCensusJobs = 4;
constexpr std::size_t kMaxFailures = 36;
constexpr int kRandomWords = 10000;
constexpr int kRandomCase4 = 200;

const char* const kFigureEight = "x^-1 y";
const char* const kW3 = "(A^-1 B A B A^-1 B A B)^3";
const char* const kW3Period = "A^-1 B A B A^-1 B A B";
const char* const kW4 = "(A^-2 B^-1 A^-1 B^-1 A^-1)^4";
const char* const kDelta3 =
    "q*s^4 + 3*q*s^3 + 2*q*s^2 + 2*q*s - q + q*s^-1 - 2*q*s^-2 - 2*q*s^-3 - 3*q*s^-4 - q*s^-5";

const std::vector<TableRow> kTable = {
    {"x^-1 y", 12, -3, {1, 3}, {1, 3}, 4, {1, -12}, {1, -4}, true},
    {"x^-2 y", 12, 2, {1, -6}, {1, -2}, 3, {1, -15}, {1, -3}, true},
    {"x^-1 y^2", 12, -2, {1, 6}, {1, 2}, -3, {1, 3}, {1, 3}, true},
    {"x^-3 y", 6, 2, {1, -6}, {1, -2}, 1, {1, -5}, {1, -1}, true},
    {"x^-2 y^2", 4, -1, {1, 1}, {1, 1}, -2, {1, 2}, {1, 2}, true},
    {"x^-1 y^3", 6, 0, {1, -2}, {1, 0}, -1, {1, 5}, {1, 1}, true},
    {"x^-4 y", 4, 1, {1, -5}, {1, -1}, -2, {1, 2}, {1, 2}, true},
    {"x^-3 y^2", 12, 0, {1, -4}, {1, 0}, -9, {1, 9}, {1, 9}, true},
    {"x^-2 y^3", 4, 0, {3, -8}, {1, 0}, -1, {1, 1}, {1, 1}, true},
    {"x^-1 y^4", 4, 1, {1, -3}, {1, -3}, 0, {1, -2}, {1, 0}, true},
    {"x^-2 y x^-1 y", 4, 0, {3, -10}, {1, -1}, 0, {1, 0}, {1, 0}, true},
    {"x^-1 y x^-1 y^2", 12, -6, {1, 10}, {1, 6}, 0, {1, 0}, {1, 0}, true},
};

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(int n, bool pass, const std::string& title, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << n << "] " << title << ": " << detail << std::endl;
}

void diag(const std::string& text) { std::cout << "     " << text << std::endl; }

void guarded(int n, const std::string& title, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line(n, false, title, std::string("exception: ") + e.what());
  }
}

GenWord random_word(std::mt19937_64& rng, bool subgroup, int index, int max_syllables, int max_exp) {
  std::uniform_int_distribution<int> len(0, max_syllables), ex(-max_exp, max_exp);
  std::vector<Syllable> s;
  int k = len(rng);
  for (int j = 0; j < k; ++j) {
    int e = ex(rng);
    if (e == 0) e = 1;
    Letter l = subgroup ? (j % 2 ? Letter::B : Letter::A) : (j % 2 ? Letter::Y : Letter::X);
    s.push_back({l, e});
  }
  return subgroup ? GenWord::subgroup(index, s) : GenWord::monodromy(s);
}

// Leibniz sum over all permutations.
LaurentPoly det_oracle(const PolyMat& m) {
  std::vector<std::size_t> perm(m.rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  LaurentPoly sum;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    LaurentPoly t(inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) t = t * m(i, perm[i]);
    sum = sum + t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::string slope_or_none(const std::optional<Slope>& s) { return s ? s->to_string() : "none"; }

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  PipelineContext ctx = PipelineContext::build();

  guarded(1, "subgroup indices", [&] {
    auto t = std::chrono::steady_clock::now();
    std::size_t i3 = build_coset_table(3).size(), i4 = build_coset_table(4).size();
    double dt = seconds_since(t);
    std::ostringstream os;
    os << "index(H3) = " << i3 << " (want 8), index(H4) = " << i4 << " (want 12), " << dt << " s (< "
       << kIndexSeconds << " s)";
    line(1, i3 == 8 && i4 == 12 && dt < kIndexSeconds, "subgroup indices", os.str());
  });

  guarded(2, "figure-eight record", [&] {
    Overrides ov{parse_word(kW3, 3), parse_word(kW4, 4)};
    CensusRecord r = run_pipeline(ctx, parse_word(kFigureEight), ov);
    bool ok = r.m == 12 && r.n3 == 0 && r.n4 == -16 && r.t3 == -3 && r.t4 == 4 && r.beta31 == Slope{1, 3} &&
              r.beta32 == Slope{1, 3} && r.beta41 == Slope{1, -12} && r.beta42 == Slope{1, -4} && r.success;
    std::ostringstream os;
    os << "m=" << r.m << " n3=" << r.n3 << " n4=" << r.n4 << " t3=" << r.t3 << " t4=" << r.t4
       << " beta3=" << r.beta31.to_string() << "," << slope_or_none(r.beta32) << " beta4=" << r.beta41.to_string()
       << "," << r.beta42.to_string() << " success=" << (r.success ? "true" : "false");
    line(2, ok, "figure-eight record", os.str());
  });

  guarded(3, "case-3 Alexander fixture", [&] {
    LaurentPoly expected = parse_laurent(kDelta3);
    AlexResult a = alexander_poly(ctx.alex3, parse_word(kW3, 3));
    bool ok = equal_up_to_unit(a.delta, expected);
    line(3, ok, "case-3 Alexander fixture",
         ok ? "delta3(W3) equals the reference polynomial up to +-s^k"
            : "delta3(W3) = " + a.delta.to_string());
    AlexResult p = alexander_poly(ctx.alex3, parse_word(kW3Period, 3));
    diag(std::string("diagnostic: delta3 of the period ") + kW3Period +
         (equal_up_to_unit(p.delta, expected) ? " equals" : " differs from") + " the reference polynomial");
    diag("diagnostic: leading coefficient for W3 is " + a.leading.coef.to_string() + ", for the period " +
         p.leading.coef.to_string());
  });

  guarded(4, "case-4 q-divisibility", [&] {
    AlexResult a = alexander_poly(ctx.alex4, parse_word(kW4, 4));
    bool fixture = a.q_divisible && !a.untransposed_fallback;
    std::mt19937_64 rng(4004);
    int bad = 0, tried = 0;
    while (tried < kRandomCase4) {
      GenWord w = random_word(rng, true, 4, 8, 3);
      try {
        AlexResult r = alexander_poly(ctx.alex4, w);
        ++tried;
        if (!r.q_divisible || r.untransposed_fallback) ++bad;
      } catch (const ZeroPolynomial&) {
        // degenerate words carry no structure to check
      } catch (const StructuralAssertionFailed&) {
        ++tried;
        ++bad;
      }
    }
    std::ostringstream os;
    os << "fixture " << (fixture ? "q-divisible" : "NOT q-divisible") << ", random words " << tried - bad << "/"
       << tried << " q-divisible";
    line(4, fixture && bad == 0, "case-4 q-divisibility", os.str());
  });

  CensusResult c12;
  double c12_seconds = 0;
  guarded(5, "census counts", [&] {
    std::size_t n5 = enumerate_classes(5).size(), n12 = enumerate_classes(12).size();
    auto t = std::chrono::steady_clock::now();
    c12 = census(ctx, 12, kCensusJobs);
    c12_seconds = seconds_since(t);
    std::ostringstream os;
    os << "classes(5) = " << n5 << " (want 12), classes(12) = " << n12 << " (want 745), census(12) with "
       << kCensusJobs << " workers took " << c12_seconds << " s (< " << kCensusSeconds << " s)";
    line(5, n5 == 12 && n12 == 745 && c12.records.size() == 745 && c12_seconds < kCensusSeconds,
         "census counts", os.str());
  });

  guarded(6, "complexity <= 5 table", [&] {
    CensusResult c5 = census(ctx, 5, 1);
    DiffReport d = compare_to_reference(ctx, c5.records, kTable);
    std::ostringstream os;
    os << d.hard_mismatches << " hard mismatch(es), " << d.soft_mismatches << " soft mismatch(es), "
       << d.uncertified << " uncertified";
    line(6, d.hard_mismatches == 0 && d.uncertified == 0, "complexity <= 5 table", os.str());
    std::istringstream text(d.to_text());
    for (std::string l; std::getline(text, l);) diag(l);
    // Hard columns after aligning t3 with the table by relator insertion.
    std::size_t aligned_ok = 0;
    for (const auto& row : kTable) {
      CensusRecord r = run_pipeline(ctx, parse_word(row.word));
      std::int64_t k = r.t3 - row.t3;
      GenWord ins = parse_word("(A B)^3", 3).pow(k);
      Overrides ov;
      ov.w3 = parse_word(r.W3, 3) * ins;
      CensusRecord a = run_pipeline(ctx, parse_word(row.word), ov);
      if (a.m == row.m && a.beta31 == row.beta31 && a.beta32 == row.beta32 && a.beta41 == row.beta41 &&
          a.beta42 == row.beta42 && a.success == row.success)
        ++aligned_ok;
    }
    diag("diagnostic: with W3 aligned to the table twist, " + std::to_string(aligned_ok) + "/12 rows match in all slope columns");
  });

  guarded(7, "exception bound", [&] {
    if (c12.records.empty()) c12 = census(ctx, 12, kCensusJobs);
    std::size_t nfail = c12.summary.failures.size();
    CensusRecord r = run_pipeline(ctx, parse_word("x^-3 y^3"));
    bool smallest = !r.success && r.beta31 == Slope{1, -3} && r.beta41 == Slope{1, -3};
    std::ostringstream os;
    os << "census(12) failures = " << nfail << " (want <= " << kMaxFailures << "), x^-3 y^3 "
       << (r.success ? "succeeds" : "fails") << " with beta31=" << r.beta31.to_string()
       << " beta41=" << r.beta41.to_string();
    line(7, nfail <= kMaxFailures && smallest, "exception bound", os.str());
    if (!c12.summary.failures.empty()) diag("first failure: " + c12.summary.failures.front());
  });

  guarded(8, "two-parameter family", [&] {
    bool ok = true;
    std::ostringstream os;
    for (int n : {1, 2}) {
      std::string w = "(x^-1 y)^12 y^" + std::to_string(12 * n);
      CensusRecord r = run_pipeline(ctx, parse_word(w));
      bool good = r.beta31 == Slope{1, 3} && r.beta32 == Slope{1, 3} && r.beta41 == Slope{1, -12} &&
                  r.beta42 == Slope{1, -4} && r.success;
      ok = ok && good;
      os << (n == 1 ? "" : "; ") << w << ": beta3=" << r.beta31.to_string() << "," << slope_or_none(r.beta32)
         << " beta4=" << r.beta41.to_string() << "," << r.beta42.to_string()
         << " success=" << (r.success ? "true" : "false");
    }
    line(8, ok, "two-parameter family", os.str());
    for (int n : {1, 2}) {
      std::string w = "(x^-1 y)^12 y^" + std::to_string(12 * n);
      Overrides ov{parse_word(std::string(kW3) + " B^" + std::to_string(4 * n), 3),
                   parse_word(std::string(kW4) + " B^" + std::to_string(3 * n), 4)};
      CensusRecord r = run_pipeline(ctx, parse_word(w), ov);
      diag("diagnostic: with figure-eight words extended by B powers, " + w + " gives beta3=" +
           r.beta31.to_string() + "," + slope_or_none(r.beta32) + " beta4=" + r.beta41.to_string() + "," +
           r.beta42.to_string());
    }
  });

  guarded(9, "property suites", [&] {
    std::mt19937_64 rng(9009);
    int membership_bad = 0, cert_bad = 0, twist_bad = 0, frame_bad = 0, det_bad = 0, beta_bad = 0;
    CosetTable t3 = ctx.table3, t4 = ctx.table4;
    for (int k = 0; k < kRandomWords; ++k) {
      GenWord w = random_word(rng, false, 0, 10, 5);
      for (int i : {3, 4}) {
        const CosetTable& t = i == 3 ? t3 : t4;
        bool coset = coset_action(t, w)[0] == 0;
        RewriteResult r = euclid_rewrite(mat_of_word(w), i);
        if (r.member != coset) ++membership_bad;
        if (r.member && (!r.word || !(mat_of_word(expand_subgroup_word(*r.word)) == mat_of_word(w)))) ++cert_bad;
      }
    }
    for (int k = 0; k < 500; ++k) {
      GenWord f = random_word(rng, false, 0, 6, 3);
      for (int i : {3, 4}) {
        const CosetTable& t = i == 3 ? t3 : t4;
        PowerRewrite p = rewrite_power(t, f);
        if (!(mat_of_word(expand_subgroup_word(p.word)) == mat_of_word(f.pow(p.m)))) ++cert_bad;
        try {
          twist(f.pow(p.m), p.word);
          if (i == 3) {
            // (AB)^3 is the identity for i = 3; splice it in at a random syllable boundary.
            auto syl = p.word.syllables();
            std::size_t at = rng() % (syl.size() + 1);
            GenWord pre = GenWord::subgroup(3, {syl.begin(), syl.begin() + at});
            GenWord post = GenWord::subgroup(3, {syl.begin() + at, syl.end()});
            GenWord ins = pre * parse_word("(A B)^3", 3).pow(rng() % 2 ? 1 : -1) * post;
            twist(f.pow(p.m), ins);
          }
        } catch (const NonIntegralTwist&) {
          ++twist_bad;
        }
      }
    }
    std::uniform_int_distribution<int> sd(-30, 30), td(-20, 20);
    for (int k = 0; k < 2000; ++k) {
      int a1 = sd(rng), b1 = sd(rng), a2 = sd(rng), b2 = sd(rng);
      if ((a1 == 0 && b1 == 0) || (a2 == 0 && b2 == 0)) continue;
      Slope s1 = normalize(a1, b1), s2 = normalize(a2, b2);
      std::int64_t t = td(rng);
      if (intersection(frame_transform(s1, t), frame_transform(s2, t)) != intersection(s1, s2)) ++frame_bad;
    }
    std::uniform_int_distribution<int> nterms(0, 3), sdeg(-3, 3), pq(0, 2), cf(-4, 4);
    for (int k = 0; k < 100; ++k) {
      PolyMat m(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          std::vector<LaurentPoly::Term> ts;
          int n = nterms(rng);
          for (int e = 0; e < n; ++e)
            ts.push_back({sdeg(rng), static_cast<std::uint32_t>(pq(rng)), static_cast<std::uint32_t>(pq(rng)), cf(rng)});
          m(i, j) = LaurentPoly::from_terms(std::move(ts));
        }
      if (!(det(m) == det_oracle(m))) ++det_bad;
    }
    int beta_checked = 0;
    for (const auto& c : enumerate_classes(5)) {
      CensusRecord r = run_pipeline(ctx, c);
      for (int k : {-1, 1, 2}) {
        Overrides ov;
        ov.w3 = parse_word(r.W3, 3) * parse_word("(A B)^3", 3).pow(k);
        CensusRecord a = run_pipeline(ctx, c, ov);
        ++beta_checked;
        if (!(a.beta31 == r.beta31)) ++beta_bad;
      }
    }
    std::ostringstream os;
    os << "membership " << membership_bad << ", certificates " << cert_bad << ", twist integrality " << twist_bad
       << ", frame intersection " << frame_bad << ", det oracle " << det_bad << ", beta31 under (AB)^3 insertion "
       << beta_bad << "/" << beta_checked << " failures";
    line(9, membership_bad + cert_bad + twist_bad + frame_bad + det_bad + beta_bad == 0, "property suites",
         os.str());
  });

  std::cout << (failures ? "FAILED " : "OK ") << failures << " of 9 criteria failing, " << seconds_since(t0)
            << " s total" << std::endl;
  return failures ? 1 : 0;
}
