#include "vh/complexity.hpp"

#include <algorithm>

namespace vh {

ComplexityClass ComplexityClass::from_canonical(std::vector<bool> letters) {
  ComplexityClass c;
  c.letters_ = std::move(letters);
  return c;
}

GenWord ComplexityClass::word() const {
  std::vector<Syllable> s;
  for (bool y : letters_) s.push_back(y ? Syllable{Letter::Y, 1} : Syllable{Letter::X, -1});
  return GenWord::monodromy(std::move(s));
}

std::string ComplexityClass::to_string() const {
  std::string out;
  for (bool y : letters_) {
    if (!out.empty()) out += ' ';
    out += y ? "y" : "x^-1";
  }
  return out;
}

bool ComplexityClass::operator<(const ComplexityClass& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  return letters_ < o.letters_;
}

std::size_t least_rotation(const std::vector<bool>& s) {
  // Booth's failure-function algorithm on the doubled string.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    bool sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

ComplexityClass canonicalize_class(const GenWord& w) {
  if (w.alphabet() != Alphabet::Monodromy || w.empty())
    throw NotPositiveWord("expected a nonempty positive word in x^-1 and y");
  std::vector<bool> letters;
  for (const auto& s : w.syllables()) {
    bool ok = (s.letter == Letter::X && s.exp < 0) || (s.letter == Letter::Y && s.exp > 0);
    if (!ok) throw NotPositiveWord("word \"" + w.to_string() + "\" is not positive in x^-1 and y");
    std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
    if (n > 1'000'000) throw NotPositiveWord("word too long to canonicalize");
    letters.insert(letters.end(), static_cast<std::size_t>(n), s.letter == Letter::Y);
  }
  const std::size_t n = letters.size();
  // smallest period dividing n
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t j = d; j < n && periodic; ++j) periodic = letters[j] == letters[j - d];
    if (periodic) {
      std::vector<bool> root(letters.begin(), letters.begin() + d);
      std::rotate(root.begin(), root.begin() + least_rotation(root), root.end());
      GenWord r = ComplexityClass::from_canonical(root).word();
      throw ProperPower("word \"" + w.to_string() + "\" is the " + std::to_string(n / d) +
                            "th power of \"" + r.to_string() + "\"",
                        r, static_cast<std::int64_t>(n / d));
    }
  }
  std::rotate(letters.begin(), letters.begin() + least_rotation(letters), letters.end());
  return ComplexityClass::from_canonical(std::move(letters));
}

std::vector<ComplexityClass> lyndon_words(std::size_t min_len, std::size_t max_len) {
  std::vector<ComplexityClass> out;
  if (max_len == 0) return out;
  // Duval's generation in lexicographic order; bucket by length after.
  std::vector<std::vector<ComplexityClass>> by_len(max_len + 1);
  std::vector<int> w{-1};
  while (!w.empty()) {
    w.back() += 1;
    std::size_t len = w.size();
    if (len >= min_len) {
      std::vector<bool> letters(w.begin(), w.end());
      by_len[len].push_back(ComplexityClass::from_canonical(std::move(letters)));
    }
    std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
  for (std::size_t l = min_len; l <= max_len; ++l)
    out.insert(out.end(), by_len[l].begin(), by_len[l].end());
  return out;
}

std::uint64_t lyndon_count(unsigned n) {
  if (n == 0) return 0;
  auto mobius = [](unsigned d) {
    int mu = 1;
    for (unsigned p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      mu = -mu;
    }
    if (d > 1) mu = -mu;
    return mu;
  };
  std::int64_t sum = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) sum += mobius(d) * (std::int64_t{1} << (n / d));
  return static_cast<std::uint64_t>(sum / n);
}

}  // namespace vh
