#include "vh/word.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "vh/errors.hpp"

namespace vh {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("word exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("word exponent overflow");
  return r;
}

bool is_subgroup_letter(Letter l) { return l == Letter::A || l == Letter::B; }

// Free reduction with a stack; merging may expose further cancellations.
std::vector<Syllable> reduce(std::vector<Syllable> in) {
  std::vector<Syllable> out;
  out.reserve(in.size());
  for (const Syllable& s : in) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().letter == s.letter) {
      std::int64_t e = checked_add(out.back().exp, s.exp);
      if (e == 0)
        out.pop_back();
      else
        out.back().exp = e;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Syllable> parse_all() {
    skip_ws();
    std::vector<Syllable> result;
    if (at_end()) return result;
    result = parse_word();
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return result;
  }

  bool saw_lower() const { return saw_lower_; }
  bool saw_upper() const { return saw_upper_; }

 private:
  std::vector<Syllable> parse_word() {
    std::vector<Syllable> out = parse_term();
    for (;;) {
      skip_ws();
      if (at_end() || peek() == ')') break;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      std::vector<Syllable> t = parse_term();
      out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }

  std::vector<Syllable> parse_term() {
    skip_ws();
    if (at_end()) fail("expected a letter or '('");
    std::vector<Syllable> base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == ')') fail("empty parentheses");
      base = parse_word();
      skip_ws();
      if (at_end() || peek() != ')') fail("missing ')'");
      ++pos_;
    } else {
      Letter l;
      switch (c) {
        case 'x': l = Letter::X; saw_lower_ = true; break;
        case 'y': l = Letter::Y; saw_lower_ = true; break;
        case 'A': l = Letter::A; saw_upper_ = true; break;
        case 'B': l = Letter::B; saw_upper_ = true; break;
        default: fail(std::string("unknown letter '") + c + "'");
      }
      ++pos_;
      base.push_back({l, 1});
    }
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::int64_t n = parse_int();
      return power(base, n);
    }
    return base;
  }

  std::vector<Syllable> power(const std::vector<Syllable>& base, std::int64_t n) {
    std::vector<Syllable> out;
    if (base.size() == 1) {
      out.push_back({base[0].letter, checked_mul(base[0].exp, n)});
      return out;
    }
    std::vector<Syllable> unit = base;
    if (n < 0) {
      unit.assign(base.rbegin(), base.rend());
      for (auto& s : unit) s.exp = -s.exp;
      n = -n;
    }
    if (n > 1'000'000) fail("exponent of a parenthesized word is too large");
    for (std::int64_t k = 0; k < n; ++k) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    if (!at_end() && peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("exponent out of range");
    if (v == 0) fail("exponent must be nonzero");
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("word parse error at offset " + std::to_string(pos_) + ": " + msg +
                     " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool saw_lower_ = false;
  bool saw_upper_ = false;
};

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::X: return 'x';
    case Letter::Y: return 'y';
    case Letter::A: return 'A';
    case Letter::B: return 'B';
  }
  return '?';
}

GenWord::GenWord(Alphabet a, int index, std::vector<Syllable> s)
    : alphabet_(a), index_(index), syllables_(reduce(std::move(s))) {}

GenWord GenWord::monodromy(std::vector<Syllable> syllables) {
  for (const auto& s : syllables)
    if (is_subgroup_letter(s.letter)) throw Error("monodromy word contains a subgroup letter");
  return GenWord(Alphabet::Monodromy, 0, std::move(syllables));
}

GenWord GenWord::subgroup(int index, std::vector<Syllable> syllables) {
  if (index != 3 && index != 4) throw Error("subgroup index must be 3 or 4");
  for (const auto& s : syllables)
    if (!is_subgroup_letter(s.letter)) throw Error("subgroup word contains a monodromy letter");
  return GenWord(Alphabet::Subgroup, index, std::move(syllables));
}

std::int64_t GenWord::letter_count() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n = checked_add(n, s.exp < 0 ? -s.exp : s.exp);
  return n;
}

GenWord GenWord::operator*(const GenWord& rhs) const {
  if (alphabet_ != rhs.alphabet_ || index_ != rhs.index_)
    throw Error("cannot concatenate words over different alphabets");
  std::vector<Syllable> s = syllables_;
  s.insert(s.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return GenWord(alphabet_, index_, std::move(s));
}

GenWord GenWord::inverse() const {
  std::vector<Syllable> s(syllables_.rbegin(), syllables_.rend());
  for (auto& x : s) x.exp = -x.exp;
  return GenWord(alphabet_, index_, std::move(s));
}

GenWord GenWord::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  std::vector<Syllable> s;
  s.reserve(syllables_.size() * static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) s.insert(s.end(), syllables_.begin(), syllables_.end());
  return GenWord(alphabet_, index_, std::move(s));
}

std::string GenWord::to_string() const {
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += letter_char(s.letter);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

GenWord parse_word(std::string_view text, std::optional<int> subgroup_index) {
  Parser p(text);
  std::vector<Syllable> s = p.parse_all();
  if (p.saw_lower() && p.saw_upper())
    throw ParseError("word mixes monodromy (x, y) and subgroup (A, B) letters: \"" +
                     std::string(text) + "\"");
  if (p.saw_upper() || (!p.saw_lower() && subgroup_index)) {
    if (!subgroup_index)
      throw ParseError("subgroup word needs a subgroup index (3 or 4): \"" + std::string(text) + "\"");
    if (*subgroup_index != 3 && *subgroup_index != 4)
      throw ParseError("subgroup index must be 3 or 4");
    return GenWord::subgroup(*subgroup_index, std::move(s));
  }
  return GenWord::monodromy(std::move(s));
}

std::int64_t expsum(const GenWord& w, Letter letter) {
  std::int64_t n = 0;
  for (const auto& s : w.syllables())
    if (s.letter == letter) n = checked_add(n, s.exp);
  return n;
}

std::int64_t total_expsum(const GenWord& w, bool weighted) {
  std::int64_t n = 0;
  for (const auto& s : w.syllables()) {
    std::int64_t e = s.exp;
    if (weighted && s.letter == Letter::B) e = checked_mul(e, w.subgroup_index());
    n = checked_add(n, e);
  }
  return n;
}

GenWord expand_subgroup_word(const GenWord& w) {
  if (w.alphabet() == Alphabet::Monodromy) return w;
  std::vector<Syllable> s;
  s.reserve(w.syllables().size());
  for (const auto& syl : w.syllables()) {
    if (syl.letter == Letter::A)
      s.push_back({Letter::X, syl.exp});
    else
      s.push_back({Letter::Y, checked_mul(syl.exp, w.subgroup_index())});
  }
  return GenWord::monodromy(std::move(s));
}

}  // namespace vh
