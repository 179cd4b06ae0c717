#ifndef VH_WORD_HPP
#define VH_WORD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vh {

/// Twist generators. x, y are the Dehn twists D_x, D_y; A, B are the
/// generators of the subgroup <D_x, D_y^i>, with B standing for y^i.
enum class Letter : std::uint8_t { X, Y, A, B };

enum class Alphabet : std::uint8_t { Monodromy, Subgroup };

char letter_char(Letter l);

struct Syllable {
  Letter letter;
  std::int64_t exp;

  bool operator==(const Syllable&) const = default;
};

/// A word in run-length form. Stored freely reduced: adjacent syllables
/// carry different letters and no exponent is zero.
class GenWord {
 public:
  /// The empty monodromy word.
  GenWord() = default;

  static GenWord monodromy(std::vector<Syllable> syllables);
  /// `index` is 3 or 4 and records that B abbreviates y^index.
  static GenWord subgroup(int index, std::vector<Syllable> syllables);

  Alphabet alphabet() const { return alphabet_; }
  /// 3 or 4 for subgroup words, 0 for monodromy words.
  int subgroup_index() const { return index_; }

  std::span<const Syllable> syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Number of letters counted with multiplicity (sum of |exponent|).
  std::int64_t letter_count() const;

  GenWord operator*(const GenWord& rhs) const;
  GenWord inverse() const;
  /// n-fold product; negative n gives powers of the inverse.
  GenWord pow(std::int64_t n) const;

  /// Single-space serialization that parse_word reads back.
  std::string to_string() const;

  bool operator==(const GenWord&) const = default;

 private:
  GenWord(Alphabet a, int index, std::vector<Syllable> s);

  Alphabet alphabet_ = Alphabet::Monodromy;
  int index_ = 0;
  std::vector<Syllable> syllables_;
};

/// Parses the word grammar
///
///   word := term { ("*" | whitespace) term }
///   term := base [ "^" int ]
///   base := "x" | "y" | "A" | "B" | "(" word ")"
///
/// Lowercase letters give a monodromy word, uppercase a subgroup word;
/// mixing the two is an error. A subgroup word needs `subgroup_index`
/// (3 or 4). Empty text yields the identity word, in the subgroup alphabet
/// when an index is supplied.
GenWord parse_word(std::string_view text, std::optional<int> subgroup_index = std::nullopt);

/// Exponent sum of one letter.
std::int64_t expsum(const GenWord& w, Letter letter);

/// Sum of all exponents. With `weighted`, subgroup letters B count with
/// weight i (B = y^i); otherwise every letter has weight 1.
std::int64_t total_expsum(const GenWord& w, bool weighted = false);

/// Rewrites A -> x, B -> y^i. Monodromy words are returned unchanged.
GenWord expand_subgroup_word(const GenWord& w);

}  // namespace vh

#endif  // VH_WORD_HPP
