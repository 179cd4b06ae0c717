#ifndef VH_COMPLEXITY_HPP
#define VH_COMPLEXITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vh/errors.hpp"
#include "vh/word.hpp"

namespace vh {

/// A cyclic class of positive words in x^-1 and y, stored letter by letter
/// (false = x^-1, true = y) as its least rotation. Always primitive.
class ComplexityClass {
 public:
  /// Takes letters already in canonical form; use canonicalize_class otherwise.
  static ComplexityClass from_canonical(std::vector<bool> letters);

  const std::vector<bool>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  /// Run-length monodromy word, e.g. "x^-2 y".
  GenWord word() const;
  /// Unit-exponent form, e.g. "x^-1 x^-1 y".
  std::string to_string() const;

  bool operator==(const ComplexityClass&) const = default;
  /// Length first, then lexicographic with x^-1 < y.
  bool operator<(const ComplexityClass& o) const;

 private:
  std::vector<bool> letters_;
};

class ProperPower : public Error {
 public:
  ProperPower(const std::string& what, GenWord root, std::int64_t exponent)
      : Error(what), root_(std::move(root)), exponent_(exponent) {}
  const GenWord& root() const { return root_; }
  std::int64_t exponent() const { return exponent_; }

 private:
  GenWord root_;
  std::int64_t exponent_;
};

/// Least cyclic rotation of a positive word. Throws NotPositiveWord for an
/// empty word or any x with positive / y with negative exponent, and
/// ProperPower when the word is a power of a shorter word.
ComplexityClass canonicalize_class(const GenWord& w);

/// Index of the least rotation (Booth's algorithm).
std::size_t least_rotation(const std::vector<bool>& s);

/// All Lyndon words over {x^-1 < y} with min_len <= length <= max_len,
/// ordered by length then lexicographically.
std::vector<ComplexityClass> lyndon_words(std::size_t min_len, std::size_t max_len);

/// Number of binary Lyndon words of length n: (1/n) sum_{d|n} mu(d) 2^(n/d).
std::uint64_t lyndon_count(unsigned n);

}  // namespace vh

#endif  // VH_COMPLEXITY_HPP
