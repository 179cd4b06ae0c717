#ifndef VH_COSET_TABLE_HPP
#define VH_COSET_TABLE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "vh/word.hpp"

namespace vh {

/// Columns of a coset table: a, a^-1, b, b^-1.
enum Gen : int { kA = 0, kAinv = 1, kB = 2, kBinv = 3 };

/// Right-coset action of SL2(Z) = <a, b | (ab)^6, (ab)^3 (aba)^-2,
/// [(ab)^3, a], [(ab)^3, b]> on the cosets of <a, b^i>.
/// Coset 0 is the subgroup itself.
class CosetTable {
 public:
  int index() const { return i_; }
  std::size_t size() const { return rows_.size(); }
  int operator()(std::size_t coset, Gen g) const { return rows_[coset][g]; }
  const std::vector<std::array<int, 4>>& rows() const { return rows_; }

 private:
  friend CosetTable build_coset_table(int i, std::size_t cap);
  int i_ = 0;
  std::vector<std::array<int, 4>> rows_;
};

/// Relators of the presentation as letter sequences over Gen.
const std::vector<std::vector<Gen>>& sl2_relators();

/// HLT coset enumeration with coincidence processing. Throws
/// EnumerationOverflow when more than `cap` cosets get defined.
CosetTable build_coset_table(int i, std::size_t cap = 10000);

using Permutation = std::vector<int>;

/// Action of a monodromy word (x -> a, y -> b), applied letter by letter
/// on the right.
Permutation coset_action(const CosetTable& t, const GenWord& w);

/// Length of the cycle through coset 0 under coset_action(t, f).
std::int64_t minimal_power(const CosetTable& t, const GenWord& f);

}  // namespace vh

#endif  // VH_COSET_TABLE_HPP
