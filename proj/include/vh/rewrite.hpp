#ifndef VH_REWRITE_HPP
#define VH_REWRITE_HPP

#include <cstdint>
#include <optional>

#include "vh/coset_table.hpp"
#include "vh/sl2.hpp"
#include "vh/word.hpp"

namespace vh {

struct RewriteResult {
  bool member = false;
  /// Subgroup word with mat_of_word(*word) == input, when member.
  std::optional<GenWord> word;
  /// Input reduced mod i (entries in [0, i)), when not a member.
  std::optional<std::array<int, 4>> obstruction;
};

/// True iff g = [[1,*],[0,1]] mod i.
bool mod_normal_form(const IntMat2& g, int i);

/// Greedy Euclidean reduction of the first column by left multiplication
/// with powers of a and b^i. Deterministic: among equally good exponents
/// the smaller |e| wins, then the positive one.
RewriteResult euclid_rewrite(const IntMat2& g, int i);

struct PowerRewrite {
  std::int64_t m;
  GenWord word;
};

/// Rewrites f^m over {A, B}. With no `power`, m is minimal_power(t, f).
/// An `injected` word replaces the rewriter's choice after a certificate
/// check (CertificateFailure if it does not evaluate to f^m).
PowerRewrite rewrite_power(const CosetTable& t, const GenWord& f,
                           const std::optional<GenWord>& injected = std::nullopt,
                           std::optional<std::int64_t> power = std::nullopt);

}  // namespace vh

#endif  // VH_REWRITE_HPP
