#ifndef VH_REFERENCE_HPP
#define VH_REFERENCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vh/census.hpp"
#include "vh/slope.hpp"

namespace vh {

/// One row of the reference complexity <= 5 table.
struct TableRow {
  std::string word;
  std::int64_t m;
  std::int64_t t3;
  Slope beta31, beta32;
  std::int64_t t4;
  Slope beta41, beta42;
  bool success;
};

const std::vector<TableRow>& reference_table();

/// Reference example: the figure-eight monodromy with its
/// certificate words and the expected record.
namespace figure_eight {
extern const char* const kWord;
extern const char* const kW3;
extern const char* const kW4;
extern const char* const kDelta3;
/// The single period whose cube is kW3.
extern const char* const kW3Period;
}  // namespace figure_eight

struct ColumnDiff {
  std::string column;
  std::string expected, actual;
  bool hard = false;
  bool match = false;
  /// Soft mismatch explained by inserting copies of (AB)^3 into W3.
  bool certified = false;
};

struct RowDiff {
  std::string word;
  std::vector<ColumnDiff> columns;
  /// Number of (AB)^3 insertions tried for certification (0 if none needed).
  std::int64_t insertions = 0;
};

struct DiffReport {
  std::vector<RowDiff> rows;
  std::size_t hard_mismatches = 0;
  std::size_t soft_mismatches = 0;
  std::size_t uncertified = 0;
  std::string to_text() const;
};

/// Diffs records against table rows (matched by word text). Columns m,
/// beta31, beta41, beta42, success are hard; t3 and beta32 are soft and
/// each soft mismatch is checked by re-running the pipeline with
/// W3 * (AB)^(3k), k = record t3 - table t3.
DiffReport compare_to_reference(const PipelineContext& ctx, const std::vector<CensusRecord>& records,
                                const std::vector<TableRow>& table);

struct Check {
  std::string name;
  bool pass;
  bool hard;
  std::string detail;
};

struct VerifyOptions {
  int census_bound = 12;
  unsigned jobs = 1;
};

/// Runs all embedded fixtures, prints one line per check to `out`, and
/// returns the checks. Hard failures make the overall verdict fail.
std::vector<Check> verify_paper(const PipelineContext& ctx, std::ostream& out, const VerifyOptions& opt = {});

}  // namespace vh

#endif  // VH_REFERENCE_HPP
