#ifndef VH_CENSUS_HPP
#define VH_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vh/alexander.hpp"
#include "vh/complexity.hpp"
#include "vh/coset_table.hpp"
#include "vh/slope.hpp"
#include "vh/word.hpp"

namespace vh {

/// Coset tables and Alexander constants, built once and shared read-only.
struct PipelineContext {
  CosetTable table3, table4;
  AlexCase alex3, alex4;
  /// Also compute the case-4 polynomial and record structural anomalies.
  bool check_case4 = true;

  static PipelineContext build();
};

struct Overrides {
  std::optional<GenWord> w3, w4;
};

struct CensusRecord {
  std::string word;
  std::int64_t length = 0;
  std::string trace;
  std::int64_t m = 0;
  std::int64_t n3 = 0, n4 = 0, t3 = 0, t4 = 0;
  std::string W3, W4;
  Slope beta31, beta41, beta42;
  /// Absent when the case-3 polynomial is degenerate.
  std::optional<Slope> beta32;
  std::string delta3;
  bool success = false;
  std::vector<std::string> anomalies;

  bool operator==(const CensusRecord&) const = default;
};

/// Minimal power, rewriting, twists, Alexander polynomial and slopes for
/// one monodromy word. Degenerate polynomials and structural fallbacks are
/// recorded in `anomalies`; certificate failures propagate.
CensusRecord run_pipeline(const PipelineContext& ctx, const GenWord& f, const Overrides& ov = {});
CensusRecord run_pipeline(const PipelineContext& ctx, const ComplexityClass& c, const Overrides& ov = {});

/// Lyndon words over {x^-1 < y} of lengths 2..max_len. Throws
/// BoundOutOfRange unless 2 <= max_len <= 20.
std::vector<ComplexityClass> enumerate_classes(int max_len);

struct CensusSummary {
  int max_complexity = 0;
  std::size_t class_count = 0;
  std::size_t success_count = 0;
  std::vector<std::string> failures;
  double runtime_seconds = 0;
};

struct CensusResult {
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

/// Runs the pipeline over every class with `jobs` worker threads. Record
/// order is the enumeration order regardless of scheduling.
CensusResult census(const PipelineContext& ctx, int max_len, unsigned jobs = 1);

extern const char* const kCsvHeader;
std::string records_to_csv(const std::vector<CensusRecord>& records);
std::string records_to_json(const std::vector<CensusRecord>& records);
std::string record_to_json(const CensusRecord& r);
std::vector<CensusRecord> records_from_json(std::string_view text);
std::string summary_to_text(const CensusSummary& s);

}  // namespace vh

#endif  // VH_CENSUS_HPP
