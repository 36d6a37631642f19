#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fcover/search.hpp"

namespace fcover::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kPredicateFalse = 1,
  kUsageError = 2,
  kSearchExhausted = 3,
  // A certifier contradicted a step that must succeed.
  kInternalError = 4,
};

// Where the JSON report goes: `report_path`, or `out` when it is empty.
struct ReportOptions {
  std::string report_path;
  bool timings = false;  // wall-clock fields make reports nondeterministic
};

struct CheckOptions {
  std::string path;
  bool e_unitary = false;
  bool f_inverse = false;
  // `path` is a cover dump; checks theta and applies the other flags to
  // its source.
  bool cover = false;
  ReportOptions report;
};

enum class CoverMode { kEUnitary, kFInverse };

struct CoverOptions {
  std::string path;
  CoverMode mode = CoverMode::kEUnitary;
  SearchBudget budget;
  std::string emit_cover;
  ReportOptions report;
};

struct GroupoidOptions {
  std::string path;
  bool search = false;  // otherwise certify
  SearchBudget budget;
  std::string emit_groupoid;
  ReportOptions report;
};

int run_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int run_cover(const CoverOptions& opts, std::ostream& out, std::ostream& err);
int run_groupoid(const GroupoidOptions& opts, std::ostream& out,
                 std::ostream& err);

// Comma separated key=value pairs: max_group_order, max_candidates,
// time_ms, groupoid_limit. Throws Error on unknown keys or bad numbers.
SearchBudget parse_budget(const std::string& spec, SearchBudget base = {});

// The budget from FCOVER_BUDGET, or the defaults.
SearchBudget default_budget();

// Full command line: `fcover check|cover|groupoid ...`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace fcover::cli
