#pragma once

#include <iosfwd>
#include <stdexcept>

#include <json.hpp>

#include "lohi/ingest.hpp"
#include "lohi/metrics.hpp"
#include "lohi/pipeline.hpp"

namespace lohi::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDataError = 2 };

// Bad flag values that only show up after parsing (k >= n, negative beta).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rounded to 6 decimals so reports are byte-stable; non-finite and missing
// values become null.
nlohmann::json fixed(double x);
nlohmann::json fixed(const std::optional<double>& x);

nlohmann::json to_json(const PartitionReport& r);
nlohmann::json to_json(const IngestionReport& r);
nlohmann::json to_json(const EstimationResult& r, int q);

// Parses argv (argv[0] is the program name), runs one subcommand and returns
// the process exit code. Errors go to `err`, results to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lohi::cli
