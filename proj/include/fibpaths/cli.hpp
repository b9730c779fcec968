#pragma once

// Command implementations behind the `fibpath` tool. Each command writes to
// the given streams and returns the process exit code:
//   0 ok, 1 mismatch, 2 usage, 3 method unavailable, 4 internal error.

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibpaths/families.hpp"

namespace fibpaths::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kUnavailable = 3,
  kInternal = 4,
};

enum class Format { Text, Csv, Json };

std::optional<Format> parse_format(std::string_view s);

/// Truncation order from FIBPATH_ORDER, falling back to kDefaultOrder.
std::size_t default_order();

std::string format_report(const PathCountReport& report, Format format,
                          bool header = false);

nlohmann::ordered_json report_to_json(const PathCountReport& report);
/// Inverse of report_to_json; throws std::invalid_argument on bad input.
PathCountReport report_from_json(const nlohmann::json& j);

struct SeqOptions {
  FamilyKind family = FamilyKind::Fib;
  unsigned k = 1;
  std::size_t n = 10;
  Method method = Method::Closed;
  std::optional<std::size_t> depth;
  Format format = Format::Text;
  bool header = false;
};

int run_seq(const SeqOptions& opts, std::ostream& out, std::ostream& err);

/// One printed row of a published table: values[i] is the count for
/// n = first_index + i.
struct TableFixture {
  int table;
  FamilyKind family;
  unsigned k;
  std::size_t first_index;
  std::vector<std::string> values;
};

const std::vector<TableFixture>& published_tables();

int run_tables(std::span<const TableFixture> fixtures, bool json,
               std::ostream& out);

struct VerifyOptions {
  unsigned k_max = 4;
  std::size_t n_max = 40;
  std::size_t brute_max = 10;
  std::optional<std::size_t> depth;  // cf/automaton; default exact depth
  std::optional<FamilyKind> family;
  std::optional<unsigned> k;
  unsigned threads = 0;  // 0 = hardware concurrency
};

int run_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace fibpaths::cli
