#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "token_spectra/families.hpp"
#include "token_spectra/verify.hpp"

namespace token_spectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// Entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "path:4", "cycle:5", "complete:3", "star:5", "complete_bipartite:2,3".
Graph parse_graph_spec(const std::string& spec);
// A family spec as above, otherwise an edge-list file path.
Graph load_graph(const std::string& arg);
// Specs with optional "xN" tokens repeating the previous spec.
std::vector<Graph> parse_components(const std::vector<std::string>& tokens);
// "u,v" or "u-v".
Edge parse_edge(const std::string& text);

// --cap flag, else TOKEN_SPECTRA_CAP, else the library default.
std::uint64_t resolve_cap(std::optional<std::uint64_t> flag);

struct Range {
  int lo = 0;
  int hi = 0;
};

struct SweepSpec {
  std::string family;
  nlohmann::json params = nlohmann::json::object();  // family-specific fields
  Range k{1, 1};
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  bool exact = true;             // containment mode
  std::string pairs = "random";  // vertex pairs for u,v checks: random | all
};

// Throws invalid-spec on unknown families/checks or empty ranges.
SweepSpec parse_sweep_spec(const nlohmann::json& j);

struct SweepRow {
  std::size_t instance = 0;
  std::string label;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string edges_hash;
  std::string check_id;
  int k = 0;
  int u = -1;
  int v = -1;
  std::string verdict;  // certificate verdict, or cap_exceeded / error
  std::int64_t runtime_ms = 0;
  std::string detail;   // scalar witnesses as compact JSON, or the error text
};

struct SweepReport {
  std::vector<SweepRow> rows;
  nlohmann::json summary;
  int exit_code = kExitOk;
};

// Runs every (instance, check, k) task on up to `jobs` threads. Rows come back
// in task order whatever the completion order.
SweepReport run_sweep(const SweepSpec& spec, const CheckOptions& opts, int jobs);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace token_spectra::cli
