#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chowla2/chowla.hpp"

// Verification suites with machine-readable reports.  A report is a single
// ordered-key record; identical configurations (including the seed) produce
// byte-identical records.

namespace chowla2 {

struct RunConfig {
  std::string field_spec = "k=1";
  std::uint64_t seed = 1;
  std::uint64_t budget = 1ull << 22;  // refuse, never truncate, above this
  unsigned ext_cap_bits = kMaxFieldBits;
  std::string format = "record";  // "record" or "table"
  // Optional range overrides; empty means the suite default.
  std::vector<unsigned> ks;  // field degrees for multi-field suites
  std::vector<unsigned> ns;
  unsigned r = 2;
  std::uint64_t count = 1000;  // random-corpus size per field
};

struct Check {
  std::string label;
  bool pass;
  std::string detail;
};

struct Report {
  std::string command;
  nlohmann::ordered_json data;
  std::vector<Check> checks;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  std::string to_table() const;
  std::string render(const std::string& format) const;
};

/// Suite names: pellet, theorem, n2, badsets, section7, nonvanishing,
/// sqindep, weil, or "all".
Report run_suite(const std::string& name, const RunConfig& cfg);

std::vector<std::string> suite_names();

// Individual suite pieces, also driven directly by the acceptance binary.
struct SuitePart {
  std::vector<Check> checks;
  nlohmann::ordered_json stats;
};

SuitePart part_pellet_identity(const RunConfig& cfg);
SuitePart part_berl_oracle(const RunConfig& cfg);
SuitePart part_small_degree_table(const RunConfig& cfg);
SuitePart part_lift_independence(const RunConfig& cfg);
SuitePart part_theorem(const RunConfig& cfg);
SuitePart part_n2(const RunConfig& cfg);
SuitePart part_badsets(const RunConfig& cfg);
SuitePart part_family(const RunConfig& cfg);
SuitePart part_nonvanishing(const RunConfig& cfg);
SuitePart part_sqindep(const RunConfig& cfg);
SuitePart part_asreduce(const RunConfig& cfg);
SuitePart part_weil(const RunConfig& cfg);

}  // namespace chowla2
