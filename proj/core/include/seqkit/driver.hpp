#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "seqkit/axioms.hpp"
#include "seqkit/oracle.hpp"
#include "seqkit/script.hpp"

namespace seqkit {

// Exit codes shared by every subcommand.
inline constexpr int kExitSat = 0;
inline constexpr int kExitUnsatWithinBounds = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitUnknown = 3;
inline constexpr int kExitNotInFragment = 4;

struct RunConfig {
  SemanticsProfile profile = SemanticsProfile::Proposal;
  Bounds bounds;
  SliceConvention arrc_slice = SliceConvention::Inclusive;
  std::uint64_t ceiling = 10'000'000;
  bool verify = false;
  bool audit = false;
  // Option keys pinned on the command line; script set-option lines for
  // these keys are ignored (flags override script options).
  std::set<std::string> forced;
};

struct ReportEntry {
  std::string kind;  // "check-sat", "eval", "diff", "reduce", ...
  std::string text;  // rendered text block
  std::string json;  // the same record as a JSON object
};

struct Report {
  std::vector<ReportEntry> entries;
  int exit_code = kExitSat;

  std::string to_text() const;
  std::string to_json() const;
};

Report cmd_run(const Script& script, const RunConfig& cfg);
// Like run, but check-sat-bounded commands are skipped with a notice; only
// declarations, options, and eval lines take effect.
Report cmd_eval(const Script& script, const RunConfig& cfg);
// Diffs the term of the script's last (eval ...) command between the two
// profiles; seq.update roots get the overflow-category breakdown.
Report cmd_diff(const Script& script, const RunConfig& cfg, SemanticsProfile a,
                SemanticsProfile b);
// Prints the script with every assert/eval term rewritten to arrc.* form;
// with cfg.verify, each rewritten term is checked equivalent to its origin.
Report cmd_reduce(const Script& script, const RunConfig& cfg);
Report cmd_lemmas(SchemaName schema, int arity, const RunConfig& cfg);
Report cmd_fragment_check(const Script& script, const RunConfig& cfg);

enum class OverflowCategory { Empty, None, Left, Right, LeftRight };
const char* to_string(OverflowCategory c);
// Category of an update(s1, i, s2) instance from i and the two lengths.
OverflowCategory classify_update_overflow(long long i, long long len1,
                                          long long len2);

struct AuditResult {
  bool ok = false;
  std::string detail;
};

// Round-trip audit of a Sat witness: prints the model block, re-parses it,
// rebuilds the script with the witness pinned, and re-checks that the
// asserted formulas evaluate to true.
AuditResult audit_witness(const std::vector<Term>& asserts, const Model& model,
                          const RunConfig& cfg);

}  // namespace seqkit
