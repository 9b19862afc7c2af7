#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqkit/bounds.hpp"
#include "seqkit/eval.hpp"
#include "seqkit/term.hpp"
#include "seqkit/value.hpp"

namespace seqkit {

struct OracleOptions {
  std::uint64_t ceiling = 10'000'000;  // hard cap on enumerated evaluations
  SliceConvention arrc_slice = SliceConvention::Inclusive;
  // Symbols bound to fixed values (defined functions, pinned constants);
  // they join the evaluation env and are excluded from enumeration.
  const ValueEnv* fixed_env = nullptr;
  // Token values pinned up front (from undef lines of a re-parsed witness).
  const TokenAssignment* preset_tokens = nullptr;
};

// Deterministic enumeration of the bounded value universe of a sort:
// integers ascend from int_lo, elements ascend by index, booleans are
// false then true, sequences go by length then lexicographically by
// element index, function tables lexicographically entry by entry.
class ValueUniverse {
 public:
  explicit ValueUniverse(const Bounds& bounds);

  // Saturates at 2^63 on overflow; callers compare against the ceiling.
  std::uint64_t count(const Sort& sort) const;
  Value at(const Sort& sort, std::uint64_t index) const;
  // Small-domain materialization (token domains). Seq sorts are rejected.
  std::vector<Value> token_domain(const Sort& sort) const;

  const Bounds& bounds() const { return bounds_; }

 private:
  Bounds bounds_;
};

// Restartable lexicographic product over a name-sorted variable list.
class ModelEnumerator {
 public:
  ModelEnumerator(const SortEnv& vars, const Bounds& bounds,
                  std::uint64_t ceiling);

  std::uint64_t total() const { return total_; }
  bool next(ValueEnv& out);  // false once exhausted
  void reset();

 private:
  ValueUniverse universe_;
  std::vector<std::pair<std::string, Sort>> vars_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> idx_;
  std::uint64_t total_ = 1;
  bool done_ = false;
  bool fresh_ = true;
};

struct Verdict {
  enum class Kind { Sat, UnsatWithinBounds, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Model> model;  // witness when Sat
  std::string reason;          // set when Unknown
  std::uint64_t evaluations = 0;

  bool is_sat() const { return kind == Kind::Sat; }
  bool is_unsat() const { return kind == Kind::UnsatWithinBounds; }
};

// Bounded existential check: free symbols range over the value universe,
// tokens are discovered lazily and enumerated existentially. The witness is
// the first satisfying model in enumeration order and is re-evaluated
// strictly before being returned.
Verdict check_sat_bounded(const Term& phi, const Bounds& bounds,
                          SemanticsProfile profile,
                          const OracleOptions& opts = {});

struct ValidityResult {
  bool valid = false;
  bool unknown = false;
  std::string reason;
  std::optional<Model> counterexample;  // minimal in enumeration order
  std::uint64_t evaluations = 0;
};

// Bounded universal check over models and token assignments; implemented as
// the verdict of check_sat_bounded on the negation.
ValidityResult check_valid_bounded(const Term& phi, const Bounds& bounds,
                                   SemanticsProfile profile,
                                   const OracleOptions& opts = {});

struct EquivWitness {
  Model model;
  Value left;
  Value right;
};

struct EquivResult {
  bool equivalent = false;
  bool unknown = false;
  std::string reason;
  std::vector<EquivWitness> witnesses;
  std::uint64_t evaluations = 0;
};

// Bounded equivalence of two same-sorted terms under one token assignment
// per model (tokens are shared across the sides, so congruent reads agree).
// With collect_all the full divergence list is returned instead of just the
// first witness. The two sides may be evaluated under different profiles.
EquivResult check_equiv_bounded(const Term& left, const Term& right,
                                const Bounds& bounds, SemanticsProfile profile,
                                const OracleOptions& opts = {},
                                bool collect_all = false);
EquivResult check_equiv_bounded(const Term& left, const Term& right,
                                const Bounds& bounds,
                                SemanticsProfile left_profile,
                                SemanticsProfile right_profile,
                                const OracleOptions& opts = {},
                                bool collect_all = false);

// All bounded models where t evaluates differently under the two profiles.
std::vector<EquivWitness> diff_profiles(const Term& t, const Bounds& bounds,
                                        SemanticsProfile a, SemanticsProfile b,
                                        const OracleOptions& opts = {});

}  // namespace seqkit
