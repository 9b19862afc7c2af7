#pragma once

#include <string>
#include <vector>

#include "seqkit/bounds.hpp"
#include "seqkit/term.hpp"

namespace seqkit {

struct FragmentOffender {
  SymbolId sym;
  std::string name;
  std::string hint;  // e.g. "reducible to seq.map", empty if none
};

struct FragmentCheck {
  bool in_fragment = true;
  std::vector<FragmentOffender> offenders;
};

// Membership in the reducible fragment: seq.empty, seq.const, seq.unit,
// seq.len, seq.at, seq.get, seq.set, seq.slice, seq.concat, seq.update,
// seq.map (arrc.* symbols are already target vocabulary and pass).
FragmentCheck in_fragment(const Term& t);

struct ReduceConfig {
  long long delta_int = 0;  // printed delta for Int element sorts
};

// Rewrites every fragment symbol to its arrc.* image. Non-fragment symbols
// raise NotInFragment. Sorts are preserved.
Term reduce_to_arrayc(const Term& t, const ReduceConfig& cfg = {});

struct ShiftWitness {
  std::string var;  // the universally quantified index variable
  Term seq;         // the sequence term read at shifted positions
  long long offset_a = 0;
  long long offset_b = 0;
};

struct ShiftReport {
  bool found = false;
  std::vector<ShiftWitness> witnesses;
};

// Detects a universally quantified Int variable used in two seq.get /
// arrc.nth index positions on the same sequence term at literal offsets
// that differ, the pattern behind index-shifting constraints such as
// forall i. 0 <= i < len(s)-n => get(s,i) = get(s,i+n).
ShiftReport detect_index_shifting(const Term& t);

}  // namespace seqkit
