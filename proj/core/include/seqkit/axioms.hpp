#pragma once

#include <string>
#include <vector>

#include "seqkit/bounds.hpp"
#include "seqkit/term.hpp"

namespace seqkit {

enum class SchemaName {
  Set,             // holes: s1, i, v, s2
  Const,           // holes: l, v, s
  Slice,           // holes: s1, i, j, s2
  UpdateProposal,  // holes: s1, i, s2, s
  UpdateCvc5,      // holes: s1, i, s2, s
  Map,             // holes: f, s1..sn, s
  Mapi,            // holes: f, o, s1..sn, s
  SelectOverStore, // holes: s, i, v, j
};

const char* to_string(SchemaName name);
bool schema_from_string(const std::string& name, SchemaName& out);

struct AxiomSchema {
  SchemaName name;
  int arity = 1;  // n for Map/Mapi, ignored otherwise
};

// The defining formula of a schema with the holes substituted in. The last
// hole is the constrained output (except SelectOverStore, whose holes are
// all inputs). Quantified index variables are fresh with respect to the
// holes. Hole sorts are checked; mismatches raise SortMismatch.
Term schema_term(SchemaName name, const std::vector<Term>& holes);

struct GroundLemma {
  Term formula;  // quantifier-free
  std::string provenance;
};

// Expands every quantifier of the schema over the index range derivable
// from its guard under the given bounds (and eliminates lets). If the
// bounds window cannot cover that range the instantiation is incomplete
// and WindowTooSmall is raised.
std::vector<GroundLemma> instantiate(const AxiomSchema& schema,
                                     const std::vector<Term>& holes,
                                     const Bounds& bounds);

// Canonical holes over element sort `elem`: free variables for the inputs
// plus, as the final hole, the applied operator itself (for example
// (seq.set s1 i v) for Set). Checking validity of
// schema_term(name, agreement_holes(...)) asserts that the evaluator's
// output satisfies its defining axiom.
std::vector<Term> agreement_holes(SchemaName name, int arity, const Sort& elem);

// Input holes only (the output becomes a fresh free variable); used by the
// lemma printer, where the output is constrained rather than computed.
std::vector<Term> default_holes(SchemaName name, int arity, const Sort& elem);

}  // namespace seqkit
