#pragma once

#include <string>
#include <vector>

#include "seqkit/term.hpp"
#include "seqkit/value.hpp"

namespace seqkit {

struct PrintOptions {
  // When set, printing seq.replace or a 3-argument seq.indexof collects a
  // warning (these arities extend the two-sequence core rows); tools render
  // the collected warnings as comment lines ahead of the term.
  bool flag_extended_arity = false;
  std::vector<std::string>* warnings = nullptr;
};

std::string print_sort(const Sort& s);
std::string print_term(const Term& t, const PrintOptions& opts = {});

// Renders a concrete value as a term in canonical spelling: sequences as
// (seq.concat (seq.unit ...) ...) / (seq.unit x) / (as seq.empty (Seq S)),
// element values as (as @eK S). Fn values have no term form (throws).
Term value_to_term(const Value& v);
std::string print_value(const Value& v);

// Model block: one "(define-const name sort value)" line per base symbol in
// name order, then one "(undef key value)" line per token in key order.
std::string print_model(const Model& m);

}  // namespace seqkit
