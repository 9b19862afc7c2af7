#pragma once

#include <map>
#include <string>

#include "seqkit/bounds.hpp"
#include "seqkit/signature.hpp"
#include "seqkit/term.hpp"
#include "seqkit/value.hpp"

namespace seqkit {

struct EvalConfig {
  SemanticsProfile profile = SemanticsProfile::Proposal;
  Bounds bounds;
  SliceConvention arrc_slice = SliceConvention::Inclusive;
};

// Supplies values for unspecified tokens as the evaluator reaches them.
class TokenSink {
 public:
  virtual ~TokenSink() = default;
  virtual Value resolve(const TokenKey& key, const Sort& sort) = 0;
};

// Looks tokens up in a fixed assignment; a missing key is a MissingToken
// error. This is the re-check mode: the assignment must already be complete.
class StrictTokenSink : public TokenSink {
 public:
  explicit StrictTokenSink(const TokenAssignment& assignment)
      : assignment_(assignment) {}
  Value resolve(const TokenKey& key, const Sort& sort) override;

 private:
  const TokenAssignment& assignment_;
};

// Leaves tokens symbolic: out-of-bounds reads come back as Unspecified
// values carrying their key. Using such a value in a strict position
// raises UnresolvedToken.
class SymbolicTokenSink : public TokenSink {
 public:
  Value resolve(const TokenKey& key, const Sort& sort) override;
};

using ValueEnv = std::map<std::string, Value>;

// Evaluates t under the given base assignment. Every free variable of t
// must be bound in base; quantifiers range over the bounds window; tokens
// are delegated to the sink. The result is grounded except in symbolic
// mode, where Unspecified values may surface.
Value eval(const Term& t, const ValueEnv& base, TokenSink& sink,
           const EvalConfig& cfg);

// The designated total default of a sort: delta_int for Int, false for
// Bool, element #0 for declared element sorts, the empty sequence for
// sequence sorts.
Value delta_value(const Sort& sort, const Bounds& bounds);

Value apply_fn(const Value& fn, std::vector<Value> args, const ValueEnv& base,
               TokenSink& sink, const EvalConfig& cfg);

}  // namespace seqkit
