#pragma once

#include <string>

#include "seqkit/script.hpp"
#include "seqkit/sort.hpp"
#include "seqkit/term.hpp"

namespace seqkit {

// Parses a whole script. Diagnostics carry 1-based line/column positions;
// the filename only decorates error messages. Pure and reentrant.
Script parse_script(const std::string& text, const std::string& filename = "");

// Parses a single term against a fixed variable environment; elem sorts
// mentioned by (as @eK S) / (Seq S) must appear in `sorts`.
Term parse_term(const std::string& text, const SortEnv& vars,
                const std::vector<std::string>& sorts = {"E"});

}  // namespace seqkit
