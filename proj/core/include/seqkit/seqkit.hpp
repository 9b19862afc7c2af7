#pragma once

#include "seqkit/axioms.hpp"
#include "seqkit/bounds.hpp"
#include "seqkit/driver.hpp"
#include "seqkit/error.hpp"
#include "seqkit/eval.hpp"
#include "seqkit/oracle.hpp"
#include "seqkit/parser.hpp"
#include "seqkit/printer.hpp"
#include "seqkit/reduction.hpp"
#include "seqkit/script.hpp"
#include "seqkit/signature.hpp"
#include "seqkit/sort.hpp"
#include "seqkit/term.hpp"
#include "seqkit/value.hpp"
