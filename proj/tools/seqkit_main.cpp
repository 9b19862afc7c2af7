#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "seqkit/seqkit.hpp"

namespace {

using namespace seqkit;

struct Opts {
  std::string file;
  std::string profile = "proposal";
  int max_len = 3;
  long long int_lo = -2;
  long long int_hi = 4;
  int elem_card = 2;
  long long delta_int = 0;
  std::string arrc_slice = "inclusive";
  bool json_out = false;
  std::uint64_t ceiling = 10'000'000;
  bool verify = false;
  bool audit = false;

  std::string diff_left = "proposal";
  std::string diff_right = "cvc5";
  std::string schema = "set";
  int arity = 1;

  CLI::Option* o_profile = nullptr;
  CLI::Option* o_max_len = nullptr;
  CLI::Option* o_int_lo = nullptr;
  CLI::Option* o_int_hi = nullptr;
  CLI::Option* o_elem_card = nullptr;
  CLI::Option* o_delta_int = nullptr;
  CLI::Option* o_ceiling = nullptr;
};

void add_common(CLI::App* sub, Opts& o) {
  o.o_profile = sub->add_option("--profile", o.profile,
                                "semantics profile: proposal, cvc5, z3, arrayc");
  o.o_max_len = sub->add_option("--max-len", o.max_len,
                                "largest sequence length in the bounded universe");
  o.o_int_lo = sub->add_option("--int-lo", o.int_lo, "integer window low end");
  o.o_int_hi = sub->add_option("--int-hi", o.int_hi, "integer window high end");
  o.o_elem_card =
      sub->add_option("--elem-card", o.elem_card, "element sort cardinality");
  o.o_delta_int = sub->add_option("--delta-int", o.delta_int,
                                  "default integer for total reads");
  sub->add_option("--arrc-slice", o.arrc_slice,
                  "arrc.slice end convention: inclusive or exclusive")
      ->check(CLI::IsMember({"inclusive", "exclusive"}));
  sub->add_flag("--json", o.json_out, "emit the report as JSON");
  o.o_ceiling = sub->add_option("--ceiling", o.ceiling,
                                "hard cap on enumerated evaluations");
  sub->add_flag("--verify", o.verify,
                "check rewritten terms equivalent to their origins");
  sub->add_flag("--audit", o.audit,
                "re-parse and re-check every Sat witness");
}

RunConfig make_config(const Opts& o) {
  RunConfig cfg;
  if (!profile_from_string(o.profile, cfg.profile))
    throw SeqkitError(ErrorKind::BadCommand,
                      "unknown profile " + o.profile +
                          " (expected proposal, cvc5, z3, or arrayc)");
  cfg.bounds.max_len = o.max_len;
  cfg.bounds.int_lo = o.int_lo;
  cfg.bounds.int_hi = o.int_hi;
  cfg.bounds.elem_card = o.elem_card;
  cfg.bounds.delta_int = o.delta_int;
  cfg.arrc_slice = o.arrc_slice == "exclusive" ? SliceConvention::Exclusive
                                               : SliceConvention::Inclusive;
  cfg.verify = o.verify;
  cfg.audit = o.audit;

  cfg.ceiling = o.ceiling;
  if (o.o_ceiling->count() == 0) {
    if (const char* env = std::getenv("SEQKIT_CEILING")) {
      try {
        cfg.ceiling = std::stoull(env);
      } catch (const std::exception&) {
        throw SeqkitError(ErrorKind::BadCommand,
                          std::string("SEQKIT_CEILING is not a number: ") + env);
      }
    }
  }

  auto force = [&](CLI::Option* opt, const char* key) {
    if (opt && opt->count() > 0) cfg.forced.insert(key);
  };
  force(o.o_profile, "profile");
  force(o.o_max_len, "max-len");
  force(o.o_int_lo, "int-lo");
  force(o.o_int_hi, "int-hi");
  force(o.o_elem_card, "elem-card");
  force(o.o_delta_int, "delta-int");
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw SeqkitError(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SemanticsProfile parse_profile(const std::string& name) {
  SemanticsProfile p;
  if (!profile_from_string(name, p))
    throw SeqkitError(ErrorKind::BadCommand,
                      "unknown profile " + name +
                          " (expected proposal, cvc5, z3, or arrayc)");
  return p;
}

int emit(const Report& report, bool json_out) {
  if (json_out)
    std::cout << report.to_json() << "\n";
  else
    std::cout << report.to_text();
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded reference tools for a totalized theory of sequences"};
  app.require_subcommand(1);

  Opts run_o, eval_o, diff_o, reduce_o, lemmas_o, frag_o;

  CLI::App* run = app.add_subcommand("run", "execute a script");
  run->add_option("file", run_o.file, "script file")->required();
  add_common(run, run_o);

  CLI::App* ev = app.add_subcommand(
      "eval", "execute only declarations, options, and eval lines");
  ev->add_option("file", eval_o.file, "script file")->required();
  add_common(ev, eval_o);

  CLI::App* diff = app.add_subcommand(
      "diff", "compare the last (eval ...) term between two profiles");
  diff->add_option("file", diff_o.file, "script file")->required();
  diff->add_option("left", diff_o.diff_left, "first profile")->required();
  diff->add_option("right", diff_o.diff_right, "second profile")->required();
  add_common(diff, diff_o);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "rewrite assert/eval terms into arrc.* vocabulary");
  reduce->add_option("file", reduce_o.file, "script file")->required();
  add_common(reduce, reduce_o);

  CLI::App* lemmas =
      app.add_subcommand("lemmas", "print ground instances of an axiom schema");
  lemmas->add_option("--schema", lemmas_o.schema,
                     "set, const, slice, update_proposal, update_cvc5, map, "
                     "mapi, select_over_store")
      ->required();
  lemmas->add_option("--arity", lemmas_o.arity,
                     "sequence count for map/mapi schemas");
  add_common(lemmas, lemmas_o);

  CLI::App* frag = app.add_subcommand(
      "fragment-check", "report symbols outside the reducible fragment");
  frag->add_option("file", frag_o.file, "script file")->required();
  add_common(frag, frag_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      RunConfig cfg = make_config(run_o);
      Script script = parse_script(read_file(run_o.file), run_o.file);
      return emit(cmd_run(script, cfg), run_o.json_out);
    }
    if (ev->parsed()) {
      RunConfig cfg = make_config(eval_o);
      Script script = parse_script(read_file(eval_o.file), eval_o.file);
      return emit(cmd_eval(script, cfg), eval_o.json_out);
    }
    if (diff->parsed()) {
      RunConfig cfg = make_config(diff_o);
      Script script = parse_script(read_file(diff_o.file), diff_o.file);
      return emit(cmd_diff(script, cfg, parse_profile(diff_o.diff_left),
                           parse_profile(diff_o.diff_right)),
                  diff_o.json_out);
    }
    if (reduce->parsed()) {
      RunConfig cfg = make_config(reduce_o);
      Script script = parse_script(read_file(reduce_o.file), reduce_o.file);
      return emit(cmd_reduce(script, cfg), reduce_o.json_out);
    }
    if (lemmas->parsed()) {
      RunConfig cfg = make_config(lemmas_o);
      SchemaName schema;
      if (!schema_from_string(lemmas_o.schema, schema))
        throw SeqkitError(ErrorKind::UnknownSchema,
                          "unknown schema " + lemmas_o.schema);
      return emit(cmd_lemmas(schema, lemmas_o.arity, cfg), lemmas_o.json_out);
    }
    if (frag->parsed()) {
      RunConfig cfg = make_config(frag_o);
      Script script = parse_script(read_file(frag_o.file), frag_o.file);
      return emit(cmd_fragment_check(script, cfg), frag_o.json_out);
    }
  } catch (const SeqkitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotInFragment ? kExitNotInFragment
                                                : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
