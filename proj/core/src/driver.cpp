#include "seqkit/driver.hpp"

#include <chrono>
#include <memory>

#include <json.hpp>

#include "seqkit/parser.hpp"
#include "seqkit/printer.hpp"
#include "seqkit/reduction.hpp"

namespace seqkit {

namespace {

using nlohmann::json;

constexpr size_t kMaxPrintedWitnesses = 20;

// Options and definitions accumulated while walking a script.
struct SessionState {
  SemanticsProfile profile;
  Bounds bounds;
  SliceConvention arrc_slice;
  ValueEnv fixed;          // defined functions, excluded from enumeration
  TokenAssignment preset;  // tokens pinned by undef commands
  std::vector<Term> asserts;
};

SessionState initial_state(const RunConfig& cfg) {
  return SessionState{cfg.profile, cfg.bounds, cfg.arrc_slice, {}, {}, {}};
}

EvalConfig eval_cfg(const SessionState& st) {
  return EvalConfig{st.profile, st.bounds, st.arrc_slice};
}

OracleOptions oracle_opts(const SessionState& st, const RunConfig& cfg) {
  OracleOptions o;
  o.ceiling = cfg.ceiling;
  o.arrc_slice = st.arrc_slice;
  o.fixed_env = &st.fixed;
  o.preset_tokens = &st.preset;
  return o;
}

// Pinned tokens resolve to their pinned value, anything else stays symbolic.
class PresetSymbolicSink : public TokenSink {
 public:
  explicit PresetSymbolicSink(const TokenAssignment& preset)
      : preset_(preset) {}
  Value resolve(const TokenKey& key, const Sort& sort) override {
    auto it = preset_.find(key);
    if (it != preset_.end()) return it->second;
    return Value::unspecified(sort, key);
  }

 private:
  const TokenAssignment& preset_;
};

std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

void add_entry(Report& report, const std::string& kind, std::string text,
               json j) {
  j["kind"] = kind;
  report.entries.push_back(ReportEntry{kind, std::move(text), j.dump()});
}

// Concrete values print canonically; values still carrying tokens render
// each token as its keyed application under an "unspecified" marker.
std::string render_value(const Value& v) {
  if (!v.is_unspecified()) {
    try {
      return print_value(v);
    } catch (const SeqkitError& e) {
      if (e.kind() != ErrorKind::UnresolvedToken) throw;
    }
  }
  if (v.is_unspecified()) {
    const TokenKey& key = v.token();
    std::string out = "(unspecified (" + key.symbol;
    for (const auto& a : key.args) out += " " + render_value(a);
    return out + "))";
  }
  const SeqData& sd = v.seq();
  if (sd.elems.size() == 1)
    return "(seq.unit " + render_value(sd.elems[0]) + ")";
  std::string out = "(seq.concat";
  for (const auto& e : sd.elems) out += " (seq.unit " + render_value(e) + ")";
  return out + ")";
}

long long parse_int_option(const SetOptionCmd& opt, const Position& pos) {
  try {
    size_t used = 0;
    long long v = std::stoll(opt.value, &used);
    if (used != opt.value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw SeqkitError(ErrorKind::BadCommand,
                      ":" + opt.key + " needs an integer, got " + opt.value,
                      pos);
  }
}

void apply_option(SessionState& st, const SetOptionCmd& opt,
                  const Position& pos, const RunConfig& cfg, Report& report) {
  if (cfg.forced.count(opt.key)) {
    add_entry(report, "notice",
              "; set-option :" + opt.key + " ignored (fixed on the command line)",
              json{{"option", opt.key}, {"ignored", true}});
    return;
  }
  if (opt.key == "profile") {
    if (!profile_from_string(opt.value, st.profile))
      throw SeqkitError(ErrorKind::BadCommand,
                        "unknown profile " + opt.value +
                            " (expected proposal, cvc5, z3, or arrayc)",
                        pos);
    return;
  }
  if (opt.key == "max-len") {
    st.bounds.max_len = static_cast<int>(parse_int_option(opt, pos));
    return;
  }
  if (opt.key == "int-lo") {
    st.bounds.int_lo = parse_int_option(opt, pos);
    return;
  }
  if (opt.key == "int-hi") {
    st.bounds.int_hi = parse_int_option(opt, pos);
    return;
  }
  if (opt.key == "elem-card") {
    st.bounds.elem_card = static_cast<int>(parse_int_option(opt, pos));
    return;
  }
  if (opt.key == "delta-int") {
    st.bounds.delta_int = parse_int_option(opt, pos);
    return;
  }
  throw SeqkitError(ErrorKind::BadCommand, "unknown option :" + opt.key, pos);
}

// Declarations, definitions, options, and pinned tokens; returns false for
// the commands (assert/check/eval) the caller handles itself.
bool apply_decl(SessionState& st, const Command& c, const RunConfig& cfg,
                Report& report) {
  if (c.as<DeclareSortCmd>() || c.as<DeclareConstCmd>()) return true;
  if (auto* def = c.as<DefineFunCmd>()) {
    if (!def->params.empty()) {
      std::vector<Sort> args;
      args.reserve(def->params.size());
      for (const auto& p : def->params) args.push_back(p.second);
      auto fd = std::make_shared<FnDef>(FnDef{def->name, def->params, def->body});
      st.fixed[def->name] =
          Value::fn_def(Sort::fn(std::move(args), def->ret), std::move(fd));
    }
    return true;  // 0-ary definitions were inlined during parsing
  }
  if (auto* opt = c.as<SetOptionCmd>()) {
    apply_option(st, *opt, c.pos, cfg, report);
    return true;
  }
  if (auto* ud = c.as<UndefCmd>()) {
    TokenAssignment none;
    StrictTokenSink ground(none);
    TokenKey key;
    key.symbol = symbol_name(ud->application.symbol());
    for (const auto& arg : ud->application.args())
      key.args.push_back(eval(arg, st.fixed, ground, eval_cfg(st)));
    st.preset[key] = eval(ud->value, st.fixed, ground, eval_cfg(st));
    return true;
  }
  if (auto* as = c.as<AssertCmd>()) {
    st.asserts.push_back(as->formula);
    return true;
  }
  return false;
}

json model_json(const Model& m) {
  return json{{"model", print_model(m)}};
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void run_check(SessionState& st, const RunConfig& cfg, Report& report,
               int& last_exit) {
  auto t0 = std::chrono::steady_clock::now();
  Term phi = mk::and_(st.asserts);
  Verdict v = check_sat_bounded(phi, st.bounds, st.profile,
                                oracle_opts(st, cfg));
  json j{{"profile", to_string(st.profile)},
         {"evaluations", v.evaluations},
         {"ms", elapsed_ms(t0)}};
  switch (v.kind) {
    case Verdict::Kind::Sat: {
      j["verdict"] = "sat";
      j.update(model_json(*v.model));
      std::string text = "sat";
      std::string block = chomp(print_model(*v.model));
      if (!block.empty()) text += "\n" + block;
      add_entry(report, "check-sat", std::move(text), j);
      last_exit = kExitSat;
      if (cfg.audit) {
        Model printed = *v.model;
        for (const auto& [name, val] : st.fixed) printed.base.emplace(name, val);
        RunConfig sub = cfg;
        sub.profile = st.profile;
        sub.bounds = st.bounds;
        sub.arrc_slice = st.arrc_slice;
        AuditResult ar = audit_witness(st.asserts, printed, sub);
        add_entry(report, "audit",
                  ar.ok ? "; audit: ok, " + ar.detail
                        : "; audit: FAILED, " + ar.detail,
                  json{{"ok", ar.ok}, {"detail", ar.detail}});
        if (!ar.ok) last_exit = kExitError;
      }
      break;
    }
    case Verdict::Kind::UnsatWithinBounds:
      j["verdict"] = "unsat-within-bounds";
      add_entry(report, "check-sat", "unsat-within-bounds", j);
      last_exit = kExitUnsatWithinBounds;
      break;
    case Verdict::Kind::Unknown:
      j["verdict"] = "unknown";
      j["reason"] = v.reason;
      add_entry(report, "check-sat", "unknown\n; " + v.reason, j);
      last_exit = kExitUnknown;
      break;
  }
}

void run_eval(SessionState& st, const EvalCmd& ev, Report& report) {
  PresetSymbolicSink sink(st.preset);
  Value v = eval(ev.term, st.fixed, sink, eval_cfg(st));
  std::string rendered = render_value(v);
  add_entry(report, "eval", rendered,
            json{{"term", print_term(ev.term)}, {"value", rendered}});
}

std::string command_source(const Command& c) {
  if (auto* ds = c.as<DeclareSortCmd>())
    return "(declare-sort " + ds->name + " 0)";
  if (auto* dc = c.as<DeclareConstCmd>()) {
    if (dc->sort.is_fn()) {
      std::string out = "(declare-fun " + dc->name + " (";
      const auto& args = dc->sort.fn_args();
      for (size_t i = 0; i < args.size(); ++i) {
        if (i) out += ' ';
        out += print_sort(args[i]);
      }
      return out + ") " + print_sort(dc->sort.fn_ret()) + ")";
    }
    return "(declare-const " + dc->name + " " + print_sort(dc->sort) + ")";
  }
  if (auto* def = c.as<DefineFunCmd>()) {
    std::string out = "(define-fun " + def->name + " (";
    for (size_t i = 0; i < def->params.size(); ++i) {
      if (i) out += ' ';
      out += "(" + def->params[i].first + " " +
             print_sort(def->params[i].second) + ")";
    }
    return out + ") " + print_sort(def->ret) + " " + print_term(def->body) +
           ")";
  }
  if (auto* as = c.as<AssertCmd>())
    return "(assert " + print_term(as->formula) + ")";
  if (c.as<CheckSatBoundedCmd>()) return "(check-sat-bounded)";
  if (auto* ev = c.as<EvalCmd>()) return "(eval " + print_term(ev->term) + ")";
  if (auto* opt = c.as<SetOptionCmd>())
    return "(set-option :" + opt->key + " " + opt->value + ")";
  if (auto* ud = c.as<UndefCmd>())
    return "(undef " + print_term(ud->application) + " " +
           print_term(ud->value) + ")";
  return "";
}

std::string witness_text(const EquivWitness& w, const char* left_label,
                         const char* right_label) {
  std::string out = chomp(print_model(w.model));
  if (!out.empty()) out += "\n";
  out += std::string(left_label) + ": " + render_value(w.left) + "\n";
  out += std::string(right_label) + ": " + render_value(w.right);
  return out;
}

json witness_json(const EquivWitness& w, const char* left_label,
                  const char* right_label) {
  return json{{"model", print_model(w.model)},
              {left_label, render_value(w.left)},
              {right_label, render_value(w.right)}};
}

void collect_elem_sorts(const Sort& s, std::set<std::string>& out) {
  if (s.is_null()) return;
  if (s.is_elem()) {
    out.insert(s.elem_name());
  } else if (s.is_seq()) {
    collect_elem_sorts(s.seq_elem(), out);
  } else if (s.is_fn()) {
    for (const auto& a : s.fn_args()) collect_elem_sorts(a, out);
    collect_elem_sorts(s.fn_ret(), out);
  }
}

}  // namespace

std::string Report::to_text() const {
  std::string out;
  for (const auto& e : entries) {
    out += e.text;
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  std::string out =
      "{\"version\":1,\"exit\":" + std::to_string(exit_code) + ",\"entries\":[";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].json;
  }
  return out + "]}";
}

Report cmd_run(const Script& script, const RunConfig& cfg) {
  Report report;
  SessionState st = initial_state(cfg);
  int last_exit = kExitSat;
  for (const auto& c : script.commands) {
    if (c.as<CheckSatBoundedCmd>()) {
      run_check(st, cfg, report, last_exit);
      continue;
    }
    if (auto* ev = c.as<EvalCmd>()) {
      run_eval(st, *ev, report);
      continue;
    }
    apply_decl(st, c, cfg, report);
  }
  report.exit_code = last_exit;
  return report;
}

Report cmd_eval(const Script& script, const RunConfig& cfg) {
  Report report;
  SessionState st = initial_state(cfg);
  for (const auto& c : script.commands) {
    if (c.as<CheckSatBoundedCmd>()) {
      add_entry(report, "notice", "; check-sat-bounded skipped (eval mode)",
                json{{"skipped", "check-sat-bounded"}});
      continue;
    }
    if (auto* ev = c.as<EvalCmd>()) {
      run_eval(st, *ev, report);
      continue;
    }
    apply_decl(st, c, cfg, report);
  }
  report.exit_code = kExitSat;
  return report;
}

const char* to_string(OverflowCategory c) {
  switch (c) {
    case OverflowCategory::Empty: return "empty";
    case OverflowCategory::None: return "no-overflow";
    case OverflowCategory::Left: return "left-overflow";
    case OverflowCategory::Right: return "right-overflow";
    case OverflowCategory::LeftRight: return "left-right-overflow";
  }
  return "?";
}

OverflowCategory classify_update_overflow(long long i, long long len1,
                                          long long len2) {
  if (len2 == 0) return OverflowCategory::Empty;
  bool left = i < 0;
  bool right = i + len2 > len1;
  if (left && right) return OverflowCategory::LeftRight;
  if (left) return OverflowCategory::Left;
  if (right) return OverflowCategory::Right;
  return OverflowCategory::None;
}

Report cmd_diff(const Script& script, const RunConfig& cfg, SemanticsProfile a,
                SemanticsProfile b) {
  Report report;
  SessionState st = initial_state(cfg);
  Term target;
  for (const auto& c : script.commands) {
    if (c.as<CheckSatBoundedCmd>()) continue;
    if (auto* ev = c.as<EvalCmd>()) {
      target = ev->term;
      continue;
    }
    apply_decl(st, c, cfg, report);
  }
  if (target.is_null())
    throw SeqkitError(ErrorKind::BadCommand,
                      "diff needs an (eval ...) command naming the term");

  auto t0 = std::chrono::steady_clock::now();
  std::vector<EquivWitness> witnesses =
      diff_profiles(target, st.bounds, a, b, oracle_opts(st, cfg));

  bool is_update = target.kind() == TermKind::App &&
                   target.symbol() == SymbolId::SeqUpdate;
  std::vector<OverflowCategory> cats;
  std::map<std::string, std::uint64_t> counts;
  if (is_update) {
    counts = {{"empty", 0},
              {"no-overflow", 0},
              {"left-overflow", 0},
              {"right-overflow", 0},
              {"left-right-overflow", 0}};
    EvalConfig eca{a, st.bounds, st.arrc_slice};
    for (const auto& w : witnesses) {
      ValueEnv base = w.model.base;
      for (const auto& [name, val] : st.fixed) base.emplace(name, val);
      StrictTokenSink sink(w.model.tokens);
      long long i = eval(target.child(1), base, sink, eca).as_int();
      long long len1 = static_cast<long long>(
          eval(target.child(0), base, sink, eca).seq().elems.size());
      long long len2 = static_cast<long long>(
          eval(target.child(2), base, sink, eca).seq().elems.size());
      OverflowCategory cat = classify_update_overflow(i, len1, len2);
      cats.push_back(cat);
      ++counts[to_string(cat)];
    }
  }

  std::string la = to_string(a);
  std::string lb = to_string(b);
  std::string text = "diff " + la + " vs " + lb + " on " + print_term(target) +
                     ": " + std::to_string(witnesses.size()) + " divergences";
  json j{{"left-profile", la},
         {"right-profile", lb},
         {"term", print_term(target)},
         {"divergences", witnesses.size()},
         {"ms", elapsed_ms(t0)}};
  if (is_update) {
    for (const auto& [name, n] : counts)
      text += "\ncategory " + name + ": " + std::to_string(n);
    j["categories"] = counts;
  }
  add_entry(report, "diff", std::move(text), j);

  for (size_t k = 0; k < witnesses.size() && k < kMaxPrintedWitnesses; ++k) {
    std::string head = "; witness " + std::to_string(k + 1);
    if (is_update) head += " [" + std::string(to_string(cats[k])) + "]";
    json wj = witness_json(witnesses[k], la.c_str(), lb.c_str());
    if (is_update) wj["category"] = to_string(cats[k]);
    add_entry(report, "witness",
              head + "\n" +
                  witness_text(witnesses[k], la.c_str(), lb.c_str()),
              wj);
  }
  if (witnesses.size() > kMaxPrintedWitnesses)
    add_entry(report, "notice",
              "; " +
                  std::to_string(witnesses.size() - kMaxPrintedWitnesses) +
                  " further witnesses not printed",
              json{{"suppressed", witnesses.size() - kMaxPrintedWitnesses}});
  report.exit_code = kExitSat;
  return report;
}

Report cmd_reduce(const Script& script, const RunConfig& cfg) {
  Report report;
  SessionState st = initial_state(cfg);
  int exit_code = kExitSat;
  for (const auto& c : script.commands) {
    Term original;
    Term reduced;
    std::string line;
    if (auto* as = c.as<AssertCmd>()) {
      ReduceConfig rc{st.bounds.delta_int};
      original = as->formula;
      reduced = reduce_to_arrayc(original, rc);
      line = "(assert " + print_term(reduced) + ")";
      st.asserts.push_back(as->formula);
    } else if (auto* ev = c.as<EvalCmd>()) {
      ReduceConfig rc{st.bounds.delta_int};
      original = ev->term;
      reduced = reduce_to_arrayc(original, rc);
      line = "(eval " + print_term(reduced) + ")";
    } else {
      if (!c.as<CheckSatBoundedCmd>()) apply_decl(st, c, cfg, report);
      line = command_source(c);
      add_entry(report, "reduce", line, json{{"line", line}});
      continue;
    }
    add_entry(report, "reduce", line,
              json{{"line", line}, {"origin", print_term(original)}});
    if (cfg.verify) {
      EquivResult r =
          check_equiv_bounded(original, reduced, st.bounds, st.profile,
                              SemanticsProfile::ArrayC, oracle_opts(st, cfg));
      if (r.unknown) {
        add_entry(report, "verify", "; verify inconclusive: " + r.reason,
                  json{{"equivalent", nullptr}, {"reason", r.reason}});
        exit_code = kExitUnknown;
      } else if (r.equivalent) {
        add_entry(report, "verify",
                  "; verified equivalent to origin (" +
                      std::to_string(r.evaluations) + " evaluations)",
                  json{{"equivalent", true}, {"evaluations", r.evaluations}});
      } else {
        const EquivWitness& w = r.witnesses.front();
        add_entry(report, "verify",
                  "; DIVERGES from origin under " +
                      std::string(to_string(st.profile)) + " vs arrayc\n" +
                      witness_text(w, "origin", "reduced"),
                  json{{"equivalent", false},
                       {"witness", witness_json(w, "origin", "reduced")}});
      }
    }
  }
  report.exit_code = exit_code;
  return report;
}

Report cmd_lemmas(SchemaName schema, int arity, const RunConfig& cfg) {
  Report report;
  Sort elem = Sort::elem("E");
  std::vector<Term> holes = default_holes(schema, arity, elem);
  std::vector<GroundLemma> lemmas =
      instantiate(AxiomSchema{schema, arity}, holes, cfg.bounds);
  for (const auto& lemma : lemmas) {
    std::string text = "; " + lemma.provenance + "\n";
    SortEnv fv = free_vars(lemma.formula);
    std::set<std::string> elem_names;
    for (const auto& [name, sort] : fv) collect_elem_sorts(sort, elem_names);
    for (const auto& name : elem_names)
      text += "(declare-sort " + name + " 0)\n";
    for (const auto& [name, sort] : fv) {
      if (sort.is_fn()) {
        text += "(declare-fun " + name + " (";
        const auto& args = sort.fn_args();
        for (size_t i = 0; i < args.size(); ++i) {
          if (i) text += ' ';
          text += print_sort(args[i]);
        }
        text += ") " + print_sort(sort.fn_ret()) + ")\n";
      } else {
        text += "(declare-const " + name + " " + print_sort(sort) + ")\n";
      }
    }
    text += "(assert " + print_term(lemma.formula) + ")\n(check-sat-bounded)";
    add_entry(report, "lemmas", std::move(text),
              json{{"schema", to_string(schema)},
                   {"arity", arity},
                   {"provenance", lemma.provenance},
                   {"formula", print_term(lemma.formula)}});
  }
  report.exit_code = kExitSat;
  return report;
}

Report cmd_fragment_check(const Script& script, const RunConfig& cfg) {
  Report report;
  SessionState st = initial_state(cfg);
  bool offenders_found = false;
  size_t index = 0;
  for (const auto& c : script.commands) {
    Term t;
    if (auto* as = c.as<AssertCmd>()) {
      t = as->formula;
    } else if (auto* ev = c.as<EvalCmd>()) {
      t = ev->term;
    } else {
      if (!c.as<CheckSatBoundedCmd>()) apply_decl(st, c, cfg, report);
      continue;
    }
    ++index;
    std::string label = "term " + std::to_string(index);
    FragmentCheck fc = in_fragment(t);
    if (fc.in_fragment) {
      add_entry(report, "fragment", label + ": in fragment",
                json{{"term", print_term(t)}, {"in_fragment", true}});
    } else {
      offenders_found = true;
      std::string text = label + ": NOT in fragment:";
      json names = json::array();
      for (const auto& o : fc.offenders) {
        text += " " + o.name;
        if (!o.hint.empty()) text += " (" + o.hint + ")";
        names.push_back(json{{"symbol", o.name}, {"hint", o.hint}});
      }
      add_entry(report, "fragment", std::move(text),
                json{{"term", print_term(t)},
                     {"in_fragment", false},
                     {"offenders", names}});
    }
    ShiftReport sr = detect_index_shifting(t);
    for (const auto& w : sr.witnesses) {
      add_entry(report, "index-shifting",
                label + ": index shifting on " + w.var + " over " +
                    print_term(w.seq) + " at offsets " +
                    std::to_string(w.offset_a) + " and " +
                    std::to_string(w.offset_b),
                json{{"var", w.var},
                     {"seq", print_term(w.seq)},
                     {"offset_a", w.offset_a},
                     {"offset_b", w.offset_b}});
    }
  }
  report.exit_code = offenders_found ? kExitNotInFragment : kExitSat;
  return report;
}

AuditResult audit_witness(const std::vector<Term>& asserts, const Model& model,
                          const RunConfig& cfg) {
  try {
    std::set<std::string> elem_sorts;
    for (const auto& [name, val] : model.base)
      collect_elem_sorts(val.sort_hint(), elem_sorts);
    for (const auto& [key, val] : model.tokens) {
      for (const auto& a : key.args)
        collect_elem_sorts(a.sort_hint(), elem_sorts);
      collect_elem_sorts(val.sort_hint(), elem_sorts);
    }
    std::string text;
    for (const auto& name : elem_sorts)
      text += "(declare-sort " + name + " 0)\n";
    text += print_model(model);

    Script script = parse_script(text, "<witness>");
    EvalConfig ecfg{cfg.profile, cfg.bounds, cfg.arrc_slice};
    TokenAssignment none;
    StrictTokenSink ground(none);
    ValueEnv env;
    TokenAssignment tokens;
    for (const auto& c : script.commands) {
      if (auto* def = c.as<DefineFunCmd>()) {
        if (def->params.empty()) {
          env[def->name] = eval(def->body, env, ground, ecfg);
        } else {
          std::vector<Sort> args;
          for (const auto& p : def->params) args.push_back(p.second);
          env[def->name] = Value::fn_def(
              Sort::fn(std::move(args), def->ret),
              std::make_shared<FnDef>(FnDef{def->name, def->params, def->body}));
        }
      } else if (auto* ud = c.as<UndefCmd>()) {
        TokenKey key;
        key.symbol = symbol_name(ud->application.symbol());
        for (const auto& arg : ud->application.args())
          key.args.push_back(eval(arg, env, ground, ecfg));
        tokens[key] = eval(ud->value, env, ground, ecfg);
      }
    }

    for (const auto& [name, val] : model.base) {
      if (val.kind() == ValueKind::Fn) continue;  // no value equality for these
      auto it = env.find(name);
      if (it == env.end())
        return {false, name + " missing after the round-trip"};
      if (!it->second.equals(val))
        return {false, name + " changed in the round-trip"};
    }
    if (tokens.size() != model.tokens.size())
      return {false, "token set changed in the round-trip"};
    for (const auto& [key, val] : model.tokens) {
      auto it = tokens.find(key);
      if (it == tokens.end())
        return {false, "a token went missing in the round-trip"};
      if (!it->second.equals(val))
        return {false, "a token value changed in the round-trip"};
    }

    StrictTokenSink sink(tokens);
    for (size_t i = 0; i < asserts.size(); ++i) {
      Value v = eval(asserts[i], env, sink, ecfg);
      if (!v.as_bool())
        return {false, "assert " + std::to_string(i + 1) +
                           " evaluated to false under the re-parsed witness"};
    }
    return {true, std::to_string(asserts.size()) +
                      " asserts re-checked against the re-parsed witness"};
  } catch (const SeqkitError& e) {
    return {false, e.what()};
  }
}

}  // namespace seqkit
