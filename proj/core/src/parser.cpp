#include "seqkit/parser.hpp"

#include <cctype>
#include <map>
#include <set>

#include "seqkit/error.hpp"

namespace seqkit {

namespace {

struct Sexp {
  bool atom = false;
  std::string text;         // atom spelling
  std::vector<Sexp> items;  // list members
  Position pos;

  bool is(const char* s) const { return atom && text == s; }
};

[[noreturn]] void fail(const Position& pos, ErrorKind kind,
                       const std::string& msg) {
  throw SeqkitError(kind, msg, pos);
}

class Reader {
 public:
  Reader(const std::string& text, std::string filename)
      : text_(text), filename_(std::move(filename)) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    skip_space();
    while (!eof()) {
      out.push_back(read_one());
      skip_space();
    }
    return out;
  }

 private:
  bool eof() const { return i_ >= text_.size(); }
  char peek() const { return text_[i_]; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Position here() const { return Position{line_, col_}; }

  [[noreturn]] void fail_here(const std::string& msg) const {
    std::string m = filename_.empty() ? msg : filename_ + ": " + msg;
    fail(here(), ErrorKind::Syntax, m);
  }

  Sexp read_one() {
    skip_space();
    if (eof()) fail_here("unexpected end of input");
    Sexp node;
    node.pos = here();
    char c = peek();
    if (c == '(') {
      advance();
      skip_space();
      while (!eof() && peek() != ')') {
        node.items.push_back(read_one());
        skip_space();
      }
      if (eof()) {
        std::string m = "unclosed '(' opened at " + node.pos.to_string();
        if (!filename_.empty()) m = filename_ + ": " + m;
        fail(node.pos, ErrorKind::Syntax, m);
      }
      advance();  // ')'
      return node;
    }
    if (c == ')') fail_here("unmatched ')'");
    node.atom = true;
    while (!eof()) {
      c = peek();
      if (c == '(' || c == ')' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c)))
        break;
      node.text += c;
      advance();
    }
    return node;
  }

  const std::string& text_;
  std::string filename_;
  size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct FnMacro {
  std::vector<std::pair<std::string, Sort>> params;
  Sort ret;
  Term body;
};

struct Ctx {
  std::set<std::string> sorts;               // declared element sort names
  SortEnv consts;                            // declare-const / declare-fun
  std::map<std::string, FnMacro> defs;       // define-fun macros
};

bool is_numeral(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

long long to_numeral(const Sexp& a) {
  try {
    return std::stoll(a.text);
  } catch (const std::exception&) {
    fail(a.pos, ErrorKind::Syntax, "integer literal out of range: " + a.text);
  }
}

Sort parse_sort(const Sexp& s, const Ctx& ctx) {
  if (s.atom) {
    if (s.text == "Bool") return Sort::boolean();
    if (s.text == "Int") return Sort::integer();
    if (ctx.sorts.count(s.text)) return Sort::elem(s.text);
    fail(s.pos, ErrorKind::UnknownSymbol, "unknown sort: " + s.text);
  }
  if (!s.items.empty() && s.items[0].is("Seq") && s.items.size() == 2)
    return Sort::seq(parse_sort(s.items[1], ctx));
  if (!s.items.empty() && s.items[0].is("->") && s.items.size() >= 3) {
    std::vector<Sort> args;
    for (size_t i = 1; i + 1 < s.items.size(); ++i)
      args.push_back(parse_sort(s.items[i], ctx));
    return Sort::fn(std::move(args), parse_sort(s.items.back(), ctx));
  }
  fail(s.pos, ErrorKind::Syntax, "malformed sort");
}

Term parse_term_sexp(const Sexp& s, const Ctx& ctx, SortEnv& locals);

// Rethrows construction errors with the source position attached.
template <class F>
Term at_pos(const Position& pos, F&& build) {
  try {
    return build();
  } catch (const SeqkitError& e) {
    if (e.pos() && e.pos()->known()) throw;
    throw SeqkitError(e.kind(), e.what(), pos);
  }
}

std::vector<Term> parse_args(const Sexp& s, const Ctx& ctx, SortEnv& locals) {
  std::vector<Term> args;
  for (size_t i = 1; i < s.items.size(); ++i)
    args.push_back(parse_term_sexp(s.items[i], ctx, locals));
  return args;
}

void need_count(const Sexp& s, size_t n, const char* what) {
  if (s.items.size() != n + 1)
    fail(s.pos, ErrorKind::ArityMismatch,
         std::string(what) + " expects " + std::to_string(n) + " arguments");
}

Term chain_pairwise(const Sexp& s, std::vector<Term> args,
                    Term (*rel)(Term, Term)) {
  if (args.size() < 2)
    fail(s.pos, ErrorKind::ArityMismatch, "relation needs two arguments");
  std::vector<Term> conj;
  for (size_t i = 0; i + 1 < args.size(); ++i)
    conj.push_back(rel(args[i], args[i + 1]));
  return mk::and_(std::move(conj));
}

Term parse_let(const Sexp& s, const Ctx& ctx, SortEnv& locals) {
  if (s.items.size() != 3 || s.items[1].atom)
    fail(s.pos, ErrorKind::Syntax, "let expects a binding list and a body");
  const auto& binds = s.items[1].items;
  if (binds.empty()) fail(s.pos, ErrorKind::Syntax, "empty let binding list");

  std::vector<std::pair<std::string, Term>> bound;
  for (const auto& b : binds) {
    if (b.atom || b.items.size() != 2 || !b.items[0].atom)
      fail(b.pos, ErrorKind::Syntax, "let binding must be (name term)");
    for (const auto& seen : bound)
      if (seen.first == b.items[0].text)
        fail(b.pos, ErrorKind::Syntax,
             "duplicate let binder " + b.items[0].text);
    // Parallel let: every bound term sees only the outer scope.
    bound.emplace_back(b.items[0].text, parse_term_sexp(b.items[1], ctx, locals));
  }

  SortEnv inner = locals;
  for (const auto& [name, t] : bound) inner[name] = t.sort();
  Term body = parse_term_sexp(s.items[2], ctx, inner);

  if (bound.size() == 1)
    return at_pos(s.pos, [&] {
      return mk::let_(bound[0].first, bound[0].second, body);
    });

  // Rename the binders apart so nesting preserves the parallel reading.
  std::vector<Term> avoid{body};
  for (const auto& [name, t] : bound) avoid.push_back(t);
  std::map<std::string, Term> rename;
  std::vector<std::string> fresh;
  for (const auto& [name, t] : bound) {
    std::string z = fresh_name(name + "!p", avoid);
    fresh.push_back(z);
    Term zv = mk::var(z, t.sort());
    avoid.push_back(zv);
    rename.emplace(name, zv);
  }
  Term result = substitute(body, rename);
  for (size_t i = bound.size(); i-- > 0;)
    result = mk::let_(fresh[i], bound[i].second, result);
  return result;
}

Term parse_forall(const Sexp& s, const Ctx& ctx, SortEnv& locals) {
  if (s.items.size() != 3 || s.items[1].atom)
    fail(s.pos, ErrorKind::Syntax, "forall expects a binder list and a body");
  const auto& binders = s.items[1].items;
  if (binders.empty()) fail(s.pos, ErrorKind::Syntax, "empty binder list");
  std::vector<std::string> names;
  for (const auto& b : binders) {
    if (b.atom || b.items.size() != 2 || !b.items[0].atom)
      fail(b.pos, ErrorKind::Syntax, "binder must be (name sort)");
    Sort sort = parse_sort(b.items[1], ctx);
    if (!sort.is_int())
      fail(b.pos, ErrorKind::SortMismatch,
           "quantified variables must have sort Int");
    names.push_back(b.items[0].text);
  }
  SortEnv inner = locals;
  for (const auto& n : names) inner[n] = Sort::integer();
  Term body = parse_term_sexp(s.items[2], ctx, inner);
  for (size_t i = names.size(); i-- > 0;)
    body = at_pos(s.pos, [&] { return mk::forall(names[i], body); });
  return body;
}

Term parse_as(const Sexp& s, const Ctx& ctx) {
  if (s.items.size() != 3)
    fail(s.pos, ErrorKind::Syntax, "as expects a symbol and a sort");
  const Sexp& what = s.items[1];
  Sort sort = parse_sort(s.items[2], ctx);
  if (what.is("seq.empty")) {
    if (!sort.is_seq())
      fail(s.pos, ErrorKind::SortMismatch,
           "seq.empty needs a (Seq _) annotation");
    return mk::empty(sort.seq_elem());
  }
  if (what.atom && what.text.size() > 2 && what.text[0] == '@' &&
      what.text[1] == 'e' && is_numeral(what.text.substr(2))) {
    if (!sort.is_elem())
      fail(s.pos, ErrorKind::SortMismatch,
           "element literals need an element sort");
    return at_pos(s.pos, [&] {
      return mk::elem_lit(sort, static_cast<int>(std::stoll(what.text.substr(2))));
    });
  }
  fail(s.pos, ErrorKind::Syntax, "unsupported as-expression");
}

Term name_to_term(const Sexp& a, const Ctx& ctx, SortEnv& locals) {
  auto lit = locals.find(a.text);
  if (lit != locals.end()) return mk::var(a.text, lit->second);
  auto cit = ctx.consts.find(a.text);
  if (cit != ctx.consts.end()) return mk::var(a.text, cit->second);
  auto dit = ctx.defs.find(a.text);
  if (dit != ctx.defs.end()) {
    const FnMacro& d = dit->second;
    if (d.params.empty()) return d.body;  // defined constant, expand in place
    std::vector<Sort> args;
    for (const auto& p : d.params) args.push_back(p.second);
    return mk::var(a.text, Sort::fn(std::move(args), d.ret));
  }
  if (lookup_symbol(a.text)) {
    if (a.text == "seq.empty")
      fail(a.pos, ErrorKind::Syntax,
           "seq.empty needs its sort: (as seq.empty (Seq S))");
    fail(a.pos, ErrorKind::Syntax,
         a.text + " is an operator and needs arguments");
  }
  fail(a.pos, ErrorKind::UnknownSymbol, "unknown symbol: " + a.text);
}

Term parse_term_sexp(const Sexp& s, const Ctx& ctx, SortEnv& locals) {
  if (s.atom) {
    if (is_numeral(s.text)) return mk::int_lit(to_numeral(s));
    if (s.text == "true") return mk::bool_lit(true);
    if (s.text == "false") return mk::bool_lit(false);
    return name_to_term(s, ctx, locals);
  }
  if (s.items.empty()) fail(s.pos, ErrorKind::Syntax, "empty expression");
  const Sexp& head = s.items[0];
  if (!head.atom)
    fail(head.pos, ErrorKind::Syntax, "expression head must be a symbol");
  const std::string& op = head.text;

  if (op == "as") return parse_as(s, ctx);
  if (op == "let") return parse_let(s, ctx, locals);
  if (op == "forall") return parse_forall(s, ctx, locals);
  if (op == "exists")
    fail(s.pos, ErrorKind::Syntax, "exists is not supported");
  if (op == "ite") {
    need_count(s, 3, "ite");
    auto args = parse_args(s, ctx, locals);
    return at_pos(s.pos, [&] { return mk::ite(args[0], args[1], args[2]); });
  }
  if (op == "=") {
    auto args = parse_args(s, ctx, locals);
    return at_pos(s.pos, [&] { return chain_pairwise(s, args, mk::eq); });
  }
  if (op == "and")
    return at_pos(s.pos,
                  [&] { return mk::and_(parse_args(s, ctx, locals)); });
  if (op == "or")
    return at_pos(s.pos, [&] { return mk::or_(parse_args(s, ctx, locals)); });
  if (op == "not") {
    need_count(s, 1, "not");
    return at_pos(s.pos,
                  [&] { return mk::not_(parse_term_sexp(s.items[1], ctx, locals)); });
  }
  if (op == "=>") {
    auto args = parse_args(s, ctx, locals);
    if (args.size() < 2)
      fail(s.pos, ErrorKind::ArityMismatch, "=> needs two arguments");
    return at_pos(s.pos, [&] {
      Term r = args.back();
      for (size_t i = args.size() - 1; i-- > 0;) r = mk::implies(args[i], r);
      return r;
    });
  }
  if (op == "<=" || op == "<" || op == ">=" || op == ">") {
    auto args = parse_args(s, ctx, locals);
    return at_pos(s.pos, [&] {
      if (op == "<=") return chain_pairwise(s, args, mk::le);
      if (op == "<") return chain_pairwise(s, args, mk::lt);
      if (op == ">=")
        return chain_pairwise(s, args, [](Term a, Term b) {
          return mk::le(std::move(b), std::move(a));
        });
      return chain_pairwise(s, args, [](Term a, Term b) {
        return mk::lt(std::move(b), std::move(a));
      });
    });
  }
  if (op == "+" || op == "-" || op == "*") {
    auto args = parse_args(s, ctx, locals);
    return at_pos(s.pos, [&] {
      if (args.empty())
        fail(s.pos, ErrorKind::ArityMismatch, op + " needs arguments");
      if (op == "-" && args.size() == 1) {
        if (args[0].kind() == TermKind::IntLit)
          return mk::int_lit(-args[0].int_value());
        return mk::sub(mk::int_lit(0), args[0]);
      }
      if (args.size() < 2)
        fail(s.pos, ErrorKind::ArityMismatch, op + " needs two arguments");
      if (op == "*" && args.size() != 2)
        fail(s.pos, ErrorKind::ArityMismatch, "* takes exactly two arguments");
      Term r = args[0];
      for (size_t i = 1; i < args.size(); ++i) {
        if (op == "+") r = mk::add(r, args[i]);
        else if (op == "-") r = mk::sub(r, args[i]);
        else r = mk::mul(r, args[i]);
      }
      return r;
    });
  }

  if (const SymbolDecl* decl = lookup_symbol(op)) {
    auto args = parse_args(s, ctx, locals);
    return at_pos(s.pos, [&]() -> Term {
      if (decl->id == SymbolId::SeqEmpty)
        fail(s.pos, ErrorKind::Syntax,
             "seq.empty needs its sort: (as seq.empty (Seq S))");
      if (decl->id == SymbolId::SeqIndexof && args.size() == 2)
        args.push_back(mk::int_lit(0));  // missing start index means 0
      return mk::app(decl->id, std::move(args));
    });
  }

  // Applied user name: define-fun inlines, declared functions stay symbolic.
  auto dit = ctx.defs.find(op);
  if (dit != ctx.defs.end() && !dit->second.params.empty()) {
    const FnMacro& d = dit->second;
    auto args = parse_args(s, ctx, locals);
    if (args.size() != d.params.size())
      fail(s.pos, ErrorKind::ArityMismatch,
           op + " expects " + std::to_string(d.params.size()) + " arguments");
    std::map<std::string, Term> subst;
    for (size_t i = 0; i < args.size(); ++i) {
      if (!(args[i].sort() == d.params[i].second))
        fail(s.items[1 + i].pos, ErrorKind::SortMismatch,
             op + " argument " + std::to_string(i + 1) + " must have sort " +
                 d.params[i].second.to_string());
      subst.emplace(d.params[i].first, args[i]);
    }
    return at_pos(s.pos, [&] { return substitute(d.body, subst); });
  }

  Term headt;
  auto lit = locals.find(op);
  auto cit = ctx.consts.find(op);
  if (lit != locals.end() && lit->second.is_fn())
    headt = mk::var(op, lit->second);
  else if (cit != ctx.consts.end() && cit->second.is_fn())
    headt = mk::var(op, cit->second);
  else if (lit != locals.end() || cit != ctx.consts.end())
    fail(head.pos, ErrorKind::SortMismatch, op + " is not a function");
  else
    fail(head.pos, ErrorKind::UnknownSymbol, "unknown symbol: " + op);

  auto args = parse_args(s, ctx, locals);
  return at_pos(s.pos,
                [&] { return mk::fn_apply(std::move(headt), std::move(args)); });
}

void need_new_name(const Sexp& at, const Ctx& ctx, const std::string& name) {
  if (ctx.consts.count(name) || ctx.defs.count(name) || lookup_symbol(name) ||
      name == "true" || name == "false")
    fail(at.pos, ErrorKind::BadCommand, name + " is already declared");
}

Command parse_command(const Sexp& s, Ctx& ctx) {
  if (s.atom || s.items.empty() || !s.items[0].atom)
    fail(s.pos, ErrorKind::BadCommand, "expected a (command ...) form");
  const std::string& op = s.items[0].text;
  Command cmd;
  cmd.pos = s.pos;
  SortEnv no_locals;

  if (op == "declare-sort") {
    if (s.items.size() < 2 || s.items.size() > 3 || !s.items[1].atom)
      fail(s.pos, ErrorKind::BadCommand, "declare-sort expects a name");
    if (s.items.size() == 3 && !s.items[2].is("0"))
      fail(s.items[2].pos, ErrorKind::BadCommand,
           "only arity 0 sorts are supported");
    const std::string& name = s.items[1].text;
    if (name == "Bool" || name == "Int" || name == "Seq" ||
        ctx.sorts.count(name))
      fail(s.items[1].pos, ErrorKind::BadCommand,
           "sort " + name + " is already declared");
    ctx.sorts.insert(name);
    cmd.data = DeclareSortCmd{name};
    return cmd;
  }
  if (op == "declare-const") {
    if (s.items.size() != 3 || !s.items[1].atom)
      fail(s.pos, ErrorKind::BadCommand,
           "declare-const expects a name and a sort");
    need_new_name(s.items[1], ctx, s.items[1].text);
    Sort sort = parse_sort(s.items[2], ctx);
    if (sort.is_fn())
      fail(s.items[2].pos, ErrorKind::BadCommand,
           "use declare-fun for function sorts");
    ctx.consts.emplace(s.items[1].text, sort);
    cmd.data = DeclareConstCmd{s.items[1].text, sort};
    return cmd;
  }
  if (op == "declare-fun") {
    if (s.items.size() != 4 || !s.items[1].atom || s.items[2].atom)
      fail(s.pos, ErrorKind::BadCommand,
           "declare-fun expects a name, argument sorts, and a result sort");
    need_new_name(s.items[1], ctx, s.items[1].text);
    Sort ret = parse_sort(s.items[3], ctx);
    Sort sort;
    if (s.items[2].items.empty()) {
      if (ret.is_fn())
        fail(s.items[3].pos, ErrorKind::BadCommand,
             "function results must be first-order");
      sort = ret;
    } else {
      std::vector<Sort> args;
      for (const auto& a : s.items[2].items)
        args.push_back(parse_sort(a, ctx));
      sort = Sort::fn(std::move(args), ret);
    }
    ctx.consts.emplace(s.items[1].text, sort);
    cmd.data = DeclareConstCmd{s.items[1].text, sort};
    return cmd;
  }
  if (op == "define-fun" || op == "define-const") {
    bool sugar = op == "define-const";
    size_t want = sugar ? 4 : 5;
    if (s.items.size() != want || !s.items[1].atom ||
        (!sugar && s.items[2].atom))
      fail(s.pos, ErrorKind::BadCommand, op + " is malformed");
    need_new_name(s.items[1], ctx, s.items[1].text);
    DefineFunCmd def;
    def.name = s.items[1].text;
    SortEnv locals;
    if (!sugar) {
      for (const auto& p : s.items[2].items) {
        if (p.atom || p.items.size() != 2 || !p.items[0].atom)
          fail(p.pos, ErrorKind::BadCommand, "parameter must be (name sort)");
        Sort ps = parse_sort(p.items[1], ctx);
        if (ps.is_fn())
          fail(p.items[1].pos, ErrorKind::BadCommand,
               "parameters must be first-order");
        if (locals.count(p.items[0].text))
          fail(p.items[0].pos, ErrorKind::BadCommand,
               "duplicate parameter " + p.items[0].text);
        locals.emplace(p.items[0].text, ps);
        def.params.emplace_back(p.items[0].text, ps);
      }
    }
    def.ret = parse_sort(s.items[sugar ? 2 : 3], ctx);
    def.body = parse_term_sexp(s.items[sugar ? 3 : 4], ctx, locals);
    if (!(def.body.sort() == def.ret))
      fail(s.items[sugar ? 3 : 4].pos, ErrorKind::SortMismatch,
           "body has sort " + def.body.sort().to_string() + ", declared " +
               def.ret.to_string());
    ctx.defs.emplace(def.name, FnMacro{def.params, def.ret, def.body});
    cmd.data = std::move(def);
    return cmd;
  }
  if (op == "assert") {
    need_count(s, 1, "assert");
    Term t = parse_term_sexp(s.items[1], ctx, no_locals);
    if (!t.sort().is_bool())
      fail(s.items[1].pos, ErrorKind::SortMismatch,
           "asserted term must be Bool, got " + t.sort().to_string());
    cmd.data = AssertCmd{std::move(t)};
    return cmd;
  }
  if (op == "check-sat-bounded" || op == "check-sat") {
    if (s.items.size() != 1)
      fail(s.pos, ErrorKind::BadCommand, op + " takes no arguments");
    cmd.data = CheckSatBoundedCmd{};
    return cmd;
  }
  if (op == "eval") {
    need_count(s, 1, "eval");
    cmd.data = EvalCmd{parse_term_sexp(s.items[1], ctx, no_locals)};
    return cmd;
  }
  if (op == "set-option") {
    if (s.items.size() != 3 || !s.items[1].atom || !s.items[2].atom)
      fail(s.pos, ErrorKind::BadCommand,
           "set-option expects a :key and a value");
    std::string key = s.items[1].text;
    if (key.empty() || key[0] != ':')
      fail(s.items[1].pos, ErrorKind::BadCommand,
           "option keys start with ':'");
    cmd.data = SetOptionCmd{key.substr(1), s.items[2].text};
    return cmd;
  }
  if (op == "undef") {
    need_count(s, 2, "undef");
    Term application = parse_term_sexp(s.items[1], ctx, no_locals);
    if (application.kind() != TermKind::App)
      fail(s.items[1].pos, ErrorKind::BadCommand,
           "undef expects a sequence-operation application");
    Term value = parse_term_sexp(s.items[2], ctx, no_locals);
    if (!(value.sort() == application.sort()))
      fail(s.items[2].pos, ErrorKind::SortMismatch,
           "undef value sort " + value.sort().to_string() +
               " does not match the application");
    cmd.data = UndefCmd{std::move(application), std::move(value)};
    return cmd;
  }
  fail(s.pos, ErrorKind::BadCommand, "unknown command: " + op);
}

}  // namespace

Script parse_script(const std::string& text, const std::string& filename) {
  Reader reader(text, filename);
  std::vector<Sexp> sexps = reader.read_all();
  Ctx ctx;
  Script script;
  for (const auto& s : sexps) script.commands.push_back(parse_command(s, ctx));
  return script;
}

Term parse_term(const std::string& text, const SortEnv& vars,
                const std::vector<std::string>& sorts) {
  Reader reader(text, "");
  std::vector<Sexp> sexps = reader.read_all();
  if (sexps.size() != 1)
    fail(sexps.empty() ? Position{1, 1} : sexps[1].pos, ErrorKind::Syntax,
         "expected exactly one term");
  Ctx ctx;
  for (const auto& s : sorts) ctx.sorts.insert(s);
  ctx.consts = vars;
  SortEnv locals;
  return parse_term_sexp(sexps[0], ctx, locals);
}

}  // namespace seqkit
