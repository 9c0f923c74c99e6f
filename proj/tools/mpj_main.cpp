#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpj/compress.hpp"
#include "mpj/json_io.hpp"
#include "mpj/regex_lite.hpp"

namespace {

using namespace mpj;

struct CliConfig {
  int enumeration_bound = 10;
  uint64_t seed = 1;
  std::string format = "text";
  int parallelism = 1;
};

const char* yn(bool b) { return b ? "yes" : "no"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void emit(const CliConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

/// A positional that is either a file (expression or DFA JSON) or a
/// regex-lite pattern.
struct LangInput {
  std::optional<LangExpr> expr;
  std::optional<Dfa> dfa;
};

LangInput load_lang(const std::string& input) {
  if (std::filesystem::exists(input)) {
    Json j = read_json_file(input);
    if (j.contains("transitions")) return {std::nullopt, dfa_from_json(j)};
    return {expr_from_json(j), std::nullopt};
  }
  return {parse_regex_lite(input), std::nullopt};
}

LangExpr load_expr(const std::string& input) {
  LangInput li = load_lang(input);
  if (!li.expr) throw Error(input + " holds a DFA where an expression is needed");
  return *li.expr;
}

int cmd_classify(const CliConfig& cfg, const std::string& input,
                 const std::vector<int>& pt_ks) {
  LangInput li = load_lang(input);
  Dfa d = li.dfa ? *li.dfa : compile(*li.expr);
  SyntacticMonoid syn = syntactic_monoid(d);
  const FiniteMonoid& m = *syn.morphism.target;
  VarietyCheck in_a = check_variety(m, Variety::kA);
  VarietyCheck in_da = check_variety(m, Variety::kDA);
  VarietyCheck in_j = check_variety(m, Variety::kJ);
  LocalJCheck lj = is_locally_J(*syntactic_semigroup(d).semigroup);
  StableStructure stable = stable_pair(syn.morphism);
  VarietyCheck q_a = check_variety(stable.monoid, Variety::kA);
  VarietyCheck q_da = check_variety(stable.monoid, Variety::kDA);
  VarietyCheck q_j = check_variety(stable.monoid, Variety::kJ);

  Json j{{"input", input},
         {"states", d.states()},
         {"monoid_size", m.size()},
         {"omega", m.omega()},
         {"varieties", Json{{"A", in_a.holds}, {"DA", in_da.holds}, {"J", in_j.holds}}},
         {"locally_J", lj.holds},
         {"stable", Json{{"k", stable.k},
                         {"monoid_size", stable.monoid.size()},
                         {"quasi_A", q_a.holds},
                         {"quasi_DA", q_da.holds},
                         {"quasi_J", q_j.holds}}}};
  std::ostringstream text;
  if (li.expr) text << "language: " << li.expr->pretty() << "\n";
  text << "minimal DFA: " << d.states() << " states\n"
       << "syntactic monoid: " << m.size() << " elements, omega " << m.omega()
       << "\n"
       << "  A: " << yn(in_a.holds) << "\n  DA: " << yn(in_da.holds)
       << "\n  J: " << yn(in_j.holds) << "\n"
       << "locally J: " << yn(lj.holds) << "\n"
       << "stable monoid (k = " << stable.k << "): " << stable.monoid.size()
       << " elements\n"
       << "  quasi-A: " << yn(q_a.holds) << "\n  quasi-DA: " << yn(q_da.holds)
       << "\n  quasi-J: " << yn(q_j.holds) << "\n";
  if (!pt_ks.empty()) {
    Json pt = Json::object();
    for (int k : pt_ks) {
      bool is_pt = is_k_pt(d, k);
      pt[std::to_string(k)] = is_pt;
      text << k << "-piecewise testable: " << yn(is_pt) << "\n";
    }
    j["k_pt"] = pt;
  }
  emit(cfg, j, text.str());
  return 0;
}

int cmd_lang_print(const CliConfig& cfg, const std::string& input) {
  LangExpr e = load_expr(input);
  emit(cfg, expr_to_json(e), e.pretty() + "\n");
  return 0;
}

int cmd_lang_compile(const CliConfig& cfg, const std::string& input,
                     const std::string& out) {
  LangExpr e = load_expr(input);
  Dfa d = compile(e);
  if (!out.empty()) write_json_file(out, dfa_to_json(d));
  emit(cfg, dfa_to_json(d),
       "minimal DFA: " + std::to_string(d.states()) + " states over " +
           d.alphabet->to_string() + "\n");
  return 0;
}

int cmd_lang_member(const CliConfig& cfg, const std::string& input,
                    const std::string& word) {
  LangInput li = load_lang(input);
  if (li.dfa) {
    bool in = li.dfa->member(Word::parse(li.dfa->alphabet, word));
    emit(cfg, Json{{"word", word}, {"member", in}},
         std::string(yn(in)) + "\n");
    return 0;
  }
  Word w = Word::parse(li.expr->alphabet(), word);
  bool scan = member(*li.expr, w);
  bool compiled = compile(*li.expr).member(w);
  emit(cfg, Json{{"word", word}, {"member", scan}, {"agree", scan == compiled}},
       std::string(yn(scan)) +
           (scan == compiled ? "\n" : " (scan and DFA disagree!)\n"));
  return scan == compiled ? 0 : 1;
}

int cmd_lang_equal(const CliConfig& cfg, const std::string& lhs,
                   const std::string& rhs) {
  LangInput a = load_lang(lhs);
  LangInput b = load_lang(rhs);
  Dfa da = a.dfa ? *a.dfa : compile(*a.expr);
  Dfa db = b.dfa ? *b.dfa : compile(*b.expr);
  std::optional<Word> diff = dfa_equal(da, db);
  Json j{{"equal", !diff}};
  if (diff) j["witness"] = diff->to_string();
  emit(cfg, j,
       diff ? "different; distinguished by \"" + diff->to_string() + "\"\n"
            : "equal\n");
  return diff ? 1 : 0;
}

int check_gamma_reduction(const CliConfig& cfg, const GammaProgram& g,
                          const LangExpr& source, const Dfa& target) {
  if (g.n > cfg.enumeration_bound) {
    std::cout << "check: skipped (n exceeds enumeration bound "
              << cfg.enumeration_bound << ")\n";
    return 0;
  }
  Dfa src = compile(source);
  WordEnumerator en(g.input_alphabet, g.n, g.n);
  while (auto w = en.next()) {
    if (src.member(*w) != target.member(gamma_eval(g, *w))) {
      std::cout << "check: FAILED on \"" << w->to_string() << "\"\n";
      return 1;
    }
  }
  std::cout << "check: ok (all " << g.input_alphabet->size() << "^" << g.n
            << " words)\n";
  return 0;
}

int cmd_program_sweep(const CliConfig& cfg, int n, const std::string& alphabet,
                      const std::string& u, const std::string& x1,
                      const std::string& x2, int alpha, const std::string& out,
                      bool check) {
  AlphabetRef a = Alphabet::parse(alphabet);
  GammaProgram g;
  std::optional<LangExpr> target;
  if (u.empty()) {
    g = feedback_sweep(a, n);
    if (a->to_string() == "abc") target = sweep_target_language();
  } else {
    DecoratedSweepPlan plan;
    plan.u = Word::parse(a, u);
    plan.x1 = Word::parse(a, x1);
    plan.x2 = Word::parse(a, x2);
    plan.alpha = alpha;
    DecoratedSweep ds = decorated_sweep(plan, n);
    g = std::move(ds.program);
    target = std::move(ds.target);
  }
  if (!out.empty()) write_json_file(out, gamma_to_json(g));
  std::ostringstream text;
  text << "length " << g.length() << "; positions:";
  for (const Instruction& ins : g.instructions) text << " " << ins.pos;
  text << "\n";
  emit(cfg, gamma_to_json(g), text.str());
  if (!check) return 0;
  if (!target) {
    std::cout << "check: skipped (no target language for alphabet "
              << alphabet << ")\n";
    return 0;
  }
  std::optional<LangExpr> source;
  if (u.empty()) {
    source = parse_regex_lite("(a+b)*ac+");
  } else {
    Word wu = Word::parse(a, u);
    Word w1 = Word::parse(a, x1);
    Word w2 = Word::parse(a, x2);
    source = LangExpr::intersection_of(
        {LangExpr::concat({LangExpr::shuffle_ideal(w1), LangExpr::word(wu),
                           LangExpr::shuffle_ideal(w2)}),
         LangExpr::shuffle_ideal(w1.concat(wu.repeat(alpha)).concat(w2)),
         LangExpr::complement(LangExpr::shuffle_ideal(
             w1.concat(wu.repeat(alpha + 1)).concat(w2)))});
  }
  return check_gamma_reduction(cfg, g, *source, compile(*target));
}

int cmd_program_selector(const CliConfig& cfg, int k, int n,
                         const std::string& table_file, const std::string& out,
                         bool check) {
  SelectorFn sigma = table_file.empty()
                         ? SelectorFn::random(k, n, cfg.seed)
                         : selector_from_json(read_json_file(table_file));
  GammaProgram g = selector_program(sigma);
  if (!out.empty()) write_json_file(out, gamma_to_json(g));
  std::ostringstream text;
  text << "selector (k = " << sigma.k << ", n = " << sigma.n << "): program of "
       << "length " << g.length() << " on inputs of length " << g.n << "\n";
  emit(cfg,
       Json{{"selector", selector_to_json(sigma)}, {"program", gamma_to_json(g)}},
       text.str());
  if (!check) return 0;
  if (g.n > 2 * cfg.enumeration_bound) {
    std::cout << "check: skipped (input length exceeds twice the enumeration "
                 "bound)\n";
    return 0;
  }
  Dfa zk = compile(selector_language(sigma.k));
  WordEnumerator en(g.input_alphabet, g.n, g.n);
  while (auto w = en.next()) {
    if (selector_member(sigma, *w) != zk.member(gamma_eval(g, *w))) {
      std::cout << "check: FAILED on \"" << w->to_string() << "\"\n";
      return 1;
    }
  }
  std::cout << "check: ok (all 2^" << g.n << " words)\n";
  return 0;
}

int cmd_program_eval(const CliConfig& cfg, const std::string& program_file,
                     const std::string& word) {
  Json j = read_json_file(program_file);
  if (j.contains("output_alphabet")) {
    GammaProgram g = gamma_from_json(j);
    Word out = gamma_eval(g, Word::parse(g.input_alphabet, word));
    emit(cfg, Json{{"output", out.to_string()}}, out.to_string() + "\n");
    return 0;
  }
  Program p = program_from_json(j);
  Word w = Word::parse(p.input_alphabet, word);
  int element = eval(p, w);
  bool accepted = p.accept[element];
  emit(cfg, Json{{"element", element}, {"accepted", accepted}},
       "element " + std::to_string(element) + "; " +
           (accepted ? "accepted" : "rejected") + "\n");
  return 0;
}

int cmd_program_compile_tddo(const CliConfig& cfg, const std::string& input,
                             int n, const std::string& out, bool check) {
  LangExpr e = load_expr(input);
  ProductProgram p = compile_tddo(e, n);
  if (!out.empty()) write_json_file(out, product_program_to_json(p));
  std::ostringstream text;
  text << p.components.size() << " components, total length " << p.length()
       << ", formula " << p.formula.to_string() << "\n";
  emit(cfg, product_program_to_json(p), text.str());
  if (!check) return 0;
  if (n > cfg.enumeration_bound) {
    std::cout << "check: skipped (n exceeds enumeration bound "
              << cfg.enumeration_bound << ")\n";
    return 0;
  }
  WordEnumerator en(p.input_alphabet, n, n);
  while (auto w = en.next()) {
    if (recognizes(p, *w) != member(e, *w)) {
      std::cout << "check: FAILED on \"" << w->to_string() << "\"\n";
      return 1;
    }
  }
  std::cout << "check: ok (all " << p.input_alphabet->size() << "^" << n
            << " words)\n";
  return 0;
}

int cmd_program_compress(const CliConfig& cfg, const std::string& program_file,
                         int k, const std::string& out, bool check) {
  Json j_in = read_json_file(program_file);
  if (j_in.contains("output_alphabet"))
    throw Error("compress expects a monoid program (accept + monoid), not a "
                "word-to-word program");
  Program p = program_from_json(j_in);
  Compressed c = compress_equivalent(p, k);
  if (!out.empty()) write_json_file(out, program_to_json(c.program));
  int64_t families = 1;
  int64_t power = 1;
  for (int j = 1; j <= k; ++j) {
    power *= p.target->size();
    families += power;
  }
  int64_t bound = families * compression_bound(k, p.input_alphabet->size(), p.n);
  std::ostringstream text;
  text << "length " << p.length() << " -> " << c.program.length()
       << " (bound " << bound << ")\n";
  emit(cfg,
       Json{{"original_length", p.length()},
            {"compressed_length", c.program.length()},
            {"bound", bound},
            {"kept", c.kept},
            {"program", program_to_json(c.program)}},
       text.str());
  if (!check) return 0;
  if (p.n > cfg.enumeration_bound) {
    std::cout << "check: skipped (n exceeds enumeration bound "
              << cfg.enumeration_bound << ")\n";
    return 0;
  }
  auto subwords = [k](const std::vector<int>& trace) {
    std::set<std::vector<int>> out_set{{}};
    for (int e : trace) {
      std::vector<std::vector<int>> grown;
      for (const auto& u : out_set)
        if (static_cast<int>(u.size()) < k) {
          std::vector<int> v = u;
          v.push_back(e);
          grown.push_back(std::move(v));
        }
      out_set.insert(grown.begin(), grown.end());
    }
    return out_set;
  };
  WordEnumerator en(p.input_alphabet, p.n, p.n);
  while (auto w = en.next()) {
    if (subwords(eval_trace(p, *w)) != subwords(eval_trace(c.program, *w))) {
      std::cout << "check: FAILED on \"" << w->to_string() << "\"\n";
      return 1;
    }
  }
  std::cout << "check: ok (all " << p.input_alphabet->size() << "^" << p.n
            << " words)\n";
  return 0;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite,
               const std::string& spec_file, const std::string& json_out) {
  std::vector<CheckSpec> specs;
  if (!spec_file.empty())
    specs = suite_from_json(read_json_file(spec_file));
  else if (suite == "default")
    specs = default_suite();
  else if (suite == "mutation")
    specs = mutation_suite();
  else
    throw Error("unknown suite '" + suite + "' (default, mutation)");

  std::vector<VerificationReport> reports;
  if (cfg.parallelism > 1) {
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(specs.size());
    for (const CheckSpec& spec : specs)
      futures.push_back(std::async(std::launch::async,
                                   [&spec] { return run_check(spec); }));
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    reports = run_suite(specs);
  }

  Json arr = Json::array();
  bool any_fail = false;
  std::ostringstream text;
  for (const VerificationReport& r : reports) {
    arr.push_back(report_to_json(r));
    text << r.render() << "\n";
    any_fail = any_fail || r.verdict == Verdict::kFail;
  }
  if (!json_out.empty()) write_json_file(json_out, arr);
  emit(cfg, arr, text.str());
  return any_fail ? 1 : 0;
}

int cmd_monoid_info(const CliConfig& cfg, const std::string& file) {
  Json j_in = read_json_file(file);
  // Accept a bare monoid or anything that wraps one (morphism, program).
  while (j_in.is_object() && !j_in.contains("identity")) {
    if (j_in.contains("monoid"))
      j_in = j_in.at("monoid");
    else if (j_in.contains("morphism"))
      j_in = j_in.at("morphism");
    else
      break;
  }
  MonoidRef m = monoid_from_json(j_in);
  Json j{{"size", m->size()},
         {"identity", m->one()},
         {"omega", m->omega()},
         {"idempotents", m->idempotents().size()},
         {"A", check_variety(*m, Variety::kA).holds},
         {"DA", check_variety(*m, Variety::kDA).holds},
         {"J", check_variety(*m, Variety::kJ).holds}};
  std::ostringstream text;
  text << m->size() << " elements, identity " << m->one() << ", omega "
       << m->omega() << ", " << m->idempotents().size() << " idempotents\n"
       << "  A: " << yn(j["A"].get<bool>()) << "\n  DA: "
       << yn(j["DA"].get<bool>()) << "\n  J: " << yn(j["J"].get<bool>())
       << "\n";
  emit(cfg, j, text.str());
  return 0;
}

int cmd_monoid_syntactic(const CliConfig& cfg, const std::string& input,
                         const std::string& out) {
  LangInput li = load_lang(input);
  Dfa d = li.dfa ? *li.dfa : compile(*li.expr);
  SyntacticMonoid syn = syntactic_monoid(d);
  Json j{{"morphism", morphism_to_json(syn.morphism)}, {"accept", syn.accept}};
  if (!out.empty()) write_json_file(out, j);
  emit(cfg, j,
       "syntactic monoid: " + std::to_string(syn.morphism.target->size()) +
           " elements\n");
  return 0;
}

int cmd_monoid_quotient(const CliConfig& cfg, const std::string& alphabet,
                        int k, const std::string& out) {
  QuotientMonoid q = quotient_by_sim_k(Alphabet::parse(alphabet), k);
  Json reps = Json::array();
  for (const Word& w : q.representatives) reps.push_back(w.to_string());
  Json j{{"morphism", morphism_to_json(q.morphism)}, {"representatives", reps}};
  if (!out.empty()) write_json_file(out, j);
  emit(cfg, j,
       "~" + std::to_string(k) + " quotient over " + alphabet + ": " +
           std::to_string(q.morphism.target->size()) + " classes\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"programs over monoids in J: languages, algebra, verification"};
  app.require_subcommand(1);

  CliConfig cfg;
  if (const char* env = std::getenv("MPJ_STATE_CAP"))
    Config::global().state_cap = std::atoi(env);
  app.add_option_function<int>(
      "--state-cap", [](int v) { Config::global().state_cap = v; },
      "DFA state cap");
  app.add_option_function<int64_t>(
      "--quotient-cap", [](int64_t v) { Config::global().class_cap = v; },
      "~k class cap");
  app.add_option("--enumeration-bound", cfg.enumeration_bound,
                 "max n for exhaustive --check runs");
  app.add_option("--seed", cfg.seed, "seed for randomized constructions");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--parallelism", cfg.parallelism, "parallel verify checks")
      ->check(CLI::PositiveNumber);

  int rc = 0;

  auto* classify = app.add_subcommand("classify", "variety verdicts for a language");
  std::string classify_input;
  std::vector<int> classify_ks;
  classify->add_option("input", classify_input, "regex-lite pattern or JSON file")
      ->required();
  classify->add_option("--k", classify_ks, "test k-piecewise testability")
      ->delimiter(',');
  classify->callback([&] { rc = cmd_classify(cfg, classify_input, classify_ks); });

  auto* lang = app.add_subcommand("lang", "expression and DFA operations");
  lang->require_subcommand(1);
  std::string lang_input, lang_word, lang_rhs, lang_out;
  auto* lang_print = lang->add_subcommand("print", "pretty-print an expression");
  lang_print->add_option("input", lang_input)->required();
  lang_print->callback([&] { rc = cmd_lang_print(cfg, lang_input); });
  auto* lang_compile = lang->add_subcommand("compile", "compile to a minimal DFA");
  lang_compile->add_option("input", lang_input)->required();
  lang_compile->add_option("-o,--out", lang_out, "write DFA JSON here");
  lang_compile->callback([&] { rc = cmd_lang_compile(cfg, lang_input, lang_out); });
  auto* lang_member = lang->add_subcommand("member", "membership of one word");
  lang_member->add_option("input", lang_input)->required();
  lang_member->add_option("word", lang_word)->required();
  lang_member->callback([&] { rc = cmd_lang_member(cfg, lang_input, lang_word); });
  auto* lang_equal = lang->add_subcommand("equal", "exact language equality");
  lang_equal->add_option("lhs", lang_input)->required();
  lang_equal->add_option("rhs", lang_rhs)->required();
  lang_equal->callback([&] { rc = cmd_lang_equal(cfg, lang_input, lang_rhs); });

  auto* program = app.add_subcommand("program", "construct and run programs");
  program->require_subcommand(1);
  std::string prog_file, prog_word, prog_out, prog_table, prog_input;
  std::string sweep_alphabet = "abc", sweep_u, sweep_x1, sweep_x2;
  int prog_n = 0, prog_k = 0, sweep_alpha = 1;
  bool prog_check = false;

  auto* sweep = program->add_subcommand("sweep", "feedback or decorated sweep");
  sweep->add_option("--n", prog_n, "input length")->required();
  sweep->add_option("--alphabet", sweep_alphabet, "input alphabet");
  sweep->add_option("--u", sweep_u, "decorated sweep factor");
  sweep->add_option("--x1", sweep_x1, "left context");
  sweep->add_option("--x2", sweep_x2, "right context");
  sweep->add_option("--alpha", sweep_alpha, "embedding threshold");
  sweep->add_option("-o,--out", prog_out, "write program JSON here");
  sweep->add_flag("--check", prog_check, "verify the reduction exhaustively");
  sweep->callback([&] {
    rc = cmd_program_sweep(cfg, prog_n, sweep_alphabet, sweep_u, sweep_x1,
                           sweep_x2, sweep_alpha, prog_out, prog_check);
  });

  auto* selector = program->add_subcommand("selector", "marker-block selector program");
  selector->add_option("--k", prog_k, "selector depth")->required();
  selector->add_option("--n", prog_n, "block length")->required();
  selector->add_option("--table", prog_table, "selector table JSON");
  selector->add_option("-o,--out", prog_out, "write program JSON here");
  selector->add_flag("--check", prog_check, "verify membership exhaustively");
  selector->callback([&] {
    rc = cmd_program_selector(cfg, prog_k, prog_n, prog_table, prog_out,
                              prog_check);
  });

  auto* eval_cmd = program->add_subcommand("eval", "run a program on one word");
  eval_cmd->add_option("--program", prog_file, "program JSON")->required();
  eval_cmd->add_option("--word", prog_word, "input word")->required();
  eval_cmd->callback([&] { rc = cmd_program_eval(cfg, prog_file, prog_word); });

  auto* tddo = program->add_subcommand("compile-tddo",
                                       "compile an expression to programs");
  tddo->add_option("--expr", prog_input, "expression JSON or regex-lite")
      ->required();
  tddo->add_option("--n", prog_n, "input length")->required();
  tddo->add_option("-o,--out", prog_out, "write product program JSON here");
  tddo->add_flag("--check", prog_check, "compare against direct membership");
  tddo->callback([&] {
    rc = cmd_program_compile_tddo(cfg, prog_input, prog_n, prog_out, prog_check);
  });

  auto* compress = program->add_subcommand("compress",
                                           "restrict to subword-deciding instructions");
  compress->add_option("--program", prog_file, "program JSON")->required();
  compress->add_option("--k", prog_k, "subword length bound")->required();
  compress->add_option("-o,--out", prog_out, "write compressed JSON here");
  compress->add_flag("--check", prog_check, "verify ~k trace equivalence");
  compress->callback([&] {
    rc = cmd_program_compress(cfg, prog_file, prog_k, prog_out, prog_check);
  });

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "default", spec_file, json_out;
  verify->add_option("--suite", suite, "default or mutation");
  verify->add_option("--spec", spec_file, "JSON list of check specs");
  verify->add_option("--json", json_out, "write reports to this file");
  verify->callback([&] { rc = cmd_verify(cfg, suite, spec_file, json_out); });

  auto* monoid = app.add_subcommand("monoid", "monoid construction and inspection");
  monoid->require_subcommand(1);
  std::string monoid_file, monoid_out, monoid_alphabet = "ab";
  int monoid_k = 1;
  auto* minfo = monoid->add_subcommand("info", "table facts and variety verdicts");
  minfo->add_option("file", monoid_file, "monoid JSON")->required();
  minfo->callback([&] { rc = cmd_monoid_info(cfg, monoid_file); });
  auto* msyn = monoid->add_subcommand("syntactic", "syntactic monoid of a language");
  msyn->add_option("input", monoid_file, "regex-lite pattern or JSON file")
      ->required();
  msyn->add_option("-o,--out", monoid_out, "write morphism JSON here");
  msyn->callback([&] { rc = cmd_monoid_syntactic(cfg, monoid_file, monoid_out); });
  auto* mquot = monoid->add_subcommand("quotient", "free monoid modulo ~k");
  mquot->add_option("--alphabet", monoid_alphabet, "alphabet");
  mquot->add_option("--k", monoid_k, "subword length bound")->required();
  mquot->add_option("-o,--out", monoid_out, "write morphism JSON here");
  mquot->callback(
      [&] { rc = cmd_monoid_quotient(cfg, monoid_alphabet, monoid_k, monoid_out); });

  // Let the global options (--seed, --state-cap, ...) appear after a
  // subcommand as well as before it.
  std::function<void(CLI::App*)> allow_globals_anywhere = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_globals_anywhere(sub);
    }
  };
  allow_globals_anywhere(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
