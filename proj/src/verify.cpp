#include "mpj/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "mpj/compress.hpp"
#include "mpj/config.hpp"
#include "mpj/dfa.hpp"
#include "mpj/tddo.hpp"

namespace mpj {

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

VerificationReport make_report(std::string id,
                               std::map<std::string, std::string> params) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.parameters = std::move(params);
  return r;
}

void fail(VerificationReport& r, std::string context,
          std::optional<Word> witness = std::nullopt) {
  r.verdict = Verdict::kFail;
  r.context = std::move(context);
  if (witness) r.counterexample = std::move(witness);
}

bool distinct_letters(const Word& u) {
  std::set<int> seen;
  for (int i = 0; i < u.length(); ++i)
    if (!seen.insert(u.letter(i)).second) return false;
  return true;
}

bool contains_subword(const std::vector<int>& w, const std::vector<int>& t) {
  size_t j = 0;
  for (size_t i = 0; i < w.size() && j < t.size(); ++i)
    if (w[i] == t[j]) ++j;
  return j == t.size();
}

std::set<std::vector<int>> subwords_up_to(const std::vector<int>& w, int k) {
  std::set<std::vector<int>> out;
  out.insert({});
  for (int e : w) {
    std::vector<std::vector<int>> grown;
    for (const auto& u : out) {
      if (static_cast<int>(u.size()) >= k) continue;
      std::vector<int> v = u;
      v.push_back(e);
      grown.push_back(std::move(v));
    }
    out.insert(grown.begin(), grown.end());
  }
  return out;
}

std::string join_words(const std::vector<Word>& ws, const char* sep) {
  std::string out;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += sep;
    out += ws[i].to_string();
  }
  return out;
}

/// (a+b)* a c^+ over {a,b,c}.
LangExpr ab_star_ac_plus() {
  AlphabetRef sig = Alphabet::of_chars("abc");
  return LangExpr::concat({LangExpr::letters_star(sig, {0, 1}),
                           LangExpr::letter_set(sig, {0}),
                           LangExpr::letters_at_least(sig, {2}, 1)});
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  out << "[" << (verdict == Verdict::kPass
                     ? "PASS"
                     : (verdict == Verdict::kFail ? "FAIL" : "SKIP"))
      << "] " << check_id;
  if (!parameters.empty()) {
    out << " (";
    bool first = true;
    for (const auto& [k, v] : parameters) {
      if (!first) out << ", ";
      first = false;
      out << k << "=" << v;
    }
    out << ")";
  }
  out << " - " << instances_checked << " instances, ";
  out.precision(3);
  out << std::fixed << elapsed_seconds << "s";
  if (counterexample) out << "; counterexample \"" << counterexample->to_string() << "\"";
  if (!context.empty()) out << "; " << context;
  if (!note.empty()) out << " [" << note << "]";
  return out.str();
}

VerificationReport check_reduction(
    const std::string& check_id,
    const std::function<GammaProgram(int)>& family, const LangExpr& source,
    const LangExpr& target, int n_max) {
  VerificationReport r =
      make_report(check_id, {{"n_max", std::to_string(n_max)}});
  Stopwatch sw;
  Dfa src = compile(source);
  Dfa tgt = compile(target);
  for (int n = 0; n <= n_max && r.verdict == Verdict::kPass; ++n) {
    GammaProgram g = family(n);
    WordEnumerator en(source.alphabet(), n, n);
    while (auto w = en.next()) {
      ++r.instances_checked;
      bool lhs = src.member(*w);
      bool rhs = tgt.member(gamma_eval(g, *w));
      if (lhs != rhs) {
        fail(r,
             std::string("word is ") + (lhs ? "in" : "not in") +
                 " the source language but its program image is " +
                 (rhs ? "" : "not ") + "in the target",
             *w);
        break;
      }
    }
  }
  r.elapsed_seconds = sw.seconds();
  return r;
}

VerificationReport check_tddo_equality(const AlphabetRef& alphabet, int l,
                                       const std::vector<Word>& factors) {
  VerificationReport r = make_report(
      "tddo-equality", {{"alphabet", alphabet->to_string()},
                        {"l", std::to_string(l)},
                        {"factors", join_words(factors, ",")}});
  Stopwatch sw;
  for (const Word& u : factors) {
    if (!distinct_letters(u)) {
      r.verdict = Verdict::kSkipped;
      r.note = "factor " + u.to_string() +
               " has repeated letters; the expansion is only claimed for "
               "pairwise distinct letters";
      r.elapsed_seconds = sw.seconds();
      return r;
    }
  }
  int k = static_cast<int>(factors.size());

  // Union over q in {1,l}^k of the refined block products.
  std::vector<int> qvals{1};
  if (l > 1) qvals.push_back(l);
  std::vector<LangExpr> q_parts;
  std::vector<size_t> pick(k, 0);
  while (true) {
    std::vector<LangExpr> blocks;
    for (int i = 0; i < k; ++i)
      blocks.push_back(
          LangExpr::l_block(factors[i], l, qvals[pick[i]]));
    q_parts.push_back(LangExpr::concat(std::move(blocks)));
    size_t i = pick.size();
    while (i > 0 && pick[i - 1] + 1 == qvals.size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  LangExpr lhs = LangExpr::union_of(std::move(q_parts));

  // Union over alpha in [l]^k of R \cap S.
  std::vector<LangExpr> a_parts;
  std::vector<int> alpha(k, 1);
  while (true) {
    a_parts.push_back(LangExpr::intersection_of(
        {LangExpr::r_lang(alphabet, factors, l, alpha),
         LangExpr::s_lang(alphabet, factors, l, alpha)}));
    size_t i = alpha.size();
    while (i > 0 && alpha[i - 1] == l) alpha[--i] = 1;
    if (i == 0) break;
    ++alpha[i - 1];
  }
  LangExpr rhs = LangExpr::union_of(std::move(a_parts));
  LangExpr block = LangExpr::threshold_block(alphabet, factors, l);

  Dfa dl = compile(lhs);
  Dfa dr = compile(rhs);
  Dfa db = compile(block);
  ++r.instances_checked;
  if (auto diff = dfa_equal(dl, dr)) {
    fail(r, "refined-exponent union differs from the R/S union", *diff);
  } else {
    ++r.instances_checked;
    if (auto diff2 = dfa_equal(db, dl))
      fail(r, "block list differs from its refined-exponent union", *diff2);
  }
  r.note = "exact";
  r.elapsed_seconds = sw.seconds();
  return r;
}

VerificationReport check_costa(const CostaForm& form) {
  std::string sets;
  for (size_t i = 0; i < form.sets.size(); ++i) {
    if (i) sets += "|";
    for (int a : form.sets[i]) sets += form.alphabet->at(a).to_string();
  }
  VerificationReport r =
      make_report("costa", {{"r", std::to_string(form.r)},
                            {"words", join_words(form.u, "|")},
                            {"sets", sets}});
  Stopwatch sw;
  LangExpr lang = costa_lang(form);
  LangExpr K = costa_K(form);
  int cap = Config::global().state_cap;
  try {
    Dfa dl = compile(lang, cap);
    Dfa dk = compile(K, cap);
    r.note = "exact";
    ++r.instances_checked;
    if (auto diff = dfa_equal(dl, dk)) {
      fail(r, "normal form and its characterization disagree", *diff);
      r.elapsed_seconds = sw.seconds();
      return r;
    }
    SyntacticMonoid syn = syntactic_monoid(dl);
    VarietyCheck da = check_variety(*syn.morphism.target, Variety::kDA);
    ++r.instances_checked;
    if (!da.holds) {
      fail(r, "syntactic monoid violates " + da.equation);
      r.elapsed_seconds = sw.seconds();
      return r;
    }
    SyntacticSemigroup ss = syntactic_semigroup(dl);
    LocalJCheck lj = is_locally_J(*ss.semigroup);
    ++r.instances_checked;
    if (!lj.holds)
      fail(r, "syntactic semigroup has a local monoid violating " + lj.equation);
  } catch (const CapExceeded& e) {
    r.note = std::string("state cap: ") + e.what() +
             "; bounded enumeration to length 10";
    WordEnumerator en(form.alphabet, 0, 10);
    while (auto w = en.next()) {
      ++r.instances_checked;
      if (member(lang, *w) != member(K, *w)) {
        fail(r, "normal form and its characterization disagree", *w);
        break;
      }
    }
  }
  r.elapsed_seconds = sw.seconds();
  return r;
}

namespace {

Program random_program(const AlphabetRef& alphabet, const MonoidRef& monoid,
                       int n, std::mt19937_64& rng) {
  Program p;
  p.input_alphabet = alphabet;
  p.n = n;
  p.target = monoid;
  p.accept.resize(monoid->size());
  for (size_t i = 0; i < p.accept.size(); ++i) p.accept[i] = rng() & 1;
  if (n == 0) return p;
  std::geometric_distribution<int> glen(1.0 / 21.0);
  int len = std::min(glen(rng), 40);
  std::uniform_int_distribution<int> dpos(1, n);
  std::uniform_int_distribution<int> delem(0, monoid->size() - 1);
  for (int i = 0; i < len; ++i) {
    Instruction ins;
    ins.pos = dpos(rng);
    ins.out.resize(alphabet->size());
    for (int a = 0; a < alphabet->size(); ++a) ins.out[a] = delem(rng);
    p.instructions.push_back(std::move(ins));
  }
  return p;
}

}  // namespace

VerificationReport check_compression(uint64_t seed, const AlphabetRef& alphabet,
                                     const MonoidRef& monoid, int trials,
                                     int n_max, int k_max) {
  VerificationReport r = make_report(
      "compression", {{"seed", std::to_string(seed)},
                      {"trials", std::to_string(trials)},
                      {"n_max", std::to_string(n_max)},
                      {"k_max", std::to_string(k_max)},
                      {"monoid_size", std::to_string(monoid->size())}});
  Stopwatch sw;
  std::mt19937_64 rng(seed);
  int m = monoid->size();
  int sigma = alphabet->size();

  for (int trial = 0; trial < trials && r.verdict == Verdict::kPass; ++trial) {
    int n = static_cast<int>(rng() % (n_max + 1));
    Program p = random_program(alphabet, monoid, n, rng);

    std::vector<Word> words;
    std::vector<std::vector<int>> traces;
    WordEnumerator en(alphabet, n, n);
    while (auto w = en.next()) {
      traces.push_back(eval_trace(p, *w));
      words.push_back(std::move(*w));
    }

    auto filtered = [&](const std::vector<int>& trace,
                        const std::vector<int>& kept) {
      std::vector<int> out;
      out.reserve(kept.size());
      for (int i : kept) out.push_back(trace[i]);
      return out;
    };

    // Per-t guarantee with a random superset of the kept indices.
    std::vector<int> t;
    for (int len = 1; len <= k_max && r.verdict == Verdict::kPass; ++len) {
      t.assign(len, 0);
      while (true) {
        std::vector<int> kept = compress_subword_indices(p, t);
        if (static_cast<int64_t>(kept.size()) >
            compression_bound(len, sigma, n)) {
          fail(r, "per-t index set exceeds c_k * n^ceil(k/2) for t of length " +
                      std::to_string(len));
          break;
        }
        std::vector<int> superset;
        size_t at = 0;
        for (int i = 0; i < static_cast<int>(p.instructions.size()); ++i) {
          if (at < kept.size() && kept[at] == i) {
            superset.push_back(i);
            ++at;
          } else if (rng() % 4 == 0) {
            superset.push_back(i);
          }
        }
        for (size_t wi = 0; wi < words.size(); ++wi) {
          ++r.instances_checked;
          if (contains_subword(traces[wi], t) !=
              contains_subword(filtered(traces[wi], superset), t)) {
            fail(r, "subword presence of t changed after compression",
                 words[wi]);
            break;
          }
        }
        if (r.verdict != Verdict::kPass) break;
        size_t i = t.size();
        while (i > 0 && t[i - 1] == m - 1) t[--i] = 0;
        if (i == 0) break;
        ++t[i - 1];
      }
    }

    // ~k equivalence and summed bound for the union program.
    for (int k = 0; k <= k_max && r.verdict == Verdict::kPass; ++k) {
      Compressed c = compress_equivalent(p, k);
      int64_t families = 1;  // sum of m^j for j = 0..k
      int64_t power = 1;
      for (int j = 1; j <= k; ++j) {
        power *= m;
        families += power;
      }
      if (c.program.length() > families * compression_bound(k, sigma, n)) {
        fail(r, "union program exceeds the summed length bound at k = " +
                    std::to_string(k));
        break;
      }
      for (size_t wi = 0; wi < words.size(); ++wi) {
        ++r.instances_checked;
        if (subwords_up_to(traces[wi], k) !=
            subwords_up_to(filtered(traces[wi], c.kept), k)) {
          fail(r, "compressed trace is not ~" + std::to_string(k) +
                      "-equivalent to the original",
               words[wi]);
          break;
        }
      }
    }
  }
  r.elapsed_seconds = sw.seconds();
  return r;
}

VerificationReport check_variety_claims() {
  VerificationReport r = make_report("variety-claims", {});
  Stopwatch sw;
  AlphabetRef ab = Alphabet::of_chars("ab");
  AlphabetRef abc = Alphabet::of_chars("abc");

  auto syn_of = [&](const LangExpr& e) { return syntactic_monoid(compile(e)); };
  auto expect = [&](bool got, bool want, const std::string& what) {
    ++r.instances_checked;
    if (got != want && r.verdict == Verdict::kPass)
      fail(r, what + (want ? " was expected to hold" : " was expected to fail"));
  };

  // (a) sampled shuffle combinations: syntactic monoids in J
  std::vector<LangExpr> pt_samples{
      LangExpr::shuffle_ideal(Word::parse(ab, "ab")),
      LangExpr::intersection_of(
          {LangExpr::shuffle_ideal(Word::parse(abc, "ca")),
           LangExpr::complement(LangExpr::shuffle_ideal(Word::parse(abc, "cb")))}),
      LangExpr::shuffle_ideal(Word::parse(abc, "abc"))};
  for (const LangExpr& e : pt_samples) {
    SyntacticMonoid syn = syn_of(e);
    expect(check_variety(*syn.morphism.target, Variety::kJ).holds, true,
           "J membership of the syntactic monoid of " + e.pretty());
  }

  // (b) (a+b)*ac+: in DA, not in J, stable monoid not in J
  {
    SyntacticMonoid syn = syn_of(ab_star_ac_plus());
    const FiniteMonoid& mono = *syn.morphism.target;
    expect(check_variety(mono, Variety::kDA).holds, true,
           "DA membership of the syntactic monoid of (a+b)*ac+");
    expect(check_variety(mono, Variety::kJ).holds, false,
           "J membership of the syntactic monoid of (a+b)*ac+");
    StableStructure stable = stable_pair(syn.morphism);
    expect(check_variety(stable.monoid, Variety::kJ).holds, false,
           "J membership of the stable monoid of (a+b)*ac+");
  }

  // (c) sampled threshold blocks: syntactic monoids in DA
  std::vector<LangExpr> blocks{
      LangExpr::threshold_block(
          abc, {Word::parse(abc, "ab"), Word::parse(abc, "c")}, 3),
      LangExpr::threshold_block(abc, {Word::parse(abc, "ac")}, 2)};
  for (const LangExpr& e : blocks) {
    SyntacticMonoid syn = syn_of(e);
    expect(check_variety(*syn.morphism.target, Variety::kDA).holds, true,
           "DA membership of the syntactic monoid of " + e.pretty());
  }

  // (d) depth-1 marker language is 3-piecewise-testable
  expect(is_k_pt(compile(selector_language(1)), 3,
                 Config::global().class_cap),
         true, "3-piecewise-testability of the depth-1 marker language");

  // (e) (ab)* is not k-piecewise-testable for k <= 4
  {
    Dfa d;
    d.alphabet = ab;
    d.start = 0;
    d.delta = {{1, 2}, {2, 0}, {2, 2}};
    d.accept = {true, false, false};
    for (int k = 1; k <= 4; ++k)
      expect(is_k_pt(d, k), false,
             std::to_string(k) + "-piecewise-testability of (ab)*");
  }

  r.elapsed_seconds = sw.seconds();
  return r;
}

VerificationReport check_selector(int k, int n, int trials, uint64_t seed,
                                  bool shift_positions) {
  VerificationReport r = make_report(
      shift_positions ? "selector-shifted" : "selector",
      {{"k", std::to_string(k)},
       {"n", std::to_string(n)},
       {"trials", std::to_string(trials)},
       {"seed", std::to_string(seed)}});
  Stopwatch sw;
  Dfa zk = compile(selector_language(k));
  int64_t bound = 2 * (k + 1);
  for (int i = 0; i <= k; ++i) bound *= n;
  if (shift_positions) trials = 1;

  for (int trial = 0; trial < trials && r.verdict == Verdict::kPass; ++trial) {
    SelectorFn sigma;
    if (shift_positions) {
      sigma.k = k;
      sigma.n = n;
      int64_t entries = 1;
      for (int i = 0; i < k; ++i) entries *= n;
      sigma.table.assign(entries, n >= 1 ? std::vector<int>{n}
                                         : std::vector<int>{});
    } else {
      sigma = SelectorFn::random(k, n, seed + trial);
    }
    GammaProgram g = selector_program(sigma);
    if (shift_positions && g.n > 0)
      for (Instruction& ins : g.instructions) ins.pos = ins.pos % g.n + 1;
    if (g.length() > bound) {
      fail(r, "program length " + std::to_string(g.length()) +
                  " exceeds 2(k+1)n^{k+1} = " + std::to_string(bound));
      break;
    }
    WordEnumerator en(g.input_alphabet, g.n, g.n);
    while (auto w = en.next()) {
      ++r.instances_checked;
      bool lhs = selector_member(sigma, *w);
      bool rhs = zk.member(gamma_eval(g, *w));
      if (lhs != rhs) {
        fail(r,
             std::string("input is ") + (lhs ? "" : "not ") +
                 "selected but the program output lands " +
                 (rhs ? "inside" : "outside") + " the marker language",
             *w);
        break;
      }
    }
  }
  r.elapsed_seconds = sw.seconds();
  return r;
}

VerificationReport check_building_block(const DecoratedSweepPlan& plan,
                                        int n_max, bool drop_levels) {
  VerificationReport r = make_report(
      drop_levels ? "building-block-leveldrop" : "building-block",
      {{"u", plan.u.to_string()},
       {"x1", plan.x1.to_string()},
       {"x2", plan.x2.to_string()},
       {"alpha", std::to_string(plan.alpha)},
       {"n_max", std::to_string(n_max)}});
  Stopwatch sw;
  int m = plan.u.length();
  int levels = 2 * m - 1;

  Word base = plan.x1.concat(plan.u.repeat(plan.alpha)).concat(plan.x2);
  Word bumped = plan.x1.concat(plan.u.repeat(plan.alpha + 1)).concat(plan.x2);
  LangExpr source = LangExpr::intersection_of(
      {LangExpr::concat({LangExpr::shuffle_ideal(plan.x1),
                         LangExpr::word(plan.u),
                         LangExpr::shuffle_ideal(plan.x2)}),
       LangExpr::shuffle_ideal(base),
       LangExpr::complement(LangExpr::shuffle_ideal(bumped))});
  Dfa src = compile(source);
  Dfa tgt = compile(decorated_sweep(plan, 0).target);

  for (int n = 0; n <= n_max && r.verdict == Verdict::kPass; ++n) {
    DecoratedSweep ds = decorated_sweep(plan, n);
    int64_t expect_len = n >= m ? m - 1 + int64_t{n - m + 1} * (2 * m - 1) : 0;
    if (ds.program.length() != expect_len ||
        ds.program.length() > int64_t{2 * m - 1} * n) {
      fail(r, "sweep length " + std::to_string(ds.program.length()) +
                  " breaks the length formula at n = " + std::to_string(n));
      break;
    }
    if (drop_levels) {
      for (Instruction& ins : ds.program.instructions)
        for (int& v : ins.out)
          if (v % levels < m) v = v - v % levels;
    }
    WordEnumerator en(plan.u.alphabet(), n, n);
    while (auto w = en.next()) {
      ++r.instances_checked;
      bool lhs = src.member(*w);
      bool rhs = tgt.member(gamma_eval(ds.program, *w));
      if (lhs != rhs) {
        fail(r,
             std::string("word is ") + (lhs ? "in" : "not in") +
                 " the block language but the sweep output lands " +
                 (rhs ? "inside" : "outside") + " the target",
             *w);
        break;
      }
    }
  }
  r.elapsed_seconds = sw.seconds();
  return r;
}

namespace {

int param_int(const CheckSpec& spec, const std::string& key, int fallback) {
  auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : std::stoi(it->second);
}

uint64_t param_u64(const CheckSpec& spec, const std::string& key,
                   uint64_t fallback) {
  auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : std::stoull(it->second);
}

std::string param_str(const CheckSpec& spec, const std::string& key,
                      const std::string& fallback) {
  auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : it->second;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

GammaProgram straight_reading(const AlphabetRef& alphabet, int n) {
  GammaProgram g;
  g.input_alphabet = alphabet;
  g.n = n;
  g.output_alphabet = alphabet;
  std::vector<int> id(alphabet->size());
  for (int i = 0; i < alphabet->size(); ++i) id[i] = i;
  for (int i = 1; i <= n; ++i) g.instructions.push_back(Instruction{i, id});
  return g;
}

}  // namespace

std::vector<CheckSpec> default_suite() {
  return {
      {"sweep-reduction", {{"n_max", "6"}}},
      {"tddo-equality", {{"alphabet", "abc"}, {"l", "2"}, {"factors", "ab,c"}}},
      {"tddo-equality", {{"alphabet", "ab"}, {"l", "1"}, {"factors", "ab"}}},
      {"tddo-equality", {{"alphabet", "ab"}, {"l", "2"}, {"factors", "aba"}}},
      {"costa", {{"r", "1"}, {"words", "a|a"}, {"sets", "b"}, {"alphabet", "ab"}}},
      {"compression",
       {{"seed", "1"}, {"trials", "5"}, {"n_max", "4"}, {"k_max", "2"}}},
      {"variety-claims", {}},
      {"selector", {{"k", "1"}, {"n", "2"}, {"trials", "3"}, {"seed", "7"}}},
      {"building-block",
       {{"alphabet", "ab"}, {"u", "ab"}, {"x1", ""}, {"x2", ""},
        {"alpha", "1"}, {"n_max", "5"}}},
  };
}

std::vector<CheckSpec> mutation_suite() {
  return {
      {"sweep-reduction-straight", {{"n_max", "4"}}},
      {"selector-shifted", {{"k", "0"}, {"n", "2"}}},
      {"building-block-leveldrop",
       {{"alphabet", "ab"}, {"u", "ab"}, {"x1", ""}, {"x2", ""},
        {"alpha", "1"}, {"n_max", "4"}}},
  };
}

VerificationReport run_check(const CheckSpec& spec) {
  const std::string& id = spec.check_id;
  if (id == "sweep-reduction" || id == "sweep-reduction-straight") {
    AlphabetRef abc = Alphabet::of_chars("abc");
    bool straight = id == "sweep-reduction-straight";
    auto family = [abc, straight](int n) {
      return straight ? straight_reading(abc, n) : feedback_sweep(abc, n);
    };
    return check_reduction(id, family, ab_star_ac_plus(),
                           sweep_target_language(), param_int(spec, "n_max", 6));
  }
  if (id == "tddo-equality") {
    AlphabetRef a = Alphabet::parse(param_str(spec, "alphabet", "ab"));
    std::vector<Word> factors;
    for (const std::string& s : split(param_str(spec, "factors", "ab"), ','))
      factors.push_back(Word::parse(a, s));
    return check_tddo_equality(a, param_int(spec, "l", 2), factors);
  }
  if (id == "costa") {
    AlphabetRef a = Alphabet::parse(param_str(spec, "alphabet", "ab"));
    CostaForm form;
    form.alphabet = a;
    form.r = param_int(spec, "r", 0);
    for (const std::string& s : split(param_str(spec, "words", "a"), '|'))
      form.u.push_back(Word::parse(a, s));
    std::string sets = param_str(spec, "sets", "");
    if (!sets.empty())
      for (const std::string& s : split(sets, '|')) {
        std::vector<int> set;
        for (char c : s) set.push_back(a->index_of(Symbol(c)));
        form.sets.push_back(std::move(set));
      }
    return check_costa(form);
  }
  if (id == "compression") {
    AlphabetRef a = Alphabet::parse(param_str(spec, "alphabet", "ab"));
    SyntacticMonoid syn = syntactic_monoid(
        compile(LangExpr::shuffle_ideal(Word::parse(a, param_str(spec, "ideal", "ab")))));
    return check_compression(param_u64(spec, "seed", 1), a,
                             syn.morphism.target, param_int(spec, "trials", 10),
                             param_int(spec, "n_max", 4),
                             param_int(spec, "k_max", 2));
  }
  if (id == "variety-claims") return check_variety_claims();
  if (id == "selector" || id == "selector-shifted")
    return check_selector(param_int(spec, "k", 1), param_int(spec, "n", 2),
                          param_int(spec, "trials", 5),
                          param_u64(spec, "seed", 7), id == "selector-shifted");
  if (id == "building-block" || id == "building-block-leveldrop") {
    AlphabetRef a = Alphabet::parse(param_str(spec, "alphabet", "ab"));
    DecoratedSweepPlan plan;
    plan.u = Word::parse(a, param_str(spec, "u", "ab"));
    plan.x1 = Word::parse(a, param_str(spec, "x1", ""));
    plan.x2 = Word::parse(a, param_str(spec, "x2", ""));
    plan.alpha = param_int(spec, "alpha", 1);
    return check_building_block(plan, param_int(spec, "n_max", 5),
                                id == "building-block-leveldrop");
  }
  throw Error("unknown check id '" + id + "'");
}

std::vector<VerificationReport> run_suite(const std::vector<CheckSpec>& specs) {
  std::vector<VerificationReport> out;
  out.reserve(specs.size());
  for (const CheckSpec& spec : specs) out.push_back(run_check(spec));
  return out;
}

}  // namespace mpj
