#include "mpj/sweeps.hpp"

#include <algorithm>
#include <utility>

namespace mpj {

namespace {

std::vector<int> identity_map(int size) {
  std::vector<int> out(size);
  for (int i = 0; i < size; ++i) out[i] = i;
  return out;
}

/// Tags every symbol of `input` with `levels` extra values; symbol b at
/// level v sits at index b*levels + v. Existing tags are folded in, so the
/// result is again a validly tagged alphabet.
AlphabetRef leveled_alphabet(const Alphabet& input, int levels) {
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<size_t>(input.size()) * levels);
  for (int b = 0; b < input.size(); ++b) {
    int base_tag = input.has_tags() ? input.at(b).tag : 0;
    for (int v = 0; v < levels; ++v)
      symbols.emplace_back(input.at(b).base, base_tag * levels + v);
  }
  return Alphabet::of_symbols(std::move(symbols));
}

}  // namespace

GammaProgram feedback_sweep(const AlphabetRef& alphabet, int n) {
  if (!alphabet) throw Error("feedback_sweep: missing alphabet");
  GammaProgram g;
  g.input_alphabet = alphabet;
  g.n = n;
  g.output_alphabet = alphabet;
  std::vector<int> id = identity_map(alphabet->size());
  for (int i = 2; i <= n; ++i) {
    g.instructions.push_back(Instruction{i, id});
    g.instructions.push_back(Instruction{i - 1, id});
  }
  return g;
}

LangExpr sweep_target_language() {
  AlphabetRef sig = Alphabet::of_chars("abc");
  auto sh = [&](const char* s) {
    return LangExpr::shuffle_ideal(Word::parse(sig, s));
  };
  return LangExpr::intersection_of(
      {sh("ca"), LangExpr::complement(sh("cca")),
       LangExpr::complement(sh("caa")), LangExpr::complement(sh("cb"))});
}

void DecoratedSweepPlan::validate() const {
  if (u.empty()) throw Error("decorated sweep: u must be nonempty");
  if (!u.alphabet()) throw Error("decorated sweep: missing alphabet");
  std::vector<int> seen(u.alphabet()->size(), 0);
  for (int i = 0; i < u.length(); ++i) {
    if (seen[u.letter(i)]++)
      throw Error("decorated sweep: u must have pairwise distinct letters");
  }
  if (!same_alphabet(u.alphabet(), x1.alphabet()) ||
      !same_alphabet(u.alphabet(), x2.alphabet()))
    throw Error("decorated sweep: u, x1, x2 must share an alphabet");
  if (alpha < 1) throw Error("decorated sweep: alpha must be >= 1");
}

DecoratedSweep decorated_sweep(const DecoratedSweepPlan& plan, int n) {
  plan.validate();
  const AlphabetRef& input = plan.u.alphabet();
  int m = plan.u.length();
  int levels = 2 * m - 1;
  AlphabetRef dec = leveled_alphabet(*input, levels);

  // Maps sending letter a to (a, level).
  std::vector<std::vector<int>> level_map(levels);
  for (int v = 0; v < levels; ++v) {
    level_map[v].resize(input->size());
    for (int a = 0; a < input->size(); ++a) level_map[v][a] = a * levels + v;
  }

  GammaProgram g;
  g.input_alphabet = input;
  g.n = n;
  g.output_alphabet = dec;
  if (n >= m) {
    for (int i = 1; i < m; ++i)
      g.instructions.push_back(Instruction{i, level_map[0]});
    for (int i = m; i <= n; ++i) {
      g.instructions.push_back(Instruction{i, level_map[0]});
      for (int j = 1; j < m; ++j)
        g.instructions.push_back(Instruction{i - j, level_map[j]});
      for (int j = 2; j <= m; ++j)
        g.instructions.push_back(Instruction{i - m + j, level_map[m + j - 2]});
    }
  }

  auto lift = [&](const Word& w, int level) {
    std::vector<int> letters;
    letters.reserve(w.length());
    for (int i = 0; i < w.length(); ++i)
      letters.push_back(w.letter(i) * levels + level);
    return Word(dec, std::move(letters));
  };

  // The marker factor: u at level 0, then u's letters swept back at levels
  // 1..m-1 and forward again at levels m..2m-2.
  std::vector<int> mid;
  for (int i = 0; i < m; ++i) mid.push_back(plan.u.letter(i) * levels);
  for (int j = 1; j < m; ++j)
    mid.push_back(plan.u.letter(m - j - 1) * levels + j);
  for (int j = 2; j <= m; ++j)
    mid.push_back(plan.u.letter(j - 1) * levels + (m + j - 2));
  Word marker(dec, std::move(mid));

  std::vector<LangExpr> witnesses;
  for (int beta = 1; beta <= plan.alpha; ++beta) {
    Word zeta = lift(plan.x1, 0)
                    .concat(lift(plan.u.repeat(beta - 1), 0))
                    .concat(marker)
                    .concat(lift(plan.u.repeat(plan.alpha - beta), 0))
                    .concat(lift(plan.x2, 0));
    witnesses.push_back(LangExpr::shuffle_ideal(zeta));
  }
  Word overfull =
      lift(plan.x1.concat(plan.u.repeat(plan.alpha + 1)).concat(plan.x2), 0);
  LangExpr target = LangExpr::intersection_of(
      {LangExpr::union_of(std::move(witnesses)),
       LangExpr::complement(LangExpr::shuffle_ideal(overfull))});

  return DecoratedSweep{std::move(g), std::move(target)};
}

GammaProgram modular_decoration(const AlphabetRef& alphabet, int d, int n) {
  if (!alphabet) throw Error("modular_decoration: missing alphabet");
  if (d < 1) throw Error("modular_decoration: d must be >= 1");
  AlphabetRef tagged = leveled_alphabet(*alphabet, d);
  GammaProgram g;
  g.input_alphabet = alphabet;
  g.n = n;
  g.output_alphabet = tagged;
  std::vector<std::vector<int>> residue_map(d);
  for (int r = 0; r < d; ++r) {
    residue_map[r].resize(alphabet->size());
    for (int a = 0; a < alphabet->size(); ++a) residue_map[r][a] = a * d + r;
  }
  for (int j = 1; j <= n; ++j)
    g.instructions.push_back(Instruction{j, residue_map[(j - 1) % d]});
  return g;
}

}  // namespace mpj
