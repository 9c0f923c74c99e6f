#include "mpj/tddo.hpp"

#include <algorithm>
#include <utility>

#include "mpj/dfa.hpp"
#include "mpj/sweeps.hpp"

namespace mpj {

BoolFormula BoolFormula::leaf_of(int component) {
  if (component < 0) throw Error("formula leaf must reference a component");
  BoolFormula f;
  f.kind = Kind::kLeaf;
  f.leaf = component;
  return f;
}

BoolFormula BoolFormula::and_of(std::vector<BoolFormula> kids) {
  if (kids.empty()) throw Error("empty conjunction");
  if (kids.size() == 1) return std::move(kids[0]);
  BoolFormula f;
  f.kind = Kind::kAnd;
  f.kids = std::move(kids);
  return f;
}

BoolFormula BoolFormula::or_of(std::vector<BoolFormula> kids) {
  if (kids.empty()) throw Error("empty disjunction");
  if (kids.size() == 1) return std::move(kids[0]);
  BoolFormula f;
  f.kind = Kind::kOr;
  f.kids = std::move(kids);
  return f;
}

BoolFormula BoolFormula::not_of(BoolFormula g) {
  BoolFormula f;
  f.kind = Kind::kNot;
  f.kids.push_back(std::move(g));
  return f;
}

bool BoolFormula::eval(const std::vector<bool>& verdicts) const {
  switch (kind) {
    case Kind::kLeaf:
      if (leaf < 0 || leaf >= static_cast<int>(verdicts.size()))
        throw Error("formula references component " + std::to_string(leaf));
      return verdicts[leaf];
    case Kind::kAnd:
      for (const BoolFormula& f : kids)
        if (!f.eval(verdicts)) return false;
      return true;
    case Kind::kOr:
      for (const BoolFormula& f : kids)
        if (f.eval(verdicts)) return true;
      return false;
    case Kind::kNot:
      return !kids[0].eval(verdicts);
  }
  throw Error("bad formula node");
}

std::string BoolFormula::to_string() const {
  switch (kind) {
    case Kind::kLeaf:
      return "#" + std::to_string(leaf);
    case Kind::kAnd:
    case Kind::kOr: {
      std::string out = "(";
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out += kind == Kind::kAnd ? " & " : " | ";
        out += kids[i].to_string();
      }
      return out + ")";
    }
    case Kind::kNot:
      return "!" + kids[0].to_string();
  }
  return "?";
}

int64_t ProductProgram::length() const {
  int64_t total = 0;
  for (const Program& p : components) total += p.length();
  return total;
}

namespace {

void check_formula_leaves(const BoolFormula& f, int count) {
  if (f.kind == BoolFormula::Kind::kLeaf) {
    if (f.leaf < 0 || f.leaf >= count)
      throw Error("formula references missing component " +
                  std::to_string(f.leaf));
    return;
  }
  for (const BoolFormula& g : f.kids) check_formula_leaves(g, count);
}

}  // namespace

void ProductProgram::validate() const {
  if (components.empty()) throw Error("product program has no components");
  for (const Program& p : components) {
    p.validate();
    if (!same_alphabet(p.input_alphabet, input_alphabet) || p.n != n)
      throw Error("product program components read different inputs");
  }
  check_formula_leaves(formula, static_cast<int>(components.size()));
}

bool recognizes(const ProductProgram& p, const Word& w) {
  std::vector<bool> verdicts;
  verdicts.reserve(p.components.size());
  for (const Program& c : p.components) verdicts.push_back(recognizes(c, w));
  return p.formula.eval(verdicts);
}

namespace {

bool distinct_letters(const Word& u) {
  std::vector<int> seen;
  for (int i = 0; i < u.length(); ++i) {
    if (std::find(seen.begin(), seen.end(), u.letter(i)) != seen.end())
      return false;
    seen.push_back(u.letter(i));
  }
  return true;
}

/// Odometer over {low..high}^k in place; returns false after the last tuple.
bool bump(std::vector<int>& v, int low, int high) {
  for (size_t i = v.size(); i-- > 0;) {
    if (v[i] < high) {
      ++v[i];
      std::fill(v.begin() + i + 1, v.end(), low);
      return true;
    }
  }
  return false;
}

struct TddoCompiler {
  int n;
  TddoOptions opts;
  std::vector<Program> components;

  int add(Program p) {
    if (static_cast<int64_t>(components.size()) >= opts.component_cap)
      throw CapExceeded("compile_tddo: more than " +
                        std::to_string(opts.component_cap) + " components");
    components.push_back(std::move(p));
    return static_cast<int>(components.size()) - 1;
  }

  /// One component reading positions 1..len through the syntactic morphism
  /// of e, optionally precomposed with a decoration.
  BoolFormula pt_leaf(const LangExpr& e, const GammaProgram* dec) {
    SyntacticMonoid syn = syntactic_monoid(compile(e, opts.state_cap));
    Program p = morphism_program(syn.morphism, std::move(syn.accept), n);
    if (dec) p = compose_reduction(*dec, p);
    return BoolFormula::leaf_of(add(std::move(p)));
  }

  /// Alpha-expansion of a block list whose factors all have pairwise
  /// distinct letters. Components read the same alphabet as the factors;
  /// `dec` (when set) precomposes them down to the undecorated input.
  BoolFormula expand_distinct(const AlphabetRef& a, const std::vector<Word>& us,
                              int l, const GammaProgram* dec) {
    int k = static_cast<int>(us.size());
    std::vector<BoolFormula> alts;
    std::vector<int> alpha(k, 1);
    do {
      std::vector<BoolFormula> leaves;

      Word base(a, {});
      for (int i = 0; i < k; ++i) base = base.concat(us[i].repeat(alpha[i]));
      std::vector<LangExpr> embed{LangExpr::shuffle_ideal(base)};
      for (int i = 0; i < k; ++i) {
        if (alpha[i] >= l) continue;
        Word bumped(a, {});
        for (int j = 0; j < k; ++j)
          bumped = bumped.concat(us[j].repeat(alpha[j] + (j == i ? 1 : 0)));
        embed.push_back(
            LangExpr::complement(LangExpr::shuffle_ideal(bumped)));
      }
      leaves.push_back(pt_leaf(LangExpr::intersection_of(std::move(embed)), dec));

      for (int i = 0; i < k; ++i) {
        if (alpha[i] >= l) continue;
        DecoratedSweepPlan plan;
        plan.u = us[i];
        plan.x1 = Word(a, {});
        for (int j = 0; j < i; ++j)
          plan.x1 = plan.x1.concat(us[j].repeat(alpha[j]));
        plan.x2 = Word(a, {});
        for (int j = i + 1; j < k; ++j)
          plan.x2 = plan.x2.concat(us[j].repeat(alpha[j]));
        plan.alpha = alpha[i];
        DecoratedSweep ds = decorated_sweep(plan, n);
        SyntacticMonoid syn =
            syntactic_monoid(compile(ds.target, opts.state_cap));
        Program inner =
            morphism_program(syn.morphism, std::move(syn.accept),
                             static_cast<int>(ds.program.length()));
        Program p = compose_reduction(ds.program, inner);
        if (dec) p = compose_reduction(*dec, p);
        leaves.push_back(BoolFormula::leaf_of(add(std::move(p))));
      }
      alts.push_back(BoolFormula::and_of(std::move(leaves)));
    } while (bump(alpha, 1, l));
    return BoolFormula::or_of(std::move(alts));
  }

  BoolFormula block(const AlphabetRef& a, const std::vector<Word>& us, int l) {
    bool all_single = true;
    bool all_distinct = true;
    int d = 1;
    for (const Word& u : us) {
      if (u.length() > 1) all_single = false;
      if (!distinct_letters(u)) all_distinct = false;
      d = std::max(d, u.length());
    }
    // Single-letter blocks are threshold-oblivious: <b>_l = (b shuffle), so
    // the whole list collapses to the shuffle ideal of the concatenation.
    // The same happens for l = 1.
    if (l == 1 || all_single) {
      Word flat(a, {});
      for (const Word& u : us) flat = flat.concat(u);
      return pt_leaf(LangExpr::shuffle_ideal(flat), nullptr);
    }
    if (all_distinct) return expand_distinct(a, us, l, nullptr);

    // Factors with repeated letters: tag positions by residue mod d, split
    // each factor into either itself or its letters listed l times, and
    // expand every residue-shifted variant; shifted factors have distinct
    // (tagged) letters since their length is at most d.
    GammaProgram dec = modular_decoration(a, d, n);
    const AlphabetRef& ad = dec.output_alphabet;
    int k = static_cast<int>(us.size());
    auto tilde = [&](const Word& v, int shift) {
      std::vector<int> letters;
      for (int j = 0; j < v.length(); ++j)
        letters.push_back(v.letter(j) * d + (shift + j) % d);
      return Word(ad, std::move(letters));
    };

    std::vector<BoolFormula> branches;
    std::vector<int> q(k, 0);  // 0: keep whole, 1: split into letters
    do {
      std::vector<Word> vs;
      for (int i = 0; i < k; ++i) {
        if (q[i] == 0) {
          vs.push_back(us[i]);
        } else {
          for (int rep = 0; rep < l; ++rep)
            for (int j = 0; j < us[i].length(); ++j)
              vs.push_back(us[i].slice(j, j + 1));
        }
      }
      bool singles = std::all_of(vs.begin(), vs.end(),
                                 [](const Word& v) { return v.length() == 1; });
      if (singles) {
        Word flat(a, {});
        for (const Word& v : vs) flat = flat.concat(v);
        branches.push_back(pt_leaf(LangExpr::shuffle_ideal(flat), nullptr));
        continue;
      }
      std::vector<int> shifts(vs.size(), 0);
      do {
        std::vector<Word> tagged;
        for (size_t j = 0; j < vs.size(); ++j)
          tagged.push_back(tilde(vs[j], shifts[j]));
        branches.push_back(expand_distinct(ad, tagged, l, &dec));
      } while (bump(shifts, 0, d - 1));
    } while (bump(q, 0, 1));
    return BoolFormula::or_of(std::move(branches));
  }

  BoolFormula go(const LangExpr& e) {
    switch (e.op()) {
      case LangOp::kPrefix:
        return BoolFormula::leaf_of(add(prefix_program(e.single_word(), n)));
      case LangOp::kSuffix:
        return BoolFormula::leaf_of(add(suffix_program(e.single_word(), n)));
      case LangOp::kShuffleIdeal:
        return pt_leaf(e, nullptr);
      case LangOp::kThresholdBlock:
        return block(e.alphabet(), e.factors(), e.l());
      case LangOp::kUnion:
      case LangOp::kIntersection: {
        std::vector<BoolFormula> kids;
        for (const LangExpr& c : e.children()) kids.push_back(go(c));
        return e.op() == LangOp::kUnion
                   ? BoolFormula::or_of(std::move(kids))
                   : BoolFormula::and_of(std::move(kids));
      }
      case LangOp::kComplement:
        return BoolFormula::not_of(go(e.children()[0]));
      default:
        throw Error("compile_tddo: unsupported operator in " + e.pretty());
    }
  }
};

}  // namespace

ProductProgram compile_tddo(const LangExpr& e, int n, const TddoOptions& opts) {
  if (n < 0) throw Error("compile_tddo: negative input length");
  TddoCompiler compiler{n, opts, {}};
  BoolFormula formula = compiler.go(e);
  ProductProgram out;
  out.input_alphabet = e.alphabet();
  out.n = n;
  out.components = std::move(compiler.components);
  out.formula = std::move(formula);
  return out;
}

}  // namespace mpj
