#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpj/lang.hpp"
#include "mpj/programs.hpp"

namespace mpj {

/// Boolean formula over component verdicts (leaves index components).
struct BoolFormula {
  enum class Kind { kLeaf, kAnd, kOr, kNot };

  Kind kind = Kind::kLeaf;
  int leaf = -1;
  std::vector<BoolFormula> kids;

  static BoolFormula leaf_of(int component);
  static BoolFormula and_of(std::vector<BoolFormula> kids);
  static BoolFormula or_of(std::vector<BoolFormula> kids);
  static BoolFormula not_of(BoolFormula f);

  bool eval(const std::vector<bool>& verdicts) const;
  std::string to_string() const;
};

/// Programs over one input shape combined by a Boolean formula over their
/// verdicts. Components stay separate (no flattened product monoid) so each
/// target can be inspected on its own.
struct ProductProgram {
  AlphabetRef input_alphabet;
  int n = 0;
  std::vector<Program> components;
  BoolFormula formula;

  int64_t length() const;
  void validate() const;
};

bool recognizes(const ProductProgram& p, const Word& w);

struct TddoOptions {
  int state_cap = -1;            // forwarded to language compilation
  int64_t component_cap = 4096;  // refuse expansions past this many programs
};

/// Compiles a language built from prefix/suffix atoms, shuffle ideals,
/// threshold blocks and Boolean combinators into a product of programs at
/// input length n. Blocks whose factors all have pairwise distinct letters
/// expand directly; factors with repeated letters route through modular
/// decoration first. Throws on operators outside this grammar.
ProductProgram compile_tddo(const LangExpr& e, int n,
                            const TddoOptions& opts = {});

}  // namespace mpj
