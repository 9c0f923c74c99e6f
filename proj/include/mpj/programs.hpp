#pragma once

#include <cstdint>
#include <vector>

#include "mpj/algebra.hpp"
#include "mpj/words.hpp"

namespace mpj {

/// One instruction: read input position `pos` (1-based) and emit
/// `out[letter]`. Outputs are monoid elements in a Program and output letter
/// indices in a GammaProgram.
struct Instruction {
  int pos = 1;
  std::vector<int> out;

  bool operator==(const Instruction&) const = default;
};

/// A straight-line program over a finite monoid: a fixed sequence of
/// instructions, each querying one position of a length-n input word. The
/// input is accepted when the product of the emitted elements, in
/// instruction order, lands in the accepting set.
struct Program {
  AlphabetRef input_alphabet;
  int n = 0;
  MonoidRef target;
  std::vector<Instruction> instructions;
  std::vector<bool> accept;  // indexed by monoid element

  int64_t length() const { return static_cast<int64_t>(instructions.size()); }
  void validate() const;
};

int eval(const Program& p, const Word& w);
/// The emitted element sequence, one entry per instruction.
std::vector<int> eval_trace(const Program& p, const Word& w);
bool recognizes(const Program& p, const Word& w);

/// A word-to-word program: instructions emit letters of an output alphabet,
/// and the output is the emitted word (length = instruction count, uniform
/// over all inputs of length n).
struct GammaProgram {
  AlphabetRef input_alphabet;
  int n = 0;
  AlphabetRef output_alphabet;
  std::vector<Instruction> instructions;

  int64_t length() const { return static_cast<int64_t>(instructions.size()); }
  void validate() const;
};

Word gamma_eval(const GammaProgram& g, const Word& w);

/// Composition: a program (resp. word-to-word program) on the original input
/// that behaves like q run on g's output. The j-th composed instruction
/// queries the position read by g's instruction number q_j.pos and chains the
/// two output maps. Requires q.n == g.length() and matching alphabets.
Program compose_reduction(const GammaProgram& g, const Program& q);
GammaProgram compose_reduction(const GammaProgram& g, const GammaProgram& q);

enum class BoolCombine { kAnd, kOr };

/// Direct product of two programs over the same input shape: p1's
/// instructions then p2's, emitting into target1 x target2; acceptance
/// combines the componentwise verdicts with `op`.
Program boolean_combine(const Program& p1, const Program& p2, BoolCombine op,
                        int cap = -1);
Program negate_program(Program p);

/// The n-instruction program reading positions 1..n left to right through a
/// morphism; recognizes phi^{-1}(accept) within Sigma^n.
Program morphism_program(const GeneratedMorphism& phi, std::vector<bool> accept,
                         int n);

/// Recognizes u Sigma^* (resp. Sigma^* u) within Sigma^n with |u|
/// instructions, independent of n.
Program prefix_program(const Word& u, int n);
Program suffix_program(const Word& u, int n);

}  // namespace mpj
