#include "mpj/programs.hpp"

#include <utility>

#include "mpj/dfa.hpp"
#include "mpj/lang.hpp"

namespace mpj {

namespace {

void check_instructions(const AlphabetRef& input, int n,
                        const std::vector<Instruction>& instructions,
                        int out_range, const char* what) {
  if (!input) throw Error(std::string(what) + ": missing input alphabet");
  if (n < 0) throw Error(std::string(what) + ": negative input length");
  for (const Instruction& ins : instructions) {
    if (ins.pos < 1 || ins.pos > n)
      throw Error(std::string(what) + ": instruction position " +
                  std::to_string(ins.pos) + " outside 1.." + std::to_string(n));
    if (static_cast<int>(ins.out.size()) != input->size())
      throw Error(std::string(what) + ": output map arity mismatch");
    for (int v : ins.out)
      if (v < 0 || v >= out_range)
        throw Error(std::string(what) + ": output value out of range");
  }
}

void check_input(const AlphabetRef& expected, int n, const Word& w) {
  if (!same_alphabet(expected, w.alphabet()))
    throw Error("program input over the wrong alphabet");
  if (w.length() != n)
    throw Error("program expects input length " + std::to_string(n) + ", got " +
                std::to_string(w.length()));
}

template <typename P>
std::vector<Instruction> composed_instructions(const GammaProgram& g,
                                               const P& q) {
  if (!same_alphabet(q.input_alphabet, g.output_alphabet))
    throw Error("compose_reduction: alphabet mismatch");
  if (q.n != static_cast<int>(g.instructions.size()))
    throw Error("compose_reduction: inner program expects length " +
                std::to_string(q.n) + ", outer emits " +
                std::to_string(g.instructions.size()));
  int sigma = g.input_alphabet->size();
  std::vector<Instruction> out;
  out.reserve(q.instructions.size());
  for (const Instruction& qi : q.instructions) {
    const Instruction& gi = g.instructions[qi.pos - 1];
    Instruction ins;
    ins.pos = gi.pos;
    ins.out.resize(sigma);
    for (int a = 0; a < sigma; ++a) ins.out[a] = qi.out[gi.out[a]];
    out.push_back(std::move(ins));
  }
  return out;
}

}  // namespace

void Program::validate() const {
  if (!target) throw Error("program: missing target monoid");
  check_instructions(input_alphabet, n, instructions, target->size(),
                     "program");
  if (static_cast<int>(accept.size()) != target->size())
    throw Error("program: accept vector size mismatch");
}

void GammaProgram::validate() const {
  if (!output_alphabet) throw Error("program: missing output alphabet");
  check_instructions(input_alphabet, n, instructions, output_alphabet->size(),
                     "word program");
}

int eval(const Program& p, const Word& w) {
  check_input(p.input_alphabet, p.n, w);
  int acc = p.target->one();
  for (const Instruction& ins : p.instructions)
    acc = p.target->mul(acc, ins.out[w.letter(ins.pos - 1)]);
  return acc;
}

std::vector<int> eval_trace(const Program& p, const Word& w) {
  check_input(p.input_alphabet, p.n, w);
  std::vector<int> trace;
  trace.reserve(p.instructions.size());
  for (const Instruction& ins : p.instructions)
    trace.push_back(ins.out[w.letter(ins.pos - 1)]);
  return trace;
}

bool recognizes(const Program& p, const Word& w) {
  return p.accept[eval(p, w)];
}

Word gamma_eval(const GammaProgram& g, const Word& w) {
  check_input(g.input_alphabet, g.n, w);
  std::vector<int> letters;
  letters.reserve(g.instructions.size());
  for (const Instruction& ins : g.instructions)
    letters.push_back(ins.out[w.letter(ins.pos - 1)]);
  return Word(g.output_alphabet, std::move(letters));
}

Program compose_reduction(const GammaProgram& g, const Program& q) {
  Program out;
  out.input_alphabet = g.input_alphabet;
  out.n = g.n;
  out.target = q.target;
  out.instructions = composed_instructions(g, q);
  out.accept = q.accept;
  return out;
}

GammaProgram compose_reduction(const GammaProgram& g, const GammaProgram& q) {
  GammaProgram out;
  out.input_alphabet = g.input_alphabet;
  out.n = g.n;
  out.output_alphabet = q.output_alphabet;
  out.instructions = composed_instructions(g, q);
  return out;
}

Program boolean_combine(const Program& p1, const Program& p2, BoolCombine op,
                        int cap) {
  if (!same_alphabet(p1.input_alphabet, p2.input_alphabet) || p1.n != p2.n)
    throw Error("boolean_combine: programs read different inputs");
  auto product = std::make_shared<FiniteMonoid>(
      direct_product(*p1.target, *p2.target, cap));
  int s2 = p2.target->size();
  int id1 = p1.target->one();
  int id2 = p2.target->one();

  Program out;
  out.input_alphabet = p1.input_alphabet;
  out.n = p1.n;
  out.target = product;
  out.instructions.reserve(p1.instructions.size() + p2.instructions.size());
  for (const Instruction& ins : p1.instructions) {
    Instruction lifted{ins.pos, {}};
    lifted.out.reserve(ins.out.size());
    for (int v : ins.out) lifted.out.push_back(v * s2 + id2);
    out.instructions.push_back(std::move(lifted));
  }
  for (const Instruction& ins : p2.instructions) {
    Instruction lifted{ins.pos, {}};
    lifted.out.reserve(ins.out.size());
    for (int v : ins.out) lifted.out.push_back(id1 * s2 + v);
    out.instructions.push_back(std::move(lifted));
  }
  out.accept.resize(product->size());
  for (int x = 0; x < p1.target->size(); ++x)
    for (int y = 0; y < s2; ++y)
      out.accept[x * s2 + y] = op == BoolCombine::kAnd
                                   ? (p1.accept[x] && p2.accept[y])
                                   : (p1.accept[x] || p2.accept[y]);
  return out;
}

Program negate_program(Program p) {
  for (size_t i = 0; i < p.accept.size(); ++i) p.accept[i] = !p.accept[i];
  return p;
}

Program morphism_program(const GeneratedMorphism& phi, std::vector<bool> accept,
                         int n) {
  if (static_cast<int>(accept.size()) != phi.target->size())
    throw Error("morphism_program: accept vector size mismatch");
  Program out;
  out.input_alphabet = phi.alphabet;
  out.n = n;
  out.target = phi.target;
  out.accept = std::move(accept);
  out.instructions.reserve(n);
  for (int i = 1; i <= n; ++i)
    out.instructions.push_back(Instruction{i, phi.letter_image});
  return out;
}

namespace {

Program window_program(const Word& u, int n, int first_pos) {
  SyntacticMonoid syn = syntactic_monoid(compile(LangExpr::word(u)));
  Program out;
  out.input_alphabet = u.alphabet();
  out.n = n;
  out.target = syn.morphism.target;
  if (u.length() > n) {
    out.accept.assign(syn.morphism.target->size(), false);
    return out;
  }
  out.accept = syn.accept;
  for (int i = 0; i < u.length(); ++i)
    out.instructions.push_back(
        Instruction{first_pos + i, syn.morphism.letter_image});
  return out;
}

}  // namespace

Program prefix_program(const Word& u, int n) {
  return window_program(u, n, 1);
}

Program suffix_program(const Word& u, int n) {
  return window_program(u, n, n - u.length() + 1);
}

}  // namespace mpj
