#pragma once

#include "mpj/lang.hpp"
#include "mpj/programs.hpp"

namespace mpj {

/// The word program with positions 2,1,3,2,...,n,n-1 and identity output
/// maps; empty when n <= 1.
GammaProgram feedback_sweep(const AlphabetRef& alphabet, int n);

/// Target over {a,b,c} whose preimage under feedback_sweep is
/// (a+b)* a c^+ sliced at each input length.
LangExpr sweep_target_language();

/// Parameters of one refined block (x1 shuffle) u (x2 shuffle), restricted to
/// words where u^alpha embeds but u^(alpha+1) does not.
struct DecoratedSweepPlan {
  Word u;  // nonempty, pairwise distinct letters
  Word x1;
  Word x2;
  int alpha = 1;

  void validate() const;
};

struct DecoratedSweep {
  GammaProgram program;  // output letters carry a sweep level tag
  LangExpr target;
};

/// Word program of length |u|-1 + (n-|u|+1)(2|u|-1) whose emitted letters are
/// tagged with a level in 0..2|u|-2, plus the target language it reduces the
/// plan's language to at each input length. Level tags compose with existing
/// input tags.
DecoratedSweep decorated_sweep(const DecoratedSweepPlan& plan, int n);

/// Letter-wise residue tagging: position j emits (w_j, (j-1) mod d).
GammaProgram modular_decoration(const AlphabetRef& alphabet, int d, int n);

}  // namespace mpj
