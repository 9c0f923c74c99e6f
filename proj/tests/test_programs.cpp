#include <vector>

#include "doctest.h"
#include "mpj/programs.hpp"
#include "mpj/regex_lite.hpp"
#include "mpj/selectors.hpp"
#include "mpj/sweeps.hpp"

using namespace mpj;

namespace {

const AlphabetRef kAB = Alphabet::of_chars("ab");
const AlphabetRef kABC = Alphabet::of_chars("abc");
const AlphabetRef kBits = Alphabet::of_chars("01");

MonoidRef z2() {
  return std::make_shared<const FiniteMonoid>(
      FiniteMonoid::validate_and_build({{0, 1}, {1, 0}}, 0));
}

// Reads positions 1..n and emits 1 for 'a', 0 for 'b'; accepts even parity.
Program parity_program(int n) {
  Program p;
  p.input_alphabet = kAB;
  p.n = n;
  p.target = z2();
  for (int i = 1; i <= n; ++i) p.instructions.push_back({i, {1, 0}});
  p.accept = {true, false};
  return p;
}

}  // namespace

TEST_CASE("program validation") {
  Program p = parity_program(3);
  CHECK_NOTHROW(p.validate());

  Program bad_pos = p;
  bad_pos.instructions[0].pos = 4;
  CHECK_THROWS_AS(bad_pos.validate(), Error);
  bad_pos.instructions[0].pos = 0;
  CHECK_THROWS_AS(bad_pos.validate(), Error);

  Program bad_out = p;
  bad_out.instructions[1].out = {0, 1, 1};
  CHECK_THROWS_AS(bad_out.validate(), Error);

  Program bad_accept = p;
  bad_accept.accept = {true};
  CHECK_THROWS_AS(bad_accept.validate(), Error);

  GammaProgram g = feedback_sweep(kABC, 3);
  CHECK_NOTHROW(g.validate());
  g.instructions[0].out = {0, 1, 3};
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("evaluation order and traces") {
  Program p = parity_program(3);
  Word w = Word::parse(kAB, "aba");
  CHECK(eval_trace(p, w) == std::vector<int>{1, 0, 1});
  CHECK(eval(p, w) == 0);
  CHECK(recognizes(p, w));
  CHECK_FALSE(recognizes(p, Word::parse(kAB, "abb")));
  CHECK_THROWS_AS(eval(p, Word::parse(kAB, "ab")), Error);
}

TEST_CASE("morphism programs recognize morphism preimages") {
  SyntacticMonoid syn =
      syntactic_monoid(compile(LangExpr::shuffle_ideal(Word::parse(kAB, "ab"))));
  Dfa d = compile(LangExpr::shuffle_ideal(Word::parse(kAB, "ab")));
  for (int n = 0; n <= 4; ++n) {
    Program p = morphism_program(syn.morphism, syn.accept, n);
    CHECK(p.length() == n);
    WordEnumerator en(kAB, n, n);
    while (auto w = en.next()) CHECK(recognizes(p, *w) == d.member(*w));
  }
}

TEST_CASE("prefix and suffix programs") {
  Word u = Word::parse(kAB, "ab");
  for (int n = 0; n <= 4; ++n) {
    Program pre = prefix_program(u, n);
    Program suf = suffix_program(u, n);
    if (n >= u.length()) {
      CHECK(pre.length() == u.length());
      CHECK(suf.length() == u.length());
    } else {
      CHECK(pre.length() == 0);
    }
    WordEnumerator en(kAB, n, n);
    while (auto w = en.next()) {
      bool starts = n >= 2 && w->letter(0) == 0 && w->letter(1) == 1;
      bool ends = n >= 2 && w->letter(n - 2) == 0 && w->letter(n - 1) == 1;
      CHECK(recognizes(pre, *w) == starts);
      CHECK(recognizes(suf, *w) == ends);
    }
  }
}

TEST_CASE("boolean combinations multiply the targets") {
  Program even_a = parity_program(3);
  Program starts_ab = prefix_program(Word::parse(kAB, "ab"), 3);
  Program both = boolean_combine(even_a, starts_ab, BoolCombine::kAnd);
  Program either = boolean_combine(even_a, starts_ab, BoolCombine::kOr);
  Program not_even = negate_program(even_a);
  CHECK(both.length() == even_a.length() + starts_ab.length());
  CHECK(both.target->size() == even_a.target->size() * starts_ab.target->size());
  WordEnumerator en(kAB, 3, 3);
  while (auto w = en.next()) {
    bool x = recognizes(even_a, *w);
    bool y = recognizes(starts_ab, *w);
    CHECK(recognizes(both, *w) == (x && y));
    CHECK(recognizes(either, *w) == (x || y));
    CHECK(recognizes(not_even, *w) == !x);
  }
}

TEST_CASE("feedback sweep shape") {
  CHECK(feedback_sweep(kABC, 0).length() == 0);
  CHECK(feedback_sweep(kABC, 1).length() == 0);
  GammaProgram g = feedback_sweep(kABC, 4);
  std::vector<int> pos;
  for (const Instruction& ins : g.instructions) pos.push_back(ins.pos);
  CHECK(pos == std::vector<int>{2, 1, 3, 2, 4, 3});
  CHECK(gamma_eval(g, Word::parse(kABC, "abac")).to_string() == "baabca");
  CHECK(gamma_eval(g, Word::parse(kABC, "acba")).to_string() == "cabcab");
}

TEST_CASE("feedback sweep reduces (a+b)*ac+ to the target") {
  LangExpr source = parse_regex_lite("(a+b)*ac+");
  LangExpr target = sweep_target_language();
  CHECK(member(target, Word::parse(kABC, "baabca")));
  CHECK_FALSE(member(target, Word::parse(kABC, "cabcab")));
  for (int n = 0; n <= 4; ++n) {
    GammaProgram g = feedback_sweep(kABC, n);
    WordEnumerator en(kABC, n, n);
    while (auto w = en.next())
      CHECK(member(target, gamma_eval(g, *w)) == member(source, *w));
  }
}

TEST_CASE("composition chains position reads and output maps") {
  GammaProgram g = feedback_sweep(kABC, 3);
  SyntacticMonoid syn = syntactic_monoid(compile(sweep_target_language()));
  Program q = morphism_program(syn.morphism, syn.accept,
                               static_cast<int>(g.length()));
  Program comp = compose_reduction(g, q);
  CHECK(comp.n == 3);
  CHECK(comp.length() == q.length());

  GammaProgram q2 = modular_decoration(kABC, 2, static_cast<int>(g.length()));
  GammaProgram comp2 = compose_reduction(g, q2);

  WordEnumerator en(kABC, 3, 3);
  while (auto w = en.next()) {
    Word mid = gamma_eval(g, *w);
    CHECK(eval(comp, *w) == eval(q, mid));
    CHECK(recognizes(comp, *w) == recognizes(q, mid));
    CHECK(gamma_eval(comp2, *w) == gamma_eval(q2, mid));
  }

  Program wrong = q;
  wrong.n = 5;
  CHECK_THROWS_AS(compose_reduction(g, wrong), Error);
}

TEST_CASE("decorated sweep on a two-letter marker") {
  DecoratedSweepPlan plan{Word::parse(kAB, "ab"), Word(kAB, {}), Word(kAB, {}), 1};
  DecoratedSweep ds = decorated_sweep(plan, 2);
  CHECK(ds.program.length() == 4);
  std::vector<int> pos;
  for (const Instruction& ins : ds.program.instructions) pos.push_back(ins.pos);
  CHECK(pos == std::vector<int>{1, 2, 1, 2});
  CHECK(gamma_eval(ds.program, Word::parse(kAB, "ab")).to_string() ==
        "a:0,b:0,a:1,b:2");

  for (int n = 0; n <= 6; ++n) {
    int64_t len = decorated_sweep(plan, n).program.length();
    if (n < 2)
      CHECK(len == 0);
    else
      CHECK(len == 1 + (n - 1) * 3);
  }
}

TEST_CASE("decorated sweep reduces the refined block") {
  Word u = Word::parse(kAB, "ab");
  DecoratedSweepPlan plan{u, Word(kAB, {}), Word::parse(kAB, "b"), 1};
  LangExpr source = LangExpr::intersection_of(
      {LangExpr::concat({LangExpr::shuffle_ideal(plan.x1), LangExpr::word(u),
                         LangExpr::shuffle_ideal(plan.x2)}),
       LangExpr::shuffle_ideal(plan.x1.concat(u).concat(plan.x2)),
       LangExpr::complement(
           LangExpr::shuffle_ideal(plan.x1.concat(u.repeat(2)).concat(plan.x2)))});
  for (int n = 0; n <= 5; ++n) {
    DecoratedSweep ds = decorated_sweep(plan, n);
    WordEnumerator en(kAB, n, n);
    while (auto w = en.next())
      CHECK(member(ds.target, gamma_eval(ds.program, *w)) == member(source, *w));
  }
}

TEST_CASE("decorated sweep plan validation") {
  CHECK_THROWS_AS(
      decorated_sweep({Word(kAB, {}), Word(kAB, {}), Word(kAB, {}), 1}, 3),
      Error);
  CHECK_THROWS_AS(decorated_sweep({Word::parse(kAB, "aa"), Word(kAB, {}),
                                   Word(kAB, {}), 1},
                                  3),
                  Error);
  CHECK_THROWS_AS(decorated_sweep({Word::parse(kAB, "ab"), Word(kAB, {}),
                                   Word(kAB, {}), 0},
                                  3),
                  Error);
}

TEST_CASE("modular decoration tags positions by residue") {
  GammaProgram g = modular_decoration(kAB, 2, 3);
  CHECK(g.length() == 3);
  CHECK(gamma_eval(g, Word::parse(kAB, "aba")).to_string() == "a:0,b:1,a:0");
  CHECK_THROWS_AS(modular_decoration(kAB, 0, 3), Error);
}

TEST_CASE("selector marker languages") {
  LangExpr z0 = selector_language(0);
  CHECK(member(z0, Word::parse(z0.alphabet(), "e#e")));
  CHECK(member(z0, Word::parse(z0.alphabet(), "#")));
  CHECK_FALSE(member(z0, Word::parse(z0.alphabet(), "ee")));
  CHECK_FALSE(member(z0, Word::parse(z0.alphabet(), "")));

  LangExpr z1 = selector_language(1);
  CHECK(member(z1, Word::parse(z1.alphabet(), "T:0,#,B:0")));
  CHECK(member(z1, Word::parse(z1.alphabet(), "e,T:0,e,#,B:0,e")));
  CHECK_FALSE(member(z1, Word::parse(z1.alphabet(), "T:0,e,B:0")));
  CHECK_FALSE(member(z1, Word::parse(z1.alphabet(), "#")));
}

TEST_CASE("selector tables validate and index") {
  SelectorFn sigma{2, 2, {{1}, {}, {1, 2}, {2}}};
  CHECK_NOTHROW(sigma.validate());
  CHECK(sigma.rho_index({1, 1}) == 0);
  CHECK(sigma.rho_index({1, 2}) == 1);
  CHECK(sigma.rho_index({2, 1}) == 2);
  CHECK(sigma.at({2, 2}) == std::vector<int>{2});

  SelectorFn short_table{1, 2, {{1}}};
  CHECK_THROWS_AS(short_table.validate(), Error);
  SelectorFn bad_entry{1, 2, {{2, 1}, {}}};
  CHECK_THROWS_AS(bad_entry.validate(), Error);
  SelectorFn out_of_range{1, 2, {{3}, {}}};
  CHECK_THROWS_AS(out_of_range.validate(), Error);

  SelectorFn r1 = SelectorFn::random(1, 3, 11);
  SelectorFn r2 = SelectorFn::random(1, 3, 11);
  CHECK(r1.table == r2.table);
  CHECK_NOTHROW(r1.validate());
}

TEST_CASE("selector programs land in the marker language exactly on selected inputs") {
  SelectorFn base{0, 2, {{2}}};
  GammaProgram g = selector_program(base);
  CHECK(g.length() <= 2 * 1 * 2);
  CHECK(gamma_eval(g, Word::parse(kBits, "01")).to_string() == "e#");
  CHECK(gamma_eval(g, Word::parse(kBits, "00")).to_string() == "ee");

  for (uint64_t seed : {3u, 4u}) {
    SelectorFn sigma = SelectorFn::random(1, 2, seed);
    GammaProgram p = selector_program(sigma);
    CHECK(p.length() <= 2 * 2 * 4);
    LangExpr zk = selector_language(1);
    WordEnumerator en(kBits, 4, 4);
    while (auto w = en.next())
      CHECK(member(zk, gamma_eval(p, *w)) == selector_member(sigma, *w));
  }
}
