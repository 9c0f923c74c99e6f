#include <string>

#include "doctest.h"
#include "mpj/regex_lite.hpp"
#include "mpj/tddo.hpp"

using namespace mpj;

namespace {

const AlphabetRef kAB = Alphabet::of_chars("ab");
const AlphabetRef kABC = Alphabet::of_chars("abc");

LangExpr block(const AlphabetRef& a, std::initializer_list<const char*> us,
               int l) {
  std::vector<Word> factors;
  for (const char* u : us) factors.push_back(Word::parse(a, u));
  return LangExpr::threshold_block(a, std::move(factors), l);
}

void check_agreement(const LangExpr& e, int n_max,
                     const TddoOptions& opts = {}) {
  for (int n = 0; n <= n_max; ++n) {
    ProductProgram p = compile_tddo(e, n, opts);
    p.validate();
    WordEnumerator en(e.alphabet(), n, n);
    while (auto w = en.next()) CHECK(recognizes(p, *w) == member(e, *w));
  }
}

}  // namespace

TEST_CASE("formulas evaluate and print") {
  BoolFormula f = BoolFormula::and_of(
      {BoolFormula::leaf_of(0),
       BoolFormula::not_of(BoolFormula::or_of(
           {BoolFormula::leaf_of(1), BoolFormula::leaf_of(2)}))});
  CHECK(f.to_string() == "(#0 & !(#1 | #2))");
  CHECK(f.eval({true, false, false}));
  CHECK_FALSE(f.eval({true, true, false}));
  CHECK_FALSE(f.eval({false, false, false}));

  CHECK(BoolFormula::and_of({BoolFormula::leaf_of(3)}).to_string() == "#3");
  CHECK_THROWS_AS(BoolFormula::and_of({}), Error);
  CHECK_THROWS_AS(BoolFormula::or_of({}), Error);
  CHECK_THROWS_AS(BoolFormula::leaf_of(-1), Error);
}

TEST_CASE("product program validation") {
  ProductProgram p = compile_tddo(LangExpr::shuffle_ideal(Word::parse(kAB, "ab")), 3);
  CHECK_NOTHROW(p.validate());

  ProductProgram empty = p;
  empty.components.clear();
  CHECK_THROWS_AS(empty.validate(), Error);

  ProductProgram dangling = p;
  dangling.formula = BoolFormula::leaf_of(5);
  CHECK_THROWS_AS(dangling.validate(), Error);

  ProductProgram skew = p;
  skew.components[0].n = 7;
  CHECK_THROWS_AS(skew.validate(), Error);
}

TEST_CASE("shuffle ideals compile to morphism reads") {
  LangExpr e = LangExpr::shuffle_ideal(Word::parse(kAB, "ab"));
  ProductProgram p = compile_tddo(e, 4);
  CHECK(p.components.size() == 1);
  CHECK(p.components[0].length() == 4);
  check_agreement(e, 4);
}

TEST_CASE("distinct-letter blocks expand over exponent vectors") {
  check_agreement(block(kABC, {"ab"}, 2), 4);
  check_agreement(block(kABC, {"ab", "c"}, 2), 4);
  check_agreement(block(kAB, {"ab"}, 3), 4);
}

TEST_CASE("repeated-letter factors route through modular decoration") {
  check_agreement(block(kAB, {"aba"}, 2), 4);
}

TEST_CASE("boolean shells and atoms") {
  LangExpr e = LangExpr::union_of(
      {LangExpr::prefix(Word::parse(kAB, "ab")),
       LangExpr::complement(LangExpr::suffix(Word::parse(kAB, "b")))});
  check_agreement(e, 4);
}

TEST_CASE("the compiled identity for (a+b)*ac+ uses targets in J") {
  LangExpr e = LangExpr::intersection_of(
      {LangExpr::complement(block(kABC, {"c", "a"}, 2)),
       LangExpr::complement(block(kABC, {"c", "b"}, 2)),
       block(kABC, {"ac"}, 2)});
  LangExpr regex = parse_regex_lite("(a+b)*ac+");
  for (int n = 0; n <= 4; ++n) {
    ProductProgram p = compile_tddo(e, n);
    for (const Program& comp : p.components)
      CHECK(check_variety(*comp.target, Variety::kJ).holds);
    WordEnumerator en(kABC, n, n);
    while (auto w = en.next()) CHECK(recognizes(p, *w) == member(regex, *w));
  }
}

TEST_CASE("operators outside the grammar are refused") {
  std::string message;
  try {
    compile_tddo(LangExpr::factor(Word::parse(kAB, "ab")), 3);
  } catch (const Error& e) {
    message = e.what();
  }
  CHECK(message.find("unsupported") != std::string::npos);
  CHECK_THROWS_AS(compile_tddo(LangExpr::word(Word::parse(kAB, "ab")), 3),
                  Error);
}

TEST_CASE("component budget") {
  TddoOptions opts;
  opts.component_cap = 2;
  CHECK_THROWS_AS(compile_tddo(block(kABC, {"ab", "c"}, 2), 3, opts),
                  CapExceeded);
}
