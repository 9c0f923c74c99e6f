#include <string>
#include <vector>

#include "doctest.h"
#include "mpj/json_io.hpp"
#include "mpj/sweeps.hpp"

using namespace mpj;

namespace {

const AlphabetRef kAB = Alphabet::of_chars("ab");
const AlphabetRef kABC = Alphabet::of_chars("abc");

LangExpr sample_exprs(int which) {
  Word ab = Word::parse(kAB, "ab");
  switch (which) {
    case 0: return LangExpr::shuffle_ideal(ab);
    case 1: return LangExpr::factor(ab);
    case 2: return LangExpr::prefix(ab);
    case 3: return LangExpr::suffix(ab);
    case 4: return LangExpr::word(ab);
    case 5:
      return LangExpr::threshold_block(
          kABC, {Word::parse(kABC, "ab"), Word::parse(kABC, "c")}, 2);
    case 6: return LangExpr::l_block(ab, 3, 2);
    case 7:
      return LangExpr::r_lang(kABC, {Word::parse(kABC, "ab"),
                                     Word::parse(kABC, "c")}, 2, {1, 2});
    case 8:
      return LangExpr::s_lang(kABC, {Word::parse(kABC, "ab"),
                                     Word::parse(kABC, "c")}, 2, {2, 1});
    case 9: {
      CostaForm f;
      f.alphabet = kAB;
      f.r = 1;
      f.u = {Word::parse(kAB, "a"), Word::parse(kAB, "a")};
      f.sets = {{1}};
      return LangExpr::costa(f);
    }
    case 10: return LangExpr::letter_set(kAB, {0});
    case 11: return LangExpr::letters_star(kAB, {1});
    case 12: return LangExpr::letters_at_least(kABC, {2}, 2);
    case 13:
      return LangExpr::union_of({LangExpr::word(ab), LangExpr::prefix(ab)});
    case 14:
      return LangExpr::intersection_of(
          {LangExpr::shuffle_ideal(ab),
           LangExpr::complement(LangExpr::factor(ab))});
    default:
      return LangExpr::concat({LangExpr::letters_star(kAB, {0}),
                               LangExpr::word(ab)});
  }
}

}  // namespace

TEST_CASE("monoid round-trip") {
  MonoidRef m = syntactic_monoid(
                    compile(LangExpr::shuffle_ideal(Word::parse(kAB, "ab"))))
                    .morphism.target;
  Json j = monoid_to_json(*m);
  MonoidRef back = monoid_from_json(j);
  CHECK(back->size() == m->size());
  CHECK(back->table() == m->table());
  CHECK(back->one() == m->one());

  Json broken = j;
  broken["identity"] = nullptr;
  CHECK_THROWS_AS(monoid_from_json(broken), Error);
}

TEST_CASE("morphism round-trip") {
  GeneratedMorphism phi =
      syntactic_monoid(compile(LangExpr::shuffle_ideal(Word::parse(kAB, "ab"))))
          .morphism;
  GeneratedMorphism back = morphism_from_json(morphism_to_json(phi));
  CHECK(same_alphabet(back.alphabet, phi.alphabet));
  WordEnumerator en(kAB, 0, 4);
  while (auto w = en.next()) CHECK(back.eval(*w) == phi.eval(*w));
}

TEST_CASE("dfa round-trip") {
  Dfa d = compile(LangExpr::shuffle_ideal(Word::parse(kAB, "ab")));
  Dfa back = dfa_from_json(dfa_to_json(d));
  CHECK(back.delta == d.delta);
  CHECK(back.accept == d.accept);
  CHECK(back.start == d.start);
  CHECK_FALSE(dfa_equal(d, back).has_value());
}

TEST_CASE("expression round-trips preserve shape and language") {
  for (int which = 0; which <= 15; ++which) {
    CAPTURE(which);
    LangExpr e = sample_exprs(which);
    LangExpr back = expr_from_json(expr_to_json(e));
    CHECK(back.pretty() == e.pretty());
    CHECK_FALSE(dfa_equal(compile(back), compile(e)).has_value());
  }
}

TEST_CASE("program round-trip") {
  SyntacticMonoid syn = syntactic_monoid(
      compile(LangExpr::shuffle_ideal(Word::parse(kAB, "ab"))));
  Program p = morphism_program(syn.morphism, syn.accept, 3);
  Json j = program_to_json(p);
  CHECK(j.contains("instructions"));
  Program back = program_from_json(j);
  CHECK(back.accept == p.accept);
  WordEnumerator en(kAB, 3, 3);
  while (auto w = en.next()) {
    CHECK(eval(back, *w) == eval(p, *w));
    CHECK(recognizes(back, *w) == recognizes(p, *w));
  }
}

TEST_CASE("identity output maps collapse in word-program JSON") {
  GammaProgram g = feedback_sweep(kABC, 3);
  Json j = gamma_to_json(g);
  REQUIRE(!j["instructions"].empty());
  CHECK(j["instructions"][0]["map"] == "identity");
  GammaProgram back = gamma_from_json(j);
  WordEnumerator en(kABC, 3, 3);
  while (auto w = en.next()) CHECK(gamma_eval(back, *w) == gamma_eval(g, *w));

  GammaProgram dec = modular_decoration(kAB, 2, 3);
  Json jd = gamma_to_json(dec);
  CHECK(jd["instructions"][0]["map"].is_object());
  GammaProgram dback = gamma_from_json(jd);
  WordEnumerator den(kAB, 3, 3);
  while (auto w = den.next())
    CHECK(gamma_eval(dback, *w) == gamma_eval(dec, *w));
}

TEST_CASE("selector round-trip") {
  SelectorFn s = SelectorFn::random(1, 3, 5);
  SelectorFn back = selector_from_json(selector_to_json(s));
  CHECK(back.k == s.k);
  CHECK(back.n == s.n);
  CHECK(back.table == s.table);
}

TEST_CASE("product program round-trip") {
  LangExpr e = LangExpr::threshold_block(kAB, {Word::parse(kAB, "ab")}, 2);
  ProductProgram p = compile_tddo(e, 3);
  Json j = product_program_to_json(p);
  ProductProgram back = product_program_from_json(j);
  back.validate();
  CHECK(back.formula.to_string() == p.formula.to_string());
  CHECK(back.components.size() == p.components.size());
  WordEnumerator en(kAB, 3, 3);
  while (auto w = en.next()) CHECK(recognizes(back, *w) == recognizes(p, *w));
}

TEST_CASE("report JSON carries the verdict and counterexample") {
  VerificationReport pass =
      run_check(CheckSpec{"sweep-reduction", {{"n_max", "2"}}});
  Json jp = report_to_json(pass);
  CHECK(jp["check_id"] == "sweep-reduction");
  CHECK(jp["verdict"] == "pass");
  CHECK(jp["counterexample"].is_null());
  CHECK(jp["instances_checked"].get<int64_t>() == 13);

  VerificationReport fail =
      run_check(CheckSpec{"sweep-reduction-straight", {{"n_max", "3"}}});
  Json jf = report_to_json(fail);
  CHECK(jf["verdict"] == "fail");
  REQUIRE(jf["counterexample"].is_object());
  CHECK(jf["counterexample"]["alphabet"] == "abc");
  CHECK(jf.contains("context"));
}

TEST_CASE("check specs and suites round-trip") {
  std::vector<CheckSpec> suite = default_suite();
  Json j = Json::array();
  for (const CheckSpec& s : suite) j.push_back(check_spec_to_json(s));
  std::vector<CheckSpec> back = suite_from_json(j);
  REQUIRE(back.size() == suite.size());
  for (size_t i = 0; i < suite.size(); ++i) {
    CHECK(back[i].check_id == suite[i].check_id);
    CHECK(back[i].parameters == suite[i].parameters);
  }

  CheckSpec bare = check_spec_from_json(Json{{"check_id", "variety-claims"}});
  CHECK(bare.check_id == "variety-claims");
  CHECK(bare.parameters.empty());
}
