#include <map>
#include <string>

#include "doctest.h"
#include "mpj/regex_lite.hpp"
#include "mpj/sweeps.hpp"
#include "mpj/verify.hpp"

using namespace mpj;

namespace {

CheckSpec spec(std::string id, std::map<std::string, std::string> params) {
  return CheckSpec{std::move(id), std::move(params)};
}

}  // namespace

TEST_CASE("suites name their checks") {
  std::vector<std::string> ids;
  for (const CheckSpec& s : default_suite()) ids.push_back(s.check_id);
  CHECK(ids == std::vector<std::string>{
                   "sweep-reduction", "tddo-equality", "tddo-equality",
                   "tddo-equality", "costa", "compression", "variety-claims",
                   "selector", "building-block"});
  std::vector<std::string> mids;
  for (const CheckSpec& s : mutation_suite()) mids.push_back(s.check_id);
  CHECK(mids == std::vector<std::string>{"sweep-reduction-straight",
                                         "selector-shifted",
                                         "building-block-leveldrop"});
  CHECK_THROWS_AS(run_check(spec("no-such-check", {})), Error);
}

TEST_CASE("reduction check counts every word up to n_max") {
  VerificationReport r = run_check(spec("sweep-reduction", {{"n_max", "3"}}));
  CHECK(r.verdict == Verdict::kPass);
  CHECK(r.instances_checked == 40);  // 1 + 3 + 9 + 27
  CHECK_FALSE(r.counterexample.has_value());
  CHECK(r.render().find("[PASS] sweep-reduction") == 0);
  CHECK(r.render().find("n_max=3") != std::string::npos);
}

TEST_CASE("equality checks settle small instances exactly") {
  VerificationReport r = run_check(spec(
      "tddo-equality", {{"alphabet", "ab"}, {"l", "2"}, {"factors", "ab"}}));
  CHECK(r.verdict == Verdict::kPass);
  CHECK(r.note == "exact");

  VerificationReport skipped = run_check(spec(
      "tddo-equality", {{"alphabet", "ab"}, {"l", "2"}, {"factors", "aba"}}));
  CHECK(skipped.verdict == Verdict::kSkipped);
  CHECK(skipped.note.find("aba") != std::string::npos);
  CHECK(verdict_name(skipped.verdict) == std::string("skipped"));
  CHECK(skipped.render().find("[SKIP]") == 0);
}

TEST_CASE("costa, selector, compression and building-block checks pass") {
  CHECK(run_check(spec("costa", {{"r", "1"}, {"words", "a|a"}, {"sets", "b"},
                                 {"alphabet", "ab"}}))
            .verdict == Verdict::kPass);
  CHECK(run_check(spec("selector", {{"k", "1"}, {"n", "2"}, {"trials", "1"},
                                    {"seed", "7"}}))
            .verdict == Verdict::kPass);
  CHECK(run_check(spec("compression", {{"seed", "1"}, {"trials", "2"},
                                       {"n_max", "3"}, {"k_max", "2"}}))
            .verdict == Verdict::kPass);
  CHECK(run_check(spec("building-block",
                       {{"alphabet", "ab"}, {"u", "ab"}, {"alpha", "1"},
                        {"n_max", "3"}}))
            .verdict == Verdict::kPass);
}

TEST_CASE("straight reading is caught with a replayable counterexample") {
  VerificationReport r =
      run_check(spec("sweep-reduction-straight", {{"n_max", "3"}}));
  CHECK(r.verdict == Verdict::kFail);
  REQUIRE(r.counterexample.has_value());
  CHECK_FALSE(r.context.empty());
  CHECK(r.render().find("[FAIL]") == 0);
  CHECK(r.render().find("counterexample") != std::string::npos);

  // A straight reading outputs the input word itself, so the counterexample
  // must sit on one side of source vs target only.
  const Word& w = *r.counterexample;
  CHECK(member(parse_regex_lite("(a+b)*ac+"), w) !=
        member(sweep_target_language(), w));
}

TEST_CASE("shifted selector reads are caught") {
  VerificationReport r =
      run_check(spec("selector-shifted", {{"k", "0"}, {"n", "2"}}));
  CHECK(r.verdict == Verdict::kFail);
  CHECK(r.counterexample.has_value());
}

TEST_CASE("dropped sweep levels are caught with a replayable counterexample") {
  VerificationReport r = run_check(
      spec("building-block-leveldrop",
           {{"alphabet", "ab"}, {"u", "ab"}, {"alpha", "1"}, {"n_max", "4"}}));
  CHECK(r.verdict == Verdict::kFail);
  REQUIRE(r.counterexample.has_value());

  const Word& w = *r.counterexample;
  AlphabetRef ab = Alphabet::of_chars("ab");
  DecoratedSweepPlan plan{Word::parse(ab, "ab"), Word(ab, {}), Word(ab, {}), 1};
  DecoratedSweep ds = decorated_sweep(plan, w.length());
  const int m = 2, levels = 3;
  for (Instruction& ins : ds.program.instructions)
    for (int& v : ins.out)
      if (v % levels < m) v -= v % levels;
  LangExpr source = LangExpr::intersection_of(
      {LangExpr::concat({LangExpr::shuffle_ideal(plan.x1),
                         LangExpr::word(plan.u),
                         LangExpr::shuffle_ideal(plan.x2)}),
       LangExpr::shuffle_ideal(plan.u),
       LangExpr::complement(LangExpr::shuffle_ideal(plan.u.repeat(2)))});
  CHECK(member(ds.target, gamma_eval(ds.program, w)) != member(source, w));
}

TEST_CASE("checks are deterministic") {
  CheckSpec s = spec("compression", {{"seed", "3"}, {"trials", "2"},
                                     {"n_max", "3"}, {"k_max", "2"}});
  VerificationReport a = run_check(s);
  VerificationReport b = run_check(s);
  CHECK(a.verdict == b.verdict);
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.counterexample.has_value() == b.counterexample.has_value());
  CHECK(a.note == b.note);
}

TEST_CASE("the default suite passes end to end") {
  // Trimmed copies of the slowest entries keep this a unit-scale test; the
  // acceptance binary runs the full suite.
  std::vector<CheckSpec> specs{
      spec("sweep-reduction", {{"n_max", "4"}}),
      spec("costa", {{"r", "1"}, {"words", "a|a"}, {"sets", "b"},
                     {"alphabet", "ab"}}),
      spec("selector", {{"k", "0"}, {"n", "3"}, {"trials", "2"}, {"seed", "5"}}),
      spec("building-block", {{"alphabet", "ab"}, {"u", "ab"}, {"x1", "b"},
                              {"alpha", "2"}, {"n_max", "4"}}),
  };
  for (const VerificationReport& r : run_suite(specs)) {
    CAPTURE(r.check_id);
    CHECK(r.verdict == Verdict::kPass);
    CHECK(r.instances_checked > 0);
  }
}
