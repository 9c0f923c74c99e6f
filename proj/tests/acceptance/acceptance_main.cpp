// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mpj/algebra.hpp"
#include "mpj/regex_lite.hpp"
#include "mpj/tddo.hpp"
#include "mpj/verify.hpp"

using namespace mpj;

namespace {

int failures = 0;

void criterion(int idx, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && budget_seconds > 0 && sec > budget_seconds) {
    ok = false;
    detail = "over time budget of " + std::to_string(budget_seconds) + "s";
  }
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx,
              what.c_str(), sec, detail.empty() ? "" : " - ",
              detail.c_str());
  std::fflush(stdout);
}

bool pass_report(const VerificationReport& r, std::string& detail) {
  if (r.verdict == Verdict::kPass) return true;
  detail = r.render();
  return false;
}

LangExpr identity_expr() {
  AlphabetRef abc = Alphabet::of_chars("abc");
  auto block = [&](const char* u1, const char* u2, int l) {
    std::vector<Word> us{Word::parse(abc, u1)};
    if (*u2) us.push_back(Word::parse(abc, u2));
    return LangExpr::threshold_block(abc, std::move(us), l);
  };
  return LangExpr::intersection_of({LangExpr::complement(block("c", "a", 2)),
                                    LangExpr::complement(block("c", "b", 2)),
                                    block("ac", "", 2)});
}

}  // namespace

int main() {
  criterion(1, "feedback sweep reduces (a+b)*ac+ exhaustively for n <= 10", 30,
            [](std::string& detail) {
              return pass_report(
                  run_check({"sweep-reduction", {{"n_max", "10"}}}), detail);
            });

  criterion(2, "the threshold identity for (a+b)*ac+ holds as a DFA equality",
            1, [](std::string& detail) {
              Dfa lhs = compile(identity_expr());
              Dfa rhs = compile(parse_regex_lite("(a+b)*ac+"));
              if (auto w = dfa_equal(lhs, rhs)) {
                detail = "differ on \"" + w->to_string() + "\"";
                return false;
              }
              return true;
            });

  criterion(
      3, "threshold-block expansions match their definitional unions", 60,
      [](std::string& detail) {
        const std::vector<std::pair<std::string, std::string>> grid{
            {"ab", "ab"},  {"ab", "a,b"},  {"ab", "ab,ba"},
            {"abc", "ab,c"}, {"abc", "ca"}, {"abc", "ab,ca"}};
        int ran = 0;
        for (const auto& [alphabet, factors] : grid) {
          for (int l = 2; l <= 3; ++l) {
            VerificationReport r = run_check(
                {"tddo-equality",
                 {{"alphabet", alphabet}, {"l", std::to_string(l)},
                  {"factors", factors}}});
            ++ran;
            if (!pass_report(r, detail)) return false;
          }
        }
        detail = std::to_string(ran) + " instances";
        return ran >= 12;
      });

  criterion(
      4, "decorated sweeps reduce every sampled refined block for n <= 8", -1,
      [](std::string& detail) {
        const std::vector<std::string> xs{"", "a", "ba"};
        for (const std::string& u : {std::string("ab"), std::string("abc")}) {
          AlphabetRef a = Alphabet::of_chars(u == "ab" ? "ab" : "abc");
          for (int alpha = 1; alpha <= 2; ++alpha) {
            for (const std::string& x1 : xs) {
              for (const std::string& x2 : xs) {
                DecoratedSweepPlan plan{Word::parse(a, u), Word::parse(a, x1),
                                        Word::parse(a, x2), alpha};
                if (!pass_report(check_building_block(plan, 8, false), detail))
                  return false;
              }
            }
          }
        }
        detail = "36 plans";
        return true;
      });

  criterion(5, "compression keeps traces subword-equivalent within bounds",
            120, [](std::string& detail) {
              AlphabetRef ab = Alphabet::of_chars("ab");
              MonoidRef m =
                  syntactic_monoid(
                      compile(LangExpr::shuffle_ideal(Word::parse(ab, "ab"))))
                      .morphism.target;
              return pass_report(check_compression(42, ab, m, 100, 5, 3),
                                 detail);
            });

  criterion(6, "selector programs hit the marker language exactly", -1,
            [](std::string& detail) {
              for (int k = 0; k <= 2; ++k) {
                for (int n = 1; n <= 4; ++n) {
                  VerificationReport r =
                      check_selector(k, n, 20, 100 + 10 * k + n, false);
                  if (!pass_report(r, detail)) {
                    detail += " (k=" + std::to_string(k) +
                              ", n=" + std::to_string(n) + ")";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(7, "variety verdicts, stability and quotients line up", -1,
            [](std::string& detail) {
              if (!pass_report(run_check({"variety-claims", {}}), detail))
                return false;
              for (const char* chars : {"a", "ab"}) {
                for (int k = 1; k <= 3; ++k) {
                  QuotientMonoid q =
                      quotient_by_sim_k(Alphabet::of_chars(chars), k);
                  if (!check_variety(*q.morphism.target, Variety::kJ).holds) {
                    detail = std::string("quotient over ") + chars + " at k=" +
                             std::to_string(k) + " left J";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(8, "normal forms match their subword characterizations", 60,
            [](std::string& detail) {
              AlphabetRef ab = Alphabet::of_chars("ab");
              AlphabetRef abc = Alphabet::of_chars("abc");
              auto w = [](const AlphabetRef& a, const char* s) {
                return Word::parse(a, s);
              };
              std::vector<CostaForm> forms(6);
              forms[0] = {ab, 0, {w(ab, "ab")}, {}};
              forms[1] = {ab, 1, {w(ab, "a"), w(ab, "a")}, {{1}}};
              forms[2] = {ab, 0, {w(ab, ""), w(ab, "")}, {{0}}};
              forms[3] = {abc, 1, {w(abc, ""), w(abc, ""), w(abc, "")},
                          {{0, 2}, {1, 2}}};
              forms[4] = {abc, 2, {w(abc, ""), w(abc, ""), w(abc, "")},
                          {{0, 2}, {1, 2}}};
              forms[5] = {ab, 0, {w(ab, "a"), w(ab, "b"), w(ab, "a")},
                          {{0}, {0}}};
              for (const CostaForm& f : forms)
                if (!pass_report(check_costa(f), detail)) return false;
              detail = "6 forms";
              return true;
            });

  criterion(
      9, "compiled products agree with membership and stay inside J", -1,
      [](std::string& detail) {
        AlphabetRef ab = Alphabet::of_chars("ab");
        std::vector<LangExpr> exprs{
            LangExpr::threshold_block(ab, {Word::parse(ab, "ab")}, 2),
            identity_expr()};
        for (const LangExpr& e : exprs) {
          for (int n = 0; n <= 7; ++n) {
            ProductProgram p = compile_tddo(e, n);
            for (const Program& comp : p.components) {
              if (!check_variety(*comp.target, Variety::kJ).holds) {
                detail = "component target outside J at n=" + std::to_string(n);
                return false;
              }
            }
            WordEnumerator en(e.alphabet(), n, n);
            while (auto word = en.next()) {
              if (recognizes(p, *word) != member(e, *word)) {
                detail = "disagrees on \"" + word->to_string() + "\"";
                return false;
              }
            }
          }
        }
        return true;
      });

  criterion(10, "perturbed constructions fail with counterexamples", -1,
            [](std::string& detail) {
              for (const CheckSpec& spec : mutation_suite()) {
                VerificationReport r = run_check(spec);
                if (r.verdict != Verdict::kFail || !r.counterexample) {
                  detail = spec.check_id + " was not caught: " + r.render();
                  return false;
                }
              }
              return true;
            });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
