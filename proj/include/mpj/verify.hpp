#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpj/lang.hpp"
#include "mpj/programs.hpp"
#include "mpj/selectors.hpp"
#include "mpj/sweeps.hpp"

namespace mpj {

enum class Verdict { kPass, kFail, kSkipped };
std::string verdict_name(Verdict v);

struct VerificationReport {
  std::string check_id;
  std::map<std::string, std::string> parameters;
  Verdict verdict = Verdict::kPass;
  std::optional<Word> counterexample;
  std::string context;  // what failed, phrased so it can be replayed
  int64_t instances_checked = 0;
  double elapsed_seconds = 0;
  std::string note;  // mode annotations, e.g. bounded-enumeration fallback

  std::string render() const;
};

struct CheckSpec {
  std::string check_id;
  std::map<std::string, std::string> parameters;
};

/// Exhaustively tests source^{=n} = family(n)^{-1}(target) for n <= n_max.
VerificationReport check_reduction(
    const std::string& check_id,
    const std::function<GammaProgram(int)>& family, const LangExpr& source,
    const LangExpr& target, int n_max);

/// Exact DFA equality of the threshold expansion of a block list against the
/// union of refined embedding languages; factors with repeated letters are
/// reported skipped.
VerificationReport check_tddo_equality(const AlphabetRef& alphabet, int l,
                                       const std::vector<Word>& factors);

/// costa_lang(form) == costa_K(form), exact when compilation fits the state
/// cap, otherwise bounded enumeration up to length 10; also checks the
/// syntactic monoid against DA and the syntactic semigroup for local J.
VerificationReport check_costa(const CostaForm& form);

/// Random programs: per-t superset guarantee, ~k trace equivalence of
/// compress_equivalent, and both length bounds.
VerificationReport check_compression(uint64_t seed, const AlphabetRef& alphabet,
                                     const MonoidRef& monoid, int trials,
                                     int n_max, int k_max);

/// Bundle: sampled shuffle combinations land in J; (a+b)*ac+ lands in DA
/// but not J and its stable monoid stays outside J; sampled threshold blocks
/// land in DA; the depth-1 marker language is 3-piecewise-testable; (ab)* is
/// not k-piecewise-testable for k <= 4.
VerificationReport check_variety_claims();

/// Exhaustive agreement of selector programs with selector_member over all
/// {0,1} inputs, for `trials` seeded tables; also the length bound. With
/// `shift_positions` every read is rotated one position (a mutation expected
/// to fail).
VerificationReport check_selector(int k, int n, int trials, uint64_t seed,
                                  bool shift_positions = false);

/// Exhaustive agreement of the decorated sweep with its plan's language for
/// n <= n_max, plus the length formula. With `drop_levels` backward-sweep
/// level tags are squashed to 0 (a mutation expected to fail).
VerificationReport check_building_block(const DecoratedSweepPlan& plan,
                                        int n_max, bool drop_levels = false);

std::vector<CheckSpec> default_suite();
std::vector<CheckSpec> mutation_suite();
VerificationReport run_check(const CheckSpec& spec);
std::vector<VerificationReport> run_suite(const std::vector<CheckSpec>& specs);

}  // namespace mpj
