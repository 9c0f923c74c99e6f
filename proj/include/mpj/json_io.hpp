#pragma once

#include <vector>

#include "json.hpp"
#include "mpj/algebra.hpp"
#include "mpj/lang.hpp"
#include "mpj/programs.hpp"
#include "mpj/selectors.hpp"
#include "mpj/tddo.hpp"
#include "mpj/verify.hpp"

namespace mpj {

using Json = nlohmann::json;

Json monoid_to_json(const FiniteMonoid& m);
MonoidRef monoid_from_json(const Json& j);

Json morphism_to_json(const GeneratedMorphism& phi);
GeneratedMorphism morphism_from_json(const Json& j);

Json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const Json& j);

Json expr_to_json(const LangExpr& e);
LangExpr expr_from_json(const Json& j);

/// {"n": ..., "monoid": inline, "instructions": [{"pos": p, "map": {...}}],
/// "accept": [...]}
Json program_to_json(const Program& p);
Program program_from_json(const Json& j);

/// Same instruction shape with symbol outputs; identity maps collapse to the
/// string "identity".
Json gamma_to_json(const GammaProgram& g);
GammaProgram gamma_from_json(const Json& j);

Json selector_to_json(const SelectorFn& s);
SelectorFn selector_from_json(const Json& j);

Json formula_to_json(const BoolFormula& f);
BoolFormula formula_from_json(const Json& j);
Json product_program_to_json(const ProductProgram& p);
ProductProgram product_program_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
Json check_spec_to_json(const CheckSpec& s);
CheckSpec check_spec_from_json(const Json& j);
std::vector<CheckSpec> suite_from_json(const Json& j);

}  // namespace mpj
