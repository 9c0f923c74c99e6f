#include "mpj/json_io.hpp"

#include <utility>

namespace mpj {

Config& Config::global() {
  static Config config;
  return config;
}

namespace {

AlphabetRef alphabet_from(const Json& j, const char* key) {
  return Alphabet::parse(j.at(key).get<std::string>());
}

Json word_list(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(w.to_string());
  return out;
}

std::vector<Word> word_list_from(const Json& j, const AlphabetRef& a) {
  std::vector<Word> out;
  for (const auto& s : j) out.push_back(Word::parse(a, s.get<std::string>()));
  return out;
}

Json letter_list(const AlphabetRef& a, const std::vector<int>& letters) {
  Json out = Json::array();
  for (int c : letters) out.push_back(a->at(c).to_string());
  return out;
}

std::vector<int> letter_list_from(const Json& j, const AlphabetRef& a) {
  std::vector<int> out;
  for (const auto& s : j)
    out.push_back(a->index_of(Symbol::parse(s.get<std::string>())));
  return out;
}

}  // namespace

Json monoid_to_json(const FiniteMonoid& m) {
  return Json{{"size", m.size()},
              {"identity", m.one()},
              {"table", m.table()},
              {"gen_labels", Json::object()}};
}

MonoidRef monoid_from_json(const Json& j) {
  if (j.at("identity").is_null())
    throw Error("monoid JSON requires a non-null identity");
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  return std::make_shared<FiniteMonoid>(FiniteMonoid::validate_and_build(
      table, j.at("identity").get<int>()));
}

Json morphism_to_json(const GeneratedMorphism& phi) {
  Json letters = Json::object();
  for (int a = 0; a < phi.alphabet->size(); ++a)
    letters[phi.alphabet->at(a).to_string()] = phi.letter_image[a];
  return Json{{"alphabet", phi.alphabet->to_string()},
              {"monoid", monoid_to_json(*phi.target)},
              {"letters", letters}};
}

GeneratedMorphism morphism_from_json(const Json& j) {
  GeneratedMorphism phi;
  phi.alphabet = alphabet_from(j, "alphabet");
  phi.target = monoid_from_json(j.at("monoid"));
  phi.letter_image.resize(phi.alphabet->size());
  for (const auto& [key, value] : j.at("letters").items())
    phi.letter_image[phi.alphabet->index_of(Symbol::parse(key))] =
        value.get<int>();
  return phi;
}

Json dfa_to_json(const Dfa& d) {
  return Json{{"alphabet", d.alphabet->to_string()},
              {"start", d.start},
              {"accept", d.accept},
              {"transitions", d.delta}};
}

Dfa dfa_from_json(const Json& j) {
  Dfa d;
  d.alphabet = alphabet_from(j, "alphabet");
  d.start = j.at("start").get<int>();
  d.accept = j.at("accept").get<std::vector<bool>>();
  d.delta = j.at("transitions").get<std::vector<std::vector<int>>>();
  d.validate();
  return d;
}

Json expr_to_json(const LangExpr& e) {
  const AlphabetRef& a = e.alphabet();
  Json j{{"alphabet", a->to_string()}};
  switch (e.op()) {
    case LangOp::kShuffleIdeal:
      j["op"] = "shuffle";
      j["u"] = e.single_word().to_string();
      return j;
    case LangOp::kFactor:
      j["op"] = "factor";
      j["u"] = e.single_word().to_string();
      return j;
    case LangOp::kPrefix:
      j["op"] = "prefix";
      j["u"] = e.single_word().to_string();
      return j;
    case LangOp::kSuffix:
      j["op"] = "suffix";
      j["u"] = e.single_word().to_string();
      return j;
    case LangOp::kWord:
      j["op"] = "word";
      j["u"] = e.single_word().to_string();
      return j;
    case LangOp::kThresholdBlock:
      j["op"] = "thresholdBlock";
      j["us"] = word_list(e.factors());
      j["l"] = e.l();
      return j;
    case LangOp::kLBlock:
      j["op"] = "lBlock";
      j["u"] = e.single_word().to_string();
      j["l"] = e.l();
      j["alpha"] = e.alpha_single();
      return j;
    case LangOp::kRLang:
      j["op"] = "rLang";
      j["us"] = word_list(e.factors());
      j["l"] = e.l();
      j["alpha"] = e.alpha();
      return j;
    case LangOp::kSLang:
      j["op"] = "sLang";
      j["us"] = word_list(e.factors());
      j["l"] = e.l();
      j["alpha"] = e.alpha();
      return j;
    case LangOp::kCosta: {
      const CostaForm& f = e.costa_form();
      Json sets = Json::array();
      for (const auto& set : f.sets) sets.push_back(letter_list(f.alphabet, set));
      j["op"] = "costa";
      j["r"] = f.r;
      j["us"] = word_list(f.u);
      j["sets"] = sets;
      return j;
    }
    case LangOp::kLetterSet:
      j["op"] = "letterSet";
      j["letters"] = letter_list(a, e.letters());
      return j;
    case LangOp::kLettersStar:
      j["op"] = "lettersStar";
      j["letters"] = letter_list(a, e.letters());
      return j;
    case LangOp::kLettersAtLeast:
      j["op"] = "lettersAtLeast";
      j["letters"] = letter_list(a, e.letters());
      j["r"] = e.r();
      return j;
    case LangOp::kUnion:
    case LangOp::kIntersection:
    case LangOp::kConcat: {
      j["op"] = e.op() == LangOp::kUnion
                    ? "union"
                    : (e.op() == LangOp::kIntersection ? "intersection"
                                                       : "concat");
      Json args = Json::array();
      for (const LangExpr& child : e.children()) args.push_back(expr_to_json(child));
      j["args"] = args;
      return j;
    }
    case LangOp::kComplement:
      j["op"] = "complement";
      j["arg"] = expr_to_json(e.children()[0]);
      return j;
  }
  throw Error("expr_to_json: unhandled operator");
}

LangExpr expr_from_json(const Json& j) {
  AlphabetRef a = alphabet_from(j, "alphabet");
  const std::string op = j.at("op").get<std::string>();
  auto word_at = [&](const char* key) {
    return Word::parse(a, j.at(key).get<std::string>());
  };
  if (op == "shuffle") return LangExpr::shuffle_ideal(word_at("u"));
  if (op == "factor") return LangExpr::factor(word_at("u"));
  if (op == "prefix") return LangExpr::prefix(word_at("u"));
  if (op == "suffix") return LangExpr::suffix(word_at("u"));
  if (op == "word") return LangExpr::word(word_at("u"));
  if (op == "thresholdBlock")
    return LangExpr::threshold_block(a, word_list_from(j.at("us"), a),
                                     j.at("l").get<int>());
  if (op == "lBlock")
    return LangExpr::l_block(word_at("u"), j.at("l").get<int>(),
                             j.at("alpha").get<int>());
  if (op == "rLang" || op == "sLang") {
    auto us = word_list_from(j.at("us"), a);
    int l = j.at("l").get<int>();
    auto alpha = j.at("alpha").get<std::vector<int>>();
    return op == "rLang" ? LangExpr::r_lang(a, std::move(us), l, std::move(alpha))
                         : LangExpr::s_lang(a, std::move(us), l, std::move(alpha));
  }
  if (op == "costa") {
    CostaForm f;
    f.alphabet = a;
    f.r = j.at("r").get<int>();
    f.u = word_list_from(j.at("us"), a);
    for (const auto& set : j.at("sets")) f.sets.push_back(letter_list_from(set, a));
    return LangExpr::costa(std::move(f));
  }
  if (op == "letterSet")
    return LangExpr::letter_set(a, letter_list_from(j.at("letters"), a));
  if (op == "lettersStar")
    return LangExpr::letters_star(a, letter_list_from(j.at("letters"), a));
  if (op == "lettersAtLeast")
    return LangExpr::letters_at_least(a, letter_list_from(j.at("letters"), a),
                                      j.at("r").get<int>());
  if (op == "union" || op == "intersection" || op == "concat") {
    std::vector<LangExpr> args;
    for (const auto& child : j.at("args")) args.push_back(expr_from_json(child));
    if (op == "union") return LangExpr::union_of(std::move(args));
    if (op == "intersection") return LangExpr::intersection_of(std::move(args));
    return LangExpr::concat(std::move(args));
  }
  if (op == "complement") return LangExpr::complement(expr_from_json(j.at("arg")));
  throw Error("expr_from_json: unknown op '" + op + "'");
}

namespace {

Json instruction_map(const AlphabetRef& in, const Instruction& ins,
                     const AlphabetRef& out_alphabet) {
  if (out_alphabet && in->size() == out_alphabet->size()) {
    bool id = true;
    for (int a = 0; a < in->size(); ++a)
      if (ins.out[a] != a || !(in->at(a) == out_alphabet->at(a))) {
        id = false;
        break;
      }
    if (id) return "identity";
  }
  Json map = Json::object();
  for (int a = 0; a < in->size(); ++a)
    map[in->at(a).to_string()] =
        out_alphabet ? Json(out_alphabet->at(ins.out[a]).to_string())
                     : Json(ins.out[a]);
  return map;
}

Instruction instruction_from(const Json& j, const AlphabetRef& in,
                             const AlphabetRef& out_alphabet) {
  Instruction ins;
  ins.pos = j.at("pos").get<int>();
  const Json& map = j.at("map");
  ins.out.resize(in->size());
  if (map.is_string() && map.get<std::string>() == "identity") {
    for (int a = 0; a < in->size(); ++a) ins.out[a] = a;
    return ins;
  }
  for (const auto& [key, value] : map.items()) {
    int a = in->index_of(Symbol::parse(key));
    ins.out[a] = out_alphabet
                     ? out_alphabet->index_of(
                           Symbol::parse(value.get<std::string>()))
                     : value.get<int>();
  }
  return ins;
}

}  // namespace

Json program_to_json(const Program& p) {
  Json instructions = Json::array();
  for (const Instruction& ins : p.instructions)
    instructions.push_back(Json{
        {"pos", ins.pos}, {"map", instruction_map(p.input_alphabet, ins, nullptr)}});
  return Json{{"alphabet", p.input_alphabet->to_string()},
              {"n", p.n},
              {"monoid", monoid_to_json(*p.target)},
              {"instructions", instructions},
              {"accept", p.accept}};
}

Program program_from_json(const Json& j) {
  Program p;
  p.input_alphabet = alphabet_from(j, "alphabet");
  p.n = j.at("n").get<int>();
  p.target = monoid_from_json(j.at("monoid"));
  for (const auto& ins : j.at("instructions"))
    p.instructions.push_back(instruction_from(ins, p.input_alphabet, nullptr));
  p.accept = j.at("accept").get<std::vector<bool>>();
  p.validate();
  return p;
}

Json gamma_to_json(const GammaProgram& g) {
  Json instructions = Json::array();
  for (const Instruction& ins : g.instructions)
    instructions.push_back(
        Json{{"pos", ins.pos},
             {"map", instruction_map(g.input_alphabet, ins, g.output_alphabet)}});
  return Json{{"alphabet", g.input_alphabet->to_string()},
              {"n", g.n},
              {"output_alphabet", g.output_alphabet->to_string()},
              {"instructions", instructions}};
}

GammaProgram gamma_from_json(const Json& j) {
  GammaProgram g;
  g.input_alphabet = alphabet_from(j, "alphabet");
  g.n = j.at("n").get<int>();
  g.output_alphabet = alphabet_from(j, "output_alphabet");
  for (const auto& ins : j.at("instructions"))
    g.instructions.push_back(
        instruction_from(ins, g.input_alphabet, g.output_alphabet));
  g.validate();
  return g;
}

Json selector_to_json(const SelectorFn& s) {
  return Json{{"k", s.k}, {"n", s.n}, {"table", s.table}};
}

SelectorFn selector_from_json(const Json& j) {
  SelectorFn s;
  s.k = j.at("k").get<int>();
  s.n = j.at("n").get<int>();
  s.table = j.at("table").get<std::vector<std::vector<int>>>();
  s.validate();
  return s;
}

Json formula_to_json(const BoolFormula& f) {
  switch (f.kind) {
    case BoolFormula::Kind::kLeaf:
      return Json{{"kind", "leaf"}, {"leaf", f.leaf}};
    case BoolFormula::Kind::kNot:
      return Json{{"kind", "not"}, {"arg", formula_to_json(f.kids[0])}};
    case BoolFormula::Kind::kAnd:
    case BoolFormula::Kind::kOr: {
      Json kids = Json::array();
      for (const BoolFormula& kid : f.kids) kids.push_back(formula_to_json(kid));
      return Json{{"kind", f.kind == BoolFormula::Kind::kAnd ? "and" : "or"},
                  {"kids", kids}};
    }
  }
  throw Error("formula_to_json: unhandled kind");
}

BoolFormula formula_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "leaf") return BoolFormula::leaf_of(j.at("leaf").get<int>());
  if (kind == "not") return BoolFormula::not_of(formula_from_json(j.at("arg")));
  std::vector<BoolFormula> kids;
  for (const auto& kid : j.at("kids")) kids.push_back(formula_from_json(kid));
  if (kind == "and") return BoolFormula::and_of(std::move(kids));
  if (kind == "or") return BoolFormula::or_of(std::move(kids));
  throw Error("formula_from_json: unknown kind '" + kind + "'");
}

Json product_program_to_json(const ProductProgram& p) {
  Json components = Json::array();
  for (const Program& c : p.components) components.push_back(program_to_json(c));
  return Json{{"alphabet", p.input_alphabet->to_string()},
              {"n", p.n},
              {"formula", formula_to_json(p.formula)},
              {"components", components}};
}

ProductProgram product_program_from_json(const Json& j) {
  ProductProgram p;
  p.input_alphabet = alphabet_from(j, "alphabet");
  p.n = j.at("n").get<int>();
  p.formula = formula_from_json(j.at("formula"));
  for (const auto& c : j.at("components"))
    p.components.push_back(program_from_json(c));
  p.validate();
  return p;
}

Json report_to_json(const VerificationReport& r) {
  Json j{{"check_id", r.check_id},
         {"parameters", r.parameters},
         {"verdict", verdict_name(r.verdict)},
         {"instances_checked", r.instances_checked},
         {"elapsed_seconds", r.elapsed_seconds}};
  j["counterexample"] =
      r.counterexample
          ? Json{{"alphabet", r.counterexample->alphabet()->to_string()},
                 {"word", r.counterexample->to_string()}}
          : Json(nullptr);
  if (!r.context.empty()) j["context"] = r.context;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json check_spec_to_json(const CheckSpec& s) {
  return Json{{"check_id", s.check_id}, {"parameters", s.parameters}};
}

CheckSpec check_spec_from_json(const Json& j) {
  CheckSpec s;
  if (!j.is_object() || !j.contains("check_id"))
    throw Error("check spec: missing check_id");
  s.check_id = j.at("check_id").get<std::string>();
  if (j.contains("parameters"))
    s.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  return s;
}

std::vector<CheckSpec> suite_from_json(const Json& j) {
  std::vector<CheckSpec> out;
  for (const auto& spec : j) out.push_back(check_spec_from_json(spec));
  return out;
}

}  // namespace mpj
