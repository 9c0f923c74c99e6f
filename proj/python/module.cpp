#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mpj/compress.hpp"
#include "mpj/json_io.hpp"
#include "mpj/regex_lite.hpp"
#include "mpj/verify.hpp"

namespace py = pybind11;
using namespace mpj;

namespace {

AlphabetRef alpha(const std::string& s) { return Alphabet::parse(s); }

Word parse_word(const AlphabetRef& a, const std::string& s) {
  return Word::parse(a, s);
}

std::vector<Word> parse_words(const AlphabetRef& a,
                              const std::vector<std::string>& ss) {
  std::vector<Word> out;
  out.reserve(ss.size());
  for (const std::string& s : ss) out.push_back(parse_word(a, s));
  return out;
}

std::string classify_json(const LangExpr& e) {
  Dfa d = compile(e);
  SyntacticMonoid syn = syntactic_monoid(d);
  const FiniteMonoid& m = *syn.morphism.target;
  StableStructure stable = stable_pair(syn.morphism);
  Json j{{"states", d.states()},
         {"monoid_size", m.size()},
         {"omega", m.omega()},
         {"varieties",
          Json{{"A", check_variety(m, Variety::kA).holds},
               {"DA", check_variety(m, Variety::kDA).holds},
               {"J", check_variety(m, Variety::kJ).holds}}},
         {"locally_J", is_locally_J(*syntactic_semigroup(d).semigroup).holds},
         {"stable",
          Json{{"k", stable.k},
               {"monoid_size", stable.monoid.size()},
               {"quasi_A", check_variety(stable.monoid, Variety::kA).holds},
               {"quasi_DA", check_variety(stable.monoid, Variety::kDA).holds},
               {"quasi_J", check_variety(stable.monoid, Variety::kJ).holds}}}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_mpj, m) {
  m.doc() = "programs over monoids in J: languages, algebra, verification";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<LangExpr>(m, "LangExpr")
      .def("pretty", &LangExpr::pretty)
      .def_property_readonly(
          "alphabet",
          [](const LangExpr& e) { return e.alphabet()->to_string(); })
      .def("__repr__", [](const LangExpr& e) {
        return "<LangExpr " + e.pretty() + ">";
      });

  py::class_<Dfa>(m, "Dfa")
      .def_property_readonly("states", &Dfa::states)
      .def_property_readonly(
          "alphabet", [](const Dfa& d) { return d.alphabet->to_string(); })
      .def("__repr__", [](const Dfa& d) {
        return "<Dfa " + std::to_string(d.states()) + " states>";
      });

  py::class_<Program>(m, "Program")
      .def_readonly("n", &Program::n)
      .def_property_readonly("length", &Program::length)
      .def_property_readonly("monoid_size",
                             [](const Program& p) { return p.target->size(); })
      .def("__repr__", [](const Program& p) {
        return "<Program length " + std::to_string(p.length()) + " over " +
               std::to_string(p.target->size()) + " elements>";
      });

  py::class_<GammaProgram>(m, "GammaProgram")
      .def_readonly("n", &GammaProgram::n)
      .def_property_readonly("length", &GammaProgram::length)
      .def_property_readonly("positions",
                             [](const GammaProgram& g) {
                               std::vector<int> out;
                               for (const Instruction& i : g.instructions)
                                 out.push_back(i.pos);
                               return out;
                             })
      .def_property_readonly("output_alphabet",
                             [](const GammaProgram& g) {
                               return g.output_alphabet->to_string();
                             })
      .def("__repr__", [](const GammaProgram& g) {
        return "<GammaProgram length " + std::to_string(g.length()) + ">";
      });

  py::class_<SelectorFn>(m, "SelectorFn")
      .def(py::init([](int k, int n, std::vector<std::vector<int>> table) {
             SelectorFn s{k, n, std::move(table)};
             s.validate();
             return s;
           }),
           py::arg("k"), py::arg("n"), py::arg("table"))
      .def_readonly("k", &SelectorFn::k)
      .def_readonly("n", &SelectorFn::n)
      .def_readonly("table", &SelectorFn::table)
      .def_static("random", &SelectorFn::random, py::arg("k"), py::arg("n"),
                  py::arg("seed"))
      .def("__repr__", [](const SelectorFn& s) {
        return "<SelectorFn k=" + std::to_string(s.k) +
               " n=" + std::to_string(s.n) + ">";
      });

  py::class_<ProductProgram>(m, "ProductProgram")
      .def_readonly("n", &ProductProgram::n)
      .def_property_readonly("length", &ProductProgram::length)
      .def_property_readonly("component_count",
                             [](const ProductProgram& p) {
                               return p.components.size();
                             })
      .def_property_readonly("formula",
                             [](const ProductProgram& p) {
                               return p.formula.to_string();
                             })
      .def("__repr__", [](const ProductProgram& p) {
        return "<ProductProgram " + std::to_string(p.components.size()) +
               " components, formula " + p.formula.to_string() + ">";
      });

  // Language construction
  m.def("parse_regex",
        [](const std::string& pattern, const std::string& alphabet) {
          return parse_regex_lite(pattern,
                                  alphabet.empty() ? nullptr : alpha(alphabet));
        },
        py::arg("pattern"), py::arg("alphabet") = "");
  m.def("shuffle", [](const std::string& a, const std::string& u) {
    return LangExpr::shuffle_ideal(parse_word(alpha(a), u));
  });
  m.def("factor", [](const std::string& a, const std::string& u) {
    return LangExpr::factor(parse_word(alpha(a), u));
  });
  m.def("prefix", [](const std::string& a, const std::string& u) {
    return LangExpr::prefix(parse_word(alpha(a), u));
  });
  m.def("suffix", [](const std::string& a, const std::string& u) {
    return LangExpr::suffix(parse_word(alpha(a), u));
  });
  m.def("word_lang", [](const std::string& a, const std::string& u) {
    return LangExpr::word(parse_word(alpha(a), u));
  });
  m.def("threshold_block",
        [](const std::string& a, const std::vector<std::string>& us, int l) {
          AlphabetRef ar = alpha(a);
          return LangExpr::threshold_block(ar, parse_words(ar, us), l);
        },
        py::arg("alphabet"), py::arg("factors"), py::arg("l"));
  m.def("union_of", &LangExpr::union_of);
  m.def("intersection_of", &LangExpr::intersection_of);
  m.def("complement", &LangExpr::complement);
  m.def("concat_of", &LangExpr::concat);

  // Membership, compilation, comparison
  m.def("member", [](const LangExpr& e, const std::string& w) {
    return member(e, parse_word(e.alphabet(), w));
  });
  m.def("to_dfa", [](const LangExpr& e) { return compile(e); });
  m.def("dfa_member", [](const Dfa& d, const std::string& w) {
    return d.member(parse_word(d.alphabet, w));
  });
  m.def("equal",
        [](const LangExpr& a, const LangExpr& b) -> std::optional<std::string> {
          auto w = dfa_equal(compile(a), compile(b));
          if (!w) return std::nullopt;
          return w->to_string();
        },
        "None when equal, else a shortest distinguishing word");
  m.def("count_words", [](const LangExpr& e, int max_len) {
    return count_words(compile(e), max_len);
  });
  m.def("is_k_pt",
        [](const LangExpr& e, int k) { return is_k_pt(compile(e), k); });
  m.def("sim_k", [](const std::string& a, const std::string& u,
                    const std::string& v, int k) {
    AlphabetRef ar = alpha(a);
    return sim_k(parse_word(ar, u), parse_word(ar, v), k);
  });
  m.def("_classify_json", &classify_json);
  m.def("_quotient_json", [](const std::string& a, int k) {
    QuotientMonoid q = quotient_by_sim_k(alpha(a), k);
    std::vector<std::string> reps;
    for (const Word& w : q.representatives) reps.push_back(w.to_string());
    Json j{{"size", q.morphism.target->size()},
           {"in_J", check_variety(*q.morphism.target, Variety::kJ).holds},
           {"representatives", reps}};
    return j.dump();
  });

  // Word programs and reductions
  m.def("feedback_sweep", [](const std::string& a, int n) {
    return feedback_sweep(alpha(a), n);
  });
  m.def("sweep_target", &sweep_target_language);
  m.def("gamma_eval", [](const GammaProgram& g, const std::string& w) {
    return gamma_eval(g, parse_word(g.input_alphabet, w)).to_string();
  });
  m.def("decorated_sweep",
        [](const std::string& a, const std::string& u, const std::string& x1,
           const std::string& x2, int alphaexp, int n) {
          AlphabetRef ar = alpha(a);
          DecoratedSweepPlan plan{parse_word(ar, u), parse_word(ar, x1),
                                  parse_word(ar, x2), alphaexp};
          DecoratedSweep ds = decorated_sweep(plan, n);
          return py::make_tuple(ds.program, ds.target);
        },
        py::arg("alphabet"), py::arg("u"), py::arg("x1") = "",
        py::arg("x2") = "", py::arg("alpha") = 1, py::arg("n"));
  m.def("modular_decoration", [](const std::string& a, int d, int n) {
    return modular_decoration(alpha(a), d, n);
  });

  // Selectors
  m.def("selector_language", &selector_language);
  m.def("selector_member", [](const SelectorFn& s, const std::string& w) {
    return selector_member(s, parse_word(Alphabet::of_chars("01"), w));
  });
  m.def("selector_program", &selector_program);

  // Products of programs
  m.def("compile_tddo",
        [](const LangExpr& e, int n) { return compile_tddo(e, n); },
        py::arg("expr"), py::arg("n"));
  m.def("recognizes", [](const ProductProgram& p, const std::string& w) {
    return recognizes(p, parse_word(p.input_alphabet, w));
  });
  m.def("product_component", [](const ProductProgram& p, int i) {
    if (i < 0 || i >= static_cast<int>(p.components.size()))
      throw Error("component index out of range");
    return p.components[i];
  });

  // Compression
  m.def("compression_bound", &compression_bound, py::arg("k"),
        py::arg("sigma_size"), py::arg("n"));
  m.def("_compress_json", [](const std::string& program_json, int k) {
    Program p = program_from_json(Json::parse(program_json));
    Compressed c = compress_equivalent(p, k);
    Json j{{"kept", c.kept},
           {"original_length", p.length()},
           {"program", program_to_json(c.program)}};
    return j.dump();
  });

  // Verification checks
  m.def("_run_check_json", [](const std::string& spec_json) {
    CheckSpec spec = check_spec_from_json(Json::parse(spec_json));
    return report_to_json(run_check(spec)).dump();
  });
  m.def("_default_suite_json", [] {
    Json j = Json::array();
    for (const CheckSpec& s : default_suite()) j.push_back(check_spec_to_json(s));
    return j.dump();
  });
  m.def("_mutation_suite_json", [] {
    Json j = Json::array();
    for (const CheckSpec& s : mutation_suite())
      j.push_back(check_spec_to_json(s));
    return j.dump();
  });

  // JSON bridges for artifacts
  m.def("_expr_json", [](const LangExpr& e) { return expr_to_json(e).dump(); });
  m.def("_expr_from_json",
        [](const std::string& s) { return expr_from_json(Json::parse(s)); });
  m.def("_dfa_json", [](const Dfa& d) { return dfa_to_json(d).dump(); });
  m.def("_dfa_from_json",
        [](const std::string& s) { return dfa_from_json(Json::parse(s)); });
  m.def("_gamma_json",
        [](const GammaProgram& g) { return gamma_to_json(g).dump(); });
  m.def("_gamma_from_json",
        [](const std::string& s) { return gamma_from_json(Json::parse(s)); });
  m.def("_program_json",
        [](const Program& p) { return program_to_json(p).dump(); });
  m.def("_program_from_json",
        [](const std::string& s) { return program_from_json(Json::parse(s)); });
  m.def("_selector_json",
        [](const SelectorFn& s) { return selector_to_json(s).dump(); });
  m.def("_selector_from_json",
        [](const std::string& s) { return selector_from_json(Json::parse(s)); });
  m.def("_product_json", [](const ProductProgram& p) {
    return product_program_to_json(p).dump();
  });
  m.def("_product_from_json", [](const std::string& s) {
    return product_program_from_json(Json::parse(s));
  });

  // Global caps (mirror the CLI's --state-cap / --quotient-cap)
  m.def("set_state_cap", [](int cap) { Config::global().state_cap = cap; });
  m.def("set_class_cap", [](int64_t cap) { Config::global().class_cap = cap; });
}
