#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "decoreq/corpus.hpp"
#include "decoreq/derived.hpp"
#include "decoreq/parser.hpp"
#include "decoreq/script.hpp"
#include "decoreq/semantics.hpp"

namespace py = pybind11;
using namespace decoreq;

namespace {

py::dict store_dict(const MemorySignature& sig, const Store& s) {
  py::dict d;
  for (std::size_t k = 0; k < sig.locations().size(); ++k)
    d[py::str(sig.locations()[k])] = s.values[k];
  return d;
}

py::dict semantic_dict(const MemorySignature& sig, const SemanticResult& res) {
  py::dict d;
  d["holds"] = res.holds;
  d["cases"] = res.cases_checked;
  if (res.counterexample) {
    py::dict cx;
    cx["input"] = to_string(res.counterexample->input);
    cx["store"] = store_dict(sig, res.counterexample->store);
    cx["lhs_result"] = to_string(res.counterexample->lhs_result);
    cx["rhs_result"] = to_string(res.counterexample->rhs_result);
    cx["lhs_store"] = store_dict(sig, res.counterexample->lhs_store);
    cx["rhs_store"] = store_dict(sig, res.counterexample->rhs_store);
    d["counterexample"] = cx;
  }
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["ok"] = v.ok;
  if (v.ok) {
    d["conclusion"] = to_string(*v.conclusion);
  } else {
    d["failing_path"] = v.rejection->path;
    d["reason"] = to_string(v.rejection->reason);
    d["message"] = v.rejection->message;
  }
  return d;
}

} // namespace

PYBIND11_MODULE(_decoreq, m) {
  m.doc() = "Decorated equational reasoning for the global state effect: typed "
            "terms, kind inference, a proof checker and an exhaustive "
            "finite-store semantic validator.";

  py::register_exception<Error>(m, "DecoreqError");

  py::class_<MemorySignature>(m, "MemorySignature")
      .def_static("declare",
                  [](const std::vector<std::string>& locations,
                     const std::map<std::string, std::vector<std::string>>& carriers) {
                    std::vector<std::vector<std::string>> ordered;
                    for (const auto& loc : locations) {
                      auto it = carriers.find(loc);
                      if (it == carriers.end())
                        fail(ErrorKind::EmptyCarrier, "no carrier for location '" + loc + "'");
                      ordered.push_back(it->second);
                    }
                    return MemorySignature::declare(locations, ordered);
                  },
                  py::arg("locations"), py::arg("carriers"))
      .def("locations", &MemorySignature::locations)
      .def("carrier", &MemorySignature::carrier, py::arg("location"))
      .def("store_count", &MemorySignature::store_count);

  py::class_<Term>(m, "Term")
      .def("__str__", [](const Term& t) { return to_string(t); })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def_property_readonly("dom", [](const Term& t) { return to_string(t.dom()); })
      .def_property_readonly("cod", [](const Term& t) { return to_string(t.cod()); });

  py::class_<Equation>(m, "Equation")
      .def("__str__", [](const Equation& e) { return to_string(e); })
      .def_property_readonly("mode", [](const Equation& e) { return to_string(e.mode); })
      .def_property_readonly("lhs", [](const Equation& e) { return e.lhs; })
      .def_property_readonly("rhs", [](const Equation& e) { return e.rhs; });

  py::class_<Proof>(m, "Proof")
      .def_property_readonly("rule", [](const Proof& p) { return to_string(p.rule()); })
      .def("size", &Proof::size);

  py::class_<ProofScript>(m, "ProofScript")
      .def_readonly("name", &ProofScript::name)
      .def_readonly("lemma_names", &ProofScript::lemma_names)
      .def_property_readonly("goal", [](const ProofScript& s) { return s.goal; })
      .def_property_readonly("body", [](const ProofScript& s) { return s.body; });

  m.def("parse_signature", &parse_signature, py::arg("text"));
  m.def("parse_term", &parse_term, py::arg("text"), py::arg("signature"));
  m.def("parse_equation", &parse_equation, py::arg("text"), py::arg("signature"));
  m.def("infer_kind", [](const Term& t) { return to_string(infer_kind(t)); }, py::arg("term"));
  m.def("check_semantic",
        [](const Equation& eq, const MemorySignature& sig) {
          return semantic_dict(sig, check_semantic(eq, sig));
        },
        py::arg("equation"), py::arg("signature"));
  m.def("check_proof",
        [](const ProofScript& script, const MemorySignature& sig) {
          return verdict_dict(check_proof(script.body, sig));
        },
        py::arg("script"), py::arg("signature"));
  m.def("load_proof_script", &load_proof_script, py::arg("path"), py::arg("signature"));
  m.def("parse_proof_script",
        [](const std::string& text, const MemorySignature& sig) {
          return parse_proof_script(text, sig);
        },
        py::arg("text"), py::arg("signature"));
  m.def("commutation_update_lookup", &commutation_update_lookup, py::arg("signature"),
        py::arg("i"), py::arg("j"));
}
