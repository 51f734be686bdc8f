#include "quandle/analysis.hpp"
#include "quandle/export.hpp"
#include "quandle/link_family.hpp"
#include "quandle/parser.hpp"
#include "quandle/presentation.hpp"
#include "quandle/verify.hpp"
#include "quandle/winker.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

namespace py = pybind11;
using namespace quandle;

namespace {

Word to_word(const std::vector<int>& letters) {
    return Word(letters);
}

std::vector<std::vector<int>> action_rows(const CayleyTable& t) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(t.size()));
    for (int v = 0; v < t.size(); ++v) {
        rows[static_cast<size_t>(v)].resize(static_cast<size_t>(t.num_generators));
        for (int j = 0; j < t.num_generators; ++j) {
            rows[static_cast<size_t>(v)][static_cast<size_t>(j)] = t.act(v, j);
        }
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Enumeration of finite involutory quandles from presentations, "
              "with generators and verification suites for two-bridge links "
              "with an axis";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<GeneratorId>(m, "GeneratorId")
        .def_readonly("index", &GeneratorId::index)
        .def_readonly("name", &GeneratorId::name)
        .def("__repr__", [](const GeneratorId& g) {
            return "GeneratorId(" + std::to_string(g.index) + ", '" + g.name + "')";
        });

    py::class_<Relation>(m, "Relation")
        .def(py::init([](int lhs, const std::vector<int>& letters, int rhs) {
                 return Relation(lhs, normalize_word(to_word(letters)), rhs);
             }),
             py::arg("lhs_base"), py::arg("word"), py::arg("rhs_base"))
        .def_readonly("lhs_base", &Relation::lhs_base)
        .def_readonly("rhs_base", &Relation::rhs_base)
        .def_property_readonly("word", [](const Relation& r) { return r.word.letters; })
        .def(py::self == py::self);

    py::class_<Presentation>(m, "Presentation")
        .def_property_readonly("generators",
                               [](const Presentation& p) {
                                   std::vector<std::string> names;
                                   for (const GeneratorId& g : p.generators) {
                                       names.push_back(g.name);
                                   }
                                   return names;
                               })
        .def_readonly("relations", &Presentation::relations)
        .def("__str__", &serialize_presentation)
        .def(py::self == py::self);

    py::class_<CayleyTable>(m, "CayleyTable")
        .def_property_readonly("size", &CayleyTable::size)
        .def_readonly("num_generators", &CayleyTable::num_generators)
        .def_readonly("seeds", &CayleyTable::seed)
        .def("act", &CayleyTable::act, py::arg("element"), py::arg("generator"))
        .def("action_table", &action_rows)
        .def("reps",
             [](const CayleyTable& t) {
                 std::vector<std::pair<int, std::vector<int>>> out;
                 for (const CayleyTable::Rep& r : t.reps) {
                     out.emplace_back(r.base, r.word.letters);
                 }
                 return out;
             })
        .def(py::self == py::self);

    py::class_<QuandleOpTable>(m, "QuandleOpTable")
        .def_readonly("size", &QuandleOpTable::size)
        .def("op", &QuandleOpTable::op, py::arg("x"), py::arg("y"));

    py::class_<EnumerationResult>(m, "EnumerationResult")
        .def_property_readonly("finite", &EnumerationResult::finite)
        .def_property_readonly(
            "table",
            [](const EnumerationResult& r) -> py::object {
                if (!r.table) return py::none();
                return py::cast(*r.table);
            })
        .def_readonly("elements_reached", &EnumerationResult::elements_reached)
        .def_readonly("steps_used", &EnumerationResult::steps_used);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("witness", &CheckResult::witness);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("checks", &VerificationReport::checks)
        .def_property_readonly("all_passed", &VerificationReport::all_passed)
        .def_property_readonly("failure_count", &VerificationReport::failure_count);

    py::class_<SuiteEntry>(m, "SuiteEntry")
        .def_readonly("name", &SuiteEntry::name)
        .def_property_readonly("element_wise", [](const SuiteEntry& e) {
            return std::holds_alternative<SecondaryRelation>(e.rel);
        });

    py::class_<ComponentReport>(m, "ComponentReport")
        .def_readonly("count", &ComponentReport::count)
        .def_readonly("sizes", &ComponentReport::sizes)
        .def_readonly("membership", &ComponentReport::membership)
        .def_readonly("members", &ComponentReport::members);

    py::class_<IsoResult>(m, "IsoResult")
        .def_readonly("isomorphic", &IsoResult::isomorphic)
        .def_readonly("reason", &IsoResult::reason)
        .def_readonly("generator_images", &IsoResult::generator_images)
        .def_readonly("full_map", &IsoResult::full_map)
        .def("__bool__", [](const IsoResult& r) { return r.isomorphic; });

    py::class_<StructureSummary>(m, "StructureSummary")
        .def_readonly("size", &StructureSummary::size)
        .def_readonly("component_sizes", &StructureSummary::component_sizes)
        .def_readonly("generator_fixed_points", &StructureSummary::generator_fixed_points);

    py::class_<FamilyParams>(m, "FamilyParams")
        .def_readonly("k", &FamilyParams::k)
        .def_readonly("p", &FamilyParams::p)
        .def_readonly("q", &FamilyParams::q)
        .def_property_readonly("d", &FamilyParams::twist_defect)
        .def_property_readonly("t", &FamilyParams::t)
        .def(py::self == py::self)
        .def("__repr__", [](const FamilyParams& fp) {
            return "FamilyParams(k=" + std::to_string(fp.k) + ", p=" + std::to_string(fp.p) +
                   ", q=" + std::to_string(fp.q) + ")";
        });

    py::class_<PdCode>(m, "PdCode").def_readonly("crossings", &PdCode::crossings);

    m.def("parse_presentation", &parse_presentation, py::arg("text"));
    m.def("serialize_presentation", &serialize_presentation, py::arg("presentation"));
    m.def(
        "enumerate",
        [](const Presentation& p, int max_elements, long long max_steps) {
            return enumerate(p, EnumerationBudget{max_elements, max_steps});
        },
        py::arg("presentation"), py::arg("max_elements") = 10000,
        py::arg("max_steps") = 10'000'000LL);
    m.def("secondary_word",
          [](const Relation& r) { return secondary_of(r).word.letters; },
          py::arg("relation"));
    m.def(
        "apply_word",
        [](const CayleyTable& t, int v, const std::vector<int>& letters) {
            return apply_word(t, v, to_word(letters));
        },
        py::arg("table"), py::arg("element"), py::arg("word"));
    m.def("quandle_op", &quandle_op, py::arg("table"), py::arg("x"), py::arg("y"));
    m.def("full_op_table", &full_op_table, py::arg("table"));
    m.def("check_axioms", &check_axioms, py::arg("op_table"));
    m.def("verify_relations", &verify_relations, py::arg("table"), py::arg("suite"));
    m.def("components", &components, py::arg("table"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("source"), py::arg("target"));
    m.def("structure_summary", &structure_summary, py::arg("table"));

    m.def("normalize_params", &normalize_params, py::arg("k"), py::arg("p"), py::arg("q"));
    m.def("mirror_params", &mirror_params, py::arg("params"));
    m.def("raw_presentation", &raw_presentation, py::arg("params"));
    m.def("reduced_presentation", &reduced_presentation, py::arg("params"));
    m.def("expected_cardinality", &expected_cardinality, py::arg("params"));
    m.def("expected_components", &expected_components, py::arg("params"));
    m.def("lemma_relation_suite", &lemma_relation_suite, py::arg("params"));

    m.def("parse_pd", &parse_pd, py::arg("text"));
    m.def("wirtinger_presentation", &wirtinger_presentation, py::arg("pd"));

    m.def(
        "table_to_json",
        [](const CayleyTable& t, const Presentation& p) { return table_to_json(t, p.generators); },
        py::arg("table"), py::arg("presentation"));
    m.def(
        "table_to_dot",
        [](const CayleyTable& t, const Presentation& p) { return table_to_dot(t, p.generators); },
        py::arg("table"), py::arg("presentation"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
