#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gproj/harness.hpp"
#include "gproj/version.hpp"

namespace py = pybind11;
using namespace gproj;

namespace {

// pybind11 holders cannot be shared_ptr-to-const; a tiny handle struct keeps
// the immutable algebra pointers intact.
struct PyAlgebra {
    AlgebraPtr ptr;
};

PyAlgebra algebra_from_json_str(const std::string& text) {
    return {algebra_from_json(ojson::parse(text), ".")};
}

py::dict verdict_dict(const GpVerdict& v) {
    py::dict d;
    d["criterion"] = v.criterion;
    d["outcome"] = outcome_str(v.outcome);
    d["witness"] = v.witness;
    d["bound"] = v.bound_used;
    return d;
}

GpVerdict run_criterion(const Module& x, const std::string& criterion, std::size_t bound) {
    if (criterion == "direct") return gp_direct(x, bound);
    if (criterion == "thm2") return gp_thm2(x, bound);
    if (criterion == "thm3") return gp_thm3(x, bound);
    if (criterion == "propB") return gp_propB(x, bound);
    if (criterion == "selfinj") return gp_selfinj(x, bound);
    if (criterion == "quiver") return gp_quiver(x, bound);
    if (criterion == "tor") return gp_tor(x, bound);
    throw UsageError("unknown criterion '" + criterion + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Gorenstein-projectivity checks over tensor products of "
              "quiver algebras";
    m.attr("__version__") = kVersion;

    // base first: pybind checks translators in reverse registration order
    py::register_exception<Error>(m, "GprojError");
    py::register_exception<ParseError>(m, "ParseFailure");
    py::register_exception<HypothesisError>(m, "HypothesisError");

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("dim", [](const PyAlgebra& a) { return a.ptr->dim(); })
        .def_property_readonly("field", [](const PyAlgebra& a) { return a.ptr->field().str(); })
        .def_property_readonly("generators",
                               [](const PyAlgebra& a) {
                                   std::vector<std::string> names;
                                   for (const auto& g : a.ptr->generators())
                                       names.push_back(g.name);
                                   return names;
                               })
        .def_property_readonly("radical_dim",
                               [](const PyAlgebra& a) { return a.ptr->radical_basis().size(); })
        .def_property_readonly(
            "idempotents", [](const PyAlgebra& a) { return a.ptr->num_idempotents(); })
        .def("__repr__", [](const PyAlgebra& a) {
            return "<Algebra dim=" + std::to_string(a.ptr->dim()) + " over " +
                   a.ptr->field().str() + ">";
        });

    py::class_<Module>(m, "Module")
        .def_property_readonly("dim", &Module::dim)
        .def_property_readonly("algebra",
                               [](const Module& mod) { return PyAlgebra{mod.algebra()}; })
        .def("to_json",
             [](const Module& mod, bool inline_algebra) {
                 return canonical_dump(module_to_json(mod, inline_algebra));
             },
             py::arg("inline_algebra") = true)
        .def("hash", [](const Module& mod) { return mod.hash64(); })
        .def("__repr__", [](const Module& mod) {
            return "<Module dim=" + std::to_string(mod.dim()) + ">";
        });

    m.def("algebra_from_json", &algebra_from_json_str, py::arg("text"),
          "algebra from a presentation / tensor JSON document");
    m.def("family", [](const std::string& token, const std::string& field) {
              return PyAlgebra{build_family(token, Field::parse(field))};
          },
          py::arg("token"), py::arg("field") = "Fp:101",
          "shipped family by token: kA2, kA3_with_relation, dual_numbers, "
          "Bn:<n>, square_with_commutativity, custom:<file>");
    m.def("tensor", [](const PyAlgebra& a, const PyAlgebra& b) {
              return PyAlgebra{tensor(a.ptr, b.ptr)};
          },
          py::arg("a"), py::arg("b"));
    m.def("opposite", [](const PyAlgebra& a) { return PyAlgebra{opposite(a.ptr)}; },
          py::arg("a"));
    m.def("enveloping", [](const PyAlgebra& a) { return PyAlgebra{enveloping(a.ptr)}; },
          py::arg("a"));
    m.def("make_Bn", [](std::size_t n, const std::string& field) {
              return PyAlgebra{make_Bn(n, Field::parse(field))};
          },
          py::arg("n"), py::arg("field") = "Fp:101");

    m.def("algebra_info",
          [](const PyAlgebra& h, std::size_t cap) {
              const AlgebraPtr& a = h.ptr;
              py::dict d;
              d["dim"] = a->dim();
              d["idempotents"] = a->num_idempotents();
              d["radical_dim"] = a->radical_basis().size();
              DimVerdict gd = global_dim(a, cap);
              d["global_dim"] = gd.str();
              GorensteinCert c = is_gorenstein(a, cap);
              d["gorenstein"] = c.certified;
              d["inj_dims"] = py::make_tuple(c.left.str(), c.right.str());
              d["self_injective"] = is_self_injective(a);
              return d;
          },
          py::arg("algebra"), py::arg("cap") = 20);

    m.def("module_from_json",
          [](const std::string& text, const PyAlgebra* alg) {
              return module_from_json(ojson::parse(text), ".",
                                      alg ? alg->ptr : AlgebraPtr(nullptr));
          },
          py::arg("text"), py::arg("algebra") = nullptr);
    m.def("regular", [](const PyAlgebra& a) { return regular_module(a.ptr); },
          py::arg("algebra"));
    m.def("simple", [](const PyAlgebra& a, std::size_t v) { return simple_module(a.ptr, v); },
          py::arg("algebra"), py::arg("vertex"));
    m.def("projective",
          [](const PyAlgebra& a, std::size_t v) {
              return indecomposable_projective(a.ptr, v).mod;
          },
          py::arg("algebra"), py::arg("vertex"));
    m.def("random_module",
          [](const PyAlgebra& a, std::size_t dim_cap, std::uint64_t seed) {
              Rng rng(seed);
              return random_module(a.ptr, dim_cap, rng);
          },
          py::arg("algebra"), py::arg("dim_cap") = 12, py::arg("seed") = 1);
    m.def("restrict_to_left", &restrict_to_left, py::arg("x"));
    m.def("restrict_to_right", &restrict_to_right, py::arg("x"));
    m.def("dual", &dual_module, py::arg("m"));
    m.def("lambda_dual", &lambda_dual, py::arg("m"));
    m.def("evaluation_iso", &evaluation_iso_check, py::arg("m"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("m"), py::arg("n"));
    m.def("is_projective", &is_projective, py::arg("m"));

    m.def("check_gp",
          [](const Module& x, const std::string& criterion, std::size_t bound) {
              return verdict_dict(run_criterion(x, criterion, bound));
          },
          py::arg("module"), py::arg("criterion") = "direct", py::arg("bound") = 20);
    m.def("ext_table", &ext_dims, py::arg("m"), py::arg("n"), py::arg("max_degree") = 6);
    m.def("tor_table", &tor_dims, py::arg("u"), py::arg("x"), py::arg("max_degree") = 6);
    m.def("proj_dim",
          [](const Module& mod, std::size_t cap) { return proj_dim(mod, cap).str(); },
          py::arg("m"), py::arg("cap") = 20);

    m.def("verify",
          [](const std::string& theorem, const std::vector<std::string>& families,
             std::size_t samples, std::uint64_t seed, const std::string& field,
             std::size_t dim_cap, std::size_t bound, std::size_t max_degree) {
              GenSpec spec;
              spec.theorem = theorem;
              spec.families = families;
              spec.samples = samples;
              spec.seed = seed;
              spec.field = Field::parse(field);
              spec.dim_cap = dim_cap;
              spec.bound = bound;
              spec.max_degree = max_degree;
              return canonical_dump(report_to_json(verify_theorem(spec)));
          },
          py::arg("theorem"), py::arg("families") = std::vector<std::string>{},
          py::arg("samples") = 200, py::arg("seed") = 1, py::arg("field") = "Fp:101",
          py::arg("dim_cap") = 12, py::arg("bound") = 20, py::arg("max_degree") = 6,
          "runs a seeded cross-criterion verification and returns the report as JSON");
}
