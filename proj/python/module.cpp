// Python bindings for the main operations.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewgenus/bounds.hpp"
#include "skewgenus/brill_noether.hpp"
#include "skewgenus/elliptic.hpp"

namespace py = pybind11;
using namespace skewgenus;

namespace {

py::dict verdict_to_dict(const LinkVerdict& v) {
    py::dict out;
    out["kind"] = v.kind == LinkKind::NotALink  ? "not-a-link"
                  : v.kind == LinkKind::OneLink ? "1-link"
                                                : "2-link";
    out["progression"] =
        v.progression ? py::object(py::str(to_string(*v.progression))) : py::none();
    return out;
}

py::dict difficulty_to_dict(const DifficultyResult& r) {
    py::dict out;
    out["ct"] = r.ct;
    out["c_delta"] = r.c_delta;
    py::list steps;
    for (const auto& s : r.witness.steps) steps.append(s.entries());
    out["witness"] = std::move(steps);
    return out;
}

}  // namespace

PYBIND11_MODULE(_skewgenus, m) {
    m.doc() = "exact threshold-genus bounds for fixed-height skew shapes";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<RamSeq>(m, "RamSeq")
        .def(py::init([](const std::vector<int>& entries) { return RamSeq::make(entries); }))
        .def_static("parse", [](const std::string& s) { return parse_ram_seq(s); })
        .def_property_readonly("entries", &RamSeq::entries)
        .def_property_readonly("rank", &RamSeq::rank)
        .def("vanishing", &RamSeq::vanishing)
        .def("sum", &RamSeq::sum)
        .def("translated", &RamSeq::translated)
        .def("reflected", &RamSeq::reflected)
        .def(py::self == py::self)
        .def("__repr__", [](const RamSeq& s) { return to_string(s); });

    py::class_<SkewShape>(m, "SkewShape")
        .def(py::init(
            [](const RamSeq& lower, const RamSeq& upper) { return SkewShape::make(lower, upper); }))
        .def_static("parse", [](const std::string& s) { return parse_shape(s); })
        .def_readonly("lower", &SkewShape::lower)
        .def_readonly("upper", &SkewShape::upper)
        .def_property_readonly("size", &SkewShape::size)
        .def(py::self == py::self)
        .def("__repr__", [](const SkewShape& s) { return to_string(s); });

    py::class_<Progression>(m, "Progression")
        .def_static("empty", &Progression::empty)
        .def_static("singleton", &Progression::singleton)
        .def_static("residue", &Progression::residue)
        .def_static("parse", [](const std::string& s) { return parse_progression(s); })
        .def_property_readonly("modulus", &Progression::modulus)
        .def("contains", &Progression::contains)
        .def(py::self == py::self)
        .def("__repr__", [](const Progression& p) { return to_string(p); });

    py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
        .def(py::init(
            [](const std::vector<int>& gaps) { return NumericalSemigroup::from_gaps(gaps); }))
        .def_static("parse", [](const std::string& s) { return parse_semigroup(s); })
        .def_property_readonly("gaps", &NumericalSemigroup::gaps)
        .def_property_readonly("genus", &NumericalSemigroup::genus)
        .def_property_readonly("weight", &NumericalSemigroup::weight)
        .def("is_primitive", &NumericalSemigroup::is_primitive)
        .def("contains", &NumericalSemigroup::contains)
        .def("__repr__", [](const NumericalSemigroup& s) { return to_string(s); });

    m.def("rho", &rho, py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("rho_hat", &rho_hat);
    m.def("disp_up", &disp_up);
    m.def("disp_down", &disp_down);
    m.def("loose_set", &loose_set);
    m.def("classify_link", [](const SkewShape& s) { return verdict_to_dict(classify_link(s)); });
    m.def("is_linked_by", &is_linked_by);
    m.def("is_threshold_genus_one", &is_threshold_genus_one);
    m.def("render_diagram", &render_diagram);
    m.def("translated", [](const SkewShape& s, int n) { return translated(s, n); });
    m.def("reflected", [](const SkewShape& s, int n) { return reflected(s, n); });

    m.def("elliptic_markings", [](const RamSeq& gamma, const Progression& lam) {
        const auto r = elliptic_markings(gamma, lam);
        return py::make_tuple(r.at_p, r.at_q);
    });
    m.def("elliptic_status",
          [](const SkewShape& s, long long m) { return to_string(elliptic_status(s, m)); });

    m.def("tau", &tau, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "chain_threshold",
        [](const SkewShape& s, std::size_t budget) {
            return difficulty_to_dict(chain_threshold(s, budget));
        },
        py::arg("shape"), py::arg("state_budget") = kDefaultStateBudget);
    m.def(
        "displacement_difficulty",
        [](const SkewShape& s, std::size_t budget) { return displacement_difficulty(s, budget); },
        py::arg("shape"), py::arg("state_budget") = kDefaultStateBudget);

    m.def("stage_one_semigroup", &stage_one_semigroup);
    m.def("komeda_shape", &komeda_shape);
    m.def("gap_shift", &gap_shift);
    m.def("komeda_tg", [](const NumericalSemigroup& s, int r) {
        const auto cert = komeda_tg(s, r);
        py::dict out;
        out["shape"] = cert.shape;
        out["tg"] = cert.tg_value;
        return out;
    });

    m.def("tg_lower", &tg_lower);
    m.def("base_tg_upper", &base_tg_upper);
    m.def("pareschi_threshold", &pareschi_threshold);
    m.def("pareschi_h", &pareschi_h);
    m.def("asy_upper", &asy_upper);
    m.def("epsilon", [](long long a) {
        const auto r = epsilon(a);
        return py::make_tuple(r.num, r.den);
    });
    m.def(
        "main2_upper",
        [](long long a, long long b) {
            const auto cert = main2_upper(a, b);
            return py::make_tuple(cert.upper, certificate_to_canonical_json(cert));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "tg_upper",
        [](long long a, long long b, std::size_t budget) {
            const auto cert = tg_upper(a, b, budget);
            return py::make_tuple(cert.upper, certificate_to_canonical_json(cert));
        },
        py::arg("a"), py::arg("b"), py::arg("state_budget") = kDefaultStateBudget);
    m.def("tg_upper_value", &tg_upper_value, py::arg("a"), py::arg("b"),
          py::arg("state_budget") = kDefaultStateBudget);
    m.def("replay_certificate_json", [](const std::string& text) {
        replay_certificate(certificate_from_json(nlohmann::json::parse(text)));
    });
    m.def(
        "exists_dimensionally_proper",
        [](long long g, long long r, long long d) {
            const auto result = exists_dimensionally_proper(g, r, d);
            py::dict out;
            out["verdict"] = to_string(result.verdict);
            out["a"] = result.a;
            out["b"] = result.b;
            out["certificate"] =
                result.certificate
                    ? py::object(py::str(certificate_to_canonical_json(*result.certificate)))
                    : py::none();
            return out;
        },
        py::arg("g"), py::arg("r"), py::arg("d"));
}
