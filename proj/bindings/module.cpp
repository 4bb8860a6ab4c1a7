#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "bflab/reports.hpp"

namespace py = pybind11;
using namespace bflab;

namespace {

std::vector<Certificate> parse_certificates(const std::vector<std::string>& texts) {
    std::vector<Certificate> certs;
    certs.reserve(texts.size());
    for (const std::string& t : texts) certs.push_back(Certificate::parse(t));
    return certs;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact sensitivity, block sensitivity and certificate complexity toolkit";

    py::register_exception<capacity_error>(mod, "CapacityError", PyExc_ValueError);
    py::register_exception<hypothesis_error>(mod, "HypothesisError", PyExc_ValueError);

    py::class_<BooleanFunction>(mod, "BooleanFunction")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_hex", &BooleanFunction::from_hex, py::arg("hex"), py::arg("n"))
        .def_property_readonly("n", &BooleanFunction::n)
        .def("to_hex", &BooleanFunction::to_hex)
        .def("evaluate", [](const BooleanFunction& f, Word index) {
            if (index >= f.table_size()) throw std::invalid_argument("index out of range");
            return f.bit(index);
        }, py::arg("index"))
        .def("evaluate_bits",
             [](const BooleanFunction& f, const std::string& bits) {
                 return f.evaluate(InputWord::parse(bits));
             },
             py::arg("bits"))
        .def("negated", &BooleanFunction::negated)
        .def("__eq__", [](const BooleanFunction& a, const BooleanFunction& b) { return a == b; })
        .def("__repr__", [](const BooleanFunction& f) {
            return "BooleanFunction(n=" + std::to_string(f.n()) + ", tt=" + f.to_hex() + ")";
        });

    py::class_<MeasureProfile>(mod, "MeasureProfile")
        .def_readonly("s0", &MeasureProfile::s0)
        .def_readonly("s1", &MeasureProfile::s1)
        .def_readonly("bs0", &MeasureProfile::bs0)
        .def_readonly("bs1", &MeasureProfile::bs1)
        .def_readonly("c0", &MeasureProfile::c0)
        .def_readonly("c1", &MeasureProfile::c1)
        .def("s", &MeasureProfile::s)
        .def("bs", &MeasureProfile::bs)
        .def("C", &MeasureProfile::C)
        .def("__repr__",
             [](const MeasureProfile& p) { return reports::profile_json(p).dump(); });

    mod.def("profile", &profile, py::arg("f"));
    mod.def("sensitivity_at", [](const BooleanFunction& f, const std::string& x) {
        return sensitivity_at(f, InputWord::parse(x));
    });
    mod.def("block_sensitivity_at", [](const BooleanFunction& f, const std::string& x) {
        return block_sensitivity_at(f, InputWord::parse(x));
    });
    mod.def("certificate_at", [](const BooleanFunction& f, const std::string& x) {
        return certificate_at(f, InputWord::parse(x)).str();
    });

    py::class_<Construction>(mod, "Construction")
        .def_readonly("fn", &Construction::fn)
        .def_readonly("claimed", &Construction::claimed)
        .def_property_readonly("certificates", [](const Construction& c) {
            std::vector<std::string> out;
            for (const Certificate& cert : c.certificates) out.push_back(cert.str());
            return out;
        })
        .def("to_json", [](const Construction& c) { return reports::construct_report(c).dump(2); });

    mod.def("g0", &g0, py::arg("k"));
    mod.def("or_compose_g0", &or_compose_g0, py::arg("m"), py::arg("r"));

    mod.def("contradictions", [](const std::string& c, const std::string& d) {
        return contradictions(Certificate::parse(c), Certificate::parse(d));
    });
    mod.def("overlaps", [](const std::string& c, const std::string& d) {
        return overlaps(Certificate::parse(c), Certificate::parse(d));
    });

    mod.def("graph_report", [](const BooleanFunction& f) {
        return reports::graph_report(reports::analyze_graph(f), f).dump(2);
    });

    mod.def("witness_report", [](const BooleanFunction& f, const std::vector<std::string>& certs) {
        std::vector<Certificate> parsed = parse_certificates(certs);
        return reports::witness_report(reports::run_witness(f, parsed), f, parsed).dump(2);
    });

    mod.def("largest_nonconstant_subfunction",
            [](const BooleanFunction& f, const std::vector<int>& free, bool preferred) {
                Word mask = 0;
                for (int pos : free) mask |= position_bit(pos);
                return largest_nonconstant_subfunction(f, Block(mask), preferred).str();
            },
            py::arg("f"), py::arg("free_positions"), py::arg("preferred_value"));

    mod.def("sweep_report",
            [](int n, const std::string& mode, std::uint64_t samples, std::uint64_t seed, int jobs) {
                SweepMode sm = mode == "random" ? SweepMode::random(samples, seed)
                                                : SweepMode::exhaustive();
                return reports::sweep_report(bflab::sweep(n, sm, jobs, false)).dump(2);
            },
            py::arg("n"), py::arg("mode") = "exhaustive", py::arg("samples") = 100000,
            py::arg("seed") = 1, py::arg("jobs") = 1);

    mod.def("search_report",
            [](int n, std::optional<int> s0, std::optional<int> bs0, std::optional<int> s1,
               std::optional<int> c1) {
                ExtremalQuery q{s0, bs0, s1, c1};
                return reports::search_report(n, q, extremal_search(n, q)).dump(2);
            },
            py::arg("n"), py::arg("s0") = std::nullopt, py::arg("bs0") = std::nullopt,
            py::arg("s1") = std::nullopt, py::arg("c1") = std::nullopt);

    mod.def("conjecture_report", [](int n) {
        return reports::conjecture_json(conjecture_report(n)).dump(2);
    }, py::arg("n"));

    mod.attr("__version__") = "0.1.0";
}
