#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "henonseq/bit_sequence.hpp"
#include "henonseq/cipher.hpp"
#include "henonseq/correlation.hpp"
#include "henonseq/errors.hpp"
#include "henonseq/experiments.hpp"
#include "henonseq/generator.hpp"
#include "henonseq/henon_map.hpp"
#include "henonseq/keyspace.hpp"
#include "henonseq/linear_complexity.hpp"
#include "henonseq/stat_tests.hpp"

namespace py = pybind11;
using namespace henonseq;

namespace {

py::dict report_dict(const TestReport& r) {
    py::list entries;
    for (const auto& e : r.entries) {
        py::dict row;
        row["statistic"] = e.name;
        row["value"] = e.value;
        row["bound"] = e.bound;
        row["pass"] = e.pass;
        entries.append(row);
    }
    py::dict d;
    d["battery"] = r.battery;
    d["entries"] = entries;
    d["overall"] = r.overall ? py::cast(*r.overall) : py::none();
    return d;
}

py::bytes to_py_bytes(const std::vector<std::uint8_t>& v) {
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

std::vector<std::uint8_t> from_py_bytes(const py::bytes& b) {
    const std::string s = b;
    return {s.begin(), s.end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hénon map pseudorandom bit generator and randomness analysis";

    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_RuntimeError);
    py::register_exception<WrongLength>(m, "WrongLength", PyExc_ValueError);

    py::class_<BitSequence>(m, "BitSequence")
        .def(py::init<>())
        .def(py::init([](const std::string& s) { return BitSequence::from_string(s); }), py::arg("bits"))
        .def_static("from_bytes", [](const py::bytes& b, std::size_t length) {
            return BitSequence::from_bytes_msb(from_py_bytes(b), length);
        }, py::arg("data"), py::arg("length"))
        .def("__len__", &BitSequence::size)
        .def("__getitem__", [](const BitSequence& w, std::int64_t i) {
            const auto n = static_cast<std::int64_t>(w.size());
            if (i < 0) i += n;
            if (i < 0 || i >= n) throw py::index_error("bit index out of range");
            return static_cast<int>(w[static_cast<std::size_t>(i)]);
        })
        .def("__str__", &BitSequence::to_string)
        .def("__repr__", [](const BitSequence& w) { return "BitSequence(length=" + std::to_string(w.size()) + ")"; })
        .def("__eq__", [](const BitSequence& a, const BitSequence& b) { return a == b; })
        .def("to_bytes", [](const BitSequence& w) { return to_py_bytes(w.to_bytes_msb()); })
        .def("count_ones", &BitSequence::count_ones)
        .def("slice", &BitSequence::slice, py::arg("offset"), py::arg("length"))
        .def("complement", &BitSequence::complement);
    py::implicitly_convertible<std::string, BitSequence>();

    py::class_<MapParameters>(m, "MapParameters")
        .def(py::init<>())
        .def(py::init([](double a, double b, double x0, double y0) { return MapParameters{a, b, x0, y0}; }),
             py::arg("alpha") = 1.4, py::arg("beta") = 0.3, py::arg("x0") = 0.0, py::arg("y0") = 0.0)
        .def_readwrite("alpha", &MapParameters::alpha)
        .def_readwrite("beta", &MapParameters::beta)
        .def_readwrite("x0", &MapParameters::x0)
        .def_readwrite("y0", &MapParameters::y0);

    m.def("orbit", [](const MapParameters& p, std::uint64_t n, double bound) {
        std::vector<std::pair<double, double>> out;
        for (const auto& s : orbit(p, n, bound)) out.emplace_back(s.x, s.y);
        return out;
    }, py::arg("params"), py::arg("n"), py::arg("bound") = kDefaultDivergenceBound);

    py::class_<GeneratorConfig>(m, "GeneratorConfig")
        .def(py::init<>())
        .def_readwrite("params", &GeneratorConfig::params)
        .def_readwrite("decimation", &GeneratorConfig::decimation)
        .def_readwrite("calibration", &GeneratorConfig::calibration)
        .def_readwrite("discard", &GeneratorConfig::discard)
        .def_readwrite("seed2", &GeneratorConfig::seed2)
        .def_readwrite("seed1", &GeneratorConfig::seed1)
        .def_readwrite("bound", &GeneratorConfig::bound);

    m.def("preset", [](const std::string& name) {
        const auto cfg = preset(name);
        if (!cfg) throw py::key_error("unknown preset: " + name);
        return *cfg;
    }, py::arg("name"));
    m.def("preset_names", &preset_names);
    m.def("generate", &generate, py::arg("config"), py::arg("n"));

    m.def("linear_complexity", &linear_complexity, py::arg("bits"));
    m.def("lc_profile", &lc_profile, py::arg("bits"));
    m.def("conjectured_pmf", [](std::size_t n) { return conjectured_pmf(n).pmf; }, py::arg("n"));

    m.def("correlation", &correlation, py::arg("u"), py::arg("v"));
    m.def("autocorrelation", &autocorrelation, py::arg("bits"), py::arg("shift"));
    m.def("correlation_pmf_exact", [](std::size_t n) {
        const auto p = correlation_pmf_exact(n);
        return std::make_pair(p.support, p.probs);
    }, py::arg("n"));
    m.def("correlation_pmf_normal", [](std::size_t n) {
        const auto p = correlation_pmf_normal(n);
        return std::make_pair(p.support, p.probs);
    }, py::arg("n"));

    m.def("fips140_1", [](const BitSequence& w) { return report_dict(fips140_1(w)); }, py::arg("bits"));
    m.def("menezes_battery", [](const BitSequence& w) { return report_dict(menezes_battery(w)); },
          py::arg("bits"));

    m.def("keyspace_bits", [](double epsilon) {
        KeyspaceSpec spec;
        spec.epsilon = epsilon;
        return keyspace_bits(spec);
    }, py::arg("epsilon") = kEpsilonFloat64);
    m.attr("EPSILON_FLOAT32") = kEpsilonFloat32;
    m.attr("EPSILON_FLOAT64") = kEpsilonFloat64;

    m.def("vernam", [](const py::bytes& data, const GeneratorConfig& cfg) {
        const auto in = from_py_bytes(data);
        std::vector<std::uint8_t> out;
        {
            py::gil_scoped_release release;
            out = vernam(in, cfg);
        }
        return to_py_bytes(out);
    }, py::arg("data"), py::arg("config"));
}
