#include "plsurf/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Every function returns (exit_code, stdout, stderr) like the executable.
namespace {

py::tuple as_tuple(const plsurf::CommandResult& r) { return py::make_tuple(r.exit_code, r.out, r.err); }

plsurf::Exec exec_of(unsigned threads) { return plsurf::Exec{threads}; }

} // namespace

PYBIND11_MODULE(_plsurf, m)
{
    m.doc() = "Signatures and thin-equivalence decisions for piecewise-linear surfaces";

    m.def("path_reduce", [](const std::string& doc) { return as_tuple(plsurf::cmd_path_reduce(doc)); }, py::arg("doc"));
    m.def(
        "path_sig", [](const std::string& doc, std::size_t level) { return as_tuple(plsurf::cmd_path_sig(doc, level)); },
        py::arg("doc"), py::arg("level") = 4);
    m.def(
        "surface_sig",
        [](const std::string& doc, std::size_t level, int weight, unsigned threads) {
            plsurf::CommandResult r;
            {
                py::gil_scoped_release release;
                r = plsurf::cmd_surface_sig(doc, level, weight, exec_of(threads));
            }
            return as_tuple(r);
        },
        py::arg("doc"), py::arg("level") = 4, py::arg("weight") = 6, py::arg("threads") = 1);
    m.def(
        "thin_equiv",
        [](const std::string& x, std::optional<std::string> y, std::size_t level, int weight, unsigned threads) {
            plsurf::CommandResult r;
            {
                py::gil_scoped_release release;
                r = plsurf::cmd_thin_equiv(x, y, level, weight, exec_of(threads));
            }
            return as_tuple(r);
        },
        py::arg("x"), py::arg("y") = py::none(), py::arg("level") = 4, py::arg("weight") = 6, py::arg("threads") = 1);
    m.def(
        "triangulate",
        [](const std::string& doc, unsigned threads) {
            plsurf::CommandResult r;
            {
                py::gil_scoped_release release;
                r = plsurf::cmd_triangulate(doc, exec_of(threads));
            }
            return as_tuple(r);
        },
        py::arg("doc"), py::arg("threads") = 1);
    m.def("gen_example", [](const std::string& name) { return as_tuple(plsurf::cmd_gen_example(name)); },
          py::arg("name"));
}
