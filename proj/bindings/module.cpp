#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cordalg/cordring.hpp"
#include "cordalg/diagram.hpp"
#include "cordalg/errors.hpp"
#include "cordalg/homsep.hpp"
#include "cordalg/json_io.hpp"
#include "cordalg/monodromy.hpp"
#include "cordalg/ncalg.hpp"
#include "cordalg/skein.hpp"

namespace py = pybind11;
using namespace cordalg;

PYBIND11_MODULE(_cordalg, m) {
    m.doc() = "cord algebra toolkit";

    py::register_exception<Error>(m, "CordalgError");

    py::class_<Crossing>(m, "Crossing")
        .def(py::init<int, int, int>(), py::arg("over"), py::arg("under_in"),
             py::arg("under_out"))
        .def_readonly("over", &Crossing::over)
        .def_readonly("under_in", &Crossing::under_in)
        .def_readonly("under_out", &Crossing::under_out);

    py::class_<KnotDiagram>(m, "KnotDiagram")
        .def_static("from_json",
                    [](const std::string& text) {
                        return diagram_from_document(nlohmann::json::parse(text));
                    })
        .def_static("from_pd_code", &KnotDiagram::from_pd_code)
        .def_static("from_braid_word", &KnotDiagram::from_braid_word, py::arg("word"),
                    py::arg("strands") = std::nullopt)
        .def_static("connected_sum", &KnotDiagram::connected_sum)
        .def(
            "cable",
            [](const KnotDiagram& d, int order, int at) { return d.cable(order, at); },
            py::arg("order"), py::arg("at"))
        .def(
            "cable_with_projection",
            [](const KnotDiagram& d, int order, int at) {
                std::vector<int> strand_of;
                KnotDiagram c = d.cable(order, at, &strand_of);
                return std::make_pair(std::move(c), std::move(strand_of));
            },
            py::arg("order"), py::arg("at"))
        .def("to_json", [](const KnotDiagram& d) { return diagram_to_document(d).dump(2); })
        .def_property_readonly("num_arcs", &KnotDiagram::num_arcs)
        .def_property_readonly("basepoint", &KnotDiagram::basepoint)
        .def_property_readonly("crossings", &KnotDiagram::crossings)
        .def("tag", &KnotDiagram::tag)
        .def("successor", &KnotDiagram::successor)
        .def("longitude_passes", &KnotDiagram::longitude_passes);

    py::class_<Gf2Poly>(m, "Gf2Poly")
        .def_static("zero", &Gf2Poly::zero)
        .def_static("one", &Gf2Poly::one)
        .def_static("var", &Gf2Poly::var)
        .def("is_zero", &Gf2Poly::is_zero)
        .def("__add__", [](const Gf2Poly& a, const Gf2Poly& b) { return a + b; })
        .def("__mul__", [](const Gf2Poly& a, const Gf2Poly& b) { return a * b; })
        .def("__eq__", [](const Gf2Poly& a, const Gf2Poly& b) { return a == b; })
        .def("__str__", &Gf2Poly::str)
        .def("__repr__", &Gf2Poly::str);

    py::class_<CordRing>(m, "CordRing")
        .def(py::init<KnotDiagram>())
        .def_property_readonly("diagram", &CordRing::diagram)
        .def("nf", &CordRing::nf)
        .def("equivalent", &CordRing::equivalent)
        .def("basis", [](const CordRing& r) {
            std::vector<std::string> out;
            for (const auto& p : r.basis().polys()) out.push_back(p.str());
            return out;
        });

    py::class_<PassWord>(m, "PassWord")
        .def(py::init([](int start, std::vector<int> passes, int end) {
                 PassWord w;
                 w.start = start;
                 w.passes = std::move(passes);
                 w.end = end;
                 return w;
             }),
             py::arg("start"), py::arg("passes"), py::arg("end"))
        .def_readonly("start", &PassWord::start)
        .def_readonly("passes", &PassWord::passes)
        .def_readonly("end", &PassWord::end);

    m.def("reduce", &reduce);
    m.def("reduce_nf", &reduce_nf);
    m.def("lift", &lift);

    py::class_<LoopAction>(m, "LoopAction")
        .def_static("identity", &LoopAction::identity)
        .def_static("blue_box", &LoopAction::blue_box)
        .def_static("gramain", &LoopAction::gramain)
        .def_static("compose", &LoopAction::compose)
        .def("power", &LoopAction::power);

    py::class_<Monodromy>(m, "Monodromy")
        .def(py::init<const CordRing&, const LoopAction&>(), py::keep_alive<1, 2>())
        .def("image", &Monodromy::image, py::return_value_policy::copy)
        .def("moves", &Monodromy::moves)
        .def("first_moved", &Monodromy::first_moved)
        .def("moved", &Monodromy::moved)
        .def("is_identity", &Monodromy::is_identity);

    py::class_<Target>(m, "Target")
        .def_static("poly_z", &Target::poly_z)
        .def_static("truncated", &Target::truncated)
        .def_static("boolean", &Target::boolean)
        .def("str", &Target::str)
        .def("name", &Target::name);

    m.def("verify_hom",
          py::overload_cast<const CordRing&, const Assignment&, const Target&>(&verify_hom));
    m.def("verify_hom",
          py::overload_cast<const KnotDiagram&, const Assignment&, const Target&>(&verify_hom));
    m.def("search_homs", &search_homs);
    m.def("evaluate_word", &evaluate_word);
    m.def("pullback_assignment", &pullback_assignment);
    m.def("certify_action", [](const KnotDiagram& d, const LoopAction& a, const Assignment& phi,
                               const Target& t) -> std::optional<py::tuple> {
        auto cert = certify_action(d, a, phi, t);
        if (!cert) return std::nullopt;
        return py::make_tuple(cert->i, cert->j, t.str(cert->before), t.str(cert->after));
    });

    py::module_ nc = m.def_submodule("nc", "noncommutative word algebra");
    py::class_<cordalg::nc::NcPoly>(nc, "NcPoly")
        .def_static("zero", &cordalg::nc::NcPoly::zero)
        .def_static("one", &cordalg::nc::NcPoly::one)
        .def_static("sym", &cordalg::nc::NcPoly::sym, py::arg("name"), py::arg("exp") = 1)
        .def("is_zero", &cordalg::nc::NcPoly::is_zero)
        .def("__add__",
             [](const cordalg::nc::NcPoly& a, const cordalg::nc::NcPoly& b) { return a + b; })
        .def("__mul__",
             [](const cordalg::nc::NcPoly& a, const cordalg::nc::NcPoly& b) { return a * b; })
        .def("__eq__",
             [](const cordalg::nc::NcPoly& a, const cordalg::nc::NcPoly& b) { return a == b; })
        .def("__str__", &cordalg::nc::NcPoly::str);
    nc.def("group_algebra_equal", &cordalg::nc::group_algebra_equal);
    nc.def("substitute", &cordalg::nc::substitute);
    nc.def("trefoil_relators", &cordalg::nc::trefoil_relators);
    nc.def("trefoil_embedding", &cordalg::nc::trefoil_embedding);
}
