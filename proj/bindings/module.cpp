#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "bck/algebra.hpp"
#include "bck/closure.hpp"
#include "bck/enumerate.hpp"
#include "bck/io.hpp"
#include "bck/quotient.hpp"
#include "bck/series.hpp"
#include "bck/wronski.hpp"

namespace py = pybind11;
using namespace bck;

namespace {

ElementSet set_from(const Algebra& a, const std::vector<Element>& elems) {
    ElementSet s(a.order());
    for (Element x : elems) {
        if (x < 0 || x >= a.order()) throw std::invalid_argument("element out of range");
        s.insert(x);
    }
    return s;
}

std::vector<Element> flat_table(const std::vector<std::vector<Element>>& rows) {
    std::vector<Element> t;
    for (const auto& r : rows) t.insert(t.end(), r.begin(), r.end());
    return t;
}

std::vector<std::vector<Element>> nested_table(const Algebra& a) {
    std::vector<std::vector<Element>> rows(a.order(), std::vector<Element>(a.order()));
    for (Element x = 0; x < a.order(); ++x)
        for (Element y = 0; y < a.order(); ++y) rows[x][y] = a.op(x, y);
    return rows;
}

WronskiElement welt(const std::string& tag, int index) {
    if (tag == "n") return WronskiElement::nat(index);
    if (tag == "a") return WronskiElement::a(index);
    if (tag == "b") return WronskiElement::b(index);
    throw std::invalid_argument("family tag must be n, a or b");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite BCK-algebras: validation, commutators, central series, "
              "quotients, enumeration";

    py::class_<Algebra>(m, "Algebra")
        .def_static(
            "from_table",
            [](const std::vector<std::vector<Element>>& rows) {
                int n = static_cast<int>(rows.size());
                for (const auto& r : rows)
                    if (static_cast<int>(r.size()) != n)
                        throw std::invalid_argument("table must be square");
                return Algebra::from_table(n, flat_table(rows));
            },
            py::arg("table"))
        .def_static("trivial", &Algebra::trivial)
        .def_property_readonly("order", &Algebra::order)
        .def("op", &Algebra::op, py::arg("x"), py::arg("y"))
        .def("leq", &Algebra::leq, py::arg("x"), py::arg("y"))
        .def("meet", &Algebra::meet, py::arg("x"), py::arg("y"))
        .def("commutator", &Algebra::commutator, py::arg("x"), py::arg("y"))
        .def("weighted_commutator",
             [](const Algebra& a, const std::vector<Element>& xs) {
                 return a.weighted_commutator(xs);
             })
        .def("maximal_elements", [](const Algebra& a) { return a.maximal_elements().to_vector(); })
        .def("is_commutative", &Algebra::is_commutative)
        .def("commuting_center", [](const Algebra& a) { return a.commuting_center().to_vector(); })
        .def("table", &nested_table)
        .def(py::self == py::self)
        .def("__repr__", [](const Algebra& a) {
            return "<Algebra order=" + std::to_string(a.order()) + ">";
        });

    m.def("validate", [](const std::vector<std::vector<Element>>& rows) {
        int n = static_cast<int>(rows.size());
        std::vector<Element> flat = flat_table(rows);
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != n) {
                py::dict d;
                d["valid"] = false;
                d["structural"] = "table is not square";
                d["violations"] = py::list();
                return d;
            }
        ValidationReport rep = validate_table(n, flat);
        py::dict d;
        d["valid"] = rep.valid();
        d["structural"] = rep.structural ? py::cast(*rep.structural) : py::none();
        py::list vs;
        for (const auto& v : rep.violations)
            vs.append(py::make_tuple(axiom_name(v.axiom), py::tuple(py::cast(v.witness))));
        d["violations"] = vs;
        return d;
    });

    m.def("subalgebra_closure", [](const Algebra& a, const std::vector<Element>& s) {
        return subalgebra_closure(a, set_from(a, s)).to_vector();
    });
    m.def("ideal_closure", [](const Algebra& a, const std::vector<Element>& s) {
        return ideal_closure(a, set_from(a, s)).to_vector();
    });
    m.def("is_subalgebra", [](const Algebra& a, const std::vector<Element>& s) {
        return is_subalgebra(a, set_from(a, s));
    });
    m.def("is_ideal", [](const Algebra& a, const std::vector<Element>& s) {
        return is_ideal(a, set_from(a, s));
    });
    m.def("commutator_subalgebra",
          [](const Algebra& a, const std::vector<Element>& s, const std::vector<Element>& t) {
              return commutator_subalgebra(a, set_from(a, s), set_from(a, t)).to_vector();
          });
    m.def("derived_subalgebra",
          [](const Algebra& a) { return derived_subalgebra(a).to_vector(); });
    m.def("derived_ideal", [](const Algebra& a) { return derived_ideal(a).to_vector(); });
    m.def("all_ideals", [](const Algebra& a) {
        std::vector<std::vector<Element>> out;
        for (const auto& i : all_ideals(a)) out.push_back(i.to_vector());
        return out;
    });

    py::class_<SeriesReport>(m, "SeriesReport")
        .def_property_readonly("kind",
                               [](const SeriesReport& r) { return series_kind_name(r.kind); })
        .def_property_readonly("terms",
                               [](const SeriesReport& r) {
                                   std::vector<std::vector<Element>> out;
                                   for (const auto& t : r.terms) out.push_back(t.to_vector());
                                   return out;
                               })
        .def_readonly("stabilized", &SeriesReport::stabilized)
        .def_property_readonly("class_value", [](const SeriesReport& r) -> py::object {
            return r.class_value ? py::cast(*r.class_value) : py::none();
        });

    m.def("derived_series", &derived_series);
    m.def("lower_central_series", &lower_central_series);
    m.def("upper_central_series", &upper_central_series);
    m.def("upper_central_raw_sets", [](const Algebra& a) {
        std::vector<std::vector<Element>> out;
        for (const auto& s : upper_central_raw_sets(a)) out.push_back(s.to_vector());
        return out;
    });
    m.def("pseudo_center", [](const Algebra& a) { return pseudo_center(a).to_vector(); });
    m.def("raw_pseudo_center",
          [](const Algebra& a) { return raw_pseudo_center(a).to_vector(); });
    m.def("nilpotence_class", &nilpotence_class);
    m.def("solvability_class", &solvability_class);
    m.def("is_in_bck_c", [](const Algebra& a, int c) {
        BckClassCheck r = is_in_bck_c(a, c);
        return py::make_tuple(r.holds,
                              r.holds ? py::object(py::none()) : py::cast(r.witness));
    });

    py::class_<QuotientAlgebra>(m, "QuotientAlgebra")
        .def_readonly("algebra", &QuotientAlgebra::algebra)
        .def_readonly("class_of", &QuotientAlgebra::class_of)
        .def_readonly("representative", &QuotientAlgebra::representative)
        .def_property_readonly("ideal",
                               [](const QuotientAlgebra& q) { return q.ideal.to_vector(); });

    m.def("quotient", [](const Algebra& a, const std::vector<Element>& i) {
        return quotient(a, set_from(a, i));
    });
    m.def("commutativization", &commutativization);

    py::class_<Morphism>(m, "Morphism")
        .def_readonly("source", &Morphism::source)
        .def_readonly("target", &Morphism::target)
        .def_readonly("map", &Morphism::map)
        .def_readonly("is_hom", &Morphism::is_hom)
        .def_readonly("is_surjective", &Morphism::is_surjective)
        .def_property_readonly("kernel",
                               [](const Morphism& f) { return f.kernel.to_vector(); });

    m.def("make_morphism", &make_morphism);
    m.def("check_homomorphism",
          [](const Algebra& a, const Algebra& b, const std::vector<Element>& map) -> py::object {
              auto fail = hom_failure(a, b, map);
              if (!fail) return py::none();
              return py::make_tuple(fail->x, fail->y);
          },
          "returns None if the map is a homomorphism, else a counterexample pair");
    m.def("natural_projection", &natural_projection);
    m.def("induced_commutativization_map", &induced_commutativization_map);
    m.def("all_homomorphisms", &all_homomorphisms);
    m.def("universal_property_check", &universal_property_check);
    m.def("direct_product", &direct_product);
    m.def("is_isomorphic", [](const Algebra& a, const Algebra& b) -> py::object {
        auto iso = is_isomorphic(a, b);
        return iso ? py::cast(*iso) : py::object(py::none());
    });

    py::class_<CanonicalForm>(m, "CanonicalForm")
        .def_readonly("order", &CanonicalForm::order)
        .def_property_readonly("bytes",
                               [](const CanonicalForm& c) { return py::bytes(c.bytes); })
        .def("__eq__", [](const CanonicalForm& a, const CanonicalForm& b) { return a == b; });

    m.def("canonical_form", &canonical_form);
    m.def("chain_algebra", &chain_algebra);
    m.def("enumerate_bck", &enumerate_bck, py::arg("order"), py::arg("jobs") = 1);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("canon", &SweepRecord::canon)
        .def_readonly("order", &SweepRecord::order)
        .def_readonly("nilpotence_class", &SweepRecord::nilpotence_class)
        .def_readonly("solvability_class", &SweepRecord::solvability_class)
        .def_readonly("commutative", &SweepRecord::commutative)
        .def_readonly("pseudo_center_size", &SweepRecord::pseudo_center_size)
        .def_readonly("derived_ideal_size", &SweepRecord::derived_ideal_size);

    m.def("sweep", &sweep, py::arg("max_order"), py::arg("jobs") = 1);
    m.def("catalog_line", &catalog_line);

    py::class_<WronskiElement>(m, "WronskiElement")
        .def_property_readonly("family",
                               [](const WronskiElement& e) {
                                   switch (e.family) {
                                       case WronskiElement::Family::nat: return "n";
                                       case WronskiElement::Family::a: return "a";
                                       default: return "b";
                                   }
                               })
        .def_readonly("index", &WronskiElement::index)
        .def("is_zero", &WronskiElement::is_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const WronskiElement& e) { return e.str(); });

    m.def("wronski_element", &welt, py::arg("family"), py::arg("index"));
    m.def("wronski_op",
          [](const std::string& f1, int i1, const std::string& f2, int i2, int cap) {
              return wronski_op(welt(f1, i1), welt(f2, i2), cap);
          },
          py::arg("family1"), py::arg("index1"), py::arg("family2"), py::arg("index2"),
          py::arg("cap") = kWronskiDefaultCap);
    m.def("wronski_commutator",
          [](const std::string& f1, int i1, const std::string& f2, int i2, int cap) {
              return wronski_commutator(welt(f1, i1), welt(f2, i2), cap);
          },
          py::arg("family1"), py::arg("index1"), py::arg("family2"), py::arg("index2"),
          py::arg("cap") = kWronskiDefaultCap);

    m.def("load_algebra", &load_algebra);
    m.def("save_algebra", &save_algebra);
    m.def("format_table", &format_table);
}
