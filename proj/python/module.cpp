#include "equichar/etale.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace equichar;

namespace {

// Exact rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rational_to_string(q));
}

Rational from_py(const py::object& value) {
    if (py::isinstance<py::int_>(value)) return Rational(value.cast<long long>());
    return parse_rational(py::str(value).cast<std::string>());
}

std::vector<py::object> mult_list(const VirtualRep& v) {
    std::vector<py::object> out;
    for (const auto& m : v.mult()) out.push_back(to_fraction(m));
    return out;
}

TameCover make_cover(const GroupWithTable& gt, long char_p, long g_Y,
                     const std::vector<std::tuple<std::string, int, long>>& branches) {
    CoverDescription desc;
    desc.char_p = char_p;
    desc.g_Y = g_Y;
    for (const auto& [label, generator, t] : branches) {
        desc.branches.push_back({label, generator, t});
    }
    return cover_validate(gt.table, desc);
}

}  // namespace

PYBIND11_MODULE(_equichar, m) {
    m.doc() = "equivariant Euler characteristics of tame covers of curves";

    py::register_exception<CoverValidationError>(m, "CoverValidationError", PyExc_ValueError);
    py::register_exception<TableValidationError>(m, "TableValidationError", PyExc_ValueError);

    py::class_<Cyclotomic>(m, "Cyclotomic")
        .def(py::init([](const std::string& text) { return Cyclotomic::parse(text); }))
        .def_static("root_of_unity", &Cyclotomic::root_of_unity)
        .def_property_readonly("order", &Cyclotomic::order)
        .def("is_rational", &Cyclotomic::is_rational)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def("__str__", &Cyclotomic::str)
        .def("__repr__", &Cyclotomic::str);

    py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "FiniteGroup")
        .def_property_readonly("name", &FiniteGroup::name)
        .def_property_readonly("order", &FiniteGroup::order)
        .def("mul", &FiniteGroup::mul)
        .def("inverse", &FiniteGroup::inverse)
        .def("element_order", &FiniteGroup::element_order)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def_property_readonly("class_count", &FiniteGroup::class_count);

    py::class_<CharacterTable, std::shared_ptr<CharacterTable>>(m, "CharacterTable")
        .def_property_readonly("size", &CharacterTable::size)
        .def("label", &CharacterTable::label)
        .def("index_of_label", &CharacterTable::index_of_label)
        .def("degree", [](const CharacterTable& t, int i) { return to_fraction(t.degree(i)); })
        .def_property_readonly("trivial_index", &CharacterTable::trivial_index)
        .def("values",
             [](const CharacterTable& t, int i) {
                 std::vector<std::string> out;
                 for (const auto& v : t.irreducible(i).values) out.push_back(v.str());
                 return out;
             })
        .def_property_readonly("group", [](const CharacterTable& t) {
            return std::const_pointer_cast<FiniteGroup>(t.group());
        });

    py::class_<GroupWithTable>(m, "GroupWithTable")
        .def_property_readonly(
            "group",
            [](const GroupWithTable& g) { return std::const_pointer_cast<FiniteGroup>(g.group); })
        .def_property_readonly("table", [](const GroupWithTable& g) {
            return std::const_pointer_cast<CharacterTable>(g.table);
        });
    m.def("builtin", &table_builtin, "group and validated character table for a builtin name");

    py::class_<VirtualRep>(m, "VirtualRep")
        .def_property_readonly("table",
                               [](const VirtualRep& v) {
                                   return std::const_pointer_cast<CharacterTable>(v.table());
                               })
        .def_property_readonly("mult", &mult_list)
        .def("__getitem__", [](const VirtualRep& v, int i) { return to_fraction(v[i]); })
        .def("dim", [](const VirtualRep& v) { return to_fraction(v.dim()); })
        .def("is_integral", &VirtualRep::is_integral)
        .def("is_nonnegative_integral", &VirtualRep::is_nonnegative_integral)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("scaled", [](const VirtualRep& v, const py::object& c) { return v.scaled(from_py(c)); })
        .def("__str__", &VirtualRep::str)
        .def("__repr__", &VirtualRep::str);
    m.def("basis", [](const GroupWithTable& gt, int i) { return VirtualRep::basis(gt.table, i); });
    m.def("regular", [](const GroupWithTable& gt) { return VirtualRep::regular(gt.table); });

    py::class_<BranchOrbit>(m, "BranchOrbit")
        .def_readonly("label", &BranchOrbit::label)
        .def_readonly("generator", &BranchOrbit::generator)
        .def_readonly("e", &BranchOrbit::e)
        .def_readonly("t", &BranchOrbit::t);

    py::class_<TameCover>(m, "TameCover")
        .def_property_readonly("degree", &TameCover::degree)
        .def_property_readonly("genus_base", &TameCover::genus_base)
        .def_property_readonly("genus_total", &TameCover::genus_total)
        .def_property_readonly("branches", &TameCover::branches)
        .def_property_readonly("warnings", &TameCover::warnings);
    m.def("cover", &make_cover, py::arg("group"), py::arg("char_p"), py::arg("g_Y"),
          py::arg("branches"), "validate a cover description");
    m.def("kummer_cover", &kummer_cover, "superelliptic C_m cover from branch exponents");

    py::class_<CoherentSheafData>(m, "CoherentSheaf")
        .def(py::init([](long rank, long degree,
                         const std::map<std::string, std::vector<long>>& fibers) {
                 return CoherentSheafData{rank, degree, fibers};
             }),
             py::arg("rank") = 1, py::arg("degree") = 0,
             py::arg("fibers") = std::map<std::string, std::vector<long>>{})
        .def_readwrite("rank", &CoherentSheafData::rank)
        .def_readwrite("degree", &CoherentSheafData::degree)
        .def_readwrite("fibers", &CoherentSheafData::fibers);

    py::class_<EquivariantDivisorData>(m, "Divisor")
        .def(py::init([](const std::map<std::string, long>& entries,
                         const std::map<std::string, long>& unramified) {
                 return EquivariantDivisorData{entries, unramified};
             }),
             py::arg("entries") = std::map<std::string, long>{},
             py::arg("unramified_orbits") = std::map<std::string, long>{})
        .def_readwrite("entries", &EquivariantDivisorData::entries)
        .def_readwrite("unramified_orbits", &EquivariantDivisorData::unramified_orbits);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("name", &Certificate::name)
        .def_readonly("ok", &Certificate::ok)
        .def_readonly("detail", &Certificate::detail);
    py::class_<EngineResult>(m, "EngineResult")
        .def_readonly("value", &EngineResult::value)
        .def_readonly("certificates", &EngineResult::certificates)
        .def("all_ok", &EngineResult::all_ok)
        .def("__repr__", [](const EngineResult& r) { return r.value.str(); });

    m.def("euler_char_thm11", &euler_char_thm11);
    m.def("multiplicities_cor13", &multiplicities_cor13);
    m.def("nakajima_module", &nakajima_module);
    m.def("euler_char_cor14", &euler_char_cor14);
    m.def("differentials_cor17", &differentials_cor17);
    m.def("ksir_multiplicity_cor18", [](const TameCover& c, int i) {
        return to_fraction(ksir_multiplicity_cor18(c, i));
    });
    m.def("prop19_multiplicity",
          [](const TameCover& c, int i) { return to_fraction(prop19_multiplicity(c, i)); });
    m.def("divisor_euler_multiplicity_cor111",
          [](const TameCover& c, const EquivariantDivisorData& d, int i) {
              return to_fraction(divisor_euler_multiplicity_cor111(c, d, i));
          });
    m.def("divisor_sheaf", &divisor_sheaf);
    m.def("divisor_degree", &divisor_degree);

    py::class_<EtaleSheafData::BranchStalk>(m, "BranchStalk")
        .def(py::init([](const std::vector<long>& exponents, long alpha) {
                 return EtaleSheafData::BranchStalk{exponents, alpha};
             }),
             py::arg("exponents") = std::vector<long>{}, py::arg("alpha") = 0)
        .def_readwrite("exponents", &EtaleSheafData::BranchStalk::exponents)
        .def_readwrite("alpha", &EtaleSheafData::BranchStalk::alpha);
    py::class_<EtaleSheafData::FreeOrbit>(m, "FreeOrbit")
        .def(py::init([](const std::string& label, long stalk_dim, long alpha) {
                 return EtaleSheafData::FreeOrbit{label, stalk_dim, alpha};
             }),
             py::arg("label"), py::arg("stalk_dim") = 0, py::arg("alpha") = 0)
        .def_readwrite("label", &EtaleSheafData::FreeOrbit::label)
        .def_readwrite("stalk_dim", &EtaleSheafData::FreeOrbit::stalk_dim)
        .def_readwrite("alpha", &EtaleSheafData::FreeOrbit::alpha);
    py::class_<EtaleSheafData>(m, "EtaleSheaf")
        .def(py::init([](long l, long generic_dim) {
                 return EtaleSheafData::constant(l, generic_dim);
             }),
             py::arg("l"), py::arg("generic_dim") = 1)
        .def_readwrite("l", &EtaleSheafData::l)
        .def_readwrite("generic_dim", &EtaleSheafData::generic_dim)
        .def_readwrite("branch_stalks", &EtaleSheafData::branch_stalks)
        .def_readwrite("free_orbits", &EtaleSheafData::free_orbits);

    py::class_<ConductorReport>(m, "ConductorReport")
        .def_readonly("total", &ConductorReport::total)
        .def_readonly("divisible", &ConductorReport::divisible);
    py::class_<FrobeniusOrbitDecomposition>(m, "FrobeniusOrbits")
        .def_readonly("l", &FrobeniusOrbitDecomposition::l)
        .def_readonly("orbits", &FrobeniusOrbitDecomposition::orbits)
        .def("orbit_of", &FrobeniusOrbitDecomposition::orbit_of)
        .def("orbit_class", &FrobeniusOrbitDecomposition::orbit_class);
    py::class_<EtaleMultiplicities>(m, "EtaleMultiplicities")
        .def_readonly("orbits", &EtaleMultiplicities::orbits)
        .def_property_readonly(
            "scalar", [](const EtaleMultiplicities& e) { return to_fraction(e.scalar); })
        .def_property_readonly("orbit_mult",
                               [](const EtaleMultiplicities& e) {
                                   std::vector<py::object> out;
                                   for (const auto& q : e.orbit_mult) out.push_back(to_fraction(q));
                                   return out;
                               })
        .def_readonly("expanded", &EtaleMultiplicities::expanded);

    m.def("etale_euler_char_thm21", &etale_euler_char_thm21);
    m.def("etale_unramified_shortcut", &etale_unramified_shortcut);
    m.def("wild_conductor_divisibility_cor24", &wild_conductor_divisibility_cor24);
    m.def("frobenius_orbits",
          [](const GroupWithTable& gt, long l) { return frobenius_orbits(gt.table, l); });
    m.def("multiplicities_cor23", &multiplicities_cor23);
}
