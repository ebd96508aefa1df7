#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/decomposition.hpp"
#include "wreathchar/report_io.hpp"
#include "wreathchar/search.hpp"
#include "wreathchar/tuple.hpp"

namespace py = pybind11;
using namespace wreathchar;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Products of irreducible characters of the wreath product C_p wr C_p: "
              "tuple calculus, exact cyclotomic referee, and search harness.";

    py::class_<Prime>(m, "Prime")
        .def(py::init<int>(), py::arg("p"))
        .def_property_readonly("value", &Prime::value)
        .def_static("is_prime", &Prime::is_prime, py::arg("n"))
        .def("__int__", &Prime::value)
        .def("__repr__", [](const Prime& p) { return "Prime(" + std::to_string(p.value()) + ")"; })
        .def(py::self == py::self);

    py::class_<Tuple>(m, "Tuple")
        .def(py::init([](const std::vector<int>& entries) {
                 return Tuple(Prime(static_cast<int>(entries.size())), entries);
             }),
             py::arg("entries"))
        .def_static("parse", &Tuple::parse, py::arg("text"))
        .def_static("zero", &Tuple::zero, py::arg("p"))
        .def_static("constant", &Tuple::constant, py::arg("p"), py::arg("c"))
        .def_property_readonly("p", &Tuple::p)
        .def_property_readonly("entries", [](const Tuple& t) { return t.entries(); })
        .def("sum_mod_p", &Tuple::sum_mod_p)
        .def("is_constant", &Tuple::is_constant)
        .def("__str__", &Tuple::str)
        .def("__repr__", [](const Tuple& t) { return "Tuple(" + t.str() + ")"; })
        .def("__len__", [](const Tuple& t) { return t.entries().size(); })
        .def("__getitem__",
             [](const Tuple& t, int i) {
                 if (i < 0 || i >= t.p()) throw py::index_error();
                 return t[i];
             })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const Tuple& t) { return py::hash(py::str(t.str())); });

    py::class_<OrbitRep>(m, "OrbitRep")
        .def(py::init<const Tuple&>(), py::arg("tuple"))
        .def_property_readonly("tuple", &OrbitRep::tuple)
        .def_property_readonly("p", &OrbitRep::p)
        .def("is_constant", &OrbitRep::is_constant)
        .def("__str__", [](const OrbitRep& r) { return r.tuple().str(); })
        .def("__repr__", [](const OrbitRep& r) { return "OrbitRep(" + r.tuple().str() + ")"; })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const OrbitRep& r) { return py::hash(py::str(r.tuple().str())); });

    m.def("canonical_rotation", &canonical_rotation, py::arg("t"));
    m.def("rotated", &rotated, py::arg("t"), py::arg("shift"));
    m.def("rotations", &rotations, py::arg("t"));
    m.def("is_irreducible_inducing", &is_irreducible_inducing, py::arg("t"));
    m.def("is_faithful_inducing", &is_faithful_inducing, py::arg("t"));
    m.def("add", &add, py::arg("a"), py::arg("b"));
    m.def("scale", &scale, py::arg("t"), py::arg("k"));

    py::class_<InducedChar>(m, "InducedChar")
        .def(py::init<OrbitRep>(), py::arg("rep"))
        .def_readonly("rep", &InducedChar::rep)
        .def("__repr__",
             [](const InducedChar& c) { return character_str(CharacterId{c}); })
        .def(py::self == py::self);

    py::class_<LinearExtChar>(m, "LinearExtChar")
        .def(py::init<int, int>(), py::arg("c"), py::arg("e"))
        .def_readonly("c", &LinearExtChar::c)
        .def_readonly("e", &LinearExtChar::e)
        .def("__repr__",
             [](const LinearExtChar& c) { return character_str(CharacterId{c}); })
        .def(py::self == py::self);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("p", &Decomposition::p)
        .def_readonly("distinct_count", &Decomposition::distinct_count)
        .def_readonly("degree_total", &Decomposition::degree_total)
        .def("items",
             [](const Decomposition& d) {
                 std::vector<std::pair<CharacterId, int>> out(d.constituents.begin(),
                                                              d.constituents.end());
                 return out;
             })
        .def("to_json", [](const Decomposition& d) { return to_json(d).dump(2); })
        .def("__str__", [](const Decomposition& d) { return to_text(d); })
        .def(py::self == py::self);

    m.def("product_sums", &product_sums, py::arg("phi"), py::arg("psi"));
    m.def("decompose", &decompose, py::arg("phi"), py::arg("psi"));
    m.def("count_distinct", &count_distinct, py::arg("phi"), py::arg("psi"));

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_readonly("p", &TheoremReport::p)
        .def_readonly("phi", &TheoremReport::phi)
        .def_readonly("psi", &TheoremReport::psi)
        .def_readonly("walkthrough_sums", &TheoremReport::walkthrough_sums)
        .def_readonly("sum_classes", &TheoremReport::sum_classes)
        .def_readonly("pre_collapse_distinct_tuples", &TheoremReport::pre_collapse_distinct_tuples)
        .def_readonly("collision", &TheoremReport::collision)
        .def_readonly("distinct_constituents", &TheoremReport::distinct_constituents)
        .def_readonly("decomposition", &TheoremReport::decomposition)
        .def_readonly("passed", &TheoremReport::passed)
        .def("to_json", [](const TheoremReport& r) { return to_json(r).dump(2); })
        .def("__str__", [](const TheoremReport& r) { return to_text(r); });

    m.def("verify_theorem", [](int p) { return verify_theorem(Prime(p)); }, py::arg("p"));

    py::class_<CyclotomicInt>(m, "CyclotomicInt")
        .def(py::init([](int p, const std::vector<long long>& coeffs) {
                 return CyclotomicInt(Prime(p), coeffs);
             }),
             py::arg("p"), py::arg("coeffs"))
        .def_static("zero", [](int p) { return CyclotomicInt::zero(Prime(p)); }, py::arg("p"))
        .def_static(
            "integer", [](int p, long long n) { return CyclotomicInt::integer(Prime(p), n); },
            py::arg("p"), py::arg("n"))
        .def_static(
            "root_power",
            [](int p, long long k) { return CyclotomicInt::root_power(Prime(p), k); },
            py::arg("p"), py::arg("k"))
        .def_property_readonly("p", &CyclotomicInt::p)
        .def_property_readonly("coeffs",
                               [](const CyclotomicInt& v) { return v.coeffs(); })
        .def("is_zero", &CyclotomicInt::is_zero)
        .def("as_rational_integer", &CyclotomicInt::as_rational_integer)
        .def("conjugate", &CyclotomicInt::conjugate)
        .def("__add__",
             [](const CyclotomicInt& a, const CyclotomicInt& b) { return a + b; })
        .def("__sub__",
             [](const CyclotomicInt& a, const CyclotomicInt& b) { return a - b; })
        .def("__mul__",
             [](const CyclotomicInt& a, const CyclotomicInt& b) { return a * b; })
        .def("__repr__", [](const CyclotomicInt& v) { return "CyclotomicInt" + v.str(); })
        .def(py::self == py::self);

    m.def("linear_char_value", &linear_char_value, py::arg("t"), py::arg("a"));
    m.def("induced_value_on_A", &induced_value_on_A, py::arg("rep"), py::arg("a"));
    m.def("inner_product_over_A", &inner_product_over_A, py::arg("phi"), py::arg("psi"),
          py::arg("theta"), py::arg("cap") = kOracleCap,
          py::call_guard<py::gil_scoped_release>());
    m.def("oracle_decompose", &oracle_decompose, py::arg("phi"), py::arg("psi"),
          py::arg("cap") = kOracleCap, py::arg("workers") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("faithfulness_oracle", &faithfulness_oracle, py::arg("rep"));

    py::enum_<SearchMode>(m, "SearchMode")
        .value("EXHAUSTIVE", SearchMode::Exhaustive)
        .value("SAMPLE", SearchMode::Sample);

    py::class_<ShardSpec>(m, "ShardSpec")
        .def(py::init<int, int>(), py::arg("index") = 0, py::arg("total") = 1)
        .def_readwrite("index", &ShardSpec::index)
        .def_readwrite("total", &ShardSpec::total);

    py::class_<SymmetryFlags>(m, "SymmetryFlags")
        .def(py::init([](bool shift, bool scale, bool swap) {
                 return SymmetryFlags{shift, scale, swap};
             }),
             py::arg("shift") = true, py::arg("scale") = true, py::arg("swap") = true)
        .def_readwrite("shift", &SymmetryFlags::shift)
        .def_readwrite("scale", &SymmetryFlags::scale)
        .def_readwrite("swap", &SymmetryFlags::swap);

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init([](int p, const std::string& mode, long long n_pairs, std::uint64_t seed,
                         const ShardSpec& shard, const SymmetryFlags& symmetry,
                         int worker_count) {
                 SearchConfig cfg{Prime(p)};
                 if (mode == "exhaustive") {
                     cfg.mode = SearchMode::Exhaustive;
                 } else if (mode == "sample") {
                     cfg.mode = SearchMode::Sample;
                 } else {
                     throw std::invalid_argument("mode must be 'exhaustive' or 'sample'");
                 }
                 cfg.n_pairs = n_pairs;
                 cfg.seed = seed;
                 cfg.shard = shard;
                 cfg.symmetry = symmetry;
                 cfg.worker_count = worker_count;
                 return cfg;
             }),
             py::arg("p"), py::arg("mode") = "exhaustive", py::arg("n_pairs") = 0,
             py::arg("seed") = 0, py::arg("shard") = ShardSpec{},
             py::arg("symmetry") = SymmetryFlags{}, py::arg("worker_count") = 0)
        .def_readonly("p", &SearchConfig::p)
        .def_readonly("mode", &SearchConfig::mode)
        .def_readonly("n_pairs", &SearchConfig::n_pairs)
        .def_readonly("seed", &SearchConfig::seed)
        .def_readwrite("shard", &SearchConfig::shard)
        .def_readwrite("symmetry", &SearchConfig::symmetry)
        .def_readwrite("worker_count", &SearchConfig::worker_count);

    py::class_<BoundCheck>(m, "BoundCheck")
        .def_readonly("min_count_above_one", &BoundCheck::min_count_above_one)
        .def_readonly("satisfied", &BoundCheck::satisfied);

    py::class_<PairWitness>(m, "PairWitness")
        .def_readonly("phi", &PairWitness::phi)
        .def_readonly("psi", &PairWitness::psi)
        .def("__repr__", [](const PairWitness& w) {
            return "PairWitness(" + w.phi.str() + "; " + w.psi.str() + ")";
        });

    py::class_<SearchReport>(m, "SearchReport")
        .def_readonly("config", &SearchReport::config)
        .def_readonly("rng_name", &SearchReport::rng_name)
        .def_readonly("histogram", &SearchReport::histogram)
        .def_readonly("witnesses", &SearchReport::witnesses)
        .def_readonly("bound_check", &SearchReport::bound_check)
        .def_readonly("gap_counts", &SearchReport::gap_counts)
        .def_readonly("pairs_examined", &SearchReport::pairs_examined)
        .def_readonly("wall_time_seconds", &SearchReport::wall_time_seconds)
        .def("to_json", [](const SearchReport& r) { return to_json(r).dump(2); })
        .def("to_csv", [](const SearchReport& r) { return histogram_csv(r); })
        .def("__str__", [](const SearchReport& r) { return to_text(r); });

    m.def("enumerate_faithful_reps", [](int p) { return enumerate_faithful_reps(Prime(p)); },
          py::arg("p"));
    m.def("run_search", &run_search, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("merge_reports", &merge_reports, py::arg("parts"));
    m.def("reduced_pair_stream", &reduced_pair_stream, py::arg("config"), py::arg("yield_fn"));

#ifdef VERSION_INFO
#define WREATHCHAR_STR_IMPL(x) #x
#define WREATHCHAR_STR(x) WREATHCHAR_STR_IMPL(x)
    m.attr("__version__") = WREATHCHAR_STR(VERSION_INFO);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
