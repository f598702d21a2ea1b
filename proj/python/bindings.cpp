#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "plankcount/bounds.hpp"
#include "plankcount/core.hpp"
#include "plankcount/engine.hpp"
#include "plankcount/search.hpp"

namespace py = pybind11;
using namespace plankcount;

namespace {

py::object int128_to_py(Int128 v) {
  const bool negative = v < 0;
  const auto mag =
      negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  py::object value = py::cast(hi).attr("__lshift__")(py::cast(64)).attr("__add__")(py::cast(lo));
  return negative ? value.attr("__neg__")() : value;
}

template <typename T>
std::string vec_repr(const char* name, const T& v) {
  std::ostringstream os;
  os << name << "(dims=" << v.dims() << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_plankcount, m) {
  m.doc() = "Counting cube vertices inside planks and tangent half-spaces of the unit ball";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ExactOverflow>(m, "ExactOverflow", PyExc_OverflowError);
  py::register_exception<EmptyHalfSpace>(m, "EmptyHalfSpaceError", PyExc_RuntimeError);

  py::class_<WeightVector>(m, "WeightVector")
      .def(py::init<std::vector<double>>(), py::arg("weights"))
      .def_property_readonly("dims", &WeightVector::dims)
      .def_property_readonly("weights",
                             [](const WeightVector& v) { return v.weights(); })
      .def("norm_sq", &WeightVector::norm_sq)
      .def("is_normalized", &WeightVector::is_normalized, py::arg("tol") = 1e-12)
      .def("__len__", &WeightVector::dims)
      .def("__getitem__",
           [](const WeightVector& v, std::size_t i) {
             if (i >= static_cast<std::size_t>(v.dims())) throw py::index_error();
             return v[i];
           })
      .def("__repr__", [](const WeightVector& v) { return vec_repr("WeightVector", v); });

  py::class_<IntWeightVector>(m, "IntWeightVector")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("weights"))
      .def_property_readonly("dims", &IntWeightVector::dims)
      .def_property_readonly("weights",
                             [](const IntWeightVector& v) { return v.weights(); })
      .def_property_readonly("norm_sq",
                             [](const IntWeightVector& v) { return int128_to_py(v.norm_sq()); })
      .def("to_unit", &IntWeightVector::to_unit)
      .def("__repr__", [](const IntWeightVector& v) { return vec_repr("IntWeightVector", v); });

  py::class_<SignVertex>(m, "SignVertex")
      .def(py::init<int, std::uint64_t>(), py::arg("dims"), py::arg("mask"))
      .def_property_readonly("dims", &SignVertex::dims)
      .def_property_readonly("mask", &SignVertex::mask)
      .def("sign", &SignVertex::sign, py::arg("coord"))
      .def("__eq__", [](const SignVertex& a, const SignVertex& b) { return a == b; })
      .def("__repr__", [](const SignVertex& v) {
        std::ostringstream os;
        os << "SignVertex(dims=" << v.dims() << ", mask=" << v.mask() << ")";
        return os.str();
      });

  py::class_<PlankCount>(m, "PlankCount")
      .def_readonly("dims", &PlankCount::dims)
      .def_readonly("inside", &PlankCount::inside)
      .def_readonly("boundary", &PlankCount::boundary)
      .def_readonly("outside", &PlankCount::outside)
      .def_readonly("tol", &PlankCount::tol)
      .def_property_readonly("satisfied", &PlankCount::satisfied)
      .def_property_readonly("ratio", &PlankCount::ratio)
      .def("__repr__", [](const PlankCount& c) {
        std::ostringstream os;
        os << "PlankCount(inside=" << c.inside << ", boundary=" << c.boundary
           << ", outside=" << c.outside << ")";
        return os.str();
      });

  py::class_<HalfSpaceCount>(m, "HalfSpaceCount")
      .def_readonly("dims", &HalfSpaceCount::dims)
      .def_readonly("strict_interior", &HalfSpaceCount::strict_interior)
      .def_readonly("boundary", &HalfSpaceCount::boundary)
      .def_readonly("tol", &HalfSpaceCount::tol)
      .def_property_readonly("closed", &HalfSpaceCount::closed)
      .def("__repr__", [](const HalfSpaceCount& h) {
        std::ostringstream os;
        os << "HalfSpaceCount(strict_interior=" << h.strict_interior
           << ", boundary=" << h.boundary << ")";
        return os.str();
      });

  py::class_<CentroidWitness>(m, "CentroidWitness")
      .def_readonly("w", &CentroidWitness::w)
      .def_readonly("k", &CentroidWitness::k)
      .def_readonly("w_norm", &CentroidWitness::w_norm)
      .def_readonly("dot", &CentroidWitness::dot)
      .def_readonly("norm_ok", &CentroidWitness::norm_ok)
      .def_readonly("dot_ok", &CentroidWitness::dot_ok)
      .def("holds", &CentroidWitness::holds);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("dims", &BoundReport::dims)
      .def_readonly("satisfied", &BoundReport::satisfied)
      .def_readonly("strict_interior", &BoundReport::strict_interior)
      .def_readonly("theorem1_bound", &BoundReport::theorem1_bound)
      .def_readonly("lemma1_bound", &BoundReport::lemma1_bound)
      .def_readonly("ratio", &BoundReport::ratio)
      .def_readonly("pass_theorem1", &BoundReport::pass_theorem1)
      .def_readonly("pass_lemma1", &BoundReport::pass_lemma1)
      .def_readonly("pass_tomaszewski", &BoundReport::pass_tomaszewski)
      .def("all_pass", &BoundReport::all_pass);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("best", &SearchResult::best)
      .def_readonly("satisfied", &SearchResult::satisfied)
      .def_readonly("ratio", &SearchResult::ratio)
      .def_readonly("restarts_used", &SearchResult::restarts_used)
      .def_readonly("rng_seed", &SearchResult::rng_seed)
      .def_readonly("evaluations", &SearchResult::evaluations);

  py::class_<engine::EnumConfig>(m, "EnumConfig")
      .def(py::init([](double tol, std::uint64_t reanchor_period, int chunk_bits) {
             engine::EnumConfig cfg;
             cfg.tol = tol;
             cfg.reanchor_period = reanchor_period;
             cfg.chunk_bits = chunk_bits;
             return cfg;
           }),
           py::arg("tol") = 1e-9, py::arg("reanchor_period") = (1ull << 20),
           py::arg("chunk_bits") = 8)
      .def_readwrite("tol", &engine::EnumConfig::tol)
      .def_readwrite("reanchor_period", &engine::EnumConfig::reanchor_period)
      .def_readwrite("chunk_bits", &engine::EnumConfig::chunk_bits);

  py::class_<search::SearchConfig>(m, "SearchConfig")
      .def(py::init([](int restarts, int steps_per_restart, double initial_temperature,
                       double cooling, double slack_weight, std::uint64_t rng_seed, int dims) {
             search::SearchConfig cfg;
             cfg.restarts = restarts;
             cfg.steps_per_restart = steps_per_restart;
             cfg.initial_temperature = initial_temperature;
             cfg.cooling = cooling;
             cfg.slack_weight = slack_weight;
             cfg.rng_seed = rng_seed;
             cfg.dims = dims;
             return cfg;
           }),
           py::arg("restarts") = 50, py::arg("steps_per_restart") = 5000,
           py::arg("initial_temperature") = 1.0, py::arg("cooling") = 0.999,
           py::arg("slack_weight") = 0.5, py::arg("rng_seed") = 0, py::arg("dims") = 2)
      .def_readwrite("restarts", &search::SearchConfig::restarts)
      .def_readwrite("steps_per_restart", &search::SearchConfig::steps_per_restart)
      .def_readwrite("initial_temperature", &search::SearchConfig::initial_temperature)
      .def_readwrite("cooling", &search::SearchConfig::cooling)
      .def_readwrite("slack_weight", &search::SearchConfig::slack_weight)
      .def_readwrite("rng_seed", &search::SearchConfig::rng_seed)
      .def_readwrite("dims", &search::SearchConfig::dims);

  py::class_<bounds::AntipodalCheck>(m, "AntipodalCheck")
      .def_readonly("pass_", &bounds::AntipodalCheck::pass)
      .def_readonly("witness", &bounds::AntipodalCheck::witness);

  py::class_<bounds::Observation2Check>(m, "Observation2Check")
      .def_readonly("pass_", &bounds::Observation2Check::pass)
      .def_readonly("pair_found", &bounds::Observation2Check::pair_found)
      .def_readonly("axis_coord", &bounds::Observation2Check::axis_coord)
      .def_readonly("axis_confirmed", &bounds::Observation2Check::axis_confirmed)
      .def_readonly("strict_interior", &bounds::Observation2Check::strict_interior)
      .def_readonly("detail", &bounds::Observation2Check::detail);

  // core operations
  m.def("normalize", &normalize, py::arg("weights"),
        "Scale a weight list to unit norm, preserving direction");
  m.def("vertex_decode", &vertex_decode, py::arg("mask"), py::arg("n"),
        "Decode a mask into its +-1 coordinate list");
  m.def("antipode", &antipode, py::arg("v"));
  m.def("gray_mask", &gray_mask, py::arg("t"));

  // engine
  m.def("count_plank_naive", &engine::count_plank_naive, py::arg("u"),
        py::arg("cfg") = engine::EnumConfig{});
  m.def("count_plank_gray", &engine::count_plank_gray, py::arg("u"),
        py::arg("cfg") = engine::EnumConfig{});
  m.def("count_plank_exact", &engine::count_plank_exact, py::arg("b"));
  m.def("count_halfspace",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(
            &engine::count_halfspace),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("count_halfspace",
        py::overload_cast<const IntWeightVector&>(&engine::count_halfspace), py::arg("b"));
  m.def("count_parallel",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&, unsigned>(
            &engine::count_parallel),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{}, py::arg("workers") = 1);
  m.def("count_parallel",
        py::overload_cast<const IntWeightVector&, const engine::EnumConfig&, unsigned>(
            &engine::count_parallel),
        py::arg("b"), py::arg("cfg") = engine::EnumConfig{}, py::arg("workers") = 1);

  // bounds
  m.def("theorem1_bound", &bounds::theorem1_bound, py::arg("n"));
  m.def("lemma1_bound", &bounds::lemma1_bound, py::arg("n"));
  m.def("bound_report",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(&bounds::bound_report),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("bound_report", py::overload_cast<const IntWeightVector&>(&bounds::bound_report),
        py::arg("b"));
  m.def("verify_theorem1",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(
            &bounds::verify_theorem1),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("verify_theorem1", py::overload_cast<const IntWeightVector&>(&bounds::verify_theorem1),
        py::arg("b"));
  m.def("verify_lemma1",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(&bounds::verify_lemma1),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("verify_lemma1", py::overload_cast<const IntWeightVector&>(&bounds::verify_lemma1),
        py::arg("b"));
  m.def("verify_tomaszewski",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(
            &bounds::verify_tomaszewski),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("verify_tomaszewski",
        py::overload_cast<const IntWeightVector&>(&bounds::verify_tomaszewski), py::arg("b"));
  m.def("pi_map", &bounds::pi_map, py::arg("v"), py::arg("fixed_coord"));
  m.def("antipodal_free_check",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(
            &bounds::antipodal_free_check),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("antipodal_free_check",
        py::overload_cast<const IntWeightVector&>(&bounds::antipodal_free_check), py::arg("b"));
  m.def("observation2_check",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(
            &bounds::observation2_check),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("observation2_check",
        py::overload_cast<const IntWeightVector&>(&bounds::observation2_check), py::arg("b"));
  m.def("centroid_witness",
        py::overload_cast<const WeightVector&, const engine::EnumConfig&>(
            &bounds::centroid_witness),
        py::arg("u"), py::arg("cfg") = engine::EnumConfig{});
  m.def("centroid_witness",
        py::overload_cast<const IntWeightVector&>(&bounds::centroid_witness), py::arg("b"));

  // search
  m.def("family_count", &search::family_count, py::arg("n"), py::arg("k"));
  m.def("search_minimum", &search::search_minimum, py::arg("n"), py::arg("cfg"),
        py::arg("workers") = 1);
  m.def(
      "sample_unit_vector",
      [](int n, std::uint64_t seed) {
        search::Rng rng(seed);
        return search::sample_unit_vector(n, rng);
      },
      py::arg("n"), py::arg("seed"));
  m.def("givens_perturb", &search::givens_perturb, py::arg("u"), py::arg("i"), py::arg("j"),
        py::arg("theta"));
  m.def("objective", &search::objective, py::arg("u"), py::arg("slack_weight") = 0.5,
        py::arg("cfg") = engine::EnumConfig{});
  m.def("round_rational", &search::round_rational, py::arg("u"),
        py::arg("max_denominator") = 1000);
}
