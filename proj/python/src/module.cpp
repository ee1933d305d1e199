#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robinson/c1p.hpp"
#include "robinson/oracle.hpp"
#include "robinson/paths.hpp"
#include "robinson/recognition.hpp"
#include "robinson/reductions.hpp"
#include "robinson/stars.hpp"
#include "robinson/uniform_orient.hpp"

namespace py = pybind11;
using namespace robinson;

namespace {

using Matrix = std::vector<std::vector<double>>;
using Pairs = std::vector<std::pair<int, int>>;

DissimilaritySpace space_of(const Matrix& m) { return DissimilaritySpace(m); }

Tree tree_of(int n, const Pairs& edges) {
  std::vector<Edge> e;
  for (const auto& [u, v] : edges) e.push_back({u, v});
  return Tree(n, std::move(e));
}

OrientedTree oriented_of(int n, const Pairs& arcs) {
  std::vector<Arc> a;
  for (const auto& [u, v] : arcs) a.push_back({u, v});
  return OrientedTree::from_arcs(n, a);
}

Pairs arcs_of(const OrientedTree& ot) {
  Pairs out;
  for (const Arc& a : ot.arcs()) out.emplace_back(a.from, a.to);
  return out;
}

Matrix matrix_of(const DissimilaritySpace& d) {
  Matrix m(d.size(), std::vector<double>(d.size()));
  for (int x = 0; x < d.size(); ++x)
    for (int y = 0; y < d.size(); ++y) m[x][y] = d(x, y);
  return m;
}

Pairs edges_of(const Tree& t) {
  Pairs out;
  for (const Edge& e : t.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::dict orientation_dict(const OrientedTree& ot, std::int64_t xi) {
  py::dict d;
  d["xi"] = xi;
  d["arcs"] = arcs_of(ot);
  return d;
}

}  // namespace

PYBIND11_MODULE(_robinson, m) {
  m.doc() = "Asymmetric Robinson seriation: recognition, optimal orientations, reductions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<RefusalError>(m, "RefusalError", PyExc_RuntimeError);

  m.def("is_one_way_order", [](const Matrix& d, const std::vector<int>& order) {
    return is_one_way_order(space_of(d), std::span<const int>(order));
  }, py::arg("matrix"), py::arg("order"));
  m.def("is_two_way_order", [](const Matrix& d, const std::vector<int>& order) {
    return is_two_way_order(space_of(d), std::span<const int>(order));
  }, py::arg("matrix"), py::arg("order"));
  m.def("count_xi", [](int n, const Pairs& arcs) { return count_xi(oriented_of(n, arcs)); },
        py::arg("n"), py::arg("arcs"));
  m.def("check_compatible", [](const Matrix& d, const Pairs& arcs) {
    return check_compatible(space_of(d), oriented_of(static_cast<int>(d.size()), arcs));
  }, py::arg("matrix"), py::arg("arcs"));

  m.def("recognize_two_way", [](const Matrix& d) -> std::optional<std::vector<int>> {
    const auto r = recognize_two_way(space_of(d));
    if (!r) return std::nullopt;
    return r->order.perm();
  }, py::arg("matrix"), "A two-way Robinson order, or None.");
  m.def("test_c1p", [](const std::vector<std::vector<int>>& rows) -> std::optional<std::vector<int>> {
    const auto t = test_c1p(BinaryMatrix(rows));
    if (!t) return std::nullopt;
    return frontier(*t).perm();
  }, py::arg("rows"), "A row order making every column consecutive, or None.");

  m.def("orient_tree", [](const Matrix& d, const Pairs& edges, bool verify_premise) {
    const auto r = orient_all_robinson(space_of(d), tree_of(static_cast<int>(d.size()), edges), verify_premise);
    auto out = orientation_dict(r.orientation, r.xi);
    out["centroid"] = r.centroid;
    return out;
  }, py::arg("matrix"), py::arg("edges"), py::arg("verify_premise") = false);
  m.def("orient_star", [](const Matrix& d, std::optional<int> center) {
    const auto space = space_of(d);
    if (center && (*center < 0 || *center >= space.size())) throw InputError("center out of range");
    const auto r = center ? orient_star(space, star_tree(space.size(), *center), *center)
                          : best_star_orientation(space);
    auto out = orientation_dict(r.orientation, r.xi);
    out["center"] = r.center;
    out["petals"] = r.petals.petals;
    return out;
  }, py::arg("matrix"), py::arg("center") = py::none());
  m.def("orient_path", [](const Matrix& d, const std::vector<int>& order, bool restricted) {
    const auto r = path_orientation(space_of(d), VertexOrder(order), restricted);
    auto out = orientation_dict(r.orientation, r.xi);
    out["eta"] = r.eta.compressed;
    return out;
  }, py::arg("matrix"), py::arg("order"), py::arg("restricted_splits") = false);
  m.def("petals", [](const Matrix& d, int center) {
    const auto space = space_of(d);
    if (center < 0 || center >= space.size()) throw InputError("center out of range");
    return petals(space, star_tree(space.size(), center), center).petals;
  }, py::arg("matrix"), py::arg("center"));
  m.def("assign_star", [](const Matrix& d, int in_count, int out_count) -> std::optional<py::dict> {
    const auto r = assign_star(space_of(d), in_count, out_count);
    if (!r) return std::nullopt;
    py::dict out;
    out["center"] = r->center;
    out["in_set"] = r->in_set;
    out["out_set"] = r->out_set;
    return out;
  }, py::arg("matrix"), py::arg("in_count"), py::arg("out_count"));

  m.def("build_orientation_instance", [](int num_vars, const std::vector<std::array<int, 3>>& clauses) {
    const auto inst = build_orientation_instance(Cnf3{num_vars, clauses});
    py::dict out;
    out["n"] = inst.tree.size();
    out["edges"] = edges_of(inst.tree);
    out["matrix"] = matrix_of(inst.space);
    out["kappa"] = inst.kappa;
    out["roles"] = inst.roles;
    return out;
  }, py::arg("num_vars"), py::arg("clauses"));
  m.def("witness_orientation", [](int num_vars, const std::vector<std::array<int, 3>>& clauses,
                                  const std::vector<bool>& assignment) -> std::optional<Pairs> {
    const auto inst = build_orientation_instance(Cnf3{num_vars, clauses});
    const auto w = witness_orientation(inst, assignment);
    if (!w) return std::nullopt;
    return arcs_of(*w);
  }, py::arg("num_vars"), py::arg("clauses"), py::arg("assignment"));
  m.def("build_subset_instance", [](int n, const Pairs& edges) {
    SimpleGraph g{n, {}};
    for (const auto& [u, v] : edges) g.edges.push_back({u, v});
    const auto inst = build_subset_instance(g);
    py::dict out;
    out["matrix"] = matrix_of(inst.space);
    out["kappa"] = inst.kappa;
    out["roles"] = inst.roles;
    return out;
  }, py::arg("n"), py::arg("edges"));
  m.def("build_assignment_instance", [](const Matrix& d, int kappa) {
    return arcs_of(build_assignment_instance(space_of(d), kappa));
  }, py::arg("matrix"), py::arg("kappa"));

  m.def("brute_optimal_orientation", [](const Matrix& d, const Pairs& edges) {
    const auto r = brute_optimal_orientation(space_of(d), tree_of(static_cast<int>(d.size()), edges));
    return orientation_dict(r.witness, r.xi_max);
  }, py::arg("matrix"), py::arg("edges"));
  m.def("brute_two_way", [](const Matrix& d) -> std::optional<std::vector<int>> {
    const auto r = brute_two_way(space_of(d));
    if (!r) return std::nullopt;
    return r->perm();
  }, py::arg("matrix"));
  m.def("brute_robinson_subset", [](const Matrix& d, int kappa, std::uint64_t budget) {
    return brute_robinson_subset(space_of(d), kappa, budget);
  }, py::arg("matrix"), py::arg("kappa"), py::arg("budget") = kDefaultSubsetBudget);
}
