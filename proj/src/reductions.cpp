#include "robinson/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace robinson {

const std::array<std::array<bool, 3>, 7> kClausePatterns = {{
    {true, false, false},  // only the first literal
    {false, true, false},  // only the second
    {false, false, true},  // only the third
    {true, true, false},   // first and second
    {true, false, true},   // first and third
    {false, true, true},   // second and third
    {true, true, true},    // all three
}};

void Cnf3::validate() const {
  if (num_vars < 0) throw InputError("cnf: negative variable count");
  for (const auto& clause : clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw InputError("cnf: literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

bool Cnf3::satisfied_by(const std::vector<bool>& assignment) const {
  if (assignment.size() != static_cast<std::size_t>(num_vars)) {
    throw InputError("cnf: assignment must cover every variable");
  }
  return std::all_of(clauses.begin(), clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(), [&](int lit) {
      return assignment[std::abs(lit) - 1] == (lit > 0);
    });
  });
}

Cnf3 parse_dimacs(std::istream& in) {
  Cnf3 cnf;
  long declared_clauses = -1;
  std::vector<int> pending;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string format;
      if (declared_clauses >= 0) throw InputError("dimacs: repeated problem line");
      if (!(ls >> format >> cnf.num_vars >> declared_clauses) || format != "cnf") {
        throw InputError("dimacs: malformed problem line '" + line + "'");
      }
      continue;
    }
    if (declared_clauses < 0) throw InputError("dimacs: clause before problem line");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw InputError("dimacs: bad literal '" + tok + "'");
      if (lit != 0) {
        pending.push_back(static_cast<int>(lit));
        continue;
      }
      if (pending.size() != 3) {
        throw InputError("dimacs: clause " + std::to_string(cnf.clauses.size() + 1) + " has " +
                         std::to_string(pending.size()) + " literals, expected 3");
      }
      cnf.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
  }
  if (declared_clauses < 0) throw InputError("dimacs: missing problem line");
  if (!pending.empty()) throw InputError("dimacs: last clause not terminated by 0");
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses) {
    throw InputError("dimacs: header declares " + std::to_string(declared_clauses) +
                     " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  cnf.validate();
  return cnf;
}

void SimpleGraph::validate() const {
  if (n < 1) throw InputError("graph: needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InputError("graph: endpoint out of range");
    if (e.u == e.v) throw InputError("graph: self-loop");
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InputError("graph: repeated edge");
  }
}

// ---------------------------------------------------------------------------
// 3-SAT -> orientation

int sat_leaf_count(int clauses) { return 7 * clauses + 2; }

std::int64_t sat_vertex_count(int vars, int clauses) {
  const std::int64_t n = vars, m = clauses;
  return 1 + n + 2 * n * (7 * m + 2) + 7 * m;
}

std::int64_t sat_kappa(int vars, int clauses) {
  const std::int64_t n = vars, m = clauses, leaves = 7 * m + 2;
  return (7 * m + 5 * n + 14 * n * m)  // edges
         + n * leaves * leaves         // x+ -> x_i -> x-
         + n * m                       // x_i -> y -> z
         + n * leaves                  // leaves reaching y
         + n * m * leaves              // leaves reaching the chosen z's
         + 6 * m * m;                  // z -> y -> z'
}

int clause_pattern(const std::array<int, 3>& clause, const std::vector<bool>& assignment) {
  std::array<bool, 3> truth{};
  for (int p = 0; p < 3; ++p) truth[p] = assignment[std::abs(clause[p]) - 1] == (clause[p] > 0);
  for (int l = 0; l < 7; ++l)
    if (kClausePatterns[l] == truth) return l + 1;
  return 0;
}

OrientationInstance build_orientation_instance(const Cnf3& cnf) {
  cnf.validate();
  for (const auto& c : cnf.clauses) {
    const int a = std::abs(c[0]), b = std::abs(c[1]), e = std::abs(c[2]);
    if (a == b || a == e || b == e) {
      throw InputError("orientation instance: clause repeats a variable");
    }
  }
  const int n = cnf.num_vars;
  const int m = static_cast<int>(cnf.clauses.size());
  const SatLayout at{n, m};
  const int leaves = at.leaves();
  const int total = static_cast<int>(sat_vertex_count(n, m));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(total - 1));
  for (int i = 1; i <= n; ++i) edges.push_back({at.y(), at.x(i)});
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= leaves; ++k) edges.push_back({at.x(i), at.plus(i, k)});
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= leaves; ++k) edges.push_back({at.x(i), at.minus(i, k)});
  for (int j = 1; j <= m; ++j)
    for (int l = 1; l <= 7; ++l) edges.push_back({at.y(), at.z(j, l)});

  std::vector<double> d(static_cast<std::size_t>(total) * total, 2.0);
  for (int v = 0; v < total; ++v) d[static_cast<std::size_t>(v) * total + v] = 0.0;
  auto close = [&](Vertex a, Vertex b) {
    d[static_cast<std::size_t>(a) * total + b] = 1.0;
    d[static_cast<std::size_t>(b) * total + a] = 1.0;
  };
  for (int i = 1; i <= n; ++i)
    for (int i2 = i + 1; i2 <= n; ++i2) close(at.x(i), at.x(i2));
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= leaves; ++k) {
      for (int k2 = k + 1; k2 <= leaves; ++k2) {
        close(at.plus(i, k), at.plus(i, k2));
        close(at.minus(i, k), at.minus(i, k2));
      }
    }
  }
  // z_l of clause j is close to the leaf family that would be a source
  // under any assignment contradicting pattern l: a variable forced true by
  // the pattern is close to its - family, one forced false to its + family.
  for (int j = 1; j <= m; ++j) {
    const auto& clause = cnf.clauses[j - 1];
    for (int l = 1; l <= 7; ++l) {
      for (int p = 0; p < 3; ++p) {
        const int var = std::abs(clause[p]);
        const bool value = kClausePatterns[l - 1][p] == (clause[p] > 0);
        for (int k = 1; k <= leaves; ++k) close(at.z(j, l), value ? at.minus(var, k) : at.plus(var, k));
      }
    }
  }

  OrientationInstance inst;
  inst.cnf = cnf;
  inst.tree = Tree(total, std::move(edges));
  inst.space = DissimilaritySpace(total, std::move(d));
  inst.kappa = sat_kappa(n, m);
  inst.roles.resize(static_cast<std::size_t>(total));
  inst.roles[at.y()] = "y";
  for (int i = 1; i <= n; ++i) {
    const std::string xi = "x" + std::to_string(i);
    inst.roles[at.x(i)] = xi;
    for (int k = 1; k <= leaves; ++k) {
      inst.roles[at.plus(i, k)] = xi + "+" + std::to_string(k);
      inst.roles[at.minus(i, k)] = xi + "-" + std::to_string(k);
    }
  }
  for (int j = 1; j <= m; ++j)
    for (int l = 1; l <= 7; ++l)
      inst.roles[at.z(j, l)] = "z" + std::to_string(j) + "_" + std::to_string(l);
  return inst;
}

std::optional<OrientedTree> witness_orientation(const OrientationInstance& inst,
                                                const std::vector<bool>& assignment) {
  if (!inst.cnf.satisfied_by(assignment)) return std::nullopt;
  const int n = inst.cnf.num_vars;
  const int m = static_cast<int>(inst.cnf.clauses.size());
  const SatLayout at{n, m};

  std::vector<Vertex> chosen_z(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m; ++j) chosen_z[j] = at.z(j, clause_pattern(inst.cnf.clauses[j - 1], assignment));

  // Edges are stored (y, x_i), (x_i, leaf), (y, z) by construction.
  std::vector<Direction> dirs;
  dirs.reserve(inst.tree.edges().size());
  for (const Edge& e : inst.tree.edges()) {
    if (e.u == at.y() && e.v <= n) {
      dirs.push_back(Direction::Backward);  // x_i -> y
    } else if (e.u == at.y()) {
      const Vertex z = e.v;
      const int j = (z - at.z(1, 1)) / 7 + 1;
      dirs.push_back(chosen_z[j] == z ? Direction::Forward : Direction::Backward);
    } else {
      const int i = e.u;
      const bool is_plus = e.v < at.minus(i, 1);
      // True: + leaves -> x_i -> - leaves. False: the mirror image.
      const bool into_xi = is_plus == static_cast<bool>(assignment[i - 1]);
      dirs.push_back(into_xi ? Direction::Backward : Direction::Forward);
    }
  }
  return OrientedTree(inst.tree, std::move(dirs));
}

// ---------------------------------------------------------------------------
// Hamiltonian path -> Robinson subset

SubsetInstance build_subset_instance(const SimpleGraph& g) {
  g.validate();
  const int n = g.n;
  const int m = static_cast<int>(g.edges.size());
  if (m < 1) throw InputError("subset instance: graph needs at least one edge");
  const int copies = m + 1;
  const int total = n * copies + m;
  auto x = [&](int i, int k) { return (i - 1) * copies + (k - 1); };
  auto y = [&](int j) { return n * copies + (j - 1); };

  std::vector<double> d(static_cast<std::size_t>(total) * total, 2.0);
  for (int v = 0; v < total; ++v) d[static_cast<std::size_t>(v) * total + v] = 0.0;
  auto close = [&](int a, int b) {
    d[static_cast<std::size_t>(a) * total + b] = 1.0;
    d[static_cast<std::size_t>(b) * total + a] = 1.0;
  };
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= copies; ++k)
      for (int k2 = k + 1; k2 <= copies; ++k2) close(x(i, k), x(i, k2));
  for (int j = 1; j <= m; ++j) {
    const Edge& e = g.edges[j - 1];
    for (int k = 1; k <= copies; ++k) {
      close(y(j), x(e.u + 1, k));
      close(y(j), x(e.v + 1, k));
    }
  }

  SubsetInstance inst;
  inst.graph = g;
  inst.space = DissimilaritySpace(total, std::move(d));
  inst.kappa = static_cast<std::int64_t>(n) * copies + n - 1;
  inst.roles.resize(static_cast<std::size_t>(total));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= copies; ++k)
      inst.roles[x(i, k)] = "x" + std::to_string(i) + "^" + std::to_string(k);
  for (int j = 1; j <= m; ++j) inst.roles[y(j)] = "y" + std::to_string(j);
  return inst;
}

// ---------------------------------------------------------------------------
// Robinson subset -> assignment on a path

OrientedTree build_assignment_instance(const DissimilaritySpace& space, int kappa) {
  const int n = space.size();
  if (kappa < 1 || kappa > n) {
    throw InputError("assignment instance: kappa must lie in 1.." + std::to_string(n));
  }
  std::vector<Direction> dirs;
  for (int t = 1; t < n; ++t) {
    // Edge t joins v_t and v_{t+1}.
    if (t < kappa) dirs.push_back(Direction::Forward);
    else dirs.push_back((t - kappa) % 2 == 0 ? Direction::Backward : Direction::Forward);
  }
  return OrientedTree(path_tree(VertexOrder::identity(n).perm()), std::move(dirs));
}

}  // namespace robinson
