#include "robinson/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "robinson/c1p.hpp"
#include "robinson/io.hpp"
#include "robinson/oracle.hpp"
#include "robinson/paths.hpp"
#include "robinson/recognition.hpp"
#include "robinson/reductions.hpp"
#include "robinson/stars.hpp"
#include "robinson/uniform_orient.hpp"

namespace robinson::cli {

using json = nlohmann::ordered_json;

namespace {

std::string plain(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string s;
  const bool nested = !v.empty() && v.front().is_array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += nested ? " | " : " ";
    s += plain(v[i]);
  }
  return s;
}

std::vector<Vertex> parse_order(const std::string& text) {
  std::vector<Vertex> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::istringstream parts(tok);
    std::string piece;
    while (parts >> piece) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(piece, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != piece.size()) throw InputError("--order: bad vertex '" + piece + "'");
      out.push_back(v);
    }
  }
  return out;
}

void add(RunReport& r, const std::string& key, const json& value) {
  r.extras.emplace_back(key, value.dump());
}

void set_orientation(RunReport& r, const OrientedTree& ot) {
  r.orientation = ot.arcs();
}

void write_orientation_if(const std::string& path, const OrientedTree& ot) {
  if (path.empty()) return;
  auto out = open_output(path);
  write_oriented_tree(out, ot);
}

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

}  // namespace

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "answer: " << r.answer << '\n';
  if (r.xi) os << "xi: " << *r.xi << '\n';
  if (r.order) {
    os << "order:";
    for (Vertex v : *r.order) os << ' ' << v;
    os << '\n';
  }
  if (r.orientation) {
    os << "orientation:";
    for (const Arc& a : *r.orientation) os << ' ' << a.from << "->" << a.to;
    os << '\n';
  }
  for (const auto& [key, value] : r.extras) os << key << ": " << plain(json::parse(value)) << '\n';
  return os.str();
}

std::string render_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  j["answer"] = r.answer;
  if (r.xi) j["xi"] = *r.xi;
  if (r.order) j["order"] = *r.order;
  if (r.orientation) {
    json arcs = json::array();
    for (const Arc& a : *r.orientation) arcs.push_back({a.from, a.to});
    j["orientation"] = std::move(arcs);
  }
  for (const auto& [key, value] : r.extras) j[key] = json::parse(value);
  return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymmetric Robinson seriation toolkit", "robinson"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a single-line JSON object");

  RunReport report;
  std::function<void()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<void()> fn) {
    sub->callback([&action, &report, name = std::move(name), fn = std::move(fn)] {
      report.command = name;
      action = fn;
    });
  };

  std::string matrix_file, tree_file, other_file, out_prefix, orientation_out, order_text;
  bool verify_premise = false, restricted = false;
  std::optional<int> center;
  int in_count = 0, out_count = 0, kappa = 0;
  std::uint64_t budget = kDefaultSubsetBudget;

  auto matrix_arg = [&](CLI::App* s) {
    s->add_option("matrix", matrix_file, "Dissimilarity matrix file")->required();
  };
  auto write_opt = [&](CLI::App* s) {
    s->add_option("--write-orientation", orientation_out, "Also write the orientation as an oriented-tree file");
  };

  // recognize
  auto* recognize = app.add_subcommand("recognize", "Two-way Robinson recognition");
  matrix_arg(recognize);
  bind(recognize, "recognize", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    const auto rec = recognize_two_way(space);
    report.answer = yes_no(rec.has_value());
    if (rec) {
      report.order = rec->order.perm();
      add(report, "pq_tree", rec->tree.to_string());
    }
  });

  // orient
  auto* orient = app.add_subcommand("orient", "Optimal compatible orientations");
  orient->require_subcommand(1);
  auto* orient_tree = orient->add_subcommand("tree", "Tree whose paths are all Robinson");
  matrix_arg(orient_tree);
  orient_tree->add_option("tree", tree_file, "Tree file")->required();
  orient_tree->add_flag("--verify-premise", verify_premise, "Check that every tree path is Robinson first");
  write_opt(orient_tree);
  bind(orient_tree, "orient tree", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    const auto tree = read_file(tree_file, read_tree);
    if (space.size() != tree.size()) throw InputError("matrix and tree sizes differ");
    const auto res = orient_all_robinson(space, tree, verify_premise);
    report.answer = "YES";
    report.xi = res.xi;
    set_orientation(report, res.orientation);
    add(report, "centroid", res.centroid);
    add(report, "in_neighbors", res.in_neighbors);
    write_orientation_if(orientation_out, res.orientation);
  });

  auto* orient_star_cmd = orient->add_subcommand("star", "Star K_{1,n-1}");
  matrix_arg(orient_star_cmd);
  orient_star_cmd->add_option("--center", center, "Star center; omitted tries every vertex");
  write_opt(orient_star_cmd);
  bind(orient_star_cmd, "orient star", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    if (center && (*center < 0 || *center >= space.size())) throw InputError("--center out of range");
    const auto res = center ? orient_star(space, star_tree(space.size(), *center), *center)
                            : best_star_orientation(space);
    report.answer = "YES";
    report.xi = res.xi;
    set_orientation(report, res.orientation);
    add(report, "center", res.center);
    add(report, "in_leaves", res.in_leaves);
    add(report, "petals", res.petals.petals);
    write_orientation_if(orientation_out, res.orientation);
  });

  auto* orient_path = orient->add_subcommand("path", "Path through a given vertex order");
  matrix_arg(orient_path);
  orient_path->add_option("--order", order_text, "Comma-separated vertices v1,...,vn")->required();
  orient_path->add_flag("--restricted-splits", restricted, "Split only at eta breakpoints");
  write_opt(orient_path);
  bind(orient_path, "orient path", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    const VertexOrder order(parse_order(order_text));
    const auto res = path_orientation(space, order, restricted);
    report.answer = "YES";
    report.xi = res.xi;
    report.order = order.perm();
    set_orientation(report, res.orientation);
    json eta = json::array();
    for (const auto& [i, j] : res.eta.compressed) eta.push_back({i, j});
    add(report, "eta", eta);
    write_orientation_if(orientation_out, res.orientation);
  });

  // assign star
  auto* assign = app.add_subcommand("assign", "Assignment onto a fixed oriented shape");
  assign->require_subcommand(1);
  auto* assign_star_cmd = assign->add_subcommand("star", "Star with prescribed in/out degrees");
  matrix_arg(assign_star_cmd);
  assign_star_cmd->add_option("--in", in_count, "Number of in-leaves")->required();
  assign_star_cmd->add_option("--out", out_count, "Number of out-leaves")->required();
  write_opt(assign_star_cmd);
  bind(assign_star_cmd, "assign star", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    const auto res = assign_star(space, in_count, out_count);
    report.answer = yes_no(res.has_value());
    if (!res) return;
    const auto ot = star_orientation_of(*res, space.size());
    report.xi = count_xi(ot);
    set_orientation(report, ot);
    add(report, "center", res->center);
    add(report, "in_set", res->in_set);
    add(report, "out_set", res->out_set);
    write_orientation_if(orientation_out, ot);
  });

  // petals
  auto* petals_cmd = app.add_subcommand("petals", "Petal partition around a vertex");
  matrix_arg(petals_cmd);
  petals_cmd->add_option("--center", center, "Vertex whose neighbours are partitioned")->required();
  petals_cmd->add_option("--tree", tree_file, "Tree file; default is the star at the center");
  bind(petals_cmd, "petals", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    if (*center < 0 || *center >= space.size()) throw InputError("--center out of range");
    const Tree tree = tree_file.empty() ? star_tree(space.size(), *center) : read_file(tree_file, read_tree);
    const auto pp = petals(space, tree, *center);
    report.answer = "YES";
    add(report, "center", pp.center);
    add(report, "petals", pp.petals);
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Reduction instance generators");
  gen->require_subcommand(1);
  auto* gen_sat = gen->add_subcommand("sat", "Orientation instance from a 3-CNF");
  gen_sat->add_option("dimacs", other_file, "DIMACS CNF file")->required();
  gen_sat->add_option("--out-prefix", out_prefix, "Writes PREFIX.tree, .matrix, .kappa, .roles")->required();
  auto* gen_subset = gen->add_subcommand("subset", "Robinson-subset instance from a graph");
  gen_subset->add_option("graph", other_file, "Graph file")->required();
  gen_subset->add_option("--out-prefix", out_prefix, "Writes PREFIX.matrix, .kappa, .roles")->required();
  auto* gen_assign = gen->add_subcommand("assign", "Oriented-path assignment instance");
  matrix_arg(gen_assign);
  gen_assign->add_option("--kappa", kappa, "Subset size")->required();
  gen_assign->add_option("--out-prefix", out_prefix, "Writes PREFIX.otree")->required();

  auto write_roles = [&](const std::vector<std::string>& roles) {
    auto os = open_output(out_prefix + ".roles");
    for (std::size_t v = 0; v < roles.size(); ++v) os << v << ' ' << roles[v] << '\n';
  };
  auto write_kappa = [&](std::int64_t k) {
    auto os = open_output(out_prefix + ".kappa");
    os << k << '\n';
  };
  bind(gen_sat, "gen sat", [&] {
    const auto cnf = read_file(other_file, parse_dimacs);
    const auto inst = build_orientation_instance(cnf);
    { auto os = open_output(out_prefix + ".tree"); write_tree(os, inst.tree); }
    { auto os = open_output(out_prefix + ".matrix"); write_matrix(os, inst.space); }
    write_kappa(inst.kappa);
    write_roles(inst.roles);
    report.answer = "YES";
    add(report, "kappa", inst.kappa);
    add(report, "vertices", inst.tree.size());
  });
  bind(gen_subset, "gen subset", [&] {
    const auto g = read_file(other_file, read_graph);
    const auto inst = build_subset_instance(g);
    { auto os = open_output(out_prefix + ".matrix"); write_matrix(os, inst.space); }
    write_kappa(inst.kappa);
    write_roles(inst.roles);
    report.answer = "YES";
    add(report, "kappa", inst.kappa);
    add(report, "points", inst.space.size());
  });
  bind(gen_assign, "gen assign", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    const auto ot = build_assignment_instance(space, kappa);
    { auto os = open_output(out_prefix + ".otree"); write_oriented_tree(os, ot); }
    report.answer = "YES";
    set_orientation(report, ot);
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference answers");
  oracle->require_subcommand(1);
  auto* o_orient = oracle->add_subcommand("orient", "Best orientation of a tree by enumeration");
  matrix_arg(o_orient);
  o_orient->add_option("tree", tree_file, "Tree file")->required();
  write_opt(o_orient);
  bind(o_orient, "oracle orient", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    const auto tree = read_file(tree_file, read_tree);
    const auto res = brute_optimal_orientation(space, tree);
    report.answer = "YES";
    report.xi = res.xi_max;
    set_orientation(report, res.witness);
    write_orientation_if(orientation_out, res.witness);
  });
  auto* o_recognize = oracle->add_subcommand("recognize", "Two-way order by permutation scan");
  matrix_arg(o_recognize);
  bind(o_recognize, "oracle recognize", [&] {
    const auto res = brute_two_way(read_file(matrix_file, read_matrix));
    report.answer = yes_no(res.has_value());
    if (res) report.order = res->perm();
  });
  auto* o_c1p = oracle->add_subcommand("c1p", "Consecutive-ones row order by permutation scan");
  o_c1p->add_option("binary-matrix", other_file, "Binary matrix file")->required();
  bind(o_c1p, "oracle c1p", [&] {
    const auto res = brute_c1p(read_file(other_file, read_binary_matrix));
    report.answer = yes_no(res.has_value());
    if (res) report.order = *res;
  });
  auto* o_subset = oracle->add_subcommand("subset", "Robinson subset of a given size");
  matrix_arg(o_subset);
  o_subset->add_option("--kappa", kappa, "Subset size")->required();
  o_subset->add_option("--budget", budget, "Maximum number of subsets to examine");
  bind(o_subset, "oracle subset", [&] {
    const auto res = brute_robinson_subset(read_file(matrix_file, read_matrix), kappa, budget);
    report.answer = yes_no(res.has_value());
    if (res) report.order = *res;
  });

  // check
  auto* check = app.add_subcommand("check", "Compatibility and path count of an orientation");
  matrix_arg(check);
  check->add_option("oriented-tree", tree_file, "Oriented tree file")->required();
  bind(check, "check", [&] {
    const auto space = read_file(matrix_file, read_matrix);
    const auto ot = read_file(tree_file, read_oriented_tree);
    if (space.size() != ot.size()) throw InputError("matrix and tree sizes differ");
    report.answer = yes_no(check_compatible(space, ot));
    report.xi = count_xi(ot);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    action();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kInputError;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }

  out << (as_json ? render_json(report) + "\n" : render_text(report));
  err << "elapsed_ms: " << report.elapsed_ms << '\n';
  return report.answer == "NO" ? kNo : kYes;
}

}  // namespace robinson::cli
