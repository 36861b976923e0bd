#include "monopath/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "monopath/errors.hpp"

namespace monopath {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const ordered_json& field(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer())
    throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

std::string polytope_to_json(const Polytope& p) {
  ordered_json j;
  j["dim"] = p.dim;
  j["n"] = p.n;
  auto edges = ordered_json::array();
  for (const auto& [u, w] : p.edges) edges.push_back({u, w});
  j["edges"] = std::move(edges);
  j["faces2"] = p.faces2;
  if (p.coords) {
    auto rows = ordered_json::array();
    for (const auto& row : *p.coords) {
      auto out = ordered_json::array();
      for (const auto& c : row) out.push_back(rational_to_string(c));
      rows.push_back(std::move(out));
    }
    j["coords"] = std::move(rows);
  }
  if (p.name) j["name"] = *p.name;
  return j.dump(2) + "\n";
}

Polytope polytope_from_json(const std::string& text) {
  const auto j = parse_json(text);
  if (!j.is_object()) throw ParseError("polytope document must be an object");
  Polytope p;
  p.dim = int_field(j, "dim");
  p.n = int_field(j, "n");
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("each edge must be a pair of vertex ids");
    p.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const auto& faces = field(j, "faces2");
  if (!faces.is_array()) throw ParseError("'faces2' must be an array");
  for (const auto& f : faces) {
    if (!f.is_array()) throw ParseError("each 2-face must be an array");
    std::vector<int> cyc;
    for (const auto& v : f) {
      if (!v.is_number_integer())
        throw ParseError("2-face entries must be vertex ids");
      cyc.push_back(v.get<int>());
    }
    p.faces2.push_back(std::move(cyc));
  }
  if (j.contains("coords")) {
    const auto& rows = j["coords"];
    if (!rows.is_array()) throw ParseError("'coords' must be an array");
    std::vector<std::vector<Rational>> coords;
    for (const auto& row : rows) {
      if (!row.is_array())
        throw ParseError("each coordinate row must be an array");
      std::vector<Rational> out;
      for (const auto& c : row) {
        if (!c.is_string())
          throw ParseError("coordinates must be rational strings like \"1/2\"");
        out.push_back(parse_rational(c.get<std::string>()));
      }
      coords.push_back(std::move(out));
    }
    p.coords = std::move(coords);
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    p.name = j["name"].get<std::string>();
  }
  return p;
}

std::string functional_to_json(const Functional& f) {
  ordered_json j;
  if (f.kind == Functional::Kind::vector_form) {
    auto values = ordered_json::array();
    for (const auto& c : f.vec) values.push_back(rational_to_string(c));
    j["vector"] = std::move(values);
  } else {
    j["order"] = f.order;
  }
  return j.dump(2) + "\n";
}

Functional functional_from_json(const std::string& text) {
  const auto j = parse_json(text);
  if (!j.is_object())
    throw ParseError("functional document must be an object");
  const bool has_vector = j.contains("vector");
  const bool has_order = j.contains("order");
  if (has_vector == has_order)
    throw ParseError(
        "functional document needs exactly one of 'vector' or 'order'");
  if (has_vector) {
    const auto& values = j["vector"];
    if (!values.is_array()) throw ParseError("'vector' must be an array");
    std::vector<Rational> vec;
    for (const auto& c : values) {
      if (!c.is_string())
        throw ParseError("vector entries must be rational strings");
      vec.push_back(parse_rational(c.get<std::string>()));
    }
    return Functional::from_vector(vec);
  }
  const auto& ids = j["order"];
  if (!ids.is_array()) throw ParseError("'order' must be an array");
  std::vector<int> order;
  for (const auto& v : ids) {
    if (!v.is_number_integer())
      throw ParseError("'order' entries must be vertex ids");
    order.push_back(v.get<int>());
  }
  return Functional::from_order(order);
}

void save_polytope(const Polytope& p, const std::string& path) {
  write_file(path, polytope_to_json(p));
}

PolytopePtr load_polytope(const std::string& path) {
  return make_polytope(polytope_from_json(read_file(path)));
}

void save_functional(const Functional& f, const std::string& path) {
  write_file(path, functional_to_json(f));
}

Functional load_functional(const std::string& path) {
  return functional_from_json(read_file(path));
}

std::string count_report_to_json(const CountReport& r) {
  ordered_json j;
  j["mu"] = bigint_to_string(r.mu);
  auto partial = ordered_json::array();
  for (const auto& m : r.mu_partial) partial.push_back(bigint_to_string(m));
  j["mu_partial"] = std::move(partial);
  j["tau"] = bigint_to_string(r.tau);
  j["outdegrees"] = r.outdegrees;
  auto bounds = ordered_json::array();
  for (const auto& b : r.bounds_checked) {
    ordered_json row;
    row["name"] = b.name;
    row["relation"] = b.relation;
    row["value"] = bigint_to_string(b.value);
    row["satisfied"] = b.satisfied;
    row["conjecture"] = b.conjecture;
    bounds.push_back(std::move(row));
  }
  j["bounds_checked"] = std::move(bounds);
  j["proved_ok"] = r.proved_ok;
  return j.dump(2) + "\n";
}

std::string count_report_to_text(const CountReport& r) {
  std::ostringstream out;
  out << "mu          = " << r.mu << "\n";
  out << "tau         = " << r.tau << "\n";
  out << "mu_partial  =";
  for (const auto& m : r.mu_partial) out << " " << m;
  out << "\n";
  out << "outdegrees  =";
  for (const int d : r.outdegrees) out << " " << d;
  out << "\n";
  if (!r.bounds_checked.empty()) {
    std::size_t name_w = 4, rel_w = 8;
    for (const auto& b : r.bounds_checked) {
      name_w = std::max(name_w, b.name.size());
      rel_w = std::max(rel_w, b.relation.size());
    }
    out << "\n";
    out << std::left << std::setw(static_cast<int>(name_w) + 2) << "name"
        << std::setw(static_cast<int>(rel_w) + 2) << "relation" << "status"
        << "\n";
    for (const auto& b : r.bounds_checked) {
      out << std::left << std::setw(static_cast<int>(name_w) + 2) << b.name
          << std::setw(static_cast<int>(rel_w) + 2) << b.relation
          << (b.satisfied ? "ok" : "VIOLATED")
          << (b.conjecture ? " (conjecture)" : "") << "\n";
    }
  }
  return out.str();
}

namespace {

std::string path_label(const MonotonePath& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << "-";
    out << p[i];
  }
  return out.str();
}

}  // namespace

std::string flip_graph_to_dot(const FlipGraph& g) {
  std::ostringstream out;
  out << "graph flip_graph {\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < g.paths.size(); ++i)
    out << "  p" << i << " [label=\"" << path_label(g.paths[i]) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  p" << e.a << " -- p" << e.b << " [label=\"" << e.face
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string eccentricities_to_csv(const FlipGraph& g,
                                  const std::vector<int>& ecc) {
  std::ostringstream out;
  out << "index,path,eccentricity\n";
  for (std::size_t i = 0; i < g.paths.size() && i < ecc.size(); ++i)
    out << i << "," << path_label(g.paths[i]) << "," << ecc[i] << "\n";
  return out.str();
}

namespace {

std::string fiber_node_id(const FiberNode& n) {
  std::ostringstream out;
  if (n.is_vertex())
    out << "v" << n.u;
  else
    out << "e" << n.u << "_" << n.w;
  return out.str();
}

std::string fiber_node_label(const FiberNode& n) {
  std::ostringstream out;
  if (n.is_vertex())
    out << "v" << n.u;
  else
    out << "{" << n.u << "," << n.w << "}";
  return out.str();
}

ordered_json fiber_graph_json(const FiberGraph& g) {
  ordered_json j;
  auto nodes = ordered_json::array();
  for (const auto& n : g.nodes) nodes.push_back({n.u, n.w});
  j["nodes"] = std::move(nodes);
  auto edges = ordered_json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    edges.push_back({g.edges[e].first, g.edges[e].second, g.edge_face[e]});
  j["edges"] = std::move(edges);
  return j;
}

ordered_json simplicial_map_json(const SimplicialMap& m) {
  ordered_json j;
  j["node_image"] = m.node_image;
  j["edge_image"] = m.edge_image;
  return j;
}

}  // namespace

std::string fiber_graph_to_dot(const FiberGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=ellipse];\n";
  for (const auto& n : g.nodes)
    out << "  " << fiber_node_id(n) << " [label=\"" << fiber_node_label(n)
        << "\"];\n";
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    out << "  " << fiber_node_id(g.nodes[g.edges[e].first]) << " -- "
        << fiber_node_id(g.nodes[g.edges[e].second]) << " [label=\""
        << g.edge_face[e] << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string fiber_diagram_to_json(const FiberDiagram& d) {
  ordered_json j;
  j["n"] = d.orientation.n();
  auto slabs = ordered_json::array();
  for (const auto& g : d.slabs) slabs.push_back(fiber_graph_json(g));
  j["slabs"] = std::move(slabs);
  auto levels = ordered_json::array();
  for (const auto& g : d.levels) levels.push_back(fiber_graph_json(g));
  j["levels"] = std::move(levels);
  auto alphas = ordered_json::array();
  for (const auto& m : d.alpha) alphas.push_back(simplicial_map_json(m));
  j["alpha"] = std::move(alphas);
  auto betas = ordered_json::array();
  for (const auto& m : d.beta) betas.push_back(simplicial_map_json(m));
  j["beta"] = std::move(betas);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace monopath
