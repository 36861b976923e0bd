#pragma once

#include <string>
#include <vector>

#include "monopath/counting.hpp"
#include "monopath/fibers.hpp"
#include "monopath/flips.hpp"
#include "monopath/functional.hpp"
#include "monopath/polytope.hpp"

namespace monopath {

/// Canonical document: keys dim, n, edges, faces2, then optional coords
/// (rationals as strings) and name; two-space indent. Parsing then
/// serializing reproduces the bytes exactly.
std::string polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const std::string& text);

/// {"vector": ["1","1/2",...]} or {"order": [ids...]}.
std::string functional_to_json(const Functional& f);
Functional functional_from_json(const std::string& text);

/// File wrappers; loading validates the polytope.
void save_polytope(const Polytope& p, const std::string& path);
PolytopePtr load_polytope(const std::string& path);
void save_functional(const Functional& f, const std::string& path);
Functional load_functional(const std::string& path);

std::string count_report_to_json(const CountReport& r);
std::string count_report_to_text(const CountReport& r);

/// Undirected DOT; node label = hyphenated vertex sequence, edge label =
/// face id.
std::string flip_graph_to_dot(const FlipGraph& g);

/// One row per path: index, hyphenated path, eccentricity.
std::string eccentricities_to_csv(const FlipGraph& g,
                                  const std::vector<int>& ecc);

std::string fiber_graph_to_dot(const FiberGraph& g, const std::string& name);
std::string fiber_diagram_to_json(const FiberDiagram& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace monopath
