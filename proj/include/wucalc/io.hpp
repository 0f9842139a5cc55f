#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wucalc/strong_ring.hpp"

namespace wucalc {

enum class InputKind { graph_edges, facets };

struct InputDocument {
  InputKind kind = InputKind::facets;
  std::string name;
  Graph graph;      // the edge list, or the 1-skeleton of the facets
  Complex complex;  // the Whitney complex of the edge list, or the generated facets
};

// Facets: a JSON array of integer arrays, or an object with a "facets" array.
// Anything else is read as an edge list, one "u v" pair per line; blank lines
// and lines starting with '#' are ignored.
InputDocument parse_input_text(const std::string& text, const std::string& name);
InputDocument parse_input(const std::string& path);

// "product(a.json, b.json)", "sum(a.json, product(b.json, c.json))", or a path.
RingElement parse_ring_expression(const std::string& text);
bool is_ring_expression(const std::string& text);

nlohmann::ordered_json facets_json(const Complex& c);  // maximal simplices, sorted
nlohmann::ordered_json to_json(const std::vector<long long>& v);
std::string rational_json(const Rational& q);

}  // namespace wucalc
