#include "wucalc/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace wucalc {

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

InputDocument parse_facets(const std::string& text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(name + ": malformed JSON at line " + std::to_string(line_of_offset(text, e.byte ? e.byte - 1 : 0)));
  }
  if (j.is_object()) {
    if (!j.contains("facets")) throw Error(name + ": JSON object without a \"facets\" array");
    j = j["facets"];
  }
  if (!j.is_array()) throw Error(name + ": facets must be a JSON array");
  if (j.empty()) throw Error(name + ": empty facet list");
  std::vector<std::vector<Vertex>> facets;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& f = j[i];
    if (!f.is_array() || f.empty()) throw Error(name + ": facet " + std::to_string(i + 1) + " is not a non-empty array");
    std::vector<Vertex> verts;
    for (const auto& v : f) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() > static_cast<long long>(std::numeric_limits<Vertex>::max()))
        throw Error(name + ": facet " + std::to_string(i + 1) + " has an invalid vertex");
      verts.push_back(static_cast<Vertex>(v.get<long long>()));
    }
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw Error(name + ": facet " + std::to_string(i + 1) + " repeats a vertex");
    facets.push_back(std::move(verts));
  }
  InputDocument doc;
  doc.kind = InputKind::facets;
  doc.name = name;
  doc.complex = generate_complex(facets);
  doc.graph = one_skeleton(doc.complex);
  return doc;
}

InputDocument parse_edges(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a, b;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0 ||
        a > static_cast<long long>(std::numeric_limits<Vertex>::max()) ||
        b > static_cast<long long>(std::numeric_limits<Vertex>::max()))
      throw Error(name + ": malformed edge at line " + std::to_string(lineno));
    if (a == b) throw Error(name + ": self-loop at line " + std::to_string(lineno));
    g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (g.vertex_count() == 0) throw Error(name + ": empty input");
  InputDocument doc;
  doc.kind = InputKind::graph_edges;
  doc.name = name;
  doc.graph = g;
  doc.complex = whitney_complex(g);
  return doc;
}

}  // namespace

InputDocument parse_input_text(const std::string& text, const std::string& name) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(name + ": empty input");
  if (text[first] == '[' || text[first] == '{') return parse_facets(text, name);
  return parse_edges(text, name);
}

InputDocument parse_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str(), path);
}

bool is_ring_expression(const std::string& text) { return text.find('(') != std::string::npos; }

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : text_(text) {}

  RingElement parse() {
    RingElement e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text");
    return e;
  }

 private:
  RingElement expression() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
    std::string word = text_.substr(start, pos_ - start);
    while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.pop_back();
    if (word.empty()) fail("expected a file or a function");
    if (pos_ < text_.size() && text_[pos_] == '(') {
      if (word != "product" && word != "sum") fail("unknown function " + word);
      ++pos_;
      std::vector<RingElement> args{expression()};
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        args.push_back(expression());
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      RingElement acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i) acc = word == "sum" ? acc + args[i] : acc * args[i];
      return acc;
    }
    return RingElement(parse_input(word).complex);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("ring expression: " + what + " at column " + std::to_string(pos_ + 1));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_expression(const std::string& text) { return ExpressionParser(text).parse(); }

nlohmann::ordered_json facets_json(const Complex& c) {
  const auto& s = c.simplices();
  std::vector<std::vector<Vertex>> facets;
  // a simplex is maximal if no simplex one dimension up contains it
  for (const Simplex& x : s) {
    bool maximal = true;
    for (const Simplex& y : c.of_dim(x.dim() + 1))
      if (x.is_face_of(y)) {
        maximal = false;
        break;
      }
    if (maximal) facets.emplace_back(x.vertices().begin(), x.vertices().end());
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

nlohmann::ordered_json to_json(const std::vector<long long>& v) { return nlohmann::ordered_json(v); }

std::string rational_json(const Rational& q) { return to_string(q); }

}  // namespace wucalc
