#include "wucalc/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wucalc {

namespace {

using Facets = std::vector<std::vector<Vertex>>;

Complex simplex_subcomplex(const Complex& c, const std::vector<Simplex>& facets) {
  std::vector<std::vector<Vertex>> f;
  for (const Simplex& s : facets) {
    if (!c.contains(s)) throw Error("subcomplex simplex missing from ambient complex");
    f.emplace_back(s.vertices().begin(), s.vertices().end());
  }
  return generate_complex(f);
}

Vertex refined_vertex(const Complex& base, const Simplex& s) {
  auto idx = base.index_of(s);
  if (!idx) throw Error("simplex missing from base complex");
  return static_cast<Vertex>(*idx);
}

}  // namespace

Complex simplex_complex(std::size_t vertices) {
  if (vertices == 0) throw Error("simplex needs at least one vertex");
  std::vector<Vertex> v(vertices);
  for (std::size_t i = 0; i < vertices; ++i) v[i] = static_cast<Vertex>(i + 1);
  return generate_complex({v});
}

Complex path_complex(std::size_t vertices) {
  if (vertices == 0) throw Error("path needs at least one vertex");
  if (vertices == 1) return generate_complex({{1}});
  Facets f;
  for (Vertex i = 1; i < vertices; ++i) f.push_back({i, i + 1});
  return generate_complex(f);
}

Complex cycle_complex(std::size_t vertices) {
  if (vertices < 4) throw Error("a cycle complex needs at least four vertices");
  Facets f;
  for (Vertex i = 1; i <= vertices; ++i) f.push_back({i, i % static_cast<Vertex>(vertices) + 1});
  return generate_complex(f);
}

Complex star_complex(std::size_t leaves) {
  if (leaves == 0) return generate_complex({{1}});
  Facets f;
  for (Vertex i = 0; i < leaves; ++i) f.push_back({1, i + 2});
  return generate_complex(f);
}

Complex bouquet_complex(std::size_t circles) {
  Facets f;
  Vertex next = 2;
  for (std::size_t c = 0; c < circles; ++c) {
    Vertex a = next, b = next + 1, d = next + 2;
    next += 3;
    f.insert(f.end(), {{1, a}, {a, b}, {b, d}, {d, 1}});
  }
  if (f.empty()) f.push_back({1});
  return generate_complex(f);
}

Complex wheel_complex(std::size_t spokes) {
  if (spokes < 4) throw Error("a wheel needs at least four spokes");
  Facets f;
  const auto n = static_cast<Vertex>(spokes);
  for (Vertex i = 0; i < n; ++i) f.push_back({1, i + 2, (i + 1) % n + 2});
  return generate_complex(f);
}

Graph hypercube_graph(int dimension) {
  if (dimension < 0 || dimension > 16) throw Error("hypercube dimension out of range");
  Graph g;
  const Vertex n = Vertex(1) << dimension;
  for (Vertex v = 0; v < n; ++v) {
    g.add_vertex(v + 1);
    for (int b = 0; b < dimension; ++b) {
      Vertex w = v ^ (Vertex(1) << b);
      if (v < w) g.add_edge(v + 1, w + 1);
    }
  }
  return g;
}

Complex suspension(const Complex& c) {
  std::vector<Vertex> verts = c.vertices();
  const Vertex top = verts.empty() ? 0 : verts.back();
  std::vector<Simplex> out = c.simplices();
  for (Vertex apex : {top + 1, top + 2}) {
    out.push_back(Simplex{apex});
    for (const Simplex& s : c.simplices()) {
      std::vector<Vertex> v(s.vertices().begin(), s.vertices().end());
      v.push_back(apex);
      out.emplace_back(std::move(v));
    }
  }
  return Complex::from_simplices(std::move(out));
}

Complex octahedron() {
  return generate_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 6}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
}

Complex icosahedron() {
  // top 1, upper ring 2..6, lower ring 7..11, bottom 12
  Graph g;
  auto up = [](Vertex i) { return 2 + i % 5; };
  auto low = [](Vertex i) { return 7 + i % 5; };
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(1, up(i));
    g.add_edge(up(i), up(i + 1));
    g.add_edge(low(i), low(i + 1));
    g.add_edge(up(i), low(i));
    g.add_edge(up(i + 1), low(i));
    g.add_edge(low(i), 12);
  }
  return whitney_complex(g);
}

Complex three_sphere() {
  return generate_complex({{1, 3, 5, 7}, {1, 3, 5, 8}, {1, 3, 6, 7}, {1, 3, 6, 8}, {1, 4, 5, 7}, {1, 4, 5, 8},
                           {1, 4, 6, 7}, {1, 4, 6, 8}, {3, 5, 7, 2}, {3, 5, 8, 2}, {3, 6, 7, 2}, {3, 6, 8, 2},
                           {4, 5, 7, 2}, {4, 5, 8, 2}, {4, 6, 7, 2}, {4, 6, 8, 2}});
}

Complex four_sphere() { return suspension(three_sphere()); }

Complex rabbit() { return generate_complex({{1, 2, 3}, {3, 4}, {3, 5}}); }

Complex house() { return generate_complex({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 3, 5}}); }

Complex figure_eight() {
  return generate_complex({{1, 2}, {1, 4}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {5, 6}, {6, 7}});
}

Complex moebius_strip() {
  return generate_complex({{1, 2, 5}, {1, 4, 5}, {1, 4, 7}, {2, 3, 6}, {2, 5, 6}, {3, 6, 7}, {4, 3, 7}});
}

Complex cylinder() {
  return generate_complex({{1, 2, 5}, {1, 4, 8}, {1, 5, 8}, {2, 3, 6}, {2, 5, 6}, {3, 4, 7}, {3, 6, 7}, {4, 7, 8}});
}

Complex projective_plane() {
  return generate_complex({{1, 2, 5},    {1, 2, 9},    {1, 4, 5},    {1, 4, 7},    {1, 8, 7},    {1, 8, 9},
                           {2, 3, 6},    {2, 3, 10},   {2, 5, 6},    {2, 9, 10},   {3, 6, 7},    {3, 10, 11},
                           {4, 3, 7},    {4, 3, 11},   {4, 5, 12},   {4, 11, 12},  {5, 6, 13},   {5, 12, 13},
                           {6, 7, 14},   {6, 13, 14},  {8, 7, 14},   {8, 9, 15},   {8, 14, 15},  {9, 10, 15},
                           {10, 11, 15}, {11, 12, 15}, {12, 13, 15}, {13, 14, 15}});
}

Complex klein_bottle() {
  return generate_complex({{1, 2, 3}, {1, 2, 6}, {1, 3, 5}, {1, 4, 7}, {1, 4, 8}, {1, 5, 7}, {1, 6, 8}, {2, 3, 7},
                           {2, 4, 6}, {2, 4, 8}, {2, 5, 7}, {2, 5, 8}, {3, 4, 6}, {3, 4, 7}, {3, 5, 6}, {5, 6, 8}});
}

Complex refined_disk() { return barycentric_refinement(wheel_complex(5)); }

Complex refined_disk_interior_circle() {
  Complex w = wheel_complex(5), d = refined_disk();
  Graph g = one_skeleton(d);
  return whitney_complex(unit_sphere(g, refined_vertex(w, Simplex{1})));
}

Complex refined_disk_touching_circle() {
  Complex w = wheel_complex(5), d = refined_disk();
  Graph g = one_skeleton(d);
  return whitney_complex(unit_sphere(g, refined_vertex(w, Simplex{1, 2})));
}

Complex refined_disk_interior_point() {
  Complex w = wheel_complex(5);
  return simplex_subcomplex(refined_disk(), {Simplex{refined_vertex(w, Simplex{1})}});
}

Complex refined_disk_boundary_point() {
  Complex w = wheel_complex(5);
  return simplex_subcomplex(refined_disk(), {Simplex{refined_vertex(w, Simplex{2})}});
}

namespace {

const std::map<std::string, std::function<Complex()>>& registry() {
  static const std::map<std::string, std::function<Complex()>> r = {
      {"point", [] { return simplex_complex(1); }},
      {"K1", [] { return simplex_complex(1); }},
      {"K2", [] { return simplex_complex(2); }},
      {"K3", [] { return simplex_complex(3); }},
      {"K4", [] { return simplex_complex(4); }},
      {"C4", [] { return cycle_complex(4); }},
      {"C5", [] { return cycle_complex(5); }},
      {"P3", [] { return path_complex(3); }},
      {"octahedron", octahedron},
      {"icosahedron", icosahedron},
      {"threesphere", three_sphere},
      {"foursphere", four_sphere},
      {"ball2", [] { return wheel_complex(6); }},
      {"star3", [] { return star_complex(3); }},
      {"star4", [] { return star_complex(4); }},
      {"star5", [] { return star_complex(5); }},
      {"figure8", figure_eight},
      {"bouquet3", [] { return bouquet_complex(3); }},
      {"bouquet4", [] { return bouquet_complex(4); }},
      {"bouquet5", [] { return bouquet_complex(5); }},
      {"rabbit", rabbit},
      {"house", house},
      {"cube", [] { return whitney_complex(hypercube_graph(3)); }},
      {"tesseract", [] { return whitney_complex(hypercube_graph(4)); }},
      {"moebius", moebius_strip},
      {"cylinder", cylinder},
      {"projectiveplane", projective_plane},
      {"kleinbottle", klein_bottle},
      {"disk", refined_disk},
  };
  return r;
}

}  // namespace

Complex catalog_complex(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown catalog complex: " + name);
  return it->second();
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

}  // namespace wucalc
