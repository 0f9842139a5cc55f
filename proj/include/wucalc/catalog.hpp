#pragma once

#include <string>
#include <vector>

#include "wucalc/complex.hpp"

namespace wucalc {

// Building blocks. Vertices start at 1.
Complex simplex_complex(std::size_t vertices);  // K_n: one (n-1)-simplex with all faces
Complex path_complex(std::size_t vertices);
Complex cycle_complex(std::size_t vertices);
Complex star_complex(std::size_t leaves);       // center 1, leaves 2..n+1
Complex bouquet_complex(std::size_t circles);   // 4-cycles glued at vertex 1
Complex wheel_complex(std::size_t spokes);      // hub 1, rim 2..n+1
Graph hypercube_graph(int dimension);
Complex suspension(const Complex& c);           // two new cone points after the largest vertex

Complex octahedron();
Complex icosahedron();
Complex three_sphere();
Complex four_sphere();
Complex rabbit();
Complex house();
Complex figure_eight();
Complex moebius_strip();
Complex cylinder();
Complex projective_plane();
Complex klein_bottle();

// Barycentric refinement of the five-spoke wheel; the pair-table disk.
Complex refined_disk();
// Subcomplexes of refined_disk() used by the pair table.
Complex refined_disk_interior_circle();
Complex refined_disk_touching_circle();
Complex refined_disk_interior_point();
Complex refined_disk_boundary_point();

// Lookup by name, e.g. "moebius", "star5", "bouquet3", "K4", "C4".
Complex catalog_complex(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace wucalc
