#pragma once

#include "wucalc/complex.hpp"
#include "wucalc/sparse_matrix.hpp"

namespace wucalc {

// Vertices are simplex indices in c.simplices(); edges join distinct intersecting simplices.
Graph connection_graph(const Complex& c);

// L(x,y) = 1 when x and y intersect (diagonal included), in c.simplices() order.
SparseIntMatrix connection_matrix(const Complex& c);

// det of the connection matrix by Bareiss; must be +1 or -1.
BigInt fredholm_characteristic(const Complex& c);
long long fermi_characteristic(const Complex& c);

// sum over x, y of L(x,y) w(x) w(y)
long long wu_via_connection_trace(const Complex& c);

}  // namespace wucalc
