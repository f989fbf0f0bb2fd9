#pragma once

#include <vector>

namespace fsdb {

/// Gauss-Lobatto rule on the normalized interval [0, 1].
///
/// Both end points are quadrature nodes, so the first and last control
/// sections of a beam element coincide with its end sections.  Weights are
/// normalized to sum to one (integration over a unit-length interval); an
/// n-point rule is exact for polynomials up to degree 2n - 3.
struct QuadratureRule {
    std::vector<double> points;   // ascending, points.front() == 0, points.back() == 1
    std::vector<double> weights;  // sum == 1
    int n = 0;

    static QuadratureRule gauss_lobatto(int n);
};

}  // namespace fsdb
