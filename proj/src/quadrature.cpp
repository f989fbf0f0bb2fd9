#include "fsdb/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fsdb {

// Nodes on [-1, 1] are the end points plus the roots of P'_{n-1}; they are
// found by Newton iteration seeded with the Chebyshev-Lobatto points.
// Weights follow from w_i = 2 / (n (n-1) P_{n-1}(x_i)^2).
QuadratureRule QuadratureRule::gauss_lobatto(int n) {
    if (n < 2) throw std::invalid_argument("gauss_lobatto: need at least 2 points");

    const int m = n - 1;
    std::vector<double> x(n), p(n);
    for (int i = 0; i < n; ++i) x[i] = std::cos(M_PI * double(i) / double(m));

    std::vector<double> x_old(n, 2.0);
    const double tol = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 200; ++iter) {
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            // Legendre recurrence up to degree n-1 at x[i].
            double pk_1 = 1.0, pk = x[i];
            for (int k = 2; k <= m; ++k) {
                const double pk1 = ((2.0 * k - 1.0) * x[i] * pk - (k - 1.0) * pk_1) / double(k);
                pk_1 = pk;
                pk = pk1;
            }
            p[i] = pk;
            const double dx = (x[i] * pk - pk_1) / (double(n) * pk);
            x[i] -= dx;
            delta = std::max(delta, std::abs(dx));
        }
        if (delta < 10.0 * tol) break;
        x_old = x;
    }
    // Pin the exact end points.
    x[0] = 1.0;
    x[m] = -1.0;

    QuadratureRule rule;
    rule.n = n;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Recompute P_{n-1} at the converged node for the weight.
        double pk_1 = 1.0, pk = x[i];
        for (int k = 2; k <= m; ++k) {
            const double pk1 = ((2.0 * k - 1.0) * x[i] * pk - (k - 1.0) * pk_1) / double(k);
            pk_1 = pk;
            pk = pk1;
        }
        const int j = m - i;  // reverse so points ascend
        rule.points[j] = 0.5 * (1.0 + x[i]);
        rule.weights[j] = 1.0 / (double(n) * double(m) * pk * pk);
    }
    rule.points.front() = 0.0;
    rule.points.back() = 1.0;
    return rule;
}

}  // namespace fsdb
