#pragma once

// Independent reference computations used to freeze expected test values.
// Everything here is deliberately written from first principles (classical
// closed forms, piecewise analytic integration, direct formula evaluation)
// and must not call into the library code paths it checks.

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace oracle {

// Classical shape functions of the prismatic planar beam element with dofs
// (u_x_i, u_z_i, phi_i, u_x_j, u_z_j, phi_j) and phi = -u_z'.
inline Eigen::Matrix<double, 2, 6> classical_shape_matrix(double x, double length) {
    const double xi = x / length;
    Eigen::Matrix<double, 2, 6> n = Eigen::Matrix<double, 2, 6>::Zero();
    n(0, 0) = 1.0 - xi;
    n(0, 3) = xi;
    n(1, 1) = 1.0 - 3.0 * xi * xi + 2.0 * xi * xi * xi;
    n(1, 2) = -length * (xi - 2.0 * xi * xi + xi * xi * xi);
    n(1, 4) = 3.0 * xi * xi - 2.0 * xi * xi * xi;
    n(1, 5) = -length * (-xi * xi + xi * xi * xi);
    return n;
}

// Row 0: d(u_x)/dx, row 1: -d2(u_z)/dx2 of the classical shape functions.
inline Eigen::Matrix<double, 2, 6> classical_strain_matrix(double x, double length) {
    const double l = length;
    const double xi = x / l;
    Eigen::Matrix<double, 2, 6> b = Eigen::Matrix<double, 2, 6>::Zero();
    b(0, 0) = -1.0 / l;
    b(0, 3) = 1.0 / l;
    b(1, 1) = -(-6.0 + 12.0 * xi) / (l * l);
    b(1, 2) = (-4.0 + 6.0 * xi) / l;
    b(1, 4) = -(6.0 - 12.0 * xi) / (l * l);
    b(1, 5) = (-2.0 + 6.0 * xi) / l;
    return b;
}

// Piecewise-constant stiffness description for flexibility integration.
struct SteppedBeam {
    std::vector<double> x_start;  // ascending, first 0
    std::vector<double> ea;
    std::vector<double> ei;
    double length = 0.0;
};

// Tip deflection of a cantilever (fixed at x = 0) under a unit transverse
// tip force: integral of (L - x)^2 / EI(x), integrated segment by segment in
// closed form.
inline double cantilever_tip_deflection(const SteppedBeam& beam, double force) {
    double delta = 0.0;
    const double l = beam.length;
    for (std::size_t i = 0; i < beam.x_start.size(); ++i) {
        const double a = beam.x_start[i];
        const double b = (i + 1 < beam.x_start.size()) ? beam.x_start[i + 1] : l;
        const double la = l - a, lb = l - b;
        delta += (la * la * la - lb * lb * lb) / (3.0 * beam.ei[i]);
    }
    return force * delta;
}

// Tip extension of the stepped bar under a unit axial tip force.
inline double cantilever_tip_extension(const SteppedBeam& beam, double force) {
    double delta = 0.0;
    for (std::size_t i = 0; i < beam.x_start.size(); ++i) {
        const double a = beam.x_start[i];
        const double b = (i + 1 < beam.x_start.size()) ? beam.x_start[i + 1] : beam.length;
        delta += (b - a) / beam.ea[i];
    }
    return force * delta;
}

// Kent-Park parabola evaluated directly (compression negative).
inline double kent_park_parabola(double f_c, double eps_peak, double strain) {
    const double eta = strain / eps_peak;
    return f_c * (2.0 * eta - eta * eta);
}

// Menegotto-Pinto transition curve on the virgin branch from the origin
// toward the asymptote intersection (eps_y, f_y).
inline double menegotto_pinto_virgin(double e_s, double f_y, double b, double r, double strain) {
    const double eps_y = f_y / e_s;
    const double ratio = strain / eps_y;
    const double s = b * ratio + (1.0 - b) * ratio / std::pow(1.0 + std::pow(std::abs(ratio), r), 1.0 / r);
    return s * f_y;
}

// Exact Euler-Bernoulli 6x6 stiffness in the phi = -u_z' convention.
inline Eigen::Matrix<double, 6, 6> euler_bernoulli_stiffness(double ea, double ei, double l) {
    Eigen::Matrix<double, 6, 6> k = Eigen::Matrix<double, 6, 6>::Zero();
    const double l2 = l * l, l3 = l2 * l;
    k(0, 0) = k(3, 3) = ea / l;
    k(0, 3) = k(3, 0) = -ea / l;
    const double a = 12.0 * ei / l3, b = 6.0 * ei / l2, c = 4.0 * ei / l, d = 2.0 * ei / l;
    // (u_z_i, phi_i, u_z_j, phi_j) block with theta = -u_z' signs
    const int iv[4] = {1, 2, 4, 5};
    double kb[4][4] = {{a, -b, -a, -b},
                       {-b, c, b, d},
                       {-a, b, a, b},
                       {-b, d, b, c}};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) k(iv[r], iv[s]) = kb[r][s];
    return k;
}

}  // namespace oracle
