#include "fsdb/shape_functions.hpp"

#include <cmath>

namespace fsdb {

namespace {
constexpr double kappa_rel_tol = 1e-12;
}

// --- homogeneous solution modes ---------------------------------------------

double axial_mode(const StiffnessProfile& p, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_x_jump();
    const int s = p.segment_of(x);
    double v = -x;
    for (int i = 0; i <= s; ++i) v -= bs[i] * (x - xd[i]);
    return v;
}

double axial_mode_d1(const StiffnessProfile& p, double x) {
    return -p.axial_ratio(x);
}

double bend_mode2(const StiffnessProfile& p, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_z_jump();
    const int s = p.segment_of(x);
    double v = x * x;
    for (int i = 0; i <= s; ++i) {
        const double dx = x - xd[i];
        v += bs[i] * dx * dx;
    }
    return v;
}

double bend_mode2_d1(const StiffnessProfile& p, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_z_jump();
    const int s = p.segment_of(x);
    double v = 2.0 * x;
    for (int i = 0; i <= s; ++i) v += 2.0 * bs[i] * (x - xd[i]);
    return v;
}

double bend_mode2_d2(const StiffnessProfile& p, double x) {
    return 2.0 * p.flexural_ratio(x);
}

double bend_mode3(const StiffnessProfile& p, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_z_jump();
    const int s = p.segment_of(x);
    const double x3 = x * x * x;
    double v = x3;
    for (int i = 0; i <= s; ++i) {
        const double xi = xd[i];
        v += bs[i] * (x3 - 3.0 * xi * xi * x + 2.0 * xi * xi * xi);
    }
    return v;
}

double bend_mode3_d1(const StiffnessProfile& p, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_z_jump();
    const int s = p.segment_of(x);
    double v = 3.0 * x * x;
    for (int i = 0; i <= s; ++i) v += 3.0 * bs[i] * (x * x - xd[i] * xd[i]);
    return v;
}

double bend_mode3_d2(const StiffnessProfile& p, double x) {
    return 6.0 * x * p.flexural_ratio(x);
}

// --- load-induced particular solutions ---------------------------------------

double axial_particular(const StiffnessProfile& p, const LineLoad& px, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_x_jump();
    const int s = p.segment_of(x);
    const double p2x = px.primitive(2, x);
    double v = -p2x;
    for (int i = 0; i <= s; ++i) v -= bs[i] * (p2x - px.primitive(2, xd[i]));
    return v / p.ea_ref();
}

double axial_particular_d1(const StiffnessProfile& p, const LineLoad& px, double x) {
    return -px.primitive(1, x) * p.axial_ratio(x) / p.ea_ref();
}

double bend_particular(const StiffnessProfile& p, const LineLoad& pz, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_z_jump();
    const int s = p.segment_of(x);
    const double p4x = pz.primitive(4, x);
    double v = p4x;
    for (int i = 0; i <= s; ++i) {
        const double xi = xd[i];
        v += bs[i] * (p4x - pz.primitive(4, xi) - pz.primitive(3, xi) * (x - xi));
    }
    return v / p.ei_ref();
}

double bend_particular_d1(const StiffnessProfile& p, const LineLoad& pz, double x) {
    const auto& xd = p.x_disc();
    const auto& bs = p.beta_z_jump();
    const int s = p.segment_of(x);
    const double p3x = pz.primitive(3, x);
    double v = p3x;
    for (int i = 0; i <= s; ++i) v += bs[i] * (p3x - pz.primitive(3, xd[i]));
    return v / p.ei_ref();
}

double bend_particular_d2(const StiffnessProfile& p, const LineLoad& pz, double x) {
    return pz.primitive(2, x) * p.flexural_ratio(x) / p.ei_ref();
}

// --- shape functions ----------------------------------------------------------

ShapeCoefficients shape_coefficients(const StiffnessProfile& p) {
    const double length = p.length();
    const double g2L = axial_mode(p, length);
    const double f3L = bend_mode2(p, length);
    const double f4L = bend_mode3(p, length);
    const double f3pL = bend_mode2_d1(p, length);
    const double f4pL = bend_mode3_d1(p, length);

    ShapeCoefficients c;
    c.kappa = f3L * f4pL - f4L * f3pL;
    const double l4 = length * length * length * length;
    if (std::abs(c.kappa) < kappa_rel_tol * l4) throw DegenerateProfileError(c.kappa);

    c.a1 = {1.0, 0.0};
    c.a2 = {-1.0 / g2L, 1.0 / g2L};

    // Column j multiplies nodal value q_j; boundary data per column:
    //   u_z(0), u_z'(0), u_z(L), u_z'(L) with phi = -u_z'.
    // j = 0: u_z_i,  j = 1: phi_i,  j = 2: u_z_j,  j = 3: phi_j.
    const auto solve = [&](double c1, double c2, double uL, double duL, int j,
                           ShapeCoefficients& out) {
        const double r1 = uL - c1 - c2 * length;
        const double r2 = duL - c2;
        out.c1[j] = c1;
        out.c2[j] = c2;
        out.c3[j] = (r1 * f4pL - f4L * r2) / out.kappa;
        out.c4[j] = (f3L * r2 - f3pL * r1) / out.kappa;
    };
    solve(1.0, 0.0, 0.0, 0.0, 0, c);    // unit u_z at node i
    solve(0.0, -1.0, 0.0, 0.0, 1, c);   // unit phi at node i
    solve(0.0, 0.0, 1.0, 0.0, 2, c);    // unit u_z at node j
    solve(0.0, 0.0, 0.0, -1.0, 3, c);   // unit phi at node j
    return c;
}

Matrix2x6 shape_matrix(const StiffnessProfile& p, const ShapeCoefficients& c, double x) {
    const double g2 = axial_mode(p, x);
    const double f3 = bend_mode2(p, x);
    const double f4 = bend_mode3(p, x);

    Matrix2x6 n = Matrix2x6::Zero();
    n(0, 0) = c.a1[0] + c.a2[0] * g2;
    n(0, 3) = c.a1[1] + c.a2[1] * g2;
    static constexpr int cols[4] = {1, 2, 4, 5};
    for (int j = 0; j < 4; ++j)
        n(1, cols[j]) = c.c1[j] + c.c2[j] * x + c.c3[j] * f3 + c.c4[j] * f4;
    return n;
}

Matrix2x6 strain_matrix(const StiffnessProfile& p, const ShapeCoefficients& c, double x) {
    const double g2p = axial_mode_d1(p, x);
    const double f3pp = bend_mode2_d2(p, x);
    const double f4pp = bend_mode3_d2(p, x);

    Matrix2x6 b = Matrix2x6::Zero();
    b(0, 0) = c.a2[0] * g2p;
    b(0, 3) = c.a2[1] * g2p;
    static constexpr int cols[4] = {1, 2, 4, 5};
    for (int j = 0; j < 4; ++j) b(1, cols[j]) = -(c.c3[j] * f3pp + c.c4[j] * f4pp);
    return b;
}

StrainMatrixSegment strain_matrix_segment(const StiffnessProfile& p, const ShapeCoefficients& c,
                                          int segment) {
    // Within a segment: u_x' is constant and -u_z'' = -m (2 c3 + 6 x c4)
    // with m the flexural stiffness ratio of the segment.
    StrainMatrixSegment s;
    s.b0 = Matrix2x6::Zero();
    s.b1 = Matrix2x6::Zero();
    const double mx = 1.0 / (1.0 - p.beta_x()[segment]);
    const double mz = 1.0 / (1.0 - p.beta_z()[segment]);
    s.b0(0, 0) = -c.a2[0] * mx;
    s.b0(0, 3) = -c.a2[1] * mx;
    static constexpr int cols[4] = {1, 2, 4, 5};
    for (int j = 0; j < 4; ++j) {
        s.b0(1, cols[j]) = -2.0 * mz * c.c3[j];
        s.b1(1, cols[j]) = -6.0 * mz * c.c4[j];
    }
    return s;
}

// --- member-load displacement fields ------------------------------------------

double axial_load_displacement(const StiffnessProfile& p, const LineLoad& px, double x) {
    const double length = p.length();
    const double g2L = axial_mode(p, length);
    const double g3L = axial_particular(p, px, length);
    return -(g3L / g2L) * axial_mode(p, x) + axial_particular(p, px, x);
}

double axial_load_strain(const StiffnessProfile& p, const LineLoad& px, double x) {
    const double length = p.length();
    const double g2L = axial_mode(p, length);
    const double g3L = axial_particular(p, px, length);
    return -(g3L / g2L) * axial_mode_d1(p, x) + axial_particular_d1(p, px, x);
}

namespace {
struct BendLoadCoeffs {
    double cf3, cf4;
};
BendLoadCoeffs bend_load_coeffs(const StiffnessProfile& p, const LineLoad& pz) {
    const double length = p.length();
    const double f3L = bend_mode2(p, length);
    const double f4L = bend_mode3(p, length);
    const double f3pL = bend_mode2_d1(p, length);
    const double f4pL = bend_mode3_d1(p, length);
    const double f5L = bend_particular(p, pz, length);
    const double f5pL = bend_particular_d1(p, pz, length);
    const double kappa = f3L * f4pL - f4L * f3pL;
    return {(f4L * f5pL - f5L * f4pL) / kappa, (f5L * f3pL - f3L * f5pL) / kappa};
}
}  // namespace

Eigen::Vector2d load_displacement(const StiffnessProfile& p, const LineLoad& px,
                                  const LineLoad& pz, double x) {
    Eigen::Vector2d u;
    u(0) = axial_load_displacement(p, px, x);
    const auto c = bend_load_coeffs(p, pz);
    u(1) = c.cf3 * bend_mode2(p, x) + c.cf4 * bend_mode3(p, x) + bend_particular(p, pz, x);
    return u;
}

Eigen::Vector2d load_strain(const StiffnessProfile& p, const LineLoad& px, const LineLoad& pz,
                            double x) {
    Eigen::Vector2d e;
    e(0) = axial_load_strain(p, px, x);
    const auto c = bend_load_coeffs(p, pz);
    e(1) = -(c.cf3 * bend_mode2_d2(p, x) + c.cf4 * bend_mode3_d2(p, x) +
             bend_particular_d2(p, pz, x));
    return e;
}

}  // namespace fsdb
