#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>

#include "fsdb/line_load.hpp"
#include "fsdb/stepped_profile.hpp"

namespace fsdb {

using Matrix2x6 = Eigen::Matrix<double, 2, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

/// Thrown when the coefficient denominator of the transversal shape
/// functions degenerates (numerically broken stiffness profile).
class DegenerateProfileError : public std::runtime_error {
public:
    explicit DegenerateProfileError(double kappa)
        : std::runtime_error("degenerate shape-function denominator"), kappa(kappa) {}
    double kappa;
};

// ---------------------------------------------------------------------------
// Closed-form solution modes of the stepped Euler-Bernoulli beam.
//
// The homogeneous solution of the stepped bar/beam is spanned by
//   u_x:  { 1, axial_mode(x) }
//   u_z:  { 1, x, bend_mode2(x), bend_mode3(x) }
// where the modes generalize -x, x^2 and x^3 with Heaviside-activated terms
// at every stiffness discontinuity.  Displacements and slopes stay
// continuous; the second derivatives jump at the segment boundaries.
// ---------------------------------------------------------------------------

double axial_mode(const StiffnessProfile& p, double x);
double axial_mode_d1(const StiffnessProfile& p, double x);

double bend_mode2(const StiffnessProfile& p, double x);
double bend_mode2_d1(const StiffnessProfile& p, double x);
double bend_mode2_d2(const StiffnessProfile& p, double x);

double bend_mode3(const StiffnessProfile& p, double x);
double bend_mode3_d1(const StiffnessProfile& p, double x);
double bend_mode3_d2(const StiffnessProfile& p, double x);

// Load-induced particular solutions (primitives vanish at x = 0, so both
// fields and their first derivatives are zero at the left end).
double axial_particular(const StiffnessProfile& p, const LineLoad& px, double x);
double axial_particular_d1(const StiffnessProfile& p, const LineLoad& px, double x);

double bend_particular(const StiffnessProfile& p, const LineLoad& pz, double x);
double bend_particular_d1(const StiffnessProfile& p, const LineLoad& pz, double x);
double bend_particular_d2(const StiffnessProfile& p, const LineLoad& pz, double x);

// ---------------------------------------------------------------------------
// Adaptive displacement shape functions.
//
// Nodal degrees of freedom: q = (u_x_i, u_z_i, phi_i, u_x_j, u_z_j, phi_j)
// with the rotation phi = -u_z'.  The coefficients interpolate the stepped
// closed-form modes so that N is the identity pattern on the nodal values;
// with all beta = 0 they reduce exactly to the linear/Hermite-cubic family.
// ---------------------------------------------------------------------------

struct ShapeCoefficients {
    std::array<double, 2> a1{}, a2{};                 // axial: a1 + a2 * axial_mode
    std::array<double, 4> c1{}, c2{}, c3{}, c4{};     // transversal coefficients
    double kappa = 0.0;
};

/// Coefficient solve for the current profile.  Throws DegenerateProfileError
/// when |kappa| < 1e-12 * L^4.
ShapeCoefficients shape_coefficients(const StiffnessProfile& p);

/// 2x6 displacement shape matrix at x: row 0 -> u_x, row 1 -> u_z.
Matrix2x6 shape_matrix(const StiffnessProfile& p, const ShapeCoefficients& c, double x);

/// 2x6 generalized-strain matrix at x: row 0 -> axis strain (u_x'),
/// row 1 -> curvature (-u_z'').  Piecewise constant/linear per segment with
/// jumps at the discontinuity abscissae (right limit at a boundary).
Matrix2x6 strain_matrix(const StiffnessProfile& p, const ShapeCoefficients& c, double x);

/// Segment-linear decomposition of the strain matrix: within segment i,
/// B(x) = b0 + x * b1 exactly.  Used for exact stiffness integration.
struct StrainMatrixSegment {
    Matrix2x6 b0, b1;
};
StrainMatrixSegment strain_matrix_segment(const StiffnessProfile& p, const ShapeCoefficients& c,
                                          int segment);

/// Displacement field induced by member loads under homogeneous (clamped)
/// end conditions: (u_px, u_pz) at x.
Eigen::Vector2d load_displacement(const StiffnessProfile& p, const LineLoad& px,
                                  const LineLoad& pz, double x);

/// Generalized-strain contribution of the member loads: (u_px', -u_pz'').
Eigen::Vector2d load_strain(const StiffnessProfile& p, const LineLoad& px, const LineLoad& pz,
                            double x);

/// Axial displacement field of an axial-only load with both ends held
/// (first component of load_displacement), used by the axial equilibration
/// correction.
double axial_load_displacement(const StiffnessProfile& p, const LineLoad& px, double x);
double axial_load_strain(const StiffnessProfile& p, const LineLoad& px, double x);

}  // namespace fsdb
