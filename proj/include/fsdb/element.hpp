#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "fsdb/fibre_section.hpp"
#include "fsdb/quadrature.hpp"
#include "fsdb/shape_functions.hpp"
#include "fsdb/stepped_profile.hpp"

namespace fsdb {

using Matrix6 = Eigen::Matrix<double, 6, 6>;

enum class Formulation { FSDB, DB };

struct ElementSettings {
    Formulation formulation = Formulation::FSDB;
    int integration_points = 10;
    bool axial_equilibration = true;
    bool update_per_iteration = false;  // literal per-iteration shape update
    int max_inner_iterations = 20;
    double axial_tolerance = 1e-6;      // relative spread of the axial force
    // Explicit elastic references; when zero they are taken from the initial
    // section tangents.
    double reference_ea = 0.0;
    double reference_ei = 0.0;
};

/// Per-control-section record of a converged state.
struct GaussPointState {
    double x_norm = 0.0;  // x / L
    double eps0 = 0.0, chi = 0.0;
    double axial = 0.0, moment = 0.0;
    double beta_x = 0.0, beta_z = 0.0;
};

/// Planar two-node beam element with fibre control sections.
///
/// Degrees of freedom (local): (u_x_i, u_z_i, phi_i, u_x_j, u_z_j, phi_j),
/// phi = -u_z'.  With formulation DB the shape functions stay the classical
/// linear/Hermite set; with FSDB they adapt to the stepped decay profile
/// extracted from the section tangents after every converged step.  The
/// optional axial equilibration loop superimposes closed-form fictitious
/// axial strain fields until the axial force is uniform across the control
/// sections.
class FrameElement {
public:
    FrameElement(double length, const FibreSection& section_prototype, ElementSettings settings);

    /// One independent section per integration point.
    FrameElement(double length, std::vector<FibreSection> sections, ElementSettings settings);

    /// Imposes a decay state directly (state restoration and verification);
    /// the regular path extracts it from the section tangents at commit.
    void set_profile_betas(std::span<const double> beta_x, std::span<const double> beta_z);

    double length() const { return length_; }
    const ElementSettings& settings() const { return settings_; }
    const QuadratureRule& quadrature() const { return quad_; }
    const StiffnessProfile& profile() const { return profile_; }
    double ea_ref() const { return profile_.ea_ref(); }
    double ei_ref() const { return profile_.ei_ref(); }

    /// Tangent stiffness: exact piecewise integration of B^T k B with the
    /// current section tangents (constant per segment).
    Matrix6 stiffness() const;

    /// Drives the sections to the strains implied by the local nodal
    /// displacements (plus accumulated fictitious axial strain and member
    /// load fields), runs the axial equilibration loop when enabled and
    /// returns the resisting nodal forces L * sum B^T D w.
    Vector6 state_determination(const Vector6& q_local);

    /// False when the last axial equilibration loop hit its iteration cap;
    /// the step should be cut.
    bool inner_loop_converged() const { return inner_converged_; }

    /// Consistent nodal forces of uniform member loads.
    Vector6 external_load_vector(double px_uniform, double pz_uniform) const;

    /// Assigns uniform member loads entering the state determination through
    /// the particular displacement field.
    void set_member_loads(double px_uniform, double pz_uniform);

    void commit();
    void revert_to_commit();

    std::vector<GaussPointState> gauss_states() const;

    /// Shear per control segment from the free-body equilibrium of the
    /// committed resisting forces (constant between transverse loads).
    std::vector<double> shear_profile() const;

    /// Maximum deviation of the control-section axial forces from their mean
    /// (diagnostic for the equilibration loop).
    double axial_force_spread() const;

    const FibreSection& section(int r) const { return sections_[r]; }
    FibreSection& section(int r) { return sections_[r]; }

    /// Displacement field reconstructed from nodal displacements and member
    /// loads at abscissa x (local axes).
    Eigen::Vector2d displacement_field(const Vector6& q_local, double x) const;

private:
    double length_;
    ElementSettings settings_;
    QuadratureRule quad_;
    std::vector<FibreSection> sections_;
    StiffnessProfile profile_;
    ShapeCoefficients coeffs_;
    std::vector<Matrix2x6> b_at_gauss_;
    std::vector<double> x_gauss_;
    std::vector<double> fict_strain_;  // accumulated within the current step
    double px_uniform_ = 0.0, pz_uniform_ = 0.0;
    bool inner_converged_ = true;
    Vector6 resisting_committed_ = Vector6::Zero();

    void refresh_shape_state();
    void apply_trial(const Vector6& q_local);
    Vector6 integrate_resisting() const;
    void update_profile_from_sections(bool use_trial_increments);
    double axial_floor() const;
};

}  // namespace fsdb
