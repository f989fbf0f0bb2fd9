#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "fsdb/material.hpp"

namespace fsdb {

/// Generalized section strains: axis strain and curvature.
struct SectionStrain {
    double eps0 = 0.0;
    double chi = 0.0;
};

/// Stress resultants conjugate to SectionStrain.
struct SectionForces {
    double axial = 0.0;
    double moment = 0.0;
};

struct Fibre {
    double z = 0.0;     // offset from the section reference axis
    double area = 0.0;  // > 0
    std::unique_ptr<UniaxialMaterial> material;
};

/// Discontinuity decay parameters extracted from a section tangent.
struct BetaPair {
    double beta_x = 0.0;
    double beta_z = 0.0;
};

/// Fibre-discretised cross section under planar-section kinematics: the
/// fibre strain at offset z is eps0 + chi * z, resultants and tangent are
/// fibre-area sums.
class FibreSection {
public:
    FibreSection() = default;
    FibreSection(const FibreSection& other);
    FibreSection& operator=(const FibreSection& other);
    FibreSection(FibreSection&&) = default;
    FibreSection& operator=(FibreSection&&) = default;

    void add_fibre(double z, double area, std::unique_ptr<UniaxialMaterial> material);

    /// Freezes the elastic reference stiffnesses (fibre sums with initial
    /// tangents) and the section height used by the ratio guards.  Called
    /// automatically on first use.
    void finalize();

    int fibre_count() const { return static_cast<int>(fibres_.size()); }
    double ea_ref() const { return ea_ref_; }
    double ei_ref() const { return ei_ref_; }
    double height() const { return height_; }

    /// Drives every fibre to the strain implied by d; returns the resultants.
    SectionForces set_trial(const SectionStrain& d);

    SectionForces resultants() const;
    Eigen::Matrix2d tangent() const;

    const SectionStrain& trial_strain() const { return trial_d_; }
    const SectionStrain& committed_strain() const { return committed_d_; }
    /// Strain increment over the last committed step.
    const SectionStrain& last_increment() const { return last_increment_; }
    bool has_committed_step() const { return has_committed_step_; }

    void commit();
    void revert_to_commit();

    /// Decay parameters of the current tangent against the given references:
    /// the directional stiffnesses along the last committed strain increment,
    /// normalized by ea_ref/ei_ref and clamped to [0, beta_max].  Before any
    /// step has been committed only the diagonal terms are used.
    BetaPair extract_betas(double ea_ref, double ei_ref) const;
    BetaPair extract_betas() const { return extract_betas(ea_ref_, ei_ref_); }

    static double fibre_strain(const SectionStrain& d, double z) { return d.eps0 + d.chi * z; }

private:
    std::vector<Fibre> fibres_;
    SectionStrain trial_d_{}, committed_d_{}, last_increment_{};
    bool has_committed_step_ = false;
    bool finalized_ = false;
    double ea_ref_ = 0.0, ei_ref_ = 0.0, height_ = 0.0;
};

}  // namespace fsdb
