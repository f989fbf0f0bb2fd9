#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "fsdb/quadrature.hpp"

namespace fsdb {

/// Piecewise-constant axial/flexural stiffness description of a beam.
///
/// The beam is split into segments at the abscissae `x_disc` (ascending,
/// first entry 0, all strictly below L).  Segment i carries the stiffnesses
/// EA_ref * (1 - beta_x[i]) and EI_ref * (1 - beta_z[i]), so beta measures
/// the relative stiffness loss against the reference (elastic) section.
/// The transformed jumps beta_*[i] = t(beta[i]) - t(beta[i-1]) with
/// t(b) = b / (1 - b) and beta[-1] = 0 appear in the closed-form solution
/// of the stepped beam; they are kept in sync by set_betas().
///
/// Evaluation at a discontinuity abscissa uses the right limit, i.e. the
/// segment that starts there.
class StiffnessProfile {
public:
    static constexpr double beta_max = 0.9999;

    StiffnessProfile() = default;
    StiffnessProfile(std::vector<double> x_disc, double ea_ref, double ei_ref, double length);

    /// Single-segment profile (homogeneous beam, beta = 0).
    static StiffnessProfile uniform(double ea_ref, double ei_ref, double length);

    /// Segment boundaries from the cumulative quadrature weights:
    /// x_i = L * sum_{j<i} w_j, one segment per integration point.
    static StiffnessProfile from_quadrature(const QuadratureRule& rule, double ea_ref,
                                            double ei_ref, double length);

    /// Replaces the decay parameters (clamped to [0, beta_max]) and refreshes
    /// the transformed jumps.
    void set_betas(std::span<const double> beta_x, std::span<const double> beta_z);

    int segments() const { return static_cast<int>(x_disc_.size()); }
    double length() const { return length_; }
    double ea_ref() const { return ea_ref_; }
    double ei_ref() const { return ei_ref_; }
    const std::vector<double>& x_disc() const { return x_disc_; }
    const std::vector<double>& beta_x() const { return beta_x_; }
    const std::vector<double>& beta_z() const { return beta_z_; }
    const std::vector<double>& beta_x_jump() const { return beta_x_star_; }
    const std::vector<double>& beta_z_jump() const { return beta_z_star_; }

    /// Index of the segment containing x (right limit at the boundaries).
    int segment_of(double x) const;

    /// End abscissa of segment i (L for the last segment).
    double segment_end(int i) const {
        return i + 1 < segments() ? x_disc_[i + 1] : length_;
    }

    /// 1 / (1 - beta) of the segment containing x; equals one plus the
    /// running sum of the transformed jumps.
    double axial_ratio(double x) const { return 1.0 / (1.0 - beta_x_[segment_of(x)]); }
    double flexural_ratio(double x) const { return 1.0 / (1.0 - beta_z_[segment_of(x)]); }

private:
    std::vector<double> x_disc_;
    std::vector<double> beta_x_, beta_z_;
    std::vector<double> beta_x_star_, beta_z_star_;
    double ea_ref_ = 0.0, ei_ref_ = 0.0, length_ = 0.0;

    void recompute_jumps();
};

}  // namespace fsdb
