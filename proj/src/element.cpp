#include "fsdb/element.hpp"

#include <cmath>
#include <numeric>

namespace fsdb {

FrameElement::FrameElement(double length, const FibreSection& section_prototype,
                           ElementSettings settings)
    : length_(length),
      settings_(settings),
      quad_(QuadratureRule::gauss_lobatto(settings.integration_points)) {
    sections_.reserve(quad_.n);
    for (int r = 0; r < quad_.n; ++r) {
        sections_.push_back(section_prototype);
        sections_.back().finalize();
    }
    const double ea = settings_.reference_ea > 0.0 ? settings_.reference_ea
                                                   : sections_.front().ea_ref();
    const double ei = settings_.reference_ei > 0.0 ? settings_.reference_ei
                                                   : sections_.front().ei_ref();
    profile_ = StiffnessProfile::from_quadrature(quad_, ea, ei, length_);
    x_gauss_.resize(quad_.n);
    for (int r = 0; r < quad_.n; ++r) x_gauss_[r] = quad_.points[r] * length_;
    fict_strain_.assign(quad_.n, 0.0);
    refresh_shape_state();
}

FrameElement::FrameElement(double length, std::vector<FibreSection> sections,
                           ElementSettings settings)
    : length_(length),
      settings_(settings),
      quad_(QuadratureRule::gauss_lobatto(settings.integration_points)),
      sections_(std::move(sections)) {
    if (static_cast<int>(sections_.size()) != quad_.n)
        throw std::invalid_argument("need one section per integration point");
    for (auto& s : sections_) s.finalize();
    const double ea = settings_.reference_ea > 0.0 ? settings_.reference_ea
                                                   : sections_.front().ea_ref();
    const double ei = settings_.reference_ei > 0.0 ? settings_.reference_ei
                                                   : sections_.front().ei_ref();
    profile_ = StiffnessProfile::from_quadrature(quad_, ea, ei, length_);
    x_gauss_.resize(quad_.n);
    for (int r = 0; r < quad_.n; ++r) x_gauss_[r] = quad_.points[r] * length_;
    fict_strain_.assign(quad_.n, 0.0);
    refresh_shape_state();
}

void FrameElement::set_profile_betas(std::span<const double> beta_x,
                                     std::span<const double> beta_z) {
    profile_.set_betas(beta_x, beta_z);
    refresh_shape_state();
}

void FrameElement::refresh_shape_state() {
    coeffs_ = shape_coefficients(profile_);
    b_at_gauss_.resize(quad_.n);
    for (int r = 0; r < quad_.n; ++r)
        b_at_gauss_[r] = strain_matrix(profile_, coeffs_, x_gauss_[r]);
}

Matrix6 FrameElement::stiffness() const {
    Matrix6 k = Matrix6::Zero();
    for (int r = 0; r < quad_.n; ++r) {
        const Eigen::Matrix2d ks = sections_[r].tangent();
        const auto seg = strain_matrix_segment(profile_, coeffs_, r);
        const double a = profile_.x_disc()[r];
        const double b = profile_.segment_end(r);
        const double i0 = b - a;
        const double i1 = 0.5 * (b * b - a * a);
        const double i2 = (b * b * b - a * a * a) / 3.0;
        const Matrix2x6& b0 = seg.b0;
        const Matrix2x6& b1 = seg.b1;
        k += i0 * b0.transpose() * ks * b0;
        const Matrix6 cross = b0.transpose() * ks * b1;
        k += i1 * (cross + cross.transpose());
        k += i2 * b1.transpose() * ks * b1;
    }
    return 0.5 * (k + k.transpose());
}

void FrameElement::apply_trial(const Vector6& q_local) {
    const bool has_loads = px_uniform_ != 0.0 || pz_uniform_ != 0.0;
    const UniformLoad px(px_uniform_), pz(pz_uniform_);
    for (int r = 0; r < quad_.n; ++r) {
        Eigen::Vector2d d = b_at_gauss_[r] * q_local;
        d(0) += fict_strain_[r];
        if (has_loads) d += load_strain(profile_, px, pz, x_gauss_[r]);
        sections_[r].set_trial(SectionStrain{d(0), d(1)});
    }
}

Vector6 FrameElement::integrate_resisting() const {
    Vector6 q = Vector6::Zero();
    for (int r = 0; r < quad_.n; ++r) {
        const SectionForces f = sections_[r].resultants();
        Eigen::Vector2d d_vec(f.axial, f.moment);
        q += length_ * quad_.weights[r] * (b_at_gauss_[r].transpose() * d_vec);
    }
    return q;
}

double FrameElement::axial_floor() const {
    return 1e-3 * profile_.ea_ref() * 1e-6;
}

Vector6 FrameElement::state_determination(const Vector6& q_local) {
    if (settings_.update_per_iteration && settings_.formulation == Formulation::FSDB)
        update_profile_from_sections(true);

    apply_trial(q_local);
    inner_converged_ = true;

    if (settings_.axial_equilibration) {
        for (int it = 0; it < settings_.max_inner_iterations; ++it) {
            std::vector<double> n(quad_.n);
            double mean = 0.0;
            for (int r = 0; r < quad_.n; ++r) {
                n[r] = sections_[r].resultants().axial;
                mean += n[r];
            }
            mean /= quad_.n;
            double spread = 0.0;
            for (double v : n) spread = std::max(spread, std::abs(v - mean));
            const double tol =
                settings_.axial_tolerance * std::max(std::abs(mean), axial_floor());
            if (spread <= tol) break;
            if (it + 1 == settings_.max_inner_iterations) {
                inner_converged_ = false;
                break;
            }

            // Concentrated fictitious loads carrying the inter-section axial
            // jumps, placed at the segment boundaries.
            PointLoadSet jumps;
            for (int i = 1; i < quad_.n; ++i)
                jumps.add(n[i] - n[i - 1], profile_.x_disc()[i]);
            for (int r = 0; r < quad_.n; ++r)
                fict_strain_[r] += axial_load_strain(profile_, jumps, x_gauss_[r]);
            apply_trial(q_local);
        }
    }
    return integrate_resisting();
}

Vector6 FrameElement::external_load_vector(double px_uniform, double pz_uniform) const {
    Vector6 p = Vector6::Zero();
    for (int r = 0; r < quad_.n; ++r) {
        const Matrix2x6 n = shape_matrix(profile_, coeffs_, x_gauss_[r]);
        const Eigen::Vector2d load(px_uniform, pz_uniform);
        p += length_ * quad_.weights[r] * (n.transpose() * load);
    }
    return p;
}

void FrameElement::set_member_loads(double px_uniform, double pz_uniform) {
    px_uniform_ = px_uniform;
    pz_uniform_ = pz_uniform;
}

void FrameElement::update_profile_from_sections(bool use_trial_increments) {
    std::vector<double> bx(quad_.n), bz(quad_.n);
    for (int r = 0; r < quad_.n; ++r) {
        const BetaPair b = sections_[r].extract_betas(profile_.ea_ref(), profile_.ei_ref());
        bx[r] = b.beta_x;
        bz[r] = b.beta_z;
    }
    (void)use_trial_increments;  // increments are owned by the sections
    profile_.set_betas(bx, bz);
    refresh_shape_state();
}

void FrameElement::commit() {
    resisting_committed_ = integrate_resisting();
    for (auto& s : sections_) s.commit();
    if (settings_.formulation == Formulation::FSDB) update_profile_from_sections(false);
    std::fill(fict_strain_.begin(), fict_strain_.end(), 0.0);
}

void FrameElement::revert_to_commit() {
    for (auto& s : sections_) s.revert_to_commit();
    std::fill(fict_strain_.begin(), fict_strain_.end(), 0.0);
    inner_converged_ = true;
}

std::vector<GaussPointState> FrameElement::gauss_states() const {
    std::vector<GaussPointState> out(quad_.n);
    for (int r = 0; r < quad_.n; ++r) {
        const auto& s = sections_[r];
        const SectionForces f = s.resultants();
        out[r].x_norm = quad_.points[r];
        out[r].eps0 = s.trial_strain().eps0;
        out[r].chi = s.trial_strain().chi;
        out[r].axial = f.axial;
        out[r].moment = f.moment;
        out[r].beta_x = profile_.beta_x()[r];
        out[r].beta_z = profile_.beta_z()[r];
    }
    return out;
}

std::vector<double> FrameElement::shear_profile() const {
    // Free body of [0, x]: the shear transmitted across a section balances
    // the node-i resisting force and the member load up to x.
    std::vector<double> t(quad_.n);
    for (int r = 0; r < quad_.n; ++r)
        t[r] = -(resisting_committed_(1) + pz_uniform_ * x_gauss_[r]);
    return t;
}

double FrameElement::axial_force_spread() const {
    double mean = 0.0;
    for (const auto& s : sections_) mean += s.resultants().axial;
    mean /= quad_.n;
    double spread = 0.0;
    for (const auto& s : sections_)
        spread = std::max(spread, std::abs(s.resultants().axial - mean));
    return spread;
}

Eigen::Vector2d FrameElement::displacement_field(const Vector6& q_local, double x) const {
    Eigen::Vector2d u = shape_matrix(profile_, coeffs_, x) * q_local;
    if (px_uniform_ != 0.0 || pz_uniform_ != 0.0) {
        const UniformLoad px(px_uniform_), pz(pz_uniform_);
        u += load_displacement(profile_, px, pz, x);
    }
    return u;
}

}  // namespace fsdb
