#include "fsdb/fibre_section.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fsdb {

namespace {
constexpr double beta_cap = 0.9999;        // matches StiffnessProfile::beta_max
constexpr double tangent_floor_ratio = 1e-6;
}  // namespace

FibreSection::FibreSection(const FibreSection& other)
    : trial_d_(other.trial_d_),
      committed_d_(other.committed_d_),
      last_increment_(other.last_increment_),
      has_committed_step_(other.has_committed_step_),
      finalized_(other.finalized_),
      ea_ref_(other.ea_ref_),
      ei_ref_(other.ei_ref_),
      height_(other.height_) {
    fibres_.reserve(other.fibres_.size());
    for (const auto& f : other.fibres_)
        fibres_.push_back(Fibre{f.z, f.area, f.material->clone()});
}

FibreSection& FibreSection::operator=(const FibreSection& other) {
    if (this == &other) return *this;
    FibreSection tmp(other);
    *this = std::move(tmp);
    return *this;
}

void FibreSection::add_fibre(double z, double area, std::unique_ptr<UniaxialMaterial> material) {
    if (!(area > 0.0)) throw std::invalid_argument("fibre area must be positive");
    if (!material) throw std::invalid_argument("fibre needs a material");
    fibres_.push_back(Fibre{z, area, std::move(material)});
    finalized_ = false;
}

void FibreSection::finalize() {
    if (finalized_) return;
    if (fibres_.empty()) throw std::logic_error("section has no fibres");
    double ea = 0.0, ei = 0.0;
    double z_lo = fibres_.front().z, z_hi = fibres_.front().z;
    for (const auto& f : fibres_) {
        const double e = f.material->initial_tangent();
        ea += e * f.area;
        ei += e * f.area * f.z * f.z;
        z_lo = std::min(z_lo, f.z);
        z_hi = std::max(z_hi, f.z);
    }
    ea_ref_ = ea;
    ei_ref_ = ei;
    height_ = z_hi - z_lo;
    finalized_ = true;
}

SectionForces FibreSection::set_trial(const SectionStrain& d) {
    finalize();
    trial_d_ = d;
    SectionForces out;
    for (auto& f : fibres_) {
        const auto st = f.material->set_trial_strain(fibre_strain(d, f.z));
        out.axial += st.stress * f.area;
        out.moment += st.stress * f.area * f.z;
    }
    return out;
}

SectionForces FibreSection::resultants() const {
    SectionForces out;
    for (const auto& f : fibres_) {
        out.axial += f.material->stress() * f.area;
        out.moment += f.material->stress() * f.area * f.z;
    }
    return out;
}

Eigen::Matrix2d FibreSection::tangent() const {
    double kxx = 0.0, kxz = 0.0, kzz = 0.0;
    for (const auto& f : fibres_) {
        const double ea = f.material->tangent() * f.area;
        kxx += ea;
        kxz += ea * f.z;
        kzz += ea * f.z * f.z;
    }
    Eigen::Matrix2d k;
    k << kxx, kxz, kxz, kzz;
    return k;
}

void FibreSection::commit() {
    last_increment_ = SectionStrain{trial_d_.eps0 - committed_d_.eps0,
                                    trial_d_.chi - committed_d_.chi};
    committed_d_ = trial_d_;
    has_committed_step_ = true;
    for (auto& f : fibres_) f.material->commit();
}

void FibreSection::revert_to_commit() {
    trial_d_ = committed_d_;
    for (auto& f : fibres_) f.material->revert_to_commit();
}

BetaPair FibreSection::extract_betas(double ea_ref, double ei_ref) const {
    const Eigen::Matrix2d k = tangent();

    double kx = k(0, 0);
    double kz = k(1, 1);
    if (has_committed_step_) {
        // Directional tangents along the last converged strain increment;
        // cross terms are dropped when the conjugate increment is too small
        // for a meaningful ratio.
        const double de = last_increment_.eps0;
        const double dc = last_increment_.chi;
        const double eps_scale = 1e-12 + 1e-6 * std::abs(dc) * height_;
        const double chi_scale = (1e-12 + 1e-6 * std::abs(de)) / std::max(height_, 1e-12);
        if (std::abs(de) >= eps_scale) kx += k(0, 1) * (dc / de);
        if (std::abs(dc) >= chi_scale) kz += k(1, 0) * (de / dc);
    }

    kx = std::max(kx, tangent_floor_ratio * ea_ref);
    kz = std::max(kz, tangent_floor_ratio * ei_ref);

    BetaPair b;
    b.beta_x = std::clamp(1.0 - kx / ea_ref, 0.0, beta_cap);
    b.beta_z = std::clamp(1.0 - kz / ei_ref, 0.0, beta_cap);
    return b;
}

}  // namespace fsdb
