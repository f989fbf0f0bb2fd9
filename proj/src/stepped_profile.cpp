#include "fsdb/stepped_profile.hpp"

#include <algorithm>
#include <cmath>

namespace fsdb {

StiffnessProfile::StiffnessProfile(std::vector<double> x_disc, double ea_ref, double ei_ref,
                                   double length)
    : x_disc_(std::move(x_disc)), ea_ref_(ea_ref), ei_ref_(ei_ref), length_(length) {
    if (length_ <= 0.0) throw std::invalid_argument("StiffnessProfile: length must be positive");
    if (ea_ref_ <= 0.0 || ei_ref_ <= 0.0)
        throw std::invalid_argument("StiffnessProfile: reference stiffnesses must be positive");
    if (x_disc_.empty() || x_disc_.front() != 0.0)
        throw std::invalid_argument("StiffnessProfile: first discontinuity abscissa must be 0");
    for (std::size_t i = 0; i < x_disc_.size(); ++i) {
        if (x_disc_[i] >= length_)
            throw std::invalid_argument("StiffnessProfile: abscissae must lie below the length");
        if (i > 0 && x_disc_[i] <= x_disc_[i - 1])
            throw std::invalid_argument("StiffnessProfile: abscissae must be strictly ascending");
    }
    beta_x_.assign(x_disc_.size(), 0.0);
    beta_z_.assign(x_disc_.size(), 0.0);
    recompute_jumps();
}

StiffnessProfile StiffnessProfile::uniform(double ea_ref, double ei_ref, double length) {
    return StiffnessProfile({0.0}, ea_ref, ei_ref, length);
}

StiffnessProfile StiffnessProfile::from_quadrature(const QuadratureRule& rule, double ea_ref,
                                                   double ei_ref, double length) {
    std::vector<double> x(rule.n);
    double acc = 0.0;
    for (int i = 0; i < rule.n; ++i) {
        x[i] = acc * length;
        acc += rule.weights[i];
    }
    return StiffnessProfile(std::move(x), ea_ref, ei_ref, length);
}

void StiffnessProfile::set_betas(std::span<const double> beta_x, std::span<const double> beta_z) {
    if (static_cast<int>(beta_x.size()) != segments() ||
        static_cast<int>(beta_z.size()) != segments())
        throw std::invalid_argument("set_betas: one value per segment required");
    for (int i = 0; i < segments(); ++i) {
        beta_x_[i] = std::clamp(beta_x[i], 0.0, beta_max);
        beta_z_[i] = std::clamp(beta_z[i], 0.0, beta_max);
    }
    recompute_jumps();
}

void StiffnessProfile::recompute_jumps() {
    const auto transform = [](double b) { return b / (1.0 - b); };
    beta_x_star_.resize(beta_x_.size());
    beta_z_star_.resize(beta_z_.size());
    double prev_x = 0.0, prev_z = 0.0;
    for (std::size_t i = 0; i < beta_x_.size(); ++i) {
        const double tx = transform(beta_x_[i]);
        const double tz = transform(beta_z_[i]);
        beta_x_star_[i] = tx - prev_x;
        beta_z_star_[i] = tz - prev_z;
        prev_x = tx;
        prev_z = tz;
    }
}

int StiffnessProfile::segment_of(double x) const {
    // Last abscissa not exceeding x; x at a boundary belongs to the segment
    // that starts there.
    auto it = std::upper_bound(x_disc_.begin(), x_disc_.end(), x);
    if (it == x_disc_.begin()) return 0;
    return static_cast<int>(std::distance(x_disc_.begin(), it)) - 1;
}

}  // namespace fsdb
