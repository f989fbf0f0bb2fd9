#include "fsdb/steel.hpp"

#include <cmath>

namespace fsdb {

MenegottoPintoSteel::MenegottoPintoSteel(const SteelParams& params) : params_(params) {
    params_.validate();
    c_.tan = t_.tan = params_.e_s;
}

void MenegottoPintoSteel::evaluate_branch() {
    const double e0 = params_.e_s;
    const double b = params_.hardening;
    const double eps_y = params_.f_y / e0;

    const double xi = std::abs((t_.eps_pl - t_.eps_0) / eps_y);
    const double r = params_.r0 * (1.0 - params_.c_r1 * xi / (params_.c_r2 + xi));

    const double ratio = (t_.eps - t_.eps_r) / (t_.eps_0 - t_.eps_r);
    const double d1 = 1.0 + std::pow(std::abs(ratio), r);
    const double d2 = std::pow(d1, 1.0 / r);

    const double scale = (t_.sig_0 - t_.sig_r) / (t_.eps_0 - t_.eps_r);
    t_.sig = (b * ratio + (1.0 - b) * ratio / d2) * (t_.sig_0 - t_.sig_r) + t_.sig_r;
    t_.tan = (b + (1.0 - b) / (d1 * d2)) * scale;
}

StressTangent MenegottoPintoSteel::set_trial_strain(double strain) {
    const double e0 = params_.e_s;
    const double f_y = params_.f_y;
    const double e_sh = params_.hardening * e0;
    const double eps_y = f_y / e0;

    t_ = c_;
    t_.eps = strain;
    const double deps = strain - c_.eps;

    if (t_.branch == 0) {
        if (deps == 0.0) {
            t_.sig = 0.0;
            t_.tan = e0;
            return {t_.sig, t_.tan};
        }
        t_.eps_max = eps_y;
        t_.eps_min = -eps_y;
        t_.eps_r = 0.0;
        t_.sig_r = 0.0;
        if (deps < 0.0) {
            t_.branch = 2;
            t_.eps_0 = -eps_y;
            t_.sig_0 = -f_y;
            t_.eps_pl = -eps_y;
        } else {
            t_.branch = 1;
            t_.eps_0 = eps_y;
            t_.sig_0 = f_y;
            t_.eps_pl = eps_y;
        }
    } else if (t_.branch == 2 && deps > 0.0) {
        // reversal towards tension: new transition from the reversal point to
        // the tension hardening asymptote
        t_.branch = 1;
        t_.eps_r = c_.eps;
        t_.sig_r = c_.sig;
        if (c_.eps < t_.eps_min) t_.eps_min = c_.eps;
        t_.eps_0 = (f_y - e_sh * eps_y - t_.sig_r + e0 * t_.eps_r) / (e0 - e_sh);
        t_.sig_0 = f_y + e_sh * (t_.eps_0 - eps_y);
        t_.eps_pl = t_.eps_max;
    } else if (t_.branch == 1 && deps < 0.0) {
        t_.branch = 2;
        t_.eps_r = c_.eps;
        t_.sig_r = c_.sig;
        if (c_.eps > t_.eps_max) t_.eps_max = c_.eps;
        t_.eps_0 = (-f_y + e_sh * eps_y - t_.sig_r + e0 * t_.eps_r) / (e0 - e_sh);
        t_.sig_0 = -f_y + e_sh * (t_.eps_0 + eps_y);
        t_.eps_pl = t_.eps_min;
    }

    evaluate_branch();
    return {t_.sig, t_.tan};
}

void MenegottoPintoSteel::commit() { c_ = t_; }

void MenegottoPintoSteel::revert_to_commit() { t_ = c_; }

std::unique_ptr<UniaxialMaterial> MenegottoPintoSteel::clone() const {
    return std::make_unique<MenegottoPintoSteel>(*this);
}

}  // namespace fsdb
