#pragma once

#include <stdexcept>

#include "fsdb/material.hpp"

namespace fsdb {

/// Menegotto-Pinto steel parameters.  r0 is the initial curvature of the
/// elastic-to-yield transition; c_r1 and c_r2 degrade it with the plastic
/// excursion of the previous half cycle.  Isotropic hardening is not
/// modelled.
struct SteelParams {
    double e_s;          // Young modulus (> 0)
    double f_y;          // yield stress (> 0)
    double hardening;    // hardening ratio b in [0, 1)
    double r0 = 15.0;
    double c_r1 = 0.925;
    double c_r2 = 0.15;

    void validate() const {
        if (!(e_s > 0.0)) throw std::invalid_argument("steel: e_s must be positive");
        if (!(f_y > 0.0)) throw std::invalid_argument("steel: f_y must be positive");
        if (hardening < 0.0 || hardening >= 1.0)
            throw std::invalid_argument("steel: hardening ratio must be in [0, 1)");
        if (!(r0 > 0.0)) throw std::invalid_argument("steel: r0 must be positive");
    }
};

/// Menegotto-Pinto hysteretic steel: smooth transition curves between the
/// elastic and hardening asymptotes, with the transition curvature updated
/// after every strain reversal.
class MenegottoPintoSteel final : public UniaxialMaterial {
public:
    explicit MenegottoPintoSteel(const SteelParams& params);

    StressTangent set_trial_strain(double strain) override;
    void commit() override;
    void revert_to_commit() override;

    double strain() const override { return t_.eps; }
    double stress() const override { return t_.sig; }
    double tangent() const override { return t_.tan; }
    double initial_tangent() const override { return params_.e_s; }

    std::unique_ptr<UniaxialMaterial> clone() const override;

    const SteelParams& params() const { return params_; }

private:
    struct State {
        double eps = 0.0, sig = 0.0, tan = 0.0;
        double eps_max = 0.0, eps_min = 0.0;  // historic extremes
        double eps_pl = 0.0;                  // extreme controlling the curvature update
        double eps_0 = 0.0, sig_0 = 0.0;      // asymptote intersection of the branch
        double eps_r = 0.0, sig_r = 0.0;      // last reversal point
        int branch = 0;                       // 0 virgin, 1 loading up, 2 loading down
    };

    SteelParams params_;
    State c_, t_;

    void evaluate_branch();
};

}  // namespace fsdb
