#pragma once

#include <stdexcept>

#include "fsdb/material.hpp"

namespace fsdb {

/// Parameters of the modified Kent-Park concrete law (compression negative,
/// tension positive).  The compression backbone is the Kent-Park parabola up
/// to (eps_c_peak, f_c_peak), a straight descending branch to
/// (eps_c_ult, f_c_ult) and a residual plateau.  Tension is linear to f_t
/// followed by linear softening with slope e_t_soft.
struct ConcreteParams {
    double f_c_peak;    // peak compressive stress (< 0)
    double eps_c_peak;  // strain at peak (< 0)
    double f_c_ult;     // residual stress (<= 0)
    double eps_c_ult;   // strain at the start of the residual plateau (< eps_c_peak)
    double e_c;         // initial tangent modulus (> 0)
    double f_t;         // tensile strength (>= 0)
    double e_t_soft;    // tension softening slope magnitude (>= 0)

    /// Initial modulus implied by the Kent-Park parabola.
    static double parabola_modulus(double f_c_peak, double eps_c_peak) {
        return 2.0 * f_c_peak / eps_c_peak;
    }

    void validate() const {
        if (!(f_c_peak < 0.0)) throw std::invalid_argument("concrete: f_c_peak must be negative");
        if (!(eps_c_peak < 0.0))
            throw std::invalid_argument("concrete: eps_c_peak must be negative");
        if (!(eps_c_ult < eps_c_peak))
            throw std::invalid_argument("concrete: eps_c_ult must be below eps_c_peak");
        if (!(f_c_ult <= 0.0)) throw std::invalid_argument("concrete: f_c_ult must be <= 0");
        if (!(e_c > 0.0)) throw std::invalid_argument("concrete: e_c must be positive");
        if (f_t < 0.0) throw std::invalid_argument("concrete: f_t must be >= 0");
        if (e_t_soft < 0.0) throw std::invalid_argument("concrete: e_t_soft must be >= 0");
    }
};

/// Modified Kent-Park concrete with the cyclic rules of the Yassin model:
/// straight unloading/reloading lines in compression aimed at the focal
/// zero-stress strain, and secant crack reopening in tension that degrades
/// once softening progresses.
class KentParkConcrete final : public UniaxialMaterial {
public:
    explicit KentParkConcrete(const ConcreteParams& params);

    StressTangent set_trial_strain(double strain) override;
    void commit() override;
    void revert_to_commit() override;

    double strain() const override { return t_eps_; }
    double stress() const override { return t_sig_; }
    double tangent() const override { return t_tan_; }
    double initial_tangent() const override { return params_.e_c; }

    std::unique_ptr<UniaxialMaterial> clone() const override;

    const ConcreteParams& params() const { return params_; }

    /// Monotonic compression backbone (strain <= 0).
    StressTangent compression_envelope(double strain) const;

private:
    ConcreteParams params_;

    // committed state
    double c_eps_ = 0.0, c_sig_ = 0.0, c_tan_;
    double c_eps_min_ = 0.0;   // most negative strain reached
    double c_crack_ = 0.0;     // largest crack opening beyond the focal strain
    // trial state
    double t_eps_ = 0.0, t_sig_ = 0.0, t_tan_;
    double t_eps_min_ = 0.0, t_crack_ = 0.0;

    double focal_strain(double eps_min) const;
    StressTangent tension_envelope(double crack_strain) const;
};

}  // namespace fsdb
