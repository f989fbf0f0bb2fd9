#include "fsdb/concrete.hpp"

#include <cmath>

namespace fsdb {

KentParkConcrete::KentParkConcrete(const ConcreteParams& params) : params_(params) {
    params_.validate();
    c_tan_ = t_tan_ = params_.e_c;
}

StressTangent KentParkConcrete::compression_envelope(double strain) const {
    const double f_c = params_.f_c_peak;
    const double e0 = params_.eps_c_peak;
    if (strain >= e0) {
        const double eta = strain / e0;
        return {f_c * (2.0 * eta - eta * eta), (2.0 * f_c / e0) * (1.0 - eta)};
    }
    if (strain >= params_.eps_c_ult) {
        const double slope = (params_.f_c_ult - f_c) / (params_.eps_c_ult - e0);
        return {f_c + slope * (strain - e0), slope};
    }
    // residual plateau; keep a tiny tangent so section stiffness never
    // degenerates completely
    return {params_.f_c_ult, 1e-9 * params_.e_c};
}

double KentParkConcrete::focal_strain(double eps_min) const {
    // Zero-stress strain after unloading from eps_min (Yassin rule).
    const double r = eps_min / params_.eps_c_peak;  // >= 0
    const double f = (r < 2.0) ? 0.145 * r * r + 0.13 * r : 0.707 * (r - 2.0) + 0.834;
    return f * params_.eps_c_peak;
}

StressTangent KentParkConcrete::tension_envelope(double crack_strain) const {
    const double e_c = params_.e_c;
    if (params_.f_t <= 0.0) return {0.0, 1e-9 * e_c};
    const double eps_t0 = params_.f_t / e_c;
    if (crack_strain <= eps_t0) return {e_c * crack_strain, e_c};
    if (params_.e_t_soft <= 0.0) return {params_.f_t, 1e-9 * e_c};
    const double s = params_.f_t - params_.e_t_soft * (crack_strain - eps_t0);
    if (s > 0.0) return {s, -params_.e_t_soft};
    return {0.0, 1e-9 * e_c};
}

StressTangent KentParkConcrete::set_trial_strain(double strain) {
    t_eps_min_ = c_eps_min_;
    t_crack_ = c_crack_;
    t_eps_ = strain;

    const double deps = strain - c_eps_;
    if (deps == 0.0) {
        t_sig_ = c_sig_;
        t_tan_ = c_tan_;
        return {t_sig_, t_tan_};
    }

    if (strain < t_eps_min_) {
        // advancing on the compression backbone
        const auto env = compression_envelope(strain);
        t_eps_min_ = strain;
        t_sig_ = env.stress;
        t_tan_ = env.tangent;
    } else {
        const double ept = focal_strain(t_eps_min_);
        if (strain <= ept) {
            // unloading/reloading inside the previously compressed range:
            // elastic trial from the committed point, clipped between the
            // reloading line through (eps_min, envelope) and (ept, 0) and the
            // half-slope unloading bound through (ept, 0)
            const double sig_env = compression_envelope(t_eps_min_).stress;
            const double denom = t_eps_min_ - ept;
            const double er = (denom < 0.0) ? sig_env / denom : params_.e_c;
            const double sig_lo = er * (strain - ept);
            const double sig_hi = 0.5 * er * (strain - ept);
            t_sig_ = c_sig_ + params_.e_c * deps;
            t_tan_ = params_.e_c;
            if (t_sig_ <= sig_lo) {
                t_sig_ = sig_lo;
                t_tan_ = er;
            }
            if (t_sig_ >= sig_hi) {
                t_sig_ = sig_hi;
                t_tan_ = 0.5 * er;
            }
        } else {
            // tension, measured from the crack-closure (focal) strain
            const double crack = strain - ept;
            if (crack <= t_crack_) {
                // reopening within the existing crack: secant to the last
                // envelope point (source of the pinched response)
                const auto tip = tension_envelope(t_crack_);
                const double slope = (t_crack_ > 0.0) ? tip.stress / t_crack_ : params_.e_c;
                t_sig_ = slope * crack;
                t_tan_ = slope;
            } else {
                const auto env = tension_envelope(crack);
                t_sig_ = env.stress;
                t_tan_ = env.tangent;
                t_crack_ = crack;
            }
        }
    }
    return {t_sig_, t_tan_};
}

void KentParkConcrete::commit() {
    c_eps_ = t_eps_;
    c_sig_ = t_sig_;
    c_tan_ = t_tan_;
    c_eps_min_ = t_eps_min_;
    c_crack_ = t_crack_;
}

void KentParkConcrete::revert_to_commit() {
    t_eps_ = c_eps_;
    t_sig_ = c_sig_;
    t_tan_ = c_tan_;
    t_eps_min_ = c_eps_min_;
    t_crack_ = c_crack_;
}

std::unique_ptr<UniaxialMaterial> KentParkConcrete::clone() const {
    return std::make_unique<KentParkConcrete>(*this);
}

}  // namespace fsdb
