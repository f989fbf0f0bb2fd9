#pragma once

#include <memory>

namespace fsdb {

struct StressTangent {
    double stress = 0.0;
    double tangent = 0.0;
};

/// Uniaxial stress-strain law with incremental trial/commit state handling.
///
/// set_trial_strain() is a pure function of the committed state and the
/// trial strain: calling it repeatedly with different strains from the same
/// committed state never accumulates history.  commit() promotes the trial
/// state; revert_to_commit() discards it.
class UniaxialMaterial {
public:
    virtual ~UniaxialMaterial() = default;

    virtual StressTangent set_trial_strain(double strain) = 0;
    virtual void commit() = 0;
    virtual void revert_to_commit() = 0;

    virtual double strain() const = 0;
    virtual double stress() const = 0;
    virtual double tangent() const = 0;
    virtual double initial_tangent() const = 0;

    virtual std::unique_ptr<UniaxialMaterial> clone() const = 0;
};

class LinearElasticMaterial final : public UniaxialMaterial {
public:
    explicit LinearElasticMaterial(double e) : e_(e) {}

    StressTangent set_trial_strain(double strain) override {
        eps_ = strain;
        return {e_ * strain, e_};
    }
    void commit() override { eps_c_ = eps_; }
    void revert_to_commit() override { eps_ = eps_c_; }

    double strain() const override { return eps_; }
    double stress() const override { return e_ * eps_; }
    double tangent() const override { return e_; }
    double initial_tangent() const override { return e_; }

    std::unique_ptr<UniaxialMaterial> clone() const override {
        return std::make_unique<LinearElasticMaterial>(e_);
    }

private:
    double e_;
    double eps_ = 0.0, eps_c_ = 0.0;
};

}  // namespace fsdb
