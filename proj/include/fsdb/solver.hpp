#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsdb/model.hpp"

namespace fsdb {

class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError() : std::runtime_error("singular tangent system") {}
};

class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceSettings {
    double tol_residual = 1e-5;      // relative to the external force scale
    double tol_displacement = 1e-8;  // relative correction size
    int max_iterations = 50;
    int max_halvings = 8;
};

struct FieldRecord {
    int member = 0;
    int gauss_index = 0;
    double x_norm = 0.0;
    double eps0 = 0.0, chi = 0.0;
    double axial = 0.0, moment = 0.0;
    double beta_x = 0.0, beta_z = 0.0;
};

struct StepRecord {
    int step = 0;
    double control_displacement = 0.0;
    double control_force = 0.0;  // reaction conjugate to the control dof
    int iterations = 0;
    double residual_norm = 0.0;
    std::vector<double> displacements;  // full nodal vector
    std::vector<FieldRecord> fields;
};

struct AnalysisResult {
    std::vector<StepRecord> steps;
    double peak_force() const;
    double min_force() const;
};

/// Incremental Newton-Raphson driver: load control for the (constant) nodal
/// loads and displacement control on a chosen dof, with adaptive step
/// halving on non-convergence.  Committed state advances only on converged
/// steps; a failed step leaves materials and profiles at the last commit.
class Analysis {
public:
    Analysis(Model model, ConvergenceSettings conv = {});

    Model& model() { return model_; }
    const Model& model() const { return model_; }

    /// Ramps the constant nodal loads from zero to full in `steps` equal
    /// load-control increments.
    void apply_loads(int steps = 10);

    /// Moves the control dof to `target` in `steps` equal increments under
    /// displacement control (constant loads held).
    void ramp_control(const ControlDof& control, double target, int steps);

    /// Full pushover: preload then monotonic ramp of the control dof.
    AnalysisResult run_pushover(const ControlDof& control, double target, int steps,
                                int preload_steps = 10);

    /// Cyclic protocol: preload, then for each amplitude a full cycle
    /// 0 -> +a -> -a -> 0 discretized at `increment` per step.
    AnalysisResult run_cyclic(const ControlDof& control, const std::vector<double>& amplitudes,
                              double increment, int preload_steps = 10);

    AnalysisResult take_result();
    const std::vector<StepRecord>& records() const { return records_; }

    double displacement(int node, Dof d) const {
        return u_committed_(Model::dof_index(node, d));
    }

    /// Reaction force at a supported or controlled dof (internal minus
    /// applied external force).
    double reaction(int node, Dof d) const;

    int total_iterations() const { return total_iterations_; }
    int total_steps() const { return static_cast<int>(records_.size()); }

private:
    Model model_;
    ConvergenceSettings conv_;
    Eigen::VectorXd u_committed_;
    Eigen::VectorXd f_int_committed_;
    double load_factor_ = 0.0;
    std::vector<StepRecord> records_;
    int step_counter_ = 0;
    int total_iterations_ = 0;
    std::optional<ControlDof> active_control_;

    Eigen::VectorXd external_loads(double factor) const;
    void assemble(const Eigen::VectorXd& u, Eigen::MatrixXd& k, Eigen::VectorXd& f_int);
    Eigen::VectorXd state_determination(const Eigen::VectorXd& u);

    struct StepTarget {
        double load_factor = 0.0;
        std::optional<int> control_dof;
        double control_value = 0.0;
    };
    bool solve_step(const StepTarget& target, int& iterations, double& residual_norm);
    void solve_step_adaptive(const StepTarget& target);
    void commit_step(int iterations, double residual_norm);
    void record_step(int iterations, double residual_norm);
    std::vector<bool> fixed_mask(const std::optional<int>& control_dof) const;
};

}  // namespace fsdb
