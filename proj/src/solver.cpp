#include "fsdb/solver.hpp"

#include <algorithm>
#include <cmath>

namespace fsdb {

double AnalysisResult::peak_force() const {
    double peak = 0.0;
    for (const auto& s : steps) peak = std::max(peak, s.control_force);
    return peak;
}

double AnalysisResult::min_force() const {
    double low = 0.0;
    for (const auto& s : steps) low = std::min(low, s.control_force);
    return low;
}

Analysis::Analysis(Model model, ConvergenceSettings conv)
    : model_(std::move(model)), conv_(conv) {
    model_.validate();
    u_committed_ = Eigen::VectorXd::Zero(model_.dof_count());
    f_int_committed_ = Eigen::VectorXd::Zero(model_.dof_count());
}

Eigen::VectorXd Analysis::external_loads(double factor) const {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(model_.dof_count());
    for (const auto& l : model_.loads) {
        p(Model::dof_index(l.node, Dof::ux)) += factor * l.fx;
        p(Model::dof_index(l.node, Dof::uz)) += factor * l.fz;
        p(Model::dof_index(l.node, Dof::phi)) += factor * l.m;
    }
    return p;
}

Eigen::VectorXd Analysis::state_determination(const Eigen::VectorXd& u) {
    Eigen::VectorXd f_int = Eigen::VectorXd::Zero(model_.dof_count());
    for (auto& m : model_.members) {
        Vector6 qg;
        for (int a = 0; a < 3; ++a) {
            qg(a) = u(3 * m.node_i + a);
            qg(3 + a) = u(3 * m.node_j + a);
        }
        const Vector6 f_local = m.element->state_determination(m.to_local(qg));
        if (!m.element->inner_loop_converged())
            throw NonConvergenceError("axial equilibration loop did not converge");
        const Vector6 f_global = m.to_global(f_local);
        for (int a = 0; a < 3; ++a) {
            f_int(3 * m.node_i + a) += f_global(a);
            f_int(3 * m.node_j + a) += f_global(3 + a);
        }
    }
    return f_int;
}

void Analysis::assemble(const Eigen::VectorXd& u, Eigen::MatrixXd& k, Eigen::VectorXd& f_int) {
    f_int = state_determination(u);
    k = Eigen::MatrixXd::Zero(model_.dof_count(), model_.dof_count());
    for (auto& m : model_.members) {
        const Matrix6 t = m.transformation();
        const Matrix6 kg = t.transpose() * m.element->stiffness() * t;
        const int map[6] = {3 * m.node_i,     3 * m.node_i + 1, 3 * m.node_i + 2,
                            3 * m.node_j,     3 * m.node_j + 1, 3 * m.node_j + 2};
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) k(map[a], map[b]) += kg(a, b);
    }
}

std::vector<bool> Analysis::fixed_mask(const std::optional<int>& control_dof) const {
    std::vector<bool> fixed(model_.dof_count(), false);
    for (const auto& s : model_.supports) {
        if (s.ux) fixed[Model::dof_index(s.node, Dof::ux)] = true;
        if (s.uz) fixed[Model::dof_index(s.node, Dof::uz)] = true;
        if (s.phi) fixed[Model::dof_index(s.node, Dof::phi)] = true;
    }
    if (control_dof) fixed[*control_dof] = true;
    return fixed;
}

bool Analysis::solve_step(const StepTarget& target, int& iterations, double& residual_norm) {
    const int n = model_.dof_count();
    const Eigen::VectorXd p_ext = external_loads(target.load_factor);
    const auto fixed = fixed_mask(target.control_dof);

    std::vector<int> free;
    free.reserve(n);
    for (int i = 0; i < n; ++i)
        if (!fixed[i]) free.push_back(i);
    const int nf = static_cast<int>(free.size());

    Eigen::VectorXd u = u_committed_;
    if (target.control_dof) u(*target.control_dof) = target.control_value;

    Eigen::MatrixXd k;
    Eigen::VectorXd f_int;

    const auto solve_free = [&](const Eigen::VectorXd& rhs_full,
                                const Eigen::VectorXd& du_presc) -> Eigen::VectorXd {
        Eigen::MatrixXd kff(nf, nf);
        Eigen::VectorXd rf(nf);
        for (int a = 0; a < nf; ++a) {
            rf(a) = rhs_full(free[a]);
            for (int b = 0; b < nf; ++b) kff(a, b) = k(free[a], free[b]);
            // prescribed increments couple into the free equations
            double coupling = 0.0;
            for (int i = 0; i < n; ++i)
                if (fixed[i] && du_presc(i) != 0.0) coupling += k(free[a], i) * du_presc(i);
            rf(a) -= coupling;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(kff);
        if (!lu.isInvertible()) throw SingularSystemError();
        return lu.solve(rf);
    };

    // Predictor: push the prescribed control increment through the committed
    // tangent.
    assemble(u_committed_, k, f_int);
    {
        Eigen::VectorXd du_presc = Eigen::VectorXd::Zero(n);
        if (target.control_dof)
            du_presc(*target.control_dof) =
                target.control_value - u_committed_(*target.control_dof);
        const Eigen::VectorXd rhs = p_ext - f_int;
        const Eigen::VectorXd duf = solve_free(rhs, du_presc);
        for (int a = 0; a < nf; ++a) u(free[a]) += duf(a);
    }

    const double load_scale = p_ext.norm();
    double r_prev = std::numeric_limits<double>::max();
    double relax = 1.0;
    for (int it = 1; it <= conv_.max_iterations; ++it) {
        assemble(u, k, f_int);
        Eigen::VectorXd residual = p_ext - f_int;
        double r_norm = 0.0;
        for (int i : free) r_norm += residual(i) * residual(i);
        r_norm = std::sqrt(r_norm);

        double reaction_scale = 0.0;
        for (int i = 0; i < n; ++i)
            if (fixed[i]) reaction_scale = std::max(reaction_scale, std::abs(residual(i)));
        const double scale = std::max({load_scale, reaction_scale, 1.0});

        const Eigen::VectorXd du_zero = Eigen::VectorXd::Zero(n);
        const Eigen::VectorXd duf = solve_free(residual, du_zero);

        // Accept before applying the correction so the committed trial state
        // matches the assembled configuration exactly.
        const double du_norm = duf.norm();
        const double u_norm = std::max(u.norm(), 1e-12);
        if (r_norm <= conv_.tol_residual * scale &&
            du_norm <= conv_.tol_displacement * u_norm) {
            iterations = it;
            residual_norm = r_norm;
            total_iterations_ += it;
            u_committed_ = u;
            f_int_committed_ = f_int;
            load_factor_ = target.load_factor;
            return true;
        }

        // Damp the update when the residual stagnates; full Newton cycles
        // across constitutive branch switches near corner states, and the
        // relaxation recovers only after real progress.
        if (r_norm > 0.99 * r_prev)
            relax = std::max(0.5 * relax, 1.0 / 256.0);
        else if (r_norm < 0.25 * r_prev)
            relax = std::min(1.0, 2.0 * relax);
        r_prev = std::min(r_prev, r_norm);
        for (int a = 0; a < nf; ++a) u(free[a]) += relax * duf(a);
    }
    return false;
}

void Analysis::solve_step_adaptive(const StepTarget& target) {
    struct Pending {
        StepTarget target;
        int depth;
    };
    const double lf0 = load_factor_;
    const double cv0 = target.control_dof ? u_committed_(*target.control_dof) : 0.0;

    std::vector<Pending> stack{{target, 0}};
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();

        int iterations = 0;
        double residual_norm = 0.0;
        bool ok = false;
        try {
            ok = solve_step(cur.target, iterations, residual_norm);
        } catch (const NonConvergenceError&) {
            ok = false;
        }
        if (ok) {
            commit_step(iterations, residual_norm);
            continue;
        }

        // rollback and halve
        for (auto& m : model_.members) m.element->revert_to_commit();
        if (cur.depth >= conv_.max_halvings)
            throw NonConvergenceError("step failed after maximum halvings");

        StepTarget first = cur.target, second = cur.target;
        const double lf_from = load_factor_;
        const double cv_from = cur.target.control_dof
                                   ? u_committed_(*cur.target.control_dof)
                                   : 0.0;
        first.load_factor = 0.5 * (lf_from + cur.target.load_factor);
        first.control_value = 0.5 * (cv_from + cur.target.control_value);
        stack.push_back({second, cur.depth + 1});
        stack.push_back({first, cur.depth + 1});
    }
    (void)lf0;
    (void)cv0;
}

void Analysis::commit_step(int iterations, double residual_norm) {
    for (auto& m : model_.members) m.element->commit();
    record_step(iterations, residual_norm);
}

void Analysis::record_step(int iterations, double residual_norm) {
    StepRecord rec;
    rec.step = ++step_counter_;
    rec.iterations = iterations;
    rec.residual_norm = residual_norm;
    if (active_control_) {
        const int dof = Model::dof_index(active_control_->node, active_control_->dof);
        rec.control_displacement = u_committed_(dof);
        rec.control_force = reaction(active_control_->node, active_control_->dof);
    }
    rec.displacements.assign(u_committed_.data(), u_committed_.data() + u_committed_.size());
    int member_id = 0;
    for (const auto& m : model_.members) {
        const auto states = m.element->gauss_states();
        for (int gi = 0; gi < static_cast<int>(states.size()); ++gi) {
            const auto& g = states[gi];
            FieldRecord f;
            f.member = member_id;
            f.gauss_index = gi;
            f.x_norm = g.x_norm;
            f.eps0 = g.eps0;
            f.chi = g.chi;
            f.axial = g.axial;
            f.moment = g.moment;
            f.beta_x = g.beta_x;
            f.beta_z = g.beta_z;
            rec.fields.push_back(f);
        }
        ++member_id;
    }
    records_.push_back(std::move(rec));
}

double Analysis::reaction(int node, Dof d) const {
    const int i = Model::dof_index(node, d);
    return f_int_committed_(i) - external_loads(load_factor_)(i);
}

void Analysis::apply_loads(int steps) {
    for (int s = 1; s <= steps; ++s) {
        StepTarget t;
        t.load_factor = load_factor_ + (1.0 - load_factor_) * double(s) / double(steps);
        solve_step_adaptive(t);
    }
    load_factor_ = 1.0;
}

void Analysis::ramp_control(const ControlDof& control, double target, int steps) {
    active_control_ = control;
    const int dof = Model::dof_index(control.node, control.dof);
    const double from = u_committed_(dof);
    for (int s = 1; s <= steps; ++s) {
        StepTarget t;
        t.load_factor = load_factor_;
        t.control_dof = dof;
        t.control_value = from + (target - from) * double(s) / double(steps);
        solve_step_adaptive(t);
    }
}

AnalysisResult Analysis::run_pushover(const ControlDof& control, double target, int steps,
                                      int preload_steps) {
    active_control_ = control;
    if (!model_.loads.empty()) apply_loads(preload_steps);
    ramp_control(control, target, steps);
    return take_result();
}

AnalysisResult Analysis::run_cyclic(const ControlDof& control,
                                    const std::vector<double>& amplitudes, double increment,
                                    int preload_steps) {
    active_control_ = control;
    if (!model_.loads.empty()) apply_loads(preload_steps);
    const int dof = Model::dof_index(control.node, control.dof);
    for (const double a : amplitudes) {
        for (const double target : {+a, -a, 0.0}) {
            const double from = u_committed_(dof);
            const double span = std::abs(target - from);
            const int steps = std::max(1, static_cast<int>(std::round(span / increment)));
            ramp_control(control, target, steps);
        }
    }
    return take_result();
}

AnalysisResult Analysis::take_result() {
    AnalysisResult r;
    r.steps = std::move(records_);
    records_.clear();
    return r;
}

}  // namespace fsdb
