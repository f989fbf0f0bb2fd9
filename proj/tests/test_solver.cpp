#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#include "fsdb/solver.hpp"
#include "oracles.hpp"

using namespace fsdb;

namespace {

FibreSection elastic_rect(double e, double width, double height, int stripes = 40) {
    FibreSection s;
    const double t = height / stripes;
    for (int i = 0; i < stripes; ++i) {
        const double z = -0.5 * height + (i + 0.5) * t;
        s.add_fibre(z, width * t, std::make_unique<LinearElasticMaterial>(e));
    }
    s.finalize();
    return s;
}

Model cantilever(int n_elements, double length, const FibreSection& section,
                 const ElementSettings& settings) {
    Model m;
    for (int i = 0; i <= n_elements; ++i)
        m.nodes.push_back(Node{length * double(i) / n_elements, 0.0});
    for (int i = 0; i < n_elements; ++i) m.add_member(i, i + 1, section, settings);
    m.supports.push_back(Support{0, true, true, true});
    return m;
}

ElementSettings elastic_settings() {
    ElementSettings st;
    st.axial_equilibration = false;
    return st;
}

}  // namespace

TEST_CASE("elastic cantilever: textbook tip response under load control") {
    const double e = 30e9, width = 0.3, height = 0.4, length = 3.0;
    const auto section = elastic_rect(e, width, height);
    Model m = cantilever(1, length, section, elastic_settings());
    const double force = 1.0e4;
    m.loads.push_back(NodalLoad{1, 0.0, force, 0.0});

    Analysis an(std::move(m));
    an.apply_loads(1);
    const double expected = force * length * length * length / (3.0 * section.ei_ref());
    CHECK(an.displacement(1, Dof::uz) == doctest::Approx(expected).epsilon(1e-10));

    // every step of an elastic system converges in one iteration
    for (const auto& r : an.records()) CHECK(r.iterations <= 1);
}

TEST_CASE("two colinear elements match one element exactly in the linear range") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    const double force = 2.0e4, length = 3.0;

    Model m1 = cantilever(1, length, section, elastic_settings());
    m1.loads.push_back(NodalLoad{1, -5.0e4, force, 0.0});
    Analysis a1(std::move(m1));
    a1.apply_loads(2);

    Model m2 = cantilever(2, length, section, elastic_settings());
    m2.loads.push_back(NodalLoad{2, -5.0e4, force, 0.0});
    Analysis a2(std::move(m2));
    a2.apply_loads(2);

    CHECK(a1.displacement(1, Dof::uz) ==
          doctest::Approx(a2.displacement(2, Dof::uz)).epsilon(1e-10));
    CHECK(a1.displacement(1, Dof::ux) ==
          doctest::Approx(a2.displacement(2, Dof::ux)).epsilon(1e-10));
    CHECK(a1.displacement(1, Dof::phi) ==
          doctest::Approx(a2.displacement(2, Dof::phi)).epsilon(1e-10));
}

TEST_CASE("displacement control recovers the conjugate reaction") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    const double length = 3.0;
    Model m = cantilever(1, length, section, elastic_settings());
    Analysis an(std::move(m));

    const double target = 0.01;
    an.ramp_control(ControlDof{1, Dof::uz}, target, 5);
    const double k_tip = 3.0 * section.ei_ref() / (length * length * length);
    CHECK(an.displacement(1, Dof::uz) == doctest::Approx(target).epsilon(1e-12));
    CHECK(an.reaction(1, Dof::uz) == doctest::Approx(k_tip * target).epsilon(1e-10));

    // capacity records carry the same pair
    const auto& rec = an.records().back();
    CHECK(rec.control_displacement == doctest::Approx(target));
    CHECK(rec.control_force == doctest::Approx(k_tip * target).epsilon(1e-10));
}

TEST_CASE("global equilibrium: support reactions balance applied loads") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    Model m = cantilever(2, 3.0, section, elastic_settings());
    m.loads.push_back(NodalLoad{2, -3.0e4, 1.5e4, 0.0});
    Analysis an(std::move(m));
    an.apply_loads(3);
    CHECK(an.reaction(0, Dof::ux) == doctest::Approx(3.0e4).epsilon(1e-8));
    CHECK(an.reaction(0, Dof::uz) == doctest::Approx(-1.5e4).epsilon(1e-8));
}

TEST_CASE("unrestrained and under-restrained models are rejected") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    Model m = cantilever(1, 3.0, section, elastic_settings());
    m.supports.clear();
    CHECK_THROWS_AS(Analysis(std::move(m)), std::invalid_argument);

    // three fixed dofs that still leave a mechanism: singular tangent
    Model m2 = cantilever(1, 3.0, section, elastic_settings());
    m2.supports.clear();
    m2.supports.push_back(Support{0, true, true, false});
    m2.supports.push_back(Support{1, true, false, false});
    m2.loads.push_back(NodalLoad{1, 0.0, 1.0e3, 0.0});
    Analysis a2(std::move(m2));
    CHECK_THROWS_AS(a2.apply_loads(1), SingularSystemError);
}

TEST_CASE("inclined member transforms consistently") {
    // 45-degree cantilever loaded along its axis: pure extension
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    Model m;
    const double c = std::sqrt(0.5) * 3.0;
    m.nodes.push_back(Node{0.0, 0.0});
    m.nodes.push_back(Node{c, c});
    m.add_member(0, 1, section, elastic_settings());
    m.supports.push_back(Support{0, true, true, true});
    const double f = 1.0e4;
    m.loads.push_back(NodalLoad{1, f * std::sqrt(0.5), f * std::sqrt(0.5), 0.0});
    Analysis an(std::move(m));
    an.apply_loads(1);
    const double ext = f * 3.0 / section.ea_ref();
    CHECK(an.displacement(1, Dof::ux) == doctest::Approx(ext * std::sqrt(0.5)).epsilon(1e-9));
    CHECK(an.displacement(1, Dof::uz) == doctest::Approx(ext * std::sqrt(0.5)).epsilon(1e-9));
}

TEST_CASE("cyclic protocol on an elastic model encloses no area") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    Model m = cantilever(1, 3.0, section, elastic_settings());
    Analysis an(std::move(m));
    const auto res = an.run_cyclic(ControlDof{1, Dof::uz}, {0.01, 0.02}, 0.002, 1);

    double area = 0.0;
    double u_prev = 0.0, f_prev = 0.0;
    for (const auto& s : res.steps) {
        area += 0.5 * (s.control_force + f_prev) * (s.control_displacement - u_prev);
        u_prev = s.control_displacement;
        f_prev = s.control_force;
    }
    const double f_ref = res.peak_force();
    CHECK(std::abs(area) < 1e-8 * f_ref * 0.02);
}

TEST_CASE("failed steps leave the committed state untouched") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    Model m = cantilever(1, 3.0, section, elastic_settings());
    Analysis an(std::move(m));
    an.ramp_control(ControlDof{1, Dof::uz}, 0.005, 2);
    const double u_before = an.displacement(1, Dof::uz);
    const double r_before = an.reaction(1, Dof::uz);
    const int steps_before = an.total_steps();

    // an impossible tolerance forces StepFailure through all halvings
    ConvergenceSettings strict;
    strict.tol_residual = 1e-30;
    strict.tol_displacement = 1e-30;
    strict.max_iterations = 2;
    strict.max_halvings = 2;
    Model m2 = cantilever(1, 3.0, elastic_rect(30e9, 0.3, 0.4), elastic_settings());
    Analysis a2(std::move(m2), strict);
    CHECK_THROWS_AS(a2.ramp_control(ControlDof{1, Dof::uz}, 0.005, 1), NonConvergenceError);

    // the original analysis is still usable and consistent
    an.ramp_control(ControlDof{1, Dof::uz}, 0.006, 1);
    CHECK(an.displacement(1, Dof::uz) == doctest::Approx(0.006));
    CHECK(an.total_steps() == steps_before + 1);
    CHECK(u_before == doctest::Approx(0.005));
    CHECK(r_before == doctest::Approx(an.reaction(1, Dof::uz) * 5.0 / 6.0).epsilon(1e-9));
}
