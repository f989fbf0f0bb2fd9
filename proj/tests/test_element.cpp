#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "fsdb/element.hpp"
#include "fsdb/material.hpp"
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

ElementSettings elastic_settings(Formulation f = Formulation::FSDB, int ips = 10) {
    ElementSettings st;
    st.formulation = f;
    st.integration_points = ips;
    st.axial_equilibration = false;
    return st;
}

// Cantilever tip flexibility from the element stiffness with node i fixed.
Eigen::Vector3d cantilever_tip_solution(const FrameElement& el, const Eigen::Vector3d& tip_force) {
    const Matrix6 k = el.stiffness();
    const Eigen::Matrix3d kjj = k.block<3, 3>(3, 3);
    return kjj.ldlt().solve(tip_force);
}

}  // namespace

TEST_CASE("elastic stiffness equals the closed-form matrix") {
    const double e = 30e9, b = 0.3, h = 0.4, length = 3.0;
    const auto section = elastic_rect(e, b, h);
    for (int ips : {3, 4, 7, 10}) {
        FrameElement el(length, section, elastic_settings(Formulation::FSDB, ips));
        const Matrix6 k = el.stiffness();
        const Matrix6 k_exact =
            oracle::euler_bernoulli_stiffness(section.ea_ref(), section.ei_ref(), length);
        CHECK((k - k_exact).cwiseAbs().maxCoeff() < 1e-10 * k_exact.cwiseAbs().maxCoeff());
        CHECK((k - k.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(k(1, 1) ==
              doctest::Approx(12.0 * section.ei_ref() / (length * length * length)).epsilon(1e-10));
    }
}

TEST_CASE("rigid modes are in the stiffness nullspace") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    const double length = 3.0;
    FrameElement el(length, section, elastic_settings());
    const Matrix6 k = el.stiffness();
    Vector6 tx, tz, rot;
    tx << 1, 0, 0, 1, 0, 0;
    tz << 0, 1, 0, 0, 1, 0;
    rot << 0, 0, -1, 0, length, -1;
    const double scale = k.cwiseAbs().maxCoeff();
    CHECK((k * tx).cwiseAbs().maxCoeff() < 1e-9 * scale);
    CHECK((k * tz).cwiseAbs().maxCoeff() < 1e-9 * scale);
    CHECK((k * rot).cwiseAbs().maxCoeff() < 1e-9 * scale * length);
}

TEST_CASE("state determination: zero state, pure axial, elastic consistency") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    const double length = 3.0;
    FrameElement el(length, section, elastic_settings());

    CHECK(el.state_determination(Vector6::Zero()).cwiseAbs().maxCoeff() == 0.0);

    const double delta = 1.7e-3;
    Vector6 q = Vector6::Zero();
    q(3) = delta;
    const Vector6 f = el.state_determination(q);
    const double ea = section.ea_ref();
    CHECK(f(0) == doctest::Approx(-ea * delta / length).epsilon(1e-12));
    CHECK(f(3) == doctest::Approx(ea * delta / length).epsilon(1e-12));
    CHECK(std::abs(f(1)) < 1e-9 * ea * delta / length);

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1e-3, 1e-3);
    for (int t = 0; t < 10; ++t) {
        Vector6 qr;
        for (int i = 0; i < 6; ++i) qr(i) = u(rng);
        const Vector6 fr = el.state_determination(qr);
        const Vector6 fk = el.stiffness() * qr;
        CHECK((fr - fk).cwiseAbs().maxCoeff() < 1e-10 * fk.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("work consistency of the resisting-force integral") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    FrameElement el(3.0, section, elastic_settings());
    Vector6 q;
    q << 1e-4, -2e-3, 1.5e-3, 3e-4, 2.2e-3, -0.7e-3;
    const Vector6 f = el.state_determination(q);
    double internal = 0.0;
    const auto& rule = el.quadrature();
    for (int r = 0; r < rule.n; ++r) {
        const auto& s = el.section(r);
        const auto res = s.resultants();
        internal += 3.0 * rule.weights[r] *
                    (s.trial_strain().eps0 * res.axial + s.trial_strain().chi * res.moment);
    }
    CHECK(q.dot(f) == doctest::Approx(internal).epsilon(1e-10));
}

// Builds a section with independent axial/flexural stiffness targets: a
// symmetric fibre pair supplies the flexural part, a central fibre tops up
// the axial part.
static FibreSection section_with(double ea_target, double ei_target) {
    FibreSection s;
    const double z0 = 1.0, a = 0.01;
    const double e_pair = ei_target / (2.0 * a * z0 * z0);
    const double e_mid = (ea_target - 2.0 * e_pair * a) / a;
    s.add_fibre(+z0, a, std::make_unique<LinearElasticMaterial>(e_pair));
    s.add_fibre(-z0, a, std::make_unique<LinearElasticMaterial>(e_pair));
    s.add_fibre(0.0, a, std::make_unique<LinearElasticMaterial>(e_mid));
    s.finalize();
    return s;
}

TEST_CASE("stepped elastic profiles reproduce the flexibility oracle") {
    // Random decay profiles imposed on the element, with matching
    // reduced-stiffness sections; the cantilever tip solution from the
    // element stiffness must agree with piecewise analytic flexibility
    // integration.
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> beta(0.0, 0.9);
    const double ea_ref = 3.6e9, ei_ref = 4.8e7, length = 3.0;

    for (int trial = 0; trial < 20; ++trial) {
        const int ips = 3;
        const auto rule = QuadratureRule::gauss_lobatto(ips);
        std::vector<double> bx(ips), bz(ips);
        std::vector<FibreSection> sections;
        oracle::SteppedBeam beam;
        beam.length = length;
        double acc = 0.0;
        for (int i = 0; i < ips; ++i) {
            bx[i] = beta(rng);
            bz[i] = beta(rng);
            beam.x_start.push_back(acc * length);
            acc += rule.weights[i];
            beam.ea.push_back(ea_ref * (1.0 - bx[i]));
            beam.ei.push_back(ei_ref * (1.0 - bz[i]));
            sections.push_back(section_with(beam.ea.back(), beam.ei.back()));
        }

        ElementSettings st = elastic_settings(Formulation::FSDB, ips);
        st.reference_ea = ea_ref;
        st.reference_ei = ei_ref;
        FrameElement el(length, std::move(sections), st);
        el.set_profile_betas(bx, bz);

        const double force = 1.0e4;
        const Eigen::Vector3d tip = cantilever_tip_solution(el, {0.0, force, 0.0});
        const double expected = oracle::cantilever_tip_deflection(beam, force);
        CHECK(tip(1) == doctest::Approx(expected).epsilon(1e-9));

        const Eigen::Vector3d axial = cantilever_tip_solution(el, {force, 0.0, 0.0});
        CHECK(axial(0) ==
              doctest::Approx(oracle::cantilever_tip_extension(beam, force)).epsilon(1e-9));
    }
}

TEST_CASE("uniform member loads: consistent nodal vector") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    const double length = 3.0;
    FrameElement el(length, section, elastic_settings());
    const double q = 5.0e3, p = 2.0e3;
    const Vector6 f = el.external_load_vector(p, q);

    CHECK(f(0) == doctest::Approx(p * length / 2.0).epsilon(1e-12));
    CHECK(f(3) == doctest::Approx(p * length / 2.0).epsilon(1e-12));
    CHECK(f(1) == doctest::Approx(q * length / 2.0).epsilon(1e-10));
    CHECK(f(4) == doctest::Approx(q * length / 2.0).epsilon(1e-10));
    // fixed-end moments carry the phi = -u_z' sign convention
    CHECK(std::abs(f(2)) == doctest::Approx(q * length * length / 12.0).epsilon(1e-10));
    CHECK(f(2) == doctest::Approx(-f(5)).epsilon(1e-10));
}

TEST_CASE("axial equilibration: elastic element needs no correction") {
    ElementSettings st;
    st.formulation = Formulation::FSDB;
    st.integration_points = 10;
    st.axial_equilibration = true;
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    FrameElement el(3.0, section, st);
    Vector6 q = Vector6::Zero();
    q(3) = -1e-3;
    q(4) = 5e-3;
    el.state_determination(q);
    CHECK(el.inner_loop_converged());
    const double n_scale = section.ea_ref() * 1e-3 / 3.0;
    CHECK(el.axial_force_spread() < 1e-9 * n_scale);
}

TEST_CASE("shear post-processing from nodal equilibrium") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    const double length = 3.0;
    FrameElement el(length, section, elastic_settings());

    // zero state
    el.state_determination(Vector6::Zero());
    el.commit();
    for (double t : el.shear_profile()) CHECK(t == 0.0);

    // cantilever with tip force: solve the tip displacement, apply it, and
    // the shear must equal the force everywhere
    const double force = 1.0e4;
    FrameElement el2(length, section, elastic_settings());
    const Eigen::Vector3d tip = cantilever_tip_solution(el2, {0.0, force, 0.0});
    Vector6 q = Vector6::Zero();
    q.tail<3>() = tip;
    el2.state_determination(q);
    el2.commit();
    for (double t : el2.shear_profile()) CHECK(t == doctest::Approx(force).epsilon(1e-9));

    // pure end moments: T = (M_i + M_j) / L
    FrameElement el3(length, section, elastic_settings());
    Vector6 qm = Vector6::Zero();
    qm(2) = 1e-3;
    qm(5) = 1e-3;
    const Vector6 f = el3.state_determination(qm);
    el3.commit();
    const double expected = (f(2) + f(5)) / length;
    for (double t : el3.shear_profile()) CHECK(t == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("DB element keeps the classical shape functions") {
    const auto section = elastic_rect(30e9, 0.3, 0.4);
    FrameElement el(3.0, section, elastic_settings(Formulation::DB));
    el.state_determination(Vector6::Constant(1e-3));
    el.commit();
    for (double b : el.profile().beta_z()) CHECK(b == 0.0);
    for (double b : el.profile().beta_x()) CHECK(b == 0.0);
}
