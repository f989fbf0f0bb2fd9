#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fsdb/concrete.hpp"
#include "fsdb/steel.hpp"
#include "oracles.hpp"

using namespace fsdb;

namespace {

ConcreteParams benchmark1_confined() {
    ConcreteParams p;
    p.f_c_peak = -42.0e6;
    p.eps_c_peak = -0.0028;
    p.f_c_ult = -8.4e6;
    p.eps_c_ult = -0.03;
    p.e_c = ConcreteParams::parabola_modulus(p.f_c_peak, p.eps_c_peak);  // 30 GPa
    p.f_t = 4.2e6;
    p.e_t_soft = 20.0e9;
    return p;
}

SteelParams benchmark1_steel() {
    SteelParams p;
    p.e_s = 200.0e9;
    p.f_y = 480.0e6;
    p.hardening = 0.005;
    return p;
}

// Drives the committed state through a piecewise-linear strain history.
template <typename M>
void walk(M& mat, const std::vector<double>& strains, int substeps = 20) {
    double eps = mat.strain();
    for (double target : strains) {
        for (int s = 1; s <= substeps; ++s) {
            mat.set_trial_strain(eps + (target - eps) * double(s) / substeps);
            mat.commit();
        }
        eps = target;
    }
}

}  // namespace

TEST_CASE("concrete: virgin state and envelope anchors") {
    KentParkConcrete c(benchmark1_confined());
    const auto virgin = c.set_trial_strain(0.0);
    CHECK(virgin.stress == 0.0);
    CHECK(virgin.tangent == doctest::Approx(30.0e9));

    // parabola apex
    const auto peak = c.set_trial_strain(-0.0028);
    CHECK(peak.stress == doctest::Approx(-42.0e6).epsilon(1e-12));
    CHECK(peak.tangent == doctest::Approx(0.0).scale(30e9).epsilon(1e-12));

    // half of the peak strain: sigma = f_c (2*0.5 - 0.25) = 0.75 f_c
    const auto half = c.set_trial_strain(-0.0014);
    CHECK(half.stress ==
          doctest::Approx(oracle::kent_park_parabola(-42.0e6, -0.0028, -0.0014)).epsilon(1e-14));
    CHECK(half.stress == doctest::Approx(-31.5e6).epsilon(1e-12));

    // residual plateau
    const auto flat = c.set_trial_strain(-0.05);
    CHECK(flat.stress == doctest::Approx(-8.4e6));
}

TEST_CASE("concrete: commit/revert and determinism") {
    KentParkConcrete c(benchmark1_confined());
    c.set_trial_strain(-0.001);
    c.revert_to_commit();
    CHECK(c.strain() == 0.0);
    CHECK(c.stress() == 0.0);

    const auto first = c.set_trial_strain(-0.002);
    c.commit();
    const auto again = c.set_trial_strain(-0.002);
    CHECK(again.stress == first.stress);
    CHECK(again.tangent == first.tangent);
}

TEST_CASE("concrete: reload does not exceed the first pass (damage)") {
    KentParkConcrete c(benchmark1_confined());
    walk(c, {-0.003});
    const double first_pass = c.stress();
    walk(c, {0.0, -0.003});
    CHECK(std::abs(c.stress()) <= std::abs(first_pass) * (1.0 + 1e-12));
    CHECK(c.stress() == doctest::Approx(first_pass).epsilon(1e-9));
}

TEST_CASE("concrete: tension branch, softening and pinched reopening") {
    KentParkConcrete c(benchmark1_confined());
    const double eps_t0 = 4.2e6 / 30.0e9;
    auto r = c.set_trial_strain(0.5 * eps_t0);
    CHECK(r.stress == doctest::Approx(0.5 * 4.2e6));
    CHECK(r.tangent == doctest::Approx(30.0e9));

    // past the peak: softening slope
    c.commit();
    r = c.set_trial_strain(1.5 * eps_t0);
    CHECK(r.stress == doctest::Approx(4.2e6 - 20.0e9 * 0.5 * eps_t0));
    CHECK(r.tangent == doctest::Approx(-20.0e9));

    // full softening exhausts the tensile capacity
    walk(c, {eps_t0 + 4.2e6 / 20.0e9 + 1e-4});
    CHECK(c.stress() == doctest::Approx(0.0).scale(4.2e6));
    walk(c, {0.0});
    r = c.set_trial_strain(2.0 * eps_t0);
    CHECK(r.stress == doctest::Approx(0.0).scale(4.2e6));
}

TEST_CASE("steel: virgin tangent, yield-point value and asymptote") {
    MenegottoPintoSteel s(benchmark1_steel());
    const auto virgin = s.set_trial_strain(0.0);
    CHECK(virgin.stress == 0.0);
    CHECK(virgin.tangent == doctest::Approx(200.0e9));

    // independent evaluation of the transition curve at the yield strain
    const double eps_y = 480.0e6 / 200.0e9;
    const auto at_yield = s.set_trial_strain(eps_y);
    const double expected = oracle::menegotto_pinto_virgin(200.0e9, 480.0e6, 0.005, 15.0, eps_y);
    CHECK(at_yield.stress == doctest::Approx(expected).epsilon(1e-12));
    CHECK(at_yield.stress / 480.0e6 == doctest::Approx(0.955067).epsilon(1e-4));

    // far into hardening the curve approaches f_y + b E (eps - eps_y)
    const double eps_far = 40.0 * eps_y;
    const auto far = s.set_trial_strain(eps_far);
    const double asym = 480.0e6 + 0.005 * 200.0e9 * (eps_far - eps_y);
    CHECK(far.stress == doctest::Approx(asym).epsilon(2e-3));
    CHECK(far.tangent == doctest::Approx(0.005 * 200.0e9).epsilon(1e-2));
}

TEST_CASE("steel: hysteresis loops stay inside the hardening envelope") {
    MenegottoPintoSteel s(benchmark1_steel());
    const double eps_y = 480.0e6 / 200.0e9;
    walk(s, {3 * eps_y, -3 * eps_y, 4 * eps_y, -4 * eps_y, 5 * eps_y});
    const double bound = 480.0e6 + 0.005 * 200.0e9 * (5 * eps_y + 10 * eps_y);
    CHECK(std::abs(s.stress()) < bound);

    // curvature degradation: the reversal curve is softer than the virgin one
    MenegottoPintoSteel v(benchmark1_steel());
    walk(v, {3 * eps_y});
    const double sv = v.stress();
    CHECK(std::abs(s.stress()) < std::abs(sv) + 0.005 * 200.0e9 * (5 - 3) * eps_y + 480e6);
}

TEST_CASE("tangent matches finite differences away from branch switches") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> step(-8e-4, 8e-4);

    const auto check_material = [&](UniaxialMaterial& m, double scale) {
        for (int k = 0; k < 120; ++k) {
            m.set_trial_strain(m.strain() + step(rng));
            m.commit();
            const double eps = m.strain();
            const double h = 1e-8 * std::max(1.0, std::abs(eps));
            const auto lo = m.set_trial_strain(eps - h);
            const auto hi = m.set_trial_strain(eps + h);
            const auto mid = m.set_trial_strain(eps + 0.25 * h);
            const double fd = (hi.stress - lo.stress) / (2.0 * h);
            // skip branch switches: tangent must agree on both sides
            if (std::abs(hi.tangent - lo.tangent) > 1e-6 * scale) continue;
            if (std::abs(fd - mid.tangent) > 1e-4 * std::max(scale, std::abs(mid.tangent)))
                CHECK(fd == doctest::Approx(mid.tangent).epsilon(1e-4));
            m.revert_to_commit();
        }
    };

    KentParkConcrete c(benchmark1_confined());
    check_material(c, 30.0e9);
    MenegottoPintoSteel s(benchmark1_steel());
    check_material(s, 200.0e9);
}

TEST_CASE("closed strain cycles dissipate non-negative energy") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> amp(1e-4, 4e-3);
    std::uniform_int_distribution<int> nseg(2, 5);

    const auto run_cycles = [&](auto make_material) {
        for (int trial = 0; trial < 50; ++trial) {
            auto m = make_material();
            // random excursion list, then return to the start strain
            std::vector<double> path;
            const int n = nseg(rng);
            for (int i = 0; i < n; ++i) {
                const double a = amp(rng);
                path.push_back((i % 2 == 0) ? -a : a);
            }
            path.push_back(0.0);

            double energy = 0.0;
            double eps_prev = 0.0, sig_prev = 0.0;
            double eps = 0.0;
            for (double target : path) {
                const int substeps = 40;
                for (int s = 1; s <= substeps; ++s) {
                    const double e = eps + (target - eps) * double(s) / substeps;
                    const auto r = m->set_trial_strain(e);
                    m->commit();
                    energy += 0.5 * (r.stress + sig_prev) * (e - eps_prev);
                    eps_prev = e;
                    sig_prev = r.stress;
                }
                eps = target;
            }
            CHECK(energy > -1e-9 * 42e6 * 4e-3);
        }
    };

    run_cycles([] { return std::make_unique<KentParkConcrete>(benchmark1_confined()); });
    run_cycles([] { return std::make_unique<MenegottoPintoSteel>(benchmark1_steel()); });
}

TEST_CASE("concrete cyclic stress stays within the monotonic envelope") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> amp(2e-4, 5e-3);
    for (int trial = 0; trial < 20; ++trial) {
        KentParkConcrete m(benchmark1_confined());
        KentParkConcrete probe(benchmark1_confined());
        std::vector<double> path;
        for (int i = 0; i < 6; ++i) path.push_back((i % 2 == 0 ? -1.0 : 0.3) * amp(rng));
        double eps = 0.0;
        for (double target : path) {
            for (int s = 1; s <= 30; ++s) {
                const double e = eps + (target - eps) * s / 30.0;
                const auto r = m.set_trial_strain(e);
                m.commit();
                if (r.stress < 0.0) {
                    // compressive response never exceeds the compression envelope
                    const double env = probe.compression_envelope(std::min(e, 0.0)).stress;
                    CHECK(std::abs(r.stress) <= std::abs(env) + 1.0);
                } else {
                    // tensile response never exceeds the tensile strength
                    CHECK(r.stress <= 4.2e6 + 1.0);
                }
            }
            eps = target;
        }
    }
}
