#include "fsdb/benchmarks.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

namespace fsdb::benchmarks {

using nlohmann::json;

namespace {

json element_block(const Options& o) {
    json e;
    e["nodes"] = {0, 1};
    e["section"] = "column";
    e["formulation"] = o.formulation == Formulation::FSDB ? "fsdb" : "db";
    e["ips"] = o.integration_points;
    const bool ae = o.axial_equilibration.value_or(o.formulation == Formulation::FSDB);
    e["axial_equilibration"] = ae;
    return e;
}

json skeleton(double length_m, const Options& o, double axial_kn) {
    json m;
    m["version"] = 1;
    m["units"] = {{"length", "m"}, {"force", "kN"}, {"stress", "MPa"}};
    m["nodes"] = json::array({json{{"x", 0.0}, {"z", 0.0}}, json{{"x", length_m}, {"z", 0.0}}});
    m["elements"] = json::array({element_block(o)});
    m["supports"] = json::array({json{{"node", 0}, {"fix", json::array({"ux", "uz", "phi"})}}});
    m["loads"] = json::array();
    if (axial_kn != 0.0)
        m["loads"].push_back(json{{"node", 1}, {"fx", -axial_kn}});
    return m;
}

json cyclic_protocol(double step_m, double max_m, double increment_m) {
    json p;
    p["type"] = "cyclic";
    p["control_node"] = 1;
    p["control_dof"] = "uz";
    json amps = json::array();
    const int n = static_cast<int>(std::round(max_m / step_m));
    for (int i = 1; i <= n; ++i) amps.push_back(i * step_m);
    p["amplitudes"] = amps;
    p["increment"] = increment_m;
    p["preload_steps"] = 10;
    return p;
}

json pushover_protocol(double target_m, int steps) {
    json p;
    p["type"] = "pushover";
    p["control_node"] = 1;
    p["control_dof"] = "uz";
    p["target"] = target_m;
    p["steps"] = steps;
    p["preload_steps"] = 10;
    return p;
}

// RC cantilever: L = 3 m, 30 x 40 cm section, 20 mm cover, 12 phi16 bars in
// four layers.  Confined core 42 MPa at 0.28%, unconfined cover 37 MPa at
// 0.24%, tensile strength 10% of the compressive one, tension softening
// 20 GPa, Kent-Park residual 20% of the peak.  Steel 480 MPa / 200 GPa with
// 0.5% hardening.
json benchmark1(const Options& o) {
    const double axial = o.axial_load_kn.value_or(75.0);
    json m = skeleton(3.0, o, axial);

    m["materials"]["core"] = {{"type", "concrete"}, {"f_c", -42.0},   {"eps_c", -0.0028},
                              {"f_cu", -8.4},       {"eps_cu", -0.03}, {"f_t", 4.2},
                              {"e_t_soft", 20000.0}};
    m["materials"]["cover"] = {{"type", "concrete"}, {"f_c", -37.0},    {"eps_c", -0.0024},
                               {"f_cu", -7.4},       {"eps_cu", -0.008}, {"f_t", 3.7},
                               {"e_t_soft", 20000.0}};
    m["materials"]["rebar"] = {{"type", "steel"},   {"e_s", 200000.0}, {"f_y", 480.0},
                               {"hardening", 0.005}, {"r0", 15.0},      {"c_r1", 0.925},
                               {"c_r2", 0.15}};

    // bar centres 28 mm from the faces (20 mm cover + half a phi16 bar),
    // intermediate layers at thirds of the extreme layer offset
    const double z1 = 0.20 - 0.028;
    json rebar = json::array();
    rebar.push_back(json{{"z", z1}, {"count", 4}, {"diameter", 0.016}, {"material", "rebar"}});
    rebar.push_back(json{{"z", z1 / 3.0}, {"count", 2}, {"diameter", 0.016}, {"material", "rebar"}});
    rebar.push_back(
        json{{"z", -z1 / 3.0}, {"count", 2}, {"diameter", 0.016}, {"material", "rebar"}});
    rebar.push_back(json{{"z", -z1}, {"count", 4}, {"diameter", 0.016}, {"material", "rebar"}});
    m["sections"]["column"] = {{"type", "rc_rectangle"}, {"width", 0.30}, {"height", 0.40},
                               {"cover", 0.02},          {"stripes", 40}, {"core_material", "core"},
                               {"cover_material", "cover"}, {"rebar", rebar}};

    m["protocols"]["pushover"] = pushover_protocol(0.21, 210);
    m["protocols"]["cyclic"] = cyclic_protocol(0.03, 0.21, 0.001);
    return m;
}

// Low-Moehle column (specimen 1): L = 51.44 cm, 12.7 x 16.5 cm section bent
// about the weak axis, ten bars (diameter assumed 9.5 mm, layout 4/2/4,
// 20 mm cover assumed), axial load 44.48 kN.  Zero tensile strength.
json benchmark2(const Options& o) {
    const double axial = o.axial_load_kn.value_or(44.48);
    json m = skeleton(0.5144, o, axial);

    m["materials"]["core"] = {{"type", "concrete"}, {"f_c", -42.0},     {"eps_c", -0.0023},
                              {"f_cu", -21.0},      {"eps_cu", -0.0233}, {"f_t", 0.0},
                              {"e_t_soft", 0.0}};
    m["materials"]["cover"] = {{"type", "concrete"}, {"f_c", -37.0},     {"eps_c", -0.0020},
                               {"f_cu", -17.0},      {"eps_cu", -0.0119}, {"f_t", 0.0},
                               {"e_t_soft", 0.0}};
    m["materials"]["rebar"] = {{"type", "steel"},    {"e_s", 200000.0}, {"f_y", 447.0},
                               {"hardening", 0.0067}, {"r0", 15.0},      {"c_r1", 0.925},
                               {"c_r2", 0.15}};

    const double dia = 0.0095;
    const double z1 = 0.5 * 0.127 - 0.020 - 0.5 * dia;
    json rebar = json::array();
    rebar.push_back(json{{"z", z1}, {"count", 4}, {"diameter", dia}, {"material", "rebar"}});
    rebar.push_back(json{{"z", 0.0}, {"count", 2}, {"diameter", dia}, {"material", "rebar"}});
    rebar.push_back(json{{"z", -z1}, {"count", 4}, {"diameter", dia}, {"material", "rebar"}});
    m["sections"]["column"] = {{"type", "rc_rectangle"}, {"width", 0.165}, {"height", 0.127},
                               {"cover", 0.02},          {"stripes", 40},  {"core_material", "core"},
                               {"cover_material", "cover"}, {"rebar", rebar}};

    m["protocols"]["pushover"] = pushover_protocol(0.03, 120);
    m["protocols"]["cyclic"] = cyclic_protocol(0.003, 0.021, 0.00025);
    return m;
}

// Kent beam: L = 2.25 m, 12.3 x 20.3 cm section, four corner bars (diameter
// assumed 16 mm), 25 mm top/bottom cover and 20 mm lateral cover, 49.7 MPa
// concrete at 0.27% with zero tensile strength, ultimate strain 0.30%
// (cover) and 3.0% (core), residual 20% of the peak.  Steel 336 MPa with
// 0.42% hardening.
json benchmark3(const Options& o) {
    const double axial = o.axial_load_kn.value_or(0.0);
    json m = skeleton(2.25, o, axial);

    m["materials"]["core"] = {{"type", "concrete"}, {"f_c", -49.7},   {"eps_c", -0.0027},
                              {"f_cu", -9.94},      {"eps_cu", -0.03}, {"f_t", 0.0},
                              {"e_t_soft", 0.0}};
    m["materials"]["cover"] = {{"type", "concrete"}, {"f_c", -49.7},    {"eps_c", -0.0027},
                               {"f_cu", -9.94},      {"eps_cu", -0.003}, {"f_t", 0.0},
                               {"e_t_soft", 0.0}};
    m["materials"]["rebar"] = {{"type", "steel"},    {"e_s", 200000.0}, {"f_y", 336.0},
                               {"hardening", 0.0042}, {"r0", 15.0},      {"c_r1", 0.925},
                               {"c_r2", 0.15}};

    const double dia = 0.016;
    const double z1 = 0.5 * 0.203 - 0.025 - 0.5 * dia;
    json rebar = json::array();
    rebar.push_back(json{{"z", z1}, {"count", 2}, {"diameter", dia}, {"material", "rebar"}});
    rebar.push_back(json{{"z", -z1}, {"count", 2}, {"diameter", dia}, {"material", "rebar"}});
    m["sections"]["column"] = {{"type", "rc_rectangle"}, {"width", 0.123}, {"height", 0.203},
                               {"cover", 0.025},         {"cover_side", 0.020}, {"stripes", 40},
                               {"core_material", "core"}, {"cover_material", "cover"},
                               {"rebar", rebar}};

    m["protocols"]["pushover"] = pushover_protocol(0.12, 120);
    m["protocols"]["cyclic"] = cyclic_protocol(0.015, 0.075, 0.001);
    return m;
}

}  // namespace

bool is_builtin(const std::string& name) {
    return name == "benchmark1" || name == "benchmark2" || name == "benchmark3";
}

std::string model_json(const std::string& name, const Options& options) {
    json m;
    if (name == "benchmark1") m = benchmark1(options);
    else if (name == "benchmark2") m = benchmark2(options);
    else if (name == "benchmark3") m = benchmark3(options);
    else throw std::invalid_argument("unknown benchmark '" + name + "'");
    return m.dump(2);
}

}  // namespace fsdb::benchmarks
