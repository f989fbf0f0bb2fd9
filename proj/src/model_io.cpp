#include "fsdb/model_io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "fsdb/concrete.hpp"
#include "fsdb/steel.hpp"

namespace fsdb {

using nlohmann::json;

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error([&problems] {
          std::string msg = "model validation failed:";
          for (const auto& p : problems) msg += "\n  - " + p;
          return msg;
      }()),
      problems_(std::move(problems)) {}

namespace {

struct Units {
    double length = 1.0;  // to metres
    double force = 1.0;   // to newtons
    double stress = 1.0;  // to pascals
};

class Validator {
public:
    void fail(const std::string& where, const std::string& what) {
        problems_.push_back(where + ": " + what);
    }
    void require(bool ok, const std::string& where, const std::string& what) {
        if (!ok) fail(where, what);
    }
    void check_keys(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
        for (const auto& [key, _] : obj.items())
            if (!allowed.count(key)) fail(where, "unknown key '" + key + "'");
    }
    void raise_if_failed() {
        if (!problems_.empty()) throw ValidationError(std::move(problems_));
    }

private:
    std::vector<std::string> problems_;
};

double num(const json& obj, const std::string& key, Validator& v, const std::string& where,
           std::optional<double> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        v.fail(where, "missing key '" + key + "'");
        return 0.0;
    }
    if (!obj[key].is_number()) {
        v.fail(where, "'" + key + "' must be a number");
        return fallback.value_or(0.0);
    }
    return obj[key].get<double>();
}

int integer(const json& obj, const std::string& key, Validator& v, const std::string& where,
            std::optional<int> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        v.fail(where, "missing key '" + key + "'");
        return 0;
    }
    if (!obj[key].is_number_integer()) {
        v.fail(where, "'" + key + "' must be an integer");
        return fallback.value_or(0);
    }
    return obj[key].get<int>();
}

std::string text(const json& obj, const std::string& key, Validator& v, const std::string& where,
                 std::optional<std::string> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        v.fail(where, "missing key '" + key + "'");
        return {};
    }
    if (!obj[key].is_string()) {
        v.fail(where, "'" + key + "' must be a string");
        return fallback.value_or(std::string{});
    }
    return obj[key].get<std::string>();
}

Units parse_units(const json& root, Validator& v) {
    Units u;
    if (!root.contains("units")) {
        v.fail("units", "missing block (declare length/force/stress)");
        return u;
    }
    const auto& units = root["units"];
    v.check_keys(units, "units", {"length", "force", "stress"});
    const std::string lu = text(units, "length", v, "units");
    const std::string fu = text(units, "force", v, "units");
    const std::string su = text(units, "stress", v, "units");
    if (lu == "m") u.length = 1.0;
    else if (lu == "cm") u.length = 1e-2;
    else if (lu == "mm") u.length = 1e-3;
    else v.fail("units", "length must be one of m/cm/mm");
    if (fu == "N") u.force = 1.0;
    else if (fu == "kN") u.force = 1e3;
    else v.fail("units", "force must be one of N/kN");
    if (su == "Pa") u.stress = 1.0;
    else if (su == "MPa") u.stress = 1e6;
    else if (su == "GPa") u.stress = 1e9;
    else v.fail("units", "stress must be one of Pa/MPa/GPa");
    return u;
}

using MaterialMap = std::map<std::string, std::unique_ptr<UniaxialMaterial>>;

MaterialMap parse_materials(const json& root, const Units& u, Validator& v) {
    MaterialMap out;
    if (!root.contains("materials") || !root["materials"].is_object()) {
        v.fail("materials", "missing block");
        return out;
    }
    for (const auto& [name, m] : root["materials"].items()) {
        const std::string where = "materials." + name;
        const std::string type = text(m, "type", v, where);
        if (type == "concrete") {
            v.check_keys(m, where,
                         {"type", "f_c", "eps_c", "f_cu", "eps_cu", "e_c", "f_t", "e_t_soft"});
            ConcreteParams p;
            p.f_c_peak = num(m, "f_c", v, where) * u.stress;
            p.eps_c_peak = num(m, "eps_c", v, where);
            p.f_c_ult = num(m, "f_cu", v, where) * u.stress;
            p.eps_c_ult = num(m, "eps_cu", v, where);
            p.f_t = num(m, "f_t", v, where, 0.0) * u.stress;
            p.e_t_soft = num(m, "e_t_soft", v, where, 0.0) * u.stress;
            const double default_ec =
                (p.eps_c_peak < 0.0) ? ConcreteParams::parabola_modulus(p.f_c_peak, p.eps_c_peak)
                                     : 0.0;
            p.e_c = m.contains("e_c") ? num(m, "e_c", v, where) * u.stress : default_ec;
            try {
                out.emplace(name, std::make_unique<KentParkConcrete>(p));
            } catch (const std::invalid_argument& e) {
                v.fail(where, e.what());
            }
        } else if (type == "steel") {
            v.check_keys(m, where, {"type", "e_s", "f_y", "hardening", "r0", "c_r1", "c_r2"});
            SteelParams p;
            p.e_s = num(m, "e_s", v, where) * u.stress;
            p.f_y = num(m, "f_y", v, where) * u.stress;
            p.hardening = num(m, "hardening", v, where, 0.0);
            p.r0 = num(m, "r0", v, where, 15.0);
            p.c_r1 = num(m, "c_r1", v, where, 0.925);
            p.c_r2 = num(m, "c_r2", v, where, 0.15);
            try {
                out.emplace(name, std::make_unique<MenegottoPintoSteel>(p));
            } catch (const std::invalid_argument& e) {
                v.fail(where, e.what());
            }
        } else if (type == "elastic") {
            v.check_keys(m, where, {"type", "e"});
            const double e = num(m, "e", v, where) * u.stress;
            if (e > 0.0)
                out.emplace(name, std::make_unique<LinearElasticMaterial>(e));
            else
                v.fail(where, "elastic modulus must be positive");
        } else {
            v.fail(where, "unknown material type '" + type + "'");
        }
    }
    return out;
}

const UniaxialMaterial* find_material(const MaterialMap& mats, const std::string& name,
                                      Validator& v, const std::string& where) {
    auto it = mats.find(name);
    if (it == mats.end()) {
        v.fail(where, "references missing material '" + name + "'");
        return nullptr;
    }
    return it->second.get();
}

// Equal-height concrete stripes over the full depth; stripes inside the core
// band are split into a confined core fibre and the two unconfined side
// strips, stripes straddling the band boundary are subdivided first.  Rebar
// rows become one point fibre per bar (concrete area is not deducted).
FibreSection build_rc_rectangle(const json& s, const MaterialMap& mats, const Units& u,
                                Validator& v, const std::string& where) {
    FibreSection sec;
    const double width = num(s, "width", v, where) * u.length;
    const double height = num(s, "height", v, where) * u.length;
    const double cover = num(s, "cover", v, where) * u.length;
    const double cover_side =
        s.contains("cover_side") ? num(s, "cover_side", v, where) * u.length : cover;
    const int stripes = integer(s, "stripes", v, where, 40);
    const auto* core_mat = find_material(mats, text(s, "core_material", v, where), v, where);
    const auto* cover_mat = find_material(mats, text(s, "cover_material", v, where), v, where);
    if (!core_mat || !cover_mat) return sec;
    v.require(width > 0 && height > 0, where, "width/height must be positive");
    v.require(cover >= 0 && 2 * cover < height, where, "cover must fit inside the height");
    v.require(stripes > 0, where, "stripes must be positive");
    if (width <= 0 || height <= 0 || stripes <= 0 || 2 * cover >= height) return sec;

    const double z_core = 0.5 * height - cover;
    const double core_width = width - 2.0 * cover_side;

    const auto add_band = [&](double z1, double z2) {
        if (z2 - z1 <= 0.0) return;
        const double zc = 0.5 * (z1 + z2);
        const double t = z2 - z1;
        if (z2 <= -z_core || z1 >= z_core) {
            sec.add_fibre(zc, width * t, cover_mat->clone());
        } else {
            sec.add_fibre(zc, core_width * t, core_mat->clone());
            if (cover_side > 0.0) sec.add_fibre(zc, 2.0 * cover_side * t, cover_mat->clone());
        }
    };

    const double t = height / stripes;
    for (int i = 0; i < stripes; ++i) {
        const double z1 = -0.5 * height + i * t;
        const double z2 = z1 + t;
        // split a stripe that straddles a core boundary
        double cuts[2] = {-z_core, z_core};
        double lo = z1;
        for (double cut : cuts)
            if (cut > z1 && cut < z2) {
                add_band(lo, cut);
                lo = cut;
            }
        add_band(lo, z2);
    }

    if (s.contains("rebar")) {
        if (!s["rebar"].is_array()) {
            v.fail(where, "'rebar' must be an array of rows");
            return sec;
        }
        int row_id = 0;
        for (const auto& row : s["rebar"]) {
            const std::string rw = where + ".rebar[" + std::to_string(row_id++) + "]";
            v.check_keys(row, rw, {"z", "count", "diameter", "material"});
            const double z = num(row, "z", v, rw) * u.length;
            const int count = integer(row, "count", v, rw);
            const double dia = num(row, "diameter", v, rw) * u.length;
            const auto* mat = find_material(mats, text(row, "material", v, rw), v, rw);
            v.require(count > 0, rw, "count must be positive");
            v.require(dia > 0, rw, "diameter must be positive");
            if (!mat || count <= 0 || dia <= 0) continue;
            const double area = 0.25 * M_PI * dia * dia;
            for (int b = 0; b < count; ++b) sec.add_fibre(z, area, mat->clone());
        }
    }
    return sec;
}

FibreSection build_fibre_list(const json& s, const MaterialMap& mats, const Units& u,
                              Validator& v, const std::string& where) {
    FibreSection sec;
    if (!s.contains("fibres") || !s["fibres"].is_array()) {
        v.fail(where, "'fibres' array required");
        return sec;
    }
    int i = 0;
    for (const auto& f : s["fibres"]) {
        const std::string fw = where + ".fibres[" + std::to_string(i++) + "]";
        v.check_keys(f, fw, {"z", "area", "material"});
        const double z = num(f, "z", v, fw) * u.length;
        const double area = num(f, "area", v, fw) * u.length * u.length;
        const auto* mat = find_material(mats, text(f, "material", v, fw), v, fw);
        v.require(area > 0, fw, "area must be positive");
        if (mat && area > 0) sec.add_fibre(z, area, mat->clone());
    }
    return sec;
}

Dof parse_dof(const std::string& name, Validator& v, const std::string& where) {
    if (name == "ux") return Dof::ux;
    if (name == "uz") return Dof::uz;
    if (name == "phi") return Dof::phi;
    v.fail(where, "unknown dof '" + name + "' (expected ux/uz/phi)");
    return Dof::uz;
}

std::string fnv_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

ParsedModel parse_model(const std::string& model_text, const ElementOverrides& overrides) {
    json root;
    try {
        root = json::parse(model_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model is not valid JSON: ") + e.what());
    }

    Validator v;
    v.check_keys(root, "model",
                 {"version", "units", "materials", "sections", "nodes", "elements", "supports",
                  "loads", "protocols"});
    const int version = integer(root, "version", v, "model", 1);
    v.require(version == 1, "model", "unsupported schema version");

    const Units units = parse_units(root, v);
    const MaterialMap materials = parse_materials(root, units, v);

    std::map<std::string, FibreSection> sections;
    if (root.contains("sections") && root["sections"].is_object()) {
        for (const auto& [name, s] : root["sections"].items()) {
            const std::string where = "sections." + name;
            const std::string type = text(s, "type", v, where);
            if (type == "rc_rectangle") {
                v.check_keys(s, where,
                             {"type", "width", "height", "cover", "cover_side", "stripes",
                              "core_material", "cover_material", "rebar"});
                sections.emplace(name, build_rc_rectangle(s, materials, units, v, where));
            } else if (type == "fibres") {
                v.check_keys(s, where, {"type", "fibres"});
                sections.emplace(name, build_fibre_list(s, materials, units, v, where));
            } else {
                v.fail(where, "unknown section type '" + type + "'");
            }
        }
    } else {
        v.fail("sections", "missing block");
    }

    ParsedModel out;
    out.source_digest = fnv_digest(model_text);
    Model& model = out.model;

    if (root.contains("nodes") && root["nodes"].is_array()) {
        int i = 0;
        for (const auto& n : root["nodes"]) {
            const std::string where = "nodes[" + std::to_string(i++) + "]";
            v.check_keys(n, where, {"x", "z"});
            model.nodes.push_back(
                Node{num(n, "x", v, where) * units.length, num(n, "z", v, where) * units.length});
        }
    } else {
        v.fail("nodes", "missing array");
    }
    const int n_nodes = static_cast<int>(model.nodes.size());

    if (root.contains("elements") && root["elements"].is_array()) {
        int i = 0;
        for (const auto& e : root["elements"]) {
            const std::string where = "elements[" + std::to_string(i++) + "]";
            v.check_keys(e, where,
                         {"nodes", "section", "formulation", "ips", "axial_equilibration",
                          "update_per_iteration"});
            if (!e.contains("nodes") || !e["nodes"].is_array() || e["nodes"].size() != 2) {
                v.fail(where, "'nodes' must be a pair of node indices");
                continue;
            }
            const int ni = e["nodes"][0].get<int>();
            const int nj = e["nodes"][1].get<int>();
            if (ni < 0 || ni >= n_nodes || nj < 0 || nj >= n_nodes) {
                v.fail(where, "node index out of range");
                continue;
            }
            const std::string sec_name = text(e, "section", v, where);
            auto sec_it = sections.find(sec_name);
            if (sec_it == sections.end()) {
                v.fail(where, "references missing section '" + sec_name + "'");
                continue;
            }

            ElementSettings st;
            std::string form = text(e, "formulation", v, where, std::string("fsdb"));
            if (overrides.formulation)
                form = *overrides.formulation == Formulation::FSDB ? "fsdb" : "db";
            if (form == "fsdb") st.formulation = Formulation::FSDB;
            else if (form == "db") st.formulation = Formulation::DB;
            else v.fail(where, "formulation must be 'fsdb' or 'db'");

            st.integration_points = integer(e, "ips", v, where, 10);
            if (overrides.integration_points) st.integration_points = *overrides.integration_points;
            v.require(st.integration_points >= 2, where, "ips must be at least 2");

            const bool default_ae = st.formulation == Formulation::FSDB;
            st.axial_equilibration =
                e.contains("axial_equilibration") ? e["axial_equilibration"].get<bool>() : default_ae;
            if (overrides.axial_equilibration) st.axial_equilibration = *overrides.axial_equilibration;
            if (e.contains("update_per_iteration"))
                st.update_per_iteration = e["update_per_iteration"].get<bool>();

            const int split = std::max(1, overrides.elements_per_member.value_or(1));
            if (st.integration_points < 2) continue;
            try {
                if (split == 1) {
                    model.add_member(ni, nj, sec_it->second, st);
                } else {
                    int prev = ni;
                    for (int k = 1; k <= split; ++k) {
                        int next;
                        if (k == split) {
                            next = nj;
                        } else {
                            const double f = double(k) / split;
                            model.nodes.push_back(
                                Node{model.nodes[ni].x + f * (model.nodes[nj].x - model.nodes[ni].x),
                                     model.nodes[ni].z + f * (model.nodes[nj].z - model.nodes[ni].z)});
                            next = static_cast<int>(model.nodes.size()) - 1;
                        }
                        model.add_member(prev, next, sec_it->second, st);
                        prev = next;
                    }
                }
            } catch (const std::exception& ex) {
                v.fail(where, ex.what());
            }
        }
    } else {
        v.fail("elements", "missing array");
    }

    if (root.contains("supports") && root["supports"].is_array()) {
        int i = 0;
        for (const auto& s : root["supports"]) {
            const std::string where = "supports[" + std::to_string(i++) + "]";
            v.check_keys(s, where, {"node", "fix"});
            Support sup;
            sup.node = integer(s, "node", v, where);
            if (sup.node < 0 || sup.node >= n_nodes) {
                v.fail(where, "node index out of range");
                continue;
            }
            if (!s.contains("fix") || !s["fix"].is_array()) {
                v.fail(where, "'fix' must list the fixed dofs");
                continue;
            }
            for (const auto& d : s["fix"]) {
                const Dof dof = parse_dof(d.get<std::string>(), v, where);
                if (dof == Dof::ux) sup.ux = true;
                if (dof == Dof::uz) sup.uz = true;
                if (dof == Dof::phi) sup.phi = true;
            }
            model.supports.push_back(sup);
        }
    }

    if (root.contains("loads") && root["loads"].is_array()) {
        int i = 0;
        for (const auto& l : root["loads"]) {
            const std::string where = "loads[" + std::to_string(i++) + "]";
            v.check_keys(l, where, {"node", "fx", "fz", "m"});
            NodalLoad load;
            load.node = integer(l, "node", v, where);
            if (load.node < 0 || load.node >= n_nodes) {
                v.fail(where, "node index out of range");
                continue;
            }
            load.fx = num(l, "fx", v, where, 0.0) * units.force;
            load.fz = num(l, "fz", v, where, 0.0) * units.force;
            load.m = num(l, "m", v, where, 0.0) * units.force * units.length;
            model.loads.push_back(load);
        }
    }

    if (root.contains("protocols") && root["protocols"].is_object()) {
        for (const auto& [name, p] : root["protocols"].items()) {
            const std::string where = "protocols." + name;
            const std::string type = text(p, "type", v, where);
            ControlDof control;
            control.node = integer(p, "control_node", v, where);
            control.dof = parse_dof(text(p, "control_dof", v, where, std::string("uz")), v, where);
            if (control.node < 0 || control.node >= n_nodes) {
                v.fail(where, "control node out of range");
                continue;
            }
            if (type == "pushover") {
                v.check_keys(p, where,
                             {"type", "control_node", "control_dof", "target", "steps",
                              "preload_steps"});
                PushoverProtocol proto;
                proto.control = control;
                proto.target = num(p, "target", v, where) * units.length;
                proto.steps = integer(p, "steps", v, where, 200);
                proto.preload_steps = integer(p, "preload_steps", v, where, 10);
                v.require(proto.steps > 0, where, "steps must be positive");
                out.protocols.emplace(name, proto);
            } else if (type == "cyclic") {
                v.check_keys(p, where,
                             {"type", "control_node", "control_dof", "amplitudes", "increment",
                              "preload_steps"});
                CyclicProtocol proto;
                proto.control = control;
                if (p.contains("amplitudes") && p["amplitudes"].is_array())
                    for (const auto& a : p["amplitudes"])
                        proto.amplitudes.push_back(a.get<double>() * units.length);
                else
                    v.fail(where, "'amplitudes' array required");
                proto.increment = num(p, "increment", v, where, 1e-3) * units.length;
                proto.preload_steps = integer(p, "preload_steps", v, where, 10);
                v.require(!proto.amplitudes.empty(), where, "amplitude list must be non-empty");
                v.require(proto.increment > 0, where, "increment must be positive");
                out.protocols.emplace(name, proto);
            } else {
                v.fail(where, "unknown protocol type '" + type + "'");
            }
        }
    }

    // structural sanity (restraint etc.) reported through the same channel
    try {
        if (!model.nodes.empty() && !model.members.empty()) model.validate();
    } catch (const std::invalid_argument& e) {
        v.fail("model", e.what());
    }

    v.raise_if_failed();
    return out;
}

namespace {

void write_number(std::ostream& os, double value) {
    char buf[32];
    const auto res = std::snprintf(buf, sizeof buf, "%.17g", value);
    os.write(buf, res);
}

}  // namespace

void write_results(const AnalysisResult& result, const std::string& out_dir,
                   const std::string& model_digest, const std::string& protocol_name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + out_dir + "'");

    {
        std::ofstream cap(fs::path(out_dir) / "capacity.tsv");
        if (!cap) throw std::runtime_error("cannot write capacity table in '" + out_dir + "'");
        cap << "step\tu_ctrl_m\tF_kN\n";
        for (const auto& s : result.steps) {
            cap << s.step << '\t';
            write_number(cap, s.control_displacement);
            cap << '\t';
            write_number(cap, s.control_force / 1e3);
            cap << '\n';
        }
    }
    {
        std::ofstream f(fs::path(out_dir) / "fields.tsv");
        if (!f) throw std::runtime_error("cannot write field table in '" + out_dir + "'");
        f << "step\tmember\tgp\tx_over_L\teps0\tchi\tN_kN\tM_kNm\tbeta_x\tbeta_z\n";
        for (const auto& s : result.steps) {
            for (const auto& g : s.fields) {
                f << s.step << '\t' << g.member << '\t' << g.gauss_index << '\t';
                write_number(f, g.x_norm);
                f << '\t';
                write_number(f, g.eps0);
                f << '\t';
                write_number(f, g.chi);
                f << '\t';
                write_number(f, g.axial / 1e3);
                f << '\t';
                write_number(f, g.moment / 1e3);
                f << '\t';
                write_number(f, g.beta_x);
                f << '\t';
                write_number(f, g.beta_z);
                f << '\n';
            }
        }
    }
    {
        json meta;
        meta["model_digest"] = model_digest;
        meta["protocol"] = protocol_name;
        meta["steps"] = result.steps.size();
        std::ofstream m(fs::path(out_dir) / "run.json");
        m << meta.dump(2) << '\n';
    }
}

namespace {

std::vector<std::vector<std::string>> read_table(const std::string& path,
                                                 const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("'" + path + "' is empty");
    if (line != expected_header)
        throw std::runtime_error("'" + path + "' has an unexpected header");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, '\t')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

double to_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

}  // namespace

CapacityCurve read_capacity(const std::string& path) {
    CapacityCurve c;
    for (const auto& row : read_table(path, "step\tu_ctrl_m\tF_kN")) {
        if (row.size() != 3) throw std::runtime_error("bad capacity row in '" + path + "'");
        c.step.push_back(static_cast<int>(to_double(row[0])));
        c.displacement.push_back(to_double(row[1]));
        c.force.push_back(to_double(row[2]));
    }
    return c;
}

FieldTable read_fields(const std::string& path) {
    FieldTable t;
    for (const auto& row :
         read_table(path, "step\tmember\tgp\tx_over_L\teps0\tchi\tN_kN\tM_kNm\tbeta_x\tbeta_z")) {
        if (row.size() != 10) throw std::runtime_error("bad field row in '" + path + "'");
        t.step.push_back(static_cast<int>(to_double(row[0])));
        t.member.push_back(static_cast<int>(to_double(row[1])));
        t.gauss_index.push_back(static_cast<int>(to_double(row[2])));
        t.x_norm.push_back(to_double(row[3]));
        t.eps0.push_back(to_double(row[4]));
        t.chi.push_back(to_double(row[5]));
        t.axial.push_back(to_double(row[6]));
        t.moment.push_back(to_double(row[7]));
        t.beta_x.push_back(to_double(row[8]));
        t.beta_z.push_back(to_double(row[9]));
    }
    return t;
}

}  // namespace fsdb
