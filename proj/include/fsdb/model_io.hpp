#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fsdb/model.hpp"
#include "fsdb/solver.hpp"

namespace fsdb {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct PushoverProtocol {
    ControlDof control;
    double target = 0.0;
    int steps = 200;
    int preload_steps = 10;
};

struct CyclicProtocol {
    ControlDof control;
    std::vector<double> amplitudes;
    double increment = 1e-3;
    int preload_steps = 10;
};

using Protocol = std::variant<PushoverProtocol, CyclicProtocol>;

/// Optional knobs applied to every element while building the model
/// (command-line overrides).
struct ElementOverrides {
    std::optional<Formulation> formulation;
    std::optional<int> integration_points;
    std::optional<bool> axial_equilibration;
    std::optional<int> elements_per_member;  // subdivide each member
};

struct ParsedModel {
    Model model;
    std::map<std::string, Protocol> protocols;
    std::string source_digest;  // stable hash of the model text
};

/// Parses and validates the canonical JSON model format.  Unknown keys are
/// rejected; every violated invariant is reported in one ValidationError.
ParsedModel parse_model(const std::string& text, const ElementOverrides& overrides = {});

/// Results persistence: a capacity-curve table (step, control displacement,
/// reaction force) and a field table (step, member, gauss index, x/L, axis
/// strain, curvature, axial force, moment, decay parameters), both as
/// tab-separated text with a header row, plus a small metadata file.
void write_results(const AnalysisResult& result, const std::string& out_dir,
                   const std::string& model_digest, const std::string& protocol_name);

struct CapacityCurve {
    std::vector<int> step;
    std::vector<double> displacement;
    std::vector<double> force;
};
CapacityCurve read_capacity(const std::string& path);

struct FieldTable {
    std::vector<int> step, member, gauss_index;
    std::vector<double> x_norm, eps0, chi, axial, moment, beta_x, beta_z;
};
FieldTable read_fields(const std::string& path);

}  // namespace fsdb
