#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fsdb/element.hpp"

namespace fsdb {

struct Node {
    double x = 0.0;
    double z = 0.0;
};

struct Support {
    int node = 0;
    bool ux = false, uz = false, phi = false;
};

struct NodalLoad {
    int node = 0;
    double fx = 0.0, fz = 0.0, m = 0.0;
};

enum class Dof { ux = 0, uz = 1, phi = 2 };

struct ControlDof {
    int node = 0;
    Dof dof = Dof::uz;
};

/// One member of the structural model: an element in its local frame plus
/// connectivity and direction cosines.
struct Member {
    int node_i = 0, node_j = 0;
    double cos_a = 1.0, sin_a = 0.0;
    std::unique_ptr<FrameElement> element;

    Matrix6 transformation() const;
    Vector6 to_local(const Vector6& q_global) const;
    Vector6 to_global(const Vector6& f_local) const;
};

struct Model {
    std::vector<Node> nodes;
    std::vector<Member> members;
    std::vector<Support> supports;
    std::vector<NodalLoad> loads;  // constant nodal loads (e.g. axial preload)

    int dof_count() const { return 3 * static_cast<int>(nodes.size()); }
    static int dof_index(int node, Dof d) { return 3 * node + static_cast<int>(d); }

    /// Builds the member geometry (length, cosines) and the local element.
    void add_member(int node_i, int node_j, const FibreSection& section,
                    const ElementSettings& settings);

    /// Sanity checks: references resolve and the structure is restrained.
    void validate() const;
};

}  // namespace fsdb
