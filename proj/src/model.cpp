#include "fsdb/model.hpp"

#include <cmath>
#include <stdexcept>

namespace fsdb {

Matrix6 Member::transformation() const {
    // Local x along the member axis, local z completing the in-plane frame;
    // rotations are unchanged.
    Matrix6 t = Matrix6::Zero();
    const double c = cos_a, s = sin_a;
    for (int n = 0; n < 2; ++n) {
        const int o = 3 * n;
        t(o + 0, o + 0) = c;
        t(o + 0, o + 1) = s;
        t(o + 1, o + 0) = -s;
        t(o + 1, o + 1) = c;
        t(o + 2, o + 2) = 1.0;
    }
    return t;
}

Vector6 Member::to_local(const Vector6& q_global) const { return transformation() * q_global; }

Vector6 Member::to_global(const Vector6& f_local) const {
    return transformation().transpose() * f_local;
}

void Model::add_member(int node_i, int node_j, const FibreSection& section,
                       const ElementSettings& settings) {
    if (node_i < 0 || node_i >= static_cast<int>(nodes.size()) || node_j < 0 ||
        node_j >= static_cast<int>(nodes.size()))
        throw std::invalid_argument("add_member: node index out of range");
    const double dx = nodes[node_j].x - nodes[node_i].x;
    const double dz = nodes[node_j].z - nodes[node_i].z;
    const double length = std::hypot(dx, dz);
    if (!(length > 0.0)) throw std::invalid_argument("add_member: zero-length member");

    Member m;
    m.node_i = node_i;
    m.node_j = node_j;
    m.cos_a = dx / length;
    m.sin_a = dz / length;
    m.element = std::make_unique<FrameElement>(length, section, settings);
    members.push_back(std::move(m));
}

void Model::validate() const {
    if (nodes.empty()) throw std::invalid_argument("model has no nodes");
    if (members.empty()) throw std::invalid_argument("model has no members");
    for (const auto& s : supports)
        if (s.node < 0 || s.node >= static_cast<int>(nodes.size()))
            throw std::invalid_argument("support references a missing node");
    for (const auto& l : loads)
        if (l.node < 0 || l.node >= static_cast<int>(nodes.size()))
            throw std::invalid_argument("load references a missing node");
    int restrained = 0;
    for (const auto& s : supports) restrained += int(s.ux) + int(s.uz) + int(s.phi);
    if (restrained < 3)
        throw std::invalid_argument("model is not statically restrained (needs >= 3 fixed dofs)");
}

}  // namespace fsdb
