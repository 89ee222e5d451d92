#ifndef CUBIST_PLANARITY_HPP
#define CUBIST_PLANARITY_HPP

#include <string>
#include <vector>

#include "cubist/graph.hpp"

namespace cubist {

/// Planarity verdict with a machine-checkable witness either way: a rotation
/// system (cyclic incident-edge order per vertex) realizing an embedding, or
/// the edge set of a Kuratowski subdivision.
struct PlanarityResult {
    bool planar = false;
    std::vector<std::vector<int>> rotation;  // per vertex, edge indices
    std::vector<int> kuratowski_edges;
    std::string kuratowski_kind;  // "K5" or "K33"
};

PlanarityResult is_planar(const SimplicialGraph& g);

/// Audit a claimed rotation system: every incident edge listed once per
/// vertex and V - E + F = 2 on each component under face tracing.
bool verify_rotation_system(const SimplicialGraph& g,
                            const std::vector<std::vector<int>>& rotation,
                            std::string* why = nullptr);

/// Audit a claimed Kuratowski witness: the edge set, after suppressing
/// valence-two vertices, must be K5 or K33 on the nose.
bool verify_kuratowski(const SimplicialGraph& g, const std::vector<int>& edges,
                       std::string* kind = nullptr, std::string* why = nullptr);

}  // namespace cubist

#endif
