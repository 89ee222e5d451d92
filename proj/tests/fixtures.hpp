// Hand-built cube complexes used across test suites.
#ifndef CUBIST_TESTS_FIXTURES_HPP
#define CUBIST_TESTS_FIXTURES_HPP

#include <string>

#include "cubist/cube_complex.hpp"

namespace fixtures {

// One-square torus: one vertex, two edges, opposite sides identified.
inline cubist::CubeComplex one_square_torus() {
    using namespace cubist;
    CubeComplexBuilder b;
    CubeId v = b.add_vertex(CubeLabel{{{{"v"}}}});
    CubeId ea = b.add_cube(CubeLabel{{{{"a"}}}}, {{{v, v}}});
    CubeId eb = b.add_cube(CubeLabel{{{{"b"}}}}, {{{v, v}}});
    // Direction 0 runs along a, direction 1 along b.
    b.add_cube(CubeLabel{{{{"s"}}}}, {{{eb, eb}, {ea, ea}}});
    return std::move(b).build();
}

// Boundary of the 3-cube: 8 vertices, 12 edges, 6 squares. Corner links are
// hollow triangles, so the flag condition fails everywhere.
inline cubist::CubeComplex hollow_cube() {
    using namespace cubist;
    CubeComplexBuilder b;
    auto bit = [](int corner, int axis) { return (corner >> axis) & 1; };
    auto vname = [&](int corner) {
        return std::string() + char('0' + bit(corner, 0)) + char('0' + bit(corner, 1)) +
               char('0' + bit(corner, 2));
    };
    std::array<CubeId, 8> verts{};
    for (int c = 0; c < 8; ++c) verts[c] = b.add_vertex(CubeLabel{{{{vname(c)}}}});

    // Edges along each axis; edge key: endpoints.
    std::map<std::pair<int, int>, CubeId> edge_of;
    for (int c = 0; c < 8; ++c)
        for (int axis = 0; axis < 3; ++axis) {
            if (bit(c, axis)) continue;
            int d = c | (1 << axis);
            edge_of[{c, d}] =
                b.add_cube(CubeLabel{{{{vname(c), vname(d)}}}}, {{{verts[c], verts[d]}}});
        }

    // One square per face: fix one axis to a value; directions are the two
    // free axes in increasing order.
    for (int fixed = 0; fixed < 3; ++fixed)
        for (int value = 0; value < 2; ++value) {
            int a0 = fixed == 0 ? 1 : 0;
            int a1 = fixed == 2 ? 1 : 2;
            int base = value << fixed;
            auto corner = [&](int s0, int s1) { return base | (s0 << a0) | (s1 << a1); };
            auto edge = [&](int u, int v) {
                return edge_of.at({std::min(u, v), std::max(u, v)});
            };
            // facet(0, s): direction-0 coordinate = s, running along a1.
            std::vector<std::array<CubeId, 2>> facets(2);
            facets[0] = {edge(corner(0, 0), corner(0, 1)), edge(corner(1, 0), corner(1, 1))};
            facets[1] = {edge(corner(0, 0), corner(1, 0)), edge(corner(0, 1), corner(1, 1))};
            b.add_cube(CubeLabel{{{{"f" + std::to_string(fixed) + std::to_string(value)}}}},
                       std::move(facets));
        }
    return std::move(b).build();
}

}  // namespace fixtures

#endif
