#ifndef CUBIST_CUBE_COMPLEX_HPP
#define CUBIST_CUBE_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubist/graph.hpp"

namespace cubist {

/// A cell of a cube label: either a single vertex name or an edge given by
/// its two endpoint names (smaller first).
struct LabelSimplex {
    std::vector<std::string> verts;  // size 1 or 2
    std::string key() const;
    friend bool operator==(const LabelSimplex&, const LabelSimplex&) = default;
};

/// Canonical cube label: the sorted list of its simplices. For the reduced
/// configuration space this is the set of n disjoint carriers; other
/// complexes use it purely as an identifier.
struct CubeLabel {
    std::vector<LabelSimplex> simplices;  // sorted by key
    std::string key() const;
};

using CubeId = int;

/// Explicit finite cube complex. A d-cube records, for each of its d
/// directions and 2 sides, the id of the facet (d-1)-cube. Directions of a
/// facet are the remaining directions of the parent in the same relative
/// order; build() verifies that facet assignments commute so corners are
/// well defined even in the presence of identifications.
class CubeComplex {
public:
    int dimension() const { return static_cast<int>(cubes_.size()) - 1; }
    int count(int dim) const;
    long total_cubes() const;

    const CubeLabel& label(int dim, CubeId id) const { return cubes_.at(dim).at(id).label; }
    std::optional<CubeId> find(int dim, const std::string& label_key) const;
    CubeId facet(int dim, CubeId id, int dir, int side) const;

    std::vector<long> f_vector() const;
    long euler_characteristic() const;

    /// Vertex reached from cube (dim,id) at the corner given by one side per
    /// direction.
    CubeId corner_vertex(int dim, CubeId id, const std::vector<int>& sides) const;

    /// The edge of the cube running in direction `dir` through the given
    /// corner, together with which end of that edge sits at the corner.
    struct EdgeEnd {
        CubeId edge;
        int end;  // 0 = the facet(.,0,0) end, 1 = the other
        friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
    };
    EdgeEnd edge_at_corner(int dim, CubeId id, const std::vector<int>& sides, int dir) const;

    /// Generator tag on edge cubes (the G-edge an edge of X_n(G) moves
    /// along, or the Salvetti generator); sign is +1 when the edge's side-0
    /// end is the generator's tail.
    struct EdgeTag {
        std::string generator;
        int sign = +1;
    };
    bool has_edge_tags() const { return !edge_tags_.empty(); }
    const EdgeTag& edge_tag(CubeId edge) const { return edge_tags_.at(edge); }

    /// Incident edges (with multiplicity one per id) of a vertex.
    std::vector<CubeId> edges_at_vertex(CubeId vertex) const;

    friend class CubeComplexBuilder;

private:
    struct Cube {
        CubeLabel label;
        std::vector<std::array<CubeId, 2>> facets;  // [dir][side]
    };
    std::vector<std::vector<Cube>> cubes_;                 // by dimension
    std::vector<std::map<std::string, CubeId>> index_;     // label key -> id
    std::vector<EdgeTag> edge_tags_;                       // per 1-cube, optional
};

/// Incremental construction; build() checks face closure and coherence.
class CubeComplexBuilder {
public:
    CubeId add_vertex(CubeLabel label);
    CubeId add_cube(CubeLabel label, std::vector<std::array<CubeId, 2>> facets);
    void tag_edge(CubeId edge, std::string generator, int sign = +1);
    CubeComplex build() &&;

private:
    CubeComplex c_;
};

/// Link of a vertex: one vertex per incident edge-end, one (d-1)-simplex per
/// corner of a d-cube at the base vertex, closed under subsets.
class LinkComplex {
public:
    struct Vertex {
        CubeComplex::EdgeEnd end;
        std::string name;  // edge label key + "+" (side-0 end) or "-"
    };

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int i) const { return vertices_.at(i); }
    int index_of(const CubeComplex::EdgeEnd& e) const;

    bool has_simplex(const std::vector<int>& sorted_verts) const;
    bool edge(int a, int b) const;
    const std::set<std::vector<int>>& simplices() const { return simplices_; }
    int dimension() const;

    /// The 1-skeleton is a single cycle covering all vertices.
    bool is_single_cycle() const;

    friend LinkComplex vertex_link(const CubeComplex&, CubeId);
    friend std::vector<LinkComplex> all_vertex_links(const CubeComplex&);

private:
    std::vector<Vertex> vertices_;  // sorted by EdgeEnd
    std::set<std::vector<int>> simplices_;
};

LinkComplex vertex_link(const CubeComplex& x, CubeId vertex);

/// Links of every vertex in one sweep over cube corners.
std::vector<LinkComplex> all_vertex_links(const CubeComplex& x);

/// Gromov flag condition on every vertex link; a violation is a minimal
/// clique in a link 1-skeleton that spans no simplex.
struct FlagViolation {
    std::string vertex;               // label key of the base vertex
    std::vector<std::string> clique;  // link vertex names
};
struct FlagReport {
    bool ok = true;
    std::vector<FlagViolation> violations;
};
FlagReport check_flag(const CubeComplex& x);

/// Closed-surface recognition for 2-dimensional complexes.
struct SurfaceId {
    bool is_closed_surface = false;
    long euler_characteristic = 0;
    bool orientable = false;  // defined only when closed
    std::string detail;
};
SurfaceId identify_surface(const CubeComplex& x);

/// Embeddedness diagnostics for complexes of dimension <= 2: every cube has
/// pairwise distinct proper faces and any two cubes meet in at most one
/// common face.
bool is_embedded(const CubeComplex& x, std::string* why = nullptr);

/// The reduced configuration space X_n(G): d-cubes are sets of n mutually
/// disjoint simplices of G, d of them edges. Edge cubes are tagged with the
/// G-edge they move along. Throws budget_error if the cube count would
/// exceed `budget`.
CubeComplex reduced_config_space(const SimplicialGraph& g, int n,
                                 long budget = 50'000'000);

namespace detail {
/// Orientation propagation with an explicit square processing order; the
/// verdict must not depend on it (exercised by tests).
bool orientable_with_order(const CubeComplex& x, const std::vector<CubeId>& square_order);
}  // namespace detail

}  // namespace cubist

#endif
