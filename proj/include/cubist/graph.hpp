#ifndef CUBIST_GRAPH_HPP
#define CUBIST_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubist {

/// Bad user input (malformed JSON, unknown builtin, invariant violation).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge as an index pair into the owning graph's vertex order,
/// with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite simple graph. Vertices are identified by strings and kept in
/// lexicographic order, so every derived object (edge names, delta graphs,
/// configuration-space labels) is canonical. Edges are an ordered set of
/// index pairs; an optional orientation assigns each edge a tail and head
/// (default tail = smaller endpoint).
class SimplicialGraph {
public:
    SimplicialGraph() = default;
    SimplicialGraph(std::vector<std::string> vertices,
                    std::vector<std::pair<std::string, std::string>> edges,
                    std::vector<std::pair<std::string, std::string>> orientation = {});

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int i) const { return names_.at(i); }
    std::optional<int> vertex_index(const std::string& name) const;

    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<int> edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    /// Canonical edge name: the two endpoint names joined by a comma,
    /// smaller first. Derived graphs use these as vertex identifiers.
    std::string edge_name(int e) const;

    bool has_custom_orientation() const { return custom_orientation_; }
    /// Tail/head of edge e under the graph's orientation.
    int tail(int e) const { return flipped_.at(e) ? edges_[e].v : edges_[e].u; }
    int head(int e) const { return flipped_.at(e) ? edges_[e].u : edges_[e].v; }

    /// Structural equality: same vertex names and same edge set.
    friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;           // sorted by (u, v)
    std::vector<bool> flipped_;         // per edge: true if tail is the larger endpoint
    bool custom_orientation_ = false;
    std::vector<std::vector<int>> adj_;       // sorted neighbor indices
    std::vector<std::vector<int>> incident_;  // sorted incident edge indices
};

/// Named graph families: complete:n, complete_bipartite:m,n, cycle:n,
/// path:n (n vertices), petersen.
SimplicialGraph builtin_graph(const std::string& name, const std::vector<int>& params);

/// Parse "family:p1,p2" shorthand used by the CLI.
SimplicialGraph builtin_graph(const std::string& spec);

/// Delta(G): one vertex per edge of G, adjacent iff the edges are disjoint
/// as closed sets (share no endpoint).
SimplicialGraph delta_graph(const SimplicialGraph& g);

/// Complement: same vertices, edge iff distinct and non-adjacent.
SimplicialGraph opposite_graph(const SimplicialGraph& g);

/// Line graph: one vertex per edge of G, adjacent iff the edges share an
/// endpoint. Equals opposite_graph(delta_graph(G)) label-for-label.
SimplicialGraph line_graph(const SimplicialGraph& g);

/// Replace every edge by a path of k edges through fresh valence-two
/// vertices named "<edge name>:<i>".
SimplicialGraph subdivide(const SimplicialGraph& g, int k);

/// Brute-force isomorphism test (backtracking, intended for <= 20 vertices).
bool isomorphic(const SimplicialGraph& a, const SimplicialGraph& b);

/// Component id per vertex, numbered by least contained vertex.
std::vector<int> connected_components(const SimplicialGraph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const SimplicialGraph& g);

/// Total vertex map between graphs. Edge preservation is part of the cover
/// verdict, so a collapsing map is representable and rejected by
/// validate_cover rather than at construction.
struct GraphMorphism {
    SimplicialGraph source;
    SimplicialGraph target;
    std::vector<int> vertex_map;  // source index -> target index

    GraphMorphism(SimplicialGraph src, SimplicialGraph tgt,
                  const std::vector<std::pair<std::string, std::string>>& map);
};

/// Result of covering-map validation; failure detail names the first
/// offending vertex.
struct CoverVerdict {
    bool valid = false;
    std::string detail;
};

/// A morphism is a k-sheeted covering iff it restricts to a bijection on
/// every vertex star, all fibers have exactly `sheets` elements, and each
/// source component maps onto a target component.
CoverVerdict validate_cover(const GraphMorphism& p, int sheets);

/// Advisory check for the subdivision fineness needed so that the reduced
/// configuration space of the subdivided graph models the full n-point
/// configuration space: every path between essential vertices (valence != 2)
/// passes through at least n-1 interior vertices, and every cycle has at
/// least n+1 edges. Reported, never certified.
struct SubdivisionHint {
    bool paths_ok = false;
    bool cycles_ok = false;
    std::string detail;
};
SubdivisionHint subdivision_hint(const SimplicialGraph& g, int n);

}  // namespace cubist

#endif
