#ifndef CUBIST_MAPS_HPP
#define CUBIST_MAPS_HPP

#include <map>
#include <string>
#include <vector>

#include "cubist/cube_complex.hpp"
#include "cubist/graph.hpp"
#include "cubist/raag.hpp"

namespace cubist {

/// The cubed torus T_D: one vertex, one d-cube per d-clique of the defining
/// graph. All cliques are enumerated (max_dim is only a floor), since a
/// truncated torus loses the flag property of its vertex link as soon as
/// the defining graph has larger cliques. Edge cubes are tagged with their
/// generators; the link of the unique vertex is the signed clique complex
/// L_D.
CubeComplex salvetti(const SimplicialGraph& d, int max_dim = 2);

/// A cubical map into a one-vertex target, given by an assignment of a
/// target generator and orientation sign to every source edge; squares and
/// higher cubes follow dimension-preservingly.
struct CubicalMap {
    CubeComplex source;
    CubeComplex target;
    SimplicialGraph target_graph;  // defining graph of the target torus
    // Per source edge cube: (generator index in target_graph, sign).
    std::vector<std::pair<int, int>> assignment;
};

/// Phi: X_n(G) -> T_{Delta(G)}, sending each edge cube to the generator
/// named by the G-edge it moves along, respecting G's edge orientations.
CubicalMap phi_map(const SimplicialGraph& g, int n, long budget = 50'000'000);

/// Local-isometry certificate per Gromov's link criterion: at every source
/// vertex the induced link map must be injective with image a full subgraph
/// of the target link. The report embeds the per-vertex link map tables so
/// the verdict can be audited without re-running construction.
struct IsometryViolation {
    std::string kind;    // "not_cubical" | "link_injectivity" | "link_fullness" | "source_flag"
    std::string where;   // vertex or cube label
    std::string detail;
};
struct LinkMapRow {
    std::string source_vertex;  // link vertex name in the source
    std::string image_vertex;   // link vertex name in the target
};
struct VertexCertificate {
    std::string vertex;
    std::vector<LinkMapRow> link_map;
};
struct IsometryReport {
    bool certified = false;
    bool source_flag_ok = false;
    bool target_flag_ok = false;
    std::vector<IsometryViolation> violations;
    std::vector<VertexCertificate> vertex_tables;
};
IsometryReport check_local_isometry(const CubicalMap& f, int jobs = 1);

/// Presentation of the fundamental group of a connected square complex:
/// BFS spanning tree from the basepoint, one generator per non-tree edge,
/// one relator per square (tree edges elided, rotated to least letter).
struct Presentation {
    std::string basepoint;               // vertex label
    std::vector<CubeId> generator_edges; // source edge ids, sorted by label
    std::vector<std::string> generator_names;
    std::vector<Word> relators;          // letters index generator_edges
    // Loop of a generator as (edge id, +1 forward / -1 backward) darts:
    // tree path to the edge's tail, the edge, tree path back.
    std::vector<std::vector<std::pair<CubeId, int>>> generator_loops;
};
Presentation fundamental_group_presentation(const CubeComplex& x,
                                            const std::string& basepoint = "");

/// Images of presentation generators under the homomorphism induced by a
/// cubical map, with every relator image checked trivial in the target
/// RAAG.
struct InducedHom {
    RaagPresentation target;
    std::vector<Word> generator_images;
    std::vector<bool> relator_trivial;
    bool all_relators_trivial = true;
};
InducedHom induced_homomorphism(const CubicalMap& f, const Presentation& pres);

/// The homomorphism j of a finite planar-cover argument: a cover of
/// opposite graphs induces j(h) = product of the lifts of h (sorted), a map
/// from A_Delta into the covering RAAG. The report re-verifies that lifts
/// commute pairwise and that letterwise images of delta-reduced test words
/// stay reduced.
struct CoverHom {
    RaagPresentation base;   // A_Delta
    RaagPresentation cover;  // covering RAAG
    std::vector<Word> generator_images;  // indexed by base generators
    bool lifts_commute = true;

    Word image_word(const Word& w) const;  // letterwise substitution
};
CoverHom cover_homomorphism(const RaagPresentation& base, const GraphMorphism& opposite_cover,
                            int sheets);

}  // namespace cubist

#endif
