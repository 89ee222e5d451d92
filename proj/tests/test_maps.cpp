#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubist/json_io.hpp"
#include "cubist/maps.hpp"
#include "oracles.hpp"

using namespace cubist;

TEST_CASE("salvetti of a single vertex is a circle") {
    CubeComplex t = salvetti(SimplicialGraph({"a"}, {}), 2);
    CHECK(t.f_vector() == std::vector<long>{1, 1});
}

TEST_CASE("salvetti of one edge is the one-square torus") {
    CubeComplex t = salvetti(SimplicialGraph({"a", "b"}, {{"a", "b"}}), 2);
    CHECK(t.f_vector() == std::vector<long>{1, 2, 1});
    SurfaceId s = identify_surface(t);
    CHECK(s.is_closed_surface);
    CHECK(s.orientable);
    CHECK(s.euler_characteristic == 0);
}

TEST_CASE("salvetti of Petersen: 1 vertex, 10 edges, 15 squares") {
    CubeComplex t = salvetti(builtin_graph("petersen"), 2);
    CHECK(t.f_vector() == std::vector<long>{1, 10, 15});
}

TEST_CASE("salvetti counts follow vertices/edges/triangles, links are flag") {
    for (const char* spec : {"cycle:5", "complete:4", "complete_bipartite:3,3", "petersen"}) {
        SimplicialGraph d = builtin_graph(spec);
        CubeComplex t = salvetti(d, 2);
        CHECK(t.count(0) == 1);
        CHECK(t.count(1) == d.vertex_count());
        CHECK(t.count(2) == d.edge_count());
        CHECK(check_flag(t).ok);
    }
    // Triangles appear as 3-cubes when max_dim allows.
    CubeComplex t3 = salvetti(builtin_graph("complete:4"), 3);
    CHECK(t3.count(3) == 4);
    CHECK(check_flag(t3).ok);
    CubeComplex d3 = salvetti(delta_graph(builtin_graph("complete_bipartite:3,3")), 2);
    CHECK(check_flag(d3).ok);
}

TEST_CASE("salvetti link is the signed clique complex") {
    SimplicialGraph d({"a", "b", "c"}, {{"a", "b"}});
    CubeComplex t = salvetti(d, 2);
    LinkComplex link = vertex_link(t, 0);
    CHECK(link.vertex_count() == 6);  // a+, a-, b+, b-, c+, c-
    int edges = 0;
    for (const auto& s : link.simplices())
        if (s.size() == 2) ++edges;
    CHECK(edges == 4);  // a{+,-} x b{+,-}
}

TEST_CASE("phi on a single edge maps the one-point complex") {
    SimplicialGraph g({"a", "b"}, {{"a", "b"}});
    CubicalMap f = phi_map(g, 2);
    CHECK(f.source.total_cubes() == 1);
    IsometryReport r = check_local_isometry(f);
    CHECK(r.certified);
}

TEST_CASE("phi on K33 uses the nine generators of Delta(K33)") {
    SimplicialGraph g = builtin_graph("complete_bipartite:3,3");
    CubicalMap f = phi_map(g, 2);
    CHECK(f.target_graph.vertex_count() == 9);
    std::set<int> used;
    for (const auto& [gen, sign] : f.assignment) {
        used.insert(gen);
        CHECK(sign == 1);
    }
    CHECK(used.size() == 9);
}

TEST_CASE("phi squares land on distinct adjacent generator pairs") {
    SimplicialGraph g = builtin_graph("complete:5");
    CubicalMap f = phi_map(g, 2);
    std::vector<int> zero{0, 0};
    for (CubeId sq = 0; sq < f.source.count(2); ++sq) {
        CubeId e0 = f.source.edge_at_corner(2, sq, zero, 0).edge;
        CubeId e1 = f.source.edge_at_corner(2, sq, zero, 1).edge;
        int g0 = f.assignment[e0].first;
        int g1 = f.assignment[e1].first;
        CHECK(g0 != g1);
        CHECK(f.target_graph.adjacent(g0, g1));
    }
}

TEST_CASE("local isometry certificates across the embedding corpus") {
    for (const char* spec : {"complete:4", "complete:5", "complete_bipartite:3,3", "cycle:6"}) {
        for (int n : {2, 3}) {
            CAPTURE(spec);
            CAPTURE(n);
            IsometryReport r = check_local_isometry(phi_map(builtin_graph(spec), n));
            CHECK(r.certified);
            CHECK(r.violations.empty());
            CHECK(r.source_flag_ok);
            CHECK(r.target_flag_ok);
            CHECK(r.vertex_tables.size() == static_cast<std::size_t>(
                                                reduced_config_space(builtin_graph(spec), n).count(0)));
        }
    }
}

TEST_CASE("parallel certificate checking agrees with serial") {
    CubicalMap f = phi_map(builtin_graph("complete:5"), 2);
    IsometryReport serial = check_local_isometry(f, 1);
    IsometryReport parallel = check_local_isometry(f, 4);
    CHECK(serial.certified == parallel.certified);
    CHECK(serial.violations.size() == parallel.violations.size());
    REQUIRE(serial.vertex_tables.size() == parallel.vertex_tables.size());
    for (std::size_t i = 0; i < serial.vertex_tables.size(); ++i)
        CHECK(serial.vertex_tables[i].vertex == parallel.vertex_tables[i].vertex);
}

TEST_CASE("sabotaged relabeling fails injectivity at a localized vertex") {
    SimplicialGraph g = builtin_graph("complete_bipartite:3,3");
    CubicalMap f = phi_map(g, 2);
    // Relabel every edge moving along G-edge 1,4 to the generator of 0,3;
    // those two G-edges are disjoint, so squares {03,14} become degenerate
    // and links at shared configurations collide.
    int gen_03 = *f.target_graph.vertex_index("0,3");
    int gen_14 = *f.target_graph.vertex_index("1,4");
    for (auto& [gen, sign] : f.assignment)
        if (gen == gen_14) gen = gen_03;
    IsometryReport r = check_local_isometry(f);
    CHECK_FALSE(r.certified);
    bool saw_injectivity = false, saw_cubical = false;
    for (const auto& v : r.violations) {
        if (v.kind == "link_injectivity") {
            saw_injectivity = true;
            CHECK(!v.where.empty());
        }
        if (v.kind == "not_cubical") saw_cubical = true;
    }
    CHECK(saw_injectivity);
    CHECK(saw_cubical);
}

TEST_CASE("presentation of X_1(C5) is one generator, no relators") {
    Presentation pres = fundamental_group_presentation(
        reduced_config_space(builtin_graph("cycle:5"), 1));
    CHECK(pres.generator_names.size() == 1);
    CHECK(pres.relators.empty());
}

TEST_CASE("presentation of X_2(path:3) is trivial (a tree)") {
    Presentation pres = fundamental_group_presentation(
        reduced_config_space(builtin_graph("path:3"), 2));
    CHECK(pres.generator_names.empty());
    CHECK(pres.relators.empty());
}

TEST_CASE("presentation of X_2(K33): 22 generators, 18 relators") {
    CubeComplex x = reduced_config_space(builtin_graph("complete_bipartite:3,3"), 2);
    Presentation pres = fundamental_group_presentation(x);
    CHECK(pres.generator_names.size() == 22);  // 36 - 15 + 1
    CHECK(pres.relators.size() == 18);
    // Euler consistency: generators - relators = 1 - chi.
    CHECK(static_cast<long>(pres.generator_names.size()) -
              static_cast<long>(pres.relators.size()) ==
          1 - x.euler_characteristic());
}

TEST_CASE("presentation Euler consistency across the corpus") {
    for (const char* spec : {"complete:4", "complete:5", "cycle:6"}) {
        CubeComplex x = reduced_config_space(builtin_graph(spec), 2);
        Presentation pres = fundamental_group_presentation(x);
        CHECK(static_cast<long>(pres.generator_names.size()) -
                  static_cast<long>(pres.relators.size()) ==
              1 - x.euler_characteristic());
    }
}

TEST_CASE("presentation rejects disconnected complexes") {
    // X_2 of two disjoint edges: configurations split by how points sit.
    SimplicialGraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CubeComplex x = reduced_config_space(g, 2);
    // {a,b} cannot move to {a,c} without disjointness violations en route;
    // the complex is disconnected.
    CHECK_THROWS_AS(fundamental_group_presentation(x), input_error);
}

TEST_CASE("relator images vanish: K33 and K5 via phi") {
    for (const char* spec : {"complete_bipartite:3,3", "complete:5"}) {
        CubicalMap f = phi_map(builtin_graph(spec), 2);
        Presentation pres = fundamental_group_presentation(f.source);
        InducedHom hom = induced_homomorphism(f, pres);
        CHECK(hom.all_relators_trivial);
        CHECK(hom.relator_trivial.size() == pres.relators.size());
    }
}

TEST_CASE("induced homomorphism on X_1(C3): three-letter image, no relators") {
    SimplicialGraph c3 = builtin_graph("cycle:3");
    CubicalMap f = phi_map(c3, 1);
    Presentation pres = fundamental_group_presentation(f.source);
    CHECK(pres.generator_names.size() == 1);
    CHECK(pres.relators.empty());
    InducedHom hom = induced_homomorphism(f, pres);
    REQUIRE(hom.generator_images.size() == 1);
    CHECK(hom.generator_images[0].size() == 3);
    // Delta(C3) has no edges, so the image is already reduced.
    CHECK(is_delta_reduced(hom.target, hom.generator_images[0]));
}

namespace {

GraphMorphism wrap_cover_c6_c3() {
    SimplicialGraph c6 = builtin_graph("cycle:6");
    SimplicialGraph c3 = builtin_graph("cycle:3");
    std::vector<std::pair<std::string, std::string>> map;
    for (int i = 0; i < 6; ++i) map.push_back({std::to_string(i), std::to_string(i % 3)});
    return GraphMorphism(c6, c3, map);
}

}  // namespace

TEST_CASE("cover homomorphism for the C6 -> C3 double cover") {
    // Delta = opposite of C3 = empty graph on three vertices (free RAAG).
    RaagPresentation base(opposite_graph(builtin_graph("cycle:3")));
    CoverHom hom = cover_homomorphism(base, wrap_cover_c6_c3(), 2);
    CHECK(hom.lifts_commute);
    REQUIRE(hom.generator_images.size() == 3);
    for (const Word& img : hom.generator_images) CHECK(img.size() == 2);
    // j(h0) multiplies the two antipodal lifts.
    CHECK(format_word(hom.cover, hom.generator_images[0]) == "0 3");

    // Images of delta-reduced words stay reduced; distinct normal forms map
    // to distinct normal forms.
    std::set<std::string> source_nf, image_nf;
    long count = 0;
    for (int len = 0; len <= 3; ++len)
        oracles::all_words(base, len, [&](const Word& w) {
            if (!is_delta_reduced(base, w)) return;
            ++count;
            Word img = hom.image_word(w);
            CHECK(img.size() == 2 * w.size());
            CHECK(is_delta_reduced(hom.cover, img));
            source_nf.insert(format_word(base, normal_form(base, w)));
            image_nf.insert(format_word(hom.cover, normal_form(hom.cover, img)));
        });
    CHECK(source_nf.size() == image_nf.size());
    CHECK(count == static_cast<long>(source_nf.size()));
}

TEST_CASE("identity cover gives the identity mapping") {
    SimplicialGraph delta({"a", "b", "c"}, {{"a", "b"}});
    SimplicialGraph op = opposite_graph(delta);
    std::vector<std::pair<std::string, std::string>> id_map;
    for (int v = 0; v < op.vertex_count(); ++v)
        id_map.push_back({op.vertex_name(v), op.vertex_name(v)});
    RaagPresentation base(delta);
    CoverHom hom = cover_homomorphism(base, GraphMorphism(op, op, id_map), 1);
    for (int h = 0; h < base.generator_count(); ++h) {
        REQUIRE(hom.generator_images[h].size() == 1);
        CHECK(hom.cover.generator_name(hom.generator_images[h][0].gen) ==
              base.generator_name(h));
    }
}

TEST_CASE("cover homomorphism rejects mismatched targets and bad covers") {
    RaagPresentation wrong_base(builtin_graph("cycle:3"));  // opposite is not C3
    CHECK_THROWS_AS(cover_homomorphism(wrong_base, wrap_cover_c6_c3(), 2), input_error);
    RaagPresentation base(opposite_graph(builtin_graph("cycle:3")));
    CHECK_THROWS_AS(cover_homomorphism(base, wrap_cover_c6_c3(), 3), input_error);
}

TEST_CASE("image length is sheets times word length") {
    RaagPresentation base(opposite_graph(builtin_graph("cycle:3")));
    CoverHom hom = cover_homomorphism(base, wrap_cover_c6_c3(), 2);
    Word w = parse_word(base, "0 1^-1 2 0^-1");
    CHECK(hom.image_word(w).size() == 2 * w.size());
}
