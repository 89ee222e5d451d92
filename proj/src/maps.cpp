#include "cubist/maps.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <queue>
#include <set>
#include <thread>

namespace cubist {

CubeComplex salvetti(const SimplicialGraph& d, int max_dim) {
    if (max_dim < 1) throw input_error("max_dim must be >= 1");
    CubeComplexBuilder builder;
    builder.add_vertex(CubeLabel{});  // the empty clique

    // Every clique becomes a cube: truncating at max_dim would break the
    // flag property of the vertex link whenever the defining graph has
    // cliques above it, so max_dim only floors the enumeration.
    int limit = std::max(max_dim, d.vertex_count());

    // Cliques by size, ids per layer keyed by sorted member list.
    std::map<std::vector<int>, CubeId> prev, cur;
    prev[{}] = 0;
    std::vector<std::vector<int>> layer{{}};
    for (int dim = 1; dim <= limit; ++dim) {
        std::vector<std::vector<int>> next_layer;
        for (const auto& clique : layer) {
            int start = clique.empty() ? 0 : clique.back() + 1;
            for (int v = start; v < d.vertex_count(); ++v) {
                bool ok = true;
                for (int u : clique)
                    if (!d.adjacent(u, v)) ok = false;
                if (!ok) continue;
                std::vector<int> ext = clique;
                ext.push_back(v);
                CubeLabel label;
                for (int u : ext) label.simplices.push_back({{d.vertex_name(u)}});
                // Facet in direction j drops the j-th generator; both sides
                // land on the same sub-clique.
                std::vector<std::array<CubeId, 2>> facets(dim);
                for (int j = 0; j < dim; ++j) {
                    std::vector<int> sub = ext;
                    sub.erase(sub.begin() + j);
                    CubeId f = prev.at(sub);
                    facets[j] = {f, f};
                }
                CubeId id = builder.add_cube(std::move(label), std::move(facets));
                if (dim == 1) builder.tag_edge(id, d.vertex_name(v), +1);
                cur[ext] = id;
                next_layer.push_back(std::move(ext));
            }
        }
        prev = std::move(cur);
        cur.clear();
        layer = std::move(next_layer);
        if (layer.empty()) break;
    }
    return std::move(builder).build();
}

CubicalMap phi_map(const SimplicialGraph& g, int n, long budget) {
    CubicalMap f;
    f.source = reduced_config_space(g, n, budget);
    f.target_graph = delta_graph(g);
    f.target = salvetti(f.target_graph, std::max(n, 1));
    f.assignment.resize(f.source.count(1));
    for (CubeId e = 0; e < f.source.count(1); ++e) {
        const auto& tag = f.source.edge_tag(e);
        auto gen = f.target_graph.vertex_index(tag.generator);
        if (!gen) throw std::logic_error("edge tag names no generator of Delta(G)");
        f.assignment[e] = {*gen, tag.sign};
    }
    // The map must be cubical by construction: every cube's directions
    // carry distinct clique-spanning generators.
    for (int dim = 2; dim <= f.source.dimension(); ++dim)
        for (CubeId id = 0; id < f.source.count(dim); ++id) {
            std::vector<int> zero(dim, 0);
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    int gi = f.assignment[f.source.edge_at_corner(dim, id, zero, i).edge].first;
                    int gj = f.assignment[f.source.edge_at_corner(dim, id, zero, j).edge].first;
                    if (gi == gj || !f.target_graph.adjacent(gi, gj))
                        throw std::logic_error("phi assignment is not cubical on '" +
                                               f.source.label(dim, id).key() + "'");
                }
        }
    return f;
}

namespace {

// Directions of a cube as its edge cubes: direction i is the edge at the
// all-zeros corner in direction i.
std::vector<CubeId> direction_edges(const CubeComplex& x, int dim, CubeId id) {
    std::vector<int> sides(dim, 0);
    std::vector<CubeId> out(dim);
    for (int i = 0; i < dim; ++i) out[i] = x.edge_at_corner(dim, id, sides, i).edge;
    return out;
}

}  // namespace

IsometryReport check_local_isometry(const CubicalMap& f, int jobs) {
    IsometryReport report;

    FlagReport source_flag = check_flag(f.source);
    report.source_flag_ok = source_flag.ok;
    for (const auto& v : source_flag.violations) {
        std::string clique;
        for (const auto& c : v.clique) clique += (clique.empty() ? "" : " ") + c;
        report.violations.push_back({"source_flag", v.vertex, "clique {" + clique + "} spans no simplex"});
    }
    report.target_flag_ok = check_flag(f.target).ok;

    // Every cube's directions must carry distinct, pairwise-adjacent
    // generators, and opposite edges of a square the same assignment; a
    // failure here is reported against the cube.
    for (int dim = 2; dim <= f.source.dimension(); ++dim) {
        for (CubeId id = 0; id < f.source.count(dim); ++id) {
            std::vector<CubeId> dirs = direction_edges(f.source, dim, id);
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    int gi = f.assignment[dirs[i]].first;
                    int gj = f.assignment[dirs[j]].first;
                    if (gi == gj)
                        report.violations.push_back(
                            {"not_cubical", f.source.label(dim, id).key(),
                             "two directions map to generator '" + f.target_graph.vertex_name(gi) +
                                 "'"});
                    else if (!f.target_graph.adjacent(gi, gj))
                        report.violations.push_back(
                            {"not_cubical", f.source.label(dim, id).key(),
                             "generators '" + f.target_graph.vertex_name(gi) + "' and '" +
                                 f.target_graph.vertex_name(gj) + "' span no clique"});
                }
        }
    }
    for (CubeId sq = 0; sq < f.source.count(2); ++sq)
        for (int dir : {0, 1}) {
            // Facets across direction `dir` are the two parallel copies of
            // the other direction's edge.
            CubeId e0 = f.source.facet(2, sq, dir, 0);
            CubeId e1 = f.source.facet(2, sq, dir, 1);
            if (f.assignment[e0] != f.assignment[e1])
                report.violations.push_back({"not_cubical", f.source.label(2, sq).key(),
                                             "opposite edges carry different assignments"});
        }

    if (f.target.count(0) != 1)
        throw input_error("local-isometry checker expects a one-vertex target");
    LinkComplex target_link = vertex_link(f.target, 0);
    std::vector<LinkComplex> source_links = all_vertex_links(f.source);

    // Image of a source link vertex: the target edge cube of its generator,
    // same end when the sign is +, flipped when -.
    std::map<int, CubeId> gen_edge;  // generator index -> target edge cube
    for (CubeId e = 0; e < f.target.count(1); ++e) {
        auto idx = f.target_graph.vertex_index(f.target.edge_tag(e).generator);
        gen_edge[*idx] = e;
    }
    auto image_of = [&](const CubeComplex::EdgeEnd& end) {
        auto [gen, sign] = f.assignment[end.edge];
        return CubeComplex::EdgeEnd{gen_edge.at(gen), sign > 0 ? end.end : 1 - end.end};
    };

    int nv = f.source.count(0);
    std::vector<std::vector<IsometryViolation>> vviol(nv);
    std::vector<VertexCertificate> tables(nv);

    auto run_vertex = [&](CubeId v) {
        const LinkComplex& link = source_links[v];
        VertexCertificate& table = tables[v];
        table.vertex = f.source.label(0, v).key();
        std::vector<int> image(link.vertex_count());
        std::map<int, int> preimage;  // target link index -> source link index
        for (int a = 0; a < link.vertex_count(); ++a) {
            CubeComplex::EdgeEnd img = image_of(link.vertex(a).end);
            int ti = target_link.index_of(img);
            image[a] = ti;
            table.link_map.push_back({link.vertex(a).name, target_link.vertex(ti).name});
            auto [it, fresh] = preimage.emplace(ti, a);
            if (!fresh)
                vviol[v].push_back({"link_injectivity", table.vertex,
                                    "link vertices '" + link.vertex(it->second).name + "' and '" +
                                        link.vertex(a).name + "' both map to '" +
                                        target_link.vertex(ti).name + "'"});
        }
        // Fullness of the image 1-skeleton.
        for (int a = 0; a < link.vertex_count(); ++a)
            for (int b = a + 1; b < link.vertex_count(); ++b) {
                if (image[a] == image[b]) continue;  // injectivity already flagged
                if (target_link.edge(image[a], image[b]) && !link.edge(a, b))
                    vviol[v].push_back(
                        {"link_fullness", table.vertex,
                         "target edge between '" + target_link.vertex(image[a]).name + "' and '" +
                             target_link.vertex(image[b]).name + "' has no source edge between '" +
                             link.vertex(a).name + "' and '" + link.vertex(b).name + "'"});
            }
    };

    if (jobs <= 1) {
        for (CubeId v = 0; v < nv; ++v) run_vertex(v);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (int v = next.fetch_add(1); v < nv; v = next.fetch_add(1)) run_vertex(v);
            });
        for (auto& t : pool) t.join();
    }
    for (CubeId v = 0; v < nv; ++v)
        for (auto& viol : vviol[v]) report.violations.push_back(std::move(viol));
    report.vertex_tables = std::move(tables);
    report.certified = report.violations.empty() && report.source_flag_ok && report.target_flag_ok;
    return report;
}

Presentation fundamental_group_presentation(const CubeComplex& x, const std::string& basepoint) {
    if (x.dimension() > 2)
        throw input_error("presentation extraction needs a complex of dimension <= 2");
    if (x.count(0) == 0) throw input_error("empty complex");

    CubeId base = 0;
    if (!basepoint.empty()) {
        auto found = x.find(0, basepoint);
        if (!found) throw input_error("unknown basepoint '" + basepoint + "'");
        base = *found;
    }

    // BFS spanning tree, children visited in edge-label order.
    int nv = x.count(0);
    std::vector<std::vector<std::pair<std::string, CubeId>>> star(nv);
    for (CubeId e = 0; e < x.count(1); ++e) {
        star[x.facet(1, e, 0, 0)].push_back({x.label(1, e).key(), e});
        star[x.facet(1, e, 0, 1)].push_back({x.label(1, e).key(), e});
    }
    for (auto& s : star) std::sort(s.begin(), s.end());

    std::vector<bool> visited(nv, false), tree_edge(x.count(1), false);
    // parent dart: (edge, +1 if the tree walks it side0->side1 toward the child)
    std::vector<std::pair<CubeId, int>> parent(nv, {-1, 0});
    std::queue<CubeId> q;
    visited[base] = true;
    q.push(base);
    int reached = 1;
    while (!q.empty()) {
        CubeId v = q.front();
        q.pop();
        for (const auto& [key, e] : star[v]) {
            CubeId a = x.facet(1, e, 0, 0), b = x.facet(1, e, 0, 1);
            CubeId w = a == v ? b : a;
            if (visited[w]) continue;
            if (a == b) continue;  // self-identified edge is never a tree edge
            visited[w] = true;
            tree_edge[e] = true;
            parent[w] = {e, a == v ? +1 : -1};
            q.push(w);
            ++reached;
        }
    }
    if (reached != nv) {
        int missing = 0;
        for (bool b : visited) missing += !b;
        throw input_error("complex is disconnected: " + std::to_string(missing) +
                          " vertices unreachable from the basepoint");
    }

    Presentation pres;
    pres.basepoint = x.label(0, base).key();
    std::vector<std::pair<std::string, CubeId>> gens;
    for (CubeId e = 0; e < x.count(1); ++e)
        if (!tree_edge[e]) gens.push_back({x.label(1, e).key(), e});
    std::sort(gens.begin(), gens.end());
    std::vector<int> gen_of_edge(x.count(1), -1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        pres.generator_edges.push_back(gens[i].second);
        pres.generator_names.push_back(gens[i].first);
        gen_of_edge[gens[i].second] = static_cast<int>(i);
    }

    // Tree path from the basepoint to v as darts.
    auto path_to = [&](CubeId v) {
        std::vector<std::pair<CubeId, int>> back;
        while (v != base) {
            auto [e, dir] = parent[v];
            back.push_back({e, dir});
            v = dir > 0 ? x.facet(1, e, 0, 0) : x.facet(1, e, 0, 1);
        }
        std::reverse(back.begin(), back.end());
        return back;
    };

    for (std::size_t i = 0; i < pres.generator_edges.size(); ++i) {
        CubeId e = pres.generator_edges[i];
        std::vector<std::pair<CubeId, int>> loop = path_to(x.facet(1, e, 0, 0));
        loop.push_back({e, +1});
        auto ret = path_to(x.facet(1, e, 0, 1));
        std::reverse(ret.begin(), ret.end());
        for (auto [te, dir] : ret) loop.push_back({te, -dir});
        pres.generator_loops.push_back(std::move(loop));
    }

    // Relator of a square: bottom and right forward, top and left backward,
    // tree edges elided, rotated to start at the least letter.
    for (CubeId sq = 0; sq < x.count(2); ++sq) {
        std::array<std::pair<CubeId, int>, 4> boundary = {
            std::pair<CubeId, int>{x.facet(2, sq, 1, 0), +1},
            {x.facet(2, sq, 0, 1), +1},
            {x.facet(2, sq, 1, 1), -1},
            {x.facet(2, sq, 0, 0), -1}};
        Word relator;
        for (auto [e, dir] : boundary)
            if (gen_of_edge[e] >= 0) relator.push_back({gen_of_edge[e], dir});
        if (!relator.empty()) {
            Word best = relator;
            for (std::size_t r = 1; r < relator.size(); ++r) {
                Word rot(relator.begin() + r, relator.end());
                rot.insert(rot.end(), relator.begin(), relator.begin() + r);
                if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end()))
                    best = rot;
            }
            relator = best;
        }
        pres.relators.push_back(std::move(relator));
    }
    return pres;
}

InducedHom induced_homomorphism(const CubicalMap& f, const Presentation& pres) {
    InducedHom hom{RaagPresentation(f.target_graph), {}, {}, true};
    auto dart_letter = [&](CubeId e, int dir) {
        auto [gen, sign] = f.assignment[e];
        return Letter{gen, sign * dir};
    };
    for (const auto& loop : pres.generator_loops) {
        Word image;
        for (auto [e, dir] : loop) image.push_back(dart_letter(e, dir));
        hom.generator_images.push_back(std::move(image));
    }
    for (const Word& rel : pres.relators) {
        Word image;
        for (const Letter& l : rel) {
            const Word& g = hom.generator_images[l.gen];
            Word part = l.sign > 0 ? g : inverse_word(g);
            image.insert(image.end(), part.begin(), part.end());
        }
        bool trivial = is_trivial(hom.target, image);
        hom.relator_trivial.push_back(trivial);
        hom.all_relators_trivial = hom.all_relators_trivial && trivial;
    }
    return hom;
}

Word CoverHom::image_word(const Word& w) const {
    Word out;
    for (const Letter& l : w) {
        const Word& img = generator_images[l.gen];
        if (l.sign > 0)
            out.insert(out.end(), img.begin(), img.end());
        else {
            Word inv = inverse_word(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return out;
}

CoverHom cover_homomorphism(const RaagPresentation& base, const GraphMorphism& opposite_cover,
                            int sheets) {
    CoverVerdict verdict = validate_cover(opposite_cover, sheets);
    if (!verdict.valid) throw input_error("invalid cover: " + verdict.detail);
    if (!(opposite_cover.target == opposite_graph(base.defining_graph())))
        throw input_error("cover target is not the opposite of the defining graph");

    CoverHom hom{base, RaagPresentation(opposite_graph(opposite_cover.source)), {}, true};
    const SimplicialGraph& src = opposite_cover.source;
    for (int h = 0; h < base.generator_count(); ++h) {
        // Lifts of h, in source vertex order; the image word multiplies them
        // in that order. Any other order differs by commutations, which the
        // report verifies below rather than assumes.
        Word image;
        std::vector<int> lifts;
        for (int v = 0; v < src.vertex_count(); ++v)
            if (opposite_cover.vertex_map[v] == h) lifts.push_back(v);
        for (int v : lifts) {
            auto idx = hom.cover.generator_index(src.vertex_name(v));
            image.push_back({*idx, +1});
        }
        for (std::size_t i = 0; i < lifts.size() && hom.lifts_commute; ++i)
            for (std::size_t j = i + 1; j < lifts.size() && hom.lifts_commute; ++j) {
                Word a{image[i]}, b{image[j]};
                if (!is_trivial(hom.cover, concat(concat(a, b), inverse_word(concat(b, a)))))
                    hom.lifts_commute = false;
            }
        hom.generator_images.push_back(std::move(image));
    }
    return hom;
}

}  // namespace cubist
