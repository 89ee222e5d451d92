#include "cubist/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

namespace cubist {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

PlanarityResult is_planar(const SimplicialGraph& g) {
    BoostGraph bg(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [desc, ok] = boost::add_edge(g.edges()[e].u, g.edges()[e].v, bg);
        boost::put(boost::edge_index, bg, desc, e);
    }

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(g.vertex_count());
    std::vector<EdgeDesc> kuratowski;

    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    PlanarityResult result;
    result.planar = planar;
    auto eidx = boost::get(boost::edge_index, bg);
    if (planar) {
        result.rotation.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            for (const EdgeDesc& d : embedding[v])
                result.rotation[v].push_back(eidx[d]);
        std::string why;
        if (!verify_rotation_system(g, result.rotation, &why))
            throw std::logic_error("planarity witness failed self-check: " + why);
    } else {
        std::set<int> edges;
        for (const EdgeDesc& d : kuratowski) edges.insert(eidx[d]);
        // The isolated subgraph may carry hanging paths; trim vertices of
        // degree one until only the subdivision remains.
        for (;;) {
            std::map<int, int> deg;
            for (int e : edges) {
                ++deg[g.edges()[e].u];
                ++deg[g.edges()[e].v];
            }
            std::set<int> trimmed;
            for (int e : edges)
                if (deg[g.edges()[e].u] > 1 && deg[g.edges()[e].v] > 1) trimmed.insert(e);
            if (trimmed.size() == edges.size()) break;
            edges = std::move(trimmed);
        }
        result.kuratowski_edges.assign(edges.begin(), edges.end());
        std::string why;
        if (!verify_kuratowski(g, result.kuratowski_edges, &result.kuratowski_kind, &why))
            throw std::logic_error("Kuratowski witness failed self-check: " + why);
    }
    return result;
}

bool verify_rotation_system(const SimplicialGraph& g,
                            const std::vector<std::vector<int>>& rotation, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(rotation.size()) != g.vertex_count())
        return fail("rotation system has wrong vertex count");
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> got = rotation[v];
        std::vector<int> want = g.incident_edges(v);
        std::sort(got.begin(), got.end());
        if (got != want) return fail("rotation at '" + g.vertex_name(v) + "' is not the star");
    }

    // Trace faces: a dart is (edge, endpoint it leaves from); the successor of
    // a dart arriving at v along e is the next edge after e in rotation[v],
    // left from v.
    std::map<std::pair<int, int>, int> pos;  // (vertex, edge) -> index in rotation
    for (int v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 0; i < rotation[v].size(); ++i)
            pos[{v, rotation[v][i]}] = static_cast<int>(i);

    auto other_end = [&](int e, int v) {
        const Edge& ed = g.edges()[e];
        return ed.u == v ? ed.v : ed.u;
    };

    std::set<std::pair<int, int>> visited;  // darts (from_vertex, edge)
    std::vector<int> faces_per_comp(g.vertex_count(), 0);
    std::vector<int> comp = connected_components(g);
    for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
        for (int e0 : rotation[v0]) {
            if (visited.count({v0, e0})) continue;
            int v = v0, e = e0;
            do {
                visited.insert({v, e});
                int w = other_end(e, v);
                int i = pos.at({w, e});
                int next = rotation[w][(i + 1) % rotation[w].size()];
                v = w;
                e = next;
            } while (!visited.count({v, e}));
            ++faces_per_comp[comp[v0]];
        }
    }

    std::map<int, std::array<long, 3>> vef;  // comp -> (V, E, F)
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& t = vef[comp[v]];
        ++t[0];
        t[2] = faces_per_comp[comp[v]];
    }
    for (const Edge& e : g.edges()) ++vef[comp[e.u]][1];
    for (auto& [c, t] : vef) {
        if (t[1] == 0) t[2] = 1;  // an edgeless component bounds one face
        if (t[0] - t[1] + t[2] != 2)
            return fail("Euler check failed on component of '" + g.vertex_name(c) + "': V=" +
                        std::to_string(t[0]) + " E=" + std::to_string(t[1]) +
                        " F=" + std::to_string(t[2]));
    }
    return true;
}

bool verify_kuratowski(const SimplicialGraph& g, const std::vector<int>& edges,
                       std::string* kind, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::set<std::pair<int, int>> sub;
    for (int e : edges) {
        if (e < 0 || e >= g.edge_count()) return fail("witness names a non-edge");
        sub.insert({g.edges()[e].u, g.edges()[e].v});
    }
    if (sub.size() != edges.size()) return fail("witness repeats an edge");

    std::map<int, std::set<int>> adj;
    for (auto [u, v] : sub) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    // Suppress valence-two vertices; a genuine subdivision collapses to its
    // branch graph without ever creating loops or parallel edges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = adj.begin(); it != adj.end(); ++it) {
            if (it->second.size() != 2) continue;
            auto nb = it->second.begin();
            int a = *nb++;
            int b = *nb;
            if (adj[a].count(b)) return fail("suppression creates a parallel edge");
            adj[a].erase(it->first);
            adj[b].erase(it->first);
            adj[a].insert(b);
            adj[b].insert(a);
            adj.erase(it);
            changed = true;
            break;
        }
    }

    std::size_t nv = adj.size(), ne = 0;
    bool all4 = true, all3 = true;
    for (const auto& [v, nbs] : adj) {
        ne += nbs.size();
        all4 = all4 && nbs.size() == 4;
        all3 = all3 && nbs.size() == 3;
    }
    ne /= 2;
    if (nv == 5 && ne == 10 && all4) {
        if (kind) *kind = "K5";
        return true;
    }
    if (nv == 6 && ne == 9 && all3) {
        // Two-color to confirm bipartiteness.
        std::map<int, int> color;
        std::vector<int> stack{adj.begin()->first};
        color[stack[0]] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!color.count(w)) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return fail("cubic branch graph is not bipartite");
                }
            }
        }
        if (kind) *kind = "K33";
        return true;
    }
    return fail("branch graph is neither K5 nor K33");
}

}  // namespace cubist
