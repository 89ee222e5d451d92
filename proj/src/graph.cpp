#include "cubist/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace cubist {

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 std::vector<std::pair<std::string, std::string>> edges,
                                 std::vector<std::pair<std::string, std::string>> orientation) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw input_error("duplicate vertex identifier");
    names_ = std::move(vertices);

    auto index_of = [&](const std::string& name) {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name)
            throw input_error("edge endpoint '" + name + "' is not a declared vertex");
        return static_cast<int>(it - names_.begin());
    };

    std::set<Edge> edge_set;
    for (const auto& [a, b] : edges) {
        int u = index_of(a);
        int v = index_of(b);
        if (u == v) throw input_error("loop edge at vertex '" + a + "'");
        if (u > v) std::swap(u, v);
        if (!edge_set.insert(Edge{u, v}).second)
            throw input_error("duplicate edge " + a + "," + b);
    }
    edges_.assign(edge_set.begin(), edge_set.end());
    flipped_.assign(edges_.size(), false);

    if (!orientation.empty()) {
        custom_orientation_ = true;
        std::vector<bool> seen(edges_.size(), false);
        for (const auto& [t, h] : orientation) {
            int a = index_of(t);
            int b = index_of(h);
            auto e = edge_index(a, b);
            if (!e) throw input_error("orientation names a non-edge " + t + "," + h);
            if (seen[*e]) throw input_error("orientation covers edge " + t + "," + h + " twice");
            seen[*e] = true;
            flipped_[*e] = (a > b);
        }
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (!seen[e]) throw input_error("orientation misses edge " + edge_name(static_cast<int>(e)));
    }

    adj_.assign(names_.size(), {});
    incident_.assign(names_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        adj_[edges_[e].u].push_back(edges_[e].v);
        adj_[edges_[e].v].push_back(edges_[e].u);
        incident_[edges_[e].u].push_back(static_cast<int>(e));
        incident_[edges_[e].v].push_back(static_cast<int>(e));
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<int> SimplicialGraph::vertex_index(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

std::optional<int> SimplicialGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || !(*it == Edge{u, v})) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::string SimplicialGraph::edge_name(int e) const {
    return names_[edges_.at(e).u] + "," + names_[edges_.at(e).v];
}

namespace {

std::vector<std::string> numbered_names(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

}  // namespace

SimplicialGraph builtin_graph(const std::string& name, const std::vector<int>& params) {
    for (int p : params)
        if (p <= 0) throw input_error("builtin graph parameters must be positive");
    std::vector<std::pair<std::string, std::string>> edges;
    auto s = [](int i) { return std::to_string(i); };

    if (name == "complete") {
        if (params.size() != 1) throw input_error("complete takes one parameter");
        int n = params[0];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(s(i), s(j));
        return SimplicialGraph(numbered_names(n), edges);
    }
    if (name == "complete_bipartite") {
        if (params.size() != 2) throw input_error("complete_bipartite takes two parameters");
        int m = params[0], n = params[1];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) edges.emplace_back(s(i), s(m + j));
        return SimplicialGraph(numbered_names(m + n), edges);
    }
    if (name == "cycle") {
        if (params.size() != 1) throw input_error("cycle takes one parameter");
        int n = params[0];
        if (n < 3) throw input_error("cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) edges.emplace_back(s(i), s((i + 1) % n));
        return SimplicialGraph(numbered_names(n), edges);
    }
    if (name == "path") {
        if (params.size() != 1) throw input_error("path takes one parameter");
        int n = params[0];
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(s(i), s(i + 1));
        return SimplicialGraph(numbered_names(n), edges);
    }
    if (name == "petersen") {
        if (!params.empty()) throw input_error("petersen takes no parameters");
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(s(i), s((i + 1) % 5));
            edges.emplace_back(s(i), s(i + 5));
            edges.emplace_back(s(5 + i), s(5 + (i + 2) % 5));
        }
        return SimplicialGraph(numbered_names(10), edges);
    }
    throw input_error("unknown builtin graph '" + name + "'");
}

SimplicialGraph builtin_graph(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                params.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw input_error("bad builtin parameter '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return builtin_graph(name, params);
}

namespace {

bool edges_disjoint(const Edge& a, const Edge& b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

}  // namespace

SimplicialGraph delta_graph(const SimplicialGraph& g) {
    std::vector<std::string> verts;
    for (int e = 0; e < g.edge_count(); ++e) verts.push_back(g.edge_name(e));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f)
            if (edges_disjoint(g.edges()[e], g.edges()[f]))
                edges.emplace_back(g.edge_name(e), g.edge_name(f));
    return SimplicialGraph(std::move(verts), std::move(edges));
}

SimplicialGraph opposite_graph(const SimplicialGraph& g) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(g.vertex_name(u), g.vertex_name(v));
    return SimplicialGraph(g.vertex_names(), std::move(edges));
}

SimplicialGraph line_graph(const SimplicialGraph& g) {
    std::vector<std::string> verts;
    for (int e = 0; e < g.edge_count(); ++e) verts.push_back(g.edge_name(e));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f)
            if (!edges_disjoint(g.edges()[e], g.edges()[f]))
                edges.emplace_back(g.edge_name(e), g.edge_name(f));
    return SimplicialGraph(std::move(verts), std::move(edges));
}

SimplicialGraph subdivide(const SimplicialGraph& g, int k) {
    if (k < 1) throw input_error("subdivision parameter must be >= 1");
    std::vector<std::string> verts = g.vertex_names();
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::string prev = g.vertex_name(g.edges()[e].u);
        for (int i = 1; i < k; ++i) {
            std::string fresh = g.edge_name(e) + ":" + std::to_string(i);
            verts.push_back(fresh);
            edges.emplace_back(prev, fresh);
            prev = std::move(fresh);
        }
        edges.emplace_back(prev, g.vertex_name(g.edges()[e].v));
    }
    return SimplicialGraph(std::move(verts), std::move(edges));
}

namespace {

bool extend_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b,
                        std::vector<int>& map, std::vector<bool>& used, int next) {
    if (next == a.vertex_count()) return true;
    for (int cand = 0; cand < b.vertex_count(); ++cand) {
        if (used[cand] || b.degree(cand) != a.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (a.adjacent(prev, next) != b.adjacent(map[prev], cand)) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_isomorphism(a, b, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<bool> used(b.vertex_count(), false);
    return extend_isomorphism(a, b, map, used, 0);
}

std::vector<int> connected_components(const SimplicialGraph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (comp[start] != -1) continue;
        std::queue<int> q;
        q.push(start);
        comp[start] = start;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = start;
                    q.push(w);
                }
        }
    }
    return comp;
}

std::optional<int> girth(const SimplicialGraph& g) {
    std::optional<int> best;
    // BFS from each vertex; a non-tree edge closing at depths d1, d2 gives a
    // cycle of length d1 + d2 + 1 through the root.
    for (int root = 0; root < g.vertex_count(); ++root) {
        std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

GraphMorphism::GraphMorphism(SimplicialGraph src, SimplicialGraph tgt,
                             const std::vector<std::pair<std::string, std::string>>& map)
    : source(std::move(src)), target(std::move(tgt)) {
    vertex_map.assign(source.vertex_count(), -1);
    for (const auto& [a, b] : map) {
        auto i = source.vertex_index(a);
        auto j = target.vertex_index(b);
        if (!i) throw input_error("vertex_map names unknown source vertex '" + a + "'");
        if (!j) throw input_error("vertex_map names unknown target vertex '" + b + "'");
        if (vertex_map[*i] != -1) throw input_error("vertex_map defined twice at '" + a + "'");
        vertex_map[*i] = *j;
    }
    for (int v = 0; v < source.vertex_count(); ++v)
        if (vertex_map[v] == -1)
            throw input_error("vertex_map misses source vertex '" + source.vertex_name(v) + "'");
}

CoverVerdict validate_cover(const GraphMorphism& p, int sheets) {
    if (sheets <= 0) throw input_error("sheet count must be positive");
    const SimplicialGraph& src = p.source;
    const SimplicialGraph& tgt = p.target;

    // Edges must go to edges; a collapsed edge fails here.
    for (int e = 0; e < src.edge_count(); ++e) {
        int a = p.vertex_map[src.edges()[e].u];
        int b = p.vertex_map[src.edges()[e].v];
        if (a == b) return {false, "edge " + src.edge_name(e) + " is collapsed to a vertex"};
        if (!tgt.adjacent(a, b))
            return {false, "edge " + src.edge_name(e) + " does not map to an edge"};
    }

    // Star bijectivity at every source vertex.
    for (int v = 0; v < src.vertex_count(); ++v) {
        int w = p.vertex_map[v];
        std::set<int> image;
        for (int nb : src.neighbors(v)) {
            if (!image.insert(p.vertex_map[nb]).second)
                return {false, "star of '" + src.vertex_name(v) +
                                   "' maps two edges onto one edge at '" +
                                   tgt.vertex_name(p.vertex_map[nb]) + "'"};
        }
        if (static_cast<int>(image.size()) != tgt.degree(w))
            return {false, "star of '" + src.vertex_name(v) + "' does not cover the star of '" +
                               tgt.vertex_name(w) + "'"};
    }

    // Fiber sizes.
    std::vector<int> fiber(tgt.vertex_count(), 0);
    for (int v = 0; v < src.vertex_count(); ++v) ++fiber[p.vertex_map[v]];
    for (int w = 0; w < tgt.vertex_count(); ++w)
        if (fiber[w] != sheets)
            return {false, "fiber over '" + tgt.vertex_name(w) + "' has " +
                               std::to_string(fiber[w]) + " elements, expected " +
                               std::to_string(sheets)};

    // Each source component must map onto a full target component.
    std::vector<int> scomp = connected_components(src);
    std::vector<int> tcomp = connected_components(tgt);
    std::map<int, std::set<int>> image_by_comp;
    for (int v = 0; v < src.vertex_count(); ++v)
        image_by_comp[scomp[v]].insert(p.vertex_map[v]);
    for (const auto& [c, image] : image_by_comp) {
        int tc = tcomp[*image.begin()];
        std::size_t want = 0;
        for (int w = 0; w < tgt.vertex_count(); ++w)
            if (tcomp[w] == tc) ++want;
        if (image.size() != want)
            return {false, "component of '" + src.vertex_name(c) +
                               "' does not map onto a target component"};
    }
    return {true, "valid " + std::to_string(sheets) + "-sheeted cover"};
}

SubdivisionHint subdivision_hint(const SimplicialGraph& g, int n) {
    if (n < 1) throw input_error("n must be positive");
    SubdivisionHint hint;
    hint.paths_ok = true;
    hint.cycles_ok = true;

    // Walk maximal chains of valence-two vertices between essential vertices.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 2) continue;
        for (int start : g.neighbors(v)) {
            int interior = 0;
            int prev = v, cur = start;
            while (g.degree(cur) == 2) {
                ++interior;
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
            }
            if (interior < n - 1) {
                hint.paths_ok = false;
                hint.detail = "path from '" + g.vertex_name(v) + "' toward '" +
                              g.vertex_name(start) + "' has only " + std::to_string(interior) +
                              " interior vertices";
            }
        }
    }
    if (auto c = girth(g); c && *c < n + 1) {
        hint.cycles_ok = false;
        if (!hint.detail.empty()) hint.detail += "; ";
        hint.detail += "shortest cycle has length " + std::to_string(*c);
    }
    if (hint.paths_ok && hint.cycles_ok) hint.detail = "heuristic satisfied";
    return hint;
}

}  // namespace cubist
