#include "cubist/cube_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace cubist {

std::string LabelSimplex::key() const {
    std::string k = verts.front();
    for (std::size_t i = 1; i < verts.size(); ++i) k += "," + verts[i];
    return k;
}

std::string CubeLabel::key() const {
    std::string k;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (i) k += "|";
        k += simplices[i].key();
    }
    return k;
}

int CubeComplex::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(cubes_.size())) return 0;
    return static_cast<int>(cubes_[dim].size());
}

long CubeComplex::total_cubes() const {
    long t = 0;
    for (const auto& layer : cubes_) t += static_cast<long>(layer.size());
    return t;
}

std::optional<CubeId> CubeComplex::find(int dim, const std::string& label_key) const {
    if (dim < 0 || dim >= static_cast<int>(index_.size())) return std::nullopt;
    auto it = index_[dim].find(label_key);
    if (it == index_[dim].end()) return std::nullopt;
    return it->second;
}

CubeId CubeComplex::facet(int dim, CubeId id, int dir, int side) const {
    return cubes_.at(dim).at(id).facets.at(dir).at(side);
}

std::vector<long> CubeComplex::f_vector() const {
    std::vector<long> f;
    for (const auto& layer : cubes_) f.push_back(static_cast<long>(layer.size()));
    return f;
}

long CubeComplex::euler_characteristic() const {
    long chi = 0;
    int sign = 1;
    for (const auto& layer : cubes_) {
        chi += sign * static_cast<long>(layer.size());
        sign = -sign;
    }
    return chi;
}

CubeId CubeComplex::corner_vertex(int dim, CubeId id, const std::vector<int>& sides) const {
    // Strip directions from highest to lowest; after removing direction j
    // the cube has dimension j.
    CubeId cur = id;
    for (int j = dim - 1; j >= 0; --j) cur = facet(j + 1, cur, j, sides[j]);
    return cur;
}

CubeComplex::EdgeEnd CubeComplex::edge_at_corner(int dim, CubeId id, const std::vector<int>& sides,
                                                 int dir) const {
    int cur_dim = dim;
    CubeId cur = id;
    for (int j = dim - 1; j >= 0; --j) {
        if (j == dir) continue;
        cur = facet(cur_dim, cur, j, sides[j]);
        --cur_dim;
    }
    return EdgeEnd{cur, sides[dir]};
}

std::vector<CubeId> CubeComplex::edges_at_vertex(CubeId vertex) const {
    std::vector<CubeId> out;
    for (CubeId e = 0; e < count(1); ++e)
        if (facet(1, e, 0, 0) == vertex || facet(1, e, 0, 1) == vertex) out.push_back(e);
    return out;
}

CubeId CubeComplexBuilder::add_vertex(CubeLabel label) {
    return add_cube(std::move(label), {});
}

CubeId CubeComplexBuilder::add_cube(CubeLabel label, std::vector<std::array<CubeId, 2>> facets) {
    int dim = static_cast<int>(facets.size());
    if (static_cast<int>(c_.cubes_.size()) <= dim) {
        c_.cubes_.resize(dim + 1);
        c_.index_.resize(dim + 1);
    }
    for (const auto& f : facets)
        for (int s : {0, 1})
            if (f[s] < 0 || f[s] >= c_.count(dim - 1))
                throw input_error("cube facet refers to a missing " + std::to_string(dim - 1) +
                                  "-cube");
    std::string key = label.key();
    if (c_.index_[dim].count(key)) throw input_error("duplicate cube label '" + key + "'");
    CubeId id = static_cast<CubeId>(c_.cubes_[dim].size());
    c_.cubes_[dim].push_back({std::move(label), std::move(facets)});
    c_.index_[dim].emplace(std::move(key), id);
    return id;
}

void CubeComplexBuilder::tag_edge(CubeId edge, std::string generator, int sign) {
    if (c_.edge_tags_.size() <= static_cast<std::size_t>(edge)) c_.edge_tags_.resize(edge + 1);
    c_.edge_tags_[edge] = {std::move(generator), sign};
}

CubeComplex CubeComplexBuilder::build() && {
    // Corners are well defined only if facet maps commute: removing
    // direction i then j-1 matches removing j then i, for i < j.
    for (int dim = 2; dim < static_cast<int>(c_.cubes_.size()); ++dim) {
        for (CubeId id = 0; id < c_.count(dim); ++id) {
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j)
                    for (int s : {0, 1})
                        for (int t : {0, 1}) {
                            CubeId a = c_.facet(dim - 1, c_.facet(dim, id, j, t), i, s);
                            CubeId b = c_.facet(dim - 1, c_.facet(dim, id, i, s), j - 1, t);
                            if (a != b)
                                throw input_error("incoherent facets on cube '" +
                                                  c_.label(dim, id).key() + "'");
                        }
        }
    }
    if (!c_.edge_tags_.empty()) c_.edge_tags_.resize(c_.count(1));
    return std::move(c_);
}

int LinkComplex::index_of(const CubeComplex::EdgeEnd& e) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), e,
                               [](const Vertex& v, const CubeComplex::EdgeEnd& x) {
                                   return v.end < x;
                               });
    if (it == vertices_.end() || !(it->end == e)) return -1;
    return static_cast<int>(it - vertices_.begin());
}

bool LinkComplex::has_simplex(const std::vector<int>& sorted_verts) const {
    return simplices_.count(sorted_verts) > 0;
}

bool LinkComplex::edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return has_simplex({a, b});
}

int LinkComplex::dimension() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

bool LinkComplex::is_single_cycle() const {
    if (vertices_.empty()) return false;
    std::vector<int> deg(vertices_.size(), 0);
    std::size_t n_edges = 0;
    for (const auto& s : simplices_) {
        if (s.size() == 2) {
            ++deg[s[0]];
            ++deg[s[1]];
            ++n_edges;
        } else if (s.size() > 2) {
            return false;
        }
    }
    if (n_edges != vertices_.size()) return false;
    for (int d : deg)
        if (d != 2) return false;
    // Connectivity over the 1-skeleton.
    std::vector<bool> seen(vertices_.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& s : simplices_) {
            if (s.size() != 2) continue;
            int w = -1;
            if (s[0] == v) w = s[1];
            if (s[1] == v) w = s[0];
            if (w >= 0 && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertices_.size();
}

namespace {

void insert_with_subsets(std::set<std::vector<int>>& simplices, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    int n = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        simplices.insert(std::move(sub));
    }
}

}  // namespace

std::vector<LinkComplex> all_vertex_links(const CubeComplex& x) {
    std::vector<LinkComplex> links(x.count(0));

    // Link vertices: one per incident edge-end.
    for (CubeId e = 0; e < x.count(1); ++e) {
        for (int s : {0, 1}) {
            CubeId v = x.facet(1, e, 0, s);
            links[v].vertices_.push_back(
                {CubeComplex::EdgeEnd{e, s}, x.label(1, e).key() + (s == 0 ? "+" : "-")});
        }
    }
    for (auto& l : links)
        std::sort(l.vertices_.begin(), l.vertices_.end(),
                  [](const LinkComplex::Vertex& a, const LinkComplex::Vertex& b) {
                      return a.end < b.end;
                  });

    // One (d-1)-simplex per corner of each d-cube.
    for (int dim = 1; dim <= x.dimension(); ++dim) {
        for (CubeId id = 0; id < x.count(dim); ++id) {
            std::vector<int> sides(dim, 0);
            for (unsigned mask = 0; mask < (1u << dim); ++mask) {
                for (int i = 0; i < dim; ++i) sides[i] = (mask >> i) & 1;
                CubeId v = x.corner_vertex(dim, id, sides);
                std::vector<int> simplex;
                simplex.reserve(dim);
                for (int i = 0; i < dim; ++i) {
                    int idx = links[v].index_of(x.edge_at_corner(dim, id, sides, i));
                    simplex.push_back(idx);
                }
                insert_with_subsets(links[v].simplices_, std::move(simplex));
            }
        }
    }
    return links;
}

LinkComplex vertex_link(const CubeComplex& x, CubeId vertex) {
    if (vertex < 0 || vertex >= x.count(0)) throw input_error("unknown vertex");
    return all_vertex_links(x).at(vertex);
}

namespace {

// All maximal cliques of the link 1-skeleton (Bron-Kerbosch, no pivoting;
// links at desk scale are tiny).
void maximal_cliques(const LinkComplex& link, std::vector<int>& R, std::vector<int>& P,
                     std::vector<int>& X, std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    std::vector<int> P_copy = P;
    for (int v : P_copy) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (link.edge(v, w)) P2.push_back(w);
        for (int w : X)
            if (link.edge(v, w)) X2.push_back(w);
        R.push_back(v);
        maximal_cliques(link, R, P2, X2, out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}

}  // namespace

FlagReport check_flag(const CubeComplex& x) {
    FlagReport report;
    std::vector<LinkComplex> links = all_vertex_links(x);
    for (CubeId v = 0; v < x.count(0); ++v) {
        const LinkComplex& link = links[v];
        std::vector<int> R, P, X;
        for (int i = 0; i < link.vertex_count(); ++i) P.push_back(i);
        std::vector<std::vector<int>> cliques;
        maximal_cliques(link, R, P, X, cliques);
        for (auto& q : cliques) {
            if (q.size() < 3) continue;  // vertices and edges span by construction
            std::sort(q.begin(), q.end());
            if (link.has_simplex(q)) continue;
            // Localize a minimal non-spanning subset.
            int n = static_cast<int>(q.size());
            std::vector<int> offender = q;
            for (int size = 3; size <= n; ++size) {
                std::vector<int> pick(size);
                std::function<bool(int, int)> choose = [&](int from, int k) {
                    if (k == size) {
                        std::vector<int> sub(pick.begin(), pick.end());
                        if (!link.has_simplex(sub)) {
                            offender = sub;
                            return true;
                        }
                        return false;
                    }
                    for (int i = from; i < n; ++i) {
                        pick[k] = q[i];
                        if (choose(i + 1, k + 1)) return true;
                    }
                    return false;
                };
                if (choose(0, 0)) break;
            }
            FlagViolation fv;
            fv.vertex = x.label(0, v).key();
            for (int i : offender) fv.clique.push_back(link.vertex(i).name);
            report.violations.push_back(std::move(fv));
            report.ok = false;
        }
    }
    return report;
}

namespace {

// Sign of a square's boundary side slot (dir, side) relative to the square's
// own orientation: traversing the boundary counterclockwise runs the bottom
// and right edges forward, the top and left edges backward.
int slot_sign(int dir, int side) {
    if (dir == 1) return side == 0 ? +1 : -1;  // bottom / top
    return side == 1 ? +1 : -1;                // right / left
}

struct EdgeIncidences {
    // Per edge: list of (square, dir, side) slots.
    std::vector<std::vector<std::array<int, 3>>> slots;
    bool every_edge_twice = true;
};

EdgeIncidences square_incidences(const CubeComplex& x) {
    EdgeIncidences inc;
    inc.slots.resize(x.count(1));
    for (CubeId sq = 0; sq < x.count(2); ++sq)
        for (int dir : {0, 1})
            for (int side : {0, 1}) inc.slots[x.facet(2, sq, dir, side)].push_back({sq, dir, side});
    for (const auto& s : inc.slots)
        if (s.size() != 2) inc.every_edge_twice = false;
    return inc;
}

}  // namespace

bool detail::orientable_with_order(const CubeComplex& x, const std::vector<CubeId>& square_order) {
    EdgeIncidences inc = square_incidences(x);
    std::vector<int> orient(x.count(2), 0);
    for (CubeId seed : square_order) {
        if (orient[seed] != 0) continue;
        orient[seed] = +1;
        std::queue<CubeId> q;
        q.push(seed);
        while (!q.empty()) {
            CubeId sq = q.front();
            q.pop();
            for (int dir : {0, 1})
                for (int side : {0, 1}) {
                    CubeId e = x.facet(2, sq, dir, side);
                    for (const auto& [osq, odir, oside] : inc.slots[e]) {
                        if (osq == sq && odir == dir && oside == side) continue;
                        // Coherent orientations traverse a shared edge in
                        // opposite directions.
                        int want = -orient[sq] * slot_sign(dir, side) * slot_sign(odir, oside);
                        if (orient[osq] == 0) {
                            orient[osq] = want;
                            q.push(osq);
                        } else if (orient[osq] != want) {
                            return false;
                        }
                    }
                }
        }
    }
    return true;
}

SurfaceId identify_surface(const CubeComplex& x) {
    if (x.dimension() > 2) throw input_error("identify_surface needs a complex of dimension <= 2");
    SurfaceId out;
    out.euler_characteristic = x.euler_characteristic();
    if (x.count(2) == 0) {
        out.detail = "no squares";
        return out;
    }

    EdgeIncidences inc = square_incidences(x);
    if (!inc.every_edge_twice) {
        out.detail = "an edge does not lie in exactly two square sides";
        return out;
    }

    // Vertex links as corner multigraphs: every link vertex must have
    // corner-degree two and the corners must close into one cycle.
    std::vector<LinkComplex> links = all_vertex_links(x);
    std::vector<std::vector<std::pair<int, int>>> corner_edges(x.count(0));
    std::vector<int> sides(2, 0);
    for (CubeId sq = 0; sq < x.count(2); ++sq) {
        for (unsigned mask = 0; mask < 4; ++mask) {
            sides[0] = mask & 1;
            sides[1] = (mask >> 1) & 1;
            CubeId v = x.corner_vertex(2, sq, sides);
            int a = links[v].index_of(x.edge_at_corner(2, sq, sides, 0));
            int b = links[v].index_of(x.edge_at_corner(2, sq, sides, 1));
            corner_edges[v].push_back({std::min(a, b), std::max(a, b)});
        }
    }
    for (CubeId v = 0; v < x.count(0); ++v) {
        const auto& ce = corner_edges[v];
        int n = links[v].vertex_count();
        if (static_cast<int>(ce.size()) != n) {
            out.detail = "link of '" + x.label(0, v).key() + "' is not a single cycle";
            return out;
        }
        std::vector<int> deg(n, 0);
        for (auto [a, b] : ce) {
            ++deg[a];
            ++deg[b];
        }
        for (int d : deg)
            if (d != 2) {
                out.detail = "link of '" + x.label(0, v).key() + "' is not a single cycle";
                return out;
            }
        // Connectivity of the corner multigraph.
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        seen[0] = true;
        q.push(0);
        int reached = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (auto [p, r] : ce) {
                int w = -1;
                if (p == a) w = r;
                else if (r == a) w = p;
                if (w >= 0 && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    q.push(w);
                }
            }
        }
        if (reached != n) {
            out.detail = "link of '" + x.label(0, v).key() + "' is not a single cycle";
            return out;
        }
    }

    out.is_closed_surface = true;
    std::vector<CubeId> order(x.count(2));
    std::iota(order.begin(), order.end(), 0);
    out.orientable = detail::orientable_with_order(x, order);
    out.detail = out.orientable ? "closed orientable surface" : "closed nonorientable surface";
    return out;
}

bool is_embedded(const CubeComplex& x, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (x.dimension() > 2) throw input_error("is_embedded implemented for dimension <= 2 only");
    // Edges must have two distinct endpoints.
    for (CubeId e = 0; e < x.count(1); ++e)
        if (x.facet(1, e, 0, 0) == x.facet(1, e, 0, 1))
            return fail("edge '" + x.label(1, e).key() + "' has identified endpoints");
    // Squares must have four distinct corners and four distinct sides.
    std::vector<std::set<CubeId>> square_corners(x.count(2)), square_edges(x.count(2));
    std::vector<int> sides(2, 0);
    for (CubeId sq = 0; sq < x.count(2); ++sq) {
        for (unsigned mask = 0; mask < 4; ++mask) {
            sides[0] = mask & 1;
            sides[1] = (mask >> 1) & 1;
            square_corners[sq].insert(x.corner_vertex(2, sq, sides));
        }
        for (int dir : {0, 1})
            for (int side : {0, 1}) square_edges[sq].insert(x.facet(2, sq, dir, side));
        if (square_corners[sq].size() != 4 || square_edges[sq].size() != 4)
            return fail("square '" + x.label(2, sq).key() + "' has identified faces");
    }
    // Two edges may share at most one endpoint; two squares at most one
    // common face (an edge with its endpoints, or a single vertex).
    for (CubeId e = 0; e < x.count(1); ++e)
        for (CubeId f = e + 1; f < x.count(1); ++f) {
            std::set<CubeId> shared;
            for (int s : {0, 1})
                for (int t : {0, 1})
                    if (x.facet(1, e, 0, s) == x.facet(1, f, 0, t))
                        shared.insert(x.facet(1, e, 0, s));
            if (shared.size() > 1)
                return fail("edges '" + x.label(1, e).key() + "' and '" + x.label(1, f).key() +
                            "' meet in two vertices");
        }
    for (CubeId a = 0; a < x.count(2); ++a)
        for (CubeId b = a + 1; b < x.count(2); ++b) {
            std::vector<CubeId> shared_edges;
            std::set_intersection(square_edges[a].begin(), square_edges[a].end(),
                                  square_edges[b].begin(), square_edges[b].end(),
                                  std::back_inserter(shared_edges));
            std::vector<CubeId> shared_corners;
            std::set_intersection(square_corners[a].begin(), square_corners[a].end(),
                                  square_corners[b].begin(), square_corners[b].end(),
                                  std::back_inserter(shared_corners));
            if (shared_edges.size() > 1)
                return fail("squares '" + x.label(2, a).key() + "' and '" + x.label(2, b).key() +
                            "' share two edges");
            if (shared_edges.size() == 1) {
                if (shared_corners.size() != 2)
                    return fail("squares '" + x.label(2, a).key() + "' and '" +
                                x.label(2, b).key() + "' meet in more than one face");
            } else if (shared_corners.size() > 1) {
                return fail("squares '" + x.label(2, a).key() + "' and '" + x.label(2, b).key() +
                            "' share two corners but no edge");
            }
        }
    if (why) *why = "embedded";
    return true;
}

namespace {

// Simplices of G indexed as pairs: a vertex v is (v, v), an edge (u, v) with
// u < v. Pair order makes labels canonical and keeps edge directions sorted.
struct ConfigEnumerator {
    const SimplicialGraph& g;
    int n;
    long budget;
    long produced = 0;
    CubeComplexBuilder builder;
    std::map<std::string, CubeId> prev_layer;  // label key -> id, dimension d-1
    std::map<std::string, CubeId> cur_layer;

    explicit ConfigEnumerator(const SimplicialGraph& graph, int count, long b)
        : g(graph), n(count), budget(b) {}

    LabelSimplex vertex_simplex(int v) const { return {{g.vertex_name(v)}}; }
    LabelSimplex edge_simplex(int e) const {
        return {{g.vertex_name(g.edges()[e].u), g.vertex_name(g.edges()[e].v)}};
    }

    static std::pair<int, int> pair_of_vertex(int v) { return {v, v}; }
    std::pair<int, int> pair_of_edge(int e) const {
        return {g.edges()[e].u, g.edges()[e].v};
    }

    CubeLabel make_label(const std::vector<int>& edge_ids,
                         const std::vector<int>& vertex_ids) const {
        std::vector<std::pair<std::pair<int, int>, LabelSimplex>> parts;
        for (int e : edge_ids) parts.push_back({pair_of_edge(e), edge_simplex(e)});
        for (int v : vertex_ids) parts.push_back({pair_of_vertex(v), vertex_simplex(v)});
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        CubeLabel label;
        for (auto& p : parts) label.simplices.push_back(std::move(p.second));
        return label;
    }

    bool vertex_free(int v, const std::vector<int>& edge_ids,
                     const std::vector<int>& vertex_ids) const {
        for (int e : edge_ids)
            if (g.edges()[e].u == v || g.edges()[e].v == v) return false;
        for (int w : vertex_ids)
            if (w == v) return false;
        return true;
    }

    void emit(const std::vector<int>& edge_ids, const std::vector<int>& vertex_ids) {
        if (++produced > budget)
            throw budget_error("configuration-space enumeration exceeded budget of " +
                               std::to_string(budget) + " cubes");
        int d = static_cast<int>(edge_ids.size());
        CubeLabel label = make_label(edge_ids, vertex_ids);
        // Facet in direction j: replace the j-th edge (in pair order; edge
        // ids are already sorted, matching) by its tail (side 0) or head.
        std::vector<std::array<CubeId, 2>> facets(d);
        for (int j = 0; j < d; ++j) {
            int e = edge_ids[j];
            for (int side : {0, 1}) {
                int v = side == 0 ? g.tail(e) : g.head(e);
                std::vector<int> rest_edges = edge_ids;
                rest_edges.erase(rest_edges.begin() + j);
                std::vector<int> verts = vertex_ids;
                verts.push_back(v);
                auto it = prev_layer.find(make_label(rest_edges, verts).key());
                if (it == prev_layer.end())
                    throw std::logic_error("missing facet in configuration space");
                facets[j][side] = it->second;
            }
        }
        std::string key = label.key();
        CubeId id = builder.add_cube(std::move(label), std::move(facets));
        cur_layer.emplace(std::move(key), id);
        if (d == 1) builder.tag_edge(id, g.edge_name(edge_ids[0]), +1);
    }
};

}  // namespace

CubeComplex reduced_config_space(const SimplicialGraph& g, int n, long budget) {
    if (n < 1) throw input_error("n must be positive");
    ConfigEnumerator en(g, n, budget);

    // Build dimension by dimension so facet lookups always resolve.
    for (int d = 0; d <= n; ++d) {
        // Choose d pairwise disjoint edges (by index), then n-d vertices
        // disjoint from them (by index).
        std::vector<int> edge_ids, vertex_ids;
        std::function<void(int)> pick_vertices = [&](int from) {
            if (static_cast<int>(vertex_ids.size()) == en.n - d) {
                en.emit(edge_ids, vertex_ids);
                return;
            }
            for (int v = from; v < g.vertex_count(); ++v) {
                if (!en.vertex_free(v, edge_ids, vertex_ids)) continue;
                vertex_ids.push_back(v);
                pick_vertices(v + 1);
                vertex_ids.pop_back();
            }
        };
        std::function<void(int)> pick_edges = [&](int from) {
            if (static_cast<int>(edge_ids.size()) == d) {
                pick_vertices(0);
                return;
            }
            for (int e = from; e < g.edge_count(); ++e) {
                bool ok = true;
                for (int f : edge_ids) {
                    const Edge& a = g.edges()[f];
                    const Edge& b = g.edges()[e];
                    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) ok = false;
                }
                if (!ok) continue;
                edge_ids.push_back(e);
                pick_edges(e + 1);
                edge_ids.pop_back();
            }
        };
        pick_edges(0);
        en.prev_layer = std::move(en.cur_layer);
        en.cur_layer.clear();
    }
    return std::move(en.builder).build();
}

}  // namespace cubist
