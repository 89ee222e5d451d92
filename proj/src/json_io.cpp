#include "cubist/json_io.hpp"

#include <algorithm>

namespace cubist {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end())
            throw input_error(std::string("unknown key '") + key + "' in " + what);
    }
}

std::vector<std::pair<std::string, std::string>> parse_pair_list(const json& j,
                                                                 const char* what) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw input_error(std::string(what) + " entries must be pairs of strings");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return out;
}

}  // namespace

SimplicialGraph graph_from_json(const json& j) {
    if (!j.is_object()) throw input_error("graph JSON must be an object");
    reject_unknown_keys(j, {"vertices", "edges", "orientation"}, "graph");
    if (!j.contains("vertices") || !j.contains("edges"))
        throw input_error("graph JSON needs 'vertices' and 'edges'");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw input_error("vertices must be strings");
        vertices.push_back(v.get<std::string>());
    }
    auto edges = parse_pair_list(j.at("edges"), "edges");
    std::vector<std::pair<std::string, std::string>> orientation;
    if (j.contains("orientation")) orientation = parse_pair_list(j.at("orientation"), "orientation");
    return SimplicialGraph(std::move(vertices), std::move(edges), std::move(orientation));
}

SimplicialGraph graph_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return graph_from_json(j);
}

json graph_to_json(const SimplicialGraph& g) {
    json j;
    j["vertices"] = g.vertex_names();
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({g.vertex_name(e.u), g.vertex_name(e.v)});
    j["edges"] = std::move(edges);
    if (g.has_custom_orientation()) {
        json orient = json::array();
        for (int e = 0; e < g.edge_count(); ++e)
            orient.push_back({g.vertex_name(g.tail(e)), g.vertex_name(g.head(e))});
        j["orientation"] = std::move(orient);
    }
    return j;
}

GraphMorphism morphism_from_json(const json& j) {
    if (!j.is_object()) throw input_error("morphism JSON must be an object");
    reject_unknown_keys(j, {"source", "target", "vertex_map"}, "morphism");
    if (!j.contains("source") || !j.contains("target") || !j.contains("vertex_map"))
        throw input_error("morphism JSON needs 'source', 'target' and 'vertex_map'");
    return GraphMorphism(graph_from_json(j.at("source")), graph_from_json(j.at("target")),
                         parse_pair_list(j.at("vertex_map"), "vertex_map"));
}

json morphism_to_json(const GraphMorphism& m) {
    json j;
    j["source"] = graph_to_json(m.source);
    j["target"] = graph_to_json(m.target);
    json map = json::array();
    for (int v = 0; v < m.source.vertex_count(); ++v)
        map.push_back({m.source.vertex_name(v), m.target.vertex_name(m.vertex_map[v])});
    j["vertex_map"] = std::move(map);
    return j;
}

namespace {

json label_to_json(const CubeLabel& label) {
    json j = json::array();
    for (const LabelSimplex& s : label.simplices) j.push_back(s.verts);
    return j;
}

CubeLabel label_from_json(const json& j) {
    if (!j.is_array()) throw input_error("cube label must be an array of simplices");
    CubeLabel label;
    for (const auto& s : j) {
        if (!s.is_array() || s.empty() || s.size() > 2)
            throw input_error("label simplex must hold one or two vertex names");
        LabelSimplex simplex;
        for (const auto& v : s) {
            if (!v.is_string()) throw input_error("label simplex entries must be strings");
            simplex.verts.push_back(v.get<std::string>());
        }
        label.simplices.push_back(std::move(simplex));
    }
    return label;
}

}  // namespace

json complex_to_json(const CubeComplex& x) {
    json cubes = json::object();
    for (int dim = 0; dim <= x.dimension(); ++dim) {
        json layer = json::array();
        for (CubeId id = 0; id < x.count(dim); ++id) layer.push_back(label_to_json(x.label(dim, id)));
        cubes[std::to_string(dim)] = std::move(layer);
    }
    json faces = json::array();
    for (int dim = 1; dim <= x.dimension(); ++dim)
        for (CubeId id = 0; id < x.count(dim); ++id)
            for (int dir = 0; dir < dim; ++dir)
                for (int side : {0, 1})
                    faces.push_back({{"dim", dim},
                                     {"cube", label_to_json(x.label(dim, id))},
                                     {"dir", dir},
                                     {"side", side},
                                     {"facet", label_to_json(x.label(dim - 1,
                                                                     x.facet(dim, id, dir, side)))}});
    json j;
    j["cubes"] = std::move(cubes);
    j["faces"] = std::move(faces);
    json tags = json::array();
    if (x.has_edge_tags())
        for (CubeId e = 0; e < x.count(1); ++e)
            tags.push_back({{"edge", label_to_json(x.label(1, e))},
                            {"generator", x.edge_tag(e).generator},
                            {"sign", x.edge_tag(e).sign}});
    j["edge_labels"] = std::move(tags);
    return j;
}

CubeComplex complex_from_json(const json& j) {
    if (!j.is_object()) throw input_error("complex JSON must be an object");
    reject_unknown_keys(j, {"cubes", "faces", "edge_labels"}, "complex");
    if (!j.contains("cubes")) throw input_error("complex JSON needs 'cubes'");

    // Collect labels per dimension, then resolve faces.
    std::map<int, std::vector<CubeLabel>> layers;
    for (const auto& [key, arr] : j.at("cubes").items()) {
        int dim;
        try {
            dim = std::stoi(key);
        } catch (const std::exception&) {
            throw input_error("bad dimension key '" + key + "'");
        }
        for (const auto& l : arr) layers[dim].push_back(label_from_json(l));
    }
    std::map<int, std::map<std::string, int>> position;
    for (auto& [dim, labels] : layers)
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (!position[dim].emplace(labels[i].key(), static_cast<int>(i)).second)
                throw input_error("duplicate cube label '" + labels[i].key() + "'");

    // faces[dim][cube][dir][side] = facet index
    std::map<int, std::vector<std::vector<std::array<CubeId, 2>>>> facets;
    for (auto& [dim, labels] : layers)
        if (dim > 0)
            facets[dim].assign(labels.size(),
                               std::vector<std::array<CubeId, 2>>(dim, {-1, -1}));
    if (j.contains("faces"))
        for (const auto& f : j.at("faces")) {
            int dim = f.at("dim").get<int>();
            std::string cube = label_from_json(f.at("cube")).key();
            std::string facet = label_from_json(f.at("facet")).key();
            int dir = f.at("dir").get<int>();
            int side = f.at("side").get<int>();
            if (!position.count(dim) || !position[dim].count(cube))
                throw input_error("face entry names unknown cube '" + cube + "'");
            if (!position.count(dim - 1) || !position[dim - 1].count(facet))
                throw input_error("face entry names unknown facet '" + facet + "'");
            if (dir < 0 || dir >= dim || (side != 0 && side != 1))
                throw input_error("face entry has a bad direction or side");
            facets[dim][position[dim][cube]][dir][side] = position[dim - 1][facet];
        }

    CubeComplexBuilder builder;
    for (auto& [dim, labels] : layers) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            std::string key = labels[i].key();
            if (dim == 0) {
                builder.add_vertex(std::move(labels[i]));
                continue;
            }
            for (const auto& pair : facets[dim][i])
                for (int s : {0, 1})
                    if (pair[s] < 0) throw input_error("cube '" + key + "' is missing a facet");
            builder.add_cube(std::move(labels[i]), facets[dim][i]);
        }
    }
    if (j.contains("edge_labels"))
        for (const auto& t : j.at("edge_labels")) {
            std::string edge = label_from_json(t.at("edge")).key();
            if (!position.count(1) || !position[1].count(edge))
                throw input_error("edge label names unknown edge '" + edge + "'");
            builder.tag_edge(position[1][edge], t.at("generator").get<std::string>(),
                             t.at("sign").get<int>());
        }
    return std::move(builder).build();
}

json certificate_to_json(const RaagPresentation& p, const MoveCertificate& cert) {
    json moves = json::array();
    for (const Move& m : cert.moves) {
        switch (m.kind) {
            case Move::Kind::Commutation:
                moves.push_back({{"type", "commutation"}, {"pos", m.pos}});
                break;
            case Move::Kind::Deletion:
                moves.push_back({{"type", "deletion"}, {"pos", m.pos}});
                break;
            case Move::Kind::Insertion:
                moves.push_back({{"type", "insertion"},
                                 {"pos", m.pos},
                                 {"generator", p.generator_name(m.gen)},
                                 {"sign", m.sign}});
                break;
        }
    }
    return {{"start", format_word(p, cert.start)},
            {"end", format_word(p, cert.end)},
            {"moves", std::move(moves)}};
}

MoveCertificate certificate_from_json(const RaagPresentation& p, const json& j) {
    MoveCertificate cert;
    cert.start = parse_word(p, j.at("start").get<std::string>());
    cert.end = parse_word(p, j.at("end").get<std::string>());
    for (const auto& m : j.at("moves")) {
        std::string type = m.at("type").get<std::string>();
        Move move;
        move.pos = m.at("pos").get<int>();
        if (type == "commutation") {
            move.kind = Move::Kind::Commutation;
        } else if (type == "deletion") {
            move.kind = Move::Kind::Deletion;
        } else if (type == "insertion") {
            move.kind = Move::Kind::Insertion;
            auto gen = p.generator_index(m.at("generator").get<std::string>());
            if (!gen) throw input_error("insertion names an unknown generator");
            move.gen = *gen;
            move.sign = m.at("sign").get<int>();
        } else {
            throw input_error("unknown move type '" + type + "'");
        }
        cert.moves.push_back(move);
    }
    return cert;
}

json isometry_report_to_json(const IsometryReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"kind", v.kind}, {"where", v.where}, {"detail", v.detail}});
    json tables = json::array();
    for (const auto& t : report.vertex_tables) {
        json rows = json::array();
        for (const auto& r : t.link_map) rows.push_back({r.source_vertex, r.image_vertex});
        tables.push_back({{"vertex", t.vertex}, {"link_map", std::move(rows)}});
    }
    return {{"certified", report.certified},
            {"source_flag_ok", report.source_flag_ok},
            {"target_flag_ok", report.target_flag_ok},
            {"violations", std::move(violations)},
            {"vertex_tables", std::move(tables)}};
}

json presentation_to_json(const Presentation& pres) {
    json gens = json::array();
    for (const auto& name : pres.generator_names) gens.push_back(name);
    json relators = json::array();
    for (const Word& rel : pres.relators) {
        json r = json::array();
        for (const Letter& l : rel) r.push_back({{"generator", l.gen}, {"sign", l.sign}});
        relators.push_back(std::move(r));
    }
    return {{"basepoint", pres.basepoint},
            {"generators", std::move(gens)},
            {"relators", std::move(relators)}};
}

}  // namespace cubist
