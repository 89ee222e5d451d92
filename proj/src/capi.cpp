#include "cubist/cubist.h"

#include <cstring>
#include <functional>
#include <string>

#include "cubist/json_io.hpp"
#include "cubist/planarity.hpp"

using nlohmann::json;

struct cubist_graph {
    cubist::SimplicialGraph g;
};
struct cubist_complex {
    cubist::CubeComplex x;
};
struct cubist_morphism {
    cubist::GraphMorphism m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const cubist::budget_error& e) {
        g_last_error = e.what();
        return CUBIST_ERR_BUDGET;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CUBIST_ERR_INPUT;
    }
}

cubist::RaagPresentation presentation_of(const cubist_graph* delta) {
    return cubist::RaagPresentation(delta->g);
}

json word_corpus_report(const cubist::CoverHom& hom, int test_len);

}  // namespace

extern "C" {

const char* cubist_version(void) { return "0.1.0"; }

const char* cubist_last_error(void) { return g_last_error.c_str(); }

void cubist_string_free(char* s) { delete[] s; }
void cubist_graph_free(cubist_graph* g) { delete g; }
void cubist_complex_free(cubist_complex* x) { delete x; }
void cubist_morphism_free(cubist_morphism* m) { delete m; }

int cubist_graph_parse(const char* text, cubist_graph** out) {
    return guarded([&] {
        *out = new cubist_graph{cubist::graph_from_json_text(text)};
        return CUBIST_OK;
    });
}

int cubist_graph_builtin(const char* spec, cubist_graph** out) {
    return guarded([&] {
        *out = new cubist_graph{cubist::builtin_graph(std::string(spec))};
        return CUBIST_OK;
    });
}

int cubist_graph_to_json(const cubist_graph* g, char** json_out) {
    return guarded([&] {
        *json_out = dup_string(cubist::graph_to_json(g->g).dump(2));
        return CUBIST_OK;
    });
}

int cubist_graph_delta(const cubist_graph* g, cubist_graph** out) {
    return guarded([&] {
        *out = new cubist_graph{cubist::delta_graph(g->g)};
        return CUBIST_OK;
    });
}

int cubist_graph_opposite(const cubist_graph* g, cubist_graph** out) {
    return guarded([&] {
        *out = new cubist_graph{cubist::opposite_graph(g->g)};
        return CUBIST_OK;
    });
}

int cubist_graph_line(const cubist_graph* g, cubist_graph** out) {
    return guarded([&] {
        *out = new cubist_graph{cubist::line_graph(g->g)};
        return CUBIST_OK;
    });
}

int cubist_graph_subdivide(const cubist_graph* g, int k, cubist_graph** out) {
    return guarded([&] {
        *out = new cubist_graph{cubist::subdivide(g->g, k)};
        return CUBIST_OK;
    });
}

int cubist_graph_isomorphic(const cubist_graph* a, const cubist_graph* b, int* iso) {
    return guarded([&] {
        *iso = cubist::isomorphic(a->g, b->g) ? 1 : 0;
        return CUBIST_OK;
    });
}

int cubist_subdivision_hint(const cubist_graph* g, int n, char** report_json) {
    return guarded([&] {
        cubist::SubdivisionHint h = cubist::subdivision_hint(g->g, n);
        json rep = {{"paths_ok", h.paths_ok}, {"cycles_ok", h.cycles_ok}, {"detail", h.detail}};
        *report_json = dup_string(rep.dump());
        return CUBIST_OK;
    });
}

int cubist_graph_planarity(const cubist_graph* g, char** report_json, int* planar) {
    return guarded([&] {
        cubist::PlanarityResult r = cubist::is_planar(g->g);
        json rep;
        rep["planar"] = r.planar;
        if (r.planar) {
            json rot = json::object();
            for (int v = 0; v < g->g.vertex_count(); ++v) {
                json order = json::array();
                for (int e : r.rotation[v]) order.push_back(g->g.edge_name(e));
                rot[g->g.vertex_name(v)] = std::move(order);
            }
            rep["rotation_system"] = std::move(rot);
        } else {
            json edges = json::array();
            for (int e : r.kuratowski_edges) edges.push_back(g->g.edge_name(e));
            rep["kuratowski_kind"] = r.kuratowski_kind;
            rep["kuratowski_edges"] = std::move(edges);
        }
        *report_json = dup_string(rep.dump(2));
        if (planar) *planar = r.planar ? 1 : 0;
        return CUBIST_OK;
    });
}

int cubist_morphism_parse(const char* text, cubist_morphism** out) {
    return guarded([&] {
        json j = json::parse(std::string(text), nullptr, false);
        if (j.is_discarded()) throw cubist::input_error("malformed JSON");
        *out = new cubist_morphism{cubist::morphism_from_json(j)};
        return CUBIST_OK;
    });
}

int cubist_cover_validate(const cubist_morphism* m, int sheets, char** report_json) {
    return guarded([&] {
        cubist::CoverVerdict v = cubist::validate_cover(m->m, sheets);
        json rep = {{"valid", v.valid}, {"detail", v.detail}, {"sheets", sheets}};
        *report_json = dup_string(rep.dump(2));
        return v.valid ? CUBIST_OK : CUBIST_VIOLATION;
    });
}

int cubist_config_space(const cubist_graph* g, int n, long budget, cubist_complex** out) {
    return guarded([&] {
        *out = new cubist_complex{cubist::reduced_config_space(g->g, n, budget)};
        return CUBIST_OK;
    });
}

int cubist_salvetti(const cubist_graph* defining, int max_dim, cubist_complex** out) {
    return guarded([&] {
        *out = new cubist_complex{cubist::salvetti(defining->g, max_dim)};
        return CUBIST_OK;
    });
}

int cubist_complex_parse(const char* text, cubist_complex** out) {
    return guarded([&] {
        json j = json::parse(std::string(text), nullptr, false);
        if (j.is_discarded()) throw cubist::input_error("malformed JSON");
        *out = new cubist_complex{cubist::complex_from_json(j)};
        return CUBIST_OK;
    });
}

int cubist_complex_to_json(const cubist_complex* x, char** json_out) {
    return guarded([&] {
        *json_out = dup_string(cubist::complex_to_json(x->x).dump(2));
        return CUBIST_OK;
    });
}

int cubist_complex_f_vector(const cubist_complex* x, char** json_out) {
    return guarded([&] {
        json rep = {{"f_vector", x->x.f_vector()},
                    {"euler_characteristic", x->x.euler_characteristic()}};
        *json_out = dup_string(rep.dump(2));
        return CUBIST_OK;
    });
}

int cubist_complex_euler(const cubist_complex* x, long* chi) {
    return guarded([&] {
        *chi = x->x.euler_characteristic();
        return CUBIST_OK;
    });
}

int cubist_check_flag(const cubist_complex* x, char** report_json) {
    return guarded([&] {
        cubist::FlagReport r = cubist::check_flag(x->x);
        json viols = json::array();
        for (const auto& v : r.violations)
            viols.push_back({{"vertex", v.vertex}, {"clique", v.clique}});
        json rep = {{"ok", r.ok}, {"violations", std::move(viols)}};
        *report_json = dup_string(rep.dump(2));
        return r.ok ? CUBIST_OK : CUBIST_VIOLATION;
    });
}

int cubist_surface_id(const cubist_complex* x, char** report_json) {
    return guarded([&] {
        cubist::SurfaceId s = cubist::identify_surface(x->x);
        json rep = {{"is_closed_surface", s.is_closed_surface},
                    {"euler_characteristic", s.euler_characteristic},
                    {"detail", s.detail}};
        if (s.is_closed_surface) rep["orientable"] = s.orientable;
        *report_json = dup_string(rep.dump(2));
        return CUBIST_OK;
    });
}

int cubist_phi_certificate(const cubist_graph* g, int n, long budget, int jobs,
                           char** report_json) {
    return guarded([&] {
        cubist::CubicalMap phi = cubist::phi_map(g->g, n, budget);
        cubist::IsometryReport report = cubist::check_local_isometry(phi, jobs);
        json rep = cubist::isometry_report_to_json(report);
        rep["source_f_vector"] = phi.source.f_vector();
        rep["target_generators"] = phi.target_graph.vertex_names();
        *report_json = dup_string(rep.dump(2));
        return report.certified ? CUBIST_OK : CUBIST_VIOLATION;
    });
}

int cubist_presentation(const cubist_complex* x, const char* basepoint, char** json_out) {
    return guarded([&] {
        cubist::Presentation pres =
            cubist::fundamental_group_presentation(x->x, basepoint ? basepoint : "");
        *json_out = dup_string(cubist::presentation_to_json(pres).dump(2));
        return CUBIST_OK;
    });
}

int cubist_phi_induced_hom(const cubist_graph* g, int n, long budget, char** report_json) {
    return guarded([&] {
        cubist::CubicalMap phi = cubist::phi_map(g->g, n, budget);
        cubist::Presentation pres = cubist::fundamental_group_presentation(phi.source);
        cubist::InducedHom hom = cubist::induced_homomorphism(phi, pres);
        json images = json::array();
        for (std::size_t i = 0; i < hom.generator_images.size(); ++i)
            images.push_back({{"generator", pres.generator_names[i]},
                              {"image", cubist::format_word(hom.target, hom.generator_images[i])}});
        json rep = {{"presentation", cubist::presentation_to_json(pres)},
                    {"generator_images", std::move(images)},
                    {"relator_images_trivial", hom.relator_trivial},
                    {"all_relators_trivial", hom.all_relators_trivial},
                    {"generator_count", pres.generator_names.size()},
                    {"relator_count", pres.relators.size()}};
        *report_json = dup_string(rep.dump(2));
        return hom.all_relators_trivial ? CUBIST_OK : CUBIST_VIOLATION;
    });
}

int cubist_cover_hom(const cubist_graph* delta, const cubist_morphism* opposite_cover,
                     int sheets, int test_len, char** report_json) {
    return guarded([&] {
        cubist::RaagPresentation base(delta->g);
        cubist::CoverHom hom = cubist::cover_homomorphism(base, opposite_cover->m, sheets);
        json rep = word_corpus_report(hom, test_len);
        bool ok = rep.at("lifts_commute").get<bool>() &&
                  rep.at("all_images_reduced").get<bool>();
        *report_json = dup_string(rep.dump(2));
        return ok ? CUBIST_OK : CUBIST_VIOLATION;
    });
}

int cubist_word_reduce(const cubist_graph* delta, const char* word, char** out_word) {
    return guarded([&] {
        cubist::RaagPresentation p = presentation_of(delta);
        cubist::Word w = cubist::parse_word(p, word);
        *out_word = dup_string(cubist::format_word(p, cubist::delta_reduce(p, w).first));
        return CUBIST_OK;
    });
}

int cubist_word_normal_form(const cubist_graph* delta, const char* word, char** out_word) {
    return guarded([&] {
        cubist::RaagPresentation p = presentation_of(delta);
        *out_word = dup_string(
            cubist::format_word(p, cubist::normal_form(p, cubist::parse_word(p, word))));
        return CUBIST_OK;
    });
}

int cubist_word_equal(const cubist_graph* delta, const char* w1, const char* w2, int* equal) {
    return guarded([&] {
        cubist::RaagPresentation p = presentation_of(delta);
        *equal = cubist::words_equal(p, cubist::parse_word(p, w1), cubist::parse_word(p, w2)) ? 1
                                                                                              : 0;
        return CUBIST_OK;
    });
}

int cubist_word_conjugate(const cubist_graph* delta, const char* w1, const char* w2,
                          int* conjugate) {
    return guarded([&] {
        cubist::RaagPresentation p = presentation_of(delta);
        *conjugate =
            cubist::are_conjugate(p, cubist::parse_word(p, w1), cubist::parse_word(p, w2)) ? 1 : 0;
        return CUBIST_OK;
    });
}

int cubist_word_certify(const cubist_graph* delta, const char* word, char** report_json) {
    return guarded([&] {
        cubist::RaagPresentation p = presentation_of(delta);
        cubist::Word w = cubist::parse_word(p, word);
        cubist::IdentityResult r = cubist::identity_certificate(p, w);
        json rep;
        rep["trivial"] = r.trivial;
        if (r.trivial)
            rep["certificate"] = cubist::certificate_to_json(p, r.certificate);
        else
            rep["normal_form"] = cubist::format_word(p, r.normal_form);
        *report_json = dup_string(rep.dump(2));
        return r.trivial ? CUBIST_OK : CUBIST_VIOLATION;
    });
}

int cubist_search_square(const cubist_graph* delta, int max_len, long budget,
                         char** report_json) {
    return guarded([&] {
        cubist::RaagPresentation p = presentation_of(delta);
        auto triples = cubist::search_square_relation(p, max_len, budget);
        json arr = json::array();
        bool all = true;
        for (const auto& t : triples) {
            arr.push_back({{"x", cubist::format_word(p, t.x)},
                           {"y", cubist::format_word(p, t.y)},
                           {"z", cubist::format_word(p, t.z)},
                           {"xy_commute", t.xy_commute},
                           {"xz_commute", t.xz_commute},
                           {"yz_commute", t.yz_commute}});
            all = all && t.all_commute();
        }
        json rep = {{"max_len", max_len},
                    {"solutions", std::move(arr)},
                    {"all_triples_commute", all}};
        *report_json = dup_string(rep.dump(2));
        return CUBIST_OK;
    });
}

}  // extern "C"

namespace {

json word_corpus_report(const cubist::CoverHom& hom, int test_len) {
    json images = json::array();
    for (int h = 0; h < hom.base.generator_count(); ++h)
        images.push_back({{"generator", hom.base.generator_name(h)},
                          {"image", cubist::format_word(hom.cover, hom.generator_images[h])}});

    // Letterwise images of every delta-reduced word of length <= test_len
    // must stay reduced in the covering group.
    long checked = 0, reduced_count = 0;
    bool all_reduced = true;
    json failures = json::array();
    cubist::Word cur;
    std::function<void()> rec = [&]() {
        ++checked;
        cubist::Word img = hom.image_word(cur);
        if (cubist::is_delta_reduced(hom.cover, img)) {
            ++reduced_count;
        } else {
            all_reduced = false;
            if (failures.size() < 10)
                failures.push_back(cubist::format_word(hom.base, cur));
        }
        if (static_cast<int>(cur.size()) == test_len) return;
        for (int g = 0; g < hom.base.generator_count(); ++g)
            for (int sign : {+1, -1}) {
                cur.push_back({g, sign});
                if (cubist::is_delta_reduced(hom.base, cur)) rec();
                cur.pop_back();
            }
    };
    if (test_len >= 0) rec();

    return {{"generator_images", std::move(images)},
            {"lifts_commute", hom.lifts_commute},
            {"test_word_length", test_len},
            {"test_words_checked", checked},
            {"reduced_images", reduced_count},
            {"all_images_reduced", all_reduced},
            {"failures", std::move(failures)}};
}

}  // namespace
