// Exercises the shared-library surface end to end: handles, status codes,
// JSON payloads, and the error paths.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cubist/cubist.h"

using nlohmann::json;

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { cubist_string_free(s); }
    json parsed() const { return json::parse(std::string(s)); }
};

}  // namespace

TEST_CASE("version and error text are always available") {
    CHECK(std::string(cubist_version()) == "0.1.0");
    CHECK(cubist_last_error() != nullptr);
}

TEST_CASE("graph lifecycle: builtin, parse, derive, serialize") {
    cubist_graph* k5 = nullptr;
    REQUIRE(cubist_graph_builtin("complete:5", &k5) == CUBIST_OK);
    Str js;
    REQUIRE(cubist_graph_to_json(k5, &js.s) == CUBIST_OK);
    json j = js.parsed();
    CHECK(j["vertices"].size() == 5);
    CHECK(j["edges"].size() == 10);

    cubist_graph* reparsed = nullptr;
    REQUIRE(cubist_graph_parse(js.s, &reparsed) == CUBIST_OK);
    cubist_graph* delta = nullptr;
    REQUIRE(cubist_graph_delta(reparsed, &delta) == CUBIST_OK);
    cubist_graph* petersen = nullptr;
    REQUIRE(cubist_graph_builtin("petersen", &petersen) == CUBIST_OK);
    int iso = 0;
    REQUIRE(cubist_graph_isomorphic(delta, petersen, &iso) == CUBIST_OK);
    CHECK(iso == 1);

    cubist_graph_free(k5);
    cubist_graph_free(reparsed);
    cubist_graph_free(delta);
    cubist_graph_free(petersen);
}

TEST_CASE("bad input produces CUBIST_ERR_INPUT and a message") {
    cubist_graph* g = nullptr;
    CHECK(cubist_graph_builtin("no_such_family:3", &g) == CUBIST_ERR_INPUT);
    CHECK(std::string(cubist_last_error()).find("no_such_family") != std::string::npos);
    CHECK(cubist_graph_parse("{\"vertices\": [], \"oops\": 1}", &g) == CUBIST_ERR_INPUT);
    CHECK(cubist_graph_parse("{ not json", &g) == CUBIST_ERR_INPUT);
}

TEST_CASE("config space, f-vector, flag, surface over the C surface") {
    cubist_graph* k33 = nullptr;
    REQUIRE(cubist_graph_builtin("complete_bipartite:3,3", &k33) == CUBIST_OK);
    cubist_complex* x = nullptr;
    REQUIRE(cubist_config_space(k33, 2, 1'000'000, &x) == CUBIST_OK);
    Str fv;
    REQUIRE(cubist_complex_f_vector(x, &fv.s) == CUBIST_OK);
    CHECK(fv.parsed()["f_vector"] == json::array({15, 36, 18}));
    CHECK(fv.parsed()["euler_characteristic"] == -3);

    Str flag;
    CHECK(cubist_check_flag(x, &flag.s) == CUBIST_OK);
    CHECK(flag.parsed()["ok"] == true);

    Str surf;
    REQUIRE(cubist_surface_id(x, &surf.s) == CUBIST_OK);
    CHECK(surf.parsed()["is_closed_surface"] == true);
    CHECK(surf.parsed()["orientable"] == false);

    // Round trip through the JSON dump.
    Str dump;
    REQUIRE(cubist_complex_to_json(x, &dump.s) == CUBIST_OK);
    cubist_complex* back = nullptr;
    REQUIRE(cubist_complex_parse(dump.s, &back) == CUBIST_OK);
    Str fv2;
    REQUIRE(cubist_complex_f_vector(back, &fv2.s) == CUBIST_OK);
    CHECK(fv2.parsed() == fv.parsed());

    // Budget exhaustion surfaces as its own status.
    cubist_complex* tiny = nullptr;
    CHECK(cubist_config_space(k33, 2, 3, &tiny) == CUBIST_ERR_BUDGET);

    cubist_complex_free(back);
    cubist_complex_free(x);
    cubist_graph_free(k33);
}

TEST_CASE("phi certificate and induced homomorphism statuses") {
    cubist_graph* k33 = nullptr;
    REQUIRE(cubist_graph_builtin("complete_bipartite:3,3", &k33) == CUBIST_OK);
    Str cert;
    CHECK(cubist_phi_certificate(k33, 2, 1'000'000, 2, &cert.s) == CUBIST_OK);
    CHECK(cert.parsed()["certified"] == true);
    CHECK(cert.parsed()["vertex_tables"].size() == 15);

    Str hom;
    CHECK(cubist_phi_induced_hom(k33, 2, 1'000'000, &hom.s) == CUBIST_OK);
    CHECK(hom.parsed()["generator_count"] == 22);
    CHECK(hom.parsed()["relator_count"] == 18);
    CHECK(hom.parsed()["all_relators_trivial"] == true);
    cubist_graph_free(k33);
}

TEST_CASE("word operations over the C surface") {
    cubist_graph* edge = nullptr;
    REQUIRE(cubist_graph_parse(
                R"({"vertices": ["a", "b"], "edges": [["a", "b"]]})", &edge) == CUBIST_OK);

    Str nf;
    REQUIRE(cubist_word_normal_form(edge, "b a", &nf.s) == CUBIST_OK);
    CHECK(std::string(nf.s) == "a b");

    int eq = 0;
    REQUIRE(cubist_word_equal(edge, "a b", "b a", &eq) == CUBIST_OK);
    CHECK(eq == 1);

    int conj = 0;
    REQUIRE(cubist_word_conjugate(edge, "a b", "b a", &conj) == CUBIST_OK);
    CHECK(conj == 1);

    Str cert;
    CHECK(cubist_word_certify(edge, "a b a^-1 b^-1", &cert.s) == CUBIST_OK);
    CHECK(cert.parsed()["trivial"] == true);
    Str cert2;
    CHECK(cubist_word_certify(edge, "a", &cert2.s) == CUBIST_VIOLATION);
    CHECK(cert2.parsed()["normal_form"] == "a");

    Str sq;
    REQUIRE(cubist_search_square(edge, 1, 1'000'000, &sq.s) == CUBIST_OK);
    CHECK(sq.parsed()["all_triples_commute"] == true);

    cubist_graph* bad = nullptr;
    REQUIRE(cubist_graph_builtin("complete:2", &bad) == CUBIST_OK);
    Str out;
    CHECK(cubist_word_reduce(bad, "z", &out.s) == CUBIST_ERR_INPUT);
    cubist_graph_free(bad);
    cubist_graph_free(edge);
}

TEST_CASE("cover validation and cover homomorphism over the C surface") {
    auto cycle = [](int n) {
        json g;
        g["vertices"] = json::array();
        g["edges"] = json::array();
        for (int i = 0; i < n; ++i) {
            g["vertices"].push_back(std::to_string(i));
            g["edges"].push_back(json::array({std::to_string(i), std::to_string((i + 1) % n)}));
        }
        return g;
    };
    json c6 = cycle(6);
    json c3 = cycle(3);
    json vmap = json::array();
    for (int i = 0; i < 6; ++i)
        vmap.push_back(json::array({std::to_string(i), std::to_string(i % 3)}));
    json morphism = {{"source", c6}, {"target", c3}, {"vertex_map", vmap}};

    cubist_morphism* m = nullptr;
    REQUIRE(cubist_morphism_parse(morphism.dump().c_str(), &m) == CUBIST_OK);
    Str rep;
    CHECK(cubist_cover_validate(m, 2, &rep.s) == CUBIST_OK);
    CHECK(rep.parsed()["valid"] == true);
    Str rep_bad;
    CHECK(cubist_cover_validate(m, 3, &rep_bad.s) == CUBIST_VIOLATION);

    // Delta = opposite of C3 = empty graph on three vertices.
    json delta = {{"vertices", {"0", "1", "2"}}, {"edges", json::array()}};
    cubist_graph* dg = nullptr;
    REQUIRE(cubist_graph_parse(delta.dump().c_str(), &dg) == CUBIST_OK);
    Str hom;
    CHECK(cubist_cover_hom(dg, m, 2, 3, &hom.s) == CUBIST_OK);
    json h = hom.parsed();
    CHECK(h["lifts_commute"] == true);
    CHECK(h["all_images_reduced"] == true);
    CHECK(h["generator_images"][0]["image"] == "0 3");

    cubist_graph_free(dg);
    cubist_morphism_free(m);
}

TEST_CASE("presentation over the C surface") {
    cubist_graph* c5 = nullptr;
    REQUIRE(cubist_graph_builtin("cycle:5", &c5) == CUBIST_OK);
    cubist_complex* x = nullptr;
    REQUIRE(cubist_config_space(c5, 1, 1'000'000, &x) == CUBIST_OK);
    Str pres;
    REQUIRE(cubist_presentation(x, "", &pres.s) == CUBIST_OK);
    CHECK(pres.parsed()["generators"].size() == 1);
    CHECK(pres.parsed()["relators"].size() == 0);
    cubist_complex_free(x);
    cubist_graph_free(c5);
}
