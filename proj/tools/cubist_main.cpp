// cubist: graph-braid cube complexes, RAAG word/conjugacy decisions, and
// embedding certificates, over the C API in cubist/cubist.h.
//
// Exit codes: 0 success/certified, 1 input error, 2 violations found or a
// negative verdict, 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubist/cubist.h"

using nlohmann::json;

namespace {

struct GraphHandle {
    cubist_graph* g = nullptr;
    ~GraphHandle() { cubist_graph_free(g); }
};
struct ComplexHandle {
    cubist_complex* x = nullptr;
    ~ComplexHandle() { cubist_complex_free(x); }
};
struct MorphismHandle {
    cubist_morphism* m = nullptr;
    ~MorphismHandle() { cubist_morphism_free(m); }
};

struct CApiString {
    char* s = nullptr;
    ~CApiString() { cubist_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "cubist: " << msg << "\n";
    std::exit(code);
}

void check(int status) {
    if (status == CUBIST_OK || status == CUBIST_VIOLATION) return;
    die(status, cubist_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(1, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// FNV-1a over the raw bytes; stable input fingerprints for report headers.
std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct ReportWriter {
    json inputs = json::object();
    std::string out_path;

    void record_input(const std::string& name, const std::string& content) {
        inputs[name] = fnv1a_hex(content);
    }
    void write(const json& body) const {
        json report = {{"header", {{"tool", "cubist"},
                                   {"version", cubist_version()},
                                   {"inputs", inputs}}},
                       {"body", body}};
        if (out_path.empty()) return;
        std::ofstream out(out_path, std::ios::binary);
        if (!out) die(1, "cannot write '" + out_path + "'");
        out << report.dump(2) << "\n";
    }
};

// Shared graph input: positional file, --graph option, or --builtin
// shorthand.
struct GraphInput {
    std::string path;
    std::string opt_path;
    std::string builtin;

    void attach(CLI::App* cmd, bool required = true) {
        cmd->add_option("graph-file", path, "graph JSON file");
        cmd->add_option("--graph", opt_path, "graph JSON file");
        cmd->add_option("--builtin", builtin, "builtin graph, e.g. complete:5");
        if (required)
            cmd->callback([this]() {
                int sources = !path.empty() + !opt_path.empty() + !builtin.empty();
                if (sources != 1)
                    throw CLI::ValidationError("give exactly one of a graph file or --builtin");
            });
    }

    GraphHandle load(ReportWriter& rw) const {
        GraphHandle h;
        if (!builtin.empty()) {
            rw.record_input("builtin", builtin);
            check(cubist_graph_builtin(builtin.c_str(), &h.g));
        } else {
            const std::string& file = path.empty() ? opt_path : path;
            std::string text = read_file(file);
            rw.record_input(file, text);
            check(cubist_graph_parse(text.c_str(), &h.g));
        }
        return h;
    }
};

void emit_graph(const GraphHandle& h, const std::string& out_path) {
    CApiString s;
    check(cubist_graph_to_json(h.g, &s.s));
    if (out_path.empty()) {
        std::cout << s.str() << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) die(1, "cannot write '" + out_path + "'");
        out << s.str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph braid groups, RAAG embeddings, and their certificates"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for certificate checks")->capture_default_str();

    int exit_code = 0;

    // ---- config-space ----
    auto* cs = app.add_subcommand("config-space", "build the reduced configuration space X_n(G)");
    GraphInput cs_in;
    cs_in.attach(cs);
    int cs_n = 2;
    long cs_budget = 50'000'000;
    std::string cs_out, cs_report;
    bool cs_surface = false, cs_flag = false;
    cs->add_option("--n", cs_n, "number of points")->required();
    cs->add_option("--budget", cs_budget, "cube enumeration cap")->check(CLI::PositiveNumber);
    cs->add_option("--out", cs_out, "write the complex JSON here");
    cs->add_option("--report", cs_report, "write a JSON report here");
    cs->add_flag("--surface", cs_surface, "run closed-surface recognition");
    cs->add_flag("--flag-check", cs_flag, "run the flag criterion on every link");
    cs->final_callback([&] {
        ReportWriter rw;
        rw.out_path = cs_report;
        GraphHandle g = cs_in.load(rw);
        ComplexHandle x;
        check(cubist_config_space(g.g, cs_n, cs_budget, &x.x));
        CApiString fv;
        check(cubist_complex_f_vector(x.x, &fv.s));
        json body = json::parse(fv.str());
        std::string summary = "config-space: f=" + body["f_vector"].dump() +
                              " chi=" + body["euler_characteristic"].dump();
        if (cs_surface) {
            CApiString s;
            check(cubist_surface_id(x.x, &s.s));
            body["surface"] = json::parse(s.str());
            summary += body["surface"]["is_closed_surface"].get<bool>()
                           ? (body["surface"]["orientable"].get<bool>()
                                  ? " closed orientable surface"
                                  : " closed nonorientable surface")
                           : " not a closed surface";
        }
        if (cs_flag) {
            CApiString s;
            int status = cubist_check_flag(x.x, &s.s);
            check(status);
            body["flag"] = json::parse(s.str());
            if (status == CUBIST_VIOLATION) exit_code = 2;
            summary += body["flag"]["ok"].get<bool>() ? " flag:ok" : " flag:FAIL";
        }
        if (!cs_out.empty()) {
            CApiString s;
            check(cubist_complex_to_json(x.x, &s.s));
            std::ofstream out(cs_out, std::ios::binary);
            if (!out) die(1, "cannot write '" + cs_out + "'");
            out << s.str() << "\n";
        }
        rw.write(body);
        std::cout << summary << "\n";
    });

    // ---- graph derivations ----
    struct DeriveCmd {
        const char* name;
        const char* help;
        int (*fn)(const cubist_graph*, cubist_graph**);
    };
    static const DeriveCmd derive_cmds[] = {
        {"delta-graph", "Delta(G): vertices = edges of G, adjacency = disjointness",
         cubist_graph_delta},
        {"opposite", "complement graph", cubist_graph_opposite},
        {"line-graph", "line graph of G", cubist_graph_line},
    };
    for (const auto& dc : derive_cmds) {
        auto* cmd = app.add_subcommand(dc.name, dc.help);
        auto in = std::make_shared<GraphInput>();
        in->attach(cmd);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "write the derived graph here");
        cmd->final_callback([&, in, out, fn = dc.fn] {
            ReportWriter rw;
            GraphHandle g = in->load(rw);
            GraphHandle d;
            check(fn(g.g, &d.g));
            emit_graph(d, *out);
        });
    }

    auto* sub = app.add_subcommand("subdivide", "replace each edge by a k-edge path");
    GraphInput sub_in;
    sub_in.attach(sub);
    int sub_k = 2, sub_hint_n = 0;
    std::string sub_out;
    sub->add_option("--k", sub_k, "edges per subdivided edge")->required();
    sub->add_option("--hint-n", sub_hint_n,
                    "also report (on stderr) the uncertified fineness heuristic for n points");
    sub->add_option("--out", sub_out, "write the subdivided graph here");
    sub->final_callback([&] {
        ReportWriter rw;
        GraphHandle g = sub_in.load(rw);
        GraphHandle d;
        check(cubist_graph_subdivide(g.g, sub_k, &d.g));
        if (sub_hint_n > 0) {
            CApiString hint;
            check(cubist_subdivision_hint(d.g, sub_hint_n, &hint.s));
            std::cerr << "subdivision heuristic (advisory): " << hint.str() << "\n";
        }
        emit_graph(d, sub_out);
    });

    // ---- planar ----
    auto* pl = app.add_subcommand("planar", "planarity with an auditable witness");
    GraphInput pl_in;
    pl_in.attach(pl);
    std::string pl_report;
    pl->add_option("--report", pl_report, "write a JSON report here");
    pl->final_callback([&] {
        ReportWriter rw;
        rw.out_path = pl_report;
        GraphHandle g = pl_in.load(rw);
        CApiString s;
        int planar = 0;
        check(cubist_graph_planarity(g.g, &s.s, &planar));
        rw.write(json::parse(s.str()));
        std::cout << (planar ? "planar" : "nonplanar (" +
                                              json::parse(s.str())["kuratowski_kind"]
                                                  .get<std::string>() +
                                              " subdivision found)")
                  << "\n";
    });

    // ---- cover validate ----
    auto* cover = app.add_subcommand("cover", "covering-map operations");
    cover->require_subcommand(1);
    auto* cv = cover->add_subcommand("validate", "check a graph morphism is a k-sheeted cover");
    std::string cv_path, cv_report;
    int cv_sheets = 1;
    cv->add_option("--cover", cv_path, "morphism JSON file")->required();
    cv->add_option("--sheets", cv_sheets, "expected sheet count")->required();
    cv->add_option("--report", cv_report, "write a JSON report here");
    cv->final_callback([&] {
        ReportWriter rw;
        rw.out_path = cv_report;
        std::string text = read_file(cv_path);
        rw.record_input(cv_path, text);
        MorphismHandle m;
        check(cubist_morphism_parse(text.c_str(), &m.m));
        CApiString s;
        int status = cubist_cover_validate(m.m, cv_sheets, &s.s);
        check(status);
        json body = json::parse(s.str());
        rw.write(body);
        std::cout << body["detail"].get<std::string>() << "\n";
        if (status == CUBIST_VIOLATION) exit_code = 2;
    });

    // ---- check-flag / surface-id over a complex or a (graph, n) pair ----
    struct ComplexInput {
        std::string complex_path;
        GraphInput graph;
        int n = 0;

        void attach(CLI::App* cmd) {
            cmd->add_option("--complex", complex_path, "complex JSON file");
            graph.attach(cmd, false);
            cmd->add_option("--n", n, "build X_n of the given graph");
        }
        ComplexHandle load(ReportWriter& rw, long budget) const {
            ComplexHandle x;
            if (!complex_path.empty()) {
                std::string text = read_file(complex_path);
                rw.record_input(complex_path, text);
                check(cubist_complex_parse(text.c_str(), &x.x));
            } else if (n > 0) {
                GraphHandle g = graph.load(rw);
                check(cubist_config_space(g.g, n, budget, &x.x));
            } else {
                die(1, "give --complex, or a graph with --n");
            }
            return x;
        }
    };

    auto* cf = app.add_subcommand("check-flag", "flag condition on every vertex link");
    auto cf_in = std::make_shared<ComplexInput>();
    cf_in->attach(cf);
    std::string cf_report;
    cf->add_option("--report", cf_report, "write a JSON report here");
    cf->final_callback([&] {
        ReportWriter rw;
        rw.out_path = cf_report;
        ComplexHandle x = cf_in->load(rw, 50'000'000);
        CApiString s;
        int status = cubist_check_flag(x.x, &s.s);
        check(status);
        rw.write(json::parse(s.str()));
        std::cout << (status == CUBIST_OK ? "flag condition holds at every vertex"
                                          : "flag condition FAILS")
                  << "\n";
        if (status == CUBIST_VIOLATION) exit_code = 2;
    });

    auto* si = app.add_subcommand("surface-id", "closed-surface recognition");
    auto si_in = std::make_shared<ComplexInput>();
    si_in->attach(si);
    std::string si_report;
    si->add_option("--report", si_report, "write a JSON report here");
    si->final_callback([&] {
        ReportWriter rw;
        rw.out_path = si_report;
        ComplexHandle x = si_in->load(rw, 50'000'000);
        CApiString s;
        check(cubist_surface_id(x.x, &s.s));
        json body = json::parse(s.str());
        rw.write(body);
        std::cout << body["detail"].get<std::string>()
                  << " (chi=" << body["euler_characteristic"].dump() << ")\n";
    });

    // ---- salvetti ----
    auto* sv = app.add_subcommand("salvetti", "cubed torus of a defining graph");
    GraphInput sv_in;
    sv_in.attach(sv);
    int sv_dim = 2;
    std::string sv_out;
    sv->add_option("--max-dim", sv_dim, "enumerate cubes up to this dimension")
        ->capture_default_str();
    sv->add_option("--out", sv_out, "write the complex JSON here");
    sv->final_callback([&] {
        ReportWriter rw;
        GraphHandle g = sv_in.load(rw);
        ComplexHandle x;
        check(cubist_salvetti(g.g, sv_dim, &x.x));
        CApiString fv;
        check(cubist_complex_f_vector(x.x, &fv.s));
        if (!sv_out.empty()) {
            CApiString s;
            check(cubist_complex_to_json(x.x, &s.s));
            std::ofstream out(sv_out, std::ios::binary);
            if (!out) die(1, "cannot write '" + sv_out + "'");
            out << s.str() << "\n";
        }
        std::cout << "salvetti: f=" << json::parse(fv.str())["f_vector"].dump() << "\n";
    });

    // ---- phi ----
    auto* phi = app.add_subcommand("phi", "Phi: X_n(G) -> T_Delta(G), optionally certified");
    GraphInput phi_in;
    phi_in.attach(phi);
    int phi_n = 2;
    long phi_budget = 50'000'000;
    bool phi_certify = false, phi_induced = false;
    std::string phi_report;
    phi->add_option("--n", phi_n, "number of points")->required();
    phi->add_option("--budget", phi_budget, "cube enumeration cap")->check(CLI::PositiveNumber);
    phi->add_flag("--certify", phi_certify, "run the local-isometry certificate");
    phi->add_flag("--induced", phi_induced, "verify relator images in the RAAG");
    phi->add_option("--report", phi_report, "write a JSON report here");
    phi->final_callback([&] {
        ReportWriter rw;
        rw.out_path = phi_report;
        GraphHandle g = phi_in.load(rw);
        json body;
        if (phi_certify || !phi_induced) {
            CApiString s;
            int status = cubist_phi_certificate(g.g, phi_n, phi_budget, jobs, &s.s);
            check(status);
            body = json::parse(s.str());
            if (phi_certify && status == CUBIST_VIOLATION) exit_code = 2;
            std::cout << (body["certified"].get<bool>()
                              ? "certified: local isometry at every vertex"
                              : "NOT certified: " +
                                    std::to_string(body["violations"].size()) + " violations")
                      << "\n";
        }
        if (phi_induced) {
            CApiString s;
            int status = cubist_phi_induced_hom(g.g, phi_n, phi_budget, &s.s);
            check(status);
            body["induced"] = json::parse(s.str());
            if (status == CUBIST_VIOLATION) exit_code = 2;
            std::cout << (body["induced"]["all_relators_trivial"].get<bool>()
                              ? "all relator images trivial"
                              : "a relator image is NOT trivial")
                      << "\n";
        }
        rw.write(body);
    });

    // ---- presentation ----
    auto* pr = app.add_subcommand("presentation", "pi_1 presentation of a square complex");
    std::string pr_complex, pr_base, pr_report;
    pr->add_option("--complex", pr_complex, "complex JSON file")->required();
    pr->add_option("--basepoint", pr_base, "basepoint vertex label (default: least)");
    pr->add_option("--report", pr_report, "write a JSON report here");
    pr->final_callback([&] {
        ReportWriter rw;
        rw.out_path = pr_report;
        std::string text = read_file(pr_complex);
        rw.record_input(pr_complex, text);
        ComplexHandle x;
        check(cubist_complex_parse(text.c_str(), &x.x));
        CApiString s;
        check(cubist_presentation(x.x, pr_base.c_str(), &s.s));
        json body = json::parse(s.str());
        rw.write(body);
        std::cout << "presentation: " << body["generators"].size() << " generators, "
                  << body["relators"].size() << " relators\n";
    });

    // ---- cover-hom ----
    auto* ch = app.add_subcommand("cover-hom",
                                  "homomorphism j into the covering RAAG of an opposite-graph cover");
    std::string ch_delta, ch_cover, ch_report;
    int ch_sheets = 1, ch_testlen = 3;
    ch->add_option("--delta", ch_delta, "defining graph JSON of the base RAAG")->required();
    ch->add_option("--cover", ch_cover, "morphism JSON of the opposite-graph cover")->required();
    ch->add_option("--sheets", ch_sheets, "sheet count")->required();
    ch->add_option("--test-len", ch_testlen, "verify images of reduced words up to this length")
        ->capture_default_str();
    ch->add_option("--report", ch_report, "write a JSON report here");
    ch->final_callback([&] {
        ReportWriter rw;
        rw.out_path = ch_report;
        std::string dtext = read_file(ch_delta);
        std::string ctext = read_file(ch_cover);
        rw.record_input(ch_delta, dtext);
        rw.record_input(ch_cover, ctext);
        GraphHandle delta;
        check(cubist_graph_parse(dtext.c_str(), &delta.g));
        MorphismHandle cover_m;
        check(cubist_morphism_parse(ctext.c_str(), &cover_m.m));
        CApiString s;
        int status = cubist_cover_hom(delta.g, cover_m.m, ch_sheets, ch_testlen, &s.s);
        check(status);
        json body = json::parse(s.str());
        rw.write(body);
        std::cout << "cover-hom: " << body["test_words_checked"].dump() << " words checked, "
                  << (body["all_images_reduced"].get<bool>() ? "all images reduced"
                                                             : "REDUCTION FAILURE")
                  << "\n";
        if (status == CUBIST_VIOLATION) exit_code = 2;
    });

    // ---- word ----
    auto* word = app.add_subcommand("word", "word and conjugacy problems in a RAAG");
    word->require_subcommand(1);
    std::string w_graph;
    word->add_option("--graph", w_graph, "defining graph JSON")->required();
    auto load_delta = [&](ReportWriter& rw) {
        std::string text = read_file(w_graph);
        rw.record_input(w_graph, text);
        GraphHandle h;
        check(cubist_graph_parse(text.c_str(), &h.g));
        return h;
    };

    auto* wr = word->add_subcommand("reduce", "delta-reduce a word");
    auto* wn = word->add_subcommand("nf", "lexicographic normal form");
    std::string w_single;
    for (auto* cmd : {wr, wn}) {
        cmd->fallthrough();
        cmd->add_option("word", w_single, "word in caret syntax")->required();
    }
    wr->final_callback([&] {
        ReportWriter rw;
        GraphHandle d = load_delta(rw);
        CApiString s;
        check(cubist_word_reduce(d.g, w_single.c_str(), &s.s));
        std::cout << s.str() << "\n";
    });
    wn->final_callback([&] {
        ReportWriter rw;
        GraphHandle d = load_delta(rw);
        CApiString s;
        check(cubist_word_normal_form(d.g, w_single.c_str(), &s.s));
        std::cout << s.str() << "\n";
    });

    auto* we = word->add_subcommand("equal", "do two words represent the same element?");
    auto* wc = word->add_subcommand("conj", "do two words represent conjugate elements?");
    std::string w_first, w_second;
    for (auto* cmd : {we, wc}) {
        cmd->fallthrough();
        cmd->add_option("w1", w_first, "first word")->required();
        cmd->add_option("w2", w_second, "second word")->required();
    }
    we->final_callback([&] {
        ReportWriter rw;
        GraphHandle d = load_delta(rw);
        int eq = 0;
        check(cubist_word_equal(d.g, w_first.c_str(), w_second.c_str(), &eq));
        std::cout << (eq ? "equal" : "not equal") << "\n";
        if (!eq) exit_code = 2;
    });
    wc->final_callback([&] {
        ReportWriter rw;
        GraphHandle d = load_delta(rw);
        int conj = 0;
        check(cubist_word_conjugate(d.g, w_first.c_str(), w_second.c_str(), &conj));
        std::cout << (conj ? "conjugate" : "not conjugate") << "\n";
        if (!conj) exit_code = 2;
    });

    auto* wcf = word->add_subcommand("certify", "identity certificate or nontrivial verdict");
    wcf->fallthrough();
    std::string wcf_word, wcf_report;
    wcf->add_option("word", wcf_word, "word in caret syntax")->required();
    wcf->add_option("--report", wcf_report, "write the certificate JSON here");
    wcf->final_callback([&] {
        ReportWriter rw;
        rw.out_path = wcf_report;
        GraphHandle d = load_delta(rw);
        CApiString s;
        int status = cubist_word_certify(d.g, wcf_word.c_str(), &s.s);
        check(status);
        json body = json::parse(s.str());
        rw.write(body);
        if (status == CUBIST_OK) {
            std::cout << "trivial: certificate with " << body["certificate"]["moves"].size()
                      << " moves\n";
        } else {
            std::cout << "nontrivial: normal form '" << body["normal_form"].get<std::string>()
                      << "'\n";
            exit_code = 2;
        }
    });

    // ---- search-square ----
    auto* sq = app.add_subcommand("search-square", "exhaustive x^2 y^2 = z^2 solution search");
    GraphInput sq_in;
    sq_in.attach(sq);
    int sq_len = 2;
    long sq_budget = 10'000'000;
    std::string sq_report;
    sq->add_option("--max-len", sq_len, "maximum word length")->required();
    sq->add_option("--budget", sq_budget, "triple enumeration cap")->check(CLI::PositiveNumber);
    sq->add_option("--report", sq_report, "write a JSON report here");
    sq->final_callback([&] {
        ReportWriter rw;
        rw.out_path = sq_report;
        GraphHandle g = sq_in.load(rw);
        CApiString s;
        check(cubist_search_square(g.g, sq_len, sq_budget, &s.s));
        json body = json::parse(s.str());
        rw.write(body);
        std::cout << "search-square: " << body["solutions"].size() << " solutions, "
                  << (body["all_triples_commute"].get<bool>() ? "all pairwise commuting"
                                                              : "NON-COMMUTING TRIPLE FOUND")
                  << "\n";
    });

    // Global options (--jobs) may appear after any subcommand.
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* s : cmd->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            allow_fallthrough(s);
        }
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    return exit_code;
}
