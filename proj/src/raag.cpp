#include "cubist/raag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cubist {

Word parse_word(const RaagPresentation& p, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        long exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            try {
                exp = std::stol(e);
            } catch (const std::exception&) {
                throw input_error("bad exponent in letter '" + tok + "'");
            }
            if (exp == 0) throw input_error("zero exponent in letter '" + tok + "'");
        }
        auto gen = p.generator_index(name);
        if (!gen) throw input_error("unknown generator '" + name + "'");
        int sign = exp > 0 ? +1 : -1;
        for (long i = 0; i < std::abs(exp); ++i) w.push_back({*gen, sign});
    }
    return w;
}

std::string format_word(const RaagPresentation& p, const Word& w) {
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += " ";
        out += p.generator_name(l.gen);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word conjugated(const Word& g, const Word& w) {
    return concat(concat(g, w), inverse_word(g));
}

Word rotate_left(const Word& w, int k) {
    if (w.empty()) return w;
    k = ((k % static_cast<int>(w.size())) + static_cast<int>(w.size())) %
        static_cast<int>(w.size());
    Word out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

bool MoveCertificate::replay(const RaagPresentation& p, std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    Word w = start;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        const Move& m = moves[i];
        switch (m.kind) {
            case Move::Kind::Commutation: {
                if (m.pos < 0 || m.pos + 1 >= static_cast<int>(w.size()))
                    return fail("commutation out of range at move " + std::to_string(i));
                const Letter& a = w[m.pos];
                const Letter& b = w[m.pos + 1];
                if (a.gen == b.gen || !p.commute(a.gen, b.gen))
                    return fail("illegal commutation at move " + std::to_string(i));
                std::swap(w[m.pos], w[m.pos + 1]);
                break;
            }
            case Move::Kind::Deletion: {
                if (m.pos < 0 || m.pos + 1 >= static_cast<int>(w.size()))
                    return fail("deletion out of range at move " + std::to_string(i));
                const Letter& a = w[m.pos];
                const Letter& b = w[m.pos + 1];
                if (a.gen != b.gen || a.sign != -b.sign)
                    return fail("deletion of a non-inverse pair at move " + std::to_string(i));
                w.erase(w.begin() + m.pos, w.begin() + m.pos + 2);
                break;
            }
            case Move::Kind::Insertion: {
                if (m.pos < 0 || m.pos > static_cast<int>(w.size()))
                    return fail("insertion out of range at move " + std::to_string(i));
                if (m.gen < 0 || m.gen >= p.generator_count() || (m.sign != 1 && m.sign != -1))
                    return fail("bad insertion at move " + std::to_string(i));
                w.insert(w.begin() + m.pos, {Letter{m.gen, m.sign}, Letter{m.gen, -m.sign}});
                break;
            }
        }
    }
    if (w != end) return fail("replay does not reach the claimed end word");
    return true;
}

Word free_reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

namespace {

// Leftmost cancellable pair: smallest j, then the largest i < j such that
// w[i] = w[j]^-1 and everything strictly between commutes with it.
struct CancelPair {
    int i = -1, j = -1;
};

CancelPair find_cancellable(const RaagPresentation& p, const Word& w) {
    for (int j = 1; j < static_cast<int>(w.size()); ++j) {
        int g = w[j].gen;
        for (int i = j - 1; i >= 0; --i) {
            if (w[i].gen == g) {
                if (w[i].sign == -w[j].sign) return {i, j};
                break;  // a same-sign occurrence blocks everything earlier
            }
            if (!p.commute(w[i].gen, g)) break;
        }
    }
    return {};
}

}  // namespace

bool is_delta_reduced(const RaagPresentation& p, const Word& w) {
    return find_cancellable(p, w).i == -1;
}

std::pair<Word, MoveCertificate> delta_reduce(const RaagPresentation& p, const Word& w) {
    MoveCertificate cert;
    cert.start = w;
    Word cur = w;
    for (;;) {
        CancelPair pair = find_cancellable(p, cur);
        if (pair.i == -1) break;
        // Walk w[j] leftward until it sits next to w[i], then delete both.
        for (int t = pair.j - 1; t > pair.i; --t) {
            cert.moves.push_back({Move::Kind::Commutation, t, 0, 0});
            std::swap(cur[t], cur[t + 1]);
        }
        cert.moves.push_back({Move::Kind::Deletion, pair.i, 0, 0});
        cur.erase(cur.begin() + pair.i, cur.begin() + pair.i + 2);
    }
    cert.end = cur;
    return {cur, cert};
}

Word normal_form(const RaagPresentation& p, const Word& w) {
    Word rest = delta_reduce(p, w).first;
    Word out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        // A letter is available if everything before it commutes with it;
        // extract the least available letter.
        int best = -1;
        for (int pos = 0; pos < static_cast<int>(rest.size()); ++pos) {
            bool available = true;
            for (int r = 0; r < pos && available; ++r)
                if (rest[r].gen == rest[pos].gen || !p.commute(rest[r].gen, rest[pos].gen))
                    available = false;
            if (available && (best == -1 || rest[pos] < rest[best])) best = pos;
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + best);
    }
    return out;
}

bool words_equal(const RaagPresentation& p, const Word& a, const Word& b) {
    return normal_form(p, a) == normal_form(p, b);
}

bool is_trivial(const RaagPresentation& p, const Word& w) {
    return delta_reduce(p, w).first.empty();
}

IdentityResult identity_certificate(const RaagPresentation& p, const Word& w) {
    IdentityResult out;
    auto [reduced, cert] = delta_reduce(p, w);
    if (!reduced.empty()) {
        out.trivial = false;
        out.normal_form = normal_form(p, reduced);
        return out;
    }
    std::string why;
    if (!cert.replay(p, &why)) throw std::logic_error("identity certificate failed replay: " + why);
    out.trivial = true;
    out.certificate = std::move(cert);
    return out;
}

Word cyclic_delta_reduce(const RaagPresentation& p, const Word& w) {
    Word cur = delta_reduce(p, w).first;
    for (;;) {
        bool reduced_somewhere = false;
        for (int r = 1; r < static_cast<int>(cur.size()); ++r) {
            Word rot = rotate_left(cur, r);
            if (!is_delta_reduced(p, rot)) {
                cur = delta_reduce(p, rot).first;
                reduced_somewhere = true;
                break;
            }
        }
        if (!reduced_somewhere) return cur;
    }
}

namespace {

std::string encode_word(const Word& w) {
    std::string s;
    s.reserve(2 * w.size());
    for (const Letter& l : w) {
        s.push_back(static_cast<char>(l.gen & 0xff));
        s.push_back(static_cast<char>((l.gen >> 8) * 2 + (l.sign < 0)));
    }
    return s;
}

bool word_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Word conjugacy_representative(const RaagPresentation& p, const Word& w, long budget) {
    // Breadth-first closure of the cyclic reduction under rotations and
    // commutations. Interleavings matter: a rotation of a shuffled word can
    // reach representatives no single rotation of the original sees.
    Word start = cyclic_delta_reduce(p, w);
    if (start.empty()) return start;
    std::set<std::string> seen{encode_word(start)};
    std::vector<Word> frontier{start};
    Word best = start;
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& cur : frontier) {
            auto visit = [&](Word v) {
                std::string key = encode_word(v);
                if (!seen.insert(std::move(key)).second) return;
                if (static_cast<long>(seen.size()) > budget)
                    throw budget_error("conjugacy closure exceeded budget of " +
                                       std::to_string(budget) + " words");
                if (word_less(v, best)) best = v;
                next.push_back(std::move(v));
            };
            visit(rotate_left(cur, 1));
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                if (cur[i].gen == cur[i + 1].gen || !p.commute(cur[i].gen, cur[i + 1].gen))
                    continue;
                Word v = cur;
                std::swap(v[i], v[i + 1]);
                visit(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return best;
}

bool are_conjugate(const RaagPresentation& p, const Word& a, const Word& b) {
    Word ca = cyclic_delta_reduce(p, a);
    Word cb = cyclic_delta_reduce(p, b);
    if (ca.size() != cb.size()) return false;
    if (ca.empty()) return true;
    return conjugacy_representative(p, ca) == conjugacy_representative(p, cb);
}

Expression to_expression(const Word& w) {
    Expression x;
    for (const Letter& l : w) {
        if (!x.empty() && x.back().gen == l.gen) {
            x.back().exp += l.sign;
            if (x.back().exp == 0) x.pop_back();
        } else {
            x.push_back({l.gen, l.sign});
        }
    }
    return x;
}

Word expression_to_word(const Expression& x) {
    Word w;
    for (const Syllable& s : x)
        for (long i = 0; i < std::labs(s.exp); ++i) w.push_back({s.gen, s.exp > 0 ? +1 : -1});
    return w;
}

Expression reduce_expression(const RaagPresentation& p, Expression x) {
    for (;;) {
        // Syllable-level analogue of the cancellable-pair scan: two
        // syllables of the same generator amalgamate if everything between
        // commutes with it.
        bool merged = false;
        for (int j = 1; j < static_cast<int>(x.size()) && !merged; ++j) {
            int g = x[j].gen;
            for (int i = j - 1; i >= 0; --i) {
                if (x[i].gen == g) {
                    x[i].exp += x[j].exp;
                    x.erase(x.begin() + j);
                    if (x[i].exp == 0) x.erase(x.begin() + i);
                    merged = true;
                    break;
                }
                if (!p.commute(x[i].gen, g)) break;
            }
        }
        if (!merged) return x;
    }
}

bool ends_in(const RaagPresentation& p, const Expression& x, int gen) {
    Expression r = reduce_expression(p, x);
    for (int s = 0; s < static_cast<int>(r.size()); ++s) {
        if (r[s].gen != gen) continue;
        bool front = true;
        for (int t = 0; t < s && front; ++t)
            if (!p.commute(r[t].gen, gen)) front = false;
        if (front) return true;
        break;  // a blocked earlier syllable of gen also blocks later ones
    }
    return false;
}

namespace {

void enumerate_reduced_words(const RaagPresentation& p, int max_len, long budget,
                             std::vector<Word>& out) {
    Word cur;
    std::function<void()> rec = [&]() {
        if (static_cast<long>(out.size()) > budget)
            throw budget_error("word enumeration exceeded budget");
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int g = 0; g < p.generator_count(); ++g)
            for (int sign : {+1, -1}) {
                cur.push_back({g, sign});
                if (is_delta_reduced(p, cur)) rec();
                cur.pop_back();
            }
    };
    rec();
}

}  // namespace

std::vector<SquareTriple> search_square_relation(const RaagPresentation& p, int max_len,
                                                 long budget) {
    if (max_len < 0) throw input_error("max_len must be nonnegative");
    std::vector<Word> words;
    enumerate_reduced_words(p, max_len, budget, words);
    long w = static_cast<long>(words.size());
    if (w * w * w > budget)
        throw budget_error("square-relation search needs " + std::to_string(w * w * w) +
                           " triples, budget is " + std::to_string(budget));

    std::vector<SquareTriple> out;
    std::set<std::string> seen;
    for (const Word& x : words)
        for (const Word& y : words)
            for (const Word& z : words) {
                Word lhs = concat(concat(x, x), concat(y, y));
                Word rel = concat(lhs, inverse_word(concat(z, z)));
                if (!is_trivial(p, rel)) continue;
                std::string key = format_word(p, normal_form(p, x)) + "|" +
                                  format_word(p, normal_form(p, y)) + "|" +
                                  format_word(p, normal_form(p, z));
                if (!seen.insert(key).second) continue;
                SquareTriple t;
                t.x = x;
                t.y = y;
                t.z = z;
                auto comm = [&](const Word& a, const Word& b) {
                    return is_trivial(p, concat(concat(a, b), inverse_word(concat(b, a))));
                };
                t.xy_commute = comm(x, y);
                t.xz_commute = comm(x, z);
                t.yz_commute = comm(y, z);
                out.push_back(std::move(t));
            }
    return out;
}

}  // namespace cubist
