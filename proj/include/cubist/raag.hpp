#ifndef CUBIST_RAAG_HPP
#define CUBIST_RAAG_HPP

#include <string>
#include <vector>

#include "cubist/graph.hpp"

namespace cubist {

/// Right-angled Artin group presentation: one generator per vertex of the
/// defining graph (lexicographic order), one commutation per edge.
class RaagPresentation {
public:
    explicit RaagPresentation(SimplicialGraph defining_graph)
        : graph_(std::move(defining_graph)) {}

    const SimplicialGraph& defining_graph() const { return graph_; }
    int generator_count() const { return graph_.vertex_count(); }
    const std::string& generator_name(int i) const { return graph_.vertex_name(i); }
    std::optional<int> generator_index(const std::string& name) const {
        return graph_.vertex_index(name);
    }
    bool commute(int a, int b) const { return graph_.adjacent(a, b); }

private:
    SimplicialGraph graph_;
};

struct Letter {
    int gen = 0;
    int sign = +1;
    friend bool operator==(const Letter&, const Letter&) = default;
    /// Generator order first, then + before -.
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.sign > b.sign;
    }
};

using Word = std::vector<Letter>;

/// Caret syntax: whitespace-separated letters "a" or "a^-1"; an integer
/// exponent "a^k" expands to |k| letters.
Word parse_word(const RaagPresentation& p, const std::string& text);
std::string format_word(const RaagPresentation& p, const Word& w);

Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word conjugated(const Word& g, const Word& w);  // g w g^-1
Word rotate_left(const Word& w, int k);

/// Replayable transformation between two words. Insertions add a trivial
/// pair u^s u^-s, deletions remove an adjacent inverse pair, commutations
/// swap adjacent letters whose generators are joined in the defining graph.
struct Move {
    enum class Kind { Commutation, Deletion, Insertion };
    Kind kind = Kind::Commutation;
    int pos = 0;
    int gen = 0;   // insertions only
    int sign = 0;  // insertions only
};

struct MoveCertificate {
    Word start;
    Word end;
    std::vector<Move> moves;

    /// Re-run the moves, validating each against the presentation, and
    /// confirm the claimed end word.
    bool replay(const RaagPresentation& p, std::string* why = nullptr) const;
};

Word free_reduce(const Word& w);

/// Remove every cancellable pair u^s ... u^-s whose intervening letters all
/// commute with u; the certificate realizes each removal as commutations
/// followed by one deletion.
std::pair<Word, MoveCertificate> delta_reduce(const RaagPresentation& p, const Word& w);

/// No cancellable pair exists (literal definition scan).
bool is_delta_reduced(const RaagPresentation& p, const Word& w);

/// Delta-reduce, then take the lexicographically least shuffle of the
/// result by greedy front extraction. Two words represent the same group
/// element iff their normal forms coincide.
Word normal_form(const RaagPresentation& p, const Word& w);

bool words_equal(const RaagPresentation& p, const Word& a, const Word& b);
bool is_trivial(const RaagPresentation& p, const Word& w);

/// Identity certificate: commutations and deletions from w down to the
/// empty word, replay-checked; or the nontrivial verdict with normal form.
struct IdentityResult {
    bool trivial = false;
    MoveCertificate certificate;  // meaningful when trivial
    Word normal_form;             // meaningful when not
};
IdentityResult identity_certificate(const RaagPresentation& p, const Word& w);

/// A cyclically delta-reduced conjugate of w, obtained by rotating and
/// delta-reducing to a fixed point.
Word cyclic_delta_reduce(const RaagPresentation& p, const Word& w);

/// Canonical conjugacy-class representative: the lexicographically least
/// word in the closure of the cyclic reduction under rotations and
/// commutations (that closure is exactly the cyclic equivalence class of
/// the reduced word).
Word conjugacy_representative(const RaagPresentation& p, const Word& w,
                              long budget = 1'000'000);

/// Conjugacy: cyclically reduce both sides and compare canonical
/// representatives. Unequal reduced lengths can never be conjugate.
bool are_conjugate(const RaagPresentation& p, const Word& a, const Word& b);

struct Syllable {
    int gen = 0;
    long exp = 0;  // nonzero
    friend bool operator==(const Syllable&, const Syllable&) = default;
};
using Expression = std::vector<Syllable>;

/// Group letters into maximal powers, amalgamating greedily left to right.
Expression to_expression(const Word& w);
Word expression_to_word(const Expression& x);

/// Shuffle/amalgamate to a fixed point; the result admits no further
/// amalgamation after any shuffle.
Expression reduce_expression(const RaagPresentation& p, Expression x);

/// True iff some syllable of the reduced expression with the given
/// generator can be shuffled to the front.
bool ends_in(const RaagPresentation& p, const Expression& x, int gen);

/// Exhaustive x^2 y^2 = z^2 search over delta-reduced words of length <= max_len,
/// each solution verified pairwise commuting. Triples are deduplicated by
/// normal form.
struct SquareTriple {
    Word x, y, z;
    bool xy_commute = false, xz_commute = false, yz_commute = false;
    bool all_commute() const { return xy_commute && xz_commute && yz_commute; }
};
std::vector<SquareTriple> search_square_relation(const RaagPresentation& p, int max_len,
                                                 long budget = 10'000'000);

}  // namespace cubist

#endif
