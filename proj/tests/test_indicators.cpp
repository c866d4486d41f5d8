#include "wordalg/indicators.hpp"

#include "wordalg/axioms.hpp"
#include "wordalg/enumerate.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace wordalg;
using namespace tu;

namespace {
const std::vector<Letter> AB{Letter("A"), Letter("B")};
const std::vector<Letter> ABC{Letter("A"), Letter("B"), Letter("C")};
const StableSet kAll = StableSet::all_nonempty();

ModuleElement<Word> one_word(const std::string& s) { return words({{1, s.c_str()}}); }
}  // namespace

TEST_CASE("star products evaluated pointwise") {
    auto da = WordIndicator::delta(W("A"));
    auto db = WordIndicator::delta(W("B"));
    CHECK(cut_star(da, db, kAll, W("AB")) == Z(1));
    CHECK(cut_star(da, db, kAll, W("BA")) == Z(1));  // the cut (2,3) contributes
    CHECK(cut_star(da, da, kAll, W("AB")) == Z(0));
    CHECK(cut_star(da, da, kAll, W("A")) == Z(0));
    CHECK_THROWS_AS(cut_star(da, db, kAll, Word()), std::invalid_argument);

    Pairing d = Pairing::delta(AB);
    CHECK(inscription_star(da, db, d, Word()) == Z(0));
    // w = AABA, pair (1,4)=(A,A): gap AB, rest ~; pair (2,3)? (A,B) weight 0 ...
    CHECK(inscription_star(WordIndicator::delta(W("AB")), WordIndicator::delta(Word()), d,
                           W("AABA")) == Z(1));
}

TEST_CASE("brackets are antisymmetric and satisfy Jacobi") {
    std::mt19937_64 rng(7777);
    auto f = WordIndicator::table(random_word_table(rng, AB, 3, 6, 3));
    auto g = WordIndicator::table(random_word_table(rng, AB, 3, 6, 3));
    auto h = WordIndicator::table(random_word_table(rng, AB, 3, 6, 3));
    Pairing mu = random_pairing(rng, AB, 2);

    for (const Word& w : all_words(AB, 1, 6)) {
        CHECK(cut_bracket(f, f, kAll, w) == Z(0));
        Coefficient jac = cut_bracket(f, cut_bracket(g, h, kAll), kAll, w) +
                          cut_bracket(g, cut_bracket(h, f, kAll), kAll, w) +
                          cut_bracket(h, cut_bracket(f, g, kAll), kAll, w);
        CHECK(jac == Z(0));
    }
    for (const Word& w : all_words(AB, 0, 6)) {
        CHECK(inscription_bracket(g, g, mu, w) == Z(0));
        Coefficient jac = inscription_bracket(f, inscription_bracket(g, h, mu), mu, w) +
                          inscription_bracket(g, inscription_bracket(h, f, mu), mu, w) +
                          inscription_bracket(h, inscription_bracket(f, g, mu), mu, w);
        CHECK(jac == Z(0));
    }
}

TEST_CASE("star products respect the length filtration") {
    // f vanishing below length 2 and g below length 3:
    // cut star vanishes below 5, inscription star below 7
    auto f = WordIndicator::table(words({{1, "AB"}, {2, "BA"}}));
    auto g = WordIndicator::table(words({{1, "AAB"}, {-1, "BBB"}}));
    Pairing d = Pairing::delta(AB);
    for (const Word& w : all_words(AB, 1, 4))
        CHECK(cut_star(f, g, kAll, w) == Z(0));
    for (const Word& w : all_words(AB, 0, 6))
        CHECK(inscription_star(f, g, d, w) == Z(0));
}

TEST_CASE("cut action on words") {
    auto da = WordIndicator::delta(W("A"));
    CHECK(cut_action(da, one_word("AB"), kAll) == words({{-1, "B"}}));
    CHECK(cut_action(da, one_word("A"), kAll).is_zero());
    CHECK_THROWS_AS(cut_action(da, one_word("~"), kAll), std::invalid_argument);

    // indicators vanishing on the member set act by zero
    auto dn = StableSet::letter_count_divisible(Letter("A"), 2);
    auto annihilating = WordIndicator("ann", [&dn](const Word& w) {
        return dn.contains(w) ? Z(0) : Z(7);
    });
    for (const Word& w : all_words(AB, 1, 5))
        CHECK(cut_action(annihilating, ModuleElement<Word>::basis(w), dn).is_zero());
}

TEST_CASE("inscription action reproduces the printed values") {
    Pairing d = Pairing::delta(ABC);
    auto w = one_word("ABACBA");
    CHECK(inscription_action(letter_count_indicator(Letter("A")), w, d) ==
          words({{-1, "~"}, {-1, "AA"}}));
    CHECK(inscription_action(letter_count_indicator(Letter("B")), w, d) ==
          words({{-1, "CBA"}, {-1, "AB"}, {-2, "~"}}));
    CHECK(inscription_action(letter_count_indicator(Letter("C")), w, d) ==
          words({{-1, "AB"}, {-1, "~"}, {-1, "AA"}}));
    CHECK(inscription_action(length_indicator(), w, d) ==
          words({{-1, "CBA"}, {-2, "AB"}, {-4, "~"}, {-2, "AA"}}));

    // the action drops length by at least two
    for (const Word& v : all_words(AB, 0, 6))
        for (const auto& [t, c] :
             inscription_action(length_indicator(), ModuleElement<Word>::basis(v), d).terms())
            CHECK(t.length() + 2 <= v.length());
}

TEST_CASE("both actions satisfy the Lie-action law") {
    std::mt19937_64 rng(404);
    auto f = WordIndicator::table(random_word_table(rng, AB, 3, 5, 3));
    auto g = WordIndicator::table(random_word_table(rng, AB, 3, 5, 3));
    Pairing mu = random_pairing(rng, AB, 2);

    // right actions: vf = -fv
    auto rL = [&](const WordIndicator& h, const ModuleElement<Word>& v) {
        return -cut_action(h, v, kAll);
    };
    auto rM = [&](const WordIndicator& h, const ModuleElement<Word>& v) {
        return -inscription_action(h, v, mu);
    };
    for (const Word& w : all_words(AB, 1, 6)) {
        auto v = ModuleElement<Word>::basis(w);
        CHECK(rL(g, rL(f, v)) - rL(f, rL(g, v)) == rL(cut_bracket(f, g, kAll), v));
        CHECK(rM(g, rM(f, v)) - rM(f, rM(g, v)) == rM(inscription_bracket(f, g, mu), v));
    }
}

TEST_CASE("exponential of the action") {
    Ring q = Ring::rationals();
    auto da = WordIndicator::delta(W("A"), q);
    auto v = ModuleElement<Word>::basis(W("AB"), Coefficient::one(q));
    ModuleElement<Word> expect = v;
    expect.add_term(W("B"), -Coefficient::one(q));
    CHECK(exp_cut_action(da, v, kAll) == expect);

    // exp(0) = id
    auto zero = WordIndicator::zero(q);
    CHECK(exp_cut_action(zero, v, kAll) == v);

    // exp(f) then exp(-f) = id
    std::mt19937_64 rng(31);
    auto f = WordIndicator::table(random_word_table(rng, AB, 3, 5, 2, q), q);
    for (const Word& w : all_words(AB, 1, 5)) {
        auto x = ModuleElement<Word>::basis(w, Coefficient::one(q));
        CHECK(exp_cut_action(-f, exp_cut_action(f, x, kAll), kAll) == x);
    }

    CHECK_THROWS_AS(exp_cut_action(WordIndicator::delta(W("A")), one_word("AB"), kAll),
                    ring_error);
}

TEST_CASE("insertion product") {
    CHECK(insertion_product(W("A"), W("B"), kAll) == words({{1, "AB"}, {1, "BA"}}));
    CHECK(insertion_product(W("A"), W("A"), kAll) == words({{2, "AA"}}));
    auto dn = StableSet::letter_count_divisible(Letter("A"), 2);
    CHECK(insertion_product(W("A"), W("B"), dn).is_zero());
    CHECK_THROWS_AS(insertion_product(Word(), W("B"), kAll), std::invalid_argument);

    // matches the dual route through delta indicators: <v, d_w * d_x>
    for (const Word& w : all_words(AB, 1, 2))
        for (const Word& x : all_words(AB, 1, 2)) {
            auto prod = insertion_product(w, x, kAll);
            for (const Word& v : all_words(AB, 1, 4))
                CHECK(prod.coeff(v) == cut_star(WordIndicator::delta(w),
                                                WordIndicator::delta(x), kAll, v));
        }
}

TEST_CASE("insertion product satisfies the pre-Lie law") {
    for (const Word& a : all_words(AB, 1, 2))
        for (const Word& b : all_words(AB, 1, 2))
            for (const Word& c : all_words(AB, 1, 2)) {
                auto ea = ModuleElement<Word>::basis(a);
                auto eb = ModuleElement<Word>::basis(b);
                auto ec = ModuleElement<Word>::basis(c);
                auto lhs = insertion_product(ea, insertion_product(eb, ec, kAll), kAll) -
                           insertion_product(insertion_product(ea, eb, kAll), ec, kAll);
                auto rhs = insertion_product(eb, insertion_product(ea, ec, kAll), kAll) -
                           insertion_product(insertion_product(eb, ea, kAll), ec, kAll);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("interleaving") {
    CHECK(interleave(P("A"), W("BC"), kAll) == words({{1, "ABC"}, {1, "BAC"}, {1, "BCA"}}));
    CHECK(interleave(Phrase(), W("AB"), kAll) == one_word("AB"));
    CHECK(interleave(P("(A|B)"), Word(), kAll).is_zero());
    CHECK(interleave(Phrase(), Word(), kAll).is_zero());
    // one-word phrase against the empty word: no membership test
    auto dn = StableSet::letter_count_divisible(Letter("A"), 2);
    CHECK(interleave(P("A"), Word(), dn) == one_word("A"));
    CHECK(interleave(P("A"), W("B"), dn).is_zero());
}

TEST_CASE("dual cut product") {
    CHECK(dual_cut_product(Phrase(), P("(A|B)"), kAll) == phrases({{1, "(A|B)"}}));
    CHECK(dual_cut_product(P("(A|B)"), Phrase(), kAll) == phrases({{1, "(A|B)"}}));
    CHECK(dual_cut_product(P("A"), P("B"), kAll) ==
          phrases({{1, "(AB)"}, {1, "(BA)"}, {1, "(A|B)"}, {1, "(B|A)"}}));
}

TEST_CASE("dual cut product is dual to the cut coproduct") {
    for (const StableSet& set : {kAll, StableSet::letter_count_divisible(Letter("A"), 2)}) {
        auto delta = [&set](const Phrase& r) {
            return cut_coproduct(ModuleElement<Phrase>::basis(r), set);
        };
        auto prod = [&set](const Phrase& p, const Phrase& q) {
            return dual_cut_product(p, q, set);
        };
        std::vector<Phrase> rs = all_strict_phrases(AB, 4);
        rs.push_back(Phrase());
        std::vector<Phrase> ps = all_strict_phrases(AB, 2);
        ps.push_back(Phrase());
        auto report = check_duality(delta, prod, rs, ps, "r <= 4 letters, p,q <= 2");
        CHECK_MESSAGE(report.pass, report.counterexample);
    }
}

TEST_CASE("deconcatenation") {
    CHECK(deconcatenate(Phrase()) == pp({{1, "1", "1"}}));
    CHECK(deconcatenate(P("(A|B)")) ==
          pp({{1, "1", "(A|B)"}, {1, "(A)", "(B)"}, {1, "(A|B)", "1"}}));
    CHECK(deconcatenate(P("A")) == pp({{1, "1", "(A)"}, {1, "(A)", "1"}}));
}

TEST_CASE("dual inscription product") {
    Pairing dA = Pairing::delta({Letter("A")});
    CHECK(dual_inscription_product(Phrase(), P("(A|B)"), Pairing::delta(AB)) ==
          phrases({{1, "(A|B)"}}));
    CHECK(dual_inscription_product(P("(A|B)"), Phrase(), Pairing::delta(AB)) ==
          phrases({{1, "(A|B)"}}));
    // (~) o (~) over {A}: two slot orders give (~|~); wrapping ~ in A..A gives AA
    CHECK(dual_inscription_product(P("(~)"), P("(~)"), dA) ==
          phrases({{2, "(~|~)"}, {1, "AA"}}));
}

TEST_CASE("dual inscription product is dual to the inscription coproduct") {
    Pairing d = Pairing::delta(AB);
    auto delta = [&d](const Phrase& r) {
        return inscription_coproduct(ModuleElement<Phrase>::basis(r), d);
    };
    auto prod = [&d](const Phrase& p, const Phrase& q) {
        return dual_inscription_product(p, q, d);
    };
    std::vector<Phrase> rs = all_phrases(AB, 4, 2);
    rs.push_back(Phrase());
    std::vector<Phrase> ps = all_phrases(AB, 2, 2);
    ps.push_back(Phrase());
    auto report = check_duality(delta, prod, rs, ps, "r <= 4 letters, p,q <= 2");
    CHECK_MESSAGE(report.pass, report.counterexample);
}

TEST_CASE("phrase indicator convolution distinguishes word orders") {
    auto len = word_count_indicator();
    auto fb = phrase_letter_count_indicator(Letter("B"));
    CHECK(cut_convolution(len, fb, kAll, P("ABC")) == Z(4));
    CHECK(cut_convolution(len, fb, kAll, P("ACB")) == Z(3));
}

TEST_CASE("deconcatenation is dual to the phrase product") {
    // <deconcat(r), p x q> = [r == pq]
    for (const Phrase& p : all_strict_phrases(AB, 2))
        for (const Phrase& q : all_strict_phrases(AB, 2)) {
            Phrase r = concat(p, q);
            CHECK(deconcatenate(r).coeff({p, q}) == Z(1));
        }
}
