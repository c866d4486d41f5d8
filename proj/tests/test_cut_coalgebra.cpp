#include "wordalg/cut_coalgebra.hpp"

#include "wordalg/axioms.hpp"
#include "wordalg/enumerate.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace wordalg;
using namespace tu;

namespace {
const std::vector<Letter> AB{Letter("A"), Letter("B")};
const StableSet kAll = StableSet::all_nonempty();

ModuleElement<Word> one_word(const std::string& s) { return words({{1, s.c_str()}}); }

// Independent oracle for the subword comultiplication with S = all: peel the
// first letter; a subset either keeps it on the selected side or on the rest.
ModuleElement<Tensor2<Word, Word>> shuffle_oracle(const Word& w) {
    if (w.empty()) return ww({{1, "~", "~"}});
    Word head = factor(w, 1, 2);
    auto tail = shuffle_oracle(factor(w, 2, w.length() + 1));
    ModuleElement<Tensor2<Word, Word>> out;
    for (const auto& [t, c] : tail.terms()) {
        out.add_term({concat(head, t.first), t.second}, c);
        out.add_term({t.first, concat(head, t.second)}, c);
    }
    return out;
}
}  // namespace

TEST_CASE("simple cuts") {
    auto sc = simple_cuts(W("AB"), kAll);
    REQUIRE(sc.size() == 2);
    CHECK(sc[0] == SimpleCut{1, 2});
    CHECK(sc[1] == SimpleCut{2, 3});
    CHECK(simple_cuts(W("A"), kAll).empty());
    CHECK(simple_cuts(W("AA"), StableSet::letter_count_divisible(Letter("A"), 2)).empty());
    CHECK_THROWS_AS(simple_cuts(Word(), kAll), std::invalid_argument);
}

TEST_CASE("simple-cut coproduct reproduces the printed values") {
    CHECK(simple_cut_coproduct(one_word("ABA"), kAll) ==
          ww({{1, "A", "BA"}, {1, "B", "AA"}, {1, "A", "AB"}, {1, "AB", "A"}, {1, "BA", "A"}}));
    CHECK(simple_cut_coproduct(one_word("A"), kAll).is_zero());
    CHECK(simple_cut_coproduct(one_word("AB"), kAll) == ww({{1, "A", "B"}, {1, "B", "A"}}));
    CHECK_THROWS_AS(simple_cut_coproduct(words({{1, "~"}}), kAll), std::invalid_argument);
}

TEST_CASE("one-letter closed form for the simple-cut coproduct") {
    // sum over k >= 1, kN < m of (m+1-kN) A^kN (x) A^(m-kN)
    for (std::uint64_t n : {1, 2, 3}) {
        StableSet dn = StableSet::letter_count_divisible(Letter("A"), n);
        for (std::size_t m = 1; m <= 9; ++m) {
            std::string am(m, 'A');
            ModuleElement<Tensor2<Word, Word>> expect;
            for (std::size_t k = 1; k * n < m; ++k) {
                expect.add_term({W(std::string(k * n, 'A')), W(std::string(m - k * n, 'A'))},
                                Z(static_cast<long long>(m + 1 - k * n)));
            }
            CHECK(simple_cut_coproduct(one_word(am), dn) == expect);
        }
    }
}

TEST_CASE("cut enumeration") {
    auto cs = cuts(W("AB"), kAll);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].empty());
    CHECK(cs[1].bounds == std::vector<std::size_t>{1, 2});
    CHECK(cs[2].bounds == std::vector<std::size_t>{2, 3});

    auto c3 = cuts(W("ABC"), kAll);
    CHECK(c3.size() == 7);  // empty, five simple, and (1,2,3,4)
    CHECK(c3.back().bounds == std::vector<std::size_t>{1, 2, 3, 4});

    auto c1 = cuts(W("A"), kAll);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].empty());

    std::string big(15, 'A');
    CHECK_THROWS_AS(cuts(W(big), kAll), cap_exceeded);
    CHECK(cuts(W(big), kAll, 20).size() > 0);
}

TEST_CASE("cut coproduct reproduces the printed expansions") {
    CHECK(cut_coproduct(phrases({{1, "AB"}}), kAll) ==
          pp({{1, "(AB)", "1"}, {1, "1", "(AB)"}, {1, "(A)", "(B)"}, {1, "(B)", "(A)"}}));

    CHECK(cut_coproduct(phrases({{1, "ABC"}}), kAll) ==
          pp({{1, "(ABC)", "1"},
              {1, "1", "(ABC)"},
              {1, "(A)", "(BC)"},
              {1, "(B)", "(AC)"},
              {1, "(C)", "(AB)"},
              {1, "(AB)", "(C)"},
              {1, "(BC)", "(A)"},
              {1, "(A|C)", "(B)"}}));

    CHECK(cut_coproduct(phrases({{1, "(AB|C)"}}), kAll) ==
          pp({{1, "(AB|C)", "1"},
              {1, "(C)", "(AB)"},
              {1, "(A|C)", "(B)"},
              {1, "(B|C)", "(A)"},
              {1, "(AB)", "(C)"},
              {1, "1", "(AB|C)"},
              {1, "(A)", "(B|C)"},
              {1, "(B)", "(A|C)"}}));

    CHECK(cut_coproduct(phrases({{1, "1"}}), kAll) == pp({{1, "1", "1"}}));
    CHECK_THROWS_AS(cut_coproduct(phrases({{1, "(~|A)"}}), kAll), std::invalid_argument);
}

TEST_CASE("cut coaction") {
    CHECK(cut_coaction(W("A"), kAll) == pw({{1, "1", "A"}}));
    CHECK(cut_coaction(W("AB"), kAll) ==
          pw({{1, "1", "AB"}, {1, "(A)", "B"}, {1, "(B)", "A"}}));
    CHECK(cut_coaction(W("AA"), StableSet::letter_count_divisible(Letter("A"), 2)) ==
          pw({{1, "1", "AA"}}));
    CHECK_THROWS_AS(cut_coaction(Word(), kAll), std::invalid_argument);
}

TEST_CASE("counit picks the empty-phrase coefficient") {
    CHECK(counit(phrases({{1, "1"}})) == Z(1));
    CHECK(counit(phrases({{1, "(AB|C)"}})) == Z(0));
    CHECK(counit(phrases({{3, "1"}, {2, "(A)"}})) == Z(3));
}

TEST_CASE("antipode on small inputs") {
    CHECK(cut_antipode(phrases({{1, "A"}}), kAll) == phrases({{-1, "A"}}));
    CHECK(cut_antipode(phrases({{1, "AB"}}), kAll) ==
          phrases({{-1, "(AB)"}, {1, "(A|B)"}, {1, "(B|A)"}}));
    CHECK(cut_antipode(phrases({{1, "(A|B)"}}), kAll) == phrases({{1, "(B|A)"}}));
    CHECK(cut_antipode(phrases({{1, "1"}}), kAll) == phrases({{1, "1"}}));
    CHECK_THROWS_AS(cut_antipode(phrases({{1, "(~)"}}), kAll), std::invalid_argument);
}

TEST_CASE("antipode satisfies both convolution identities on small phrases") {
    for (const StableSet& set : {kAll, StableSet::letter_count_divisible(Letter("A"), 2)}) {
        auto delta = [&set](const Phrase& p) {
            return cut_coproduct(ModuleElement<Phrase>::basis(p), set);
        };
        auto anti = [&set](const Phrase& p) {
            return cut_antipode(ModuleElement<Phrase>::basis(p), set);
        };
        auto samples = all_strict_phrases(AB, 4);
        samples.push_back(Phrase());
        auto report = check_antipode<Phrase>(
            delta, anti, [](const Phrase& p) { return p.empty() ? Z(1) : Z(0); }, Phrase(),
            [](const Phrase& a, const Phrase& b) { return concat(a, b); }, samples,
            "strict phrases <= 4 letters");
        CHECK_MESSAGE(report.pass, report.counterexample);
    }
}

TEST_CASE("subword comultiplication") {
    auto s_all = StronglyStableSet::all_words();
    CHECK(subword_coproduct(one_word("AB"), s_all) ==
          ww({{1, "~", "AB"}, {1, "A", "B"}, {1, "B", "A"}, {1, "AB", "~"}}));
    CHECK(subword_coproduct(one_word("~"), s_all) == ww({{1, "~", "~"}}));
    CHECK(subword_coproduct(one_word("AA"), s_all) ==
          ww({{1, "~", "AA"}, {2, "A", "A"}, {1, "AA", "~"}}));

    // against the independent peel-first-letter oracle
    for (const Word& w : all_words(AB, 0, 6))
        CHECK(subword_coproduct(ModuleElement<Word>::basis(w), s_all) == shuffle_oracle(w));
}

TEST_CASE("subword comultiplication respects the membership filter") {
    auto even_a =
        StronglyStableSet::from_stable(StableSet::letter_count_divisible(Letter("A"), 2));
    // subwords of AAB with an even number of A letters
    CHECK(subword_coproduct(one_word("AAB"), even_a) ==
          ww({{1, "~", "AAB"}, {1, "B", "AA"}, {1, "AA", "B"}, {1, "AAB", "~"}}));
}

TEST_CASE("quick law spot checks at small bounds") {
    auto dn = StableSet::letter_count_divisible(Letter("A"), 2);
    for (const StableSet& set : {kAll, dn}) {
        auto rho = [&set](const Word& w) {
            return simple_cut_coproduct(ModuleElement<Word>::basis(w), set);
        };
        auto delta = [&set](const Phrase& p) {
            return cut_coproduct(ModuleElement<Phrase>::basis(p), set);
        };
        auto words5 = all_words(AB, 1, 5);
        CHECK(check_pre_lie<Word>(rho, words5, "").pass);
        CHECK(check_cojacobi<Word>(rho, words5, "").pass);
        CHECK(check_leading_term(delta, rho, words5, "").pass);
        CHECK(check_left_handed(delta, words5, "").pass);

        auto phrases4 = all_strict_phrases(AB, 4);
        phrases4.push_back(Phrase());
        CHECK(check_coassoc<Phrase>(delta, phrases4, "").pass);
        CHECK(check_counit<Phrase>(
                  delta, [](const Phrase& p) { return p.empty() ? Z(1) : Z(0); }, phrases4, "")
                  .pass);

        auto theta = [&set](const Word& w) { return cut_coaction(w, set); };
        CHECK(check_comodule<Phrase, Word>(theta, delta, Phrase(), words5, "").pass);
    }
}

TEST_CASE("coproducts restrict to member-only phrases") {
    auto dn = StableSet::letter_count_divisible(Letter("A"), 2);
    auto in_set = [&dn](const Phrase& p) {
        for (const Word& w : p.words())
            if (!dn.contains(w)) return false;
        return true;
    };
    for (const Phrase& p : all_strict_phrases(AB, 5)) {
        if (!in_set(p)) continue;
        for (const auto& [t, c] : cut_coproduct(ModuleElement<Phrase>::basis(p), dn).terms()) {
            CHECK(in_set(t.first));
            CHECK(in_set(t.second));
        }
    }
}

TEST_CASE("letter maps intertwine the coproducts") {
    // alpha: A,B,C -> X,Y with A,C -> X, B -> Y; L = preimage of even X count
    LetterMap alpha{{Letter("A"), Letter("X")}, {Letter("B"), Letter("Y")},
                    {Letter("C"), Letter("X")}};
    StableSet lp = StableSet::letter_count_divisible(Letter("X"), 2);
    StableSet l = StableSet::custom("preimage", [alpha, lp](const Word& w) {
        return lp.contains(map_letters(alpha, w));
    });
    const std::vector<Letter> abc{Letter("A"), Letter("B"), Letter("C")};
    for (const Word& w : all_words(abc, 1, 5)) {
        auto lhs = simple_cut_coproduct(ModuleElement<Word>::basis(map_letters(alpha, w)), lp);
        ModuleElement<Tensor2<Word, Word>> rhs;
        for (const auto& [t, c] : simple_cut_coproduct(ModuleElement<Word>::basis(w), l).terms())
            rhs.add_term({map_letters(alpha, t.first), map_letters(alpha, t.second)}, c);
        CHECK(lhs == rhs);
    }
    for (const Phrase& p : all_strict_phrases(abc, 4)) {
        auto lhs = cut_coproduct(ModuleElement<Phrase>::basis(map_letters(alpha, p)), lp);
        ModuleElement<Tensor2<Phrase, Phrase>> rhs;
        for (const auto& [t, c] : cut_coproduct(ModuleElement<Phrase>::basis(p), l).terms())
            rhs.add_term({map_letters(alpha, t.first), map_letters(alpha, t.second)}, c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mod-N cross-check of the cut coproduct") {
    Ring m7 = Ring::mod(7);
    for (const Word& w : all_words(AB, 1, 5)) {
        auto zint = cut_coproduct(ModuleElement<Phrase>::basis(Phrase::single(w)), kAll);
        auto zmod = cut_coproduct(
            ModuleElement<Phrase>::basis(Phrase::single(w), Coefficient::one(m7)), kAll);
        for (const auto& [t, c] : zint.terms())
            CHECK(zmod.coeff(t) == Coefficient(m7, c.numerator()));
    }
}
