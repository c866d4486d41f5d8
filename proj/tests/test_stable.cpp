#include "wordalg/stable.hpp"

#include "wordalg/enumerate.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace wordalg;
using namespace tu;

namespace {
const std::vector<Letter> AB{Letter("A"), Letter("B")};
const std::vector<Letter> ABC{Letter("A"), Letter("B"), Letter("C")};

std::vector<StableSet> builtins() {
    return {
        StableSet::all_nonempty(),
        StableSet::letter_count_zero(Letter("A")),
        StableSet::letter_count_divisible(Letter("A"), 2),
        StableSet::letter_count_divisible(Letter("B"), 3),
        StableSet::group_weight_zero({{Letter("A"), {1, 0}},
                                      {Letter("B"), {0, 1}},
                                      {Letter("C"), {-1, -1}}}),
        StableSet::intersection({StableSet::letter_count_divisible(Letter("A"), 2),
                                 StableSet::letter_count_divisible(Letter("B"), 3)}),
    };
}
}  // namespace

TEST_CASE("membership basics") {
    StableSet all = StableSet::all_nonempty();
    CHECK(all.contains(W("AB")));
    CHECK(!all.contains(Word()));
    CHECK(StableSet::letter_count_divisible(Letter("A"), 2).contains(W("ABA")));
    CHECK(!StableSet::letter_count_divisible(Letter("A"), 2).contains(W("AB")));
    CHECK(StableSet::letter_count_zero(Letter("A")).contains(W("BB")));

    StronglyStableSet s = StronglyStableSet::all_words();
    CHECK(s.contains(Word()));
    StronglyStableSet adj = StronglyStableSet::from_stable(StableSet::letter_count_divisible(Letter("A"), 2));
    CHECK(adj.contains(Word()));
    CHECK(adj.contains(W("AA")));
    CHECK(!adj.contains(W("A")));
}

TEST_CASE("verify_stability passes the full set and intersections") {
    CHECK(verify_stability(StableSet::all_nonempty(), AB, 6).pass);
    auto inter = StableSet::intersection({StableSet::letter_count_divisible(Letter("A"), 2),
                                          StableSet::letter_count_divisible(Letter("B"), 3)});
    CHECK(verify_stability(inter, AB, 6).pass);
}

TEST_CASE("a union of stable sets can fail the closure condition") {
    auto da = StableSet::letter_count_divisible(Letter("A"), 2);
    auto db = StableSet::letter_count_divisible(Letter("B"), 2);
    auto uni = StableSet::custom("union", [da, db](const Word& w) {
        return da.contains(w) || db.contains(w);
    });
    auto report = verify_stability(uni, AB, 4);
    REQUIRE(!report.pass);
    REQUIRE(report.counterexample.has_value());
    // re-check the reported triple violates the condition
    const auto& ce = *report.counterexample;
    std::size_t m = ce.w.length();
    Word fac = factor(ce.w, ce.i, ce.j);
    Word rest = concat(factor(ce.w, 1, ce.i), factor(ce.w, ce.j, m + 1));
    CHECK(uni.contains(fac));
    CHECK(uni.contains(ce.w) != uni.contains(rest));
}

TEST_CASE("all built-ins satisfy the closure condition to length 8 over 3 letters") {
    for (const StableSet& s : builtins()) {
        auto report = verify_stability(s, ABC, 8);
        CHECK_MESSAGE(report.pass, s.descriptor());
    }
}

TEST_CASE("members are closed under concatenation") {
    auto ws = all_words(ABC, 1, 7);
    for (const StableSet& s : builtins()) {
        for (const Word& u : ws) {
            if (!s.contains(u)) continue;
            for (const Word& v : ws) {
                if (u.length() + v.length() > 8) continue;
                if (s.contains(v)) CHECK(s.contains(concat(u, v)));
            }
        }
    }
}

TEST_CASE("strong stability checks") {
    CHECK(verify_strong_stability(StronglyStableSet::all_words(), AB, 5).pass);
    CHECK(verify_strong_stability(
              StronglyStableSet::from_stable(StableSet::letter_count_divisible(Letter("A"), 2)),
              AB, 5)
              .pass);

    // S = {empty word, A} over {A} is not strongly stable: w = AA, w' = A
    auto s = StronglyStableSet::custom("just-A", [](const Word& w) { return w == W("A"); });
    auto report = verify_strong_stability(s, {Letter("A")}, 3);
    REQUIRE(!report.pass);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->w == W("AA"));
    Word sub = select_positions(report.counterexample->w, report.counterexample->subword_positions);
    Word rest = delete_positions(report.counterexample->w, report.counterexample->subword_positions);
    CHECK(s.contains(sub));
    CHECK(s.contains(report.counterexample->w) != s.contains(rest));
}

TEST_CASE("descriptor parsing round trips") {
    for (const char* d : {"all", "zero:A", "divisible:A:2", "weight:A=1,0;B=-1,1",
                          "intersect:divisible:A:2+divisible:B:3"}) {
        StableSet s = parse_stable_descriptor(d);
        CHECK(s.descriptor() == d);
    }
    CHECK_THROWS_AS(parse_stable_descriptor("nope"), parse_error);
    CHECK(parse_strong_descriptor("all").contains(Word()));
    CHECK(parse_strong_descriptor("divisible:A:2").contains(Word()));
}
