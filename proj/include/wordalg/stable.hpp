#pragma once

#include "wordalg/words.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace wordalg {

/// A stable set of non-empty words: membership is closed under deleting a
/// member factor from a word and under inserting a member word into a word.
/// Built-ins satisfy that closure by construction; custom predicates are
/// accepted on a trust-but-verify basis (see verify_stability).
///
/// The empty word is never a member.
class StableSet {
public:
    using Predicate = std::function<bool(const Word&)>;

    static StableSet all_nonempty();
    static StableSet letter_count_zero(const Letter& a);
    /// Words whose count of `a` is divisible by n (n >= 1).
    static StableSet letter_count_divisible(const Letter& a, std::uint64_t n);
    /// Words whose weighted letter counts sum to zero in Z^d. Letters missing
    /// from the assignment have weight zero.
    static StableSet group_weight_zero(const std::map<Letter, std::vector<long long>>& weights);
    static StableSet intersection(std::vector<StableSet> members);
    static StableSet custom(std::string name, Predicate pred);

    bool contains(const Word& w) const { return !w.empty() && pred_(w); }

    /// Canonical descriptor, e.g. "all", "divisible:A:2",
    /// "intersect:divisible:A:2+divisible:B:3", "custom:<name>".
    const std::string& descriptor() const { return descriptor_; }

private:
    StableSet(std::string descriptor, Predicate pred)
        : descriptor_(std::move(descriptor)), pred_(std::move(pred)) {}

    std::string descriptor_;
    Predicate pred_;
};

/// A strongly stable set of words: contains the empty word, and membership is
/// closed under deleting a member subword (subsequence) in both directions.
class StronglyStableSet {
public:
    using Predicate = std::function<bool(const Word&)>;

    static StronglyStableSet all_words();
    /// Adjoins the empty word to a stable set. Sound for the built-in
    /// families (letter counts and group weights are additive on subwords).
    static StronglyStableSet from_stable(const StableSet& base);
    static StronglyStableSet custom(std::string name, Predicate pred);

    bool contains(const Word& w) const { return w.empty() || pred_(w); }

    const std::string& descriptor() const { return descriptor_; }

private:
    StronglyStableSet(std::string descriptor, Predicate pred)
        : descriptor_(std::move(descriptor)), pred_(std::move(pred)) {}

    std::string descriptor_;
    Predicate pred_;
};

struct StabilityCounterexample {
    Word w;
    std::size_t i = 0, j = 0;  // the offending factor w_{i,j}
};

struct StabilityReport {
    bool pass = true;
    std::optional<StabilityCounterexample> counterexample;
    std::uint64_t words_checked = 0;
};

/// Exhaustively checks the factor-closure condition over all words of length
/// 1..max_len: whenever w_{i,j} is a member with (i,j) != (1,m+1), membership
/// of w and of the word with that factor deleted must agree.
StabilityReport verify_stability(const StableSet& set, const std::vector<Letter>& alphabet,
                                 std::size_t max_len);

struct StrongStabilityCounterexample {
    Word w;
    std::vector<std::size_t> subword_positions;  // 1-based
};

struct StrongStabilityReport {
    bool pass = true;
    std::optional<StrongStabilityCounterexample> counterexample;
    std::uint64_t words_checked = 0;
};

/// Exhaustive subword analogue: for every word of length <= max_len and every
/// subword w' (index subset) with w' in S, membership of w and of w with the
/// subword deleted must agree.
StrongStabilityReport verify_strong_stability(const StronglyStableSet& set,
                                              const std::vector<Letter>& alphabet,
                                              std::size_t max_len);

/// Parses a stable-set descriptor (see StableSet::descriptor for the syntax).
StableSet parse_stable_descriptor(const std::string& text);
StronglyStableSet parse_strong_descriptor(const std::string& text);

}  // namespace wordalg
