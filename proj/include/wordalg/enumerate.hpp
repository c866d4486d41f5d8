#pragma once

#include "wordalg/words.hpp"

#include <future>
#include <optional>
#include <thread>
#include <vector>

namespace wordalg {

/// All words over the alphabet with min_len <= length <= max_len, in
/// canonical (graded lexicographic) order.
std::vector<Word> all_words(const std::vector<Letter>& alphabet, std::size_t min_len,
                            std::size_t max_len);

/// All strict phrases (no empty words) with 1 <= total letters <= max_letters.
/// The empty phrase is not included.
std::vector<Phrase> all_strict_phrases(const std::vector<Letter>& alphabet,
                                       std::size_t max_letters);

/// All phrases with total letters <= max_letters and word count between 1 and
/// max_words; words may be empty. The empty phrase is not included.
std::vector<Phrase> all_phrases(const std::vector<Letter>& alphabet, std::size_t max_letters,
                                std::size_t max_words);

/// Scans samples in chunks across threads and returns the failure with the
/// smallest index, so the merged report is deterministic regardless of the
/// thread schedule. `check` must be pure; it returns an empty optional on pass.
template <typename Failure, typename Check>
std::optional<Failure> first_failure(std::size_t count, Check&& check) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || count < 64) {
        for (std::size_t k = 0; k < count; ++k)
            if (auto f = check(k)) return f;
        return std::nullopt;
    }
    std::size_t chunks = std::min<std::size_t>(hw * 2, count);
    std::size_t per = (count + chunks - 1) / chunks;
    std::vector<std::future<std::optional<std::pair<std::size_t, Failure>>>> futs;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t lo = c * per, hi = std::min(count, lo + per);
        if (lo >= hi) break;
        futs.push_back(std::async(
            std::launch::async,
            [lo, hi, &check]() -> std::optional<std::pair<std::size_t, Failure>> {
                for (std::size_t k = lo; k < hi; ++k)
                    if (auto f = check(k)) return std::make_pair(k, std::move(*f));
                return std::nullopt;
            }));
    }
    std::optional<std::pair<std::size_t, Failure>> best;
    for (auto& fu : futs) {
        auto r = fu.get();
        if (r && (!best || r->first < best->first)) best = std::move(r);
    }
    if (best) return std::move(best->second);
    return std::nullopt;
}

}  // namespace wordalg
