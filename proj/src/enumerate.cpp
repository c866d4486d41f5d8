#include "wordalg/enumerate.hpp"

namespace wordalg {

namespace {

void grow_words(const std::vector<Letter>& alphabet, std::vector<Letter>& cur,
                std::size_t target, std::vector<Word>& out) {
    if (cur.size() == target) {
        out.emplace_back(cur);
        return;
    }
    for (const Letter& l : alphabet) {
        cur.push_back(l);
        grow_words(alphabet, cur, target, out);
        cur.pop_back();
    }
}

void grow_phrases(const std::vector<Word>& pool_by_any, std::vector<Word>& cur,
                  std::size_t letters_left, std::size_t words_left, bool allow_empty_words,
                  std::vector<Phrase>& out) {
    if (!cur.empty()) out.emplace_back(cur);
    if (words_left == 0) return;
    for (const Word& w : pool_by_any) {
        if (w.empty() && !allow_empty_words) continue;
        if (w.length() > letters_left) break;  // pool is sorted by length
        cur.push_back(w);
        grow_phrases(pool_by_any, cur, letters_left - w.length(), words_left - 1,
                     allow_empty_words, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> all_words(const std::vector<Letter>& alphabet, std::size_t min_len,
                            std::size_t max_len) {
    std::vector<Word> out;
    std::vector<Letter> cur;
    for (std::size_t m = min_len; m <= max_len; ++m) grow_words(alphabet, cur, m, out);
    // graded order within each length needs sorted letters
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Phrase> all_strict_phrases(const std::vector<Letter>& alphabet,
                                       std::size_t max_letters) {
    std::vector<Word> pool = all_words(alphabet, 1, max_letters);
    std::vector<Phrase> out;
    std::vector<Word> cur;
    grow_phrases(pool, cur, max_letters, max_letters, false, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Phrase> all_phrases(const std::vector<Letter>& alphabet, std::size_t max_letters,
                                std::size_t max_words) {
    std::vector<Word> pool = all_words(alphabet, 0, max_letters);
    std::vector<Phrase> out;
    std::vector<Word> cur;
    grow_phrases(pool, cur, max_letters, max_words, true, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wordalg
