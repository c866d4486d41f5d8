#include "wordalg/words.hpp"

#include <algorithm>
#include <cctype>

namespace wordalg {

namespace {

bool reserved_char(char c) {
    return c == '|' || c == '(' || c == ')' || c == '~' || c == ',' ||
           std::isspace(static_cast<unsigned char>(c));
}

}  // namespace

Letter::Letter(std::string symbol) : symbol_(std::move(symbol)) {
    if (symbol_.empty()) throw std::invalid_argument("letter symbol must be non-empty");
    for (char c : symbol_)
        if (reserved_char(c))
            throw std::invalid_argument("letter symbol '" + symbol_ +
                                        "' contains a reserved character");
}

Word Word::of(std::string_view single_char_letters) {
    std::vector<Letter> ls;
    ls.reserve(single_char_letters.size());
    for (char c : single_char_letters) ls.emplace_back(std::string(1, c));
    return Word(std::move(ls));
}

const Letter& Word::at(std::size_t pos) const {
    if (pos < 1 || pos > letters_.size()) throw std::out_of_range("letter index out of range");
    return letters_[pos - 1];
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    for (std::size_t k = 0; k < letters_.size(); ++k)
        if (auto c = letters_[k] <=> other.letters_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t Phrase::letter_count() const {
    std::size_t n = 0;
    for (const Word& w : words_) n += w.length();
    return n;
}

bool Phrase::is_strict() const {
    return std::none_of(words_.begin(), words_.end(), [](const Word& w) { return w.empty(); });
}

std::strong_ordering Phrase::operator<=>(const Phrase& other) const {
    if (auto c = letter_count() <=> other.letter_count(); c != 0) return c;
    if (auto c = words_.size() <=> other.words_.size(); c != 0) return c;
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (auto c = words_[k] <=> other.words_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

Word factor(const Word& w, std::size_t i, std::size_t j) {
    if (i < 1 || i > j || j > w.length() + 1)
        throw std::out_of_range("factor indices out of range");
    std::vector<Letter> ls(w.letters().begin() + (i - 1), w.letters().begin() + (j - 1));
    return Word(std::move(ls));
}

Word concat(const Word& a, const Word& b) {
    std::vector<Letter> ls = a.letters();
    ls.insert(ls.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(ls));
}

Phrase concat(const Phrase& a, const Phrase& b) {
    std::vector<Word> ws = a.words();
    ws.insert(ws.end(), b.words().begin(), b.words().end());
    return Phrase(std::move(ws));
}

Word select_positions(const Word& w, const std::vector<std::size_t>& positions) {
    std::vector<Letter> ls;
    ls.reserve(positions.size());
    for (std::size_t p : positions) ls.push_back(w.at(p));
    return Word(std::move(ls));
}

Word delete_positions(const Word& w, const std::vector<std::size_t>& positions) {
    std::vector<bool> drop(w.length() + 1, false);
    for (std::size_t p : positions) {
        if (p < 1 || p > w.length()) throw std::out_of_range("position out of range");
        drop[p] = true;
    }
    std::vector<Letter> ls;
    for (std::size_t p = 1; p <= w.length(); ++p)
        if (!drop[p]) ls.push_back(w.at(p));
    return Word(std::move(ls));
}

std::size_t letter_count(const Word& w, const Letter& a) {
    return static_cast<std::size_t>(std::count(w.letters().begin(), w.letters().end(), a));
}

Word map_letters(const LetterMap& m, const Word& w) {
    std::vector<Letter> ls;
    ls.reserve(w.length());
    for (const Letter& l : w.letters()) {
        auto it = m.find(l);
        if (it == m.end())
            throw std::invalid_argument("letter '" + l.symbol() + "' has no image");
        ls.push_back(it->second);
    }
    return Word(std::move(ls));
}

Phrase map_letters(const LetterMap& m, const Phrase& p) {
    std::vector<Word> ws;
    ws.reserve(p.word_count());
    for (const Word& w : p.words()) ws.push_back(map_letters(m, w));
    return Phrase(std::move(ws));
}

}  // namespace wordalg
