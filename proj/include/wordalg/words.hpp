#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordalg {

/// Thrown when a word exceeds the length cap of an enumeration-heavy
/// operation (cut or inscription expansion).
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A single alphabet symbol. Equality and order are by symbol text.
///
/// The characters '|', '(', ')', '~', ',' and whitespace are reserved by the
/// word/phrase syntax and are not allowed inside a symbol.
class Letter {
public:
    explicit Letter(std::string symbol);

    const std::string& symbol() const { return symbol_; }

    std::strong_ordering operator<=>(const Letter& other) const {
        return symbol_ <=> other.symbol_;
    }
    bool operator==(const Letter& other) const = default;

private:
    std::string symbol_;
};

/// Finite sequence of letters; the unique length-0 word is Word().
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Convenience builder from single-character symbols, e.g. Word::of("ABA").
    static Word of(std::string_view single_char_letters);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    /// 1-based letter access, matching the index conventions of factors.
    const Letter& at(std::size_t pos) const;

    /// Graded order: shorter words first, then letter-wise lexicographic.
    std::strong_ordering operator<=>(const Word& other) const;
    bool operator==(const Word& other) const { return letters_ == other.letters_; }

private:
    std::vector<Letter> letters_;
};

/// Finite sequence of words; the unique length-0 phrase is Phrase().
/// Constituent words may be empty ("non-strict" phrases).
class Phrase {
public:
    Phrase() = default;
    explicit Phrase(std::vector<Word> words) : words_(std::move(words)) {}
    static Phrase single(Word w) { return Phrase({std::move(w)}); }

    std::size_t word_count() const { return words_.size(); }
    std::size_t letter_count() const;
    bool empty() const { return words_.empty(); }
    bool is_strict() const;
    const std::vector<Word>& words() const { return words_; }

    /// Graded order: total letters, then word count, then word-wise.
    std::strong_ordering operator<=>(const Phrase& other) const;
    bool operator==(const Phrase& other) const { return words_ == other.words_; }

private:
    std::vector<Word> words_;
};

/// The factor w_{i,j} = w(i) w(i+1) ... w(j-1), with 1 <= i <= j <= len+1.
/// Empty iff i == j.
Word factor(const Word& w, std::size_t i, std::size_t j);

Word concat(const Word& a, const Word& b);

/// Concatenation of word sequences; unit is the empty phrase.
Phrase concat(const Phrase& a, const Phrase& b);

/// Word formed by the letters at the given 1-based positions (ascending).
Word select_positions(const Word& w, const std::vector<std::size_t>& positions);

/// Word obtained by deleting the letters at the given 1-based positions.
Word delete_positions(const Word& w, const std::vector<std::size_t>& positions);

std::size_t letter_count(const Word& w, const Letter& a);

using LetterMap = std::map<Letter, Letter>;

/// Letter-wise image; throws std::invalid_argument on an unmapped letter.
Word map_letters(const LetterMap& m, const Word& w);
Phrase map_letters(const LetterMap& m, const Phrase& p);

}  // namespace wordalg
