#pragma once

#include "wordalg/module.hpp"
#include "wordalg/words.hpp"

#include <string>

namespace wordalg {

/// Parse failure with the byte offset of the offending position.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

// Text syntax. A word is a juxtaposition of single-character letters, or a
// comma-separated list of multi-character tokens; "~" is the empty word.
// A phrase is "(w1|w2|...|wk)"; "1" is the empty phrase; a bare word means
// the one-word phrase.

std::string render(const Word& w);
std::string render(const Phrase& p);

template <typename L, typename R>
std::string render(const Tensor2<L, R>& t) {
    return render(t.first) + " ⊗ " + render(t.second);
}

template <typename A, typename B, typename C>
std::string render(const Tensor3<A, B, C>& t) {
    return render(std::get<0>(t)) + " ⊗ " + render(std::get<1>(t)) + " ⊗ " +
           render(std::get<2>(t));
}

/// Deterministic rendering in canonical term order, e.g. "A ⊗ BA - 2 · B ⊗ AA".
template <typename B>
std::string render(const ModuleElement<B>& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : e.terms()) {
        if (first) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        std::string mag = c.magnitude_str();
        if (mag != "1") out += mag + " · ";
        out += render(b);
        first = false;
    }
    return out;
}

Word parse_word(const std::string& text);
Phrase parse_phrase(const std::string& text);

/// Comma-separated letters, e.g. "A,B" or "foo,bar"; or juxtaposed
/// single characters when no comma is present ("ABC").
std::vector<Letter> parse_alphabet(const std::string& text);

}  // namespace wordalg
