#pragma once

#include "wordalg/cut_coalgebra.hpp"
#include "wordalg/inscription_coalgebra.hpp"
#include "wordalg/module.hpp"
#include "wordalg/stable.hpp"

#include <functional>
#include <string>

namespace wordalg {

/// Evaluation functional on a basis (words or phrases). Always evaluated
/// pointwise; no completed sums are ever materialized.
template <typename B>
class Indicator {
public:
    using Eval = std::function<Coefficient(const B&)>;

    Indicator(std::string name, Eval eval) : name_(std::move(name)), eval_(std::move(eval)) {}

    static Indicator zero(Ring ring = Ring::integers()) {
        return Indicator("0", [ring](const B&) { return Coefficient::zero(ring); });
    }

    /// Characteristic functional of one basis element.
    static Indicator delta(const B& b, Ring ring = Ring::integers()) {
        return Indicator("delta", [b, ring](const B& x) {
            return x == b ? Coefficient::one(ring) : Coefficient::zero(ring);
        });
    }

    /// Finite-support table; zero outside the support.
    static Indicator table(ModuleElement<B> support, Ring ring = Ring::integers()) {
        Ring r = support.is_zero() ? ring : support.ring();
        return Indicator("table",
                         [s = std::move(support), r](const B& x) {
                             auto it = s.terms().find(x);
                             return it == s.terms().end() ? Coefficient::zero(r) : it->second;
                         });
    }

    Coefficient operator()(const B& b) const { return eval_(b); }
    const std::string& name() const { return name_; }

    Indicator operator+(const Indicator& other) const {
        return Indicator(name_ + "+" + other.name_,
                         [f = eval_, g = other.eval_](const B& b) { return f(b) + g(b); });
    }

    Indicator operator-() const {
        return Indicator("-" + name_, [f = eval_](const B& b) { return -f(b); });
    }

private:
    std::string name_;
    Eval eval_;
};

using WordIndicator = Indicator<Word>;
using PhraseIndicator = Indicator<Phrase>;

/// Number of appearances of a letter in a word.
WordIndicator letter_count_indicator(const Letter& a, Ring ring = Ring::integers());
/// Word length.
WordIndicator length_indicator(Ring ring = Ring::integers());
/// Number of words in a phrase.
PhraseIndicator word_count_indicator(Ring ring = Ring::integers());
/// Total appearances of a letter across the words of a phrase.
PhraseIndicator phrase_letter_count_indicator(const Letter& a, Ring ring = Ring::integers());

// Pre-Lie products and brackets induced on indicators by the two pre-Lie
// comultiplications, evaluated pointwise.

Coefficient cut_star(const WordIndicator& f, const WordIndicator& g, const StableSet& set,
                     const Word& w);
WordIndicator cut_star(const WordIndicator& f, const WordIndicator& g, const StableSet& set);
Coefficient cut_bracket(const WordIndicator& f, const WordIndicator& g, const StableSet& set,
                        const Word& w);
WordIndicator cut_bracket(const WordIndicator& f, const WordIndicator& g, const StableSet& set);

Coefficient inscription_star(const WordIndicator& f, const WordIndicator& g, const Pairing& mu,
                             const Word& w);
WordIndicator inscription_star(const WordIndicator& f, const WordIndicator& g,
                               const Pairing& mu);
Coefficient inscription_bracket(const WordIndicator& f, const WordIndicator& g,
                                const Pairing& mu, const Word& w);
WordIndicator inscription_bracket(const WordIndicator& f, const WordIndicator& g,
                                  const Pairing& mu);

/// Left Lie-algebra action of word indicators on the span of non-empty
/// words: fw = -sum over simple cuts of f(factor) * (word with the factor
/// deleted). Drops word length by at least one.
ModuleElement<Word> cut_action(const WordIndicator& f, const ModuleElement<Word>& v,
                               const StableSet& set);

/// Action induced by the pairing comultiplication; drops word length by at
/// least two. Defined on all words.
ModuleElement<Word> inscription_action(const WordIndicator& f, const ModuleElement<Word>& v,
                                       const Pairing& mu);

/// exp of the cut action: sum over k of action^k / k!. Finite because the
/// action is nilpotent on words of bounded length. Requires the rational
/// ring; throws ring_error otherwise.
ModuleElement<Word> exp_cut_action(const WordIndicator& f, const ModuleElement<Word>& v,
                                   const StableSet& set);

/// Insertion pre-Lie product: w inserted at every position of x, zero when
/// w is not a member of the stable set. (The all-words case is the classical
/// Gerstenhaber product.)
ModuleElement<Word> insertion_product(const Word& w, const Word& x, const StableSet& set,
                                      Ring ring = Ring::integers());
ModuleElement<Word> insertion_product(const ModuleElement<Word>& v,
                                      const ModuleElement<Word>& x, const StableSet& set);

/// Interleaving p * y: the words of p spliced into y in order, summed over
/// all ways to split y into word_count(p)+1 (possibly empty) pieces. Zero if
/// some word of p is outside the stable set (for non-empty y); for empty y
/// the value is w_1 when p has exactly one word and zero otherwise.
ModuleElement<Word> interleave(const Phrase& p, const Word& y, const StableSet& set,
                               Ring ring = Ring::integers());

/// Dual product of the cut bialgebra on phrases: the coefficient of p (x) q
/// in the cut coproduct of r equals the coefficient of r in dual_cut_product(p, q).
ModuleElement<Phrase> dual_cut_product(const Phrase& p, const Phrase& q, const StableSet& set,
                                       Ring ring = Ring::integers(),
                                       std::size_t cap = kDefaultCutCap);
ModuleElement<Phrase> dual_cut_product(const ModuleElement<Phrase>& p,
                                       const ModuleElement<Phrase>& q, const StableSet& set,
                                       std::size_t cap = kDefaultCutCap);

/// Deconcatenation of a phrase into its k+1 prefix/suffix splits.
ModuleElement<Tensor2<Phrase, Phrase>> deconcatenate(const Phrase& p,
                                                     Ring ring = Ring::integers());

/// Dual product of the inscription bialgebra. Needs a finitely supported
/// pairing; built constructively from the inscription structure, so the
/// result is exact and finite.
ModuleElement<Phrase> dual_inscription_product(const Phrase& p, const Phrase& q,
                                               const Pairing& mu);

/// Convolution product of phrase indicators dual to the cut coproduct,
/// evaluated pointwise.
Coefficient cut_convolution(const PhraseIndicator& f, const PhraseIndicator& g,
                            const StableSet& set, const Phrase& p,
                            std::size_t cap = kDefaultCutCap);

/// Convolution product of phrase indicators dual to the inscription coproduct.
Coefficient inscription_convolution(const PhraseIndicator& f, const PhraseIndicator& g,
                                    const Pairing& mu, const Phrase& p,
                                    std::size_t cap = kDefaultInscriptionCap);

}  // namespace wordalg
