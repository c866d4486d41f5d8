#pragma once

#include "wordalg/module.hpp"
#include "wordalg/words.hpp"

#include <map>
#include <vector>

namespace wordalg {

/// A length-m word has 2^(m-1) inscriptions, so the expansion operations
/// refuse words longer than this unless overridden.
inline constexpr std::size_t kDefaultInscriptionCap = 12;

/// Finitely supported map (Letter, Letter) -> coefficient. Lookups outside
/// the support return exactly zero (in the pairing's ring).
class Pairing {
public:
    using Table = std::map<std::pair<Letter, Letter>, Coefficient>;

    explicit Pairing(Ring ring = Ring::integers()) : ring_(ring) {}

    /// mu(a, b) = 1 iff a == b, over the given finite alphabet.
    static Pairing delta(const std::vector<Letter>& alphabet, Ring ring = Ring::integers());

    void set(const Letter& a, const Letter& b, Coefficient c);
    Coefficient value(const Letter& a, const Letter& b) const;

    const Table& support() const { return table_; }
    const Ring& ring() const { return ring_; }

    /// Pointwise sum (same ring).
    Pairing operator+(const Pairing& other) const;

private:
    Ring ring_;
    Table table_;
};

/// A simple inscription (i, j) in a word of length m: letter positions
/// 1 <= i < j <= m.
struct SimpleInscription {
    std::size_t i = 0, j = 0;
    friend auto operator<=>(const SimpleInscription&, const SimpleInscription&) = default;
};

/// An inscription: an even-cardinality set of letter positions, listed
/// ascending and paired consecutively: (i_1, j_1, ..., i_k, j_k).
struct Inscription {
    std::vector<std::size_t> positions;

    std::size_t pair_count() const { return positions.size() / 2; }
    bool empty() const { return positions.empty(); }
    friend auto operator<=>(const Inscription&, const Inscription&) = default;
};

/// All inscriptions in w (the empty one included), ordered by pair count
/// then lexicographically. Throws cap_exceeded past the length cap.
std::vector<Inscription> inscriptions(const Word& w,
                                      std::size_t cap = kDefaultInscriptionCap);

/// The word strictly between the pair (i, j): w_{i+1,j}.
Word inscription_gap(const Word& w, std::size_t i, std::size_t j);

/// The phrase (w^a_1 | ... | w^a_k) of between-pair words.
Phrase inscription_factors(const Word& w, const Inscription& a);

/// The word left after deleting every closed interval [i_u, j_u] from w.
Word inscription_remainder(const Word& w, const Inscription& a);

/// Product of pairing values at the matched positions; 1 for the empty
/// inscription.
Coefficient inscription_weight(const Word& w, const Inscription& a, const Pairing& mu);

/// Simple-inscription comultiplication on the span of all words:
/// w maps to the sum of mu(w(i), w(j)) * w_{i+1,j} (x) w_{1,i} w_{j+1,m+1}
/// over position pairs i < j. This is a pre-Lie comultiplication.
ModuleElement<Tensor2<Word, Word>> simple_inscription_coproduct(const ModuleElement<Word>& v,
                                                                const Pairing& mu);

/// Inscription comultiplication on all phrases (words may be empty): on a
/// one-word phrase, w (x) 1 plus the weighted sum of
/// inscription_factors (x) inscription_remainder; multiplicative extension.
/// Coassociative with counit and antipode; leading term is
/// simple_inscription_coproduct.
ModuleElement<Tensor2<Phrase, Phrase>> inscription_coproduct(
    const ModuleElement<Phrase>& q, const Pairing& mu,
    std::size_t cap = kDefaultInscriptionCap);

/// The coaction on words: inscription_coproduct minus the w (x) 1 term,
/// right factor kept as a word.
ModuleElement<Tensor2<Phrase, Word>> inscription_coaction(
    const Word& w, const Pairing& mu, std::size_t cap = kDefaultInscriptionCap);

/// The antipode of the inscription bialgebra.
ModuleElement<Phrase> inscription_antipode(const ModuleElement<Phrase>& q, const Pairing& mu,
                                           std::size_t cap = kDefaultInscriptionCap);

}  // namespace wordalg
