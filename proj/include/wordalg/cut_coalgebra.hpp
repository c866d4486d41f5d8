#pragma once

#include "wordalg/module.hpp"
#include "wordalg/stable.hpp"
#include "wordalg/words.hpp"

#include <map>
#include <vector>

namespace wordalg {

/// With L = all the number of cuts of a length-m word grows like 3^m, so the
/// expansion operations refuse words longer than this unless overridden.
inline constexpr std::size_t kDefaultCutCap = 14;

/// A simple cut (i, j) of a word of length m: 1 <= i < j <= m+1,
/// (i, j) != (1, m+1), and the factor w_{i,j} is a member of the stable set.
struct SimpleCut {
    std::size_t i = 0, j = 0;
    friend auto operator<=>(const SimpleCut&, const SimpleCut&) = default;
};

/// A cut: disjoint member factors (i_1,j_1),...,(i_k,j_k) with strictly
/// increasing bounds, so consecutive factors are separated by at least one
/// letter. The empty cut (k = 0) is always valid; a k = 1 cut must not cover
/// the whole word.
struct Cut {
    std::vector<std::size_t> bounds;  // i_1, j_1, ..., i_k, j_k

    std::size_t size() const { return bounds.size() / 2; }
    bool empty() const { return bounds.empty(); }
    friend auto operator<=>(const Cut&, const Cut&) = default;
};

/// All simple cuts of a non-empty word, in lexicographic (i, j) order.
std::vector<SimpleCut> simple_cuts(const Word& w, const StableSet& set);

/// All cuts of a non-empty word, ordered by size then lexicographically.
/// The empty cut is included. Throws cap_exceeded past the length cap.
std::vector<Cut> cuts(const Word& w, const StableSet& set,
                      std::size_t cap = kDefaultCutCap);

/// The phrase of cut factors (w_{i_1,j_1} | ... | w_{i_k,j_k}).
Phrase cut_factors(const Word& w, const Cut& c);

/// The word left after deleting all cut factors from w.
Word cut_remainder(const Word& w, const Cut& c);

/// Simple-cut comultiplication on the span of non-empty words:
/// w maps to the sum of w_{i,j} (x) w_{1,i} w_{j,m+1} over simple cuts.
/// This is a pre-Lie comultiplication. Throws on an empty word in the support.
ModuleElement<Tensor2<Word, Word>> simple_cut_coproduct(const ModuleElement<Word>& v,
                                                        const StableSet& set);

/// Cut comultiplication on strict phrases: on a one-word phrase,
/// w (x) 1 plus the sum of cut_factors (x) cut_remainder over all cuts;
/// extended to longer phrases multiplicatively. Coassociative, with counit
/// and antipode; its degree-1 leading term is simple_cut_coproduct.
ModuleElement<Tensor2<Phrase, Phrase>> cut_coproduct(const ModuleElement<Phrase>& p,
                                                     const StableSet& set,
                                                     std::size_t cap = kDefaultCutCap);

/// The coaction of the phrase bialgebra on words: cut_coproduct minus the
/// w (x) 1 term, with the right factor kept as a word.
ModuleElement<Tensor2<Phrase, Word>> cut_coaction(const Word& w, const StableSet& set,
                                                  std::size_t cap = kDefaultCutCap);

/// Coefficient of the empty phrase.
Coefficient counit(const ModuleElement<Phrase>& p);

/// The antipode of the cut bialgebra: anti-homomorphic, s(1) = 1, and on
/// words s(w) = -w - sum over non-empty cuts of cut_factors * s(remainder).
/// Memoized per call across the word recursion.
ModuleElement<Phrase> cut_antipode(const ModuleElement<Phrase>& p, const StableSet& set,
                                   std::size_t cap = kDefaultCutCap);

/// Subword comultiplication for a strongly stable set: w maps to the sum of
/// w' (x) w/w' over all index subsets whose selected subword lies in S.
/// With S = all words this is the shuffle comultiplication. Defined on all
/// words including the empty one.
ModuleElement<Tensor2<Word, Word>> subword_coproduct(const ModuleElement<Word>& v,
                                                     const StronglyStableSet& set);

}  // namespace wordalg
