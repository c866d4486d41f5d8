#include "wordalg/cut_coalgebra.hpp"

#include "wordalg/text.hpp"

#include <algorithm>

namespace wordalg {

namespace {

void require_nonempty(const Word& w, const char* op) {
    if (w.empty()) throw std::invalid_argument(std::string(op) + ": empty word");
}

void require_cap(const Word& w, std::size_t cap) {
    if (w.length() > cap)
        throw cap_exceeded("word of length " + std::to_string(w.length()) +
                           " exceeds the cut expansion cap " + std::to_string(cap));
}

}  // namespace

std::vector<SimpleCut> simple_cuts(const Word& w, const StableSet& set) {
    require_nonempty(w, "simple_cuts");
    std::size_t m = w.length();
    std::vector<SimpleCut> out;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m + 1; ++j) {
            if (i == 1 && j == m + 1) continue;
            if (set.contains(factor(w, i, j))) out.push_back({i, j});
        }
    return out;
}

std::vector<Cut> cuts(const Word& w, const StableSet& set, std::size_t cap) {
    require_nonempty(w, "cuts");
    require_cap(w, cap);
    std::size_t m = w.length();
    std::vector<Cut> out;
    std::vector<std::size_t> bounds;
    // Backtracks over factor bounds; each extension keeps indices strictly
    // increasing, so consecutive factors stay separated.
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (!(bounds.size() == 2 && bounds[0] == 1 && bounds[1] == m + 1))
            out.push_back(Cut{bounds});
        for (std::size_t i = next; i <= m; ++i)
            for (std::size_t j = i + 1; j <= m + 1; ++j) {
                if (!set.contains(factor(w, i, j))) continue;
                bounds.push_back(i);
                bounds.push_back(j);
                self(self, j + 1);
                bounds.pop_back();
                bounds.pop_back();
            }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bounds < b.bounds;
    });
    return out;
}

Phrase cut_factors(const Word& w, const Cut& c) {
    std::vector<Word> ws;
    ws.reserve(c.size());
    for (std::size_t u = 0; u < c.size(); ++u)
        ws.push_back(factor(w, c.bounds[2 * u], c.bounds[2 * u + 1]));
    return Phrase(std::move(ws));
}

Word cut_remainder(const Word& w, const Cut& c) {
    std::size_t m = w.length();
    Word rest;
    std::size_t pos = 1;
    for (std::size_t u = 0; u < c.size(); ++u) {
        rest = concat(rest, factor(w, pos, c.bounds[2 * u]));
        pos = c.bounds[2 * u + 1];
    }
    return concat(rest, factor(w, pos, m + 1));
}

ModuleElement<Tensor2<Word, Word>> simple_cut_coproduct(const ModuleElement<Word>& v,
                                                        const StableSet& set) {
    ModuleElement<Tensor2<Word, Word>> out;
    for (const auto& [w, coeff] : v.terms()) {
        require_nonempty(w, "simple_cut_coproduct");
        std::size_t m = w.length();
        for (const SimpleCut& sc : simple_cuts(w, set))
            out.add_term({factor(w, sc.i, sc.j),
                          concat(factor(w, 1, sc.i), factor(w, sc.j, m + 1))},
                         coeff);
    }
    return out;
}

namespace {

ModuleElement<Tensor2<Phrase, Phrase>> word_cut_coproduct(const Word& w, const StableSet& set,
                                                          std::size_t cap,
                                                          const Coefficient& unit) {
    ModuleElement<Tensor2<Phrase, Phrase>> out;
    out.add_term({Phrase::single(w), Phrase()}, unit);
    for (const Cut& c : cuts(w, set, cap))
        out.add_term({cut_factors(w, c), Phrase::single(cut_remainder(w, c))}, unit);
    return out;
}

}  // namespace

ModuleElement<Tensor2<Phrase, Phrase>> cut_coproduct(const ModuleElement<Phrase>& p,
                                                     const StableSet& set, std::size_t cap) {
    ModuleElement<Tensor2<Phrase, Phrase>> out;
    for (const auto& [phrase, coeff] : p.terms()) {
        if (!phrase.is_strict())
            throw std::invalid_argument("cut_coproduct: non-strict phrase " + render(phrase));
        Coefficient unit = Coefficient::one(coeff.ring());
        ModuleElement<Tensor2<Phrase, Phrase>> acc;
        acc.add_term({Phrase(), Phrase()}, coeff);
        for (const Word& w : phrase.words())
            acc = tensor_mult(acc, word_cut_coproduct(w, set, cap, unit),
                              [](const Phrase& a, const Phrase& b) { return concat(a, b); });
        out += acc;
    }
    return out;
}

ModuleElement<Tensor2<Phrase, Word>> cut_coaction(const Word& w, const StableSet& set,
                                                  std::size_t cap) {
    require_nonempty(w, "cut_coaction");
    ModuleElement<Tensor2<Phrase, Word>> out;
    Coefficient unit = Coefficient::one(Ring::integers());
    for (const Cut& c : cuts(w, set, cap))
        out.add_term({cut_factors(w, c), cut_remainder(w, c)}, unit);
    return out;
}

Coefficient counit(const ModuleElement<Phrase>& p) { return p.coeff(Phrase()); }

namespace {

const ModuleElement<Phrase>& antipode_of_word(const Word& w, const StableSet& set,
                                              std::size_t cap, const Ring& ring,
                                              std::map<Word, ModuleElement<Phrase>>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    ModuleElement<Phrase> s =
        ModuleElement<Phrase>::basis(Phrase::single(w), -Coefficient::one(ring));
    for (const Cut& c : cuts(w, set, cap)) {
        if (c.empty()) continue;
        Phrase left = cut_factors(w, c);
        const ModuleElement<Phrase>& tail =
            antipode_of_word(cut_remainder(w, c), set, cap, ring, memo);
        for (const auto& [ph, co] : tail.terms()) s.add_term(concat(left, ph), -co);
    }
    return memo.emplace(w, std::move(s)).first->second;
}

}  // namespace

ModuleElement<Phrase> cut_antipode(const ModuleElement<Phrase>& p, const StableSet& set,
                                   std::size_t cap) {
    std::map<Word, ModuleElement<Phrase>> memo;
    Ring ring = p.ring();
    ModuleElement<Phrase> out;
    for (const auto& [phrase, coeff] : p.terms()) {
        if (!phrase.is_strict())
            throw std::invalid_argument("cut_antipode: non-strict phrase " + render(phrase));
        // anti-homomorphism: s(w_1 ... w_k) = s(w_k) ... s(w_1)
        ModuleElement<Phrase> acc = ModuleElement<Phrase>::basis(Phrase(), coeff);
        for (std::size_t k = phrase.word_count(); k-- > 0;) {
            const ModuleElement<Phrase>& sw =
                antipode_of_word(phrase.words()[k], set, cap, ring, memo);
            ModuleElement<Phrase> next;
            for (const auto& [a, ca] : acc.terms())
                for (const auto& [b, cb] : sw.terms()) next.add_term(concat(a, b), ca * cb);
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

ModuleElement<Tensor2<Word, Word>> subword_coproduct(const ModuleElement<Word>& v,
                                                     const StronglyStableSet& set) {
    ModuleElement<Tensor2<Word, Word>> out;
    for (const auto& [w, coeff] : v.terms()) {
        std::vector<std::size_t> positions;
        auto rec = [&](auto&& self, std::size_t next) -> void {
            Word sub = select_positions(w, positions);
            if (set.contains(sub)) out.add_term({sub, delete_positions(w, positions)}, coeff);
            for (std::size_t p = next; p <= w.length(); ++p) {
                positions.push_back(p);
                self(self, p + 1);
                positions.pop_back();
            }
        };
        rec(rec, 1);
    }
    return out;
}

}  // namespace wordalg
