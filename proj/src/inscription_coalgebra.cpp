#include "wordalg/inscription_coalgebra.hpp"

#include <algorithm>
#include <cassert>

namespace wordalg {

Pairing Pairing::delta(const std::vector<Letter>& alphabet, Ring ring) {
    Pairing mu(ring);
    for (const Letter& a : alphabet) mu.set(a, a, Coefficient::one(ring));
    return mu;
}

void Pairing::set(const Letter& a, const Letter& b, Coefficient c) {
    if (!(c.ring() == ring_)) throw ring_error("pairing value outside the pairing ring");
    if (c.is_zero())
        table_.erase({a, b});
    else
        table_.insert_or_assign({a, b}, std::move(c));
}

Coefficient Pairing::value(const Letter& a, const Letter& b) const {
    auto it = table_.find({a, b});
    return it == table_.end() ? Coefficient::zero(ring_) : it->second;
}

Pairing Pairing::operator+(const Pairing& other) const {
    if (!(ring_ == other.ring_)) throw ring_error("pairing ring mismatch");
    Pairing sum = *this;
    for (const auto& [ab, c] : other.table_) sum.set(ab.first, ab.second, sum.value(ab.first, ab.second) + c);
    return sum;
}

namespace {

void require_cap(const Word& w, std::size_t cap) {
    if (w.length() > cap)
        throw cap_exceeded("word of length " + std::to_string(w.length()) +
                           " exceeds the inscription expansion cap " + std::to_string(cap));
}

}  // namespace

std::vector<Inscription> inscriptions(const Word& w, std::size_t cap) {
    require_cap(w, cap);
    std::size_t m = w.length();
    std::vector<Inscription> out;
    std::vector<std::size_t> positions;
    // Pairs are chosen left to right, which yields exactly the even subsets.
    auto rec = [&](auto&& self, std::size_t next) -> void {
        out.push_back(Inscription{positions});
        for (std::size_t i = next; i < m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j) {
                positions.push_back(i);
                positions.push_back(j);
                self(self, j + 1);
                positions.pop_back();
                positions.pop_back();
            }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const Inscription& a, const Inscription& b) {
        if (a.pair_count() != b.pair_count()) return a.pair_count() < b.pair_count();
        return a.positions < b.positions;
    });
    return out;
}

Word inscription_gap(const Word& w, std::size_t i, std::size_t j) {
    return factor(w, i + 1, j);
}

Phrase inscription_factors(const Word& w, const Inscription& a) {
    std::vector<Word> ws;
    ws.reserve(a.pair_count());
    for (std::size_t u = 0; u < a.pair_count(); ++u)
        ws.push_back(inscription_gap(w, a.positions[2 * u], a.positions[2 * u + 1]));
    return Phrase(std::move(ws));
}

Word inscription_remainder(const Word& w, const Inscription& a) {
    std::size_t m = w.length();
    Word rest;
    std::size_t pos = 1;
    for (std::size_t u = 0; u < a.pair_count(); ++u) {
        rest = concat(rest, factor(w, pos, a.positions[2 * u]));
        pos = a.positions[2 * u + 1] + 1;
    }
    return concat(rest, factor(w, pos, m + 1));
}

Coefficient inscription_weight(const Word& w, const Inscription& a, const Pairing& mu) {
    Coefficient weight = Coefficient::one(mu.ring());
    for (std::size_t u = 0; u < a.pair_count(); ++u)
        weight = weight * mu.value(w.at(a.positions[2 * u]), w.at(a.positions[2 * u + 1]));
    return weight;
}

namespace {

// Walks only the inscriptions whose every pair lies in the pairing support;
// calls f(inscription, weight) with weight != 0.
void for_each_weighted_inscription(
    const Word& w, const Pairing& mu,
    const std::function<void(const Inscription&, const Coefficient&)>& f) {
    std::size_t m = w.length();
    std::vector<std::size_t> positions;
    auto rec = [&](auto&& self, std::size_t next, const Coefficient& weight) -> void {
        f(Inscription{positions}, weight);
        for (std::size_t i = next; i < m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j) {
                Coefficient v = mu.value(w.at(i), w.at(j));
                if (v.is_zero()) continue;
                positions.push_back(i);
                positions.push_back(j);
                self(self, j + 1, weight * v);
                positions.pop_back();
                positions.pop_back();
            }
    };
    rec(rec, 1, Coefficient::one(mu.ring()));
}

ModuleElement<Tensor2<Phrase, Phrase>> word_inscription_coproduct(const Word& w,
                                                                  const Pairing& mu,
                                                                  std::size_t cap) {
    require_cap(w, cap);
    ModuleElement<Tensor2<Phrase, Phrase>> out;
    out.add_term({Phrase::single(w), Phrase()}, Coefficient::one(mu.ring()));
    for_each_weighted_inscription(w, mu, [&](const Inscription& a, const Coefficient& weight) {
        Phrase left = inscription_factors(w, a);
        Word right = inscription_remainder(w, a);
        assert(left.letter_count() + right.length() + 2 * a.pair_count() == w.length());
        out.add_term({left, Phrase::single(right)}, weight);
    });
    return out;
}

}  // namespace

ModuleElement<Tensor2<Word, Word>> simple_inscription_coproduct(const ModuleElement<Word>& v,
                                                                const Pairing& mu) {
    ModuleElement<Tensor2<Word, Word>> out;
    for (const auto& [w, coeff] : v.terms()) {
        std::size_t m = w.length();
        for (std::size_t i = 1; i < m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j) {
                Coefficient weight = mu.value(w.at(i), w.at(j));
                if (weight.is_zero()) continue;
                Word left = inscription_gap(w, i, j);
                Word right = concat(factor(w, 1, i), factor(w, j + 1, m + 1));
                assert(left.length() + right.length() + 2 == m);
                out.add_term({left, right}, coeff * weight);
            }
    }
    return out;
}

ModuleElement<Tensor2<Phrase, Phrase>> inscription_coproduct(const ModuleElement<Phrase>& q,
                                                             const Pairing& mu,
                                                             std::size_t cap) {
    ModuleElement<Tensor2<Phrase, Phrase>> out;
    for (const auto& [phrase, coeff] : q.terms()) {
        ModuleElement<Tensor2<Phrase, Phrase>> acc;
        acc.add_term({Phrase(), Phrase()}, coeff);
        for (const Word& w : phrase.words())
            acc = tensor_mult(acc, word_inscription_coproduct(w, mu, cap),
                              [](const Phrase& a, const Phrase& b) { return concat(a, b); });
        out += acc;
    }
    return out;
}

ModuleElement<Tensor2<Phrase, Word>> inscription_coaction(const Word& w, const Pairing& mu,
                                                          std::size_t cap) {
    require_cap(w, cap);
    ModuleElement<Tensor2<Phrase, Word>> out;
    for_each_weighted_inscription(w, mu, [&](const Inscription& a, const Coefficient& weight) {
        out.add_term({inscription_factors(w, a), inscription_remainder(w, a)}, weight);
    });
    return out;
}

namespace {

const ModuleElement<Phrase>& antipode_of_word(const Word& w, const Pairing& mu,
                                              std::size_t cap,
                                              std::map<Word, ModuleElement<Phrase>>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    require_cap(w, cap);
    ModuleElement<Phrase> s =
        ModuleElement<Phrase>::basis(Phrase::single(w), -Coefficient::one(mu.ring()));
    for_each_weighted_inscription(w, mu, [&](const Inscription& a, const Coefficient& weight) {
        if (a.empty()) return;
        Phrase left = inscription_factors(w, a);
        // the remainder drops 2k letters, so the recursion terminates
        const ModuleElement<Phrase>& tail =
            antipode_of_word(inscription_remainder(w, a), mu, cap, memo);
        for (const auto& [ph, co] : tail.terms()) s.add_term(concat(left, ph), -(co * weight));
    });
    return memo.emplace(w, std::move(s)).first->second;
}

}  // namespace

ModuleElement<Phrase> inscription_antipode(const ModuleElement<Phrase>& q, const Pairing& mu,
                                           std::size_t cap) {
    std::map<Word, ModuleElement<Phrase>> memo;
    ModuleElement<Phrase> out;
    for (const auto& [phrase, coeff] : q.terms()) {
        ModuleElement<Phrase> acc = ModuleElement<Phrase>::basis(Phrase(), coeff);
        for (std::size_t k = phrase.word_count(); k-- > 0;) {
            ModuleElement<Phrase> sw = antipode_of_word(phrase.words()[k], mu, cap, memo);
            ModuleElement<Phrase> next;
            for (const auto& [a, ca] : acc.terms())
                for (const auto& [b, cb] : sw.terms()) next.add_term(concat(a, b), ca * cb);
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

}  // namespace wordalg
