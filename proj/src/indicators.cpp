#include "wordalg/indicators.hpp"

#include "wordalg/text.hpp"

namespace wordalg {

WordIndicator letter_count_indicator(const Letter& a, Ring ring) {
    return WordIndicator("f" + a.symbol(), [a, ring](const Word& w) {
        return Coefficient(ring, static_cast<long long>(letter_count(w, a)));
    });
}

WordIndicator length_indicator(Ring ring) {
    return WordIndicator("len", [ring](const Word& w) {
        return Coefficient(ring, static_cast<long long>(w.length()));
    });
}

PhraseIndicator word_count_indicator(Ring ring) {
    return PhraseIndicator("len", [ring](const Phrase& p) {
        return Coefficient(ring, static_cast<long long>(p.word_count()));
    });
}

PhraseIndicator phrase_letter_count_indicator(const Letter& a, Ring ring) {
    return PhraseIndicator("f" + a.symbol(), [a, ring](const Phrase& p) {
        long long n = 0;
        for (const Word& w : p.words()) n += static_cast<long long>(letter_count(w, a));
        return Coefficient(ring, n);
    });
}

Coefficient cut_star(const WordIndicator& f, const WordIndicator& g, const StableSet& set,
                     const Word& w) {
    if (w.empty()) throw std::invalid_argument("cut_star: empty word");
    std::size_t m = w.length();
    Coefficient sum;
    bool started = false;
    for (const SimpleCut& sc : simple_cuts(w, set)) {
        Coefficient term =
            f(factor(w, sc.i, sc.j)) * g(concat(factor(w, 1, sc.i), factor(w, sc.j, m + 1)));
        sum = started ? sum + term : term;
        started = true;
    }
    return started ? sum : Coefficient::zero(f(w).ring());
}

WordIndicator cut_star(const WordIndicator& f, const WordIndicator& g, const StableSet& set) {
    return WordIndicator(f.name() + "*" + g.name(),
                         [f, g, set](const Word& w) { return cut_star(f, g, set, w); });
}

Coefficient cut_bracket(const WordIndicator& f, const WordIndicator& g, const StableSet& set,
                        const Word& w) {
    return cut_star(f, g, set, w) - cut_star(g, f, set, w);
}

WordIndicator cut_bracket(const WordIndicator& f, const WordIndicator& g,
                          const StableSet& set) {
    return WordIndicator("[" + f.name() + "," + g.name() + "]",
                         [f, g, set](const Word& w) { return cut_bracket(f, g, set, w); });
}

Coefficient inscription_star(const WordIndicator& f, const WordIndicator& g, const Pairing& mu,
                             const Word& w) {
    std::size_t m = w.length();
    Coefficient sum = Coefficient::zero(mu.ring());
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
            Coefficient weight = mu.value(w.at(i), w.at(j));
            if (weight.is_zero()) continue;
            sum = sum + weight * f(inscription_gap(w, i, j)) *
                            g(concat(factor(w, 1, i), factor(w, j + 1, m + 1)));
        }
    return sum;
}

WordIndicator inscription_star(const WordIndicator& f, const WordIndicator& g,
                               const Pairing& mu) {
    return WordIndicator(f.name() + "*" + g.name(),
                         [f, g, mu](const Word& w) { return inscription_star(f, g, mu, w); });
}

Coefficient inscription_bracket(const WordIndicator& f, const WordIndicator& g,
                                const Pairing& mu, const Word& w) {
    return inscription_star(f, g, mu, w) - inscription_star(g, f, mu, w);
}

WordIndicator inscription_bracket(const WordIndicator& f, const WordIndicator& g,
                                  const Pairing& mu) {
    return WordIndicator("[" + f.name() + "," + g.name() + "]", [f, g, mu](const Word& w) {
        return inscription_bracket(f, g, mu, w);
    });
}

ModuleElement<Word> cut_action(const WordIndicator& f, const ModuleElement<Word>& v,
                               const StableSet& set) {
    ModuleElement<Word> out;
    for (const auto& [w, coeff] : v.terms()) {
        if (w.empty()) throw std::invalid_argument("cut_action: empty word in support");
        std::size_t m = w.length();
        for (const SimpleCut& sc : simple_cuts(w, set))
            out.add_term(concat(factor(w, 1, sc.i), factor(w, sc.j, m + 1)),
                         -(coeff * f(factor(w, sc.i, sc.j))));
    }
    return out;
}

ModuleElement<Word> inscription_action(const WordIndicator& f, const ModuleElement<Word>& v,
                                       const Pairing& mu) {
    ModuleElement<Word> out;
    for (const auto& [w, coeff] : v.terms()) {
        std::size_t m = w.length();
        for (std::size_t i = 1; i < m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j) {
                Coefficient weight = mu.value(w.at(i), w.at(j));
                if (weight.is_zero()) continue;
                out.add_term(concat(factor(w, 1, i), factor(w, j + 1, m + 1)),
                             -(coeff * weight * f(inscription_gap(w, i, j))));
            }
    }
    return out;
}

ModuleElement<Word> exp_cut_action(const WordIndicator& f, const ModuleElement<Word>& v,
                                   const StableSet& set) {
    if (v.is_zero()) return v;
    if (!(v.ring() == Ring::rationals()))
        throw ring_error("exp_cut_action requires the rational ring");
    ModuleElement<Word> result = v;
    ModuleElement<Word> term = v;
    for (long long k = 1; !term.is_zero(); ++k) {
        term = cut_action(f, term, set).scaled(Coefficient::rational(1, k));
        result += term;
    }
    return result;
}

ModuleElement<Word> insertion_product(const Word& w, const Word& x, const StableSet& set,
                                      Ring ring) {
    if (w.empty() || x.empty())
        throw std::invalid_argument("insertion_product: empty word");
    ModuleElement<Word> out;
    if (!set.contains(w)) return out;
    std::size_t n = x.length();
    for (std::size_t i = 0; i <= n; ++i)
        out.add_term(concat(concat(factor(x, 1, i + 1), w), factor(x, i + 1, n + 1)),
                     Coefficient::one(ring));
    return out;
}

ModuleElement<Word> insertion_product(const ModuleElement<Word>& v,
                                      const ModuleElement<Word>& x, const StableSet& set) {
    ModuleElement<Word> out;
    for (const auto& [wb, wc] : v.terms())
        for (const auto& [xb, xc] : x.terms())
            out += insertion_product(wb, xb, set, wc.ring()).scaled(wc * xc);
    return out;
}

ModuleElement<Word> interleave(const Phrase& p, const Word& y, const StableSet& set,
                               Ring ring) {
    if (!p.is_strict()) throw std::invalid_argument("interleave: non-strict phrase");
    std::size_t k = p.word_count();
    ModuleElement<Word> out;
    if (y.empty()) {
        // dual of the w (x) 1 part of the coproduct: no membership test here
        if (k == 1) out.add_term(p.words()[0], Coefficient::one(ring));
        return out;
    }
    if (k == 0) {
        out.add_term(y, Coefficient::one(ring));
        return out;
    }
    for (const Word& w : p.words())
        if (!set.contains(w)) return out;
    std::size_t n = y.length();
    // Split positions 0 <= d_1 < ... < d_k <= n carve y into k+1 pieces; the
    // interior pieces must be non-empty so the inserted words stay separated,
    // matching the factor separation in cuts (and hence the duality with the
    // cut coproduct). The outer pieces x_1, x_{k+1} may be empty.
    std::vector<std::size_t> d(k, 0);
    auto rec = [&](auto&& self, std::size_t u, std::size_t from) -> void {
        if (u == k) {
            Word z = factor(y, 1, d[0] + 1);
            for (std::size_t t = 0; t < k; ++t) {
                z = concat(z, p.words()[t]);
                std::size_t hi = (t + 1 < k ? d[t + 1] : n);
                z = concat(z, factor(y, d[t] + 1, hi + 1));
            }
            out.add_term(std::move(z), Coefficient::one(ring));
            return;
        }
        for (std::size_t pos = from; pos <= n; ++pos) {
            d[u] = pos;
            self(self, u + 1, pos + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

ModuleElement<Phrase> dual_cut_product(const Phrase& p, const Phrase& q, const StableSet& set,
                                       Ring ring, std::size_t cap) {
    (void)cap;
    if (p.empty()) return ModuleElement<Phrase>::basis(q, Coefficient::one(ring));
    if (q.empty()) return ModuleElement<Phrase>::basis(p, Coefficient::one(ring));
    if (!p.is_strict() || !q.is_strict())
        throw std::invalid_argument("dual_cut_product: non-strict phrase");
    std::size_t k = p.word_count(), l = q.word_count();
    ModuleElement<Phrase> out;
    // interleavings of each consecutive block of p-words with each q-word
    std::map<std::pair<std::size_t, std::size_t>, ModuleElement<Word>> block_cache;
    auto block_interleave = [&](std::size_t a, std::size_t c,
                                std::size_t b) -> const ModuleElement<Word>& {
        auto key = std::make_pair(a * (k + 1) + c, b);
        auto it = block_cache.find(key);
        if (it == block_cache.end()) {
            Phrase block(std::vector<Word>(p.words().begin() + a, p.words().begin() + a + c));
            it = block_cache.emplace(key, interleave(block, q.words()[b], set, ring)).first;
        }
        return it->second;
    };
    // Slot recursion over (consumed p-words, consumed q-words). Each slot is a
    // block of p-words interleaved with one q-word, or a single p-word passed
    // through whole (the empty-word slot); other empty-word slots vanish.
    std::vector<Word> prefix;
    auto rec = [&](auto&& self, std::size_t a, std::size_t b,
                   const Coefficient& weight) -> void {
        if (a == k && b == l) {
            out.add_term(Phrase(prefix), weight);
            return;
        }
        if (a < k) {
            prefix.push_back(p.words()[a]);
            self(self, a + 1, b, weight);
            prefix.pop_back();
        }
        if (b < l)
            for (std::size_t c = 0; c + a <= k; ++c)
                for (const auto& [wd, cw] : block_interleave(a, c, b).terms()) {
                    prefix.push_back(wd);
                    self(self, a + c, b + 1, weight * cw);
                    prefix.pop_back();
                }
    };
    rec(rec, 0, 0, Coefficient::one(ring));
    return out;
}

ModuleElement<Phrase> dual_cut_product(const ModuleElement<Phrase>& p,
                                       const ModuleElement<Phrase>& q, const StableSet& set,
                                       std::size_t cap) {
    ModuleElement<Phrase> out;
    for (const auto& [pb, pc] : p.terms())
        for (const auto& [qb, qc] : q.terms())
            out += dual_cut_product(pb, qb, set, pc.ring(), cap).scaled(pc * qc);
    return out;
}

ModuleElement<Tensor2<Phrase, Phrase>> deconcatenate(const Phrase& p, Ring ring) {
    ModuleElement<Tensor2<Phrase, Phrase>> out;
    std::size_t kk = p.word_count();
    for (std::size_t i = 0; i <= kk; ++i) {
        Phrase left(std::vector<Word>(p.words().begin(), p.words().begin() + i));
        Phrase right(std::vector<Word>(p.words().begin() + i, p.words().end()));
        out.add_term({std::move(left), std::move(right)}, Coefficient::one(ring));
    }
    return out;
}

namespace {

// All words u with an inscription of c pairs whose gaps are the given words
// and whose remainder is y; emits (u, weight of the inscription).
void inscribe_words(const std::vector<Word>& gaps, const Word& y, const Pairing& mu,
                    const std::function<void(Word, Coefficient)>& emit) {
    std::size_t c = gaps.size();
    std::size_t n = y.length();
    std::vector<std::size_t> d(c, 0);  // split positions of y, non-decreasing
    std::vector<const std::pair<const std::pair<Letter, Letter>, Coefficient>*> chosen(c);
    auto pairs_rec = [&](auto&& self, std::size_t u, Coefficient weight) -> void {
        if (u == c) {
            Word z = factor(y, 1, d.empty() ? n + 1 : d[0] + 1);
            for (std::size_t t = 0; t < c; ++t) {
                z = concat(z, Word({chosen[t]->first.first}));
                z = concat(z, gaps[t]);
                z = concat(z, Word({chosen[t]->first.second}));
                std::size_t hi = (t + 1 < c ? d[t + 1] : n);
                z = concat(z, factor(y, d[t] + 1, hi + 1));
            }
            emit(std::move(z), weight);
            return;
        }
        for (const auto& entry : mu.support()) {
            chosen[u] = &entry;
            self(self, u + 1, weight * entry.second);
        }
    };
    auto splits_rec = [&](auto&& self, std::size_t u, std::size_t from) -> void {
        if (u == c) {
            pairs_rec(pairs_rec, 0, Coefficient::one(mu.ring()));
            return;
        }
        for (std::size_t pos = from; pos <= n; ++pos) {
            d[u] = pos;
            self(self, u + 1, pos);
        }
    };
    splits_rec(splits_rec, 0, 0);
}

}  // namespace

ModuleElement<Phrase> dual_inscription_product(const Phrase& p, const Phrase& q,
                                               const Pairing& mu) {
    std::size_t k = p.word_count(), l = q.word_count();
    ModuleElement<Phrase> out;
    std::map<std::pair<std::size_t, std::size_t>, ModuleElement<Word>> block_cache;
    auto block_inscribe = [&](std::size_t a, std::size_t c,
                              std::size_t b) -> const ModuleElement<Word>& {
        auto key = std::make_pair(a * (k + 1) + c, b);
        auto it = block_cache.find(key);
        if (it == block_cache.end()) {
            std::vector<Word> gaps(p.words().begin() + a, p.words().begin() + a + c);
            ModuleElement<Word> emitted;
            inscribe_words(gaps, q.words()[b], mu, [&](Word u, Coefficient weight) {
                emitted.add_term(std::move(u), weight);
            });
            it = block_cache.emplace(key, std::move(emitted)).first;
        }
        return it->second;
    };
    // Slot recursion dual to the inscription coproduct: a slot either passes
    // one p-word through whole (dual of w (x) 1) or wraps a run of p-words
    // around support letters inside the next q-word.
    std::vector<Word> prefix;
    auto rec = [&](auto&& self, std::size_t a, std::size_t b,
                   const Coefficient& weight) -> void {
        if (a == k && b == l) {
            out.add_term(Phrase(prefix), weight);
            return;
        }
        if (a < k) {
            prefix.push_back(p.words()[a]);
            self(self, a + 1, b, weight);
            prefix.pop_back();
        }
        if (b < l)
            for (std::size_t c = 0; c + a <= k; ++c)
                for (const auto& [wd, cw] : block_inscribe(a, c, b).terms()) {
                    prefix.push_back(wd);
                    self(self, a + c, b + 1, weight * cw);
                    prefix.pop_back();
                }
    };
    rec(rec, 0, 0, Coefficient::one(mu.ring()));
    return out;
}

Coefficient cut_convolution(const PhraseIndicator& f, const PhraseIndicator& g,
                            const StableSet& set, const Phrase& p, std::size_t cap) {
    auto delta = cut_coproduct(ModuleElement<Phrase>::basis(p), set, cap);
    Coefficient sum = Coefficient::zero(f(Phrase()).ring());
    for (const auto& [t, c] : delta.terms()) sum = sum + c * f(t.first) * g(t.second);
    return sum;
}

Coefficient inscription_convolution(const PhraseIndicator& f, const PhraseIndicator& g,
                                    const Pairing& mu, const Phrase& p, std::size_t cap) {
    auto delta = inscription_coproduct(ModuleElement<Phrase>::basis(p), mu, cap);
    Coefficient sum = Coefficient::zero(f(Phrase()).ring());
    for (const auto& [t, c] : delta.terms()) sum = sum + c * f(t.first) * g(t.second);
    return sum;
}

}  // namespace wordalg
