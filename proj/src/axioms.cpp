#include "wordalg/axioms.hpp"

namespace wordalg {

LawReport check_leading_term(const Coproduct<Phrase>& delta, const Coproduct<Word>& rho,
                             const std::vector<Word>& samples, std::string sample_desc) {
    return detail::scan<Word>(
        "leading-term", std::move(sample_desc), samples,
        [&](const Word& w) -> std::optional<std::string> {
            auto full = delta(Phrase::single(w));
            ModuleElement<Tensor2<Word, Word>> projected;
            for (const auto& [t, c] : full.terms())
                if (t.first.word_count() == 1 && t.second.word_count() == 1)
                    projected.add_term({t.first.words()[0], t.second.words()[0]}, c);
            auto expected = rho(w);
            if (projected == expected) return std::nullopt;
            return "input " + render(w) + "\n  degree-(1,1) part = " + render(projected) +
                   "\n  word coproduct    = " + render(expected);
        });
}

LawReport check_left_handed(const Coproduct<Phrase>& delta, const std::vector<Word>& samples,
                            std::string sample_desc) {
    return detail::scan<Word>(
        "left-handed", std::move(sample_desc), samples,
        [&](const Word& w) -> std::optional<std::string> {
            auto full = delta(Phrase::single(w));
            Coefficient one = Coefficient::one(full.ring());
            full.add_term({Phrase::single(w), Phrase()}, -one);
            full.add_term({Phrase(), Phrase::single(w)}, -one);
            for (const auto& [t, c] : full.terms())
                if (t.first.word_count() == 0 || t.second.word_count() != 1)
                    return "input " + render(w) + "\n  stray term " + render(t) + " (coeff " +
                           c.str() + ")";
            return std::nullopt;
        });
}

LawReport check_duality(
    const Coproduct<Phrase>& delta,
    const std::function<ModuleElement<Phrase>(const Phrase&, const Phrase&)>& product,
    const std::vector<Phrase>& rs, const std::vector<Phrase>& ps, std::string sample_desc) {
    // Precompute every coproduct once; then compare coefficients pairwise.
    std::vector<ModuleElement<Tensor2<Phrase, Phrase>>> deltas;
    deltas.reserve(rs.size());
    for (const Phrase& r : rs) deltas.push_back(delta(r));

    std::vector<std::pair<Phrase, Phrase>> pairs;
    for (const Phrase& p : ps)
        for (const Phrase& q : ps) pairs.emplace_back(p, q);

    return detail::scan<std::pair<Phrase, Phrase>>(
        "duality", std::move(sample_desc), pairs,
        [&](const std::pair<Phrase, Phrase>& pq) -> std::optional<std::string> {
            auto prod = product(pq.first, pq.second);
            for (std::size_t k = 0; k < rs.size(); ++k) {
                Coefficient via_delta = deltas[k].coeff({pq.first, pq.second});
                Coefficient via_prod = prod.coeff(rs[k]);
                if (!(via_delta == via_prod))
                    return "p = " + render(pq.first) + ", q = " + render(pq.second) +
                           ", r = " + render(rs[k]) +
                           "\n  <delta(r), p x q> = " + via_delta.str() +
                           "\n  <r, p o q>        = " + via_prod.str();
            }
            return std::nullopt;
        });
}

Word random_word(std::mt19937_64& rng, const std::vector<Letter>& alphabet,
                 std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::vector<Letter> ls;
    std::size_t n = len(rng);
    ls.reserve(n);
    for (std::size_t k = 0; k < n; ++k) ls.push_back(alphabet[pick(rng)]);
    return Word(std::move(ls));
}

ModuleElement<Word> random_word_table(std::mt19937_64& rng,
                                      const std::vector<Letter>& alphabet,
                                      std::size_t max_len, std::size_t terms,
                                      long long coeff_range, Ring ring) {
    std::uniform_int_distribution<long long> coeff(-coeff_range, coeff_range);
    ModuleElement<Word> out;
    for (std::size_t k = 0; k < terms; ++k)
        out.add_term(random_word(rng, alphabet, max_len), Coefficient(ring, coeff(rng)));
    return out;
}

Pairing random_pairing(std::mt19937_64& rng, const std::vector<Letter>& alphabet,
                       long long range, Ring ring) {
    std::uniform_int_distribution<long long> coeff(-range, range);
    Pairing mu(ring);
    for (const Letter& a : alphabet)
        for (const Letter& b : alphabet) mu.set(a, b, Coefficient(ring, coeff(rng)));
    return mu;
}

}  // namespace wordalg
