#pragma once

#include "wordalg/enumerate.hpp"
#include "wordalg/inscription_coalgebra.hpp"
#include "wordalg/module.hpp"
#include "wordalg/text.hpp"
#include "wordalg/words.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wordalg {

/// Outcome of one law check over a finite sample set. All checks are exact:
/// pass means the identity held on every sample with exact arithmetic.
/// A failing report always carries a reproducible counterexample.
struct LawReport {
    std::string law;
    std::string samples;
    bool pass = true;
    std::string counterexample;  // rendered input and both sides
    std::size_t samples_checked = 0;
};

template <typename B>
using Coproduct = std::function<ModuleElement<Tensor2<B, B>>(const B&)>;

namespace detail {

template <typename B>
LawReport scan(std::string law, std::string samples, const std::vector<B>& xs,
               const std::function<std::optional<std::string>(const B&)>& check) {
    LawReport r{std::move(law), std::move(samples)};
    r.samples_checked = xs.size();
    auto f = first_failure<std::string>(
        xs.size(), [&](std::size_t k) { return check(xs[k]); });
    if (f) {
        r.pass = false;
        r.counterexample = std::move(*f);
    }
    return r;
}

}  // namespace detail

/// Pre-Lie law: the associator defect (id (x) rho)rho - (rho (x) id)rho is
/// invariant under swapping the first two tensor slots.
template <typename B>
LawReport check_pre_lie(const Coproduct<B>& rho, const std::vector<B>& samples,
                        std::string sample_desc) {
    return detail::scan<B>(
        "pre-lie", std::move(sample_desc), samples,
        [&rho](const B& b) -> std::optional<std::string> {
            auto once = rho(b);
            auto lift_rho = [&rho](const B& x) { return rho(x); };
            auto defect = expand_second(once, lift_rho) - expand_first(once, lift_rho);
            if (permute12(defect) == defect) return std::nullopt;
            return "input " + render(b) + "\n  defect      = " + render(defect) +
                   "\n  P12(defect) = " + render(permute12(defect));
        });
}

template <typename B>
LawReport check_coassoc(const Coproduct<B>& delta, const std::vector<B>& samples,
                        std::string sample_desc) {
    return detail::scan<B>(
        "coassoc", std::move(sample_desc), samples,
        [&delta](const B& b) -> std::optional<std::string> {
            auto once = delta(b);
            auto lift_delta = [&delta](const B& x) { return delta(x); };
            auto left = expand_first(once, lift_delta);
            auto right = expand_second(once, lift_delta);
            if (left == right) return std::nullopt;
            return "input " + render(b) + "\n  (delta x id)delta = " + render(left) +
                   "\n  (id x delta)delta = " + render(right);
        });
}

/// Algebra-homomorphism law: delta(ab) = delta(a) delta(b).
template <typename B>
LawReport check_bialgebra(const Coproduct<B>& delta,
                          const std::function<B(const B&, const B&)>& mult,
                          const std::vector<std::pair<B, B>>& samples,
                          std::string sample_desc) {
    return detail::scan<std::pair<B, B>>(
        "bialgebra", std::move(sample_desc), samples,
        [&](const std::pair<B, B>& ab) -> std::optional<std::string> {
            auto lhs = delta(mult(ab.first, ab.second));
            auto rhs = tensor_mult(delta(ab.first), delta(ab.second), mult);
            if (lhs == rhs) return std::nullopt;
            return "inputs " + render(ab.first) + " , " + render(ab.second) +
                   "\n  delta(ab)        = " + render(lhs) +
                   "\n  delta(a)delta(b) = " + render(rhs);
        });
}

/// Counit law: (eps (x) id)delta = id = (id (x) eps)delta.
template <typename B>
LawReport check_counit(const Coproduct<B>& delta,
                       const std::function<Coefficient(const B&)>& eps,
                       const std::vector<B>& samples, std::string sample_desc) {
    return detail::scan<B>(
        "counit", std::move(sample_desc), samples,
        [&](const B& b) -> std::optional<std::string> {
            auto once = delta(b);
            ModuleElement<B> left, right;
            for (const auto& [t, c] : once.terms()) {
                left.add_term(t.second, c * eps(t.first));
                right.add_term(t.first, c * eps(t.second));
            }
            auto id = ModuleElement<B>::basis(b, Coefficient::one(once.ring()));
            if (left == id && right == id) return std::nullopt;
            return "input " + render(b) + "\n  (eps x id)delta = " + render(left) +
                   "\n  (id x eps)delta = " + render(right);
        });
}

/// Both convolution identities: mult(id (x) s)delta = mult(s (x) id)delta
/// = eps(.) * unit.
template <typename B>
LawReport check_antipode(const Coproduct<B>& delta,
                         const std::function<ModuleElement<B>(const B&)>& antipode,
                         const std::function<Coefficient(const B&)>& eps, const B& unit,
                         const std::function<B(const B&, const B&)>& mult,
                         const std::vector<B>& samples, std::string sample_desc) {
    return detail::scan<B>(
        "antipode", std::move(sample_desc), samples,
        [&](const B& b) -> std::optional<std::string> {
            auto once = delta(b);
            ModuleElement<B> left, right;
            for (const auto& [t, c] : once.terms()) {
                for (const auto& [sb, sc] : antipode(t.second).terms())
                    left.add_term(mult(t.first, sb), c * sc);
                for (const auto& [sb, sc] : antipode(t.first).terms())
                    right.add_term(mult(sb, t.second), c * sc);
            }
            ModuleElement<B> expect;
            expect.add_term(unit, eps(b));
            if (left == expect && right == expect) return std::nullopt;
            return "input " + render(b) + "\n  mult(id x s)delta = " + render(left) +
                   "\n  mult(s x id)delta = " + render(right) +
                   "\n  eps(b) 1          = " + render(expect);
        });
}

/// Comodule law for a coaction U -> T (x) U over (T, delta):
/// (delta (x) id)Theta = (id (x) Theta)Theta, and Theta(u) - 1 (x) u lands in
/// T_+ (x) U (the unit test uses the grading of T).
template <typename T, typename U>
LawReport check_comodule(
    const std::function<ModuleElement<Tensor2<T, U>>(const U&)>& coaction,
    const Coproduct<T>& delta, const T& unit, const std::vector<U>& samples,
    std::string sample_desc) {
    return detail::scan<U>(
        "comodule", std::move(sample_desc), samples,
        [&](const U& u) -> std::optional<std::string> {
            auto once = coaction(u);
            auto left = expand_first(once, [&delta](const T& t) { return delta(t); });
            auto right = expand_second(once, [&coaction](const U& x) { return coaction(x); });
            if (!(left == right))
                return "input " + render(u) +
                       "\n  (delta x id)Theta = " + render(left) +
                       "\n  (id x Theta)Theta = " + render(right);
            ModuleElement<Tensor2<T, U>> rest = once;
            rest.add_term({unit, u}, -Coefficient::one(once.ring()));
            for (const auto& [t, c] : rest.terms())
                if (t.first == unit)
                    return "input " + render(u) + "\n  Theta(u) - 1 x u has a unit-left term " +
                           render(t);
            return std::nullopt;
        });
}

/// Lie cobracket induced by a pre-Lie comultiplication: rho - P12 rho is
/// co-antisymmetric and satisfies the co-Jacobi identity (the sum of the
/// cyclic rotations of (cobracket (x) id)cobracket vanishes).
template <typename B>
LawReport check_cojacobi(const Coproduct<B>& rho, const std::vector<B>& samples,
                         std::string sample_desc) {
    auto cobracket = [&rho](const B& b) {
        auto r = rho(b);
        return r - swap_tensor(r);
    };
    return detail::scan<B>(
        "cojacobi", std::move(sample_desc), samples,
        [&](const B& b) -> std::optional<std::string> {
            auto cb = cobracket(b);
            if (!(swap_tensor(cb) == -cb))
                return "input " + render(b) + "\n  cobracket not antisymmetric: " + render(cb);
            auto t = expand_first(cb, cobracket);
            auto sum = t + rotate_cycle(t) + rotate_cycle(rotate_cycle(t));
            if (sum.is_zero()) return std::nullopt;
            return "input " + render(b) + "\n  cyclic sum = " + render(sum);
        });
}

/// The degree-(1,1) part of the phrase coproduct of a word agrees with the
/// word-level comultiplication.
LawReport check_leading_term(const Coproduct<Phrase>& delta, const Coproduct<Word>& rho,
                             const std::vector<Word>& samples, std::string sample_desc);

/// Left-handedness on degree-1 elements: delta(w) - w (x) 1 - 1 (x) w has
/// non-unit left factors and one-word right factors.
LawReport check_left_handed(const Coproduct<Phrase>& delta, const std::vector<Word>& samples,
                            std::string sample_desc);

/// Duality of a coproduct against a product: the coefficient of p (x) q in
/// delta(r) equals the coefficient of r in product(p, q).
LawReport check_duality(
    const Coproduct<Phrase>& delta,
    const std::function<ModuleElement<Phrase>(const Phrase&, const Phrase&)>& product,
    const std::vector<Phrase>& rs, const std::vector<Phrase>& ps, std::string sample_desc);

// Seeded random generators for property suites. Deterministic for a fixed
// seed; seeds are recorded in the reports by the callers.

Word random_word(std::mt19937_64& rng, const std::vector<Letter>& alphabet,
                 std::size_t max_len);

/// Table indicator supported on random words, with small integer values.
ModuleElement<Word> random_word_table(std::mt19937_64& rng,
                                      const std::vector<Letter>& alphabet,
                                      std::size_t max_len, std::size_t terms,
                                      long long coeff_range, Ring ring = Ring::integers());

/// Finitely supported pairing on the alphabet with values in [-range, range].
Pairing random_pairing(std::mt19937_64& rng, const std::vector<Letter>& alphabet,
                       long long range, Ring ring = Ring::integers());

}  // namespace wordalg
