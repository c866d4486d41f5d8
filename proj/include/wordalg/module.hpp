#pragma once

#include "wordalg/coeff.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace wordalg {

template <typename L, typename R>
using Tensor2 = std::pair<L, R>;

template <typename A, typename B, typename C>
using Tensor3 = std::tuple<A, B, C>;

/// Exact sparse linear combination of basis elements of type B.
///
/// Canonical form: no stored coefficient is zero, and all coefficients live
/// in one ring (enforced on insertion). The term map is ordered by the basis
/// order, which makes iteration and printing deterministic.
template <typename B>
class ModuleElement {
public:
    using Basis = B;
    using TermMap = std::map<B, Coefficient>;

    ModuleElement() = default;

    static ModuleElement zero() { return {}; }

    static ModuleElement basis(B b, Coefficient c = Coefficient(Ring::integers(), 1)) {
        ModuleElement e;
        e.add_term(std::move(b), std::move(c));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const& { return terms_; }
    // value overload keeps `for (... : f(x).terms())` well-defined
    TermMap terms() && { return std::move(terms_); }

    /// Ring of the stored coefficients; integers for the zero element.
    Ring ring() const {
        return terms_.empty() ? Ring::integers() : terms_.begin()->second.ring();
    }

    Coefficient coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Coefficient::zero(ring()) : it->second;
    }

    void add_term(B b, const Coefficient& c) {
        if (c.is_zero()) return;
        if (!terms_.empty() && !(c.ring() == ring()))
            throw ring_error("mixed ring modes in one module element");
        auto [it, fresh] = terms_.emplace(std::move(b), c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ModuleElement& operator+=(const ModuleElement& other) {
        for (const auto& [b, c] : other.terms_) add_term(b, c);
        return *this;
    }

    ModuleElement& operator-=(const ModuleElement& other) {
        for (const auto& [b, c] : other.terms_) add_term(b, -c);
        return *this;
    }

    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

    ModuleElement operator-() const {
        ModuleElement r;
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
        return r;
    }

    ModuleElement scaled(const Coefficient& c) const {
        ModuleElement r;
        if (c.is_zero()) return r;
        for (const auto& [b, x] : terms_) {
            Coefficient y = x * c;
            if (!y.is_zero()) r.terms_.emplace(b, std::move(y));
        }
        return r;
    }

    bool operator==(const ModuleElement& other) const { return terms_ == other.terms_; }

private:
    TermMap terms_;
};

/// Linear extension of a basis map f : B -> ModuleElement<C>.
template <typename B, typename F>
auto lift(const ModuleElement<B>& v, F&& f) {
    using Out = decltype(f(std::declval<const B&>()));
    Out r;
    for (const auto& [b, c] : v.terms()) r += f(b).scaled(c);
    return r;
}

template <typename L, typename R>
ModuleElement<Tensor2<L, R>> tensor2(const ModuleElement<L>& x, const ModuleElement<R>& y) {
    ModuleElement<Tensor2<L, R>> r;
    for (const auto& [bl, cl] : x.terms())
        for (const auto& [br, cr] : y.terms()) r.add_term({bl, br}, cl * cr);
    return r;
}

template <typename A, typename B, typename C>
ModuleElement<Tensor3<A, B, C>> tensor3(const ModuleElement<A>& x, const ModuleElement<B>& y,
                                        const ModuleElement<C>& z) {
    ModuleElement<Tensor3<A, B, C>> r;
    for (const auto& [ba, ca] : x.terms())
        for (const auto& [bb, cb] : y.terms())
            for (const auto& [bc, cc] : z.terms()) r.add_term({ba, bb, bc}, ca * cb * cc);
    return r;
}

/// (f x id): expand the first tensor slot with f : A -> ModuleElement<Tensor2<A1,A2>>.
template <typename A, typename B, typename F>
auto expand_first(const ModuleElement<Tensor2<A, B>>& x, F&& f) {
    using Pair = typename decltype(f(std::declval<const A&>()))::Basis;
    using A1 = typename Pair::first_type;
    using A2 = typename Pair::second_type;
    ModuleElement<Tensor3<A1, A2, B>> r;
    for (const auto& [ab, c] : x.terms()) {
        auto e = f(ab.first);
        for (const auto& [p, d] : e.terms()) r.add_term({p.first, p.second, ab.second}, c * d);
    }
    return r;
}

/// (id x f): expand the second tensor slot with f : B -> ModuleElement<Tensor2<B1,B2>>.
template <typename A, typename B, typename F>
auto expand_second(const ModuleElement<Tensor2<A, B>>& x, F&& f) {
    using Pair = typename decltype(f(std::declval<const B&>()))::Basis;
    using B1 = typename Pair::first_type;
    using B2 = typename Pair::second_type;
    ModuleElement<Tensor3<A, B1, B2>> r;
    for (const auto& [ab, c] : x.terms()) {
        auto e = f(ab.second);
        for (const auto& [p, d] : e.terms()) r.add_term({ab.first, p.first, p.second}, c * d);
    }
    return r;
}

/// Swap of the first two tensor slots (the P^{1,2} endomorphism).
template <typename A, typename B, typename C>
ModuleElement<Tensor3<B, A, C>> permute12(const ModuleElement<Tensor3<A, B, C>>& x) {
    ModuleElement<Tensor3<B, A, C>> r;
    for (const auto& [t, c] : x.terms())
        r.add_term({std::get<1>(t), std::get<0>(t), std::get<2>(t)}, c);
    return r;
}

/// Cyclic rotation (a, b, c) -> (c, a, b) of a tensor cube.
template <typename B>
ModuleElement<Tensor3<B, B, B>> rotate_cycle(const ModuleElement<Tensor3<B, B, B>>& x) {
    ModuleElement<Tensor3<B, B, B>> r;
    for (const auto& [t, c] : x.terms())
        r.add_term({std::get<2>(t), std::get<0>(t), std::get<1>(t)}, c);
    return r;
}

/// Swap of the two slots of a tensor square.
template <typename B>
ModuleElement<Tensor2<B, B>> swap_tensor(const ModuleElement<Tensor2<B, B>>& x) {
    ModuleElement<Tensor2<B, B>> r;
    for (const auto& [t, c] : x.terms()) r.add_term({t.second, t.first}, c);
    return r;
}

/// Componentwise product (a x a')(b x b') = ab x a'b' of tensor squares.
template <typename B, typename Mult>
ModuleElement<Tensor2<B, B>> tensor_mult(const ModuleElement<Tensor2<B, B>>& x,
                                         const ModuleElement<Tensor2<B, B>>& y, Mult&& mult) {
    ModuleElement<Tensor2<B, B>> r;
    for (const auto& [tx, cx] : x.terms())
        for (const auto& [ty, cy] : y.terms())
            r.add_term({mult(tx.first, ty.first), mult(tx.second, ty.second)}, cx * cy);
    return r;
}

}  // namespace wordalg
