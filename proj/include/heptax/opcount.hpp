#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "heptax/band.hpp"
#include "heptax/scalar.hpp"

namespace heptax {

/// Thread-local scalar-operation counters. Counted runs are single-threaded
/// (Exec::Serial), so reading the calling thread's counters is enough.
struct OpCounts {
    static inline thread_local std::uint64_t mults = 0;
    static inline thread_local std::uint64_t divs = 0;

    static void reset() {
        mults = 0;
        divs = 0;
    }
};

/// Transparent wrapper that counts multiplications and divisions. Satisfies
/// the same scalar concept as the wrapped type, so any solver instantiates
/// with it unchanged.
template <ScalarField S>
struct Counted {
    S v{};

    Counted() = default;
    Counted(S value) : v(std::move(value)) {}  // NOLINT: implicit by design

    friend Counted operator+(const Counted& a, const Counted& b) { return {a.v + b.v}; }
    friend Counted operator-(const Counted& a, const Counted& b) { return {a.v - b.v}; }
    friend Counted operator*(const Counted& a, const Counted& b) {
        ++OpCounts::mults;
        return {a.v * b.v};
    }
    friend Counted operator/(const Counted& a, const Counted& b) {
        ++OpCounts::divs;
        return {a.v / b.v};
    }
    Counted operator-() const { return {-v}; }
    friend bool operator==(const Counted& a, const Counted& b) { return a.v == b.v; }
    friend bool operator!=(const Counted& a, const Counted& b) { return a.v != b.v; }
    friend bool operator<(const Counted& a, const Counted& b) { return a.v < b.v; }
};

template <ScalarField S>
struct scalar_traits<Counted<S>> {
    using base = scalar_traits<S>;
    static constexpr ScalarMode mode = base::mode;
    static constexpr bool exact = base::exact;
    static constexpr bool ordered = base::ordered;
    static Counted<S> zero() { return {base::zero()}; }
    static Counted<S> one() { return {base::one()}; }
    static bool is_zero(const Counted<S>& x, const ZeroTest& zt) { return base::is_zero(x.v, zt); }
    static Counted<S> abs(const Counted<S>& x)
        requires OrderedScalarField<S>
    {
        return {base::abs(x.v)};
    }
    static Counted<S> substitute_pivot(std::size_t row) { return {base::substitute_pivot(row)}; }
    static Counted<S> finalize(const Counted<S>& x) { return {base::finalize(x.v)}; }
};

namespace detail {

template <ScalarField S>
std::vector<Counted<S>> wrap_counted(const std::vector<S>& src) {
    std::vector<Counted<S>> dst;
    dst.reserve(src.size());
    for (const S& x : src) dst.push_back(Counted<S>{x});
    return dst;
}

}  // namespace detail

template <ScalarField S>
HeptaBands<Counted<S>> count_scalars(const HeptaBands<S>& h) {
    HeptaBands<Counted<S>> out;
    out.order = h.order;
    out.diag = detail::wrap_counted(h.diag);
    out.super1 = detail::wrap_counted(h.super1);
    out.super2 = detail::wrap_counted(h.super2);
    out.super3 = detail::wrap_counted(h.super3);
    out.sub1 = detail::wrap_counted(h.sub1);
    out.sub2 = detail::wrap_counted(h.sub2);
    out.sub3 = detail::wrap_counted(h.sub3);
    return out;
}

template <ScalarField S>
CyclicHeptaBands<Counted<S>> count_scalars(const CyclicHeptaBands<S>& c) {
    CyclicHeptaBands<Counted<S>> out;
    out.order = c.order;
    out.diag = detail::wrap_counted(c.diag);
    out.super1 = detail::wrap_counted(c.super1);
    out.super2 = detail::wrap_counted(c.super2);
    out.super3 = detail::wrap_counted(c.super3);
    out.sub1 = detail::wrap_counted(c.sub1);
    out.sub2 = detail::wrap_counted(c.sub2);
    out.sub3 = detail::wrap_counted(c.sub3);
    return out;
}

}  // namespace heptax
