#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "heptax/band.hpp"
#include "heptax/scalar.hpp"

namespace heptax {

enum class Exec { Serial, Parallel };

struct SolveOptions {
    ZeroTest zero_test{};
    Exec exec = Exec::Serial;
};

/// Triangular factors of a heptadiagonal matrix, LU without pivoting.
/// L is unit lower triangular with three sub-diagonals (lower1..lower3),
/// U has the pivots on its diagonal, two computed super-diagonals
/// (upper1, upper2) and the input's third super-diagonal unchanged.
///
/// Storage offsets mirror HeptaBands: lowerK starts at row K, upperK at
/// row 0 with length m-K.
template <ScalarField S>
struct HeptaLUFactors {
    std::size_t order = 0;
    std::vector<S> pivots;            // length m
    std::vector<S> lower1;            // rows 1..m-1
    std::vector<S> lower2;            // rows 2..m-1
    std::vector<S> lower3;            // rows 3..m-1
    std::vector<S> upper1;            // rows 0..m-2
    std::vector<S> upper2;            // rows 0..m-3
    std::vector<S> upper3;            // rows 0..m-4, copied from the input
    std::vector<std::size_t> substituted;  // rows whose pivot became t

    const S& p(std::size_t r) const { return pivots[r]; }
    const S& l1(std::size_t r) const { return lower1[r - 1]; }
    const S& l2(std::size_t r) const { return lower2[r - 2]; }
    const S& l3(std::size_t r) const { return lower3[r - 3]; }
    const S& u1(std::size_t r) const { return upper1[r]; }
    const S& u2(std::size_t r) const { return upper2[r]; }
    const S& u3(std::size_t r) const { return upper3[r]; }

    DenseMatrix<S> lower_dense() const {
        DenseMatrix<S> l = DenseMatrix<S>::identity(order);
        for (std::size_t r = 1; r < order; ++r) l.at(r, r - 1) = l1(r);
        for (std::size_t r = 2; r < order; ++r) l.at(r, r - 2) = l2(r);
        for (std::size_t r = 3; r < order; ++r) l.at(r, r - 3) = l3(r);
        return l;
    }

    DenseMatrix<S> upper_dense() const {
        DenseMatrix<S> u(order);
        for (std::size_t r = 0; r < order; ++r) u.at(r, r) = p(r);
        for (std::size_t r = 0; r + 1 < order; ++r) u.at(r, r + 1) = u1(r);
        for (std::size_t r = 0; r + 2 < order; ++r) u.at(r, r + 2) = u2(r);
        for (std::size_t r = 0; r + 3 < order; ++r) u.at(r, r + 3) = u3(r);
        return u;
    }
};

template <ScalarField S>
struct SolveReport {
    std::vector<S> x;
    S det = scalar_traits<S>::zero();
    std::size_t substitutions_used = 0;
    ScalarMode mode = scalar_traits<S>::mode;
};

/// Factorizes without pivoting. Whenever a computed pivot is zero (per the
/// mode's zero test) it is replaced by the indeterminate t and the row is
/// recorded; in float64 mode this raises BreakdownInFloatMode instead, and
/// in rational mode it signals the driver to rerun symbolically.
template <ScalarField S>
HeptaLUFactors<S> factorize(const HeptaBands<S>& h, const ZeroTest& zt = {}) {
    validate(h);
    const std::size_t m = h.order;

    HeptaLUFactors<S> fac;
    fac.order = m;
    const S z = scalar_traits<S>::zero();
    fac.pivots.assign(m, z);
    fac.lower1.assign(m - 1, z);
    fac.lower2.assign(m - 2, z);
    fac.lower3.assign(m - 3, z);
    fac.upper1.assign(m - 1, z);
    fac.upper2.assign(m - 2, z);
    fac.upper3 = h.super3;

    auto guard = [&](S& pivot, std::size_t row) {
        if (scalar_traits<S>::is_zero(pivot, zt)) {
            pivot = scalar_traits<S>::substitute_pivot(row);
            fac.substituted.push_back(row);
        }
    };

    fac.pivots[0] = h.d(0);
    guard(fac.pivots[0], 0);
    fac.upper1[0] = h.a1(0);
    fac.upper2[0] = h.a2(0);
    fac.lower1[0] = h.b1(1) / fac.p(0);
    fac.lower2[0] = h.b2(2) / fac.p(0);
    fac.pivots[1] = h.d(1) - fac.l1(1) * fac.u1(0);
    guard(fac.pivots[1], 1);
    fac.upper1[1] = h.a1(1) - fac.l1(1) * fac.u2(0);
    fac.lower1[1] = (h.b1(2) - fac.l2(2) * fac.u1(0)) / fac.p(1);
    fac.pivots[2] = h.d(2) - fac.l2(2) * fac.u2(0) - fac.l1(2) * fac.u1(1);
    guard(fac.pivots[2], 2);

    for (std::size_t r = 3; r < m; ++r) {
        fac.lower3[r - 3] = h.b3(r) / fac.p(r - 3);
        fac.lower2[r - 2] = (h.b2(r) - fac.l3(r) * fac.u1(r - 3)) / fac.p(r - 2);
        fac.lower1[r - 1] =
            (h.b1(r) - fac.l3(r) * fac.u2(r - 3) - fac.l2(r) * fac.u1(r - 2)) / fac.p(r - 1);
        fac.upper2[r - 2] = h.a2(r - 2) - fac.l1(r - 2) * h.a3(r - 3);
        fac.upper1[r - 1] =
            h.a1(r - 1) - fac.l1(r - 1) * fac.u2(r - 2) - fac.l2(r - 1) * h.a3(r - 3);
        fac.pivots[r] = h.d(r) - fac.l3(r) * h.a3(r - 3) - fac.l2(r) * fac.u2(r - 2) -
                        fac.l1(r) * fac.u1(r - 1);
        guard(fac.pivots[r], r);
    }
    return fac;
}

/// Product of the pivots; in symbolic mode the value is read off at t = 0.
template <ScalarField S>
S determinant(const HeptaLUFactors<S>& fac) {
    S det = scalar_traits<S>::one();
    for (const S& p : fac.pivots) det = det * p;
    return scalar_traits<S>::finalize(det);
}

/// The pivot product without the final evaluation; symbolic callers that
/// need to keep computing over t use this.
template <ScalarField S>
S determinant_raw(const HeptaLUFactors<S>& fac) {
    S det = scalar_traits<S>::one();
    for (const S& p : fac.pivots) det = det * p;
    return det;
}

template <ScalarField S>
std::vector<S> forward_eliminate(const HeptaLUFactors<S>& fac, const std::vector<S>& rhs) {
    const std::size_t m = fac.order;
    if (rhs.size() != m) throw BadBandLength("rhs length does not match factor order");
    std::vector<S> q;
    q.reserve(m);
    q.push_back(rhs[0]);
    q.push_back(rhs[1] - fac.l1(1) * q[0]);
    q.push_back(rhs[2] - fac.l2(2) * q[0] - fac.l1(2) * q[1]);
    for (std::size_t r = 3; r < m; ++r)
        q.push_back(rhs[r] - fac.l3(r) * q[r - 3] - fac.l2(r) * q[r - 2] -
                    fac.l1(r) * q[r - 1]);
    return q;
}

template <ScalarField S>
std::vector<S> back_substitute_raw(const HeptaLUFactors<S>& fac, const std::vector<S>& q) {
    const std::size_t m = fac.order;
    if (q.size() != m) throw BadBandLength("q length does not match factor order");
    std::vector<S> x(m, scalar_traits<S>::zero());
    x[m - 1] = q[m - 1] / fac.p(m - 1);
    x[m - 2] = (q[m - 2] - fac.u1(m - 2) * x[m - 1]) / fac.p(m - 2);
    x[m - 3] = (q[m - 3] - fac.u1(m - 3) * x[m - 2] - fac.u2(m - 3) * x[m - 1]) / fac.p(m - 3);
    for (std::size_t r = m - 3; r-- > 0;)
        x[r] = (q[r] - fac.u1(r) * x[r + 1] - fac.u2(r) * x[r + 2] - fac.u3(r) * x[r + 3]) /
               fac.p(r);
    return x;
}

/// Back substitution; symbolic results are evaluated at t = 0.
template <ScalarField S>
std::vector<S> back_substitute(const HeptaLUFactors<S>& fac, const std::vector<S>& q) {
    std::vector<S> x = back_substitute_raw(fac, q);
    for (S& v : x) v = scalar_traits<S>::finalize(v);
    return x;
}

namespace detail {

template <ScalarField S>
SolveReport<S> solve_impl(const HeptaBands<S>& h, const std::vector<S>& rhs,
                          const SolveOptions& opt) {
    HeptaLUFactors<S> fac = factorize(h, opt.zero_test);
    S det = determinant(fac);
    if constexpr (scalar_traits<S>::exact) {
        if (scalar_traits<S>::is_zero(det, ZeroTest{})) throw SingularMatrix();
    }
    // In float64 mode det == 0 exactly iff some pivot was zero, which
    // factorize already reports; the accumulated product may under/overflow
    // and is reported as computed.
    std::vector<S> q = forward_eliminate(fac, rhs);
    SolveReport<S> rep;
    rep.x = back_substitute(fac, q);
    rep.det = std::move(det);
    rep.substitutions_used = fac.substituted.size();
    rep.mode = scalar_traits<S>::mode;
    return rep;
}

}  // namespace detail

/// Factorize, test the determinant, then eliminate and substitute.
/// Rational-mode zero pivots transparently promote the whole computation to
/// symbolic arithmetic and come back exact.
template <ScalarField S>
SolveReport<S> solve(const HeptaBands<S>& h, const std::vector<S>& rhs,
                     const SolveOptions& opt = {}) {
    if constexpr (std::is_same_v<S, Rational>) {
        try {
            return detail::solve_impl(h, rhs, opt);
        } catch (const PivotBreakdown&) {
            HeptaBands<TRational> hs;
            hs.order = h.order;
            hs.diag = to_symbolic(h.diag);
            hs.super1 = to_symbolic(h.super1);
            hs.super2 = to_symbolic(h.super2);
            hs.super3 = to_symbolic(h.super3);
            hs.sub1 = to_symbolic(h.sub1);
            hs.sub2 = to_symbolic(h.sub2);
            hs.sub3 = to_symbolic(h.sub3);
            SolveReport<TRational> rep = detail::solve_impl(hs, to_symbolic(rhs), opt);
            SolveReport<Rational> out;
            out.x = to_rational(rep.x);
            out.det = to_rational(rep.det);
            out.substitutions_used = rep.substitutions_used;
            out.mode = ScalarMode::SymbolicT;
            return out;
        }
    } else {
        return detail::solve_impl(h, rhs, opt);
    }
}

/// Several right-hand sides against one factorization; results are
/// independent, so they may run concurrently.
template <ScalarField S>
std::vector<std::vector<S>> solve_multi(const HeptaLUFactors<S>& fac,
                                        const std::vector<std::vector<S>>& rhs_list,
                                        Exec exec = Exec::Serial) {
    std::vector<std::vector<S>> out(rhs_list.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(rhs_list.size()); ++i)
            out[static_cast<std::size_t>(i)] =
                back_substitute(fac, forward_eliminate(fac, rhs_list[static_cast<std::size_t>(i)]));
    } else {
        for (std::size_t i = 0; i < rhs_list.size(); ++i)
            out[i] = back_substitute(fac, forward_eliminate(fac, rhs_list[i]));
    }
    return out;
}

}  // namespace heptax
