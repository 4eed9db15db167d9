#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "heptax/band.hpp"
#include "heptax/hepta_lu.hpp"

namespace heptax {

/// Cyclic solver: bordered partition plus the Sherman-Morrison-Woodbury
/// correction. The leading block is solved with the heptadiagonal LU for
/// three right-hand sides sharing one factorization; the wrap coupling is
/// resolved through a 2x2 capacitance system. The leading block is never
/// corrected into a dense matrix, which keeps the whole path O(n).

/// Intermediate state of one cyclic solve, exposed for tests and drivers.
template <ScalarField S>
struct SmwWorkspace {
    CyclicPartition<S> part;
    std::vector<S> rhat;        // reduced right-hand side
    HeptaLUFactors<S> factors;  // shared factorization of the leading block
    std::vector<S> y, q1, q2;   // leading-block solutions
    Mat2<S> capacitance{};      // 2x2 correction matrix
    std::vector<S> x_head;
    std::array<S, 2> x_tail{scalar_traits<S>::zero(), scalar_traits<S>::zero()};
};

/// rhat = rhs_head - V * M2^{-1} * rhs_tail, with an explicit 2x2 solve.
template <ScalarField S>
std::vector<S> reduce_rhs(const CyclicPartition<S>& part, const ZeroTest& zt = {}) {
    std::array<S, 2> m2inv_tail;
    if (!part.m2.solve(part.rhs_tail, m2inv_tail, zt)) throw SingularCornerBlock();
    std::vector<S> rhat = part.rhs_head;
    part.v1.axpy(-m2inv_tail[0], rhat);
    part.v2.axpy(-m2inv_tail[1], rhat);
    return rhat;
}

template <ScalarField S>
struct ThreeSolves {
    HeptaLUFactors<S> factors;
    std::vector<S> y, q1, q2;
};

/// Solves the three leading-block systems (rhat and the two border columns)
/// against one factorization. The solves are independent and may run
/// concurrently; any order gives identical results.
template <ScalarField S>
ThreeSolves<S> solve_three(const CyclicPartition<S>& part, const std::vector<S>& rhat,
                           const ZeroTest& zt = {}, Exec exec = Exec::Serial) {
    ThreeSolves<S> out;
    out.factors = factorize(part.m1, zt);
    if constexpr (scalar_traits<S>::exact) {
        if (scalar_traits<S>::is_zero(determinant(out.factors), ZeroTest{}))
            throw SingularMatrix();
    }
    const std::size_t k = part.m1.order;
    const std::vector<S> v1 = part.v1.dense(k);
    const std::vector<S> v2 = part.v2.dense(k);

    std::vector<const std::vector<S>*> inputs = {&rhat, &v1, &v2};
    std::vector<std::vector<S>> results(3);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < 3; ++i)
            results[i] = back_substitute(out.factors, forward_eliminate(out.factors, *inputs[i]));
    } else {
        for (int i = 0; i < 3; ++i)
            results[i] = back_substitute(out.factors, forward_eliminate(out.factors, *inputs[i]));
    }
    out.y = std::move(results[0]);
    out.q1 = std::move(results[1]);
    out.q2 = std::move(results[2]);
    return out;
}

/// x_head = y + (q1, q2) * S^{-1} * Ut y with S = M2 - Ut (q1, q2), then
/// x_tail = M2^{-1} (rhs_tail - Ut x_head). 2x2 inverses by adjugate.
template <ScalarField S>
std::pair<std::vector<S>, std::array<S, 2>> assemble(const CyclicPartition<S>& part,
                                                     const std::vector<S>& y,
                                                     const std::vector<S>& q1,
                                                     const std::vector<S>& q2,
                                                     const ZeroTest& zt = {},
                                                     Mat2<S>* capacitance_out = nullptr) {
    Mat2<S> cap{part.m2.a00 - part.ut1.dot(q1), part.m2.a01 - part.ut1.dot(q2),
                part.m2.a10 - part.ut2.dot(q1), part.m2.a11 - part.ut2.dot(q2)};
    if (capacitance_out != nullptr) *capacitance_out = cap;

    const std::array<S, 2> uty = {part.ut1.dot(y), part.ut2.dot(y)};
    std::array<S, 2> correction;
    if (!cap.solve(uty, correction, zt)) throw SingularCapacitance();

    std::vector<S> x_head = y;
    for (std::size_t i = 0; i < x_head.size(); ++i)
        x_head[i] = x_head[i] + q1[i] * correction[0] + q2[i] * correction[1];

    const std::array<S, 2> tail_rhs = {part.rhs_tail[0] - part.ut1.dot(x_head),
                                       part.rhs_tail[1] - part.ut2.dot(x_head)};
    std::array<S, 2> x_tail;
    if (!part.m2.solve(tail_rhs, x_tail, zt)) throw SingularCornerBlock();
    return {std::move(x_head), x_tail};
}

namespace detail {

template <ScalarField S>
SolveReport<S> solve_cyclic_impl(const CyclicHeptaBands<S>& c, const std::vector<S>& rhs,
                                 const SolveOptions& opt, SmwWorkspace<S>* ws_out) {
    SmwWorkspace<S> ws;
    ws.part = partition(c, rhs);
    ws.rhat = reduce_rhs(ws.part, opt.zero_test);
    ThreeSolves<S> three = solve_three(ws.part, ws.rhat, opt.zero_test, opt.exec);
    ws.factors = std::move(three.factors);
    ws.y = std::move(three.y);
    ws.q1 = std::move(three.q1);
    ws.q2 = std::move(three.q2);
    auto [x_head, x_tail] =
        assemble(ws.part, ws.y, ws.q1, ws.q2, opt.zero_test, &ws.capacitance);
    ws.x_head = std::move(x_head);
    ws.x_tail = x_tail;

    SolveReport<S> rep;
    rep.x = ws.x_head;
    rep.x.push_back(ws.x_tail[0]);
    rep.x.push_back(ws.x_tail[1]);
    for (S& v : rep.x) v = scalar_traits<S>::finalize(v);
    // det H = det(M1) * det(M2 - Ut M1^{-1} V); both factors are nonzero
    // here, or the solve would have thrown.
    rep.det = scalar_traits<S>::finalize(determinant(ws.factors) * ws.capacitance.det());
    rep.substitutions_used = ws.factors.substituted.size();
    rep.mode = scalar_traits<S>::mode;
    if (ws_out != nullptr) *ws_out = std::move(ws);
    return rep;
}

template <ScalarField S>
CyclicHeptaBands<TRational> lift_cyclic(const CyclicHeptaBands<S>& c) {
    CyclicHeptaBands<TRational> out;
    out.order = c.order;
    out.diag = to_symbolic(c.diag);
    out.super1 = to_symbolic(c.super1);
    out.super2 = to_symbolic(c.super2);
    out.super3 = to_symbolic(c.super3);
    out.sub1 = to_symbolic(c.sub1);
    out.sub2 = to_symbolic(c.sub2);
    out.sub3 = to_symbolic(c.sub3);
    return out;
}

}  // namespace detail

/// Full cyclic solve. Rational-mode breakdowns promote to symbolic
/// arithmetic; singular leading blocks propagate per the reduction's
/// requirements.
template <ScalarField S>
SolveReport<S> solve_cyclic(const CyclicHeptaBands<S>& c, const std::vector<S>& rhs,
                            const SolveOptions& opt = {}, SmwWorkspace<S>* ws_out = nullptr) {
    if constexpr (std::is_same_v<S, Rational>) {
        try {
            return detail::solve_cyclic_impl(c, rhs, opt, ws_out);
        } catch (const PivotBreakdown&) {
            SolveReport<TRational> rep = detail::solve_cyclic_impl(
                detail::lift_cyclic(c), to_symbolic(rhs), opt,
                static_cast<SmwWorkspace<TRational>*>(nullptr));
            SolveReport<Rational> out;
            out.x = to_rational(rep.x);
            out.det = to_rational(rep.det);
            out.substitutions_used = rep.substitutions_used;
            out.mode = ScalarMode::SymbolicT;
            return out;
        }
    } else {
        return detail::solve_cyclic_impl(c, rhs, opt, ws_out);
    }
}

namespace detail {

/// Determinant through the block formula with the whole pipeline kept
/// symbolic; evaluation at t = 0 happens once, on the final product. This
/// stays exact even when the leading block alone is singular.
template <ScalarField S>
S det_cyclic_impl(const CyclicHeptaBands<S>& c, const ZeroTest& zt) {
    const std::vector<S> zero_rhs(c.order, scalar_traits<S>::zero());
    CyclicPartition<S> part = partition(c, zero_rhs);
    HeptaLUFactors<S> fac = factorize(part.m1, zt);
    const std::size_t k = part.m1.order;

    std::vector<S> q1 = back_substitute_raw(fac, forward_eliminate(fac, part.v1.dense(k)));
    std::vector<S> q2 = back_substitute_raw(fac, forward_eliminate(fac, part.v2.dense(k)));
    Mat2<S> cap{part.m2.a00 - part.ut1.dot(q1), part.m2.a01 - part.ut1.dot(q2),
                part.m2.a10 - part.ut2.dot(q1), part.m2.a11 - part.ut2.dot(q2)};
    return scalar_traits<S>::finalize(determinant_raw(fac) * cap.det());
}

}  // namespace detail

/// Determinant of the full cyclic matrix. Never inverts the 2x2 corner, so
/// a singular corner block is not an error; a genuinely singular matrix
/// yields zero.
template <ScalarField S>
S det_cyclic(const CyclicHeptaBands<S>& c, const ZeroTest& zt = {}) {
    if constexpr (std::is_same_v<S, Rational>) {
        try {
            return detail::det_cyclic_impl(c, zt);
        } catch (const PivotBreakdown&) {
            return to_rational(detail::det_cyclic_impl(detail::lift_cyclic(c), ZeroTest{}));
        }
    } else {
        return detail::det_cyclic_impl(c, zt);
    }
}

}  // namespace heptax
