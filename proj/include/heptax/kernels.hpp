#pragma once

#include <cstdint>
#include <vector>

#include "heptax/band.hpp"
#include "heptax/hepta_lu.hpp"

namespace heptax {

/// Row-parallel band kernels. Each row's dot product is computed serially,
/// so the Serial and Parallel paths produce bitwise-identical results; the
/// serial path is the reference the tests compare against.

template <ScalarField S>
std::vector<S> matvec(const HeptaBands<S>& h, const std::vector<S>& x,
                      Exec exec = Exec::Serial) {
    const std::size_t m = h.order;
    if (x.size() != m) throw BadBandLength("matvec operand length mismatch");
    std::vector<S> y(m, scalar_traits<S>::zero());
    auto row_dot = [&](std::size_t r) {
        S acc = h.d(r) * x[r];
        if (r >= 3) acc = acc + h.b3(r) * x[r - 3];
        if (r >= 2) acc = acc + h.b2(r) * x[r - 2];
        if (r >= 1) acc = acc + h.b1(r) * x[r - 1];
        if (r + 1 < m) acc = acc + h.a1(r) * x[r + 1];
        if (r + 2 < m) acc = acc + h.a2(r) * x[r + 2];
        if (r + 3 < m) acc = acc + h.a3(r) * x[r + 3];
        return acc;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(m); ++r)
            y[static_cast<std::size_t>(r)] = row_dot(static_cast<std::size_t>(r));
    } else {
        for (std::size_t r = 0; r < m; ++r) y[r] = row_dot(r);
    }
    return y;
}

template <ScalarField S>
std::vector<S> matvec(const CyclicHeptaBands<S>& c, const std::vector<S>& x,
                      Exec exec = Exec::Serial) {
    const std::size_t n = c.order;
    if (x.size() != n) throw BadBandLength("matvec operand length mismatch");
    std::vector<S> y(n, scalar_traits<S>::zero());
    auto row_dot = [&](std::size_t r) {
        S acc = c.d(r) * x[r];
        acc = acc + c.b3(r) * x[c.col(r, -3)];
        acc = acc + c.b2(r) * x[c.col(r, -2)];
        acc = acc + c.b1(r) * x[c.col(r, -1)];
        acc = acc + c.a1(r) * x[c.col(r, 1)];
        acc = acc + c.a2(r) * x[c.col(r, 2)];
        acc = acc + c.a3(r) * x[c.col(r, 3)];
        return acc;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r)
            y[static_cast<std::size_t>(r)] = row_dot(static_cast<std::size_t>(r));
    } else {
        for (std::size_t r = 0; r < n; ++r) y[r] = row_dot(r);
    }
    return y;
}

template <OrderedScalarField S>
S vec_inf_norm(const std::vector<S>& v) {
    S best = scalar_traits<S>::zero();
    for (const S& x : v) {
        S mag = scalar_traits<S>::abs(x);
        if (best < mag) best = mag;
    }
    return best;
}

template <OrderedScalarField S, class Bands>
S band_inf_norm_impl(const Bands& bands, Exec exec) {
    std::vector<S> x(bands.order, scalar_traits<S>::one());
    // Row sums of |entries| = A_abs * ones; reuse the matvec row structure.
    Bands abs_bands = bands;
    auto absify = [](std::vector<S>& band) {
        for (S& v : band) v = scalar_traits<S>::abs(v);
    };
    absify(abs_bands.diag);
    absify(abs_bands.super1);
    absify(abs_bands.super2);
    absify(abs_bands.super3);
    absify(abs_bands.sub1);
    absify(abs_bands.sub2);
    absify(abs_bands.sub3);
    return vec_inf_norm(matvec(abs_bands, x, exec));
}

template <OrderedScalarField S>
S mat_inf_norm(const HeptaBands<S>& h, Exec exec = Exec::Serial) {
    return band_inf_norm_impl<S>(h, exec);
}

template <OrderedScalarField S>
S mat_inf_norm(const CyclicHeptaBands<S>& c, Exec exec = Exec::Serial) {
    return band_inf_norm_impl<S>(c, exec);
}

template <OrderedScalarField S, class Bands>
S residual_inf(const Bands& bands, const std::vector<S>& x, const std::vector<S>& rhs,
               Exec exec = Exec::Serial) {
    std::vector<S> hx = matvec(bands, x, exec);
    for (std::size_t i = 0; i < hx.size(); ++i) hx[i] = hx[i] - rhs[i];
    return vec_inf_norm(hx);
}

/// ||Hx - r|| / (||H|| ||x|| + ||r||), all infinity norms.
template <OrderedScalarField S, class Bands>
S relative_residual(const Bands& bands, const std::vector<S>& x, const std::vector<S>& rhs,
                    Exec exec = Exec::Serial) {
    S res = residual_inf(bands, x, rhs, exec);
    S denom = mat_inf_norm(bands, exec) * vec_inf_norm(x) + vec_inf_norm(rhs);
    if (scalar_traits<S>::is_zero(denom, ZeroTest{})) return res;
    return res / denom;
}

}  // namespace heptax
