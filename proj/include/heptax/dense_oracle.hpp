#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "heptax/band.hpp"
#include "heptax/dense_matrix.hpp"

namespace heptax {

/// Brute-force ground truth: dense Gaussian elimination with partial
/// pivoting, O(n^3). Deliberately shares no code or data layout with the
/// banded solvers so it can catch recurrence bugs.

template <OrderedScalarField S>
std::vector<S> dense_solve(DenseMatrix<S> a, std::vector<S> rhs) {
    const std::size_t n = a.order;
    if (rhs.size() != n) throw BadBandLength("oracle rhs length mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        S best = scalar_traits<S>::abs(a.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            S mag = scalar_traits<S>::abs(a.at(r, col));
            if (best < mag) {
                best = mag;
                pivot = r;
            }
        }
        if (scalar_traits<S>::is_zero(a.at(pivot, col), ZeroTest{}))
            throw SingularMatrix();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (scalar_traits<S>::is_zero(a.at(r, col), ZeroTest{})) continue;
            S factor = a.at(r, col) / a.at(col, col);
            a.at(r, col) = scalar_traits<S>::zero();
            for (std::size_t j = col + 1; j < n; ++j)
                a.at(r, j) = a.at(r, j) - factor * a.at(col, j);
            rhs[r] = rhs[r] - factor * rhs[col];
        }
    }
    std::vector<S> x(n, scalar_traits<S>::zero());
    for (std::size_t i = n; i-- > 0;) {
        S acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc = acc - a.at(i, j) * x[j];
        x[i] = acc / a.at(i, i);
    }
    return x;
}

/// Determinant via elimination with sign tracking; returns zero for a
/// singular matrix instead of erroring.
template <OrderedScalarField S>
S dense_det(DenseMatrix<S> a) {
    const std::size_t n = a.order;
    S det = scalar_traits<S>::one();
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        S best = scalar_traits<S>::abs(a.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            S mag = scalar_traits<S>::abs(a.at(r, col));
            if (best < mag) {
                best = mag;
                pivot = r;
            }
        }
        if (scalar_traits<S>::is_zero(a.at(pivot, col), ZeroTest{}))
            return scalar_traits<S>::zero();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
            negate = !negate;
        }
        det = det * a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (scalar_traits<S>::is_zero(a.at(r, col), ZeroTest{})) continue;
            S factor = a.at(r, col) / a.at(col, col);
            for (std::size_t j = col + 1; j < n; ++j)
                a.at(r, j) = a.at(r, j) - factor * a.at(col, j);
        }
    }
    return negate ? -det : det;
}

// ---------------------------------------------------------------------------
// Reproducible random systems for property tests and benchmarks.

enum class GenProfile { DiagonallyDominant, Uniform, ZeroLeadingPivots };

enum class SystemKind { Hepta, Cyclic };

struct GenSpec {
    SystemKind kind = SystemKind::Cyclic;
    std::size_t order = 0;
    std::uint64_t seed = 0;
    GenProfile profile = GenProfile::DiagonallyDominant;
    int zero_pivots = 0;  // k for ZeroLeadingPivots, 1..3
};

inline GenProfile parse_profile(const std::string& name, int& k_out) {
    if (name == "diagonally-dominant") return GenProfile::DiagonallyDominant;
    if (name == "uniform") return GenProfile::Uniform;
    const std::string prefix = "zero-leading-pivots(";
    if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
        const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '3') {
            k_out = digits[0] - '0';
            return GenProfile::ZeroLeadingPivots;
        }
    }
    throw ParseError("unknown profile \"" + name + "\"");
}

namespace detail {

/// mt19937_64 has a standard-specified sequence; avoid std distributions,
/// whose output is implementation-defined.
inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <class S>
struct draw;

template <>
struct draw<Rational> {
    // Small numerators/denominators keep exact-arithmetic growth in check.
    static Rational value(std::mt19937_64& rng) {
        return Rational(rand_range(rng, -16, 16), rand_range(rng, 1, 16));
    }
    static Rational nonzero(std::mt19937_64& rng) {
        for (;;) {
            Rational v = value(rng);
            if (!v.is_zero()) return v;
        }
    }
    static Rational margin(std::mt19937_64& rng) {
        return Rational(rand_range(rng, 4, 8), 4);  // in [1, 2]
    }
};

template <>
struct draw<double> {
    static double value(std::mt19937_64& rng) {
        return static_cast<double>(rand_range(rng, -32, 32)) / 4.0;
    }
    static double nonzero(std::mt19937_64& rng) {
        for (;;) {
            double v = value(rng);
            if (v != 0.0) return v;
        }
    }
    static double margin(std::mt19937_64& rng) {
        return 1.0 + static_cast<double>(rand_range(rng, 0, 4)) / 4.0;
    }
};

template <class S, class Bands>
void apply_zero_pivot_pattern(Bands& h, int k) {
    // Forces the first k factorization pivots to vanish identically while
    // leaving the rest generic: pivot r depends only on rows <= r, and
    // clearing these entries zeroes the leading recurrence terms.
    const S z = scalar_traits<S>::zero();
    h.diag[0] = z;
    if (k >= 2) {
        h.diag[1] = z;
        h.super1[0] = z;
    }
    if (k >= 3) {
        h.diag[2] = z;
        h.super1[1] = z;
        h.super2[0] = z;
    }
}

}  // namespace detail

template <OrderedScalarField S>
std::pair<HeptaBands<S>, std::vector<S>> generate_hepta(const GenSpec& spec) {
    using D = detail::draw<S>;
    const std::size_t m = spec.order;
    if (m < 4) throw OrderTooSmall("generated heptadiagonal order must be >= 4");
    std::mt19937_64 rng(spec.seed);

    const int max_attempts = 64;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        HeptaBands<S> h;
        h.order = m;
        auto fill = [&](std::vector<S>& band, std::size_t len) {
            band.clear();
            band.reserve(len);
            for (std::size_t i = 0; i < len; ++i) band.push_back(D::value(rng));
        };
        fill(h.diag, m);
        fill(h.super1, m - 1);
        fill(h.super2, m - 2);
        fill(h.super3, m - 3);
        fill(h.sub1, m - 1);
        fill(h.sub2, m - 2);
        fill(h.sub3, m - 3);

        if (spec.profile == GenProfile::DiagonallyDominant) {
            for (std::size_t r = 0; r < m; ++r) {
                S sum = scalar_traits<S>::zero();
                if (r + 1 < m) sum = sum + scalar_traits<S>::abs(h.a1(r));
                if (r + 2 < m) sum = sum + scalar_traits<S>::abs(h.a2(r));
                if (r + 3 < m) sum = sum + scalar_traits<S>::abs(h.a3(r));
                if (r >= 1) sum = sum + scalar_traits<S>::abs(h.b1(r));
                if (r >= 2) sum = sum + scalar_traits<S>::abs(h.b2(r));
                if (r >= 3) sum = sum + scalar_traits<S>::abs(h.b3(r));
                S mag = sum + D::margin(rng);
                h.diag[r] = detail::rand_range(rng, 0, 1) ? mag : -mag;
            }
        } else if (spec.profile == GenProfile::ZeroLeadingPivots) {
            detail::apply_zero_pivot_pattern<S>(h, spec.zero_pivots);
            if (scalar_traits<S>::is_zero(dense_det(to_dense(h)), ZeroTest{})) continue;
        }

        std::vector<S> rhs;
        rhs.reserve(m);
        for (std::size_t i = 0; i < m; ++i) rhs.push_back(D::value(rng));
        return {std::move(h), std::move(rhs)};
    }
    throw GenerationFailed("could not satisfy profile after " +
                           std::to_string(max_attempts) + " attempts");
}

template <OrderedScalarField S>
std::pair<CyclicHeptaBands<S>, std::vector<S>> generate_cyclic(const GenSpec& spec) {
    using D = detail::draw<S>;
    const std::size_t n = spec.order;
    if (n < 8) throw OrderTooSmall("generated cyclic order must be >= 8");
    std::mt19937_64 rng(spec.seed);

    const int max_attempts = 64;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        CyclicHeptaBands<S> c;
        c.order = n;
        auto fill = [&](std::vector<S>& band) {
            band.clear();
            band.reserve(n);
            for (std::size_t i = 0; i < n; ++i) band.push_back(D::value(rng));
        };
        fill(c.diag);
        fill(c.super1);
        fill(c.super2);
        fill(c.super3);
        fill(c.sub1);
        fill(c.sub2);
        fill(c.sub3);
        const S z = scalar_traits<S>::zero();
        c.sub3[0] = c.sub3[1] = c.sub3[2] = z;
        c.super3[n - 3] = c.super3[n - 2] = c.super3[n - 1] = z;

        if (spec.profile == GenProfile::DiagonallyDominant) {
            for (std::size_t r = 0; r < n; ++r) {
                S sum = scalar_traits<S>::abs(c.a1(r)) + scalar_traits<S>::abs(c.a2(r)) +
                        scalar_traits<S>::abs(c.a3(r)) + scalar_traits<S>::abs(c.b1(r)) +
                        scalar_traits<S>::abs(c.b2(r)) + scalar_traits<S>::abs(c.b3(r));
                S mag = sum + D::margin(rng);
                c.diag[r] = detail::rand_range(rng, 0, 1) ? mag : -mag;
            }
        } else if (spec.profile == GenProfile::ZeroLeadingPivots) {
            detail::apply_zero_pivot_pattern<S>(c, spec.zero_pivots);
            // The bordered method also needs the leading block nonsingular.
            if (scalar_traits<S>::is_zero(dense_det(to_dense(c)), ZeroTest{})) continue;
            std::vector<S> zero_rhs(n, z);
            auto part = partition(c, zero_rhs);
            if (scalar_traits<S>::is_zero(dense_det(to_dense(part.m1)), ZeroTest{})) continue;
        }

        std::vector<S> rhs;
        rhs.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rhs.push_back(D::value(rng));
        return {std::move(c), std::move(rhs)};
    }
    throw GenerationFailed("could not satisfy profile after " +
                           std::to_string(max_attempts) + " attempts");
}

}  // namespace heptax
