#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "heptax/dense_matrix.hpp"
#include "heptax/scalar.hpp"

namespace heptax {

/// Seven-diagonal band storage for an m x m matrix, m >= 4. Bands are
/// indexed by row, matching the recurrences: sub-diagonal arrays start at
/// their first structurally present row.
///
///   diag    length m      rows 0..m-1, column r
///   super1  length m-1    rows 0..m-2, column r+1
///   super2  length m-2    rows 0..m-3, column r+2
///   super3  length m-3    rows 0..m-4, column r+3
///   sub1    length m-1    rows 1..m-1, column r-1
///   sub2    length m-2    rows 2..m-1, column r-2
///   sub3    length m-3    rows 3..m-1, column r-3
template <ScalarField S>
struct HeptaBands {
    std::size_t order = 0;
    std::vector<S> diag, super1, super2, super3, sub1, sub2, sub3;

    // Row-indexed accessors; callers stay within each band's stated rows.
    const S& d(std::size_t r) const { return diag[r]; }
    const S& a1(std::size_t r) const { return super1[r]; }
    const S& a2(std::size_t r) const { return super2[r]; }
    const S& a3(std::size_t r) const { return super3[r]; }
    const S& b1(std::size_t r) const { return sub1[r - 1]; }
    const S& b2(std::size_t r) const { return sub2[r - 2]; }
    const S& b3(std::size_t r) const { return sub3[r - 3]; }
};

/// Cyclic (periodic) variant: all seven sequences have length n, n >= 8, and
/// rows wrap modulo n. The first/second off-diagonals wrap one and two rows
/// deep; the slots that would wrap three deep (sub3 of rows 0..2, super3 of
/// rows n-3..n-1) cannot be carried by the two-column bordered form and must
/// hold zeros (enforced by validate).
template <ScalarField S>
struct CyclicHeptaBands {
    std::size_t order = 0;
    std::vector<S> diag, super1, super2, super3, sub1, sub2, sub3;

    const S& d(std::size_t r) const { return diag[r]; }
    const S& a1(std::size_t r) const { return super1[r]; }
    const S& a2(std::size_t r) const { return super2[r]; }
    const S& a3(std::size_t r) const { return super3[r]; }
    const S& b1(std::size_t r) const { return sub1[r]; }
    const S& b2(std::size_t r) const { return sub2[r]; }
    const S& b3(std::size_t r) const { return sub3[r]; }

    std::size_t col(std::size_t r, long offset) const {
        const long n = static_cast<long>(order);
        long c = (static_cast<long>(r) + offset) % n;
        if (c < 0) c += n;
        return static_cast<std::size_t>(c);
    }
};

namespace detail {

inline void check_len(std::size_t got, std::size_t want, const char* band) {
    if (got != want)
        throw BadBandLength(std::string(band) + " has length " + std::to_string(got) +
                            ", expected " + std::to_string(want));
}

}  // namespace detail

template <ScalarField S>
void validate(const HeptaBands<S>& h) {
    if (h.order < 4)
        throw OrderTooSmall("heptadiagonal order " + std::to_string(h.order) + " < 4");
    const std::size_t m = h.order;
    detail::check_len(h.diag.size(), m, "diag");
    detail::check_len(h.super1.size(), m - 1, "super1");
    detail::check_len(h.super2.size(), m - 2, "super2");
    detail::check_len(h.super3.size(), m - 3, "super3");
    detail::check_len(h.sub1.size(), m - 1, "sub1");
    detail::check_len(h.sub2.size(), m - 2, "sub2");
    detail::check_len(h.sub3.size(), m - 3, "sub3");
}

template <ScalarField S>
void validate(const CyclicHeptaBands<S>& c) {
    if (c.order < 8)
        throw OrderTooSmall("cyclic order " + std::to_string(c.order) + " < 8");
    const std::size_t n = c.order;
    detail::check_len(c.diag.size(), n, "diag");
    detail::check_len(c.super1.size(), n, "super1");
    detail::check_len(c.super2.size(), n, "super2");
    detail::check_len(c.super3.size(), n, "super3");
    detail::check_len(c.sub1.size(), n, "sub1");
    detail::check_len(c.sub2.size(), n, "sub2");
    detail::check_len(c.sub3.size(), n, "sub3");
    const S zero = scalar_traits<S>::zero();
    for (std::size_t r = 0; r < 3; ++r)
        if (!(c.sub3[r] == zero))
            throw BadBandStructure("sub3 row " + std::to_string(r + 1) +
                                   " must be zero in the cyclic structure");
    for (std::size_t r = n - 3; r < n; ++r)
        if (!(c.super3[r] == zero))
            throw BadBandStructure("super3 row " + std::to_string(r + 1) +
                                   " must be zero in the cyclic structure");
}

template <ScalarField S>
DenseMatrix<S> to_dense(const HeptaBands<S>& h) {
    validate(h);
    const std::size_t m = h.order;
    DenseMatrix<S> out(m);
    for (std::size_t r = 0; r < m; ++r) {
        out.at(r, r) = h.d(r);
        if (r + 1 < m) out.at(r, r + 1) = h.a1(r);
        if (r + 2 < m) out.at(r, r + 2) = h.a2(r);
        if (r + 3 < m) out.at(r, r + 3) = h.a3(r);
        if (r >= 1) out.at(r, r - 1) = h.b1(r);
        if (r >= 2) out.at(r, r - 2) = h.b2(r);
        if (r >= 3) out.at(r, r - 3) = h.b3(r);
    }
    return out;
}

template <ScalarField S>
DenseMatrix<S> to_dense(const CyclicHeptaBands<S>& c) {
    validate(c);
    const std::size_t n = c.order;
    DenseMatrix<S> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        out.at(r, r) = c.d(r);
        out.at(r, c.col(r, 1)) = c.a1(r);
        out.at(r, c.col(r, 2)) = c.a2(r);
        out.at(r, c.col(r, 3)) = c.a3(r);
        out.at(r, c.col(r, -1)) = c.b1(r);
        out.at(r, c.col(r, -2)) = c.b2(r);
        out.at(r, c.col(r, -3)) = c.b3(r);
    }
    return out;
}

/// Column/row of the border blocks: exactly four structural entries.
template <ScalarField S>
struct SparseFour {
    std::array<std::pair<std::size_t, S>, 4> entries;

    std::vector<S> dense(std::size_t len) const {
        std::vector<S> out(len, scalar_traits<S>::zero());
        for (const auto& [idx, val] : entries) out[idx] = val;
        return out;
    }

    S dot(const std::vector<S>& v) const {
        S acc = scalar_traits<S>::zero();
        for (const auto& [idx, val] : entries) acc = acc + val * v[idx];
        return acc;
    }

    /// out += s * this
    void axpy(const S& s, std::vector<S>& out) const {
        for (const auto& [idx, val] : entries) out[idx] = out[idx] + s * val;
    }
};

/// 2x2 corner block utilities; inversion by adjugate over the exact or
/// floating field, with an explicit singularity test first.
template <ScalarField S>
struct Mat2 {
    S a00, a01, a10, a11;

    S det() const { return a00 * a11 - a01 * a10; }

    bool solve(const std::array<S, 2>& rhs, std::array<S, 2>& out, const ZeroTest& zt) const {
        const S dt = det();
        if (scalar_traits<S>::is_zero(dt, zt)) return false;
        out[0] = (a11 * rhs[0] - a01 * rhs[1]) / dt;
        out[1] = (a00 * rhs[1] - a10 * rhs[0]) / dt;
        return true;
    }
};

/// Bordered form of a cyclic system: leading banded block, 2x2 corner,
/// two sparse border columns/rows, and the split right-hand side. Blocks
/// are copies, so the three banded solves can run concurrently against
/// read-only inputs.
template <ScalarField S>
struct CyclicPartition {
    HeptaBands<S> m1;            // leading (n-2) x (n-2) block
    Mat2<S> m2;                  // trailing 2x2 corner
    SparseFour<S> v1, v2;        // border columns (columns n-2, n-1)
    SparseFour<S> ut1, ut2;      // border rows (rows n-2, n-1)
    std::vector<S> rhs_head;     // first n-2 right-hand side entries
    std::array<S, 2> rhs_tail;   // last two right-hand side entries
};

template <ScalarField S>
CyclicPartition<S> partition(const CyclicHeptaBands<S>& c, const std::vector<S>& rhs) {
    validate(c);
    const std::size_t n = c.order;
    if (rhs.size() != n)
        throw BadBandLength("rhs has length " + std::to_string(rhs.size()) +
                            ", expected " + std::to_string(n));
    const std::size_t k = n - 2;

    CyclicPartition<S> p;
    p.m1.order = k;
    p.m1.diag.assign(c.diag.begin(), c.diag.begin() + k);
    p.m1.super1.assign(c.super1.begin(), c.super1.begin() + (k - 1));
    p.m1.super2.assign(c.super2.begin(), c.super2.begin() + (k - 2));
    p.m1.super3.assign(c.super3.begin(), c.super3.begin() + (k - 3));
    p.m1.sub1.assign(c.sub1.begin() + 1, c.sub1.begin() + k);
    p.m1.sub2.assign(c.sub2.begin() + 2, c.sub2.begin() + k);
    p.m1.sub3.assign(c.sub3.begin() + 3, c.sub3.begin() + k);

    p.m2 = Mat2<S>{c.d(n - 2), c.a1(n - 2), c.b1(n - 1), c.d(n - 1)};

    // Column n-2 (r, offsets): row 0 wrap of sub2; rows k-3..k-1 in-band.
    p.v1.entries = {{{0, c.b2(0)},
                     {k - 3, c.a3(k - 3)},
                     {k - 2, c.a2(k - 2)},
                     {k - 1, c.a1(k - 1)}}};
    // Column n-1: rows 0, 1 wraps of sub1/sub2; rows k-2, k-1 in-band.
    p.v2.entries = {{{0, c.b1(0)},
                     {1, c.b2(1)},
                     {k - 2, c.a3(k - 2)},
                     {k - 1, c.a2(k - 1)}}};
    // Row n-2 restricted to the leading block: wrap of super2, then in-band.
    p.ut1.entries = {{{0, c.a2(n - 2)},
                      {k - 3, c.b3(n - 2)},
                      {k - 2, c.b2(n - 2)},
                      {k - 1, c.b1(n - 2)}}};
    // Row n-1: wraps of super1/super2, then in-band.
    p.ut2.entries = {{{0, c.a1(n - 1)},
                      {1, c.a2(n - 1)},
                      {k - 2, c.b3(n - 1)},
                      {k - 1, c.b2(n - 1)}}};

    p.rhs_head.assign(rhs.begin(), rhs.begin() + k);
    p.rhs_tail = {rhs[n - 2], rhs[n - 1]};
    return p;
}

/// Reassembles the full dense matrix from the partition blocks; the result
/// must match to_dense of the source bands entrywise.
template <ScalarField S>
DenseMatrix<S> reassemble(const CyclicPartition<S>& p) {
    const std::size_t k = p.m1.order;
    const std::size_t n = k + 2;
    DenseMatrix<S> out(n);
    DenseMatrix<S> lead = to_dense(p.m1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.at(i, j) = lead.at(i, j);
    for (const auto& [idx, val] : p.v1.entries) out.at(idx, n - 2) = val;
    for (const auto& [idx, val] : p.v2.entries) out.at(idx, n - 1) = val;
    for (const auto& [idx, val] : p.ut1.entries) out.at(n - 2, idx) = val;
    for (const auto& [idx, val] : p.ut2.entries) out.at(n - 1, idx) = val;
    out.at(n - 2, n - 2) = p.m2.a00;
    out.at(n - 2, n - 1) = p.m2.a01;
    out.at(n - 1, n - 2) = p.m2.a10;
    out.at(n - 1, n - 1) = p.m2.a11;
    return out;
}

}  // namespace heptax
