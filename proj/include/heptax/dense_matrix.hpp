#pragma once

#include <cstddef>
#include <vector>

#include "heptax/scalar.hpp"

namespace heptax {

/// Row-major square matrix of scalars. Shared container for densification
/// and the brute-force reference solver.
template <ScalarField S>
struct DenseMatrix {
    std::size_t order = 0;
    std::vector<S> entries;  // order * order, row-major

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n)
        : order(n), entries(n * n, scalar_traits<S>::zero()) {}

    S& at(std::size_t i, std::size_t j) { return entries[i * order + j]; }
    const S& at(std::size_t i, std::size_t j) const { return entries[i * order + j]; }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = scalar_traits<S>::one();
        return m;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.order == b.order && a.entries == b.entries;
    }
};

template <ScalarField S>
DenseMatrix<S> matmul(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    DenseMatrix<S> c(a.order);
    for (std::size_t i = 0; i < a.order; ++i)
        for (std::size_t k = 0; k < a.order; ++k) {
            const S& aik = a.at(i, k);
            if (scalar_traits<S>::is_zero(aik, ZeroTest{})) continue;
            for (std::size_t j = 0; j < a.order; ++j)
                c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
        }
    return c;
}

}  // namespace heptax
