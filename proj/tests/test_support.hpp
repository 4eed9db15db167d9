#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "heptax/band.hpp"
#include "heptax/scalar.hpp"

namespace heptax::testing {

template <ScalarField S>
S from_int(long v) {
    if constexpr (std::is_same_v<S, double>)
        return static_cast<double>(v);
    else if constexpr (std::is_same_v<S, Rational>)
        return Rational(v);
    else
        return S{Rational(v)};
}

template <ScalarField S>
std::vector<S> ivec(std::initializer_list<long> values) {
    std::vector<S> out;
    out.reserve(values.size());
    for (long v : values) out.push_back(from_int<S>(v));
    return out;
}

inline std::vector<Rational> rvec(std::initializer_list<std::string_view> values) {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(Rational::from_string(v));
    return out;
}

/// Reference 10x10 cyclic system with solution (1, 2, ..., 10) and exactly
/// representable intermediates; every expected value below has been
/// cross-checked by hand against residuals of this fixture.
template <ScalarField S>
CyclicHeptaBands<S> reference_bands() {
    CyclicHeptaBands<S> c;
    c.order = 10;
    c.diag = ivec<S>({1, 1, -1, 1, 1, -1, 2, 1, 4, 1});
    c.super1 = ivec<S>({-1, 1, 1, 5, 1, -1, 3, 3, -1, 2});
    c.super2 = ivec<S>({1, 1, 2, -6, 1, -1, 1, 5, 3, 4});
    c.super3 = ivec<S>({-2, -1, 3, 0, 2, 1, -3, 0, 0, 0});
    c.sub1 = ivec<S>({-1, 1, 1, 3, 1, -1, 2, 1, 3, 4});
    c.sub2 = ivec<S>({2, 1, 2, -2, 1, -1, 2, -2, 1, 3});
    c.sub3 = ivec<S>({0, 0, 0, 2, 1, -1, 2, -2, 3, 2});
    return c;
}

template <ScalarField S>
std::vector<S> reference_rhs() {
    return ivec<S>({2, 15, 33, 0, 43, -24, 47, 70, 78, 94});
}

/// Dense form of the fixture, row by row.
template <ScalarField S>
std::vector<std::vector<S>> reference_dense_rows() {
    return {
        ivec<S>({1, -1, 1, -2, 0, 0, 0, 0, 2, -1}),
        ivec<S>({1, 1, 1, 1, -1, 0, 0, 0, 0, 1}),
        ivec<S>({2, 1, -1, 1, 2, 3, 0, 0, 0, 0}),
        ivec<S>({2, -2, 3, 1, 5, -6, 0, 0, 0, 0}),
        ivec<S>({0, 1, 1, 1, 1, 1, 1, 2, 0, 0}),
        ivec<S>({0, 0, -1, -1, -1, -1, -1, -1, 1, 0}),
        ivec<S>({0, 0, 0, 2, 2, 2, 2, 3, 1, -3}),
        ivec<S>({0, 0, 0, 0, -2, -2, 1, 1, 3, 5}),
        ivec<S>({3, 0, 0, 0, 0, 3, 1, 3, 4, -1}),
        ivec<S>({2, 4, 0, 0, 0, 0, 2, 3, 4, 1}),
    };
}

inline std::vector<Rational> reference_rhat() {
    return rvec({"-33", "7", "33", "0", "43", "-91/2", "99/2", "-69/2"});
}

inline std::vector<Rational> reference_y() {
    return rvec({"-2814/199", "3345/199", "2208/199", "1308/199", "2654/199", "4442/597",
                 "15739/597", "-7685/398"});
}

inline std::vector<Rational> reference_q1() {
    return rvec({"242/199", "-98/199", "-150/199", "-104/199", "-110/199", "-212/597",
                 "-184/597", "297/199"});
}

inline std::vector<Rational> reference_q2() {
    return rvec({"6/199", "861/199", "-132/199", "-394/199", "142/199", "-895/597", "4630/597",
                 "-861/199"});
}

}  // namespace heptax::testing
