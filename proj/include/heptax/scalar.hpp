#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string_view>
#include <vector>

#include "heptax/errors.hpp"
#include "heptax/rational.hpp"
#include "heptax/t_rational.hpp"

namespace heptax {

enum class ScalarMode { Float64, Rational, SymbolicT };

constexpr std::string_view to_string(ScalarMode m) {
    switch (m) {
        case ScalarMode::Float64: return "f64";
        case ScalarMode::Rational: return "rational";
        case ScalarMode::SymbolicT: return "symbolic";
    }
    return "?";
}

/// Zero test used by the pivot checks. Exact modes ignore the tolerance;
/// float64 compares |a| <= tolerance (default 0, the exact test).
struct ZeroTest {
    double tolerance = 0.0;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr ScalarMode mode = ScalarMode::Float64;
    static constexpr bool exact = false;
    static constexpr bool ordered = true;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double v, const ZeroTest& zt) { return std::fabs(v) <= zt.tolerance; }
    static double abs(double v) { return std::fabs(v); }
    /// Zero pivots cannot be repaired in hardware floats.
    [[noreturn]] static double substitute_pivot(std::size_t row) {
        throw BreakdownInFloatMode(row);
    }
    static double finalize(const double& v) { return v; }
};

template <>
struct scalar_traits<Rational> {
    static constexpr ScalarMode mode = ScalarMode::Rational;
    static constexpr bool exact = true;
    static constexpr bool ordered = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v, const ZeroTest&) { return v.is_zero(); }
    static Rational abs(const Rational& v) { return v.abs(); }
    /// Promotes the whole computation to symbolic mode (caught by drivers).
    [[noreturn]] static Rational substitute_pivot(std::size_t row) {
        throw PivotBreakdown{row};
    }
    static Rational finalize(const Rational& v) { return v; }
};

template <>
struct scalar_traits<TRational> {
    static constexpr ScalarMode mode = ScalarMode::SymbolicT;
    static constexpr bool exact = true;
    static constexpr bool ordered = false;
    static TRational zero() { return TRational(); }
    static TRational one() { return TRational(Rational(1)); }
    static bool is_zero(const TRational& v, const ZeroTest&) { return v.is_zero(); }
    static TRational substitute_pivot(std::size_t) { return TRational::t(); }
    /// The limit t -> 0, kept in symbolic form so signatures stay uniform.
    static TRational finalize(const TRational& v) { return TRational(v.at_zero()); }
};

template <class S>
concept ScalarField = requires(S a, S b, const ZeroTest& zt, std::size_t row) {
    { scalar_traits<S>::zero() } -> std::convertible_to<S>;
    { scalar_traits<S>::one() } -> std::convertible_to<S>;
    { scalar_traits<S>::is_zero(a, zt) } -> std::convertible_to<bool>;
    { scalar_traits<S>::finalize(a) } -> std::convertible_to<S>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a* b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
};

/// Scalars with a magnitude, for pivot selection and norms.
template <class S>
concept OrderedScalarField = ScalarField<S> && scalar_traits<S>::ordered;

inline TRational to_symbolic(const Rational& v) { return TRational(v); }

inline std::vector<TRational> to_symbolic(const std::vector<Rational>& v) {
    std::vector<TRational> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

/// Reads back symbolic constants (e.g. solutions already evaluated at t=0).
inline Rational to_rational(const TRational& v) { return v.constant_value(); }

inline std::vector<Rational> to_rational(const std::vector<TRational>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.constant_value());
    return out;
}

}  // namespace heptax
