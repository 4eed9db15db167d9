#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "heptax/band.hpp"
#include "heptax/dense_oracle.hpp"

namespace heptax {

enum class FileMode { F64, Rational };

/// Band arrays exactly as they appear in a system file, keyed d, a, A, C,
/// b, B, D. For heptadiagonal systems the sub-diagonal arrays start at
/// their first structurally present row; cyclic arrays all have length n.
template <class S>
struct RawSystem {
    SystemKind kind = SystemKind::Cyclic;
    std::size_t order = 0;
    std::vector<S> d, a, A, C, b, B, D;
    std::vector<S> rhs;

    HeptaBands<S> to_hepta() const;
    CyclicHeptaBands<S> to_cyclic() const;
};

template <class S>
HeptaBands<S> RawSystem<S>::to_hepta() const {
    HeptaBands<S> h;
    h.order = order;
    h.diag = d;
    h.super1 = a;
    h.super2 = A;
    h.super3 = C;
    h.sub1 = b;
    h.sub2 = B;
    h.sub3 = D;
    validate(h);
    return h;
}

template <class S>
CyclicHeptaBands<S> RawSystem<S>::to_cyclic() const {
    CyclicHeptaBands<S> c;
    c.order = order;
    c.diag = d;
    c.super1 = a;
    c.super2 = A;
    c.super3 = C;
    c.sub1 = b;
    c.sub2 = B;
    c.sub3 = D;
    validate(c);
    return c;
}

template <class S, class Bands>
RawSystem<S> make_raw(const Bands& bands, std::vector<S> rhs) {
    RawSystem<S> raw;
    raw.kind = requires { bands.col(0, 1); } ? SystemKind::Cyclic : SystemKind::Hepta;
    raw.order = bands.order;
    raw.d = bands.diag;
    raw.a = bands.super1;
    raw.A = bands.super2;
    raw.C = bands.super3;
    raw.b = bands.sub1;
    raw.B = bands.sub2;
    raw.D = bands.sub3;
    raw.rhs = std::move(rhs);
    return raw;
}

struct SystemFile {
    FileMode mode = FileMode::F64;
    std::variant<RawSystem<double>, RawSystem<Rational>> data;
};

struct SolutionFile {
    FileMode mode = FileMode::F64;
    std::variant<std::vector<double>, std::vector<Rational>> x;
};

/// Lossless round trip: rational entries as "p/q" strings, float64 entries
/// as shortest round-trip decimals. Rational files also accept plain JSON
/// integers.
SystemFile load_system(const std::string& path);
void save_system(const std::string& path, const RawSystem<double>& sys);
void save_system(const std::string& path, const RawSystem<Rational>& sys);

SolutionFile load_solution(const std::string& path);
void save_solution(const std::string& path, const std::vector<double>& x);
void save_solution(const std::string& path, const std::vector<Rational>& x);

/// Mode conversions for the CLI: rational -> double rounds; double ->
/// rational is exact (binary fractions).
RawSystem<double> to_f64(const RawSystem<Rational>& sys);
RawSystem<Rational> to_exact(const RawSystem<double>& sys);

/// Dense MatrixMarket array export (debug aid), values rendered as doubles.
void dump_dense_matrix_market(const std::string& path, const SystemFile& file);

}  // namespace heptax
