#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heptax/cyclic_smw.hpp"
#include "heptax/dense_oracle.hpp"
#include "heptax/kernels.hpp"
#include "test_support.hpp"

using namespace heptax;
using namespace heptax::testing;

// Every parallel kernel partitions work by row (or by right-hand side) with
// each unit computed exactly as in the serial reference, so results must be
// bitwise identical, not merely close.

TEST_CASE("cyclic matvec: parallel equals serial bitwise") {
    GenSpec spec{SystemKind::Cyclic, 20001, 1, GenProfile::Uniform, 0};
    auto [c, rhs] = generate_cyclic<double>(spec);
    auto serial = matvec(c, rhs, Exec::Serial);
    auto parallel = matvec(c, rhs, Exec::Parallel);
    CHECK(serial == parallel);
}

TEST_CASE("hepta matvec: parallel equals serial bitwise") {
    GenSpec spec{SystemKind::Hepta, 10007, 2, GenProfile::Uniform, 0};
    auto [h, rhs] = generate_hepta<double>(spec);
    auto serial = matvec(h, rhs, Exec::Serial);
    auto parallel = matvec(h, rhs, Exec::Parallel);
    CHECK(serial == parallel);
}

TEST_CASE("matrix norms agree across execution policies") {
    GenSpec spec{SystemKind::Cyclic, 4096, 3, GenProfile::DiagonallyDominant, 0};
    auto [c, rhs] = generate_cyclic<double>(spec);
    (void)rhs;
    CHECK(mat_inf_norm(c, Exec::Serial) == mat_inf_norm(c, Exec::Parallel));
}

TEST_CASE("residuals agree across execution policies") {
    GenSpec spec{SystemKind::Cyclic, 5000, 4, GenProfile::DiagonallyDominant, 0};
    auto [c, rhs] = generate_cyclic<double>(spec);
    auto rep = solve_cyclic(c, rhs);
    CHECK(residual_inf(c, rep.x, rhs, Exec::Serial) == residual_inf(c, rep.x, rhs, Exec::Parallel));
}

TEST_CASE("solve_multi: parallel equals serial bitwise") {
    GenSpec spec{SystemKind::Hepta, 500, 5, GenProfile::DiagonallyDominant, 0};
    auto [h, rhs] = generate_hepta<double>(spec);
    auto fac = factorize(h);
    std::vector<std::vector<double>> many;
    for (int i = 0; i < 8; ++i) {
        many.push_back(rhs);
        for (auto& v : many.back()) v += i;
    }
    CHECK(solve_multi(fac, many, Exec::Serial) == solve_multi(fac, many, Exec::Parallel));
}

TEST_CASE("the three border solves are order independent") {
    GenSpec spec{SystemKind::Cyclic, 50000, 6, GenProfile::DiagonallyDominant, 0};
    auto [c, rhs] = generate_cyclic<double>(spec);
    auto part = partition(c, rhs);
    auto rhat = reduce_rhs(part);
    auto serial = solve_three(part, rhat, ZeroTest{}, Exec::Serial);
    for (int round = 0; round < 4; ++round) {
        auto parallel = solve_three(part, rhat, ZeroTest{}, Exec::Parallel);
        CHECK(serial.y == parallel.y);
        CHECK(serial.q1 == parallel.q1);
        CHECK(serial.q2 == parallel.q2);
    }
}

TEST_CASE("full cyclic solve is identical under the parallel policy") {
    GenSpec spec{SystemKind::Cyclic, 30000, 7, GenProfile::DiagonallyDominant, 0};
    auto [c, rhs] = generate_cyclic<double>(spec);
    SolveOptions par;
    par.exec = Exec::Parallel;
    auto serial = solve_cyclic(c, rhs);
    auto parallel = solve_cyclic(c, rhs, par);
    CHECK(serial.x == parallel.x);
    CHECK(serial.det == parallel.det);
}

TEST_CASE("exact scalars also run under the parallel policy") {
    GenSpec spec{SystemKind::Cyclic, 16, 8, GenProfile::DiagonallyDominant, 0};
    auto [c, rhs] = generate_cyclic<Rational>(spec);
    SolveOptions par;
    par.exec = Exec::Parallel;
    auto serial = solve_cyclic(c, rhs);
    auto parallel = solve_cyclic(c, rhs, par);
    CHECK(serial.x == parallel.x);
}
