#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heptax/band.hpp"
#include "heptax/dense_oracle.hpp"
#include "test_support.hpp"

using namespace heptax;
using namespace heptax::testing;

namespace {

template <ScalarField S>
HeptaBands<S> identity_hepta(std::size_t m) {
    HeptaBands<S> h;
    h.order = m;
    h.diag.assign(m, scalar_traits<S>::one());
    h.super1.assign(m - 1, scalar_traits<S>::zero());
    h.super2.assign(m - 2, scalar_traits<S>::zero());
    h.super3.assign(m - 3, scalar_traits<S>::zero());
    h.sub1.assign(m - 1, scalar_traits<S>::zero());
    h.sub2.assign(m - 2, scalar_traits<S>::zero());
    h.sub3.assign(m - 3, scalar_traits<S>::zero());
    return h;
}

}  // namespace

TEST_CASE("validate accepts the minimum heptadiagonal order") {
    auto h = identity_hepta<Rational>(4);
    CHECK_NOTHROW(validate(h));
}

TEST_CASE("validate rejects small orders") {
    auto h = identity_hepta<Rational>(4);
    h.order = 3;
    CHECK_THROWS_AS(validate(h), OrderTooSmall);

    auto c = reference_bands<Rational>();
    c.order = 7;
    CHECK_THROWS_AS(validate(c), OrderTooSmall);
}

TEST_CASE("validate rejects wrong band lengths") {
    auto h = identity_hepta<Rational>(6);
    h.diag.pop_back();
    CHECK_THROWS_AS(validate(h), BadBandLength);

    auto c = reference_bands<Rational>();
    c.super2.push_back(Rational(1));
    CHECK_THROWS_AS(validate(c), BadBandLength);
}

TEST_CASE("validate rejects values in the uncarried wrap slots") {
    auto c = reference_bands<Rational>();
    c.sub3[1] = Rational(5);
    CHECK_THROWS_AS(validate(c), BadBandStructure);

    auto c2 = reference_bands<Rational>();
    c2.super3[9] = Rational(-1);
    CHECK_THROWS_AS(validate(c2), BadBandStructure);
}

TEST_CASE("to_dense of identity bands is the identity matrix") {
    auto h = identity_hepta<Rational>(8);
    CHECK(to_dense(h) == DenseMatrix<Rational>::identity(8));
}

TEST_CASE("to_dense of a heptadiagonal matrix is zero outside bandwidth 3") {
    GenSpec spec{SystemKind::Hepta, 12, 99, GenProfile::Uniform, 0};
    auto [h, rhs] = generate_hepta<Rational>(spec);
    (void)rhs;
    auto dense = to_dense(h);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            const long gap = i > j ? static_cast<long>(i - j) : static_cast<long>(j - i);
            if (gap > 3) CHECK(dense.at(i, j) == Rational(0));
        }
}

TEST_CASE("to_dense reproduces the reference 10x10 system") {
    auto dense = to_dense(reference_bands<Rational>());
    auto rows = reference_dense_rows<Rational>();
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) CHECK(dense.at(i, j) == rows[i][j]);
}

TEST_CASE("cyclic sentinels land at their wrapped coordinates") {
    // Distinct sentinel values per band row, placed by the offset rule
    // computed independently here.
    const std::size_t n = 8;
    CyclicHeptaBands<Rational> c;
    c.order = n;
    auto fill = [&](std::vector<Rational>& band, long base) {
        band.clear();
        for (std::size_t r = 0; r < n; ++r) band.push_back(Rational(base + static_cast<long>(r)));
    };
    fill(c.diag, 100);
    fill(c.super1, 200);
    fill(c.super2, 300);
    fill(c.super3, 400);
    fill(c.sub1, 500);
    fill(c.sub2, 600);
    fill(c.sub3, 700);
    for (std::size_t r = 0; r < 3; ++r) c.sub3[r] = Rational(0);
    for (std::size_t r = n - 3; r < n; ++r) c.super3[r] = Rational(0);

    auto dense = to_dense(c);
    auto wrap = [&](long v) { return static_cast<std::size_t>(((v % 8) + 8) % 8); };
    for (std::size_t r = 0; r < n; ++r) {
        const long i = static_cast<long>(r);
        CHECK(dense.at(r, r) == c.diag[r]);
        CHECK(dense.at(r, wrap(i + 1)) == c.super1[r]);
        CHECK(dense.at(r, wrap(i + 2)) == c.super2[r]);
        CHECK(dense.at(r, wrap(i + 3)) == c.super3[r]);
        CHECK(dense.at(r, wrap(i - 1)) == c.sub1[r]);
        CHECK(dense.at(r, wrap(i - 2)) == c.sub2[r]);
        CHECK(dense.at(r, wrap(i - 3)) == c.sub3[r]);
    }
}

TEST_CASE("partition of the reference system matches the known blocks") {
    auto part = partition(reference_bands<Rational>(), reference_rhs<Rational>());

    CHECK(part.m2.a00 == Rational(4));
    CHECK(part.m2.a01 == Rational(-1));
    CHECK(part.m2.a10 == Rational(4));
    CHECK(part.m2.a11 == Rational(1));

    CHECK(part.ut1.dense(8) == ivec<Rational>({3, 0, 0, 0, 0, 3, 1, 3}));
    CHECK(part.ut2.dense(8) == ivec<Rational>({2, 4, 0, 0, 0, 0, 2, 3}));
    CHECK(part.v1.dense(8) == ivec<Rational>({2, 0, 0, 0, 0, 1, 1, 3}));
    CHECK(part.v2.dense(8) == ivec<Rational>({-1, 1, 0, 0, 0, 0, -3, 5}));

    CHECK(part.rhs_tail[0] == Rational(78));
    CHECK(part.rhs_tail[1] == Rational(94));
    CHECK(part.rhs_head == ivec<Rational>({2, 15, 33, 0, 43, -24, 47, 70}));
}

TEST_CASE("partition round trips through reassembly") {
    for (std::size_t n : {8u, 9u, 13u, 24u, 64u}) {
        GenSpec spec{SystemKind::Cyclic, n, 1000 + n, GenProfile::Uniform, 0};
        auto [c, rhs] = generate_cyclic<Rational>(spec);
        auto part = partition(c, rhs);
        CHECK(reassemble(part) == to_dense(c));
    }
}

TEST_CASE("the leading block of a partition is a valid heptadiagonal matrix") {
    for (std::size_t n : {8u, 10u, 16u, 33u}) {
        GenSpec spec{SystemKind::Cyclic, n, 77 + n, GenProfile::Uniform, 0};
        auto [c, rhs] = generate_cyclic<Rational>(spec);
        auto part = partition(c, rhs);
        CHECK(part.m1.order == n - 2);
        CHECK_NOTHROW(validate(part.m1));
    }
}

TEST_CASE("partition copies block data instead of aliasing") {
    auto c = reference_bands<Rational>();
    auto part = partition(c, reference_rhs<Rational>());
    c.diag[0] = Rational(999);
    CHECK(part.m1.diag[0] == Rational(1));
}
