#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "heptax/cyclic_smw.hpp"
#include "heptax/io.hpp"
#include "test_support.hpp"

using namespace heptax;
using namespace heptax::testing;

namespace {

std::string fixture(const std::string& name) {
    return std::string(HEPTAX_FIXTURE_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/heptax_io_") + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("the reference system fixture loads and solves") {
    SystemFile file = load_system(fixture("reference10.json"));
    REQUIRE(file.mode == FileMode::Rational);
    const auto& sys = std::get<RawSystem<Rational>>(file.data);
    REQUIRE(sys.kind == SystemKind::Cyclic);

    auto c = sys.to_cyclic();
    CHECK(c.diag == reference_bands<Rational>().diag);
    CHECK(to_dense(c) == to_dense(reference_bands<Rational>()));

    auto rep = solve_cyclic(c, sys.rhs);
    CHECK(rep.x == ivec<Rational>({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
}

TEST_CASE("save then load is the identity on rational systems") {
    SystemFile file = load_system(fixture("reference10.json"));
    const auto& sys = std::get<RawSystem<Rational>>(file.data);
    const std::string path = temp_path("roundtrip_rational.json");
    save_system(path, sys);
    SystemFile again = load_system(path);
    const auto& sys2 = std::get<RawSystem<Rational>>(again.data);
    CHECK(sys2.order == sys.order);
    CHECK(sys2.kind == sys.kind);
    CHECK(sys2.d == sys.d);
    CHECK(sys2.a == sys.a);
    CHECK(sys2.A == sys.A);
    CHECK(sys2.C == sys.C);
    CHECK(sys2.b == sys.b);
    CHECK(sys2.B == sys.B);
    CHECK(sys2.D == sys.D);
    CHECK(sys2.rhs == sys.rhs);
    std::remove(path.c_str());
}

TEST_CASE("save then load is the identity on float systems") {
    GenSpec spec{SystemKind::Hepta, 9, 17, GenProfile::DiagonallyDominant, 0};
    auto [h, rhs] = generate_hepta<double>(spec);
    RawSystem<double> sys = make_raw(h, rhs);
    // Values with no short decimal form must still round trip bit-exactly.
    sys.d[0] = 0.1;
    sys.d[1] = 1.0 / 3.0;
    sys.d[2] = 6.02214076e23;
    const std::string path = temp_path("roundtrip_f64.json");
    save_system(path, sys);
    SystemFile again = load_system(path);
    const auto& sys2 = std::get<RawSystem<double>>(again.data);
    CHECK(sys2.d == sys.d);
    CHECK(sys2.rhs == sys.rhs);
    std::remove(path.c_str());
}

TEST_CASE("rhs length mismatch is a parse error") {
    const std::string path = temp_path("short_rhs.json");
    write_text(path, R"({"kind":"hepta","order":4,"mode":"f64",
      "bands":{"d":[1,1,1,1],"a":[0,0,0],"A":[0,0],"C":[0],
               "b":[0,0,0],"B":[0,0],"D":[0]},
      "rhs":[1,2,3]})");
    CHECK_THROWS_AS(load_system(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("a zero denominator is a parse error") {
    const std::string path = temp_path("zero_den.json");
    write_text(path, R"({"kind":"hepta","order":4,"mode":"rational",
      "bands":{"d":["3/0",1,1,1],"a":[0,0,0],"A":[0,0],"C":[0],
               "b":[0,0,0],"B":[0,0],"D":[0]},
      "rhs":[1,2,3,4]})");
    CHECK_THROWS_AS(load_system(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("rational strings in a float file are a parse error") {
    const std::string path = temp_path("mode_mix.json");
    write_text(path, R"({"kind":"hepta","order":4,"mode":"f64",
      "bands":{"d":["1/2",1,1,1],"a":[0,0,0],"A":[0,0],"C":[0],
               "b":[0,0,0],"B":[0,0],"D":[0]},
      "rhs":[1,2,3,4]})");
    CHECK_THROWS_AS(load_system(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("band length errors are reported at load time") {
    const std::string path = temp_path("bad_band.json");
    write_text(path, R"({"kind":"hepta","order":4,"mode":"f64",
      "bands":{"d":[1,1,1],"a":[0,0,0],"A":[0,0],"C":[0],
               "b":[0,0,0],"B":[0,0],"D":[0]},
      "rhs":[1,2,3,4]})");
    CHECK_THROWS_AS(load_system(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("cyclic orders below eight are rejected") {
    const std::string path = temp_path("small_order.json");
    write_text(path, R"({"kind":"cyclic","order":7,"mode":"f64",
      "bands":{"d":[1,1,1,1,1,1,1],"a":[0,0,0,0,0,0,0],"A":[0,0,0,0,0,0,0],
               "C":[0,0,0,0,0,0,0],"b":[0,0,0,0,0,0,0],"B":[0,0,0,0,0,0,0],
               "D":[0,0,0,0,0,0,0]},
      "rhs":[1,2,3,4,5,6,7]})");
    CHECK_THROWS_AS(load_system(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("malformed json names the file") {
    const std::string path = temp_path("garbage.json");
    write_text(path, "{not json");
    try {
        load_system(path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(path) != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("solution files round trip in both modes") {
    const std::string path = temp_path("solution.json");
    std::vector<Rational> xq = rvec({"-2814/199", "7/2", "0", "42"});
    save_solution(path, xq);
    SolutionFile back = load_solution(path);
    CHECK(back.mode == FileMode::Rational);
    CHECK(std::get<std::vector<Rational>>(back.x) == xq);

    std::vector<double> xf = {0.1, -2.5, 1.0 / 3.0};
    save_solution(path, xf);
    back = load_solution(path);
    CHECK(back.mode == FileMode::F64);
    CHECK(std::get<std::vector<double>>(back.x) == xf);
    std::remove(path.c_str());
}

TEST_CASE("mode conversions") {
    SystemFile file = load_system(fixture("reference10.json"));
    const auto& sys = std::get<RawSystem<Rational>>(file.data);
    RawSystem<double> f = to_f64(sys);
    CHECK(f.d[0] == 1.0);
    CHECK(f.rhs[9] == 94.0);
    RawSystem<Rational> back = to_exact(f);
    CHECK(back.d == sys.d);  // integer values convert exactly both ways
    CHECK(back.rhs == sys.rhs);
}

TEST_CASE("dense export writes a MatrixMarket array header") {
    SystemFile file = load_system(fixture("reference10.json"));
    const std::string path = temp_path("dense.mtx");
    dump_dense_matrix_market(path, file);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "%%MatrixMarket matrix array real general");
    std::getline(in, line);
    CHECK(line == "10 10");
    std::remove(path.c_str());
}
