#include <doctest.h>

#include <filesystem>

#include "distvar/catalog.hpp"
#include "distvar/io.hpp"
#include "unit/helpers.hpp"

using namespace distvar;
namespace fs = std::filesystem;

TEST_SUITE("io") {

TEST_CASE("matrix and triple round trip") {
    Rng rng(9);
    const ModelTriple t = random_triple(4, rng);
    const ModelTriple back = io::triple_from_json(io::json::parse(io::to_json(t).dump()));
    CHECK(back.p() == t.p());
    CHECK(back.u() == t.u());
}

TEST_CASE("colligation, tuple and polynomial round trip") {
    Rng rng(10);
    const Colligation c = random_colligation(2, 3, rng);
    CHECK(io::colligation_from_json(io::to_json(c)).assembled() == c.assembled());
    const ModelTuple t = power_tuple({1, 2, 1});
    const ModelTuple tb = io::tuple_from_json(io::to_json(t));
    CHECK(tb.d() == 3);
    CHECK(tb.us()[1] == t.us()[1]);
    BivariatePoly p;
    p.coeffs = {{1.0, cplx(0, 2)}, {-1.0, 0.5}};
    CHECK(io::poly_from_json(io::to_json(p)).coeffs == p.coeffs);
}

TEST_CASE("real numbers are accepted as complex entries") {
    const auto j = io::json::parse(R"({"dim":2,"P":[[1,0],[0,0]],"U":[[0,1],[1,0]]})");
    CHECK(validate_triple(io::triple_from_json(j)).ok);
}

TEST_CASE("malformed input is an input error") {
    const char* cases[] = {
        R"({"dim":2,"P":[[1,0],[0,0]]})",
        R"({"dim":2,"P":[[1,0],[0,0]],"U":[[0,1]]})",
        R"({"dim":2,"P":[[1,0],[0,0]],"U":[[0,1],[1,[0,0,0]]]})",
        R"({"dim":-1,"P":[],"U":[]})",
        R"({"dim_e":1,"dim_h":1,"A":[[0]],"B":[[1]],"C":[[1]]})",
    };
    for (const char* s : cases) {
        const auto j = io::json::parse(s);
        const auto code = error_of([&] {
            if (j.contains("dim_e")) io::colligation_from_json(j);
            else io::triple_from_json(j);
        });
        CHECK(code == ErrorCode::InvalidInput);
    }
}

TEST_CASE("csv layout") {
    const std::vector<VarietyPoint> pts{{0.25, {0.5, 0.5}, Region::OpenPolydisc}};
    const std::string csv = io::points_to_csv(pts);
    CHECK(csv.rfind("z_re,z_im,z1_re,z1_im,z2_re,z2_im,region\n", 0) == 0);
    CHECK(csv.find(",D\n") != std::string::npos);
}

TEST_CASE("fixtures load and validate") {
    std::size_t seen = 0;
    for (const auto& entry : fs::directory_iterator(DISTVAR_FIXTURE_DIR)) {
        const std::string name = entry.path().filename().string();
        if (entry.path().extension() != ".json") continue;
        if (name == "malformed.json" || name == "bad_shape.json") {
            CHECK(error_of([&] { io::triple_from_json(io::read_json_file(entry.path().string())); }) ==
                  ErrorCode::InvalidInput);
            continue;
        }
        const io::json j = io::read_json_file(entry.path().string());
        CAPTURE(name);
        if (j.contains("P_list")) {
            const ModelTuple t = io::tuple_from_json(j);
            CHECK(validate_tuple(t).ok == (name != "tuple_impure.json"));
        } else if (j.contains("dim_e")) {
            const Colligation c = io::colligation_from_json(j);
            CHECK((unitary_defect(c.assembled()) < 1e-10) == (name != "not_unitary_colligation.json"));
        } else {
            CHECK(validate_triple(io::triple_from_json(j)).ok);
        }
        ++seen;
    }
    CHECK(seen >= 12);
}

}
