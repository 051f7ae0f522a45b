#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/io.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace qtrace;

namespace {

std::string fixture(const std::string& name) {
    return std::string(QTRACE_FIXTURE_DIR) + "/" + name;
}

RootPtr root3() {
    static RootPtr r = RootData::make(3);
    return r;
}

}  // namespace

TEST_CASE("shipped skew-form fixture loads") {
    Json j = load_json_file(fixture("rank2.json"));
    SkewForm form = skew_form_from_json(j);
    CHECK(form.rank() == 2);
    CHECK(form.names() == std::vector<std::string>{"x1", "x2"});
    CHECK(form.entry(0, 1) == 1);
    CHECK(form.entry(1, 0) == -1);
    CHECK(punctures_from_json(j) == 1);
}

TEST_CASE("shipped surface fixtures load") {
    PbSurface sq = surface_from_json(load_json_file(fixture("square.json")));
    CHECK(sq.genus() == 0);
    CHECK(sq.boundary_punctures() == std::vector<unsigned>{4});
    CHECK(sq.interior_punctures() == 0);

    PbSurface disk = surface_from_json(load_json_file(fixture("disk_punctured.json")));
    CHECK(disk.interior_punctures() == 1);
    CHECK(disk.r_invariant() == 1);
}

TEST_CASE("combined surface-plus-form fixture validates on load") {
    SurfaceFormFixture fix = surface_form_from_json(load_json_file(fixture("square_pbar.json")), 3);
    CHECK(fix.surface.r_invariant() == 3);
    CHECK(fix.layout.size == 9);
    CHECK(fix.form.rank() == 9);
    CHECK(fix.punctures == 0);
    // the same fixture must also validate at other odd orders
    CHECK_NOTHROW(surface_form_from_json(load_json_file(fixture("square_pbar.json")), 5));
}

TEST_CASE("missing and malformed files raise fixture errors") {
    CHECK_THROWS_AS(load_json_file(fixture("no_such_file.json")), FixtureInvalid);
    auto tmp = std::filesystem::temp_directory_path() / "qtrace_bad_fixture.json";
    {
        std::ofstream out(tmp);
        out << "this is not json";
    }
    CHECK_THROWS_AS(load_json_file(tmp.string()), FixtureInvalid);
    std::filesystem::remove(tmp);
}

TEST_CASE("skew form schema is validated") {
    CHECK_THROWS_AS(skew_form_from_json(Json{{"n", 2}}), FixtureInvalid);
    CHECK_THROWS_AS(skew_form_from_json(Json{{"n", 0}, {"names", Json::array()}, {"P", Json::array()}}),
                    FixtureInvalid);
    // wrong name count
    CHECK_THROWS_AS(
        skew_form_from_json(Json{{"n", 2}, {"names", {"x"}}, {"P", {{0, 1}, {-1, 0}}}}),
        FixtureInvalid);
    // non-antisymmetric matrix
    CHECK_THROWS_AS(
        skew_form_from_json(Json{{"n", 2}, {"names", {"x", "y"}}, {"P", {{0, 1}, {1, 0}}}}),
        FixtureInvalid);
    // non-integer entry
    CHECK_THROWS_AS(
        skew_form_from_json(Json{{"n", 2}, {"names", {"x", "y"}}, {"P", {{0, 1.5}, {-1.5, 0}}}}),
        FixtureInvalid);
}

TEST_CASE("surface schema is validated") {
    CHECK_THROWS_AS(surface_from_json(Json{{"genus", 0}, {"interior", 0}}), FixtureInvalid);
    CHECK_THROWS_AS(surface_from_json(Json{{"genus", -1}, {"boundary", {3}}, {"interior", 0}}),
                    FixtureInvalid);
    CHECK_THROWS_AS(surface_from_json(Json{{"genus", 0}, {"boundary", 3}, {"interior", 0}}),
                    FixtureInvalid);
    CHECK_THROWS_AS(
        surface_from_json(Json{{"genus", 0}, {"boundary", Json::array()}, {"interior", 0}}),
        FixtureInvalid);
}

TEST_CASE("points parse integers and scalar strings") {
    Json j{{"m", {{1, 0}, {0, 1}}}};
    SLPoint id = sl_point_from_json(j, root3());
    CHECK(id.k11() == Cyclotomic(root3(), Rational(1)));
    CHECK(!id.inside_w());

    // Built via parse: a braced list of string pairs would become a JSON object.
    Json half = Json::parse(R"({"m": [["2", "0"], ["0", "1/2"]]})");
    SLPoint diag = sl_point_from_json(half, root3());
    CHECK(diag.k22() == Cyclotomic(root3(), Rational(1, 2)));

    Json expr{{"m", {{"q", 0}, {0, "q^-1"}}}};
    SLPoint qpt = sl_point_from_json(expr, root3());
    CHECK(qpt.k11() == q_power(root3(), 1));

    // determinant != 1, bad shapes, and bad entries
    CHECK_THROWS_AS(sl_point_from_json(Json{{"m", {{1, 0}, {0, 2}}}}, root3()), FixtureInvalid);
    CHECK_THROWS_AS(sl_point_from_json(Json{{"m", {{1, 0}}}}, root3()), FixtureInvalid);
    CHECK_THROWS_AS(sl_point_from_json(Json{{"m", {{1, 0}, {0, "oops"}}}}, root3()),
                    FixtureInvalid);
    CHECK_THROWS_AS(sl_point_from_json(Json::object(), root3()), FixtureInvalid);
}

TEST_CASE("the nondegeneracy expectation flag is optional") {
    CHECK(expect_nondegenerate_from_json(Json{{"expect_nondegenerate", true}}) ==
          std::optional<bool>(true));
    CHECK(expect_nondegenerate_from_json(Json{{"expect_nondegenerate", false}}) ==
          std::optional<bool>(false));
    CHECK(expect_nondegenerate_from_json(Json::object()) == std::nullopt);
    CHECK_THROWS_AS(expect_nondegenerate_from_json(Json{{"expect_nondegenerate", 1}}),
                    FixtureInvalid);
}

TEST_CASE("torus elements serialize term by term") {
    // Unpunctured algebra: the unit has coefficient 1 on the nose, so the
    // serialized "coef" field is exactly "1".
    TorusPtr flat = TorusAlgebra::make(root3(), SkewForm({"x1", "x2"}, {{0, 1}, {-1, 0}}), 0);
    TorusPtr alg = TorusAlgebra::make(root3(), SkewForm({"x1", "x2"}, {{0, 1}, {-1, 0}}), 1);
    Json plain = torus_element_to_json(flat->monomial(ExpVec{1, -2}));
    REQUIRE(plain.size() == 1);
    CHECK(plain[0]["k"] == Json::array({1, -2}));
    CHECK(plain[0]["alpha"] == Json::object());
    CHECK(plain[0]["coef"] == "1");

    Json alpha = torus_element_to_json(alg->basis_monomial(ChebIndex{2}, ExpVec{0, 0}));
    REQUIRE(alpha.size() == 1);
    CHECK(alpha[0]["alpha"] == Json{{"0", 2}});

    CHECK(torus_element_to_json(alg->zero()) == Json::array());
}

TEST_CASE("bigon elements serialize with their four exponents") {
    OqPtr ctx = OqContext::make(root3());
    Json j = oq_element_to_json(ctx->monomial(OqMono{0, 1, 2, 0}));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["a"] == 0);
    CHECK(j[0]["b"] == 1);
    CHECK(j[0]["c"] == 2);
    CHECK(j[0]["d"] == 0);
    CHECK(j[0]["coef"] == "1");
}
