#include <doctest.h>

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "crosspack/crosspack.h"

namespace {

using nlohmann::json;

std::string take(char* s) {
    std::string out = s ? s : "";
    cpk_string_free(s);
    return out;
}

const char* kTorusParams = R"({
  "pattern": {"genus": 1, "pairing": [[1,4],[2,5],[3,6]]},
  "values": {"x1": 2.0, "x2": 1.0, "x3": 3.0}
})";

} // namespace

TEST_CASE("capi: census") {
    char* raw = nullptr;
    REQUIRE(cpk_enumerate_patterns(1, &raw) == CPK_OK);
    json arr = json::parse(take(raw));
    CHECK(arr.size() == 1);
    CHECK(arr[0]["genus"] == 1);

    CHECK(cpk_enumerate_patterns(0, &raw) == CPK_ERR_INVALID);
    CHECK(std::string(cpk_last_error()).find("genus") != std::string::npos);
}

TEST_CASE("capi: classification") {
    double v[] = {std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0)};
    cpk_admissibility rep{};
    REQUIRE(cpk_classify_vector(v, 3, &rep) == CPK_OK);
    CHECK(rep.cls == 1);

    double bad[] = {1.0, -1.0};
    CHECK(cpk_classify_vector(bad, 2, &rep) == CPK_ERR_INVALID);
}

TEST_CASE("capi: torus closed forms") {
    double z = 0.0;
    REQUIRE(cpk_torus_dependent(2.0, 1.0, &z) == CPK_OK);
    CHECK(z == doctest::Approx(3.0));
    CHECK(cpk_torus_dependent(1.0, 1.0, &z) == CPK_ERR_VERDICT);

    double tr[4];
    REQUIRE(cpk_torus_traces(2.0, 1.0, 3.0, tr) == CPK_OK);
    CHECK(tr[0] == doctest::Approx(5.0));
    CHECK(tr[1] == doctest::Approx(-1.0));
    CHECK(tr[2] == doctest::Approx(1.0));
    CHECK(tr[3] == doctest::Approx(-1.0));
}

TEST_CASE("capi: params, verify, develop, svg") {
    cpk_params* params = nullptr;
    REQUIRE(cpk_params_parse(kTorusParams, &params) == CPK_OK);

    char* raw = nullptr;
    REQUIRE(cpk_verify(params, &raw) == CPK_OK);
    json rep = json::parse(take(raw));
    CHECK(rep["verdict"] == "in-space");

    cpk_scene* scene = nullptr;
    REQUIRE(cpk_develop(params, 2, &scene) == CPK_OK);
    REQUIRE(cpk_scene_to_json(scene, &raw) == CPK_OK);
    json sj = json::parse(take(raw));
    CHECK(sj["depth"] == 2);

    char* svg1 = nullptr;
    char* svg2 = nullptr;
    REQUIRE(cpk_render_svg(scene, 0.0, 0.5, 3.0, 0.25, 1.0, &svg1) == CPK_OK);
    REQUIRE(cpk_render_svg(scene, 0.0, 0.5, 3.0, 0.25, 1.0, &svg2) == CPK_OK);
    CHECK(take(svg1) == take(svg2));

    cpk_scene_free(scene);
    cpk_params_free(params);

    CHECK(cpk_params_parse("{\"values\": {}}", &params) == CPK_ERR_INVALID);
}

TEST_CASE("capi: solve and holonomy compare") {
    json pattern = {{"genus", 2},
                    {"pairing", json::array({{1, 10}, {2, 5}, {3, 7}, {4, 8}, {6, 9},
                                             {11, 14}, {12, 16}, {13, 17}, {15, 18}})}};
    json free_values;
    for (int l : {2, 3, 4, 5, 7, 8}) free_values["x" + std::to_string(l)] = 2.1;

    char* report = nullptr;
    char* paramstr = nullptr;
    REQUIRE(cpk_solve(pattern.dump().c_str(), free_values.dump().c_str(), &report,
                      &paramstr) == CPK_OK);
    json rep = json::parse(take(report));
    CHECK(rep["residual"].get<double>() <= 1e-9);
    CHECK(rep["verify"]["verdict"] == "in-space");

    std::string params_json = take(paramstr);
    cpk_params* p1 = nullptr;
    REQUIRE(cpk_params_parse(params_json.c_str(), &p1) == CPK_OK);

    char* raw = nullptr;
    REQUIRE(cpk_holonomy_compare(p1, p1, &raw) == CPK_OK);
    json hol = json::parse(take(raw));
    CHECK(hol["verdict"] == "equal");
    CHECK(hol["traces"].size() == 3);
    cpk_params_free(p1);

    // Inadmissible free values surface as a verdict failure.
    json bad_free = free_values;
    bad_free["x2"] = 0.01;
    CHECK(cpk_solve(pattern.dump().c_str(), bad_free.dump().c_str(), &report, &paramstr) ==
          CPK_ERR_VERDICT);
}
