#include <doctest.h>

#include <json.hpp>

#include "refco/io.hpp"

using namespace refco;
using nlohmann::json;

TEST_CASE("trajectory JSON carries the run and its policy") {
    auto result = run(decode(45), lattice_from_bits("01001"),
                      BoundaryPolicy::constant0(), 4);
    auto doc = json::parse(
        trajectory_to_json(result, BoundaryPolicy::constant0().describe()));
    CHECK(doc["machine_id"] == 45);
    CHECK(doc["n"] == 5);
    CHECK(doc["policy"] == "const0");
    CHECK(doc["start_direction"] == "ltr");
    CHECK(doc["initial_row"] == "01001");
    CHECK(doc["no_preimage_at"].is_null());
    REQUIRE(doc["steps"].size() == 4);
    CHECK(doc["steps"][1]["t"] == 1);
    CHECK(doc["steps"][1]["direction"] == "rtl");
    CHECK(doc["steps"][1]["row"] == "10111");
    CHECK(doc["steps"][0]["input"] == 0);
    CHECK(doc["steps"][0]["output"] == 1);
}

TEST_CASE("truncated reverse runs record the failing step") {
    auto result = run_reverse(decode(54), lattice_from_bits("000010000"), 4);
    auto doc = json::parse(
        trajectory_to_json(result, BoundaryPolicy::reverse_r90().describe()));
    CHECK(doc["policy"] == "reverse-r90");
    CHECK(doc["no_preimage_at"] == 0);
    CHECK(doc["steps"].empty());
}

TEST_CASE("rows text prints one configuration per line") {
    auto result = run(decode(45), lattice_from_bits("01001"),
                      BoundaryPolicy::constant0(), 2);
    CHECK(trajectory_rows_text(result.trajectory) ==
          "01001\n01101\n10111\n");
}

TEST_CASE("report serialization") {
    auto eq = json::parse(to_json(verify_forward_r90(9, 8)));
    CHECK(eq["kind"] == "r90-forward");
    CHECK(eq["passed"] == true);
    CHECK(eq["first_divergence"].is_null());

    auto rev = json::parse(
        to_json(verify_reverse_r90(54, lattice_from_bits("00011000"), 8)));
    CHECK(rev["kind"] == "r90-reverse");
    CHECK(rev["committed_inputs"] == "11001111");
    CHECK(rev["passed"] == true);

    auto shift = json::parse(to_json(
        compare_m54_m60_reverse(lattice_from_bits("00011000"), 8)));
    CHECK(shift["kind"] == "m54-m60-shift");
    CHECK(shift["odd_shift"] == 1);
    CHECK(shift["passed"] == true);

    auto flip = json::parse(to_json(check_reversibility(44, 6, 8, true)));
    CHECK(flip["kind"] == "reversibility");
    CHECK(flip["pass_rate"] == 1.0);
    CHECK(flip["configs_tested"] == 64);
}

TEST_CASE("atlas summary lists every machine") {
    auto doc = json::parse(atlas_summary_json(atlas(9, 8, 0)));
    REQUIRE(doc.size() == 256);
    CHECK(doc[0]["machine_id"] == 0);
    CHECK(doc[0]["blank"] == true);
    CHECK(doc[45]["class"] == "state-reporting");
}
