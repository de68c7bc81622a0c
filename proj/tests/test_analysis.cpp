#include <doctest.h>

#include <stdexcept>

#include "refco/analysis.hpp"

using namespace refco;

namespace {

std::vector<Symbol> seeded_script(std::size_t steps, std::uint64_t seed) {
    std::vector<Symbol> script;
    script.reserve(steps);
    for (State q : random_lattice(steps == 0 ? 1 : steps, seed))
        script.push_back(as_symbol(q));
    script.resize(steps);
    return script;
}

}  // namespace

TEST_CASE("centered_one puts the single S1 at width/2") {
    CHECK(bits_from_lattice(centered_one(19)) == "0000000001000000000");
    CHECK(bits_from_lattice(centered_one(8)) == "00001000");
    CHECK_THROWS_AS(centered_one(0), std::domain_error);
}

TEST_CASE("lattice rows map through reporting outputs when they exist") {
    // Machine 80 reports S0 as 1 and S1 as 0; machine 54 is read directly.
    CHECK(classify(decode(80)) == MachineClass::state_reporting);
    auto inverted = to_eca_row(decode(80), lattice_from_bits("01"));
    CHECK(bits_from_eca_row(inverted) == "10");
    auto direct = to_eca_row(decode(54), lattice_from_bits("01"));
    CHECK(bits_from_eca_row(direct) == "01");
}

TEST_CASE("forward rule-90 equivalence holds for machine 45") {
    auto small = verify_forward_r90(3, 2);
    CHECK(small.passed);
    CHECK(small.rows_checked == 2);

    auto big = verify_forward_r90(129, 128);
    CHECK(big.passed);
    CHECK(big.rows_checked == 65);
    CHECK_FALSE(big.first_divergence.has_value());
}

TEST_CASE("forward equivalence fails against the wrong rule") {
    auto wrong = verify_forward_r90(17, 16, 165);
    CHECK_FALSE(wrong.passed);
    REQUIRE(wrong.first_divergence.has_value());
    CHECK(wrong.first_divergence->first % 2 == 0);
}

TEST_CASE("forward equivalence is trivial from a quiescent start") {
    auto r = verify_forward_r90(9, 6, 90, 45,
                                lattice_from_bits("000000000"));
    CHECK(r.passed);
}

TEST_CASE("reverse rule-90 verification for machine 54") {
    auto r = verify_reverse_r90(54, lattice_from_bits("00011000"), 8);
    CHECK(r.passed);
    CHECK(r.pairs_checked == 4);
    CHECK_FALSE(r.no_preimage_at.has_value());
    CHECK(r.violations.empty());
    std::string inputs;
    for (Symbol s : r.committed_inputs)
        inputs.push_back(bit_of(s) ? '1' : '0');
    CHECK(inputs == "11001111");
}

TEST_CASE("reverse rule-90 verification for machine 60") {
    auto r = verify_reverse_r90(60, lattice_from_bits("00011000"), 8);
    CHECK(r.passed);
    CHECK(r.pairs_checked == 4);
}

TEST_CASE("reverse verification of a quiescent lattice is trivial") {
    auto r = verify_reverse_r90(54, lattice_from_bits("00000000"), 20);
    CHECK(r.passed);
    CHECK(r.pairs_checked == 10);
}

TEST_CASE("reverse verification truncates at rows with no preimage") {
    auto r = verify_reverse_r90(54, lattice_from_bits("000010000"), 6);
    CHECK(r.no_preimage_at == 0);
    CHECK(r.pairs_checked == 0);
    CHECK(r.passed);  // nothing committed, nothing violated
}

TEST_CASE("rule 90 run forward from the last committed row retraces the reverse run") {
    const auto initial = random_lattice(16, 0x5eedULL);
    auto rr = run_reverse(decode(54), initial, 16);
    REQUIRE(rr.completed());
    const auto& rows = rr.trajectory.rows;
    auto forward = eca_run(to_eca_row(decode(54), rows.back()), EcaRule{90},
                           rows.size() / 2);
    for (std::size_t k = 0; 2 * k < rows.size(); ++k) {
        CHECK(forward[k].cells ==
              to_eca_row(decode(54), rows[rows.size() - 1 - 2 * k]).cells);
    }
}

TEST_CASE("machines 54 and 60: even rows equal, odd rows one cell left") {
    auto fig = compare_m54_m60_reverse(lattice_from_bits("00011000"), 8);
    CHECK(fig.passed);
    CHECK(fig.even_rows_equal);
    CHECK(fig.odd_shift == 1);

    auto quiet = compare_m54_m60(lattice_from_bits("000000"),
                                 seeded_script(12, 7));
    CHECK(quiet.passed);
}

TEST_CASE("the 54/60 relation holds for every small configuration") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            LatticeState init(n);
            for (std::size_t k = 0; k < n; ++k)
                init[k] = state_from_bit((bits >> k) & 1);
            auto r = compare_m54_m60(init, seeded_script(8, 1000 + bits));
            CHECK(r.passed);
            CHECK(r.even_rows_equal);
            CHECK(r.odd_shift == 1);
        }
    }
}

TEST_CASE("machine 44 is reversible by flipping the lattice") {
    auto r = check_reversibility(44, 8, 16, true);
    CHECK(r.configs_tested == 256);
    CHECK(r.recovered == 256);
    CHECK(r.pass_rate == 1.0);
    CHECK(r.passed);
}

TEST_CASE("machine 44 reversibility holds across widths and step counts") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t steps : {1u, 2u, 3u, 4u, 8u}) {
            auto r = check_reversibility(44, n, steps, true);
            CHECK(r.passed);
        }
    }
    for (std::size_t n = 7; n <= 10; ++n)
        CHECK(check_reversibility(44, n, 16, true, 64, 1, 0).passed);
}

TEST_CASE("machine 7 is not reversible") {
    auto r = check_reversibility(7, 6, 8, true);
    CHECK(r.pass_rate < 1.0);
    CHECK_FALSE(r.passed);
}

TEST_CASE("sampled reversibility runs are deterministic in the seed") {
    auto a = check_reversibility(44, 12, 16, false, 32, 9);
    auto b = check_reversibility(44, 12, 16, false, 32, 9);
    CHECK(a.recovered == b.recovered);
    CHECK(a.configs_tested == 32);
    CHECK(a.passed);
}

TEST_CASE("exhaustive reversibility checks are bounded") {
    CHECK_THROWS_AS(check_reversibility(44, 11, 4, true), std::domain_error);
}

TEST_CASE("atlas covers all machines deterministically") {
    auto entries = atlas(19, 38, 2);
    REQUIRE(entries.size() == 256);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].machine_id == static_cast<int>(i));
        CHECK(entries[i].trajectory.rows.size() == 39);
    }
    CHECK(entries[0].blank);
    CHECK_FALSE(entries[45].blank);
    CHECK(entries[45].machine_class == MachineClass::state_reporting);

    auto again = atlas(19, 38, 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        CHECK(entries[i].trajectory.rows == again[i].trajectory.rows);
}
