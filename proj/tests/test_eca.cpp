#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "refco/eca.hpp"

using namespace refco;

namespace {

// C(t, k) is odd iff k's binary digits fit inside t's (Lucas, base 2).
bool binomial_odd(std::uint64_t t, std::uint64_t k) {
    return k <= t && (k & (t - k)) == 0;
}

// Rule-90 row t from a single 1 at `center`, derived from binomial parity
// alone: cell x is 1 iff C(t, (x - center + t) / 2) is odd.
EcaRow pascal_row(std::size_t width, std::size_t center, std::size_t t) {
    EcaRow row;
    row.cells.assign(width, 0);
    for (std::size_t x = 0; x < width; ++x) {
        const std::int64_t offset =
            static_cast<std::int64_t>(x) - static_cast<std::int64_t>(center);
        if (offset < -static_cast<std::int64_t>(t) ||
            offset > static_cast<std::int64_t>(t))
            continue;
        const std::int64_t shifted = offset + static_cast<std::int64_t>(t);
        if (shifted % 2 != 0) continue;
        if (binomial_odd(t, static_cast<std::uint64_t>(shifted / 2)))
            row.cells[x] = 1;
    }
    return row;
}

}  // namespace

TEST_CASE("rule 90 single steps") {
    const EcaRule r90{90};
    CHECK(eca_step(eca_row_from_bits("00100"), r90) ==
          eca_row_from_bits("01010"));
    CHECK(eca_step(eca_row_from_bits("01010"), r90) ==
          eca_row_from_bits("10001"));
    CHECK(eca_step(eca_row_from_bits("000000"), r90) ==
          eca_row_from_bits("000000"));
}

TEST_CASE("other rules and boundaries") {
    CHECK(eca_step(eca_row_from_bits("00100"), EcaRule{110}) ==
          eca_row_from_bits("01100"));
    CHECK(eca_step(eca_row_from_bits("100", EcaBoundary::periodic),
                   EcaRule{90}) ==
          eca_row_from_bits("011", EcaBoundary::periodic));
    CHECK_THROWS_AS(eca_step(EcaRow{}, EcaRule{90}), std::domain_error);
}

TEST_CASE("rule 90 is additive on null boundaries") {
    std::uint32_t lcg = 12345;
    auto random_row = [&](std::size_t n) {
        EcaRow row;
        row.cells.resize(n);
        for (auto& c : row.cells) {
            lcg = lcg * 1664525u + 1013904223u;
            c = static_cast<std::uint8_t>(lcg >> 31);
        }
        return row;
    };
    const EcaRule r90{90};
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + (trial % 17);
        EcaRow a = random_row(n), b = random_row(n), both;
        both.cells.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            both.cells[k] = a.cells[k] ^ b.cells[k];
        EcaRow sa = eca_step(a, r90), sb = eca_step(b, r90);
        EcaRow sboth = eca_step(both, r90);
        for (std::size_t k = 0; k < n; ++k)
            CHECK(sboth.cells[k] == (sa.cells[k] ^ sb.cells[k]));
    }
}

TEST_CASE("rule 90 from a single 1 follows binomial parity") {
    const std::size_t width = 129, center = 64;
    EcaRow start;
    start.cells.assign(width, 0);
    start.cells[center] = 1;
    auto rows = eca_run(start, EcaRule{90}, 64);
    REQUIRE(rows.size() == 65);
    for (std::size_t t = 0; t <= 64; ++t)
        CHECK(rows[t].cells == pascal_row(width, center, t).cells);
}

TEST_CASE("eca_run with zero steps returns the input row") {
    auto rows = eca_run(eca_row_from_bits("0110"), EcaRule{90}, 0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == eca_row_from_bits("0110"));
}

TEST_CASE("preimage sets are sound and sized as the linear algebra predicts") {
    const EcaRule r90{90};
    // Soundness: every claimed preimage steps to the row. Counts: on null
    // boundaries rule 90 is a bijection at even widths and two-or-none at
    // odd widths.
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            EcaRow row;
            row.cells.resize(n);
            for (std::size_t k = 0; k < n; ++k)
                row.cells[k] = (bits >> k) & 1;
            auto pre = preimages(row, r90);
            for (const auto& p : pre) CHECK(eca_step(p, r90) == row);
            if (n % 2 == 0)
                CHECK(pre.size() == 1);
            else
                CHECK((pre.size() == 0 || pre.size() == 2));
        }
    }
}

TEST_CASE("all-zero rows are their own preimage") {
    auto pre = preimages(eca_row_from_bits("0000"), EcaRule{90});
    REQUIRE(pre.size() == 1);
    CHECK(pre[0] == eca_row_from_bits("0000"));
}

TEST_CASE("periodic rule-90 rows with an odd 1-count have no preimage") {
    for (std::size_t n = 3; n <= 10; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            if (__builtin_popcount(bits) % 2 == 0) continue;
            EcaRow row;
            row.boundary = EcaBoundary::periodic;
            row.cells.resize(n);
            for (std::size_t k = 0; k < n; ++k)
                row.cells[k] = (bits >> k) & 1;
            CHECK(preimages(row, EcaRule{90}).empty());
        }
    }
}

TEST_CASE("preimage search enforces its width limit") {
    EcaRow row;
    row.cells.assign(25, 0);
    CHECK_THROWS_AS(preimages(row, EcaRule{90}), std::length_error);
}
