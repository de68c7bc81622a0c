#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace refco {

enum class EcaBoundary : std::uint8_t {
    null,      // cells beyond both ends read as constant 0
    periodic,  // ends wrap around
};

/// Elementary CA rule in Wolfram numbering: the new cell for neighborhood
/// (l, c, r) is bit (4l + 2c + r) of the rule byte.
struct EcaRule {
    std::uint8_t rule;

    int next(int l, int c, int r) const {
        return (rule >> ((l << 2) | (c << 1) | r)) & 1;
    }
};

struct EcaRow {
    std::vector<std::uint8_t> cells;  // 0/1 values
    EcaBoundary boundary = EcaBoundary::null;

    bool operator==(const EcaRow&) const = default;
};

EcaRow eca_row_from_bits(std::string_view bits,
                         EcaBoundary boundary = EcaBoundary::null);
std::string bits_from_eca_row(const EcaRow& row);

/// One synchronous step. Throws std::domain_error on an empty row.
EcaRow eca_step(const EcaRow& row, EcaRule rule);

/// T steps; returns T+1 rows with row 0 = input.
std::vector<EcaRow> eca_run(const EcaRow& row, EcaRule rule,
                            std::size_t steps);

/// All rows r with eca_step(r, rule) == row, by exhaustive enumeration of
/// the 2^n candidates. Rows longer than 24 cells throw std::length_error.
/// Result is sorted by cell values (deterministic set order).
std::vector<EcaRow> preimages(const EcaRow& row, EcaRule rule);

inline constexpr std::size_t kPreimageWidthLimit = 24;

}  // namespace refco
