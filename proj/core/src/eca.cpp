#include "refco/eca.hpp"

#include <algorithm>
#include <stdexcept>

namespace refco {

EcaRow eca_row_from_bits(std::string_view bits, EcaBoundary boundary) {
    if (bits.empty()) throw std::domain_error("empty row");
    EcaRow row;
    row.boundary = boundary;
    row.cells.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::domain_error("row must be 0/1 characters");
        row.cells.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return row;
}

std::string bits_from_eca_row(const EcaRow& row) {
    std::string s;
    s.reserve(row.cells.size());
    for (auto c : row.cells) s.push_back(c ? '1' : '0');
    return s;
}

EcaRow eca_step(const EcaRow& row, EcaRule rule) {
    const auto& c = row.cells;
    const std::size_t n = c.size();
    if (n == 0) throw std::domain_error("empty row");

    EcaRow next;
    next.boundary = row.boundary;
    next.cells.resize(n);
    const bool wrap = row.boundary == EcaBoundary::periodic;
    for (std::size_t k = 0; k < n; ++k) {
        int l = k > 0 ? c[k - 1] : (wrap ? c[n - 1] : 0);
        int r = k + 1 < n ? c[k + 1] : (wrap ? c[0] : 0);
        next.cells[k] = static_cast<std::uint8_t>(rule.next(l, c[k], r));
    }
    return next;
}

std::vector<EcaRow> eca_run(const EcaRow& row, EcaRule rule,
                            std::size_t steps) {
    std::vector<EcaRow> rows;
    rows.reserve(steps + 1);
    rows.push_back(row);
    for (std::size_t t = 0; t < steps; ++t)
        rows.push_back(eca_step(rows.back(), rule));
    return rows;
}

std::vector<EcaRow> preimages(const EcaRow& row, EcaRule rule) {
    const std::size_t n = row.cells.size();
    if (n == 0) throw std::domain_error("empty row");
    if (n > kPreimageWidthLimit)
        throw std::length_error("preimage search limited to rows of <= 24 cells");

    // Pack the target once; candidates count up through all 2^n rows.
    std::uint32_t target = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (row.cells[k]) target |= std::uint32_t{1} << k;

    const bool wrap = row.boundary == EcaBoundary::periodic;
    std::vector<EcaRow> found;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < limit; ++x) {
        std::uint32_t img = 0;
        for (std::size_t k = 0; k < n; ++k) {
            int l, r;
            if (wrap) {
                l = (x >> ((k + n - 1) % n)) & 1;
                r = (x >> ((k + 1) % n)) & 1;
            } else {
                l = k > 0 ? (x >> (k - 1)) & 1 : 0;
                r = k + 1 < n ? (x >> (k + 1)) & 1 : 0;
            }
            img |= std::uint32_t(rule.next(l, (x >> k) & 1, r)) << k;
        }
        if (img == target) {
            EcaRow pre;
            pre.boundary = row.boundary;
            pre.cells.resize(n);
            for (std::size_t k = 0; k < n; ++k)
                pre.cells[k] = static_cast<std::uint8_t>((x >> k) & 1);
            found.push_back(std::move(pre));
        }
    }
    std::sort(found.begin(), found.end(),
              [](const EcaRow& a, const EcaRow& b) { return a.cells < b.cells; });
    return found;
}

}  // namespace refco
