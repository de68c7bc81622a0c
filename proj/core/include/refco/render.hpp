#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "refco/analysis.hpp"
#include "refco/engine.hpp"

namespace refco {

enum class RowFilter : std::uint8_t { all, even, odd, split_even_odd };

/// Raster conventions. Output is a portable bitmap: plain "P1" by default,
/// packed "P4" when `binary` is set. In PBM, pixel 1 is black; with the
/// default palette S0 renders black.
struct RasterSpec {
    RowFilter row_filter = RowFilter::all;
    unsigned scale = 1;  // pixels per cell, >= 1
    bool s0_black = true;
    bool binary = false;
};

/// Renders lattice rows as given (no filtering), top row first.
std::string render_lattice_rows(const std::vector<LatticeState>& rows,
                                const RasterSpec& spec);

/// Renders a trajectory's rows after applying the row filter. The split
/// filter places even rows in a left panel and odd rows in a right panel
/// separated by one white column; with an odd total row count the even
/// panel is one row taller and the odd panel is padded white.
std::string render_trajectory(const Trajectory& traj, const RasterSpec& spec);

/// 256 atlas tiles in id order, row-major, even rows only, separated by
/// one white pixel. Throws std::domain_error unless exactly the 256
/// machines are present in order.
std::string render_atlas(const std::vector<AtlasEntry>& entries,
                         unsigned columns, const RasterSpec& spec);

}  // namespace refco
