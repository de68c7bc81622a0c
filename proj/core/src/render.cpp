#include "refco/render.hpp"

#include <stdexcept>

namespace refco {

namespace {

// Pixel grid assembled before encoding; 1 = black.
struct Canvas {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    Canvas(std::size_t w, std::size_t h)
        : width(w), height(h), pixels(w * h, 0) {}

    void set(std::size_t x, std::size_t y, std::uint8_t v) {
        pixels[y * width + x] = v;
    }
    std::uint8_t get(std::size_t x, std::size_t y) const {
        return pixels[y * width + x];
    }
};

void blit_rows(Canvas& canvas, const std::vector<const LatticeState*>& rows,
               std::size_t x0, std::size_t y0, const RasterSpec& spec) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const LatticeState& row = *rows[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            const bool is_s0 = row[c] == State::s0;
            const std::uint8_t px = (is_s0 == spec.s0_black) ? 1 : 0;
            for (unsigned dy = 0; dy < spec.scale; ++dy)
                for (unsigned dx = 0; dx < spec.scale; ++dx)
                    canvas.set(x0 + c * spec.scale + dx,
                               y0 + r * spec.scale + dy, px);
        }
    }
}

std::string encode_p1(const Canvas& canvas) {
    std::string out = "P1\n" + std::to_string(canvas.width) + " " +
                      std::to_string(canvas.height) + "\n";
    // Plain PBM keeps lines short; wrap at 64 pixels.
    constexpr std::size_t kWrap = 64;
    std::size_t line = 0;
    for (std::size_t y = 0; y < canvas.height; ++y) {
        for (std::size_t x = 0; x < canvas.width; ++x) {
            out.push_back(canvas.get(x, y) ? '1' : '0');
            if (++line == kWrap) {
                out.push_back('\n');
                line = 0;
            }
        }
    }
    if (line != 0) out.push_back('\n');
    return out;
}

std::string encode_p4(const Canvas& canvas) {
    std::string out = "P4\n" + std::to_string(canvas.width) + " " +
                      std::to_string(canvas.height) + "\n";
    const std::size_t stride = (canvas.width + 7) / 8;
    for (std::size_t y = 0; y < canvas.height; ++y) {
        std::string row(stride, '\0');
        for (std::size_t x = 0; x < canvas.width; ++x)
            if (canvas.get(x, y))
                row[x / 8] |= static_cast<char>(0x80 >> (x % 8));
        out += row;
    }
    return out;
}

std::string encode(const Canvas& canvas, const RasterSpec& spec) {
    return spec.binary ? encode_p4(canvas) : encode_p1(canvas);
}

std::vector<const LatticeState*> filter_rows(
    const std::vector<LatticeState>& rows, RowFilter filter) {
    std::vector<const LatticeState*> out;
    const std::size_t start = filter == RowFilter::odd ? 1 : 0;
    const std::size_t stride = filter == RowFilter::all ? 1 : 2;
    for (std::size_t t = start; t < rows.size(); t += stride)
        out.push_back(&rows[t]);
    return out;
}

void check_spec(const RasterSpec& spec) {
    if (spec.scale < 1) throw std::domain_error("scale must be >= 1");
}

}  // namespace

std::string render_lattice_rows(const std::vector<LatticeState>& rows,
                                const RasterSpec& spec) {
    check_spec(spec);
    if (rows.empty()) throw std::domain_error("nothing to render");
    std::vector<const LatticeState*> ptrs;
    ptrs.reserve(rows.size());
    for (const auto& r : rows) ptrs.push_back(&r);
    Canvas canvas(rows.front().size() * spec.scale, rows.size() * spec.scale);
    blit_rows(canvas, ptrs, 0, 0, spec);
    return encode(canvas, spec);
}

std::string render_trajectory(const Trajectory& traj, const RasterSpec& spec) {
    check_spec(spec);
    if (traj.rows.empty()) throw std::domain_error("nothing to render");
    const std::size_t n = traj.width();

    if (spec.row_filter != RowFilter::split_even_odd) {
        auto rows = filter_rows(traj.rows, spec.row_filter);
        Canvas canvas(n * spec.scale, rows.size() * spec.scale);
        blit_rows(canvas, rows, 0, 0, spec);
        return encode(canvas, spec);
    }

    auto evens = filter_rows(traj.rows, RowFilter::even);
    auto odds = filter_rows(traj.rows, RowFilter::odd);
    const std::size_t panel_rows = evens.size();  // >= odds.size()
    // Two equal-width panels with one white separator column between them.
    Canvas canvas(2 * n * spec.scale + 1, panel_rows * spec.scale);
    blit_rows(canvas, evens, 0, 0, spec);
    blit_rows(canvas, odds, n * spec.scale + 1, 0, spec);
    return encode(canvas, spec);
}

std::string render_atlas(const std::vector<AtlasEntry>& entries,
                         unsigned columns, const RasterSpec& spec) {
    check_spec(spec);
    if (entries.size() != 256)
        throw std::domain_error("atlas needs all 256 machines");
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].machine_id != static_cast<int>(i))
            throw std::domain_error("atlas entries must be in id order");
    if (columns == 0) throw std::domain_error("columns must be >= 1");

    const std::size_t tile_w = entries.front().trajectory.width();
    auto first_rows = filter_rows(entries.front().trajectory.rows,
                                  RowFilter::even);
    const std::size_t tile_h = first_rows.size();
    const unsigned grid_rows =
        static_cast<unsigned>((256 + columns - 1) / columns);

    Canvas canvas((tile_w * spec.scale + 1) * columns - 1,
                  (tile_h * spec.scale + 1) * grid_rows - 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto rows = filter_rows(entries[i].trajectory.rows, RowFilter::even);
        if (rows.size() != tile_h ||
            entries[i].trajectory.width() != tile_w)
            throw std::domain_error("atlas tiles must be uniform");
        const std::size_t col = i % columns;
        const std::size_t grid_row = i / columns;
        blit_rows(canvas, rows, col * (tile_w * spec.scale + 1),
                  grid_row * (tile_h * spec.scale + 1), spec);
    }
    return encode(canvas, spec);
}

}  // namespace refco
