#include "lcas/evolve.hpp"

#include <algorithm>

namespace lcas {

SpaceTimeGrid evolve(const CAShift& ca, const Configuration& top_layer, int64_t steps,
                     int64_t top_time) {
    if (steps < 0) throw DomainError("step count must be nonnegative");
    const size_t sd = ca.dim() - 1;
    SpaceTimeGrid grid{ca.prime(), sd, top_time, {}, {}};

    std::map<ExpVec, uint32_t> layer;
    for (size_t i = 0; i < top_layer.window.size(); ++i) {
        if (top_layer.window.cell(i).size() != sd)
            throw DomainError("top layer cells must use the spatial coordinates");
        grid.top_cells.push_back(top_layer.window.cell(i));
        if (top_layer.values[i] % ca.p() != 0)
            layer.emplace(top_layer.window.cell(i), top_layer.values[i] % ca.p());
    }
    grid.layers.push_back(layer);

    for (int64_t k = 0; k < steps; ++k) {
        std::map<ExpVec, uint32_t> below;
        for (const auto& [n, cn] : ca.phi().terms()) {
            ExpVec sn(n.begin(), n.end() - 1);
            for (const auto& [u, vu] : layer) {
                ExpVec s = vec_add(u, sn);
                uint32_t& slot = below[s];
                slot = add_mod(slot, mul_mod(cn, vu, ca.p()), ca.p());
            }
        }
        std::erase_if(below, [](const auto& kv) { return kv.second == 0; });
        grid.layers.push_back(below);
        layer = std::move(below);
    }
    return grid;
}

namespace {

char glyph(uint32_t v) {
    if (v == 0) return '.';
    if (v <= 9) return char('0' + v);
    if (v <= 35) return char('a' + v - 10);
    if (v <= 61) return char('A' + v - 36);
    return '#';
}

struct Box {
    int64_t lo = 0, hi = 0; // single spatial axis
    bool any = false;
};

Box bounding(const SpaceTimeGrid& grid) {
    if (grid.space_dim != 1)
        throw DomainError("rendering requires a two-dimensional shift");
    Box b;
    auto include = [&b](int64_t x) {
        if (!b.any) {
            b.lo = b.hi = x;
            b.any = true;
        }
        b.lo = std::min(b.lo, x);
        b.hi = std::max(b.hi, x);
    };
    for (const auto& s : grid.top_cells) include(s[0]);
    for (const auto& layer : grid.layers)
        for (const auto& [s, v] : layer) include(s[0]);
    if (!b.any) b.lo = b.hi = 0; // degenerate grid still renders one column
    return b;
}

uint32_t value_at(const SpaceTimeGrid& grid, size_t row, int64_t x) {
    const auto& layer = grid.layers[row];
    auto it = layer.find(ExpVec{x});
    return it == layer.end() ? 0 : it->second;
}

} // namespace

std::string render_text(const SpaceTimeGrid& grid) {
    Box b = bounding(grid);
    std::string out;
    for (size_t row = 0; row < grid.layers.size(); ++row) {
        if (row) out += '\n';
        for (int64_t x = b.lo; x <= b.hi; ++x) out += glyph(value_at(grid, row, x));
    }
    return out;
}

std::vector<uint8_t> render_pgm(const SpaceTimeGrid& grid) {
    Box b = bounding(grid);
    const uint64_t w = uint64_t(b.hi - b.lo + 1);
    const uint64_t h = grid.layers.size();
    const uint32_t p = grid.p.value;
    std::string header =
        "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + w * h);
    for (size_t row = 0; row < h; ++row)
        for (int64_t x = b.lo; x <= b.hi; ++x) {
            uint32_t v = value_at(grid, row, x);
            // linear ramp with rounding: 0 -> 255 (white), p-1 -> 0 (black)
            uint32_t g = p == 1 ? 255
                                : uint32_t((510u * (p - 1 - v) + (p - 1)) / (2 * (p - 1)));
            out.push_back(static_cast<uint8_t>(g));
        }
    return out;
}

} // namespace lcas
