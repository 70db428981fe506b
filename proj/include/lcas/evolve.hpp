#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcas/ca_shift.hpp"
#include "lcas/window.hpp"

namespace lcas {

// Layers of a space-time diagram. layers[k] holds the layer at time
// top_time - k as a finitely supported map over the spatial coordinates;
// absent cells are exactly zero, so the diagram is exact everywhere.
struct SpaceTimeGrid {
    Prime p;
    size_t space_dim;
    int64_t top_time;
    std::vector<std::map<ExpVec, uint32_t>> layers;
    std::vector<ExpVec> top_cells; // declared top-layer region; keeps the
                                   // rendered extent when values are zero
};

// Run the automaton downward from a finitely supported top layer: each step
// convolves the layer above with phi's coefficient table,
//   layer below(s) = sum over n of coeff(phi, n) * layer above(s - n).
// The top layer's window uses spatial (d-1 dimensional) cells.
SpaceTimeGrid evolve(const CAShift& ca, const Configuration& top_layer, int64_t steps,
                     int64_t top_time = 0);

// One glyph per cell over the bounding box of the grid's support, top layer
// first: '.' for zero, digits then letters for nonzero residues.
std::string render_text(const SpaceTimeGrid& grid);

// Binary PGM (P5), one gray level per residue: 0 -> 255, p-1 -> 0.
std::vector<uint8_t> render_pgm(const SpaceTimeGrid& grid);

} // namespace lcas
