// Snapshot binary format and CSV export.  A .plp file is a 64-byte header
// (magic "PLP1", dims, component count, step, time) followed by float64
// samples in row-major (y, x, layer, component) order; a .meta sidecar lists
// grid geometry and component names.
#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "plastiplate/solver.hpp"

namespace plp::io {

struct Snapshot {
    int nx = 0, ny = 0, nl = 0, ncomp = 0;
    int step = 0;
    double time = 0.0;
    double Lx = 0.0, Ly = 0.0;
    std::vector<double> data;                // (y, x, layer, component)
    std::vector<std::string> components;

    double at(int i, int j, int l, int c) const {
        return data[((static_cast<size_t>(j) * nx + i) * nl + l) * ncomp + c];
    }
};

// Packs a solver state: sigma, e, p per layer plus the displacement
// components broadcast across layers (12 components).
Snapshot make_snapshot(const PlateGrid& g, const PlateState& st);

// Writes base.plp and base.meta ("base" carries no extension).
void write_snapshot(const std::filesystem::path& base, const Snapshot& s);

// Reads a .plp file; picks up the sidecar .meta when present.
Snapshot read_snapshot(const std::filesystem::path& plp_path);

void export_csv(const Snapshot& s, std::ostream& os);

}  // namespace plp::io
