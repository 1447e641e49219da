/*
 * Copyright 2026 The sunrise-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunrise/common.hpp"

namespace sunrise::interconnect {

// Analytical models of the three die-to-die data paths: substrate routing
// between side-by-side dies (interposer), vertical vias through stacked dies
// (TSV), and face-to-face hybrid wafer bonding (HITOC). Wire pitch sets wire
// density, density sets aggregate bandwidth, and path length sets pJ/bit.

enum class LinkKind { Interposer, Tsv, Hitoc, Custom };

// Interposer wires leave a die edge (1-D); TSV and hybrid-bond pads tile the
// die face (2-D).
enum class LinkGeometry { Edge1D, Area2D };

struct IntegrationTech {
    std::string name;
    LinkKind kind = LinkKind::Custom;
    LinkGeometry geometry = LinkGeometry::Area2D;
    double pitch_x_um = 0.0;
    double pitch_y_um = 0.0;      // unused for Edge1D
    double energy_pj_per_bit = 0.0;
    double max_io_freq_ghz = 1.0;

    void validate() const {
        if (pitch_x_um <= 0.0)
            throw ValidationError("tech '" + name + "': pitch_x must be > 0");
        if (geometry == LinkGeometry::Area2D && pitch_y_um <= 0.0)
            throw ValidationError("tech '" + name + "': pitch_y must be > 0 for 2-D links");
        if (energy_pj_per_bit <= 0.0)
            throw ValidationError("tech '" + name + "': energy_per_bit must be > 0");
        if (max_io_freq_ghz <= 0.0)
            throw ValidationError("tech '" + name + "': max_io_freq must be > 0");
    }
};

// Connection budget for a die: how much area (2-D) or edge (1-D) is given to
// inter-die wires. For 1-D links the budget maps to an edge length of
// sqrt(die_area) * fraction * 100 mm, i.e. a 1% fraction buys one full die
// edge; set edge_length_mm to override that convention.
struct ConnectionBudget {
    double die_area_mm2 = 100.0;
    double connection_area_fraction = 0.01;   // in [0,1]
    double io_frequency_ghz = 1.0;
    double bits_per_wire_per_cycle = 1.0;     // single data rate
    std::optional<double> edge_length_mm;

    void validate() const {
        if (die_area_mm2 <= 0.0)
            throw ValidationError("budget: die_area must be > 0");
        if (connection_area_fraction < 0.0 || connection_area_fraction > 1.0)
            throw ValidationError("budget: connection_area_fraction must be in [0,1]");
        if (io_frequency_ghz <= 0.0)
            throw ValidationError("budget: io_frequency must be > 0");
        if (bits_per_wire_per_cycle <= 0.0)
            throw ValidationError("budget: bits_per_wire_per_cycle must be > 0");
        if (edge_length_mm && *edge_length_mm < 0.0)
            throw ValidationError("budget: edge_length must be >= 0");
    }

    double usable_edge_mm() const {
        if (edge_length_mm) return *edge_length_mm;
        return std::sqrt(die_area_mm2) * connection_area_fraction * 100.0;
    }

    double usable_area_mm2() const { return die_area_mm2 * connection_area_fraction; }
};

// Wires per mm^2 for 2-D links, wires per mm of edge for 1-D links.
// 1-D density is floored to whole wires per mm; 2-D keeps the continuous
// product (1000/px)*(1000/py).
inline double wire_density(const IntegrationTech& tech) {
    tech.validate();
    if (tech.geometry == LinkGeometry::Area2D)
        return (1000.0 / tech.pitch_x_um) * (1000.0 / tech.pitch_y_um);
    return std::floor(1000.0 / tech.pitch_x_um);
}

// Aggregate link bandwidth in bits/s given an already-known wire density.
// Split out from aggregate_bandwidth so published (rounded) densities can be
// plugged in directly.
inline double bandwidth_from_density(double density, LinkGeometry geometry,
                                     const ConnectionBudget& budget) {
    budget.validate();
    const double wires = geometry == LinkGeometry::Area2D
                             ? density * budget.usable_area_mm2()
                             : density * budget.usable_edge_mm();
    return wires * budget.io_frequency_ghz * 1e9 * budget.bits_per_wire_per_cycle;
}

inline double aggregate_bandwidth(const IntegrationTech& tech, const ConnectionBudget& budget) {
    return bandwidth_from_density(wire_density(tech), tech.geometry, budget);
}

inline double transfer_energy_pj(const IntegrationTech& tech, double bits) {
    tech.validate();
    if (bits < 0.0) throw ValidationError("transfer_energy: bit count must be >= 0");
    return bits * tech.energy_pj_per_bit;
}

inline double to_tb_per_s(double bits_per_s) { return bits_per_s / kBitsPerTb; }

// The three built-in technologies. Pitches in um, energies in pJ/bit.
inline std::vector<IntegrationTech> builtin_techs() {
    return {
        {"interposer", LinkKind::Interposer, LinkGeometry::Edge1D, 11.5, 0.0, 2.17, 1.0},
        {"tsv", LinkKind::Tsv, LinkGeometry::Area2D, 9.2, 9.2, 0.55, 1.0},
        {"hitoc", LinkKind::Hitoc, LinkGeometry::Area2D, 1.0, 1.0, 0.02, 1.0},
    };
}

inline IntegrationTech find_tech(const std::vector<IntegrationTech>& techs,
                                 const std::string& name) {
    for (const auto& t : techs)
        if (t.name == name) return t;
    throw ValidationError("unknown interconnect technology '" + name + "'");
}

}  // namespace sunrise::interconnect
