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
#include <string>
#include <vector>

#include "sunrise/common.hpp"
#include "sunrise/techscale.hpp"

namespace sunrise::econ {

// Manufacturing cost model: gross dies per wafer, defect-limited yield, die
// cost, and cost per TOPS. Wafer prices and defect densities are estimates
// calibrated once against public cost figures; they are not foundry quotes.

enum class YieldModel { Poisson, Murphy };

inline const char* to_string(YieldModel m) {
    return m == YieldModel::Poisson ? "poisson" : "murphy";
}

struct CostBasis {
    std::uint32_t node_nm = 0;
    double nre_usd = 0.0;               // mask set + design, one-time
    double wafer_cost_usd = 0.0;
    double wafer_diameter_mm = 300.0;
    double defect_density_mm2 = 0.0;    // defects per mm^2
    YieldModel yield_model = YieldModel::Poisson;

    void validate() const {
        auto fail = [this](const std::string& what) {
            throw ValidationError("cost basis " + std::to_string(node_nm) + "nm: " + what);
        };
        if (node_nm == 0) fail("node must be > 0");
        if (nre_usd < 0.0 || wafer_cost_usd < 0.0) fail("costs must be >= 0");
        if (wafer_diameter_mm <= 0.0) fail("wafer_diameter must be > 0");
        if (defect_density_mm2 < 0.0) fail("defect_density must be >= 0");
    }
};

// The memory wafer of a bonded logic+DRAM stack. Row repair lifts effective
// yield to a floor when raw yield falls below it.
struct DramWaferBasis {
    double wafer_cost_usd = 0.0;
    double wafer_diameter_mm = 300.0;
    double defect_density_mm2 = 0.0;
    double repair_yield_floor = 0.98;
    YieldModel yield_model = YieldModel::Poisson;

    void validate() const {
        if (wafer_cost_usd < 0.0)
            throw ValidationError("dram wafer basis: cost must be >= 0");
        if (wafer_diameter_mm <= 0.0)
            throw ValidationError("dram wafer basis: wafer_diameter must be > 0");
        if (defect_density_mm2 < 0.0)
            throw ValidationError("dram wafer basis: defect_density must be >= 0");
        if (repair_yield_floor <= 0.0 || repair_yield_floor > 1.0)
            throw ValidationError("dram wafer basis: repair_yield_floor must be in (0,1]");
    }
};

struct CostTable {
    std::vector<CostBasis> nodes;
    DramWaferBasis dram;
    double bonding_yield = 0.95;   // wafer-to-wafer bond survival

    void validate() const {
        for (const auto& b : nodes) b.validate();
        dram.validate();
        if (bonding_yield <= 0.0 || bonding_yield > 1.0)
            throw ValidationError("cost table: bonding_yield must be in (0,1]");
    }

    const CostBasis& at(std::uint32_t node_nm) const {
        for (const auto& b : nodes)
            if (b.node_nm == node_nm) return b;
        std::string known;
        for (const auto& b : nodes)
            known += (known.empty() ? "" : ", ") + std::to_string(b.node_nm);
        throw ValidationError("no cost basis for " + std::to_string(node_nm) +
                              "nm; known nodes: " + known);
    }
};

// Gross die count: wafer area over die area, minus an edge-loss term
// proportional to circumference over the die diagonal.
inline std::uint64_t dies_per_wafer(double die_area_mm2, double wafer_diameter_mm = 300.0) {
    if (die_area_mm2 <= 0.0) throw ValidationError("dies_per_wafer: die area must be > 0");
    if (wafer_diameter_mm <= 0.0)
        throw ValidationError("dies_per_wafer: wafer diameter must be > 0");
    const double r = wafer_diameter_mm / 2.0;
    const double v = M_PI * r * r / die_area_mm2 -
                     M_PI * wafer_diameter_mm / std::sqrt(2.0 * die_area_mm2);
    return v <= 0.0 ? 0 : static_cast<std::uint64_t>(std::floor(v));
}

inline double die_yield(double die_area_mm2, double defect_density_mm2, YieldModel model) {
    if (die_area_mm2 <= 0.0) throw ValidationError("die_yield: die area must be > 0");
    if (defect_density_mm2 < 0.0)
        throw ValidationError("die_yield: defect density must be >= 0");
    const double x = die_area_mm2 * defect_density_mm2;
    if (x == 0.0) return 1.0;
    if (model == YieldModel::Poisson) return std::exp(-x);
    const double m = (1.0 - std::exp(-x)) / x;
    return m * m;
}

// Cost of one good (possibly bonded) die. Single-wafer chips: wafer cost
// spread over good dies. Logic+DRAM stacks pay for a die site on both
// wafers, divided by the bonding yield.
inline double die_cost(const techscale::ChipSpec& spec, const CostTable& table) {
    spec.validate();
    table.validate();
    const CostBasis& basis = table.at(spec.cmos_node_nm);
    const std::uint64_t dies = dies_per_wafer(spec.die_area_mm2, basis.wafer_diameter_mm);
    if (dies == 0)
        throw ValidationError("chip '" + spec.name + "': die does not fit on a " +
                              format_sig3(basis.wafer_diameter_mm) + " mm wafer");
    const double logic_yield =
        die_yield(spec.die_area_mm2, basis.defect_density_mm2, basis.yield_model);
    const double logic_share = basis.wafer_cost_usd / (dies * logic_yield);
    if (spec.memory_type != techscale::MemoryType::Dram) return logic_share;

    const std::uint64_t dram_dies =
        dies_per_wafer(spec.die_area_mm2, table.dram.wafer_diameter_mm);
    if (dram_dies == 0)
        throw ValidationError("chip '" + spec.name + "': die does not fit on the DRAM wafer");
    const double dram_yield =
        std::max(die_yield(spec.die_area_mm2, table.dram.defect_density_mm2,
                           table.dram.yield_model),
                 table.dram.repair_yield_floor);
    const double dram_share = table.dram.wafer_cost_usd / (dram_dies * dram_yield);
    return (logic_share + dram_share) / table.bonding_yield;
}

inline double cost_per_tops(double die_cost_usd, double peak_tops) {
    if (die_cost_usd < 0.0) throw ValidationError("cost_per_tops: cost must be >= 0");
    if (peak_tops <= 0.0) throw ValidationError("cost_per_tops: peak_tops must be > 0");
    return die_cost_usd / peak_tops;
}

inline double nre(std::uint32_t node_nm, const CostTable& table) {
    return table.at(node_nm).nre_usd;
}

// Bundled calibration. Wafer costs and defect densities fitted once so the
// 40nm stacked part and the 7nm part land near their public cost figures.
inline CostTable builtin_cost_table() {
    CostTable t;
    t.nodes = {
        {40, 2.2e6, 3400.0, 300.0, 0.0005, YieldModel::Poisson},
        {16, 7.2e6, 6500.0, 300.0, 0.0008, YieldModel::Poisson},
        {12, 15e6, 6000.0, 300.0, 0.0009, YieldModel::Poisson},
        {7, 24e6, 24000.0, 300.0, 0.0012, YieldModel::Poisson},
    };
    t.dram = {2280.0, 300.0, 0.0008, 0.98, YieldModel::Poisson};
    t.bonding_yield = 0.95;
    return t;
}

}  // namespace sunrise::econ
