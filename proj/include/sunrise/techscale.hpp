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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sunrise/common.hpp"

namespace sunrise::techscale {

// Die-size-normalized chip comparison and process-node projection. Chips are
// compared per mm^2 of silicon; projections compose per-step density,
// performance, and power factors along the node chain and rescale the area
// metrics, with a power-density cap deciding whether extra speed or extra
// power saving is taken.

enum class DramNode { D3x, D1x, D1y, None };
enum class MemoryType { Dram, Sram };

inline const char* to_string(DramNode n) {
    switch (n) {
        case DramNode::D3x: return "3x";
        case DramNode::D1x: return "1x";
        case DramNode::D1y: return "1y";
        case DramNode::None: return "none";
    }
    return "?";
}

inline DramNode dram_node_from_string(const std::string& s) {
    if (s == "3x") return DramNode::D3x;
    if (s == "1x") return DramNode::D1x;
    if (s == "1y") return DramNode::D1y;
    if (s == "none") return DramNode::None;
    throw ValidationError("unknown DRAM node '" + s + "' (expected 3x, 1x, 1y, or none)");
}

struct ChipSpec {
    std::string name;
    std::uint32_t cmos_node_nm = 0;
    DramNode dram_node = DramNode::None;
    MemoryType memory_type = MemoryType::Sram;
    double die_area_mm2 = 0.0;
    double peak_tops = 0.0;
    double memory_capacity_mb = 0.0;
    double power_w = 0.0;
    std::optional<double> memory_bandwidth_tb;   // absent = vendor publishes no figure

    void validate() const {
        auto fail = [this](const std::string& what) {
            throw ValidationError("chip '" + name + "': " + what);
        };
        if (cmos_node_nm == 0) fail("cmos_node must be > 0");
        if (die_area_mm2 <= 0.0) fail("die_area must be > 0");
        if (peak_tops < 0.0) fail("peak_tops must be >= 0");
        if (memory_capacity_mb < 0.0) fail("memory_capacity must be >= 0");
        if (power_w <= 0.0) fail("power must be > 0");
        if (memory_bandwidth_tb && *memory_bandwidth_tb <= 0.0)
            fail("memory_bandwidth must be > 0 when present");
        if (memory_type == MemoryType::Dram && dram_node == DramNode::None)
            fail("DRAM-based chip needs a dram_node");
    }
};

struct AreaMetrics {
    double perf_per_area = 0.0;                    // TOPS/mm^2
    std::optional<double> bandwidth_per_area;      // GB/s/mm^2
    double capacity_per_area = 0.0;                // MB/mm^2
    double energy_efficiency = 0.0;                // TOPS/W
};

inline AreaMetrics normalize_per_area(const ChipSpec& spec) {
    spec.validate();
    AreaMetrics m;
    m.perf_per_area = spec.peak_tops / spec.die_area_mm2;
    m.capacity_per_area = spec.memory_capacity_mb / spec.die_area_mm2;
    m.energy_efficiency = spec.peak_tops / spec.power_w;
    if (spec.memory_bandwidth_tb)
        m.bandwidth_per_area = *spec.memory_bandwidth_tb * 1000.0 / spec.die_area_mm2;
    return m;
}

// One published shrink step. perf_improvement and power_reduction are the
// quoted fractions ("45% faster", "40% lower power").
struct NodeTransition {
    std::uint32_t from_nm = 0;
    std::uint32_t to_nm = 0;
    double density_ratio = 1.0;
    double perf_improvement = 0.0;
    double power_reduction = 0.0;

    void validate() const {
        if (from_nm == 0 || to_nm == 0)
            throw ValidationError("transition: node labels must be > 0");
        if (density_ratio < 1.0)
            throw ValidationError("transition " + std::to_string(from_nm) + "->" +
                                  std::to_string(to_nm) + ": density_ratio must be >= 1");
        if (perf_improvement < 0.0 || perf_improvement >= 1.0 || power_reduction < 0.0 ||
            power_reduction >= 1.0)
            throw ValidationError("transition " + std::to_string(from_nm) + "->" +
                                  std::to_string(to_nm) + ": fractions must be in [0,1)");
    }
};

// Cumulative factors over a node path: area density multiplier, speed
// multiplier, and residual power multiplier (product of (1-reduction)).
struct ScaleFactors {
    double density = 1.0;
    double performance = 1.0;
    double power = 1.0;
};

inline std::vector<NodeTransition> builtin_transitions() {
    return {
        {40, 28, 2.0, 0.45, 0.40},
        {28, 16, 2.0, 0.35, 0.55},
        {16, 12, 1.2, 0.28, 0.35},
        {16, 10, 2.0, 0.15, 0.35},
        {10, 7, 1.65, 0.22, 0.54},
    };
}

// Multiplies factors along the unique path from `from` to `to` in the
// transition graph (BFS over steps in either direction; a step taken
// backwards contributes reciprocal factors). Throws if no path exists,
// listing the known nodes.
inline ScaleFactors compose_transitions(std::uint32_t from, std::uint32_t to,
                                        const std::vector<NodeTransition>& table) {
    for (const auto& t : table) t.validate();
    ScaleFactors f;
    if (from == to) return f;

    std::map<std::uint32_t, std::pair<std::uint32_t, const NodeTransition*>> parent;
    std::deque<std::uint32_t> queue{from};
    parent[from] = {from, nullptr};
    while (!queue.empty() && !parent.count(to)) {
        const std::uint32_t n = queue.front();
        queue.pop_front();
        for (const auto& t : table) {
            const std::uint32_t next = t.from_nm == n ? t.to_nm : (t.to_nm == n ? t.from_nm : 0);
            if (next == 0 || parent.count(next)) continue;
            parent[next] = {n, &t};
            queue.push_back(next);
        }
    }
    if (!parent.count(to)) {
        std::string nodes;
        std::vector<std::uint32_t> known;
        for (const auto& t : table) {
            known.push_back(t.from_nm);
            known.push_back(t.to_nm);
        }
        std::sort(known.begin(), known.end(), std::greater<>());
        known.erase(std::unique(known.begin(), known.end()), known.end());
        for (std::uint32_t n : known) nodes += (nodes.empty() ? "" : ", ") + std::to_string(n);
        throw ValidationError("no scaling path from " + std::to_string(from) + "nm to " +
                              std::to_string(to) + "nm; known nodes: " + nodes);
    }
    for (std::uint32_t n = to; n != from; n = parent[n].first) {
        const NodeTransition* t = parent[n].second;
        if (t->to_nm == n) {   // forward step
            f.density *= t->density_ratio;
            f.performance *= 1.0 + t->perf_improvement;
            f.power *= 1.0 - t->power_reduction;
        } else {               // backward step
            f.density /= t->density_ratio;
            f.performance /= 1.0 + t->perf_improvement;
            f.power /= 1.0 - t->power_reduction;
        }
    }
    return f;
}

struct DramProcess {
    DramNode node = DramNode::D3x;
    double density_gb_mm2 = 0.0;
};

inline std::vector<DramProcess> builtin_dram_table() {
    return {{DramNode::D3x, 0.04}, {DramNode::D1x, 0.189}, {DramNode::D1y, 0.237}};
}

inline double dram_density(const std::vector<DramProcess>& table, DramNode node) {
    for (const auto& p : table)
        if (p.node == node) return p.density_gb_mm2;
    throw ValidationError(std::string("no density entry for DRAM node '") + to_string(node) +
                          "'");
}

struct ProjectionPolicy {
    double power_density_cap_w_mm2 = 0.5;    // above this, spend scaling on power instead
    double dram_sram_density_ratio = 14.0;   // DRAM cell density vs SRAM, same node
    bool convert_sram_to_dram = false;       // what-if: rebuild SRAM capacity as DRAM
};

enum class ScalingBranch { Performance, Power };

inline const char* to_string(ScalingBranch b) {
    return b == ScalingBranch::Performance ? "performance" : "power";
}

struct ProjectedChip {
    std::string chip;
    std::uint32_t target_cmos_nm = 0;
    DramNode target_dram = DramNode::None;
    ScalingBranch branch = ScalingBranch::Performance;
    ScaleFactors factors;
    AreaMetrics metrics;
    double power_density_w_mm2 = 0.0;        // projected W/mm^2
};

// Projects a chip's per-area metrics to a target process. Compute scales
// with the composed CMOS factors; the branch choice applies the speed gain
// only while the resulting power density stays under the cap, otherwise the
// step's power reduction is taken instead. Memory capacity follows the DRAM
// density table for DRAM chips and CMOS density for SRAM chips; bandwidth
// follows CMOS density (wires per area).
inline ProjectedChip project_chip(const ChipSpec& spec, std::uint32_t target_cmos,
                                  DramNode target_dram,
                                  const std::vector<NodeTransition>& transitions,
                                  const std::vector<DramProcess>& dram_table,
                                  const ProjectionPolicy& policy = {}) {
    spec.validate();
    const AreaMetrics base = normalize_per_area(spec);
    const ScaleFactors f = compose_transitions(spec.cmos_node_nm, target_cmos, transitions);

    ProjectedChip out;
    out.chip = spec.name;
    out.target_cmos_nm = target_cmos;
    out.target_dram = target_dram;
    out.factors = f;
    out.metrics = base;

    const double pd0 = spec.power_w / spec.die_area_mm2;
    const double pd_perf = pd0 * f.density * f.performance * f.power;
    if (pd_perf <= policy.power_density_cap_w_mm2) {
        out.branch = ScalingBranch::Performance;
        out.metrics.perf_per_area = base.perf_per_area * f.density * f.performance;
        out.power_density_w_mm2 = pd_perf;
    } else {
        out.branch = ScalingBranch::Power;
        out.metrics.perf_per_area = base.perf_per_area * f.density;
        out.power_density_w_mm2 = pd0 * f.density * f.power;
    }

    if (base.bandwidth_per_area)
        out.metrics.bandwidth_per_area = *base.bandwidth_per_area * f.density;

    if (spec.memory_type == MemoryType::Dram) {
        if (target_dram == DramNode::None)
            throw ValidationError("chip '" + spec.name +
                                  "' stores in DRAM; projection needs a target DRAM node");
        const double ratio = dram_density(dram_table, target_dram) /
                             dram_density(dram_table, spec.dram_node);
        out.metrics.capacity_per_area = base.capacity_per_area * ratio;
    } else if (policy.convert_sram_to_dram) {
        out.metrics.capacity_per_area =
            base.capacity_per_area * f.density * policy.dram_sram_density_ratio;
    } else {
        out.metrics.capacity_per_area = base.capacity_per_area * f.density;
    }

    // Either branch cancels to the same efficiency change: the performance
    // branch scales perf by D*P and power density by D*P*W, the power branch
    // by D and D*W, so efficiency improves by exactly 1/W both ways. Scaling
    // the base value directly keeps a same-node projection bit-identical.
    out.metrics.energy_efficiency = base.energy_efficiency / f.power;
    return out;
}

// The four reference chips. Capacity for the first entry uses the exact
// 4.5 Gb = 562.5 MB internal figure rather than the rounded marketing 560.
inline std::vector<ChipSpec> builtin_chips() {
    return {
        {"sunrise", 40, DramNode::D3x, MemoryType::Dram, 110.0, 25.0, 562.5, 12.0, 1.8},
        {"chip-a", 16, DramNode::None, MemoryType::Sram, 800.0, 122.0, 300.0, 120.0, 45.0},
        {"chip-b", 12, DramNode::None, MemoryType::Sram, 709.0, 125.0, 190.0, 280.0,
         std::nullopt},
        {"chip-c", 7, DramNode::None, MemoryType::Sram, 456.0, 512.0, 32.0, 350.0, 3.0},
    };
}

inline ChipSpec find_chip(const std::vector<ChipSpec>& chips, const std::string& name) {
    for (const auto& c : chips)
        if (c.name == name) return c;
    std::string names;
    for (const auto& c : chips) names += (names.empty() ? "" : ", ") + c.name;
    throw ValidationError("unknown chip '" + name + "'; known chips: " + names);
}

}  // namespace sunrise::techscale
