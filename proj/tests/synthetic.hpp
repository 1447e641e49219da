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

// Synthetic single-layer cases with one phase dominating by at least 2x.
// Under that margin the event pipeline and the closed-form schedule agree to
// within one pipeline-fill tile, so the suite pins the two implementations
// against each other across every bottleneck class.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sunrise/archsim.hpp"

namespace synthetic {

struct Case {
    std::string name;
    sunrise::workload::ModelSpec model;
    sunrise::archsim::ArchConfig arch;
    bool fold_ingress = false;
    sunrise::archsim::Bottleneck expected;
};

// Pools with W == L deliver array_count bytes/cycle, so integer rates map
// straight to array counts. Clock is 1 GHz to keep cycles readable.
inline sunrise::archsim::ArchConfig make_arch(std::uint32_t fabric_bpc,
                                              std::uint32_t weight_bpc,
                                              std::uint32_t writeback_bpc,
                                              std::uint32_t macs_per_vpu,
                                              std::uint32_t sync,
                                              double host_ingress = 1e9) {
    sunrise::archsim::ArchConfig a;
    a.name = "synthetic";
    a.vpu_count = 8;
    a.macs_per_vpu = macs_per_vpu;
    a.dsu_count = 8;
    a.clock_ghz = 1.0;
    a.dsu_vpu_bandwidth = fabric_bpc * 1e9;
    a.vpu_pool = {"w", weight_bpc, 64, 64, 1 << 20, 1e18, 1.0};
    a.dsu_pool = {"f", writeback_bpc, 64, 64, 1 << 20, 1e18, 1.0};
    a.dram_bandwidth_total = (weight_bpc + writeback_bpc) * 1e9;
    a.host_ingress = host_ingress;
    a.uce_sync_cycles = sync;
    a.expected_total_macs = 0;
    return a;
}

inline sunrise::workload::ModelSpec fc_model(const std::string& name, std::uint32_t in_c,
                                             std::uint32_t out_c,
                                             std::uint64_t input_bytes = 0) {
    sunrise::workload::ModelSpec m;
    m.name = name;
    m.layers = {{name, sunrise::workload::LayerKind::FullyConnected, 1, 1, in_c, 1, 1, out_c}};
    m.input_bytes = input_bytes;
    return m;
}

inline std::vector<Case> cases() {
    using sunrise::archsim::Bottleneck;
    using sunrise::workload::LayerKind;
    std::vector<Case> out;

    for (std::uint32_t in_c : {16384u, 65536u, 131072u, 262144u})
        out.push_back({"compute-fc-" + std::to_string(in_c),
                       fc_model("fc", in_c, 8),
                       make_arch(1024, 2048, 2048, 64, 8),
                       false,
                       Bottleneck::Compute});

    for (std::uint32_t in_c : {16384u, 65536u, 131072u, 262144u})
        out.push_back({"broadcast-fc-" + std::to_string(in_c),
                       fc_model("fc", in_c, 1),
                       make_arch(16, 256, 256, 512, 0),
                       false,
                       Bottleneck::Broadcast});

    for (std::uint32_t in_c : {8192u, 16384u, 32768u, 65536u})
        out.push_back({"weights-fc-" + std::to_string(in_c),
                       fc_model("fc", in_c, 8),
                       make_arch(1024, 1, 1024, 512, 8),
                       false,
                       Bottleneck::DramWeights});

    for (auto [side, ch] : {std::pair{64u, 4u}, {96u, 4u}, {128u, 8u}, {192u, 8u}}) {
        sunrise::workload::ModelSpec m;
        m.name = "eltwise";
        m.layers = {{"add", LayerKind::ElementWise, side, side, ch, 1, 1, ch}};
        out.push_back({"writeback-eltwise-" + std::to_string(side * side * ch),
                       std::move(m),
                       make_arch(1024, 1024, 1, 64, 0),
                       false,
                       Bottleneck::DramWriteback});
    }

    for (std::uint32_t in_c : {16384u, 32768u, 65536u, 131072u})
        out.push_back({"ingress-fc-" + std::to_string(in_c),
                       fc_model("fc", in_c, 8, in_c),
                       make_arch(1024, 2048, 1024, 64, 8, 62.5e6),
                       true,
                       Bottleneck::Ingress});

    // Multi-round cases: several output-channel tiles per layer, weight load
    // still under one fill tile.
    out.push_back({"compute-fc-4round",
                   fc_model("fc", 65536, 32),
                   make_arch(1024, 4096, 2048, 64, 8),
                   false,
                   Bottleneck::Compute});
    {
        sunrise::workload::ModelSpec m;
        m.name = "conv";
        m.layers = {{"conv", LayerKind::Conv2D, 32, 32, 16, 3, 3, 32, 1, 1}};
        out.push_back({"compute-conv-4round",
                       std::move(m),
                       make_arch(1024, 4096, 2048, 64, 8),
                       false,
                       Bottleneck::Compute});
    }
    return out;
}

}  // namespace synthetic
