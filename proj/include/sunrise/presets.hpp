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

#include "sunrise/archsim.hpp"
#include "sunrise/resnet50.hpp"

namespace sunrise::presets {

// The reference machine configuration. Published facts: 32,768 MACs, 25 TOPS
// peak (fixing the clock at 25e12 / (2 * 32768) Hz), 13 TB/s DSU-VPU fabric,
// 1.8 TB/s aggregate DRAM bandwidth, 4.5 Gb capacity, 200 MB/s host link.
// Unpublished details (pool geometry, per-unit split, sync cost, energy
// constants) are filled with documented defaults; the bundled JSON file
// mirrors this function and is the editable copy.
inline archsim::ArchConfig sunrise_40nm() {
    archsim::ArchConfig a;
    a.name = "sunrise-40nm";
    a.vpu_count = 64;
    a.macs_per_vpu = 512;
    a.dsu_count = 64;
    a.clock_ghz = 0.3814697265625;
    a.dsu_vpu_bandwidth = 13e12;
    a.dram_bandwidth_total = 1.8e12;
    // Each pool: 2359 arrays * 64 B / 64-cycle latency = 2359 B/cycle, i.e.
    // 0.9 TB/s at the derived clock; the two pools together carry the
    // published 1.8 TB/s. Capacity: 2 * 2359 * 119,226 B = 4.50 Gb.
    a.vpu_pool = {"vpu-weights", 2359, 64, 64, 119226, 4096.0, 1.0};
    a.dsu_pool = {"dsu-features", 2359, 64, 64, 119226, 4096.0, 1.0};
    a.host_ingress = 200e6;
    a.energy_mac_pj = 1.2;
    a.energy_dram_bit_pj = 2.5;
    a.energy_fabric_bit_pj = 0.02;
    a.static_power_w = 2.0;
    a.uce_sync_cycles = 128;
    a.expected_total_macs = 32768;
    return a;
}

inline workload::ModelSpec resnet50() { return workload::build_resnet50(); }

}  // namespace sunrise::presets
