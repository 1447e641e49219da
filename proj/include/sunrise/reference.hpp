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

#include <optional>
#include <string>
#include <vector>

#include "sunrise/common.hpp"

namespace sunrise::reference {

// The published evaluation tables for the Sunrise chip and its comparison
// set, embedded as data so reconciliation can pair every computed value with
// its published counterpart. Values live here and only here; computation
// code never asserts against them. An empty cell means the vendor published
// no figure.

struct PublishedTable {
    std::string id;          // T1..T7
    std::string title;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::optional<double>>> cells;   // [row][col]

    std::optional<double> at(const std::string& row, const std::string& col) const {
        for (std::size_t r = 0; r < row_labels.size(); ++r) {
            if (row_labels[r] != row) continue;
            for (std::size_t c = 0; c < col_labels.size(); ++c)
                if (col_labels[c] == col) return cells[r][c];
        }
        throw ValidationError("table " + id + ": no cell (" + row + ", " + col + ")");
    }
};

inline const std::optional<double> kNoData = std::nullopt;

inline std::vector<PublishedTable> published_tables() {
    std::vector<PublishedTable> t;

    t.push_back({"T1",
                 "Die-to-die data path comparison",
                 {"wire_pitch_um", "wire_density", "bandwidth_tb_s"},
                 {"interposer", "tsv", "hitoc"},
                 {{11.5, 9.2, 1.0},
                  {86.0, 1.2e4, 1e6},
                  {0.086, 1.2, 100.0}}});

    t.push_back({"T2",
                 "Chip specifications",
                 {"process_nm", "die_size_mm2", "peak_tops", "memory_capacity_mb",
                  "power_w", "memory_bandwidth_tb_s"},
                 {"sunrise", "chip-a", "chip-b", "chip-c"},
                 {{40.0, 16.0, 12.0, 7.0},
                  {110.0, 800.0, 709.0, 456.0},
                  {25.0, 122.0, 125.0, 512.0},
                  {560.0, 300.0, 190.0, 32.0},
                  {12.0, 120.0, 280.0, 350.0},
                  {1.8, 45.0, kNoData, 3.0}}});

    t.push_back({"T3",
                 "Die-size-normalized benchmarks",
                 {"sunrise", "chip-a", "chip-b", "chip-c"},
                 {"perf_tops_mm2", "bandwidth_gb_s_mm2", "capacity_mb_mm2",
                  "efficiency_tops_w"},
                 {{0.23, 16.3, 5.11, 2.08},
                  {0.15, 56.2, 0.38, 1.02},
                  {0.18, kNoData, 0.27, 0.45},
                  {1.12, 6.6, 0.07, 1.46}}});

    t.push_back({"T4",
                 "Cost comparison (USD)",
                 {"sunrise", "chip-a", "chip-b", "chip-c"},
                 {"nre_usd", "die_cost_usd", "cost_per_tops_usd"},
                 {{2.2e6, 11.0, 0.43},
                  {7.2e6, 617.0, 2.47},
                  {15e6, 296.0, 1.19},
                  {24e6, 336.0, 0.66}}});

    t.push_back({"T5",
                 "CMOS node scaling parameters",
                 {"40->28", "28->16", "16->12", "16->10", "10->7"},
                 {"density_ratio", "perf_improvement", "power_reduction"},
                 {{2.0, 0.45, 0.40},
                  {2.0, 0.35, 0.55},
                  {1.2, 0.28, 0.35},
                  {2.0, 0.15, 0.35},
                  {1.65, 0.22, 0.54}}});

    t.push_back({"T6",
                 "DRAM process density",
                 {"density_gb_mm2"},
                 {"3x", "1x", "1y"},
                 {{0.04, 0.189, 0.237}}});

    t.push_back({"T7",
                 "Benchmarks normalized to 7nm CMOS and 1y DRAM",
                 {"sunrise", "chip-a", "chip-b", "chip-c"},
                 {"perf_tops_mm2", "bandwidth_gb_s_mm2", "capacity_mb_mm2",
                  "efficiency_tops_w"},
                 {{7.58, 216.0, 30.3, 50.10},
                  {0.86, 122.0, 1.50, 5.38},
                  {0.19, kNoData, 0.90, 0.83},
                  {1.12, 6.6, 0.07, 1.46}}});

    return t;
}

inline PublishedTable published_table(const std::string& id) {
    for (auto& t : published_tables())
        if (t.id == id) return t;
    throw ValidationError("unknown table id '" + id + "' (expected T1..T7)");
}

}  // namespace sunrise::reference
