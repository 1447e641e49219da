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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sunrise/archsim.hpp"
#include "sunrise/common.hpp"
#include "sunrise/econ.hpp"
#include "sunrise/interconnect.hpp"
#include "sunrise/techscale.hpp"
#include "sunrise/unimem.hpp"
#include "sunrise/workload.hpp"

// JSON (de)serialization for every config type, file loading with a search
// path, and SimResult export. Schemas mirror the struct fields one to one;
// optional fields may be omitted or null.

namespace sunrise::workload {

inline LayerKind layer_kind_from_string(const std::string& s) {
    if (s == "conv") return LayerKind::Conv2D;
    if (s == "fc") return LayerKind::FullyConnected;
    if (s == "pool") return LayerKind::Pool;
    if (s == "eltwise") return LayerKind::ElementWise;
    throw ValidationError("unknown layer kind '" + s +
                          "' (expected conv, fc, pool, or eltwise)");
}

template <typename J>
void to_json(J& j, const LayerSpec& l) {
    j = J{{"name", l.name},
          {"kind", to_string(l.kind)},
          {"in_h", l.in_h},
          {"in_w", l.in_w},
          {"in_c", l.in_c},
          {"kernel_h", l.kernel_h},
          {"kernel_w", l.kernel_w},
          {"out_c", l.out_c},
          {"stride", l.stride},
          {"padding", l.padding},
          {"bytes_per_weight", l.bytes_per_weight},
          {"bytes_per_activation", l.bytes_per_activation},
          {"density", l.density}};
    if (l.source) j["source"] = *l.source;
    if (l.source2) j["source2"] = *l.source2;
}

template <typename J>
void from_json(const J& j, LayerSpec& l) {
    l.name = j.at("name").template get<std::string>();
    l.kind = layer_kind_from_string(j.at("kind").template get<std::string>());
    l.in_h = j.at("in_h").template get<std::uint32_t>();
    l.in_w = j.at("in_w").template get<std::uint32_t>();
    l.in_c = j.at("in_c").template get<std::uint32_t>();
    l.kernel_h = j.value("kernel_h", 1u);
    l.kernel_w = j.value("kernel_w", 1u);
    l.out_c = j.at("out_c").template get<std::uint32_t>();
    l.stride = j.value("stride", 1u);
    l.padding = j.value("padding", 0u);
    l.bytes_per_weight = j.value("bytes_per_weight", 1u);
    l.bytes_per_activation = j.value("bytes_per_activation", 1u);
    l.density = j.value("density", 1.0);
    if (j.contains("source") && !j.at("source").is_null())
        l.source = j.at("source").template get<std::string>();
    if (j.contains("source2") && !j.at("source2").is_null())
        l.source2 = j.at("source2").template get<std::string>();
}

template <typename J>
void to_json(J& j, const ModelSpec& m) {
    j = J{{"name", m.name}, {"input_bytes", m.input_bytes}, {"layers", m.layers}};
}

template <typename J>
void from_json(const J& j, ModelSpec& m) {
    m.name = j.at("name").template get<std::string>();
    m.input_bytes = j.at("input_bytes").template get<std::uint64_t>();
    m.layers = j.at("layers").template get<std::vector<LayerSpec>>();
}

}  // namespace sunrise::workload

namespace sunrise::unimem {

template <typename J>
void to_json(J& j, const DramArrayPool& p) {
    j = J{{"name", p.name},
          {"array_count", p.array_count},
          {"array_latency", p.array_latency},
          {"word_bytes", p.word_bytes},
          {"array_capacity", p.array_capacity},
          {"bus_limit", p.bus_limit},
          {"refresh_derate", p.refresh_derate}};
}

template <typename J>
void from_json(const J& j, DramArrayPool& p) {
    p.name = j.at("name").template get<std::string>();
    p.array_count = j.at("array_count").template get<std::uint32_t>();
    p.array_latency = j.at("array_latency").template get<std::uint32_t>();
    p.word_bytes = j.at("word_bytes").template get<std::uint32_t>();
    p.array_capacity = j.at("array_capacity").template get<std::uint64_t>();
    p.bus_limit = j.at("bus_limit").template get<double>();
    p.refresh_derate = j.value("refresh_derate", 1.0);
}

}  // namespace sunrise::unimem

namespace sunrise::archsim {

template <typename J>
void to_json(J& j, const ArchConfig& a) {
    j = J{{"name", a.name},
          {"vpu_count", a.vpu_count},
          {"macs_per_vpu", a.macs_per_vpu},
          {"dsu_count", a.dsu_count},
          {"clock_ghz", a.clock_ghz},
          {"dsu_vpu_bandwidth", a.dsu_vpu_bandwidth},
          {"dram_bandwidth_total", a.dram_bandwidth_total},
          {"vpu_pool", a.vpu_pool},
          {"dsu_pool", a.dsu_pool},
          {"host_ingress", a.host_ingress},
          {"energy_mac_pj", a.energy_mac_pj},
          {"energy_dram_bit_pj", a.energy_dram_bit_pj},
          {"energy_fabric_bit_pj", a.energy_fabric_bit_pj},
          {"static_power_w", a.static_power_w},
          {"uce_sync_cycles", a.uce_sync_cycles},
          {"expected_total_macs", a.expected_total_macs}};
}

template <typename J>
void from_json(const J& j, ArchConfig& a) {
    a.name = j.at("name").template get<std::string>();
    a.vpu_count = j.at("vpu_count").template get<std::uint32_t>();
    a.macs_per_vpu = j.at("macs_per_vpu").template get<std::uint32_t>();
    a.dsu_count = j.at("dsu_count").template get<std::uint32_t>();
    a.clock_ghz = j.at("clock_ghz").template get<double>();
    a.dsu_vpu_bandwidth = j.at("dsu_vpu_bandwidth").template get<double>();
    a.dram_bandwidth_total = j.at("dram_bandwidth_total").template get<double>();
    a.vpu_pool = j.at("vpu_pool").template get<unimem::DramArrayPool>();
    a.dsu_pool = j.at("dsu_pool").template get<unimem::DramArrayPool>();
    a.host_ingress = j.at("host_ingress").template get<double>();
    a.energy_mac_pj = j.at("energy_mac_pj").template get<double>();
    a.energy_dram_bit_pj = j.at("energy_dram_bit_pj").template get<double>();
    a.energy_fabric_bit_pj = j.at("energy_fabric_bit_pj").template get<double>();
    a.static_power_w = j.at("static_power_w").template get<double>();
    a.uce_sync_cycles = j.value("uce_sync_cycles", 128u);
    a.expected_total_macs = j.value("expected_total_macs", std::uint64_t{32768});
}

}  // namespace sunrise::archsim

namespace sunrise::interconnect {

inline LinkKind link_kind_from_string(const std::string& s) {
    if (s == "interposer") return LinkKind::Interposer;
    if (s == "tsv") return LinkKind::Tsv;
    if (s == "hitoc") return LinkKind::Hitoc;
    if (s == "custom") return LinkKind::Custom;
    throw ValidationError("unknown link kind '" + s + "'");
}

inline const char* to_string(LinkKind k) {
    switch (k) {
        case LinkKind::Interposer: return "interposer";
        case LinkKind::Tsv: return "tsv";
        case LinkKind::Hitoc: return "hitoc";
        case LinkKind::Custom: return "custom";
    }
    return "?";
}

inline LinkGeometry geometry_from_string(const std::string& s) {
    if (s == "edge-1d") return LinkGeometry::Edge1D;
    if (s == "area-2d") return LinkGeometry::Area2D;
    throw ValidationError("unknown link geometry '" + s + "' (expected edge-1d or area-2d)");
}

inline const char* to_string(LinkGeometry g) {
    return g == LinkGeometry::Edge1D ? "edge-1d" : "area-2d";
}

template <typename J>
void to_json(J& j, const IntegrationTech& t) {
    j = J{{"name", t.name},
          {"kind", to_string(t.kind)},
          {"geometry", to_string(t.geometry)},
          {"pitch_x_um", t.pitch_x_um},
          {"pitch_y_um", t.pitch_y_um},
          {"energy_pj_per_bit", t.energy_pj_per_bit},
          {"max_io_freq_ghz", t.max_io_freq_ghz}};
}

template <typename J>
void from_json(const J& j, IntegrationTech& t) {
    t.name = j.at("name").template get<std::string>();
    t.kind = link_kind_from_string(j.at("kind").template get<std::string>());
    t.geometry = geometry_from_string(j.at("geometry").template get<std::string>());
    t.pitch_x_um = j.at("pitch_x_um").template get<double>();
    t.pitch_y_um = j.value("pitch_y_um", 0.0);
    t.energy_pj_per_bit = j.at("energy_pj_per_bit").template get<double>();
    t.max_io_freq_ghz = j.value("max_io_freq_ghz", 1.0);
}

template <typename J>
void to_json(J& j, const ConnectionBudget& b) {
    j = J{{"die_area_mm2", b.die_area_mm2},
          {"connection_area_fraction", b.connection_area_fraction},
          {"io_frequency_ghz", b.io_frequency_ghz},
          {"bits_per_wire_per_cycle", b.bits_per_wire_per_cycle}};
    if (b.edge_length_mm) j["edge_length_mm"] = *b.edge_length_mm;
}

template <typename J>
void from_json(const J& j, ConnectionBudget& b) {
    b.die_area_mm2 = j.value("die_area_mm2", 100.0);
    b.connection_area_fraction = j.value("connection_area_fraction", 0.01);
    b.io_frequency_ghz = j.value("io_frequency_ghz", 1.0);
    b.bits_per_wire_per_cycle = j.value("bits_per_wire_per_cycle", 1.0);
    if (j.contains("edge_length_mm") && !j.at("edge_length_mm").is_null())
        b.edge_length_mm = j.at("edge_length_mm").template get<double>();
}

}  // namespace sunrise::interconnect

namespace sunrise::techscale {

inline MemoryType memory_type_from_string(const std::string& s) {
    if (s == "dram") return MemoryType::Dram;
    if (s == "sram") return MemoryType::Sram;
    throw ValidationError("unknown memory type '" + s + "' (expected dram or sram)");
}

inline const char* to_string(MemoryType m) {
    return m == MemoryType::Dram ? "dram" : "sram";
}

template <typename J>
void to_json(J& j, const ChipSpec& c) {
    j = J{{"name", c.name},
          {"cmos_node_nm", c.cmos_node_nm},
          {"dram_node", to_string(c.dram_node)},
          {"memory_type", to_string(c.memory_type)},
          {"die_area_mm2", c.die_area_mm2},
          {"peak_tops", c.peak_tops},
          {"memory_capacity_mb", c.memory_capacity_mb},
          {"power_w", c.power_w}};
    j["memory_bandwidth_tb"] =
        c.memory_bandwidth_tb ? J(*c.memory_bandwidth_tb) : J(nullptr);
}

template <typename J>
void from_json(const J& j, ChipSpec& c) {
    c.name = j.at("name").template get<std::string>();
    c.cmos_node_nm = j.at("cmos_node_nm").template get<std::uint32_t>();
    c.dram_node = dram_node_from_string(j.value("dram_node", std::string("none")));
    c.memory_type = memory_type_from_string(j.at("memory_type").template get<std::string>());
    c.die_area_mm2 = j.at("die_area_mm2").template get<double>();
    c.peak_tops = j.at("peak_tops").template get<double>();
    c.memory_capacity_mb = j.at("memory_capacity_mb").template get<double>();
    c.power_w = j.at("power_w").template get<double>();
    if (j.contains("memory_bandwidth_tb") && !j.at("memory_bandwidth_tb").is_null())
        c.memory_bandwidth_tb = j.at("memory_bandwidth_tb").template get<double>();
}

template <typename J>
void to_json(J& j, const NodeTransition& t) {
    j = J{{"from_nm", t.from_nm},
          {"to_nm", t.to_nm},
          {"density_ratio", t.density_ratio},
          {"perf_improvement", t.perf_improvement},
          {"power_reduction", t.power_reduction}};
}

template <typename J>
void from_json(const J& j, NodeTransition& t) {
    t.from_nm = j.at("from_nm").template get<std::uint32_t>();
    t.to_nm = j.at("to_nm").template get<std::uint32_t>();
    t.density_ratio = j.at("density_ratio").template get<double>();
    t.perf_improvement = j.at("perf_improvement").template get<double>();
    t.power_reduction = j.at("power_reduction").template get<double>();
}

template <typename J>
void to_json(J& j, const DramProcess& p) {
    j = J{{"node", to_string(p.node)}, {"density_gb_mm2", p.density_gb_mm2}};
}

template <typename J>
void from_json(const J& j, DramProcess& p) {
    p.node = dram_node_from_string(j.at("node").template get<std::string>());
    p.density_gb_mm2 = j.at("density_gb_mm2").template get<double>();
}

template <typename J>
void to_json(J& j, const ProjectionPolicy& p) {
    j = J{{"power_density_cap_w_mm2", p.power_density_cap_w_mm2},
          {"dram_sram_density_ratio", p.dram_sram_density_ratio},
          {"convert_sram_to_dram", p.convert_sram_to_dram}};
}

template <typename J>
void from_json(const J& j, ProjectionPolicy& p) {
    p.power_density_cap_w_mm2 = j.value("power_density_cap_w_mm2", 0.5);
    p.dram_sram_density_ratio = j.value("dram_sram_density_ratio", 14.0);
    p.convert_sram_to_dram = j.value("convert_sram_to_dram", false);
}

}  // namespace sunrise::techscale

namespace sunrise::econ {

inline YieldModel yield_model_from_string(const std::string& s) {
    if (s == "poisson") return YieldModel::Poisson;
    if (s == "murphy") return YieldModel::Murphy;
    throw ValidationError("unknown yield model '" + s + "' (expected poisson or murphy)");
}

template <typename J>
void to_json(J& j, const CostBasis& b) {
    j = J{{"node_nm", b.node_nm},
          {"nre_usd", b.nre_usd},
          {"wafer_cost_usd", b.wafer_cost_usd},
          {"wafer_diameter_mm", b.wafer_diameter_mm},
          {"defect_density_mm2", b.defect_density_mm2},
          {"yield_model", to_string(b.yield_model)}};
}

template <typename J>
void from_json(const J& j, CostBasis& b) {
    b.node_nm = j.at("node_nm").template get<std::uint32_t>();
    b.nre_usd = j.at("nre_usd").template get<double>();
    b.wafer_cost_usd = j.at("wafer_cost_usd").template get<double>();
    b.wafer_diameter_mm = j.value("wafer_diameter_mm", 300.0);
    b.defect_density_mm2 = j.at("defect_density_mm2").template get<double>();
    b.yield_model = yield_model_from_string(j.value("yield_model", std::string("poisson")));
}

template <typename J>
void to_json(J& j, const DramWaferBasis& b) {
    j = J{{"wafer_cost_usd", b.wafer_cost_usd},
          {"wafer_diameter_mm", b.wafer_diameter_mm},
          {"defect_density_mm2", b.defect_density_mm2},
          {"repair_yield_floor", b.repair_yield_floor},
          {"yield_model", to_string(b.yield_model)}};
}

template <typename J>
void from_json(const J& j, DramWaferBasis& b) {
    b.wafer_cost_usd = j.at("wafer_cost_usd").template get<double>();
    b.wafer_diameter_mm = j.value("wafer_diameter_mm", 300.0);
    b.defect_density_mm2 = j.at("defect_density_mm2").template get<double>();
    b.repair_yield_floor = j.value("repair_yield_floor", 0.98);
    b.yield_model = yield_model_from_string(j.value("yield_model", std::string("poisson")));
}

template <typename J>
void to_json(J& j, const CostTable& t) {
    j = J{{"nodes", t.nodes}, {"dram", t.dram}, {"bonding_yield", t.bonding_yield}};
}

template <typename J>
void from_json(const J& j, CostTable& t) {
    t.nodes = j.at("nodes").template get<std::vector<CostBasis>>();
    t.dram = j.at("dram").template get<DramWaferBasis>();
    t.bonding_yield = j.value("bonding_yield", 0.95);
}

}  // namespace sunrise::econ

namespace sunrise::io {

using json = nlohmann::ordered_json;

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed JSON in '" + path + "': " + e.what());
    }
}

inline void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

// Resolves a config argument: an existing path wins; otherwise each
// directory in $SUNRISE_CONFIG_PATH (colon separated), then ./data, is
// searched for <dir>/<subdir>/<name>.json and <dir>/<name>.json.
inline std::string resolve_config(const std::string& name, const std::string& subdir) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;

    std::vector<std::string> dirs;
    if (const char* env = std::getenv("SUNRISE_CONFIG_PATH")) {
        std::string s(env);
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const std::size_t next = s.find(':', pos);
            const std::string dir = s.substr(pos, next == std::string::npos ? next : next - pos);
            if (!dir.empty()) dirs.push_back(dir);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    dirs.push_back("data");

    std::vector<std::string> tried;
    for (const auto& dir : dirs) {
        for (const std::string& cand :
             {dir + "/" + subdir + "/" + name + ".json", dir + "/" + subdir + "/" + name,
              dir + "/" + name + ".json", dir + "/" + name}) {
            if (fs::exists(cand)) return cand;
            tried.push_back(cand);
        }
    }
    std::string msg = "config '" + name + "' not found; tried:";
    for (const auto& t : tried) msg += " " + t;
    throw IoError(msg);
}

template <typename T>
T load_as(const std::string& path, const std::string& key = "") {
    const json j = load_json(path);
    try {
        if (key.empty()) return j.get<T>();
        return j.at(key).template get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("bad schema in '" + path + "': " + e.what());
    }
}

inline archsim::ArchConfig load_arch(const std::string& path) {
    auto a = load_as<archsim::ArchConfig>(path);
    archsim::ensure_valid(a);
    return a;
}

inline workload::ModelSpec load_model(const std::string& path) {
    auto m = load_as<workload::ModelSpec>(path);
    workload::validate_model(m);
    return m;
}

inline std::vector<techscale::ChipSpec> load_chips(const std::string& path) {
    auto chips = load_as<std::vector<techscale::ChipSpec>>(path, "chips");
    for (const auto& c : chips) c.validate();
    return chips;
}

inline econ::CostTable load_cost_table(const std::string& path) {
    auto t = load_as<econ::CostTable>(path);
    t.validate();
    return t;
}

inline std::vector<techscale::NodeTransition> load_transitions(const std::string& path) {
    auto t = load_as<std::vector<techscale::NodeTransition>>(path, "transitions");
    for (const auto& x : t) x.validate();
    return t;
}

inline std::vector<techscale::DramProcess> load_dram_table(const std::string& path) {
    return load_as<std::vector<techscale::DramProcess>>(path, "processes");
}

struct TechFile {
    std::vector<interconnect::IntegrationTech> techs;
    interconnect::ConnectionBudget budget;
};

inline TechFile load_techs(const std::string& path) {
    const json j = load_json(path);
    TechFile f;
    try {
        f.techs = j.at("techs").get<std::vector<interconnect::IntegrationTech>>();
        if (j.contains("default_budget"))
            f.budget = j.at("default_budget").get<interconnect::ConnectionBudget>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("bad schema in '" + path + "': " + e.what());
    }
    for (const auto& t : f.techs) t.validate();
    f.budget.validate();
    return f;
}

// Fixed-width float text for CSV rows: 9 significant digits, enough to
// compare runs, short enough to read.
inline std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

inline json sim_result_to_json(const archsim::SimResult& r) {
    json j;
    j["model"] = r.model_name;
    j["arch"] = r.arch_name;
    j["batch"] = r.batch;
    j["ingress_folded"] = r.ingress_folded;
    j["total_cycles"] = r.total_cycles;
    j["time_s"] = r.time_s;
    j["throughput_inf_s"] = r.throughput;
    j["effective_tops"] = r.effective_tops;
    j["avg_power_w"] = r.avg_power_w;
    j["energy_per_inference_j"] = r.energy_per_inference_j;
    j["ingress_bound_throughput_inf_s"] = r.ingress_bound_throughput;
    j["energy_j"] = {{"mac", r.energy.mac_j},
                     {"dram", r.energy.dram_j},
                     {"fabric", r.energy.fabric_j},
                     {"static", r.static_energy_j},
                     {"total", r.energy.dynamic_j() + r.static_energy_j}};
    j["per_layer"] = json::array();
    for (const auto& l : r.per_layer) {
        json lj;
        lj["name"] = l.name;
        lj["kind"] = workload::to_string(l.kind);
        lj["compute_cycles"] = l.compute_cycles;
        lj["broadcast_cycles"] = l.broadcast_cycles;
        lj["weight_load_cycles"] = l.weight_load_cycles;
        lj["writeback_cycles"] = l.writeback_cycles;
        lj["ingress_cycles"] = l.ingress_cycles;
        lj["sync_cycles"] = l.sync_cycles;
        lj["pipeline_fill"] = l.pipeline_fill;
        lj["total_cycles"] = l.total_cycles;
        lj["rounds"] = l.rounds;
        lj["bottleneck"] = archsim::to_string(l.bottleneck);
        lj["vpu_utilization"] = l.vpu_utilization;
        lj["finish_cycle"] = l.finish_cycle;
        lj["energy_j"] = {{"mac", l.energy.mac_j},
                          {"dram", l.energy.dram_j},
                          {"fabric", l.energy.fabric_j}};
        j["per_layer"].push_back(lj);
    }
    return j;
}

inline std::string sim_result_csv(const archsim::SimResult& r) {
    std::string out =
        "layer,kind,compute_cycles,broadcast_cycles,weight_load_cycles,writeback_cycles,"
        "ingress_cycles,sync_cycles,pipeline_fill,total_cycles,rounds,bottleneck,"
        "vpu_utilization,finish_cycle,mac_j,dram_j,fabric_j\n";
    for (const auto& l : r.per_layer) {
        out += l.name;
        out += ',';
        out += workload::to_string(l.kind);
        for (std::uint64_t v : {l.compute_cycles, l.broadcast_cycles, l.weight_load_cycles,
                                l.writeback_cycles, l.ingress_cycles, l.sync_cycles,
                                l.pipeline_fill, l.total_cycles, l.rounds})
            out += "," + std::to_string(v);
        out += ",";
        out += archsim::to_string(l.bottleneck);
        out += "," + fmt_g9(l.vpu_utilization);
        out += "," + std::to_string(l.finish_cycle);
        out += "," + fmt_g9(l.energy.mac_j);
        out += "," + fmt_g9(l.energy.dram_j);
        out += "," + fmt_g9(l.energy.fabric_j);
        out += "\n";
    }
    return out;
}

}  // namespace sunrise::io
