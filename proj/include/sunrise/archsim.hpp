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
#include <string>
#include <vector>

#include "sunrise/common.hpp"
#include "sunrise/unimem.hpp"
#include "sunrise/workload.hpp"

namespace sunrise::archsim {

// Weight-stationary accelerator model. A central engine streams each layer:
// weights load from the compute-side DRAM pool and stay resident, input
// features broadcast once over the DSU-VPU fabric (bytes counted once, true
// broadcast), VPUs compute their assigned output channels, results travel
// back over the fabric into the data-serving pool. schedule_layer gives the
// closed-form phase costs; simulate_model runs the tiled event pipeline.

struct ArchConfig {
    std::string name;
    std::uint32_t vpu_count = 64;
    std::uint32_t macs_per_vpu = 512;
    std::uint32_t dsu_count = 64;
    double clock_ghz = 0.3814697265625;       // 25 TOPS / (2 * 32768 MACs)
    double dsu_vpu_bandwidth = 13e12;         // bytes/s, broadcast fabric
    double dram_bandwidth_total = 1.8e12;     // bytes/s, both pools combined
    unimem::DramArrayPool vpu_pool;           // weight storage
    unimem::DramArrayPool dsu_pool;           // feature storage
    double host_ingress = 200e6;              // bytes/s
    double energy_mac_pj = 1.2;               // fitted once against the 12 W typical draw
    double energy_dram_bit_pj = 2.5;
    double energy_fabric_bit_pj = 0.02;       // hybrid-bond link
    double static_power_w = 2.0;
    std::uint32_t uce_sync_cycles = 128;      // control overhead per channel round
    std::uint64_t expected_total_macs = 32768; // 0 disables the cross-check

    std::uint64_t total_macs() const {
        return static_cast<std::uint64_t>(vpu_count) * macs_per_vpu;
    }
    double clock_hz() const { return clock_ghz * 1e9; }
    double peak_tops() const { return 2.0 * total_macs() * clock_hz() / 1e12; }
    double fabric_bytes_per_cycle() const { return dsu_vpu_bandwidth / clock_hz(); }
    double weight_bytes_per_cycle() const { return unimem::sustained_bandwidth(vpu_pool); }
    double writeback_bytes_per_cycle() const { return unimem::sustained_bandwidth(dsu_pool); }
    double ingress_bytes_per_cycle() const { return host_ingress / clock_hz(); }
    std::uint64_t memory_capacity_bytes() const {
        return unimem::pool_capacity(vpu_pool) + unimem::pool_capacity(dsu_pool);
    }
};

struct Diagnostic {
    enum class Severity { Warning, Error };
    Severity severity;
    std::string field;
    std::string message;
};

// Structural checks. Errors make the config unusable; warnings flag values
// that disagree with the declared totals but still simulate.
inline std::vector<Diagnostic> validate_arch(const ArchConfig& a) {
    std::vector<Diagnostic> out;
    auto err = [&](const std::string& f, const std::string& m) {
        out.push_back({Diagnostic::Severity::Error, f, m});
    };
    auto warn = [&](const std::string& f, const std::string& m) {
        out.push_back({Diagnostic::Severity::Warning, f, m});
    };
    if (a.vpu_count < 1) err("vpu_count", "must be >= 1");
    if (a.macs_per_vpu < 1) err("macs_per_vpu", "must be >= 1");
    if (a.dsu_count < 1) err("dsu_count", "must be >= 1");
    if (a.clock_ghz <= 0.0 || a.clock_ghz > 10.0)
        err("clock", "must be in (0, 10] GHz");
    if (a.dsu_vpu_bandwidth <= 0.0) err("dsu_vpu_bandwidth", "must be > 0");
    if (a.dram_bandwidth_total <= 0.0) err("dram_bandwidth_total", "must be > 0");
    if (a.host_ingress <= 0.0) err("host_ingress", "must be > 0");
    if (a.energy_mac_pj < 0.0 || a.energy_dram_bit_pj < 0.0 || a.energy_fabric_bit_pj < 0.0)
        err("energy", "per-event energies must be >= 0");
    if (a.static_power_w < 0.0) err("static_power", "must be >= 0");
    try {
        a.vpu_pool.validate();
        a.dsu_pool.validate();
    } catch (const ValidationError& e) {
        err("pool", e.what());
    }
    if (out.empty()) {
        if (a.expected_total_macs != 0 && a.total_macs() != a.expected_total_macs)
            warn("vpu_count*macs_per_vpu",
                 "product " + std::to_string(a.total_macs()) +
                     " != expected_total_macs " + std::to_string(a.expected_total_macs));
        const double pools_bw = (a.weight_bytes_per_cycle() + a.writeback_bytes_per_cycle()) *
                                a.clock_hz();
        const double rel = std::abs(pools_bw - a.dram_bandwidth_total) / a.dram_bandwidth_total;
        if (rel > 0.05)
            warn("dram_bandwidth_total",
                 "pool sustained bandwidth " + format_sig3(pools_bw / 1e12) +
                     " TB/s deviates from declared " +
                     format_sig3(a.dram_bandwidth_total / 1e12) + " TB/s by more than 5%");
    }
    return out;
}

inline void ensure_valid(const ArchConfig& a) {
    for (const auto& d : validate_arch(a))
        if (d.severity == Diagnostic::Severity::Error)
            throw ValidationError("arch '" + a.name + "', field " + d.field + ": " + d.message);
}

// Clock implied by a peak rating: peak_tops = 2 * total_macs * clock.
inline double derive_clock(double peak_tops, std::uint64_t total_macs) {
    if (peak_tops <= 0.0) throw ValidationError("derive_clock: peak_tops must be > 0");
    if (total_macs == 0) throw ValidationError("derive_clock: total_macs must be > 0");
    const double ghz = peak_tops * 1e12 / (2.0 * total_macs) / 1e9;
    if (ghz > 10.0)
        throw ValidationError("derive_clock: " + format_sig3(ghz) +
                              " GHz is outside the plausible range (0, 10]");
    return ghz;
}

enum class Bottleneck { Compute, Broadcast, DramWeights, DramWriteback, Ingress };

inline const char* to_string(Bottleneck b) {
    switch (b) {
        case Bottleneck::Compute: return "compute";
        case Bottleneck::Broadcast: return "broadcast";
        case Bottleneck::DramWeights: return "dram-weights";
        case Bottleneck::DramWriteback: return "dram-writeback";
        case Bottleneck::Ingress: return "ingress";
    }
    return "?";
}

struct EnergyBreakdown {
    double mac_j = 0.0;
    double dram_j = 0.0;
    double fabric_j = 0.0;
    double dynamic_j() const { return mac_j + dram_j + fabric_j; }
};

struct LayerSim {
    std::string name;
    workload::LayerKind kind = workload::LayerKind::Conv2D;
    std::uint64_t compute_cycles = 0;       // raw MAC phase, no sync
    std::uint64_t broadcast_cycles = 0;
    std::uint64_t weight_load_cycles = 0;
    std::uint64_t writeback_cycles = 0;
    std::uint64_t ingress_cycles = 0;       // 0 unless host input feeds this layer
    std::uint64_t sync_cycles = 0;          // control overhead, rides the compute chain
    std::uint64_t pipeline_fill = 0;
    std::uint64_t total_cycles = 0;
    std::uint64_t rounds = 1;               // output-channel groups per VPU
    Bottleneck bottleneck = Bottleneck::Compute;
    double vpu_utilization = 0.0;
    std::uint64_t finish_cycle = 0;         // event-pipeline completion time in the model run
    EnergyBreakdown energy;
};

namespace detail {

struct Phases {
    std::uint64_t compute = 0, broadcast = 0, weight_load = 0, writeback = 0, ingress = 0;
    std::uint64_t rounds = 1;
    double macs = 0.0;
    std::uint64_t weight_bytes = 0, in_bytes = 0, out_bytes = 0;
};

inline Phases compute_phases(const workload::LayerSpec& layer, const ArchConfig& arch,
                             std::uint64_t batch, std::uint64_t ingress_bytes) {
    ensure_valid(arch);
    layer.validate();
    if (batch < 1) throw ValidationError("batch must be >= 1");

    Phases p;
    p.macs = workload::layer_macs(layer);
    p.weight_bytes = workload::layer_weight_bytes(layer);
    const workload::FeatureBytes fb = workload::layer_feature_bytes(layer);
    p.in_bytes = fb.input;
    p.out_bytes = fb.output;
    p.rounds = std::max<std::uint64_t>(1, ceil_div(layer.out_c, arch.vpu_count));

    // Output channels partition round-robin; the busiest VPU owns
    // ceil(out_c / vpu_count) channels and sets the compute time.
    const double per_vpu_macs = p.macs == 0.0 ? 0.0 : p.macs * p.rounds / layer.out_c;
    p.compute = cycles_for(per_vpu_macs * batch, arch.macs_per_vpu);
    p.broadcast = cycles_for(static_cast<double>(p.in_bytes) * batch,
                             arch.fabric_bytes_per_cycle());
    p.weight_load = cycles_for(static_cast<double>(p.weight_bytes),
                               arch.weight_bytes_per_cycle());
    p.writeback = cycles_for(static_cast<double>(p.out_bytes) * batch,
                             arch.fabric_bytes_per_cycle()) +
                  cycles_for(static_cast<double>(p.out_bytes) * batch,
                             arch.writeback_bytes_per_cycle());
    p.ingress = cycles_for(static_cast<double>(ingress_bytes) * batch,
                           arch.ingress_bytes_per_cycle());
    return p;
}

inline std::uint64_t max_raw(const Phases& p) {
    return std::max({p.compute, p.broadcast, p.weight_load, p.writeback, p.ingress});
}

// Ties resolve to Compute; the enum order encodes the priority.
inline Bottleneck classify(const Phases& p) {
    const std::uint64_t phases[] = {p.compute, p.broadcast, p.weight_load, p.writeback,
                                    p.ingress};
    const Bottleneck kinds[] = {Bottleneck::Compute, Bottleneck::Broadcast,
                                Bottleneck::DramWeights, Bottleneck::DramWriteback,
                                Bottleneck::Ingress};
    std::size_t best = 0;
    for (std::size_t i = 1; i < 5; ++i)
        if (phases[i] > phases[best]) best = i;
    return kinds[best];
}

}  // namespace detail

// Closed-form cost of one layer under double-buffered overlap: phases run
// concurrently, the longest one dominates, plus one tile of pipeline fill
// (tile = one output-channel round). Control sync is charged per round on
// the compute chain and is excluded from bottleneck classification.
inline LayerSim schedule_layer(const workload::LayerSpec& layer, const ArchConfig& arch,
                               std::uint64_t batch = 1, std::uint64_t ingress_bytes = 0) {
    const detail::Phases p = detail::compute_phases(layer, arch, batch, ingress_bytes);

    LayerSim sim;
    sim.name = layer.name;
    sim.kind = layer.kind;
    sim.compute_cycles = p.compute;
    sim.broadcast_cycles = p.broadcast;
    sim.weight_load_cycles = p.weight_load;
    sim.writeback_cycles = p.writeback;
    sim.ingress_cycles = p.ingress;
    sim.rounds = p.rounds;
    sim.sync_cycles = static_cast<std::uint64_t>(arch.uce_sync_cycles) * p.rounds;
    sim.pipeline_fill = ceil_div(detail::max_raw(p), p.rounds);
    sim.total_cycles = std::max({p.compute + sim.sync_cycles, p.broadcast, p.weight_load,
                                 p.writeback, p.ingress}) +
                       sim.pipeline_fill;
    sim.bottleneck = detail::classify(p);
    sim.vpu_utilization =
        sim.total_cycles == 0
            ? 0.0
            : p.macs * batch / (static_cast<double>(sim.total_cycles) * arch.total_macs());

    sim.energy.mac_j = p.macs * batch * arch.energy_mac_pj * 1e-12;
    sim.energy.dram_j = (static_cast<double>(p.weight_bytes) +
                         static_cast<double>(p.out_bytes) * batch) *
                        kBitsPerByte * arch.energy_dram_bit_pj * 1e-12;
    sim.energy.fabric_j = (static_cast<double>(p.in_bytes) +
                           static_cast<double>(p.out_bytes)) *
                          batch * kBitsPerByte * arch.energy_fabric_bit_pj * 1e-12;
    return sim;
}

// Roofline-style classification from continuous phase times (no ceilings, no
// sync). Agrees with schedule_layer whenever one phase dominates clearly.
inline Bottleneck roofline_check(const workload::LayerSpec& layer, const ArchConfig& arch) {
    ensure_valid(arch);
    layer.validate();
    const double macs = workload::layer_macs(layer);
    const std::uint64_t w = workload::layer_weight_bytes(layer);
    const workload::FeatureBytes fb = workload::layer_feature_bytes(layer);
    const std::uint64_t rounds = std::max<std::uint64_t>(1, ceil_div(layer.out_c, arch.vpu_count));
    const double per_vpu = macs == 0.0 ? 0.0 : macs * rounds / layer.out_c;

    const double t_compute = per_vpu / arch.macs_per_vpu;
    const double t_broadcast = fb.input / arch.fabric_bytes_per_cycle();
    const double t_weights = w / arch.weight_bytes_per_cycle();
    const double t_writeback = fb.output / arch.fabric_bytes_per_cycle() +
                               fb.output / arch.writeback_bytes_per_cycle();

    const double times[] = {t_compute, t_broadcast, t_weights, t_writeback};
    const Bottleneck kinds[] = {Bottleneck::Compute, Bottleneck::Broadcast,
                                Bottleneck::DramWeights, Bottleneck::DramWriteback};
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (times[i] > times[best]) best = i;
    return kinds[best];
}

struct SimResult {
    std::string model_name;
    std::string arch_name;
    std::uint64_t batch = 1;
    bool ingress_folded = false;
    std::vector<LayerSim> per_layer;
    std::uint64_t total_cycles = 0;
    double time_s = 0.0;
    double throughput = 0.0;              // inferences/s
    double effective_tops = 0.0;
    double avg_power_w = 0.0;
    double energy_per_inference_j = 0.0;
    EnergyBreakdown energy;               // dynamic, whole batch
    double static_energy_j = 0.0;
    double ingress_bound_throughput = 0.0; // host-link ceiling, reported separately
};

// Event-driven model run. Each layer streams through a four-stage pipeline
// (weight load, broadcast, compute+sync, writeback) split into one tile per
// output-channel round; stages are serialized per resource across the whole
// model. Weights for layer i+1 start loading as soon as the weight port
// frees (prefetch into an idealized staging buffer); a layer's broadcast
// waits for its producer's final writeback. Pure integer cycle math, so
// repeat runs are bit-identical.
inline SimResult simulate_model(const workload::ModelSpec& model, const ArchConfig& arch,
                                std::uint64_t batch = 1, bool fold_ingress = false) {
    ensure_valid(arch);
    workload::validate_model(model);
    if (model.layers.empty())
        throw ValidationError("model '" + model.name + "' has no layers");
    if (batch < 1) throw ValidationError("batch must be >= 1");

    SimResult r;
    r.model_name = model.name;
    r.arch_name = arch.name;
    r.batch = batch;
    r.ingress_folded = fold_ingress;

    // Resource next-free times, in cycles from run start.
    std::uint64_t weight_port_free = 0;
    std::uint64_t fabric_in_free = 0;
    std::uint64_t compute_free = 0;
    std::uint64_t writeback_free = 0;
    std::uint64_t features_ready = 0;

    if (fold_ingress && model.input_bytes > 0)
        features_ready = cycles_for(static_cast<double>(model.input_bytes) * batch,
                                    arch.ingress_bytes_per_cycle());

    // Splits `x` cycles into `t` near-equal integer tiles (first tiles take
    // the remainder).
    auto tile = [](std::uint64_t x, std::uint64_t t, std::uint64_t i) {
        return x / t + (i < x % t ? 1 : 0);
    };

    for (std::size_t li = 0; li < model.layers.size(); ++li) {
        const workload::LayerSpec& layer = model.layers[li];
        const std::uint64_t ingress_bytes =
            (fold_ingress && li == 0) ? model.input_bytes : 0;
        LayerSim sim = schedule_layer(layer, arch, batch, ingress_bytes);

        const detail::Phases p =
            detail::compute_phases(layer, arch, batch, /*ingress_bytes=*/0);
        const std::uint64_t tiles = p.rounds;

        weight_port_free += p.weight_load;
        const std::uint64_t weights_ready = weight_port_free;

        for (std::uint64_t t = 0; t < tiles; ++t) {
            fabric_in_free = std::max(fabric_in_free, features_ready) +
                             tile(p.broadcast, tiles, t);
            compute_free = std::max({compute_free, fabric_in_free, weights_ready}) +
                           tile(p.compute, tiles, t) + arch.uce_sync_cycles;
            writeback_free = std::max(writeback_free, compute_free) +
                             tile(p.writeback, tiles, t);
        }
        features_ready = writeback_free;
        sim.finish_cycle = writeback_free;

        r.energy.mac_j += sim.energy.mac_j;
        r.energy.dram_j += sim.energy.dram_j;
        r.energy.fabric_j += sim.energy.fabric_j;
        r.per_layer.push_back(std::move(sim));
    }

    r.total_cycles = writeback_free;
    r.time_s = r.total_cycles / arch.clock_hz();
    r.throughput = batch * arch.clock_hz() / r.total_cycles;

    double total_macs = 0.0;
    for (const auto& l : model.layers) total_macs += workload::layer_macs(l);
    r.effective_tops = 2.0 * total_macs * batch / r.time_s / 1e12;
    if (r.effective_tops > arch.peak_tops() * (1.0 + 1e-9))
        throw ValidationError("internal: effective TOPS " + format_sig3(r.effective_tops) +
                              " exceeds peak " + format_sig3(arch.peak_tops()));

    r.static_energy_j = arch.static_power_w * r.time_s;
    const double total_j = r.energy.dynamic_j() + r.static_energy_j;
    r.avg_power_w = total_j / r.time_s;
    r.energy_per_inference_j = total_j / batch;
    r.ingress_bound_throughput =
        model.input_bytes == 0 ? 0.0 : arch.host_ingress / model.input_bytes;
    return r;
}

}  // namespace sunrise::archsim
