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

// Command-line front end. Subcommands: tables, simulate, project, cost,
// sweep, interconnect, validate. Config arguments accept a file path or a
// bundled name resolved via $SUNRISE_CONFIG_PATH and ./data; the names
// "sunrise-40nm" and "resnet50" fall back to compiled-in presets so the
// binary works without the data directory.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sunrise/json_io.hpp"
#include "sunrise/presets.hpp"
#include "sunrise/report.hpp"

namespace {

using namespace sunrise;

archsim::ArchConfig resolve_arch(const std::string& name) {
    try {
        return io::load_arch(io::resolve_config(name, "archs"));
    } catch (const IoError&) {
        if (name == "sunrise-40nm") return presets::sunrise_40nm();
        throw;
    }
}

workload::ModelSpec resolve_model(const std::string& name) {
    try {
        return io::load_model(io::resolve_config(name, "models"));
    } catch (const IoError&) {
        if (name == "resnet50") return presets::resnet50();
        throw;
    }
}

void write_out(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text;
    else
        io::write_text(output_path, text);
}

std::string metrics_line(const std::string& name, const techscale::AreaMetrics& m) {
    const std::string bw = m.bandwidth_per_area
                               ? format_sig3(*m.bandwidth_per_area) + " GB/s/mm^2"
                               : "no data";
    return name + ": perf " + format_sig3(m.perf_per_area) + " TOPS/mm^2, bandwidth " + bw +
           ", capacity " + format_sig3(m.capacity_per_area) +
           " MB/mm^2, efficiency " + format_sig3(m.energy_efficiency) + " TOPS/W\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Near-memory AI accelerator simulator and analysis toolkit"};
    app.require_subcommand(1);

    // tables
    auto* tables = app.add_subcommand("tables", "Reconcile computed values against the "
                                                "published evaluation tables");
    std::string table_id = "all";
    std::string table_format = "md";
    std::string table_output;
    tables->add_option("--id", table_id, "Table id (T1..T7) or 'all'");
    tables->add_option("--format", table_format, "Output format: csv, json, md");
    tables->add_option("--output", table_output, "Write to file instead of stdout");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run a model on an architecture config");
    std::string sim_model = "resnet50";
    std::string sim_arch = "sunrise-40nm";
    std::uint64_t sim_batch = 1;
    bool sim_fold_ingress = false;
    std::string sim_format = "text";
    std::string sim_output;
    simulate->add_option("--model", sim_model, "Model name or JSON path");
    simulate->add_option("--arch", sim_arch, "Architecture config name or JSON path");
    simulate->add_option("--batch", sim_batch, "Images per batch")->check(CLI::PositiveNumber);
    simulate->add_flag("--fold-ingress", sim_fold_ingress,
                       "Gate the first layer on host input transfer");
    simulate->add_option("--format", sim_format, "Output format: text, json, csv");
    simulate->add_option("--output", sim_output, "Write to file instead of stdout");

    // project
    auto* project = app.add_subcommand("project", "Project chip metrics to another process node");
    std::string prj_chip = "sunrise";
    std::uint32_t prj_to = 7;
    std::string prj_dram = "1y";
    bool prj_as_dram = false;
    double prj_cap = 0.5;
    std::string prj_chips_file, prj_trans_file, prj_dram_file;
    project->add_option("--chip", prj_chip, "Chip name or 'all'");
    project->add_option("--to", prj_to, "Target CMOS node in nm");
    project->add_option("--dram", prj_dram, "Target DRAM node: 3x, 1x, 1y");
    project->add_flag("--as-dram", prj_as_dram,
                      "Rebuild SRAM capacity as DRAM at the target node");
    project->add_option("--cap", prj_cap, "Power density cap in W/mm^2");
    project->add_option("--chips-file", prj_chips_file, "Chip database JSON");
    project->add_option("--transitions-file", prj_trans_file, "CMOS scaling table JSON");
    project->add_option("--dram-file", prj_dram_file, "DRAM density table JSON");

    // cost
    auto* cost = app.add_subcommand("cost", "Die cost and cost-per-TOPS analysis");
    std::string cost_chip = "all";
    std::string cost_basis_file;
    std::string cost_format = "md";
    std::string cost_output;
    cost->add_option("--chip", cost_chip, "Chip name or 'all'");
    cost->add_option("--basis", cost_basis_file, "Cost basis JSON (default: bundled)");
    cost->add_option("--format", cost_format, "Output format: csv, json, md");
    cost->add_option("--output", cost_output, "Write to file instead of stdout");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Simulate over a range of config values");
    std::string swp_model = "resnet50";
    std::string swp_arch = "sunrise-40nm";
    std::uint64_t swp_batch = 1;
    std::vector<std::string> swp_vary;
    std::string swp_output;
    sweep->add_option("--model", swp_model, "Model name or JSON path");
    sweep->add_option("--arch", swp_arch, "Architecture config name or JSON path");
    sweep->add_option("--batch", swp_batch, "Images per batch")->check(CLI::PositiveNumber);
    sweep->add_option("--vary", swp_vary,
                      "field=v1,v2,... (repeatable; later flags vary fastest)");
    sweep->add_option("--output", swp_output, "Write to file instead of stdout");

    // interconnect
    auto* inter = app.add_subcommand("interconnect",
                                     "Die-to-die link density, bandwidth, and energy");
    std::string ic_tech = "all";
    interconnect::ConnectionBudget ic_budget;
    double ic_edge = -1.0;
    double ic_bits = 0.0;
    std::string ic_techs_file;
    inter->add_option("--tech", ic_tech, "Technology name or 'all'");
    inter->add_option("--die-area", ic_budget.die_area_mm2, "Die area in mm^2");
    inter->add_option("--fraction", ic_budget.connection_area_fraction,
                      "Fraction of area (or edge budget) for connections");
    inter->add_option("--freq", ic_budget.io_frequency_ghz, "I/O frequency in GHz");
    inter->add_option("--bits-per-cycle", ic_budget.bits_per_wire_per_cycle,
                      "Bits per wire per cycle");
    inter->add_option("--edge-length", ic_edge, "Override usable edge length in mm");
    inter->add_option("--bits", ic_bits, "Also report transfer energy for this many bits");
    inter->add_option("--techs-file", ic_techs_file, "Technology table JSON");

    // validate
    auto* validate = app.add_subcommand("validate", "Check config files and report diagnostics");
    std::string val_arch, val_model, val_chips, val_cost, val_trans, val_techs;
    validate->add_option("--arch", val_arch, "Architecture config JSON");
    validate->add_option("--model", val_model, "Model JSON");
    validate->add_option("--chips", val_chips, "Chip database JSON");
    validate->add_option("--cost", val_cost, "Cost basis JSON");
    validate->add_option("--transitions", val_trans, "CMOS scaling table JSON");
    validate->add_option("--techs", val_techs, "Interconnect technology JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Bad flags and arguments count as validation failures (exit 1).
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (tables->parsed()) {
        const auto fmt = report::emit_format_from_string(table_format);
        std::string out;
        if (table_id == "all") {
            for (const auto& r : report::reconcile_all()) {
                out += report::emit(r, fmt);
                if (fmt == report::EmitFormat::Markdown) out += "\n";
            }
        } else {
            out = report::emit(report::reconcile(table_id), fmt);
        }
        write_out(out, table_output);
        return 0;
    }

    if (simulate->parsed()) {
        const auto arch = resolve_arch(sim_arch);
        const auto model = resolve_model(sim_model);
        const auto r = archsim::simulate_model(model, arch, sim_batch, sim_fold_ingress);
        std::string out;
        if (sim_format == "json") {
            out = io::sim_result_to_json(r).dump(2) + "\n";
        } else if (sim_format == "csv") {
            out = io::sim_result_csv(r);
        } else if (sim_format == "text") {
            out = "model " + r.model_name + " on " + r.arch_name + " (batch " +
                  std::to_string(r.batch) + ")\n";
            out += "  total cycles:        " + std::to_string(r.total_cycles) + "\n";
            out += "  throughput:          " + format_sig3(r.throughput) + " inf/s\n";
            out += "  ingress-bound cap:   " + format_sig3(r.ingress_bound_throughput) +
                   " inf/s (host link, reported separately)\n";
            out += "  effective compute:   " + format_sig3(r.effective_tops) + " TOPS\n";
            out += "  average power:       " + format_sig3(r.avg_power_w) + " W\n";
            out += "  energy/inference:    " + format_sig3(r.energy_per_inference_j * 1e3) +
                   " mJ\n\n";
            out += io::sim_result_csv(r);
        } else {
            throw ValidationError("unknown format '" + sim_format +
                                  "' (expected text, json, csv)");
        }
        write_out(out, sim_output);
        return 0;
    }

    if (project->parsed()) {
        const auto chips = prj_chips_file.empty() ? techscale::builtin_chips()
                                                  : io::load_chips(prj_chips_file);
        const auto trans = prj_trans_file.empty() ? techscale::builtin_transitions()
                                                  : io::load_transitions(prj_trans_file);
        const auto dram = prj_dram_file.empty() ? techscale::builtin_dram_table()
                                                : io::load_dram_table(prj_dram_file);
        techscale::ProjectionPolicy policy;
        policy.power_density_cap_w_mm2 = prj_cap;
        policy.convert_sram_to_dram = prj_as_dram;
        const auto target_dram = techscale::dram_node_from_string(prj_dram);
        std::string out;
        for (const auto& chip : chips) {
            if (prj_chip != "all" && chip.name != prj_chip) continue;
            const auto p =
                techscale::project_chip(chip, prj_to, target_dram, trans, dram, policy);
            out += metrics_line(p.chip + " @ " + std::to_string(prj_to) + "nm", p.metrics);
            out += "  branch: " + std::string(techscale::to_string(p.branch)) +
                   ", projected power density " + format_sig3(p.power_density_w_mm2) +
                   " W/mm^2\n";
        }
        if (out.empty())
            throw ValidationError("no chip named '" + prj_chip + "' in the database");
        std::cout << out;
        return 0;
    }

    if (cost->parsed()) {
        auto recon = report::reconcile("T4");
        if (!cost_basis_file.empty()) {
            // Recompute against the user basis; published cells stay for comparison.
            const auto table = io::load_cost_table(cost_basis_file);
            const auto chips = techscale::builtin_chips();
            for (auto& cell : recon.cells) {
                const auto chip = techscale::find_chip(chips, cell.row);
                const double dc = econ::die_cost(chip, table);
                if (cell.col == "nre_usd") cell.computed = econ::nre(chip.cmos_node_nm, table);
                if (cell.col == "die_cost_usd") cell.computed = dc;
                if (cell.col == "cost_per_tops_usd")
                    cell.computed = econ::cost_per_tops(dc, chip.peak_tops);
                cell.deviation_pct =
                    cell.published && *cell.published != 0.0
                        ? std::optional<double>(std::abs(*cell.computed - *cell.published) /
                                                std::abs(*cell.published) * 100.0)
                        : std::nullopt;
            }
        }
        if (cost_chip != "all") {
            techscale::find_chip(techscale::builtin_chips(), cost_chip);
            std::vector<report::CellRecon> kept;
            for (const auto& c : recon.cells)
                if (c.row == cost_chip) kept.push_back(c);
            recon.cells = kept;
            recon.row_labels = {cost_chip};
        }
        write_out(report::emit(recon, report::emit_format_from_string(cost_format)),
                  cost_output);
        return 0;
    }

    if (sweep->parsed()) {
        if (swp_vary.empty())
            throw ValidationError("sweep needs at least one --vary field=v1,v2,...");
        const auto base_arch = resolve_arch(swp_arch);
        const auto model = resolve_model(swp_model);

        using Setter = void (*)(archsim::ArchConfig&, double);
        const std::map<std::string, Setter> setters = {
            {"vpu_count", [](archsim::ArchConfig& a, double v) {
                 a.vpu_count = static_cast<std::uint32_t>(v);
             }},
            {"macs_per_vpu", [](archsim::ArchConfig& a, double v) {
                 a.macs_per_vpu = static_cast<std::uint32_t>(v);
             }},
            {"dsu_count", [](archsim::ArchConfig& a, double v) {
                 a.dsu_count = static_cast<std::uint32_t>(v);
             }},
            {"clock_ghz", [](archsim::ArchConfig& a, double v) { a.clock_ghz = v; }},
            {"dsu_vpu_bandwidth", [](archsim::ArchConfig& a, double v) {
                 a.dsu_vpu_bandwidth = v;
             }},
            {"dram_bandwidth_total", [](archsim::ArchConfig& a, double v) {
                 a.dram_bandwidth_total = v;
             }},
            {"host_ingress", [](archsim::ArchConfig& a, double v) { a.host_ingress = v; }},
            {"uce_sync_cycles", [](archsim::ArchConfig& a, double v) {
                 a.uce_sync_cycles = static_cast<std::uint32_t>(v);
             }},
        };

        struct Axis {
            std::string field;
            std::vector<double> values;
        };
        std::vector<Axis> axes;
        for (const auto& spec : swp_vary) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos)
                throw ValidationError("--vary needs field=v1,v2,... (got '" + spec + "')");
            Axis ax;
            ax.field = spec.substr(0, eq);
            if (!setters.count(ax.field)) {
                std::string known;
                for (const auto& [k, v] : setters) known += (known.empty() ? "" : ", ") + k;
                throw ValidationError("cannot sweep field '" + ax.field +
                                      "'; sweepable fields: " + known);
            }
            std::string rest = spec.substr(eq + 1);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                const auto comma = rest.find(',', pos);
                const std::string tok =
                    rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
                if (tok.empty()) throw ValidationError("--vary has an empty value in '" + spec + "'");
                try {
                    ax.values.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw ValidationError("--vary value '" + tok + "' is not a number");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            axes.push_back(std::move(ax));
        }

        std::string out;
        for (const auto& ax : axes) out += ax.field + ",";
        out += "total_cycles,throughput_inf_s,effective_tops,avg_power_w,bottleneck_mix\n";

        // Points in declaration order: first --vary flag is the outer loop.
        std::vector<std::size_t> idx(axes.size(), 0);
        while (true) {
            archsim::ArchConfig a = base_arch;
            a.name = base_arch.name;
            for (std::size_t i = 0; i < axes.size(); ++i)
                setters.at(axes[i].field)(a, axes[i].values[idx[i]]);
            const auto r = archsim::simulate_model(model, a, swp_batch);
            std::map<std::string, std::uint64_t> mix;
            for (const auto& l : r.per_layer) mix[archsim::to_string(l.bottleneck)]++;
            std::string mix_s;
            for (const auto& [k, v] : mix)
                mix_s += (mix_s.empty() ? "" : " ") + k + ":" + std::to_string(v);
            for (std::size_t i = 0; i < axes.size(); ++i)
                out += io::fmt_g9(axes[i].values[idx[i]]) + ",";
            out += std::to_string(r.total_cycles) + "," + io::fmt_g9(r.throughput) + "," +
                   io::fmt_g9(r.effective_tops) + "," + io::fmt_g9(r.avg_power_w) + "," +
                   mix_s + "\n";

            std::size_t k = axes.size();
            while (k > 0) {
                --k;
                if (++idx[k] < axes[k].values.size()) break;
                idx[k] = 0;
                if (k == 0) {
                    write_out(out, swp_output);
                    return 0;
                }
            }
        }
    }

    if (inter->parsed()) {
        auto techs = ic_techs_file.empty() ? interconnect::builtin_techs()
                                           : io::load_techs(ic_techs_file).techs;
        if (ic_edge >= 0.0) ic_budget.edge_length_mm = ic_edge;
        std::string out;
        for (const auto& t : techs) {
            if (ic_tech != "all" && t.name != ic_tech) continue;
            const double density = interconnect::wire_density(t);
            const double bw = interconnect::bandwidth_from_density(density, t.geometry,
                                                                   ic_budget);
            out += t.name + ": density " + format_sig3(density) +
                   (t.geometry == interconnect::LinkGeometry::Area2D ? " wires/mm^2"
                                                                     : " wires/mm edge") +
                   ", bandwidth " + format_sig3(interconnect::to_tb_per_s(bw)) +
                   " TB/s, energy " + format_sig3(t.energy_pj_per_bit) + " pJ/b";
            if (ic_bits > 0.0)
                out += ", transfer " +
                       format_sig3(interconnect::transfer_energy_pj(t, ic_bits) * 1e-12) +
                       " J";
            out += "\n";
        }
        if (out.empty()) out = interconnect::find_tech(techs, ic_tech).name + "\n";
        std::cout << out;
        return 0;
    }

    if (validate->parsed()) {
        bool any = false;
        bool errors = false;
        if (!val_arch.empty()) {
            any = true;
            const auto a = io::load_as<archsim::ArchConfig>(io::resolve_config(val_arch, "archs"));
            for (const auto& d : archsim::validate_arch(a)) {
                const bool is_err = d.severity == archsim::Diagnostic::Severity::Error;
                errors |= is_err;
                std::cout << (is_err ? "error" : "warning") << " [" << d.field << "] "
                          << d.message << "\n";
            }
        }
        if (!val_model.empty()) {
            any = true;
            io::load_model(io::resolve_config(val_model, "models"));
        }
        if (!val_chips.empty()) {
            any = true;
            io::load_chips(io::resolve_config(val_chips, "chips"));
        }
        if (!val_cost.empty()) {
            any = true;
            io::load_cost_table(io::resolve_config(val_cost, "cost"));
        }
        if (!val_trans.empty()) {
            any = true;
            io::load_transitions(io::resolve_config(val_trans, "scaling"));
        }
        if (!val_techs.empty()) {
            any = true;
            io::load_techs(io::resolve_config(val_techs, "tech"));
        }
        if (!any)
            throw ValidationError("validate needs at least one of --arch, --model, --chips, "
                                  "--cost, --transitions, --techs");
        if (errors) return 1;
        std::cout << "ok\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sunrise::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const sunrise::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
