// memtp: command-line driver for the scenario runners.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "memtp/errors.hpp"
#include "memtp/experiments.hpp"
#include "memtp/io.hpp"

using namespace memtp;
using nlohmann::json;

namespace {

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        try {
            if constexpr (std::is_same_v<T, double>)
                out.push_back(std::stod(item, &used));
            else
                out.push_back(static_cast<T>(std::stoull(item, &used)));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw InvalidInput(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
    return out;
}

struct Common {
    double beta = 0.0;
    std::size_t dims = 0;
    std::string state;
    std::string energies;
    std::string memory;
    std::string family = "default";
    std::string mode;
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 0;

    Traversal traversal() const { return {parse_family(family), seed}; }

    // Energies from --energies, else dims zeros.
    EnergySpectrum spectrum(std::size_t fallback_dims = 0) const {
        if (!energies.empty()) {
            auto e = parse_list<double>(energies, "--energies");
            if (dims && e.size() != dims) throw InvalidInput("--energies length differs from --dims");
            return EnergySpectrum(e);
        }
        const std::size_t d = dims ? dims : fallback_dims;
        if (!d) throw InvalidInput("give --energies or --dims");
        return EnergySpectrum::trivial(d);
    }

    Distribution distribution() const {
        if (state.empty()) throw InvalidInput("--state is required");
        return Distribution(parse_list<double>(state, "--state"));
    }

    std::vector<std::size_t> memory_sizes(std::vector<std::size_t> fallback) const {
        return memory.empty() ? fallback : parse_list<std::size_t>(memory, "--memory");
    }

    json config(const std::string& scenario) const {
        json c{{"scenario", scenario}, {"beta", beta}, {"family", family}, {"seed", seed}};
        if (!state.empty()) c["state"] = parse_list<double>(state, "--state");
        if (!energies.empty()) c["energies"] = parse_list<double>(energies, "--energies");
        if (!memory.empty()) c["memory"] = parse_list<std::size_t>(memory, "--memory");
        if (!mode.empty()) c["mode"] = mode;
        return c;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--beta", c.beta, "Inverse temperature")->check(CLI::NonNegativeNumber);
    cmd->add_option("--dims", c.dims, "System dimension");
    cmd->add_option("--state", c.state, "Initial populations, comma separated");
    cmd->add_option("--energies", c.energies, "Energy levels, comma separated");
    cmd->add_option("--memory", c.memory, "Memory sizes N, comma separated");
    cmd->add_option("--family", c.family, "Traversal family")
        ->check(CLI::IsMember({"default", "blue", "red", "cyan", "orange"}));
    cmd->add_option("--mode", c.mode, "Protocol mode")->check(CLI::IsMember({"full", "truncated"}));
    cmd->add_option("--out", c.out, "Output path (default stdout)");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", c.seed, "Cyan/Orange member id");
}

template <class F>
void with_output(const Common& c, F&& write) {
    if (c.out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream file(c.out);
    if (!file) throw std::runtime_error("cannot open " + c.out);
    write(file);
}

void emit(const Common& c, const Table& t, const json& config) {
    with_output(c, [&](std::ostream& os) {
        if (c.format == "json")
            os << table_json(t, config).dump(2) << '\n';
        else
            write_csv(os, t);
    });
}

EnergySpectrum ladder(std::size_t d) {
    std::vector<double> e(d);
    for (std::size_t k = 0; k < d; ++k) e[k] = static_cast<double>(k);
    return EnergySpectrum(e);
}

std::vector<std::size_t> default_sizes() { return {1, 2, 4, 8, 16, 32, 64, 128, 256}; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Memory-assisted Markovian thermal process simulator"};
    app.require_subcommand(1);
    Common c;

    auto* converge = app.add_subcommand("converge", "Distance to a cone vertex against memory size");
    add_common(converge, c);
    std::string target, cycle, composition, precision = "double";
    bool backward = false;
    converge->add_option("--target", target, "Target beta-order, levels by position");
    converge->add_option("--cycle", cycle, "Beta-cycle on these neighbouring levels (default: all levels)");
    converge->add_flag("--backward", backward, "Cycle the front level to the back");
    converge->add_option("--composition", composition, "Row and column i,j of the cycle-composition family");
    converge->add_option("--precision", precision)->check(CLI::IsMember({"double", "extended"}));

    auto* work = app.add_subcommand("work-extract", "Epsilon-deterministic work extraction");
    add_common(work, c);
    double gap = 1.0, beta_source = 2.0, w_min = -0.5, w_max = 1.5;
    std::size_t w_count = 200;
    work->add_option("--gap", gap, "System splitting");
    work->add_option("--beta-source", beta_source, "Inverse temperature of the initial system state");
    work->add_option("--w-min", w_min);
    work->add_option("--w-max", w_max);
    work->add_option("--w-count", w_count);

    auto* cool = app.add_subcommand("cool", "Two-qubit cooling with a two-level memory");
    add_common(cool, c);
    double e_s = 1.0, e_m = 0.4;
    cool->add_option("--es", e_s, "System gap");
    cool->add_option("--em", e_m, "Memory gap");

    auto* inacc = app.add_subcommand("inaccessible", "Convergence to states out of reach of two-level thermal operations");
    add_common(inacc, c);
    double beta_factor = 0.0;
    inacc->add_option("--beta-factor", beta_factor, "Use beta = factor * beta_crit instead of --beta");

    auto* free = app.add_subcommand("free-energy", "Per-step relative entropies of one swap protocol");
    add_common(free, c);
    std::string levels = "0,1";
    free->add_option("--levels", levels, "Swapped system levels i,j");

    auto* cone = app.add_subcommand("cone", "Vertices of the future thermal cone");
    add_common(cone, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (converge->parsed()) {
            SweepConfig cfg;
            cfg.p = c.distribution();
            cfg.system = c.spectrum(cfg.p.size());
            cfg.beta = c.beta;
            cfg.traversal = c.traversal();
            cfg.seed = c.seed;
            cfg.memory_sizes = c.memory_sizes(default_sizes());
            cfg.precision = precision == "extended" ? Precision::Extended : Precision::Double;
            if (!c.mode.empty()) cfg.run_full = c.mode == "full";
            const auto gamma = gibbs_state(cfg.system, cfg.beta);
            if (!target.empty()) {
                cfg.target_order = parse_list<std::size_t>(target, "--target");
            } else if (!cycle.empty()) {
                cfg.target_order = beta_cycle_permutation(cfg.p, gamma, parse_list<std::size_t>(cycle, "--cycle"),
                                                          backward ? CycleDirection::Backward : CycleDirection::Forward);
            } else if (!composition.empty()) {
                const auto ij = parse_list<std::size_t>(composition, "--composition");
                if (ij.size() != 2) throw InvalidInput("--composition takes i,j");
                for (const auto& t : cycle_composition_targets(beta_order(cfg.p, gamma)))
                    if (t.i == ij[0] && t.j == ij[1]) cfg.target_order = t.order;
                if (cfg.target_order.empty()) throw InvalidInput("--composition index out of range");
            } else {
                cfg.target_order = beta_cycle_permutation(cfg.p, gamma, beta_order(cfg.p, gamma).order,
                                                          backward ? CycleDirection::Backward : CycleDirection::Forward);
            }
            const auto r = converge_sweep(cfg);
            auto config = c.config("converge");
            config["target_order"] = cfg.target_order;
            config["target"] = r.target;
            config["model"] = r.model ? std::string(rate_model_name(*r.model)) : std::string("none");
            emit(c, sweep_table(r), config);
        } else if (work->parsed()) {
            WorkExtractConfig cfg;
            cfg.gap = gap;
            cfg.beta_source = beta_source;
            cfg.beta = work->count("--beta") ? c.beta : 1.0;
            cfg.w_grid = linspace(w_min * gap, w_max * gap, w_count);
            cfg.memory_sizes = c.memory_sizes({1, 2, 4, 8, 16, 32, 64, 128});
            cfg.traversal = c.traversal();
            const auto r = work_extraction(cfg);
            auto config = c.config("work-extract");
            config["beta"] = cfg.beta;
            config.update({{"gap", gap}, {"beta_source", beta_source}, {"kink", work_kink(gap, cfg.beta)},
                           {"monotone_in_n", r.monotone_in_n}, {"above_to", r.above_to}});
            emit(c, work_table(r), config);
        } else if (cool->parsed()) {
            const auto r = cooling_demo(e_s, e_m, c.beta);
            auto config = c.config("cool");
            config.update({{"es", e_s}, {"em", e_m}});
            emit(c, cooling_table(r), config);
        } else if (inacc->parsed()) {
            // Without --energies the spectrum is the ladder E_i = i.
            const auto spectrum = c.energies.empty() ? ladder(c.dims ? c.dims : 3) : c.spectrum();
            const auto sizes = c.memory_sizes({8, 16, 32, 64, 128, 256});
            const auto r = beta_factor > 0 ? inaccessible_convergence_factor(spectrum, beta_factor, sizes, c.traversal())
                                           : inaccessible_convergence(spectrum, c.beta, sizes, c.traversal());
            auto config = c.config("inaccessible");
            config.update({{"beta", r.beta}, {"beta_crit", r.beta_crit}, {"energies", spectrum.energies()},
                           {"decreasing", r.decreasing}, {"below_bound", r.below_bound}});
            if (r.n0) config["n0"] = *r.n0;
            emit(c, inaccessible_table(r), config);
        } else if (free->parsed()) {
            const auto p = c.distribution();
            const auto spectrum = c.spectrum(p.size());
            const auto ij = parse_list<std::size_t>(levels, "--levels");
            if (ij.size() != 2) throw InvalidInput("--levels takes i,j");
            const auto sizes = c.memory_sizes({16});
            if (sizes.size() != 1) throw InvalidInput("free-energy takes a single --memory size");
            const auto t = free_energy_trace(p, spectrum, c.beta, ij[0], ij[1], sizes[0], c.traversal());
            auto config = c.config("free-energy");
            config["levels"] = ij;
            config["joint_entropy_non_increasing"] = joint_entropy_non_increasing(t);
            emit(c, trajectory_table(t), config);
        } else if (cone->parsed()) {
            const auto p = c.distribution();
            const auto gamma = gibbs_state(c.spectrum(p.size()), c.beta);
            const auto vertices = cone_export(p, gamma);
            if (c.format == "json") {
                with_output(c, [&](std::ostream& os) {
                    os << json{{"config", c.config("cone")}, {"rows", vertices}}.dump(2) << '\n';
                });
                return 0;
            }
            Table t;
            for (std::size_t k = 0; k < p.size(); ++k) t.columns.push_back("order_" + std::to_string(k));
            for (std::size_t k = 0; k < p.size(); ++k) t.columns.push_back("p_" + std::to_string(k));
            for (const auto& v : vertices) {
                std::vector<double> row;
                for (std::size_t x : v["order"].get<std::vector<std::size_t>>()) row.push_back(static_cast<double>(x));
                for (double x : v["state"].get<std::vector<double>>()) row.push_back(x);
                t.rows.push_back(row);
            }
            write_csv(std::cout, t);
        }
    } catch (const std::exception& e) {
        std::cerr << "memtp: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
