/**
 * @file experiments.hpp
 * @brief Scenario drivers: convergence sweeps, work extraction, cooling,
 *        inaccessible states and free-energy traces.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "memtp/cones.hpp"
#include "memtp/engine.hpp"
#include "memtp/predictions.hpp"
#include "memtp/thermo.hpp"

namespace memtp {

/// Runs f(0..n-1) on a small thread pool. Each index is independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

enum class Precision {
    Double,
    Extended, ///< 50 decimal digits, for distances near double round-off
};

struct SweepConfig {
    std::string scenario = "converge";
    EnergySpectrum system{0.0, 0.0};
    double beta = 0.0;
    Distribution p{1.0, 0.0};
    std::vector<std::size_t> target_order; ///< empty means the beta-order of p
    std::vector<std::size_t> memory_sizes;
    Traversal traversal{};
    std::uint64_t seed = 0;
    Precision precision = Precision::Double;
    /// Run the full-mode protocol as well. Defaults to beta == 0.
    std::optional<bool> run_full;
};

struct SweepRow {
    std::size_t n = 0;
    double delta_truncated = 0.0;
    double delta_full = 0.0;      ///< NaN when not run
    double delta_predicted = 0.0; ///< NaN when no model applies
};

struct SweepResult {
    std::vector<double> target;
    TranspositionChain chain;
    std::optional<RateModel> model;
    std::vector<SweepRow> rows;
};

/// Distance of both protocol modes to the Lemma-5 vertex with the requested
/// beta-order, for every memory size, plus the matching prediction:
/// Theorem1Delta at beta = 0, Theorem2 for a single swap at beta > 0.
SweepResult converge_sweep(const SweepConfig& config);

struct EpsilonResult {
    double epsilon = 1.0;
    bool feasible = false;  ///< false if even epsilon = 1 is out of reach
    bool monotone = true;   ///< infeasible just below the returned epsilon
};

/// Index of system level s and battery level b in the joint SB vector.
inline std::size_t sb_index(std::size_t s, std::size_t b) { return 2 * s + b; }

/// gamma_S (x) (epsilon, 1 - epsilon).
Distribution work_target(const Distribution& gamma_s, double epsilon);

/// Smallest epsilon with source thermomajorising work_target(epsilon), by
/// bisection to 1e-12 on [0, battery thermal ground population].
EpsilonResult min_epsilon_transform(const Distribution& source, const Distribution& gamma_sb,
                                    const Distribution& gamma_s);

struct WorkExtractConfig {
    double gap = 1.0;         ///< system splitting Delta
    double beta_source = 2.0; ///< inverse temperature of the initial system state
    double beta = 1.0;        ///< bath
    std::vector<double> w_grid;
    std::vector<std::size_t> memory_sizes;
    Traversal traversal{};
};

/// Evenly spaced grid of `count` points on [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct WorkRow {
    double w = 0.0;
    std::size_t n = 0;
    double epsilon = 1.0;
    double epsilon_to = 1.0;
};

struct WorkPoint {
    double w = 0.0;
    double epsilon_to = 1.0;
    std::vector<std::size_t> vertex_order; ///< beta-order of the chosen vertex
    std::vector<double> epsilon_n;         ///< aligned with memory_sizes
};

struct WorkExtractionResult {
    std::vector<WorkPoint> points;
    std::vector<std::size_t> memory_sizes;
    bool monotone_in_n = true;
    bool above_to = true;
    std::vector<WorkRow> rows() const;
};

WorkExtractionResult work_extraction(const WorkExtractConfig& config);

/// Kink of the thermal-operation curve, (1/beta) log(1 + e^{-beta Delta}).
double work_kink(double gap, double beta);

struct CoolingReport {
    Distribution q_engine;
    Distribution q_closed_form;
    Distribution gamma_s;
    double distance_engine = 0.0; ///< 1-norm |q - gamma_S|
    double distance_closed_form = 0.0;
};

/// Cooling operations on the two-qubit state |s m> (index 2s + m).
enum class CoolingOp {
    SwapExchange, ///< op 1: |01> <-> |10>
    SwapPair,     ///< op 2: |00> <-> |11>
    SystemFlip,   ///< op 3: |0m> <-> |1m> for both m (gap E_S)
    MemoryFlip,   ///< op 4: |s0> <-> |s1> for both s (gap E_M)
};

/// Order that reproduces the closed-form cooled state.
std::vector<CoolingOp> cooling_sequence();

/// Applies the operations to p (x) gamma_M, thermalises the memory and
/// returns the system marginal.
Distribution cooling_apply(const Distribution& p, double e_s, double e_m, double beta,
                           const std::vector<CoolingOp>& ops);

Distribution cooling_closed_form(double e_s, double e_m, double beta);
double cooling_distance_closed_form(double e_s, double e_m, double beta);

CoolingReport cooling_demo(double e_s, double e_m, double beta);

/// Root of 1 - sum_{i>=1} e^{-beta E_i} by bisection.
double beta_crit(const EnergySpectrum& spectrum);

/// (1 - sum_{i>=1} e^{-beta E_i}, e^{-beta E_1}, ...). Requires E_0 = 0 and
/// beta > beta_crit.
Distribution inaccessible_target(const EnergySpectrum& spectrum, double beta);

struct InaccessibleRow {
    std::size_t n = 0;
    double delta = 0.0;
    double bound = 0.0; ///< 1 / (2 sqrt N)
};

struct InaccessibleResult {
    double beta = 0.0;
    double beta_crit = 0.0;
    std::vector<InaccessibleRow> rows;
    bool decreasing = true;
    bool below_bound = true;
    std::optional<std::size_t> n0; ///< first N from which every delta is below the bound
};

InaccessibleResult inaccessible_convergence(const EnergySpectrum& spectrum, double beta,
                                            const std::vector<std::size_t>& memory_sizes,
                                            const Traversal& traversal = {});

InaccessibleResult inaccessible_convergence_factor(const EnergySpectrum& spectrum, double beta_factor,
                                                   const std::vector<std::size_t>& memory_sizes,
                                                   const Traversal& traversal = {});

/// Per-step relative entropies along the swap protocol on (i, j) with an
/// N-dimensional trivial memory. The last record follows the final memory
/// thermalisation.
Trajectory free_energy_trace(const Distribution& p, const EnergySpectrum& system, double beta, std::size_t i,
                             std::size_t j, std::size_t n, const Traversal& traversal = {},
                             bool keep_states = false);

/// True if D_SM never increases by more than tol between records.
bool joint_entropy_non_increasing(const Trajectory& t, double tol = 1e-10);

} // namespace memtp
