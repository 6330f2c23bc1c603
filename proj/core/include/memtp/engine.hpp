/**
 * @file engine.hpp
 * @brief Two-level thermalisations and memory-assisted protocols on joint
 *        system (x) memory states.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "memtp/cones.hpp"
#include "memtp/kernels.hpp"
#include "memtp/schedule.hpp"
#include "memtp/thermo.hpp"

namespace memtp {

/// Partial thermalisation of levels i, j with strength lambda in [0,1];
/// lambda = 1 replaces the pair by its Gibbs-weighted share.
Distribution two_level_thermalize(const Distribution& state, const Distribution& gamma, std::size_t i,
                                  std::size_t j, double lambda = 1.0);

struct TrajectoryRecord {
    std::size_t step = 0;
    double d_system = 0.0;
    double d_memory = 0.0;
    double d_joint = 0.0;
    double mutual_info = 0.0;
    std::optional<std::vector<double>> joint;
};

struct Trajectory {
    bool keep_states = false;
    std::vector<TrajectoryRecord> records;

    /// Appends a record for `joint` labelled with `step`.
    void record(std::size_t step, const JointState& joint);
};

/// Applies each scheduled pair (lambda = 1) against the joint Gibbs state.
/// With a trajectory, records the input as step 0 and every step after it.
JointState run_truncated(JointState joint, const ProtocolSchedule& schedule, Trajectory* trajectory = nullptr);

/// marginal_S (x) gamma_M.
JointState thermalize_memory(const JointState& joint);

/// One full beta-swap protocol on levels (i, j) with an explicit memory.
Distribution run_full_swap(const Distribution& p, const EnergySpectrum& system,
                           const EnergySpectrum& memory, double beta, std::size_t i, std::size_t j,
                           const Traversal& traversal = {});

/// Same with an N-dimensional memory of trivial Hamiltonian.
Distribution run_full_swap(const Distribution& p, const EnergySpectrum& system, double beta, std::size_t i,
                           std::size_t j, std::size_t n, const Traversal& traversal = {});

/// Sequential beta-swap blocks along `chain`. Full mode thermalises the
/// memory after every block; Truncated mode keeps it until the end.
Distribution run_composed(const Distribution& p, const EnergySpectrum& system, const EnergySpectrum& memory,
                          double beta, const TranspositionChain& chain, Mode mode,
                          const Traversal& traversal = {});

Distribution run_composed(const Distribution& p, const EnergySpectrum& system, double beta,
                          const TranspositionChain& chain, std::size_t n, Mode mode,
                          const Traversal& traversal = {});

/// Joint state after the truncated blocks of `chain`, before the final
/// memory thermalisation. Optionally records every elementary step.
JointState run_chain_truncated(const JointState& joint, const TranspositionChain& chain,
                               const Traversal& traversal = {}, Trajectory* trajectory = nullptr);

} // namespace memtp
