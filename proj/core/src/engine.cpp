#include "memtp/engine.hpp"

#include <string>

#include "memtp/errors.hpp"

namespace memtp {

Distribution two_level_thermalize(const Distribution& state, const Distribution& gamma, std::size_t i,
                                  std::size_t j, double lambda) {
    if (state.size() != gamma.size()) throw InvalidInput("two_level_thermalize: length mismatch");
    if (i == j) throw InvalidInput("two_level_thermalize: levels must differ");
    if (i >= state.size() || j >= state.size()) throw InvalidInput("two_level_thermalize: level out of range");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidInput("two_level_thermalize: lambda outside [0,1]");
    std::vector<double> r = state.probs();
    const double s = r[i] + r[j];
    const double ri = (1.0 - lambda) * r[i] + lambda * s * gamma[i] / (gamma[i] + gamma[j]);
    r[i] = ri;
    r[j] = s - ri;
    return Distribution(std::move(r));
}

void Trajectory::record(std::size_t step, const JointState& joint) {
    TrajectoryRecord rec;
    rec.step = step;
    rec.d_system = relative_entropy(marginalize(joint, Keep::System), joint.system_gibbs());
    rec.d_memory = relative_entropy(marginalize(joint, Keep::Memory), joint.memory_gibbs());
    rec.d_joint = relative_entropy(joint.distribution(), joint.gibbs());
    rec.mutual_info = mutual_information(joint);
    if (keep_states) rec.joint = joint.probs();
    records.push_back(std::move(rec));
}

namespace {

void apply_steps(JointState& joint, const std::vector<double>& g,
                 const std::vector<std::pair<std::size_t, std::size_t>>& steps, Trajectory* trajectory,
                 std::size_t& step) {
    auto& r = joint.probs();
    for (const auto& [a, b] : steps) {
        if (a == b || a >= r.size() || b >= r.size()) {
            throw InvalidInput("run_truncated: schedule step (" + std::to_string(a) + ", " + std::to_string(b) +
                               ") invalid for joint dimension " + std::to_string(r.size()));
        }
        kernels::thermalize_pair(r.data(), g.data(), a, b);
        if (trajectory) trajectory->record(++step, joint);
    }
}

} // namespace

JointState run_truncated(JointState joint, const ProtocolSchedule& schedule, Trajectory* trajectory) {
    const std::vector<double> g = joint.gibbs().probs();
    std::size_t step = 0;
    if (trajectory) trajectory->record(0, joint);
    apply_steps(joint, g, schedule.steps, trajectory, step);
    return joint;
}

JointState thermalize_memory(const JointState& joint) {
    return tensor(marginalize(joint, Keep::System), joint.memory_gibbs(), joint.system_spectrum(),
                  joint.memory_spectrum(), joint.beta());
}

Distribution run_full_swap(const Distribution& p, const EnergySpectrum& system, const EnergySpectrum& memory,
                           double beta, std::size_t i, std::size_t j, const Traversal& traversal) {
    if (i >= p.size() || j >= p.size()) throw InvalidInput("run_full_swap: level out of range");
    const JointState joint = tensor_with_thermal_memory(p, system, memory, beta);
    const JointState out = run_truncated(joint, build_schedule(traversal, i, j, memory.size()));
    return marginalize(out, Keep::System);
}

Distribution run_full_swap(const Distribution& p, const EnergySpectrum& system, double beta, std::size_t i,
                           std::size_t j, std::size_t n, const Traversal& traversal) {
    return run_full_swap(p, system, EnergySpectrum::trivial(n), beta, i, j, traversal);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> chain_pairs(const TranspositionChain& chain, std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(chain.size());
    for (const Transposition& t : chain.swaps) {
        if (t.first == t.second || t.first >= d || t.second >= d) {
            throw InvalidInput("run_composed: chain swap out of range");
        }
        pairs.emplace_back(t.first, t.second);
    }
    return pairs;
}

} // namespace

Distribution run_composed(const Distribution& p, const EnergySpectrum& system, const EnergySpectrum& memory,
                          double beta, const TranspositionChain& chain, Mode mode, const Traversal& traversal) {
    if (p.size() != system.size()) throw InvalidInput("run_composed: state and spectrum lengths differ");
    const Distribution gs = gibbs_state(system, beta);
    const Distribution gm = gibbs_state(memory, beta);
    auto q = kernels::composed_marginal(p.probs(), gs.probs(), gm.probs(), chain_pairs(chain, p.size()), mode,
                                        traversal);
    return Distribution(std::move(q));
}

Distribution run_composed(const Distribution& p, const EnergySpectrum& system, double beta,
                          const TranspositionChain& chain, std::size_t n, Mode mode, const Traversal& traversal) {
    return run_composed(p, system, EnergySpectrum::trivial(n), beta, chain, mode, traversal);
}

JointState run_chain_truncated(const JointState& joint, const TranspositionChain& chain,
                               const Traversal& traversal, Trajectory* trajectory) {
    JointState out = joint;
    const std::vector<double> g = joint.gibbs().probs();
    std::size_t step = 0;
    if (trajectory) trajectory->record(0, out);
    for (const auto& [a, b] : chain_pairs(chain, joint.system_dim())) {
        apply_steps(out, g, build_schedule(traversal, a, b, joint.memory_dim()).steps, trajectory, step);
    }
    return out;
}

} // namespace memtp
