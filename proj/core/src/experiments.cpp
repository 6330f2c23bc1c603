#include "memtp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "memtp/errors.hpp"
#include "memtp/kernels.hpp"

namespace memtp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Extended = boost::multiprecision::cpp_bin_float_50;

// Renormalised in Real so the entries sum to one at that precision.
template <class Real>
std::vector<Real> convert(const std::vector<double>& v) {
    std::vector<Real> r(v.begin(), v.end());
    Real s = 0;
    for (const Real& x : r) s += x;
    for (Real& x : r) x /= s;
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const TranspositionChain& chain) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Transposition& t : chain.swaps) out.emplace_back(t.first, t.second);
    return out;
}

// Distance of the composed protocol output to the vertex with beta-order
// `order`, both computed in Real.
template <class Real>
double composed_distance(const Distribution& p, const Distribution& gamma, const std::vector<std::size_t>& order,
                         const TranspositionChain& chain, std::size_t n, Mode mode, const Traversal& traversal) {
    const auto pr = convert<Real>(p.probs());
    const auto gr = convert<Real>(gamma.probs());
    const std::vector<Real> gm(n, Real(1) / Real(n));
    const auto q = kernels::composed_marginal(pr, gr, gm, pairs_of(chain), mode, traversal);
    return static_cast<double>(kernels::total_variation(q, kernels::lemma5_vertex(pr, gr, order)));
}

template <class Real>
std::vector<double> vertex_in(const Distribution& p, const Distribution& gamma, const std::vector<std::size_t>& order) {
    const auto v = kernels::lemma5_vertex(convert<Real>(p.probs()), convert<Real>(gamma.probs()), order);
    std::vector<double> out;
    for (const Real& x : v) out.push_back(static_cast<double>(x));
    return out;
}

} // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    const std::size_t workers = std::min<std::size_t>(n, std::max(1U, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) f(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < n; k = next++) {
                try {
                    f(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

SweepResult converge_sweep(const SweepConfig& cfg) {
    if (cfg.p.size() != cfg.system.size()) throw InvalidInput("converge_sweep: state and spectrum lengths differ");
    if (!std::is_sorted(cfg.memory_sizes.begin(), cfg.memory_sizes.end()) ||
        std::adjacent_find(cfg.memory_sizes.begin(), cfg.memory_sizes.end()) != cfg.memory_sizes.end()) {
        throw InvalidInput("converge_sweep: memory sizes must be strictly increasing");
    }
    if (cfg.memory_sizes.empty() || cfg.memory_sizes.front() == 0) throw InvalidInput("converge_sweep: no memory sizes");
    const Distribution gamma = gibbs_state(cfg.system, cfg.beta);
    const BetaOrder start = beta_order(cfg.p, gamma);
    const std::vector<std::size_t> order = cfg.target_order.empty() ? start.order : cfg.target_order;

    SweepResult res;
    res.chain = decompose_neighbour_transpositions(start, order);
    res.target = cfg.precision == Precision::Extended ? vertex_in<Extended>(cfg.p, gamma, order)
                                                      : vertex_in<double>(cfg.p, gamma, order);

    RateParams prm;
    prm.p = cfg.p.probs();
    prm.gamma = gamma.probs();
    prm.chain = res.chain;
    if (cfg.beta == 0.0) {
        res.model = RateModel::Theorem1Delta;
    } else if (res.chain.size() == 1) {
        res.model = RateModel::Theorem2;
        prm.i = res.chain.swaps[0].first;
        prm.j = res.chain.swaps[0].second;
        prm.lemma1_fallback = true;
    }
    const bool full = cfg.run_full.value_or(cfg.beta == 0.0);

    res.rows.resize(cfg.memory_sizes.size());
    parallel_for(cfg.memory_sizes.size(), [&](std::size_t k) {
        const std::size_t n = cfg.memory_sizes[k];
        if (n == 0) throw InvalidInput("converge_sweep: memory size must be >= 1");
        auto dist = [&](Mode mode) {
            return cfg.precision == Precision::Extended
                       ? composed_distance<Extended>(cfg.p, gamma, order, res.chain, n, mode, cfg.traversal)
                       : composed_distance<double>(cfg.p, gamma, order, res.chain, n, mode, cfg.traversal);
        };
        SweepRow row;
        row.n = n;
        row.delta_truncated = dist(Mode::Truncated);
        row.delta_full = full ? dist(Mode::Full) : kNaN;
        row.delta_predicted = res.model ? predict_delta(*res.model, prm, n) : kNaN;
        res.rows[k] = row;
    });
    return res;
}

Distribution work_target(const Distribution& gamma_s, double epsilon) {
    std::vector<double> t(2 * gamma_s.size());
    for (std::size_t s = 0; s < gamma_s.size(); ++s) {
        t[sb_index(s, 0)] = gamma_s[s] * epsilon;
        t[sb_index(s, 1)] = gamma_s[s] * (1.0 - epsilon);
    }
    return Distribution(std::move(t));
}

EpsilonResult min_epsilon_transform(const Distribution& source, const Distribution& gamma_sb,
                                    const Distribution& gamma_s) {
    if (source.size() != 2 * gamma_s.size() || gamma_sb.size() != source.size()) {
        throw InvalidInput("min_epsilon_transform: expected a system (x) two-level battery state");
    }
    auto feasible = [&](double eps) { return thermomajorizes(source, work_target(gamma_s, eps), gamma_sb); };
    // At the battery's thermal ground population the target is the Gibbs
    // state; feasibility is monotone only below that point.
    const double g0 = gamma_sb[sb_index(0, 0)], g1 = gamma_sb[sb_index(0, 1)];
    const double top = g0 / (g0 + g1);
    EpsilonResult out;
    if (!feasible(top)) return out;
    out.feasible = true;
    if (feasible(0.0)) {
        out.epsilon = 0.0;
        return out;
    }
    double lo = 0.0, hi = top;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    out.epsilon = hi;
    const double below = hi - 1e-11;
    out.monotone = below <= 0.0 || !feasible(below);
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t k = 0; k < count; ++k) v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
    return v;
}

double work_kink(double gap, double beta) { return std::log1p(std::exp(-beta * gap)) / beta; }

std::vector<WorkRow> WorkExtractionResult::rows() const {
    std::vector<WorkRow> out;
    for (const WorkPoint& pt : points)
        for (std::size_t k = 0; k < memory_sizes.size(); ++k)
            out.push_back({pt.w, memory_sizes[k], pt.epsilon_n[k], pt.epsilon_to});
    return out;
}

WorkExtractionResult work_extraction(const WorkExtractConfig& cfg) {
    if (!(cfg.gap > 0.0)) throw InvalidInput("work_extraction: gap must be positive");
    for (double w : cfg.w_grid)
        if (!std::isfinite(w)) throw InvalidInput("work_extraction: W grid must be finite");
    const EnergySpectrum sys{0.0, cfg.gap};
    const Distribution gamma_s = gibbs_state(sys, cfg.beta);
    const Distribution p_s = gibbs_state(sys, cfg.beta_source);
    const Distribution p_sb{p_s[0], 0.0, p_s[1], 0.0};

    WorkExtractionResult res;
    res.memory_sizes = cfg.memory_sizes;
    res.points.resize(cfg.w_grid.size());
    parallel_for(cfg.w_grid.size(), [&](std::size_t idx) {
        const double w = cfg.w_grid[idx];
        const EnergySpectrum sb{0.0, w, cfg.gap, cfg.gap + w};
        const Distribution gamma_sb = gibbs_state(sb, cfg.beta);
        const BetaOrder start = beta_order(p_sb, gamma_sb);

        // Below the battery's thermal point the target puts both battery-excited
        // levels first, so the final step is an MTP only from a vertex that
        // starts with them. Among those, the best one; ties go to the shortest
        // neighbour chain.
        const double eps_to = min_epsilon_transform(p_sb, gamma_sb, gamma_s).epsilon;
        const double g0 = gamma_sb[sb_index(0, 0)], g1 = gamma_sb[sb_index(0, 1)];
        const bool thermal = eps_to >= g0 / (g0 + g1) - 1e-12;
        const std::size_t e0 = sb_index(0, 1), e1 = sb_index(1, 1);
        std::vector<std::size_t> perm(4), best = start.order;
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        double best_eps = 2.0;
        std::size_t best_inv = 0;
        if (!thermal) {
            do {
                if (!((perm[0] == e0 && perm[1] == e1) || (perm[0] == e1 && perm[1] == e0))) continue;
                const double eps =
                    min_epsilon_transform(extreme_point(p_sb, gamma_sb, perm).state, gamma_sb, gamma_s).epsilon;
                const std::size_t inv = inversion_count(start.order, perm);
                if (eps < best_eps - 1e-12 || (eps <= best_eps + 1e-12 && inv < best_inv)) {
                    best_eps = std::min(eps, best_eps);
                    best_inv = inv;
                    best = perm;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        WorkPoint pt;
        pt.w = w;
        pt.epsilon_to = eps_to;
        pt.vertex_order = best;
        const TranspositionChain chain = decompose_neighbour_transpositions(start, best);
        for (std::size_t n : cfg.memory_sizes) {
            const Distribution q = run_composed(p_sb, sb, cfg.beta, chain, n, Mode::Truncated, cfg.traversal);
            pt.epsilon_n.push_back(min_epsilon_transform(q, gamma_sb, gamma_s).epsilon);
        }
        res.points[idx] = std::move(pt);
    });
    for (const WorkPoint& pt : res.points) {
        for (std::size_t k = 0; k < pt.epsilon_n.size(); ++k) {
            if (pt.epsilon_n[k] < pt.epsilon_to - 1e-10) res.above_to = false;
            if (k > 0 && pt.epsilon_n[k] > pt.epsilon_n[k - 1] + 1e-10) res.monotone_in_n = false;
        }
    }
    return res;
}

std::vector<CoolingOp> cooling_sequence() {
    return {CoolingOp::SwapExchange, CoolingOp::SystemFlip, CoolingOp::SwapPair, CoolingOp::MemoryFlip};
}

Distribution cooling_apply(const Distribution& p, double e_s, double e_m, double beta,
                           const std::vector<CoolingOp>& ops) {
    if (p.size() != 2) throw InvalidInput("cooling_apply: system must be two-level");
    const EnergySpectrum sys{0.0, e_s};
    const EnergySpectrum mem{0.0, e_m};
    JointState joint = tensor_with_thermal_memory(p, sys, mem, beta);
    const std::vector<double> g = joint.gibbs().probs();
    auto& r = joint.probs();
    auto th = [&](std::size_t a, std::size_t b) { kernels::thermalize_pair(r.data(), g.data(), a, b); };
    for (CoolingOp op : ops) {
        switch (op) {
        case CoolingOp::SwapExchange: th(1, 2); break;
        case CoolingOp::SwapPair: th(0, 3); break;
        case CoolingOp::SystemFlip: th(0, 2); th(1, 3); break;
        case CoolingOp::MemoryFlip: th(0, 1); th(2, 3); break;
        }
    }
    return marginalize(thermalize_memory(joint), Keep::System);
}

Distribution cooling_closed_form(double e_s, double e_m, double beta) {
    auto e = [](double v) { return std::exp(v); };
    const double num = e(beta * e_m) + e(beta * (e_m + e_s)) + e(beta * (2 * e_m + e_s)) +
                       e(beta * (e_m + 2 * e_s)) + e(beta * e_s);
    const double den = (e(beta * e_s) + 1.0) * (e(beta * (e_m - e_s)) + 1.0) * (e(beta * (e_m + e_s)) + 1.0);
    const double q0 = num / den;
    return Distribution{q0, 1.0 - q0};
}

double cooling_distance_closed_form(double e_s, double e_m, double beta) {
    return 1.0 / ((std::exp(-beta * e_s) + 1.0) * (std::cosh(beta * e_m) + std::cosh(beta * e_s)));
}

CoolingReport cooling_demo(double e_s, double e_m, double beta) {
    if (!(e_s > 0.0) || !(e_m > 0.0)) throw InvalidInput("cooling_demo: gaps must be positive");
    if (std::abs(e_s - 2.0 * e_m) < 1e-12) throw InvalidInput("cooling_demo: E_S - E_M must differ from E_M");
    const Distribution excited{0.0, 1.0};
    CoolingReport rep{cooling_apply(excited, e_s, e_m, beta, cooling_sequence()), cooling_closed_form(e_s, e_m, beta),
                      gibbs_state(EnergySpectrum{0.0, e_s}, beta), 0.0, 0.0};
    rep.distance_engine = 2.0 * total_variation(rep.q_engine, rep.gamma_s);
    rep.distance_closed_form = cooling_distance_closed_form(e_s, e_m, beta);
    return rep;
}

double beta_crit(const EnergySpectrum& spectrum) {
    const auto& e = spectrum.energies();
    if (e.size() < 3) throw InvalidInput("beta_crit: root is not bracketed for d < 3");
    for (std::size_t i = 1; i < e.size(); ++i)
        if (!(e[i] > 0.0)) throw InvalidInput("beta_crit: excited energies must be positive");
    auto f = [&](double b) {
        double s = 0.0;
        for (std::size_t i = 1; i < e.size(); ++i) s += std::exp(-b * e[i]);
        return 1.0 - s;
    };
    double lo = 0.0, hi = 1.0;
    while (f(hi) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e8) throw InvalidInput("beta_crit: root is not bracketed");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

Distribution inaccessible_target(const EnergySpectrum& spectrum, double beta) {
    if (spectrum[0] != 0.0) throw InvalidInput("inaccessible_target: E_0 must be 0");
    std::vector<double> q(spectrum.size());
    double s = 0.0;
    for (std::size_t i = 1; i < spectrum.size(); ++i) {
        q[i] = std::exp(-beta * spectrum[i]);
        s += q[i];
    }
    if (!(s < 1.0)) throw InvalidInput("inaccessible_target: beta must exceed beta_crit");
    q[0] = 1.0 - s;
    return Distribution(std::move(q));
}

InaccessibleResult inaccessible_convergence(const EnergySpectrum& spectrum, double beta,
                                            const std::vector<std::size_t>& memory_sizes,
                                            const Traversal& traversal) {
    const std::size_t d = spectrum.size();
    InaccessibleResult res;
    res.beta = beta;
    res.beta_crit = beta_crit(spectrum);
    const Distribution q = inaccessible_target(spectrum, beta);
    std::vector<double> p0(d, 0.0);
    p0[0] = 1.0;
    const Distribution p(p0);
    const Distribution gamma = gibbs_state(spectrum, beta);
    // Level 0 moves to the back; the excited levels tie and keep index order.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end() - 1, std::size_t{1});
    order.back() = 0;
    const TranspositionChain chain = decompose_neighbour_transpositions(beta_order(p, gamma), order);

    res.rows.resize(memory_sizes.size());
    parallel_for(memory_sizes.size(), [&](std::size_t k) {
        const std::size_t n = memory_sizes[k];
        const Distribution out = run_composed(p, spectrum, beta, chain, n, Mode::Truncated, traversal);
        res.rows[k] = {n, total_variation(out, q), 0.5 / std::sqrt(static_cast<double>(n))};
    });
    for (std::size_t k = 0; k < res.rows.size(); ++k) {
        if (res.rows[k].delta > res.rows[k].bound) res.below_bound = false;
        if (k > 0 && !(res.rows[k].delta < res.rows[k - 1].delta)) res.decreasing = false;
    }
    for (std::size_t k = res.rows.size(); k-- > 0;) {
        if (res.rows[k].delta > res.rows[k].bound) break;
        res.n0 = res.rows[k].n;
    }
    return res;
}

InaccessibleResult inaccessible_convergence_factor(const EnergySpectrum& spectrum, double beta_factor,
                                                   const std::vector<std::size_t>& memory_sizes,
                                                   const Traversal& traversal) {
    return inaccessible_convergence(spectrum, beta_factor * beta_crit(spectrum), memory_sizes, traversal);
}

Trajectory free_energy_trace(const Distribution& p, const EnergySpectrum& system, double beta, std::size_t i,
                             std::size_t j, std::size_t n, const Traversal& traversal, bool keep_states) {
    Trajectory t;
    t.keep_states = keep_states;
    const JointState joint = tensor_with_thermal_memory(p, system, EnergySpectrum::trivial(n), beta);
    const JointState after = run_truncated(joint, build_schedule(traversal, i, j, n), &t);
    t.record(n * n + 1, thermalize_memory(after));
    return t;
}

bool joint_entropy_non_increasing(const Trajectory& t, double tol) {
    for (std::size_t k = 1; k < t.records.size(); ++k) {
        if (t.records[k].d_joint > t.records[k - 1].d_joint + tol) return false;
    }
    return true;
}

} // namespace memtp
