#include "memtp/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "memtp/errors.hpp"

namespace memtp {

namespace {

void require_same_size(const Distribution& a, const Distribution& b, const char* what) {
    if (a.size() != b.size()) {
        throw InvalidInput(std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                           " vs " + std::to_string(b.size()) + ")");
    }
}

void require_positive(const Distribution& gamma, const char* what) {
    for (double g : gamma) {
        if (!(g > 0.0)) throw InvalidInput(std::string(what) + ": gamma must be strictly positive");
    }
}

} // namespace

EnergySpectrum::EnergySpectrum(std::vector<double> energies) : energies_(std::move(energies)) {
    if (energies_.empty()) throw InvalidInput("EnergySpectrum: need at least one level");
    for (double e : energies_) {
        if (!std::isfinite(e)) throw InvalidInput("EnergySpectrum: energies must be finite");
    }
}

EnergySpectrum EnergySpectrum::trivial(std::size_t n) {
    return EnergySpectrum(std::vector<double>(n, 0.0));
}

bool EnergySpectrum::is_trivial() const {
    return std::all_of(energies_.begin(), energies_.end(),
                       [&](double e) { return e == energies_.front(); });
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InvalidInput("Distribution: empty");
    double sum = 0.0;
    for (double& v : probs_) {
        if (!std::isfinite(v)) throw InvalidInput("Distribution: non-finite entry");
        if (v < 0.0) {
            if (v < -kTolNegative) throw InvalidInput("Distribution: negative entry");
            v = 0.0;
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kTolNorm) {
        throw InvalidInput("Distribution: entries sum to " + std::to_string(sum));
    }
}

std::vector<std::size_t> BetaOrder::positions() const {
    std::vector<std::size_t> pos(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    return pos;
}

Distribution gibbs_state(const EnergySpectrum& spectrum, double beta) {
    if (!std::isfinite(beta) || beta < 0.0) throw InvalidInput("gibbs_state: beta must be finite and >= 0");
    const auto& e = spectrum.energies();
    const double emin = *std::min_element(e.begin(), e.end());
    std::vector<double> w(e.size());
    double z = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        w[i] = std::exp(-beta * (e[i] - emin));
        if (!(w[i] > 0.0)) throw InvalidInput("gibbs_state: Gibbs weight underflows to zero");
        z += w[i];
    }
    for (double& v : w) v /= z;
    return Distribution(std::move(w));
}

BetaOrder beta_order(const Distribution& p, const Distribution& gamma) {
    require_same_size(p, gamma, "beta_order");
    require_positive(gamma, "beta_order");
    BetaOrder out;
    out.order.resize(p.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) {
        return p[a] / gamma[a] > p[b] / gamma[b];
    });
    return out;
}

ThermoCurve thermo_curve(const Distribution& p, const Distribution& gamma) {
    const BetaOrder bo = beta_order(p, gamma);
    ThermoCurve c;
    c.knots.reserve(p.size() + 1);
    c.knots.push_back({0.0, 0.0});
    double x = 0.0, y = 0.0;
    for (std::size_t level : bo.order) {
        x += gamma[level];
        y += p[level];
        c.knots.push_back({x, y});
    }
    // Pin the endpoint so rounding in the subsums cannot leave (1,1).
    c.knots.back() = {1.0, 1.0};
    return c;
}

double ThermoCurve::eval(double x) const {
    if (!(x >= -kTolNegative && x <= 1.0 + kTolNegative)) {
        throw InvalidInput("curve_eval: x outside [0,1]");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    auto it = std::lower_bound(knots.begin(), knots.end(), x,
                               [](const CurveKnot& k, double v) { return k.x < v; });
    if (it->x == x) return it->y;
    const CurveKnot& hi = *it;
    const CurveKnot& lo = *(it - 1);
    const double t = (x - lo.x) / (hi.x - lo.x);
    return lo.y + t * (hi.y - lo.y);
}

double curve_eval(const ThermoCurve& curve, double x) { return curve.eval(x); }

bool thermomajorizes(const Distribution& p, const Distribution& q, const Distribution& gamma) {
    require_same_size(p, q, "thermomajorizes");
    const ThermoCurve fp = thermo_curve(p, gamma);
    const ThermoCurve fq = thermo_curve(q, gamma);
    for (const auto* curve : {&fp, &fq}) {
        for (const CurveKnot& k : curve->knots) {
            if (fp.eval(k.x) < fq.eval(k.x) - kTolCompare) return false;
        }
    }
    return true;
}

double total_variation(const Distribution& p, const Distribution& q) {
    require_same_size(p, q, "total_variation");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

double relative_entropy(const Distribution& p, const Distribution& gamma) {
    require_same_size(p, gamma, "relative_entropy");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (!(gamma[i] > 0.0)) throw InvalidInput("relative_entropy: support of p exceeds support of gamma");
        d += p[i] * std::log(p[i] / gamma[i]);
    }
    return d;
}

bool is_permutation_of_range(const std::vector<std::size_t>& v) {
    std::vector<bool> seen(v.size(), false);
    for (std::size_t x : v) {
        if (x >= v.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

JointState::JointState(std::vector<double> probs, EnergySpectrum system, EnergySpectrum memory, double beta)
    : probs_(std::move(probs)), system_(std::move(system)), memory_(std::move(memory)), beta_(beta) {
    if (probs_.size() != system_.size() * memory_.size()) {
        throw InvalidInput("JointState: probability vector has wrong length");
    }
    if (!std::isfinite(beta_) || beta_ < 0.0) throw InvalidInput("JointState: beta must be finite and >= 0");
    probs_ = Distribution(std::move(probs_)).probs();
}

Distribution JointState::gibbs() const {
    const Distribution gs = system_gibbs();
    const Distribution gm = memory_gibbs();
    std::vector<double> g(probs_.size());
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < gm.size(); ++j) g[index(i, j)] = gs[i] * gm[j];
    return Distribution(std::move(g));
}

JointState tensor(const Distribution& system, const Distribution& memory,
                  const EnergySpectrum& system_spectrum, const EnergySpectrum& memory_spectrum,
                  double beta) {
    if (system.size() != system_spectrum.size() || memory.size() != memory_spectrum.size()) {
        throw InvalidInput("tensor: state and spectrum lengths differ");
    }
    const std::size_t n = memory.size();
    std::vector<double> r(system.size() * n);
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] = system[i] * memory[j];
    return JointState(std::move(r), system_spectrum, memory_spectrum, beta);
}

JointState tensor_with_thermal_memory(const Distribution& system,
                                      const EnergySpectrum& system_spectrum,
                                      const EnergySpectrum& memory_spectrum, double beta) {
    return tensor(system, gibbs_state(memory_spectrum, beta), system_spectrum, memory_spectrum, beta);
}

Distribution marginalize(const JointState& joint, Keep keep) {
    const std::size_t d = joint.system_dim();
    const std::size_t n = joint.memory_dim();
    std::vector<double> m(keep == Keep::System ? d : n, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) m[keep == Keep::System ? i : j] += joint[i * n + j];
    return Distribution(std::move(m));
}

double mutual_information(const JointState& joint) {
    const Distribution ps = marginalize(joint, Keep::System);
    const Distribution pm = marginalize(joint, Keep::Memory);
    const std::size_t n = joint.memory_dim();
    double info = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double r = joint[i * n + j];
            if (r > 0.0) info += r * std::log(r / (ps[i] * pm[j]));
        }
    }
    return std::max(info, 0.0);
}

} // namespace memtp
