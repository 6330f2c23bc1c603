/**
 * @file thermo.hpp
 * @brief Energy spectra, incoherent states, Gibbs states, beta-orders and
 *        thermomajorisation curves.
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace memtp {

inline constexpr double kTolNegative = 1e-12;
inline constexpr double kTolNorm = 1e-10;
inline constexpr double kTolCompare = 1e-12;

class EnergySpectrum {
public:
    explicit EnergySpectrum(std::vector<double> energies);
    EnergySpectrum(std::initializer_list<double> energies)
        : EnergySpectrum(std::vector<double>(energies)) {}

    /// All-zero spectrum of length n (a memory with trivial Hamiltonian).
    static EnergySpectrum trivial(std::size_t n);

    std::size_t size() const { return energies_.size(); }
    double operator[](std::size_t i) const { return energies_[i]; }
    const std::vector<double>& energies() const { return energies_; }
    bool is_trivial() const;

private:
    std::vector<double> energies_;
};

/// Probability vector over energy levels. Entries in [-1e-12, 0) are clamped
/// to zero; the sum must be within 1e-10 of one.
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<double> probs);
    Distribution(std::initializer_list<double> probs)
        : Distribution(std::vector<double>(probs)) {}

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }
    auto begin() const { return probs_.begin(); }
    auto end() const { return probs_.end(); }

private:
    std::vector<double> probs_;
};

/// order[k] is the level occupying position k once levels are sorted by
/// p_i / gamma_i in non-increasing order. Levels are 0-based.
struct BetaOrder {
    std::vector<std::size_t> order;

    std::size_t size() const { return order.size(); }
    std::vector<std::size_t> positions() const;
    bool operator==(const BetaOrder&) const = default;
};

struct CurveKnot {
    double x;
    double y;
};

/// Piecewise-linear concave curve through d+1 knots from (0,0) to (1,1).
struct ThermoCurve {
    std::vector<CurveKnot> knots;
    double eval(double x) const;
};

Distribution gibbs_state(const EnergySpectrum& spectrum, double beta);

BetaOrder beta_order(const Distribution& p, const Distribution& gamma);

ThermoCurve thermo_curve(const Distribution& p, const Distribution& gamma);

double curve_eval(const ThermoCurve& curve, double x);

/// True iff the curve of p lies above the curve of q (within 1e-12).
bool thermomajorizes(const Distribution& p, const Distribution& q, const Distribution& gamma);

double total_variation(const Distribution& p, const Distribution& q);

/// D(p||gamma) in natural-log units.
double relative_entropy(const Distribution& p, const Distribution& gamma);

/// True if v is a permutation of {0..v.size()-1}.
bool is_permutation_of_range(const std::vector<std::size_t>& v);

/// Joint system (x) memory state. Entry i*N + j is system level i, memory
/// level j. The inverse temperature is carried so that the joint Gibbs state
/// is well defined.
class JointState {
public:
    JointState(std::vector<double> probs, EnergySpectrum system, EnergySpectrum memory, double beta);

    std::size_t system_dim() const { return system_.size(); }
    std::size_t memory_dim() const { return memory_.size(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * memory_dim() + j; }

    const std::vector<double>& probs() const { return probs_; }
    std::vector<double>& probs() { return probs_; }
    double operator[](std::size_t k) const { return probs_[k]; }

    const EnergySpectrum& system_spectrum() const { return system_; }
    const EnergySpectrum& memory_spectrum() const { return memory_; }
    double beta() const { return beta_; }

    Distribution system_gibbs() const { return gibbs_state(system_, beta_); }
    Distribution memory_gibbs() const { return gibbs_state(memory_, beta_); }
    /// gamma_S (x) gamma_M, the joint Gibbs state.
    Distribution gibbs() const;

    Distribution distribution() const { return Distribution(probs_); }

private:
    std::vector<double> probs_;
    EnergySpectrum system_;
    EnergySpectrum memory_;
    double beta_;
};

enum class Keep { System, Memory };

JointState tensor(const Distribution& system, const Distribution& memory,
                  const EnergySpectrum& system_spectrum, const EnergySpectrum& memory_spectrum,
                  double beta);

/// p (x) gamma_M with the memory Gibbs state taken from its spectrum.
JointState tensor_with_thermal_memory(const Distribution& system,
                                      const EnergySpectrum& system_spectrum,
                                      const EnergySpectrum& memory_spectrum, double beta);

Distribution marginalize(const JointState& joint, Keep keep);

/// D(p_SM || p_S (x) p_M).
double mutual_information(const JointState& joint);

} // namespace memtp
