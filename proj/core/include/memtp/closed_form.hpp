/**
 * @file closed_form.hpp
 * @brief Closed-form joint entries of the truncated beta-swap protocol with a
 *        trivial-Hamiltonian memory, and the error functions E, F, G.
 *
 * For system levels (i, j) with populations b = p_i, c = p_j, the joint
 * entries scaled by N are b_j^(k) (level i, memory slot j, after k rounds)
 * and c_j^(N) (level j, slot j, at the end). A round fixes one level-j slot
 * and thermalises it against every level-i slot, so these intermediate values
 * belong to the row-first traversal; the final state is traversal independent.
 * Indices j and k are 1-based as in the formulas.
 */
#pragma once

#include <cstddef>

#include "memtp/thermo.hpp"

namespace memtp {

/// Rescaled pair Gibbs factors. Only gamma_i is stored.
class PairGibbsFactors {
public:
    explicit PairGibbsFactors(double gamma_i);
    static PairGibbsFactors from(const Distribution& gamma, std::size_t i, std::size_t j);

    double gamma_i() const { return gi_; }
    double gamma_j() const { return 1.0 - gi_; }

private:
    double gi_;
};

double closed_form_entry_b(std::size_t j, std::size_t k, std::size_t n, const PairGibbsFactors& pair, double b,
                           double c);

double closed_form_entry_c(std::size_t j, std::size_t n, const PairGibbsFactors& pair, double b, double c);

/// Exact finite sums: E is the weight of c left on level j, F the weight of
/// b left on level i.
double error_E(std::size_t n, const PairGibbsFactors& pair);
double error_F(std::size_t n, const PairGibbsFactors& pair);

/// Leading excess of F over its limit when gamma_i > gamma_j. At
/// gamma_i = gamma_j it reduces to (pi N)^{-1/2}.
double error_G(std::size_t n, const PairGibbsFactors& pair);

/// Leading-order E for gamma_i > gamma_j (and (pi N)^{-1/2} at equality).
double error_E_asymptotic(std::size_t n, const PairGibbsFactors& pair);

/// System state after the full protocol on levels (i, j):
/// q_i = b F + c (1 - E), q_j = b (1 - F) + c E, other levels unchanged.
Distribution reconstruct_final_state(const Distribution& p, std::size_t i, std::size_t j, std::size_t n,
                                     const PairGibbsFactors& pair);

} // namespace memtp
