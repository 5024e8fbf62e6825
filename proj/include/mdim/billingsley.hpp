#ifndef MDIM_BILLINGSLEY_HPP
#define MDIM_BILLINGSLEY_HPP

#include "mdim/estimate.hpp"
#include "mdim/measures.hpp"
#include "mdim/word.hpp"

namespace mdim {

/// Which of the five mutually exclusive (beta1, beta2) configurations holds.
enum class ConditionId { None = 0, C1 = 1, C2 = 2, C3 = 3, C4 = 4, C5 = 5 };

/// Evaluates the five strict-inequality chains on binary beta1, beta2.
/// Equality against uniform (condition 5) is tested within 1e-12.
ConditionId check_conditions(const Pmf& beta1, const Pmf& beta2);

/// The linear map f(x) = (x log2(b1(1)/b1(0)) + log2(b2(1)/b1(1)))
///                       / log2(b2(1)/b2(0)).
/// Lands in (0,1) for x in [0,1] whenever some condition holds.
double f_map(double x, const Pmf& beta1, const Pmf& beta2);

struct EquivalenceProblem {
  Pmf alpha1;
  Pmf beta1;
  Pmf beta2;
};

/// True iff cross_entropy(a1,b1) == cross_entropy(a2,b2) within tol.
bool is_equivalent(const Pmf& a1, const Pmf& a2, const Pmf& b1, const Pmf& b2,
                   double tol = 1e-9);

/// The unique binary alpha2 that is (beta1,beta2)-equivalent to alpha1.
/// Throws when no condition holds.
Pmf equivalent_measure(const EquivalenceProblem& prob);

/// Trace of l_b1(u-prefix) / l_b2(w-prefix) over the schedule.
DensityTrace normalizability_ratio_trace(const Word& s, const Word& t,
                                         const Pmf& beta1, const Pmf& beta2,
                                         const std::vector<std::size_t>& schedule);

/// Mutual divergence formula: I(a1:a2) / (H(a1) + D(a1||b1)).
/// Requires the marginals of alpha to be (beta1,beta2)-equivalent; verifies
/// internally that the second denominator gives the same value within 1e-9.
double billingsley_mdim(const JointPmf& alpha, const Pmf& beta1,
                        const Pmf& beta2);

}  // namespace mdim

#endif
