#ifndef MDIM_KAKUTANI_HPP
#define MDIM_KAKUTANI_HPP

#include <optional>
#include <string>
#include <vector>

#include "mdim/measures.hpp"

namespace mdim {

/// Squared Hellinger distance between the rho-coupled pair measure and the
/// product of its (uniform) marginals: 2 - sqrt(1+rho) - sqrt(1-rho).
double hellinger_sq_coupled(double rho);

/// Cumulative sums of hellinger_sq_coupled(rho_n) for n < N. Nondecreasing.
std::vector<double> hellinger_partial_sums(const RhoSchedule& rho, std::size_t n);

struct DichotomyVerdict {
  enum class Tag { SumConverges, SumDiverges };
  Tag tag;
  std::string basis;           // "closed-form" or "bound-certified"
  std::string interpretation;  // which side of the dichotomy applies
  std::vector<double> partial_sums;
};

/// Analytic classification of sum H(alpha^(n), product)^2 for the built-in
/// rho families. Verdicts are never inferred from truncated sums; the
/// convergence question is decided per family in closed form.
DichotomyVerdict classify_schedule(const RhoSchedule& rho,
                                   std::size_t preview_terms = 0);

struct PositivityMargin {
  double empirical_min;                 // min prob over positions n < N
  std::optional<double> analytic_inf;   // infimum over all n, when known
};

/// Strong-positivity margin delta of a measure sequence.
PositivityMargin strong_positivity_margin(const MeasureSeq& m, std::size_t n);

}  // namespace mdim

#endif
