#include "mdim/billingsley.hpp"

#include <cmath>
#include <stdexcept>

#include "mdim/info.hpp"

namespace mdim {

namespace {

constexpr double kUniformTol = 1e-12;

void require_binary(const Pmf& b, const char* who) {
  if (b.size() != 2)
    throw std::invalid_argument(std::string(who) +
                                ": only binary alphabets are supported");
}

bool is_binary_uniform(const Pmf& b) {
  return std::abs(b(0) - 0.5) <= kUniformTol;
}

}  // namespace

ConditionId check_conditions(const Pmf& beta1, const Pmf& beta2) {
  require_binary(beta1, "check_conditions");
  require_binary(beta2, "check_conditions");
  double b10 = beta1(0), b11 = beta1(1);
  double b20 = beta2(0), b21 = beta2(1);
  if (0 < b20 && b20 < b11 && b11 < b10 && b10 < b21 && b21 < 1)
    return ConditionId::C1;
  if (0 < b21 && b21 < b10 && b10 < b11 && b11 < b20 && b20 < 1)
    return ConditionId::C2;
  if (0 < b20 && b20 < b10 && b10 < b11 && b11 < b21 && b21 < 1)
    return ConditionId::C3;
  if (0 < b21 && b21 < b11 && b11 < b10 && b10 < b20 && b20 < 1)
    return ConditionId::C4;
  if (is_binary_uniform(beta1) && !is_binary_uniform(beta2))
    return ConditionId::C5;
  return ConditionId::None;
}

double f_map(double x, const Pmf& beta1, const Pmf& beta2) {
  require_binary(beta1, "f_map");
  require_binary(beta2, "f_map");
  if (is_binary_uniform(beta2))
    throw std::domain_error("f_map: beta2 uniform gives a zero denominator");
  double slope = std::log2(beta1(1) / beta1(0));
  double inter = std::log2(beta2(1) / beta1(1));
  double den = std::log2(beta2(1) / beta2(0));
  return (x * slope + inter) / den;
}

bool is_equivalent(const Pmf& a1, const Pmf& a2, const Pmf& b1, const Pmf& b2,
                   double tol) {
  double l = cross_entropy(a1, b1);
  double r = cross_entropy(a2, b2);
  if (std::isinf(l) || std::isinf(r)) return l == r;
  return std::abs(l - r) <= tol;
}

Pmf equivalent_measure(const EquivalenceProblem& prob) {
  require_binary(prob.alpha1, "equivalent_measure");
  if (check_conditions(prob.beta1, prob.beta2) == ConditionId::None)
    throw std::domain_error(
        "equivalent_measure: (beta1,beta2) satisfy none of the five "
        "conditions; no solution");
  double a20 = f_map(prob.alpha1(0), prob.beta1, prob.beta2);
  Eigen::VectorXd p(2);
  p << a20, 1.0 - a20;
  Pmf alpha2(std::move(p));
  if (!is_equivalent(prob.alpha1, alpha2, prob.beta1, prob.beta2, 1e-9))
    throw std::logic_error("equivalent_measure: solution fails verification");
  return alpha2;
}

DensityTrace normalizability_ratio_trace(const Word& s, const Word& t,
                                         const Pmf& beta1, const Pmf& beta2,
                                         const std::vector<std::size_t>& schedule) {
  if (s.size() != t.size())
    throw std::invalid_argument("normalizability_ratio_trace: length mismatch");
  if (beta1.min_prob() <= 0.0 || beta2.min_prob() <= 0.0)
    throw std::domain_error("normalizability_ratio_trace: betas must be "
                            "strictly positive");
  check_symbols(s, beta1.size());
  check_symbols(t, beta2.size());
  DensityTrace tr;
  double l1 = 0.0, l2 = 0.0;
  std::size_t pos = 0;
  for (std::size_t n : schedule) {
    if (n > s.size()) break;
    for (; pos < n; ++pos) {
      l1 -= std::log2(beta1(s[pos]));
      l2 -= std::log2(beta2(t[pos]));
    }
    tr.schedule.push_back(n);
    tr.values.push_back(l1 / l2);
  }
  return tr;
}

double billingsley_mdim(const JointPmf& alpha, const Pmf& beta1,
                        const Pmf& beta2) {
  if (beta1.min_prob() <= 0.0 || beta2.min_prob() <= 0.0)
    throw std::domain_error("billingsley_mdim: betas must be strictly positive");
  auto [a1, a2] = marginals(alpha);
  if (!is_equivalent(a1, a2, beta1, beta2))
    throw std::domain_error(
        "billingsley_mdim: marginals are not (beta1,beta2)-equivalent, the "
        "normalizability hypothesis fails");
  double mi = mutual_information(alpha);
  double d1 = cross_entropy(a1, beta1);
  double d2 = cross_entropy(a2, beta2);
  double v1 = mi / d1;
  double v2 = mi / d2;
  if (std::abs(v1 - v2) > 1e-9)
    throw std::logic_error("billingsley_mdim: the two normalizations disagree");
  return v1;
}

}  // namespace mdim
