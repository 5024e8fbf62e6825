#include "mdim/kakutani.hpp"

#include <cmath>
#include <stdexcept>

namespace mdim {

double hellinger_sq_coupled(double rho) {
  if (!(std::abs(rho) <= 1.0))
    throw std::out_of_range("rho must lie in [-1,1]");
  return 2.0 - std::sqrt(1.0 + rho) - std::sqrt(1.0 - rho);
}

std::vector<double> hellinger_partial_sums(const RhoSchedule& rho,
                                           std::size_t n) {
  if (n < 1) throw std::invalid_argument("need at least one term");
  std::vector<double> sums(n);
  double acc = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double term = hellinger_sq_coupled(rho.at(i)) - comp;
    double next = acc + term;
    comp = (next - acc) - term;
    acc = next;
    sums[i] = acc;
  }
  return sums;
}

DichotomyVerdict classify_schedule(const RhoSchedule& rho,
                                   std::size_t preview_terms) {
  using F = RhoSchedule::Family;
  DichotomyVerdict v;
  v.basis = "closed-form";
  bool diverges = false;
  switch (rho.family()) {
    case F::Const:
      // H^2 per term is a fixed positive constant iff rho != 0
      diverges = rho.const_rho() != 0.0;
      break;
    case F::InverseSqrt:
      // sum rho_n^2 = sum 1/(n+c) is harmonic, and H^2 >= rho^2/4
      diverges = true;
      v.basis = "bound-certified";
      break;
    case F::Harmonic:
      // rho_n^2 = 1/(n+c)^2 is summable and H^2 <= rho^2/2
      diverges = false;
      v.basis = "bound-certified";
      break;
    case F::Geometric:
      // |ratio| < 1 by construction, so rho_n^2 is geometric
      diverges = false;
      v.basis = "bound-certified";
      break;
    case F::Explicit:
      diverges = rho.tail() != 0.0;
      break;
  }
  v.tag = diverges ? DichotomyVerdict::Tag::SumDiverges
                   : DichotomyVerdict::Tag::SumConverges;
  v.interpretation =
      diverges
          ? "sum of squared Hellinger distances diverges: no sequence is "
            "random with respect to both the coupled family and the product "
            "of its marginals; coupled-random pairs are not independently "
            "random"
          : "sum of squared Hellinger distances converges: randomness with "
            "respect to the coupled family and the product of its marginals "
            "coincide";
  if (preview_terms > 0)
    v.partial_sums = hellinger_partial_sums(rho, preview_terms);
  return v;
}

PositivityMargin strong_positivity_margin(const MeasureSeq& m, std::size_t n) {
  if (n < 1) throw std::invalid_argument("need at least one position");
  PositivityMargin out{1.0, std::nullopt};
  std::size_t stat = m.stationary_from();
  std::size_t scan = (stat == std::size_t(-1)) ? n : std::min(n, stat + 1);
  for (std::size_t i = 0; i < scan; ++i)
    out.empirical_min = std::min(out.empirical_min, m.flat_at(i).min_prob());
  if (const RhoSchedule* rs = m.rho()) {
    out.analytic_inf = (1.0 - rs->sup_abs()) / 4.0;
    // the empirical scan above only covers n positions; for unbounded
    // families the analytic value is the authoritative one
  } else if (stat != std::size_t(-1)) {
    double inf = m.flat_at(stat).min_prob();
    for (std::size_t i = 0; i < stat; ++i)
      inf = std::min(inf, m.flat_at(i).min_prob());
    out.analytic_inf = inf;
  }
  return out;
}

}  // namespace mdim
