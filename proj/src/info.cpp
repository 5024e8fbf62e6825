#include "mdim/info.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mdim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Index-ascending Kahan sum; fixed order keeps results bit-reproducible.
class Accumulator {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double entropy(const Pmf& a) {
  Accumulator acc;
  for (int i = 0; i < a.size(); ++i) {
    double p = a(i);
    if (p > 0.0) acc.add(-p * std::log2(p));
  }
  return std::max(0.0, acc.value());
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double mutual_information(const JointPmf& j) {
  auto [m1, m2] = marginals(j);
  int k = j.alphabet();
  Accumulator acc;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      double p = j(a, b);
      if (p > 0.0) acc.add(p * std::log2(p / (m1(a) * m2(b))));
    }
  return std::max(0.0, acc.value());
}

double kl_divergence(const Pmf& a, const Pmf& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("kl_divergence: alphabet sizes differ");
  Accumulator acc;
  for (int i = 0; i < a.size(); ++i) {
    double p = a(i);
    if (p == 0.0) continue;
    if (b(i) == 0.0) return kInf;
    acc.add(p * std::log2(p / b(i)));
  }
  return std::max(0.0, acc.value());
}

double cross_entropy(const Pmf& a, const Pmf& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cross_entropy: alphabet sizes differ");
  Accumulator acc;
  for (int i = 0; i < a.size(); ++i) {
    double p = a(i);
    if (p == 0.0) continue;
    if (b(i) == 0.0) return kInf;
    acc.add(-p * std::log2(b(i)));
  }
  return acc.value();
}

double self_information(const Pmf& b, const Word& w) {
  check_symbols(w, b.size());
  Accumulator acc;
  for (Symbol s : w) {
    if (b(s) == 0.0) return kInf;
    acc.add(-std::log2(b(s)));
  }
  return acc.value();
}

double pointwise_mi(const MeasureSeq& m, const Word& u, const Word& w) {
  if (!m.pair_alphabet())
    throw std::invalid_argument("pointwise_mi needs a pair-alphabet measure");
  if (u.size() != w.size())
    throw std::invalid_argument("pointwise_mi: length mismatch");
  int k = m.base_alphabet();
  check_symbols(u, k);
  check_symbols(w, k);
  Accumulator acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    JointPmf j = m.joint_at(i);
    auto [m1, m2] = marginals(j);
    double joint = j(u[i], w[i]);
    if (joint == 0.0) return -kInf;
    acc.add(std::log2(joint / (m1(u[i]) * m2(w[i]))));
  }
  return acc.value();
}

double hellinger(const Pmf& a, const Pmf& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hellinger: alphabet sizes differ");
  Accumulator acc;
  for (int i = 0; i < a.size(); ++i) {
    double d = std::sqrt(a(i)) - std::sqrt(b(i));
    acc.add(d * d);
  }
  return std::sqrt(std::max(0.0, acc.value()));
}

}  // namespace mdim
