#ifndef MDIM_MEASURES_HPP
#define MDIM_MEASURES_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mdim/word.hpp"

namespace mdim {

constexpr double kPmfSumTol = 1e-9;

/// Probability mass function on a finite alphabet {0,...,k-1}.
/// Immutable after construction; the constructor renormalizes when the sum
/// deviates from 1 by at most 1e-9 and rejects otherwise.
class Pmf {
 public:
  explicit Pmf(Eigen::VectorXd p);
  Pmf(std::initializer_list<double> p);

  static Pmf uniform(int k);
  static Pmf point_mass(int k, int a);

  int size() const { return static_cast<int>(p_.size()); }
  double operator()(int a) const { return p_(a); }
  const Eigen::VectorXd& probs() const { return p_; }

  double min_prob() const { return p_.minCoeff(); }
  bool strongly_positive(double delta) const { return min_prob() >= delta; }

  bool operator==(const Pmf& o) const { return p_ == o.p_; }

 private:
  Eigen::VectorXd p_;
};

/// Probability mass function on the pair alphabet Sigma x Sigma, stored as a
/// k x k matrix with entry (a,b) = probability of the symbol pair (a,b).
class JointPmf {
 public:
  explicit JointPmf(Eigen::MatrixXd p);

  static JointPmf uniform(int k);

  int alphabet() const { return static_cast<int>(p_.rows()); }
  double operator()(int a, int b) const { return p_(a, b); }
  const Eigen::MatrixXd& probs() const { return p_; }

  /// Flattened view as a Pmf over k*k symbols, index a*k + b.
  Pmf flatten() const;

  double min_prob() const { return p_.minCoeff(); }
  bool strongly_positive(double delta) const { return min_prob() >= delta; }

  bool operator==(const JointPmf& o) const { return p_ == o.p_; }

 private:
  Eigen::MatrixXd p_;
};

/// First and second marginals (row sums, column sums).
std::pair<Pmf, Pmf> marginals(const JointPmf& j);

/// Product coupling: entry (a,b) = p1(a) * p2(b).
JointPmf product(const Pmf& p1, const Pmf& p2);

/// The rho-correlated pair measure on {0,1}x{0,1}: diagonal entries
/// (1+rho)/4, off-diagonal (1-rho)/4. Both marginals are uniform.
JointPmf rho_joint(double rho);

/// Correlation schedule rho_0, rho_1, ... with every rho_n in [-1,1] and a
/// well-defined limit.
class RhoSchedule {
 public:
  enum class Family { Const, InverseSqrt, Harmonic, Geometric, Explicit };

  static RhoSchedule constant(double rho);
  static RhoSchedule inverse_sqrt(double offset);  // rho_n = 1/sqrt(n+c), c >= 1
  static RhoSchedule harmonic(double offset);      // rho_n = 1/(n+c), c >= 1
  static RhoSchedule geometric(double rho0, double ratio);  // rho_n = rho0*r^n
  static RhoSchedule explicit_list(std::vector<double> head, double tail);

  double at(std::size_t n) const;
  double limit() const;
  Family family() const { return family_; }

  double const_rho() const { return a_; }
  double offset() const { return a_; }
  double rho0() const { return a_; }
  double ratio() const { return b_; }
  const std::vector<double>& head() const { return head_; }
  double tail() const { return b_; }

  /// sup over n of |rho_n|.
  double sup_abs() const;

 private:
  RhoSchedule(Family f, double a, double b, std::vector<double> head);
  Family family_;
  double a_ = 0.0;  // const rho / offset / rho0
  double b_ = 0.0;  // ratio / explicit tail
  std::vector<double> head_;
};

struct CylinderProb {
  double prob;      // direct product, may underflow to 0 for long words
  double log2_prob; // always meaningful
};

/// A sequence of per-position pmfs defining a longitudinal product measure.
/// Three closed variants, each with a well-defined limit. Positions may range
/// over the base alphabet (plain sequences) or the pair alphabet Sigma x Sigma
/// (coupled sequences); pair pmfs are handled through their flattened form.
class MeasureSeq {
 public:
  static MeasureSeq constant(Pmf p);
  static MeasureSeq constant(JointPmf j);
  static MeasureSeq rho_family(RhoSchedule s);
  static MeasureSeq tabulated(std::vector<Pmf> head, Pmf tail);
  static MeasureSeq tabulated(std::vector<JointPmf> head, JointPmf tail);

  bool pair_alphabet() const { return pair_; }
  int base_alphabet() const { return k_; }
  /// Number of flat symbols per position: k, or k*k for pair alphabets.
  int symbols() const { return pair_ ? k_ * k_ : k_; }

  /// The per-position pmf, flattened for pair alphabets.
  Pmf flat_at(std::size_t n) const;
  JointPmf joint_at(std::size_t n) const;  // requires pair_alphabet()

  std::variant<Pmf, JointPmf> limit() const;

  /// Non-null for the RhoFamily variant.
  const RhoSchedule* rho() const;

  /// Positions at or beyond this index all share the same pmf.
  std::size_t stationary_from() const;

  CylinderProb cylinder_prob(const Word& w) const;

 private:
  MeasureSeq() = default;
  bool pair_ = false;
  int k_ = 2;
  struct ConstantV { std::optional<Pmf> p; std::optional<JointPmf> j; };
  struct RhoV { RhoSchedule sched; };
  struct TabV {
    std::vector<Pmf> head_flat;
    std::optional<Pmf> tail_p;
    std::optional<JointPmf> tail_j;
  };
  std::variant<ConstantV, RhoV, TabV> v_;
};

}  // namespace mdim

#endif
