#include "mdim/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace mdim {

namespace {

void validate_probs(const Eigen::Ref<const Eigen::VectorXd>& p,
                    Eigen::VectorXd& out) {
  if (p.size() < 2)
    throw std::invalid_argument("pmf needs at least 2 entries");
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double v = p(i);
    if (!(v >= -1e-15) || v > 1.0 + 1e-12)
      throw std::invalid_argument("pmf entry outside [0,1]");
  }
  double sum = p.sum();
  if (std::abs(sum - 1.0) > kPmfSumTol)
    throw std::invalid_argument("pmf entries do not sum to 1");
  out = p.cwiseMax(0.0);
  if (sum != 1.0) out /= out.sum();
}

}  // namespace

Pmf::Pmf(Eigen::VectorXd p) {
  if (p.size() > kMaxAlphabet)
    throw std::invalid_argument("alphabet size capped at 256");
  validate_probs(p, p_);
}

Pmf::Pmf(std::initializer_list<double> p)
    : Pmf(Eigen::Map<const Eigen::VectorXd>(p.begin(),
                                            static_cast<Eigen::Index>(p.size()))
              .eval()) {}

Pmf Pmf::uniform(int k) {
  return Pmf(Eigen::VectorXd::Constant(k, 1.0 / k));
}

Pmf Pmf::point_mass(int k, int a) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(k);
  p(a) = 1.0;
  return Pmf(std::move(p));
}

JointPmf::JointPmf(Eigen::MatrixXd p) {
  if (p.rows() != p.cols())
    throw std::invalid_argument("joint pmf must be square");
  if (p.rows() > kMaxAlphabet)
    throw std::invalid_argument("alphabet size capped at 256");
  Eigen::VectorXd flat =
      Eigen::Map<const Eigen::VectorXd>(p.data(), p.size()).eval();
  Eigen::VectorXd checked;
  validate_probs(flat, checked);
  p_ = Eigen::Map<const Eigen::MatrixXd>(checked.data(), p.rows(), p.cols());
}

JointPmf JointPmf::uniform(int k) {
  return JointPmf(Eigen::MatrixXd::Constant(k, k, 1.0 / (double(k) * k)));
}

Pmf JointPmf::flatten() const {
  int k = alphabet();
  Eigen::VectorXd flat(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) flat(a * k + b) = p_(a, b);
  return Pmf(std::move(flat));
}

std::pair<Pmf, Pmf> marginals(const JointPmf& j) {
  return {Pmf(j.probs().rowwise().sum()), Pmf(j.probs().colwise().sum())};
}

JointPmf product(const Pmf& p1, const Pmf& p2) {
  if (p1.size() != p2.size())
    throw std::invalid_argument("product: alphabet sizes differ");
  return JointPmf(p1.probs() * p2.probs().transpose());
}

JointPmf rho_joint(double rho) {
  if (!(rho >= -1.0 && rho <= 1.0))
    throw std::out_of_range("rho must lie in [-1,1]");
  double d = (1.0 + rho) / 4.0;
  double o = (1.0 - rho) / 4.0;
  Eigen::MatrixXd p(2, 2);
  p << d, o, o, d;
  return JointPmf(std::move(p));
}

// ---------------------------------------------------------------------------
// RhoSchedule

RhoSchedule::RhoSchedule(Family f, double a, double b, std::vector<double> head)
    : family_(f), a_(a), b_(b), head_(std::move(head)) {}

RhoSchedule RhoSchedule::constant(double rho) {
  if (!(std::abs(rho) <= 1.0)) throw std::out_of_range("rho in [-1,1]");
  return {Family::Const, rho, 0.0, {}};
}

RhoSchedule RhoSchedule::inverse_sqrt(double offset) {
  if (!(offset >= 1.0)) throw std::out_of_range("inverse_sqrt offset >= 1");
  return {Family::InverseSqrt, offset, 0.0, {}};
}

RhoSchedule RhoSchedule::harmonic(double offset) {
  if (!(offset >= 1.0)) throw std::out_of_range("harmonic offset >= 1");
  return {Family::Harmonic, offset, 0.0, {}};
}

RhoSchedule RhoSchedule::geometric(double rho0, double ratio) {
  if (!(std::abs(rho0) <= 1.0)) throw std::out_of_range("rho0 in [-1,1]");
  if (!(std::abs(ratio) < 1.0)) throw std::out_of_range("|ratio| < 1");
  return {Family::Geometric, rho0, ratio, {}};
}

RhoSchedule RhoSchedule::explicit_list(std::vector<double> head, double tail) {
  for (double r : head)
    if (!(std::abs(r) <= 1.0)) throw std::out_of_range("rho in [-1,1]");
  if (!(std::abs(tail) <= 1.0)) throw std::out_of_range("tail rho in [-1,1]");
  return {Family::Explicit, 0.0, tail, std::move(head)};
}

double RhoSchedule::at(std::size_t n) const {
  switch (family_) {
    case Family::Const: return a_;
    case Family::InverseSqrt: return 1.0 / std::sqrt(double(n) + a_);
    case Family::Harmonic: return 1.0 / (double(n) + a_);
    case Family::Geometric: return a_ * std::pow(b_, double(n));
    case Family::Explicit:
      return n < head_.size() ? head_[n] : b_;
  }
  return 0.0;
}

double RhoSchedule::limit() const {
  switch (family_) {
    case Family::Const: return a_;
    case Family::InverseSqrt:
    case Family::Harmonic: return 0.0;
    case Family::Geometric: return 0.0;
    case Family::Explicit: return b_;
  }
  return 0.0;
}

double RhoSchedule::sup_abs() const {
  switch (family_) {
    case Family::Const: return std::abs(a_);
    case Family::InverseSqrt: return 1.0 / std::sqrt(a_);
    case Family::Harmonic: return 1.0 / a_;
    case Family::Geometric: return std::abs(a_);
    case Family::Explicit: {
      double m = std::abs(b_);
      for (double r : head_) m = std::max(m, std::abs(r));
      return m;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// MeasureSeq

MeasureSeq MeasureSeq::constant(Pmf p) {
  MeasureSeq m;
  m.pair_ = false;
  m.k_ = p.size();
  m.v_ = ConstantV{std::move(p), std::nullopt};
  return m;
}

MeasureSeq MeasureSeq::constant(JointPmf j) {
  MeasureSeq m;
  m.pair_ = true;
  m.k_ = j.alphabet();
  m.v_ = ConstantV{std::nullopt, std::move(j)};
  return m;
}

MeasureSeq MeasureSeq::rho_family(RhoSchedule s) {
  MeasureSeq m;
  m.pair_ = true;
  m.k_ = 2;
  m.v_ = RhoV{std::move(s)};
  return m;
}

MeasureSeq MeasureSeq::tabulated(std::vector<Pmf> head, Pmf tail) {
  MeasureSeq m;
  m.pair_ = false;
  m.k_ = tail.size();
  TabV t;
  for (auto& p : head) {
    if (p.size() != m.k_)
      throw std::invalid_argument("tabulated: alphabet sizes differ");
    t.head_flat.push_back(std::move(p));
  }
  t.tail_p = std::move(tail);
  m.v_ = std::move(t);
  return m;
}

MeasureSeq MeasureSeq::tabulated(std::vector<JointPmf> head, JointPmf tail) {
  MeasureSeq m;
  m.pair_ = true;
  m.k_ = tail.alphabet();
  TabV t;
  for (auto& j : head) {
    if (j.alphabet() != m.k_)
      throw std::invalid_argument("tabulated: alphabet sizes differ");
    t.head_flat.push_back(j.flatten());
  }
  t.tail_j = std::move(tail);
  m.v_ = std::move(t);
  return m;
}

Pmf MeasureSeq::flat_at(std::size_t n) const {
  if (const auto* c = std::get_if<ConstantV>(&v_))
    return pair_ ? c->j->flatten() : *c->p;
  if (const auto* r = std::get_if<RhoV>(&v_))
    return rho_joint(r->sched.at(n)).flatten();
  const auto& t = std::get<TabV>(v_);
  if (n < t.head_flat.size()) return t.head_flat[n];
  return pair_ ? t.tail_j->flatten() : *t.tail_p;
}

JointPmf MeasureSeq::joint_at(std::size_t n) const {
  if (!pair_) throw std::logic_error("joint_at on a plain-alphabet sequence");
  if (const auto* c = std::get_if<ConstantV>(&v_)) return *c->j;
  if (const auto* r = std::get_if<RhoV>(&v_))
    return rho_joint(r->sched.at(n));
  const auto& t = std::get<TabV>(v_);
  if (n >= t.head_flat.size()) return *t.tail_j;
  const Eigen::VectorXd& f = t.head_flat[n].probs();
  Eigen::MatrixXd p(k_, k_);
  for (int a = 0; a < k_; ++a)
    for (int b = 0; b < k_; ++b) p(a, b) = f(a * k_ + b);
  return JointPmf(std::move(p));
}

std::variant<Pmf, JointPmf> MeasureSeq::limit() const {
  if (const auto* c = std::get_if<ConstantV>(&v_)) {
    if (pair_) return *c->j;
    return *c->p;
  }
  if (const auto* r = std::get_if<RhoV>(&v_))
    return rho_joint(r->sched.limit());
  const auto& t = std::get<TabV>(v_);
  if (pair_) return *t.tail_j;
  return *t.tail_p;
}

const RhoSchedule* MeasureSeq::rho() const {
  if (const auto* r = std::get_if<RhoV>(&v_)) return &r->sched;
  return nullptr;
}

std::size_t MeasureSeq::stationary_from() const {
  if (std::holds_alternative<ConstantV>(v_)) return 0;
  if (const auto* r = std::get_if<RhoV>(&v_))
    return r->sched.family() == RhoSchedule::Family::Const
               ? 0
               : std::size_t(-1);
  return std::get<TabV>(v_).head_flat.size();
}

CylinderProb MeasureSeq::cylinder_prob(const Word& w) const {
  check_symbols(w, symbols());
  double prob = 1.0;
  double log2p = 0.0;
  double comp = 0.0;  // Kahan compensation for the log accumulation
  for (std::size_t i = 0; i < w.size(); ++i) {
    double p = flat_at(i)(w[i]);
    prob *= p;
    double term = std::log2(p) - comp;
    double next = log2p + term;
    comp = (next - log2p) - term;
    log2p = next;
  }
  return {prob, log2p};
}

}  // namespace mdim
