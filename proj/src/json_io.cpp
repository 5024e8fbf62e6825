#include "mdim/json_io.hpp"

#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace mdim {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const char* ctx) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument(std::string(ctx) + ": unknown field '" +
                                  it.key() + "'");
}

Eigen::VectorXd vec_from_json(const json& a) {
  Eigen::VectorXd v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v(i) = a[i].get<double>();
  return v;
}

}  // namespace

json pmf_to_json(const Pmf& p) {
  json a = json::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(p(i));
  return json{{"kind", "pmf"}, {"k", p.size()}, {"p", a}};
}

Pmf pmf_from_json(const json& j) {
  reject_unknown(j, {"kind", "k", "p"}, "pmf");
  if (j.value("kind", "pmf") != "pmf")
    throw std::invalid_argument("pmf: wrong kind");
  Pmf p{vec_from_json(j.at("p"))};
  if (j.contains("k") && j.at("k").get<int>() != p.size())
    throw std::invalid_argument("pmf: k does not match p length");
  return p;
}

json joint_to_json(const JointPmf& p) {
  int k = p.alphabet();
  json rows = json::array();
  for (int a = 0; a < k; ++a) {
    json row = json::array();
    for (int b = 0; b < k; ++b) row.push_back(p(a, b));
    rows.push_back(row);
  }
  return json{{"kind", "joint"}, {"k", k}, {"p", rows}};
}

JointPmf joint_from_json(const json& j) {
  reject_unknown(j, {"kind", "k", "p"}, "joint");
  if (j.value("kind", "joint") != "joint")
    throw std::invalid_argument("joint: wrong kind");
  const json& rows = j.at("p");
  int k = static_cast<int>(rows.size());
  Eigen::MatrixXd m(k, k);
  for (int a = 0; a < k; ++a) {
    if (static_cast<int>(rows[a].size()) != k)
      throw std::invalid_argument("joint: matrix not square");
    for (int b = 0; b < k; ++b) m(a, b) = rows[a][b].get<double>();
  }
  if (j.contains("k") && j.at("k").get<int>() != k)
    throw std::invalid_argument("joint: k does not match p size");
  return JointPmf(std::move(m));
}

json rho_schedule_to_json(const RhoSchedule& s) {
  using F = RhoSchedule::Family;
  switch (s.family()) {
    case F::Const:
      return json{{"family", "const"}, {"rho", s.const_rho()}};
    case F::InverseSqrt:
      return json{{"family", "inv_sqrt"}, {"offset", s.offset()}};
    case F::Harmonic:
      return json{{"family", "harmonic"}, {"offset", s.offset()}};
    case F::Geometric:
      return json{{"family", "geometric"}, {"rho0", s.rho0()},
                  {"ratio", s.ratio()}};
    case F::Explicit:
      return json{{"family", "explicit"}, {"head", s.head()},
                  {"tail", s.tail()}};
  }
  throw std::logic_error("unreachable");
}

RhoSchedule rho_schedule_from_json(const json& j) {
  std::string fam = j.at("family").get<std::string>();
  if (fam == "const") {
    reject_unknown(j, {"family", "rho"}, "rho schedule");
    return RhoSchedule::constant(j.at("rho").get<double>());
  }
  if (fam == "inv_sqrt") {
    reject_unknown(j, {"family", "offset"}, "rho schedule");
    return RhoSchedule::inverse_sqrt(j.at("offset").get<double>());
  }
  if (fam == "harmonic") {
    reject_unknown(j, {"family", "offset"}, "rho schedule");
    return RhoSchedule::harmonic(j.at("offset").get<double>());
  }
  if (fam == "geometric") {
    reject_unknown(j, {"family", "rho0", "ratio"}, "rho schedule");
    return RhoSchedule::geometric(j.at("rho0").get<double>(),
                                  j.at("ratio").get<double>());
  }
  if (fam == "explicit") {
    reject_unknown(j, {"family", "head", "tail"}, "rho schedule");
    return RhoSchedule::explicit_list(
        j.at("head").get<std::vector<double>>(), j.at("tail").get<double>());
  }
  throw std::invalid_argument("rho schedule: unknown family '" + fam + "'");
}

json measure_seq_to_json(const MeasureSeq& m) {
  if (const RhoSchedule* rs = m.rho())
    return json{{"kind", "rho"}, {"rho", rho_schedule_to_json(*rs)}};
  if (m.stationary_from() == 0) {
    auto lim = m.limit();
    if (m.pair_alphabet()) return joint_to_json(std::get<JointPmf>(lim));
    return pmf_to_json(std::get<Pmf>(lim));
  }
  json head = json::array();
  for (std::size_t i = 0; i < m.stationary_from(); ++i) {
    json a = json::array();
    Pmf f = m.flat_at(i);
    for (int s = 0; s < f.size(); ++s) a.push_back(f(s));
    head.push_back(a);
  }
  auto lim = m.limit();
  json tail = m.pair_alphabet() ? joint_to_json(std::get<JointPmf>(lim))
                                : pmf_to_json(std::get<Pmf>(lim));
  return json{{"kind", "tabulated"},
              {"k", m.base_alphabet()},
              {"pair", m.pair_alphabet()},
              {"head", head},
              {"tail", tail}};
}

MeasureSeq measure_seq_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "pmf") return MeasureSeq::constant(pmf_from_json(j));
  if (kind == "joint") return MeasureSeq::constant(joint_from_json(j));
  if (kind == "rho") {
    reject_unknown(j, {"kind", "rho"}, "measure");
    return MeasureSeq::rho_family(rho_schedule_from_json(j.at("rho")));
  }
  if (kind == "tabulated") {
    reject_unknown(j, {"kind", "k", "pair", "head", "tail"}, "measure");
    int k = j.at("k").get<int>();
    bool pair = j.value("pair", false);
    const json& head = j.at("head");
    if (pair) {
      std::vector<JointPmf> hs;
      for (const json& row : head) {
        Eigen::VectorXd f = vec_from_json(row);
        if (f.size() != k * k)
          throw std::invalid_argument("tabulated: head entry size mismatch");
        Eigen::MatrixXd m(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) m(a, b) = f(a * k + b);
        hs.emplace_back(std::move(m));
      }
      return MeasureSeq::tabulated(std::move(hs), joint_from_json(j.at("tail")));
    }
    std::vector<Pmf> hs;
    for (const json& row : head) hs.emplace_back(vec_from_json(row));
    return MeasureSeq::tabulated(std::move(hs), pmf_from_json(j.at("tail")));
  }
  throw std::invalid_argument("measure: unknown kind '" + kind + "'");
}

}  // namespace mdim
