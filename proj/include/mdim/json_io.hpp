#ifndef MDIM_JSON_IO_HPP
#define MDIM_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include "mdim/measures.hpp"

namespace mdim {

// Measure description schema used by CLI config files:
//   {"kind":"pmf",  "k":int, "p":[...]}
//   {"kind":"joint","k":int, "p":[[...],...]}
//   {"kind":"rho",  "rho":{"family":"const","rho":x}
//                        | {"family":"inv_sqrt","offset":c}
//                        | {"family":"harmonic","offset":c}
//                        | {"family":"geometric","rho0":x,"ratio":r}
//                        | {"family":"explicit","head":[...],"tail":x}}
//   {"kind":"tabulated","k":int,"pair":bool,"head":[...],"tail":...}
// Unknown fields are rejected.

nlohmann::json pmf_to_json(const Pmf& p);
Pmf pmf_from_json(const nlohmann::json& j);

nlohmann::json joint_to_json(const JointPmf& p);
JointPmf joint_from_json(const nlohmann::json& j);

nlohmann::json rho_schedule_to_json(const RhoSchedule& s);
RhoSchedule rho_schedule_from_json(const nlohmann::json& j);

nlohmann::json measure_seq_to_json(const MeasureSeq& m);
MeasureSeq measure_seq_from_json(const nlohmann::json& j);

}  // namespace mdim

#endif
