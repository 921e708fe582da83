#pragma once

// JSON-lines serialization. Integer fields cross as decimal strings so no
// consumer ever loses precision parsing them as doubles.

#include <json.hpp>

#include "diopell/diophantine.hpp"
#include "diopell/ljunggren.hpp"
#include "diopell/lucas.hpp"
#include "diopell/pell.hpp"

namespace diopell::json_io {

using json = nlohmann::ordered_json;

json to_json(const pell::PellFundamental& f);
json to_json(const pell::PellPoint& p);
json to_json(const lucas::LemmaViolation& v);
json to_json(const lucas::PrimitiveDivisorSet& s);
json to_json(const ljunggren::LjunggrenSolution& s);
json to_json(const diophantine::SolutionCertificate& c);
json to_json(const diophantine::Obstruction& o);
json to_json(const diophantine::VerificationReport& r);

diophantine::SolutionCertificate certificate_from_json(const json& j);
diophantine::VerificationReport report_from_json(const json& j);

}  // namespace diopell::json_io
