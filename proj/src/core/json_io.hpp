#pragma once

#include <string>

#include "core/develop.hpp"
#include "core/holonomy.hpp"
#include "core/patterns.hpp"
#include "core/solver.hpp"

#include <nlohmann/json_fwd.hpp>

namespace cpk {

using Json = nlohmann::json;

Json pattern_to_json(const SidePairing& p);
SidePairing pattern_from_json(const Json& j);

// Parameter file: {"pattern": <object or file path>, "values": {"x1": v, ...},
// "dependent": ["xa","xb","xc"] (optional)}.  File references are resolved
// against base_dir.
ParamPoint params_from_json(const Json& j, const std::string& base_dir = ".");
Json params_to_json(const ParamPoint& p);

ParamPoint load_params_file(const std::string& path);

Json verify_report_to_json(const VerifyReport& rep);
Json solve_result_to_json(const SolveResult& res);
Json rigidity_report_to_json(const RigidityReport& rep);
Json scene_to_json(const PackingScene& scene);
Json admissibility_to_json(const AdmReport& rep);

std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path, const std::string& content);

} // namespace cpk
