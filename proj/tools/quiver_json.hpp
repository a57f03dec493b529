#pragma once

#include <iqc/quiver.hpp>

#include <json.hpp>

namespace iqc::cli {

// {"vertices":[{"id":int,"label":str,"frozen":bool}],"weight2":[[int]]}
nlohmann::ordered_json seed_to_json(const Seed& seed);
Seed seed_from_json(const nlohmann::json& j);

}  // namespace iqc::cli
