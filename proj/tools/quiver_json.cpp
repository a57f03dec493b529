#include "quiver_json.hpp"

namespace iqc::cli {

nlohmann::ordered_json seed_to_json(const Seed& seed) {
  nlohmann::ordered_json out;
  out["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < seed.size(); ++v)
    out["vertices"].push_back({{"id", v}, {"label", seed.name(v)}, {"frozen", seed.frozen(v)}});
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < seed.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < seed.size(); ++j) row.push_back(seed.w2(i, j));
    rows.push_back(std::move(row));
  }
  out["weight2"] = std::move(rows);
  return out;
}

Seed seed_from_json(const nlohmann::json& j) {
  const auto& vertices = j.at("vertices");
  const std::size_t size = vertices.size();
  std::vector<std::string> names(size);
  std::vector<bool> frozen(size);
  std::vector<bool> seen(size, false);
  for (const auto& v : vertices) {
    const auto id = v.at("id").get<std::size_t>();
    if (id >= size || seen[id]) throw InvalidSeed("vertex ids must be 0.." + std::to_string(size - 1));
    seen[id] = true;
    names[id] = v.at("label").get<std::string>();
    frozen[id] = v.at("frozen").get<bool>();
  }
  const auto& rows = j.at("weight2");
  if (rows.size() != size) throw InvalidSeed("weight2 must be a square matrix");
  std::vector<int> weight2;
  for (const auto& row : rows) {
    if (row.size() != size) throw InvalidSeed("weight2 must be a square matrix");
    for (const auto& w : row) weight2.push_back(w.get<int>());
  }
  return Seed(std::move(names), std::move(frozen), std::move(weight2));
}

}  // namespace iqc::cli
