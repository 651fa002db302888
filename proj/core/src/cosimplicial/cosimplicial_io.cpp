#include "binring/cosimplicial/cosimplicial_io.hpp"

#include "binring/error.hpp"
#include "binring/linalg/complex_io.hpp"

namespace binring {

namespace {

nlohmann::json levels_to_json(const std::vector<std::vector<IntMatrix>>& levels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& level : levels) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& m : level) row.push_back(to_json(m));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<IntMatrix>> levels_from_json(const nlohmann::json& j) {
  std::vector<std::vector<IntMatrix>> out;
  for (const auto& level : j) {
    auto& row = out.emplace_back();
    for (const auto& m : level) row.push_back(matrix_from_json(m));
  }
  return out;
}

void expect_kind(const nlohmann::json& j, const char* kind) {
  if (j.contains("kind") && j.at("kind") != kind)
    throw Error(std::string("expected a ") + kind + " object, got kind " + j.at("kind").dump());
}

}  // namespace

nlohmann::json to_json(const CosimplicialAbGroup& a) {
  return {{"kind", "cosimplicial"},
          {"ranks", a.ranks()},
          {"cofaces", levels_to_json(a.cofaces())},
          {"codegeneracies", levels_to_json(a.codegeneracies())}};
}

nlohmann::json to_json(const SimplicialAbGroup& a) {
  return {{"kind", "simplicial"},
          {"ranks", a.ranks()},
          {"faces", levels_to_json(a.faces())},
          {"degeneracies", levels_to_json(a.degeneracies())}};
}

CosimplicialAbGroup cosimplicial_from_json(const nlohmann::json& j) {
  expect_kind(j, "cosimplicial");
  try {
    return CosimplicialAbGroup(j.at("ranks").get<std::vector<std::size_t>>(), levels_from_json(j.at("cofaces")),
                               levels_from_json(j.at("codegeneracies")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("cosimplicial JSON: ") + e.what());
  }
}

SimplicialAbGroup simplicial_from_json(const nlohmann::json& j) {
  expect_kind(j, "simplicial");
  try {
    return SimplicialAbGroup(j.at("ranks").get<std::vector<std::size_t>>(), levels_from_json(j.at("faces")),
                             levels_from_json(j.at("degeneracies")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("simplicial JSON: ") + e.what());
  }
}

}  // namespace binring
