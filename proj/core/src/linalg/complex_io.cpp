#include "binring/linalg/complex_io.hpp"

#include "binring/error.hpp"

namespace binring {

using nlohmann::json;

json to_json(const IntMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back(json::array({r, c, v.get_str()}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const json& j) {
  try {
    IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw Error("matrix entry must be [row, col, \"value\"]");
      Integer v;
      const auto& raw = e[2];
      if (raw.is_string()) {
        if (v.set_str(raw.get<std::string>(), 10) != 0) throw Error("bad integer literal " + raw.dump());
      } else {
        v = Integer(raw.get<long>());
      }
      m.add_to(e[0].get<std::size_t>(), e[1].get<std::size_t>(), v);
    }
    return m;
  } catch (const json::exception& ex) {
    throw Error(std::string("matrix JSON: ") + ex.what());
  }
}

json to_json(const CochainComplex& c) {
  json diffs = json::array();
  for (int n = c.lo(); n < c.hi(); ++n) diffs.push_back(to_json(c.differential(n)));
  return {{"lo", c.lo()}, {"hi", c.hi()}, {"ranks", c.ranks()}, {"differentials", diffs}};
}

CochainComplex complex_from_json(const json& j) {
  try {
    const int lo = j.value("lo", 0);
    auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    if (j.contains("hi") && j.at("hi").get<int>() != lo + static_cast<int>(ranks.size()) - 1)
      throw Error("complex JSON: hi inconsistent with lo and ranks");
    std::vector<IntMatrix> diffs;
    for (const auto& d : j.value("differentials", json::array())) diffs.push_back(matrix_from_json(d));
    return CochainComplex(lo, std::move(ranks), std::move(diffs));
  } catch (const json::exception& ex) {
    throw Error(std::string("complex JSON: ") + ex.what());
  }
}

json to_json(const CohomologyGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.get_str());
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"group", g.to_string()}};
}

}  // namespace binring
