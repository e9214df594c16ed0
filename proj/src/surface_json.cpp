#include <string>

#include "hyperlab/surface.hpp"
#include "json.hpp"

namespace hyperlab::surface {

namespace {

std::string kind_name(SlotKind k) {
  switch (k) {
    case SlotKind::Interior: return "glued";
    case SlotKind::Boundary: return "boundary";
    case SlotKind::Puncture: return "puncture";
  }
  return "boundary";
}

SlotKind kind_from_name(const std::string& s) {
  if (s == "glued") return SlotKind::Interior;
  if (s == "boundary") return SlotKind::Boundary;
  if (s == "puncture") return SlotKind::Puncture;
  throw validation_error("unknown slot kind: " + s);
}

}  // namespace

std::string to_json(const FNPoint& p) {
  nlohmann::json j;
  auto pants = nlohmann::json::array();
  for (const auto& pa : p.decomp->pants) {
    auto slots = nlohmann::json::array();
    for (const auto& s : pa.slots) slots.push_back(kind_name(s.kind));
    pants.push_back(slots);
  }
  auto gluings = nlohmann::json::array();
  for (const auto& e : p.decomp->edges)
    gluings.push_back({{e.p, e.slot_p}, {e.q, e.slot_q}});
  j["pants"] = pants;
  j["gluings"] = gluings;
  j["lengths"] = p.lengths;
  j["twists"] = p.twists;
  return j.dump(2) + "\n";
}

FNPoint fn_point_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    DecompositionSpec spec;
    for (const auto& pa : j.at("pants")) {
      if (pa.size() != 3) throw validation_error("each pants needs 3 slots");
      spec.pants.push_back({kind_from_name(pa.at(0)), kind_from_name(pa.at(1)),
                            kind_from_name(pa.at(2))});
    }
    for (const auto& g : j.at("gluings")) {
      spec.gluings.push_back({{g.at(0).at(0), g.at(0).at(1)},
                              {g.at(1).at(0), g.at(1).at(1)}});
    }
    auto decomp = build_decomposition(spec);
    std::vector<double> lengths = j.at("lengths").get<std::vector<double>>();
    std::vector<double> twists = j.at("twists").get<std::vector<double>>();
    return make_fn_point(std::move(decomp), std::move(lengths), std::move(twists));
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("bad surface document: ") + e.what());
  }
}

}  // namespace hyperlab::surface
