#include "cartanpath/json_io.hpp"

namespace cartanpath {

namespace {

Rat rat_field(const Json& j, const char* context) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(context) + ": rationals must be strings");
  return Rat::parse(j.get<std::string>());
}

}  // namespace

Json sc_to_json(const StructureConstants& sc) {
  Json brackets = Json::array();
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : pairs) {
    const Vec3& v = sc.basis_bracket(i, j);
    if (is_zero(v)) continue;
    Json entry;
    entry["i"] = i + 1;
    entry["j"] = j + 1;
    entry["coeffs"] = Json::array({v[0].str(), v[1].str(), v[2].str()});
    brackets.push_back(std::move(entry));
  }
  Json out;
  out["dim"] = 3;
  out["brackets"] = std::move(brackets);
  return out;
}

StructureConstants sc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || j["dim"] != 3 || !j.contains("brackets") ||
      !j["brackets"].is_array())
    throw std::invalid_argument("structure constants: expected {\"dim\":3, \"brackets\":[...]}");
  std::array<Vec3, 3> b{};
  for (const auto& entry : j["brackets"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("coeffs"))
      throw std::invalid_argument("structure constants: malformed bracket entry");
    int i = entry["i"].get<int>(), jj = entry["j"].get<int>();
    if (i < 1 || jj < 1 || i > 3 || jj > 3 || i >= jj)
      throw std::invalid_argument("structure constants: bracket indices must satisfy 1 <= i < j <= 3");
    const auto& cs = entry["coeffs"];
    if (!cs.is_array() || cs.size() != 3)
      throw std::invalid_argument("structure constants: coeffs must be an array of 3 strings");
    Vec3 v{rat_field(cs[0], "structure constants"), rat_field(cs[1], "structure constants"),
           rat_field(cs[2], "structure constants")};
    int slot = (i == 1 && jj == 2) ? 0 : (i == 1 ? 1 : 2);
    b[static_cast<std::size_t>(slot)] = v;
  }
  return StructureConstants(b[0], b[1], b[2]);
}

Json ady_to_json(const AdYMatrix& A) {
  Json rows = Json::array();
  rows.push_back(Json::array({A.a11().str(), A.a12().str()}));
  rows.push_back(Json::array({A.a21().str(), A.a22().str()}));
  rows.push_back(Json::array({A.a31().str(), A.a32().str()}));
  Json out;
  out["ad_Y"] = std::move(rows);
  return out;
}

AdYMatrix ady_from_json(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("ad_Y"))
      throw std::invalid_argument("ad_Y: expected {\"ad_Y\": [[..],[..],[..]]}");
    rows = &j["ad_Y"];
  }
  if (!rows->is_array() || rows->size() != 3)
    throw std::invalid_argument("ad_Y: expected 3 rows");
  std::array<Rat, 6> e;
  for (int r = 0; r < 3; ++r) {
    const auto& row = (*rows)[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 2)
      throw std::invalid_argument("ad_Y: each row must hold 2 rational strings");
    e[static_cast<std::size_t>(2 * r)] = rat_field(row[0], "ad_Y");
    e[static_cast<std::size_t>(2 * r + 1)] = rat_field(row[1], "ad_Y");
  }
  return AdYMatrix::from_rows(e);  // throws ConstraintError on invalid entries
}

Json pair_to_json(const LinePair& p) {
  auto vec = [](const Sl2Vector& v) {
    return Json::array({v.h.str(), v.e.str(), v.f.str()});
  };
  Json out;
  out["D1"] = vec(p.d1());
  out["D2"] = vec(p.d2());
  return out;
}

LinePair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("D1") || !j.contains("D2"))
    throw std::invalid_argument("line pair: expected {\"D1\": [...], \"D2\": [...]}");
  auto vec = [](const Json& a, const char* name) {
    if (!a.is_array() || a.size() != 3)
      throw std::invalid_argument(std::string("line pair: ") + name +
                                  " must be 3 rational strings");
    return Sl2Vector{rat_field(a[0], name), rat_field(a[1], name), rat_field(a[2], name)};
  };
  return LinePair(vec(j["D1"], "D1"), vec(j["D2"], "D2"));
}

}  // namespace cartanpath
