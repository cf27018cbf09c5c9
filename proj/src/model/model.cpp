#include "model/model.hpp"

#include <algorithm>

#include "json.hpp"

namespace tsl {

bool PathV::distinct_addrs() const {
  std::vector<AddrV> s = addrs;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

AddrV ArrayV::read(const Nat& l) const {
  AddrV out{0};
  for (const auto& [start, v] : runs) {
    if (start > l) break;
    out = v;
  }
  return out;
}

ArrayV ArrayV::write(const Nat& l, AddrV a) const {
  AddrV after = read(l + 1);
  ArrayV out;
  for (const auto& r : runs)
    if (r.first < l) out.runs.push_back(r);
  out.runs.emplace_back(l, a);
  out.runs.emplace_back(l + 1, after);
  for (const auto& r : runs)
    if (r.first > l + 1) out.runs.push_back(r);
  out.canonicalize();
  return out;
}

void ArrayV::canonicalize() {
  std::stable_sort(runs.begin(), runs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Nat, AddrV>> out;
  for (auto& r : runs) {
    if (!out.empty() && out.back().first == r.first) {
      out.back().second = r.second;  // later entry wins
      continue;
    }
    out.push_back(r);
  }
  std::vector<std::pair<Nat, AddrV>> dedup;
  for (auto& r : out) {
    AddrV prev = dedup.empty() ? AddrV{0} : dedup.back().second;
    if (r.second == prev) continue;
    dedup.push_back(r);
  }
  runs = std::move(dedup);
}

std::vector<Nat> ArrayV::boundaries() const {
  std::vector<Nat> out;
  for (const auto& r : runs) out.push_back(r.first);
  return out;
}

std::optional<Nat> ArrayV::support_max() const {
  // canonical arrays end in a null tail, so the last non-null run bounds the
  // support; its extent ends at the following run start - 1
  for (size_t i = runs.size(); i-- > 0;) {
    if (runs[i].second.i != 0) {
      if (i + 1 < runs.size()) return runs[i + 1].first - 1;
      return runs[i].first;  // unreachable for canonical maps with null tail
    }
  }
  return std::nullopt;
}

ArrayV ArrayV::from_samples(std::vector<std::pair<Nat, AddrV>> samples) {
  ArrayV out;
  out.runs = std::move(samples);
  out.canonicalize();
  return out;
}

CellV error_cell() {
  CellV c;
  c.error = true;
  return c;
}

Sort value_sort(const Value& v) {
  switch (v.index()) {
    case 0: return Sort::Addr;
    case 1: return Sort::Elem;
    case 2: return Sort::Ord;
    case 3: return Sort::Level;
    case 4: return Sort::Array;
    case 5: return Sort::Cell;
    case 6: return Sort::Mem;
    case 7: return Sort::Path;
    default: return Sort::Set;
  }
}

bool FiniteModel::has(const Var& v) const {
  if (is_builtin_const_name(v.name)) return true;
  return vals.count(v.name) > 0;
}

Value FiniteModel::get(const Var& v) const {
  if (v.name == "null") return AddrV{0};
  if (v.name == "error") return error_cell();
  if (v.name == "-inf") return OrdV{0};
  if (v.name == "+inf") return OrdV{ord_count - 1};
  auto it = vals.find(v.name);
  if (it == vals.end())
    throw EvalError("variable '" + v.name + "' has no value in the model");
  return it->second;
}

void FiniteModel::set(const Var& v, Value val) { vals[v.name] = std::move(val); }

const CellV& mem_rd(const MemV& m, AddrV a) {
  static const CellV err = error_cell();
  if (a.i == 0 || a.i >= m.cells.size()) return err;
  return m.cells[a.i];
}

MemV mem_upd(const MemV& m, AddrV a, const CellV& c) {
  // null is not a location: writing it changes nothing, so memory equality
  // coincides with pointwise rd-equality
  MemV out = m;
  if (a.i != 0 && a.i < out.cells.size()) out.cells[a.i] = c;
  return out;
}

namespace {

using Json = nlohmann::ordered_json;

Json json_of_array(const ArrayV& a) {
  Json j = Json::object();
  for (const auto& [start, v] : a.runs) j[start.str()] = v.i;
  return j;
}

Json json_of_cell(const CellV& c) {
  if (c.error) return Json("error");
  Json j = Json::object();
  j["data"] = c.data.i;
  j["key"] = c.key.i;
  j["arr"] = json_of_array(c.arr);
  j["max"] = c.max.n.str();
  return j;
}

Json json_of_value(const Value& v, uint32_t addr_count) {
  switch (v.index()) {
    case 0: return Json(std::get<AddrV>(v).i);
    case 1: return Json(std::get<ElemV>(v).i);
    case 2: return Json(std::get<OrdV>(v).i);
    case 3: return Json(std::get<LevelV>(v).n.str());
    case 4: return json_of_array(std::get<ArrayV>(v));
    case 5: return json_of_cell(std::get<CellV>(v));
    case 6: {
      Json j = Json::object();
      const MemV& m = std::get<MemV>(v);
      for (uint32_t a = 0; a < m.cells.size(); ++a)
        j[std::to_string(a)] = json_of_cell(m.cells[a]);
      return j;
    }
    case 7: {
      Json j = Json::array();
      for (AddrV a : std::get<PathV>(v).addrs) j.push_back(a.i);
      return j;
    }
    default: {
      Json j = Json::array();
      const SetV& s = std::get<SetV>(v);
      for (uint32_t a = 0; a < addr_count; ++a)
        if (s.contains(AddrV{a})) j.push_back(a);
      return j;
    }
  }
}

}  // namespace

std::string FiniteModel::dump_json() const {
  Json j;
  j["domains"] = Json::object();
  j["domains"]["addr"] = addr_count;
  j["domains"]["elem"] = elem_count;
  j["domains"]["ord"] = ord_count;
  j["domains"]["level_bound"] = level_bound.str();
  Json vars = Json::object();
  for (const auto& [name, value] : vals) {
    Json entry = Json::object();
    entry["sort"] = sort_name(value_sort(value));
    entry["value"] = json_of_value(value, addr_count);
    vars[name] = entry;
  }
  j["vars"] = vars;
  return j.dump(2);
}

}  // namespace tsl
