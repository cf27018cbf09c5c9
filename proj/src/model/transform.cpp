#include "model/transform.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tsl {

namespace {

std::vector<Nat> level_values(const FiniteModel& model, const Cube& cube) {
  std::vector<Nat> vals;
  for (const Var& v : level_vars_of(cube)) {
    if (is_builtin_const_name(v.name)) continue;
    vals.push_back(std::get<LevelV>(model.get(v)).n);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

// Applies a level map and an array map to every value of the model.
FiniteModel map_model(const FiniteModel& model,
                      const std::function<Nat(const Nat&)>& level_map,
                      const std::function<ArrayV(const ArrayV&)>& array_map,
                      Nat new_bound) {
  FiniteModel out = model;
  out.level_bound = std::move(new_bound);
  for (auto& [name, value] : out.vals) {
    switch (value.index()) {
      case 3:
        value = LevelV{level_map(std::get<LevelV>(value).n)};
        break;
      case 4:
        value = array_map(std::get<ArrayV>(value));
        break;
      case 5: {
        CellV c = std::get<CellV>(value);
        if (!c.error) {
          c.arr = array_map(c.arr);
          c.max = LevelV{level_map(c.max.n)};
        }
        value = c;
        break;
      }
      case 6: {
        MemV m = std::get<MemV>(value);
        for (CellV& c : m.cells) {
          if (c.error) continue;
          c.arr = array_map(c.arr);
          c.max = LevelV{level_map(c.max.n)};
        }
        value = m;
        break;
      }
      default:
        break;
    }
  }
  return out;
}

}  // namespace

std::vector<Nat> gaps(const FiniteModel& model, const Cube& cube) {
  std::vector<Nat> vals = level_values(model, cube);
  std::vector<Nat> out;
  for (size_t i = 0; i + 1 < vals.size(); ++i)
    for (Nat n = vals[i] + 1; n < vals[i + 1]; ++n) out.push_back(n);
  return out;
}

FiniteModel gap_reduce(const FiniteModel& model, const Cube& cube, const Nat& n) {
  for (const Literal& l : cube)
    if (classify(l) == LitKind::level_const_eq)
      throw std::invalid_argument("gap_reduce: cube contains a level constant");
  std::vector<Nat> vals = level_values(model, cube);
  bool below = false, above = false;
  for (const Nat& v : vals) {
    if (v == n) throw std::invalid_argument("gap_reduce: " + n.str() + " is not a gap");
    below |= v < n;
    above |= v > n;
  }
  if (!below || !above)
    throw std::invalid_argument("gap_reduce: " + n.str() + " is not a gap");

  auto level_map = [n](const Nat& j) { return j < n ? j : Nat(j - 1); };
  auto array_map = [n](const ArrayV& a) {
    // delete index n: levels above shift down by one
    std::vector<Nat> cands = {Nat(0), n};
    for (const Nat& b : a.boundaries()) {
      if (b < n)
        cands.push_back(b);
      else if (b > n)
        cands.push_back(b - 1);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::pair<Nat, AddrV>> samples;
    for (const Nat& i : cands)
      samples.emplace_back(i, a.read(i < n ? i : Nat(i + 1)));
    return ArrayV::from_samples(std::move(samples));
  };
  Nat nb = model.level_bound > n ? Nat(model.level_bound - 1) : model.level_bound;
  if (nb < 1) nb = 1;
  return map_model(model, level_map, array_map, nb);
}

FiniteModel top_reduce(const FiniteModel& model, const Cube& cube) {
  std::vector<Nat> vals = level_values(model, cube);
  Nat cut = vals.empty() ? Nat(0) : Nat(vals.back() + 1);
  auto level_map = [](const Nat& j) { return j; };
  auto array_map = [&cut](const ArrayV& a) {
    std::vector<std::pair<Nat, AddrV>> samples;
    for (const auto& [start, v] : a.runs)
      if (start < cut) samples.emplace_back(start, v);
    samples.emplace_back(cut, AddrV{0});
    return ArrayV::from_samples(std::move(samples));
  };
  return map_model(model, level_map, array_map, model.level_bound);
}

FiniteModel replicate_levels(const FiniteModel& model, const Cube& cube,
                             const std::map<Var, Nat>& target) {
  std::vector<Var> lvars;
  for (const Var& v : level_vars_of(cube))
    if (!is_builtin_const_name(v.name)) lvars.push_back(v);

  std::map<Nat, Nat> f;  // model value -> target value
  for (const Var& v : lvars) {
    auto it = target.find(v);
    if (it == target.end())
      throw std::invalid_argument("replicate_levels: no target for " + v.name);
    Nat mv = std::get<LevelV>(model.get(v)).n;
    auto [pos, inserted] = f.emplace(mv, it->second);
    if (!inserted && pos->second != it->second)
      throw std::invalid_argument(
          "replicate_levels: target splits level variables the model equates");
  }
  // strict monotonicity = same order arrangement
  Nat prev_dst;
  bool first = true;
  for (const auto& [src, dst] : f) {
    if (!first && !(prev_dst < dst))
      throw std::invalid_argument(
          "replicate_levels: target violates the model's order arrangement");
    prev_dst = dst;
    first = false;
  }
  if (!gaps(model, cube).empty())
    throw std::invalid_argument("replicate_levels: model has gaps");

  if (f.empty()) return model;

  const Nat min_src = f.begin()->first;
  const Nat max_dst = f.rbegin()->second;
  Nat new_bound = max_dst + 1;
  if (new_bound < model.level_bound) new_bound = model.level_bound;

  // f* : target-space level -> source-space level to replicate
  auto f_star = [&](const Nat& n) -> Nat {
    if (n < f.begin()->second) return n < min_src ? n : min_src;
    Nat best = min_src;
    for (const auto& [src, dst] : f)
      if (dst <= n) best = src;
    return best;
  };
  // monotone extension of f to all naturals (for cell heights)
  const Nat max_src = f.rbegin()->first;
  auto level_map = [&](const Nat& j) -> Nat {
    if (j < min_src) return j;
    if (j > max_src) return max_dst + (j - max_src);
    auto it = f.find(j);
    if (it != f.end()) return it->second;
    // gapless models leave no unmapped value between min and max
    throw std::logic_error("replicate_levels: unmapped level value " + j.str());
  };
  auto array_map = [&](const ArrayV& a) {
    std::vector<Nat> cands = {Nat(0)};
    // below the first mapped level the array is read as-is
    for (const Nat& b : a.boundaries())
      if (b < f.begin()->second) cands.push_back(b);
    for (const auto& [src, dst] : f) cands.push_back(dst);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::pair<Nat, AddrV>> samples;
    for (const Nat& i : cands) samples.emplace_back(i, a.read(f_star(i)));
    samples.emplace_back(new_bound, AddrV{0});
    return ArrayV::from_samples(std::move(samples));
  };
  return map_model(model, level_map, array_map, new_bound);
}

}  // namespace tsl
