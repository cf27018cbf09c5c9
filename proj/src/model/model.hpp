// Explicit finite interpretations: domains, values, and the model container.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/ast.hpp"

namespace tsl {

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Domain indices. Address 0 is null; ord 0 is -inf and the last chain element
// is +inf.
struct AddrV {
  uint32_t i = 0;
  auto operator<=>(const AddrV&) const = default;
};
struct ElemV {
  uint32_t i = 0;
  auto operator<=>(const ElemV&) const = default;
};
struct OrdV {
  uint32_t i = 0;
  auto operator<=>(const OrdV&) const = default;
};
struct LevelV {
  Nat n;
  auto operator<=>(const LevelV&) const = default;
};
struct SetV {
  uint64_t mask = 0;
  auto operator<=>(const SetV&) const = default;
  bool contains(AddrV a) const { return (mask >> a.i) & 1; }
  void add(AddrV a) { mask |= uint64_t(1) << a.i; }
};
struct PathV {
  std::vector<AddrV> addrs;
  auto operator<=>(const PathV&) const = default;
  bool distinct_addrs() const;
};

// Total map Level -> Addr with finite support, stored run-length encoded:
// runs[i].second is the value from level runs[i].first up to the next start;
// levels below the first start and past the final null run read null.
// Canonical form: starts strictly increasing, adjacent run values distinct,
// a leading null run is dropped, and the map ends in an (implicit or explicit)
// null tail.
struct ArrayV {
  std::vector<std::pair<Nat, AddrV>> runs;

  AddrV read(const Nat& l) const;
  ArrayV write(const Nat& l, AddrV a) const;
  void canonicalize();
  // Levels where the value may change (run starts).
  std::vector<Nat> boundaries() const;
  // Largest level with a non-null value, if any.
  std::optional<Nat> support_max() const;
  auto operator<=>(const ArrayV&) const = default;

  static ArrayV from_samples(std::vector<std::pair<Nat, AddrV>> samples);
};

struct CellV {
  bool error = false;
  ElemV data;
  OrdV key;
  ArrayV arr;
  LevelV max;
  auto operator<=>(const CellV&) const = default;
};

CellV error_cell();

struct MemV {
  std::vector<CellV> cells;  // indexed by address, size = addr_count
  auto operator<=>(const MemV&) const = default;
  const CellV& at(AddrV a) const { return cells[a.i]; }
};

using Value = std::variant<AddrV, ElemV, OrdV, LevelV, ArrayV, CellV, MemV, PathV, SetV>;

Sort value_sort(const Value& v);

struct FiniteModel {
  uint32_t addr_count = 1;  // includes null
  uint32_t elem_count = 1;
  uint32_t ord_count = 2;   // includes both sentinels
  Nat level_bound = 1;      // arrays are null at levels >= level_bound

  std::map<std::string, Value> vals;  // keyed by variable name

  bool has(const Var& v) const;
  // Valuation of v; builtin constants (null, error, -inf, +inf) are always
  // defined. Throws EvalError naming the variable when unvalued.
  Value get(const Var& v) const;
  void set(const Var& v, Value val);

  // Stable JSON rendering (sorted keys) for golden tests and --model-out.
  std::string dump_json() const;
};

// Memory access with the error-cell convention for null.
const CellV& mem_rd(const MemV& m, AddrV a);
MemV mem_upd(const MemV& m, AddrV a, const CellV& c);

}  // namespace tsl
