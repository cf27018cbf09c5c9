#include "model/eval.hpp"

#include <algorithm>
#include <set>

namespace tsl {

AddrV mem_succ(const MemV& m, AddrV a, const Nat& l) {
  return mem_rd(m, a).arr.read(l);
}

PathV model_getp(const MemV& m, AddrV a1, AddrV a2, const Nat& l) {
  PathV p;
  if (a1 == a2) return p;
  SetV visited;
  AddrV cur = a1;
  visited.add(cur);
  p.addrs.push_back(cur);
  while (true) {
    AddrV next = mem_succ(m, cur, l);
    if (next == a2) {
      p.addrs.push_back(next);
      return p;
    }
    if (visited.contains(next)) return PathV{};  // cycle, a2 not reached
    visited.add(next);
    p.addrs.push_back(next);
    cur = next;
  }
}

SetV model_addr2set(const MemV& m, AddrV a, const Nat& l) {
  SetV s;
  AddrV cur = a;
  while (!s.contains(cur)) {
    s.add(cur);
    cur = mem_succ(m, cur, l);
  }
  return s;
}

SetV path2set(const PathV& p) {
  SetV s;
  for (AddrV a : p.addrs) s.add(a);
  return s;
}

bool model_reach(const MemV& m, AddrV a1, AddrV a2, const Nat& l, const PathV& p) {
  if (p.addrs.empty()) return a1 == a2;
  if (p.addrs.size() < 2) return false;  // the reflexive witness is the empty path
  if (!p.distinct_addrs()) return false;
  if (p.addrs.front() != a1 || p.addrs.back() != a2) return false;
  for (size_t i = 0; i + 1 < p.addrs.size(); ++i)
    if (mem_succ(m, p.addrs[i], l) != p.addrs[i + 1]) return false;
  return true;
}

bool model_ord_list(const MemV& m, const PathV& p) {
  SetV s = path2set(p);
  for (AddrV a : p.addrs) {
    AddrV b = mem_succ(m, a, Nat(0));
    if (!s.contains(b)) continue;
    if (mem_rd(m, b).key < mem_rd(m, a).key) return false;
  }
  return true;
}

namespace {

bool subset(SetV a, SetV b) { return (a.mask & ~b.mask) == 0; }

// Levels at which any successor graph of m can change, used to check the
// per-level skiplist conditions without walking a possibly huge level range.
std::vector<Nat> change_points(const MemV& m) {
  std::set<Nat> pts;
  pts.insert(Nat(0));
  for (const CellV& c : m.cells)
    for (const Nat& b : c.arr.boundaries()) pts.insert(b);
  return {pts.begin(), pts.end()};
}

}  // namespace

bool model_skiplist(const MemV& m, SetV r, const Nat& l, AddrV a1, AddrV a2) {
  PathV p0 = model_getp(m, a1, a2, Nat(0));
  // SL1: ordered backbone
  if (!model_ord_list(m, p0)) return false;
  // SL2: region is exactly the level-0 path
  if (r != path2set(p0)) return false;
  // SL3: a2's pointers are null at levels 0..l
  const CellV& end = mem_rd(m, a2);
  for (const auto& [start, v] : end.arr.runs) {
    if (start > l) break;
    if (v.i != 0) return false;
  }
  // SL4: cell heights of the region are bounded by l
  for (uint32_t a = 0; a < m.cells.size(); ++a)
    if (r.contains(AddrV{a}) && mem_rd(m, AddrV{a}).max.n > l) return false;
  // SL5: each level is a sublist (as a set) of the one below
  if (l > 0) {
    std::vector<Nat> pts = change_points(m);
    std::vector<Nat> candidates;
    for (const Nat& v : pts) {
      for (int d = -1; d <= 1; ++d) {
        Nat i = v + d;
        if (i >= 0 && i < l) candidates.push_back(i);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const Nat& i : candidates) {
      SetV hi = path2set(model_getp(m, a1, a2, i + 1));
      SetV lo = path2set(model_getp(m, a1, a2, i));
      if (!subset(hi, lo)) return false;
    }
  }
  return true;
}

namespace {

std::optional<Value> eval_app(const FiniteModel& model, const Term& t);

std::optional<Value> eval_term_impl(const FiniteModel& model, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::var:
      return model.get(t->v);
    case Term::Kind::level_const:
      return Value(LevelV{t->num});
    case Term::Kind::app:
      return eval_app(model, *t);
  }
  return std::nullopt;
}

std::optional<Value> eval_app(const FiniteModel& model, const Term& t) {
  std::vector<Value> args;
  for (const auto& a : t.args) {
    auto v = eval_term_impl(model, a);
    if (!v) return std::nullopt;
    args.push_back(std::move(*v));
  }
  switch (t.fn) {
    case Fn::rd:
      return Value(mem_rd(std::get<MemV>(args[0]), std::get<AddrV>(args[1])));
    case Fn::upd:
      return Value(mem_upd(std::get<MemV>(args[0]), std::get<AddrV>(args[1]),
                           std::get<CellV>(args[2])));
    case Fn::mkcell: {
      CellV c;
      c.error = false;
      c.data = std::get<ElemV>(args[0]);
      c.key = std::get<OrdV>(args[1]);
      c.arr = std::get<ArrayV>(args[2]);
      c.max = std::get<LevelV>(args[3]);
      return Value(c);
    }
    case Fn::arr_rd:
      return Value(std::get<ArrayV>(args[0]).read(std::get<LevelV>(args[1]).n));
    case Fn::arr_upd:
      return Value(std::get<ArrayV>(args[0]).write(std::get<LevelV>(args[1]).n,
                                                   std::get<AddrV>(args[2])));
    case Fn::getp:
      return Value(model_getp(std::get<MemV>(args[0]), std::get<AddrV>(args[1]),
                              std::get<AddrV>(args[2]), std::get<LevelV>(args[3]).n));
    case Fn::addr2set:
      return Value(model_addr2set(std::get<MemV>(args[0]), std::get<AddrV>(args[1]),
                                  std::get<LevelV>(args[2]).n));
    case Fn::path2set:
      return Value(path2set(std::get<PathV>(args[0])));
    case Fn::rev: {
      PathV p = std::get<PathV>(args[0]);
      std::reverse(p.addrs.begin(), p.addrs.end());
      return Value(p);
    }
    case Fn::single_path:
      return Value(PathV{{std::get<AddrV>(args[0])}});
    case Fn::set_union:
      return Value(SetV{std::get<SetV>(args[0]).mask | std::get<SetV>(args[1]).mask});
    case Fn::set_diff:
      return Value(SetV{std::get<SetV>(args[0]).mask & ~std::get<SetV>(args[1]).mask});
    case Fn::singleton: {
      SetV s;
      s.add(std::get<AddrV>(args[0]));
      return Value(s);
    }
    case Fn::sel_data: {
      const CellV& c = std::get<CellV>(args[0]);
      if (c.error) return std::nullopt;
      return Value(c.data);
    }
    case Fn::sel_key: {
      const CellV& c = std::get<CellV>(args[0]);
      if (c.error) return std::nullopt;
      return Value(c.key);
    }
    case Fn::sel_arr: {
      const CellV& c = std::get<CellV>(args[0]);
      if (c.error) return std::nullopt;
      return Value(c.arr);
    }
    case Fn::sel_max: {
      const CellV& c = std::get<CellV>(args[0]);
      if (c.error) return std::nullopt;
      return Value(c.max);
    }
    case Fn::level_succ:
      return Value(LevelV{std::get<LevelV>(args[0]).n + 1});
  }
  return std::nullopt;
}

}  // namespace

std::optional<Value> eval_term(const FiniteModel& model, const TermPtr& t) {
  return eval_term_impl(model, t);
}

bool eval(const FiniteModel& model, const Literal& l) {
  std::vector<Value> args;
  for (const auto& t : l.args) {
    auto v = eval_term(model, t);
    if (!v) return false;
    args.push_back(std::move(*v));
  }
  switch (l.pred) {
    case Pred::eq: {
      bool r = args[0] == args[1];
      return l.positive ? r : !r;
    }
    case Pred::neq: {
      bool r = !(args[0] == args[1]);
      return l.positive ? r : !r;
    }
    case Pred::less: {
      bool r = std::get<LevelV>(args[0]).n < std::get<LevelV>(args[1]).n;
      return l.positive ? r : !r;
    }
    case Pred::ord_leq: {
      bool leq = std::get<OrdV>(args[0]).i <= std::get<OrdV>(args[1]).i;
      return l.positive ? leq : !leq;
    }
    case Pred::set_in: {
      bool in = std::get<SetV>(args[1]).contains(std::get<AddrV>(args[0]));
      return l.positive ? in : !in;
    }
    case Pred::reach: {
      bool r = model_reach(std::get<MemV>(args[0]), std::get<AddrV>(args[1]),
                           std::get<AddrV>(args[2]), std::get<LevelV>(args[3]).n,
                           std::get<PathV>(args[4]));
      return l.positive ? r : !r;
    }
    case Pred::ord_list: {
      bool r = model_ord_list(std::get<MemV>(args[0]), std::get<PathV>(args[1]));
      return l.positive ? r : !r;
    }
    case Pred::skiplist: {
      bool r = model_skiplist(std::get<MemV>(args[0]), std::get<SetV>(args[1]),
                              std::get<LevelV>(args[2]).n, std::get<AddrV>(args[3]),
                              std::get<AddrV>(args[4]));
      return l.positive ? r : !r;
    }
    case Pred::append: {
      const PathV& p1 = std::get<PathV>(args[0]);
      const PathV& p2 = std::get<PathV>(args[1]);
      const PathV& p3 = std::get<PathV>(args[2]);
      PathV cat = p1;
      cat.addrs.insert(cat.addrs.end(), p2.addrs.begin(), p2.addrs.end());
      bool r = (path2set(p1).mask & path2set(p2).mask) == 0 && cat == p3;
      return l.positive ? r : !r;
    }
  }
  return false;
}

bool eval(const FiniteModel& model, const Cube& c) {
  for (const auto& l : c)
    if (!eval(model, l)) return false;
  return true;
}

bool eval_formula(const FiniteModel& model, const Formula& f) {
  for (const auto& c : f.cubes)
    if (eval(model, c)) return true;
  return false;
}

}  // namespace tsl
