#include "normalize/dnf.hpp"

namespace tsl {

std::vector<Cube> to_dnf(const FTree& t) {
  switch (t.kind) {
    case FTree::Kind::lit:
      return {Cube{t.lit}};
    case FTree::Kind::disj: {
      std::vector<Cube> out;
      for (const auto& k : t.kids) {
        auto sub = to_dnf(k);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case FTree::Kind::conj: {
      std::vector<Cube> acc = {Cube{}};
      for (const auto& k : t.kids) {
        auto sub = to_dnf(k);
        std::vector<Cube> next;
        next.reserve(acc.size() * sub.size());
        for (const auto& left : acc)
          for (const auto& right : sub) {
            Cube c = left;
            c.insert(c.end(), right.begin(), right.end());
            next.push_back(std::move(c));
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

Formula to_dnf(const Formula& f) { return f; }

}  // namespace tsl
