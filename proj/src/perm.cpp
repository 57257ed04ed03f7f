#include "taulab/perm.hpp"

#include "taulab/error.hpp"

#include <set>

namespace taulab {

FinitePerm FinitePerm::identity(const OrderExpr& order) { return FinitePerm(order, {}); }

FinitePerm FinitePerm::swap(const Elem& a, const Elem& b) {
  if (!(a.order() == b.order())) throw Error(ErrorKind::OrderMismatch, "swap across orders");
  if (a == b) return identity(a.order());
  std::map<Elem, Elem, ElemLess> m;
  m.emplace(a, b);
  m.emplace(b, a);
  return FinitePerm(a.order(), std::move(m));
}

FinitePerm FinitePerm::from_cycles(const OrderExpr& order, const std::vector<std::vector<Elem>>& cycles) {
  std::map<Elem, Elem, ElemLess> m;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      require_member(order, cycle[i]);
      const Elem& next = cycle[(i + 1) % cycle.size()];
      if (!m.emplace(cycle[i], next).second) {
        throw Error(ErrorKind::InvalidArgument, "cycles are not disjoint at " + cycle[i].to_string());
      }
    }
  }
  for (auto it = m.begin(); it != m.end();) {
    it = (it->first == it->second) ? m.erase(it) : std::next(it);
  }
  return FinitePerm(order, std::move(m));
}

FinitePerm FinitePerm::pair_swaps(const OrderExpr& order, const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<std::vector<Elem>> cycles;
  cycles.reserve(pairs.size());
  for (const auto& [a, b] : pairs) cycles.push_back({a, b});
  return from_cycles(order, cycles);
}

std::vector<Elem> FinitePerm::support() const {
  std::vector<Elem> out;
  out.reserve(moved_.size());
  for (const auto& kv : moved_) out.push_back(kv.first);
  return out;
}

Elem FinitePerm::operator()(const Elem& x) const {
  require_member(order_, x);
  auto it = moved_.find(x);
  return it == moved_.end() ? x : it->second;
}

FinitePerm FinitePerm::inverse() const {
  std::map<Elem, Elem, ElemLess> m;
  for (const auto& [x, y] : moved_) m.emplace(y, x);
  return FinitePerm(order_, std::move(m));
}

std::string FinitePerm::to_string() const {
  if (moved_.empty()) return "id";
  std::string out;
  std::set<Elem, ElemLess> seen;
  for (const auto& kv : moved_) {
    if (seen.count(kv.first)) continue;
    out += "(";
    Elem x = kv.first;
    bool first = true;
    while (!seen.count(x)) {
      seen.insert(x);
      if (!first) out += " ";
      out += x.to_string();
      first = false;
      x = moved_.at(x);
    }
    out += ")";
  }
  return out;
}

bool operator==(const FinitePerm& a, const FinitePerm& b) {
  if (!(a.order_ == b.order_) || a.moved_.size() != b.moved_.size()) return false;
  auto i = a.moved_.begin();
  for (auto j = b.moved_.begin(); j != b.moved_.end(); ++i, ++j) {
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  }
  return true;
}

FinitePerm compose(const FinitePerm& p, const FinitePerm& q) {
  if (!(p.order_ == q.order_)) throw Error(ErrorKind::OrderMismatch, "composing permutations of different orders");
  std::map<Elem, Elem, ElemLess> m;
  auto image = [&](const Elem& x) {
    auto it = q.moved_.find(x);
    const Elem& y = it == q.moved_.end() ? x : it->second;
    auto jt = p.moved_.find(y);
    return jt == p.moved_.end() ? y : jt->second;
  };
  for (const auto& kv : q.moved_) m.emplace(kv.first, image(kv.first));
  for (const auto& kv : p.moved_) m.emplace(kv.first, image(kv.first));
  for (auto it = m.begin(); it != m.end();) {
    it = (it->first == it->second) ? m.erase(it) : std::next(it);
  }
  return FinitePerm(p.order_, std::move(m));
}

}  // namespace taulab
