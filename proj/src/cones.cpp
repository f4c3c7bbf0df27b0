#include "tritile/cones.hpp"

#include <algorithm>
#include <limits>

#include "tritile/errors.hpp"

namespace tritile {

std::vector<Triple> minimal_triples(std::vector<Triple> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // After a lexicographic sort anything dominating p comes after p, so each
  // point only needs checking against the survivors kept so far.
  std::vector<Triple> kept;
  for (const auto& p : points) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Triple& k) { return componentwise_leq(k, p); });
    if (!dominated) kept.push_back(p);
  }
  return kept;
}

std::vector<Triple> roof_closure_triples(std::span<const Triple> generators) {
  if (generators.empty()) return {};
  std::vector<Triple> candidates;
  candidates.reserve(generators.size() * generators.size() * generators.size());
  // Generator a1 witnesses axis 1 (constrains coordinates 2 and 3), a2 axis 2
  // and a3 axis 3.
  for (const auto& a1 : generators)
    for (const auto& a2 : generators)
      for (const auto& a3 : generators)
        candidates.push_back(Triple{std::max(a2[0], a3[0]), std::max(a1[1], a3[1]),
                                    std::max(a1[2], a2[2])});
  return minimal_triples(std::move(candidates));
}

std::vector<QPoint> minimalize(std::span<const QPoint> points, Order order) {
  std::vector<QPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  auto key = [order](const QPoint& p) {
    return order == Order::conjugate ? p.q : inverse_embed(p).t;
  };
  std::vector<QPoint> out;
  for (const auto& p : sorted) {
    bool dominated = std::any_of(sorted.begin(), sorted.end(), [&](const QPoint& o) {
      return o != p && componentwise_leq(key(o), key(p));
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

namespace {

std::vector<QPoint> to_points(const std::vector<Triple>& ts) {
  std::vector<QPoint> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.emplace_back(t);
  return out;
}

std::vector<Triple> to_triples(std::span<const QPoint> ps) {
  std::vector<Triple> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.q);
  return out;
}

std::vector<Triple> to_doubled(std::span<const QPoint> ps) {
  std::vector<Triple> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(inverse_embed(p).t);
  return out;
}

}  // namespace

ConjUpSet ConjUpSet::cone(std::span<const QPoint> points) {
  return ConjUpSet(to_points(minimal_triples(to_triples(points))));
}

ConjUpSet ConjUpSet::roof(std::span<const QPoint> points) {
  auto triples = to_triples(points);
  return ConjUpSet(to_points(roof_closure_triples(triples)));
}

bool ConjUpSet::contains(const QPoint& p) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const QPoint& a) { return leq(a, p); });
}

coord_t ConjUpSet::height(const QPoint& p) const {
  if (generators_.empty()) throw EmptyRegion();
  coord_t best = std::numeric_limits<coord_t>::min();
  for (const auto& a : generators_) {
    coord_t m = std::min({p[0] - a[0], p[1] - a[1], p[2] - a[2]});
    best = std::max(best, m);
  }
  return best;
}

StdUpSet StdUpSet::cone(std::span<const QPoint> points) {
  return StdUpSet(minimal_triples(to_doubled(points)));
}

StdUpSet StdUpSet::roof(std::span<const QPoint> points) {
  auto doubled = to_doubled(points);
  return StdUpSet(roof_closure_triples(doubled));
}

StdUpSet StdUpSet::from_doubled(std::vector<Triple> doubled) {
  return StdUpSet(minimal_triples(std::move(doubled)));
}

bool StdUpSet::contains_doubled(const Triple& t) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Triple& g) { return componentwise_leq(g, t); });
}

bool StdUpSet::contains(const QPoint& p) const { return contains_doubled(inverse_embed(p).t); }

coord_t conj_height(const ConjUpSet& w, const QPoint& p) { return w.height(p); }
bool conj_contains(const ConjUpSet& w, const QPoint& p) { return w.contains(p); }
ConjUpSet conj_roof_generators(std::span<const QPoint> points) { return ConjUpSet::roof(points); }

bool std_contains(const StdUpSet& w, const QPoint& p) { return w.contains(p); }
StdUpSet std_roof_generators(std::span<const QPoint> points) { return StdUpSet::roof(points); }

ConjUpSet roof_add(const ConjUpSet& a, const ConjUpSet& b) {
  std::vector<QPoint> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return ConjUpSet::roof(all);
}

}  // namespace tritile
