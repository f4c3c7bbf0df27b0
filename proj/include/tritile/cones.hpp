#pragma once

#include <span>
#include <vector>

#include "tritile/lattice.hpp"

namespace tritile {

enum class Order {
  conjugate,  // componentwise order on q-coordinates
  standard    // componentwise order on l-coordinates
};

/// Minimal elements of `points` under `order`, sorted and deduplicated.
std::vector<QPoint> minimalize(std::span<const QPoint> points, Order order);

/// Minimal elements of a set of triples under the componentwise order.
std::vector<Triple> minimal_triples(std::vector<Triple> points);

/// Generators of the roof closure of an up-set given by `generators`:
/// a point p lies in the closure iff for every axis i some generator is
/// <= p on the two axes other than i.
std::vector<Triple> roof_closure_triples(std::span<const Triple> generators);

/// An up-closed region of the conjugate lattice (a conjugate cone or roof),
/// held as its antichain of minimal generators. No generators means the
/// empty region.
class ConjUpSet {
 public:
  ConjUpSet() = default;

  /// Cone*A.
  static ConjUpSet cone(std::span<const QPoint> points);
  /// Roof*A.
  static ConjUpSet roof(std::span<const QPoint> points);

  const std::vector<QPoint>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  bool contains(const QPoint& p) const;

  /// max over generators a of min_i (p_i - a_i). Zero exactly on the
  /// boundary surface; throws EmptyRegion for the empty region.
  coord_t height(const QPoint& p) const;

  friend bool operator==(const ConjUpSet&, const ConjUpSet&) = default;

 private:
  explicit ConjUpSet(std::vector<QPoint> antichain) : generators_(std::move(antichain)) {}

  std::vector<QPoint> generators_;
};

/// An up-closed region in l-coordinates (a standard cone or roof). The
/// generators are kept in doubled l-coordinates because roof closure can
/// produce half-integer points that are not images of conjugate points.
class StdUpSet {
 public:
  StdUpSet() = default;

  /// Cone A for A in the conjugate lattice.
  static StdUpSet cone(std::span<const QPoint> points);
  /// Roof A for A in the conjugate lattice.
  static StdUpSet roof(std::span<const QPoint> points);
  /// Construct directly from doubled l-coordinates; minimalizes.
  static StdUpSet from_doubled(std::vector<Triple> doubled);

  const std::vector<Triple>& doubled_generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  bool contains(const QPoint& p) const;
  bool contains_doubled(const Triple& t) const;

  friend bool operator==(const StdUpSet&, const StdUpSet&) = default;

 private:
  explicit StdUpSet(std::vector<Triple> antichain) : generators_(std::move(antichain)) {}

  std::vector<Triple> generators_;
};

coord_t conj_height(const ConjUpSet& w, const QPoint& p);
bool conj_contains(const ConjUpSet& w, const QPoint& p);
ConjUpSet conj_roof_generators(std::span<const QPoint> points);

bool std_contains(const StdUpSet& w, const QPoint& p);
StdUpSet std_roof_generators(std::span<const QPoint> points);

/// Roof*A + Roof*B := Roof*(A u B).
ConjUpSet roof_add(const ConjUpSet& a, const ConjUpSet& b);

}  // namespace tritile
