#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diskcert/order.hpp"

namespace diskcert {

// num / 2^exp with num odd unless the value is an integer (exp = 0).
class Dyadic {
 public:
  static constexpr int kMaxExponent = 62;

  Dyadic() = default;
  static Dyadic make(std::uint64_t num, int exp);
  static Dyadic zero() { return {}; }
  static Dyadic one() { return make(1, 0); }

  std::uint64_t num() const { return num_; }
  int exp() const { return exp_; }
  double to_double() const;
  std::string to_string() const;  // "0", "1", "3/8"

  friend Dyadic mean(Dyadic a, Dyadic b);
  friend Dyadic half(Dyadic a);
  // 1 - a for a in [0, 1].
  friend Dyadic complement(Dyadic a);

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

 private:
  std::uint64_t num_ = 0;
  int exp_ = 0;
};

struct DyadicNet {
  std::map<Dyadic, BoundaryElement> assignments;
  int depth = 0;
  std::vector<Length> level_diameters;  // a_0 .. a_depth
};

// Recursive midpoint assignment from {0 -> a, 1 -> b} until every open
// dyadic interval is empty.
DyadicNet build_net(const OrderedArc& arc);

struct Parameterization {
  std::vector<std::pair<BoundaryElement, Dyadic>> values;  // sorted by value
  bool cyclic = false;

  std::optional<Dyadic> value_of(const BoundaryElement& el) const;
  std::vector<BoundaryElement> order() const;
};

// x -> inf {t in net : x < z_t}, realized on the finite net as the net value
// just below the least t with x < z_t (1 when there is none). Throws
// IncompleteNetError if two elements get the same value.
Parameterization parameter_function(const OrderedArc& arc, const DyadicNet& net);

// K1 -> p1 / 2, K2 -> 1 - p2 / 2 with 1 identified to 0.
Parameterization assemble_circle(const JordanSplit& split, const Parameterization& p1, const Parameterization& p2);

struct DecayStep {
  int subdivisions = 0;
  std::vector<Length> level_diameters;  // in cell units of the subdivided set
  double terminal_original_units = 0;    // a_depth scaled back to the input grid
};

// Reruns the arc pipeline on 0..levels global 2x2 subdivisions.
std::vector<DecayStep> refinement_decay(const CubicalSet& set, ArcSide side, int levels);

}  // namespace diskcert
