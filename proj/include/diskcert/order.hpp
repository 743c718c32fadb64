#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "diskcert/arcs.hpp"
#include "diskcert/exact.hpp"

namespace diskcert {

// One of the two boundary arcs of a split, with the crosscut order: a = z1
// is least, b = z2 greatest, and y < x when y falls on the z1 side of the
// crosscut through x. Copies share one memo table.
class OrderedArc {
 public:
  OrderedArc(JordanSplit split, ArcSide side);

  const JordanSplit& split() const { return split_; }
  ArcSide side() const { return side_; }
  const std::vector<BoundaryElement>& elements() const { return split_.arc(side_); }
  const BoundaryElement& a() const { return split_.z1; }
  const BoundaryElement& b() const { return split_.z2; }
  bool contains(const BoundaryElement& el) const;

  // Order with the crosscut hosted on x.
  std::strong_ordering compare(const BoundaryElement& x, const BoundaryElement& y) const;
  // Same relation decided with the crosscut through `host` (x or y).
  std::strong_ordering compare_hosted(const BoundaryElement& x, const BoundaryElement& y,
                                      const BoundaryElement& host) const;

  // Crosscut through a non-endpoint element, built once.
  const Arc& crosscut_of(const BoundaryElement& x) const;
  // Components of the arc's side of gamma minus the crosscut through x.
  int crosscut_pieces(const BoundaryElement& x) const;

  // Sorted elements (a first, b last) once sort_boundary has run.
  const std::vector<BoundaryElement>* sorted() const;
  // Index in sorted order; sorts on first use.
  std::size_t position(const BoundaryElement& el) const;

 private:
  friend std::vector<BoundaryElement> sort_boundary(const OrderedArc& arc);
  friend Length rho(const OrderedArc& arc, const BoundaryElement& x, const BoundaryElement& y);

  struct Host {
    Arc cut;
    std::vector<std::uint8_t> below;  // per element index: 1 when on the z1 side
    int pieces = 0;
  };
  struct Memo {
    std::mutex mu;
    std::map<BoundaryElement, std::shared_ptr<const Host>> hosts;
    std::optional<std::vector<BoundaryElement>> sorted;
    std::vector<std::size_t> rank;  // element index -> sorted position
    std::map<std::size_t, std::vector<Length>> rho_rows;  // by sorted start
  };

  std::size_t index_of(const BoundaryElement& el) const;
  std::shared_ptr<const Host> host(const BoundaryElement& x) const;
  std::shared_ptr<const Host> build_host(const BoundaryElement& x) const;
  void ensure_sorted() const;

  JordanSplit split_;
  ArcSide side_;
  std::shared_ptr<Memo> memo_;
};

// Total order of the arc. Throws InvariantViolation when the comparator is
// not a strict total order with a first and b last.
std::vector<BoundaryElement> sort_boundary(const OrderedArc& arc);

// {z : min(x, y) <= z <= max(x, y)}, in element order.
std::vector<BoundaryElement> interval_W(const OrderedArc& arc, const BoundaryElement& x, const BoundaryElement& y);

// Diameter of the closed interval, in cell units.
Length rho(const OrderedArc& arc, const BoundaryElement& x, const BoundaryElement& y);

// +-rho(z, z1) +- rho(z, z2), each term positive when z lies above that anchor.
RootSum signed_f(const OrderedArc& arc, const BoundaryElement& z1, const BoundaryElement& z2,
                 const BoundaryElement& z);

// Element strictly between z1 < z2 minimizing |signed_f|, ties to the lower
// one; nullopt when nothing lies strictly between.
std::optional<BoundaryElement> midpoint(const OrderedArc& arc, const BoundaryElement& z1,
                                        const BoundaryElement& z2);

}  // namespace diskcert
