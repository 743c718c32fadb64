#include "diskcert/order.hpp"

#include <algorithm>

#include "diskcert/errors.hpp"

namespace diskcert {

OrderedArc::OrderedArc(JordanSplit split, ArcSide side)
    : split_(std::move(split)), side_(side), memo_(std::make_shared<Memo>()) {}

bool OrderedArc::contains(const BoundaryElement& el) const {
  return std::binary_search(elements().begin(), elements().end(), el);
}

std::size_t OrderedArc::index_of(const BoundaryElement& el) const {
  const auto& els = elements();
  const auto it = std::lower_bound(els.begin(), els.end(), el);
  if (it == els.end() || *it != el) throw ContractViolation(el.label() + " is not on the arc");
  return static_cast<std::size_t>(it - els.begin());
}

std::shared_ptr<const OrderedArc::Host> OrderedArc::build_host(const BoundaryElement& x) const {
  const SplitGeometry& geo = *split_.geometry;
  auto h = std::make_shared<Host>();
  h->cut = crosscut(split_, side_, x);

  TetraGrid grid = geo.grid;
  grid.mark_polyline(h->cut.vertices, layer::cut);
  std::vector<std::uint8_t> mask(geo.inside.size());
  const std::uint8_t want = side_ == ArcSide::k1 ? 1 : 0;
  for (std::size_t t = 0; t < mask.size(); ++t) mask[t] = (geo.inside[t] != 0) == (want != 0);
  const std::vector<int> label = grid.fill(layer::gamma | layer::cut, mask, h->pieces);
  if (h->pieces != 2) {
    throw InvariantViolation("crosscut through " + x.label() + " leaves " + std::to_string(h->pieces) +
                             " pieces instead of 2");
  }

  auto side_label = [&](const BoundaryElement& el) {
    int found = -1;
    for (std::size_t t : grid.triangles_at_corner(el.representative())) {
      if (!mask[t]) continue;
      if (found >= 0 && label[t] != found) {
        throw InvariantViolation("crosscut through " + x.label() + " passes " + el.label());
      }
      found = label[t];
    }
    if (found < 0) throw InvariantViolation(el.label() + " has no neighbourhood on its side of gamma");
    return found;
  };
  const int low = side_label(a());
  if (side_label(b()) == low) throw InvariantViolation("crosscut through " + x.label() + " fails to separate a and b");

  const auto& els = elements();
  h->below.assign(els.size(), 0);
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (els[i] == x) continue;
    h->below[i] = side_label(els[i]) == low;
  }
  return h;
}

std::shared_ptr<const OrderedArc::Host> OrderedArc::host(const BoundaryElement& x) const {
  {
    std::lock_guard lock(memo_->mu);
    auto it = memo_->hosts.find(x);
    if (it != memo_->hosts.end()) return it->second;
  }
  auto built = build_host(x);
  std::lock_guard lock(memo_->mu);
  return memo_->hosts.emplace(x, std::move(built)).first->second;
}

const Arc& OrderedArc::crosscut_of(const BoundaryElement& x) const {
  index_of(x);
  return host(x)->cut;
}

int OrderedArc::crosscut_pieces(const BoundaryElement& x) const {
  index_of(x);
  return host(x)->pieces;
}

std::strong_ordering OrderedArc::compare_hosted(const BoundaryElement& x, const BoundaryElement& y,
                                                const BoundaryElement& h) const {
  const std::size_t ix = index_of(x);
  const std::size_t iy = index_of(y);
  if (x == y) return std::strong_ordering::equal;
  if (x == a() || y == b()) return std::strong_ordering::less;
  if (x == b() || y == a()) return std::strong_ordering::greater;
  if (h == x) return host(x)->below[iy] ? std::strong_ordering::greater : std::strong_ordering::less;
  if (h == y) return host(y)->below[ix] ? std::strong_ordering::less : std::strong_ordering::greater;
  throw ContractViolation("compare_hosted: host must be one of the compared elements");
}

std::strong_ordering OrderedArc::compare(const BoundaryElement& x, const BoundaryElement& y) const {
  return compare_hosted(x, y, x);
}

void OrderedArc::ensure_sorted() const {
  {
    std::lock_guard lock(memo_->mu);
    if (memo_->sorted) return;
  }
  const auto& els = elements();
  const std::size_t n = els.size();
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto here = compare(els[i], els[j]);
      const auto there = compare(els[j], els[i]);
      if (here == there || here == std::strong_ordering::equal) {
        throw InvariantViolation("order is not antisymmetric on " + els[i].label() + ", " + els[j].label());
      }
      if (here == std::strong_ordering::greater) ++rank[i];
    }
  }
  std::vector<BoundaryElement> out(n);
  std::vector<std::uint8_t> used(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[rank[i]]) throw InvariantViolation("order is not transitive");
    used[rank[i]] = 1;
    out[rank[i]] = els[i];
  }
  if (out.front() != a() || out.back() != b()) throw InvariantViolation("order does not run from a to b");
  std::lock_guard lock(memo_->mu);
  if (!memo_->sorted) {
    memo_->sorted = std::move(out);
    memo_->rank = std::move(rank);
  }
}

const std::vector<BoundaryElement>* OrderedArc::sorted() const {
  std::lock_guard lock(memo_->mu);
  return memo_->sorted ? &*memo_->sorted : nullptr;
}

std::size_t OrderedArc::position(const BoundaryElement& el) const {
  const std::size_t i = index_of(el);
  ensure_sorted();
  std::lock_guard lock(memo_->mu);
  return memo_->rank[i];
}

std::vector<BoundaryElement> sort_boundary(const OrderedArc& arc) {
  arc.ensure_sorted();
  return *arc.sorted();
}

std::vector<BoundaryElement> interval_W(const OrderedArc& arc, const BoundaryElement& x,
                                        const BoundaryElement& y) {
  const bool x_first = arc.compare(x, y) != std::strong_ordering::greater;
  const BoundaryElement& lo = x_first ? x : y;
  const BoundaryElement& hi = x_first ? y : x;
  std::vector<BoundaryElement> out;
  for (const BoundaryElement& z : arc.elements()) {
    if (arc.compare(lo, z) != std::strong_ordering::greater && arc.compare(hi, z) != std::strong_ordering::less) {
      out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end(), [&](const BoundaryElement& p, const BoundaryElement& q) {
    return arc.compare(p, q) == std::strong_ordering::less;
  });
  return out;
}

Length rho(const OrderedArc& arc, const BoundaryElement& x, const BoundaryElement& y) {
  std::size_t lo = arc.position(x);
  std::size_t hi = arc.position(y);
  if (lo > hi) std::swap(lo, hi);
  // A single element is one point of the arc, so the diagonal is zero even
  // for an edge whose closure has unit length.
  if (lo == hi) return Length(0);
  auto& memo = *arc.memo_;
  std::lock_guard lock(memo.mu);
  auto it = memo.rho_rows.find(lo);
  if (it == memo.rho_rows.end()) {
    const auto& order = *memo.sorted;
    std::vector<Length> row;
    std::vector<Vertex> pts;
    std::int64_t best = 0;
    for (std::size_t j = lo; j < order.size(); ++j) {
      for (const Vertex& v : order[j].closure()) {
        for (const Vertex& u : pts) {
          const std::int64_t dx = u.x - v.x;
          const std::int64_t dy = u.y - v.y;
          best = std::max(best, dx * dx + dy * dy);
        }
        pts.push_back(v);
      }
      row.emplace_back(best);
    }
    it = memo.rho_rows.emplace(lo, std::move(row)).first;
  }
  return it->second[hi - lo];
}

RootSum signed_f(const OrderedArc& arc, const BoundaryElement& z1, const BoundaryElement& z2,
                 const BoundaryElement& z) {
  const std::size_t p = arc.position(z);
  const int s1 = p >= arc.position(z1) ? 1 : -1;
  const int s2 = p >= arc.position(z2) ? 1 : -1;
  return RootSum::of(rho(arc, z, z1), s1) + RootSum::of(rho(arc, z, z2), s2);
}

std::optional<BoundaryElement> midpoint(const OrderedArc& arc, const BoundaryElement& z1,
                                        const BoundaryElement& z2) {
  const std::size_t i = arc.position(z1);
  const std::size_t j = arc.position(z2);
  if (i >= j) throw ContractViolation("midpoint: z1 must precede z2");
  const std::vector<BoundaryElement>& order = *arc.sorted();
  std::optional<BoundaryElement> best;
  RootSum best_abs;
  for (std::size_t k = i + 1; k < j; ++k) {
    const RootSum v = signed_f(arc, z1, z2, order[k]).abs();
    if (!best || v < best_abs) {
      best = order[k];
      best_abs = v;
    }
  }
  return best;
}

}  // namespace diskcert
