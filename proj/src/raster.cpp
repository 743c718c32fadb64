#include "diskcert/raster.hpp"

#include <cstdlib>

#include "diskcert/errors.hpp"

namespace diskcert {

namespace {

enum Side { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };
enum Diag { kLL = 0, kLR = 1, kUR = 2, kUL = 3 };

int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

TetraGrid::TetraGrid(int width, int height, int pad)
    : pad_(pad),
      ox_(-kCellUnits * pad),
      oy_(-kCellUnits * pad),
      nx_((width + 2 * pad) * kCellUnits / kStep),
      ny_((height + 2 * pad) * kCellUnits / kStep) {
  const auto corners = static_cast<std::size_t>((nx_ + 1) * (ny_ + 1));
  const auto squares = static_cast<std::size_t>(nx_ * ny_);
  off_center_ = corners;
  off_h_ = off_center_ + squares;
  off_v_ = off_h_ + static_cast<std::size_t>(nx_ * (ny_ + 1));
  off_d_ = off_v_ + static_cast<std::size_t>((nx_ + 1) * ny_);
  layers_.assign(off_d_ + 4 * squares, 0);
}

bool TetraGrid::contains(Point p) const {
  return p.x >= ox_ && p.y >= oy_ && p.x <= ox_ + kStep * nx_ && p.y <= oy_ + kStep * ny_;
}

std::size_t TetraGrid::corner_index(std::int64_t i, std::int64_t j) const {
  return static_cast<std::size_t>(j * (nx_ + 1) + i);
}
std::size_t TetraGrid::center_index(std::int64_t i, std::int64_t j) const {
  return off_center_ + static_cast<std::size_t>(j * nx_ + i);
}
std::size_t TetraGrid::hedge_index(std::int64_t i, std::int64_t j) const {
  return off_h_ + static_cast<std::size_t>(j * nx_ + i);
}
std::size_t TetraGrid::vedge_index(std::int64_t i, std::int64_t j) const {
  return off_v_ + static_cast<std::size_t>(j * (nx_ + 1) + i);
}
std::size_t TetraGrid::diag_index(std::int64_t i, std::int64_t j, int k) const {
  return off_d_ + static_cast<std::size_t>(4 * (j * nx_ + i) + k);
}

void TetraGrid::mark_point(Point p, std::uint8_t bits) {
  if (!contains(p)) throw ContractViolation("TetraGrid: point outside the grid");
  const std::int64_t gx = p.x - ox_;
  const std::int64_t gy = p.y - oy_;
  if (gx % 2 == 0 && gy % 2 == 0) {
    layers_[corner_index(gx / 2, gy / 2)] |= bits;
  } else if (gx % 2 == 1 && gy % 2 == 1) {
    layers_[center_index(gx / 2, gy / 2)] |= bits;
  } else {
    throw ContractViolation("TetraGrid: point is not a grid vertex");
  }
}

std::uint8_t TetraGrid::point_layers(Point p) const {
  if (!contains(p)) return 0;
  const std::int64_t gx = p.x - ox_;
  const std::int64_t gy = p.y - oy_;
  if (gx % 2 == 0 && gy % 2 == 0) return layers_[corner_index(gx / 2, gy / 2)];
  if (gx % 2 == 1 && gy % 2 == 1) return layers_[center_index(gx / 2, gy / 2)];
  return 0;
}

template <typename F>
void TetraGrid::walk_open_segment(Point a, Point b, F&& visit) const {
  if (!contains(a) || !contains(b)) throw ContractViolation("TetraGrid: segment leaves the grid");
  const std::int64_t ax = a.x - ox_;
  const std::int64_t ay = a.y - oy_;
  const std::int64_t bx = b.x - ox_;
  const std::int64_t by = b.y - oy_;
  if (ax % 2 != 0 || ay % 2 != 0 || bx % 2 != 0 || by % 2 != 0) {
    throw ContractViolation("TetraGrid: segment endpoints must be even");
  }
  const std::int64_t dx = bx - ax;
  const std::int64_t dy = by - ay;
  const int sx = sgn(dx);
  const int sy = sgn(dy);
  if (dx != 0 && dy != 0 && std::llabs(dx) != std::llabs(dy)) {
    throw ContractViolation("TetraGrid: segment is neither axis-parallel nor diagonal");
  }
  const std::int64_t steps = std::max(std::llabs(dx), std::llabs(dy)) / 2;
  std::int64_t i = ax / 2;
  std::int64_t j = ay / 2;
  for (std::int64_t k = 0; k < steps; ++k) {
    if (k > 0) visit(corner_index(i, j));
    const std::int64_t ni = i + sx;
    const std::int64_t nj = j + sy;
    if (sy == 0) {
      visit(hedge_index(std::min(i, ni), j));
    } else if (sx == 0) {
      visit(vedge_index(i, std::min(j, nj)));
    } else {
      const std::int64_t si = std::min(i, ni);
      const std::int64_t sj = std::min(j, nj);
      auto diag_to = [&](std::int64_t ci, std::int64_t cj) {
        const bool right = ci != si;
        const bool upper = cj != sj;
        return diag_index(si, sj, upper ? (right ? kUR : kUL) : (right ? kLR : kLL));
      };
      visit(diag_to(i, j));
      visit(center_index(si, sj));
      visit(diag_to(ni, nj));
    }
    i = ni;
    j = nj;
  }
}

void TetraGrid::mark_segment(Point a, Point b, std::uint8_t bits) {
  mark_point(a, bits);
  mark_point(b, bits);
  walk_open_segment(a, b, [&](std::size_t idx) { layers_[idx] |= bits; });
}

void TetraGrid::mark_polyline(std::span<const Point> pts, std::uint8_t bits) {
  if (pts.size() == 1) mark_point(pts[0], bits);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) mark_segment(pts[i], pts[i + 1], bits);
}

bool TetraGrid::segment_clear(Point a, Point b, std::uint8_t forbidden) const {
  bool clear = true;
  walk_open_segment(a, b, [&](std::size_t idx) {
    if (layers_[idx] & forbidden) clear = false;
  });
  return clear;
}

Cell TetraGrid::triangle_cell(std::size_t tri) const {
  const auto sq = static_cast<std::int64_t>(tri / 4);
  const std::int64_t i = sq % nx_;
  const std::int64_t j = sq / nx_;
  constexpr std::int64_t per_cell = kCellUnits / kStep;
  return {static_cast<int>(i / per_cell - pad_), static_cast<int>(j / per_cell - pad_)};
}

Point TetraGrid::triangle_sample_doubled(std::size_t tri) const {
  static constexpr std::int64_t kDx[4] = {2, 3, 2, 1};
  static constexpr std::int64_t kDy[4] = {1, 2, 3, 2};
  const auto sq = static_cast<std::int64_t>(tri / 4);
  const int side = static_cast<int>(tri % 4);
  const std::int64_t x0 = ox_ + kStep * (sq % nx_);
  const std::int64_t y0 = oy_ + kStep * (sq / nx_);
  return {2 * x0 + kDx[side], 2 * y0 + kDy[side]};
}

std::vector<std::size_t> TetraGrid::triangles_at_corner(Point p) const {
  const std::int64_t gx = p.x - ox_;
  const std::int64_t gy = p.y - oy_;
  if (!contains(p) || gx % 2 != 0 || gy % 2 != 0) throw ContractViolation("TetraGrid: not a corner");
  const std::int64_t i = gx / 2;
  const std::int64_t j = gy / 2;
  std::vector<std::size_t> out;
  auto add = [&](std::int64_t si, std::int64_t sj, int s1, int s2) {
    if (si < 0 || sj < 0 || si >= nx_ || sj >= ny_) return;
    const auto base = static_cast<std::size_t>(4 * (sj * nx_ + si));
    out.push_back(base + s1);
    out.push_back(base + s2);
  };
  add(i, j, kBottom, kLeft);
  add(i - 1, j, kBottom, kRight);
  add(i - 1, j - 1, kRight, kTop);
  add(i, j - 1, kTop, kLeft);
  return out;
}

std::vector<int> TetraGrid::fill(std::uint8_t blocking, std::span<const std::uint8_t> include, int& count) const {
  const std::size_t n = triangle_count();
  if (!include.empty() && include.size() != n) throw ContractViolation("TetraGrid::fill: mask size mismatch");
  std::vector<int> label(n, -1);
  std::vector<std::size_t> stack;
  count = 0;
  auto wanted = [&](std::size_t t) { return include.empty() || include[t] != 0; };
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (label[seed] >= 0 || !wanted(seed)) continue;
    const int id = count++;
    label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      const auto sq = static_cast<std::int64_t>(t / 4);
      const int side = static_cast<int>(t % 4);
      const std::int64_t i = sq % nx_;
      const std::int64_t j = sq / nx_;
      const std::size_t base = t - side;
      auto go = [&](std::size_t via, std::size_t next) {
        if ((layers_[via] & blocking) != 0 || label[next] >= 0 || !wanted(next)) return;
        label[next] = id;
        stack.push_back(next);
      };
      const auto row = static_cast<std::size_t>(4 * nx_);
      switch (side) {
        case kBottom:
          if (j > 0) go(hedge_index(i, j), base - row + kTop);
          go(diag_index(i, j, kLL), base + kLeft);
          go(diag_index(i, j, kLR), base + kRight);
          break;
        case kRight:
          if (i + 1 < nx_) go(vedge_index(i + 1, j), base + 4 + kLeft);
          go(diag_index(i, j, kLR), base + kBottom);
          go(diag_index(i, j, kUR), base + kTop);
          break;
        case kTop:
          if (j + 1 < ny_) go(hedge_index(i, j + 1), base + row + kBottom);
          go(diag_index(i, j, kUR), base + kRight);
          go(diag_index(i, j, kUL), base + kLeft);
          break;
        default:
          if (i > 0) go(vedge_index(i, j), base - 4 + kRight);
          go(diag_index(i, j, kLL), base + kBottom);
          go(diag_index(i, j, kUL), base + kTop);
          break;
      }
    }
  }
  return label;
}

}  // namespace diskcert
