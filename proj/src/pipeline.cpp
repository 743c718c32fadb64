#include "diskcert/pipeline.hpp"

#include <algorithm>

#include "diskcert/errors.hpp"

namespace diskcert {

bool cyclic_equivalent(const std::vector<BoundaryElement>& a, const std::vector<BoundaryElement>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  const auto start = std::find(b.begin(), b.end(), a[0]);
  if (start == b.end()) return false;
  const auto s = static_cast<std::size_t>(start - b.begin());
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[(s + i) % n]) forward = false;
    if (a[i] != b[(s + n - i) % n]) backward = false;
  }
  return forward || backward;
}

bool contiguous_in_cycle(const std::vector<BoundaryElement>& sub, const std::vector<BoundaryElement>& cycle) {
  if (sub.empty()) return true;
  if (sub.size() > cycle.size()) return false;
  const std::size_t n = cycle.size();
  const auto start = std::find(cycle.begin(), cycle.end(), sub[0]);
  if (start == cycle.end()) return false;
  const auto s = static_cast<std::size_t>(start - cycle.begin());
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub[i] != cycle[(s + i) % n]) forward = false;
    if (sub[i] != cycle[(s + n - i) % n]) backward = false;
  }
  return forward || backward;
}

namespace {

void audit(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(std::string("audit failed: ") + what);
}

ArcCertificate certify_arc(const JordanSplit& split, ArcSide side, AuditSummary& audits) {
  const OrderedArc arc(split, side);
  ArcCertificate cert;
  cert.side = side;
  cert.order = sort_boundary(arc);

  const auto& els = arc.elements();
  for (const BoundaryElement& x : els) {
    for (const BoundaryElement& y : els) {
      if (x == y) continue;
      audit(arc.compare_hosted(x, y, x) == arc.compare_hosted(x, y, y), "order depends on the crosscut host");
      ++audits.order_pairs;
    }
  }

  const CubicalSet& set = split.set();
  for (const BoundaryElement& x : els) {
    if (x == arc.a() || x == arc.b()) continue;
    const Arc& cut = arc.crosscut_of(x);
    audit(arc_is_injective(cut), "crosscut is not injective");
    audit(touches_boundary_only_at(set, cut, x), "crosscut meets the boundary away from its element");
    audit(arc.crosscut_pieces(x) == 2, "crosscut does not split its side in two");
    ++audits.crosscuts;
  }
  for (std::size_t i = 1; i + 2 < cert.order.size(); ++i) {
    const BoundaryElement& x = cert.order[i];
    const BoundaryElement& y = cert.order[i + 1];
    const Arc& cy = arc.crosscut_of(y);
    const Arc cx = crosscut(split, side, x, &cy);
    audit(polylines_disjoint(cx.vertices, cy.vertices), "paired crosscuts intersect");
    audit(touches_boundary_only_at(set, cx, x), "rerouted crosscut meets the boundary away from its element");
    ++audits.avoid_pairs;
  }

  cert.net = build_net(arc);
  for (std::size_t n = 1; n < cert.net.level_diameters.size(); ++n) {
    audit(cert.net.level_diameters[n] <= cert.net.level_diameters[n - 1], "level diameters increase");
  }
  cert.param = parameter_function(arc, cert.net);
  audit(cert.param.order() == cert.order, "parameter order differs from the sorted arc");
  return cert;
}

}  // namespace

Certificate certify(const CubicalSet& set) {
  Certificate c;
  c.set = set;
  c.criterion = evaluate(set);
  c.oracle = is_disk_oracle(set);
  if ((c.criterion.verdict == Verdict::disk) != c.oracle.is_disk) {
    throw InvariantViolation("criterion and oracle disagree");
  }
  if (!c.is_disk()) return c;

  const auto [z1, z2] = choose_endpoints(set);
  JordanSplit split = jordan_split(set, z1, z2);
  audit(arc_is_injective(split.gamma_interior) && arc_in_region(set, split.gamma_interior),
        "interior arc of gamma");
  audit(arc_is_injective(split.gamma_complement) && arc_in_region(set, split.gamma_complement),
        "complement arc of gamma");
  c.audits.region_arcs += 2;
  const SidePieces& p = split.pieces;
  audit(p.interior_inside == 1 && p.complement_inside == 1 && p.interior_outside == 1 &&
            p.complement_outside == 1,
        "side pieces are not connected");

  c.k1 = certify_arc(split, ArcSide::k1, c.audits);
  c.k2 = certify_arc(split, ArcSide::k2, c.audits);
  c.cyclic = assemble_circle(split, c.k1->param, c.k2->param);

  audit(c.oracle.boundary_cycle.has_value(), "oracle has no boundary cycle");
  audit(contiguous_in_cycle(c.k1->order, *c.oracle.boundary_cycle), "K1 order differs from the boundary cycle");
  audit(contiguous_in_cycle(c.k2->order, *c.oracle.boundary_cycle), "K2 order differs from the boundary cycle");
  audit(cyclic_equivalent(c.cyclic->order(), *c.oracle.boundary_cycle), "circle order differs from the boundary cycle");
  c.split = std::move(split);
  return c;
}

}  // namespace diskcert
