#include "diskcert/parameterize.hpp"

#include <algorithm>
#include <cmath>

#include "diskcert/errors.hpp"

namespace diskcert {

namespace {

Dyadic from_wide(Int128 num, int exp) {
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (exp > Dyadic::kMaxExponent || num < 0 || num > static_cast<Int128>(UINT64_MAX)) {
    throw InvariantViolation("dyadic value out of range");
  }
  return Dyadic::make(static_cast<std::uint64_t>(num), exp);
}

Int128 scaled(const Dyadic& d, int exp) { return static_cast<Int128>(d.num()) << (exp - d.exp()); }

}  // namespace

Dyadic Dyadic::make(std::uint64_t num, int exp) {
  if (exp < 0) throw ContractViolation("Dyadic: negative exponent");
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (exp > kMaxExponent) throw InvariantViolation("dyadic net deeper than supported");
  Dyadic d;
  d.num_ = num;
  d.exp_ = exp;
  return d;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << exp_);
}

Dyadic mean(Dyadic a, Dyadic b) {
  const int e = std::max(a.exp(), b.exp());
  return from_wide(scaled(a, e) + scaled(b, e), e + 1);
}

Dyadic half(Dyadic a) { return from_wide(a.num(), a.exp() + 1); }

Dyadic complement(Dyadic a) { return from_wide((static_cast<Int128>(1) << a.exp()) - a.num(), a.exp()); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp(), b.exp());
  const Int128 x = scaled(a, e);
  const Int128 y = scaled(b, e);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DyadicNet build_net(const OrderedArc& arc) {
  const std::vector<BoundaryElement> order = sort_boundary(arc);
  if (order.size() < 2) throw ContractViolation("build_net: arc needs two elements");
  DyadicNet net;
  net.assignments.emplace(Dyadic::zero(), arc.a());
  net.assignments.emplace(Dyadic::one(), arc.b());
  net.level_diameters.push_back(rho(arc, arc.a(), arc.b()));

  for (int level = 1;; ++level) {
    std::vector<std::pair<Dyadic, BoundaryElement>> fresh;
    for (auto it = net.assignments.begin(); std::next(it) != net.assignments.end(); ++it) {
      const auto nx = std::next(it);
      if (auto m = midpoint(arc, it->second, nx->second)) fresh.emplace_back(mean(it->first, nx->first), *m);
    }
    if (fresh.empty()) break;
    for (auto& [q, z] : fresh) {
      if (!net.assignments.emplace(q, z).second) throw InvariantViolation("dyadic net reassigns " + q.to_string());
    }
    net.depth = level;
    Length widest;
    for (auto it = net.assignments.begin(); std::next(it) != net.assignments.end(); ++it) {
      widest = std::max(widest, rho(arc, it->second, std::next(it)->second));
    }
    net.level_diameters.push_back(widest);
  }

  std::size_t last = 0;
  bool first = true;
  for (const auto& [q, z] : net.assignments) {
    const std::size_t p = arc.position(z);
    if (!first && p <= last) throw InvariantViolation("dyadic net is not monotone");
    last = p;
    first = false;
  }
  return net;
}

std::optional<Dyadic> Parameterization::value_of(const BoundaryElement& el) const {
  for (const auto& [e, v] : values)
    if (e == el) return v;
  return std::nullopt;
}

std::vector<BoundaryElement> Parameterization::order() const {
  std::vector<BoundaryElement> out;
  out.reserve(values.size());
  for (const auto& [e, v] : values) out.push_back(e);
  return out;
}

Parameterization parameter_function(const OrderedArc& arc, const DyadicNet& net) {
  Parameterization p;
  for (const BoundaryElement& x : arc.elements()) {
    const std::size_t px = arc.position(x);
    Dyadic value = Dyadic::one();
    std::optional<Dyadic> previous;
    for (const auto& [t, z] : net.assignments) {
      if (px < arc.position(z)) {
        if (!previous) throw IncompleteNetError("no net value below " + x.label());
        value = *previous;
        break;
      }
      previous = t;
    }
    p.values.emplace_back(x, value);
  }
  std::sort(p.values.begin(), p.values.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  for (std::size_t i = 0; i + 1 < p.values.size(); ++i) {
    if (p.values[i].second == p.values[i + 1].second) {
      throw IncompleteNetError("net does not separate " + p.values[i].first.label() + " and " +
                               p.values[i + 1].first.label());
    }
    if (arc.position(p.values[i].first) >= arc.position(p.values[i + 1].first)) {
      throw InvariantViolation("parameter values are not monotone in the arc order");
    }
  }
  if (p.value_of(arc.a()) != Dyadic::zero() || p.value_of(arc.b()) != Dyadic::one()) {
    throw InvariantViolation("parameterization does not send a to 0 and b to 1");
  }
  return p;
}

Parameterization assemble_circle(const JordanSplit& split, const Parameterization& p1, const Parameterization& p2) {
  for (const Parameterization* p : {&p1, &p2}) {
    if (p->value_of(split.z1) != Dyadic::zero() || p->value_of(split.z2) != Dyadic::one()) {
      throw ContractViolation("assemble_circle: endpoint values differ from 0 and 1");
    }
  }
  Parameterization c;
  c.cyclic = true;
  for (const auto& [e, v] : p1.values) c.values.emplace_back(e, half(v));
  for (const auto& [e, v] : p2.values) {
    if (e == split.z1 || e == split.z2) continue;
    c.values.emplace_back(e, complement(half(v)));
  }
  std::sort(c.values.begin(), c.values.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  for (std::size_t i = 0; i + 1 < c.values.size(); ++i) {
    if (c.values[i].second == c.values[i + 1].second) throw InvariantViolation("circle map is not injective");
  }
  if (c.values.size() != split.k1.size() + split.k2.size() - 2) {
    throw InvariantViolation("circle map does not cover the boundary");
  }
  return c;
}

std::vector<DecayStep> refinement_decay(const CubicalSet& set, ArcSide side, int levels) {
  std::vector<DecayStep> out;
  CubicalSet current = set;
  for (int k = 0; k <= levels; ++k) {
    if (k > 0) current = subdivide(current);
    const auto [z1, z2] = choose_endpoints(current);
    const OrderedArc arc(jordan_split(current, z1, z2), side);
    const DyadicNet net = build_net(arc);
    DecayStep step;
    step.subdivisions = k;
    step.level_diameters = net.level_diameters;
    step.terminal_original_units = std::ldexp(net.level_diameters.back().value(), -k);
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace diskcert
