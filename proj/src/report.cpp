#include "diskcert/report.hpp"

#include <json.hpp>
#include <sstream>

#include "diskcert/shape_io.hpp"

namespace diskcert {

namespace {

using nlohmann::json;

json labels(const std::vector<BoundaryElement>& els) {
  json out = json::array();
  for (const BoundaryElement& e : els) out.push_back(e.label());
  return out;
}

json criterion_json(const CriterionReport& c) {
  return {
      {"nonempty_interior", c.nonempty_interior},
      {"cond1_connected", c.cond1.connected},
      {"cond1_components", c.cond1.components},
      {"cond2_connected", c.cond2.connected},
      {"cond2_components", c.cond2.components},
      {"cond3_accessible", c.cond3()},
      {"cond3_failures", labels(c.cond3_failures)},
      {"cond4_accessible", c.cond4()},
      {"cond4_failures", labels(c.cond4_failures)},
      {"verdict", std::string(to_string(c.verdict))},
  };
}

json oracle_json(const OracleReport& o) {
  json j = {
      {"connected", o.connected},
      {"vertices", o.vertices},
      {"edges", o.edges},
      {"faces", o.faces},
      {"euler_characteristic", o.euler_characteristic},
      {"manifold_with_boundary", o.manifold_with_boundary},
      {"boundary_nonempty", o.boundary_nonempty},
      {"is_disk", o.is_disk},
  };
  j["boundary_cycle"] = o.boundary_cycle ? labels(*o.boundary_cycle) : json(nullptr);
  return j;
}

json arc_json(const ArcCertificate& a) {
  json diam = json::array();
  for (const Length& l : a.net.level_diameters) diam.push_back(l.to_string());
  json values = json::array();
  for (const auto& [e, v] : a.param.values) values.push_back({{"element", e.label()}, {"value", v.to_string()}});
  return {{"order", labels(a.order)}, {"depth", a.net.depth}, {"level_diameters", diam}, {"values", values}};
}

json certificate_json(const Certificate& c) {
  const JordanSplit& s = *c.split;
  json values = json::array();
  for (const auto& [e, v] : c.cyclic->values) {
    values.push_back({{"element", e.label()}, {"value", v.to_string()}, {"approx", v.to_double()}});
  }
  return {
      {"z1", s.z1.label()},
      {"z2", s.z2.label()},
      {"k1", arc_json(*c.k1)},
      {"k2", arc_json(*c.k2)},
      {"values", values},
      {"cyclic_order", labels(c.cyclic->order())},
      {"audits",
       {{"region_arcs", c.audits.region_arcs},
        {"crosscuts", c.audits.crosscuts},
        {"avoid_pairs", c.audits.avoid_pairs},
        {"order_pairs", c.audits.order_pairs}}},
  };
}

json crosscheck_json(const CrosscheckReport& r) {
  json dis = json::array();
  for (const Disagreement& d : r.disagreements) {
    dis.push_back({{"shape", d.shape}, {"criterion", std::string(to_string(d.criterion))}, {"oracle_disk", d.oracle_disk}});
  }
  return {
      {"width", r.width},
      {"height", r.height},
      {"extras", r.include_extras},
      {"shapes", r.shapes},
      {"extras_cases", r.extras_cases},
      {"oracle_disks", r.disk_count},
      {"disagreement_count", r.disagreements.size()},
      {"disagreements", dis},
  };
}

}  // namespace

std::string emit_report(const ReportDocument& doc) {
  json j = {{"tool", "diskcert"}, {"version", kToolVersion}, {"command", doc.command}};
  if (doc.input) {
    j["input"] = {{"digest", shape_digest(*doc.input)},
                  {"width", doc.input->width()},
                  {"height", doc.input->height()},
                  {"cells", doc.input->cells().size()},
                  {"extra_edges", doc.input->extra_edges().size()},
                  {"extra_vertices", doc.input->extra_vertices().size()}};
  }
  if (doc.criterion) j["criterion"] = criterion_json(*doc.criterion);
  if (doc.oracle) j["oracle"] = oracle_json(*doc.oracle);
  if (doc.criterion && doc.oracle) j["agreement"] = (doc.criterion->verdict == Verdict::disk) == doc.oracle->is_disk;
  if (doc.certificate && doc.certificate->split) j["parameterization"] = certificate_json(*doc.certificate);
  if (doc.crosscheck) j["crosscheck"] = crosscheck_json(*doc.crosscheck);
  if (doc.error) j["error"] = *doc.error;
  if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
  return j.dump();
}

std::string emit_text(const ReportDocument& doc) {
  std::ostringstream out;
  if (doc.input) {
    out << "input      " << doc.input->width() << "x" << doc.input->height() << ", " << doc.input->cells().size()
        << " cells, digest " << shape_digest(*doc.input) << "\n";
  }
  if (doc.criterion) {
    const CriterionReport& c = *doc.criterion;
    out << "verdict    " << to_string(c.verdict) << "\n";
    out << "interior   " << (c.nonempty_interior ? "nonempty" : "empty") << "\n";
    out << "cond1      " << (c.cond1.connected ? "ok" : "FAIL") << " (" << c.cond1.components
        << " interior components)\n";
    out << "cond2      " << (c.cond2.connected ? "ok" : "FAIL") << " (" << c.cond2.components
        << " complement components)\n";
    out << "cond3      " << (c.cond3() ? "ok" : "FAIL");
    for (const auto& e : c.cond3_failures) out << " [" << e.label() << "]";
    out << "\ncond4      " << (c.cond4() ? "ok" : "FAIL");
    for (const auto& e : c.cond4_failures) out << " [" << e.label() << "]";
    out << "\n";
  }
  if (doc.oracle) {
    const OracleReport& o = *doc.oracle;
    out << "oracle     " << (o.is_disk ? "disk" : "not disk") << " (V=" << o.vertices << " E=" << o.edges
        << " F=" << o.faces << " chi=" << o.euler_characteristic
        << (o.manifold_with_boundary ? ", manifold" : ", not manifold") << ")\n";
  }
  if (doc.certificate && doc.certificate->split) {
    const Certificate& c = *doc.certificate;
    out << "endpoints  " << c.split->z1.label() << " / " << c.split->z2.label() << "\n";
    out << "arcs       K1 " << c.k1->order.size() << " elements (depth " << c.k1->net.depth << "), K2 "
        << c.k2->order.size() << " elements (depth " << c.k2->net.depth << ")\n";
    for (const auto& [e, v] : c.cyclic->values) out << "  " << v.to_string() << "\t" << e.label() << "\n";
  }
  if (doc.crosscheck) {
    const CrosscheckReport& r = *doc.crosscheck;
    out << "crosscheck " << r.width << "x" << r.height << ": " << r.shapes << " shapes";
    if (r.include_extras) out << " + " << r.extras_cases << " extras cases";
    out << ", " << r.disagreements.size() << " disagreements\n";
    for (const Disagreement& d : r.disagreements) {
      out << "--- criterion " << to_string(d.criterion) << ", oracle " << (d.oracle_disk ? "disk" : "not disk")
          << "\n"
          << d.shape;
    }
  }
  if (doc.error) out << "error      " << *doc.error << "\n";
  if (doc.timing_ms) out << "time       " << *doc.timing_ms << " ms\n";
  return out.str();
}

}  // namespace diskcert
