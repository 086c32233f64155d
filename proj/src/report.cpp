#include "report.hpp"

#include <json.hpp>
#include <sstream>

#include "catalog.hpp"
#include "decide.hpp"
#include "error.hpp"

namespace kf {

namespace {

using Json = nlohmann::ordered_json;

std::string chain_str(const Chain& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, coeff] : c.coeffs) {
    if (!first) os << ' ';
    first = false;
    os << c.carrier->cell(c.degree, idx).str() << ':' << coeff.str();
  }
  if (first) os << "0";
  return os.str();
}

Json chain_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& [idx, coeff] : c.coeffs) {
    const Simplex& s = c.carrier->cell(c.degree, idx);
    Json cell = Json::array();
    for (int i = 0; i <= s.k; ++i) cell.push_back(s.v[i]);
    out.push_back(Json{{"cell", cell}, {"coeff", coeff.str()}});
  }
  return out;
}

std::string coords_str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? " " : "") << v[i].str();
  os << ']';
  return os.str();
}

Json coords_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(x.str());
  return out;
}

Json torsion_json(const std::vector<Int>& t) { return coords_json(t); }

std::string offsets_str(const OffsetSolutionSet& o) { return o.str(); }

Json offsets_json(const OffsetSolutionSet& o) {
  Json j;
  switch (o.kind) {
    case OffsetSolutionSet::Kind::Empty:
      j["kind"] = "empty";
      break;
    case OffsetSolutionSet::Kind::All:
      j["kind"] = "all";
      break;
    case OffsetSolutionSet::Kind::Affine:
      j["kind"] = "affine";
      j["base"] = o.base.str();
      j["period"] = o.period.str();
      break;
  }
  return j;
}

const std::vector<int>& need_knot(const Document& doc,
                                  const std::string& name) {
  const auto* loop = doc.find_knot(name);
  if (!loop) fail(ErrorKind::NotFound, "no knot named '" + name + "'");
  return *loop;
}

}  // namespace

ReportResult report_validate(const Document& doc) {
  ValidationReport rep = validate(*doc.complex);
  std::ostringstream os;
  os << "vertices: " << doc.complex->size(0) << "\n";
  os << "edges: " << doc.complex->size(1) << "\n";
  os << "triangles: " << doc.complex->size(2) << "\n";
  os << "tetrahedra: " << doc.complex->size(3) << "\n";
  os << "euler_characteristic: " << doc.complex->euler_characteristic()
     << "\n";
  os << "pseudomanifold: " << (rep.is_pseudomanifold ? "yes" : "no") << "\n";
  os << "orientable: " << (rep.is_orientable ? "yes" : "no") << "\n";
  os << "connected: " << (rep.connected ? "yes" : "no") << "\n";
  os << "vertex_links: " << (rep.links_ok() ? "ok" : "failed") << "\n";
  if (!rep.bad_simplices.empty()) {
    os << "bad_simplices:";
    for (const auto& s : rep.bad_simplices) os << ' ' << s.str();
    os << "\n";
  }
  if (!rep.vertex_link_failures.empty()) {
    os << "bad_vertex_links:";
    for (int v : rep.vertex_link_failures) os << ' ' << v;
    os << "\n";
  }
  if (!rep.orientation_obstruction.empty())
    os << "orientation_obstruction: " << rep.orientation_obstruction << "\n";
  os << "valid: " << (rep.ok() ? "yes" : "no") << "\n";

  Json j;
  j["vertices"] = doc.complex->size(0);
  j["edges"] = doc.complex->size(1);
  j["triangles"] = doc.complex->size(2);
  j["tetrahedra"] = doc.complex->size(3);
  j["euler_characteristic"] = doc.complex->euler_characteristic();
  j["pseudomanifold"] = rep.is_pseudomanifold;
  j["orientable"] = rep.is_orientable;
  j["connected"] = rep.connected;
  j["components"] = rep.components;
  Json bad = Json::array();
  for (const auto& s : rep.bad_simplices) bad.push_back(s.str());
  j["bad_simplices"] = bad;
  j["bad_vertex_links"] = rep.vertex_link_failures;
  j["valid"] = rep.ok();
  return {os.str(), j.dump(2), rep.ok()};
}

ReportResult report_homology(const Document& doc, int degree, bool mod2,
                             bool rel_boundary) {
  auto model = doc.to_model();
  Ring ring = mod2 ? Ring::Z2 : Ring::Z;
  GroupPtr G = model->homology(degree, ring, rel_boundary);
  GroupShape shape = shape_of(G);
  std::string ring_name = mod2 ? "Z2" : "Z";
  std::string label = "H" + std::to_string(degree) + "(" + ring_name +
                      (rel_boundary ? ", rel boundary" : "") + ")";

  std::ostringstream os;
  os << "degree: " << degree << "\n";
  os << "ring: " << ring_name << "\n";
  os << "relative: " << (rel_boundary ? "yes" : "no") << "\n";
  os << label << ": betti " << G->betti;
  if (ring == Ring::Z) {
    os << " torsion [";
    for (std::size_t i = 0; i < G->torsion.size(); ++i)
      os << (i ? " " : "") << G->torsion[i].str();
    os << "]";
  }
  os << "\n";
  os << "group: " << shape.str(ring) << "\n";

  Json j;
  j["degree"] = degree;
  j["ring"] = ring_name;
  j["relative"] = rel_boundary;
  j["betti"] = G->betti;
  j["torsion"] = torsion_json(G->torsion);
  j["group"] = shape.str(ring);
  return {os.str(), j.dump(2), true};
}

ReportResult report_decide(const Document& doc, const std::string& knot,
                           bool cross) {
  auto model = doc.to_model();
  EdgeLoop K = make_edge_loop(*model, need_knot(doc, knot));
  Verdict v = decide(*model, K);

  std::ostringstream os;
  os << "knot: " << knot << "\n";
  os << "verdict: " << outcome_name(v.outcome) << "\n";
  os << "h1: " << v.h1_shape.str(Ring::Z) << "\n";
  os << "h1_mod2: " << v.h1_mod2_shape.str(Ring::Z2) << "\n";
  os << "h1_locally_finite: " << v.locfin_shape.str(Ring::Z) << "\n";
  os << "kappa: " << coords_str(v.kappa_coords) << "\n";
  os << "kappa2: " << coords_str(v.kappa2_coords) << "\n";
  os << "locally_finite_class: " << coords_str(v.locfin_coords) << "\n";
  os << "knot_cycle: " << chain_str(v.knot_cycle) << "\n";

  Json j;
  j["knot"] = knot;
  j["verdict"] = outcome_name(v.outcome);
  j["h1"] = v.h1_shape.str(Ring::Z);
  j["h1_mod2"] = v.h1_mod2_shape.str(Ring::Z2);
  j["h1_locally_finite"] = v.locfin_shape.str(Ring::Z);
  j["kappa"] = coords_json(v.kappa_coords);
  j["kappa2"] = coords_json(v.kappa2_coords);
  j["locally_finite_class"] = coords_json(v.locfin_coords);
  j["knot_cycle"] = chain_json(v.knot_cycle);

  if (cross && v.outcome != Outcome::PreconditionFailed) {
    CrossCheckReport rep = cross_check(*model, K);
    os << "cross_check: pass\n";
    Json items = Json::array();
    for (const auto& item : rep.items) {
      os << "  " << item.name << ": "
         << (item.applicable ? (item.pass ? "pass" : "FAIL") : "n/a");
      if (!item.detail.empty()) os << " (" << item.detail << ")";
      os << "\n";
      items.push_back(Json{{"name", item.name},
                           {"applicable", item.applicable},
                           {"pass", item.pass},
                           {"detail", item.detail}});
    }
    if (rep.offsets) {
      os << "offsets: " << offsets_str(*rep.offsets) << "\n";
      j["offsets"] = offsets_json(*rep.offsets);
    }
    j["cross_check"] = items;
  } else if (cross) {
    os << "cross_check: skipped (precondition failed)\n";
    j["cross_check"] = "skipped";
  }
  return {os.str(), j.dump(2), true};
}

ReportResult report_exterior(const Document& doc, const std::string& knot) {
  auto model = doc.to_model();
  EdgeLoop K = make_edge_loop(*model, need_knot(doc, knot));
  ExteriorData E = build_exterior(*model, K);
  OffsetSolutionSet offs = preferred_offsets(E);
  GroupPtr h1e = E.h1_exterior(Ring::Z);
  GroupPtr h1e2 = E.h1_exterior(Ring::Z2);
  GroupPtr rel = E.h1_rel_outer();

  std::ostringstream os;
  os << "knot: " << knot << "\n";
  os << "subdivisions: " << E.subdivisions << "\n";
  os << "neighborhood_tets: " << E.nbhd.cells[3].size() << "\n";
  os << "exterior_tets: " << E.exterior->complex()->size(3) << "\n";
  os << "torus_vertices: " << E.torus_complex->size(0) << "\n";
  os << "torus_euler_characteristic: "
     << E.torus_complex->euler_characteristic() << "\n";
  os << "h1_exterior: " << shape_of(h1e).str(Ring::Z) << "\n";
  os << "h1_exterior_mod2: " << shape_of(h1e2).str(Ring::Z2) << "\n";
  os << "h1_exterior_rel_outer: " << shape_of(rel).str(Ring::Z) << "\n";
  os << "meridian: " << chain_str(E.meridian) << "\n";
  os << "longitude0: " << chain_str(E.longitude0) << "\n";
  os << "preferred_offsets: " << offsets_str(offs) << "\n";

  Json j;
  j["knot"] = knot;
  j["subdivisions"] = E.subdivisions;
  j["neighborhood_tets"] = E.nbhd.cells[3].size();
  j["exterior_tets"] = E.exterior->complex()->size(3);
  j["torus_vertices"] = E.torus_complex->size(0);
  j["torus_euler_characteristic"] =
      E.torus_complex->euler_characteristic();
  j["h1_exterior"] = shape_of(h1e).str(Ring::Z);
  j["h1_exterior_mod2"] = shape_of(h1e2).str(Ring::Z2);
  j["h1_exterior_rel_outer"] = shape_of(rel).str(Ring::Z);
  j["meridian"] = chain_json(E.meridian);
  j["longitude0"] = chain_json(E.longitude0);
  j["preferred_offsets"] = offsets_json(offs);
  return {os.str(), j.dump(2), true};
}

Document fixture_document(const CatalogSpec& spec) {
  Fixture f = generate(spec);
  Document doc;
  doc.complex = f.model->complex();
  doc.orientation = f.model->orientation();
  doc.knots.push_back({selector_to_string(spec.knot), f.knot.vertices});
  doc.meta.push_back({"family", family_to_string(spec.family)});
  doc.meta.push_back({"fixture", f.name});
  doc.meta.push_back({"expect_h1", f.expect.h1.str(Ring::Z)});
  doc.meta.push_back(
      {"expect_h1_mod2", "Z2^" + std::to_string(f.expect.h1_mod2)});
  doc.meta.push_back({"expect_h1_rel", f.expect.h1_rel.str(Ring::Z)});
  doc.meta.push_back({"expect_verdict", outcome_name(f.expected_verdict)});
  return doc;
}

}  // namespace kf
