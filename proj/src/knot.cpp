#include "knot.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace kf {

EdgeLoop make_edge_loop(const CompactModel3& M, std::vector<int> vertices) {
  const auto& X = *M.complex();
  if (vertices.size() < 3)
    fail(ErrorKind::BadArgument, "edge loop needs at least 3 vertices");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::BadArgument, "edge loop is not simple (repeated vertex)");
  int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i) {
    int a = vertices[i], b = vertices[(i + 1) % n];
    if (a < 0 || a >= X.vertex_count())
      fail(ErrorKind::BadArgument, "edge loop vertex out of range");
    if (X.index_of(Simplex({a, b})) < 0)
      fail(ErrorKind::BadArgument, "edge loop uses a missing edge " +
                                       Simplex({a, b}).str());
    if (!M.vertex_interior(a))
      fail(ErrorKind::BadArgument,
           "edge loop touches the boundary at vertex " + std::to_string(a));
  }
  return EdgeLoop{std::move(vertices)};
}

EdgeLoop reversed(const EdgeLoop& K) {
  EdgeLoop out = K;
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

Chain loop_cycle(SimplicialComplex::Ptr X, const EdgeLoop& K, Ring ring) {
  return cycle_of_vertex_loop(std::move(X), K.vertices, ring);
}

HomologyClass knot_class(const CompactModel3& M, const EdgeLoop& K,
                         Ring ring) {
  Chain z = loop_cycle(M.complex(), K, ring);
  return class_of(z, M.homology(1, ring, false));
}

bool is_null_locally_finite(const CompactModel3& M, const EdgeLoop& K) {
  Chain z = loop_cycle(M.complex(), K, Ring::Z);
  return class_of(z, M.homology(1, Ring::Z, true)).is_zero();
}

bool OffsetSolutionSet::contains(const Int& k) const {
  switch (kind) {
    case Kind::Empty:
      return false;
    case Kind::All:
      return true;
    case Kind::Affine:
      if (period == 0) return k == base;
      return (k - base) % period == 0;
  }
  return false;
}

std::string OffsetSolutionSet::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Empty:
      os << "empty";
      break;
    case Kind::All:
      os << "all";
      break;
    case Kind::Affine:
      if (period == 0)
        os << "unique k = " << base;
      else
        os << "k = " << base << " + " << period << " t";
      break;
  }
  return os.str();
}

struct ExteriorData::Cache {
  std::mutex mu;
  GroupPtr ext_z, ext_z2, rel_z, rel_z2;
};

GroupPtr ExteriorData::h1_exterior(Ring ring) const {
  std::lock_guard<std::mutex> lock(cache->mu);
  GroupPtr& slot = ring == Ring::Z ? cache->ext_z : cache->ext_z2;
  if (!slot) slot = homology_group(exterior->complex(), std::nullopt, 1, ring);
  return slot;
}

GroupPtr ExteriorData::h1_rel_outer() const {
  return h1_rel_outer_ring(Ring::Z);
}

GroupPtr ExteriorData::h1_rel_outer_ring(Ring ring) const {
  std::lock_guard<std::mutex> lock(cache->mu);
  GroupPtr& slot = ring == Ring::Z ? cache->rel_z : cache->rel_z2;
  if (!slot)
    slot = homology_group(exterior->complex(), outer_in_ext, 1, ring);
  return slot;
}

namespace {

struct ExteriorAttempt {
  bool ok = false;
  std::string reason;
  ExteriorData data;
};

Chain relocate_chain(const Chain& c, SimplicialComplex::Ptr target) {
  Chain out{target, c.degree, c.ring, {}};
  for (const auto& [idx, coeff] : c.coeffs) {
    int tidx = target->index_of(c.carrier->cell(c.degree, idx));
    if (tidx < 0)
      fail(ErrorKind::Internal, "chain cell missing from target complex");
    out.coeffs.push_back({tidx, coeff});
  }
  out.normalize();
  return out;
}

ExteriorAttempt try_exterior(CompactModel3::Ptr sub, std::vector<int> loop,
                             int subdivisions) {
  ExteriorAttempt at;
  ExteriorData& E = at.data;
  E.subdivided = sub;
  E.subdivisions = subdivisions;
  E.knot_loop = loop;
  E.cache = std::make_shared<ExteriorData::Cache>();
  auto X = sub->complex();

  // N(K) = closed star of the knot.
  std::vector<Simplex> loop_cells;
  int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i)
    loop_cells.push_back(Simplex({loop[i], loop[(i + 1) % n]}));
  SubcomplexRef Kref = closure_ref(*X, loop_cells);
  E.nbhd = star_neighborhood(*X, Kref);

  // The star must avoid the model boundary entirely.
  {
    const auto& b = sub->boundary_ref();
    for (int d = 0; d <= 3; ++d) {
      std::vector<int> inter;
      std::set_intersection(E.nbhd.cells[d].begin(), E.nbhd.cells[d].end(),
                            b.cells[d].begin(), b.cells[d].end(),
                            std::back_inserter(inter));
      if (!inter.empty()) {
        at.reason = "knot neighborhood touches the model boundary";
        return at;
      }
    }
  }

  E.nbhd_complex = extract(*X, E.nbhd);
  if (E.nbhd_complex->euler_characteristic() != 0) {
    at.reason = "neighborhood Euler characteristic is not 0";
    return at;
  }
  if (component_count(*E.nbhd_complex) != 1) {
    at.reason = "neighborhood is disconnected";
    return at;
  }
  GroupPtr h1n = homology_group(E.nbhd_complex, std::nullopt, 1, Ring::Z);
  if (h1n->betti != 1 || !h1n->torsion.empty()) {
    at.reason = "neighborhood H1 is not Z";
    return at;
  }

  // Exterior: closure of the complement tetrahedra.
  std::vector<std::uint8_t> in_nbhd_tet(X->size(3), 0);
  for (int idx : E.nbhd.cells[3]) in_nbhd_tet[idx] = 1;
  std::vector<Simplex> ext_tets;
  for (int t = 0; t < X->size(3); ++t)
    if (!in_nbhd_tet[t]) ext_tets.push_back(X->cell(3, t));
  if (ext_tets.empty()) {
    at.reason = "exterior is empty";
    return at;
  }
  auto ext_complex = SimplicialComplex::build(X->vertex_count(), ext_tets);
  if (static_cast<int>(ext_tets.size()) +
          static_cast<int>(E.nbhd.cells[3].size()) != X->size(3))
    fail(ErrorKind::Internal, "exterior and neighborhood do not partition");

  // Frontier torus: triangles lying in both.
  std::vector<Simplex> torus_tris;
  for (int f : E.nbhd.cells[2]) {
    const Simplex& s = X->cell(2, f);
    if (ext_complex->index_of(s) >= 0) torus_tris.push_back(s);
  }
  auto torus = SimplicialComplex::build(X->vertex_count(), torus_tris);
  if (torus->euler_characteristic() != 0 || component_count(*torus) != 1) {
    at.reason = "frontier is not a torus";
    return at;
  }
  {
    // Closed surface check: each edge in exactly two frontier triangles.
    std::vector<int> ecof(torus->size(1), 0);
    for (int t = 0; t < torus->size(2); ++t)
      for (auto [e, s] : torus->boundary_of(2, t)) ++ecof[e];
    for (int e = 0; e < torus->size(1); ++e)
      if (ecof[e] != 2) {
        at.reason = "frontier surface is not closed";
        return at;
      }
  }

  try {
    E.exterior = CompactModel3::build(ext_complex);
  } catch (const Error& err) {
    at.reason = std::string("exterior validation failed: ") + err.what();
    return at;
  }
  E.torus_complex = torus;
  E.torus_in_ext = locate(*ext_complex, *torus);
  E.outer_in_ext = locate(*ext_complex, *sub->boundary_complex());

  // Meridian: primitive generator of ker(H1(torus) -> H1(N)).
  GroupPtr h1t = homology_group(torus, std::nullopt, 1, Ring::Z);
  if (h1t->betti != 2 || !h1t->torsion.empty()) {
    at.reason = "frontier H1 is not Z^2";
    return at;
  }
  IntMatrix phi = induced_map(h1t, h1n);  // 1 x 2
  Int c1 = phi.at(0, 0), c2 = phi.at(0, 1);
  if (int_gcd(c1, c2) != 1) {
    at.reason = "torus does not surject onto the neighborhood H1";
    return at;
  }
  Bezout bz = ext_gcd(c1, c2);  // c1 x + c2 y = 1

  // Orient the longitude with the knot: its image must be the class of K.
  Chain kcyc = cycle_of_vertex_loop(E.nbhd_complex, loop, Ring::Z);
  HomologyClass kcls = class_of(kcyc, h1n);
  Int s = kcls.coords[0];
  if (s != 1 && s != -1) {
    at.reason = "knot is not a core of its neighborhood";
    return at;
  }

  // lambda = (x, y), mu = (-c2, c1) in the torus basis; det(lambda, mu) = 1.
  Int lx = s * bz.x, ly = s * bz.y;
  Int mx = s * -c2, my = s * c1;
  Chain t1 = relocate_chain(h1t->basis[0], ext_complex);
  Chain t2 = relocate_chain(h1t->basis[1], ext_complex);
  E.longitude0 = chain_add(chain_scale(t1, lx), chain_scale(t2, ly));
  E.meridian = chain_add(chain_scale(t1, mx), chain_scale(t2, my));
  at.ok = true;
  return at;
}

}  // namespace

ExteriorData build_exterior(const CompactModel3& M, const EdgeLoop& K) {
  Subdivision sd1 = barycentric_subdivide(M.complex());
  std::vector<int> loop1 = sd1.map_vertex_loop(K.vertices);
  Subdivision sd2 = barycentric_subdivide(sd1.fine);
  std::vector<int> loop2 = sd2.map_vertex_loop(loop1);

  auto model2 = CompactModel3::build(sd2.fine);
  ExteriorAttempt at = try_exterior(model2, loop2, 2);
  if (at.ok) return std::move(at.data);

  Subdivision sd3 = barycentric_subdivide(sd2.fine);
  std::vector<int> loop3 = sd3.map_vertex_loop(loop2);
  auto model3 = CompactModel3::build(sd3.fine);
  ExteriorAttempt at3 = try_exterior(model3, loop3, 3);
  if (at3.ok) return std::move(at3.data);
  fail(ErrorKind::Internal,
       "knot neighborhood is not a solid torus after three subdivisions: " +
           at3.reason + " (second subdivision: " + at.reason + ")");
}

HomologyClass longitude_class(const ExteriorData& E, const Int& k,
                              const GroupPtr& G) {
  Chain lam = E.longitude0;
  Chain mu = E.meridian;
  if (G->ring == Ring::Z2) {
    lam = chain_mod2(lam);
    mu = chain_mod2(mu);
  }
  Chain c = chain_add(lam, chain_scale(mu, k));
  return class_of(c, G);
}

namespace {
Int mod_into(const Int& v, const Int& d) {
  Int r = v % d;
  if (r < 0) r += d;
  return r;
}
}  // namespace

OffsetSolutionSet solve_offset_equation(const GroupPtr& G,
                                        const HomologyClass& l,
                                        const HomologyClass& m) {
  using Kind = OffsetSolutionSet::Kind;
  bool have_unique = false;
  Int unique = 0;
  bool have_cong = false;
  Int cr = 0, cm = 1;  // k == cr (mod cm)

  auto merge_congruence = [&](const Int& r, const Int& mod) -> bool {
    if (mod == 1) return true;
    if (!have_cong) {
      have_cong = true;
      cr = mod_into(r, mod);
      cm = mod;
      return true;
    }
    Bezout bz = ext_gcd(cm, mod);
    Int diff = r - cr;
    if (diff % bz.g != 0) return false;
    Int lcm = cm / bz.g * mod;
    Int t = (diff / bz.g) * bz.x;
    Int merged = cr + cm * t;
    cm = lcm;
    cr = mod_into(merged, cm);
    return true;
  };

  // Free coordinates: l_i + k m_i = 0 exactly.
  for (int i = 0; i < G->betti; ++i) {
    const Int& li = l.coords[i];
    const Int& mi = m.coords[i];
    if (mi == 0) {
      if (li != 0) return {Kind::Empty, 0, 0};
      continue;
    }
    if (li % mi != 0) return {Kind::Empty, 0, 0};
    Int k = -li / mi;
    if (have_unique && unique != k) return {Kind::Empty, 0, 0};
    have_unique = true;
    unique = k;
  }
  // Torsion coordinates: m_j k == -l_j (mod d_j).
  for (std::size_t j = 0; j < G->torsion.size(); ++j) {
    const Int& d = G->torsion[j];
    Int lj = l.coords[G->betti + j];
    Int mj = m.coords[G->betti + j];
    if (mj % d == 0) {
      if (lj % d != 0) return {Kind::Empty, 0, 0};
      continue;
    }
    Int g = int_gcd(mj, d);
    if (lj % g != 0) return {Kind::Empty, 0, 0};
    Int dd = d / g;
    if (dd == 1) continue;
    Int mm = mod_into(mj / g, dd);
    Int rr = mod_into(-lj / g, dd);
    Bezout bz = ext_gcd(mm, dd);  // mm * x == 1 (mod dd)
    Int r = mod_into(rr * bz.x, dd);
    if (!merge_congruence(r, dd)) return {Kind::Empty, 0, 0};
  }

  if (have_unique) {
    if (have_cong && (unique - cr) % cm != 0) return {Kind::Empty, 0, 0};
    return {Kind::Affine, unique, 0};
  }
  if (have_cong) return {Kind::Affine, cr, cm};
  return {Kind::All, 0, 0};
}

OffsetSolutionSet preferred_offsets(const ExteriorData& E) {
  GroupPtr G = E.h1_rel_outer();
  if (G->trivial()) return {OffsetSolutionSet::Kind::All, 0, 0};
  HomologyClass l = class_of(E.longitude0, G);
  HomologyClass m = class_of(E.meridian, G);
  return solve_offset_equation(G, l, m);
}

OffsetSolutionSet preferred_offsets(const CompactModel3& M,
                                    const EdgeLoop& K) {
  return preferred_offsets(build_exterior(M, K));
}

}  // namespace kf
