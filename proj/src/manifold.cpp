#include "manifold.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace kf {

namespace {

// For each triangle, the tetrahedra containing it together with the face
// position (so the incidence sign is (-1)^position).
std::vector<std::vector<std::pair<int, int>>> triangle_cofaces(
    const SimplicialComplex& X) {
  std::vector<std::vector<std::pair<int, int>>> cof(X.size(2));
  for (int t = 0; t < X.size(3); ++t) {
    const Simplex& tet = X.cell(3, t);
    for (int i = 0; i <= 3; ++i) {
      int f = X.index_of(tet.face_omitting(i));
      cof[f].push_back({t, i});
    }
  }
  return cof;
}

// Boundary edges of a 2-complex (edges with exactly one triangle coface)
// form disjoint simple cycles?  Returns the number of cycles, or -1 when the
// structure is not a union of cycles.
int boundary_cycle_count(const SimplicialComplex& L) {
  std::vector<int> edge_cof(L.size(1), 0);
  for (int t = 0; t < L.size(2); ++t)
    for (auto [e, s] : L.boundary_of(2, t)) ++edge_cof[e];
  std::map<int, std::vector<int>> adj;  // vertex -> boundary-edge neighbors
  int boundary_edges = 0;
  for (int e = 0; e < L.size(1); ++e) {
    if (edge_cof[e] != 1) continue;
    ++boundary_edges;
    const Simplex& s = L.cell(1, e);
    adj[s.v[0]].push_back(s.v[1]);
    adj[s.v[1]].push_back(s.v[0]);
  }
  if (boundary_edges == 0) return 0;
  for (const auto& [v, nbrs] : adj)
    if (nbrs.size() != 2) return -1;
  // Count cycles by walking.
  std::map<int, bool> seen;
  int cycles = 0;
  for (const auto& [start, nbrs] : adj) {
    if (seen[start]) continue;
    ++cycles;
    int prev = -1, cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
  }
  return cycles;
}

// Disk or sphere test for a vertex link.
bool link_is_disk_or_sphere(const SimplicialComplex& L, bool expect_closed) {
  if (L.size(2) == 0) return false;
  if (component_count(L) != 1) return false;
  std::vector<int> edge_cof(L.size(1), 0);
  for (int t = 0; t < L.size(2); ++t)
    for (auto [e, s] : L.boundary_of(2, t)) ++edge_cof[e];
  bool closed = true;
  for (int e = 0; e < L.size(1); ++e) {
    if (edge_cof[e] > 2 || edge_cof[e] == 0) return false;
    if (edge_cof[e] == 1) closed = false;
  }
  // Every link vertex must lie on an edge (no isolated pieces).
  if (closed != expect_closed) return false;
  long long chi = L.euler_characteristic();
  if (closed) return chi == 2;
  return chi == 1 && boundary_cycle_count(L) == 1;
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "pseudomanifold: " << (is_pseudomanifold ? "yes" : "no")
     << ", orientable: " << (is_orientable ? "yes" : "no")
     << ", connected: " << (connected ? "yes" : "no")
     << " (components: " << components << ")"
     << ", vertex links: "
     << (vertex_link_failures.empty() ? "ok" : "failures");
  if (!bad_simplices.empty()) {
    os << "; bad cells:";
    for (std::size_t i = 0; i < bad_simplices.size() && i < 8; ++i)
      os << ' ' << bad_simplices[i].str();
  }
  if (!vertex_link_failures.empty()) {
    os << "; bad links at vertices:";
    for (std::size_t i = 0; i < vertex_link_failures.size() && i < 8; ++i)
      os << ' ' << vertex_link_failures[i];
  }
  if (!orientation_obstruction.empty())
    os << "; orientation obstruction: " << orientation_obstruction;
  return os.str();
}

ValidationReport validate(const SimplicialComplex& X) {
  ValidationReport rep;
  rep.components = component_count(X);
  rep.connected = rep.components == 1;

  if (X.size(3) == 0) {
    rep.is_pseudomanifold = false;
    return rep;
  }

  // Purity: every lower cell is a face of some tetrahedron.
  std::array<std::vector<char>, 3> covered;
  for (int k = 0; k <= 2; ++k) covered[k].assign(X.size(k), 0);
  for (int t = 0; t < X.size(3); ++t) {
    const Simplex& tet = X.cell(3, t);
    int n = tet.size();
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      Simplex f;
      int w = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) f.v[w++] = tet.v[i];
      f.k = static_cast<std::int8_t>(w - 1);
      covered[f.k][X.index_of(f)] = 1;
    }
  }
  bool pure = true;
  for (int k = 0; k <= 2; ++k)
    for (int i = 0; i < X.size(k); ++i)
      if (!covered[k][i]) {
        pure = false;
        rep.bad_simplices.push_back(X.cell(k, i));
      }

  auto cof = triangle_cofaces(X);
  bool coface_ok = true;
  for (int f = 0; f < X.size(2); ++f) {
    if (cof[f].size() < 1 || cof[f].size() > 2) {
      coface_ok = false;
      rep.bad_simplices.push_back(X.cell(2, f));
    }
  }
  rep.is_pseudomanifold = pure && coface_ok;
  if (!rep.is_pseudomanifold) return rep;

  // Vertex links: sphere for interior vertices, disk for boundary vertices.
  // Link cells are gathered in one pass over the complex.
  auto bnd = boundary_subcomplex(X);
  std::vector<bool> on_boundary(X.vertex_count(), false);
  for (int idx : bnd.cells[0]) on_boundary[X.cell(0, idx).v[0]] = true;
  std::vector<std::vector<Simplex>> link_cells(X.vertex_count());
  for (int k = 1; k <= 3; ++k)
    for (int idx = 0; idx < X.size(k); ++idx) {
      const Simplex& s = X.cell(k, idx);
      for (int i = 0; i <= s.k; ++i) {
        Simplex f;
        int w = 0;
        for (int j = 0; j <= s.k; ++j)
          if (j != i) f.v[w++] = s.v[j];
        f.k = static_cast<std::int8_t>(s.k - 1);
        link_cells[s.v[i]].push_back(f);
      }
    }
  for (int i = 0; i < X.size(0); ++i) {
    int v = X.cell(0, i).v[0];
    auto link = SimplicialComplex::build(X.vertex_count(), link_cells[v]);
    if (!link_is_disk_or_sphere(*link, !on_boundary[v]))
      rep.vertex_link_failures.push_back(v);
  }

  try {
    orient(X);
    rep.is_orientable = true;
  } catch (const Error& e) {
    rep.is_orientable = false;
    rep.orientation_obstruction = e.what();
  }
  return rep;
}

std::vector<int> orient(const SimplicialComplex& X, int first_sign) {
  int T = X.size(3);
  auto cof = triangle_cofaces(X);
  for (int f = 0; f < X.size(2); ++f)
    if (cof[f].size() > 2)
      fail(ErrorKind::InvalidComplex,
           "orient: face " + X.cell(2, f).str() +
               " is shared by more than two tetrahedra");
  std::vector<int> sign(T, 0);
  std::vector<int> parent(T, -1);
  for (int seed = 0; seed < T; ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = first_sign;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      const Simplex& tet = X.cell(3, t);
      for (int i = 0; i <= 3; ++i) {
        int f = X.index_of(tet.face_omitting(i));
        for (auto [u, j] : cof[f]) {
          if (u == t) continue;
          // Coherence: induced face orientations must cancel.
          int needed = -sign[t] * ((i + j) % 2 == 0 ? 1 : -1);
          if (sign[u] == 0) {
            sign[u] = needed;
            parent[u] = t;
            queue.push_back(u);
          } else if (sign[u] != needed) {
            // Obstructing dual cycle: paths to the BFS roots plus this face.
            std::ostringstream os;
            os << "non-orientable: conflicting orientations at face "
               << X.cell(2, f).str() << "; tetrahedron cycle:";
            std::vector<int> side;
            for (int w = t; w != -1; w = parent[w]) side.push_back(w);
            std::reverse(side.begin(), side.end());
            for (int w : side) os << ' ' << w;
            side.clear();
            for (int w = u; w != -1; w = parent[w]) side.push_back(w);
            for (int w : side) os << ' ' << w;
            fail(ErrorKind::InvalidComplex, os.str());
          }
        }
      }
    }
  }
  return sign;
}

SubcomplexRef boundary_subcomplex(const SimplicialComplex& X) {
  auto cof = triangle_cofaces(X);
  std::vector<Simplex> cells;
  for (int f = 0; f < X.size(2); ++f)
    if (cof[f].size() == 1) cells.push_back(X.cell(2, f));
  return closure_ref(X, cells);
}

CompactModel3::Ptr CompactModel3::build(SimplicialComplex::Ptr X,
                                        int first_sign) {
  auto M = std::make_shared<CompactModel3>();
  M->complex_ = X;
  M->report_ = validate(*X);
  if (!M->report_.ok())
    fail(ErrorKind::InvalidComplex,
         "complex is not a valid oriented 3-manifold model: " +
             M->report_.summary());
  M->orientation_ = orient(*X, first_sign);
  M->boundary_ref_ = boundary_subcomplex(*X);
  M->boundary_ = extract(*X, M->boundary_ref_);
  M->on_boundary_.assign(X->vertex_count(), false);
  for (int idx : M->boundary_ref_.cells[0])
    M->on_boundary_[X->cell(0, idx).v[0]] = true;
  return M;
}

GroupPtr CompactModel3::homology(int k, Ring ring, bool rel_boundary) const {
  std::tuple<int, int, int> key{k, static_cast<int>(ring),
                                rel_boundary ? 1 : 0};
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  std::optional<SubcomplexRef> A;
  if (rel_boundary) A = boundary_ref_;
  GroupPtr G = homology_group(complex_, A, k, ring);
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto [it, inserted] = cache_.try_emplace(key, G);
  return it->second;
}

GroupPtr locally_finite_h1(const CompactModel3& M, Ring ring) {
  return M.homology(1, ring, true);
}

}  // namespace kf
