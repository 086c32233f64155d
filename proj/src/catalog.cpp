#include "catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace kf {

namespace {

std::string spec_suffix(const CatalogSpec& s) {
  std::ostringstream os;
  switch (s.family) {
    case Family::Handlebody:
      os << "(" << s.genus << ")";
      break;
    case Family::LensPunctured:
      os << "(" << s.p << "," << s.q << ")";
      break;
    default:
      break;
  }
  os << "/" << selector_to_string(s.knot);
  switch (s.knot) {
    case KnotSelector::CorePower:
      os << "(" << s.n << ")";
      break;
    case KnotSelector::HandleCore:
      os << "(" << s.handle << ")";
      break;
    default:
      break;
  }
  return os.str();
}

}  // namespace

std::string CatalogSpec::name() const {
  return family_to_string(family) + spec_suffix(*this);
}

Family family_from_string(const std::string& s) {
  if (s == "ball") return Family::Ball;
  if (s == "solid_torus") return Family::SolidTorus;
  if (s == "thickened_torus") return Family::ThickenedTorus;
  if (s == "handlebody") return Family::Handlebody;
  if (s == "lens_punctured") return Family::LensPunctured;
  if (s == "s1xs2_punctured") return Family::S1xS2Punctured;
  fail(ErrorKind::BadArgument, "unknown family: " + s);
}

KnotSelector selector_from_string(const std::string& s) {
  if (s == "core") return KnotSelector::Core;
  if (s == "core_power") return KnotSelector::CorePower;
  if (s == "contractible") return KnotSelector::Contractible;
  if (s == "torsion_generator") return KnotSelector::TorsionGenerator;
  if (s == "handle_core") return KnotSelector::HandleCore;
  fail(ErrorKind::BadArgument, "unknown knot selector: " + s);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::Ball:
      return "ball";
    case Family::SolidTorus:
      return "solid_torus";
    case Family::ThickenedTorus:
      return "thickened_torus";
    case Family::Handlebody:
      return "handlebody";
    case Family::LensPunctured:
      return "lens_punctured";
    case Family::S1xS2Punctured:
      return "s1xs2_punctured";
  }
  return "?";
}

std::string selector_to_string(KnotSelector k) {
  switch (k) {
    case KnotSelector::Core:
      return "core";
    case KnotSelector::CorePower:
      return "core_power";
    case KnotSelector::Contractible:
      return "contractible";
    case KnotSelector::TorsionGenerator:
      return "torsion_generator";
    case KnotSelector::HandleCore:
      return "handle_core";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Base surfaces.

Base2D disk_with_inner_triangle() {
  // Interior triangle 0,1,2 surrounded by boundary triangle 3,4,5.
  Base2D b;
  b.n = 6;
  b.tris = {{0, 1, 2}, {3, 4, 0}, {4, 0, 1}, {4, 5, 1},
            {5, 1, 2}, {5, 3, 2}, {3, 0, 2}};
  return b;
}

Base2D disk_with_inner_pentagon() {
  // Interior ring 0..4 (fanned from 0), boundary pentagon 5..9.
  Base2D b;
  b.n = 10;
  b.tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}};
  for (int j = 0; j < 5; ++j) {
    int bj = 5 + j, bj1 = 5 + (j + 1) % 5;
    int rj = j, rj1 = (j + 1) % 5;
    b.tris.push_back({bj, rj, rj1});
    b.tris.push_back({bj, bj1, rj1});
  }
  return b;
}

Base2D cone_disk(int rim) {
  if (rim < 3) fail(ErrorKind::BadArgument, "cone_disk needs rim >= 3");
  Base2D b;
  b.n = rim + 1;
  for (int i = 1; i <= rim; ++i)
    b.tris.push_back({0, i, i % rim + 1});
  return b;
}

Base2D torus_seven_vertex() {
  Base2D b;
  b.n = 7;
  for (int i = 0; i < 7; ++i) {
    b.tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
    b.tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return b;
}

Base2D octahedron_sphere() {
  // 0 = north, 1..4 equator, 5 = south.
  Base2D b;
  b.n = 6;
  for (int i = 1; i <= 4; ++i) {
    int j = i % 4 + 1;
    b.tris.push_back({0, i, j});
    b.tris.push_back({5, i, j});
  }
  return b;
}

SimplicialComplex::Ptr layered_product(const Base2D& base, int layers,
                                       bool cyclic,
                                       const std::vector<int>& twist) {
  if (layers < (cyclic ? 3 : 2))
    fail(ErrorKind::BadArgument, "layered_product: too few layers");
  int n = base.n;
  auto vid = [&](int v, int layer) { return layer * n + v; };
  std::vector<Simplex> tets;
  int slabs = cyclic ? layers : layers - 1;
  for (int s = 0; s < slabs; ++s) {
    int bot = s;
    int top = (s + 1) % layers;
    bool wrap = cyclic && s == layers - 1;
    auto top_v = [&](int v) {
      if (wrap && !twist.empty()) return twist[v];
      return v;
    };
    for (auto tri : base.tris) {
      std::array<int, 3> t = tri;
      std::sort(t.begin(), t.end());
      int b0 = vid(t[0], bot), b1 = vid(t[1], bot), b2 = vid(t[2], bot);
      int t0 = vid(top_v(t[0]), top), t1 = vid(top_v(t[1]), top),
          t2 = vid(top_v(t[2]), top);
      tets.push_back(Simplex({b0, b1, b2, t2}));
      tets.push_back(Simplex({b0, b1, t1, t2}));
      tets.push_back(Simplex({b0, t0, t1, t2}));
    }
  }
  return SimplicialComplex::build(n * layers, tets);
}

// ---------------------------------------------------------------------------
// Generators.

namespace {

struct Generated {
  SimplicialComplex::Ptr complex;
  std::vector<int> knot;
};

Generated gen_ball(const CatalogSpec& spec) {
  if (spec.knot != KnotSelector::Contractible)
    fail(ErrorKind::BadArgument, "ball supports the contractible knot only");
  Base2D d = disk_with_inner_triangle();
  Generated g;
  g.complex = layered_product(d, 3, false);
  g.knot = {6 + 0, 6 + 1, 6 + 2};  // interior triangle at the middle layer
  return g;
}

Generated gen_solid_torus(const CatalogSpec& spec) {
  Base2D d = disk_with_inner_pentagon();
  Generated g;
  g.complex = layered_product(d, 3, true);
  int n = d.n;
  int w = 1;
  if (spec.knot == KnotSelector::Core) {
    w = 1;
  } else if (spec.knot == KnotSelector::CorePower) {
    if (spec.n == 0 || std::abs(spec.n) > 4)
      fail(ErrorKind::BadArgument, "core_power exponent must be in [-4,4]\\{0}");
    w = std::abs(spec.n);
  } else {
    fail(ErrorKind::BadArgument, "solid torus supports core / core_power");
  }
  std::vector<int> loop;
  if (w == 1) {
    loop = {0, n, 2 * n};  // vertical core through ring vertex 0
  } else {
    // Ascending strands at ring vertices 0..w-1, closed by a ring walk at
    // layer 0 (needs w <= 4 on the pentagon ring).
    for (int j = 0; j < w; ++j)
      for (int l = 0; l < 3; ++l) loop.push_back(l * n + j);
    for (int j = w; j < 5; ++j) loop.push_back(j);
  }
  if (spec.knot == KnotSelector::CorePower && spec.n < 0)
    std::reverse(loop.begin(), loop.end());
  g.knot = std::move(loop);
  return g;
}

Generated gen_thickened_torus(const CatalogSpec& spec) {
  if (spec.knot != KnotSelector::Core)
    fail(ErrorKind::BadArgument, "thickened torus supports the core knot");
  Base2D t = torus_seven_vertex();
  Generated g;
  g.complex = layered_product(t, 3, false);
  // Middle-layer cycle 0-1-2; on the seven-vertex torus this is a primitive
  // essential curve (steps +1, +1, -2 in the lattice labeling).
  g.knot = {7 + 0, 7 + 1, 7 + 2};
  return g;
}

Generated gen_handlebody(const CatalogSpec& spec) {
  if (spec.knot != KnotSelector::HandleCore)
    fail(ErrorKind::BadArgument, "handlebody supports handle_core knots");
  int g_genus = spec.genus;
  if (g_genus < 1 || g_genus > 4)
    fail(ErrorKind::BadArgument, "handlebody genus must be in [1,4]");
  if (spec.handle < 1 || spec.handle > g_genus)
    fail(ErrorKind::BadArgument, "handle index out of range");

  // Chain of square-cone solid tori; consecutive pieces share a boundary
  // square (two triangles with a common diagonal).
  Base2D sq = cone_disk(4);
  auto st = layered_product(sq, 3, true);  // local ids: layer*5 + v
  int per = 15;
  int total = per * g_genus;
  std::vector<int> repr(total);
  std::iota(repr.begin(), repr.end(), 0);
  auto find = [&](int a) {
    while (repr[a] != a) {
      repr[a] = repr[repr[a]];
      a = repr[a];
    }
    return a;
  };
  for (int k = 0; k + 1 < g_genus; ++k) {
    // Next piece's rim square over edge (1,2) glues onto this piece's rim
    // square over edge (3,4), layer pair (0,1).
    int off_k = k * per, off_n = (k + 1) * per;
    int pairs[4][2] = {{off_n + 1, off_k + 3},
                       {off_n + 2, off_k + 4},
                       {off_n + 5 + 1, off_k + 5 + 3},
                       {off_n + 5 + 2, off_k + 5 + 4}};
    for (auto& pr : pairs) repr[find(pr[0])] = find(pr[1]);
  }
  std::vector<int> compact(total, -1);
  int next_id = 0;
  for (int v = 0; v < total; ++v)
    if (find(v) == v) compact[v] = next_id++;
  auto global = [&](int piece, int local) {
    return compact[find(piece * per + local)];
  };

  std::vector<Simplex> tets;
  for (int k = 0; k < g_genus; ++k)
    for (int t = 0; t < st->size(3); ++t) {
      const Simplex& s = st->cell(3, t);
      tets.push_back(Simplex({global(k, s.v[0]), global(k, s.v[1]),
                              global(k, s.v[2]), global(k, s.v[3])}));
    }
  Generated out;
  out.complex = SimplicialComplex::build(next_id, tets);
  int piece = spec.handle - 1;
  out.knot = {global(piece, 0), global(piece, 5), global(piece, 10)};
  return out;
}

Generated gen_s1xs2(const CatalogSpec& spec) {
  Base2D oct = octahedron_sphere();
  auto closed = layered_product(oct, 3, true);
  // Puncture: remove the open star of vertex (north, layer 0) = 0.
  std::vector<Simplex> tets;
  for (int t = 0; t < closed->size(3); ++t) {
    const Simplex& s = closed->cell(3, t);
    if (!s.contains(0)) tets.push_back(s);
  }
  Generated g;
  g.complex = SimplicialComplex::build(closed->vertex_count(), tets);
  if (spec.knot == KnotSelector::Core) {
    g.knot = {5, 11, 17};  // the south-pole fiber
  } else if (spec.knot == KnotSelector::Contractible) {
    g.knot = {13, 14, 17};  // triangle (e1, e2, south) in layer 2
  } else {
    fail(ErrorKind::BadArgument,
         "s1xs2_punctured supports core / contractible");
  }
  return g;
}

// --- punctured lens space: solid torus plus a 2-handle ---

// Digital staircase of the vector (C q, R p) on the C x R grid torus;
// nullopt when the projection is not embedded.
std::optional<std::vector<std::pair<int, int>>> grid_curve(int C, int R,
                                                           int p, int q) {
  long long A = static_cast<long long>(C) * q;
  long long B = static_cast<long long>(R) * p;
  long long N = A + B;
  std::vector<std::pair<int, int>> pos;
  long long x = 0, y = 0;
  for (long long t = 1; t <= N; ++t) {
    if ((t * A) / N > ((t - 1) * A) / N)
      ++x;
    else
      ++y;
    if (t < N)
      pos.push_back({static_cast<int>(x % C), static_cast<int>(y % R)});
  }
  pos.push_back({0, 0});
  std::rotate(pos.begin(), pos.end() - 1, pos.end());
  std::vector<std::pair<int, int>> sorted = pos;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::nullopt;
  return pos;
}

struct SurfaceShape {
  bool pure_edges_ok = false;
  bool connected = false;
  long long chi = 0;
  int boundary_cycles = -1;
  std::vector<std::vector<int>> boundary_loops;  // vertex loops
};

SurfaceShape analyze_surface(const SimplicialComplex& L) {
  SurfaceShape s;
  s.chi = L.euler_characteristic();
  s.connected = component_count(L) == 1;
  std::vector<int> ecof(L.size(1), 0);
  for (int t = 0; t < L.size(2); ++t)
    for (auto [e, sign] : L.boundary_of(2, t)) ++ecof[e];
  s.pure_edges_ok = true;
  std::map<int, std::vector<int>> adj;
  for (int e = 0; e < L.size(1); ++e) {
    if (ecof[e] > 2 || ecof[e] == 0) s.pure_edges_ok = false;
    if (ecof[e] == 1) {
      const Simplex& sx = L.cell(1, e);
      adj[sx.v[0]].push_back(sx.v[1]);
      adj[sx.v[1]].push_back(sx.v[0]);
    }
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) {
      s.boundary_cycles = -1;
      return s;
    }
  std::map<int, bool> seen;
  int cycles = 0;
  for (const auto& [start, nb] : adj) {
    if (seen[start]) continue;
    ++cycles;
    std::vector<int> loop;
    int prev = -1, cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      loop.push_back(cur);
      int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    s.boundary_loops.push_back(std::move(loop));
  }
  s.boundary_cycles = cycles;
  return s;
}

Generated gen_lens(const CatalogSpec& spec) {
  if (spec.knot != KnotSelector::TorsionGenerator)
    fail(ErrorKind::BadArgument,
         "lens_punctured supports the torsion_generator knot");
  int p = spec.p, q = spec.q;
  if (p < 2 || p > 7) fail(ErrorKind::BadArgument, "lens p must be in [2,7]");
  if (q < 1 || q >= p || std::gcd(p, q) != 1)
    fail(ErrorKind::BadArgument, "lens q must satisfy 1 <= q < p, gcd = 1");

  std::string last_reason = "no parameters tried";
  for (int f = 3; f <= 6; ++f) {
    for (int extra = 0; extra <= 2; ++extra) {
      int C = f * p + extra;
      int R = std::max(3, f * q + extra);
      auto curve = grid_curve(C, R, p, q);
      if (!curve) {
        last_reason = "curve not embedded";
        continue;
      }
      Base2D disk = cone_disk(C);
      auto st_complex = layered_product(disk, R, true);
      int n = disk.n;  // C + 1
      auto vid = [&](int rim_col, int layer) {
        return layer * n + 1 + rim_col;
      };
      // Attaching curve as a vertex loop on the boundary torus.
      std::vector<int> cloop;
      for (auto [col, row] : *curve) cloop.push_back(vid(col, row));

      CompactModel3::Ptr st_model;
      try {
        st_model = CompactModel3::build(st_complex);
      } catch (const Error&) {
        last_reason = "solid torus model invalid";
        continue;
      }
      const auto& T = *st_model->boundary_complex();

      std::vector<Simplex> ccells;
      bool edges_ok = true;
      for (std::size_t i = 0; i < cloop.size(); ++i) {
        Simplex e({cloop[i], cloop[(i + 1) % cloop.size()]});
        if (T.index_of(e) < 0) {
          edges_ok = false;
          break;
        }
        ccells.push_back(e);
      }
      if (!edges_ok) {
        last_reason = "curve edge missing on the boundary torus";
        continue;
      }
      SubcomplexRef cref = closure_ref(T, ccells);
      SubcomplexRef aref = star_neighborhood(T, cref);
      auto A = extract(T, aref);
      SurfaceShape ashape = analyze_surface(*A);
      if (!(ashape.pure_edges_ok && ashape.connected && ashape.chi == 0 &&
            ashape.boundary_cycles == 2)) {
        last_reason = "curve neighborhood is not an annulus";
        continue;
      }
      // The curve must be interior to its neighborhood.
      {
        std::vector<bool> on_bd(T.vertex_count(), false);
        for (const auto& loop : ashape.boundary_loops)
          for (int v : loop) on_bd[v] = true;
        bool interior = true;
        for (int v : cloop)
          if (on_bd[v]) interior = false;
        if (!interior) {
          last_reason = "curve touches the neighborhood boundary";
          continue;
        }
      }
      // Complement must be the other annulus.
      {
        std::vector<Simplex> rest;
        std::vector<bool> in_a(T.size(2), false);
        for (int idx : aref.cells[2]) in_a[idx] = true;
        for (int t = 0; t < T.size(2); ++t)
          if (!in_a[t]) rest.push_back(T.cell(2, t));
        if (rest.empty()) {
          last_reason = "curve neighborhood covers the torus";
          continue;
        }
        auto Comp = SimplicialComplex::build(T.vertex_count(), rest);
        SurfaceShape cshape = analyze_surface(*Comp);
        if (!(cshape.pure_edges_ok && cshape.connected && cshape.chi == 0 &&
              cshape.boundary_cycles == 2)) {
          last_reason = "complement of the neighborhood is not an annulus";
          continue;
        }
      }

      // 2-handle: cone over the sphere formed by the annulus plus two caps.
      int w0 = st_complex->vertex_count();
      int w1 = w0 + 1;
      int apex = w0 + 2;
      std::vector<Simplex> handle_tris;
      for (int idx : aref.cells[2]) handle_tris.push_back(T.cell(2, idx));
      for (int side = 0; side < 2; ++side) {
        int w = side == 0 ? w0 : w1;
        const auto& loop = ashape.boundary_loops[side];
        int L = static_cast<int>(loop.size());
        for (int i = 0; i < L; ++i)
          handle_tris.push_back(Simplex({w, loop[i], loop[(i + 1) % L]}));
      }
      std::vector<Simplex> cells;
      for (int t = 0; t < st_complex->size(3); ++t)
        cells.push_back(st_complex->cell(3, t));
      for (const Simplex& tri : handle_tris)
        cells.push_back(Simplex({apex, tri.v[0], tri.v[1], tri.v[2]}));
      auto model_complex = SimplicialComplex::build(apex + 1, cells);

      ValidationReport rep = validate(*model_complex);
      if (!rep.ok()) {
        last_reason = "lens model failed validation: " + rep.summary();
        continue;
      }
      auto bnd = boundary_subcomplex(*model_complex);
      auto bc = extract(*model_complex, bnd);
      if (bc->euler_characteristic() != 2 || component_count(*bc) != 1) {
        last_reason = "lens boundary is not a sphere";
        continue;
      }

      Generated g;
      g.complex = model_complex;
      for (int l = 0; l < R; ++l) g.knot.push_back(l * n);  // center core
      return g;
    }
  }
  fail(ErrorKind::Internal,
       "no valid lens construction found for these parameters: " +
           last_reason);
}

ExpectedHomology expected_for(const CatalogSpec& spec) {
  ExpectedHomology e;
  e.h0 = {1, {}};
  e.h0_mod2 = 1;
  switch (spec.family) {
    case Family::Ball:
      e.h1 = {0, {}};
      e.h2 = {0, {}};
      e.h1_mod2 = 0;
      e.h2_mod2 = 0;
      e.h1_rel = {0, {}};
      break;
    case Family::SolidTorus:
      e.h1 = {1, {}};
      e.h2 = {0, {}};
      e.h1_mod2 = 1;
      e.h2_mod2 = 0;
      e.h1_rel = {0, {}};
      break;
    case Family::ThickenedTorus:
      e.h1 = {2, {}};
      e.h2 = {1, {}};
      e.h1_mod2 = 2;
      e.h2_mod2 = 1;
      e.h1_rel = {1, {}};
      break;
    case Family::Handlebody:
      e.h1 = {spec.genus, {}};
      e.h2 = {0, {}};
      e.h1_mod2 = spec.genus;
      e.h2_mod2 = 0;
      e.h1_rel = {0, {}};
      break;
    case Family::LensPunctured:
      e.h1 = {0, {Int(spec.p)}};
      e.h2 = {0, {}};
      e.h1_mod2 = spec.p % 2 == 0 ? 1 : 0;
      e.h2_mod2 = spec.p % 2 == 0 ? 1 : 0;
      e.h1_rel = {0, {Int(spec.p)}};
      break;
    case Family::S1xS2Punctured:
      e.h1 = {1, {}};
      e.h2 = {1, {}};
      e.h1_mod2 = 1;
      e.h2_mod2 = 1;
      e.h1_rel = {1, {}};
      break;
  }
  return e;
}

Outcome expected_verdict_for(const CatalogSpec& spec) {
  switch (spec.family) {
    case Family::Ball:
      return Outcome::NotRealizable;
    case Family::SolidTorus:
      if (spec.knot == KnotSelector::Core) return Outcome::Realizable;
      return spec.n % 2 == 0 ? Outcome::NotRealizable : Outcome::Realizable;
    case Family::ThickenedTorus:
      return Outcome::Realizable;
    case Family::Handlebody:
      return Outcome::Realizable;
    case Family::LensPunctured:
      return Outcome::PreconditionFailed;
    case Family::S1xS2Punctured:
      return spec.knot == KnotSelector::Core ? Outcome::PreconditionFailed
                                             : Outcome::NotRealizable;
  }
  return Outcome::PreconditionFailed;
}

}  // namespace

Fixture generate(const CatalogSpec& spec) {
  Generated g;
  switch (spec.family) {
    case Family::Ball:
      g = gen_ball(spec);
      break;
    case Family::SolidTorus:
      g = gen_solid_torus(spec);
      break;
    case Family::ThickenedTorus:
      g = gen_thickened_torus(spec);
      break;
    case Family::Handlebody:
      g = gen_handlebody(spec);
      break;
    case Family::LensPunctured:
      g = gen_lens(spec);
      break;
    case Family::S1xS2Punctured:
      g = gen_s1xs2(spec);
      break;
  }
  Fixture f;
  f.name = spec.name();
  f.model = CompactModel3::build(g.complex);
  f.knot = make_edge_loop(*f.model, g.knot);
  f.expect = expected_for(spec);
  f.expected_verdict = expected_verdict_for(spec);
  return f;
}

std::vector<CatalogSpec> default_catalog() {
  std::vector<CatalogSpec> out;
  out.push_back({Family::Ball, KnotSelector::Contractible});
  out.push_back({Family::SolidTorus, KnotSelector::Core});
  {
    CatalogSpec s{Family::SolidTorus, KnotSelector::CorePower};
    s.n = 2;
    out.push_back(s);
  }
  out.push_back({Family::ThickenedTorus, KnotSelector::Core});
  {
    CatalogSpec s{Family::Handlebody, KnotSelector::HandleCore};
    s.genus = 2;
    s.handle = 1;
    out.push_back(s);
    s.handle = 2;
    out.push_back(s);
  }
  {
    CatalogSpec s{Family::LensPunctured, KnotSelector::TorsionGenerator};
    s.p = 3;
    s.q = 1;
    out.push_back(s);
    s.p = 4;
    out.push_back(s);
  }
  out.push_back({Family::S1xS2Punctured, KnotSelector::Core});
  out.push_back({Family::S1xS2Punctured, KnotSelector::Contractible});
  return out;
}

}  // namespace kf
