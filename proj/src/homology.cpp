#include "homology.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "error.hpp"
#include "reduce.hpp"

namespace kf {

namespace {

Int canonical_mod(const Int& v, const Int& d) {
  Int r = v % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

struct GroupPresentation::Solver {
  Ring ring;
  int degree = 0;
  std::array<std::vector<std::uint8_t>, 4> dead;

  std::vector<std::int32_t> res_cells;  // residual k-cells, original ids
  std::vector<std::int32_t> res_pos;    // original id -> compact position

  // Z path
  std::vector<std::vector<std::pair<std::int32_t, Int>>> pi_z;
  IntMatrix Vinv1;
  int rank1 = 0;
  IntMatrix U2;
  std::vector<Int> diag2;
  std::vector<int> coord_index;  // presentation coord -> diagonal index

  // Z2 path
  std::vector<std::vector<std::pair<std::int32_t, std::uint8_t>>> pi_z2;
  std::unique_ptr<Gf2Elim> ker_solver;  // K y = v
  Gf2Matrix L;                          // row ops of W in kernel coords
  int w_rank = 0;
};

GroupPresentation::GroupPresentation() = default;
GroupPresentation::~GroupPresentation() = default;

bool HomologyClass::is_zero() const {
  for (const Int& c : coords)
    if (c != 0) return false;
  return true;
}

namespace {

std::array<std::vector<std::uint8_t>, 4> dead_masks(
    const SimplicialComplex& X, const std::optional<SubcomplexRef>& A) {
  std::array<std::vector<std::uint8_t>, 4> dead{};
  if (!A) return dead;
  for (int d = 0; d <= 3; ++d) {
    dead[d].assign(X.size(d), 0);
    for (int idx : A->cells[d]) {
      if (idx < 0 || idx >= X.size(d))
        fail(ErrorKind::BadArgument, "invalid pair: cell index out of range");
      dead[d][idx] = 1;
    }
  }
  for (int d = 1; d <= 3; ++d)
    for (int idx : A->cells[d])
      for (auto [f, s] : X.boundary_of(d, idx))
        if (!dead[d - 1][f])
          fail(ErrorKind::BadArgument,
               "invalid pair: subcomplex not closed under faces");
  return dead;
}

template <class Ops>
void residual_lists(const SimplicialComplex& X,
                    const detail::ChainReducer<Ops>& red, int k,
                    std::vector<std::int32_t>& res_km1,
                    std::vector<std::int32_t>& res_k,
                    std::vector<std::int32_t>& res_kp1) {
  const auto& alive = red.alive();
  if (k >= 1)
    for (int i = 0; i < X.size(k - 1); ++i)
      if (alive[k - 1][i]) res_km1.push_back(i);
  for (int i = 0; i < X.size(k); ++i)
    if (alive[k][i]) res_k.push_back(i);
  if (k < 3)
    for (int i = 0; i < X.size(k + 1); ++i)
      if (alive[k + 1][i]) res_kp1.push_back(i);
}

GroupPtr build_group_z(SimplicialComplex::Ptr X,
                       std::array<std::vector<std::uint8_t>, 4> dead, int k,
                       bool relative) {
  detail::ChainReducer<detail::RingZOps> red(*X, dead, k);
  red.run();

  std::vector<std::int32_t> res_km1, res_k, res_kp1;
  residual_lists(*X, red, k, res_km1, res_k, res_kp1);
  int n = static_cast<int>(res_k.size());

  std::vector<std::int32_t> pos_km1(k >= 1 ? X->size(k - 1) : 0, -1);
  for (int j = 0; j < static_cast<int>(res_km1.size()); ++j)
    pos_km1[res_km1[j]] = j;
  std::vector<std::int32_t> pos_k(X->size(k), -1);
  for (int j = 0; j < n; ++j) pos_k[res_k[j]] = j;

  IntMatrix Dk(static_cast<int>(res_km1.size()), n);
  if (k >= 1)
    for (int j = 0; j < n; ++j)
      for (const auto& [r, v] : red.column(k, res_k[j]))
        Dk.set(pos_km1[r], j, v);
  SnfFull f1 = snf_full(Dk);
  int z = n - f1.rank;

  IntMatrix W(z, static_cast<int>(res_kp1.size()));
  if (k < 3) {
    for (int j = 0; j < static_cast<int>(res_kp1.size()); ++j) {
      std::vector<Int> v(n, 0);
      for (const auto& [r, c] : red.column(k + 1, res_kp1[j])) v[pos_k[r]] = c;
      std::vector<Int> w = f1.Vinv.apply(v);
      for (int i = 0; i < f1.rank; ++i)
        if (w[i] != 0)
          fail(ErrorKind::Internal, "boundary column is not a cycle");
      for (int i = f1.rank; i < n; ++i) W.add_at(i - f1.rank, j, w[i]);
    }
  }
  SnfFull f2 = snf_full(W);

  std::vector<Int> diag2(z, 0);
  {
    int dmax = std::min(W.rows(), W.cols());
    for (int i = 0; i < dmax; ++i) diag2[i] = f2.D.at(i, i);
  }

  auto G = std::make_shared<GroupPresentation>();
  G->ring = Ring::Z;
  G->carrier = X;
  G->degree = k;
  G->relative = relative;
  auto solver = std::make_shared<GroupPresentation::Solver>();
  solver->ring = Ring::Z;
  solver->degree = k;
  solver->dead = std::move(dead);
  solver->res_cells = res_k;
  solver->res_pos = pos_k;
  solver->Vinv1 = f1.Vinv;
  solver->rank1 = f1.rank;
  solver->U2 = f2.U;
  solver->diag2 = diag2;
  solver->pi_z.resize(X->size(k));
  for (int i = 0; i < X->size(k); ++i)
    if (solver->dead.empty() || solver->dead[k].empty() ||
        !solver->dead[k][i])
      solver->pi_z[i] = red.pi(i);

  std::vector<int> free_idx, tors_idx;
  for (int i = 0; i < z; ++i) {
    if (diag2[i] == 0)
      free_idx.push_back(i);
    else if (diag2[i] >= 2)
      tors_idx.push_back(i);
  }
  G->betti = static_cast<int>(free_idx.size());
  for (int i : tors_idx) G->torsion.push_back(diag2[i]);
  solver->coord_index = free_idx;
  solver->coord_index.insert(solver->coord_index.end(), tors_idx.begin(),
                             tors_idx.end());

  // Basis cycles: Uinv2 column -> kernel coordinates -> residual chain ->
  // original chain through iota.
  for (int coord : solver->coord_index) {
    std::vector<Int> y(z, 0);
    for (int i = 0; i < z; ++i) y[i] = f2.Uinv.at(i, coord);
    std::vector<Int> e(n, 0);
    for (int i = 0; i < z; ++i) e[f1.rank + i] = y[i];
    std::vector<Int> rvec = f1.V.apply(e);
    Chain cyc{X, k, Ring::Z, {}};
    for (int j = 0; j < n; ++j) {
      if (rvec[j] == 0) continue;
      for (const auto& [orig, c] : red.iota(res_k[j]))
        cyc.coeffs.push_back({orig, rvec[j] * c});
    }
    cyc.normalize();
    G->basis.push_back(std::move(cyc));
  }
  G->solver = solver;
  return G;
}

GroupPtr build_group_z2(SimplicialComplex::Ptr X,
                        std::array<std::vector<std::uint8_t>, 4> dead, int k,
                        bool relative) {
  detail::ChainReducer<detail::RingZ2Ops> red(*X, dead, k);
  red.run();

  std::vector<std::int32_t> res_km1, res_k, res_kp1;
  residual_lists(*X, red, k, res_km1, res_k, res_kp1);
  int n = static_cast<int>(res_k.size());

  std::vector<std::int32_t> pos_km1(k >= 1 ? X->size(k - 1) : 0, -1);
  for (int j = 0; j < static_cast<int>(res_km1.size()); ++j)
    pos_km1[res_km1[j]] = j;
  std::vector<std::int32_t> pos_k(X->size(k), -1);
  for (int j = 0; j < n; ++j) pos_k[res_k[j]] = j;

  Gf2Matrix Dk(static_cast<int>(res_km1.size()), n);
  if (k >= 1)
    for (int j = 0; j < n; ++j)
      for (const auto& [r, v] : red.column(k, res_k[j]))
        Dk.set(pos_km1[r], j, true);
  Gf2Elim e1(Dk);
  const auto& kernel = e1.kernel_basis();
  int z = static_cast<int>(kernel.size());

  Gf2Matrix K(n, z);
  for (int j = 0; j < z; ++j)
    for (int i = 0; i < n; ++i)
      if (kernel[j][i]) K.set(i, j, true);
  auto ker_solver = std::make_unique<Gf2Elim>(K);

  // W: boundaries of residual (k+1)-cells in kernel coordinates.
  int m2 = static_cast<int>(res_kp1.size());
  std::vector<BitVec> wcols;
  for (int j = 0; j < m2; ++j) {
    BitVec v(n);
    for (const auto& [r, c] : red.column(k + 1, res_kp1[j]))
      v[pos_k[r]] = true;
    auto y = ker_solver->solve(v);
    if (!y) fail(ErrorKind::Internal, "boundary column is not a cycle");
    wcols.push_back(*y);
  }

  // Row-reduce W, recording the row operations L; the quotient coordinates
  // are the non-pivot components of L * y.
  std::vector<BitVec> wrows(z, BitVec(m2));
  for (int j = 0; j < m2; ++j)
    for (int i = 0; i < z; ++i)
      if (wcols[j][i]) wrows[i][j] = true;
  Gf2Matrix L = Gf2Matrix::identity(z);
  int lead = 0;
  for (int c = 0; c < m2 && lead < z; ++c) {
    int pivot = -1;
    for (int r = lead; r < z; ++r)
      if (wrows[r][c]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(wrows[lead], wrows[pivot]);
    std::swap(L.row(lead), L.row(pivot));
    for (int r = 0; r < z; ++r)
      if (r != lead && wrows[r][c]) {
        wrows[r] ^= wrows[lead];
        L.row(r) ^= L.row(lead);
      }
    ++lead;
  }
  int w_rank = lead;

  auto G = std::make_shared<GroupPresentation>();
  G->ring = Ring::Z2;
  G->carrier = X;
  G->degree = k;
  G->relative = relative;
  G->betti = z - w_rank;

  auto solver = std::make_shared<GroupPresentation::Solver>();
  solver->ring = Ring::Z2;
  solver->degree = k;
  solver->dead = std::move(dead);
  solver->res_cells = res_k;
  solver->res_pos = pos_k;
  solver->ker_solver = std::move(ker_solver);
  solver->L = L;
  solver->w_rank = w_rank;
  solver->pi_z2.resize(X->size(k));
  for (int i = 0; i < X->size(k); ++i)
    if (solver->dead.empty() || solver->dead[k].empty() ||
        !solver->dead[k][i])
      solver->pi_z2[i] = red.pi(i);

  // Basis: solve L v = e_i for the non-pivot coordinates.
  Gf2Elim linv(L);
  for (int i = w_rank; i < z; ++i) {
    BitVec e(z);
    e[i] = true;
    auto y = linv.solve(e);
    assert(y);
    Chain cyc{X, k, Ring::Z2, {}};
    for (int j = 0; j < z; ++j) {
      if (!(*y)[j]) continue;
      for (int cpos = 0; cpos < n; ++cpos)
        if (kernel[j][cpos])
          for (const auto& [orig, c] : red.iota(res_k[cpos]))
            cyc.coeffs.push_back({orig, 1});
    }
    cyc.normalize();
    G->basis.push_back(std::move(cyc));
  }
  G->solver = solver;
  return G;
}

bool same_complex(const SimplicialComplex::Ptr& a,
                  const SimplicialComplex::Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_tables(*b);
}

}  // namespace

GroupPtr homology_group(SimplicialComplex::Ptr X,
                        const std::optional<SubcomplexRef>& A, int k,
                        Ring ring) {
  if (k < 0 || k > 3)
    fail(ErrorKind::BadArgument, "homology degree out of range");
  auto dead = dead_masks(*X, A);
  if (ring == Ring::Z) return build_group_z(X, std::move(dead), k, bool(A));
  return build_group_z2(X, std::move(dead), k, bool(A));
}

HomologyClass class_of(const Chain& z, const GroupPtr& G) {
  const auto& S = *G->solver;
  if (!same_complex(z.carrier, G->carrier))
    fail(ErrorKind::BadArgument, "class_of: chain lives on another complex");
  if (z.degree != G->degree)
    fail(ErrorKind::BadArgument, "class_of: degree mismatch");
  if (z.ring != G->ring)
    fail(ErrorKind::BadArgument, "class_of: coefficient ring mismatch");
  int k = G->degree;
  const auto& deadk = S.dead[k];

  // Quotient: drop cells of A.
  Chain q = z;
  if (!deadk.empty()) {
    std::erase_if(q.coeffs,
                  [&](const auto& e) { return deadk[e.first] != 0; });
  }
  // Cycle precondition (boundary supported in A).
  Chain bd = boundary_chain(q);
  if (k >= 1 && !S.dead[k - 1].empty())
    std::erase_if(bd.coeffs,
                  [&](const auto& e) { return S.dead[k - 1][e.first] != 0; });
  if (!bd.is_zero())
    fail(ErrorKind::BadArgument, "class_of: chain is not a cycle");

  int n = static_cast<int>(S.res_cells.size());
  HomologyClass out;
  out.group = G;

  if (G->ring == Ring::Z) {
    std::map<std::int32_t, Int> acc;
    for (const auto& [idx, c] : q.coeffs)
      for (const auto& [r, p] : S.pi_z[idx]) {
        acc[r] += c * p;
      }
    std::vector<Int> v(n, 0);
    for (const auto& [r, val] : acc) {
      if (val == 0) continue;
      assert(S.res_pos[r] >= 0);
      v[S.res_pos[r]] = val;
    }
    std::vector<Int> w = S.Vinv1.apply(v);
    for (int i = 0; i < S.rank1; ++i)
      if (w[i] != 0)
        fail(ErrorKind::Internal, "projected cycle left the kernel");
    int zdim = n - S.rank1;
    std::vector<Int> y(w.begin() + S.rank1, w.end());
    std::vector<Int> zeta(zdim, 0);
    // zeta = U2 * y
    for (const auto& [key, val] : S.U2.entries())
      zeta[key.first] += val * y[key.second];
    for (std::size_t c = 0; c < S.coord_index.size(); ++c) {
      int i = S.coord_index[c];
      const Int& d = S.diag2[i];
      out.coords.push_back(d == 0 ? zeta[i] : canonical_mod(zeta[i], d));
    }
  } else {
    BitVec v(n);
    for (const auto& [idx, c] : q.coeffs) {
      if (c % 2 == 0) continue;
      for (const auto& [r, p] : S.pi_z2[idx])
        if (p) v[S.res_pos[r]].flip();
    }
    auto y = S.ker_solver->solve(v);
    if (!y) fail(ErrorKind::Internal, "projected cycle left the kernel");
    BitVec ly = S.L.apply(*y);
    int zdim = S.L.rows();
    for (int i = S.w_rank; i < zdim; ++i)
      out.coords.push_back(ly[i] ? 1 : 0);
  }
  return out;
}

HomologyClass mod2_reduce(const HomologyClass& c, const GroupPtr& G2) {
  if (!c.group || c.group->ring != Ring::Z)
    fail(ErrorKind::BadArgument, "mod2_reduce: source class must be over Z");
  if (G2->ring != Ring::Z2)
    fail(ErrorKind::BadArgument, "mod2_reduce: target group must be over Z2");
  if (!same_complex(c.group->carrier, G2->carrier) ||
      c.group->degree != G2->degree ||
      c.group->solver->dead != G2->solver->dead)
    fail(ErrorKind::BadArgument,
         "mod2_reduce: groups computed from different pairs");
  Chain rep = representative(c);
  Chain rep2 = chain_mod2(rep);
  rep2.carrier = G2->carrier;
  return class_of(rep2, G2);
}

IntMatrix induced_map(const GroupPtr& source, const GroupPtr& target) {
  if (source->ring != target->ring)
    fail(ErrorKind::BadArgument, "induced_map: ring mismatch");
  if (source->degree != target->degree)
    fail(ErrorKind::BadArgument, "induced_map: degree mismatch");
  IntMatrix M(target->rank(), source->rank());
  for (int j = 0; j < source->rank(); ++j) {
    const Chain& cyc = source->basis[j];
    Chain img{target->carrier, cyc.degree, cyc.ring, {}};
    for (const auto& [idx, c] : cyc.coeffs) {
      const Simplex& s = source->carrier->cell(cyc.degree, idx);
      int tidx = target->carrier->index_of(s);
      if (tidx < 0)
        fail(ErrorKind::BadArgument,
             "induced_map: source carrier is not a subcomplex of the target");
      img.coeffs.push_back({tidx, c});
    }
    img.normalize();
    HomologyClass cls = class_of(img, target);
    for (int i = 0; i < target->rank(); ++i)
      if (cls.coords[i] != 0) M.set(i, j, cls.coords[i]);
  }
  return M;
}

HomologyClass zero_class(const GroupPtr& G) {
  return {G, std::vector<Int>(G->rank(), 0)};
}

namespace {
void canonicalize(HomologyClass& c) {
  const auto& G = *c.group;
  for (int i = 0; i < G.rank(); ++i) {
    if (i >= G.betti) {
      const Int& d = G.torsion[i - G.betti];
      c.coords[i] = canonical_mod(c.coords[i], d);
    } else if (G.ring == Ring::Z2) {
      c.coords[i] = canonical_mod(c.coords[i], 2);
    }
  }
}
}  // namespace

HomologyClass class_add(const HomologyClass& a, const HomologyClass& b) {
  if (a.group != b.group)
    fail(ErrorKind::BadArgument, "class_add: different groups");
  HomologyClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] += b.coords[i];
  canonicalize(out);
  return out;
}

HomologyClass class_negate(const HomologyClass& a) {
  return class_scale(a, -1);
}

HomologyClass class_scale(const HomologyClass& a, const Int& s) {
  HomologyClass out = a;
  for (auto& c : out.coords) c *= s;
  canonicalize(out);
  return out;
}

bool class_eq(const HomologyClass& a, const HomologyClass& b) {
  return a.group == b.group && a.coords == b.coords;
}

Chain representative(const HomologyClass& c) {
  const auto& G = *c.group;
  Chain out{G.carrier, G.degree, G.ring, {}};
  for (int i = 0; i < G.rank(); ++i) {
    if (c.coords[i] == 0) continue;
    for (const auto& [idx, coeff] : G.basis[i].coeffs)
      out.coeffs.push_back({idx, coeff * c.coords[i]});
  }
  out.normalize();
  return out;
}

}  // namespace kf
