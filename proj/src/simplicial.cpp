#include "simplicial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace kf {

Simplex::Simplex(std::initializer_list<int> verts) {
  std::vector<int> tmp(verts);
  *this = from_unsorted(std::move(tmp));
}

Simplex Simplex::from_sorted(const int* verts, int count) {
  assert(count >= 1 && count <= 4);
  Simplex s;
  s.k = static_cast<std::int8_t>(count - 1);
  for (int i = 0; i < count; ++i) s.v[i] = verts[i];
  return s;
}

Simplex Simplex::from_unsorted(std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    fail(ErrorKind::BadArgument, "simplex with repeated vertex");
  if (verts.empty() || verts.size() > 4)
    fail(ErrorKind::BadArgument, "simplex dimension out of range");
  return from_sorted(verts.data(), static_cast<int>(verts.size()));
}

bool Simplex::contains(int vertex) const {
  for (int i = 0; i <= k; ++i)
    if (v[i] == vertex) return true;
  return false;
}

Simplex Simplex::face_omitting(int i) const {
  assert(k >= 1 && i <= k);
  Simplex f;
  f.k = static_cast<std::int8_t>(k - 1);
  int w = 0;
  for (int j = 0; j <= k; ++j)
    if (j != i) f.v[w++] = v[j];
  return f;
}

bool operator<(const Simplex& a, const Simplex& b) {
  if (a.k != b.k) return a.k < b.k;
  for (int i = 0; i <= a.k; ++i)
    if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
  return false;
}

bool operator==(const Simplex& a, const Simplex& b) {
  if (a.k != b.k) return false;
  for (int i = 0; i <= a.k; ++i)
    if (a.v[i] != b.v[i]) return false;
  return true;
}

std::string Simplex::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i <= k; ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool SubcomplexRef::contains(int dim, int idx) const {
  const auto& c = cells[dim];
  return std::binary_search(c.begin(), c.end(), idx);
}

bool SubcomplexRef::empty() const {
  for (const auto& c : cells)
    if (!c.empty()) return false;
  return true;
}

void SubcomplexRef::sort_unique() {
  for (auto& c : cells) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
}

SimplicialComplex::Ptr SimplicialComplex::build(
    int vertex_count, const std::vector<Simplex>& cells) {
  auto X = std::make_shared<SimplicialComplex>();
  X->vertex_count_ = vertex_count;
  for (const Simplex& s : cells) {
    for (int i = 0; i <= s.k; ++i)
      if (s.v[i] < 0 || s.v[i] >= vertex_count)
        fail(ErrorKind::BadArgument, "simplex vertex out of range");
    // Close under faces: every nonempty subset of the vertex tuple.
    int n = s.size();
    for (int mask = 1; mask < (1 << n); ++mask) {
      Simplex f;
      int w = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) f.v[w++] = s.v[i];
      f.k = static_cast<std::int8_t>(w - 1);
      X->table_[f.k].push_back(f);
    }
  }
  for (auto& t : X->table_) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  return X;
}

int SimplicialComplex::dim() const {
  for (int k = 3; k >= 0; --k)
    if (!table_[k].empty()) return k;
  return -1;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  if (s.k < 0 || s.k > 3) return -1;
  const auto& t = table_[s.k];
  auto it = std::lower_bound(t.begin(), t.end(), s);
  if (it == t.end() || !(*it == s)) return -1;
  return static_cast<int>(it - t.begin());
}

std::vector<std::pair<int, int>> SimplicialComplex::boundary_of(
    int k, int idx) const {
  assert(k >= 1 && k <= 3);
  const Simplex& s = table_[k][idx];
  std::vector<std::pair<int, int>> out;
  out.reserve(k + 1);
  int sign = 1;
  for (int i = 0; i <= k; ++i) {
    int fidx = index_of(s.face_omitting(i));
    assert(fidx >= 0);
    out.push_back({fidx, sign});
    sign = -sign;
  }
  return out;
}

IntMatrix SimplicialComplex::boundary_matrix(int k) const {
  if (k < 1 || k > 3)
    fail(ErrorKind::BadArgument, "boundary_matrix: degree out of range");
  IntMatrix m(size(k - 1), size(k));
  for (int j = 0; j < size(k); ++j)
    for (auto [fidx, sign] : boundary_of(k, j)) m.set(fidx, j, sign);
  return m;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (int k = 0; k <= 3; ++k) {
    chi += sign * static_cast<long long>(table_[k].size());
    sign = -sign;
  }
  return chi;
}

bool SimplicialComplex::same_tables(const SimplicialComplex& other) const {
  return vertex_count_ == other.vertex_count_ && table_ == other.table_;
}

// ---------------------------------------------------------------------------
// Chains.

void Chain::normalize() {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Int>> out;
  for (auto& [idx, c] : coeffs) {
    if (!out.empty() && out.back().first == idx)
      out.back().second += c;
    else
      out.push_back({idx, c});
  }
  coeffs.clear();
  for (auto& [idx, c] : out) {
    Int r = ring == Ring::Z2 ? Int(c % 2 == 0 ? 0 : 1) : c;
    if (r != 0) coeffs.push_back({idx, r});
  }
}

Int Chain::coeff_of(int idx) const {
  for (const auto& [i, c] : coeffs)
    if (i == idx) return c;
  return 0;
}

Chain make_chain(SimplicialComplex::Ptr X, int degree, Ring ring,
                 std::vector<std::pair<int, Int>> coeffs) {
  Chain c{std::move(X), degree, ring, std::move(coeffs)};
  c.normalize();
  return c;
}

Chain chain_add(const Chain& a, const Chain& b) {
  assert(a.carrier == b.carrier && a.degree == b.degree && a.ring == b.ring);
  Chain out = a;
  out.coeffs.insert(out.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
  out.normalize();
  return out;
}

Chain chain_scale(const Chain& a, const Int& s) {
  Chain out = a;
  for (auto& [idx, c] : out.coeffs) c *= s;
  out.normalize();
  return out;
}

Chain boundary_chain(const Chain& c) {
  Chain out{c.carrier, c.degree - 1, c.ring, {}};
  if (c.degree < 1) return out;
  for (const auto& [idx, coeff] : c.coeffs)
    for (auto [fidx, sign] : c.carrier->boundary_of(c.degree, idx))
      out.coeffs.push_back({fidx, coeff * sign});
  out.normalize();
  return out;
}

Chain chain_mod2(const Chain& c) {
  Chain out = c;
  out.ring = Ring::Z2;
  out.normalize();
  return out;
}

Chain cycle_of_vertex_loop(SimplicialComplex::Ptr X,
                           const std::vector<int>& loop, Ring ring) {
  if (loop.size() < 3)
    fail(ErrorKind::BadArgument, "edge loop needs at least 3 vertices");
  Chain out{X, 1, ring, {}};
  int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i) {
    int a = loop[i], b = loop[(i + 1) % n];
    Simplex e({a, b});
    int idx = X->index_of(e);
    if (idx < 0)
      fail(ErrorKind::BadArgument,
           "loop edge " + e.str() + " is not in the complex");
    out.coeffs.push_back({idx, a < b ? 1 : -1});
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Barycentric subdivision.

namespace {

// Fine vertex id of the barycenter of (dim, idx).
struct FineIds {
  int coarse_vertex_count;
  std::array<int, 4> offset;
  const SimplicialComplex* X;

  explicit FineIds(const SimplicialComplex& coarse) : X(&coarse) {
    coarse_vertex_count = coarse.vertex_count();
    offset[0] = 0;  // 0-cells keep the original vertex id
    offset[1] = coarse_vertex_count;
    offset[2] = offset[1] + coarse.size(1);
    offset[3] = offset[2] + coarse.size(2);
  }

  int operator()(int dim, int idx) const {
    if (dim == 0) return X->cell(0, idx).v[0];
    return offset[dim] + idx;
  }

  int total() const { return offset[3] + X->size(3); }
};

int permutation_sign(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

Subdivision barycentric_subdivide(SimplicialComplex::Ptr Xp) {
  const SimplicialComplex& X = *Xp;
  FineIds fid(X);

  // Flags (strictly increasing chains of cells) generate the subdivision:
  // a chain of length k+1 is a fine k-cell with vertices at the barycenters.
  // Since barycenter ids grow with dimension, the tuples come out sorted.
  struct Entry {
    Simplex cell;
    std::pair<int, int> carrier;
  };
  std::vector<Entry> entries;

  // chains_at[dim][idx]: all chains ending at that cell, as fine tuples.
  std::array<std::vector<std::vector<std::vector<int>>>, 4> chains_at;
  for (int k = 0; k <= 3; ++k) chains_at[k].resize(X.size(k));

  for (int k = 0; k <= 3; ++k) {
    for (int idx = 0; idx < X.size(k); ++idx) {
      const Simplex& s = X.cell(k, idx);
      auto& mine = chains_at[k][idx];
      mine.push_back({fid(k, idx)});
      // Proper faces: nonempty strict subsets of the vertex tuple.
      int n = s.size();
      for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        Simplex f;
        int w = 0;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) f.v[w++] = s.v[i];
        f.k = static_cast<std::int8_t>(w - 1);
        int fidx = X.index_of(f);
        for (const auto& chain : chains_at[f.k][fidx]) {
          if (chain.size() >= 4) continue;
          std::vector<int> longer = chain;
          longer.push_back(fid(k, idx));
          mine.push_back(std::move(longer));
        }
      }
      for (const auto& chain : mine) {
        entries.push_back(
            {Simplex::from_sorted(chain.data(),
                                  static_cast<int>(chain.size())),
             {k, idx}});
      }
    }
  }

  std::vector<Simplex> cells;
  cells.reserve(entries.size());
  for (const auto& e : entries) cells.push_back(e.cell);
  auto fine = SimplicialComplex::build(fid.total(), cells);

  Subdivision out;
  out.coarse = Xp;
  out.fine = fine;
  for (int k = 0; k <= 3; ++k) {
    out.barycenter[k].resize(X.size(k));
    for (int idx = 0; idx < X.size(k); ++idx)
      out.barycenter[k][idx] = fid(k, idx);
    out.carrier[k].assign(fine->size(k), {-1, -1});
  }
  for (const auto& e : entries) {
    int d = e.cell.dim();
    int idx = fine->index_of(e.cell);
    assert(idx >= 0);
    out.carrier[d][idx] = e.carrier;
  }

  // Chain operator from full flags: each permutation (w0..wk) of a coarse
  // cell's vertices contributes the fine cell through the barycenters of the
  // prefixes, signed by the permutation parity.
  for (int k = 0; k <= 3; ++k) {
    out.chain_op_[k].resize(X.size(k));
    for (int idx = 0; idx < X.size(k); ++idx) {
      const Simplex& s = X.cell(k, idx);
      int n = s.size();
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      auto& target = out.chain_op_[k][idx];
      do {
        std::vector<int> tuple;
        std::vector<int> prefix;
        for (int i = 0; i < n; ++i) {
          prefix.push_back(s.v[perm[i]]);
          Simplex p = Simplex::from_unsorted(prefix);
          int pidx = X.index_of(p);
          assert(pidx >= 0);
          tuple.push_back(fid(p.dim(), pidx));
        }
        Simplex f = Simplex::from_sorted(tuple.data(), n);
        int fidx = fine->index_of(f);
        assert(fidx >= 0);
        target.push_back({fidx, permutation_sign(perm)});
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

Chain Subdivision::map_chain(const Chain& c) const {
  assert(c.carrier == coarse);
  Chain out{fine, c.degree, c.ring, {}};
  for (const auto& [idx, coeff] : c.coeffs)
    for (auto [fidx, sign] : chain_op_[c.degree][idx])
      out.coeffs.push_back({fidx, coeff * sign});
  out.normalize();
  return out;
}

std::vector<int> Subdivision::map_vertex_loop(
    const std::vector<int>& loop) const {
  std::vector<int> out;
  int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i) {
    int a = loop[i], b = loop[(i + 1) % n];
    int eidx = coarse->index_of(Simplex({a, b}));
    if (eidx < 0) fail(ErrorKind::BadArgument, "loop edge not in complex");
    out.push_back(a);  // original vertex keeps its id
    out.push_back(barycenter[1][eidx]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stars and subcomplexes.

SubcomplexRef star_neighborhood(const SimplicialComplex& X,
                                const SubcomplexRef& S) {
  std::vector<bool> in_s(X.vertex_count(), false);
  for (int k = 0; k <= 3; ++k)
    for (int idx : S.cells[k]) {
      if (idx < 0 || idx >= X.size(k))
        fail(ErrorKind::BadArgument, "star_neighborhood: not a subcomplex");
      const Simplex& s = X.cell(k, idx);
      for (int i = 0; i <= s.k; ++i) in_s[s.v[i]] = true;
    }

  SubcomplexRef out;
  // All cells meeting S...
  for (int k = 0; k <= 3; ++k) {
    for (int idx = 0; idx < X.size(k); ++idx) {
      const Simplex& s = X.cell(k, idx);
      bool meets = false;
      for (int i = 0; i <= s.k && !meets; ++i) meets = in_s[s.v[i]];
      if (meets) out.cells[k].push_back(idx);
    }
  }
  // ...plus faces.
  for (int k = 3; k >= 1; --k) {
    std::vector<int> extra;
    for (int idx : out.cells[k])
      for (auto [fidx, sign] : X.boundary_of(k, idx)) extra.push_back(fidx);
    auto& lower = out.cells[k - 1];
    lower.insert(lower.end(), extra.begin(), extra.end());
    std::sort(lower.begin(), lower.end());
    lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
  }
  out.sort_unique();
  return out;
}

SimplicialComplex::Ptr extract(const SimplicialComplex& X,
                               const SubcomplexRef& ref) {
  std::vector<Simplex> cells;
  for (int k = 0; k <= 3; ++k)
    for (int idx : ref.cells[k]) cells.push_back(X.cell(k, idx));
  return SimplicialComplex::build(X.vertex_count(), cells);
}

SubcomplexRef closure_ref(const SimplicialComplex& X,
                          const std::vector<Simplex>& cells) {
  SubcomplexRef out;
  for (const Simplex& s : cells) {
    int n = s.size();
    for (int mask = 1; mask < (1 << n); ++mask) {
      Simplex f;
      int w = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) f.v[w++] = s.v[i];
      f.k = static_cast<std::int8_t>(w - 1);
      int idx = X.index_of(f);
      if (idx < 0)
        fail(ErrorKind::BadArgument,
             "cell " + f.str() + " is not in the complex");
      out.cells[f.k].push_back(idx);
    }
  }
  out.sort_unique();
  return out;
}

SubcomplexRef locate(const SimplicialComplex& X,
                     const SimplicialComplex& sub) {
  SubcomplexRef out;
  for (int k = 0; k <= 3; ++k)
    for (int idx = 0; idx < sub.size(k); ++idx) {
      int xidx = X.index_of(sub.cell(k, idx));
      if (xidx < 0)
        fail(ErrorKind::BadArgument, "subcomplex cell missing from parent");
      out.cells[k].push_back(xidx);
    }
  out.sort_unique();
  return out;
}

SimplicialComplex::Ptr vertex_link(const SimplicialComplex& X, int v) {
  std::vector<Simplex> cells;
  for (int k = 1; k <= 3; ++k)
    for (int idx = 0; idx < X.size(k); ++idx) {
      const Simplex& s = X.cell(k, idx);
      if (!s.contains(v)) continue;
      Simplex f;
      int w = 0;
      for (int i = 0; i <= s.k; ++i)
        if (s.v[i] != v) f.v[w++] = s.v[i];
      f.k = static_cast<std::int8_t>(w - 1);
      cells.push_back(f);
    }
  return SimplicialComplex::build(X.vertex_count(), cells);
}

int component_count(const SimplicialComplex& X) {
  // Union-find over 0-cell positions (vertex ids may be sparse).
  int n = X.size(0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (int idx = 0; idx < X.size(1); ++idx) {
    const Simplex& e = X.cell(1, idx);
    int a = X.index_of(Simplex({e.v[0]}));
    int b = X.index_of(Simplex({e.v[1]}));
    parent[find(a)] = find(b);
  }
  int roots = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

}  // namespace kf
