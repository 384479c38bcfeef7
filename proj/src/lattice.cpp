#include "mixedvol/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mixedvol/errors.hpp"

namespace mixedvol {

namespace {

QVec to_qvec(const Point& p) {
  QVec q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
  return q;
}

// Indices of a maximal affinely independent subset, first point included.
std::vector<int> affine_basis(const std::vector<QVec>& pts, int dim) {
  std::vector<int> basis{0};
  QMat rows;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    if (static_cast<int>(rows.size()) == dim) break;
    QVec d(dim);
    for (int j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    QMat trial = rows;
    trial.push_back(d);
    if (rank_of(trial) > static_cast<int>(rows.size())) {
      rows.push_back(d);
      basis.push_back(i);
    }
  }
  return basis;
}

// Incremental placing triangulation of a full-dimensional point set.
// Simplices are only ever added; a facet shared by two simplices is
// interior for good.  New points attach pyramids over the strictly
// visible boundary facets, which keeps the decomposition exact under
// any amount of degeneracy.
struct Triangulator {
  int dim;
  const std::vector<QVec>& pts;

  struct Facet {
    QVec normal;      // oriented so that the opposite vertex is negative
    Rat offset;       // normal . x = offset on the facet
    int count = 0;    // number of incident simplices
  };

  std::vector<std::vector<int>> simplices;
  std::map<std::vector<int>, Facet> facets;

  Triangulator(int d, const std::vector<QVec>& p) : dim(d), pts(p) {}

  Rat eval(const Facet& f, const QVec& x) const {
    Rat acc = -f.offset;
    for (int j = 0; j < dim; ++j) acc += f.normal[j] * x[j];
    return acc;
  }

  void add_simplex(const std::vector<int>& ids) {
    simplices.push_back(ids);
    for (int drop = 0; drop <= dim; ++drop) {
      std::vector<int> key;
      key.reserve(dim);
      for (int k = 0; k <= dim; ++k) {
        if (k != drop) key.push_back(ids[k]);
      }
      std::sort(key.begin(), key.end());
      auto it = facets.find(key);
      if (it != facets.end()) {
        it->second.count++;
        internal_check(it->second.count <= 2, "facet incident to more than two simplices");
        continue;
      }
      Facet f;
      QMat diffs;
      for (int k = 1; k < dim; ++k) {
        QVec d(dim);
        for (int j = 0; j < dim; ++j) d[j] = pts[key[k]][j] - pts[key[0]][j];
        diffs.push_back(d);
      }
      f.normal = kernel_vector(diffs);
      f.offset = 0;
      for (int j = 0; j < dim; ++j) f.offset += f.normal[j] * pts[key[0]][j];
      f.count = 1;
      // orient outward: the simplex's remaining vertex sits on the inside
      Rat side = eval(f, pts[ids[drop]]);
      internal_check(side != 0, "degenerate simplex facet");
      if (side > 0) {
        for (auto& c : f.normal) c = -c;
        f.offset = -f.offset;
      }
      facets.emplace(std::move(key), std::move(f));
    }
  }

  void insert(int idx) {
    const QVec& p = pts[idx];
    std::vector<std::vector<int>> visible;
    for (const auto& [key, f] : facets) {
      if (f.count != 1) continue;
      if (eval(f, p) > 0) visible.push_back(key);
    }
    for (const auto& key : visible) {
      std::vector<int> ids = key;
      ids.push_back(idx);
      add_simplex(ids);
    }
  }

  void run(const std::vector<int>& init, int npts) {
    std::vector<bool> used(npts, false);
    add_simplex(init);
    for (int i : init) used[i] = true;
    for (int i = 0; i < npts; ++i) {
      if (!used[i]) insert(i);
    }
  }
};

// Primitive integer representative of a hyperplane, orientation preserved.
using HKey = std::pair<std::vector<Int>, Int>;

HKey canonical_hyperplane(const QVec& normal, const Rat& offset) {
  Int l = 1;
  for (const auto& c : normal) l = lcm(l, c.get_den());
  l = lcm(l, offset.get_den());
  std::vector<Int> n(normal.size());
  Int g = 0;
  for (size_t j = 0; j < normal.size(); ++j) {
    Rat v = normal[j] * l;
    n[j] = v.get_num();
    g = gcd(g, n[j]);
  }
  Rat ov = offset * l;
  Int o = ov.get_num();
  g = gcd(g, o);
  if (g != 0) {
    for (auto& c : n) c /= g;
    o /= g;
  }
  return {std::move(n), std::move(o)};
}

// Vertex indices of the full-dimensional hull of pts: a point is a vertex
// exactly when its active facet hyperplanes span the whole space.
std::vector<int> hull_vertices_fulldim(const std::vector<QVec>& pts, int dim) {
  if (dim == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    return {lo, hi};
  }
  Triangulator tri(dim, pts);
  std::vector<int> init = affine_basis(pts, dim);
  internal_check(static_cast<int>(init.size()) == dim + 1, "hull: rank mismatch");
  tri.run(init, static_cast<int>(pts.size()));

  std::map<HKey, int> plane_ids;
  std::map<int, std::set<int>> active;  // point -> plane ids
  for (const auto& [key, f] : tri.facets) {
    if (f.count != 1) continue;
    HKey hk = canonical_hyperplane(f.normal, f.offset);
    auto [it, fresh] = plane_ids.emplace(std::move(hk), static_cast<int>(plane_ids.size()));
    for (int v : key) active[v].insert(it->second);
  }
  std::vector<const HKey*> planes(plane_ids.size());
  for (const auto& [hk, id] : plane_ids) planes[id] = &hk;

  std::vector<int> result;
  for (const auto& [v, ids] : active) {
    QMat normals;
    for (int id : ids) {
      QVec row(dim);
      for (int j = 0; j < dim; ++j) row[j] = Rat(planes[id]->first[j]);
      normals.push_back(std::move(row));
    }
    if (rank_of(std::move(normals)) == dim) result.push_back(v);
  }
  return result;
}

// Hull vertex indices for arbitrary rank, recursing into the affine hull
// with exact rational coordinates when the set is degenerate.
std::vector<int> hull_vertex_indices(const std::vector<QVec>& pts, int dim) {
  if (pts.size() == 1) return {0};
  std::vector<int> basis = affine_basis(pts, dim);
  int r = static_cast<int>(basis.size()) - 1;
  if (r == 0) return {0};  // all points equal (callers dedupe, so unreachable)
  if (r == dim) return hull_vertices_fulldim(pts, dim);

  // Coordinates relative to the affine basis: solve with r independent rows.
  QMat b_cols;  // r x dim, rows are basis direction vectors
  for (int k = 1; k <= r; ++k) {
    QVec d(dim);
    for (int j = 0; j < dim; ++j) d[j] = pts[basis[k]][j] - pts[basis[0]][j];
    b_cols.push_back(d);
  }
  // pick r coordinate positions where the basis matrix has full rank
  std::vector<int> cols;
  {
    QMat acc;
    for (int j = 0; j < dim && static_cast<int>(cols.size()) < r; ++j) {
      QMat trial = acc;
      QVec col(r);
      for (int k = 0; k < r; ++k) col[k] = b_cols[k][j];
      trial.push_back(col);
      if (rank_of(trial) > static_cast<int>(acc.size())) {
        acc = std::move(trial);
        cols.push_back(j);
      }
    }
    internal_check(static_cast<int>(cols.size()) == r, "affine coordinate selection");
  }
  QMat sys(r, QVec(r));
  for (int a = 0; a < r; ++a) {
    for (int k = 0; k < r; ++k) sys[a][k] = b_cols[k][cols[a]];
  }
  std::vector<QVec> reduced;
  reduced.reserve(pts.size());
  for (const auto& p : pts) {
    QVec rhs(r);
    for (int a = 0; a < r; ++a) rhs[a] = p[cols[a]] - pts[basis[0]][cols[a]];
    auto x = solve_square(sys, rhs);
    internal_check(x.has_value(), "affine coordinates");
    reduced.push_back(std::move(*x));
  }
  return hull_vertices_fulldim(reduced, r);
}

Rat volume_scaled_q(const std::vector<QVec>& pts, int dim) {
  std::vector<int> basis = affine_basis(pts, dim);
  if (static_cast<int>(basis.size()) != dim + 1) return Rat(0);
  if (dim == 1) {
    Rat lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      if (p[0] < lo) lo = p[0];
      if (p[0] > hi) hi = p[0];
    }
    return hi - lo;
  }
  Triangulator tri(dim, pts);
  tri.run(basis, static_cast<int>(pts.size()));
  Rat total = 0;
  for (const auto& s : tri.simplices) {
    QMat m;
    for (int k = 1; k <= dim; ++k) {
      QVec d(dim);
      for (int j = 0; j < dim; ++j) d[j] = pts[s[k]][j] - pts[s[0]][j];
      m.push_back(std::move(d));
    }
    total += abs(det(std::move(m)));
  }
  return total;
}

std::vector<QVec> dedup_sorted_q(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<QVec> q;
  q.reserve(pts.size());
  for (const auto& p : pts) q.push_back(to_qvec(p));
  return q;
}

void check_points(int dim, const std::vector<Point>& pts) {
  require(dim >= 1 && dim <= kMaxDim, "ambient dimension must be between 1 and 6");
  require(!pts.empty(), "empty point set");
  for (const auto& p : pts) {
    require(static_cast<int>(p.size()) == dim, "point dimension mismatch");
  }
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int dim, std::vector<Point> pts) {
  check_points(dim, pts);
  std::vector<QVec> q = dedup_sorted_q(pts);
  std::vector<int> vids = hull_vertex_indices(q, dim);
  LatticePolytope result;
  result.dim = dim;
  result.generators = std::move(pts);
  result.vertices.reserve(vids.size());
  for (int i : vids) result.vertices.push_back(result.generators[i]);
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

LatticePolytope convex_hull(int dim, const std::vector<Point>& pts) {
  return LatticePolytope::from_points(dim, pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  require(p.dim == q.dim, "minkowski_sum: dimension mismatch");
  std::vector<Point> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices) {
    for (const auto& b : q.vertices) {
      Point s(p.dim);
      for (int j = 0; j < p.dim; ++j) s[j] = a[j] + b[j];
      sums.push_back(std::move(s));
    }
  }
  return LatticePolytope::from_points(p.dim, std::move(sums));
}

LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
  require(k >= 0, "dilate: negative factor");
  if (k == 0) {
    return LatticePolytope::from_points(p.dim, {Point(p.dim, Int(0))});
  }
  std::vector<Point> pts;
  pts.reserve(p.vertices.size());
  for (const auto& v : p.vertices) {
    Point s(p.dim);
    for (int j = 0; j < p.dim; ++j) s[j] = v[j] * k;
    pts.push_back(std::move(s));
  }
  return LatticePolytope::from_points(p.dim, std::move(pts));
}

LatticePolytope translate(const LatticePolytope& p, const Point& v) {
  require(static_cast<int>(v.size()) == p.dim, "translate: dimension mismatch");
  std::vector<Point> pts;
  pts.reserve(p.generators.size());
  for (const auto& g : p.generators) {
    Point s(p.dim);
    for (int j = 0; j < p.dim; ++j) s[j] = g[j] + v[j];
    pts.push_back(std::move(s));
  }
  return LatticePolytope::from_points(p.dim, std::move(pts));
}

int affine_rank(int dim, const std::vector<Point>& pts) {
  check_points(dim, pts);
  QMat rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    QVec d(dim);
    for (int j = 0; j < dim; ++j) d[j] = Rat(pts[i][j] - pts[0][j]);
    rows.push_back(std::move(d));
  }
  return rank_of(std::move(rows));
}

Int volume_scaled(const LatticePolytope& p) {
  std::vector<QVec> q;
  q.reserve(p.vertices.size());
  for (const auto& v : p.vertices) q.push_back(to_qvec(v));
  Rat vol = volume_scaled_q(q, p.dim);
  internal_check(vol.get_den() == 1, "scaled volume of a lattice polytope must be integral");
  return vol.get_num();
}

Rat euclidean_volume(const LatticePolytope& p) {
  Int f = 1;
  for (int k = 2; k <= p.dim; ++k) f *= k;
  Rat r(volume_scaled(p));
  r /= Rat(f);
  return r;
}

bool on_common_hyperplane(int dim, const std::vector<Point>& pts) {
  return affine_rank(dim, pts) < dim;
}

Int lattice_normalized_volume(int dim, const std::vector<Point>& pts) {
  check_points(dim, pts);
  std::vector<Point> work = pts;
  std::sort(work.begin(), work.end());
  work.erase(std::unique(work.begin(), work.end()), work.end());
  if (work.size() == 1) return Int(1);  // a point has normalized volume 1 (rank-0 lattice)

  // Hermite-style reduction of the difference vectors gives a basis of the
  // lattice they generate.
  std::vector<std::vector<Int>> rows;
  for (size_t i = 1; i < work.size(); ++i) {
    std::vector<Int> d(dim);
    for (int j = 0; j < dim; ++j) d[j] = work[i][j] - work[0][j];
    rows.push_back(std::move(d));
  }
  int r = 0;  // processed rows
  for (int c = 0; c < dim; ++c) {
    // eliminate column c below row r with gcd steps
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
      while (rows[i][c] != 0) {
        Int qq = rows[r][c] / rows[i][c];
        for (int j = 0; j < dim; ++j) rows[r][j] -= qq * rows[i][j];
        std::swap(rows[r], rows[i]);
      }
    }
    ++r;
  }
  rows.resize(r);
  if (r == 0) return Int(1);

  // Coordinates of every difference vector in the lattice basis are integers.
  QMat sys(r, QVec(r));
  std::vector<int> cols;
  {
    QMat acc;
    for (int j = 0; j < dim && static_cast<int>(cols.size()) < r; ++j) {
      QMat trial = acc;
      QVec col(r);
      for (int k = 0; k < r; ++k) col[k] = Rat(rows[k][j]);
      trial.push_back(col);
      if (rank_of(trial) > static_cast<int>(acc.size())) {
        acc = std::move(trial);
        cols.push_back(j);
      }
    }
    internal_check(static_cast<int>(cols.size()) == r, "difference lattice rank");
  }
  for (int a = 0; a < r; ++a) {
    for (int k = 0; k < r; ++k) sys[a][k] = Rat(rows[k][cols[a]]);
  }
  std::vector<QVec> reduced;
  reduced.push_back(QVec(r, Rat(0)));
  for (size_t i = 1; i < work.size(); ++i) {
    QVec rhs(r);
    for (int a = 0; a < r; ++a) rhs[a] = Rat(work[i][cols[a]] - work[0][cols[a]]);
    auto x = solve_square(sys, rhs);
    internal_check(x.has_value(), "lattice coordinate solve");
    for (const auto& c : *x) {
      internal_check(c.get_den() == 1, "difference vector outside its own lattice");
    }
    reduced.push_back(std::move(*x));
  }
  Rat vol = volume_scaled_q(reduced, r);
  internal_check(vol.get_den() == 1 && vol > 0, "normalized volume must be a positive integer");
  return vol.get_num();
}

namespace {

void check_tuple(const PolytopeTuple& t) {
  require(t.dim >= 1 && t.dim <= kMaxDim, "tuple dimension must be between 1 and 6");
  require(static_cast<int>(t.polytopes.size()) == t.dim,
          "tuple length must equal the ambient dimension");
  for (const auto& p : t.polytopes) {
    require(p.dim == t.dim, "tuple polytope dimension mismatch");
  }
}

}  // namespace

Rat mixed_volume_ie(const PolytopeTuple& t) {
  check_tuple(t);
  const int n = t.dim;
  // partial Minkowski sums shared along the subset lattice
  std::vector<LatticePolytope> sums(1u << n);
  Int acc = 0;  // accumulates the alternating sum of n! * vol
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int top = __builtin_ctz(mask & ~low);
    if (low == 0) {
      sums[mask] = t.polytopes[top];
    } else {
      sums[mask] = minkowski_sum(sums[low], t.polytopes[top]);
    }
    Int v = volume_scaled(sums[mask]);
    if ((n - __builtin_popcount(mask)) % 2 == 0) acc += v;
    else acc -= v;
  }
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  Rat r(acc);
  r /= Rat(f);
  return r;
}

namespace {

// compositions of total into parts non-negative entries
void compositions(int total, int parts, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

Rat volume_of_combination(const PolytopeTuple& t, const std::vector<long>& lambda) {
  LatticePolytope acc = dilate(t.polytopes[0], Int(lambda[0]));
  for (int i = 1; i < t.dim; ++i) {
    acc = minkowski_sum(acc, dilate(t.polytopes[i], Int(lambda[i])));
  }
  return euclidean_volume(acc);
}

}  // namespace

Rat mixed_volume_interp(const PolytopeTuple& t) {
  check_tuple(t);
  const int n = t.dim;
  std::vector<std::vector<long>> alphas;
  {
    std::vector<long> cur;
    compositions(n, n, cur, alphas);
  }
  const int m = static_cast<int>(alphas.size());
  // node for exponent alpha: lambda = alpha + (1,...,1); this node family is
  // unisolvent for homogeneous degree-n polynomials in n variables
  QMat a(m, QVec(m));
  QVec rhs(m);
  for (int i = 0; i < m; ++i) {
    std::vector<long> lambda(n);
    for (int j = 0; j < n; ++j) lambda[j] = alphas[i][j] + 1;
    for (int k = 0; k < m; ++k) {
      Rat v = 1;
      for (int j = 0; j < n; ++j) {
        for (long e = 0; e < alphas[k][j]; ++e) v *= lambda[j];
      }
      a[i][k] = v;
    }
    rhs[i] = volume_of_combination(t, lambda);
  }
  auto coeffs = solve_square(std::move(a), std::move(rhs));
  internal_check(coeffs.has_value(), "interpolation system singular");

  // held-out check at lambda = (1,...,1)
  Rat fit = 0;
  for (int k = 0; k < m; ++k) fit += (*coeffs)[k];
  std::vector<long> ones(n, 1);
  internal_check(fit == volume_of_combination(t, ones),
                 "interpolation fit failed its held-out node");

  std::vector<long> target(n, 1);
  for (int k = 0; k < m; ++k) {
    if (alphas[k] == target) return (*coeffs)[k];
  }
  internal_check(false, "mixed coefficient not found");
  return Rat(0);
}

Int mixed_volume(const PolytopeTuple& t) {
  Rat v = mixed_volume_ie(t);
  internal_check(v.get_den() == 1, "mixed volume of lattice polytopes must be integral");
  internal_check(v >= 0, "mixed volume must be non-negative");
  return v.get_num();
}

}  // namespace mixedvol
