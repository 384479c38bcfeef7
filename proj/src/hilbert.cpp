#include "mixedvol/hilbert.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "mixedvol/errors.hpp"

namespace mixedvol {

MonomialSet::MonomialSet(int nv, std::vector<Expo> exps) {
  require(nv >= 1, "monomial set needs at least one variable");
  require(!exps.empty(), "monomial set must be non-empty");
  num_vars = nv;
  for (const auto& e : exps) {
    require(static_cast<int>(e.size()) == nv, "exponent vector length mismatch");
    long sum = 0;
    for (long x : e) {
      require(x >= 0, "exponents must be non-negative");
      sum += x;
    }
    if (&e == &exps.front()) degree = sum;
    require(sum == degree, "all monomials in a set must have the same degree");
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  exponents = std::move(exps);
}

MonomialSet MonomialSet::units(int nv) {
  std::vector<Expo> exps;
  for (int i = 0; i < nv; ++i) {
    Expo e(nv, 0);
    e[i] = 1;
    exps.push_back(std::move(e));
  }
  return MonomialSet(nv, std::move(exps));
}

MonomialConfiguration::MonomialConfiguration(int nv, std::vector<MonomialSet> all_sets) {
  require(nv >= 2, "configuration needs at least two variables");
  require(!all_sets.empty(), "configuration needs at least the unit set");
  num_vars = nv;
  for (const auto& m : all_sets) {
    require(m.num_vars == nv, "configuration sets must share the variable count");
  }
  const MonomialSet u = MonomialSet::units(nv);
  require(all_sets[0].exponents == u.exponents, "set 0 must be the unit-vector set");
  sets = std::move(all_sets);
}

MonomialConfiguration MonomialConfiguration::with_default_m0(int nv,
                                                             std::vector<MonomialSet> js) {
  std::vector<MonomialSet> all;
  all.push_back(MonomialSet::units(nv));
  for (auto& j : js) all.push_back(std::move(j));
  return MonomialConfiguration(nv, std::move(all));
}

namespace {

struct VecHash {
  size_t operator()(const Expo& v) const {
    size_t h = 1469598103934665603ull;
    for (long x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using ExpoSet = std::unordered_set<Expo, VecHash>;

ExpoSet pairwise_sum(const ExpoSet& a, const std::vector<Expo>& b) {
  ExpoSet out;
  out.reserve(a.size() * 2);
  const size_t n = b.empty() ? 0 : b[0].size();
  for (const auto& x : a) {
    for (const auto& y : b) {
      Expo s(n);
      for (size_t j = 0; j < n; ++j) s[j] = x[j] + y[j];
      out.insert(std::move(s));
    }
  }
  return out;
}

}  // namespace

std::vector<Expo> sumset_power(const std::vector<Expo>& m, long h) {
  require(h >= 0, "sumset power must be non-negative");
  require(!m.empty(), "sumset power of an empty set");
  ExpoSet acc;
  acc.insert(Expo(m[0].size(), 0));
  for (long k = 0; k < h; ++k) acc = pairwise_sum(acc, m);
  std::vector<Expo> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Expo> sumset_power(const MonomialSet& m, long h) { return sumset_power(m.exponents, h); }

// ---------------------------------------------------------------------------
// Hilbert evaluator.
//
// All sets of a configuration consist of equal-degree vectors, so every
// partial Minkowski sum lies on a fixed hyperplane of coordinate sums and
// dropping coordinate 0 is injective.  The evaluation therefore happens in
// the projected space of dimension num_vars - 1.  For projected dimension
// <= 3 the point sets are dense enough that bitmap grids with shifted ORs
// beat hash sets by orders of magnitude; higher dimensions fall back to
// hashing.

namespace {

constexpr long kMaxGridBits = 1L << 28;

struct Grid {
  int n = 1;
  std::array<long, 3> ext{1, 1, 1};
  long row_words = 0;
  std::vector<std::uint64_t> words;

  void init(int n_, std::array<long, 3> ext_) {
    n = n_;
    ext = ext_;
    row_words = (ext[0] + 63) / 64;
    words.assign(static_cast<size_t>(row_words) * ext[1] * ext[2], 0);
  }

  std::uint64_t* row(long y, long z) { return words.data() + (z * ext[1] + y) * row_words; }
  const std::uint64_t* row(long y, long z) const {
    return words.data() + (z * ext[1] + y) * row_words;
  }

  void set_origin() { words[0] |= 1ull; }

  long long popcount() const {
    long long c = 0;
    for (std::uint64_t w : words) c += __builtin_popcountll(w);
    return c;
  }
};

// dst |= src shifted by (sx, sy, sz); shapes match, shifted bits must fit.
void shift_or(Grid& dst, const Grid& src, long sx, long sy, long sz) {
  const long woff = sx / 64;
  const int boff = static_cast<int>(sx % 64);
  const long rw = src.row_words;
  for (long z = 0; z + sz < src.ext[2]; ++z) {
    for (long y = 0; y + sy < src.ext[1]; ++y) {
      const std::uint64_t* s = src.row(y, z);
      std::uint64_t* d = dst.row(y + sy, z + sz);
      if (boff == 0) {
        for (long w = 0; w + woff < rw; ++w) d[w + woff] |= s[w];
      } else {
        for (long w = rw - 1 - woff; w >= 0; --w) {
          std::uint64_t v = s[w];
          d[w + woff] |= v << boff;
          if (w + woff + 1 < rw) d[w + woff + 1] |= v >> (64 - boff);
        }
      }
    }
  }
}

}  // namespace

struct HilbertEvaluator::Impl {
  MonomialConfiguration config;
  int nproj = 0;                              // num_vars - 1
  std::vector<std::vector<Expo>> proj;        // per set, projected exponents
  std::vector<std::array<long, 3>> maxexp;    // per set, per projected axis
  std::map<MultiIndex, long long> value_cache;
  // hash-path memo for sumset powers, keyed per set
  std::vector<std::map<long, std::vector<Expo>>> power_memo;

  explicit Impl(const MonomialConfiguration& c) : config(c) {
    nproj = c.num_vars - 1;
    proj.resize(c.sets.size());
    maxexp.assign(c.sets.size(), {0, 0, 0});
    power_memo.resize(c.sets.size());
    for (size_t i = 0; i < c.sets.size(); ++i) {
      for (const auto& e : c.sets[i].exponents) {
        Expo p(e.begin() + 1, e.end());
        for (int j = 0; j < std::min(nproj, 3); ++j) {
          maxexp[i][j] = std::max(maxexp[i][j], p[j]);
        }
        proj[i].push_back(std::move(p));
      }
    }
  }

  bool bitmap_usable(const MultiIndex& umax, std::array<long, 3>& ext) const {
    if (nproj > 3) return false;
    ext = {1, 1, 1};
    for (int j = 0; j < nproj; ++j) {
      long e = 1;
      for (size_t i = 0; i < proj.size(); ++i) e += umax[i] * maxexp[i][j];
      ext[j] = e;
    }
    long bits = 1;
    for (int j = 0; j < 3; ++j) {
      if (bits > kMaxGridBits / std::max(ext[j], 1L)) return false;
      bits *= ext[j];
    }
    return bits <= kMaxGridBits;
  }

  void fold_steps(Grid& g, size_t set_idx, long steps, const std::array<long, 3>& ext) const {
    for (long k = 0; k < steps; ++k) {
      Grid nxt;
      nxt.init(g.n, ext);
      for (const auto& p : proj[set_idx]) {
        shift_or(nxt, g, p.size() > 0 ? p[0] : 0, p.size() > 1 ? p[1] : 0,
                 p.size() > 2 ? p[2] : 0);
      }
      g = std::move(nxt);
    }
  }

  void box_rec(size_t level, const Grid& pre, const MultiIndex& base, const MultiIndex& extra,
               MultiIndex& delta, const std::array<long, 3>& ext,
               std::map<MultiIndex, long long>& out) {
    if (level == proj.size()) {
      out[delta] = pre.popcount();
      return;
    }
    Grid g = pre;
    fold_steps(g, level, base[level], ext);
    for (long d = 0; d <= extra[level]; ++d) {
      if (d > 0) fold_steps(g, level, 1, ext);
      delta[level] = d;
      box_rec(level + 1, g, base, extra, delta, ext, out);
    }
    delta[level] = 0;
  }

  // --- hash fallback ---------------------------------------------------

  const std::vector<Expo>& power(size_t set_idx, long h) {
    auto& memo = power_memo[set_idx];
    auto it = memo.find(h);
    if (it != memo.end()) return it->second;
    std::vector<Expo> result;
    if (h == 0) {
      result.push_back(Expo(nproj, 0));
    } else {
      const auto& prev = power(set_idx, h - 1);
      ExpoSet acc;
      acc.reserve(prev.size() * 2);
      for (const auto& x : prev) {
        for (const auto& y : proj[set_idx]) {
          Expo s(nproj);
          for (int j = 0; j < nproj; ++j) s[j] = x[j] + y[j];
          acc.insert(std::move(s));
        }
      }
      result.assign(acc.begin(), acc.end());
      std::sort(result.begin(), result.end());
    }
    return memo.emplace(h, std::move(result)).first->second;
  }

  void box_rec_hash(size_t level, const ExpoSet& pre, const MultiIndex& base,
                    const MultiIndex& extra, MultiIndex& delta,
                    std::map<MultiIndex, long long>& out) {
    if (level == proj.size()) {
      out[delta] = static_cast<long long>(pre.size());
      return;
    }
    ExpoSet g = base[level] == 0 ? pre : pairwise_sum(pre, power(level, base[level]));
    for (long d = 0; d <= extra[level]; ++d) {
      if (d > 0) g = pairwise_sum(g, proj[level]);
      delta[level] = d;
      box_rec_hash(level + 1, g, base, extra, delta, out);
    }
    delta[level] = 0;
  }

  std::map<MultiIndex, long long> box(const MultiIndex& base, const MultiIndex& extra) {
    std::map<MultiIndex, long long> out;
    MultiIndex umax(base.size());
    for (size_t i = 0; i < base.size(); ++i) umax[i] = base[i] + extra[i];
    std::array<long, 3> ext;
    MultiIndex delta(base.size(), 0);
    if (bitmap_usable(umax, ext)) {
      Grid start;
      start.init(std::max(nproj, 1), ext);
      start.set_origin();
      box_rec(0, start, base, extra, delta, ext, out);
    } else {
      ExpoSet start;
      start.insert(Expo(nproj, 0));
      box_rec_hash(0, start, base, extra, delta, out);
    }
    for (const auto& [d, cnt] : out) {
      MultiIndex u(base.size());
      for (size_t i = 0; i < base.size(); ++i) u[i] = base[i] + d[i];
      value_cache[u] = cnt;
    }
    return out;
  }

  long long value(const MultiIndex& u) {
    auto it = value_cache.find(u);
    if (it != value_cache.end()) return it->second;
    MultiIndex extra(u.size(), 0);
    return box(u, extra).begin()->second;
  }

  std::vector<long long> ray(const MultiIndex& lambda, long t0, long t1) {
    std::vector<long long> out;
    MultiIndex umax(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) umax[i] = lambda[i] * t1;
    std::array<long, 3> ext;
    if (bitmap_usable(umax, ext)) {
      Grid g;
      g.init(std::max(nproj, 1), ext);
      g.set_origin();
      for (size_t i = 0; i < lambda.size(); ++i) fold_steps(g, i, lambda[i] * t0, ext);
      out.push_back(g.popcount());
      for (long t = t0 + 1; t <= t1; ++t) {
        for (size_t i = 0; i < lambda.size(); ++i) fold_steps(g, i, lambda[i], ext);
        out.push_back(g.popcount());
      }
    } else {
      ExpoSet g;
      g.insert(Expo(nproj, 0));
      for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] * t0 > 0) g = pairwise_sum(g, power(i, lambda[i] * t0));
      }
      out.push_back(static_cast<long long>(g.size()));
      for (long t = t0 + 1; t <= t1; ++t) {
        for (size_t i = 0; i < lambda.size(); ++i) {
          for (long k = 0; k < lambda[i]; ++k) g = pairwise_sum(g, proj[i]);
        }
        out.push_back(static_cast<long long>(g.size()));
      }
    }
    return out;
  }
};

HilbertEvaluator::HilbertEvaluator(const MonomialConfiguration& c)
    : impl_(std::make_unique<Impl>(c)) {}
HilbertEvaluator::~HilbertEvaluator() = default;
HilbertEvaluator::HilbertEvaluator(HilbertEvaluator&&) noexcept = default;

long long HilbertEvaluator::value(const MultiIndex& u) {
  require(u.size() == impl_->config.sets.size(), "multi-index length mismatch");
  for (long x : u) require(x >= 0, "multi-index entries must be non-negative");
  return impl_->value(u);
}

std::map<MultiIndex, long long> HilbertEvaluator::box(const MultiIndex& base,
                                                      const MultiIndex& extra) {
  return impl_->box(base, extra);
}

std::vector<long long> HilbertEvaluator::ray(const MultiIndex& lambda, long t0, long t1) {
  return impl_->ray(lambda, t0, t1);
}

long long hilbert_value(const MonomialConfiguration& c, const MultiIndex& u) {
  HilbertEvaluator ev(c);
  return ev.value(u);
}

// ---------------------------------------------------------------------------
// Finite differences.

namespace {

long long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// sum over 0 <= delta <= alpha of (-1)^{|alpha - delta|} C(alpha, delta) * box[delta + shift]
long long stencil(const std::map<MultiIndex, long long>& box, const MultiIndex& alpha,
                  long shift) {
  const size_t k = alpha.size();
  MultiIndex delta(k, 0);
  long long acc = 0;
  for (;;) {
    long long coef = 1;
    long par = 0;
    for (size_t i = 0; i < k; ++i) {
      coef *= binom(alpha[i], delta[i]);
      par += alpha[i] - delta[i];
    }
    MultiIndex at(k);
    for (size_t i = 0; i < k; ++i) at[i] = delta[i] + shift;
    acc += (par % 2 == 0 ? coef : -coef) * box.at(at);
    size_t i = 0;
    while (i < k && delta[i] == alpha[i]) delta[i++] = 0;
    if (i == k) break;
    ++delta[i];
  }
  return acc;
}

}  // namespace

long default_fd_base(const MonomialConfiguration& c) {
  long n = c.num_vars - 1;
  long maxc = 0;
  for (const auto& m : c.sets) {
    for (const auto& e : m.exponents) {
      for (long x : e) maxc = std::max(maxc, x);
    }
  }
  return n * maxc + n + 2;
}

FdComputation mixed_multiplicity_fd_info(const MonomialConfiguration& c,
                                         const MultiIndex& alpha, const FdOptions& opts) {
  require(alpha.size() == c.sets.size(), "alpha length must match the configuration");
  long total = 0;
  for (long a : alpha) {
    require(a >= 0, "alpha entries must be non-negative");
    total += a;
  }
  const long r = c.num_vars - 1;
  require(total == r, "|alpha| must equal the Hilbert polynomial degree");

  HilbertEvaluator ev(c);
  long base = opts.base_override > 0 ? opts.base_override : default_fd_base(c);
  for (int attempt = 0; attempt <= opts.max_doublings; ++attempt) {
    MultiIndex b(alpha.size(), base), extra(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) extra[i] = alpha[i] + 1;
    auto counts = ev.box(b, extra);
    long long d0 = stencil(counts, alpha, 0);
    long long d1 = stencil(counts, alpha, 1);
    if (d0 == d1) {
      internal_check(d0 >= 0, "mixed multiplicities are non-negative");
      return {d0, base, attempt};
    }
    base *= 2;
  }
  throw NonStabilizedError("finite difference did not stabilize; try a larger base");
}

long long mixed_multiplicity_fd(const MonomialConfiguration& c, const MultiIndex& alpha,
                                const FdOptions& opts) {
  return mixed_multiplicity_fd_info(c, alpha, opts).value;
}

long long diagonal_multiplicity(const MonomialConfiguration& c, const MultiIndex& lambda,
                                const FdOptions& opts) {
  require(lambda.size() == c.sets.size(), "lambda length must match the configuration");
  for (long l : lambda) require(l >= 1, "lambda entries must be positive");
  const long r = c.num_vars - 1;

  HilbertEvaluator ev(c);
  long base = opts.base_override > 0 ? opts.base_override : default_fd_base(c);
  for (int attempt = 0; attempt <= opts.max_doublings; ++attempt) {
    std::vector<long long> g = ev.ray(lambda, base, base + r + 1);
    auto diff_at = [&](long off) {
      long long acc = 0;
      for (long k = 0; k <= r; ++k) {
        long long term = binom(r, k) * g[off + k];
        acc += ((r - k) % 2 == 0) ? term : -term;
      }
      return acc;
    };
    long long d0 = diff_at(0), d1 = diff_at(1);
    if (d0 == d1) {
      internal_check(d0 > 0, "diagonal multiplicity must be positive");
      return d0;
    }
    base *= 2;
  }
  throw NonStabilizedError("diagonal multiplicity did not stabilize; try a larger base");
}

namespace {

void compositions_of(long total, int parts, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions_of(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

Int factorial(long n) {
  Int f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

MixedMultiplicityVector mixed_mults_via_diagonals(const MonomialConfiguration& c,
                                                  const FdOptions& opts) {
  const long r = c.num_vars - 1;
  const int slots = static_cast<int>(c.sets.size());
  std::vector<MultiIndex> alphas;
  {
    MultiIndex cur;
    compositions_of(r, slots, cur, alphas);
  }
  const int m = static_cast<int>(alphas.size());
  const Int rf = factorial(r);

  // rows: lambda = alpha + 1; unknowns e_alpha in
  //   sum_alpha (r!/alpha!) lambda^alpha e_alpha = e(R^lambda)
  QMat a(m, QVec(m));
  QVec rhs(m);
  for (int i = 0; i < m; ++i) {
    MultiIndex lambda(slots);
    for (int j = 0; j < slots; ++j) lambda[j] = alphas[i][j] + 1;
    for (int k = 0; k < m; ++k) {
      Int fa = 1;
      for (int j = 0; j < slots; ++j) fa *= factorial(alphas[k][j]);
      Rat coef = Rat(rf) / Rat(fa);
      for (int j = 0; j < slots; ++j) {
        for (long e = 0; e < alphas[k][j]; ++e) coef *= lambda[j];
      }
      a[i][k] = coef;
    }
    rhs[i] = Rat(static_cast<long>(diagonal_multiplicity(c, lambda, opts)));
  }
  auto sol = solve_square(std::move(a), std::move(rhs));
  internal_check(sol.has_value(), "diagonal interpolation system singular");

  MixedMultiplicityVector out;
  out.total_degree = r;
  for (int k = 0; k < m; ++k) {
    const Rat& v = (*sol)[k];
    internal_check(v.get_den() == 1 && v >= 0,
                   "mixed multiplicities must be non-negative integers");
    out.values[alphas[k]] = static_cast<long long>(v.get_num().get_si());
  }

  // held-out lambda = (1,...,1)
  MultiIndex ones(slots, 1);
  Rat fit = 0;
  for (int k = 0; k < m; ++k) {
    Int fa = 1;
    for (int j = 0; j < slots; ++j) fa *= factorial(alphas[k][j]);
    fit += Rat(rf) / Rat(fa) * Rat(static_cast<long>(out.values.at(alphas[k])));
  }
  internal_check(fit == Rat(static_cast<long>(diagonal_multiplicity(c, ones, opts))),
                 "diagonal fit failed its held-out lambda");
  return out;
}

MonomialConfiguration configuration_of_tuple(const PolytopeTuple& t) {
  require(static_cast<int>(t.polytopes.size()) == t.dim,
          "tuple length must equal the ambient dimension");
  const int n = t.dim;
  std::vector<MonomialSet> js;
  for (const auto& p : t.polytopes) {
    // translate into the non-negative orthant
    std::vector<Int> mins(n);
    for (int j = 0; j < n; ++j) mins[j] = p.generators[0][j];
    for (const auto& g : p.generators) {
      for (int j = 0; j < n; ++j) mins[j] = std::min(mins[j], g[j]);
    }
    long d = 0;
    std::vector<Expo> shifted;
    for (const auto& g : p.generators) {
      Expo e(n);
      long sum = 0;
      for (int j = 0; j < n; ++j) {
        Int c = g[j] - mins[j];
        require(c.fits_slong_p(), "coordinate too large for homogenization");
        e[j] = c.get_si();
        require(e[j] >= 0, "negative coordinate after translation");
        sum += e[j];
      }
      d = std::max(d, sum);
      shifted.push_back(std::move(e));
    }
    std::vector<Expo> homog;
    for (const auto& e : shifted) {
      Expo h(n + 1);
      long sum = 0;
      for (int j = 0; j < n; ++j) sum += e[j];
      h[0] = d - sum;
      for (int j = 0; j < n; ++j) h[j + 1] = e[j];
      homog.push_back(std::move(h));
    }
    js.push_back(MonomialSet(n + 1, std::move(homog)));
  }
  return MonomialConfiguration::with_default_m0(n + 1, std::move(js));
}

long long mv_via_algebra(const PolytopeTuple& t, const FdOptions& opts) {
  MonomialConfiguration c = configuration_of_tuple(t);
  MultiIndex alpha(t.dim + 1, 1);
  alpha[0] = 0;
  return mixed_multiplicity_fd(c, alpha, opts);
}

DegreeLawReport verify_degree_law(const MonomialConfiguration& c, const FdOptions& opts) {
  DegreeLawReport rep;
  rep.expected = c.num_vars - 1;
  MultiIndex top(c.sets.size(), 0);
  top[0] = rep.expected;
  rep.top_nonzero = mixed_multiplicity_fd(c, top, opts) != 0;

  rep.higher_vanish = true;
  std::vector<MultiIndex> betas;
  {
    MultiIndex cur;
    compositions_of(rep.expected + 1, static_cast<int>(c.sets.size()), cur, betas);
  }
  HilbertEvaluator ev(c);
  long base = opts.base_override > 0 ? opts.base_override : default_fd_base(c);
  for (const auto& beta : betas) {
    MultiIndex b(beta.size(), base), extra(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) extra[i] = beta[i] + 1;
    auto counts = ev.box(b, extra);
    if (stencil(counts, beta, 0) != 0 || stencil(counts, beta, 1) != 0) {
      rep.higher_vanish = false;
      break;
    }
  }
  rep.observed = (rep.top_nonzero && rep.higher_vanish) ? rep.expected
                 : (!rep.higher_vanish ? rep.expected + 1 : rep.expected - 1);
  return rep;
}

ProbeAfReport probe_af(const MonomialConfiguration& c, const FdOptions& opts) {
  const int s = c.s();
  require(s == c.num_vars - 1, "probe requires as many ideals as the polytope dimension");
  require(s >= 2, "probe requires at least two ideals");
  MultiIndex alpha(c.sets.size(), 1);
  alpha[0] = 0;

  auto swapped = [&](int which) {
    std::vector<MonomialSet> sets = c.sets;
    if (which == 1) sets[2] = sets[1];
    else sets[1] = sets[2];
    return MonomialConfiguration(c.num_vars, std::move(sets));
  };

  ProbeAfReport rep;
  rep.e = mixed_multiplicity_fd(c, alpha, opts);
  rep.e11 = mixed_multiplicity_fd(swapped(1), alpha, opts);
  rep.e22 = mixed_multiplicity_fd(swapped(2), alpha, opts);
  rep.lhs = rep.e * rep.e;
  rep.rhs = rep.e11 * rep.e22;
  rep.comparison = rep.lhs > rep.rhs ? 1 : (rep.lhs < rep.rhs ? -1 : 0);
  rep.hypothesis_ok = rep.e > 0 && rep.e11 > 0 && rep.e22 > 0;
  return rep;
}

}  // namespace mixedvol
