#include "lindeg/loci.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "lindeg/error.hpp"
#include "lindeg/homalg.hpp"
#include "lindeg/named.hpp"

namespace lindeg {

namespace {

void require_flag_dims(const RankTuple& rt) {
  if (rt.n() < 1 || rt.diag() != DimVector::constant(rt.n(), rt.n() + 1)) {
    throw Error(ErrorCode::WrongDims, "rank tuple needs dimension vector (n+1,...,n+1)");
  }
}

bool is_flat(const RankTuple& rt) {
  const int n = rt.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (rt(i, j) < n - j + i) return false;
    }
  }
  return true;
}

bool is_flat_irreducible(const RankTuple& rt) {
  const int n = rt.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (rt(i, j) < n + 1 - j + i) return false;
    }
  }
  return true;
}

}  // namespace

LocusReport classify(const RankTuple& rt) {
  require_flag_dims(rt);
  if (auto v = rt.violation()) throw Error(ErrorCode::NonRealizable, *v);
  const int n = rt.n();
  LocusReport rep;
  rep.flat = is_flat(rt);
  rep.irreducible = rep.flat && is_flat_irreducible(rt);
  rep.normal = rep.flat && rep.irreducible;
  rep.iso = rt == rank_tuple_r0(n);
  rep.pbw = rep.irreducible;
  for (int i = 1; i <= n && rep.pbw; ++i) {
    for (int j = i + 1; j <= n && rep.pbw; ++j) {
      int sum = 0;
      for (int k = i; k < j; ++k) sum += n + 1 - rt(k, k + 1);
      if (n + 1 - rt(i, j) != sum) rep.pbw = false;
    }
  }
  if (!rep.irreducible) rep.witness = witness(rt);
  return rep;
}

IsoClass witness_orbit(int n, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Index: return m_single_defect(n, w.i);
    case Witness::Kind::Pair: return m_pair_defect(n, w.i, w.j - 1);
    case Witness::Kind::None: break;
  }
  throw Error(ErrorCode::NoWitness, "no witness");
}

Witness witness(const RankTuple& rt) {
  require_flag_dims(rt);
  const int n = rt.n();
  Witness w;
  if (is_flat(rt)) {
    if (is_flat_irreducible(rt)) throw Error(ErrorCode::NoWitness, "rank tuple lies in the flat irreducible locus");
    for (int i = 1; i < n && w.kind == Witness::Kind::None; ++i) {
      if (rt(i, i + 1) == n - 1) w = Witness::index(i);
    }
  } else {
    for (int len = 1; len < n && w.kind == Witness::Kind::None; ++len) {
      for (int i = 1; i + len <= n; ++i) {
        if (rt(i, i + len) <= n - len - 1) {
          w = Witness::pair(i, i + len);
          break;
        }
      }
    }
  }
  if (w.kind == Witness::Kind::None || !degenerates_to(ranks_from_iso(witness_orbit(n, w)), rt)) {
    throw std::logic_error("witness search failed for a rank tuple outside the flat irreducible locus");
  }
  return w;
}

bool RhymeScheme::valid() const {
  int mx = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] < 0 || b[k] > mx + 1) return false;
    mx = std::max(mx, b[k]);
  }
  return true;
}

void RhymeScheme::validate() const {
  if (!valid()) throw Error(ErrorCode::InvalidScheme, "not a broken rhyme scheme: " + to_string());
}

std::string RhymeScheme::to_string() const {
  std::string s;
  for (int x : b) s += std::to_string(x) + (x > 9 ? "," : "");
  return s.empty() ? "()" : s;
}

std::vector<RhymeScheme> rhyme_enumerate(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "rhyme schemes need n >= 1");
  std::vector<RhymeScheme> out;
  RhymeScheme cur{std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int mx) {
    if (k == cur.b.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      cur.b[k] = v;
      rec(k + 1, std::max(mx, v));
    }
  };
  rec(0, 0);
  return out;
}

bool is_regular(const RhymeScheme& s) {
  s.validate();
  std::set<int> seen;
  for (int x : s.b) {
    if (x != 0 && !seen.insert(x).second) return false;
  }
  return true;
}

MatrixRep scheme_to_rep(const RhymeScheme& s) {
  s.validate();
  const int n = s.n();
  const auto dim = static_cast<std::size_t>(n + 1);
  MatrixRep rep{DimVector::constant(n, n + 1), Field::rationals(), {}};
  for (int x : s.b) {
    Matrix f = identity_matrix(dim);
    if (x != 0) f(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x - 1)) = 0;
    rep.maps.push_back(std::move(f));
  }
  return rep;
}

RankTuple scheme_to_ranks(const RhymeScheme& s) {
  s.validate();
  const int n = s.n();
  RankTuple rt(DimVector::constant(n, n + 1));
  for (int i = 1; i <= n; ++i) {
    std::set<int> values;
    for (int j = i + 1; j <= n; ++j) {
      int x = s.b[static_cast<std::size_t>(j - 2)];
      if (x != 0) values.insert(x);
      rt.set(i, j, n + 1 - static_cast<int>(values.size()));
    }
  }
  return rt;
}

ProjSeq dseq_of_scheme(const RhymeScheme& s) {
  if (!is_regular(s)) throw Error(ErrorCode::NotRegular, "scheme " + s.to_string() + " is not regular");
  ProjSeq p{s.n(), {}};
  for (std::size_t k = 0; k < s.b.size(); ++k) {
    if (s.b[k] != 0) p.seq.push_back(static_cast<int>(k) + 1);
  }
  return p;
}

RhymeScheme scheme_of_dseq(const ProjSeq& seq) {
  seq.validate();
  RhymeScheme s{std::vector<int>(static_cast<std::size_t>(seq.n - 1), 0)};
  for (std::size_t t = 0; t < seq.seq.size(); ++t) {
    s.b[static_cast<std::size_t>(seq.seq[t] - 1)] = static_cast<int>(t) + 1;
  }
  return s;
}

namespace {

// Realizable rank tuples with dims (n+1, ...) dominating `lower`.
std::vector<RankTuple> rank_tuples_dominating(const RankTuple& lower) {
  const int n = lower.n();
  RankTuple cur(DimVector::constant(n, n + 1));
  std::vector<RankTuple> out;
  auto m_ok = [&](int i, int j) {
    return cur(i, j) - cur(i, j + 1) - cur(i - 1, j) + cur(i - 1, j + 1) >= 0;
  };
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (j == i) {
      if (!m_ok(i, i)) return;
      if (i == n) {
        if (cur.valid()) out.push_back(cur);
        return;
      }
      rec(i + 1, n);
      return;
    }
    for (int v = lower(i, j); v <= n + 1; ++v) {
      cur.set(i, j, v);
      if (m_ok(i, j)) rec(i, j - 1);
    }
    cur.set(i, j, 0);
  };
  rec(1, n);
  std::sort(out.begin(), out.end());
  return out;
}

// Multisets of non-empty membership masks over positions 0..n-2, one mask
// per label, with at most two labels per position and at most three per
// adjacent pair, and at most n+1 labels.
std::uint64_t count_label_patterns(int n) {
  const int positions = n - 1;
  const unsigned masks = 1u << positions;
  std::vector<int> per_pos(static_cast<std::size_t>(positions), 0);
  std::vector<int> per_pair(static_cast<std::size_t>(std::max(positions - 1, 0)), 0);
  std::uint64_t count = 0;
  std::function<void(unsigned, int)> rec = [&](unsigned from, int labels) {
    ++count;
    if (labels == n + 1) return;
    for (unsigned mask = std::max(from, 1u); mask < masks; ++mask) {
      bool ok = true;
      for (int p = 0; p < positions && ok; ++p) {
        if ((mask >> p & 1u) && per_pos[static_cast<std::size_t>(p)] == 2) ok = false;
      }
      for (int p = 0; p + 1 < positions && ok; ++p) {
        if ((mask >> p & 3u) && per_pair[static_cast<std::size_t>(p)] == 3) ok = false;
      }
      if (!ok) continue;
      for (int p = 0; p < positions; ++p) per_pos[static_cast<std::size_t>(p)] += static_cast<int>(mask >> p & 1u);
      for (int p = 0; p + 1 < positions; ++p) per_pair[static_cast<std::size_t>(p)] += (mask >> p & 3u) ? 1 : 0;
      rec(mask, labels + 1);
      for (int p = 0; p < positions; ++p) per_pos[static_cast<std::size_t>(p)] -= static_cast<int>(mask >> p & 1u);
      for (int p = 0; p + 1 < positions; ++p) per_pair[static_cast<std::size_t>(p)] -= (mask >> p & 3u) ? 1 : 0;
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

std::vector<RankTuple> flat_rank_tuples(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "census needs n >= 1");
  return rank_tuples_dominating(rank_tuple_r2(n));
}

OrbitCensus flat_orbit_census(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "census needs n >= 1");
  return {flat_rank_tuples(n).size(), count_label_patterns(n)};
}

MatrixRep slice_rep(int n, const SliceParams& lambda) {
  if (n < 1 || lambda.n() != n - 1 || lambda.strict()) {
    throw Error(ErrorCode::ShapeMismatch, "slice parameters must be lambda(i,j), 1 <= i <= j <= n-1");
  }
  const auto dim = static_cast<std::size_t>(n + 1);
  MatrixRep rep{DimVector::constant(n, n + 1), Field::rationals(), {}};
  for (int i = 1; i < n; ++i) {
    Matrix f(dim, dim, 0);
    for (int p = 1; p <= n + 1; ++p) {
      for (int q = 1; q <= n + 1; ++q) {
        Rational v = 0;
        if (p == q && p != i + 1) v = 1;
        if (2 <= p && p <= i + 1 && i + 1 <= q && q <= n) v = lambda(p - 1, q - 1);
        f(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)) = v;
      }
    }
    rep.maps.push_back(std::move(f));
  }
  return rep;
}

MatrixRep slice_pbw(int n, const std::vector<Rational>& diag) {
  if (n < 1 || static_cast<int>(diag.size()) != n - 1) {
    throw Error(ErrorCode::ShapeMismatch, "PBW slice needs n-1 diagonal parameters");
  }
  SliceParams lambda(n - 1, false, Rational(0));
  for (int i = 1; i < n; ++i) lambda(i, i) = diag[static_cast<std::size_t>(i - 1)];
  return slice_rep(n, lambda);
}

std::vector<Matrix> gamma_pbw(int n, const std::vector<Rational>& diag, const Matrix& x) {
  const auto dim = static_cast<std::size_t>(n + 1);
  if (n < 1 || static_cast<int>(diag.size()) != n - 1 || x.rows() != dim || x.cols() != dim) {
    throw Error(ErrorCode::ShapeMismatch, "gamma needs n-1 parameters and an (n+1)x(n+1) x");
  }
  auto lam = [&](int k) -> const Rational& { return diag[static_cast<std::size_t>(k - 1)]; };
  std::vector<Matrix> g;
  for (int i = 1; i <= n; ++i) {
    Matrix m(dim, dim, 0);
    for (int p = 1; p <= n + 1; ++p) {
      for (int q = 1; q <= p; ++q) {
        const Rational& xpq = x(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1));
        Rational v;
        if (p == q) v = 1;
        else if (i < q) v = lam(q - 1) * xpq;
        else if (p <= i) v = lam(p - 1) * xpq;
        else v = xpq;
        m(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)) = v;
      }
    }
    g.push_back(std::move(m));
  }
  return g;
}

bool check_automorphism(const std::vector<Matrix>& g, const MatrixRep& f) {
  f.validate();
  if (static_cast<int>(g.size()) != f.n()) throw Error(ErrorCode::ShapeMismatch, "need one matrix per vertex");
  for (int c = 1; c <= f.n(); ++c) {
    const auto d = static_cast<std::size_t>(f.dims.at(c));
    const auto& gc = g[static_cast<std::size_t>(c - 1)];
    if (gc.rows() != d || gc.cols() != d) throw Error(ErrorCode::ShapeMismatch, "vertex matrix of wrong shape");
  }
  for (int c = 1; c <= f.n(); ++c) {
    const auto& gc = g[static_cast<std::size_t>(c - 1)];
    if (rank(gc, f.field) != gc.rows()) return false;
  }
  for (int c = 1; c < f.n(); ++c) {
    const auto& fc = f.maps[static_cast<std::size_t>(c - 1)];
    if (multiply(g[static_cast<std::size_t>(c)], fc, f.field) != multiply(fc, g[static_cast<std::size_t>(c - 1)], f.field)) {
      return false;
    }
  }
  return true;
}

std::size_t standard_flag_stabilizer_dim(int n, const std::vector<Rational>& diag) {
  const auto dim = static_cast<std::size_t>(n + 1);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < p; ++q) unknowns.emplace_back(p, q);
  }
  // Entries (p, q) of g_i with q <= i < p must vanish (1-based).
  std::vector<std::tuple<int, std::size_t, std::size_t>> constraints;
  for (int i = 1; i <= n; ++i) {
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = 0; q < p; ++q) {
        if (static_cast<int>(q) + 1 <= i && i < static_cast<int>(p) + 1) constraints.emplace_back(i, p, q);
      }
    }
  }
  Matrix sys(constraints.size(), unknowns.size(), 0);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    Matrix x(dim, dim, 0);
    x(unknowns[u].first, unknowns[u].second) = 1;
    const auto g = gamma_pbw(n, diag, x);
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      auto [i, p, q] = constraints[c];
      sys(c, u) = g[static_cast<std::size_t>(i - 1)](p, q);
    }
  }
  return unknowns.size() - rank(sys);
}

std::vector<Matrix> solvable_triple_n3(const SliceParams& lambda, const Matrix& x) {
  if (lambda.n() != 2 || lambda.strict() || x.rows() != 4 || x.cols() != 4) {
    throw Error(ErrorCode::ShapeMismatch, "the n = 3 triple needs lambda(1..2) and a 4x4 x");
  }
  const Rational& l11 = lambda(1, 1);
  const Rational& l12 = lambda(1, 2);
  const Rational& l22 = lambda(2, 2);
  auto xx = [&](int p, int q) -> const Rational& {
    return x(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1));
  };
  auto build = [](std::initializer_list<std::initializer_list<Rational>> rows) {
    Matrix m(4, 4, 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
      std::size_t c = 0;
      for (const auto& v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  };
  Matrix g1 = build({{1, 0, 0, 0},
                     {xx(2, 1), 1, 0, 0},
                     {xx(3, 1), l11 * xx(3, 2), 1 + 2 * l12 * xx(3, 2), 0},
                     {xx(4, 1), l11 * xx(4, 2), l22 * xx(4, 3) + 2 * l12 * xx(4, 2), 1}});
  Matrix g2 = build({{1, 0, 0, 0},
                     {l11 * xx(2, 1) + l12 * xx(3, 1), 1 + l12 * xx(3, 2), l12 * l12 * xx(3, 2), 0},
                     {xx(3, 1), xx(3, 2), 1 + l12 * xx(3, 2), 0},
                     {xx(4, 1), xx(4, 2), l22 * xx(4, 3) + l12 * xx(4, 2), 1}});
  Matrix g3 = build({{1, 0, 0, 0},
                     {l11 * xx(2, 1) + 2 * l12 * xx(3, 1), 1 + 2 * l12 * xx(3, 2), 0, 0},
                     {l22 * xx(3, 1), l22 * xx(3, 2), 1, 0},
                     {xx(4, 1), xx(4, 2), xx(4, 3), 1}});
  return {g1, g2, g3};
}

}  // namespace lindeg
