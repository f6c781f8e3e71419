#include "lindeg/homalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "lindeg/error.hpp"
#include "lindeg/named.hpp"

namespace lindeg {

namespace {

void require_same_n(const IsoClass& a, const IsoClass& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::LengthMismatch, "classes over quivers of different size");
}

// For each t: #{N intervals [i, j] with i <= t} <= #{M intervals [a, j] with a <= t}.
bool matchable_at(const IsoClass& n_cls, const IsoClass& m_cls, int j) {
  int need = 0;
  int have = 0;
  for (int t = 1; t <= j; ++t) {
    need += n_cls.mult(t, j);
    have += m_cls.mult(t, j);
    if (need > have) return false;
  }
  return true;
}

constexpr std::uint64_t kLargePrime = 2147483647ull;

std::vector<DenseMatrix<std::uint64_t>> canonical_maps_mod(const IsoClass& iso, const PrimeOps& ops) {
  std::vector<DenseMatrix<std::uint64_t>> out;
  for (const auto& f : canonical_rep(iso).maps) out.push_back(reduce_mod(f, ops));
  return out;
}

// Columns of the result span the solution space of phi_{c+1} fa_c = fb_c phi_c;
// unknowns are the blocks phi_c (db_c x da_c) stacked row-major.
DenseMatrix<std::uint64_t> hom_space_basis(const IsoClass& a, const IsoClass& b, const PrimeOps& ops,
                                           std::vector<std::size_t>& offsets) {
  const int n = a.n();
  const auto da = a.dims();
  const auto db = b.dims();
  const auto fa = canonical_maps_mod(a, ops);
  const auto fb = canonical_maps_mod(b, ops);
  offsets.assign(static_cast<std::size_t>(n + 1), 0);
  for (int c = 1; c <= n; ++c) {
    offsets[static_cast<std::size_t>(c)] =
        offsets[static_cast<std::size_t>(c - 1)] + static_cast<std::size_t>(db.at(c) * da.at(c));
  }
  auto var = [&](int c, int r, int s) {
    return offsets[static_cast<std::size_t>(c - 1)] + static_cast<std::size_t>(r * da.at(c) + s);
  };
  std::size_t equations = 0;
  for (int c = 1; c < n; ++c) equations += static_cast<std::size_t>(db.at(c + 1) * da.at(c));
  DenseMatrix<std::uint64_t> sys(equations, offsets.back(), 0);
  std::size_t row = 0;
  for (int c = 1; c < n; ++c) {
    const auto& fac = fa[static_cast<std::size_t>(c - 1)];
    const auto& fbc = fb[static_cast<std::size_t>(c - 1)];
    for (int r = 0; r < db.at(c + 1); ++r) {
      for (int s = 0; s < da.at(c); ++s, ++row) {
        for (int t = 0; t < da.at(c + 1); ++t) {
          auto coeff = fac(static_cast<std::size_t>(t), static_cast<std::size_t>(s));
          if (coeff) sys(row, var(c + 1, r, t)) = ops.add(sys(row, var(c + 1, r, t)), coeff);
        }
        for (int t = 0; t < db.at(c); ++t) {
          auto coeff = fbc(static_cast<std::size_t>(r), static_cast<std::size_t>(t));
          if (coeff) sys(row, var(c, t, s)) = ops.sub(sys(row, var(c, t, s)), coeff);
        }
      }
    }
  }
  return kernel(ops, sys);
}

// Blocks phi_c of a random homomorphism src -> dst.
std::vector<DenseMatrix<std::uint64_t>> random_hom(const IsoClass& src, const IsoClass& dst, const PrimeOps& ops,
                                                   const DenseMatrix<std::uint64_t>& basis,
                                                   const std::vector<std::size_t>& offsets, std::mt19937_64& rng) {
  const auto ds = src.dims();
  const auto dd = dst.dims();
  std::uniform_int_distribution<std::uint64_t> pick(0, ops.p - 1);
  std::vector<std::uint64_t> coeff(basis.cols());
  for (auto& x : coeff) x = pick(rng);
  std::vector<DenseMatrix<std::uint64_t>> phi;
  for (int c = 1; c <= src.n(); ++c) {
    DenseMatrix<std::uint64_t> block(static_cast<std::size_t>(dd.at(c)), static_cast<std::size_t>(ds.at(c)), 0);
    for (int r = 0; r < dd.at(c); ++r) {
      for (int s = 0; s < ds.at(c); ++s) {
        std::size_t v = offsets[static_cast<std::size_t>(c - 1)] + static_cast<std::size_t>(r * ds.at(c) + s);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < basis.cols(); ++k) acc = ops.add(acc, ops.mul(basis(v, k), coeff[k]));
        block(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = acc;
      }
    }
    phi.push_back(std::move(block));
  }
  return phi;
}

bool injective(const PrimeOps& ops, const std::vector<DenseMatrix<std::uint64_t>>& phi) {
  return std::all_of(phi.begin(), phi.end(), [&](const auto& b) { return rank(ops, b) == b.cols(); });
}

bool random_hom_injective(const IsoClass& src, const IsoClass& dst, std::uint64_t seed) {
  const PrimeOps ops(kLargePrime);
  std::vector<std::size_t> offsets;
  const auto basis = hom_space_basis(src, dst, ops, offsets);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    if (injective(ops, random_hom(src, dst, ops, basis, offsets, rng))) return true;
  }
  return false;
}

}  // namespace

int euler_form(const DimVector& d, const DimVector& e) {
  if (d.n() != e.n()) throw Error(ErrorCode::LengthMismatch, "euler form of vectors with different length");
  int v = 0;
  for (int i = 1; i <= d.n(); ++i) v += d.at(i) * e.at(i);
  for (int i = 1; i < d.n(); ++i) v -= d.at(i) * e.at(i + 1);
  return v;
}

int hom_indec(int i, int j, int k, int l) noexcept { return k <= i && i <= l && l <= j ? 1 : 0; }

int ext_indec(int k, int l, int i, int j) noexcept { return k + 1 <= i && i <= l + 1 && l + 1 <= j ? 1 : 0; }

int hom_dim(const IsoClass& a, const IsoClass& b) {
  require_same_n(a, b);
  const int n = a.n();
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (!a.mult(i, j)) continue;
      for (int k = 1; k <= i; ++k) {
        for (int l = i; l <= j; ++l) {
          if (b.mult(k, l)) total += a.mult(i, j) * b.mult(k, l) * hom_indec(i, j, k, l);
        }
      }
    }
  }
  return total;
}

int ext_dim(const IsoClass& a, const IsoClass& b) { return hom_dim(a, b) - euler_form(a.dims(), b.dims()); }

int ext_dim_intervals(const IsoClass& a, const IsoClass& b) {
  require_same_n(a, b);
  int total = 0;
  for (const auto& u : a.summands()) {
    for (const auto& v : b.summands()) total += ext_indec(u.left, u.right, v.left, v.right);
  }
  return total;
}

bool degenerates_to(const RankTuple& m, const RankTuple& n) {
  if (m.diag() != n.diag()) throw Error(ErrorCode::DimMismatch, "degeneration needs equal dimension vectors");
  return m.dominates(n);
}

bool degenerates_to(const IsoClass& m, const IsoClass& n) {
  return degenerates_to(ranks_from_iso(m), ranks_from_iso(n));
}

bool degenerates_to_hom_order(const IsoClass& m, const IsoClass& n) {
  require_same_n(m, n);
  if (m.dims() != n.dims()) throw Error(ErrorCode::DimMismatch, "degeneration needs equal dimension vectors");
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i; j <= m.n(); ++j) {
      IsoClass u(m.n());
      u.add(i, j);
      if (hom_dim(u, m) > hom_dim(u, n)) return false;
    }
  }
  return true;
}

bool embeds(const IsoClass& n_cls, const IsoClass& m_cls) {
  require_same_n(n_cls, m_cls);
  if (!n_cls.dims().leq(m_cls.dims())) throw Error(ErrorCode::DimMismatch, "subclass larger than ambient class");
  for (int j = 1; j <= m_cls.n(); ++j) {
    if (!matchable_at(n_cls, m_cls, j)) return false;
  }
  return true;
}

bool embeds_via_projective_split(const IsoClass& n_cls, const IsoClass& m_cls, std::uint64_t seed) {
  require_same_n(n_cls, m_cls);
  if (!n_cls.dims().leq(m_cls.dims())) throw Error(ErrorCode::DimMismatch, "subclass larger than ambient class");
  const auto n_bar = n_cls.non_projective_part();
  const auto x = m_cls.non_projective_part();
  if (!(n_cls.dims() - n_bar.dims()).leq(m_cls.projective_part().dims())) return false;
  if (n_bar.is_zero()) return true;
  if (!n_bar.dims().leq(x.dims())) return false;
  return random_hom_injective(n_bar, x, seed);
}

std::optional<IsoClass> generic_cokernel(const IsoClass& n_cls, const IsoClass& m_cls, std::uint64_t seed) {
  require_same_n(n_cls, m_cls);
  if (!n_cls.dims().leq(m_cls.dims())) {
    throw Error(ErrorCode::DimMismatch, "dimension vector of N exceeds that of M");
  }
  const PrimeOps ops(kLargePrime);
  std::vector<std::size_t> offsets;
  const auto basis = hom_space_basis(n_cls, m_cls, ops, offsets);
  const auto fm = canonical_maps_mod(m_cls, ops);
  const int n = m_cls.n();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    const auto phi = random_hom(n_cls, m_cls, ops, basis, offsets, rng);
    if (!injective(ops, phi)) continue;
    // r_{i,j}(M/N) = rank [F_{i,j} | phi_j] - dim N_j.
    RankTuple rt(m_cls.dims() - n_cls.dims());
    for (int i = 1; i <= n; ++i) {
      auto composite = identity(ops, static_cast<std::size_t>(m_cls.dims().at(i)));
      for (int j = i + 1; j <= n; ++j) {
        composite = multiply(ops, fm[static_cast<std::size_t>(j - 2)], composite);
        const auto& pj = phi[static_cast<std::size_t>(j - 1)];
        rt.set(i, j, static_cast<int>(rank(ops, hstack(composite, pj)) - pj.cols()));
      }
    }
    return iso_from_ranks(rt);
  }
  return std::nullopt;
}

std::size_t hom_space_dim(const IsoClass& a, const IsoClass& b) {
  require_same_n(a, b);
  std::vector<std::size_t> offsets;
  return hom_space_basis(a, b, PrimeOps(kLargePrime), offsets).cols();
}

int stratum_dim(const IsoClass& n_cls, const IsoClass& m_cls) {
  if (!n_cls.dims().leq(m_cls.dims()) || !embeds(n_cls, m_cls)) {
    throw Error(ErrorCode::EmptyStratum, n_cls.to_string() + " does not embed into " + m_cls.to_string());
  }
  return hom_dim(n_cls, m_cls) - hom_dim(n_cls, n_cls);
}

SubrepType split_subrep(const IsoClass& n_cls) {
  return {n_cls, n_cls.projective_part(), n_cls.non_projective_part()};
}

namespace {

// Multisets of left endpoints for intervals ending at j that match into the
// intervals of x ending at j.
std::vector<std::vector<int>> groups_into(const IsoClass& x, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> counts(static_cast<std::size_t>(j + 1), 0);
  std::function<void(int, int, int)> rec = [&](int t, int need, int have) {
    if (t > j) {
      out.push_back(counts);
      return;
    }
    have += x.mult(t, j);
    for (int c = 0; need + c <= have; ++c) {
      counts[static_cast<std::size_t>(t)] = c;
      rec(t + 1, need + c, have);
    }
    counts[static_cast<std::size_t>(t)] = 0;
  };
  rec(1, 0, 0);
  return out;
}

}  // namespace

ComponentReport flag_components(const IsoClass& m_cls) {
  const int n = m_cls.n();
  if (m_cls.dims() != DimVector::constant(n, n + 1)) {
    throw Error(ErrorCode::WrongDims, "flag_components needs dimension vector (n+1,...,n+1)");
  }
  const auto e = DimVector::ramp(n);
  const auto x = m_cls.non_projective_part();
  const auto p_dims = m_cls.projective_part().dims();
  const auto a_star = dual_path_algebra(n);
  const int target = n * (n + 1) / 2;

  std::vector<std::vector<std::vector<int>>> options;
  for (int j = 1; j < n; ++j) options.push_back(groups_into(x, j));

  ComponentReport report;
  report.is_min_dim = true;
  IsoClass n_bar(n);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      auto v = e - n_bar.dims();
      for (int t = 1; t <= n; ++t) {
        if (v.at(t) < (t > 1 ? v.at(t - 1) : 0) || v.at(t) > p_dims.at(t)) return;
      }
      ++report.candidates;
      const int lhs = hom_dim(n_bar, n_bar);
      const int rhs = hom_dim(n_bar, x) - hom_dim(n_bar, a_star);
      IsoClass n_full = n_bar;
      for (int t = 1; t <= n; ++t) n_full.add(t, n, v.at(t) - (t > 1 ? v.at(t - 1) : 0));
      if (stratum_dim(n_full, m_cls) - target != rhs - lhs) {
        throw std::logic_error("stratum dimension disagrees with the component criterion for " +
                               n_full.to_string());
      }
      if (lhs < rhs) report.is_min_dim = false;
      if (lhs == rhs) report.components.push_back(split_subrep(n_full));
      return;
    }
    for (const auto& group : options[static_cast<std::size_t>(j - 1)]) {
      for (int t = 1; t <= j; ++t) n_bar.set_mult(t, j, group[static_cast<std::size_t>(t)]);
      if (n_bar.dims().leq(e)) rec(j + 1);
    }
    for (int t = 1; t <= j; ++t) n_bar.set_mult(t, j, 0);
  };
  rec(1);
  std::sort(report.components.begin(), report.components.end(),
            [](const SubrepType& a, const SubrepType& b) { return a.iso < b.iso; });
  return report;
}

}  // namespace lindeg
