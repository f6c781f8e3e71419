#include "lindeg/arcs.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "lindeg/error.hpp"
#include "lindeg/homalg.hpp"
#include "lindeg/named.hpp"

namespace lindeg {

ArcDiagram::ArcDiagram(int n_, std::vector<std::pair<int, int>> arcs_) : n(n_), arcs(std::move(arcs_)) {
  std::sort(arcs.begin(), arcs.end());
}

namespace {

bool crossing(const std::pair<int, int>& x, const std::pair<int, int>& y) {
  auto [i, j] = x;
  auto [k, l] = y;
  return (i <= k && k < j && j <= l) || (k <= i && i < l && l <= j);
}

}  // namespace

bool ArcDiagram::non_crossing() const {
  for (auto [i, j] : arcs) {
    if (i < 1 || j > n || i >= j) return false;
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      if (crossing(arcs[a], arcs[b])) return false;
    }
  }
  return true;
}

void ArcDiagram::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "arc diagram needs n >= 1");
  for (auto [i, j] : arcs) {
    if (i < 1 || j > n || i >= j) {
      throw Error(ErrorCode::InvalidInput, "arc (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
  }
  if (!non_crossing()) throw Error(ErrorCode::InvalidParams, "arcs cross or share an endpoint: " + to_string());
}

std::string ArcDiagram::to_string() const {
  std::string s = "{";
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (a) s += ",";
    s += "(" + std::to_string(arcs[a].first) + "," + std::to_string(arcs[a].second) + ")";
  }
  return s + "}";
}

std::vector<ArcDiagram> enumerate_arcs(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "arc diagrams need n >= 1");
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  }
  std::vector<ArcDiagram> out;
  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    out.emplace_back(n, chosen);
    for (std::size_t t = next; t < all.size(); ++t) {
      bool ok = std::none_of(chosen.begin(), chosen.end(), [&](const auto& c) { return crossing(c, all[t]); });
      if (!ok) continue;
      chosen.push_back(all[t]);
      rec(t + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

RankTuple rank_of_arcs(const ArcDiagram& a) {
  a.validate();
  RankTuple rt(DimVector::ramp(a.n));
  for (int i = 1; i <= a.n; ++i) {
    for (int j = i + 1; j <= a.n; ++j) {
      int r = i;
      for (auto [s, t] : a.arcs) {
        if (s <= i && i < t && t <= j) --r;
      }
      rt.set(i, j, r);
    }
  }
  return rt;
}

namespace {

std::vector<int> starting(const ArcDiagram& a) {
  std::vector<int> c(static_cast<std::size_t>(a.n + 1), 0);
  for (auto [i, j] : a.arcs) ++c[static_cast<std::size_t>(i)];
  return c;
}

std::vector<int> ending(const ArcDiagram& a) {
  std::vector<int> c(static_cast<std::size_t>(a.n + 1), 0);
  for (auto [i, j] : a.arcs) ++c[static_cast<std::size_t>(j)];
  return c;
}

void check_arcs_in_range(const ArcDiagram& a) {
  if (a.n < 1) throw Error(ErrorCode::InvalidInput, "arc diagram needs n >= 1");
  for (auto [i, j] : a.arcs) {
    if (i < 1 || j > a.n || i >= j) {
      throw Error(ErrorCode::InvalidInput, "arc (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
  }
}

}  // namespace

IsoClass n_of_arcs(const ArcDiagram& a) {
  check_arcs_in_range(a);
  const auto st = starting(a);
  const auto en = ending(a);
  IsoClass m(a.n);
  for (int i = 1; i <= a.n; ++i) {
    int c = 1 + en[static_cast<std::size_t>(i)] - st[static_cast<std::size_t>(i)];
    if (c < 0) throw Error(ErrorCode::NegativeMultiplicity, "c_" + std::to_string(i) + " < 0 for " + a.to_string());
    m.add(i, a.n, c);
  }
  for (auto [i, j] : a.arcs) m.add(i, j - 1);
  return m;
}

IsoClass q_of_arcs(const ArcDiagram& a) {
  check_arcs_in_range(a);
  const auto st = starting(a);
  const auto en = ending(a);
  IsoClass m(a.n);
  for (int i = 1; i <= a.n; ++i) {
    int d = 1 + st[static_cast<std::size_t>(i)] - en[static_cast<std::size_t>(i)];
    if (d < 0) throw Error(ErrorCode::NegativeMultiplicity, "d_" + std::to_string(i) + " < 0 for " + a.to_string());
    m.add(1, i, d);
  }
  for (auto [i, j] : a.arcs) m.add(i + 1, j);
  return m;
}

ArcDiagram dual(const ArcDiagram& a) {
  a.validate();
  std::vector<int> out_arc(static_cast<std::size_t>(a.n + 1), 0);
  std::vector<bool> has_incoming(static_cast<std::size_t>(a.n + 1), false);
  for (auto [i, j] : a.arcs) {
    out_arc[static_cast<std::size_t>(i)] = j;
    has_incoming[static_cast<std::size_t>(j)] = true;
  }
  std::vector<std::pair<int, int>> arcs;
  for (int i = 2; i <= a.n; ++i) {
    if (has_incoming[static_cast<std::size_t>(i)]) continue;
    int j = i;
    while (out_arc[static_cast<std::size_t>(j)]) j = out_arc[static_cast<std::size_t>(j)];
    arcs.emplace_back(i - 1, j);
  }
  return ArcDiagram(a.n, std::move(arcs));
}

ArcDiagram op(const ArcDiagram& a) {
  a.validate();
  std::vector<std::pair<int, int>> arcs;
  for (auto [i, j] : a.arcs) arcs.emplace_back(a.n + 1 - j, a.n + 1 - i);
  return ArcDiagram(a.n, std::move(arcs));
}

std::string SesReport::failure() const {
  if (!dims_add) return "dimension vectors of N_A and Q_{A*} do not add up to M2";
  if (!embeds) return "N_A does not embed into M2";
  if (!quotient_matches) return "the generic cokernel of N_A -> M2 is not Q_{A*}";
  if (!hom_matches) return "dim Hom(N_A, Q_{A*}) = " + std::to_string(hom) + " differs from n(n+1)/2";
  return "";
}

SesReport verify_ses(const ArcDiagram& a, std::uint64_t seed) {
  a.validate();
  const int n = a.n;
  const auto m2 = m_two(n);
  const auto na = n_of_arcs(a);
  const auto qa = q_of_arcs(dual(a));
  SesReport rep;
  rep.dims_add = na.dims() + qa.dims() == m2.dims();
  rep.embeds = na.dims().leq(m2.dims()) && embeds(na, m2);
  rep.witness = find_fixed_point(m2, na, qa);
  if (rep.embeds) rep.generic_quotient = generic_cokernel(na, m2, seed);
  rep.quotient_matches = rep.generic_quotient == qa;
  rep.hom = hom_dim(na, qa);
  rep.hom_matches = rep.hom == n * (n + 1) / 2;
  return rep;
}

namespace {

const RationalOps kQ{};

Matrix random_combinations(const Matrix& basis, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  Matrix c(basis.cols(), count, 0);
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t k = 0; k < count; ++k) c(r, k) = coeff(rng);
  }
  return multiply(kQ, basis, c);
}

// One walk through the tower; returns the b values in tower order.
std::vector<int> sample_tower(const ArcDiagram& a, const RankTuple& ra, std::mt19937_64& rng) {
  const int n = a.n;
  const auto rep = canonical_rep(m_two(n));
  const auto dim = static_cast<std::size_t>(n + 1);
  // image[i][j]: column basis of Im(f_{j-1} o ... o f_i) inside V_j.
  std::vector<std::vector<Matrix>> image(static_cast<std::size_t>(n + 2), std::vector<Matrix>(static_cast<std::size_t>(n + 2)));
  for (int i = 1; i <= n; ++i) {
    Matrix composite = identity_matrix(dim);
    image[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = composite;
    for (int j = i + 1; j <= n; ++j) {
      composite = multiply(kQ, rep.maps[static_cast<std::size_t>(j - 2)], composite);
      image[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = column_basis(kQ, composite);
    }
  }
  std::vector<std::vector<Matrix>> u(static_cast<std::size_t>(n + 2), std::vector<Matrix>(static_cast<std::size_t>(n + 2)));
  std::vector<int> bs;
  for (int j = n; j >= 1; --j) {
    for (int i = 1; i <= j; ++i) {
      const auto& im = image[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      Matrix space = j == n ? im
                            : intersect(kQ, preimage(kQ, rep.maps[static_cast<std::size_t>(j - 1)],
                                                     u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]),
                                        im);
      const int b = static_cast<int>(space.cols());
      const int below = ra(i - 1, j);
      const int target = ra(i, j);
      if (target < below || target > b) {
        throw std::logic_error("empty tower fiber at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      bs.push_back(b);
      const Matrix lower = i > 1 ? u[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : Matrix(dim, 0);
      Matrix chosen;
      for (int attempt = 0;; ++attempt) {
        if (attempt == 20) throw Error(ErrorCode::GenericityFailure, "could not sample a tower point");
        chosen = column_basis(kQ, hstack(lower, random_combinations(space, static_cast<std::size_t>(target - below), rng)));
        if (static_cast<int>(chosen.cols()) == target) break;
      }
      u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = chosen;
    }
  }
  return bs;
}

}  // namespace

DesingReport desing_dims(const ArcDiagram& a, std::uint64_t seed, int samples) {
  a.validate();
  if (samples < 1) throw Error(ErrorCode::InvalidParams, "need at least one sample");
  const int n = a.n;
  const auto ra = rank_of_arcs(a);
  const auto r2 = rank_tuple_r2(n);

  std::vector<int> bs;
  bool agreed = false;
  for (int round = 0; round < 2 && !agreed; ++round) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(round) * 0x9e3779b97f4a7c15ull);
    bs = sample_tower(a, ra, rng);
    agreed = true;
    for (int s = 1; s < samples; ++s) {
      if (sample_tower(a, ra, rng) != bs) agreed = false;
    }
  }
  if (!agreed) throw Error(ErrorCode::GenericityFailure, "tower samples disagree for " + a.to_string());

  DesingReport rep;
  rep.seed = seed;
  rep.samples = samples;
  rep.closed_form_agrees = true;
  std::size_t step = 0;
  for (int j = n; j >= 1; --j) {
    for (int i = 1; i <= j; ++i, ++step) {
      const int below = ra(i - 1, j);
      const int fiber_rank = ra(i, j) - below;
      const int b = bs[step];
      const int b_closed = ra(i, j + 1) + r2(i, j) - r2(i, j + 1);
      rep.fiber_dims.push_back(fiber_rank * (b - below - fiber_rank));
      rep.closed_form_fiber_dims.push_back(fiber_rank * (b_closed - below - fiber_rank));
      if (b_closed != b) rep.closed_form_agrees = false;
    }
  }
  for (int d : rep.fiber_dims) rep.total += d;
  return rep;
}

}  // namespace lindeg
