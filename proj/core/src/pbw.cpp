#include "lindeg/pbw.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

#include "lindeg/error.hpp"

namespace lindeg {

std::vector<int> h_vector(const ProjSeq& seq) {
  seq.validate();
  std::vector<int> h(static_cast<std::size_t>(seq.n), 0);
  for (int s = 1; s <= seq.n; ++s) {
    h[static_cast<std::size_t>(s - 1)] =
        static_cast<int>(std::count_if(seq.seq.begin(), seq.seq.end(), [s](int x) { return x < s; }));
  }
  return h;
}

std::vector<int> ell_vector(const ProjSeq& seq) {
  auto ell = h_vector(seq);
  for (std::size_t j = 0; j < ell.size(); ++j) ell[j] += static_cast<int>(j) + 1;
  return ell;
}

WeylWord WeylWord::from_word(int N, std::vector<int> word) {
  if (N < 1) throw Error(ErrorCode::InvalidParams, "N must be positive");
  WeylWord w;
  w.N = N;
  w.perm.resize(static_cast<std::size_t>(N));
  for (int a = 1; a <= N; ++a) w.perm[static_cast<std::size_t>(a - 1)] = a;
  // Compose right to left: perm <- perm o s_k for each letter in order.
  for (int k : word) {
    if (k < 1 || k >= N) throw Error(ErrorCode::InvalidParams, "letter s_" + std::to_string(k) + " out of range");
    std::swap(w.perm[static_cast<std::size_t>(k - 1)], w.perm[static_cast<std::size_t>(k)]);
  }
  w.word = std::move(word);
  return w;
}

std::size_t WeylWord::inversions() const {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b] ? 1 : 0;
  }
  return inv;
}

WeylWord weyl_word(const ProjSeq& seq) {
  const auto h = h_vector(seq);
  std::vector<int> word;
  for (int k = seq.n; k >= 1; --k) {
    const int hk = h[static_cast<std::size_t>(k - 1)];
    for (int t = 1; t <= k; ++t) word.push_back(hk + t);
  }
  return WeylWord::from_word(seq.n + 1 + seq.size(), std::move(word));
}

bool prop_action_holds(const ProjSeq& seq) {
  const auto h = h_vector(seq);
  const auto ell = ell_vector(seq);
  const auto w = weyl_word(seq);
  const int n = seq.n;
  auto image = [&](int a) { return w.perm[static_cast<std::size_t>(a - 1)]; };
  for (int j = 1; j <= n; ++j) {
    const int lj = ell[static_cast<std::size_t>(j - 1)];
    const int prev = j == 1 ? 0 : ell[static_cast<std::size_t>(j - 2)];
    const int hj = h[static_cast<std::size_t>(j - 1)];
    if (lj == prev + 1) {
      if (image(lj) != hj + n - j + 2) return false;
    } else if (lj == prev + 2) {
      if (image(lj - 1) != hj || image(lj) != hj + n + 1) return false;
    } else {
      return false;
    }
  }
  return true;
}

bool window_holds(const ProjSeq& seq) {
  const auto ell = ell_vector(seq);
  const auto w = weyl_word(seq);
  const int n = seq.n;
  for (int j = 1; j <= n; ++j) {
    const int lj = ell[static_cast<std::size_t>(j - 1)];
    std::set<int> got(w.perm.begin(), w.perm.begin() + lj);
    std::set<int> want;
    for (int a = 1; a <= lj - j; ++a) want.insert(a);
    for (int a = n + 2 + lj - 2 * j; a <= n + 1 + lj - j; ++a) want.insert(a);
    if (got != want) return false;
  }
  return true;
}

std::set<std::pair<int, int>> inversion_negative_roots(const ProjSeq& seq) {
  const auto w = weyl_word(seq);
  const auto ell = ell_vector(seq);
  // -alpha_{t,u} = eps_{u+1} - eps_t goes to a positive root iff w(t) > w(u+1).
  std::set<std::pair<int, int>> got;
  for (int t = 1; t < w.N; ++t) {
    for (int u = t; u < w.N; ++u) {
      if (w.perm[static_cast<std::size_t>(t - 1)] > w.perm[static_cast<std::size_t>(u)]) got.emplace(t, u);
    }
  }
  std::set<std::pair<int, int>> want;
  for (std::size_t p = 0; p < ell.size(); ++p) {
    for (std::size_t q = p; q < ell.size(); ++q) want.emplace(ell[p], ell[q]);
  }
  if (got != want) throw std::logic_error("inversion set of w_i differs from {-alpha_{l_p,l_q}} for " + seq.to_string());
  return got;
}

DegreeTable degree_table(const ProjSeq& seq) {
  seq.validate();
  const int n = seq.n;
  DegreeTable table{n, seq, Triangular<int>(n, false)};
  for (int p = 1; p <= n; ++p) {
    for (int q = p; q <= n; ++q) table.t(p, q) = q - p + 1;
  }
  for (int l : seq.seq) {
    for (int p = 1; p <= n; ++p) {
      for (int q = p; q <= n; ++q) {
        if (p <= l && l < q) --table.t(p, q);
      }
    }
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = p; q <= n; ++q) {
      int closed = 1;
      if (p != q) {
        closed = q - p + 1 - static_cast<int>(std::count_if(seq.seq.begin(), seq.seq.end(),
                                                             [&](int x) { return p <= x && x < q; }));
      }
      if (closed != table.t(p, q)) throw std::logic_error("degree recursion and closed form disagree");
    }
  }
  return table;
}

std::optional<Root> bracket(const ProjSeq& seq, const Root& a, const Root& b) {
  seq.validate();
  auto [p, q] = a;
  auto [s, r] = b;
  if (p < 1 || p > q || q > seq.n || s < 1 || s > r || r > seq.n || p > s) {
    throw Error(ErrorCode::InvalidParams, "bracket needs roots p <= q, s <= r inside 1..n with p <= s");
  }
  if (s != q + 1 || seq.contains(q)) return std::nullopt;
  return Root{p, r};
}

namespace {

// Sparse integer matrices; f_{a,b} is -E_{b+1,a}.
using Sparse = std::map<std::pair<int, int>, int>;

Sparse root_matrix(int a, int b) { return {{{b + 1, a}, -1}}; }

Sparse commutator(const Sparse& x, const Sparse& y) {
  Sparse out;
  for (const auto& [xi, xv] : x) {
    for (const auto& [yi, yv] : y) {
      if (xi.second == yi.first) out[{xi.first, yi.second}] += xv * yv;
      if (yi.second == xi.first) out[{yi.first, xi.second}] -= xv * yv;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Sparse scaled(Sparse m, int c) {
  for (auto& [k, v] : m) v *= c;
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

}  // namespace

bool eta_check(const ProjSeq& seq) {
  const auto ell = ell_vector(seq);
  const int n = seq.n;
  auto l = [&](int p) { return ell[static_cast<std::size_t>(p - 1)]; };
  std::vector<Root> roots;
  for (int p = 1; p <= n; ++p) {
    for (int q = p; q <= n; ++q) roots.emplace_back(p, q);
  }
  for (const auto& x : roots) {
    for (const auto& y : roots) {
      // Antisymmetric extension of the table.
      const bool swapped = x.first > y.first;
      const auto& a = swapped ? y : x;
      const auto& b = swapped ? x : y;
      Sparse expected;
      if (auto z = bracket(seq, a, b)) expected = scaled(root_matrix(l(z->first), l(z->second)), swapped ? -1 : 1);
      const Sparse actual = commutator(root_matrix(l(x.first), l(x.second)), root_matrix(l(y.first), l(y.second)));
      if (actual != expected) return false;
    }
  }
  return true;
}

Weight psi_weight(const ProjSeq& seq, const Weight& lambda) {
  const auto ell = ell_vector(seq);
  if (static_cast<int>(lambda.size()) != seq.n) {
    throw Error(ErrorCode::LengthMismatch, "weight needs " + std::to_string(seq.n) + " coefficients");
  }
  Weight out(static_cast<std::size_t>(seq.n + seq.size()), 0);
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] < 0) throw Error(ErrorCode::NegativeCoefficient, "negative fundamental weight coefficient");
    out[static_cast<std::size_t>(ell[j] - 1)] = lambda[j];
  }
  return out;
}

namespace {

// Epsilon coordinates: entry a is sum_{k >= a} c_k.
std::vector<int> epsilon_coords(int N, const Weight& lambda) {
  std::vector<int> eps(static_cast<std::size_t>(N), 0);
  for (int a = N - 1; a >= 1; --a) {
    eps[static_cast<std::size_t>(a - 1)] = eps[static_cast<std::size_t>(a)] + lambda[static_cast<std::size_t>(a - 1)];
  }
  return eps;
}

void check_weight(int N, const Weight& lambda, ErrorCode negative) {
  if (N < 1 || static_cast<int>(lambda.size()) != N - 1) {
    throw Error(ErrorCode::LengthMismatch, "weight needs " + std::to_string(N - 1) + " coefficients");
  }
  for (int c : lambda) {
    if (c < 0) throw Error(negative, "weight is not dominant");
  }
}

}  // namespace

std::uint64_t weyl_dim(int N, const Weight& lambda) {
  check_weight(N, lambda, ErrorCode::NegativeCoefficient);
  const auto eps = epsilon_coords(N, lambda);
  mpz_class num = 1;
  mpz_class den = 1;
  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      num *= eps[static_cast<std::size_t>(a)] - eps[static_cast<std::size_t>(b)] + (b - a);
      den *= b - a;
    }
  }
  mpz_class q = num / den;
  if (q * den != num || !q.fits_ulong_p()) throw std::logic_error("Weyl dimension is not a 64-bit integer");
  return q.get_ui();
}

std::map<std::vector<int>, std::int64_t> demazure_character(const WeylWord& w, const Weight& lambda) {
  check_weight(w.N, lambda, ErrorCode::NotDominant);
  if (!w.reduced()) throw Error(ErrorCode::NotReduced, "word is not reduced");
  std::map<std::vector<int>, std::int64_t> ch{{epsilon_coords(w.N, lambda), 1}};
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it - 1);
    std::map<std::vector<int>, std::int64_t> next;
    for (const auto& [mu, c] : ch) {
      const int m = mu[i] - mu[i + 1];
      auto step = mu;
      if (m >= 0) {
        for (int k = 0; k <= m; ++k) {
          next[step] += c;
          --step[i];
          ++step[i + 1];
        }
      } else if (m <= -2) {
        for (int k = 1; k <= -m - 1; ++k) {
          ++step[i];
          --step[i + 1];
          next[step] -= c;
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    ch = std::move(next);
  }
  return ch;
}

std::uint64_t demazure_dim(const WeylWord& w, const Weight& lambda) {
  std::int64_t total = 0;
  for (const auto& [mu, c] : demazure_character(w, lambda)) total += c;
  if (total < 0) throw std::logic_error("negative Demazure dimension");
  return static_cast<std::uint64_t>(total);
}

}  // namespace lindeg
