#include <algorithm>
#include <atomic>
#include <thread>

#include "lindeg/cells.hpp"
#include "lindeg/error.hpp"

namespace lindeg {

std::uint64_t gaussian_binomial(int m, int k, std::uint64_t q) {
  if (k < 0 || k > m) return 0;
  using u128 = unsigned __int128;
  const u128 limit = ~std::uint64_t{0};
  // row[j] = [i choose j]_q
  std::vector<u128> row(static_cast<std::size_t>(k + 1), 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      u128 qj = 1;
      for (int t = 0; t < j; ++t) {
        qj *= q;
        if (qj > limit) throw Error(ErrorCode::InvalidParams, "Gaussian binomial overflows 64 bits");
      }
      u128 v = row[static_cast<std::size_t>(j - 1)] + qj * row[static_cast<std::size_t>(j)];
      if (v > limit) throw Error(ErrorCode::InvalidParams, "Gaussian binomial overflows 64 bits");
      row[static_cast<std::size_t>(j)] = v;
    }
  }
  return static_cast<std::uint64_t>(row[static_cast<std::size_t>(k)]);
}

namespace {

using Vec = std::vector<std::uint32_t>;

class PointCounter {
 public:
  PointCounter(const IsoClass& iso, const DimVector& e, std::uint64_t p, const CountOptions& options)
      : n_(iso.n()), dims_(iso.dims()), e_(e), p_(static_cast<std::uint32_t>(p)), budget_(options.budget) {
    const PrimeOps ops(p);
    for (const auto& f : canonical_rep(iso).maps) maps_.push_back(reduce_mod(f, ops));
    inverse_.assign(p_, 0);
    for (std::uint32_t a = 1; a < p_; ++a) inverse_[a] = static_cast<std::uint32_t>(ops.inv(a));
  }

  std::uint64_t run(unsigned jobs) {
    if (n_ == 1) return gaussian_binomial(dims_.at(1), e_.at(1), p_);
    std::vector<std::vector<Vec>> firsts;
    extensions({}, dims_.at(1), e_.at(1), [&](const std::vector<Vec>& u) { firsts.push_back(u); });
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(firsts.size())));
    std::vector<std::uint64_t> partial(jobs, 0);
    auto work = [&](unsigned t) {
      for (std::size_t i = t; i < firsts.size(); i += jobs) partial[t] += count_from(1, firsts[i]);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(jobs);
      for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
          try {
            work(t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& err : errors) {
        if (err) std::rethrow_exception(err);
      }
    }
    std::uint64_t total = 0;
    for (auto x : partial) total += x;
    return total;
  }

 private:
  void charge() {
    if (visited_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw Error(ErrorCode::BudgetExceeded, "point count exceeded budget of " + std::to_string(budget_) + " subspaces");
    }
  }

  // Reduced echelon rows of span(rows); returns pivot columns.
  std::vector<std::size_t> echelon(std::vector<Vec>& rows, std::size_t dim) const {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
      std::size_t sel = r;
      while (sel < rows.size() && rows[sel][c] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[sel], rows[r]);
      const std::uint32_t inv = inverse_[rows[r][c]];
      for (auto& x : rows[r]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p_);
      for (std::size_t o = 0; o < rows.size(); ++o) {
        if (o == r || rows[o][c] == 0) continue;
        const std::uint64_t f = rows[o][c];
        for (std::size_t t = c; t < dim; ++t) {
          rows[o][t] = static_cast<std::uint32_t>((rows[o][t] + (p_ - f) * rows[r][t]) % p_);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    rows.resize(r);
    return pivots;
  }

  // Calls visit(U) for every U of dimension k with span(base) <= U <= F_p^dim;
  // base must be in reduced echelon form with the given pivots.
  template <class Visit>
  void extensions(const std::vector<Vec>& base, int dim, int k, Visit&& visit,
                  const std::vector<std::size_t>& base_pivots = {}) {
    const int w = static_cast<int>(base.size());
    const int extra = k - w;
    if (extra < 0) return;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < static_cast<std::size_t>(dim); ++c) {
      if (std::find(base_pivots.begin(), base_pivots.end(), c) == base_pivots.end()) free_cols.push_back(c);
    }
    const int m = static_cast<int>(free_cols.size());
    if (extra > m) return;
    std::vector<Vec> u = base;
    u.resize(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(dim), 0));
    // Pivot positions (indices into free_cols) of the extra rows.
    std::vector<int> piv(static_cast<std::size_t>(extra));
    for (int t = 0; t < extra; ++t) piv[static_cast<std::size_t>(t)] = t;
    while (true) {
      // Free slots: (row t, free index c) with c > piv[t] and c not a pivot.
      std::vector<std::pair<int, int>> slots;
      for (int t = 0; t < extra; ++t) {
        for (int c = piv[static_cast<std::size_t>(t)] + 1; c < m; ++c) {
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(t, c);
        }
      }
      for (int t = 0; t < extra; ++t) {
        auto& row = u[static_cast<std::size_t>(w + t)];
        std::fill(row.begin(), row.end(), 0);
        row[free_cols[static_cast<std::size_t>(piv[static_cast<std::size_t>(t)])]] = 1;
      }
      std::vector<std::uint32_t> digits(slots.size(), 0);
      while (true) {
        charge();
        visit(u);
        std::size_t pos = 0;
        while (pos < digits.size()) {
          auto [t, c] = slots[pos];
          auto& cell = u[static_cast<std::size_t>(w + t)][free_cols[static_cast<std::size_t>(c)]];
          if (++digits[pos] < p_) {
            cell = digits[pos];
            break;
          }
          digits[pos] = 0;
          cell = 0;
          ++pos;
        }
        if (pos == digits.size()) break;
      }
      // Next pivot combination.
      int t = extra - 1;
      while (t >= 0 && piv[static_cast<std::size_t>(t)] == m - extra + t) --t;
      if (t < 0) break;
      ++piv[static_cast<std::size_t>(t)];
      for (int s = t + 1; s < extra; ++s) piv[static_cast<std::size_t>(s)] = piv[static_cast<std::size_t>(s - 1)] + 1;
    }
  }

  // Completions (U_{c+1}, ..., U_n) given U_c.
  std::uint64_t count_from(int c, const std::vector<Vec>& u) {
    const auto& f = maps_[static_cast<std::size_t>(c - 1)];
    const int dim = dims_.at(c + 1);
    std::vector<Vec> image;
    for (const auto& v : u) {
      Vec fv(static_cast<std::size_t>(dim), 0);
      for (std::size_t r = 0; r < f.rows(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t s = 0; s < f.cols(); ++s) acc += f(r, s) * v[s];
        fv[r] = static_cast<std::uint32_t>(acc % p_);
      }
      image.push_back(std::move(fv));
    }
    const auto pivots = echelon(image, static_cast<std::size_t>(dim));
    const int w = static_cast<int>(image.size());
    const int k = e_.at(c + 1);
    if (c + 1 == n_) return gaussian_binomial(dim - w, k - w, p_);
    std::uint64_t total = 0;
    extensions(image, dim, k, [&](const std::vector<Vec>& next) { total += count_from(c + 1, next); }, pivots);
    return total;
  }

  int n_;
  DimVector dims_;
  DimVector e_;
  std::uint32_t p_;
  std::uint64_t budget_;
  std::vector<DenseMatrix<std::uint64_t>> maps_;
  std::vector<std::uint32_t> inverse_;
  std::atomic<std::uint64_t> visited_{0};
};

}  // namespace

std::uint64_t count_points_fq(const IsoClass& iso, const DimVector& e, std::uint64_t p, const CountOptions& options) {
  if (!is_prime(p) || p >= (1ull << 16)) throw Error(ErrorCode::InvalidParams, "p must be a prime below 2^16");
  if (e.n() != iso.n() || !e.leq(iso.dims())) {
    throw Error(ErrorCode::DimMismatch, "dimension vector " + e.to_string() + " exceeds " + iso.dims().to_string());
  }
  PointCounter counter(iso, e, p, options);
  return counter.run(options.jobs);
}

}  // namespace lindeg
