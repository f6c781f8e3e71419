#pragma once

#include <random>

#include "lindeg/rep.hpp"
#include "oracle.hpp"

namespace testing_util {

inline oracle::Summands summands(const lindeg::IsoClass& iso) {
  oracle::Summands s;
  for (int i = 1; i <= iso.n(); ++i) {
    for (int j = i; j <= iso.n(); ++j) {
      if (iso.mult(i, j) > 0) s.emplace_back(i, j, iso.mult(i, j));
    }
  }
  return s;
}

inline oracle::Rep rebuild(const lindeg::IsoClass& iso) { return oracle::direct_sum(iso.n(), summands(iso)); }

/// Random class with multiplicities in [0, max_mult].
inline lindeg::IsoClass random_iso(int n, int max_mult, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mult(0, max_mult);
  lindeg::IsoClass iso(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) iso.add(i, j, mult(rng));
  }
  return iso;
}

/// Every class with multiplicities in [0, max_mult].
template <class F>
void for_each_bounded(int n, int max_mult, F&& visit) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) slots.emplace_back(i, j);
  }
  std::vector<int> m(slots.size(), 0);
  while (true) {
    lindeg::IsoClass iso(n);
    for (std::size_t k = 0; k < slots.size(); ++k) iso.add(slots[k].first, slots[k].second, m[k]);
    visit(iso);
    std::size_t k = 0;
    while (k < m.size() && ++m[k] > max_mult) m[k++] = 0;
    if (k == m.size()) break;
  }
}

}  // namespace testing_util
