#include <gtest/gtest.h>

#include "common.hpp"
#include "lindeg/cells.hpp"
#include "lindeg/error.hpp"
#include "lindeg/homalg.hpp"
#include "lindeg/loci.hpp"
#include "lindeg/named.hpp"

using namespace lindeg;
using testing_util::rebuild;

namespace {

std::vector<Interval> segs(std::initializer_list<std::pair<int, int>> s) {
  std::vector<Interval> out;
  for (auto [a, b] : s) out.push_back(Interval{a, b});
  return out;
}

// Every e with 0 <= e <= dims.
std::vector<DimVector> all_e(const DimVector& dims) {
  std::vector<DimVector> out;
  DimVector e = DimVector::constant(dims.n(), 0);
  while (true) {
    out.push_back(e);
    std::size_t k = 0;
    while (k < e.d.size() && ++e.d[k] > dims.d[k]) e.d[k++] = 0;
    if (k == e.d.size()) break;
  }
  return out;
}

}  // namespace

TEST(Layout, Examples) {
  EXPECT_EQ(layout(m_two(4)).segments,
            segs({{4, 4}, {4, 4}, {3, 4}, {2, 4}, {1, 4}, {3, 3}, {1, 3}, {2, 2}, {1, 2}, {1, 1}, {1, 1}}));
  EXPECT_EQ(layout(m_one(2)).segments, segs({{2, 2}, {1, 2}, {1, 2}, {1, 1}}));
  IsoClass one(3);
  one.add(2, 3);
  EXPECT_EQ(layout(one).segments, segs({{2, 3}}));
  EXPECT_EQ(layout(m_single_defect(4, 2)).segments, segs({{3, 4}, {3, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 2}, {1, 2}}));
}

TEST(FixedPoints, Examples) {
  const DimVector e({1, 2});
  EXPECT_EQ(fixed_points(m_zero(2), e).size(), 6u);
  EXPECT_EQ(fixed_points(m_one(2), e).size(), 7u);
  EXPECT_EQ(fixed_points(m_two(2), e).size(), 8u);
  try {
    fixed_points(m_two(2), DimVector({4, 1}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DimMismatch);
  }
}

TEST(FixedPoints, ConsistentWithLayout) {
  for (int n = 2; n <= 4; ++n) {
    const auto iso = m_two(n);
    const auto lay = layout(iso);
    for (const auto& fp : fixed_points(iso, DimVector::ramp(n))) {
      EXPECT_EQ(fixed_point_dims(lay, fp), DimVector::ramp(n));
      EXPECT_EQ(sub_class(lay, fp).dims(), DimVector::ramp(n));
      EXPECT_EQ(sub_class(lay, fp).dims() + quotient_class(lay, fp).dims(), iso.dims());
      EXPECT_TRUE(embeds(sub_class(lay, fp), iso));
    }
  }
  EXPECT_THROW(validate(layout(m_two(2)), FixedPoint{{1, 1}}), Error);
}

TEST(CellDim, PrintedExamples) {
  const auto m2 = layout(m_two(4));
  const FixedPoint ex1{{4, 0, 3, 2, 2, 0, 0, 0, 0, 1, 0}};
  EXPECT_EQ(cell_dim(m2, ex1), 10);
  EXPECT_EQ(tangent_dim(m2, ex1), 11);
  const auto ma = layout(m_single_defect(4, 2));
  EXPECT_EQ(cell_dim(ma, FixedPoint{{3, 4, 1, 2, 0, 0, 0}}), 10);
  EXPECT_EQ(cell_dim(ma, FixedPoint{{3, 3, 1, 4, 0, 2, 0}}), 10);
  EXPECT_EQ(cell_dim(ma, FixedPoint{{3, 4, 1, 3, 0, 2, 0}}), 9);
}

TEST(Poincare, Examples) {
  const DimVector e({1, 2});
  EXPECT_EQ(poincare(m_zero(2), e), (std::vector<std::uint64_t>{1, 2, 2, 1}));
  EXPECT_EQ(poincare(m_two(2), e), (std::vector<std::uint64_t>{1, 2, 3, 2}));
  EXPECT_EQ(evaluate(poincare(m_one(2), e), 1), 7u);
  EXPECT_EQ(euler_characteristic(m_one(2), e), 7u);
}

TEST(Poincare, FullFlagVarietyIsQFactorial) {
  for (int n = 1; n <= 5; ++n) {
    // prod_{k=1}^{n+1} [k]_q evaluated at q = 2.
    std::uint64_t want = 1;
    for (int k = 1; k <= n + 1; ++k) want *= (std::uint64_t{1} << k) - 1;
    EXPECT_EQ(evaluate(poincare(m_zero(n), DimVector::ramp(n)), 2), want);
  }
}

TEST(Poincare, AtOneCountsFixedPoints) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& iso : {m_zero(n), m_one(n), m_two(n)}) {
      const auto e = DimVector::ramp(n);
      EXPECT_EQ(evaluate(poincare(iso, e), 1), fixed_points(iso, e).size());
    }
  }
}

TEST(Count, Examples) {
  const DimVector e({1, 2});
  EXPECT_EQ(count_points_fq(m_two(2), e, 2), 33u);
  EXPECT_EQ(count_points_fq(m_zero(2), e, 2), 21u);
  EXPECT_EQ(count_points_fq(m_two(3), m_two(3).dims(), 3), 1u);
  EXPECT_THROW(count_points_fq(m_two(2), e, 4), Error);
}

TEST(Count, BudgetExceeded) {
  CountOptions small;
  small.budget = 5;
  try {
    count_points_fq(m_zero(3), DimVector::ramp(3), 2, small);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Count, GaussianBinomials) {
  for (int m = 0; m <= 5; ++m) {
    for (int k = 0; k <= m; ++k) {
      for (std::uint64_t q : {2u, 3u}) {
        const auto point = oracle::direct_sum(1, {{1, 1, m}});
        EXPECT_EQ(gaussian_binomial(m, k, q), oracle::count_subreps(point, {k}, static_cast<std::int64_t>(q)));
      }
    }
  }
}

TEST(Count, BruteForceOracle) {
  for (int n = 1; n <= 3; ++n) {
    for_each_iso_class(DimVector::constant(n, n == 3 ? 2 : 3), false, [&](const IsoClass& iso) {
      const auto r = rebuild(iso);
      for (const auto& e : all_e(iso.dims())) {
        for (std::int64_t q : {2, 3}) {
          if (n == 3 && q == 3 && iso.total_dim() > 5) continue;
          const auto brute = oracle::count_subreps(r, e.d, q);
          ASSERT_EQ(count_points_fq(iso, e, static_cast<std::uint64_t>(q)), brute) << iso.to_string() << " e=" << e.to_string();
          ASSERT_EQ(evaluate(poincare(iso, e), static_cast<std::uint64_t>(q)), brute) << iso.to_string() << " e=" << e.to_string();
        }
      }
    });
  }
}

TEST(Count, NamedFamiliesAgainstOracle) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& iso : {m_zero(n), m_one(n), m_two(n)}) {
      EXPECT_EQ(evaluate(poincare(iso, DimVector::ramp(n)), 2), oracle::count_subreps(rebuild(iso), DimVector::ramp(n).d, 2));
    }
  }
}

TEST(Count, CountingIdentitySweep) {
  // Cells partition the variety: the polynomial identity holds pointwise.
  for (int n = 1; n <= 3; ++n) {
    for_each_iso_class(DimVector::constant(n, 4), false, [&](const IsoClass& iso) {
      if (iso.total_dim() > 12) return;
      const auto d = iso.dims();
      for (const auto& e : all_e(d)) {
        if (n == 3 && e.total() * (d.total() - e.total()) > 24) continue;
        const auto p = poincare(iso, e);
        for (std::uint64_t q : {2u, 3u, 5u}) {
          ASSERT_EQ(count_points_fq(iso, e, q), evaluate(p, q)) << iso.to_string() << " e=" << e.to_string() << " q=" << q;
        }
      }
    });
  }
}

TEST(Tangent, Examples) {
  for (int n = 1; n <= 4; ++n) {
    const auto lay = layout(m_zero(n));
    for (const auto& fp : fixed_points(m_zero(n), DimVector::ramp(n))) EXPECT_EQ(tangent_dim(lay, fp), n * (n + 1) / 2);
    const auto full = fixed_points(m_two(n), m_two(n).dims());
    ASSERT_EQ(full.size(), 1u);
    EXPECT_EQ(tangent_dim(layout(m_two(n)), full[0]), 0);
  }
}

TEST(Tangent, BoundsCellAndMatchesHom) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& iso : iso_classes_with_dims(DimVector::constant(n, n + 1))) {
      const auto lay = layout(iso);
      for (const auto& fp : fixed_points(iso, DimVector::ramp(n))) {
        const int t = tangent_dim(lay, fp);
        EXPECT_GE(t, cell_dim(lay, fp));
        EXPECT_EQ(t, oracle::hom_dim(rebuild(sub_class(lay, fp)), rebuild(quotient_class(lay, fp))));
      }
    }
  }
}

TEST(Strata, Examples) {
  const auto st = strata(m_two(2), DimVector({1, 2}));
  int top = 0;
  std::size_t cells = 0;
  for (const auto& s : st) {
    top += s.max_cell_dim == 3 ? 1 : 0;
    cells += s.cell_count;
  }
  EXPECT_EQ(top, 2);
  EXPECT_EQ(cells, 8u);
  int zero_top = 0;
  for (const auto& s : strata(m_zero(2), DimVector({1, 2}))) zero_top = std::max(zero_top, s.max_cell_dim);
  EXPECT_EQ(zero_top, 3);
  for (const auto& s : strata(m_one(2), DimVector({1, 2}))) {
    if (s.cls == path_algebra(2)) EXPECT_EQ(s.max_cell_dim, stratum_dim(path_algebra(2), m_one(2)));
  }
}

TEST(Strata, MaxCellIsStratumDimension) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& iso : iso_classes_with_dims(DimVector::constant(n, n + 1))) {
      for (const auto& s : strata(iso, DimVector::ramp(n))) {
        EXPECT_EQ(s.max_cell_dim, s.hom_dim_formula);
        EXPECT_EQ(s.hom_dim_formula, hom_dim(s.cls, iso) - hom_dim(s.cls, s.cls));
      }
    }
  }
}

TEST(TopCells, Examples) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(top_cells(m_two(n), DimVector::ramp(n)).size(), oracle::catalan(n));
    EXPECT_EQ(max_cell_dim(m_two(n), DimVector::ramp(n)), n * (n + 1) / 2);
    for (int i = 1; i < n; ++i) {
      const auto top = top_cells(m_single_defect(n, i), DimVector::ramp(n));
      EXPECT_GE(top.size(), 2u);
      const auto lay = layout(m_single_defect(n, i));
      for (const auto& fp : top) EXPECT_EQ(cell_dim(lay, fp), n * (n + 1) / 2);
    }
  }
}

TEST(TopCells, FlatIffEquidimensional) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& iso : iso_classes_with_dims(DimVector::constant(n, n + 1))) {
      const auto rt = ranks_from_iso(iso);
      const bool flat = n == 1 || classify(rt).flat;
      EXPECT_EQ(max_cell_dim(iso, DimVector::ramp(n)) == n * (n + 1) / 2, flat) << iso.to_string();
      if (n > 1 && rt.dominates(rank_tuple_r1(n))) EXPECT_EQ(top_cells(iso, DimVector::ramp(n)).size(), 1u);
    }
  }
}

TEST(FindFixedPoint, Coordinate) {
  const auto m2 = m_two(3);
  const auto lay = layout(m2);
  for (const auto& fp : fixed_points(m2, DimVector::ramp(3))) {
    const auto found = find_fixed_point(m2, sub_class(lay, fp), quotient_class(lay, fp));
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(sub_class(lay, *found), sub_class(lay, fp));
  }
}
