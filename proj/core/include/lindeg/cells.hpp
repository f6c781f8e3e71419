#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lindeg/rep.hpp"

namespace lindeg {

/// Summands of M as segments in degree order (top to bottom). Within each
/// column, segments killed by the next arrow sit below the ones that
/// survive it.
struct SegmentLayout {
  int n = 0;
  std::vector<Interval> segments;

  std::size_t size() const noexcept { return segments.size(); }
};

SegmentLayout layout(const IsoClass& iso);

/// Coordinate subrepresentation: segment k contributes [starts[k], b_k],
/// or nothing when starts[k] == 0.
struct FixedPoint {
  std::vector<int> starts;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

/// Throws InvalidInput unless starts fits the layout.
void validate(const SegmentLayout& lay, const FixedPoint& fp);
DimVector fixed_point_dims(const SegmentLayout& lay, const FixedPoint& fp);
/// Class of the subrepresentation L (suffixes) and of M/L (prefixes).
IsoClass sub_class(const SegmentLayout& lay, const FixedPoint& fp);
IsoClass quotient_class(const SegmentLayout& lay, const FixedPoint& fp);

/// All fixed points of Gr_e(M), lexicographic in starts. Throws DimMismatch
/// unless e <= dim M.
std::vector<FixedPoint> fixed_points(const IsoClass& iso, const DimVector& e);

/// Sum over sources v_k^{(s_k)} of the segments j > k present in column s_k
/// whose vector there is not in L.
int cell_dim(const SegmentLayout& lay, const FixedPoint& fp);
/// dim Hom(L, M/L).
int tangent_dim(const SegmentLayout& lay, const FixedPoint& fp);

/// Coefficients of sum_L q^{cell_dim(L)}, ascending from degree 0.
std::vector<std::uint64_t> poincare(const IsoClass& iso, const DimVector& e);
std::uint64_t euler_characteristic(const IsoClass& iso, const DimVector& e);
/// P(q); throws InvalidParams on 64-bit overflow.
std::uint64_t evaluate(const std::vector<std::uint64_t>& coeffs, std::uint64_t q);

struct Stratum {
  IsoClass cls;
  std::size_t cell_count = 0;
  int max_cell_dim = 0;
  int hom_dim_formula = 0;  // dim Hom(N, M) - dim End(N)
};

/// Fixed points grouped by the class of L, ordered by class. Throws
/// std::logic_error if a stratum's top cell disagrees with the formula.
std::vector<Stratum> strata(const IsoClass& iso, const DimVector& e);
std::vector<FixedPoint> top_cells(const IsoClass& iso, const DimVector& e);
int max_cell_dim(const IsoClass& iso, const DimVector& e);

/// A fixed point with sub_class == sub and quotient_class == quotient.
std::optional<FixedPoint> find_fixed_point(const IsoClass& iso, const IsoClass& sub, const IsoClass& quotient);

struct CountOptions {
  std::uint64_t budget = 2'000'000'000ull;  // subspaces visited
  unsigned jobs = 1;
};

/// Number of F_p-points of Gr_e(M) for the canonical representation of M.
/// Throws BudgetExceeded when the search would visit more subspaces than
/// the budget allows.
std::uint64_t count_points_fq(const IsoClass& iso, const DimVector& e, std::uint64_t p,
                              const CountOptions& options = {});

/// Gaussian binomial [m choose k]_q; throws InvalidParams on overflow.
std::uint64_t gaussian_binomial(int m, int k, std::uint64_t q);

}  // namespace lindeg
