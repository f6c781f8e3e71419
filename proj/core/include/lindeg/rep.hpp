#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lindeg/matrix.hpp"
#include "lindeg/types.hpp"

namespace lindeg {

/// Ranks r_{i,j} = rank(f_{j-1} o ... o f_i) for i < j, with r_{i,i} = d_i and
/// r_{0,j} = r_{i,n+1} = 0 built into operator().
class RankTuple {
 public:
  RankTuple() = default;
  /// All off-diagonal ranks zero.
  explicit RankTuple(DimVector diag);

  int n() const noexcept { return diag_.n(); }
  const DimVector& diag() const noexcept { return diag_; }
  int operator()(int i, int j) const;
  void set(int i, int j, int rank);
  const Triangular<int>& off_diagonal() const noexcept { return r_; }

  /// Description of the first violated invariant, if any.
  std::optional<std::string> violation() const;
  bool valid() const { return !violation().has_value(); }
  /// r_{i,j} >= other_{i,j} for all i < j.
  bool dominates(const RankTuple& other) const;

  friend bool operator==(const RankTuple&, const RankTuple&) = default;
  friend auto operator<=>(const RankTuple&, const RankTuple&) = default;

 private:
  DimVector diag_;
  Triangular<int> r_;
};

/// r0_{i,j} = n+1, r1_{i,j} = n+1-j+i, r2_{i,j} = n-j+i; diagonal n+1.
RankTuple rank_tuple_r0(int n);
RankTuple rank_tuple_r1(int n);
RankTuple rank_tuple_r2(int n);

/// Multiplicities m_{i,j} of U_{i,j}, 1 <= i <= j <= n.
class IsoClass {
 public:
  IsoClass() = default;
  explicit IsoClass(int n);
  static IsoClass from_summands(int n, const std::vector<Interval>& summands);

  int n() const noexcept { return m_.n(); }
  int mult(int i, int j) const { return m_(i, j); }
  int mult(const Interval& u) const { return m_(u.left, u.right); }
  void set_mult(int i, int j, int count);
  void add(int i, int j, int count = 1);
  void add(const Interval& u, int count = 1) { add(u.left, u.right, count); }
  void add(const IsoClass& other);

  DimVector dims() const;
  int total_dim() const { return dims().total(); }
  int summand_count() const;
  bool is_zero() const { return summand_count() == 0; }
  /// Summands with multiplicity, row-major in (i, j).
  std::vector<Interval> summands() const;
  /// Summands with right endpoint n, and the rest.
  IsoClass projective_part() const;
  IsoClass non_projective_part() const;
  const Triangular<int>& table() const noexcept { return m_; }
  std::string to_string() const;

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
  friend auto operator<=>(const IsoClass&, const IsoClass&) = default;

 private:
  Triangular<int> m_;
};

IsoClass operator+(IsoClass a, const IsoClass& b);

/// A point of the representation space: maps[i] : V_{i+1} -> V_{i+2}
/// (0-based), stored dims[i+1] x dims[i].
struct MatrixRep {
  DimVector dims;
  Field field;
  std::vector<Matrix> maps;

  int n() const noexcept { return dims.n(); }
  /// Throws ShapeMismatch / InvalidInput / FieldError on malformed data.
  void validate() const;
};

RankTuple rank_tuple(const MatrixRep& rep);
/// Throws NonRealizable if some m_{i,j} < 0.
IsoClass iso_from_ranks(const RankTuple& rt);
RankTuple ranks_from_iso(const IsoClass& iso);

/// Summands ordered by segment degree ascending; copies of one interval
/// stay adjacent.
std::vector<Interval> degree_ordered_summands(const IsoClass& iso);

/// 0/1 matrices in the segment basis; basis of V_c lists the segments
/// containing c in degree order.
MatrixRep canonical_rep(const IsoClass& iso, const Field& field = Field::rationals());

/// Visits every IsoClass with dims <= bound (or == bound when exact), in
/// lexicographic order of the row-major multiplicity table.
void for_each_iso_class(const DimVector& bound, bool exact,
                        const std::function<void(const IsoClass&)>& visit);
std::vector<IsoClass> iso_classes_with_dims(const DimVector& dims);

}  // namespace lindeg
