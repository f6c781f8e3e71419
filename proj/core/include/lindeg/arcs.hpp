#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lindeg/cells.hpp"
#include "lindeg/rep.hpp"

namespace lindeg {

/// Arcs (i, j), i < j, on the points 1..n; kept sorted.
struct ArcDiagram {
  int n = 1;
  std::vector<std::pair<int, int>> arcs;

  ArcDiagram() = default;
  ArcDiagram(int n_, std::vector<std::pair<int, int>> arcs_);

  /// Whether the arcs lie in range and no two distinct arcs (i,j), (k,l)
  /// have i <= k < j <= l.
  bool non_crossing() const;
  /// Throws InvalidInput on out-of-range arcs, InvalidParams on crossings.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
  friend auto operator<=>(const ArcDiagram&, const ArcDiagram&) = default;
};

/// Every non-crossing diagram on n points, in lexicographic order of the
/// sorted arc lists.
std::vector<ArcDiagram> enumerate_arcs(int n);

/// r(A)_{i,j} = i - #{arcs (a,b) : a <= i < b <= j}, with r(A)_{i,i} = i.
RankTuple rank_of_arcs(const ArcDiagram& a);

/// N_A = sum P_i^{c_i} + sum_{(i,j) in A} U_{i,j-1}.
IsoClass n_of_arcs(const ArcDiagram& a);
/// Q_A = sum_{(i,j) in A} U_{i+1,j} + sum I_i^{d_i}.
IsoClass q_of_arcs(const ArcDiagram& a);

/// A* = {(i-1, j) : (i, j) complete chain, i >= 2}.
ArcDiagram dual(const ArcDiagram& a);
/// Reflection i -> n+1-i.
ArcDiagram op(const ArcDiagram& a);

struct SesReport {
  bool dims_add = false;        // dim N_A + dim Q_{A*} = dim M2
  bool embeds = false;          // N_A embeds into M2
  bool quotient_matches = false;  // generic cokernel of N_A -> M2 is Q_{A*}
  std::optional<IsoClass> generic_quotient;
  std::optional<FixedPoint> witness;  // coordinate realization, when one exists
  int hom = 0;                  // dim Hom(N_A, Q_{A*})
  bool hom_matches = false;     // hom = n(n+1)/2

  bool ok() const { return dims_add && embeds && quotient_matches && hom_matches; }
  std::string failure() const;
};

SesReport verify_ses(const ArcDiagram& a, std::uint64_t seed = 1);

struct DesingReport {
  std::vector<int> fiber_dims;
  int total = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<int> closed_form_fiber_dims;  // b from r(A) and r2, for comparison
  bool closed_form_agrees = false;
};

/// Walks the tower of the desingularization attached to A, sampling points
/// with a seeded generator. Throws GenericityFailure if samples disagree
/// twice in a row.
DesingReport desing_dims(const ArcDiagram& a, std::uint64_t seed = 1, int samples = 3);

}  // namespace lindeg
