#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lindeg/rep.hpp"

namespace lindeg {

/// Witness for leaving the flat irreducible locus: a single index i (flat
/// but reducible; dominated by M(a^i)) or a pair (i, j) (not flat; dominated
/// by M(a^{i,j-1})).
struct Witness {
  enum class Kind { None, Index, Pair };
  Kind kind = Kind::None;
  int i = 0;
  int j = 0;

  static Witness index(int i) { return {Kind::Index, i, 0}; }
  static Witness pair(int i, int j) { return {Kind::Pair, i, j}; }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LocusReport {
  bool flat = false;
  bool irreducible = false;
  bool normal = false;
  bool pbw = false;
  bool iso = false;
  Witness witness;

  friend bool operator==(const LocusReport&, const LocusReport&) = default;
};

/// Throws WrongDims unless diag = (n+1, ..., n+1).
LocusReport classify(const RankTuple& rt);
/// Throws NoWitness inside the flat irreducible locus.
Witness witness(const RankTuple& rt);
/// The orbit a witness degenerates from: M(a^i) or M(a^{i,j-1}).
IsoClass witness_orbit(int n, const Witness& w);

struct RhymeScheme {
  std::vector<int> b;

  int n() const noexcept { return static_cast<int>(b.size()) + 1; }
  bool valid() const;
  /// Throws InvalidScheme.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const RhymeScheme&, const RhymeScheme&) = default;
  friend auto operator<=>(const RhymeScheme&, const RhymeScheme&) = default;
};

/// Schemes of length n-1 in lexicographic order.
std::vector<RhymeScheme> rhyme_enumerate(int n);
bool is_regular(const RhymeScheme& s);
/// f_i is the identity on Q^{n+1}, or the projection killing e_{b_i}.
MatrixRep scheme_to_rep(const RhymeScheme& s);
/// r_{i,j} = n+1 - #distinct nonzero values among b_i..b_{j-1}.
RankTuple scheme_to_ranks(const RhymeScheme& s);

/// Positions of the nonzero entries. Throws NotRegular.
ProjSeq dseq_of_scheme(const RhymeScheme& s);
RhymeScheme scheme_of_dseq(const ProjSeq& seq);

struct OrbitCensus {
  std::uint64_t rank_count = 0;
  std::uint64_t pcal_count = 0;
  bool agree() const noexcept { return rank_count == pcal_count; }
};

/// Flat orbits counted two ways: realizable rank tuples dominating r2, and
/// sequences (I_1, ..., I_{n-1}) of subsets of {1..n+1} with |I_i| <= 2 and
/// |I_i u I_{i+1}| <= 3 up to relabelling.
OrbitCensus flat_orbit_census(int n);
/// The rank tuples behind rank_count, sorted.
std::vector<RankTuple> flat_rank_tuples(int n);

/// Slice parameters: lambda(i, j) for 1 <= i <= j <= n-1.
using SliceParams = Triangular<Rational>;

/// f_i = identity except column i+1: rows 2..i+1 carry lambda_{1..i, i}
/// shifted, entries (p, q) with 2 <= p <= i+1 <= q <= n are lambda_{p-1,q-1}.
MatrixRep slice_rep(int n, const SliceParams& lambda);
/// Diagonal parameters only: lambda_{i,j} = 0 for i < j.
MatrixRep slice_pbw(int n, const std::vector<Rational>& diag);

/// g_1..g_n for T_PBW parameters lambda_{1..n-1} and strictly lower x
/// ((n+1) x (n+1), only entries p > q read).
std::vector<Matrix> gamma_pbw(int n, const std::vector<Rational>& diag, const Matrix& x);
/// g_{i+1} f_i = f_i g_i for all i, each g_i invertible. Throws ShapeMismatch.
bool check_automorphism(const std::vector<Matrix>& g, const MatrixRep& f);
/// Dimension of {x : gamma_pbw(x) fixes the standard flag}, as a linear
/// space in x.
std::size_t standard_flag_stabilizer_dim(int n, const std::vector<Rational>& diag);

/// The three matrices of the solvable n = 3 example, for parameters
/// lambda(1,1), lambda(1,2), lambda(2,2) and strictly lower x (4 x 4).
std::vector<Matrix> solvable_triple_n3(const SliceParams& lambda, const Matrix& x);

}  // namespace lindeg
