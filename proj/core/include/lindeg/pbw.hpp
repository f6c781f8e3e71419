#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lindeg/types.hpp"

namespace lindeg {

/// h_s = #{t : i_t < s}, s = 1..n.
std::vector<int> h_vector(const ProjSeq& seq);
/// l_j = h_j + j.
std::vector<int> ell_vector(const ProjSeq& seq);

/// A word in the simple reflections s_1..s_{N-1} of the symmetric group on
/// {1..N}. perm[a-1] is the image of a under the product, rightmost letter
/// acting first.
struct WeylWord {
  int N = 1;
  std::vector<int> word;
  std::vector<int> perm;

  /// Throws InvalidParams on letters outside 1..N-1.
  static WeylWord from_word(int N, std::vector<int> word);
  std::size_t inversions() const;
  bool reduced() const { return inversions() == word.size(); }
};

/// w_n ... w_1 with w_k = s_{h_k+1} ... s_{h_k+k}, N = n+1+d(i).
WeylWord weyl_word(const ProjSeq& seq);

/// The images of l_j (and l_j - 1 when l_j = l_{j-1} + 2) under w_i.
bool prop_action_holds(const ProjSeq& seq);
/// w_i{1..l_j} = {1..l_j-j} u {n+2+l_j-2j .. n+1+l_j-j} for every j.
bool window_holds(const ProjSeq& seq);

/// Pairs (t, u) with -alpha_{t,u} in w^{-1}(positive) n negative roots.
/// Throws std::logic_error unless this is {(l_p, l_q) : p <= q}.
std::set<std::pair<int, int>> inversion_negative_roots(const ProjSeq& seq);

struct DegreeTable {
  int n = 0;
  ProjSeq seq;
  Triangular<int> t;  // non-strict, 1 <= p <= q <= n
};

/// Built with the D_l recursion from the heights and checked against the
/// closed form; throws std::logic_error if they disagree.
DegreeTable degree_table(const ProjSeq& seq);

using Root = std::pair<int, int>;  // f_{p,q}, 1 <= p <= q <= n

/// [f_{p,q}, f_{s,r}] in the partially abelianized algebra: nothing or
/// f_{p,r}. Throws InvalidParams unless p <= q, s <= r, p <= s and the
/// roots lie in 1..n.
std::optional<Root> bracket(const ProjSeq& seq, const Root& a, const Root& b);

/// Compares every bracket, pushed through f_{p,q} -> f_{l_p,l_q}, with the
/// commutator of the matrices -E_{b+1,a} (for f_{a,b}) in gl_N.
bool eta_check(const ProjSeq& seq);

/// Weights are coefficient lists on the fundamental weights.
using Weight = std::vector<int>;

/// Moves the coefficient of w_j to w_{l_j}; the result has n + d(i) entries.
/// Throws NegativeCoefficient, LengthMismatch.
Weight psi_weight(const ProjSeq& seq, const Weight& lambda);

/// Dimension of the irreducible sl_N module of highest weight lambda
/// (N - 1 coefficients). Throws NegativeCoefficient, LengthMismatch.
std::uint64_t weyl_dim(int N, const Weight& lambda);

/// Dimension of the Demazure module V_w(lambda), via Demazure operators on
/// characters. Throws NotReduced, NotDominant, LengthMismatch.
std::uint64_t demazure_dim(const WeylWord& w, const Weight& lambda);

/// Character of V_w(lambda) as weights in epsilon coordinates (length N).
std::map<std::vector<int>, std::int64_t> demazure_character(const WeylWord& w, const Weight& lambda);

}  // namespace lindeg
