#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library: representations are rebuilt from multiplicity lists, ranks come
// from a separate elimination routine.

#include <cstdint>
#include <gmpxx.h>
#include <tuple>
#include <vector>

namespace oracle {

using Q = mpq_class;
using QMat = std::vector<std::vector<Q>>;
using PMat = std::vector<std::vector<std::int64_t>>;

int rank(QMat m);
int rank_mod(PMat m, std::int64_t p);

/// Multiplicities as (i, j, mult) triples of interval modules U_{i,j}.
using Summands = std::vector<std::tuple<int, int, int>>;

struct Rep {
  int n = 0;
  std::vector<int> dims;
  std::vector<PMat> maps;  // maps[k]: vertex k+1 -> vertex k+2, dims[k+1] x dims[k]
};

/// Direct sum of interval modules with identity maps inside each summand.
Rep direct_sum(int n, const Summands& s);

/// r[i][j] = rank of the composite vertex i -> vertex j (1-based, i < j).
std::vector<std::vector<int>> rank_table(const Rep& r);

/// dim Hom(a, b) by solving phi_{k+1} f_k = g_k phi_k over F_p.
int hom_dim(const Rep& a, const Rep& b, std::int64_t p = 1000003);
/// dim Ext^1(a, b) as the cokernel of the same differential.
int ext_dim(const Rep& a, const Rep& b, std::int64_t p = 1000003);

/// Number of subrepresentations of dimension vector e over F_q, q prime,
/// by enumerating reduced echelon subspaces at each vertex.
std::uint64_t count_subreps(const Rep& r, const std::vector<int>& e, std::int64_t q);

std::uint64_t catalan(int n);  // by the convolution recurrence
std::uint64_t bell(int n);     // by the Bell triangle

/// Arc sets on n points with no shared left end, no shared right end and no
/// proper crossing, by brute force over all subsets of pairs.
std::vector<std::vector<std::pair<int, int>>> noncrossing_arcs(int n);

/// dim of the irreducible sl_N module with fundamental coefficients lambda,
/// by the hook-content formula on the associated partition.
std::uint64_t weyl_dim(int N, const std::vector<int>& lambda);

/// Permutation of {1..N} for a word, rightmost letter applied first.
std::vector<int> word_perm(int N, const std::vector<int>& word);

}  // namespace oracle
