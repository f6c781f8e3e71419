#pragma once

#include <string>
#include <vector>

#include "lindeg/rep.hpp"

namespace lindeg {

enum class NamedKind {
  M0,         // generic: P_1^(n+1)
  M1,         // PBW degenerate: A + A*
  M2,         // minimal flat: A + S + A*/S
  Ma,         // M(a) for a tuple a
  MaSingle,   // M(a^i)
  MaPair,     // M(a^{i,j})
  Mproj,      // M^i for a projection sequence
  PathAlgebra,      // A = sum of P_i
  DualPathAlgebra,  // A* = sum of I_i
};

/// params: Ma takes a_1..a_{n-1}; MaSingle takes i; MaPair takes i, j;
/// Mproj takes the projection sequence; the rest take none.
/// Throws InvalidParams.
IsoClass named_rep(NamedKind kind, int n, const std::vector<int>& params = {});

IsoClass m_zero(int n);
IsoClass m_one(int n);
IsoClass m_two(int n);
IsoClass m_of_tuple(int n, const std::vector<int>& a);
IsoClass m_single_defect(int n, int i);
IsoClass m_pair_defect(int n, int i, int j);
IsoClass m_of_projections(const ProjSeq& seq);
IsoClass path_algebra(int n);
IsoClass dual_path_algebra(int n);
IsoClass simple_sum(int n);

/// a^i: a 2 in position i. a^{i,j}: 2s at i and j with 1s between; a 3
/// at i when i = j.
std::vector<int> defect_tuple_single(int n, int i);
std::vector<int> defect_tuple_pair(int n, int i, int j);

}  // namespace lindeg
