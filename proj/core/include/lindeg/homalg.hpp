#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lindeg/rep.hpp"

namespace lindeg {

/// <d, e> = sum d_i e_i - sum_{i<n} d_i e_{i+1}. Throws LengthMismatch.
int euler_form(const DimVector& d, const DimVector& e);

/// dim Hom(U_{i,j}, U_{k,l}) = [k <= i <= l <= j].
int hom_indec(int i, int j, int k, int l) noexcept;
/// dim Ext^1(U_{k,l}, U_{i,j}) = [k+1 <= i <= l+1 <= j].
int ext_indec(int k, int l, int i, int j) noexcept;

int hom_dim(const IsoClass& a, const IsoClass& b);
/// Computed as hom - euler form.
int ext_dim(const IsoClass& a, const IsoClass& b);
/// Bilinear extension of ext_indec; a redundant path for ext_dim.
int ext_dim_intervals(const IsoClass& a, const IsoClass& b);

/// m <= n in the degeneration order (n lies in the orbit closure of m):
/// r_{i,j}(m) >= r_{i,j}(n) for all i < j. Throws DimMismatch.
bool degenerates_to(const RankTuple& m, const RankTuple& n);
bool degenerates_to(const IsoClass& m, const IsoClass& n);
/// Same relation via dim Hom(U, m) <= dim Hom(U, n) for every interval U.
bool degenerates_to_hom_order(const IsoClass& m, const IsoClass& n);

/// Whether n_cls is isomorphic to a coordinate subrepresentation of the
/// canonical representation of m_cls. Matches summands per right endpoint.
bool embeds(const IsoClass& n_cls, const IsoClass& m_cls);
/// Second route: N = N_P + Nbar embeds iff dim N_P <= dim P (projective part
/// of M) componentwise and Nbar embeds into X = M / P, the latter decided by
/// injectivity of a random homomorphism Nbar -> X over a large prime field.
bool embeds_via_projective_split(const IsoClass& n_cls, const IsoClass& m_cls,
                                 std::uint64_t seed = 1);

/// Class of M/N for a random injective homomorphism N -> M over a large
/// prime field, i.e. the cokernel of a generic embedding; nullopt when
/// three samples fail to be injective.
std::optional<IsoClass> generic_cokernel(const IsoClass& n_cls, const IsoClass& m_cls,
                                         std::uint64_t seed = 1);

/// dim Hom(N, M) - dim End(N). Throws EmptyStratum if N does not embed.
int stratum_dim(const IsoClass& n_cls, const IsoClass& m_cls);

struct SubrepType {
  IsoClass iso;
  IsoClass projective;      // N_P
  IsoClass non_projective;  // Nbar
};

SubrepType split_subrep(const IsoClass& n_cls);

struct ComponentReport {
  bool is_min_dim = false;
  std::vector<SubrepType> components;  // sorted by multiplicity table
  std::size_t candidates = 0;          // admissible Nbar examined
};

/// Gr_e(M) for e = (1..n) and dims (n+1, ..., n+1): has every stratum
/// dimension <= n(n+1)/2, and which strata reach it. Throws WrongDims.
ComponentReport flag_components(const IsoClass& m_cls);

/// Entries over a large prime: dim of the space of homomorphisms between
/// the canonical representations, by explicit linear algebra.
std::size_t hom_space_dim(const IsoClass& a, const IsoClass& b);

}  // namespace lindeg
