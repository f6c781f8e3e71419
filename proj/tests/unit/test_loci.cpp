#include <gtest/gtest.h>

#include <set>

#include "common.hpp"
#include "lindeg/error.hpp"
#include "lindeg/homalg.hpp"
#include "lindeg/loci.hpp"
#include "lindeg/named.hpp"

using namespace lindeg;

namespace {

// b_1 in {0, 1} and each entry at most one above the running maximum.
bool oracle_scheme(const std::vector<int>& b) {
  int top = 0;
  for (int v : b) {
    if (v < 0 || v > top + 1) return false;
    top = std::max(top, v);
  }
  return true;
}

std::set<std::vector<int>> all_tuples(int len, int max) {
  std::set<std::vector<int>> out;
  std::vector<int> b(static_cast<std::size_t>(len), 0);
  while (true) {
    out.insert(b);
    std::size_t k = 0;
    while (k < b.size() && ++b[k] > max) b[k++] = 0;
    if (k == b.size()) break;
  }
  return out;
}

RankTuple zero_maps(int n) { return RankTuple(DimVector::constant(n, n + 1)); }

}  // namespace

TEST(Classify, Examples) {
  for (int n = 2; n <= 6; ++n) {
    const auto r0 = classify(rank_tuple_r0(n));
    EXPECT_TRUE(r0.iso && r0.flat && r0.irreducible && r0.normal && r0.pbw);
    const auto r2 = classify(rank_tuple_r2(n));
    EXPECT_TRUE(r2.flat);
    EXPECT_FALSE(r2.irreducible || r2.normal || r2.pbw || r2.iso);
    const auto r1 = classify(rank_tuple_r1(n));
    EXPECT_TRUE(r1.flat && r1.irreducible && r1.pbw);
    EXPECT_FALSE(r1.iso);
  }
  EXPECT_TRUE(classify(scheme_to_ranks(RhymeScheme{{1, 0, 2}})).pbw);
}

TEST(Classify, Errors) {
  try {
    classify(ranks_from_iso(path_algebra(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongDims);
  }
  auto bad = rank_tuple_r0(3);
  bad.set(1, 3, 4);
  bad.set(1, 2, 1);
  try {
    classify(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonRealizable);
  }
}

TEST(Classify, FlatMeansBelowR2) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& iso : iso_classes_with_dims(DimVector::constant(n, n + 1))) {
      const auto rt = ranks_from_iso(iso);
      const auto rep = classify(rt);
      EXPECT_EQ(rep.flat, rt.dominates(rank_tuple_r2(n)));
      EXPECT_EQ(rep.irreducible, rt.dominates(rank_tuple_r1(n)));
      EXPECT_EQ(rep.iso, rt == rank_tuple_r0(n));
      if (rep.pbw) EXPECT_TRUE(rep.irreducible);
    }
  }
}

TEST(Witness, Examples) {
  EXPECT_EQ(witness(ranks_from_iso(m_two(3))), Witness::index(1));
  EXPECT_EQ(witness(zero_maps(2)), Witness::pair(1, 2));
  EXPECT_EQ(witness_orbit(2, Witness::pair(1, 2)), m_pair_defect(2, 1, 1));
  try {
    witness(rank_tuple_r1(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoWitness);
  }
}

TEST(Witness, DominatedByWitnessOrbit) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& iso : iso_classes_with_dims(DimVector::constant(n, n + 1))) {
      const auto rt = ranks_from_iso(iso);
      const auto rep = classify(rt);
      if (rep.flat && rep.irreducible) {
        EXPECT_EQ(rep.witness.kind, Witness::Kind::None);
        continue;
      }
      const auto w = witness(rt);
      EXPECT_EQ(w, rep.witness);
      EXPECT_EQ(w.kind, rep.flat ? Witness::Kind::Index : Witness::Kind::Pair);
      EXPECT_TRUE(degenerates_to(witness_orbit(n, w), iso)) << iso.to_string();
      if (w.kind == Witness::Kind::Index) {
        EXPECT_EQ(rt(w.i, w.i + 1), n - 1);
      } else {
        EXPECT_LE(rt(w.i, w.j), n - w.j + w.i - 1);
      }
    }
  }
}

TEST(Rhymes, CountsAreBellNumbers) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(rhyme_enumerate(n).size(), oracle::bell(n)) << n;
}

TEST(Rhymes, MatchDefiningRule) {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::vector<int>> expected;
    for (const auto& b : all_tuples(n - 1, n - 1)) {
      if (oracle_scheme(b)) expected.insert(b);
    }
    std::set<std::vector<int>> got;
    for (const auto& s : rhyme_enumerate(n)) {
      EXPECT_TRUE(s.valid());
      got.insert(s.b);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(Rhymes, PrintedList) {
  std::vector<std::string> names;
  int regular = 0;
  for (const auto& s : rhyme_enumerate(4)) {
    names.push_back(s.to_string());
    regular += is_regular(s) ? 1 : 0;
  }
  const std::vector<std::string> printed = {"000", "001", "010", "011", "012", "100", "101", "102",
                                            "110", "111", "112", "120", "121", "122", "123"};
  EXPECT_EQ(names, printed);
  EXPECT_EQ(regular, 8);
}

TEST(Rhymes, RanksAndLoci) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(scheme_to_ranks(RhymeScheme{std::vector<int>(static_cast<std::size_t>(n - 1), 0)}), rank_tuple_r0(n));
    std::vector<int> distinct;
    for (int k = 1; k < n; ++k) distinct.push_back(k);
    EXPECT_EQ(scheme_to_ranks(RhymeScheme{distinct}), rank_tuple_r1(n));
    for (const auto& s : rhyme_enumerate(n)) {
      EXPECT_EQ(classify(scheme_to_ranks(s)).pbw, is_regular(s)) << s.to_string();
      if (n <= 5) EXPECT_EQ(rank_tuple(scheme_to_rep(s)), scheme_to_ranks(s));
    }
  }
}

TEST(Rhymes, InvalidScheme) {
  try {
    RhymeScheme{{2, 0}}.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidScheme);
  }
  EXPECT_FALSE((RhymeScheme{{1, 3}}).valid());
  EXPECT_TRUE((RhymeScheme{{1, 2, 1}}).valid());
}

TEST(Dseq, Examples) {
  EXPECT_EQ(scheme_of_dseq(ProjSeq(4, {1, 3})).b, (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(scheme_of_dseq(ProjSeq(4, {})).b, (std::vector<int>{0, 0, 0}));
  try {
    dseq_of_scheme(RhymeScheme{{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
}

TEST(Dseq, RoundTrip) {
  for (int n = 2; n <= 6; ++n) {
    std::size_t regular = 0;
    for (const auto& s : rhyme_enumerate(n)) {
      if (!is_regular(s)) continue;
      ++regular;
      EXPECT_EQ(scheme_of_dseq(dseq_of_scheme(s)), s);
      EXPECT_EQ(scheme_to_ranks(s), ranks_from_iso(m_of_projections(dseq_of_scheme(s))));
    }
    EXPECT_EQ(regular, std::size_t{1} << (n - 1));
  }
}

TEST(Census, SmallCases) {
  const auto c2 = flat_orbit_census(2);
  EXPECT_EQ(c2.rank_count, 3u);
  EXPECT_EQ(c2.pcal_count, 3u);
  EXPECT_EQ(flat_orbit_census(3).rank_count, 13u);
  EXPECT_EQ(flat_orbit_census(3).pcal_count, 13u);
}

TEST(Census, RankCountMatchesClasses) {
  for (int n = 2; n <= 4; ++n) {
    std::size_t flat = 0;
    for (const auto& iso : iso_classes_with_dims(DimVector::constant(n, n + 1))) {
      flat += ranks_from_iso(iso).dominates(rank_tuple_r2(n)) ? 1 : 0;
    }
    EXPECT_EQ(flat_orbit_census(n).rank_count, flat);
    EXPECT_EQ(flat_rank_tuples(n).size(), flat);
  }
}

TEST(Slice, Examples) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(rank_tuple(slice_pbw(n, std::vector<Rational>(static_cast<std::size_t>(n - 1), 1))), rank_tuple_r0(n));
    EXPECT_EQ(rank_tuple(slice_pbw(n, std::vector<Rational>(static_cast<std::size_t>(n - 1), 0))), rank_tuple_r1(n));
  }
  EXPECT_THROW(slice_rep(4, SliceParams(2, false, Rational(0))), Error);
}

TEST(Slice, DisplayedMatricesAtFour) {
  // lambda_{ij} = 10 i + j, transcribed from the displayed triple.
  SliceParams lambda(3, false, Rational(0));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) lambda(i, j) = 10 * i + j;
  }
  const std::vector<std::vector<std::vector<int>>> shown = {
      {{1, 0, 0, 0, 0}, {0, 11, 12, 13, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
      {{1, 0, 0, 0, 0}, {0, 1, 12, 13, 0}, {0, 0, 22, 23, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
      {{1, 0, 0, 0, 0}, {0, 1, 0, 13, 0}, {0, 0, 1, 23, 0}, {0, 0, 0, 33, 0}, {0, 0, 0, 0, 1}}};
  const auto rep = slice_rep(4, lambda);
  ASSERT_EQ(rep.maps.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(rep.maps[k](r, c), shown[k][r][c]) << "f" << k + 1 << " " << r << c;
    }
  }
}

TEST(Slice, DisplayedPairAtThree) {
  SliceParams lambda(2, false, Rational(0));
  lambda(1, 1) = 11;
  lambda(1, 2) = 12;
  lambda(2, 2) = 22;
  const std::vector<std::vector<std::vector<int>>> shown = {
      {{1, 0, 0, 0}, {0, 11, 12, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 1, 12, 0}, {0, 0, 22, 0}, {0, 0, 0, 1}}};
  const auto rep = slice_rep(3, lambda);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(rep.maps[k](r, c), shown[k][r][c]);
    }
  }
}

TEST(Slice, FiveStrataAtThree) {
  // lambda11, lambda12, lambda22 for the five orbits.
  const std::vector<std::array<int, 3>> strata = {{1, 5, 2}, {1, 5, 0}, {0, 5, 2}, {0, 5, 0}, {0, 0, 0}};
  for (std::size_t k = 0; k < strata.size(); ++k) {
    SliceParams lambda(2, false, Rational(0));
    lambda(1, 1) = strata[k][0];
    lambda(1, 2) = strata[k][1];
    lambda(2, 2) = strata[k][2];
    const auto rep = classify(rank_tuple(slice_rep(3, lambda)));
    EXPECT_TRUE(rep.flat && rep.irreducible) << k;
    EXPECT_EQ(rep.pbw, k != 3) << k;
  }
}

TEST(GroupScheme, IdentityAtZero) {
  for (int n = 2; n <= 5; ++n) {
    const std::vector<Rational> diag(static_cast<std::size_t>(n - 1), Rational(3, 2));
    const auto g = gamma_pbw(n, diag, Matrix(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), 0));
    ASSERT_EQ(g.size(), static_cast<std::size_t>(n));
    for (const auto& m : g) EXPECT_EQ(m, identity_matrix(static_cast<std::size_t>(n + 1)));
    EXPECT_TRUE(check_automorphism(g, slice_pbw(n, diag)));
  }
}

TEST(GroupScheme, RandomAutomorphisms) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> diag;
      for (int i = 1; i < n; ++i) diag.emplace_back(trial % 2 == 0 ? 0 : num(rng), 1);
      Matrix x(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), 0);
      for (std::size_t p = 0; p < x.rows(); ++p) {
        for (std::size_t q = 0; q < p; ++q) x(p, q) = Rational(num(rng), 1 + (num(rng) + 5) % 3);
      }
      const auto g = gamma_pbw(n, diag, x);
      EXPECT_TRUE(check_automorphism(g, slice_pbw(n, diag)));
      EXPECT_EQ(standard_flag_stabilizer_dim(n, diag), 0u);
    }
  }
}

TEST(GroupScheme, NonAutomorphismDetected) {
  const auto f = slice_pbw(3, {Rational(0), Rational(0)});
  std::vector<Matrix> g(3, identity_matrix(4));
  g[1](3, 0) = 1;
  EXPECT_FALSE(check_automorphism(g, f));
  g[1] = Matrix(4, 4, 0);
  EXPECT_FALSE(check_automorphism(g, f));
  EXPECT_THROW(check_automorphism(std::vector<Matrix>(2, identity_matrix(4)), f), Error);
}

TEST(GroupScheme, SolvableTriple) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    SliceParams lambda(2, false, Rational(0));
    lambda(1, 1) = num(rng);
    lambda(1, 2) = num(rng);
    lambda(2, 2) = num(rng);
    Matrix x(4, 4, 0);
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = 0; q < p; ++q) x(p, q) = num(rng);
    }
    const auto g = solvable_triple_n3(lambda, x);
    bool invertible = true;
    for (const auto& m : g) invertible = invertible && rank(m) == 4;
    if (!invertible) continue;
    EXPECT_TRUE(check_automorphism(g, slice_rep(3, lambda)));
    ++checked;
  }
  EXPECT_GT(checked, 30);
}
