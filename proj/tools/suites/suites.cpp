#include "suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lindeg/arcs.hpp"
#include "lindeg/cells.hpp"
#include "lindeg/error.hpp"
#include "lindeg/homalg.hpp"
#include "lindeg/loci.hpp"
#include "lindeg/named.hpp"
#include "lindeg/pbw.hpp"

namespace lindeg::suites {

namespace {

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

DimVector flag_dims(int n) { return DimVector::ramp(n); }

std::string word_string(const std::vector<int>& w) {
  std::string s;
  for (int k : w) s += "s" + std::to_string(k);
  return s;
}

Outcome ac1(std::uint64_t, unsigned) {
  for (int n = 2; n <= 8; ++n) {
    if (ranks_from_iso(m_zero(n)) != rank_tuple_r0(n)) return fail(cat("M0 ranks differ from r0 at n=", n));
    if (ranks_from_iso(m_one(n)) != rank_tuple_r1(n)) return fail(cat("M1 ranks differ from r1 at n=", n));
    if (ranks_from_iso(m_two(n)) != rank_tuple_r2(n)) return fail(cat("M2 ranks differ from r2 at n=", n));
  }
  return {true, "n = 2..8"};
}

Outcome ac2(std::uint64_t, unsigned) {
  // The printed list, regular ones marked.
  const std::vector<std::pair<std::string, bool>> printed = {
      {"000", true},  {"001", true},  {"010", true},  {"011", false}, {"012", true},
      {"100", true},  {"101", false}, {"102", true},  {"110", false}, {"111", false},
      {"112", false}, {"120", true},  {"121", false}, {"122", false}, {"123", true}};
  const auto schemes = rhyme_enumerate(4);
  if (schemes.size() != printed.size()) return fail(cat(schemes.size(), " schemes, expected 15"));
  int regular = 0;
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    if (schemes[k].to_string() != printed[k].first) return fail(cat("scheme ", k + 1, " is ", schemes[k].to_string()));
    if (is_regular(schemes[k]) != printed[k].second) return fail(cat("regularity of ", printed[k].first));
    regular += is_regular(schemes[k]) ? 1 : 0;
  }
  if (regular != 8) return fail(cat(regular, " regular schemes"));
  return {true, "15 schemes, 8 regular, printed order"};
}

Outcome ac3(std::uint64_t, unsigned) {
  struct Row {
    std::vector<int> seq;
    std::string word;
    std::vector<int> h;
    std::map<std::pair<int, int>, int> m;
  };
  // M^i summands: P_1 = U_{1,4}, P_k = U_{k,4}, I_k = U_{1,k}.
  const std::vector<Row> table = {
      {{}, "s1s2s3s4s1s2s3s1s2s1", {0, 0, 0, 0}, {{{1, 4}, 5}}},
      {{1}, "s2s3s4s5s2s3s4s2s3s1", {0, 1, 1, 1}, {{{1, 4}, 4}, {{1, 1}, 1}, {{2, 4}, 1}}},
      {{2}, "s2s3s4s5s2s3s4s1s2s1", {0, 0, 1, 1}, {{{1, 4}, 4}, {{1, 2}, 1}, {{3, 4}, 1}}},
      {{3}, "s2s3s4s5s1s2s3s1s2s1", {0, 0, 0, 1}, {{{1, 4}, 4}, {{1, 3}, 1}, {{4, 4}, 1}}},
      {{1, 2}, "s3s4s5s6s3s4s5s2s3s1", {0, 1, 2, 2}, {{{1, 4}, 3}, {{1, 1}, 1}, {{2, 4}, 1}, {{1, 2}, 1}, {{3, 4}, 1}}},
      {{1, 3}, "s3s4s5s6s2s3s4s2s3s1", {0, 1, 1, 2}, {{{1, 4}, 3}, {{1, 1}, 1}, {{2, 4}, 1}, {{1, 3}, 1}, {{4, 4}, 1}}},
      {{2, 3}, "s3s4s5s6s3s4s5s1s2s1", {0, 0, 1, 2}, {{{1, 4}, 3}, {{1, 2}, 1}, {{3, 4}, 1}, {{1, 3}, 1}, {{4, 4}, 1}}},
      {{1, 2, 3},
       "s4s5s6s7s3s4s5s2s3s1",
       {0, 1, 2, 3},
       {{{1, 4}, 2}, {{1, 1}, 1}, {{2, 4}, 1}, {{1, 2}, 1}, {{3, 4}, 1}, {{1, 3}, 1}, {{4, 4}, 1}}},
  };
  std::string misprints;
  for (const auto& row : table) {
    const ProjSeq seq(4, row.seq);
    const auto w = weyl_word(seq);
    if (h_vector(seq) != row.h) return fail(cat(seq.to_string(), ": h differs"));
    IsoClass expected(4);
    for (const auto& [iv, mult] : row.m) expected.add(iv.first, iv.second, mult);
    if (m_of_projections(seq) != expected) return fail(cat(seq.to_string(), ": M^i is ", m_of_projections(seq).to_string()));
    if (!w.reduced() || w.word.size() != 10) return fail(cat(seq.to_string(), ": word not reduced of length 10"));
    if (word_string(w.word) == row.word) continue;
    // A printed word is accepted as a misprint only if its inversion set
    // is not {(l_p, l_q)} while the computed one is.
    std::vector<int> letters;
    for (std::size_t k = 1; k < row.word.size(); k += 2) letters.push_back(row.word[k] - '0');
    const auto printed = WeylWord::from_word(w.N, letters);
    std::set<std::pair<int, int>> roots;
    for (int t = 1; t < w.N; ++t) {
      for (int u = t; u < w.N; ++u) {
        if (printed.perm[static_cast<std::size_t>(t - 1)] > printed.perm[static_cast<std::size_t>(u)]) roots.emplace(t, u);
      }
    }
    if (roots == inversion_negative_roots(seq)) return fail(cat(seq.to_string(), ": word ", word_string(w.word)));
    misprints += cat(" ", seq.to_string(), " printed ", row.word, " computed ", word_string(w.word));
  }
  return {true, misprints.empty() ? "8 rows" : "8 rows; misprinted words:" + misprints};
}

Outcome ac4(std::uint64_t, unsigned) {
  std::string detail;
  for (int n = 2; n <= 6; ++n) {
    const auto report = flag_components(m_two(n));
    if (!report.is_min_dim) return fail(cat("M2 not of minimal dimension at n=", n));
    if (report.components.size() != catalan(n)) {
      return fail(cat(report.components.size(), " components at n=", n, ", C_n = ", catalan(n)));
    }
    std::vector<IsoClass> got;
    for (const auto& c : report.components) {
      if (stratum_dim(c.iso, m_two(n)) != n * (n + 1) / 2) return fail(cat("stratum ", c.iso.to_string(), " has wrong dimension"));
      got.push_back(c.iso);
    }
    std::vector<IsoClass> want;
    for (const auto& a : enumerate_arcs(n)) want.push_back(n_of_arcs(a));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) return fail(cat("components differ from {N_A} at n=", n));
    detail += cat(n == 2 ? "" : ",", got.size());
  }
  return {true, "components " + detail};
}

Outcome ac5(std::uint64_t, unsigned jobs) {
  CountOptions options;
  options.jobs = jobs;
  std::size_t checked = 0;
  auto check = [&](const IsoClass& iso, const std::vector<std::uint64_t>& qs) -> std::optional<std::string> {
    const auto e = flag_dims(iso.n());
    const auto p = poincare(iso, e);
    for (auto q : qs) {
      const auto counted = count_points_fq(iso, e, q, options);
      const auto predicted = evaluate(p, q);
      if (counted != predicted) return cat(iso.to_string(), " at q=", q, ": ", counted, " points, P(q) = ", predicted);
      ++checked;
    }
    return std::nullopt;
  };
  for (int n = 1; n <= 3; ++n) {
    for (const auto& iso : iso_classes_with_dims(DimVector::constant(n, n + 1))) {
      if (auto err = check(iso, {2, 3, 5})) return fail(*err);
    }
  }
  std::vector<IsoClass> named = {m_zero(4), m_one(4), m_two(4)};
  for (int i = 1; i <= 3; ++i) named.push_back(m_single_defect(4, i));
  for (const auto& iso : named) {
    if (auto err = check(iso, {2, 3, 5})) return fail(*err);
  }
  return {true, cat(checked, " (class, q) pairs")};
}

Outcome ac6(std::uint64_t, unsigned) {
  const auto m2 = layout(m_two(4));
  const FixedPoint ex1{{4, 0, 3, 2, 2, 0, 0, 0, 0, 1, 0}};
  validate(m2, ex1);
  if (cell_dim(m2, ex1) != 10) return fail(cat("Example1 cell dim ", cell_dim(m2, ex1)));
  if (tangent_dim(m2, ex1) != 11) return fail(cat("Example1 tangent dim ", tangent_dim(m2, ex1)));
  const auto ma = layout(m_single_defect(4, 2));
  const std::vector<std::pair<FixedPoint, int>> triple = {
      {{{3, 4, 1, 2, 0, 0, 0}}, 10}, {{{3, 3, 1, 4, 0, 2, 0}}, 10}, {{{3, 4, 1, 3, 0, 2, 0}}, 9}};
  for (const auto& [fp, want] : triple) {
    validate(ma, fp);
    if (fixed_point_dims(ma, fp) != flag_dims(4)) return fail("P/R/Q fixed point has the wrong dimension vector");
    if (cell_dim(ma, fp) != want) return fail(cat("cell dim ", cell_dim(ma, fp), ", expected ", want));
  }
  return {true, "Example1 (10, 11); P, R, Q = (10, 10, 9)"};
}

Outcome ac7(std::uint64_t seed, unsigned) {
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : enumerate_arcs(n)) {
      const auto rep = verify_ses(a, seed);
      if (!rep.ok()) return fail(cat(a.to_string(), " n=", n, ": ", rep.failure()));
      ++count;
    }
  }
  return {true, cat(count, " diagrams")};
}

Outcome ac8(std::uint64_t seed, unsigned) {
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : enumerate_arcs(n)) {
      const auto rep = desing_dims(a, seed, 3);
      if (rep.samples < 3) return fail(cat(a.to_string(), ": only ", rep.samples, " samples"));
      if (rep.total != n * (n + 1) / 2) return fail(cat(a.to_string(), " n=", n, ": total ", rep.total));
      ++count;
    }
  }
  return {true, cat(count, " diagrams, 3 samples each, seed ", seed)};
}

Outcome ac9(std::uint64_t, unsigned) {
  std::size_t count = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<Weight> weights;
    for (int r = 0; r < n; ++r) {
      Weight w(static_cast<std::size_t>(n), 0);
      w[static_cast<std::size_t>(r)] = 1;
      weights.push_back(w);
    }
    weights.emplace_back(static_cast<std::size_t>(n), 1);
    for (const auto& seq : ProjSeq::all(n)) {
      const auto w = weyl_word(seq);
      for (const auto& lambda : weights) {
        const auto d = demazure_dim(w, psi_weight(seq, lambda));
        const auto v = weyl_dim(n + 1, lambda);
        if (d != v) return fail(cat(seq.to_string(), ": Demazure ", d, " vs Weyl ", v));
        ++count;
      }
    }
  }
  return {true, cat(count, " (i, lambda) pairs")};
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  Rational q;
  do {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  } while (nonzero && q == 0);
  return q;
}

Outcome ac10(std::uint64_t seed, unsigned) {
  std::mt19937_64 rng(seed);
  for (int n = 2; n <= 4; ++n) {
    for (int sample = 0; sample < 20; ++sample) {
      std::vector<Rational> diag;
      for (int i = 1; i < n; ++i) diag.push_back(random_rational(rng, false));
      Matrix x(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), 0);
      for (int p = 1; p <= n + 1; ++p) {
        for (int q = 1; q < p; ++q) x(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)) = random_rational(rng, false);
      }
      if (!check_automorphism(gamma_pbw(n, diag, x), slice_pbw(n, diag))) {
        return fail(cat("gamma is not an automorphism at n=", n, ", sample ", sample));
      }
      if (standard_flag_stabilizer_dim(n, diag) != 0) return fail(cat("nontrivial stabilizer at n=", n));
    }
  }
  // The n = 3 triple on the five parameter strata of (lambda11, lambda22),
  // with lambda12 forced nonzero on the fourth and zero on the fifth.
  const std::array<std::array<bool, 2>, 5> strata = {{{true, true}, {true, false}, {false, true}, {false, false}, {false, false}}};
  int checked = 0;
  for (std::size_t k = 0; k < strata.size(); ++k) {
    for (int sample = 0; sample < 20; ++sample) {
      SliceParams lambda(2, false, Rational(0));
      lambda(1, 1) = strata[k][0] ? random_rational(rng, true) : Rational(0);
      lambda(2, 2) = strata[k][1] ? random_rational(rng, true) : Rational(0);
      lambda(1, 2) = k == 3 ? random_rational(rng, true) : k == 4 ? Rational(0) : random_rational(rng, false);
      Matrix x(4, 4, 0);
      for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t q = 0; q < p; ++q) x(p, q) = random_rational(rng, false);
      }
      const auto triple = solvable_triple_n3(lambda, x);
      bool invertible = true;
      for (const auto& g : triple) invertible = invertible && rank(g) == 4;
      if (!invertible) continue;  // degenerate x
      if (!check_automorphism(triple, slice_rep(3, lambda))) return fail(cat("n=3 triple fails on stratum ", k + 1));
      ++checked;
    }
  }
  if (checked < 50) return fail(cat("only ", checked, " invertible n=3 samples"));
  return {true, cat("60 gamma samples, ", checked, " triple samples, seed ", seed)};
}

Outcome ac11(std::uint64_t, unsigned) {
  std::size_t count = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto e = flag_dims(n);
    for (const auto& rt : flat_rank_tuples(n)) {
      if (!rt.dominates(rank_tuple_r1(n))) continue;
      const auto iso = iso_from_ranks(rt);
      const auto top = top_cells(iso, e);
      if (top.size() != 1) return fail(cat(iso.to_string(), ": ", top.size(), " top cells"));
      if (max_cell_dim(iso, e) != n * (n + 1) / 2) return fail(cat(iso.to_string(), ": top cell dimension"));
      ++count;
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const auto e = flag_dims(n);
    for (int i = 1; i < n; ++i) {
      const auto iso = m_single_defect(n, i);
      if (top_cells(iso, e).size() < 2) return fail(cat("M(a^", i, ") at n=", n, " has fewer than 2 top cells"));
      ++count;
      for (int j = i; j < n; ++j) {
        const auto bad = m_pair_defect(n, i, j);
        if (max_cell_dim(bad, e) <= n * (n + 1) / 2) return fail(cat("M(a^{", i, ",", j, "}) at n=", n, " is not oversized"));
        ++count;
      }
    }
  }
  return {true, cat(count, " classes")};
}

Outcome ac12(std::uint64_t, unsigned) {
  std::size_t pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto classes = iso_classes_with_dims(DimVector::constant(n, n + 1));
    for (const auto& a : classes) {
      for (const auto& b : classes) {
        if (degenerates_to(a, b) != degenerates_to_hom_order(a, b)) {
          return fail(cat("orders disagree on ", a.to_string(), " vs ", b.to_string()));
        }
        ++pairs;
      }
    }
  }
  return {true, cat(pairs, " pairs")};
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "named-rank-tuples", 1, ac1},
      {2, "rhyme-schemes", 1, ac2},
      {3, "schubert-table", 1, ac3},
      {4, "catalan-components", 30, ac4},
      {5, "counting-identity", 600, ac5},
      {6, "example-cells", 1, ac6},
      {7, "ses-hom", 10, ac7},
      {8, "desingularization", 30, ac8},
      {9, "demazure", 60, ac9},
      {10, "group-schemes", 5, ac10},
      {11, "top-cells", 60, ac11},
      {12, "order-equivalence", 60, ac12},
  };
  return all;
}

std::vector<Criterion> select(const std::string& suite) {
  if (suite == "all") return criteria();
  for (const auto& c : criteria()) {
    if (suite == "ac" + std::to_string(c.id) || suite == c.name) return {c};
  }
  throw Error(ErrorCode::InvalidParams, "unknown suite \"" + suite + "\"");
}

Result run(const Criterion& c, std::uint64_t seed, unsigned jobs) {
  Result r{c.id, c.name, false, false, 0, c.limit_seconds, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto out = c.run(seed, jobs);
    r.pass = out.pass;
    r.detail = out.detail;
  } catch (const Error& e) {
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.in_time = r.seconds <= c.limit_seconds;
  return r;
}

}  // namespace lindeg::suites
