#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "common.hpp"
#include "lindeg/error.hpp"
#include "lindeg/json_io.hpp"
#include "lindeg/loci.hpp"
#include "lindeg/named.hpp"

using namespace lindeg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::FieldError;
}

}  // namespace

TEST(Json, IsoClassRoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto iso = testing_util::random_iso(1 + trial % 5, 2, rng);
    EXPECT_EQ(iso_class_from_json(Json::parse(dump(to_json(iso)))), iso);
  }
  EXPECT_EQ(dump(to_json(m_two(2))),
            R"({"m":[{"i":1,"j":1,"mult":2},{"i":1,"j":2,"mult":1},{"i":2,"j":2,"mult":2}],"n":2})");
}

TEST(Json, RankTupleRoundTrip) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& iso : {m_zero(n), m_one(n), m_two(n)}) {
      const auto rt = ranks_from_iso(iso);
      EXPECT_EQ(rank_tuple_from_json(to_json(rt)), rt);
    }
  }
  EXPECT_EQ(dump(to_json(rank_tuple_r2(3))), R"({"diag":[4,4,4],"n":3,"r":[[2,1],[2],[]]})");
  const auto short_rows = Json::parse(R"({"n":3,"diag":[4,4,4],"r":[[2,1],[2]]})");
  EXPECT_EQ(rank_tuple_from_json(short_rows), rank_tuple_r2(3));
}

TEST(Json, MatrixRepRoundTrip) {
  for (int n = 2; n <= 4; ++n) {
    const auto rep = canonical_rep(m_one(n));
    const auto back = matrix_rep_from_json(Json::parse(dump(to_json(rep))));
    EXPECT_EQ(back.dims, rep.dims);
    ASSERT_EQ(back.maps.size(), rep.maps.size());
    for (std::size_t k = 0; k < rep.maps.size(); ++k) EXPECT_EQ(back.maps[k], rep.maps[k]);
  }
  const auto frac = matrix_rep_from_json(Json::parse(R"({"n":2,"dims":[1,1],"maps":[[["1/2"]]]})"));
  EXPECT_EQ(frac.maps[0](0, 0), Rational(1, 2));
  EXPECT_EQ(rank_tuple(frac)(1, 2), 1);
}

TEST(Json, ArcDiagramRoundTrip) {
  const ArcDiagram a(4, {{1, 4}, {2, 3}});
  EXPECT_EQ(arc_diagram_from_json(to_json(a)), a);
  EXPECT_EQ(dump(to_json(a)), R"({"arcs":[[1,4],[2,3]],"n":4})");
}

TEST(Json, LocusReport) {
  const auto j = to_json(classify(rank_tuple_r2(4)));
  EXPECT_EQ(dump(j), R"({"flat":true,"irreducible":false,"iso":false,"normal":false,"pbw":false,"witness":1})");
  EXPECT_TRUE(to_json(Witness{}).is_null());
}

TEST(Json, Errors) {
  EXPECT_EQ(code_of([] { iso_class_from_json(Json::parse(R"({"m":[]})")); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { iso_class_from_json(Json::parse(R"({"n":2,"m":[{"i":2,"j":1,"mult":1}]})")); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { iso_class_from_json(Json::parse(R"({"n":2,"m":[{"i":1,"j":1,"mult":-1}]})")); }),
            ErrorCode::NegativeMultiplicity);
  EXPECT_EQ(code_of([] { rank_tuple_from_json(Json::parse(R"({"n":2,"diag":[1,1],"r":[[1,2]]})")); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { rank_tuple_from_json(Json::parse(R"({"n":2,"diag":[1],"r":[[1]]})")); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { matrix_rep_from_json(Json::parse(R"({"n":2,"dims":[1,2],"maps":[[[1]]]})")); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { matrix_rep_from_json(Json::parse(R"({"n":2,"dims":[1,1],"maps":[[[1.5]]]})")); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { arc_diagram_from_json(Json::parse(R"({"n":3,"arcs":[[1,2,3]]})")); }), ErrorCode::InvalidInput);
  EXPECT_THROW(arc_diagram_from_json(Json::parse(R"({"n":4,"arcs":[[1,3],[2,4]]})")), Error);
}
