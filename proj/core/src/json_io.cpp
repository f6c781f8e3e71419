#include "lindeg/json_io.hpp"

#include "lindeg/error.hpp"

namespace lindeg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

int as_n(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 1) bad("n must be positive");
  return n;
}

}  // namespace

Json to_json(const MatrixRep& rep) {
  Json maps = Json::array();
  for (const auto& f : rep.maps) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < f.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(format_rational(f(r, c)));
      rows.push_back(std::move(row));
    }
    maps.push_back(std::move(rows));
  }
  return {{"n", rep.n()}, {"dims", rep.dims.d}, {"field", rep.field.to_string()}, {"maps", std::move(maps)}};
}

MatrixRep matrix_rep_from_json(const Json& j) {
  MatrixRep rep;
  const int n = as_n(j);
  rep.dims = DimVector(as_int_list(field(j, "dims"), "dims"));
  if (rep.dims.n() != n) bad("dims must have n entries");
  rep.dims.validate();
  rep.field = j.contains("field") ? Field::parse(field(j, "field").is_string() ? field(j, "field").get<std::string>() : "")
                                  : Field::rationals();
  const auto& maps = field(j, "maps");
  if (!maps.is_array() || static_cast<int>(maps.size()) != n - 1) bad("maps must list n-1 matrices");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const std::size_t rows = static_cast<std::size_t>(rep.dims.d[k + 1]);
    const std::size_t cols = static_cast<std::size_t>(rep.dims.d[k]);
    const auto& m = maps[k];
    if (!m.is_array() || m.size() != rows) bad("map " + std::to_string(k + 1) + " has the wrong number of rows");
    Matrix f(rows, cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!m[r].is_array() || m[r].size() != cols) bad("map " + std::to_string(k + 1) + " has a row of the wrong length");
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& e = m[r][c];
        if (e.is_string()) {
          f(r, c) = parse_rational(e.get<std::string>());
        } else if (e.is_number_integer()) {
          f(r, c) = parse_rational(e.dump());
        } else {
          bad("matrix entries must be integers or \"a/b\" strings");
        }
      }
    }
    rep.maps.push_back(std::move(f));
  }
  rep.validate();
  return rep;
}

Json to_json(const RankTuple& rt) {
  Json rows = Json::array();
  for (int i = 1; i <= rt.n(); ++i) {
    Json row = Json::array();
    for (int j = i + 1; j <= rt.n(); ++j) row.push_back(rt(i, j));
    rows.push_back(std::move(row));
  }
  return {{"n", rt.n()}, {"diag", rt.diag().d}, {"r", std::move(rows)}};
}

RankTuple rank_tuple_from_json(const Json& j) {
  const int n = as_n(j);
  DimVector diag(as_int_list(field(j, "diag"), "diag"));
  if (diag.n() != n) bad("diag must have n entries");
  diag.validate();
  RankTuple rt(diag);
  const auto& rows = field(j, "r");
  if (!rows.is_array() || static_cast<int>(rows.size()) < n - 1 || static_cast<int>(rows.size()) > n) {
    bad("r must have a row for each i < n");
  }
  for (int i = 1; i < n; ++i) {
    const auto row = as_int_list(rows[static_cast<std::size_t>(i - 1)], "r");
    if (static_cast<int>(row.size()) != n - i) bad("row " + std::to_string(i) + " of r must have n-i entries");
    for (int k = 0; k < n - i; ++k) rt.set(i, i + 1 + k, row[static_cast<std::size_t>(k)]);
  }
  if (static_cast<int>(rows.size()) == n && !as_int_list(rows[static_cast<std::size_t>(n - 1)], "r").empty()) {
    bad("row n of r must be empty");
  }
  return rt;
}

Json to_json(const IsoClass& iso) {
  Json m = Json::array();
  for (int i = 1; i <= iso.n(); ++i) {
    for (int j = i; j <= iso.n(); ++j) {
      if (iso.mult(i, j) != 0) m.push_back({{"i", i}, {"j", j}, {"mult", iso.mult(i, j)}});
    }
  }
  return {{"n", iso.n()}, {"m", std::move(m)}};
}

IsoClass iso_class_from_json(const Json& j) {
  const int n = as_n(j);
  IsoClass iso(n);
  const auto& m = field(j, "m");
  if (!m.is_array()) bad("m must be an array");
  for (const auto& e : m) {
    const int i = as_int(field(e, "i"), "i");
    const int k = as_int(field(e, "j"), "j");
    const int mult = as_int(field(e, "mult"), "mult");
    if (i < 1 || i > k || k > n) bad("interval out of range");
    if (mult < 0) throw Error(ErrorCode::NegativeMultiplicity, "negative multiplicity");
    iso.add(i, k, mult);
  }
  return iso;
}

Json to_json(const ArcDiagram& a) {
  Json arcs = Json::array();
  for (auto [i, j] : a.arcs) arcs.push_back({i, j});
  return {{"n", a.n}, {"arcs", std::move(arcs)}};
}

ArcDiagram arc_diagram_from_json(const Json& j) {
  const int n = as_n(j);
  const auto& arcs = field(j, "arcs");
  if (!arcs.is_array()) bad("arcs must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& a : arcs) {
    const auto pair = as_int_list(a, "arc");
    if (pair.size() != 2) bad("each arc is a pair [i, j]");
    out.emplace_back(pair[0], pair[1]);
  }
  ArcDiagram d(n, std::move(out));
  d.validate();
  return d;
}

Json to_json(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Index: return w.i;
    case Witness::Kind::Pair: return Json::array({w.i, w.j});
    case Witness::Kind::None: break;
  }
  return nullptr;
}

Json to_json(const LocusReport& rep) {
  return {{"flat", rep.flat},   {"irreducible", rep.irreducible}, {"normal", rep.normal},
          {"pbw", rep.pbw},     {"iso", rep.iso},                 {"witness", to_json(rep.witness)}};
}

Json to_json(const FixedPoint& fp) { return {{"starts", fp.starts}}; }

std::string dump(const Json& j) { return j.dump(); }

}  // namespace lindeg
