#include "lindeg/rep.hpp"

#include <algorithm>

#include "lindeg/error.hpp"

namespace lindeg {

RankTuple::RankTuple(DimVector diag) : diag_(std::move(diag)), r_(diag_.n(), true, 0) {}

int RankTuple::operator()(int i, int j) const {
  if (i == 0 || j == n() + 1) return 0;
  if (i < 0 || j > n() + 1 || i > j) {
    throw std::out_of_range("rank index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i == j) return diag_.at(i);
  return r_(i, j);
}

void RankTuple::set(int i, int j, int rank) { r_(i, j) = rank; }

std::optional<std::string> RankTuple::violation() const {
  const int n = this->n();
  auto at = [&](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  for (int i = 1; i <= n; ++i) {
    if (diag_.at(i) < 0) return "negative dimension at vertex " + std::to_string(i);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((*this)(i, j) < 0) return "negative rank r_{" + at(i, j) + "}";
      if ((*this)(i, j) > (*this)(i, j - 1)) return "r_{" + at(i, j) + "} > r_{" + at(i, j - 1) + "}";
      if ((*this)(i, j) > (*this)(i + 1, j)) return "r_{" + at(i, j) + "} > r_{" + at(i + 1, j) + "}";
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      int m = (*this)(i, j) - (*this)(i, j + 1) - (*this)(i - 1, j) + (*this)(i - 1, j + 1);
      if (m < 0) return "m_{" + at(i, j) + "} = " + std::to_string(m) + " < 0";
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          if ((*this)(i, l) + (*this)(j, k) < (*this)(i, k) + (*this)(j, l)) {
            return "four-point inequality fails at (" + at(i, j) + "," + at(k, l) + ")";
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool RankTuple::dominates(const RankTuple& other) const {
  if (diag_ != other.diag_) throw Error(ErrorCode::DimMismatch, "rank tuples with different dimension vectors");
  for (std::size_t k = 0; k < r_.data().size(); ++k) {
    if (r_.data()[k] < other.r_.data()[k]) return false;
  }
  return true;
}

namespace {

RankTuple reference_tuple(int n, int offset) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be positive");
  RankTuple rt(DimVector::constant(n, n + 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) rt.set(i, j, offset < 0 ? n + 1 : n + offset - j + i);
  }
  return rt;
}

}  // namespace

RankTuple rank_tuple_r0(int n) { return reference_tuple(n, -1); }
RankTuple rank_tuple_r1(int n) { return reference_tuple(n, 1); }
RankTuple rank_tuple_r2(int n) { return reference_tuple(n, 0); }

IsoClass::IsoClass(int n) : m_(n, false, 0) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be positive");
}

IsoClass IsoClass::from_summands(int n, const std::vector<Interval>& summands) {
  IsoClass iso(n);
  for (const auto& u : summands) iso.add(u);
  return iso;
}

void IsoClass::set_mult(int i, int j, int count) {
  if (count < 0) throw Error(ErrorCode::InvalidInput, "negative multiplicity");
  if (!m_.in_range(i, j)) throw Error(ErrorCode::InvalidInput, "interval out of range");
  m_(i, j) = count;
}

void IsoClass::add(int i, int j, int count) {
  if (!m_.in_range(i, j)) {
    throw Error(ErrorCode::InvalidInput,
                "interval [" + std::to_string(i) + "," + std::to_string(j) + "] out of range");
  }
  if (m_(i, j) + count < 0) throw Error(ErrorCode::NegativeMultiplicity, "negative multiplicity");
  m_(i, j) += count;
}

void IsoClass::add(const IsoClass& other) {
  if (other.n() != n()) throw Error(ErrorCode::LengthMismatch, "direct sum of classes with different n");
  for (std::size_t k = 0; k < m_.data().size(); ++k) m_.data()[k] += other.m_.data()[k];
}

IsoClass operator+(IsoClass a, const IsoClass& b) {
  a.add(b);
  return a;
}

DimVector IsoClass::dims() const {
  DimVector d = DimVector::constant(n(), 0);
  for (int i = 1; i <= n(); ++i) {
    for (int j = i; j <= n(); ++j) {
      for (int c = i; c <= j; ++c) d.at(c) += m_(i, j);
    }
  }
  return d;
}

int IsoClass::summand_count() const {
  int s = 0;
  for (int x : m_.data()) s += x;
  return s;
}

std::vector<Interval> IsoClass::summands() const {
  std::vector<Interval> out;
  for (int i = 1; i <= n(); ++i) {
    for (int j = i; j <= n(); ++j) {
      for (int k = 0; k < m_(i, j); ++k) out.push_back({i, j});
    }
  }
  return out;
}

IsoClass IsoClass::projective_part() const {
  IsoClass p(n());
  for (int i = 1; i <= n(); ++i) p.m_(i, n()) = m_(i, n());
  return p;
}

IsoClass IsoClass::non_projective_part() const {
  IsoClass q = *this;
  for (int i = 1; i <= n(); ++i) q.m_(i, n()) = 0;
  return q;
}

std::string IsoClass::to_string() const {
  std::string s;
  for (int i = 1; i <= n(); ++i) {
    for (int j = i; j <= n(); ++j) {
      if (!m_(i, j)) continue;
      if (!s.empty()) s += " + ";
      s += "U" + std::to_string(i) + "," + std::to_string(j);
      if (m_(i, j) > 1) s += "^" + std::to_string(m_(i, j));
    }
  }
  return s.empty() ? "0" : s;
}

void MatrixRep::validate() const {
  dims.validate();
  if (dims.n() < 1) throw Error(ErrorCode::InvalidInput, "representation needs n >= 1");
  if (static_cast<int>(maps.size()) != n() - 1) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n() - 1) + " maps, got " +
                                              std::to_string(maps.size()));
  }
  for (int i = 0; i + 1 < n(); ++i) {
    const auto& f = maps[static_cast<std::size_t>(i)];
    if (f.rows() != static_cast<std::size_t>(dims.d[i + 1]) || f.cols() != static_cast<std::size_t>(dims.d[i])) {
      throw Error(ErrorCode::ShapeMismatch, "map " + std::to_string(i + 1) + " has shape " +
                                                std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
    }
    if (field.is_prime()) reduce_mod(f, PrimeOps(field.prime));
  }
}

namespace {

template <class Ops>
RankTuple ranks_over(const Ops& ops, const std::vector<DenseMatrix<typename Ops::value_type>>& maps,
                     const DimVector& dims) {
  RankTuple rt(dims);
  const int n = dims.n();
  for (int i = 1; i < n; ++i) {
    auto composite = maps[static_cast<std::size_t>(i - 1)];
    for (int j = i + 1; j <= n; ++j) {
      rt.set(i, j, static_cast<int>(rank(ops, composite)));
      if (j < n) composite = multiply(ops, maps[static_cast<std::size_t>(j - 1)], composite);
    }
  }
  return rt;
}

}  // namespace

RankTuple rank_tuple(const MatrixRep& rep) {
  rep.validate();
  if (rep.field.is_prime()) {
    PrimeOps ops(rep.field.prime);
    std::vector<DenseMatrix<std::uint64_t>> maps;
    for (const auto& f : rep.maps) maps.push_back(reduce_mod(f, ops));
    return ranks_over(ops, maps, rep.dims);
  }
  return ranks_over(RationalOps{}, rep.maps, rep.dims);
}

IsoClass iso_from_ranks(const RankTuple& rt) {
  IsoClass iso(rt.n());
  for (int i = 1; i <= rt.n(); ++i) {
    for (int j = i; j <= rt.n(); ++j) {
      int m = rt(i, j) - rt(i, j + 1) - rt(i - 1, j) + rt(i - 1, j + 1);
      if (m < 0) {
        throw Error(ErrorCode::NonRealizable, "m_{" + std::to_string(i) + "," + std::to_string(j) +
                                                  "} = " + std::to_string(m) + " < 0");
      }
      iso.set_mult(i, j, m);
    }
  }
  return iso;
}

RankTuple ranks_from_iso(const IsoClass& iso) {
  const int n = iso.n();
  RankTuple rt(iso.dims());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int r = 0;
      for (int k = 1; k <= i; ++k) {
        for (int l = j; l <= n; ++l) r += iso.mult(k, l);
      }
      rt.set(i, j, r);
    }
  }
  return rt;
}

std::vector<Interval> degree_ordered_summands(const IsoClass& iso) {
  auto s = iso.summands();
  const int n = iso.n();
  std::stable_sort(s.begin(), s.end(), [n](const Interval& a, const Interval& b) {
    return segment_degree(a, n) < segment_degree(b, n);
  });
  return s;
}

MatrixRep canonical_rep(const IsoClass& iso, const Field& field) {
  const int n = iso.n();
  const auto segs = degree_ordered_summands(iso);
  MatrixRep rep{iso.dims(), field, {}};
  // position[c][k]: index of segment k inside the basis of V_c.
  std::vector<std::vector<int>> position(static_cast<std::size_t>(n + 1), std::vector<int>(segs.size(), -1));
  for (int c = 1; c <= n; ++c) {
    int next = 0;
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (segs[k].contains(c)) position[static_cast<std::size_t>(c)][k] = next++;
    }
  }
  for (int c = 1; c < n; ++c) {
    Matrix f(static_cast<std::size_t>(rep.dims.at(c + 1)), static_cast<std::size_t>(rep.dims.at(c)), 0);
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (segs[k].contains(c) && segs[k].contains(c + 1)) {
        f(static_cast<std::size_t>(position[static_cast<std::size_t>(c + 1)][k]),
          static_cast<std::size_t>(position[static_cast<std::size_t>(c)][k])) = 1;
      }
    }
    rep.maps.push_back(std::move(f));
  }
  return rep;
}

namespace {

struct IsoWalker {
  const DimVector& bound;
  bool exact;
  const std::function<void(const IsoClass&)>& visit;
  IsoClass current;
  std::vector<int> used;  // used[c-1]: dimension consumed at vertex c

  void run(int i, int j) {
    const int n = bound.n();
    if (j > n) {
      // All intervals starting at i are fixed; vertex i is never touched again.
      if (exact && used[static_cast<std::size_t>(i - 1)] != bound.at(i)) return;
      if (i == n) {
        visit(current);
        return;
      }
      run(i + 1, i + 1);
      return;
    }
    int room = bound.at(i);
    for (int c = i; c <= j; ++c) room = std::min(room, bound.at(c) - used[static_cast<std::size_t>(c - 1)]);
    for (int m = 0; m <= room; ++m) {
      current.set_mult(i, j, m);
      for (int c = i; c <= j; ++c) used[static_cast<std::size_t>(c - 1)] += m;
      run(i, j + 1);
      for (int c = i; c <= j; ++c) used[static_cast<std::size_t>(c - 1)] -= m;
    }
    current.set_mult(i, j, 0);
  }
};

}  // namespace

void for_each_iso_class(const DimVector& bound, bool exact, const std::function<void(const IsoClass&)>& visit) {
  bound.validate();
  if (bound.n() < 1) throw Error(ErrorCode::InvalidParams, "n must be positive");
  IsoWalker w{bound, exact, visit, IsoClass(bound.n()), std::vector<int>(bound.d.size(), 0)};
  w.run(1, 1);
}

std::vector<IsoClass> iso_classes_with_dims(const DimVector& dims) {
  std::vector<IsoClass> out;
  for_each_iso_class(dims, true, [&](const IsoClass& x) { out.push_back(x); });
  return out;
}

}  // namespace lindeg
