#include "lindeg/cells.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "lindeg/error.hpp"
#include "lindeg/homalg.hpp"

namespace lindeg {

SegmentLayout layout(const IsoClass& iso) { return {iso.n(), degree_ordered_summands(iso)}; }

void validate(const SegmentLayout& lay, const FixedPoint& fp) {
  if (fp.starts.size() != lay.size()) {
    throw Error(ErrorCode::InvalidInput, "fixed point has " + std::to_string(fp.starts.size()) +
                                             " starts for " + std::to_string(lay.size()) + " segments");
  }
  for (std::size_t k = 0; k < lay.size(); ++k) {
    int s = fp.starts[k];
    if (s != 0 && !lay.segments[k].contains(s)) {
      throw Error(ErrorCode::InvalidInput, "start " + std::to_string(s) + " outside segment " + std::to_string(k + 1));
    }
  }
}

DimVector fixed_point_dims(const SegmentLayout& lay, const FixedPoint& fp) {
  validate(lay, fp);
  DimVector e = DimVector::constant(lay.n, 0);
  for (std::size_t k = 0; k < lay.size(); ++k) {
    if (fp.starts[k] == 0) continue;
    for (int c = fp.starts[k]; c <= lay.segments[k].right; ++c) ++e.at(c);
  }
  return e;
}

IsoClass sub_class(const SegmentLayout& lay, const FixedPoint& fp) {
  validate(lay, fp);
  IsoClass l(lay.n);
  for (std::size_t k = 0; k < lay.size(); ++k) {
    if (fp.starts[k] != 0) l.add(fp.starts[k], lay.segments[k].right);
  }
  return l;
}

IsoClass quotient_class(const SegmentLayout& lay, const FixedPoint& fp) {
  validate(lay, fp);
  IsoClass q(lay.n);
  for (std::size_t k = 0; k < lay.size(); ++k) {
    const auto& seg = lay.segments[k];
    if (fp.starts[k] == 0) {
      q.add(seg);
    } else if (fp.starts[k] > seg.left) {
      q.add(seg.left, fp.starts[k] - 1);
    }
  }
  return q;
}

std::vector<FixedPoint> fixed_points(const IsoClass& iso, const DimVector& e) {
  if (e.n() != iso.n() || !e.leq(iso.dims())) {
    throw Error(ErrorCode::DimMismatch, "dimension vector " + e.to_string() + " exceeds " + iso.dims().to_string());
  }
  const auto lay = layout(iso);
  const int n = lay.n;
  const std::size_t k_count = lay.size();
  // remaining[k][c]: segments k.. covering column c.
  std::vector<std::vector<int>> remaining(k_count + 1, std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (std::size_t k = k_count; k-- > 0;) {
    remaining[k] = remaining[k + 1];
    for (int c = lay.segments[k].left; c <= lay.segments[k].right; ++c) ++remaining[k][static_cast<std::size_t>(c)];
  }
  std::vector<int> need(static_cast<std::size_t>(n + 1), 0);
  for (int c = 1; c <= n; ++c) need[static_cast<std::size_t>(c)] = e.at(c);

  std::vector<FixedPoint> out;
  FixedPoint fp{std::vector<int>(k_count, 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == k_count) {
      out.push_back(fp);
      return;
    }
    const auto& seg = lay.segments[k];
    auto feasible = [&]() {
      for (int c = seg.left; c <= seg.right; ++c) {
        int nd = need[static_cast<std::size_t>(c)];
        if (nd < 0 || nd > remaining[k + 1][static_cast<std::size_t>(c)]) return false;
      }
      return true;
    };
    fp.starts[k] = 0;
    if (feasible()) rec(k + 1);
    for (int s = seg.right; s >= seg.left; --s) {
      // Extending the suffix one step left: [s, b].
      --need[static_cast<std::size_t>(s)];
    }
    for (int s = seg.left; s <= seg.right; ++s) {
      fp.starts[k] = s;
      if (feasible()) rec(k + 1);
      ++need[static_cast<std::size_t>(s)];
    }
    fp.starts[k] = 0;
  };
  rec(0);
  return out;
}

int cell_dim(const SegmentLayout& lay, const FixedPoint& fp) {
  validate(lay, fp);
  int dim = 0;
  for (std::size_t k = 0; k < lay.size(); ++k) {
    const int s = fp.starts[k];
    if (s == 0) continue;
    for (std::size_t j = k + 1; j < lay.size(); ++j) {
      if (!lay.segments[j].contains(s)) continue;
      const bool in_sub = fp.starts[j] != 0 && fp.starts[j] <= s;
      if (!in_sub) ++dim;
    }
  }
  return dim;
}

int tangent_dim(const SegmentLayout& lay, const FixedPoint& fp) {
  return hom_dim(sub_class(lay, fp), quotient_class(lay, fp));
}

std::vector<std::uint64_t> poincare(const IsoClass& iso, const DimVector& e) {
  const auto lay = layout(iso);
  std::vector<std::uint64_t> coeffs;
  for (const auto& fp : fixed_points(iso, e)) {
    auto d = static_cast<std::size_t>(cell_dim(lay, fp));
    if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
    ++coeffs[d];
  }
  return coeffs;
}

std::uint64_t euler_characteristic(const IsoClass& iso, const DimVector& e) {
  return fixed_points(iso, e).size();
}

std::uint64_t evaluate(const std::vector<std::uint64_t>& coeffs, std::uint64_t q) {
  unsigned __int128 acc = 0;
  const unsigned __int128 limit = ~std::uint64_t{0};
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    acc = acc * q + coeffs[d];
    if (acc > limit) throw Error(ErrorCode::InvalidParams, "polynomial value overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Stratum> strata(const IsoClass& iso, const DimVector& e) {
  const auto lay = layout(iso);
  std::map<IsoClass, Stratum> groups;
  for (const auto& fp : fixed_points(iso, e)) {
    auto cls = sub_class(lay, fp);
    auto [it, fresh] = groups.try_emplace(cls);
    auto& st = it->second;
    if (fresh) {
      st.cls = cls;
      st.hom_dim_formula = hom_dim(cls, iso) - hom_dim(cls, cls);
    }
    ++st.cell_count;
    st.max_cell_dim = std::max(st.max_cell_dim, cell_dim(lay, fp));
  }
  std::vector<Stratum> out;
  for (auto& [cls, st] : groups) {
    if (st.max_cell_dim != st.hom_dim_formula) {
      throw std::logic_error("stratum " + cls.to_string() + ": top cell " + std::to_string(st.max_cell_dim) +
                             " vs formula " + std::to_string(st.hom_dim_formula));
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<FixedPoint> top_cells(const IsoClass& iso, const DimVector& e) {
  const auto lay = layout(iso);
  std::vector<FixedPoint> out;
  int best = -1;
  for (const auto& fp : fixed_points(iso, e)) {
    int d = cell_dim(lay, fp);
    if (d > best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(fp);
  }
  return out;
}

int max_cell_dim(const IsoClass& iso, const DimVector& e) {
  const auto lay = layout(iso);
  int best = -1;
  for (const auto& fp : fixed_points(iso, e)) best = std::max(best, cell_dim(lay, fp));
  return best;
}

std::optional<FixedPoint> find_fixed_point(const IsoClass& iso, const IsoClass& sub, const IsoClass& quotient) {
  if (sub.n() != iso.n() || quotient.n() != iso.n()) {
    throw Error(ErrorCode::LengthMismatch, "classes over quivers of different size");
  }
  const auto lay = layout(iso);
  IsoClass l(iso.n());
  IsoClass q(iso.n());
  FixedPoint fp{std::vector<int>(lay.size(), 0)};
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == lay.size()) return l == sub && q == quotient;
    const auto& seg = lay.segments[k];
    for (int s = 0; s <= seg.right; ++s) {
      if (s != 0 && s < seg.left) continue;
      std::optional<Interval> suffix, prefix;
      if (s != 0) suffix = Interval{s, seg.right};
      if (s == 0) prefix = seg;
      else if (s > seg.left) prefix = Interval{seg.left, s - 1};
      if (suffix && l.mult(*suffix) >= sub.mult(*suffix)) continue;
      if (prefix && q.mult(*prefix) >= quotient.mult(*prefix)) continue;
      if (suffix) l.add(*suffix);
      if (prefix) q.add(*prefix);
      fp.starts[k] = s;
      if (rec(k + 1)) return true;
      if (suffix) l.add(*suffix, -1);
      if (prefix) q.add(*prefix, -1);
    }
    fp.starts[k] = 0;
    return false;
  };
  if (rec(0)) return fp;
  return std::nullopt;
}

}  // namespace lindeg
