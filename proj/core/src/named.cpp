#include "lindeg/named.hpp"

#include <numeric>

#include "lindeg/error.hpp"

namespace lindeg {

namespace {

void require_n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be positive");
}

}  // namespace

IsoClass m_zero(int n) {
  require_n(n);
  IsoClass m(n);
  m.set_mult(1, n, n + 1);
  return m;
}

IsoClass m_of_tuple(int n, const std::vector<int>& a) {
  require_n(n);
  if (static_cast<int>(a.size()) != n - 1) {
    throw Error(ErrorCode::InvalidParams, "M(a) needs " + std::to_string(n - 1) + " entries");
  }
  int sum = 0;
  for (int x : a) {
    if (x < 0) throw Error(ErrorCode::InvalidParams, "M(a) needs non-negative entries");
    sum += x;
  }
  if (sum > n + 1) throw Error(ErrorCode::InvalidParams, "M(a) needs sum(a) <= n+1");
  IsoClass m(n);
  m.add(1, n, n + 1 - sum);
  for (int k = 1; k < n; ++k) {
    m.add(1, k, a[static_cast<std::size_t>(k - 1)]);
    m.add(k + 1, n, a[static_cast<std::size_t>(k - 1)]);
  }
  return m;
}

IsoClass m_one(int n) { return m_of_tuple(n, std::vector<int>(static_cast<std::size_t>(std::max(n - 1, 0)), 1)); }

IsoClass m_two(int n) {
  require_n(n);
  IsoClass m(n);
  for (int i = 2; i <= n; ++i) m.set_mult(1, i, 1);
  for (int i = 1; i < n; ++i) m.set_mult(i, n, 1);
  for (int i = 2; i < n; ++i) m.set_mult(i, i, 1);
  m.set_mult(1, 1, 2);
  m.set_mult(n, n, 2);
  return m;
}

std::vector<int> defect_tuple_single(int n, int i) {
  require_n(n);
  if (i < 1 || i > n - 1) throw Error(ErrorCode::InvalidParams, "a^i needs 1 <= i <= n-1");
  std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
  a[static_cast<std::size_t>(i - 1)] = 2;
  return a;
}

std::vector<int> defect_tuple_pair(int n, int i, int j) {
  require_n(n);
  if (i < 1 || i > j || j > n - 1) throw Error(ErrorCode::InvalidParams, "a^{i,j} needs 1 <= i <= j <= n-1");
  std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
  for (int k = i; k <= j; ++k) a[static_cast<std::size_t>(k - 1)] = 1;
  if (i == j) {
    a[static_cast<std::size_t>(i - 1)] = 3;
  } else {
    a[static_cast<std::size_t>(i - 1)] = 2;
    a[static_cast<std::size_t>(j - 1)] = 2;
  }
  return a;
}

IsoClass m_single_defect(int n, int i) { return m_of_tuple(n, defect_tuple_single(n, i)); }

IsoClass m_pair_defect(int n, int i, int j) { return m_of_tuple(n, defect_tuple_pair(n, i, j)); }

IsoClass m_of_projections(const ProjSeq& seq) {
  seq.validate();
  const int n = seq.n;
  IsoClass m(n);
  m.add(1, n, n + 1 - seq.size());
  for (int i : seq.seq) {
    m.add(1, i);
    m.add(i + 1, n);
  }
  return m;
}

IsoClass path_algebra(int n) {
  require_n(n);
  IsoClass m(n);
  for (int i = 1; i <= n; ++i) m.add(i, n);
  return m;
}

IsoClass dual_path_algebra(int n) {
  require_n(n);
  IsoClass m(n);
  for (int i = 1; i <= n; ++i) m.add(1, i);
  return m;
}

IsoClass simple_sum(int n) {
  require_n(n);
  IsoClass m(n);
  for (int i = 1; i <= n; ++i) m.add(i, i);
  return m;
}

IsoClass named_rep(NamedKind kind, int n, const std::vector<int>& params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::InvalidParams, "expected " + std::to_string(count) + " parameters, got " +
                                                std::to_string(params.size()));
    }
  };
  switch (kind) {
    case NamedKind::M0: expect(0); return m_zero(n);
    case NamedKind::M1: expect(0); return m_one(n);
    case NamedKind::M2: expect(0); return m_two(n);
    case NamedKind::Ma: return m_of_tuple(n, params);
    case NamedKind::MaSingle: expect(1); return m_single_defect(n, params[0]);
    case NamedKind::MaPair: expect(2); return m_pair_defect(n, params[0], params[1]);
    case NamedKind::Mproj: return m_of_projections(ProjSeq{n, params});
    case NamedKind::PathAlgebra: expect(0); return path_algebra(n);
    case NamedKind::DualPathAlgebra: expect(0); return dual_path_algebra(n);
  }
  throw Error(ErrorCode::InvalidParams, "unknown representation kind");
}

}  // namespace lindeg
