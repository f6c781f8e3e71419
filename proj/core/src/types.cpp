#include "lindeg/types.hpp"

#include <algorithm>
#include <numeric>

#include "lindeg/error.hpp"

namespace lindeg {

DimVector DimVector::constant(int n, int value) {
  return DimVector(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), value));
}

DimVector DimVector::ramp(int n) {
  DimVector v = constant(n, 0);
  std::iota(v.d.begin(), v.d.end(), 1);
  return v;
}

int DimVector::total() const noexcept { return std::accumulate(d.begin(), d.end(), 0); }

bool DimVector::leq(const DimVector& other) const {
  if (n() != other.n()) throw Error(ErrorCode::LengthMismatch, "dimension vectors of different length");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > other.d[i]) return false;
  }
  return true;
}

void DimVector::validate() const {
  for (int x : d) {
    if (x < 0) throw Error(ErrorCode::InvalidInput, "negative entry in dimension vector " + to_string());
  }
}

std::string DimVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::LengthMismatch, "dimension vectors of different length");
  DimVector r = a;
  for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] += b.d[i];
  return r;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::LengthMismatch, "dimension vectors of different length");
  DimVector r = a;
  for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] -= b.d[i];
  return r;
}

int segment_degree(const Interval& u, int n) noexcept {
  return u.right - u.left + 1 + n * (n + 1) / 2 - u.right * (u.right + 1) / 2;
}

bool ProjSeq::contains(int i) const noexcept {
  return std::binary_search(seq.begin(), seq.end(), i);
}

void ProjSeq::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "projection sequence needs n >= 1");
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (seq[t] < 1 || seq[t] > n - 1) {
      throw Error(ErrorCode::InvalidParams, "projection index out of [1, n-1] in " + to_string());
    }
    if (t > 0 && seq[t] <= seq[t - 1]) {
      throw Error(ErrorCode::InvalidParams, "projection sequence not strictly increasing: " + to_string());
    }
  }
}

std::string ProjSeq::to_string() const {
  std::string s = "{";
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(seq[t]);
  }
  return s + "}";
}

std::vector<ProjSeq> ProjSeq::all(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "projection sequences need n >= 1");
  std::vector<ProjSeq> out;
  const int m = n - 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    ProjSeq p{n, {}};
    for (int i = 1; i <= m; ++i) {
      if (mask & (1u << (i - 1))) p.seq.push_back(i);
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const ProjSeq& a, const ProjSeq& b) {
    if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
    return a.seq < b.seq;
  });
  return out;
}

unsigned long long catalan(int n) {
  if (n < 0 || n > 35) throw Error(ErrorCode::InvalidParams, "catalan index out of range");
  unsigned __int128 c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return static_cast<unsigned long long>(c);
}

}  // namespace lindeg
