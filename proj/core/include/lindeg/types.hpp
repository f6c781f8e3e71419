#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lindeg {

/// Dimension vector of a representation of the equioriented A_n quiver
/// 1 -> 2 -> ... -> n. Vertices are 1-based through at().
struct DimVector {
  std::vector<int> d;

  DimVector() = default;
  explicit DimVector(std::vector<int> entries) : d(std::move(entries)) {}

  static DimVector constant(int n, int value);
  /// (1, 2, ..., n): the dimension vector of the path algebra.
  static DimVector ramp(int n);

  int n() const noexcept { return static_cast<int>(d.size()); }
  int at(int vertex) const { return d.at(static_cast<std::size_t>(vertex - 1)); }
  int& at(int vertex) { return d.at(static_cast<std::size_t>(vertex - 1)); }
  int total() const noexcept;
  /// Componentwise <=.
  bool leq(const DimVector& other) const;
  /// Throws InvalidInput on a negative entry.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);

/// The interval module U_{left,right}: one-dimensional at the vertices
/// left..right, identity maps inside the support.
struct Interval {
  int left = 1;
  int right = 1;

  int length() const noexcept { return right - left + 1; }
  bool contains(int vertex) const noexcept { return left <= vertex && vertex <= right; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// deg U_{i,j} = j - i + 1 + C(n+1,2) - C(j+1,2). Injective on intervals.
int segment_degree(const Interval& u, int n) noexcept;

/// Upper-triangular table indexed by 1 <= i <= j <= n, or 1 <= i < j <= n
/// when strict. Row-major storage.
template <class T>
class Triangular {
 public:
  Triangular() = default;
  Triangular(int n, bool strict, T fill = T{})
      : n_(n), strict_(strict), data_(slots(n, strict), fill) {}

  int n() const noexcept { return n_; }
  bool strict() const noexcept { return strict_; }
  bool in_range(int i, int j) const noexcept {
    return i >= 1 && j <= n_ && (strict_ ? i < j : i <= j);
  }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  friend bool operator==(const Triangular&, const Triangular&) = default;
  friend auto operator<=>(const Triangular&, const Triangular&) = default;

 private:
  static std::size_t slots(int n, bool strict) {
    if (n < 0) throw std::invalid_argument("negative triangular size");
    auto m = static_cast<std::size_t>(n);
    return strict ? m * (m - (m > 0 ? 1 : 0)) / 2 : m * (m + 1) / 2;
  }

  std::size_t index(int i, int j) const {
    if (!in_range(i, j)) {
      throw std::out_of_range("triangular index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range");
    }
    auto ii = static_cast<std::size_t>(i);
    auto jj = static_cast<std::size_t>(j);
    auto nn = static_cast<std::size_t>(n_);
    if (strict_) return (ii - 1) * (2 * nn - ii) / 2 + (jj - ii - 1);
    return (ii - 1) * (2 * nn - ii + 2) / 2 + (jj - ii);
  }

  int n_ = 0;
  bool strict_ = false;
  std::vector<T> data_;
};

/// Projection sequence 1 <= i_1 < ... < i_k <= n-1.
struct ProjSeq {
  int n = 1;
  std::vector<int> seq;

  ProjSeq() = default;
  ProjSeq(int n_, std::vector<int> seq_) : n(n_), seq(std::move(seq_)) {}

  /// d(i), the number of projections.
  int size() const noexcept { return static_cast<int>(seq.size()); }
  bool contains(int i) const noexcept;
  /// Throws InvalidParams unless strictly increasing inside [1, n-1].
  void validate() const;
  std::string to_string() const;

  /// All 2^(n-1) sequences, ordered by size then lexicographically.
  static std::vector<ProjSeq> all(int n);

  friend bool operator==(const ProjSeq&, const ProjSeq&) = default;
};

/// Catalan number C_n as a 64-bit value (n <= 35).
unsigned long long catalan(int n);

}  // namespace lindeg
