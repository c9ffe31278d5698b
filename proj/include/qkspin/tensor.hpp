#pragma once

#include "qkspin/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qkspin {

// Up to 8 slots, 8 bits per slot, slot 0 in the low byte.
using Key = uint64_t;
constexpr int kMaxSlots = 8;

inline int slot(Key k, int i) { return int((k >> (8 * i)) & 0xffu); }
Key pack(const std::vector<int>& idx);
std::vector<int> unpack(Key k, int rank);

/// Sparse rational tensor with no stored zeros.
struct Tensor {
  int rank = 0;
  std::map<Key, Rational> entries;

  Tensor() = default;
  explicit Tensor(int r) : rank(r) {}

  bool is_zero() const { return entries.empty(); }
  Rational at(const std::vector<int>& idx) const;
  void add(Key k, const Rational& v);
  void add(const std::vector<int>& idx, const Rational& v) { add(pack(idx), v); }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.rank == b.rank && a.entries == b.entries; }
};

// Outer product a (x) b, ranks add.
Tensor outer(const Tensor& a, const Tensor& b);
// Rank-1 tensor from a coefficient vector.
Tensor vec_tensor(const std::vector<Rational>& v);

/// Linear combination of slot permutations. A term (c, p) sends the entry
/// at x to y with y[p[i]] = x[i], times c.
struct PermSum {
  using Perm = std::array<int, kMaxSlots>;
  int rank = 0;
  std::vector<std::pair<Rational, Perm>> terms;

  static PermSum identity(int rank);
  static PermSum zero(int rank) { return PermSum{rank, {}}; }
  // Output entry y_{abc..} = input at the letters, e.g. "acbd": y_abcd = x_acbd.
  static PermSum letters(const std::string& pattern, const Rational& c = 1);
  static PermSum swap(int rank, int i, int j);
  // y[p[i]] = x[i]
  static PermSum perm(int rank, const std::vector<int>& p, const Rational& c = 1);
  // Sum (not average) over all permutations of the given slots, with sign
  // for alt.
  static PermSum sym(int rank, const std::vector<int>& slots);
  static PermSum alt(int rank, const std::vector<int>& slots);

  Tensor apply(const Tensor& t) const;
  PermSum scaled(const Rational& c) const;
  // Place a rank-k PermSum on slots offset..offset+k-1 of a rank-r one.
  PermSum embed(int new_rank, int offset) const;
  void simplify();

  friend PermSum operator*(const PermSum& a, const PermSum& b);  // a after b
  friend PermSum operator+(const PermSum& a, const PermSum& b);
  friend PermSum operator-(const PermSum& a, const PermSum& b);
};

// A on slots 0..k-1, B on slots k..k+l-1.
PermSum tensor_product(const PermSum& a, const PermSum& b);

/// Incremental row echelon basis of sparse rational vectors.
template <class K>
class EchelonBasis {
public:
  using Vec = std::map<K, Rational>;
  // Returns true if v was independent of the rows so far.
  bool insert(Vec v) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = rows_.find(lead->first);
      if (it == rows_.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [k, c] : v) c *= inv;
        rows_.emplace(lead->first, std::move(v));
        return true;
      }
      Rational f = lead->second;
      for (auto& [k, c] : it->second) {
        auto [pos, fresh] = v.emplace(k, 0);
        pos->second -= f * c;
        if (sgn(pos->second) == 0) v.erase(pos);
      }
    }
    return false;
  }
  int rank() const { return int(rows_.size()); }

private:
  std::map<K, Vec> rows_;
};

}  // namespace qkspin
