#include "qkspin/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkspin {

Key pack(const std::vector<int>& idx) {
  if (idx.size() > size_t(kMaxSlots)) throw std::invalid_argument("tensor rank above 8");
  Key k = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] > 255) throw std::invalid_argument("tensor index out of range");
    k |= Key(idx[i]) << (8 * i);
  }
  return k;
}

std::vector<int> unpack(Key k, int rank) {
  std::vector<int> idx(rank);
  for (int i = 0; i < rank; ++i) idx[i] = slot(k, i);
  return idx;
}

Rational Tensor::at(const std::vector<int>& idx) const {
  auto it = entries.find(pack(idx));
  return it == entries.end() ? Rational(0) : it->second;
}

void Tensor::add(Key k, const Rational& v) {
  if (sgn(v) == 0) return;
  auto [it, fresh] = entries.emplace(k, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) entries.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (auto& [k, v] : o.entries) add(k, v);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (auto& [k, v] : o.entries) add(k, -v);
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    entries.clear();
    return *this;
  }
  for (auto& [k, v] : entries) v *= s;
  return *this;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.rank + b.rank > kMaxSlots) throw std::invalid_argument("outer: rank above 8");
  Tensor t(a.rank + b.rank);
  for (auto& [ka, va] : a.entries)
    for (auto& [kb, vb] : b.entries) t.add(ka | (kb << (8 * a.rank)), va * vb);
  return t;
}

Tensor vec_tensor(const std::vector<Rational>& v) {
  Tensor t(1);
  for (size_t i = 0; i < v.size(); ++i) t.add(Key(i), v[i]);
  return t;
}

// ---------------------------------------------------------------- PermSum

PermSum PermSum::identity(int rank) { return perm(rank, [&] {
  std::vector<int> p(rank);
  for (int i = 0; i < rank; ++i) p[i] = i;
  return p;
}()); }

PermSum PermSum::perm(int rank, const std::vector<int>& p, const Rational& c) {
  Perm q{};
  for (int i = 0; i < kMaxSlots; ++i) q[i] = i;
  for (int i = 0; i < rank; ++i) q[i] = p[i];
  PermSum s{rank, {}};
  s.terms.emplace_back(c, q);
  return s;
}

PermSum PermSum::letters(const std::string& pattern, const Rational& c) {
  // y_{a b c ..} = x_{pattern}: x[i] = y[pattern[i] - 'a'], so p[i] = pattern[i] - 'a'
  std::vector<int> p;
  for (char ch : pattern) p.push_back(ch - 'a');
  return perm(int(p.size()), p, c);
}

PermSum PermSum::swap(int rank, int i, int j) {
  std::vector<int> p(rank);
  for (int k = 0; k < rank; ++k) p[k] = k;
  std::swap(p[i], p[j]);
  return perm(rank, p);
}

namespace {

PermSum permutation_sum(int rank, const std::vector<int>& slots, bool signed_sum) {
  std::vector<int> order(slots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  PermSum s{rank, {}};
  do {
    int inversions = 0;
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = i + 1; j < order.size(); ++j)
        if (order[i] > order[j]) ++inversions;
    std::vector<int> p(rank);
    for (int k = 0; k < rank; ++k) p[k] = k;
    for (size_t i = 0; i < slots.size(); ++i) p[slots[i]] = slots[order[i]];
    Rational c = (signed_sum && inversions % 2) ? -1 : 1;
    s = s + PermSum::perm(rank, p, c);
  } while (std::next_permutation(order.begin(), order.end()));
  return s;
}

}  // namespace

PermSum PermSum::sym(int rank, const std::vector<int>& slots) { return permutation_sum(rank, slots, false); }
PermSum PermSum::alt(int rank, const std::vector<int>& slots) { return permutation_sum(rank, slots, true); }

Tensor PermSum::apply(const Tensor& t) const {
  if (t.rank != rank) throw std::invalid_argument("PermSum rank mismatch");
  Tensor out(rank);
  for (auto& [k, v] : t.entries)
    for (auto& [c, p] : terms) {
      Key y = 0;
      for (int i = 0; i < rank; ++i) y |= Key(slot(k, i)) << (8 * p[i]);
      out.add(y, c * v);
    }
  return out;
}

PermSum PermSum::scaled(const Rational& c) const {
  PermSum s = *this;
  for (auto& t : s.terms) t.first *= c;
  s.simplify();
  return s;
}

PermSum PermSum::embed(int new_rank, int offset) const {
  PermSum s{new_rank, {}};
  for (auto& [c, p] : terms) {
    Perm q{};
    for (int i = 0; i < kMaxSlots; ++i) q[i] = i;
    for (int i = 0; i < rank; ++i) q[offset + i] = offset + p[i];
    s.terms.emplace_back(c, q);
  }
  return s;
}

void PermSum::simplify() {
  std::map<Perm, Rational> acc;
  for (auto& [c, p] : terms) acc[p] += c;
  terms.clear();
  for (auto& [p, c] : acc)
    if (sgn(c) != 0) terms.emplace_back(c, p);
}

PermSum operator*(const PermSum& a, const PermSum& b) {
  if (a.rank != b.rank) throw std::invalid_argument("PermSum rank mismatch");
  PermSum s{a.rank, {}};
  for (auto& [ca, pa] : a.terms)
    for (auto& [cb, pb] : b.terms) {
      PermSum::Perm q{};
      for (int i = 0; i < kMaxSlots; ++i) q[i] = i < a.rank ? pa[pb[i]] : i;
      s.terms.emplace_back(ca * cb, q);
    }
  s.simplify();
  return s;
}

PermSum operator+(const PermSum& a, const PermSum& b) {
  if (a.rank != b.rank) throw std::invalid_argument("PermSum rank mismatch");
  PermSum s = a;
  s.terms.insert(s.terms.end(), b.terms.begin(), b.terms.end());
  s.simplify();
  return s;
}

PermSum operator-(const PermSum& a, const PermSum& b) { return a + b.scaled(-1); }

PermSum tensor_product(const PermSum& a, const PermSum& b) {
  int r = a.rank + b.rank;
  return a.embed(r, 0) * b.embed(r, a.rank);
}

}  // namespace qkspin
