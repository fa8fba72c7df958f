#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moplab/core/field.hpp"

namespace moplab {

struct NotContained : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    validate();
  }

  // "4,3,2"; empty string is the empty partition. Brackets are tolerated.
  static Partition parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != '[' && c != ']' && c != ' ') s += c;
    std::vector<int> parts;
    if (s.empty()) return Partition{};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("bad partition: '" + std::string(text) + "'");
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::logic_error&) {
        throw std::invalid_argument("bad partition: '" + std::string(text) + "'");
      }
      if (used != item.size() || v <= 0) throw std::invalid_argument("bad partition: '" + std::string(text) + "'");
      parts.push_back(v);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  // 1-based row access; rows beyond the length are 0.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0; }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= row(1); ++j) {
      int k = 0;
      while (k < length() && parts_[static_cast<size_t>(k)] >= j) ++k;
      c.push_back(k);
    }
    return Partition(std::move(c));
  }

  bool contains(const Partition& q) const {
    if (q.length() > length()) return false;
    for (int i = 1; i <= q.length(); ++i)
      if (q.row(i) > row(i)) return false;
    return true;
  }

  // (row, column), 1-based
  std::vector<std::pair<int, int>> boxes() const {
    std::vector<std::pair<int, int>> b;
    for (int i = 1; i <= length(); ++i)
      for (int j = 1; j <= row(i); ++j) b.emplace_back(i, j);
    return b;
  }

  std::string str() const {
    std::string s = "[";
    for (size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
    return s + "]";
  }
  // CLI form "4,3,2"
  std::string plain() const {
    std::string s;
    for (size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
    return s;
  }

  // Total order: by size, then lexicographically larger parts first.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return b.parts_ <=> a.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  // m_k(R): multiplicity of part k
  int multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

  Partition add_box(int i) const {
    std::vector<int> p = parts_;
    if (i == length() + 1) p.push_back(1);
    else p[static_cast<size_t>(i - 1)] += 1;
    return Partition(std::move(p));
  }
  Partition remove_box(int i) const {
    std::vector<int> p = parts_;
    p[static_cast<size_t>(i - 1)] -= 1;
    return Partition(std::move(p));
  }
  // rows where a box can be added / removed keeping a partition
  std::vector<int> addable_rows() const {
    std::vector<int> r;
    for (int i = 1; i <= length() + 1; ++i)
      if (i == 1 || row(i - 1) > row(i)) r.push_back(i);
    return r;
  }
  std::vector<int> removable_rows() const {
    std::vector<int> r;
    for (int i = 1; i <= length(); ++i)
      if (row(i) > row(i + 1)) r.push_back(i);
    return r;
  }

 private:
  std::vector<int> parts_;
  void validate() const {
    for (size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (k && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
};

// All partitions of n, in the total order above (largest lex first).
inline std::vector<Partition> partitions_of(int n, int max_len = 1 << 20) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::vector<Partition> partitions_up_to(int n, int max_len = 1 << 20) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k, max_len)) out.push_back(p);
  return out;
}

// All Q contained in R, sorted.
inline std::vector<Partition> subpartitions(const Partition& r) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > r.length()) {
      out.emplace_back(cur);
      return;
    }
    int hi = r.row(i);
    if (i > 1) hi = std::min(hi, cur[static_cast<size_t>(i - 2)]);
    for (int q = 0; q <= hi; ++q) {
      cur.push_back(q);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Dominance order on partitions of equal size: a <= b.
inline bool dominated_by(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
    sa += a.row(i);
    sb += b.row(i);
    if (sa > sb) return false;
  }
  return true;
}

struct Content {
  int row, col, value;
};

inline std::vector<Content> contents(const Partition& r) {
  std::vector<Content> c;
  for (auto [i, j] : r.boxes()) c.push_back({i, j, j - i});
  return c;
}

inline int hook_length(const Partition& r, int i, int j) {
  static thread_local Partition last;
  static thread_local Partition lastc;
  if (!(last == r)) {
    last = r;
    lastc = r.conjugate();
  }
  return (r.row(i) - j) + (lastc.row(j) - i) + 1;
}

inline std::vector<int> hooks(const Partition& r) {
  std::vector<int> h;
  Partition c = r.conjugate();
  for (auto [i, j] : r.boxes()) h.push_back((r.row(i) - j) + (c.row(j) - i) + 1);
  return h;
}

// z_R = prod k^{m_k} m_k!
inline Rational z_lambda(const Partition& r) {
  Rational z(1);
  for (int k = 1; k <= r.row(1); ++k) {
    int m = r.multiplicity(k);
    for (int t = 0; t < m; ++t) z *= Rational(k);
    z *= factorial(m);
  }
  return z;
}

// xi_R(z) = prod over boxes (z + j - i), kept factored.
template <ExactField F>
F xi(const Partition& r, const F& z) {
  F out(1);
  for (auto& c : contents(r)) out = out * factored(z + F(c.value));
  return out;
}

// xi_R / xi_Q; transposed uses (z + i - j).
template <ExactField F>
F xi_ratio(const Partition& r, const Partition& q, const F& z, bool transposed) {
  if (!r.contains(q)) throw NotContained(q.str() + " is not contained in " + r.str());
  F out(1);
  for (auto [i, j] : r.boxes()) {
    if (i <= q.length() && j <= q.row(i)) continue;
    int c = transposed ? i - j : j - i;
    out = out * factored(z + F(c));
  }
  return out;
}

// |Q|_R: sum of Q_i over rows with Q_i != R_i.
inline int restricted_size(const Partition& r, const Partition& q) {
  if (!r.contains(q)) throw NotContained(q.str() + " is not contained in " + r.str());
  int s = 0;
  for (int i = 1; i <= r.length(); ++i)
    if (q.row(i) != r.row(i)) s += q.row(i);
  return s;
}

// [[x]]_{s,a} = x if x = a mod s, else 1.
inline long long bracket(long long x, long long s, long long a) {
  if (s < 1) throw std::invalid_argument("bracket: s must be positive");
  long long d = ((x - a) % s + s) % s;
  return d == 0 ? x : 1;
}

enum class RowsConvention { Printed, Geometric };

// Printed: non-interacting iff Q_i < R_{i+1} for every i < l(R).
// Geometric: non-interacting iff R_{i+1} <= Q_i (skew rows share no column edge).
inline bool rows_interact(const Partition& r, const Partition& q, RowsConvention conv = RowsConvention::Printed) {
  if (!r.contains(q)) throw NotContained(q.str() + " is not contained in " + r.str());
  for (int i = 1; i < r.length(); ++i) {
    bool ok = conv == RowsConvention::Printed ? q.row(i) < r.row(i + 1) : r.row(i + 1) <= q.row(i);
    if (!ok) return true;
  }
  return false;
}

}  // namespace moplab
