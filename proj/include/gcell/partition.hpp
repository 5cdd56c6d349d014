#ifndef GCELL_PARTITION_HPP
#define GCELL_PARTITION_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gcell {

/// A partition m_1 <= ... <= m_t of n with positive parts. Encodes the
/// monomial ideal E = (x^t, x^{t-1}y^{m_1}, ..., y^{m_t}).
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts[i] < parts[i - 1])
        throw std::invalid_argument("partition parts must be nondecreasing");
    }
  }

  int t() const { return static_cast<int>(parts.size()); }
  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  // 1-based access, with m_0 = 0.
  int m(int i) const { return i == 0 ? 0 : parts.at(static_cast<std::size_t>(i) - 1); }

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// All partitions of n, each once, in lexicographic order on the
/// nondecreasing part lists: (1,1,...,1) first, (n) last.
inline std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Nondecreasing lists in lex order: extend with parts >= last part.
  auto rec = [&](auto&& self, int rest, int minpart) -> void {
    if (rest == 0) {
      out.emplace_back(Partition{cur});
      return;
    }
    for (int p = minpart; p <= rest; ++p) {
      // A nondecreasing tail needs rest-p splittable into parts >= p.
      if (rest - p != 0 && rest - p < p) continue;
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

/// P(n,l): number of partitions of n into parts each <= l. P(0,l) = 1.
inline long long bounded_partition_count(long long n, long long l) {
  if (n < 0 || l < 0) throw std::invalid_argument("bounded_partition_count: negative input");
  if (n == 0) return 1;
  if (l == 0) return 0;
  // P(n,l) = P(n,l-1) + P(n-l,l)
  std::vector<std::vector<long long>> tab(static_cast<std::size_t>(n) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(l) + 1, 0));
  for (long long j = 0; j <= l; ++j) tab[0][static_cast<std::size_t>(j)] = 1;
  for (long long i = 1; i <= n; ++i)
    for (long long j = 1; j <= l; ++j) {
      long long v = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      if (i - j >= 0) v += tab[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)];
      tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  return tab[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
}

/// Hilbert function h = (h_0, ..., h_s), trailing zero dropped.
struct HilbertFunction {
  std::vector<int> values;

  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<int> v) : values(std::move(v)) {}

  int s() const { return static_cast<int>(values.size()) - 1; }
  int sum() const { return std::accumulate(values.begin(), values.end(), 0); }
  // h_i with h_i = 0 outside [0, s].
  int at(int i) const {
    if (i < 0 || i > s()) return 0;
    return values[static_cast<std::size_t>(i)];
  }
  /// Length of the initial ramp 1, 2, ..., t.
  int t() const {
    int k = 0;
    while (k <= s() && at(k) == k + 1) ++k;
    return k;
  }
  /// h = (1, 2, ..., t, h_t, ..., h_s) with t >= h_t >= ... >= h_s >= 1.
  bool admissible() const {
    if (values.empty() || at(0) != 1) return false;
    int tt = t();
    if (tt == 0) return false;
    if (at(tt) > tt) return false;
    for (int i = tt; i <= s(); ++i)
      if (at(i) < 1 || at(i) > at(i - 1)) return false;
    return true;
  }

  bool operator==(const HilbertFunction& o) const { return values == o.values; }
  bool operator<(const HilbertFunction& o) const { return values < o.values; }
};

/// h_j = #{monomials x^a y^b outside E with a+b = j}. Column a < t of the
/// staircase has height m_{t-a}.
inline HilbertFunction hilbert_function_of_staircase(const Partition& m) {
  int t = m.t();
  std::vector<int> h;
  for (int j = 0;; ++j) {
    int c = 0;
    for (int a = 0; a < t && a <= j; ++a)
      if (m.m(t - a) > j - a) ++c;
    if (c == 0) break;
    h.push_back(c);
  }
  if (h.empty()) h.push_back(0);  // unreachable for valid partitions
  return HilbertFunction{h};
}

/// Maximal jump of h, including the terminal drop h_s -> 0.
inline int max_jump(const HilbertFunction& h) {
  int d = 0;
  for (int i = 1; i <= h.s() + 1; ++i) {
    int j = h.at(i) - h.at(i - 1);
    if (j < 0) j = -j;
    if (j > d) d = j;
  }
  return d;
}

/// The lex-segment staircase of h: in degree j the h_j monomials of lowest
/// x-exponent stay outside the ideal, so column a survives to degree j iff
/// a < h_j. Yields m_i = #{j : h_j > t - i}, strictly increasing.
inline Partition lex_segment_of(const HilbertFunction& h) {
  if (!h.admissible()) throw std::invalid_argument("lex_segment_of: inadmissible Hilbert function");
  int t = h.t();
  std::vector<int> parts;
  for (int i = 1; i <= t; ++i) {
    int cnt = 0;
    for (int j = 0; j <= h.s(); ++j)
      if (h.at(j) > t - i) ++cnt;
    parts.push_back(cnt);
  }
  return Partition{parts};
}

}  // namespace gcell

#endif
