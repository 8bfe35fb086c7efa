#pragma once
// Brute-force reference implementations used only by the tests. They share no
// code with the library: plain integers, direct rule transcriptions, no memo.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Counts = std::vector<int>;  // Counts[i - 1] = multiplicity of a_i

// a_1..a_k
inline std::vector<u64> terms(std::size_t k) {
  std::vector<u64> t;
  for (std::size_t i = 1; i <= k; ++i) {
    if (i == 1) t.push_back(1);
    else if (i == 2) t.push_back(2);
    else t.push_back((i - 1) * t[i - 2] + t[i - 3]);
  }
  return t;
}

inline u64 value(const std::vector<int>& s) {
  const auto t = terms(s.size());
  u64 v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) v += static_cast<u64>(s[i]) * t[i];
  return v;
}

inline bool legal(const std::vector<int>& s) {
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const int si = s[i - 1];
    if (si < 0 || si > static_cast<int>(i)) return false;
    if (si == static_cast<int>(i) && i >= 2 && s[i - 2] != 0) return false;
  }
  return true;
}

// Every vector with 0 <= s_i <= i for i = 1..k, legal or not.
inline void for_each_box_vector(std::size_t k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> s(k, 0);
  while (true) {
    visit(s);
    std::size_t i = 0;
    while (i < k && s[i] == static_cast<int>(i + 1)) s[i++] = 0;
    if (i == k) return;
    ++s[i];
  }
}

// x -> list of legal coefficient vectors (length k) with that value
inline std::map<u64, std::vector<std::vector<int>>> legal_by_value(std::size_t k) {
  std::map<u64, std::vector<std::vector<int>>> out;
  for_each_box_vector(k, [&](const std::vector<int>& s) {
    if (legal(s)) out[value(s)].push_back(s);
  });
  return out;
}

inline std::vector<int> greedy(u64 x) {
  auto t = terms(2);
  while (t.back() <= x) t = terms(t.size() + 1);
  t.pop_back();
  std::vector<int> s(t.size(), 0);
  for (std::size_t i = t.size(); i-- > 0;) {
    while (x >= t[i]) {
      x -= t[i];
      ++s[i];
    }
  }
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

inline int summands(const std::vector<int>& s) {
  int c = 0;
  for (int v : s) c += v;
  return c;
}

// Multiset of indices sorted ascending, consecutive differences.
inline std::vector<int> gaps(const std::vector<int>& s) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int c = 0; c < s[i]; ++c) idx.push_back(static_cast<int>(i + 1));
  std::vector<int> g;
  for (std::size_t j = 1; j < idx.size(); ++j) g.push_back(idx[j] - idx[j - 1]);
  return g;
}

struct Moments {
  double mean, variance, skewness, kurtosis;
};

inline Moments moments(const std::vector<int>& xs) {
  const double N = static_cast<double>(xs.size());
  double mean = 0;
  for (int x : xs) mean += x;
  mean /= N;
  double m2 = 0, m3 = 0, m4 = 0;
  for (int x : xs) {
    const double d = x - mean;
    m2 += d * d / N;
    m3 += d * d * d / N;
    m4 += d * d * d * d / N;
  }
  return {mean, m2, m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3};
}

// ---- game -----------------------------------------------------------------

inline std::size_t top_index(u64 n) {
  const auto t = terms(40);
  std::size_t k = 0;
  while (k < t.size() && t[k] <= n) ++k;
  return k;
}

struct OMove {
  bool combine;
  int i;
  bool operator<(const OMove& o) const { return std::pair(!combine, i) < std::pair(!o.combine, o.i); }
  bool operator==(const OMove& o) const { return combine == o.combine && i == o.i; }
};

// Moves whose result stays within indices 1..K.
inline std::vector<OMove> moves(const Counts& c) {
  const int K = static_cast<int>(c.size());
  auto at = [&](int i) { return i >= 1 && i <= K ? c[i - 1] : 0; };
  std::vector<OMove> out;
  if (at(1) >= 2 && K >= 2) out.push_back({true, 1});
  for (int i = 2; i + 1 <= K; ++i)
    if (at(i) >= i && at(i - 1) >= 1) out.push_back({true, i});
  if (at(2) >= 3 && K >= 3) out.push_back({false, 2});
  for (int i = 3; i + 1 <= K; ++i)
    if (at(i) >= i + 1) out.push_back({false, i});
  return out;
}

inline Counts play(Counts c, const OMove& m) {
  auto add = [&](int i, int d) { c[i - 1] += d; };
  const int i = m.i;
  if (m.combine) {
    if (i == 1) {
      add(1, -2);
      add(2, 1);
    } else {
      add(i, -i);
      add(i - 1, -1);
      add(i + 1, 1);
    }
  } else if (i == 2) {
    add(2, -3);
    add(1, 1);
    add(3, 1);
  } else {
    add(i, -(i + 1));
    add(i + 1, 1);
    add(i - 1, i - 2);
    add(i - 2, 1);
  }
  return c;
}

inline Counts start(u64 n) {
  Counts c(top_index(n), 0);
  c[0] = static_cast<int>(n);
  return c;
}

inline u64 weight(const Counts& c) {
  return value(c);
}

// Unmemoized: can `team` force the last move from c with `seat` to move?
inline bool team_wins(const Counts& c, int seat, int players, const std::set<int>& team) {
  const bool ours = team.count(seat) > 0;
  for (const auto& m : moves(c)) {
    const Counts next = play(c, m);
    const bool win = moves(next).empty() ? ours : team_wins(next, seat % players + 1, players, team);
    if (win == ours) return ours;
  }
  return !ours;
}

// Every complete game, by (combines, splits). Unmemoized.
inline void all_games(const Counts& c, int combines, int splits, std::set<std::pair<int, int>>& out) {
  const auto ms = moves(c);
  if (ms.empty()) {
    out.insert({combines, splits});
    return;
  }
  for (const auto& m : ms) all_games(play(c, m), combines + m.combine, splits + !m.combine, out);
}

inline std::set<int> game_lengths(u64 n) {
  std::set<std::pair<int, int>> g;
  all_games(start(n), 0, 0, g);
  std::set<int> lengths;
  for (auto [a, b] : g) lengths.insert(a + b);
  return lengths;
}

// Combines along one arbitrary complete game (always the last legal move).
inline int combines_along_one_game(u64 n) {
  Counts c = start(n);
  int combines = 0;
  for (auto ms = moves(c); !ms.empty(); ms = moves(c)) {
    combines += ms.back().combine;
    c = play(c, ms.back());
  }
  return combines;
}

// ---- matrices -------------------------------------------------------------

using Matrix = std::vector<std::vector<long double>>;

inline std::vector<std::vector<std::int64_t>> matrix_A(int k) {
  std::vector<std::vector<std::int64_t>> A(k, std::vector<std::int64_t>(k, 0));
  A[0][0] = 1;
  if (k > 1) A[0][1] = -2;
  if (k > 2) A[0][2] = -1;
  for (int i = 2; i <= k; ++i) {
    A[i - 1][i - 1] = 1;
    if (i + 1 <= k) A[i - 1][i] = -i;
    if (i + 2 <= k) A[i - 1][i + 1] = -1;
  }
  return A;
}

// Inverse of a unit upper-triangular integer matrix by back substitution.
inline std::vector<std::vector<std::int64_t>> unit_upper_inverse(const std::vector<std::vector<std::int64_t>>& A) {
  const int k = static_cast<int>(A.size());
  std::vector<std::vector<std::int64_t>> X(k, std::vector<std::int64_t>(k, 0));
  for (int col = 0; col < k; ++col) {
    for (int row = k - 1; row >= 0; --row) {
      std::int64_t v = row == col ? 1 : 0;
      for (int j = row + 1; j < k; ++j) v -= A[row][j] * X[j][col];
      X[row][col] = v;
    }
  }
  return X;
}

}  // namespace oracle
