#pragma once

// Reference implementations written from the definitions, sharing no code
// with the library beyond type conversion.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <proxyvote/orders.hpp>

namespace oracle {

constexpr int kMax = 8;

struct Rel {
  int m = 0;
  std::array<std::array<bool, kMax>, kMax> r{};

  int size() const {
    int k = 0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) k += r[a][b];
    return k;
  }
  friend bool operator==(const Rel&, const Rel&) = default;
};

using Ranking = std::vector<int>;

inline Rel from(const proxyvote::PartialOrder& p) {
  Rel x;
  x.m = p.alternatives();
  for (int a = 0; a < x.m; ++a)
    for (int b = 0; b < x.m; ++b) x.r[a][b] = p.prefers(a, b);
  return x;
}

inline Rel from_ranking(const Ranking& l) {
  Rel x;
  x.m = static_cast<int>(l.size());
  for (std::size_t p = 0; p < l.size(); ++p)
    for (std::size_t q = p + 1; q < l.size(); ++q) x.r[l[p]][l[q]] = true;
  return x;
}

inline Ranking ranking(const proxyvote::LinearOrder& l) {
  Ranking out;
  for (int p = 0; p < l.size(); ++p) out.push_back(l[p]);
  return out;
}

// Warshall over the edge list.
inline Rel reach(int m, const std::vector<std::pair<int, int>>& edges) {
  Rel x;
  x.m = m;
  for (auto [a, b] : edges) x.r[a][b] = true;
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (x.r[a][k] && x.r[k][b]) x.r[a][b] = true;
  return x;
}

inline bool irreflexive(const Rel& x) {
  for (int a = 0; a < x.m; ++a)
    if (x.r[a][a]) return false;
  return true;
}

inline bool antisymmetric(const Rel& x) {
  for (int a = 0; a < x.m; ++a)
    for (int b = 0; b < x.m; ++b)
      if (x.r[a][b] && x.r[b][a]) return false;
  return true;
}

inline bool transitive(const Rel& x) {
  for (int a = 0; a < x.m; ++a)
    for (int b = 0; b < x.m; ++b)
      for (int c = 0; c < x.m; ++c)
        if (x.r[a][b] && x.r[b][c] && !x.r[a][c]) return false;
  return true;
}

inline bool is_partial_order(const Rel& x) {
  return irreflexive(x) && antisymmetric(x) && transitive(x);
}

inline bool is_linear(const Rel& x) { return x.size() == x.m * (x.m - 1) / 2; }

inline bool subset(const Rel& p, const Rel& q) {
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b)
      if (p.r[a][b] && !q.r[a][b]) return false;
  return true;
}

inline std::vector<Ranking> permutations(int m) {
  Ranking p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Ranking> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool extends(const Ranking& l, const Rel& p) {
  std::array<int, kMax> pos{};
  for (std::size_t k = 0; k < l.size(); ++k) pos[l[k]] = static_cast<int>(k);
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b)
      if (p.r[a][b] && pos[a] > pos[b]) return false;
  return true;
}

inline std::vector<Ranking> extensions(const Rel& p) {
  std::vector<Ranking> out;
  for (const Ranking& l : permutations(p.m))
    if (extends(l, p)) out.push_back(l);
  return out;
}

// Generate-and-filter over every set of ordered pairs.
inline std::vector<Rel> partial_orders(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<Rel> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Rel x;
    x.m = m;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) x.r[pairs[k].first][pairs[k].second] = true;
    if (is_partial_order(x)) out.push_back(x);
  }
  return out;
}

// Ranking of a linear relation: more alternatives below means higher.
inline Ranking ranking_of(const Rel& x) {
  Ranking l(x.m);
  std::iota(l.begin(), l.end(), 0);
  std::vector<int> below(x.m, 0);
  for (int a = 0; a < x.m; ++a)
    for (int b = 0; b < x.m; ++b) below[a] += x.r[a][b];
  std::sort(l.begin(), l.end(), [&](int a, int b) { return below[a] > below[b]; });
  return l;
}

enum class Mech { Triv, Univ, Subset, Dictator, LinearStrict, AllLinearAgree };

inline std::vector<bool> permitted(Mech g, const std::vector<Rel>& P, int i) {
  const int n = static_cast<int>(P.size());
  std::vector<bool> out(n, false);
  if (P[i].size() == 0) {
    for (int j = 0; j < n; ++j) out[j] = j != i;
    return out;
  }
  if (is_linear(P[i])) {
    out[i] = true;
    return out;
  }
  switch (g) {
    case Mech::Triv:
      break;
    case Mech::Univ:
      for (int j = 0; j < n; ++j) out[j] = j != i;
      break;
    case Mech::Subset:
      for (int j = 0; j < n; ++j) out[j] = j != i && subset(P[i], P[j]);
      break;
    case Mech::Dictator:
      out[(i + 1) % n] = true;
      break;
    case Mech::LinearStrict:
      for (int j = 0; j < n; ++j) out[j] = is_linear(P[j]) && subset(P[i], P[j]) && !(P[i] == P[j]);
      break;
    case Mech::AllLinearAgree: {
      bool agree = true;
      for (int j = 0; j < n; ++j)
        if (j != i && is_linear(P[j]) && !subset(P[i], P[j])) agree = false;
      if (agree)
        for (int j = 0; j < n; ++j) out[j] = j != i && subset(P[i], P[j]);
      break;
    }
  }
  return out;
}

struct Outcome {
  std::vector<int> guru;
  std::vector<Ranking> cast;
  std::vector<bool> cycle;
};

// Delegates to the S-first permitted proxy; voters on a delegation cycle of
// length two or more cast their defaults, and everyone else follows the chain.
inline Outcome delegate(Mech g, const std::vector<Rel>& P, const std::vector<Ranking>& S,
                        const std::vector<Ranking>& D) {
  const int n = static_cast<int>(P.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<bool> allowed = permitted(g, P, i);
    out[i] = i;
    for (int j : S[i]) {
      if (allowed[j]) {
        out[i] = j;
        break;
      }
    }
  }
  Outcome o;
  o.cycle.assign(n, false);
  for (int i = 0; i < n; ++i) {
    if (out[i] == i) continue;
    int v = out[i];
    for (int step = 0; step < n && v != i; ++step) v = out[v];
    o.cycle[i] = v == i;
  }
  for (int i = 0; i < n; ++i) {
    int v = i;
    while (!o.cycle[v] && out[v] != v) v = out[v];
    o.guru.push_back(v);
    o.cast.push_back(!o.cycle[v] && is_linear(P[v]) ? ranking_of(P[v]) : D[v]);
  }
  return o;
}

inline std::vector<long long> scores(const std::vector<long long>& weights,
                                     const std::vector<Ranking>& ballots) {
  std::vector<long long> s(weights.size(), 0);
  for (const Ranking& l : ballots)
    for (std::size_t p = 0; p < l.size(); ++p) s[l[p]] += weights[p];
  return s;
}

inline int scoring_winner(const std::vector<long long>& weights, const Ranking& tiebreak,
                          const std::vector<Ranking>& ballots) {
  const std::vector<long long> s = scores(weights, ballots);
  int best = tiebreak[0];
  for (int a : tiebreak)
    if (s[a] > s[best]) best = a;
  return best;
}

inline int majority_winner(const std::vector<Ranking>& ballots) {
  int a_tops = 0;
  for (const Ranking& l : ballots) a_tops += l[0] == 0;
  return 2 * a_tops > static_cast<int>(ballots.size()) ? 0 : 1;
}

inline int median_winner(const Ranking& axis, const std::vector<int>& phantoms,
                         const std::vector<Ranking>& ballots) {
  std::vector<int> at(axis.size());
  for (std::size_t p = 0; p < axis.size(); ++p) at[axis[p]] = static_cast<int>(p);
  std::vector<int> points;
  for (const Ranking& l : ballots) points.push_back(at[l[0]]);
  for (int ph : phantoms) points.push_back(at[ph]);
  std::sort(points.begin(), points.end());
  return axis[points[points.size() / 2]];
}

inline bool single_peaked(const Ranking& l, const Ranking& axis) {
  // Every prefix of the ranking occupies a contiguous stretch of the axis.
  std::vector<int> at(axis.size());
  for (std::size_t p = 0; p < axis.size(); ++p) at[axis[p]] = static_cast<int>(p);
  int lo = at[l[0]];
  int hi = lo;
  for (std::size_t k = 1; k < l.size(); ++k) {
    const int p = at[l[k]];
    if (p == lo - 1) lo = p;
    else if (p == hi + 1) hi = p;
    else return false;
  }
  return true;
}

}  // namespace oracle
