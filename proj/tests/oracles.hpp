#pragma once

// Brute-force reference computations for the tests. They work on plain
// std::vector rows in long double and share no code with the library.

#include <algorithm>
#include <cmath>
#include <vector>

#include "sphereconf/core.hpp"

namespace oracle {

using Row = std::vector<long double>;
using Rows = std::vector<Row>;

inline Rows rows_of(const sphereconf::PointConfigd& config) {
  Rows rows;
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    Row r;
    for (Eigen::Index c = 0; c < config.dimension(); ++c) r.push_back(config.points()(c, i));
    rows.push_back(r);
  }
  return rows;
}

inline long double dist2(const Row& a, const Row& b) {
  long double s = 0;
  for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
  return s;
}

inline long double dot(const Row& a, const Row& b) {
  long double s = 0;
  for (std::size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
  return s;
}

/// Sum over ordered pairs i != j, halved.
inline long double chord_sum(const Rows& p) {
  long double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i != j) s += dist2(p[i], p[j]);
    }
  }
  return s / 2;
}

inline long double frame_potential(const Rows& p) {
  long double s = 0;
  for (const auto& a : p) {
    for (const auto& b : p) s += dot(a, b) * dot(a, b);
  }
  return s;
}

/// Distinct squared distances by greedy grouping in pair order (no sorting):
/// each value joins the first group whose running minimum or maximum it is
/// within `tol` of.
inline std::vector<long double> distinct_squared(const Rows& p, long double tol = 1e-9L) {
  struct Group {
    long double lo, hi, sum;
    long count;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const long double v = dist2(p[i], p[j]);
      bool placed = false;
      for (auto& g : groups) {
        if (v >= g.lo - tol && v <= g.hi + tol) {
          g.lo = std::min(g.lo, v);
          g.hi = std::max(g.hi, v);
          g.sum += v;
          ++g.count;
          placed = true;
          break;
        }
      }
      if (!placed) groups.push_back({v, v, v, 1});
    }
  }
  std::vector<long double> out;
  for (const auto& g : groups) {
    if (g.sum / g.count > tol) out.push_back(g.sum / g.count);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Rows with_antipodes(const Rows& p, long double tol = 1e-9L) {
  Rows out = p;
  for (const auto& a : p) {
    Row neg;
    for (long double x : a) neg.push_back(-x);
    bool present = false;
    for (const auto& b : out) present = present || std::sqrt(dist2(neg, b)) <= tol;
    if (!present) out.push_back(neg);
  }
  return out;
}

}  // namespace oracle
