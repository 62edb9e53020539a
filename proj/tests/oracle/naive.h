//
// Copyright 2026 The Infoseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Brute-force reference evaluators. Straight transcriptions of the formulas
// with plain loops over std containers; deliberately shares no code with the
// library.

#ifndef INFOSEG_TESTS_ORACLE_NAIVE_H_
#define INFOSEG_TESTS_ORACLE_NAIVE_H_

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

inline double evenness_classical(const std::vector<double>& a) {
  const double m = static_cast<double>(a.size());
  double num = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i];
    for (std::size_t j = 0; j < a.size(); ++j) num += std::fabs(a[i] - a[j]);
  }
  return 1.0 - num / (2.0 * m * sum);
}

inline double evenness_paper(const std::vector<double>& a, double a_total, double a_complement) {
  double num = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) num += std::fabs(a[i] - a[j]);
    }
  }
  return 1.0 - num / (2.0 * a_total * a_complement);
}

inline double joint_exposure(const std::vector<double>& a, double a_total,
                             const std::vector<double>& b, const std::vector<double>& total) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    sum += a[i] / a_total * (b[i] / total[i]);
  }
  return sum;
}

inline double concentration_paper(const std::vector<double>& a, double a_total,
                                  const std::vector<std::int64_t>& n) {
  double n_total = 0.0;
  for (auto x : n) n_total += static_cast<double>(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] / a_total * (static_cast<double>(n[i]) / n_total);
  return 0.5 * sum;
}

inline double concentration_classical(const std::vector<double>& a, double a_total,
                                      const std::vector<std::int64_t>& n) {
  double n_total = 0.0;
  for (auto x : n) n_total += static_cast<double>(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::fabs(a[i] / a_total - static_cast<double>(n[i]) / n_total);
  }
  return 0.5 * sum;
}

// `order` lists unit indices nearest-first.
inline double centralization(const std::vector<double>& a, const std::vector<double>& b,
                             const std::vector<std::size_t>& order) {
  const std::size_t m = order.size();
  double a_sum = 0.0, b_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    a_sum += a[i];
    b_sum += b[i];
  }
  std::vector<double> X(m + 1, 0.0), Y(m + 1, 0.0);
  for (std::size_t i = 1; i <= m; ++i) {
    double xa = 0.0, yb = 0.0;
    for (std::size_t k = 0; k < i; ++k) {
      xa += a[order[k]];
      yb += b[order[k]];
    }
    X[i] = xa / a_sum;
    Y[i] = yb / b_sum;
  }
  double first = 0.0, second = 0.0;
  for (std::size_t i = 1; i <= m; ++i) first += X[i - 1] * Y[i];
  for (std::size_t i = 1; i <= m; ++i) second += X[i] * Y[i - 1];
  return first - second;
}

struct ClusteringTerms {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
};

inline ClusteringTerms clustering_terms(const std::vector<double>& a, double a_total,
                                        const std::vector<double>& total,
                                        const std::vector<std::vector<double>>& d) {
  const std::size_t m = a.size();
  ClusteringTerms t;
  double k = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double pa = 0.0, pt = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      pa += std::exp(-d[i][j]) * a[j];
      pt += std::exp(-d[i][j]) * total[j];
    }
    t.p += a[i] / a_total * pa;
    t.q += a[i] / a_total * pt;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) k += std::exp(-d[i][j]);
  }
  t.r = a_total / static_cast<double>(m * m) * k;
  return t;
}

inline double clustering(const std::vector<double>& a, double a_total,
                         const std::vector<double>& total,
                         const std::vector<std::vector<double>>& d) {
  const ClusteringTerms t = clustering_terms(a, a_total, total, d);
  return (t.p - t.r) / (t.q - t.r);
}

// Exact-set counts keyed by bitmask.
using SetCounts = std::map<std::uint32_t, std::int64_t>;

// U(T) = sum of E(A) with A meeting T, for every T in [1, 2^m).
inline std::vector<std::int64_t> union_reach(const SetCounts& exact, std::size_t m) {
  std::vector<std::int64_t> reach(std::size_t{1} << m, 0);
  for (std::uint32_t t = 1; t < reach.size(); ++t) {
    for (const auto& [a, count] : exact) {
      if ((a & t) != 0) reach[t] += count;
    }
  }
  return reach;
}

// E(A) = sum over B in A of (-1)^|A \ B| F(B), F(X) = U(S) - U(S \ X),
// enumerating every submask explicitly.
inline SetCounts invert_reach(const std::vector<std::int64_t>& reach, std::size_t m) {
  const std::uint32_t all = static_cast<std::uint32_t>((std::size_t{1} << m) - 1);
  auto F = [&](std::uint32_t x) -> std::int64_t {
    if (x == 0) return 0;
    return reach[all] - reach[all & ~x];
  };
  SetCounts exact;
  for (std::uint32_t a = 1; a <= all; ++a) {
    std::int64_t e = 0;
    for (std::uint32_t b = 0; b <= all; ++b) {
      if ((b & ~a) != 0) continue;
      int removed = 0;
      for (std::uint32_t rest = a & ~b; rest; rest &= rest - 1) ++removed;
      e += (removed % 2 == 0 ? 1 : -1) * F(b);
    }
    if (e != 0) exact[a] = e;
  }
  return exact;
}

// Per-person personhood: everyone following k units adds 1/k to each.
// `people` maps person id -> list of unit indices (duplicates ignored).
inline std::vector<double> personhood_by_person(
    const std::map<std::string, std::vector<std::size_t>>& people, std::size_t m) {
  std::vector<double> mass(m, 0.0);
  for (const auto& [id, units] : people) {
    std::vector<bool> follows(m, false);
    for (auto u : units) follows[u] = true;
    double k = 0.0;
    for (bool f : follows) k += f ? 1.0 : 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (follows[i]) mass[i] += 1.0 / k;
    }
  }
  return mass;
}

}  // namespace oracle

#endif  // INFOSEG_TESTS_ORACLE_NAIVE_H_
