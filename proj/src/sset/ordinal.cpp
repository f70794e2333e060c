#include "simpcat/sset/ordinal.hpp"

#include <algorithm>

namespace simpcat::ordinal {

Map identity(int n) {
  Map m(n + 1);
  for (int i = 0; i <= n; ++i) m[i] = i;
  return m;
}

Map coface(int n, int i) {
  Map m(n);
  for (int t = 0; t < n; ++t) m[t] = t < i ? t : t + 1;
  return m;
}

Map codegeneracy(int n, int j) {
  Map m(n + 2);
  for (int t = 0; t <= n + 1; ++t) m[t] = t <= j ? t : t - 1;
  return m;
}

Map compose(const Map& after, const Map& before) {
  Map out(before.size());
  for (std::size_t t = 0; t < before.size(); ++t) out[t] = after[before[t]];
  return out;
}

bool is_nondecreasing(const Map& theta, int codomain) {
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (theta[t] < 0 || theta[t] > codomain) return false;
    if (t > 0 && theta[t] < theta[t - 1]) return false;
  }
  return true;
}

bool is_injective(const Map& theta) {
  for (std::size_t t = 1; t < theta.size(); ++t)
    if (theta[t] == theta[t - 1]) return false;
  return true;
}

bool is_surjective(const Map& theta, int codomain) {
  if (theta.empty()) return codomain < 0;
  if (theta.front() != 0 || theta.back() != codomain) return false;
  for (std::size_t t = 1; t < theta.size(); ++t)
    if (theta[t] - theta[t - 1] > 1) return false;
  return true;
}

EpiMono factor(const Map& theta) {
  EpiMono f;
  f.epi.reserve(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (t == 0 || theta[t] != theta[t - 1]) f.mono.push_back(theta[t]);
    f.epi.push_back(static_cast<int>(f.mono.size()) - 1);
  }
  return f;
}

std::vector<int> repeat_positions(const Map& epi) {
  std::vector<int> out;
  for (std::size_t t = 0; t + 1 < epi.size(); ++t)
    if (epi[t] == epi[t + 1]) out.push_back(static_cast<int>(t));
  return out;
}

std::vector<int> missed_descending(const Map& mono, int codomain) {
  std::vector<int> out;
  std::size_t k = mono.size();
  for (int v = codomain; v >= 0; --v) {
    if (k > 0 && mono[k - 1] == v) {
      --k;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Map> all_maps(int n, int m) {
  std::vector<Map> out;
  if (n < 0) {
    out.emplace_back();
    return out;
  }
  if (m < 0) return out;
  Map cur(n + 1, 0);
  while (true) {
    out.push_back(cur);
    int t = n;
    while (t >= 0 && cur[t] == m) --t;
    if (t < 0) break;
    int v = cur[t] + 1;
    for (int u = t; u <= n; ++u) cur[u] = v;
  }
  return out;
}

std::int64_t count_maps(int n, int m) {
  // C(n + m + 1, n + 1)
  if (m < 0) return n < 0 ? 1 : 0;
  std::int64_t r = 1;
  int k = std::min(n + 1, m);
  for (int i = 1; i <= k; ++i) r = r * (n + m + 2 - i) / i;
  return r;
}

}  // namespace simpcat::ordinal
