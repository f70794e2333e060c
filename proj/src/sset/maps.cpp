#include "simpcat/sset/maps.hpp"

#include <map>

namespace simpcat {

std::uint64_t for_each_map(const SimplicialSet& x, const SimplicialSet& y,
                           const MapSearchOptions& options,
                           const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (y.bound() < x.bound()) throw InputError("enumerate_maps: target truncated below source");
  if (options.pointed && (!x.basepoint() || !y.basepoint()))
    throw InputError("enumerate_maps: pointed search needs pointed source and target");
  const int bound = x.bound();
  // Candidates in Y_n grouped by their face tuple.
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces(bound + 1);
  for (int n = 1; n <= bound; ++n) {
    for (int s = 0; s < y.size(n); ++s) {
      std::vector<int> f(n + 1);
      for (int i = 0; i <= n; ++i) f[i] = y.face(n, i, s);
      by_faces[n][f].push_back(s);
    }
  }
  std::vector<int> all_vertices(y.size(0));
  for (int v = 0; v < y.size(0); ++v) all_vertices[v] = v;

  std::vector<std::pair<int, int>> order;
  for (int n = 0; n <= bound; ++n)
    for (int s : x.nondegenerate(n)) order.emplace_back(n, s);

  std::vector<std::vector<int>> image(bound + 1);
  for (int n = 0; n <= bound; ++n) image[n].assign(x.size(n), -1);
  auto value = [&](int n, int s) {
    const EzForm& ez = x.ez(n, s);
    const int k = n - static_cast<int>(ez.degeneracy_word.size());
    return y.apply_degeneracies(k, image[k][ez.base], ez.degeneracy_word);
  };
  auto pinned = [&](int n, int s) {
    if (n < static_cast<int>(options.forced.size()) && s < static_cast<int>(options.forced[n].size()))
      return options.forced[n][s];
    return -1;
  };

  std::uint64_t count = 0;
  std::vector<int> single(1);
  auto search = [&](auto& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      std::vector<std::vector<int>> full(bound + 1);
      for (int n = 0; n <= bound; ++n) {
        full[n].resize(x.size(n));
        for (int s = 0; s < x.size(n); ++s) full[n][s] = value(n, s);
      }
      ++count;
      if (options.cap && count > options.cap) throw BoundExceeded("map enumeration cap exceeded");
      visit(full);
      return;
    }
    const auto [n, s] = order[pos];
    const std::vector<int>* candidates = &all_vertices;
    if (n == 0 && options.pointed && s == *x.basepoint()) {
      single[0] = *y.basepoint();
      candidates = &single;
    } else if (n > 0) {
      std::vector<int> f(n + 1);
      for (int i = 0; i <= n; ++i) f[i] = value(n - 1, x.face(n, i, s));
      auto it = by_faces[n].find(f);
      if (it == by_faces[n].end()) return;
      candidates = &it->second;
    }
    const std::vector<int> local = *candidates;
    const int pin = pinned(n, s);
    for (int c : local) {
      if (pin >= 0 && c != pin) continue;
      image[n][s] = c;
      self(self, pos + 1);
    }
    image[n][s] = -1;
  };
  search(search, 0);
  return count;
}

std::vector<SimplicialMap> enumerate_maps(SSetPtr x, SSetPtr y, bool pointed, std::uint64_t cap) {
  std::vector<SimplicialMap> out;
  MapSearchOptions options;
  options.pointed = pointed;
  options.cap = cap;
  for_each_map(*x, *y, options, [&](const std::vector<std::vector<int>>& image) {
    out.push_back({x, y, image});
  });
  return out;
}

std::uint64_t count_maps(const SimplicialSet& x, const SimplicialSet& y, bool pointed) {
  MapSearchOptions options;
  options.pointed = pointed;
  return for_each_map(x, y, options, [](const std::vector<std::vector<int>>&) {});
}

}  // namespace simpcat
