#include "simpcat/sset/standard.hpp"

#include <algorithm>

namespace simpcat {

namespace {

ordinal::Map drop(const ordinal::Map& theta, int i) {
  ordinal::Map out = theta;
  out.erase(out.begin() + i);
  return out;
}

ordinal::Map repeat(const ordinal::Map& theta, int j) {
  ordinal::Map out = theta;
  out.insert(out.begin() + j, theta[j]);
  return out;
}

bool misses_some_vertex(const ordinal::Map& theta, int n, int also) {
  std::vector<bool> hit(n + 1, false);
  for (int v : theta) hit[v] = true;
  if (also >= 0) hit[also] = true;
  return std::find(hit.begin(), hit.end(), false) != hit.end();
}

}  // namespace

SimplicialSet delta_subcomplex(int n, int bound, const std::function<bool(const ordinal::Map&)>& keep,
                               std::vector<std::vector<ordinal::Map>>* keys) {
  if (n < 0 || bound < 0) throw InputError("negative dimension or bound");
  std::vector<std::vector<ordinal::Map>> seeds(bound + 1);
  for (int k = 0; k <= bound; ++k)
    for (auto& theta : ordinal::all_maps(k, n))
      if (keep(theta)) seeds[k].push_back(std::move(theta));
  return build_closed(
      bound, seeds, [](int, int i, const ordinal::Map& t) { return drop(t, i); },
      [](int, int j, const ordinal::Map& t) { return repeat(t, j); }, keys);
}

SimplicialSet delta(int n, int bound) {
  return delta_subcomplex(n, bound, [](const ordinal::Map&) { return true; });
}

SimplicialSet boundary(int n, int bound) {
  return delta_subcomplex(n, bound,
                          [n](const ordinal::Map& t) { return misses_some_vertex(t, n, -1); });
}

SimplicialSet horn(int n, int i, int bound) {
  if (i < 0 || i > n) throw InputError("horn index out of range");
  return delta_subcomplex(n, bound,
                          [n, i](const ordinal::Map& t) { return misses_some_vertex(t, n, i); });
}

SimplicialSet sphere(int n, int bound) {
  if (n < 0 || bound < 0) throw InputError("negative dimension or bound");
  if (n == 0) return two_point(bound);
  // Keys: surjections onto [n]; everything else collapses to the empty key,
  // which sorts first and so is simplex 0 in every degree.
  auto collapse = [n](ordinal::Map t) {
    if (t.empty() || !ordinal::is_surjective(t, n)) return ordinal::Map{};
    return t;
  };
  std::vector<std::vector<ordinal::Map>> seeds(bound + 1);
  seeds[0].push_back({});
  if (n <= bound) seeds[n].push_back(ordinal::identity(n));
  SimplicialSet s = build_closed(
      bound, seeds,
      [&](int, int i, const ordinal::Map& t) { return t.empty() ? t : collapse(drop(t, i)); },
      [](int, int j, const ordinal::Map& t) { return t.empty() ? t : repeat(t, j); });
  return s.with_basepoint(0);
}

SimplicialSet point(int bound) { return delta(0, bound); }

SimplicialSet two_point(int bound) {
  if (bound < 0) throw InputError("negative bound");
  std::vector<int> sizes(bound + 1, 2);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    if (n > 0) faces[n].assign(n + 1, {0, 1});
    if (n < bound) degens[n].assign(n + 1, {0, 1});
  }
  return SimplicialSet::from_tables(bound, sizes, faces, degens, 0);
}

SimplicialSet build_standard(StandardKind kind, int n, int bound, int horn_index) {
  switch (kind) {
    case StandardKind::Delta: return delta(n, bound);
    case StandardKind::Boundary: return boundary(n, bound);
    case StandardKind::Horn: return horn(n, horn_index, bound);
    case StandardKind::Sphere: return sphere(n, bound);
    case StandardKind::Point: return point(bound);
    case StandardKind::TwoPoint: return two_point(bound);
  }
  throw InputError("unknown standard kind");
}

StandardKind parse_standard_kind(const std::string& name) {
  if (name == "delta") return StandardKind::Delta;
  if (name == "boundary") return StandardKind::Boundary;
  if (name == "horn") return StandardKind::Horn;
  if (name == "sphere") return StandardKind::Sphere;
  if (name == "point") return StandardKind::Point;
  if (name == "two_point") return StandardKind::TwoPoint;
  throw InputError("unknown standard simplicial set '" + name + "'");
}

std::string to_string(StandardKind kind) {
  switch (kind) {
    case StandardKind::Delta: return "delta";
    case StandardKind::Boundary: return "boundary";
    case StandardKind::Horn: return "horn";
    case StandardKind::Sphere: return "sphere";
    case StandardKind::Point: return "point";
    case StandardKind::TwoPoint: return "two_point";
  }
  return "?";
}

}  // namespace simpcat
