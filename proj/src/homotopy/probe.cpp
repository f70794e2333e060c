#include "simpcat/homotopy/probe.hpp"

#include <set>

#include "simpcat/homotopy/fundamental.hpp"
#include "simpcat/homotopy/homology.hpp"

namespace simpcat {

std::string ProbeVerdict::to_string() const {
  switch (kind) {
    case Kind::ConfirmedUpTo: return "ConfirmedUpTo(" + std::to_string(degree) + ")";
    case Kind::Refuted: return "Refuted(" + invariant + " at degree " + std::to_string(degree) + ": " + detail + ")";
    case Kind::Inconclusive: return "Inconclusive(" + detail + ")";
  }
  return "?";
}

ProbeVerdict weak_equivalence_probe(const SimplicialMap& f, int k) {
  const SimplicialSet& x = *f.source;
  const SimplicialSet& y = *f.target;
  auto refuted = [](int degree, std::string invariant, std::string detail) {
    return ProbeVerdict{ProbeVerdict::Kind::Refuted, degree, std::move(invariant), std::move(detail)};
  };
  if (k < 0 || k > x.bound() - 1 || k > y.bound() - 1)
    return {ProbeVerdict::Kind::Inconclusive, k, "", "degree beyond the certified range"};

  const Components cx = pi0(x), cy = pi0(y);
  std::vector<int> image(cx.count, -1);
  std::set<int> hit;
  for (int v = 0; v < x.size(0); ++v) {
    const int c = cy.label[f.image[0][v]];
    if (image[cx.label[v]] < 0) image[cx.label[v]] = c;
    hit.insert(c);
  }
  if (std::set<int>(image.begin(), image.end()).size() != image.size() ||
      static_cast<int>(hit.size()) != cy.count)
    return refuted(0, "pi0", std::to_string(cx.count) + " vs " + std::to_string(cy.count) + " components, not a bijection");

  const auto hx = homology_up_to(x, k);
  const auto hy = homology_up_to(y, k);
  const auto hc = mapping_cone(f, k + 1).homology(k);
  for (int i = 0; i <= k; ++i) {
    if (!(hx[i] == hy[i])) return refuted(i, "H_" + std::to_string(i), hx[i].to_string() + " vs " + hy[i].to_string());
    if (!hc[i].trivial())
      return refuted(i, "H_" + std::to_string(i) + " induced map", "mapping cone has H = " + hc[i].to_string());
  }
  if (x.bound() >= 2 && y.bound() >= 2) {
    std::vector<bool> done(cx.count, false);
    for (int v = 0; v < x.size(0); ++v) {
      if (done[cx.label[v]]) continue;
      done[cx.label[v]] = true;
      const auto ax = abelianization(edge_path_group(x, v));
      const auto ay = abelianization(edge_path_group(y, f.image[0][v]));
      if (!(ax == ay)) return refuted(1, "pi1 abelianized", ax.to_string() + " vs " + ay.to_string());
    }
  }
  return {ProbeVerdict::Kind::ConfirmedUpTo, k, "", ""};
}

}  // namespace simpcat
