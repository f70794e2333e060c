#include "simpcat/spectra/spectrum.hpp"

#include <algorithm>

#include "simpcat/cat/presented.hpp"
#include "simpcat/homotopy/fundamental.hpp"
#include "simpcat/scat/pointed.hpp"

namespace simpcat {

namespace {

bool is_terminal(const SimplicialCategory& c) {
  for (int n = 0; n <= c.bound(); ++n)
    if (c.level(n).object_count() != 1 || c.level(n).morphism_count() != 1) return false;
  return true;
}

}  // namespace

std::vector<std::string> SpectrumObject::audit(std::size_t limit) const {
  std::vector<std::string> out;
  auto report = [&](std::string s) {
    if (out.size() < limit) out.push_back(std::move(s));
  };
  if (structure.size() + 1 != levels.size() && !(levels.empty() && structure.empty()))
    report("expected one structure functor between consecutive levels");
  for (int n = 0; n < length(); ++n) {
    if (!levels[n]->pointed()) report("level " + std::to_string(n) + " is not pointed");
    for (const auto& e : levels[n]->audit(limit)) report("level " + std::to_string(n) + ": " + e);
  }
  for (std::size_t n = 0; n < structure.size() && n + 1 < levels.size(); ++n) {
    const SimplicialFunctor& s = structure[n];
    if (!(*s.source == suspend(*levels[n], rho))) report("structure " + std::to_string(n) + ": source is not the suspension");
    if (!(*s.target == *levels[n + 1])) report("structure " + std::to_string(n) + ": target is not the next level");
    for (const auto& e : s.audit(limit)) report("structure " + std::to_string(n) + ": " + e);
  }
  return out;
}

SpectrumObject sigma_infinity(const SimplicialCategory& c, int length, RhoChoice rho, int bound) {
  if (length < 1) throw InputError("sigma_infinity: length must be at least 1");
  SpectrumObject s;
  s.rho = rho;
  s.levels.push_back(share(c));
  for (int n = 1; n < length; ++n) {
    try {
      s.levels.push_back(share(suspend(*s.levels.back(), rho, bound)));
    } catch (const BoundExceeded& e) {
      throw BoundExceeded("sigma_infinity: level " + std::to_string(n) + ": " + e.what());
    }
    s.structure.push_back(SimplicialFunctor::identity(s.levels.back()));
  }
  return s;
}

SpectrumObject spectrum_from_levels(const std::vector<SimplicialCategory>& levels, RhoChoice rho) {
  if (levels.empty()) throw InputError("a spectrum needs at least one level");
  SpectrumObject s;
  s.rho = rho;
  for (const auto& c : levels) {
    if (!c.pointed()) throw InputError("spectrum levels must be pointed");
    if (c.bound() != levels[0].bound()) throw InputError("spectrum levels must share one bound");
    s.levels.push_back(share(c));
  }
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
    auto sigma = share(suspend(levels[n], rho));
    if (is_terminal(levels[n + 1]))
      s.structure.push_back(to_terminal(sigma, s.levels[n + 1]));
    else if (is_terminal(levels[n]))
      s.structure.push_back(basepoint_functor(sigma, s.levels[n + 1]));
    else
      throw InputError("no canonical structure functor between non-terminal levels " + std::to_string(n) +
                       " and " + std::to_string(n + 1));
  }
  return s;
}

SpectrumObject shift(const SpectrumObject& s) {
  if (s.length() < 2) throw InputError("shift needs a spectrum of length at least 2");
  SpectrumObject out;
  out.rho = s.rho;
  out.levels.assign(s.levels.begin() + 1, s.levels.end());
  out.structure.assign(s.structure.begin() + 1, s.structure.end());
  return out;
}

std::string to_string(OmegaLevelVerdict::Kind kind) {
  switch (kind) {
    case OmegaLevelVerdict::Kind::Confirmed:
      return "Confirmed";
    case OmegaLevelVerdict::Kind::Refuted:
      return "Refuted";
    case OmegaLevelVerdict::Kind::Inconclusive:
      break;
  }
  return "Inconclusive";
}

OmegaLevelVerdict::Kind OmegaProbeReport::overall() const {
  using Kind = OmegaLevelVerdict::Kind;
  Kind k = Kind::Confirmed;
  for (const auto& l : levels) {
    if (l.kind == Kind::Refuted) return Kind::Refuted;
    if (l.kind == Kind::Inconclusive) k = Kind::Inconclusive;
  }
  return k;
}

OmegaProbeReport omega_spectrum_probe(const SpectrumObject& s, int k, int closure_bound) {
  using Kind = OmegaLevelVerdict::Kind;
  const int degree = std::max(2, k + 1);
  OmegaProbeReport report;
  for (int n = 0; n + 1 < s.length(); ++n) {
    OmegaLevelVerdict v;
    v.level = n;
    const SimplicialCategory& here = *s.levels[n];
    const SimplicialCategory& next = *s.levels[n + 1];
    v.components = pi0(diag_nerve_iso(here, std::min(here.bound(), degree))).count;
    if (next.bound() < 2) {
      v.detail = "level " + std::to_string(n + 1) + " has no 2-simplices in its diagonal nerve";
      report.levels.push_back(std::move(v));
      continue;
    }
    const SimplicialSet d = diag_nerve_iso(next, std::min(next.bound(), degree));
    const SimplicialSet comp = component(d, *d.basepoint());
    try {
      const MaterializedCategory pi = fundamental_groupoid(comp, closure_bound);
      const int bp = *comp.basepoint();
      v.loops = static_cast<int>(pi.category.hom(bp, bp).size());
    } catch (const BoundExceeded&) {
      v.kind = Kind::Refuted;
      v.detail = "pi0 has " + std::to_string(v.components) + " elements; loops at the next level exceed " +
                 std::to_string(closure_bound) + " morphisms";
      report.levels.push_back(std::move(v));
      continue;
    }
    if (*v.loops == v.components) {
      v.kind = Kind::Confirmed;
      v.detail = "pi0 and loop classes both " + std::to_string(v.components);
    } else {
      v.kind = Kind::Refuted;
      v.detail = "pi0 has " + std::to_string(v.components) + " elements, loop classes " + std::to_string(*v.loops);
    }
    report.levels.push_back(std::move(v));
  }
  return report;
}

}  // namespace simpcat
