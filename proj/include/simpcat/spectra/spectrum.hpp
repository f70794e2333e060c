// Spectrum objects in pointed simplicial categories with respect to Σ, the
// suspension spectrum, the shift, and a probe for the Ω-spectrum condition.
#ifndef SIMPCAT_SPECTRA_SPECTRUM_HPP_
#define SIMPCAT_SPECTRA_SPECTRUM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "simpcat/scat/levelwise.hpp"
#include "simpcat/scat/simplicial_category.hpp"

namespace simpcat {

struct SpectrumObject {
  std::vector<SCatPtr> levels;
  // structure[n]: Σ levels[n] -> levels[n + 1]; its source is the suspension.
  std::vector<SimplicialFunctor> structure;
  RhoChoice rho = RhoChoice::PiDec;

  int length() const { return static_cast<int>(levels.size()); }
  // Pointed levels, valid structure functors whose source is exactly the
  // suspension of the level below.
  std::vector<std::string> audit(std::size_t limit = 16) const;
};

// Levels C, ΣC, ..., Σ^{N-1}C with identity structure functors.
SpectrumObject sigma_infinity(const SimplicialCategory& c, int length, RhoChoice rho = RhoChoice::PiDec,
                              int bound = 100000);
// Structure functors forced by terminal neighbours: into a terminal level,
// or out of Σ(terminal) = terminal through the basepoint. Throws InputError
// when two consecutive levels are both non-terminal.
SpectrumObject spectrum_from_levels(const std::vector<SimplicialCategory>& levels,
                                    RhoChoice rho = RhoChoice::PiDec);
// (s₋X)_n = X_{n+1}. Throws InputError for length < 2.
SpectrumObject shift(const SpectrumObject& s);

struct OmegaLevelVerdict {
  enum class Kind { Confirmed, Refuted, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int level = 0;
  int components = 0;            // |π₀ diag N iso Dⁿ|
  std::optional<int> loops;      // |π₁(diag N iso Dⁿ⁺¹, bp)| when it closed within the bound
  std::string detail;
};
std::string to_string(OmegaLevelVerdict::Kind kind);

struct OmegaProbeReport {
  std::vector<OmegaLevelVerdict> levels;
  // Refuted if any level is, else Inconclusive if any level is, else Confirmed.
  OmegaLevelVerdict::Kind overall() const;
};

// Compares |π₀| of level n with the number of loop classes at the basepoint
// of level n + 1, counted by materializing the fundamental groupoid of the
// basepoint component within closure_bound morphisms. Diagonal nerves are
// taken to degree k + 1 (at least 2).
OmegaProbeReport omega_spectrum_probe(const SpectrumObject& s, int k = 1, int closure_bound = 4096);

}  // namespace simpcat

#endif  // SIMPCAT_SPECTRA_SPECTRUM_HPP_
