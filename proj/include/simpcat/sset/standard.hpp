// The standard simplicial sets: simplices, boundaries, horns, spheres and points.
#ifndef SIMPCAT_SSET_STANDARD_HPP_
#define SIMPCAT_SSET_STANDARD_HPP_

#include <functional>
#include <string>

#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

enum class StandardKind { Delta, Boundary, Horn, Sphere, Point, TwoPoint };

// Δⁿ, ∂Δⁿ, Λⁿᵢ (horn index i) and Sⁿ = Δⁿ/∂Δⁿ truncated at `bound`. Simplices of
// Δⁿ, ∂Δⁿ and Λⁿᵢ are numbered by the lexicographic order of their vertex
// sequences. Sⁿ and two_point are pointed at vertex 0.
SimplicialSet build_standard(StandardKind kind, int n, int bound, int horn_index = 0);

SimplicialSet delta(int n, int bound);
SimplicialSet boundary(int n, int bound);
SimplicialSet horn(int n, int i, int bound);
SimplicialSet sphere(int n, int bound);
SimplicialSet point(int bound);
SimplicialSet two_point(int bound);

// The subcomplex of Δⁿ of all θ: [k] -> [n] with keep(θ) true; keep must be
// closed under faces and degeneracies. keys[k] lists the θ in id order.
SimplicialSet delta_subcomplex(int n, int bound, const std::function<bool(const ordinal::Map&)>& keep,
                               std::vector<std::vector<ordinal::Map>>* keys = nullptr);

StandardKind parse_standard_kind(const std::string& name);
std::string to_string(StandardKind kind);

}  // namespace simpcat

#endif  // SIMPCAT_SSET_STANDARD_HPP_
