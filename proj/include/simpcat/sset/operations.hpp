// Finite colimits and products of truncated simplicial sets, and the functors
// relating simplicial and bisimplicial sets: box product, diag, d_star, Dec
// and W-bar.
#ifndef SIMPCAT_SSET_OPERATIONS_HPP_
#define SIMPCAT_SSET_OPERATIONS_HPP_

#include <optional>
#include <vector>

#include "simpcat/sset/bisimplicial.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

struct SSetDiagram {
  struct Arrow {
    int from = 0;
    int to = 0;
    SimplicialMap map;
  };
  std::vector<SSetPtr> objects;
  std::vector<Arrow> arrows;
};

struct SSetCocone {
  SSetPtr apex;
  std::vector<SimplicialMap> legs;  // one per diagram object
};

// Degreewise quotient of the coproduct by the relation x ~ f(x). Classes are
// numbered by their least member in (object, id) order. When `basepoint` names
// (object, vertex), the apex is pointed at its class.
SSetCocone colimit_sset(const SSetDiagram& diagram,
                        std::optional<std::pair<int, int>> basepoint = {});
// Pushout of b <- a -> c; legs are (b, c) and the apex.
SSetCocone pushout_sset(const SimplicialMap& f, const SimplicialMap& g,
                        std::optional<std::pair<int, int>> basepoint = {});
SSetCocone coproduct_sset(const std::vector<SSetPtr>& objects);

// Simplex (x, y) of X x Y in degree n has id x * |Y_n| + y.
SimplicialSet product_sset(const SimplicialSet& x, const SimplicialSet& y);
// Projection of product_sset(*x, *y) onto x (which = 0) or y (which = 1).
SimplicialMap product_projection(SSetPtr product, SSetPtr x, SSetPtr y, int which);
// The map (f, g): X x Y -> X' x Y'.
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, SSetPtr source,
                          SSetPtr target);

BisimplicialSet box_product(const SimplicialSet& x, const SimplicialSet& y);

SimplicialSet diag(const BisimplicialSet& b);
SimplicialMap diag(const BisimplicialMap& f, SSetPtr source, SSetPtr target);

// Dec(Y)_{p,q} = Y_{p+q+1} on the staircase of Y's bound.
BisimplicialSet dec(const SimplicialSet& y);
BisimplicialMap dec(const SimplicialMap& f, BisetPtr source, BisetPtr target);

// W-bar up to degree max_degree (default: the largest degree whose
// anti-diagonals and their degeneracy targets lie in the shape).
SimplicialSet wbar(const BisimplicialSet& b, int max_degree = -1);
// The anti-diagonal tuple (x_{0,n}, ..., x_{n,0}) of a W-bar simplex.
std::vector<int> wbar_tuple(const BisimplicialSet& b, const SimplicialSet& w, int n, int id);

// The coend of X_n x Δⁿ_p x Δⁿ_q on the staircase of X's bound.
BisimplicialSet d_star(const SimplicialSet& x);
BisimplicialMap d_star(const SimplicialMap& f, BisetPtr source, BisetPtr target);
// Representative (n, nondegenerate x, α, β) of each simplex of d_star(X) at (p, q).
struct DStarRep {
  int n = 0;
  int x = 0;
  ordinal::Map alpha;
  ordinal::Map beta;
};
// reps[p][q][id], aligned with the simplices of d_star(x).
std::vector<std::vector<std::vector<DStarRep>>> d_star_representatives(const SimplicialSet& x);

// Subcomplex of ∂Δⁿ generated by the faces d_i e with i not a vertex of σ.
SimplicialSet c_sigma(int n, const ordinal::Map& sigma, int bound);

}  // namespace simpcat

#endif  // SIMPCAT_SSET_OPERATIONS_HPP_
