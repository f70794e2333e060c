// Exhaustive audit of the simplicial identities for anything that exposes
// degreewise face and degeneracy tables.
#ifndef SIMPCAT_SSET_IDENTITIES_HPP_
#define SIMPCAT_SSET_IDENTITIES_HPP_

#include <string>
#include <vector>

namespace simpcat {

struct IdentityViolation {
  std::string identity;  // e.g. "d_i d_j = d_{j-1} d_i"
  int degree = 0;        // degree of the simplex the composite is applied to
  int i = 0;
  int j = 0;
  int simplex = 0;

  std::string describe() const;
};

// Size(n), Face(n, i, x) and Degen(n, j, x) describe a truncated simplicial
// object of the given bound. Faces exist for 1 <= n <= bound, degeneracies for
// n < bound. Every identity whose composites stay inside the truncation is
// checked; at most `limit` violations are collected.
template <class Size, class Face, class Degen>
std::vector<IdentityViolation> audit_simplicial_identities(int bound, Size size, Face face,
                                                          Degen degen, std::size_t limit = 16) {
  std::vector<IdentityViolation> out;
  auto report = [&](const char* what, int n, int i, int j, int x) {
    if (out.size() < limit) out.push_back({what, n, i, j, x});
  };
  for (int n = 0; n <= bound; ++n) {
    const int count = size(n);
    for (int x = 0; x < count; ++x) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2) {
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x)))
              report("d_i d_j = d_{j-1} d_i", n, i, j, x);
      }
      if (n < bound) {
        for (int j = 0; j <= n; ++j) {
          const int y = degen(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            int expect;
            if (i < j) {
              if (n == 0) continue;
              expect = degen(n - 1, j - 1, face(n, i, x));
            } else if (i == j || i == j + 1) {
              expect = x;
            } else {
              expect = degen(n - 1, j, face(n, i - 1, x));
            }
            if (face(n + 1, i, y) != expect) report("d_i s_j", n, i, j, x);
          }
        }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= bound) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (degen(n + 1, i, degen(n, j, x)) != degen(n + 1, j + 1, degen(n, i, x)))
              report("s_i s_j = s_{j+1} s_i", n, i, j, x);
      }
    }
  }
  return out;
}

}  // namespace simpcat

#endif  // SIMPCAT_SSET_IDENTITIES_HPP_
