#include "simpcat/sset/simplicial_set.hpp"

#include <sstream>

namespace simpcat {

namespace {

void check_table(const std::vector<std::vector<int>>& table, std::size_t arity, int size,
                 int target_size, int n, const char* what) {
  if (table.size() != arity) {
    std::ostringstream os;
    os << what << " table at degree " << n << " has " << table.size() << " maps, expected "
       << arity;
    throw AuditFailure(os.str());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (static_cast<int>(table[i].size()) != size) {
      std::ostringstream os;
      os << what << "_" << i << " at degree " << n << " has wrong length";
      throw AuditFailure(os.str());
    }
    for (int v : table[i]) {
      if (v < 0 || v >= target_size) {
        std::ostringstream os;
        os << what << "_" << i << " at degree " << n << " maps outside the target (" << v << ")";
        throw AuditFailure(os.str());
      }
    }
  }
}

}  // namespace

SimplicialSet SimplicialSet::from_tables(int bound, std::vector<int> sizes, FaceTable faces,
                                         FaceTable degeneracies, std::optional<int> basepoint) {
  if (bound < 0) throw AuditFailure("negative bound");
  if (static_cast<int>(sizes.size()) != bound + 1)
    throw AuditFailure("size list does not match the bound");
  faces.resize(bound + 1);
  degeneracies.resize(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    if (sizes[n] < 0) throw AuditFailure("negative simplex count");
    if (n > 0) check_table(faces[n], n + 1, sizes[n], sizes[n - 1], n, "d");
    else if (!faces[0].empty()) throw AuditFailure("faces given in degree 0");
    if (n < bound) check_table(degeneracies[n], n + 1, sizes[n], sizes[n + 1], n, "s");
    else if (!degeneracies[n].empty()) throw AuditFailure("degeneracies given in the top degree");
  }
  if (basepoint && (*basepoint < 0 || *basepoint >= sizes[0]))
    throw AuditFailure("basepoint is not a vertex");
  SimplicialSet x;
  x.bound_ = bound;
  x.sizes_ = std::move(sizes);
  x.faces_ = std::move(faces);
  x.degens_ = std::move(degeneracies);
  x.basepoint_ = basepoint;
  x.compute_ez();
  return x;
}

void SimplicialSet::compute_ez() {
  ez_.assign(bound_ + 1, {});
  nondegenerate_.assign(bound_ + 1, {});
  for (int n = 0; n <= bound_; ++n) {
    ez_[n].resize(sizes_[n]);
    for (int x = 0; x < sizes_[n]; ++x) {
      int split = -1;
      for (int j = n - 1; j >= 0; --j) {
        if (degens_[n - 1][j][faces_[n][j][x]] == x) {
          split = j;
          break;
        }
      }
      if (split < 0) {
        ez_[n][x] = {x, {}};
        nondegenerate_[n].push_back(x);
        continue;
      }
      const EzForm& below = ez_[n - 1][faces_[n][split][x]];
      EzForm form{below.base, {split}};
      form.degeneracy_word.insert(form.degeneracy_word.end(), below.degeneracy_word.begin(),
                                  below.degeneracy_word.end());
      ez_[n][x] = std::move(form);
    }
  }
}

int SimplicialSet::dimension() const {
  for (int n = bound_; n >= 0; --n)
    if (!nondegenerate_[n].empty()) return n;
  return -1;
}

SimplicialSet SimplicialSet::with_basepoint(std::optional<int> v) const {
  if (v && (*v < 0 || *v >= sizes_[0])) throw InputError("basepoint is not a vertex");
  SimplicialSet out = *this;
  out.basepoint_ = v;
  return out;
}

int SimplicialSet::act(int m, int x, const ordinal::Map& theta) const {
  const int n = ordinal::dim(theta);
  if (n < 0 || n > bound_ || m > bound_) throw InputError("act: degree outside the truncation");
  const ordinal::EpiMono em = ordinal::factor(theta);
  int k = m;
  int y = x;
  for (int i : ordinal::missed_descending(em.mono, m)) y = faces_[k--][i][y];
  for (int j : ordinal::repeat_positions(em.epi)) y = degens_[k++][j][y];
  return y;
}

int SimplicialSet::apply_degeneracies(int n, int x, const std::vector<int>& word) const {
  int k = n;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = degens_[k++][*it][x];
  return x;
}

std::vector<int> SimplicialSet::vertices(int n, int x) const {
  std::vector<int> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = act(n, x, ordinal::Map{k});
  return out;
}

std::vector<IdentityViolation> SimplicialSet::audit(std::size_t limit) const {
  return audit_simplicial_identities(
      bound_, [this](int n) { return sizes_[n]; },
      [this](int n, int i, int x) { return faces_[n][i][x]; },
      [this](int n, int j, int x) { return degens_[n][j][x]; }, limit);
}

std::vector<std::string> SimplicialMap::audit() const {
  std::vector<std::string> out;
  const SimplicialSet& x = *source;
  const SimplicialSet& y = *target;
  if (y.bound() < x.bound()) {
    out.push_back("target truncated below source");
    return out;
  }
  if (static_cast<int>(image.size()) != x.bound() + 1) {
    out.push_back("image table has wrong number of degrees");
    return out;
  }
  for (int n = 0; n <= x.bound(); ++n) {
    if (static_cast<int>(image[n].size()) != x.size(n)) {
      out.push_back("image table has wrong length at degree " + std::to_string(n));
      return out;
    }
    for (int v : image[n])
      if (v < 0 || v >= y.size(n)) {
        out.push_back("image outside target at degree " + std::to_string(n));
        return out;
      }
  }
  for (int n = 0; n <= x.bound(); ++n) {
    for (int s = 0; s < x.size(n); ++s) {
      if (n > 0)
        for (int i = 0; i <= n; ++i)
          if (image[n - 1][x.face(n, i, s)] != y.face(n, i, image[n][s]))
            out.push_back("fails to commute with d_" + std::to_string(i) + " at degree " +
                          std::to_string(n) + " on simplex " + std::to_string(s));
      if (n < x.bound())
        for (int j = 0; j <= n; ++j)
          if (image[n + 1][x.degeneracy(n, j, s)] != y.degeneracy(n, j, image[n][s]))
            out.push_back("fails to commute with s_" + std::to_string(j) + " at degree " +
                          std::to_string(n) + " on simplex " + std::to_string(s));
      if (out.size() >= 16) return out;
    }
  }
  if (x.basepoint() && y.basepoint() && image[0][*x.basepoint()] != *y.basepoint())
    out.push_back("basepoint not preserved");
  return out;
}

SimplicialMap SimplicialMap::identity(SSetPtr x) {
  SimplicialMap f{x, x, {}};
  f.image.resize(x->bound() + 1);
  for (int n = 0; n <= x->bound(); ++n) {
    f.image[n].resize(x->size(n));
    for (int s = 0; s < x->size(n); ++s) f.image[n][s] = s;
  }
  return f;
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target.get() != g.source.get() && !(*f.target == *g.source))
    throw InputError("compose: maps are not composable");
  SimplicialMap h{f.source, g.target, {}};
  h.image.resize(f.image.size());
  for (std::size_t n = 0; n < f.image.size(); ++n) {
    h.image[n].resize(f.image[n].size());
    for (std::size_t s = 0; s < f.image[n].size(); ++s) h.image[n][s] = g.image[n][f.image[n][s]];
  }
  return h;
}

}  // namespace simpcat
