#include "simpcat/sset/bisimplicial.hpp"

#include <sstream>

namespace simpcat {

BidegreeShape::BidegreeShape(std::vector<int> max_p) : max_p_(std::move(max_p)) {
  if (max_p_.empty()) throw InputError("bidegree shape must be non-empty");
  for (std::size_t q = 0; q < max_p_.size(); ++q) {
    if (max_p_[q] < 0) throw InputError("bidegree shape row is empty");
    if (q > 0 && max_p_[q] > max_p_[q - 1]) throw InputError("bidegree shape not downward closed");
  }
}

BidegreeShape BidegreeShape::rectangle(int max_p, int max_q) {
  if (max_p < 0 || max_q < 0) throw InputError("negative rectangle");
  return BidegreeShape(std::vector<int>(max_q + 1, max_p));
}

BidegreeShape BidegreeShape::staircase(int d) {
  if (d < 1) throw InputError("staircase shape needs d >= 1");
  std::vector<int> rows(d);
  for (int q = 0; q < d; ++q) rows[q] = d - 1 - q;
  return BidegreeShape(std::move(rows));
}

int BidegreeShape::max_q_at(int p) const {
  int best = -1;
  for (int q = 0; q <= max_q(); ++q)
    if (max_p_[q] >= p) best = q;
  return best;
}

int BidegreeShape::diagonal_bound() const {
  int n = -1;
  while (contains(n + 1, n + 1)) ++n;
  return n;
}

namespace {

void check_ops(const std::vector<std::vector<int>>& table, std::size_t arity, int size, int target,
               int p, int q, const char* what) {
  std::ostringstream os;
  os << what << " at (" << p << "," << q << ")";
  if (table.size() != arity) throw AuditFailure(os.str() + ": wrong number of operators");
  for (const auto& op : table) {
    if (static_cast<int>(op.size()) != size) throw AuditFailure(os.str() + ": wrong length");
    for (int v : op)
      if (v < 0 || v >= target) throw AuditFailure(os.str() + ": value out of range");
  }
}

}  // namespace

BisimplicialSet::BisimplicialSet(BidegreeShape shape, std::vector<std::vector<Cell>> cells,
                                 std::optional<int> basepoint)
    : shape_(std::move(shape)), cells_(std::move(cells)), basepoint_(basepoint) {
  const int pmax = shape_.max_p(0);
  if (static_cast<int>(cells_.size()) != pmax + 1) throw AuditFailure("cell grid has wrong width");
  for (int p = 0; p <= pmax; ++p) {
    if (static_cast<int>(cells_[p].size()) != shape_.max_q_at(p) + 1)
      throw AuditFailure("cell grid has wrong height");
    for (int q = 0; q <= shape_.max_q_at(p); ++q) {
      const Cell& c = cells_[p][q];
      if (c.size < 0) throw AuditFailure("negative cell size");
      auto arity = [](bool present, int k) { return present ? static_cast<std::size_t>(k) : 0u; };
      check_ops(c.dh, arity(p >= 1, p + 1), c.size, p >= 1 ? cells_[p - 1][q].size : 0, p, q, "dh");
      bool hs = shape_.contains(p + 1, q);
      check_ops(c.sh, arity(hs, p + 1), c.size, hs ? cells_[p + 1][q].size : 0, p, q, "sh");
      check_ops(c.dv, arity(q >= 1, q + 1), c.size, q >= 1 ? cells_[p][q - 1].size : 0, p, q, "dv");
      bool vs = shape_.contains(p, q + 1);
      check_ops(c.sv, arity(vs, q + 1), c.size, vs ? cells_[p][q + 1].size : 0, p, q, "sv");
    }
  }
  if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= cells_[0][0].size))
    throw AuditFailure("basepoint is not a (0,0) simplex");
}

const BisimplicialSet::Cell& BisimplicialSet::cell(int p, int q) const {
  if (!shape_.contains(p, q)) {
    std::ostringstream os;
    os << "bidegree (" << p << "," << q << ") outside the valid shape";
    throw InputError(os.str());
  }
  return cells_[p][q];
}

std::optional<int> BisimplicialSet::basepoint_at(int p, int q) const {
  if (!basepoint_) return std::nullopt;
  int x = *basepoint_;
  for (int k = 0; k < p; ++k) x = sh(k, 0, 0, x);
  for (int k = 0; k < q; ++k) x = sv(p, k, 0, x);
  return x;
}

BisimplicialSet BisimplicialSet::with_basepoint(std::optional<int> v) const {
  BisimplicialSet out = *this;
  if (v && (*v < 0 || *v >= size(0, 0))) throw InputError("basepoint is not a (0,0) simplex");
  out.basepoint_ = v;
  return out;
}

SimplicialSet BisimplicialSet::horizontal(int q) const {
  const int bound = shape_.max_p(q);
  std::vector<int> sizes(bound + 1);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int p = 0; p <= bound; ++p) {
    sizes[p] = cells_[p][q].size;
    faces[p] = cells_[p][q].dh;
    degens[p] = cells_[p][q].sh;
  }
  return SimplicialSet::from_tables(bound, sizes, faces, degens, basepoint_at(0, q));
}

SimplicialSet BisimplicialSet::vertical(int p) const {
  const int bound = shape_.max_q_at(p);
  if (bound < 0) throw InputError("column outside the valid shape");
  std::vector<int> sizes(bound + 1);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int q = 0; q <= bound; ++q) {
    sizes[q] = cells_[p][q].size;
    faces[q] = cells_[p][q].dv;
    degens[q] = cells_[p][q].sv;
  }
  return SimplicialSet::from_tables(bound, sizes, faces, degens, basepoint_at(p, 0));
}

std::vector<std::string> BisimplicialSet::audit(std::size_t limit) const {
  std::vector<std::string> out;
  auto report = [&](std::string s) {
    if (out.size() < limit) out.push_back(std::move(s));
  };
  for (int q = 0; q <= shape_.max_q(); ++q)
    for (const auto& v : horizontal(q).audit(limit))
      report("row " + std::to_string(q) + ": " + v.describe());
  for (int p = 0; p <= shape_.max_p(0); ++p)
    for (const auto& v : vertical(p).audit(limit))
      report("column " + std::to_string(p) + ": " + v.describe());
  auto where = [](const char* what, int p, int q, int i, int j, int x) {
    std::ostringstream os;
    os << what << " fails at (" << p << "," << q << ") i=" << i << " j=" << j << " on " << x;
    return os.str();
  };
  for (int q = 0; q <= shape_.max_q(); ++q) {
    for (int p = 0; p <= shape_.max_p(q); ++p) {
      const bool hs = shape_.contains(p + 1, q);
      const bool vs = shape_.contains(p, q + 1);
      const bool both = shape_.contains(p + 1, q + 1);
      for (int x = 0; x < cells_[p][q].size; ++x) {
        for (int i = 0; i <= p; ++i) {
          for (int j = 0; j <= q; ++j) {
            if (p >= 1 && q >= 1 && dh(p, q - 1, i, dv(p, q, j, x)) != dv(p - 1, q, j, dh(p, q, i, x)))
              report(where("dh dv = dv dh", p, q, i, j, x));
            if (p >= 1 && vs && dh(p, q + 1, i, sv(p, q, j, x)) != sv(p - 1, q, j, dh(p, q, i, x)))
              report(where("dh sv = sv dh", p, q, i, j, x));
            if (hs && q >= 1 && dv(p + 1, q, j, sh(p, q, i, x)) != sh(p, q - 1, i, dv(p, q, j, x)))
              report(where("sh dv = dv sh", p, q, i, j, x));
            if (hs && vs && both &&
                sv(p + 1, q, j, sh(p, q, i, x)) != sh(p, q + 1, i, sv(p, q, j, x)))
              report(where("sh sv = sv sh", p, q, i, j, x));
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::string> BisimplicialMap::audit() const {
  std::vector<std::string> out;
  const BisimplicialSet& a = *source;
  const BisimplicialSet& b = *target;
  const BidegreeShape& sh = a.shape();
  for (int q = 0; q <= sh.max_q(); ++q) {
    for (int p = 0; p <= sh.max_p(q); ++p) {
      if (!b.shape().contains(p, q)) {
        out.push_back("target shape smaller than source shape");
        return out;
      }
      if (static_cast<int>(image.size()) <= p || static_cast<int>(image[p].size()) <= q ||
          static_cast<int>(image[p][q].size()) != a.size(p, q)) {
        out.push_back("image table has wrong shape");
        return out;
      }
    }
  }
  auto at = [&](int p, int q, int x) { return image[p][q][x]; };
  for (int q = 0; q <= sh.max_q(); ++q) {
    for (int p = 0; p <= sh.max_p(q); ++p) {
      for (int x = 0; x < a.size(p, q); ++x) {
        const int y = at(p, q, x);
        if (y < 0 || y >= b.size(p, q)) {
          out.push_back("image out of range");
          return out;
        }
        for (int i = 0; p >= 1 && i <= p; ++i)
          if (at(p - 1, q, a.dh(p, q, i, x)) != b.dh(p, q, i, y)) out.push_back("dh not preserved");
        for (int i = 0; sh.contains(p + 1, q) && i <= p; ++i)
          if (at(p + 1, q, a.sh(p, q, i, x)) != b.sh(p, q, i, y)) out.push_back("sh not preserved");
        for (int i = 0; q >= 1 && i <= q; ++i)
          if (at(p, q - 1, a.dv(p, q, i, x)) != b.dv(p, q, i, y)) out.push_back("dv not preserved");
        for (int i = 0; sh.contains(p, q + 1) && i <= q; ++i)
          if (at(p, q + 1, a.sv(p, q, i, x)) != b.sv(p, q, i, y)) out.push_back("sv not preserved");
        if (out.size() >= 16) return out;
      }
    }
  }
  if (a.basepoint() && b.basepoint() && at(0, 0, *a.basepoint()) != *b.basepoint())
    out.push_back("basepoint not preserved");
  return out;
}

SimplicialMap BisimplicialMap::horizontal(int q, SSetPtr source_row, SSetPtr target_row) const {
  SimplicialMap f{std::move(source_row), std::move(target_row), {}};
  const int bound = f.source->bound();
  f.image.resize(bound + 1);
  for (int p = 0; p <= bound; ++p) f.image[p] = image[p][q];
  return f;
}

}  // namespace simpcat
