#include "simpcat/scat/levelwise.hpp"

#include "simpcat/cat/operations.hpp"
#include "simpcat/cat/presented.hpp"
#include "simpcat/sset/operations.hpp"

namespace simpcat {

namespace {

struct PiData {
  std::vector<SSetPtr> rows;
  std::vector<MaterializedCategory> groupoids;
  SimplicialCategory category;
};

// A map between rows known only in degrees 0 and 1, which is all π needs.
SimplicialMap low_map(SSetPtr source, SSetPtr target, std::vector<int> vertices, std::vector<int> edges) {
  return {std::move(source), std::move(target), {std::move(vertices), std::move(edges)}};
}

PiData compute_pi(const BisimplicialSet& b, int closure_bound) {
  const BidegreeShape& shape = b.shape();
  int top = -1;
  for (int q = 0; q <= shape.max_q(); ++q)
    if (shape.max_p(q) >= 2) top = q;
  if (top < 0) throw InputError("pi_levelwise: no row holds 2-simplices");
  PiData d;
  std::vector<CategoryPtr> levels;
  for (int q = 0; q <= top; ++q) {
    d.rows.push_back(share(b.horizontal(q)));
    try {
      d.groupoids.push_back(fundamental_groupoid(*d.rows.back(), closure_bound));
    } catch (const BoundExceeded& e) {
      throw BoundExceeded("pi_levelwise: row " + std::to_string(q) + ": " + e.what());
    }
    levels.push_back(share(d.groupoids.back().category));
  }
  auto column = [&](int p, int q, auto op) {
    std::vector<int> out;
    for (int x = 0; x < b.size(p, q); ++x) out.push_back(op(x));
    return out;
  };
  std::vector<std::vector<FunctorMap>> faces(top + 1), degens(top + 1);
  for (int q = 0; q <= top; ++q) {
    for (int i = 0; q >= 1 && i <= q; ++i) {
      auto m = low_map(d.rows[q], d.rows[q - 1], column(0, q, [&](int x) { return b.dv(0, q, i, x); }),
                       column(1, q, [&](int x) { return b.dv(1, q, i, x); }));
      faces[q].push_back(fundamental_groupoid_map(m, d.groupoids[q], d.groupoids[q - 1]));
    }
    for (int j = 0; q < top && j <= q; ++j) {
      auto m = low_map(d.rows[q], d.rows[q + 1], column(0, q, [&](int x) { return b.sv(0, q, j, x); }),
                       column(1, q, [&](int x) { return b.sv(1, q, j, x); }));
      degens[q].push_back(fundamental_groupoid_map(m, d.groupoids[q], d.groupoids[q + 1]));
    }
  }
  std::optional<std::vector<int>> bp;
  if (b.basepoint()) {
    bp.emplace();
    for (int q = 0; q <= top; ++q) bp->push_back(*b.basepoint_at(0, q));
  }
  d.category = SimplicialCategory::build(std::move(levels), std::move(faces), std::move(degens), std::move(bp));
  return d;
}

// iso(C_n) with the original-to-subgroupoid morphism index.
struct IsoLevel {
  Subcategory iso;
  std::vector<int> index;
};

IsoLevel iso_level(const Category& c) {
  IsoLevel l{iso_subgroupoid(c), std::vector<int>(c.morphism_count(), -1)};
  for (std::size_t k = 0; k < l.iso.morphisms.size(); ++k) l.index[l.iso.morphisms[k]] = static_cast<int>(k);
  return l;
}

FunctorMap restrict_to_iso(const FunctorMap& f, const IsoLevel& from, const IsoLevel& to) {
  FunctorMap out{f.objects, {}};
  for (int m : from.iso.morphisms) out.morphisms.push_back(to.index[f.morphisms[m]]);
  return out;
}

}  // namespace

SimplicialCategory pi_levelwise(const BisimplicialSet& b, int closure_bound) {
  return compute_pi(b, closure_bound).category;
}

SimplicialFunctor pi_levelwise_map(const BisimplicialMap& f, SCatPtr source, SCatPtr target, int closure_bound) {
  const PiData from = compute_pi(*f.source, closure_bound);
  const PiData to = compute_pi(*f.target, closure_bound);
  SimplicialFunctor out{source, target, {}};
  for (int q = 0; q <= source->bound(); ++q) {
    auto m = low_map(from.rows[q], to.rows[q], f.image[0][q], f.image[1][q]);
    out.levels.push_back(fundamental_groupoid_map(m, from.groupoids[q], to.groupoids[q]));
  }
  return out;
}

BisimplicialSet nerve_iso_levelwise(const SimplicialCategory& c, const BidegreeShape& requested) {
  std::vector<int> rows = requested.rows();
  if (static_cast<int>(rows.size()) > c.bound() + 1) rows.resize(c.bound() + 1);
  const BidegreeShape shape(rows);
  const int top = shape.max_q();
  std::vector<IsoLevel> iso;
  std::vector<NerveChains> chains;
  for (int n = 0; n <= top; ++n) iso.push_back(iso_level(c.level(n)));
  for (int n = 0; n <= top; ++n) chains.emplace_back(iso[n].iso.category, shape.max_p(n));
  std::vector<std::vector<FunctorMap>> vf(top + 1), vs(top + 1);
  for (int n = 0; n <= top; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) vf[n].push_back(restrict_to_iso(c.face(n, i), iso[n], iso[n - 1]));
    for (int j = 0; n < top && j <= n; ++j) vs[n].push_back(restrict_to_iso(c.degeneracy(n, j), iso[n], iso[n + 1]));
  }
  std::vector<std::vector<BisimplicialSet::Cell>> cells(shape.max_p(0) + 1);
  for (int p = 0; p <= shape.max_p(0); ++p) {
    cells[p].resize(shape.max_q_at(p) + 1);
    for (int n = 0; n <= shape.max_q_at(p); ++n) {
      BisimplicialSet::Cell& cell = cells[p][n];
      const NerveChains& ch = chains[n];
      cell.size = ch.size(p);
      for (int i = 0; p >= 1 && i <= p; ++i) {
        cell.dh.emplace_back();
        for (int x = 0; x < cell.size; ++x) cell.dh.back().push_back(ch.lookup(p - 1, ch.face(p, i, ch.chain(p, x))));
      }
      for (int j = 0; shape.contains(p + 1, n) && j <= p; ++j) {
        cell.sh.emplace_back();
        for (int x = 0; x < cell.size; ++x) cell.sh.back().push_back(ch.lookup(p + 1, ch.degeneracy(p, j, ch.chain(p, x))));
      }
      for (int i = 0; n >= 1 && i <= n; ++i) {
        cell.dv.emplace_back();
        for (int x = 0; x < cell.size; ++x)
          cell.dv.back().push_back(chains[n - 1].lookup(p, NerveChains::map_chain(p, ch.chain(p, x), vf[n][i])));
      }
      for (int j = 0; shape.contains(p, n + 1) && j <= n; ++j) {
        cell.sv.emplace_back();
        for (int x = 0; x < cell.size; ++x)
          cell.sv.back().push_back(chains[n + 1].lookup(p, NerveChains::map_chain(p, ch.chain(p, x), vs[n][j])));
      }
    }
  }
  std::optional<int> bp;
  if (c.pointed()) bp = c.basepoint(0);
  return BisimplicialSet(shape, std::move(cells), bp);
}

BisimplicialSet nerve_iso_levelwise(const SimplicialCategory& c, int d) {
  return nerve_iso_levelwise(c, BidegreeShape::staircase(d));
}

BisimplicialMap nerve_iso_levelwise_map(const SimplicialFunctor& f, BisetPtr source, BisetPtr target) {
  const BidegreeShape& shape = source->shape();
  BisimplicialMap out{source, target, {}};
  out.image.resize(shape.max_p(0) + 1);
  for (int p = 0; p <= shape.max_p(0); ++p) out.image[p].resize(shape.max_q_at(p) + 1);
  for (int n = 0; n <= shape.max_q(); ++n) {
    const IsoLevel from = iso_level(f.source->level(n));
    const IsoLevel to = iso_level(f.target->level(n));
    const FunctorMap g = restrict_to_iso(f.levels.at(n), from, to);
    const NerveChains a(from.iso.category, shape.max_p(n));
    const NerveChains b(to.iso.category, shape.max_p(n));
    for (int p = 0; p <= shape.max_p(n); ++p)
      for (int x = 0; x < a.size(p); ++x) out.image[p][n].push_back(b.lookup(p, NerveChains::map_chain(p, a.chain(p, x), g)));
  }
  return out;
}

SimplicialSet diag_nerve_iso(const SimplicialCategory& c, int n) {
  if (n < 0) n = c.bound();
  if (n > c.bound()) throw InputError("diag_nerve_iso: degree beyond the simplicial category's levels");
  return diag(nerve_iso_levelwise(c, BidegreeShape::rectangle(n, n)));
}

SimplicialMap diag_nerve_iso_map(const SimplicialFunctor& f, SSetPtr source, SSetPtr target) {
  SimplicialMap out{source, target, {}};
  for (int n = 0; n <= source->bound(); ++n) {
    const IsoLevel from = iso_level(f.source->level(n));
    const IsoLevel to = iso_level(f.target->level(n));
    const FunctorMap g = restrict_to_iso(f.levels.at(n), from, to);
    const NerveChains a(from.iso.category, n);
    const NerveChains b(to.iso.category, n);
    out.image.emplace_back();
    for (int x = 0; x < a.size(n); ++x) out.image.back().push_back(b.lookup(n, NerveChains::map_chain(n, a.chain(n, x), g)));
  }
  return out;
}

SimplicialSet wbar_nerve_iso(const SimplicialCategory& c, int n) {
  if (n < 0) n = c.bound();
  if (n > c.bound()) throw InputError("wbar_nerve_iso: degree beyond the simplicial category's levels");
  return wbar(nerve_iso_levelwise(c, BidegreeShape::staircase(n + 1)), n);
}

RhoChoice parse_rho(const std::string& name) {
  if (name == "dstar" || name == "pi_dstar") return RhoChoice::PiDStar;
  if (name == "dec" || name == "pi_dec") return RhoChoice::PiDec;
  throw InputError("unknown rho choice '" + name + "' (expected dstar or dec)");
}

std::string to_string(RhoChoice rho) { return rho == RhoChoice::PiDStar ? "dstar" : "dec"; }

SimplicialCategory rho(const SimplicialSet& x, RhoChoice choice, int closure_bound) {
  return pi_levelwise(choice == RhoChoice::PiDec ? dec(x) : d_star(x), closure_bound);
}

SimplicialFunctor rho_map(const SimplicialMap& f, RhoChoice choice, SCatPtr source, SCatPtr target,
                          int closure_bound) {
  if (choice == RhoChoice::PiDec) {
    auto s = share(dec(*f.source));
    auto t = share(dec(*f.target));
    return pi_levelwise_map(dec(f, s, t), std::move(source), std::move(target), closure_bound);
  }
  auto s = share(d_star(*f.source));
  auto t = share(d_star(*f.target));
  return pi_levelwise_map(d_star(f, s, t), std::move(source), std::move(target), closure_bound);
}

}  // namespace simpcat
