#include "simpcat/harness/suites.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simpcat/cat/operations.hpp"
#include "simpcat/cat/presented.hpp"
#include "simpcat/homotopy/fundamental.hpp"
#include "simpcat/homotopy/homology.hpp"
#include "simpcat/homotopy/probe.hpp"
#include "simpcat/scat/colimits.hpp"
#include "simpcat/scat/levelwise.hpp"
#include "simpcat/scat/pointed.hpp"
#include "simpcat/spectra/ktheory.hpp"
#include "simpcat/spectra/spectrum.hpp"
#include "simpcat/sset/maps.hpp"
#include "simpcat/sset/operations.hpp"
#include "simpcat/sset/standard.hpp"
#include "simpcat/union_find.hpp"

namespace simpcat::harness {

namespace {

template <class T>
using Maker = std::function<T()>;

struct NamedScat {
  std::string name;
  Maker<SimplicialCategory> make;
};

SimplicialCategory constant(Category c, int bound, std::optional<int> bp = 0) {
  return SimplicialCategory::constant(share(std::move(c)), bound, bp);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s = "[";
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? ", " : "") + parts[k];
  return s + "]";
}

std::string show(const std::vector<AbelianGroupDescriptor>& hs) {
  std::vector<std::string> parts;
  for (const auto& h : hs) parts.push_back(h.to_string());
  return join(parts);
}

std::string show(const std::vector<int>& xs) {
  std::vector<std::string> parts;
  for (int x : xs) parts.push_back(std::to_string(x));
  return join(parts);
}

CheckOutcome compare(std::string expected, std::string computed) {
  const bool pass = expected == computed;
  return {std::move(expected), std::move(computed), pass};
}

template <class V>
std::string first_witness(const std::vector<V>& v) {
  if (v.empty()) return "0 violations";
  std::string w;
  if constexpr (std::is_same_v<V, IdentityViolation>)
    w = v.front().describe();
  else
    w = v.front();
  return std::to_string(v.size()) + (v.size() >= 4 ? "+" : "") + " violations, first: " + w;
}

// The pointed corpus at the configured bound.
std::vector<NamedScat> pointed_corpus(const HarnessConfig& cfg) {
  const int b = cfg.bound;
  const int cb = cfg.closure_bound;
  const RhoChoice r = cfg.rho;
  return {
      {"terminal", [b] { return terminal_scat(b); }},
      {"s0", [b] { return s0_scat(b); }},
      {"z2", [b] { return constant(cyclic_group(2), b); }},
      {"chaotic3", [b] { return constant(chaotic_category(3), b); }},
      {"ord1", [b] { return constant(ordinal_category(1), b); }},
      {"sigma-s0", [b, r, cb] { return suspend(s0_scat(b), r, 100000, cb); }},
      {"rho-dec-s1", [b, cb] { return rho(sphere(1, b + 3), RhoChoice::PiDec, cb); }},
      {"rho-dstar-d1", [b, cb] { return rho(delta(1, b + 3), RhoChoice::PiDStar, cb).with_basepoint(0); }},
  };
}

// Inclusion between subcomplexes of one Δⁿ, matching vertex sequences.
SimplicialMap vertex_inclusion(SSetPtr x, SSetPtr y) {
  SimplicialMap f{x, y, {}};
  for (int n = 0; n <= x->bound(); ++n) {
    std::map<std::vector<int>, int> index;
    for (int s = 0; s < y->size(n); ++s) index.emplace(y->vertices(n, s), s);
    f.image.emplace_back();
    for (int s = 0; s < x->size(n); ++s) f.image.back().push_back(index.at(x->vertices(n, s)));
  }
  return f;
}

// Zero-padded to the width of `total - 1`, so names sort numerically.
std::string pad(int k, int total) {
  const std::string s = std::to_string(k);
  const std::size_t width = std::to_string(std::max(total - 1, 0)).size();
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> identities(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const std::string prov = "[TRIVIAL: exhaustive audit]";
  auto sset = [&](std::string name, std::string inputs, Maker<SimplicialSet> make) {
    out.push_back({"sset/" + name, std::move(inputs), prov, [make] {
                     return compare("0 violations", first_witness(make().audit(4)));
                   }});
  };
  auto biset = [&](std::string name, std::string inputs, Maker<BisimplicialSet> make) {
    out.push_back({"biset/" + name, std::move(inputs), prov, [make] {
                     return compare("0 violations", first_witness(make().audit(4)));
                   }});
  };
  auto cat = [&](std::string name, std::string inputs, Maker<Category> make) {
    out.push_back({"cat/" + name, std::move(inputs), prov, [make] {
                     return compare("0 violations", first_witness(make().validate(4)));
                   }});
  };
  auto scat = [&](std::string name, std::string inputs, Maker<SimplicialCategory> make) {
    out.push_back({"scat/" + name, std::move(inputs), prov, [make] {
                     return compare("0 violations", first_witness(make().audit(4)));
                   }});
  };
  const int cb = cfg.closure_bound;
  const int b = cfg.bound;

  for (int n = 0; n <= 3; ++n)
    sset("delta-" + std::to_string(n), "Δ^" + std::to_string(n) + " at bound 4", [n] { return delta(n, 4); });
  for (int n = 1; n <= 3; ++n)
    sset("boundary-" + std::to_string(n), "∂Δ^" + std::to_string(n) + " at bound 4", [n] { return boundary(n, 4); });
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      sset("horn-" + std::to_string(n) + "-" + std::to_string(i), "horn (n, i) = (" + std::to_string(n) + ", " +
               std::to_string(i) + ") at bound 4",
           [n, i] { return horn(n, i, 4); });
  for (int n = 1; n <= 2; ++n)
    sset("sphere-" + std::to_string(n), "Δ^n/∂Δ^n, n = " + std::to_string(n) + ", at bound 4",
         [n] { return sphere(n, 4); });
  sset("point", "Δ^0 at bound 4", [] { return point(4); });
  sset("two-point", "S^0 at bound 4", [] { return two_point(4); });
  sset("product-d1-d1", "Δ^1 x Δ^1 at bound 3", [] { return product_sset(delta(1, 3), delta(1, 3)); });
  sset("product-s1-d1", "S^1 x Δ^1 at bound 3", [] { return product_sset(sphere(1, 3), delta(1, 3)); });
  sset("nerve-ord2", "N(0 < 1 < 2) at bound 3", [] { return nerve(ordinal_category(2), 3); });
  sset("nerve-z3", "N(Z/3) at bound 3", [] { return nerve(cyclic_group(3), 3); });
  sset("nerve-iso-ord2", "N(iso(0 < 1 < 2)) at bound 3", [] { return nerve_iso(ordinal_category(2), 3); });
  sset("diag-dstar-boundary-2", "diag d*∂Δ^2 at bound 5", [] { return diag(d_star(boundary(2, 5))); });
  sset("wbar-dec-delta-2", "W-bar Dec Δ^2 at bound 5", [] { return wbar(dec(delta(2, 5))); });
  sset("c-sigma-3-0", "C^σ in ∂Δ^3 for σ = (0)", [] { return c_sigma(3, {0}, 3); });
  for (const auto& c : pointed_corpus(cfg)) {
    auto make = c.make;
    sset("diag-nerve-iso-" + c.name, "diag N iso of " + c.name, [make] { return diag_nerve_iso(make()); });
    sset("wbar-nerve-iso-" + c.name, "W-bar N iso of " + c.name, [make] { return wbar_nerve_iso(make()); });
    biset("nerve-iso-levelwise-" + c.name, "N•iso of " + c.name + " on the square of its bound",
          [make] {
            const auto s = make();
            return nerve_iso_levelwise(s, BidegreeShape::rectangle(s.bound(), s.bound()));
          });
    scat(c.name, c.name + " at bound " + std::to_string(b), make);
  }
  sset("mapping-space-s0-sigma-s0", "Map(S^0, ΣS^0) to degree 2", [b, cb] {
    return mapping_space(two_point(2), suspend(s0_scat(b), RhoChoice::PiDec, 100000, cb), 2).space;
  });

  biset("box-d1-d1", "Δ^1 ⊠ Δ^1 at bound 3", [] { return box_product(delta(1, 3), delta(1, 3)); });
  biset("dec-delta-2", "Dec Δ^2 at bound 5", [] { return dec(delta(2, 5)); });
  biset("dec-sphere-1", "Dec S^1 at bound 5", [] { return dec(sphere(1, 5)); });
  biset("dstar-boundary-2", "d*∂Δ^2 at bound 5", [] { return d_star(boundary(2, 5)); });
  biset("dstar-horn-2-1", "d* of horn (2, 1) at bound 5", [] { return d_star(horn(2, 1, 5)); });

  cat("terminal", "the terminal category", [] { return terminal_category(); });
  cat("discrete-3", "discrete on 3 objects", [] { return discrete_category(3); });
  cat("chaotic-3", "chaotic on 3 objects", [] { return chaotic_category(3); });
  cat("z2", "Z/2", [] { return cyclic_group(2); });
  cat("z3", "Z/3", [] { return cyclic_group(3); });
  cat("ord2", "0 < 1 < 2", [] { return ordinal_category(2); });
  cat("product-z2-chaotic2", "Z/2 x chaotic(2)",
      [] { return product_category(cyclic_group(2), chaotic_category(2)); });
  cat("coproduct-z2-ord1", "Z/2 + (0 < 1)",
      [] { return coproduct_category({share(cyclic_group(2)), share(ordinal_category(1))}); });
  cat("iso-ord2", "iso(0 < 1 < 2)", [] { return iso_subgroupoid(ordinal_category(2)).category; });
  cat("pi-horn-2-1", "π of horn (2, 1)", [cb] { return fundamental_groupoid(horn(2, 1, 3), cb).category; });
  cat("functors-ord1-chaotic2", "Fun(0 < 1, chaotic(2))",
      [] { return functor_category(ordinal_category(1), chaotic_category(2)).category; });
  cat("pushout-chaotic2-z3", "chaotic(2) ⊔_pt Z/3", [] {
    auto pt = share(terminal_category());
    return pushout_cat(pt, share(chaotic_category(2)), share(cyclic_group(3)), {{0}, {0}}, {{0}, {0}}).apex;
  });

  const RhoChoice r = cfg.rho;
  scat("sigma2-s0", "Σ^2 S^0", [b, r, cb] {
    return suspend(suspend(s0_scat(b), r, 100000, cb), r, 100000, cb);
  });
  scat("loop-sigma-s0", "Ω Σ S^0 (cotensor)", [b, r, cb, cap = cfg.cap] {
    return loop(suspend(s0_scat(b), r, 100000, cb), r, cap, cb).category;
  });
  scat("smash-chaotic3-s1", "chaotic(3) ∧ S^1", [b, r, cb] {
    return smash(constant(chaotic_category(3), b), sphere(1, b + 3), r, 100000, cb);
  });
  scat("add-basepoint-ord2", "(0 < 1 < 2)₊", [b] { return add_basepoint(constant(ordinal_category(2), b, std::nullopt)); });
  scat("tensor-z2-d1", "Z/2 x ρΔ^1", [b, r, cb] { return tensor_rho(constant(cyclic_group(2), b), delta(1, b + 3), r, cb); });
  scat("rho-dstar-boundary-2", "π•d*∂Δ^2", [b, cb] { return rho(boundary(2, b + 3), RhoChoice::PiDStar, cb); });
  scat("rho-dec-horn-2-0", "π•Dec of horn (2, 0)", [b, cb] { return rho(horn(2, 0, b + 3), RhoChoice::PiDec, cb); });
  out.push_back({"spectrum/sigma-infinity-s0", "Σ^∞ S^0 of length 3", prov, [b, r] {
                   return compare("0 violations", first_witness(sigma_infinity(s0_scat(b), 3, r).audit(4)));
                 }});
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> c_sigma_suite(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int degree = cfg.degree;
  const int cb = cfg.closure_bound;
  for (int n = 1; n <= 3; ++n) {
    // Nondegenerate simplices of ∂Δⁿ: proper non-empty vertex subsets.
    for (int mask = 1; mask < (1 << (n + 1)) - 1; ++mask) {
      ordinal::Map sigma;
      std::string label;
      for (int v = 0; v <= n; ++v)
        if (mask >> v & 1) {
          sigma.push_back(v);
          label += std::to_string(v);
        }
      out.push_back({"n" + std::to_string(n) + "-sigma-" + label,
                     "C^σ ⊂ ∂Δ^" + std::to_string(n) + ", σ = {" + label + "}",
                     "[DERIVED: every face d_i with i outside σ contains σ, so C^σ is a cone]",
                     [n, sigma, degree, cb] {
                       const SimplicialSet c = c_sigma(n, sigma, degree + 1);
                       const auto h = reduced_homology_up_to(c, degree);
                       const MaterializedCategory pi = fundamental_groupoid(c, cb);
                       auto pt = share(terminal_category());
                       auto target = share(pi.category);
                       const Functor f{pt, target, {{0}, {target->identity(0)}}};
                       const bool point = check_equivalence(f).equivalence();
                       return compare(show(std::vector<AbelianGroupDescriptor>(degree + 1)) + "; π ≃ point",
                                      show(h) + (point ? "; π ≃ point" : "; π not ≃ point"));
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> acyclic_cofibrations(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int degree = cfg.degree;
  const int cb = cfg.closure_bound;
  for (RhoChoice choice : {RhoChoice::PiDStar, RhoChoice::PiDec})
    for (int n = 1; n <= 2; ++n)
      for (int i = 0; i <= n; ++i) {
        const std::string tag = choice == RhoChoice::PiDStar ? "π•d*" : "π•Dec";
        out.push_back({"horn-" + std::to_string(n) + "-" + std::to_string(i) + "-" + to_string(choice),
                       "diag N iso " + tag + " of horn (" + std::to_string(n) + ", " + std::to_string(i) + ") -> Δ^" +
                           std::to_string(n) + ", simplicial bound " + std::to_string(degree + 4),
                       "[DERIVED: horn inclusions are weak equivalences and the functor preserves them]",
                       [n, i, choice, degree, cb] {
                         const int bound = degree + 4;
                         auto h = share(horn(n, i, bound));
                         auto d = share(delta(n, bound));
                         const SimplicialMap j = vertex_inclusion(h, d);
                         auto a = share(rho(*h, choice, cb));
                         auto b = share(rho(*d, choice, cb));
                         const SimplicialFunctor f = rho_map(j, choice, a, b, cb);
                         auto da = share(diag_nerve_iso(*a));
                         auto db = share(diag_nerve_iso(*b));
                         const ProbeVerdict v = weak_equivalence_probe(diag_nerve_iso_map(f, da, db), degree);
                         return compare("ConfirmedUpTo(" + std::to_string(degree) + ")", v.to_string());
                       }});
      }
  return out;
}

// ---------------------------------------------------------------------------

struct PushoutInstance {
  std::string b_name, c_name;
  CategoryPtr a, b, c;
  FunctorMap inclusion, f;
  std::vector<int> subset;
};

std::vector<PushoutInstance> pushout_family(int closure_bound) {
  const std::vector<std::pair<std::string, Category>> bs = {
      {"chaotic2", chaotic_category(2)},
      {"chaotic3", chaotic_category(3)},
      {"chaotic4", chaotic_category(4)},
      {"z2xchaotic2", product_category(cyclic_group(2), chaotic_category(2))},
      {"z2+pt", coproduct_category({share(cyclic_group(2)), share(terminal_category())})},
      {"chaotic2+pt", coproduct_category({share(chaotic_category(2)), share(terminal_category())})},
      {"z3+chaotic2", coproduct_category({share(cyclic_group(3)), share(chaotic_category(2))})},
  };
  const std::vector<std::pair<std::string, Category>> cs = {
      {"terminal", terminal_category()},
      {"z2", cyclic_group(2)},
      {"z3", cyclic_group(3)},
      {"chaotic2", chaotic_category(2)},
      {"discrete2", discrete_category(2)},
      {"z2xchaotic2", product_category(cyclic_group(2), chaotic_category(2))},
  };
  std::vector<PushoutInstance> out;
  for (const auto& [bn, bcat] : bs) {
    auto b = share(bcat);
    const int objs = b->object_count();
    for (int mask = 1; mask < (1 << objs) - 1; ++mask) {
      // Up to symmetry of the chaotic parts, only the least subset of each size matters.
      std::vector<bool> keep_o(objs), keep_m(b->morphism_count());
      std::vector<int> subset;
      for (int o = 0; o < objs; ++o)
        if (mask >> o & 1) {
          keep_o[o] = true;
          subset.push_back(o);
        }
      for (int m = 0; m < b->morphism_count(); ++m) keep_m[m] = keep_o[b->source(m)] && keep_o[b->target(m)];
      Subcategory sub = subcategory(*b, keep_o, keep_m);
      auto a = share(sub.category);
      for (const auto& [cn, ccat] : cs) {
        auto c = share(ccat);
        const auto fs = enumerate_functors(*a, *c);
        // The first and the last functor in enumeration order keep the family small.
        std::vector<FunctorMap> picks;
        if (!fs.empty()) picks.push_back(fs.front());
        if (fs.size() > 1) picks.push_back(fs.back());
        for (const auto& f : picks) {
          try {
            pushout_cat(a, b, c, sub.inclusion(), f, closure_bound);
          } catch (const BoundExceeded&) {
            continue;  // infinite pushout; not a finite instance
          }
          out.push_back({bn, cn, a, b, c, sub.inclusion(), f, subset});
        }
      }
    }
  }
  return out;
}

std::vector<CheckSpec> niso_pushout(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int degree = cfg.degree;
  const int cb = cfg.closure_bound;
  const auto family = pushout_family(cb);
  const int size = static_cast<int>(family.size());
  out.push_back({"family-size", "finite instances generated", "[TRIVIAL: at least 10 instances]", [size] {
                   return CheckOutcome{">= 10", std::to_string(size), size >= 10};
                 }});
  for (int k = 0; k < size; ++k) {
    const PushoutInstance& p = family[k];
    out.push_back({"instance-" + pad(k, size),
                   "A = full on " + show(p.subset) + " of B = " + p.b_name + ", C = " + p.c_name + ", F on objects " +
                       show(p.f.objects),
                   "[DERIVED: homology of the pushout of nerves]", [p, degree, cb] {
                     const int bound = degree + 1;
                     const CatCocone po = pushout_cat(p.a, p.b, p.c, p.inclusion, p.f, cb);
                     const auto computed = homology_up_to(nerve_iso(po.apex, bound), degree);
                     auto na = share(nerve(*p.a, bound));
                     auto nb = share(nerve(*p.b, bound));
                     auto nc = share(nerve(*p.c, bound));
                     const SimplicialMap i = nerve_map(Functor{p.a, p.b, p.inclusion}, na, nb);
                     const SimplicialMap f = nerve_map(Functor{p.a, p.c, p.f}, na, nc);
                     const auto expected = homology_up_to(*pushout_sset(i, f).apex, degree);
                     return compare(show(expected), show(computed));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> diag_wbar(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int degree = cfg.degree;
  const std::string prov = "[DERIVED: homology of W-bar B]";
  auto add = [&](std::string name, std::string inputs, Maker<BisimplicialSet> make) {
    out.push_back({name, std::move(inputs), prov, [make, degree] {
                     const BisimplicialSet b = make();
                     return compare(show(homology_up_to(wbar(b, degree + 1), degree)),
                                    show(homology_up_to(diag(b), degree)));
                   }});
  };
  // Dec and d* live on a staircase; (N, N) needs bound 2N + 1.
  const int sb = 2 * (degree + 1) + 1;
  add("dec-delta-2", "Dec Δ^2", [sb] { return dec(delta(2, sb)); });
  add("dec-boundary-2", "Dec ∂Δ^2", [sb] { return dec(boundary(2, sb)); });
  add("dstar-boundary-2", "d*∂Δ^2", [sb] { return d_star(boundary(2, sb)); });
  add("box-d1-d1", "Δ^1 ⊠ Δ^1", [degree] { return box_product(delta(1, degree + 1), delta(1, degree + 1)); });
  for (const auto& c : pointed_corpus(cfg)) {
    auto make = c.make;
    out.push_back({"nerve-iso-levelwise-" + c.name, "N•iso of " + c.name, prov, [make, degree] {
                     const SimplicialCategory s = make();
                     return compare(show(homology_up_to(wbar_nerve_iso(s, degree + 1), degree)),
                                    show(homology_up_to(diag_nerve_iso(s, degree + 1), degree)));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> unit(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int degree = cfg.degree;
  const int cb = cfg.closure_bound;
  const std::vector<std::pair<std::string, std::function<SimplicialSet(int)>>> ys = {
      {"delta-0", [](int b) { return delta(0, b); }},
      {"delta-1", [](int b) { return delta(1, b); }},
      {"boundary-2", [](int b) { return boundary(2, b); }},
      {"sphere-1", [](int b) { return sphere(1, b); }},
  };
  for (const auto& [name, y] : ys) {
    auto make = y;
    out.push_back({"homology-" + name, "diag N iso π•Dec " + name + " vs " + name, "[DERIVED: homology of Y]",
                   [make, degree, cb] {
                     const SimplicialSet x = make(degree + 4);
                     return compare(show(homology_up_to(x, degree)),
                                    show(homology_up_to(diag_nerve_iso(rho(x, RhoChoice::PiDec, cb)), degree)));
                   }});
  }
  const std::vector<std::pair<std::string, std::function<SimplicialSet(int)>>> xs = {
      {"delta-0", [](int b) { return delta(0, b); }},
      {"delta-1", [](int b) { return delta(1, b); }},
      {"boundary-1", [](int b) { return boundary(1, b); }},
  };
  for (const auto& c : pointed_corpus(cfg))
    for (const auto& [xn, x] : xs)
      for (RhoChoice choice : {RhoChoice::PiDStar, RhoChoice::PiDec}) {
        auto make = c.make;
        auto mx = x;
        const bool dstar = choice == RhoChoice::PiDStar;
        out.push_back({"hom-" + to_string(choice) + "-" + xn + "-" + c.name,
                       std::string("|sCat(") + (dstar ? "π•d*" : "π•Dec") + " " + xn + ", " + c.name + ")| vs |sSet(" +
                           xn + ", " + (dstar ? "diag" : "W-bar") + " N iso " + c.name + ")|",
                       std::string("[DERIVED: simplicial maps into ") + (dstar ? "diag" : "W-bar") + " N iso C]",
                       [make, mx, choice, dstar, cb, cap = cfg.cap] {
                         const SimplicialCategory s = make();
                         const SimplicialSet w = dstar ? diag_nerve_iso(s) : wbar_nerve_iso(s);
                         SFunctorSearch search;
                         search.cap = cap;
                         const auto lhs = count_simplicial_functors(rho(mx(s.bound() + 3), choice, cb), s, search);
                         const auto rhs = count_maps(mx(w.bound()), w);
                         return compare(std::to_string(rhs), std::to_string(lhs));
                       }});
      }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> effective_mono(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int b = cfg.bound;
  const int cb = cfg.closure_bound;
  auto add = [&](std::string name, std::string inputs, Maker<SimplicialFunctor> make) {
    out.push_back({name, std::move(inputs), "[DERIVED: image of the inclusion]", [make, cb] {
                     const SimplicialFunctor i = make();
                     const auto p = pushout_scat(i, i, cb);
                     const auto e = equalizer_scat(p.legs[1], p.legs[2]);
                     std::vector<std::string> want, got;
                     for (int n = 0; n <= i.source->bound(); ++n) {
                       const auto& im = i.levels[n];
                       const auto& eq = e.inclusion.levels[n];
                       std::set<int> io(im.objects.begin(), im.objects.end()), im2(im.morphisms.begin(), im.morphisms.end());
                       std::set<int> eo(eq.objects.begin(), eq.objects.end()), em(eq.morphisms.begin(), eq.morphisms.end());
                       want.push_back(show(std::vector<int>(io.begin(), io.end())) + "/" +
                                      show(std::vector<int>(im2.begin(), im2.end())));
                       got.push_back(show(std::vector<int>(eo.begin(), eo.end())) + "/" +
                                     show(std::vector<int>(em.begin(), em.end())));
                     }
                     std::string g = join(got);
                     const auto audit = e.object->audit(1);
                     if (!audit.empty()) g += "; audit: " + audit.front();
                     return compare(join(want), g);
                   }});
  };
  auto pt = [b] { return share(terminal_scat(b)); };
  add("pt-chaotic3", "basepoint of chaotic(3)", [pt, b] { return basepoint_functor(pt(), share(constant(chaotic_category(3), b))); });
  add("pt-ord1", "basepoint of 0 < 1", [pt, b] { return basepoint_functor(pt(), share(constant(ordinal_category(1), b))); });
  add("pt-sigma-s0", "basepoint of ΣS^0",
      [pt, b, cb] { return basepoint_functor(pt(), share(suspend(s0_scat(b), RhoChoice::PiDec, 100000, cb))); });
  add("ord1-ord2", "0 < 1 as the initial segment of 0 < 1 < 2", [b] {
    auto o1 = share(constant(ordinal_category(1), b, std::nullopt));
    auto o2 = share(constant(ordinal_category(2), b, std::nullopt));
    for (const auto& f : enumerate_functors(o1->level(0), o2->level(0)))
      if (f.objects == std::vector<int>{0, 1}) return SimplicialFunctor{o1, o2, std::vector<FunctorMap>(b + 1, f)};
    throw Error("no initial-segment functor");
  });
  for (RhoChoice choice : {RhoChoice::PiDStar, RhoChoice::PiDec})
    add("rho-" + to_string(choice) + "-vertex-interval", "ρ(Δ^0 -> Δ^1) at vertex 0", [b, choice, cb] {
      auto v = share(delta(0, b + 3));
      auto iv = share(delta(1, b + 3));
      auto a = share(rho(*v, choice, cb));
      auto t = share(rho(*iv, choice, cb));
      return rho_map(vertex_inclusion(v, iv), choice, a, t, cb);
    });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> suspension_ladder(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int degree = cfg.degree;
  const int b = std::max(cfg.bound, degree + 1);
  const int cb = cfg.closure_bound;
  const RhoChoice r = cfg.rho;
  for (int n = 0; n <= degree; ++n)
    out.push_back({"sigma-" + std::to_string(n), "reduced homology of Σ^" + std::to_string(n) + " S^0",
                   "[DERIVED: the n-sphere]", [n, b, degree, r, cb] {
                     SimplicialCategory s = s0_scat(b);
                     for (int k = 0; k < n; ++k) s = suspend(s, r, 100000, cb);
                     std::vector<AbelianGroupDescriptor> want(degree + 1);
                     want[n] = AbelianGroupDescriptor::free(1);
                     return compare(show(want), show(reduced_homology_up_to(diag_nerve_iso(s, degree + 1), degree)));
                   }});
  for (const auto& c : pointed_corpus(cfg)) {
    auto make = c.make;
    out.push_back({"unit-" + c.name, c.name + " ∧ S^0 vs " + c.name, "[TRIVIAL: unit law, isomorphism search]",
                   [make, r, cb, cap = cfg.cap] {
                     const SimplicialCategory s = make();
                     const SimplicialCategory sm = smash(s, two_point(s.bound() + 3), r, 100000, cb);
                     return compare("isomorphic", isomorphic(sm, s, cap) ? "isomorphic" : "not isomorphic");
                   }});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> mapping_space_suite(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int degree = cfg.degree;
  for (const auto& c : pointed_corpus(cfg)) {
    auto make = c.make;
    out.push_back({"s0-" + c.name, "evaluation Map(S^0, " + c.name + ") -> diag N iso " + c.name,
                   "[DERIVED: sizes of diag N iso C]", [make, degree, cap = cfg.cap] {
                     const SimplicialCategory s = make();
                     const int n = std::min(degree, s.bound());
                     const MappingSpace m = mapping_space(two_point(n), s, n, cap);
                     const SimplicialMap ev = evaluate_s0(m);
                     std::string got = show(m.space.sizes());
                     if (!ev.audit().empty()) got += "; evaluation not simplicial";
                     for (int k = 0; k <= n; ++k) {
                       std::set<int> hit(ev.image[k].begin(), ev.image[k].end());
                       if (static_cast<int>(hit.size()) != m.target->size(k) || m.space.size(k) != m.target->size(k))
                         got += "; degree " + std::to_string(k) + " not bijective";
                     }
                     std::vector<int> want(m.target->sizes().begin(), m.target->sizes().begin() + n + 1);
                     return compare(show(want), got);
                   }});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> k_theory(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  auto z2 = [] { return k_groups(constant(cyclic_group(2), 4), 3); };
  auto s0 = [b = cfg.bound] { return k_groups(s0_scat(b), 1); };
  out.push_back({"z2-k0", "K_0 of the one-object groupoid Z/2 at bound 4", "[DERIVED: BZ/2 is connected]",
                 [z2] { return compare("1 component", std::to_string(z2().components) + " component" + ""); }});
  out.push_back({"z2-k1", "K_1 of Z/2", "[DERIVED: π_1 BZ/2 = Z/2]", [z2] {
                   const auto r = z2();
                   return compare("Z/2, agrees with H_1", r.pi1_abelian.to_string() +
                                                               (r.consistent() ? ", agrees with H_1" : ", differs from H_1"));
                 }});
  out.push_back({"z2-h3", "H_3 of diag N iso Z/2 at bound 4", "[DERIVED: H_3(BZ/2) = Z/2]", [z2] {
                   const auto r = z2();
                   return compare("Z/2", r.higher_homology.size() >= 2 ? r.higher_homology[1].to_string() : "missing");
                 }});
  out.push_back({"s0-k0", "K_0 of S^0", "[DERIVED: two discrete points]",
                 [s0] { return compare("2 components", std::to_string(s0().components) + " components"); }});
  out.push_back({"s0-k1", "K_1 of S^0 at the basepoint", "[DERIVED: a point has trivial π_1]", [s0] {
                   const auto r = s0();
                   return compare("0", r.pi1_abelian.to_string());
                 }});
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> omega_probe(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int b = cfg.bound;
  const int cb = cfg.closure_bound;
  const RhoChoice r = cfg.rho;
  const int k = std::max(1, cfg.degree - 1);
  out.push_back({"sigma-infinity-s0-level-0", "Σ^∞ S^0 of length 2",
                 "[DERIVED: π_0 S^0 has 2 points, Ω Σ S^0 has infinitely many loop classes]", [b, r, k, cb] {
                   const auto rep = omega_spectrum_probe(sigma_infinity(s0_scat(b), 2, r), k, std::min(cb, 256));
                   return compare("Refuted", to_string(rep.levels.at(0).kind));
                 }});
  out.push_back({"terminal", "terminal spectrum of length 3", "[TRIVIAL: every level is a point]", [b, r, k, cb] {
                   const auto rep = omega_spectrum_probe(sigma_infinity(terminal_scat(b), 3, r), k, cb);
                   std::vector<std::string> got;
                   for (const auto& l : rep.levels) got.push_back(to_string(l.kind));
                   return compare(join({"Confirmed", "Confirmed"}), join(got));
                 }});
  return out;
}

// ---------------------------------------------------------------------------

struct Chain {
  std::string name;
  std::vector<SCatPtr> objects;
  std::vector<SimplicialFunctor> inclusions;  // objects[k] -> objects[k + 1]
};

Chain constant_chain(const std::string& name, const std::function<Category(int)>& make, int length, int bound) {
  Chain c{name, {}, {}};
  for (int k = 0; k < length; ++k) c.objects.push_back(share(constant(make(k), bound, std::nullopt)));
  for (int k = 0; k + 1 < length; ++k) {
    const Category& a = c.objects[k]->level(0);
    const Category& b = c.objects[k + 1]->level(0);
    // Identity on object numbers; morphisms matched by endpoints.
    FunctorMap f;
    for (int o = 0; o < a.object_count(); ++o) f.objects.push_back(o);
    for (int m = 0; m < a.morphism_count(); ++m) {
      const auto hom = b.hom(a.source(m), a.target(m));
      f.morphisms.push_back(hom.at(0));
    }
    c.inclusions.push_back(SimplicialFunctor{c.objects[k], c.objects[k + 1], std::vector<FunctorMap>(bound + 1, f)});
  }
  return c;
}

Chain rho_chain(int length, int bound, int cb) {
  Chain c{"rho-dstar-simplices", {}, {}};
  std::vector<SSetPtr> xs;
  for (int k = 0; k < length; ++k) {
    xs.push_back(share(delta(k, bound + 3)));
    c.objects.push_back(share(rho(*xs.back(), RhoChoice::PiDStar, cb)));
  }
  for (int k = 0; k + 1 < length; ++k)
    c.inclusions.push_back(rho_map(vertex_inclusion(xs[k], xs[k + 1]), RhoChoice::PiDStar, c.objects[k],
                                   c.objects[k + 1], cb));
  return c;
}

// |colim_k sCat(A, C_k)| as a quotient of the disjoint union of the hom sets.
std::uint64_t colimit_of_counts(const SimplicialCategory& a, const Chain& chain, std::uint64_t cap) {
  std::vector<std::vector<std::vector<FunctorMap>>> homs(chain.objects.size());
  std::vector<std::map<std::vector<FunctorMap>, int>> index(chain.objects.size());
  std::vector<int> offset;
  int total = 0;
  SFunctorSearch search;
  search.cap = cap;
  for (std::size_t k = 0; k < chain.objects.size(); ++k) {
    offset.push_back(total);
    for_each_simplicial_functor(a, *chain.objects[k], search, [&](const std::vector<FunctorMap>& f) {
      index[k].emplace(f, static_cast<int>(homs[k].size()));
      homs[k].push_back(f);
    });
    total += static_cast<int>(homs[k].size());
  }
  UnionFind uf(total);
  for (std::size_t k = 0; k + 1 < chain.objects.size(); ++k)
    for (std::size_t h = 0; h < homs[k].size(); ++h) {
      std::vector<FunctorMap> pushed;
      for (int n = 0; n <= a.bound(); ++n) pushed.push_back(compose_maps(chain.inclusions[k].levels[n], homs[k][h][n]));
      uf.unite(offset[k] + static_cast<int>(h), offset[k + 1] + index[k + 1].at(pushed));
    }
  std::set<int> classes;
  for (int x = 0; x < total; ++x) classes.insert(uf.find(x));
  return classes.size();
}

std::vector<CheckSpec> directed_colimit(const HarnessConfig& cfg) {
  std::vector<CheckSpec> out;
  const int cb = cfg.closure_bound;
  // Sources πd*Δⁿ have levels 0 .. bound - 3 of Δⁿ's simplicial bound.
  const int bound = std::max(1, cfg.bound - 1);
  struct Family {
    std::string name;
    std::function<Chain()> make;
    int max_n;  // hom sets out of πd*Δ² into chaotic or ρ targets run to millions of functors
  };
  const std::vector<Family> chains = {
      {"ordinals", [bound] { return constant_chain("ordinals", [](int k) { return ordinal_category(k); }, 4, bound); }, 2},
      {"discrete", [bound] { return constant_chain("discrete", [](int k) { return discrete_category(k + 1); }, 4, bound); }, 2},
      {"chaotic", [bound] { return constant_chain("chaotic", [](int k) { return chaotic_category(k + 1); }, 4, bound); }, 1},
      {"rho-dstar-simplices", [bound, cb] { return rho_chain(4, bound, cb); }, 1},
  };
  for (const auto& fam : chains)
    for (int n = 0; n <= fam.max_n; ++n) {
      auto make = fam.make;
      out.push_back({"chain-" + fam.name + "-n" + std::to_string(n),
                     "|sCat(πd*Δ^" + std::to_string(n) + ", colim)| along a chain of 4 " + fam.name,
                     "[DERIVED: colimit of the hom sets along the chain]", [make, n, bound, cb, cap = cfg.cap] {
                       const Chain chain = make();
                       SCatDiagram d;
                       d.objects = chain.objects;
                       for (std::size_t k = 0; k < chain.inclusions.size(); ++k)
                         d.arrows.push_back({static_cast<int>(k), static_cast<int>(k + 1), chain.inclusions[k]});
                       const SCatCocone colim = colimit_scat(d, cb);
                       const SimplicialCategory a = rho(delta(n, bound + 3), RhoChoice::PiDStar, cb);
                       SFunctorSearch search;
                       search.cap = cap;
                       const auto direct = count_simplicial_functors(a, *colim.apex, search);
                       return compare(std::to_string(colimit_of_counts(a, chain, cap)), std::to_string(direct));
                     }});
    }
  return out;
}

struct SuiteEntry {
  std::string name;
  std::string claim;
  std::function<std::vector<CheckSpec>(const HarnessConfig&)> make;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = {
      {"identities", "constructed objects satisfy the simplicial identities and category axioms", identities},
      {"c-sigma-contractibility", "C^σ -> * is a weak equivalence", c_sigma_suite},
      {"acyclic-cofibrations", "π•(horn inclusion) is a weak equivalence", acyclic_cofibrations},
      {"niso-pushout", "N iso of a groupoid pushout along a full inclusion is homotopy cocartesian", niso_pushout},
      {"diag-wbar", "diag and W-bar of a bisimplicial set have the same homology", diag_wbar},
      {"unit", "the unit of the π•Dec adjunction is a weak equivalence; hom sets correspond", unit},
      {"effective-mono", "levelwise inclusions are effective monomorphisms", effective_mono},
      {"suspension-ladder", "Σ^n S^0 is a simplicial model of the n-sphere; S^0 is the smash unit",
       suspension_ladder},
      {"mapping-space", "Map(S^0, C) is degreewise isomorphic to diag N iso C", mapping_space_suite},
      {"k-theory", "K-groups of small examples", k_theory},
      {"omega-probe", "Σ^∞ S^0 is not an Ω-spectrum; the terminal spectrum is", omega_probe},
      {"directed-colimit", "hom out of πd*Δ^n commutes with colimits of chains of inclusions", directed_colimit},
  };
  return suites;
}

const SuiteEntry& lookup(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::string suite_claim(const std::string& name) { return lookup(name).claim; }

std::vector<CheckSpec> suite_checks(const std::string& name, const HarnessConfig& config) {
  return lookup(name).make(config);
}

}  // namespace simpcat::harness
