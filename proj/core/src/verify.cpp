#include "bicyclic/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "bicyclic/endo_monoid.hpp"
#include "bicyclic/enumeration.hpp"
#include "bicyclic/green.hpp"
#include "bicyclic/monoid.hpp"

namespace bicyclic {

namespace {

constexpr std::array<std::string_view, 12> kSuites = {
    "semigroup_axioms", "inverse_axioms",    "order",       "endo_homomorphism",
    "endo_injectivity", "composition_table", "idempotents", "cancellative",
    "ideal",            "green_agreement",   "classification_negative",
    "growth_inequalities",
};

constexpr std::array<InvariantOwner, 25> kRegistry = {{
    {"core_semigroup", "associativity", "semigroup_axioms"},
    {"core_semigroup", "branch_agreement", "semigroup_axioms"},
    {"core_semigroup", "identity", "semigroup_axioms"},
    {"core_semigroup", "single_set_projection", "semigroup_axioms"},
    {"core_semigroup", "inverse_axioms", "inverse_axioms"},
    {"core_semigroup", "idempotent_characterization", "inverse_axioms"},
    {"core_semigroup", "order_sanity", "order"},
    {"endomorphisms", "homomorphism", "endo_homomorphism"},
    {"endomorphisms", "monoid_endomorphism", "endo_homomorphism"},
    {"endomorphisms", "level0_agreement", "endo_homomorphism"},
    {"endomorphisms", "fixed_point_rigidity", "endo_homomorphism"},
    {"endomorphisms", "injectivity", "endo_injectivity"},
    {"endomorphisms", "composition_soundness", "composition_table"},
    {"endomorphisms", "parameter_closure", "composition_table"},
    {"endomorphisms", "unique_self_square", "idempotents"},
    {"endomorphisms", "out_of_range_rejected", "classification_negative"},
    {"endomorphisms", "growth_iff_rate_equals_k", "growth_inequalities"},
    {"endo_monoid_green", "s_alpha_cancellative", "cancellative"},
    {"endo_monoid_green", "s_beta_ideal", "ideal"},
    {"endo_monoid_green", "beta_absorption", "ideal"},
    {"endo_monoid_green", "unique_idempotent", "idempotents"},
    {"endo_monoid_green", "oracle_agreement", "green_agreement"},
    {"endo_monoid_green", "green_containments", "green_agreement"},
    {"endo_monoid_green", "mixed_variant_separation", "green_agreement"},
    {"endo_monoid_green", "trivial_equation_solutions", "green_agreement"},
}};

// Counts cases and records failures; failure text is built lazily.
class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  template <class Describe>
  bool check(bool ok, Describe&& describe) {
    ++report_.cases_run;
    if (ok) return true;
    ++report_.failure_count;
    if (report_.failures.size() < kMaxRecordedFailures) report_.failures.push_back(describe());
    return false;
  }

  void witness(std::string w) { report_.witnesses.push_back(std::move(w)); }

 private:
  VerifyReport& report_;
};

std::string s(bool b) { return b ? "true" : "false"; }
std::string pair_str(const Elem& x, const Elem& y) { return to_string(x) + " " + to_string(y); }

Int need(const std::optional<Int>& v) { return v.value(); }

// ---------------------------------------------------------------- semigroup

void semigroup_axioms(const SuiteBounds& b, Recorder& rec) {
  const BicyclicExtension m;
  const auto elems = Truncation(need(b.bound)).elements();
  const std::size_t n = elems.size();

  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = m.mul(elems[x], elems[y]);
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem& xy = table[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        const Elem lhs = m.mul(xy, elems[z]);
        const Elem rhs = m.mul(elems[x], table[y * n + z]);
        rec.check(lhs == rhs, [&] {
          return Failure{"associativity " + to_string(elems[x]) + " " + to_string(elems[y]) +
                             " " + to_string(elems[z]),
                         to_string(lhs), to_string(rhs)};
        });
      }
    }
  }
  rec.witness("associativity triples=" + std::to_string(n * n * n));

  for (const Elem& x : elems) {
    for (const Elem& y : elems) {
      if (x.j != y.i) continue;
      const Elem le = product_when_le(x, y);
      const Elem ge = product_when_ge(x, y);
      rec.check(le == ge, [&] {
        return Failure{"branch agreement " + pair_str(x, y), to_string(le), to_string(ge)};
      });
    }
  }

  const Elem one = m.identity();
  for (const Elem& x : elems) {
    rec.check(m.mul(one, x) == x && m.mul(x, one) == x, [&] {
      return Failure{"identity " + to_string(x), to_string(x),
                     to_string(m.mul(one, x)) + " " + to_string(m.mul(x, one))};
    });
  }

  const BicyclicExtension single(Family({0}));
  const auto level0 = Truncation(need(b.bound), single.family()).elements();
  for (const Elem& x : level0) {
    for (const Elem& y : level0) {
      const Elem got = single.mul(x, y);
      const BicyclicPair want = mul_bicyclic({x.i, x.j}, {y.i, y.j});
      rec.check(got.i == want.i && got.j == want.j && got.base() == 0, [&] {
        return Failure{"single-set projection " + pair_str(x, y),
                       "(" + std::to_string(want.i) + "," + std::to_string(want.j) + ",0)",
                       to_string(got)};
      });
    }
  }
}

void inverse_axioms(const SuiteBounds& b, Recorder& rec) {
  const BicyclicExtension m;
  const auto elems = Truncation(need(b.bound)).elements();

  for (const Elem& x : elems) {
    const Elem inv = m.inverse(x);
    const Elem xix = m.mul(m.mul(x, inv), x);
    const Elem ixi = m.mul(m.mul(inv, x), inv);
    rec.check(xix == x, [&] { return Failure{"x x^-1 x " + to_string(x), to_string(x), to_string(xix)}; });
    rec.check(ixi == inv, [&] {
      return Failure{"x^-1 x x^-1 " + to_string(x), to_string(inv), to_string(ixi)};
    });
    rec.check(m.inverse(inv) == x, [&] {
      return Failure{"(x^-1)^-1 " + to_string(x), to_string(x), to_string(m.inverse(inv))};
    });
    const bool idem = m.is_idempotent(x);
    rec.check(idem == (x.i == x.j), [&] {
      return Failure{"idempotent iff i == j " + to_string(x), s(x.i == x.j), s(idem)};
    });
  }

  // Uniqueness of the inverse within the truncation.
  for (const Elem& x : elems) {
    for (const Elem& y : elems) {
      const bool inverse_pair = m.mul(m.mul(x, y), x) == x && m.mul(m.mul(y, x), y) == y;
      rec.check(inverse_pair == (y == m.inverse(x)), [&] {
        return Failure{"unique inverse " + pair_str(x, y), s(y == m.inverse(x)), s(inverse_pair)};
      });
    }
  }

  std::vector<Elem> idempotents;
  for (const Elem& x : elems) {
    if (m.is_idempotent(x)) idempotents.push_back(x);
  }
  for (const Elem& e : idempotents) {
    for (const Elem& f : idempotents) {
      const Elem ef = m.mul(e, f);
      const Elem fe = m.mul(f, e);
      rec.check(ef == fe && m.is_idempotent(ef), [&] {
        return Failure{"idempotents commute " + pair_str(e, f), to_string(ef), to_string(fe)};
      });
    }
  }
}

void order(const SuiteBounds& b, Recorder& rec) {
  const BicyclicExtension m;
  const Int bound = need(b.bound);
  const auto elems = Truncation(bound).elements();
  const std::size_t n = elems.size();

  std::vector<char> leq(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = m.leq_natural(elems[x], elems[y]);
  }

  for (std::size_t x = 0; x < n; ++x) {
    rec.check(leq[x * n + x], [&] { return Failure{"reflexive " + to_string(elems[x]), "true", "false"}; });
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) {
        rec.check(!(leq[x * n + y] && leq[y * n + x]), [&] {
          return Failure{"antisymmetric " + pair_str(elems[x], elems[y]), "not both", "both"};
        });
      }
      if (!leq[x * n + y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq[y * n + z]) continue;
        rec.check(leq[x * n + z], [&] {
          return Failure{"transitive " + pair_str(elems[x], elems[y]) + " " + to_string(elems[z]),
                         "true", "false"};
        });
      }
    }
  }

  // On idempotents the order is e <= f iff ef = fe = e.
  for (const Elem& e : elems) {
    if (e.i != e.j) continue;
    for (const Elem& f : elems) {
      if (f.i != f.j) continue;
      const bool semilattice = m.mul(e, f) == e && m.mul(f, e) == e;
      const bool natural = m.leq_natural(e, f);
      rec.check(semilattice == natural, [&] {
        return Failure{"idempotent order " + pair_str(e, f), s(semilattice), s(natural)};
      });
    }
  }

  for (Int k = 0; k <= bound; ++k) {
    for (Int p = 0; p <= bound; ++p) {
      const Elem lo(k, k, 0), hi(p, p, 1);
      const bool got = m.leq_natural(lo, hi);
      rec.check(got == (p <= k - 1), [&] {
        return Failure{"(k,k,[0)) <= (p,p,[1)) " + pair_str(lo, hi), s(p <= k - 1), s(got)};
      });
    }
  }

  for (Int t = 0; t + 1 <= bound; ++t) {
    const Elem a(t + 1, t + 1, 1), mid(t + 1, t + 1, 0), c(t, t, 1);
    const bool ok = m.leq_natural(a, mid) && m.leq_natural(mid, c);
    rec.check(ok, [&] {
      return Failure{"chain " + to_string(a) + " <= " + to_string(mid) + " <= " + to_string(c),
                     "true", "false"};
    });
  }
}

// ---------------------------------------------------------- endomorphisms

void endo_homomorphism(const SuiteBounds& b, Recorder& rec) {
  const BicyclicExtension m;
  const auto elems = Truncation(need(b.bound)).elements();
  const auto endos = enumerate_endos(need(b.kmax));
  const std::size_t n = elems.size();

  std::vector<Elem> products(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) products[x * n + y] = m.mul(elems[x], elems[y]);
  }

  for (const InjEndo& e : endos) {
    std::vector<Elem> images;
    images.reserve(n);
    for (const Elem& x : elems) images.push_back(apply(e, x));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Elem lhs = apply(e, products[x * n + y]);
        const Elem rhs = m.mul(images[x], images[y]);
        rec.check(lhs == rhs, [&] {
          return Failure{"homomorphism " + to_string(e) + " " + pair_str(elems[x], elems[y]),
                         to_string(lhs), to_string(rhs)};
        });
      }
    }
    const Elem one_image = apply(e, m.identity());
    rec.check(one_image == m.identity(), [&] {
      return Failure{"fixes identity " + to_string(e), "(0,0,0)", to_string(one_image)};
    });
  }

  for (const InjEndo& e : endos) {
    if (!e.is_beta()) continue;
    const InjEndo a = make_alpha(e.k(), e.p());
    for (const Elem& x : elems) {
      if (x.base() != 0) continue;
      rec.check(apply(a, x) == apply(e, x), [&] {
        return Failure{"level-0 agreement " + to_string(a) + " " + to_string(e) + " " + to_string(x),
                       to_string(apply(a, x)), to_string(apply(e, x))};
      });
    }
  }

  // Any non-identity endo already moves a point of the bound-2 truncation,
  // whatever bound the rest of the suite runs at.
  const auto small = Truncation(2).elements();
  for (const InjEndo& e : endos) {
    const bool is_identity = e == InjEndo::identity();
    bool moves = false;
    for (const Elem& x : (is_identity ? elems : small)) {
      if (apply(e, x) != x) moves = true;
    }
    rec.check(moves != is_identity, [&] {
      return Failure{"fixed points " + to_string(e), is_identity ? "fixes all" : "moves some",
                     moves ? "moves some" : "fixes all"};
    });
  }
}

void endo_injectivity(const SuiteBounds& b, Recorder& rec) {
  for (const InjEndo& e : enumerate_endos(need(b.kmax))) {
    const auto hit = injectivity_collision(e.form(), need(b.bound));
    rec.check(!hit, [&] {
      return Failure{"injective " + to_string(e), "no collision",
                     pair_str(hit->first, hit->second)};
    });
  }
}

void composition_table(const SuiteBounds& b, Recorder& rec) {
  const auto elems = Truncation(need(b.bound)).elements();
  const auto endos = enumerate_endos(need(b.kmax));

  for (const InjEndo& e1 : endos) {
    for (const InjEndo& e2 : endos) {
      const InjEndo c = compose(e1, e2);
      for (const Elem& x : elems) {
        const Elem want = apply(e2, apply(e1, x));
        const Elem got = apply(c, x);
        rec.check(got == want, [&] {
          return Failure{"pointwise " + to_string(e1) + " then " + to_string(e2) + " at " +
                             to_string(x),
                         to_string(want), to_string(got)};
        });
      }
    }
  }

  for (const InjEndo& e1 : endos) {
    for (const InjEndo& e2 : endos) {
      for (const InjEndo& e3 : endos) {
        const InjEndo l = compose(compose(e1, e2), e3);
        const InjEndo r = compose(e1, compose(e2, e3));
        rec.check(l == r, [&] {
          return Failure{"associative " + to_string(e1) + " " + to_string(e2) + " " + to_string(e3),
                         to_string(l), to_string(r)};
        });
      }
    }
    const InjEndo id = InjEndo::identity();
    rec.check(compose(id, e1) == e1 && compose(e1, id) == e1,
              [&] { return Failure{"identity " + to_string(e1), to_string(e1), "differs"}; });
  }

  // Closed-form table, its parameter ranges, and a pointwise spot check.
  const Int sym = need(b.symbolic_kmax);
  const auto wide = enumerate_endos(sym);
  const auto tiny = Truncation(2).elements();
  for (const InjEndo& e1 : wide) {
    for (const InjEndo& e2 : wide) {
      const Int k = checked_mul(e1.k(), e2.k());
      const Int p = e1.is_alpha() ? checked_add(e2.p(), checked_mul(e2.k(), e1.p()))
                                  : checked_mul(e2.k(), e1.p());
      const bool beta = e1.is_beta() || e2.is_beta();
      std::string got;
      bool ok = false;
      try {
        const InjEndo c = compose(e1, e2);
        got = to_string(c);
        ok = c.k() == k && c.p() == p && c.is_beta() == beta &&
             !parameter_violation(c.kind(), c.k(), c.p());
        for (const Elem& x : tiny) ok = ok && apply(c, x) == apply(e2, apply(e1, x));
      } catch (const ParameterRangeError& err) {
        got = err.what();
      }
      rec.check(ok, [&] {
        return Failure{"table " + to_string(e1) + " " + to_string(e2),
                       std::string(beta ? "b:" : "a:") + std::to_string(k) + "," + std::to_string(p),
                       got};
      });
    }
  }

  // beta then alpha equals beta then beta whenever both right factors exist.
  for (const InjEndo& e1 : wide) {
    if (!e1.is_beta()) continue;
    for (Int k2 = 2; k2 <= sym; ++k2) {
      for (Int p2 = 1; p2 < k2; ++p2) {
        const InjEndo ba = compose(e1, make_alpha(k2, p2));
        const InjEndo bb = compose(e1, make_beta(k2, p2));
        rec.check(ba == bb, [&] {
          return Failure{"beta-alpha vs beta-beta " + to_string(e1) + " (" + std::to_string(k2) +
                             "," + std::to_string(p2) + ")",
                         to_string(bb), to_string(ba)};
        });
      }
    }
  }
}

// -------------------------------------------------------- endo monoid/green

void idempotents(const SuiteBounds& b, Recorder& rec) {
  const Int kmax = need(b.kmax);
  const auto found = find_idempotents(kmax);
  const std::vector<InjEndo> want{InjEndo::identity()};
  std::string got;
  for (const InjEndo& e : found) got += (got.empty() ? "" : " ") + to_string(e);
  rec.check(found == want, [&] { return Failure{"idempotents k<=" + std::to_string(kmax), "a:1,0", got}; });

  for (const InjEndo& e : enumerate_endos(kmax)) {
    const bool self_square = compose(e, e) == e;
    rec.check(self_square == (e == InjEndo::identity()), [&] {
      return Failure{"self-square " + to_string(e), s(e == InjEndo::identity()), s(self_square)};
    });
  }
}

void cancellative(const SuiteBounds& b, Recorder& rec) {
  std::vector<InjEndo> alphas;
  for (const InjEndo& e : enumerate_endos(need(b.kmax))) {
    if (is_in_S_alpha(e)) alphas.push_back(e);
  }
  rec.check(is_in_S_alpha(InjEndo::identity()), [] { return Failure{"identity in S_alpha", "true", "false"}; });
  for (const InjEndo& x : alphas) {
    for (const InjEndo& y : alphas) {
      rec.check(is_in_S_alpha(compose(x, y)), [&] {
        return Failure{"S_alpha closed " + to_string(x) + " " + to_string(y), "alpha",
                       to_string(compose(x, y))};
      });
      for (const InjEndo& z : alphas) {
        if (y == z) continue;
        rec.check(compose(x, y) != compose(x, z) && compose(y, x) != compose(z, x), [&] {
          return Failure{"cancel " + to_string(x) + " " + to_string(y) + " " + to_string(z),
                         "distinct products", "equal products"};
        });
      }
    }
  }
  const bool whole = check_cancellative_S_alpha(need(b.kmax));
  rec.check(whole, [] { return Failure{"check_cancellative_S_alpha", "true", "false"}; });
}

void ideal(const SuiteBounds& b, Recorder& rec) {
  const auto all = enumerate_endos(need(b.kmax));
  for (const InjEndo& x : all) {
    for (const InjEndo& e : all) {
      if (!is_in_S_beta(x)) continue;
      const InjEndo left = compose(e, x);
      const InjEndo right = compose(x, e);
      rec.check(is_in_S_beta(left) && is_in_S_beta(right), [&] {
        return Failure{"absorbs " + to_string(e) + " " + to_string(x), "beta beta",
                       to_string(left) + " " + to_string(right)};
      });
    }
  }
  const bool whole = check_ideal_S_beta(need(b.kmax));
  rec.check(whole, [] { return Failure{"check_ideal_S_beta", "true", "false"}; });
}

void green_agreement(const SuiteBounds& b, Recorder& rec) {
  const auto endos = enumerate_endos(need(b.kmax));
  const Int search_kmax = need(b.search_kmax);

  for (const InjEndo& a : endos) {
    for (const InjEndo& c : endos) {
      std::map<GreenRelation, bool> found;
      for (GreenRelation rel : kAllGreenRelations) {
        const GreenQuery q{rel, a, c, search_kmax};
        const auto res = green_bounded_search(q);
        const bool sym = green_symbolic(q);
        found[rel] = res.related;
        rec.check(res.related == sym, [&] {
          return Failure{std::string(to_string(rel)) + " " + to_string(a) + " " + to_string(c),
                         s(sym), s(res.related)};
        });
        rec.check(!res.related || !res.witnesses.empty(), [&] {
          return Failure{std::string(to_string(rel)) + " witnesses " + to_string(a) + " " +
                             to_string(c),
                         "nonempty", "empty"};
        });
        rec.check(!(res.related && a.is_alpha() != c.is_alpha()), [&] {
          return Failure{std::string(to_string(rel)) + " mixed " + to_string(a) + " " + to_string(c),
                         "false", "true"};
        });
      }
      const bool r = found[GreenRelation::R], l = found[GreenRelation::L],
                 h = found[GreenRelation::H], d = found[GreenRelation::D],
                 j = found[GreenRelation::J];
      rec.check((!r || j) && (!l || j) && h == (r && l) && (!h || d) && (!d || j), [&] {
        return Failure{"containments " + to_string(a) + " " + to_string(c), "R,L<=J H=R^L H<=D<=J",
                       "R=" + s(r) + " L=" + s(l) + " H=" + s(h) + " D=" + s(d) + " J=" + s(j)};
      });
      const bool lr = related_by_composite(GreenRelation::L, GreenRelation::R, a, c, search_kmax);
      const bool rl = related_by_composite(GreenRelation::R, GreenRelation::L, a, c, search_kmax);
      rec.check(lr == rl && lr == d, [&] {
        return Failure{"D orders " + to_string(a) + " " + to_string(c), s(d),
                       "LoR=" + s(lr) + " RoL=" + s(rl)};
      });
    }
  }

  // a = a x or a = x a only for the identity.
  const auto cands = candidate_factors(search_kmax);
  for (const InjEndo& a : endos) {
    for (const Factor& x : cands) {
      const bool trivial = x.is_unit() || x.endo() == InjEndo::identity();
      const bool fixes = times(a, x) == a || times(x, a) == a;
      rec.check(fixes == trivial, [&] {
        return Failure{"trivial solutions " + to_string(a) + " " + to_string(x), s(trivial), s(fixes)};
      });
    }
  }
}

void classification_negative(const SuiteBounds& b, Recorder& rec) {
  const Int bound = need(b.bound);
  const Int kmax = need(b.kmax);
  for (EndoKind kind : {EndoKind::Alpha, EndoKind::Beta}) {
    for (Int k = 1; k <= kmax; ++k) {
      std::vector<Int> ps{k, k + 1, k + 2};
      if (kind == EndoKind::Beta) ps.insert(ps.begin(), 0);
      for (Int p : ps) {
        const EndoForm form{kind, k, p};
        const std::string name = to_string(form);

        bool rejected = false;
        try {
          kind == EndoKind::Alpha ? make_alpha(k, p) : make_beta(k, p);
        } catch (const ParameterRangeError&) {
          rejected = true;
        }
        rec.check(rejected, [&] { return Failure{"construct " + name, "range error", "accepted"}; });

        bool classified = false;
        try {
          classify_from_images({k, kind == EndoKind::Alpha ? TargetLevel::Level1 : TargetLevel::Level0, p});
        } catch (const ParameterRangeError&) {
          classified = true;
        }
        rec.check(classified, [&] { return Failure{"classify " + name, "range error", "accepted"}; });

        std::string w;
        if (auto cex = homomorphism_counterexample(form, bound)) {
          w = name + " not a homomorphism: " + pair_str(cex->first, cex->second);
        } else if (auto hit = injectivity_collision(form, bound)) {
          w = name + " not injective: " + to_string(hit->first) + " and " +
              to_string(hit->second) + " share an image";
        }
        if (rec.check(!w.empty(), [&] {
              return Failure{"witness " + name, "counterexample", "none at bound " + std::to_string(bound)};
            })) {
          rec.witness(std::move(w));
        }
      }
    }
  }
}

void growth_inequalities(const SuiteBounds& b, Recorder& rec) {
  const Int t_max = need(b.t_max);
  const Int s_max = need(b.s_max);
  for (EndoKind kind : {EndoKind::Alpha, EndoKind::Beta}) {
    for (Int k = 1; k <= need(b.kmax); ++k) {
      for (Int p = 0; p < k; ++p) {
        if (parameter_violation(kind, k, p)) continue;
        for (Int rate = 1; rate <= s_max; ++rate) {
          const bool holds = check_growth_inequalities(kind, k, p, rate, t_max);
          rec.check(holds == (rate == k), [&] {
            return Failure{to_string(EndoForm{kind, k, p}) + " s=" + std::to_string(rate),
                           s(rate == k), s(holds)};
          });
        }
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteBounds&, Recorder&);

SuiteFn suite_function(std::string_view name) {
  static const std::map<std::string_view, SuiteFn> table = {
      {"semigroup_axioms", semigroup_axioms},
      {"inverse_axioms", inverse_axioms},
      {"order", order},
      {"endo_homomorphism", endo_homomorphism},
      {"endo_injectivity", endo_injectivity},
      {"composition_table", composition_table},
      {"idempotents", idempotents},
      {"cancellative", cancellative},
      {"ideal", ideal},
      {"green_agreement", green_agreement},
      {"classification_negative", classification_negative},
      {"growth_inequalities", growth_inequalities},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : it->second;
}

void require_at_least(const std::optional<Int>& v, Int lo, const char* what) {
  if (v && *v < lo) {
    throw DomainError(std::string(what) + " must be at least " + std::to_string(lo));
  }
}

}  // namespace

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

bool is_known_suite(std::string_view name) noexcept {
  return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

SuiteBounds resolve_bounds(std::string_view suite, const BoundsOverride& o) {
  if (!is_known_suite(suite)) throw DomainError("unknown suite: " + std::string(suite));
  SuiteBounds b;
  auto pick = [](const std::optional<Int>& v, Int fallback) { return v.value_or(fallback); };

  if (suite == "semigroup_axioms" || suite == "inverse_axioms" || suite == "order") {
    b.bound = pick(o.bound, 8);
  } else if (suite == "endo_homomorphism") {
    b.bound = pick(o.bound, 8);
    b.kmax = pick(o.kmax, 5);
  } else if (suite == "endo_injectivity" || suite == "composition_table") {
    b.bound = pick(o.bound, 20);
    b.kmax = pick(o.kmax, 5);
    if (suite == "composition_table") b.symbolic_kmax = std::max<Int>(12, *b.kmax);
  } else if (suite == "idempotents") {
    b.kmax = pick(o.kmax, 20);
  } else if (suite == "cancellative" || suite == "ideal") {
    b.kmax = pick(o.kmax, 5);
  } else if (suite == "green_agreement") {
    b.kmax = pick(o.kmax, 6);
    b.search_kmax = *b.kmax + 2;
  } else if (suite == "classification_negative") {
    b.bound = pick(o.bound, 6);
    b.kmax = pick(o.kmax, 4);
  } else if (suite == "growth_inequalities") {
    b.kmax = pick(o.kmax, 6);
    b.t_max = pick(o.t_max, 50);
    b.s_max = 3 * *b.kmax;
  }

  require_at_least(b.bound, 0, "bound");
  require_at_least(b.kmax, (suite == "cancellative" || suite == "ideal") ? 2 : 1, "kmax");
  require_at_least(b.t_max, 1, "t_max");
  return b;
}

VerifyReport run_suite(std::string_view suite, const BoundsOverride& overrides) {
  VerifyReport report;
  report.suite = std::string(suite);
  report.bounds = resolve_bounds(suite, overrides);
  Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  suite_function(suite)(report.bounds, rec);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::span<const InvariantOwner> invariant_registry() noexcept { return kRegistry; }

void assert_registry_complete() {
  std::set<std::pair<std::string_view, std::string_view>> seen;
  std::set<std::string_view> owning;
  for (const InvariantOwner& o : kRegistry) {
    if (!is_known_suite(o.suite) || suite_function(o.suite) == nullptr) {
      throw std::logic_error("invariant " + std::string(o.invariant) + " owned by unknown suite");
    }
    if (!seen.emplace(o.module, o.invariant).second) {
      throw std::logic_error("invariant " + std::string(o.invariant) + " owned twice");
    }
    owning.insert(o.suite);
  }
  for (std::string_view name : kSuites) {
    if (!owning.count(name)) {
      throw std::logic_error("suite " + std::string(name) + " owns no invariant");
    }
  }
}

}  // namespace bicyclic
