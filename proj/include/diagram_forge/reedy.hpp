#pragma once

// Reedy categories, the direct replacement 𝔇 of Δ (frak_d) and the general
// construction D(R) whose objects are the arrows of R⁻.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "fincat.hpp"
#include "inverse.hpp"
#include "report.hpp"
#include "simplex.hpp"

namespace diagram_forge {

  struct ReedyCategory {
    FinCategory category;
    std::vector<bool> plus;   // direct part, per morphism id
    std::vector<bool> minus;  // inverse part, per morphism id
  };

  inline ReedyCategory delta_reedy(std::size_t n) {
    DeltaCategory d = delta_category(n);
    ReedyCategory r;
    for (auto const& f : d.maps) {
      r.plus.push_back(f.injective());
      r.minus.push_back(f.surjective());
    }
    r.category = std::move(d.category);
    return r;
  }

  // Both parts are the identities.
  inline ReedyCategory discrete_reedy(FinCategory c) {
    ReedyCategory r;
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      r.plus.push_back(c.is_identity(f));
      r.minus.push_back(c.is_identity(f));
    }
    r.category = std::move(c);
    return r;
  }

  inline Report check_reedy(ReedyCategory const& r) {
    Report rep;
    rep.title         = "reedy";
    auto const& c     = r.category;
    std::size_t const nm = c.morphism_count();
    if (r.plus.size() != nm || r.minus.size() != nm) {
      rep.add("shape", "parts", "membership vectors do not match the morphism count");
      return rep;
    }
    auto name = [&](MorphismId f) { return c.morphism(f).label; };
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      MorphismId id = c.identity(x);
      if (!r.plus[id]) {
        rep.add("wide", name(id), "identity missing from the direct part");
      }
      if (!r.minus[id]) {
        rep.add("wide", name(id), "identity missing from the inverse part");
      }
    }
    for (MorphismId f = 0; f < nm; ++f) {
      if (c.is_identity(f)) {
        continue;
      }
      auto const& m   = c.morphism(f);
      std::size_t ds  = c.degree(m.source);
      std::size_t dt  = c.degree(m.target);
      if (r.minus[f] && dt >= ds) {
        rep.add("inverse-part", name(f), "minus morphism does not lower the degree");
      }
      if (r.plus[f] && dt <= ds) {
        rep.add("direct-part", name(f), "plus morphism does not raise the degree");
      }
      for (MorphismId g : c.out(m.target)) {
        if (c.is_identity(g)) {
          continue;
        }
        MorphismId h = c.compose(g, f);
        if (r.plus[f] && r.plus[g] && !r.plus[h]) {
          rep.add("closure", name(g) + " ∘ " + name(f), "composite of plus morphisms is not plus");
        }
        if (r.minus[f] && r.minus[g] && !r.minus[h]) {
          rep.add("closure", name(g) + " ∘ " + name(f), "composite of minus morphisms is not minus");
        }
      }
    }
    for (MorphismId f = 0; f < nm; ++f) {
      auto const& m     = c.morphism(f);
      std::size_t found = 0;
      for (MorphismId a : c.out(m.source)) {
        if (!r.minus[a]) {
          continue;
        }
        for (MorphismId b : c.hom(c.morphism(a).target, m.target)) {
          if (r.plus[b] && c.compose(b, a) == f) {
            ++found;
          }
        }
      }
      if (found != 1) {
        rep.add("factorization", name(f),
                found == 0 ? "no minus-then-plus factorization"
                           : std::to_string(found) + " minus-then-plus factorizations");
      }
    }
    return rep;
  }

  inline void require_reedy(ReedyCategory const& r) {
    auto rep = check_reedy(r);
    if (!rep.ok()) {
      auto const& v = rep.violations.front();
      throw NotReedy("not a Reedy category: [" + v.check + "] " + v.where + ": " + v.detail);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Surjections and lists of positive integers
  ////////////////////////////////////////////////////////////////////////

  using PositiveList = std::vector<std::size_t>;

  inline std::string list_name(PositiveList const& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(a[i]);
    }
    return s + ")";
  }

  // Preimage sizes of a surjection [m] ↠ [k].
  inline PositiveList list_of_surjection(SimplexMap const& s) {
    if (!s.surjective()) {
      throw NotSurjective(s.str() + " is not surjective onto [" + std::to_string(s.codomain()) + "]");
    }
    PositiveList a(s.codomain() + 1, 0);
    for (std::size_t v : s.values()) {
      ++a[v];
    }
    return a;
  }

  inline SimplexMap surjection_of_list(PositiveList const& a) {
    if (a.empty()) {
      throw SpecError("list of positive integers must be non-empty");
    }
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) {
        throw SpecError("list entries must be positive: " + list_name(a));
      }
      v.insert(v.end(), a[j], j);
    }
    return {a.size() - 1, std::move(v)};
  }

  ////////////////////////////////////////////////////////////////////////
  // 𝔇 truncated to lists with sum <= n + 1
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t frak_d_degree(PositiveList const& a) {
    std::size_t sum = std::accumulate(a.begin(), a.end(), std::size_t{0});
    return 2 * sum - (a.size() + 1);
  }

  // b_j >= sum of a_i over the preimage of j.
  inline bool frak_d_valid(PositiveList const& a, PositiveList const& b, SimplexMap const& f) {
    if (f.domain() + 1 != a.size() || f.codomain() + 1 != b.size()) {
      return false;
    }
    std::vector<std::size_t> load(b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      load[f(i)] += a[i];
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (load[j] > b[j]) {
        return false;
      }
    }
    return true;
  }

  struct DCategory {
    FinCategory category;            // marked, degrees = frak_d_degree
    std::vector<PositiveList> lists;  // object id -> list
    std::vector<SimplexMap> maps;     // morphism id -> underlying map

    std::optional<ObjectId> find(PositiveList const& a) const {
      auto it = std::find(lists.begin(), lists.end(), a);
      if (it == lists.end()) {
        return std::nullopt;
      }
      return static_cast<ObjectId>(it - lists.begin());
    }

    std::vector<MorphismId> marked_non_identity() const {
      std::vector<MorphismId> out;
      for (MorphismId f = 0; f < category.morphism_count(); ++f) {
        if (category.morphism(f).marked && !category.is_identity(f)) {
          out.push_back(f);
        }
      }
      return out;
    }

    // Marked non-identity morphisms that are not a composite of two marked
    // non-identity morphisms.
    std::vector<MorphismId> marked_generators() const {
      auto marked = marked_non_identity();
      std::vector<bool> decomposable(category.morphism_count(), false);
      for (MorphismId f : marked) {
        for (MorphismId g : category.out(category.morphism(f).target)) {
          if (category.morphism(g).marked && !category.is_identity(g)) {
            decomposable[category.compose(g, f)] = true;
          }
        }
      }
      std::vector<MorphismId> out;
      for (MorphismId f : marked) {
        if (!decomposable[f]) {
          out.push_back(f);
        }
      }
      return out;
    }
  };

  namespace detail {

    // Compositions of k in lexicographic order.
    inline void compositions(std::size_t k, PositiveList& prefix, std::vector<PositiveList>& out) {
      if (k == 0) {
        out.push_back(prefix);
        return;
      }
      for (std::size_t first = 1; first <= k; ++first) {
        prefix.push_back(first);
        compositions(k - first, prefix, out);
        prefix.pop_back();
      }
    }

  }  // namespace detail

  // Objects ordered by (sum, lexicographic); morphisms: identities first,
  // then by (source, target, map).
  inline DCategory frak_d(std::size_t n) {
    DCategory d;
    for (std::size_t sum = 1; sum <= n + 1; ++sum) {
      PositiveList prefix;
      detail::compositions(sum, prefix, d.lists);
    }
    CategoryBuilder b;
    for (auto const& a : d.lists) {
      b.add_object(list_name(a), frak_d_degree(a));
      d.maps.push_back(SimplexMap::identity(a.size() - 1));
    }
    std::map<std::tuple<ObjectId, ObjectId, SimplexMap>, MorphismId> lookup;
    for (ObjectId x = 0; x < d.lists.size(); ++x) {
      lookup.emplace(std::tuple{x, x, d.maps[x]}, b.identity(x));
    }
    for (ObjectId x = 0; x < d.lists.size(); ++x) {
      for (ObjectId y = 0; y < d.lists.size(); ++y) {
        auto const& a = d.lists[x];
        auto const& c = d.lists[y];
        for (auto& f : monotone_maps(a.size() - 1, c.size() - 1)) {
          if ((x == y && f.is_identity()) || !frak_d_valid(a, c, f)) {
            continue;
          }
          MorphismId m = b.add_morphism(x, y, f.str(), f.is_identity());
          lookup.emplace(std::tuple{x, y, f}, m);
          d.maps.push_back(std::move(f));
        }
      }
    }
    std::vector<ObjectId> src(d.maps.size());
    std::vector<ObjectId> dst(d.maps.size());
    for (auto const& [key, m] : lookup) {
      src[m] = std::get<0>(key);
      dst[m] = std::get<1>(key);
    }
    d.category = std::move(b).build([&](MorphismId g, MorphismId f) {
      return lookup.at(std::tuple{src[f], dst[g], compose_simplex(d.maps[g], d.maps[f])});
    });
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Degree checks on marked direct categories
  ////////////////////////////////////////////////////////////////////////

  inline Report check_degree_monotone(FinCategory const& d) {
    Report r;
    r.title = "degree monotone";
    for (MorphismId f = 0; f < d.morphism_count(); ++f) {
      auto const& m = d.morphism(f);
      if (m.identity) {
        continue;
      }
      if (d.degree(m.target) <= d.degree(m.source)) {
        r.add("degree", d.object(m.source).name + " -> " + d.object(m.target).name + " via " + m.label,
              std::to_string(d.degree(m.source)) + " -> " + std::to_string(d.degree(m.target)));
      }
    }
    return r;
  }

  // The non-identity morphism graph is acyclic.
  inline Report check_no_infinite_chains(FinCategory const& d) {
    Report r;
    r.title = "no infinite chains";
    std::size_t const n = d.object_count();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<ObjectId> stack;
    std::function<void(ObjectId)> visit = [&](ObjectId x) {
      state[x] = 1;
      stack.push_back(x);
      for (MorphismId f : d.out(x)) {
        auto const& m = d.morphism(f);
        if (m.identity) {
          continue;
        }
        if (state[m.target] == 1) {
          std::string cycle;
          auto from = std::find(stack.begin(), stack.end(), m.target);
          for (auto it = from; it != stack.end(); ++it) {
            cycle += d.object(*it).name + " -> ";
          }
          r.add("cycle", m.label, cycle + d.object(m.target).name);
        } else if (state[m.target] == 0) {
          visit(m.target);
        }
      }
      stack.pop_back();
      state[x] = 2;
    };
    for (ObjectId x = 0; x < n; ++x) {
      if (state[x] == 0) {
        visit(x);
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // D(R)
  ////////////////////////////////////////////////////////////////////////

  struct GeneralD {
    FinCategory category;              // marked; degrees by longest incoming path
    std::vector<MorphismId> objects;   // object id -> R⁻ arrow
    std::vector<MorphismId> underlying;  // morphism id -> morphism of R
  };

  namespace detail {

    // f ∈ R(y, w) is a morphism s:x↠y -> t:z↠w iff t ∘ p = f ∘ s for some
    // plus p : x -> z.
    inline bool d_morphism(ReedyCategory const& r, MorphismId s, MorphismId t, MorphismId f) {
      auto const& c = r.category;
      MorphismId fs = c.compose(f, s);
      for (MorphismId p : c.hom(c.morphism(s).source, c.morphism(t).source)) {
        if (r.plus[p] && c.compose(t, p) == fs) {
          return true;
        }
      }
      return false;
    }

  }  // namespace detail

  inline GeneralD d_construction(ReedyCategory const& r) {
    require_reedy(r);
    auto const& c = r.category;
    GeneralD d;
    CategoryBuilder b;
    for (MorphismId s = 0; s < c.morphism_count(); ++s) {
      if (r.minus[s]) {
        d.objects.push_back(s);
        b.add_object(c.morphism(s).label);
        d.underlying.push_back(c.identity(c.morphism(s).target));
      }
    }
    std::map<std::tuple<ObjectId, ObjectId, MorphismId>, MorphismId> lookup;
    std::vector<ObjectId> src(d.objects.size());
    std::vector<ObjectId> dst(d.objects.size());
    for (ObjectId k = 0; k < d.objects.size(); ++k) {
      lookup.emplace(std::tuple{k, k, d.underlying[k]}, b.identity(k));
      src[k] = dst[k] = k;
    }
    for (ObjectId i = 0; i < d.objects.size(); ++i) {
      for (ObjectId j = 0; j < d.objects.size(); ++j) {
        MorphismId s = d.objects[i];
        MorphismId t = d.objects[j];
        for (MorphismId f : c.hom(c.morphism(s).target, c.morphism(t).target)) {
          if (i == j && c.is_identity(f)) {
            continue;
          }
          if (!detail::d_morphism(r, s, t, f)) {
            continue;
          }
          MorphismId m = b.add_morphism(i, j, c.morphism(f).label, c.is_identity(f));
          lookup.emplace(std::tuple{i, j, f}, m);
          d.underlying.push_back(f);
          src.push_back(i);
          dst.push_back(j);
        }
      }
    }
    d.category = std::move(b).build([&](MorphismId g, MorphismId f) {
      return lookup.at(std::tuple{src[f], dst[g], c.compose(d.underlying[g], d.underlying[f])});
    });
    auto depth = longest_path_degrees(opposite(d.category));
    if (!depth) {
      throw NotReedy("D(R) has an infinite chain of non-identity morphisms");
    }
    d.category = d.category.with_degrees(*depth);
    return d;
  }

  // Is the codomain projection D(R) -> R an opfibration? For each object
  // s : x ↠ y and g : y -> w of R, some morphism over g out of s must be
  // cocartesian. The projection is faithful, so cocartesian means: for all
  // r and h : w -> target(r), if h ∘ g underlies a morphism s -> r then h
  // underlies a morphism t -> r.
  inline Report check_projection_opfibration(ReedyCategory const& r, GeneralD const& d) {
    Report rep;
    rep.title     = "codomain projection opfibration";
    auto const& c = r.category;
    auto has      = [&](ObjectId i, ObjectId j, MorphismId f) {
      for (MorphismId m : d.category.hom(i, j)) {
        if (d.underlying[m] == f) {
          return true;
        }
      }
      return false;
    };
    for (ObjectId i = 0; i < d.objects.size(); ++i) {
      ObjectId y = c.morphism(d.objects[i]).target;
      for (MorphismId g : c.out(y)) {
        ObjectId w = c.morphism(g).target;
        bool lifted = false;
        for (ObjectId j = 0; j < d.objects.size() && !lifted; ++j) {
          if (c.morphism(d.objects[j]).target != w || !has(i, j, g)) {
            continue;
          }
          bool cocartesian = true;
          for (ObjectId k = 0; k < d.objects.size() && cocartesian; ++k) {
            for (MorphismId h : c.hom(w, c.morphism(d.objects[k]).target)) {
              if (has(i, k, c.compose(h, g)) && !has(j, k, h)) {
                cocartesian = false;
                break;
              }
            }
          }
          lifted = cocartesian;
        }
        if (!lifted) {
          rep.add("cocartesian-lift", d.category.object(i).name + " along " + c.morphism(g).label,
                  "no cocartesian lift");
        }
      }
    }
    return rep;
  }

}  // namespace diagram_forge
