#pragma once

// Inverse-category axioms, coslices x⫽I, downward-closed full
// subcategories and matching-object index sets.

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "fincat.hpp"
#include "report.hpp"

namespace diagram_forge {

  // Every non-identity morphism must strictly lower the degree from source
  // to target. Fan-out is finite for any FinCategory, so that half of the
  // definition reduces to counting out-degrees.
  inline Report check_inverse(FinCategory const& c) {
    Report r;
    r.title = "inverse";
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      auto const& m = c.morphism(f);
      if (m.identity) {
        continue;
      }
      std::size_t ds = c.degree(m.source);
      std::size_t dt = c.degree(m.target);
      if (dt >= ds) {
        r.add("degree", m.label,
              c.object(m.source).name + "(" + std::to_string(ds) + ") -> "
                  + c.object(m.target).name + "(" + std::to_string(dt)
                  + ") does not lower the degree");
      }
    }
    return r;
  }

  inline bool is_inverse(FinCategory const& c) {
    return check_inverse(c).ok();
  }

  // A valid degree map by longest-path layering. Throws NotInverse when the
  // non-identity morphisms contain a cycle.
  inline std::vector<std::size_t> synthesize_degrees(FinCategory const& c) {
    auto d = longest_path_degrees(c);
    if (!d) {
      throw NotInverse("composable cycle of non-identity morphisms; no degree map exists");
    }
    return *d;
  }

  inline void require_inverse(FinCategory const& c, char const* what) {
    auto r = check_inverse(c);
    if (!r.ok()) {
      throw NotInverse(std::string(what) + ": category is not inverse (" + r.violations.front().where
                       + ": " + r.violations.front().detail + ")");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Coslices
  ////////////////////////////////////////////////////////////////////////

  // An object (y, f) of x⫽I: a non-identity f : x -> y.
  struct CosliceObject {
    ObjectId target;
    MorphismId arrow;

    bool operator==(CosliceObject const&) const = default;
  };

  struct CosliceCategory {
    ObjectId apex = 0;
    // Objects in canonical order: target degree ascending, then morphism id.
    std::vector<CosliceObject> entries;
    // The coslice as a category; object k is entries[k], carrying the
    // degree of its target. Morphisms are base morphisms h with h ∘ f = g.
    FinCategory category;
    // Coslice morphism id -> base morphism id (the forgetful functor on
    // arrows; on objects it is entries[k].target).
    std::vector<MorphismId> forgetful_morphism;

    ObjectId forgetful(ObjectId k) const {
      return entries.at(k).target;
    }
  };

  namespace detail {

    inline std::vector<CosliceObject> coslice_entries(FinCategory const& c, ObjectId x) {
      std::vector<CosliceObject> entries;
      for (MorphismId f : c.out(x)) {
        if (!c.is_identity(f)) {
          entries.push_back({c.morphism(f).target, f});
        }
      }
      std::stable_sort(entries.begin(), entries.end(), [&](auto const& a, auto const& b) {
        if (c.degree(a.target) != c.degree(b.target)) {
          return c.degree(a.target) < c.degree(b.target);
        }
        return a.arrow < b.arrow;
      });
      return entries;
    }

  }  // namespace detail

  inline CosliceCategory coslice(FinCategory const& c, ObjectId x) {
    CosliceCategory cs;
    cs.apex    = x;
    cs.entries = detail::coslice_entries(c, x);
    CategoryBuilder b;
    std::map<MorphismId, ObjectId> by_arrow;
    for (auto const& e : cs.entries) {
      ObjectId k = b.add_object("(" + c.object(e.target).name + "," + c.morphism(e.arrow).label + ")",
                                c.degree(e.target));
      by_arrow.emplace(e.arrow, k);
    }
    std::vector<MorphismId> base(cs.entries.size());
    std::vector<ObjectId> src(cs.entries.size());
    std::vector<ObjectId> dst(cs.entries.size());
    std::map<std::tuple<ObjectId, ObjectId, MorphismId>, MorphismId> lookup;
    for (ObjectId k = 0; k < cs.entries.size(); ++k) {
      MorphismId id = b.identity(k);
      base[id]      = c.identity(cs.entries[k].target);
      src[id] = dst[id] = k;
      lookup.emplace(std::tuple{k, k, base[id]}, id);
    }
    for (ObjectId a = 0; a < cs.entries.size(); ++a) {
      for (ObjectId t = 0; t < cs.entries.size(); ++t) {
        auto const& ea = cs.entries[a];
        auto const& et = cs.entries[t];
        for (MorphismId h : c.hom(ea.target, et.target)) {
          if (c.is_identity(h) || c.compose(h, ea.arrow) != et.arrow) {
            continue;
          }
          MorphismId m = b.add_morphism(a, t, c.morphism(h).label, c.morphism(h).marked);
          base.push_back(h);
          src.push_back(a);
          dst.push_back(t);
          lookup.emplace(std::tuple{a, t, h}, m);
        }
      }
    }
    cs.category = std::move(b).build([&](MorphismId g, MorphismId f) {
      return lookup.at(std::tuple{src[f], dst[g], c.compose(base[g], base[f])});
    });
    cs.forgetful_morphism = std::move(base);
    return cs;
  }

  ////////////////////////////////////////////////////////////////////////
  // Downward closure and matching indices
  ////////////////////////////////////////////////////////////////////////

  struct DownwardClosure {
    std::vector<ObjectId> objects;  // ascending id
    Subcategory sub;
  };

  // Smallest full subcategory containing the seeds and closed under
  // targets of morphisms.
  inline DownwardClosure downward_closed(FinCategory const& c, std::vector<ObjectId> const& seeds) {
    std::vector<bool> in(c.object_count(), false);
    std::queue<ObjectId> todo;
    for (ObjectId s : seeds) {
      if (s >= c.object_count()) {
        throw UnknownObject("seed object id out of range");
      }
      if (!in[s]) {
        in[s] = true;
        todo.push(s);
      }
    }
    while (!todo.empty()) {
      ObjectId x = todo.front();
      todo.pop();
      for (MorphismId f : c.out(x)) {
        ObjectId y = c.morphism(f).target;
        if (!in[y]) {
          in[y] = true;
          todo.push(y);
        }
      }
    }
    DownwardClosure d;
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      if (in[x]) {
        d.objects.push_back(x);
      }
    }
    d.sub = full_subcategory(c, d.objects);
    return d;
  }

  inline bool is_downward_closed(FinCategory const& c, std::vector<ObjectId> const& objects) {
    auto d = downward_closed(c, objects);
    std::vector<ObjectId> sorted = objects;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return d.objects == sorted;
  }

  // The index set of the matching object at x.
  struct MatchingIndex {
    ObjectId apex = 0;
    std::vector<CosliceObject> entries;
  };

  inline MatchingIndex matching_index(FinCategory const& c, ObjectId x) {
    return {x, detail::coslice_entries(c, x)};
  }

}  // namespace diagram_forge
