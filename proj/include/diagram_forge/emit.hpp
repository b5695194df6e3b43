#pragma once

// Builders for the emitted telescopes: Reedy fibrant diagram types, weak
// (homotopy coherent) diagram types, semisimplicial and simplicial types,
// truncated general homotopy coherent diagrams and strictified fibers.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fincat.hpp"
#include "inverse.hpp"
#include "nerve.hpp"
#include "reedy.hpp"
#include "schema.hpp"
#include "simplex.hpp"
#include "strictify.hpp"

namespace diagram_forge {

  namespace detail {

    // Hands out names, appending _2, _3, ... on repeats.
    struct NamePool {
      std::map<std::string, std::size_t> used;

      std::string take(std::string const& base) {
        auto& n = used[base];
        ++n;
        return n == 1 ? base : base + "_" + std::to_string(n);
      }
    };

    inline std::string capitalize(std::string s) {
      if (!s.empty() && static_cast<unsigned char>(s[0]) < 0x80) {
        s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
      }
      return s;
    }
    inline std::string lowercase_first(std::string s) {
      if (!s.empty() && static_cast<unsigned char>(s[0]) < 0x80) {
        s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
      }
      return s;
    }

    inline std::vector<ObjectId> by_degree(FinCategory const& c) {
      std::vector<ObjectId> order(c.object_count());
      for (ObjectId x = 0; x < order.size(); ++x) {
        order[x] = x;
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](ObjectId a, ObjectId b) { return c.degree(a) < c.degree(b); });
      return order;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Reedy fibrant diagrams
  ////////////////////////////////////////////////////////////////////////

  // Binder names for the matching telescope at x: the arrow's label, or
  // "target:label" when the label repeats within the telescope.
  inline std::vector<std::string> matching_binders(FinCategory const& c, MatchingIndex const& m) {
    std::map<std::string, std::size_t> count;
    for (auto const& e : m.entries) {
      ++count[c.morphism(e.arrow).label];
    }
    std::vector<std::string> out;
    for (auto const& e : m.entries) {
      std::string const& l = c.morphism(e.arrow).label;
      out.push_back(count[l] == 1 ? l : c.object(e.target).name + ":" + l);
    }
    return out;
  }

  // The matching telescope at x, as Σ-bindings over the families already
  // emitted for lower objects (family name = prefix + object name).
  using BinderNaming = std::function<std::vector<std::string>(FinCategory const&, MatchingIndex const&)>;

  inline SigmaTel matching_telescope(FinCategory const& c, ObjectId x, std::string const& prefix,
                                     BinderNaming const& naming = matching_binders) {
    MatchingIndex m = matching_index(c, x);
    auto binders    = naming(c, m);
    std::map<MorphismId, std::string> binder_of;
    for (std::size_t k = 0; k < m.entries.size(); ++k) {
      binder_of.emplace(m.entries[k].arrow, binders[k]);
    }
    SigmaTel tel;
    for (std::size_t k = 0; k < m.entries.size(); ++k) {
      auto const& e     = m.entries[k];
      std::string fam   = prefix + c.object(e.target).name;
      MatchingIndex sub = matching_index(c, e.target);
      if (sub.entries.empty()) {
        tel.bindings.push_back({binders[k], TypeExpr(Ref{fam})});
        continue;
      }
      FamilyApp app{fam, {}};
      for (auto const& se : sub.entries) {
        app.args.push_back(binder_of.at(c.compose(se.arrow, e.arrow)));
      }
      tel.bindings.push_back({binders[k], TypeExpr(std::move(app))});
    }
    return tel;
  }

  inline ContextSchema reedy_diagram_type(FinCategory const& c, std::string const& prefix = "R_",
                                          std::string title = "reedy", BinderNaming const& naming = matching_binders) {
    require_inverse(c, "reedy_diagram_type");
    ContextSchema s;
    s.title             = std::move(title);
    s.metadata["kind"]  = "reedy";
    for (ObjectId x : detail::by_degree(c)) {
      SigmaTel tel = matching_telescope(c, x, prefix, naming);
      TypeExpr t   = tel.bindings.empty() ? TypeExpr(Universe{}) : fun(std::move(tel), Universe{});
      s.add(prefix + c.object(x).name, std::move(t), c.object(x).name);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Limits over categories of elements of nerves
  ////////////////////////////////////////////////////////////////////////

  // One component per chain: types, functions, commuting triangles, and
  // T_[k] over the boundary from length 3 on.
  inline ContextSchema nerve_limit_schema(ElementsCategory const& n,
                                          std::optional<std::string> const& level_prefix = std::nullopt) {
    FinCategory const& c = n.base();
    ContextSchema s;
    detail::NamePool pool;
    std::vector<std::string> name(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) {
      Seq const& q = n.object(k);
      std::string base;
      if (level_prefix) {
        base = *level_prefix + "_" + std::to_string(q.length());
      } else if (q.length() == 0) {
        base = detail::capitalize(c.object(q.start).name);
      } else if (q.length() == 1) {
        base = c.morphism(q.arrows[0]).label;
      } else {
        base = "c" + std::to_string(q.length());
        for (MorphismId a : q.arrows) {
          base += "_" + c.morphism(a).label;
        }
      }
      name[k] = pool.take(base);
    }
    auto face_name = [&](Seq const& q, std::vector<std::size_t> vertices) {
      return name[n.index_of(face(c, q, SimplexMap(q.length(), std::move(vertices))))];
    };
    for (std::size_t k = 0; k < n.size(); ++k) {
      Seq const& q = n.object(k);
      TypeExpr t;
      switch (q.length()) {
        case 0:
          t = Universe{};
          break;
        case 1:
          t = fun(Ref{face_name(q, {0})}, Ref{face_name(q, {1})});
          break;
        case 2:
          t = EqType{PathExpr::named(face_name(q, {0, 2})),
                     PathExpr::compose({PathExpr::named(face_name(q, {1, 2})),
                                        PathExpr::named(face_name(q, {0, 1}))})};
          break;
        default: {
          OpaqueT o{q.length(), {}};
          for (auto const& [d, f] : n.proper_faces(q)) {
            o.boundary.push_back(name[n.index_of(f)]);
          }
          t = std::move(o);
        }
      }
      s.add(name[k], std::move(t), n.label(q));
    }
    return s;
  }

  inline ContextSchema weak_diagram_type(FinCategory const& c) {
    require_inverse(c, "weak_diagram_type");
    ContextSchema s   = nerve_limit_schema(positive_nerve_elements(c));
    s.title           = "weak";
    s.metadata["kind"] = "weak";
    return s;
  }

  // Truncated: only chains of length <= k are represented.
  inline ContextSchema general_hc_type(FinCategory const& c, std::size_t k,
                                       std::optional<std::string> const& level_prefix = std::nullopt) {
    ElementsCategory n = nerve_elements_truncated(c, k);
    ContextSchema s    = nerve_limit_schema(n, level_prefix);
    s.title            = "general (truncated at " + std::to_string(k) + ")";
    s.metadata["kind"] = "general";
    s.metadata["truncated"] = std::to_string(k);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n.marked(n.object(i))) {
        std::string subject = s.components[i].name;
        s.add("equiv_" + subject, IsEquiv{subject, std::nullopt, std::nullopt}, "marked " + n.label(n.object(i)));
      }
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semisimplicial and simplicial types
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::string face_binder(std::vector<std::size_t> const& vertices, std::size_t top) {
      std::string prefix;
      switch (vertices.size()) {
        case 1:
          prefix = "p_";
          break;
        case 2:
          prefix = "l_";
          break;
        case 3:
          prefix = "t_";
          break;
        default:
          prefix = "s" + std::to_string(vertices.size() - 1) + "_";
      }
      std::string digits;
      for (std::size_t v : vertices) {
        if (top >= 10 && !digits.empty()) {
          digits += '-';
        }
        digits += std::to_string(v);
      }
      return prefix + digits;
    }

    inline std::string simplex_family(std::size_t k) {
      return "A_[" + std::to_string(k) + "]";
    }

  }  // namespace detail

  inline ContextSchema semisimplicial_type(std::size_t n) {
    ContextSchema s;
    s.title             = "semisimplicial";
    s.metadata["kind"]  = "semisimplicial";
    for (std::size_t k = 0; k <= n; ++k) {
      SigmaTel tel;
      for (std::size_t m = 0; m < k; ++m) {
        for (auto const& d : injective_maps(m, k)) {
          std::string binder = detail::face_binder(d.values(), k);
          if (m == 0) {
            tel.bindings.push_back({binder, TypeExpr(Ref{detail::simplex_family(0)})});
            continue;
          }
          FamilyApp app{detail::simplex_family(m), {}};
          for (std::size_t j = 0; j < m; ++j) {
            for (auto const& e : injective_maps(j, m)) {
              app.args.push_back(detail::face_binder(compose_simplex(d, e).values(), k));
            }
          }
          tel.bindings.push_back({binder, TypeExpr(std::move(app))});
        }
      }
      TypeExpr t = tel.bindings.empty() ? TypeExpr(Universe{}) : fun(std::move(tel), Universe{});
      s.add(detail::simplex_family(k), std::move(t), "[" + std::to_string(k) + "]");
    }
    return s;
  }

  // Reedy fibrant diagrams over 𝔇ᵒᵖ truncated at n, with each marked
  // generator's boundary projection required to be an equivalence.
  inline ContextSchema simplicial_type(std::size_t n) {
    DCategory d    = frak_d(n);
    FinCategory op = opposite(d.category);
    // binder for the entry reached along the map f into list a: "x<a>_<f>"
    auto naming = [&](FinCategory const&, MatchingIndex const& m) {
      std::vector<std::string> out;
      for (auto const& e : m.entries) {
        std::string b = "x";
        for (std::size_t v : d.lists[e.target]) {
          b += std::to_string(v);
        }
        b += "_";
        for (std::size_t v : d.maps[e.arrow].values()) {
          b += std::to_string(v);
        }
        out.push_back(std::move(b));
      }
      return out;
    };
    ContextSchema s       = reedy_diagram_type(op, "A_", "simplicial", naming);
    s.metadata["kind"]    = "simplicial";
    s.metadata["marked"]  = std::to_string(d.marked_non_identity().size());
    for (MorphismId f : d.marked_generators()) {
      auto const& m  = d.category.morphism(f);
      ObjectId lower = m.source;  // in 𝔇ᵒᵖ: target of the projection
      ObjectId upper = m.target;
      auto entries   = matching_index(op, upper).entries;
      std::size_t via = 0;
      while (entries[via].arrow != f) {
        ++via;
      }
      std::string lo = d.category.object(lower).name;
      std::string up = d.category.object(upper).name;
      s.add("marked_" + lo + "→" + up, IsEquiv{"A_" + up, "A_" + lo, via}, "marked " + lo + "→" + up);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strictified fibers
  ////////////////////////////////////////////////////////////////////////

  // For each object i, the fiber A_i over its matching context M^A_i,
  // relative to the components of `weak` (= weak_diagram_type(I)).
  inline std::vector<ContextSchema> strict_fiber_schemas(FinCategory const& c, ContextSchema const& weak) {
    StrictComponentPlan plan = strict_components(c);
    ElementsCategory base    = positive_nerve_elements(c);
    std::vector<ContextSchema> out;
    for (ObjectId i : detail::by_degree(c)) {
      ObjectPlan const& p   = plan.objects[i];
      FinCategory const& ec = p.extension.category;
      std::vector<Seq> fiber = p.matching_components;
      fiber.insert(fiber.end(), p.new_components.begin(), p.new_components.end());

      // names of the ι-chains, numbered only when a base name repeats
      auto base_name = [&](Seq const& q) {
        std::string b;
        switch (q.length()) {
          case 1:
            return detail::lowercase_first(ec.object(last_vertex(ec, q)).name);
          case 2:
            return "δ_" + ec.morphism(q.arrows[1]).label;
          case 3:
            b = "Θ";
            break;
          default:
            b = "τ" + std::to_string(q.length());
        }
        for (std::size_t k = 1; k < q.arrows.size(); ++k) {
          b += "_" + ec.morphism(q.arrows[k]).label;
        }
        return b;
      };
      std::map<std::string, std::size_t> total;
      for (auto const& q : fiber) {
        ++total[base_name(q)];
      }
      std::map<std::string, std::size_t> seen;
      std::map<Seq, std::string> name;
      for (auto const& q : fiber) {
        std::string b = base_name(q);
        name.emplace(q, total[b] == 1 ? b : b + "_" + std::to_string(++seen[b]));
      }
      auto face_name = [&](Seq const& q, std::vector<std::size_t> vertices) -> std::string {
        Seq f = face(ec, q, SimplexMap(q.length(), std::move(vertices)));
        if (f.start == p.extension.iota) {
          return name.at(f);
        }
        return weak.components.at(base.index_of(f)).name;
      };

      ContextSchema s;
      s.title                = "A_" + c.object(i).name;
      s.metadata["kind"]     = "strict-fiber";
      s.metadata["object"]   = c.object(i).name;
      s.metadata["matching"] = std::to_string(p.matching_components.size());
      for (std::size_t k = 0; k < fiber.size(); ++k) {
        Seq const& q = fiber[k];
        TypeExpr t;
        switch (q.length()) {
          case 1:
            t = Ref{face_name(q, {1})};
            break;
          case 2:
            t = EqType{PathExpr::apply(face_name(q, {1, 2}), PathExpr::named(face_name(q, {0, 1}))),
                       PathExpr::named(face_name(q, {0, 2}))};
            break;
          case 3:
            t = EqType{PathExpr::named(face_name(q, {0, 1, 3})),
                       PathExpr::concat({PathExpr::happly(face_name(q, {1, 2, 3}),
                                                          PathExpr::named(face_name(q, {0, 1}))),
                                         PathExpr::ap(face_name(q, {2, 3}),
                                                      PathExpr::named(face_name(q, {0, 1, 2}))),
                                         PathExpr::named(face_name(q, {0, 2, 3}))})};
            break;
          default: {
            OpaqueT o{q.length(), {}};
            for (std::size_t m = 0; m < q.length(); ++m) {
              for (auto const& d : injective_maps(m, q.length())) {
                o.boundary.push_back(face_name(q, d.values()));
              }
            }
            t = std::move(o);
          }
        }
        s.add(name.at(q), std::move(t), k < p.matching_components.size() ? "matching" : "new");
      }
      out.push_back(std::move(s));
    }
    return out;
  }

}  // namespace diagram_forge
