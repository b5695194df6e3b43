#pragma once

// Strictification bookkeeping: the ι-extensions I + ι, I + ι→i and
// I + ι⇢i, the per-object split of chains into fiber components and
// matching components, and the Sp / fibrant-replacement schemas.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "fincat.hpp"
#include "inverse.hpp"
#include "nerve.hpp"
#include "report.hpp"
#include "schema.hpp"

namespace diagram_forge {

  enum class IotaVariant { plain, arrow, dashed };

  inline constexpr char const* iota_name = "ι";

  struct IotaExtension {
    IotaVariant variant = IotaVariant::plain;
    std::optional<ObjectId> anchor;  // i for arrow / dashed
    FinCategory category;
    ObjectId iota = 0;
    // Objects and morphisms of I keep their ids. For a morphism of the
    // extension out of ι, the morphism f ∈ I(i,-) it stands for (ι→i
    // itself is id_i).
    std::map<MorphismId, MorphismId> via;

    bool from_iota(MorphismId m) const {
      return via.count(m) > 0;
    }
  };

  inline IotaExtension extend_with_iota(FinCategory const& base, IotaVariant variant,
                                        std::optional<ObjectId> i = std::nullopt) {
    if (variant != IotaVariant::plain) {
      if (!i) {
        throw UnknownObject("this ι-extension needs an anchor object");
      }
      if (*i >= base.object_count()) {
        throw UnknownObject("anchor object id out of range");
      }
    }
    IotaExtension ext;
    ext.variant = variant;
    ext.anchor  = variant == IotaVariant::plain ? std::nullopt : i;

    CategoryBuilder b;
    std::size_t top = 0;
    for (auto const& o : base.objects()) {
      b.add_object(o.name, o.degree);
      top = std::max(top, o.degree);
    }
    for (MorphismId f = 0; f < base.morphism_count(); ++f) {
      auto const& m = base.morphism(f);
      if (!m.identity) {
        b.add_morphism(m.source, m.target, m.label, m.marked, m.witness);
      }
    }
    ext.iota = b.add_object(iota_name, base.object_count() == 0 ? 0 : top + 1);

    std::map<MorphismId, MorphismId> by_underlying;  // f -> extension morphism
    if (variant != IotaVariant::plain) {
      std::vector<MorphismId> outs = base.out(*i);
      std::stable_sort(outs.begin(), outs.end(), [&](MorphismId a, MorphismId c) {
        return base.degree(base.morphism(a).target) < base.degree(base.morphism(c).target);
      });
      for (MorphismId f : outs) {
        bool anchor_arrow = base.is_identity(f);
        if (anchor_arrow && variant == IotaVariant::dashed) {
          continue;
        }
        std::string label = anchor_arrow ? std::string(iota_name) + "→" + base.object(*i).name
                                         : base.morphism(f).label + "∘" + iota_name;
        MorphismId m = b.add_morphism(ext.iota, base.morphism(f).target, label);
        ext.via.emplace(m, f);
        by_underlying.emplace(f, m);
      }
    }
    ext.category = std::move(b).build([&](MorphismId g, MorphismId f) {
      auto it = ext.via.find(f);
      if (it == ext.via.end()) {
        return base.compose(g, f);
      }
      return by_underlying.at(base.compose(g, it->second));
    });
    return ext;
  }

  // A chain of some ι-extension of I written in terms of I alone: the
  // start is an object of I or ι (-1); arrows are morphisms of I (>= 0) or
  // ι-morphisms standing for f (encoded -1 - f). Lets chains of different
  // extensions be compared.
  struct ChainKey {
    long start = 0;
    std::vector<long> arrows;

    friend bool operator==(ChainKey const&, ChainKey const&) = default;
    friend auto operator<=>(ChainKey const&, ChainKey const&) = default;
  };

  inline ChainKey chain_key(IotaExtension const& ext, Seq const& s) {
    ChainKey k;
    k.start = s.start == ext.iota ? -1 : static_cast<long>(s.start);
    for (MorphismId m : s.arrows) {
      auto it = ext.via.find(m);
      k.arrows.push_back(it == ext.via.end() ? static_cast<long>(m) : -1 - static_cast<long>(it->second));
    }
    return k;
  }

  inline std::set<ChainKey> chain_keys(IotaExtension const& ext, ElementsCategory const& n) {
    std::set<ChainKey> out;
    for (auto const& s : n.objects()) {
      out.insert(chain_key(ext, s));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Component plan
  ////////////////////////////////////////////////////////////////////////

  struct ObjectPlan {
    ObjectId object = 0;
    IotaExtension extension;  // the arrow(object) extension
    ElementsCategory nerve;   // ∫N⁺ of that extension
    std::vector<Seq> new_components;       // chains ι→i→...
    std::vector<Seq> matching_components;  // other chains out of ι

    // the component's level in T
    static std::size_t level(Seq const& s) {
      return s.length();
    }
  };

  struct StrictComponentPlan {
    std::vector<ObjectPlan> objects;  // indexed by object id of I
  };

  inline ObjectPlan plan_for(FinCategory const& base, ObjectId i) {
    IotaExtension ext = extend_with_iota(base, IotaVariant::arrow, i);
    ElementsCategory n = positive_nerve_elements(ext.category);
    ObjectPlan p{i, ext, n, {}, {}};
    for (auto const& s : p.nerve.objects()) {
      if (s.start != ext.iota || s.arrows.empty()) {
        continue;
      }
      if (base.is_identity(ext.via.at(s.arrows.front()))) {
        p.new_components.push_back(s);
      } else {
        p.matching_components.push_back(s);
      }
    }
    return p;
  }

  inline StrictComponentPlan strict_components(FinCategory const& base) {
    require_inverse(base, "strict_components");
    StrictComponentPlan plan;
    for (ObjectId i = 0; i < base.object_count(); ++i) {
      plan.objects.push_back(plan_for(base, i));
    }
    return plan;
  }

  // The chains of ∫N⁺(I + ι⇢i) that are not in ∫N⁺(I + ι) must be exactly
  // the fiber components of the arrow(x) extensions over (x, f) ∈ i⫽I, with
  // their first arrow ι→x read as f∘ι.
  inline Report verify_matching_claim(FinCategory const& base) {
    Report r;
    r.title = "matching claim";
    require_inverse(base, "verify_matching_claim");
    auto plain      = extend_with_iota(base, IotaVariant::plain);
    auto plain_keys = chain_keys(plain, positive_nerve_elements(plain.category));
    StrictComponentPlan plan = strict_components(base);
    for (ObjectId i = 0; i < base.object_count(); ++i) {
      auto dashed = extend_with_iota(base, IotaVariant::dashed, i);
      std::set<ChainKey> lhs;
      for (auto const& k : chain_keys(dashed, positive_nerve_elements(dashed.category))) {
        if (!plain_keys.count(k)) {
          lhs.insert(k);
        }
      }
      std::set<ChainKey> rhs;
      std::size_t expected = 0;
      for (auto const& e : matching_index(base, i).entries) {
        auto const& px = plan.objects[e.target];
        for (auto const& s : px.new_components) {
          ChainKey k  = chain_key(px.extension, s);
          k.arrows[0] = -1 - static_cast<long>(e.arrow);
          rhs.insert(k);
          ++expected;
        }
      }
      std::string where = base.object(i).name;
      if (rhs.size() != expected) {
        r.add("disjoint", where, "fiber components of the coslice overlap");
      }
      for (auto const& k : lhs) {
        if (!rhs.count(k)) {
          r.add("missing", where, "a chain of the dashed extension is not a coslice fiber component");
        }
      }
      for (auto const& k : rhs) {
        if (!lhs.count(k)) {
          r.add("extra", where, "a coslice fiber component is not a chain of the dashed extension");
        }
      }
      // the plan's own matching components must be the same set
      std::set<ChainKey> own;
      for (auto const& s : plan.objects[i].matching_components) {
        own.insert(chain_key(plan.objects[i].extension, s));
      }
      if (own != lhs) {
        r.add("plan", where, "matching components differ from the dashed extension");
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sp and fibrant replacement
  ////////////////////////////////////////////////////////////////////////

  // (n+1) types and n functions between them.
  inline ContextSchema sp_schema(std::size_t n) {
    ContextSchema s;
    s.title = "Sp_[" + std::to_string(n) + "]";
    for (std::size_t k = 0; k <= n; ++k) {
      s.add("A_" + std::to_string(k), Universe{}, "[" + std::to_string(k) + "]");
    }
    for (std::size_t k = 0; k < n; ++k) {
      s.add("f_" + std::to_string(k),
            fun(Ref{"A_" + std::to_string(k)}, Ref{"A_" + std::to_string(k + 1)}),
            std::to_string(k) + "→" + std::to_string(k + 1));
    }
    return s;
  }

  // G_x over the matching context: a point of F_x together with one
  // equality per matching component, η̃_k(a) = m_k. `maps[k]` names η̃_k
  // (default "η̃_" + component name); the point is named `point`.
  inline ContextSchema fibrant_replacement_schema(std::string const& f_component,
                                                  ContextSchema const& matching,
                                                  std::vector<std::string> maps = {},
                                                  std::string point = {}) {
    if (maps.empty()) {
      for (auto const& c : matching.components) {
        maps.push_back("η̃_" + c.name);
      }
    }
    if (maps.size() != matching.size()) {
      throw SpecError("fibrant replacement needs one map per matching component");
    }
    if (point.empty()) {
      point = "a";
    }
    ContextSchema g;
    g.title = "G(" + f_component + ")";
    for (auto const& c : matching.components) {
      g.add(c.name, c.type, "matching");
    }
    g.add(point, Ref{f_component}, f_component);
    for (std::size_t k = 0; k < matching.size(); ++k) {
      std::string const& m = matching.components[k].name;
      g.add("δ_" + maps[k],
            EqType{PathExpr::apply(maps[k], PathExpr::named(point)), PathExpr::named(m)}, m);
    }
    std::string tuple;
    for (auto const& m : maps) {
      tuple += (tuple.empty() ? "" : ", ") + m + "(" + point + ")";
    }
    g.metadata["unit"] = point + " ↦ ((" + tuple + "), " + point + ", refl)";
    return g;
  }

}  // namespace diagram_forge
