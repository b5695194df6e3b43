#pragma once

// Categories of elements of nerves: ∫N⁺I (composable chains of
// non-identity arrows, face maps only) and the length-truncated ∫N C where
// identities may occur in chains.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "fincat.hpp"
#include "report.hpp"
#include "simplex.hpp"

namespace diagram_forge {

  // A chain start -> ... stored in composition order: arrows[0] leaves
  // start, arrows[k+1] leaves the target of arrows[k].
  struct Seq {
    ObjectId start = 0;
    std::vector<MorphismId> arrows;

    std::size_t length() const noexcept {
      return arrows.size();
    }

    friend bool operator==(Seq const&, Seq const&) = default;
    friend auto operator<=>(Seq const& a, Seq const& b) {
      if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) {
        return c;
      }
      if (auto c = a.start <=> b.start; c != 0) {
        return c;
      }
      return a.arrows <=> b.arrows;
    }
  };

  inline std::size_t shape(Seq const& s) noexcept {
    return s.length();
  }

  // Vertex k of the chain (0 = start).
  inline ObjectId vertex(FinCategory const& c, Seq const& s, std::size_t k) {
    return k == 0 ? s.start : c.morphism(s.arrows.at(k - 1)).target;
  }

  inline ObjectId last_vertex(FinCategory const& c, Seq const& s) {
    return vertex(c, s, s.length());
  }

  // Objects print as their name, single arrows as their label and longer
  // chains as a tuple of labels: x, u∘w, (w,u).
  inline std::string seq_label(FinCategory const& c, Seq const& s) {
    if (s.arrows.empty()) {
      return c.object(s.start).name;
    }
    if (s.arrows.size() == 1) {
      return c.morphism(s.arrows[0]).label;
    }
    std::string out = "(";
    for (std::size_t k = 0; k < s.arrows.size(); ++k) {
      if (k > 0) {
        out += ',';
      }
      out += c.morphism(s.arrows[k]).label;
    }
    return out + ")";
  }

  // The face of s spanned by the vertices d(0) < ... < d(m); consecutive
  // runs of arrows are composed.
  inline Seq face(FinCategory const& c, Seq const& s, SimplexMap const& d) {
    if (d.codomain() != s.length()) {
      throw NotComposable("face map " + d.str() + " does not fit a chain of length "
                          + std::to_string(s.length()));
    }
    Seq t;
    t.start = vertex(c, s, d(0));
    for (std::size_t k = 0; k < d.domain(); ++k) {
      std::vector<MorphismId> run(s.arrows.begin() + static_cast<std::ptrdiff_t>(d(k)),
                                  s.arrows.begin() + static_cast<std::ptrdiff_t>(d(k + 1)));
      if (run.empty()) {
        t.arrows.push_back(c.identity(vertex(c, s, d(k))));
      } else {
        std::reverse(run.begin(), run.end());
        t.arrows.push_back(c.compose_all(run));
      }
    }
    return t;
  }

  class ElementsCategory {
   public:
    ElementsCategory(FinCategory base, std::vector<Seq> objects, bool allow_identities,
                     std::optional<std::size_t> truncation)
        : base_(std::move(base)),
          objects_(std::move(objects)),
          allow_identities_(allow_identities),
          truncation_(truncation) {
      std::sort(objects_.begin(), objects_.end());
      for (std::size_t k = 0; k < objects_.size(); ++k) {
        index_.emplace(objects_[k], k);
      }
    }

    FinCategory const& base() const noexcept {
      return base_;
    }
    std::vector<Seq> const& objects() const noexcept {
      return objects_;
    }
    std::size_t size() const noexcept {
      return objects_.size();
    }
    Seq const& object(std::size_t k) const {
      return objects_.at(k);
    }
    bool allow_identities() const noexcept {
      return allow_identities_;
    }
    std::optional<std::size_t> truncation() const noexcept {
      return truncation_;
    }

    std::optional<std::size_t> find(Seq const& s) const {
      auto it = index_.find(s);
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    std::size_t index_of(Seq const& s) const {
      if (auto k = find(s)) {
        return *k;
      }
      throw UnknownObject("chain " + label(s) + " is not an object of this category of elements");
    }

    std::string label(Seq const& s) const {
      return seq_label(base_, s);
    }

    // Length-1 chains on an identity; the Harpaz marking.
    bool marked(Seq const& s) const {
      return s.length() == 1 && base_.is_identity(s.arrows[0]);
    }

    // Every face map d with face(s, d) = t, in lexicographic order.
    std::vector<SimplexMap> seq_morphisms(Seq const& s, Seq const& t) const {
      std::vector<SimplexMap> out;
      if (t.length() > s.length()) {
        return out;
      }
      for (auto& d : injective_maps(t.length(), s.length())) {
        if (face(base_, s, d) == t) {
          out.push_back(std::move(d));
        }
      }
      return out;
    }

    std::optional<SimplexMap> seq_morphism(Seq const& s, Seq const& t) const {
      if (t.length() > s.length()) {
        return std::nullopt;
      }
      for (auto& d : injective_maps(t.length(), s.length())) {
        if (face(base_, s, d) == t) {
          return std::move(d);
        }
      }
      return std::nullopt;
    }

    // All proper faces of s, i.e. images under non-identity face maps,
    // ordered by (length, vertex subset).
    std::vector<std::pair<SimplexMap, Seq>> proper_faces(Seq const& s) const {
      std::vector<std::pair<SimplexMap, Seq>> out;
      for (std::size_t m = 0; m < s.length(); ++m) {
        for (auto& d : injective_maps(m, s.length())) {
          Seq t = face(base_, s, d);
          out.emplace_back(std::move(d), std::move(t));
        }
      }
      return out;
    }

    // The category itself: objects in canonical order with degree = length,
    // one morphism per face map.
    struct Materialized {
      FinCategory category;
      std::vector<SimplexMap> witness;  // morphism id -> face map
    };

    Materialized to_category() const {
      Materialized out;
      CategoryBuilder b;
      for (auto const& s : objects_) {
        b.add_object(label(s), s.length());
      }
      for (std::size_t k = 0; k < objects_.size(); ++k) {
        out.witness.push_back(SimplexMap::identity(objects_[k].length()));
      }
      std::map<std::pair<std::size_t, SimplexMap>, MorphismId> by_face;
      for (std::size_t k = 0; k < objects_.size(); ++k) {
        by_face.emplace(std::pair{k, SimplexMap::identity(objects_[k].length())}, b.identity(k));
      }
      for (std::size_t k = 0; k < objects_.size(); ++k) {
        for (auto& [d, t] : proper_faces(objects_[k])) {
          std::size_t j = index_of(t);
          MorphismId m = b.add_morphism(k, j, label(objects_[k]) + "→" + label(t) + d.str());
          by_face.emplace(std::pair{k, d}, m);
          out.witness.push_back(d);
        }
      }
      std::vector<std::size_t> source(out.witness.size());
      for (auto const& [key, m] : by_face) {
        source[m] = key.first;
      }
      out.category = std::move(b).build([&](MorphismId g, MorphismId f) {
        // a face of a face: compose the vertex inclusions
        return by_face.at({source[f], compose_simplex(out.witness[f], out.witness[g])});
      });
      return out;
    }

   private:
    FinCategory base_;
    std::vector<Seq> objects_;
    std::map<Seq, std::size_t> index_;
    bool allow_identities_ = false;
    std::optional<std::size_t> truncation_;
  };

  namespace detail {

    inline std::vector<Seq> enumerate_chains(FinCategory const& c, bool identities,
                                             std::size_t max_length) {
      std::vector<Seq> all;
      std::vector<Seq> level;
      for (ObjectId x = 0; x < c.object_count(); ++x) {
        level.push_back({x, {}});
      }
      for (std::size_t len = 0; !level.empty(); ++len) {
        all.insert(all.end(), level.begin(), level.end());
        if (len == max_length) {
          break;
        }
        std::vector<Seq> next;
        for (auto const& s : level) {
          for (MorphismId f : c.out(last_vertex(c, s))) {
            if (!identities && c.is_identity(f)) {
              continue;
            }
            Seq t = s;
            t.arrows.push_back(f);
            next.push_back(std::move(t));
          }
        }
        level = std::move(next);
      }
      return all;
    }

  }  // namespace detail

  // ∫N⁺I. The chain length is bounded by the longest path, so the result is
  // finite exactly when the non-identity arrows have no cycle.
  inline ElementsCategory positive_nerve_elements(FinCategory const& c) {
    auto depth = longest_path_degrees(c);
    if (!depth) {
      throw NotInverse("composable cycle of non-identity morphisms; the positive nerve is infinite");
    }
    std::size_t longest = 0;
    for (std::size_t d : *depth) {
      longest = std::max(longest, d);
    }
    return ElementsCategory(c, detail::enumerate_chains(c, false, longest), false, std::nullopt);
  }

  // ∫N C restricted to chains of length <= k, identities allowed.
  inline ElementsCategory nerve_elements_truncated(FinCategory const& c, std::size_t k) {
    return ElementsCategory(c, detail::enumerate_chains(c, true, k), true, k);
  }

  // |hom(s,t)| <= 1 for all s, t.
  inline Report check_preorder(ElementsCategory const& n) {
    Report r;
    r.title = "preorder";
    for (auto const& s : n.objects()) {
      for (auto const& t : n.objects()) {
        auto ds = n.seq_morphisms(s, t);
        if (ds.size() > 1) {
          r.add("hom-size", n.label(s) + " -> " + n.label(t),
                std::to_string(ds.size()) + " distinct face maps");
        }
      }
    }
    return r;
  }

  // shape is a discrete opfibration onto Δ₊ᵒᵖ: every face map out of the
  // shape of s lifts to exactly one morphism with source s.
  inline Report check_shape_opfibration(ElementsCategory const& n) {
    Report r;
    r.title = "shape opfibration";
    auto mat = n.to_category();
    auto const& c = mat.category;
    for (ObjectId k = 0; k < c.object_count(); ++k) {
      std::size_t len = n.object(k).length();
      for (std::size_t m = 0; m <= len; ++m) {
        for (auto const& d : injective_maps(m, len)) {
          std::size_t lifts = 0;
          for (MorphismId f : c.out(k)) {
            if (mat.witness[f] == d) {
              ++lifts;
            }
          }
          if (lifts != 1) {
            r.add("lift", n.label(n.object(k)) + " along " + d.str(),
                  std::to_string(lifts) + " lifts");
          }
        }
      }
    }
    return r;
  }

}  // namespace diagram_forge
