#pragma once

// Explicit finite categories and their construction from finite
// presentations (generators + relations).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace diagram_forge {

  using ObjectId   = std::size_t;
  using MorphismId = std::size_t;

  // A word of generator indices, outermost-first: {u, w} means u ∘ w.
  using Word = std::vector<std::size_t>;

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  struct ObjectSpec {
    std::string name;
    std::optional<std::size_t> degree;
  };

  struct GeneratorSpec {
    std::string name;
    std::string source;
    std::string target;
  };

  // Words are lists of generator names, outermost-first.
  using NamedWord = std::vector<std::string>;

  struct CategorySpec {
    std::vector<ObjectSpec> objects;
    std::vector<GeneratorSpec> generators;
    std::vector<std::pair<NamedWord, NamedWord>> relations;
  };

  ////////////////////////////////////////////////////////////////////////
  // FinCategory
  ////////////////////////////////////////////////////////////////////////

  struct Object {
    std::string name;
    std::size_t degree = 0;
  };

  struct Morphism {
    ObjectId source = 0;
    ObjectId target = 0;
    bool identity   = false;
    bool marked     = false;
    std::string label;
    // Representative generator word; empty for identities and for
    // categories that were not built from a presentation.
    Word witness;
  };

  class CategoryBuilder;

  // An explicit finite category. Immutable once built; all queries are
  // const and safe for concurrent readers.
  class FinCategory {
   public:
    FinCategory() = default;

    std::size_t object_count() const noexcept {
      return objects_.size();
    }
    std::size_t morphism_count() const noexcept {
      return morphisms_.size();
    }

    Object const& object(ObjectId x) const {
      return objects_.at(x);
    }
    Morphism const& morphism(MorphismId f) const {
      return morphisms_.at(f);
    }
    std::span<Object const> objects() const noexcept {
      return objects_;
    }
    std::span<Morphism const> morphisms() const noexcept {
      return morphisms_;
    }

    MorphismId identity(ObjectId x) const {
      return identities_.at(x);
    }
    bool is_identity(MorphismId f) const {
      return morphisms_.at(f).identity;
    }
    std::size_t degree(ObjectId x) const {
      return objects_.at(x).degree;
    }

    // Morphisms x -> y, ascending id.
    std::vector<MorphismId> const& hom(ObjectId x, ObjectId y) const {
      check_object(x);
      check_object(y);
      return hom_[x * objects_.size() + y];
    }

    // All morphisms with source x, ascending id.
    std::vector<MorphismId> const& out(ObjectId x) const {
      check_object(x);
      return out_.at(x);
    }

    // g ∘ f
    MorphismId compose(MorphismId g, MorphismId f) const {
      auto const& mf = morphisms_.at(f);
      auto const& mg = morphisms_.at(g);
      if (mf.target != mg.source) {
        throw NotComposable("cannot compose " + mg.label + " after " + mf.label
                            + ": target " + objects_[mf.target].name + " != source "
                            + objects_[mg.source].name);
      }
      if (mf.identity) {
        return g;
      }
      if (mg.identity) {
        return f;
      }
      return compose_.at(key(g, f));
    }

    // Composes a chain given outermost-first.
    MorphismId compose_all(std::span<MorphismId const> chain) const {
      if (chain.empty()) {
        throw NotComposable("empty chain has no composite");
      }
      MorphismId acc = chain.back();
      for (std::size_t k = chain.size() - 1; k-- > 0;) {
        acc = compose(chain[k], acc);
      }
      return acc;
    }

    std::optional<ObjectId> find_object(std::string_view name) const {
      for (ObjectId x = 0; x < objects_.size(); ++x) {
        if (objects_[x].name == name) {
          return x;
        }
      }
      return std::nullopt;
    }

    ObjectId object_named(std::string_view name) const {
      if (auto x = find_object(name)) {
        return *x;
      }
      throw UnknownObject("unknown object '" + std::string(name) + "'");
    }

    // First morphism with the given label (labels are unique for
    // categories built from presentations).
    std::optional<MorphismId> find_morphism(std::string_view label) const {
      for (MorphismId f = 0; f < morphisms_.size(); ++f) {
        if (morphisms_[f].label == label) {
          return f;
        }
      }
      return std::nullopt;
    }

    MorphismId morphism_labelled(std::string_view label) const {
      if (auto f = find_morphism(label)) {
        return *f;
      }
      throw SpecError("unknown morphism '" + std::string(label) + "'");
    }

    // Generator names in canonical (sorted) order; indices in witness words
    // refer to this list.
    std::vector<std::string> const& generator_names() const noexcept {
      return generators_;
    }

    // The morphism a generator name stands for (only for categories built
    // from presentations).
    MorphismId generator(std::string_view name) const {
      for (std::size_t k = 0; k < generators_.size() && k < generator_morphisms_.size(); ++k) {
        if (generators_[k] == name) {
          return generator_morphisms_[k];
        }
      }
      throw SpecError("unknown generator '" + std::string(name) + "'");
    }

    // g_1 ∘ ... ∘ g_k for a word of generator names, outermost first.
    MorphismId word(std::vector<std::string> const& names) const {
      if (names.empty()) {
        throw SpecError("empty generator word");
      }
      std::vector<MorphismId> chain;
      for (auto const& n : names) {
        chain.push_back(generator(n));
      }
      return compose_all(chain);
    }

    // Number of entries in the composition table (composable pairs of
    // non-identity morphisms).
    std::size_t composition_table_size() const noexcept {
      return compose_.size();
    }

    // Same category with a different degree map.
    FinCategory with_degrees(std::vector<std::size_t> const& degrees) const {
      if (degrees.size() != objects_.size()) {
        throw SpecError("degree table has wrong length");
      }
      FinCategory copy = *this;
      for (ObjectId x = 0; x < objects_.size(); ++x) {
        copy.objects_[x].degree = degrees[x];
      }
      return copy;
    }

    // Same category with a different marking.
    FinCategory with_marking(std::vector<bool> const& marked) const {
      if (marked.size() != morphisms_.size()) {
        throw SpecError("marking table has wrong length");
      }
      FinCategory copy = *this;
      for (MorphismId f = 0; f < morphisms_.size(); ++f) {
        copy.morphisms_[f].marked = marked[f];
      }
      return copy;
    }

   private:
    friend class CategoryBuilder;

    static std::uint64_t key(MorphismId g, MorphismId f) noexcept {
      return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(f);
    }

    void check_object(ObjectId x) const {
      if (x >= objects_.size()) {
        throw UnknownObject("object id " + std::to_string(x) + " out of range");
      }
    }

    std::vector<Object> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorphismId> identities_;
    std::vector<std::vector<MorphismId>> hom_;
    std::vector<std::vector<MorphismId>> out_;
    std::unordered_map<std::uint64_t, MorphismId> compose_;
    std::vector<std::string> generators_;
    std::vector<MorphismId> generator_morphisms_;
  };

  // Assembles a FinCategory from explicit objects and morphisms. Identities
  // are created by add_object and are always marked.
  class CategoryBuilder {
   public:
    // (g, f) -> g ∘ f, called only for composable non-identity pairs.
    using ComposeFn = std::function<MorphismId(MorphismId, MorphismId)>;

    ObjectId add_object(std::string name, std::size_t degree = 0) {
      ObjectId x = cat_.objects_.size();
      cat_.objects_.push_back({std::move(name), degree});
      MorphismId id = cat_.morphisms_.size();
      Morphism m;
      m.source   = x;
      m.target   = x;
      m.identity = true;
      m.marked   = true;
      m.label    = "id_" + cat_.objects_.back().name;
      cat_.morphisms_.push_back(std::move(m));
      cat_.identities_.push_back(id);
      return x;
    }

    MorphismId add_morphism(ObjectId source,
                            ObjectId target,
                            std::string label,
                            bool marked  = false,
                            Word witness = {}) {
      if (source >= cat_.objects_.size() || target >= cat_.objects_.size()) {
        throw UnknownObject("morphism endpoint out of range");
      }
      MorphismId f = cat_.morphisms_.size();
      Morphism m;
      m.source  = source;
      m.target  = target;
      m.marked  = marked;
      m.label   = std::move(label);
      m.witness = std::move(witness);
      cat_.morphisms_.push_back(std::move(m));
      return f;
    }

    MorphismId identity(ObjectId x) const {
      return cat_.identities_.at(x);
    }

    void set_generators(std::vector<std::string> names, std::vector<MorphismId> morphisms = {}) {
      cat_.generators_           = std::move(names);
      cat_.generator_morphisms_  = std::move(morphisms);
    }

    std::size_t object_count() const noexcept {
      return cat_.objects_.size();
    }

    Morphism const& morphism(MorphismId f) const {
      return cat_.morphisms_.at(f);
    }

    // Tabulates composition over every composable non-identity pair and
    // returns the finished category.
    FinCategory build(ComposeFn const& compose) && {
      FinCategory& c = cat_;
      std::size_t const n = c.objects_.size();
      c.hom_.assign(n * n, {});
      c.out_.assign(n, {});
      for (MorphismId f = 0; f < c.morphisms_.size(); ++f) {
        auto const& m = c.morphisms_[f];
        c.hom_[m.source * n + m.target].push_back(f);
        c.out_[m.source].push_back(f);
      }
      for (MorphismId f = 0; f < c.morphisms_.size(); ++f) {
        auto const& mf = c.morphisms_[f];
        if (mf.identity) {
          continue;
        }
        for (MorphismId g : c.out_[mf.target]) {
          auto const& mg = c.morphisms_[g];
          if (mg.identity) {
            continue;
          }
          MorphismId h = compose(g, f);
          if (h >= c.morphisms_.size() || c.morphisms_[h].source != mf.source
              || c.morphisms_[h].target != mg.target) {
            throw NotComposable("composite of " + mg.label + " and " + mf.label
                                + " has wrong endpoints");
          }
          c.compose_.emplace(FinCategory::key(g, f), h);
        }
      }
      return std::move(cat_);
    }

   private:
    FinCategory cat_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Helpers over FinCategory
  ////////////////////////////////////////////////////////////////////////

  // Degrees by longest path: objects without outgoing non-identity
  // morphisms get 0, otherwise 1 + max over targets. Returns nullopt when
  // the non-identity morphism graph has a cycle (including non-identity
  // endomorphisms).
  inline std::optional<std::vector<std::size_t>> longest_path_degrees(FinCategory const& c) {
    std::size_t const n = c.object_count();
    std::vector<std::size_t> degree(n, 0);
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    bool cyclic = false;
    std::function<void(ObjectId)> visit = [&](ObjectId x) {
      state[x] = 1;
      for (MorphismId f : c.out(x)) {
        auto const& m = c.morphism(f);
        if (m.identity) {
          continue;
        }
        if (state[m.target] == 1) {
          cyclic = true;
          continue;
        }
        if (state[m.target] == 0) {
          visit(m.target);
        }
        degree[x] = std::max(degree[x], degree[m.target] + 1);
      }
      state[x] = 2;
    };
    for (ObjectId x = 0; x < n; ++x) {
      if (state[x] == 0) {
        visit(x);
      }
    }
    if (cyclic) {
      return std::nullopt;
    }
    return degree;
  }

  // Same objects, reversed morphisms (same labels and markings).
  inline FinCategory opposite(FinCategory const& c) {
    CategoryBuilder b;
    for (auto const& o : c.objects()) {
      b.add_object(o.name, o.degree);
    }
    std::vector<MorphismId> to_new(c.morphism_count());
    std::vector<MorphismId> to_old(c.morphism_count());
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      auto const& m = c.morphism(f);
      to_new[f] = m.identity ? b.identity(m.source)
                             : b.add_morphism(m.target, m.source, m.label, m.marked, m.witness);
      to_old[to_new[f]] = f;
    }
    b.set_generators(c.generator_names());
    return std::move(b).build([&](MorphismId g, MorphismId f) {
      // g ∘op f = f ∘ g in the original category
      return to_new[c.compose(to_old[f], to_old[g])];
    });
  }

  // Full subcategory on the given objects (kept in ascending id order).
  struct Subcategory {
    FinCategory category;
    std::vector<ObjectId> inclusion;       // new object id -> old object id
    std::vector<MorphismId> morphism_map;  // new morphism id -> old morphism id
  };

  inline Subcategory full_subcategory(FinCategory const& c, std::vector<ObjectId> objects) {
    std::sort(objects.begin(), objects.end());
    objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
    Subcategory sub;
    CategoryBuilder b;
    std::vector<std::optional<ObjectId>> to_new_obj(c.object_count());
    for (ObjectId x : objects) {
      to_new_obj.at(x) = b.add_object(c.object(x).name, c.object(x).degree);
      sub.inclusion.push_back(x);
    }
    std::vector<std::optional<MorphismId>> to_new(c.morphism_count());
    std::vector<MorphismId> to_old(objects.size());
    for (ObjectId x : objects) {
      to_new[c.identity(x)]              = b.identity(*to_new_obj[x]);
      to_old[b.identity(*to_new_obj[x])] = c.identity(x);
    }
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      auto const& m = c.morphism(f);
      if (m.identity || !to_new_obj[m.source] || !to_new_obj[m.target]) {
        continue;
      }
      to_new[f] = b.add_morphism(*to_new_obj[m.source], *to_new_obj[m.target], m.label,
                                 m.marked, m.witness);
      to_old.push_back(f);
    }
    b.set_generators(c.generator_names());
    sub.category = std::move(b).build(
        [&](MorphismId g, MorphismId f) { return *to_new[c.compose(to_old[g], to_old[f])]; });
    sub.morphism_map = std::move(to_old);
    return sub;
  }

  ////////////////////////////////////////////////////////////////////////
  // Saturation of presentations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    struct UnionFind {
      std::vector<std::size_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t a) {
        while (parent[a] != a) {
          parent[a] = parent[parent[a]];
          a         = parent[a];
        }
        return a;
      }
      // The smaller index (earlier in length-lex order) becomes the root.
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent[b] = a;
      }
    };

    inline std::string join_word(std::vector<std::string> const& names,
                                 Word const& w,
                                 std::string_view sep) {
      std::string out;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0) {
          out += sep;
        }
        out += names[w[k]];
      }
      return out;
    }

  }  // namespace detail

  // Saturates a presentation. Morphisms are classes of composable
  // generator words modulo the congruence generated by the relations;
  // identity ids come first (one per object, in spec order), then the
  // non-identity classes ordered by their length-lex least representative
  // (lexicographic on generator names).
  inline FinCategory build_category(CategorySpec const& spec, std::size_t max_word_length) {
    std::map<std::string, ObjectId, std::less<>> object_index;
    for (auto const& o : spec.objects) {
      if (o.name.empty()) {
        throw SpecError("object with empty name");
      }
      if (!object_index.emplace(o.name, object_index.size()).second) {
        throw SpecError("duplicate object name '" + o.name + "'");
      }
    }
    std::vector<std::size_t> order(spec.generators.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return spec.generators[a].name < spec.generators[b].name;
    });
    std::vector<std::string> gen_names;
    std::vector<ObjectId> gen_src;
    std::vector<ObjectId> gen_dst;
    std::map<std::string, std::size_t, std::less<>> gen_index;
    for (std::size_t k : order) {
      auto const& g = spec.generators[k];
      if (g.name.empty()) {
        throw SpecError("generator with empty name");
      }
      auto s = object_index.find(g.source);
      auto t = object_index.find(g.target);
      if (s == object_index.end() || t == object_index.end()) {
        throw SpecError("generator '" + g.name + "' has unknown endpoint");
      }
      if (!gen_index.emplace(g.name, gen_names.size()).second) {
        throw SpecError("duplicate generator name '" + g.name + "'");
      }
      gen_names.push_back(g.name);
      gen_src.push_back(s->second);
      gen_dst.push_back(t->second);
    }

    auto composable = [&](Word const& w) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (gen_src[w[k]] != gen_dst[w[k + 1]]) {
          return false;
        }
      }
      return true;
    };

    std::vector<std::pair<Word, Word>> relations;
    std::size_t longest_relation = 0;
    for (auto const& [lhs, rhs] : spec.relations) {
      auto resolve = [&](NamedWord const& nw) {
        if (nw.empty()) {
          throw IllFormedRelation("relation word is empty");
        }
        Word w;
        for (auto const& name : nw) {
          auto it = gen_index.find(name);
          if (it == gen_index.end()) {
            throw IllFormedRelation("relation mentions unknown generator '" + name + "'");
          }
          w.push_back(it->second);
        }
        if (!composable(w)) {
          throw IllFormedRelation("relation word " + detail::join_word(gen_names, w, "∘")
                                  + " is not composable");
        }
        return w;
      };
      Word l = resolve(lhs);
      Word r = resolve(rhs);
      if (gen_src[l.back()] != gen_src[r.back()] || gen_dst[l.front()] != gen_dst[r.front()]) {
        throw IllFormedRelation("relation sides " + detail::join_word(gen_names, l, "∘") + " and "
                                + detail::join_word(gen_names, r, "∘") + " are not parallel");
      }
      longest_relation = std::max({longest_relation, l.size(), r.size()});
      relations.emplace_back(std::move(l), std::move(r));
    }
    if (max_word_length < longest_relation) {
      throw SaturationBound("word bound " + std::to_string(max_word_length)
                            + " is shorter than the longest relation word");
    }

    // Enumerate composable words in length-lex order, extending on the
    // innermost (right) end so each level stays lexicographically sorted.
    std::vector<Word> words;
    std::vector<Word> level;
    for (std::size_t g = 0; g < gen_names.size(); ++g) {
      level.push_back({g});
    }
    for (std::size_t len = 1; !level.empty(); ++len) {
      if (len > max_word_length) {
        throw SaturationBound("composable word " + detail::join_word(gen_names, level.front(), "∘")
                              + " exceeds the word bound " + std::to_string(max_word_length));
      }
      std::vector<Word> next;
      for (auto const& w : level) {
        for (std::size_t g = 0; g < gen_names.size(); ++g) {
          if (gen_src[w.back()] == gen_dst[g]) {
            Word v = w;
            v.push_back(g);
            next.push_back(std::move(v));
          }
        }
      }
      words.insert(words.end(), level.begin(), level.end());
      level = std::move(next);
    }

    std::map<Word, std::size_t> word_index;
    for (std::size_t k = 0; k < words.size(); ++k) {
      word_index.emplace(words[k], k);
    }

    // One-step rewrites a·l·b ~ a·r·b in every context.
    detail::UnionFind uf(words.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
      Word const& w = words[k];
      for (auto const& [l, r] : relations) {
        if (l.size() > w.size()) {
          continue;
        }
        for (std::size_t pos = 0; pos + l.size() <= w.size(); ++pos) {
          if (!std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
            continue;
          }
          Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          v.insert(v.end(), r.begin(), r.end());
          v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + l.size()), w.end());
          auto it = word_index.find(v);
          if (it == word_index.end()) {
            throw SaturationBound("rewritten word " + detail::join_word(gen_names, v, "∘")
                                  + " exceeds the word bound");
          }
          uf.unite(k, it->second);
        }
      }
    }

    CategoryBuilder b;
    for (auto const& o : spec.objects) {
      b.add_object(o.name, o.degree.value_or(0));
    }
    std::vector<Word> witness_of(spec.objects.size());
    std::vector<MorphismId> class_of(words.size());
    std::map<std::size_t, MorphismId> root_to_morphism;
    for (std::size_t k = 0; k < words.size(); ++k) {
      std::size_t root = uf.find(k);
      auto [it, fresh] = root_to_morphism.emplace(root, 0);
      if (fresh) {
        // roots are the least member, so the first visit is the representative
        Word const& rep = words[root];
        it->second      = b.add_morphism(gen_src[rep.back()], gen_dst[rep.front()],
                                    detail::join_word(gen_names, rep, "∘"), false, rep);
        witness_of.push_back(rep);
      }
      class_of[k] = it->second;
    }
    // the one-letter words come first
    std::vector<MorphismId> gen_morphisms(class_of.begin(),
                                          class_of.begin() + static_cast<std::ptrdiff_t>(gen_names.size()));
    b.set_generators(gen_names, std::move(gen_morphisms));

    FinCategory result = std::move(b).build([&](MorphismId g, MorphismId f) {
      Word w = witness_of[g];
      w.insert(w.end(), witness_of[f].begin(), witness_of[f].end());
      auto it = word_index.find(w);
      if (it == word_index.end()) {
        throw SaturationBound("composite " + detail::join_word(gen_names, w, "∘")
                              + " exceeds the word bound");
      }
      return class_of[it->second];
    });

    bool any_degree = false;
    bool all_degree = true;
    for (auto const& o : spec.objects) {
      any_degree = any_degree || o.degree.has_value();
      all_degree = all_degree && o.degree.has_value();
    }
    if (any_degree && !all_degree) {
      throw SpecError("either every object or no object must carry a degree");
    }
    if (!any_degree) {
      if (auto d = longest_path_degrees(result)) {
        result = result.with_degrees(*d);
      }
    }
    return result;
  }

  // Default word bound used by the CLI: one more than the longest chain of
  // generators a degree-respecting presentation can have.
  inline std::size_t default_word_bound(CategorySpec const& spec) {
    std::size_t longest = 0;
    for (auto const& [l, r] : spec.relations) {
      longest = std::max({longest, l.size(), r.size()});
    }
    return std::max(longest, spec.objects.size());
  }

}  // namespace diagram_forge
