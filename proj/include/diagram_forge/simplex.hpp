#pragma once

// Monotone maps between finite ordinals [m] = {0 < ... < m}, and finite
// truncations of Δ as explicit categories.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fincat.hpp"

namespace diagram_forge {

  class SimplexMap {
   public:
    SimplexMap() = default;

    // values[i] is the image of i; must be weakly increasing and <= codomain.
    SimplexMap(std::size_t codomain, std::vector<std::size_t> values)
        : codomain_(codomain), values_(std::move(values)) {
      if (values_.empty()) {
        throw SpecError("a monotone map needs a non-empty domain");
      }
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > codomain_ || (i > 0 && values_[i] < values_[i - 1])) {
          throw SpecError("not a monotone map into [" + std::to_string(codomain_) + "]: " + str());
        }
      }
    }

    static SimplexMap identity(std::size_t n) {
      std::vector<std::size_t> v(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        v[i] = i;
      }
      return {n, std::move(v)};
    }

    std::size_t domain() const noexcept {
      return values_.size() - 1;
    }
    std::size_t codomain() const noexcept {
      return codomain_;
    }
    std::vector<std::size_t> const& values() const noexcept {
      return values_;
    }
    std::size_t operator()(std::size_t i) const {
      return values_.at(i);
    }

    bool injective() const noexcept {
      return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
    }
    bool surjective() const noexcept {
      return values_.front() == 0 && values_.back() == codomain_
             && std::adjacent_find(values_.begin(), values_.end(),
                                   [](auto a, auto b) { return b > a + 1; })
                    == values_.end();
    }
    bool is_identity() const noexcept {
      return domain() == codomain_ && injective();
    }

    std::string str() const {
      std::string s = "(";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(values_[i]);
      }
      return s + ")";
    }

    friend bool operator==(SimplexMap const&, SimplexMap const&) = default;
    friend auto operator<=>(SimplexMap const& a, SimplexMap const& b) {
      if (auto c = a.codomain_ <=> b.codomain_; c != 0) {
        return c;
      }
      return a.values_ <=> b.values_;
    }
    friend std::ostream& operator<<(std::ostream& os, SimplexMap const& f) {
      return os << f.str();
    }

   private:
    std::size_t codomain_ = 0;
    std::vector<std::size_t> values_{0};
  };

  // g ∘ f
  inline SimplexMap compose_simplex(SimplexMap const& g, SimplexMap const& f) {
    if (f.codomain() != g.domain()) {
      throw NotComposable("cannot compose " + g.str() + " after " + f.str() + ": codomain ["
                          + std::to_string(f.codomain()) + "] is not [" + std::to_string(g.domain())
                          + "]");
    }
    std::vector<std::size_t> v;
    v.reserve(f.values().size());
    for (std::size_t x : f.values()) {
      v.push_back(g(x));
    }
    return {g.codomain(), std::move(v)};
  }

  // All monotone maps [m] -> [n] in lexicographic order of their values.
  inline std::vector<SimplexMap> monotone_maps(std::size_t m, std::size_t n) {
    std::vector<SimplexMap> out;
    std::vector<std::size_t> v(m + 1, 0);
    while (true) {
      out.emplace_back(n, v);
      // advance to the next weakly increasing tuple
      std::size_t k = m + 1;
      while (k > 0 && v[k - 1] == n) {
        --k;
      }
      if (k == 0) {
        break;
      }
      ++v[k - 1];
      std::fill(v.begin() + static_cast<std::ptrdiff_t>(k), v.end(), v[k - 1]);
    }
    return out;
  }

  inline std::vector<SimplexMap> injective_maps(std::size_t m, std::size_t n) {
    std::vector<SimplexMap> out;
    for (auto& f : monotone_maps(m, n)) {
      if (f.injective()) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  inline std::vector<SimplexMap> surjective_maps(std::size_t m, std::size_t n) {
    std::vector<SimplexMap> out;
    for (auto& f : monotone_maps(m, n)) {
      if (f.surjective()) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  struct EpiMono {
    SimplexMap surjection;
    SimplexMap injection;
  };

  // f = injection ∘ surjection through [|image f| - 1].
  inline EpiMono epi_mono_factor(SimplexMap const& f) {
    std::vector<std::size_t> image = f.values();
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<std::size_t> s;
    s.reserve(f.values().size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      if (i > 0 && f(i) != f(i - 1)) {
        ++k;
      }
      s.push_back(k);
    }
    return {SimplexMap(image.size() - 1, std::move(s)), SimplexMap(f.codomain(), std::move(image))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Δ truncated to [0..n] as a FinCategory
  ////////////////////////////////////////////////////////////////////////

  enum class DeltaPart { all, injective, surjective };

  struct DeltaCategory {
    FinCategory category;
    std::vector<SimplexMap> maps;  // morphism id -> monotone map

    std::optional<MorphismId> find(SimplexMap const& f) const {
      auto it = std::lower_bound(index.begin(), index.end(), std::pair{f, MorphismId{0}});
      if (it == index.end() || it->first != f) {
        return std::nullopt;
      }
      return it->second;
    }
    MorphismId morphism_of(SimplexMap const& f) const {
      if (auto m = find(f)) {
        return *m;
      }
      throw SpecError("map " + f.str() + " is not a morphism of this truncation");
    }

    std::vector<std::pair<SimplexMap, MorphismId>> index;  // sorted
  };

  inline std::string ordinal_name(std::size_t n) {
    return "[" + std::to_string(n) + "]";
  }

  // Objects [0..n] with degree k for [k]; identities come first (ids 0..n),
  // then the other maps ordered by (domain, codomain, values).
  inline DeltaCategory delta_category(std::size_t n, DeltaPart part = DeltaPart::all) {
    DeltaCategory d;
    CategoryBuilder b;
    for (std::size_t k = 0; k <= n; ++k) {
      b.add_object(ordinal_name(k), k);
      d.maps.push_back(SimplexMap::identity(k));
    }
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (auto& f : monotone_maps(m, k)) {
          bool keep = part == DeltaPart::all || (part == DeltaPart::injective && f.injective())
                      || (part == DeltaPart::surjective && f.surjective());
          if (!keep || f.is_identity()) {
            continue;
          }
          b.add_morphism(m, k, f.str() + "→" + ordinal_name(k), f.is_identity());
          d.maps.push_back(std::move(f));
        }
      }
    }
    for (MorphismId i = 0; i < d.maps.size(); ++i) {
      d.index.emplace_back(d.maps[i], i);
    }
    std::sort(d.index.begin(), d.index.end());
    d.category = std::move(b).build([&](MorphismId g, MorphismId f) {
      return d.morphism_of(compose_simplex(d.maps[g], d.maps[f]));
    });
    return d;
  }

  // Δ₊ᵒᵖ truncated to [0..n]: the semisimplicial index category. Morphism
  // ids agree with delta_category(n, injective).
  inline DeltaCategory semisimplicial_index(std::size_t n) {
    DeltaCategory d = delta_category(n, DeltaPart::injective);
    d.category      = opposite(d.category);
    return d;
  }

}  // namespace diagram_forge
