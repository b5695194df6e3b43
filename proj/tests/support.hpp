#pragma once

// Shared fixtures: random inverse presentations for the property suites.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "diagram_forge.hpp"

namespace df_test {

  using namespace diagram_forge;

  inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  // Composable generator words (outermost first) of length 1..max_len.
  inline std::vector<NamedWord> paths(CategorySpec const& s, std::size_t max_len) {
    std::map<std::string, std::string> src, dst;
    for (auto const& g : s.generators) {
      src[g.name] = g.source;
      dst[g.name] = g.target;
    }
    std::vector<NamedWord> out;
    std::vector<NamedWord> layer;
    for (auto const& g : s.generators) {
      layer.push_back({g.name});
    }
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
      out.insert(out.end(), layer.begin(), layer.end());
      std::vector<NamedWord> next;
      for (auto const& w : layer) {
        for (auto const& g : s.generators) {
          if (g.target == src[w.back()]) {
            NamedWord v = w;
            v.push_back(g.name);
            next.push_back(std::move(v));
          }
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  // Objects o0..o{n-1} on random degree levels; generators strictly lower
  // the degree; optionally a few relations between parallel words.
  inline CategorySpec random_inverse_spec(std::mt19937& rng, bool with_relations = true) {
    CategorySpec s;
    std::size_t n = pick(rng, 1, 5);
    for (std::size_t k = 0; k < n; ++k) {
      s.objects.push_back({"o" + std::to_string(k), pick(rng, 0, 3)});
    }
    std::size_t gens = pick(rng, 0, 6);
    for (std::size_t k = 0; k < gens; ++k) {
      auto const& a = s.objects[pick(rng, 0, n - 1)];
      auto const& b = s.objects[pick(rng, 0, n - 1)];
      if (*a.degree == *b.degree) {
        continue;
      }
      auto const& hi = *a.degree > *b.degree ? a : b;
      auto const& lo = *a.degree > *b.degree ? b : a;
      s.generators.push_back({"g" + std::to_string(k), hi.name, lo.name});
    }
    if (with_relations) {
      auto ps = paths(s, 3);
      std::map<std::string, std::string> src, dst;
      for (auto const& g : s.generators) {
        src[g.name] = g.source;
        dst[g.name] = g.target;
      }
      for (std::size_t tries = pick(rng, 0, 3); tries > 0 && ps.size() > 1; --tries) {
        auto const& l = ps[pick(rng, 0, ps.size() - 1)];
        auto const& r = ps[pick(rng, 0, ps.size() - 1)];
        if (l != r && src[l.back()] == src[r.back()] && dst[l.front()] == dst[r.front()]) {
          s.relations.emplace_back(l, r);
        }
      }
    }
    return s;
  }

  inline FinCategory random_inverse_category(std::mt19937& rng, bool with_relations = true) {
    auto s = random_inverse_spec(rng, with_relations);
    return build_category(s, default_word_bound(s));
  }

}  // namespace df_test
