#pragma once

// Built-in example categories and input resolution for the command line:
// a path to a JSON spec or one of
//   builtin:E  builtin:terminal  builtin:parallel  builtin:chain:<n>
//   builtin:delta:<n>  builtin:delta+op:<n>

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "fincat.hpp"
#include "reedy.hpp"
#include "simplex.hpp"
#include "spec_io.hpp"

namespace diagram_forge {

  // z --w--> y ==u,v==> x with u∘w = v∘w; degrees 0, 1, 2.
  inline CategorySpec example_e_spec() {
    CategorySpec s;
    s.objects    = {{"x", 0}, {"y", 1}, {"z", 2}};
    s.generators = {{"u", "y", "x"}, {"v", "y", "x"}, {"w", "z", "y"}};
    s.relations  = {{{"u", "w"}, {"v", "w"}}};
    return s;
  }

  inline CategorySpec terminal_spec() {
    CategorySpec s;
    s.objects = {{"h", 0}};
    return s;
  }

  inline CategorySpec parallel_spec() {
    CategorySpec s;
    s.objects    = {{"x", 0}, {"y", 1}};
    s.generators = {{"f", "y", "x"}, {"g", "y", "x"}};
    return s;
  }

  // a_n -> ... -> a_1 -> a_0, generator f_k : a_k -> a_{k-1}.
  inline CategorySpec chain_spec(std::size_t n) {
    CategorySpec s;
    for (std::size_t k = 0; k <= n; ++k) {
      s.objects.push_back({"a" + std::to_string(k), k});
    }
    for (std::size_t k = 1; k <= n; ++k) {
      s.generators.push_back({"f" + std::to_string(k), "a" + std::to_string(k), "a" + std::to_string(k - 1)});
    }
    return s;
  }

  inline FinCategory build(CategorySpec const& spec, std::optional<std::size_t> bound = std::nullopt) {
    return build_category(spec, bound.value_or(default_word_bound(spec)));
  }

  // The parts are the wide subcategories generated by the listed words.
  inline ReedyCategory build_reedy(ReedySpec const& spec, std::optional<std::size_t> bound = std::nullopt) {
    ReedyCategory r;
    r.category   = build(spec.category, bound);
    auto const& c = r.category;
    auto generate = [&](std::vector<NamedWord> const& words) {
      std::vector<bool> in(c.morphism_count(), false);
      for (ObjectId x = 0; x < c.object_count(); ++x) {
        in[c.identity(x)] = true;
      }
      for (auto const& w : words) {
        in[c.word(w)] = true;
      }
      for (bool grew = true; grew;) {
        grew = false;
        for (MorphismId f = 0; f < c.morphism_count(); ++f) {
          if (!in[f]) {
            continue;
          }
          for (MorphismId g : c.out(c.morphism(f).target)) {
            if (in[g] && !in[c.compose(g, f)]) {
              in[c.compose(g, f)] = true;
              grew = true;
            }
          }
        }
      }
      return in;
    };
    r.plus  = generate(spec.plus);
    r.minus = generate(spec.minus);
    return r;
  }

  struct LoadedInput {
    std::string name;
    FinCategory category;
    std::optional<ReedyCategory> reedy;  // set for Reedy specs and builtin:delta
  };

  namespace detail {

    inline std::size_t parse_level(std::string const& text, std::string const& what) {
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 3) {
        throw SpecError("'" + what + "' needs a small natural number, got '" + text + "'");
      }
      return std::stoul(text);
    }

  }  // namespace detail

  inline LoadedInput load_builtin(std::string const& which, std::optional<std::size_t> bound = std::nullopt) {
    auto level = [&](std::string const& prefix) -> std::optional<std::size_t> {
      if (which.rfind(prefix, 0) == 0) {
        return detail::parse_level(which.substr(prefix.size()), "builtin:" + which);
      }
      return std::nullopt;
    };
    LoadedInput in;
    in.name = "builtin:" + which;
    if (which == "E") {
      in.category = build(example_e_spec(), bound);
    } else if (which == "terminal") {
      in.category = build(terminal_spec(), bound);
    } else if (which == "parallel") {
      in.category = build(parallel_spec(), bound);
    } else if (auto n = level("chain:")) {
      in.category = build(chain_spec(*n), bound);
    } else if (auto n = level("delta+op:")) {
      in.category = semisimplicial_index(*n).category;
    } else if (auto n = level("delta:")) {
      in.reedy    = delta_reedy(*n);
      in.category = in.reedy->category;
    } else {
      throw SpecError("unknown builtin '" + which
                      + "' (expected E, terminal, parallel, chain:<n>, delta:<n> or delta+op:<n>)");
    }
    return in;
  }

  inline LoadedInput load_input(std::string const& arg, std::optional<std::size_t> bound = std::nullopt) {
    static std::string const prefix = "builtin:";
    if (arg.rfind(prefix, 0) == 0) {
      return load_builtin(arg.substr(prefix.size()), bound);
    }
    auto j = read_json_file(arg);
    LoadedInput in;
    in.name = arg;
    if (is_reedy_document(j)) {
      in.reedy    = build_reedy(reedy_spec_from_json(j), bound);
      in.category = in.reedy->category;
    } else {
      in.category = build(category_spec_from_json(j), bound);
    }
    return in;
  }

}  // namespace diagram_forge
