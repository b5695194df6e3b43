#pragma once

// Graphviz export: one edge per covering pair of objects (transitive
// reduction of the non-identity morphisms), dashed when a marked morphism
// is among them. Pairs joined by a marked morphism that is not a composite
// of two marked ones are drawn even when covered.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fincat.hpp"

namespace diagram_forge {

  namespace detail {

    inline std::string dot_quote(std::string const& s) {
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"' || ch == '\\') {
          out += '\\';
        }
        out += ch;
      }
      return out + "\"";
    }

  }  // namespace detail

  struct DotOptions {
    std::string graph_name = "category";
    bool label_edges       = false;
  };

  inline std::string render_dot(FinCategory const& c, DotOptions const& opt = {}) {
    std::size_t const n = c.object_count();
    // reach[x] = objects reachable by one non-identity morphism
    std::vector<std::set<ObjectId>> step(n);
    for (auto const& m : c.morphisms()) {
      if (!m.identity) {
        step[m.source].insert(m.target);
      }
    }
    std::vector<bool> marked_composite(c.morphism_count(), false);
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      auto const& m = c.morphism(f);
      if (m.identity || !m.marked) {
        continue;
      }
      for (MorphismId g : c.out(m.target)) {
        if (!c.is_identity(g) && c.morphism(g).marked) {
          marked_composite[c.compose(g, f)] = true;
        }
      }
    }
    std::ostringstream os;
    os << "digraph " << detail::dot_quote(opt.graph_name) << " {\n";
    os << "  rankdir=LR;\n";
    for (ObjectId x = 0; x < n; ++x) {
      os << "  n" << x << " [label=" << detail::dot_quote(c.object(x).name) << "];\n";
    }
    for (ObjectId x = 0; x < n; ++x) {
      for (ObjectId y : step[x]) {
        bool covered = false;
        for (ObjectId z : step[x]) {
          if (z != y && z != x && step[z].count(y)) {
            covered = true;
            break;
          }
        }
        bool marked    = false;
        bool generator = false;
        std::string labels;
        for (MorphismId f : c.hom(x, y)) {
          if (c.is_identity(f)) {
            continue;
          }
          marked    = marked || c.morphism(f).marked;
          generator = generator || (c.morphism(f).marked && !marked_composite[f]);
          labels += (labels.empty() ? "" : ", ") + c.morphism(f).label;
        }
        if (covered && !generator) {
          continue;
        }
        os << "  n" << x << " -> n" << y;
        std::vector<std::string> attrs;
        if (opt.label_edges) {
          attrs.push_back("label=" + detail::dot_quote(labels));
        }
        if (marked) {
          attrs.push_back("style=dashed");
        }
        if (!attrs.empty()) {
          os << " [";
          for (std::size_t k = 0; k < attrs.size(); ++k) {
            os << (k ? ", " : "") << attrs[k];
          }
          os << "]";
        }
        os << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace diagram_forge
