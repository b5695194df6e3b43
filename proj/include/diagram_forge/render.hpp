#pragma once

// Rendering of ContextSchemas: the turnstile text notation, a lossless JSON
// document, and Agda records against docs/DiagramForgePrelude.agda.

#include <cstring>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>  // nlohmann/json, vendored

#include "error.hpp"
#include "schema.hpp"

namespace diagram_forge {

  enum class Format { text, json, agda };

  inline Format parse_format(std::string const& s) {
    if (s == "text") {
      return Format::text;
    }
    if (s == "json") {
      return Format::json;
    }
    if (s == "agda") {
      return Format::agda;
    }
    throw SpecError("unknown format '" + s + "' (expected agda, json or text)");
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::string join(std::vector<std::string> const& xs, std::string const& sep) {
      std::string out;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) {
          out += sep;
        }
        out += xs[k];
      }
      return out;
    }

    inline std::string text_path(PathExpr const& p, bool nested = false) {
      using K = PathExpr::Kind;
      std::vector<std::string> parts;
      for (auto const& q : p.parts) {
        parts.push_back(text_path(q, true));
      }
      switch (p.kind) {
        case K::name:
          return p.head;
        case K::apply:
        case K::happly: {
          bool compound = p.head.find("∘") != std::string::npos;
          return (compound ? "(" + p.head + ")" : p.head) + "(" + text_path(p.parts.at(0)) + ")";
        }
        case K::ap:
          return "ap_" + p.head + "(" + text_path(p.parts.at(0)) + ")";
        case K::compose: {
          std::string s = join(parts, " ∘ ");
          return nested ? "(" + s + ")" : s;
        }
        case K::concat: {
          std::string s = join(parts, " · ");
          return nested ? "(" + s + ")" : s;
        }
      }
      return {};
    }

    inline std::string text_type(TypeExpr const& t);

    inline std::string text_telescope(SigmaTel const& tel) {
      std::vector<std::string> parts;
      for (auto const& b : tel.bindings) {
        parts.push_back("(" + b.name + " : " + text_type(*b.type) + ")");
      }
      return join(parts, ", ");
    }

    inline std::string text_type(TypeExpr const& t) {
      return std::visit(
          [](auto const& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Universe>) {
              return "U";
            } else if constexpr (std::is_same_v<N, Ref>) {
              return n.name;
            } else if constexpr (std::is_same_v<N, FamilyApp>) {
              return n.family + "(" + join(n.args, ",") + ")";
            } else if constexpr (std::is_same_v<N, FunType>) {
              std::string d = n.domain->template is<SigmaTel>()
                                  ? "Σ(" + text_telescope(n.domain->template as<SigmaTel>()) + ")"
                                  : text_type(*n.domain);
              if (n.domain->template is<FunType>()) {
                d = "(" + d + ")";
              }
              return d + " → " + text_type(*n.codomain);
            } else if constexpr (std::is_same_v<N, SigmaTel>) {
              return "Σ(" + text_telescope(n) + ")";
            } else if constexpr (std::is_same_v<N, EqType>) {
              return text_path(n.lhs) + " = " + text_path(n.rhs);
            } else if constexpr (std::is_same_v<N, IsEquiv>) {
              if (n.projection_target) {
                return "isEquiv(" + n.subject + " ↠ " + *n.projection_target + ")";
              }
              return "isEquiv(" + n.subject + ")";
            } else {
              return "T_[" + std::to_string(n.level) + "](" + join(n.boundary, ",") + ")";
            }
          },
          t.node);
    }

    inline std::string text_component(Component const& c) {
      if (c.type.is<Universe>()) {
        return "⊢ " + c.name + " type";
      }
      if (c.type.is<FunType>()) {
        auto const& f = c.type.as<FunType>();
        if (f.domain->is<SigmaTel>() && f.codomain->is<Universe>()) {
          return text_telescope(f.domain->as<SigmaTel>()) + " ⊢ " + c.name + " type";
        }
      }
      return "⊢ " + c.name + " : " + text_type(c.type);
    }

    inline std::string text_context(std::vector<Component> const& cs) {
      std::vector<std::string> parts;
      for (auto const& c : cs) {
        parts.push_back("(" + c.name + " : " + text_type(c.type) + ")");
      }
      return join(parts, ", ");
    }

    inline std::string meta(ContextSchema const& s, std::string const& key) {
      auto it = s.metadata.find(key);
      return it == s.metadata.end() ? std::string{} : it->second;
    }

  }  // namespace detail

  inline std::string render_text(ContextSchema const& s) {
    std::string out;
    if (detail::meta(s, "kind") == "strict-fiber") {
      std::size_t m = std::stoul(detail::meta(s, "matching"));
      std::vector<Component> matching(s.components.begin(), s.components.begin() + static_cast<std::ptrdiff_t>(m));
      std::vector<Component> fiber(s.components.begin() + static_cast<std::ptrdiff_t>(m), s.components.end());
      std::string head = s.title;
      if (m > 0) {
        out += "M^" + s.title + " :≡ " + detail::text_context(matching) + "\n";
        std::vector<std::string> args;
        for (auto const& c : matching) {
          args.push_back(c.name);
        }
        head += "(" + detail::join(args, ",") + ")";
      }
      return out + head + " :≡ " + detail::text_context(fiber) + "\n";
    }
    if (auto k = detail::meta(s, "truncated"); !k.empty()) {
      out += "-- TRUNCATED: chains of length <= " + k + " only\n";
    }
    for (auto const& c : s.components) {
      out += detail::text_component(c) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  using json = nlohmann::ordered_json;

  namespace detail {

    inline char const* path_kind_name(PathExpr::Kind k) {
      switch (k) {
        case PathExpr::Kind::name:
          return "name";
        case PathExpr::Kind::apply:
          return "apply";
        case PathExpr::Kind::happly:
          return "happly";
        case PathExpr::Kind::compose:
          return "compose";
        case PathExpr::Kind::ap:
          return "ap";
        case PathExpr::Kind::concat:
          return "concat";
      }
      return "name";
    }

    inline json path_json(PathExpr const& p) {
      json j;
      j["kind"] = path_kind_name(p.kind);
      if (!p.head.empty()) {
        j["head"] = p.head;
      }
      if (!p.parts.empty()) {
        j["parts"] = json::array();
        for (auto const& q : p.parts) {
          j["parts"].push_back(path_json(q));
        }
      }
      return j;
    }

    inline json type_json(TypeExpr const& t) {
      return std::visit(
          [](auto const& n) -> json {
            using N = std::decay_t<decltype(n)>;
            json j;
            if constexpr (std::is_same_v<N, Universe>) {
              j["kind"] = "universe";
            } else if constexpr (std::is_same_v<N, Ref>) {
              j["kind"] = "ref";
              j["name"] = n.name;
            } else if constexpr (std::is_same_v<N, FamilyApp>) {
              j["kind"]   = "family";
              j["family"] = n.family;
              j["args"]   = n.args;
            } else if constexpr (std::is_same_v<N, FunType>) {
              j["kind"]     = "fun";
              j["domain"]   = type_json(*n.domain);
              j["codomain"] = type_json(*n.codomain);
            } else if constexpr (std::is_same_v<N, SigmaTel>) {
              j["kind"]     = "sigma";
              j["bindings"] = json::array();
              for (auto const& b : n.bindings) {
                j["bindings"].push_back({{"name", b.name}, {"type", type_json(*b.type)}});
              }
            } else if constexpr (std::is_same_v<N, EqType>) {
              j["kind"] = "eq";
              j["lhs"]  = path_json(n.lhs);
              j["rhs"]  = path_json(n.rhs);
            } else if constexpr (std::is_same_v<N, IsEquiv>) {
              j["kind"]    = "is_equiv";
              j["subject"] = n.subject;
              if (n.projection_target) {
                j["projection_target"] = *n.projection_target;
              }
              if (n.via) {
                j["via"] = *n.via;
              }
            } else {
              j["kind"]     = "opaque_t";
              j["level"]    = n.level;
              j["boundary"] = n.boundary;
            }
            return j;
          },
          t.node);
    }

    [[noreturn]] inline void bad_json(std::string const& what) {
      throw SpecError("malformed schema document: " + what);
    }

    template <class J>
    std::string str_field(J const& j, char const* key) {
      if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
        bad_json(std::string("expected string field '") + key + "'");
      }
      return j.at(key).template get<std::string>();
    }

    template <class J>
    std::vector<std::string> str_list(J const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_array()) {
        bad_json(std::string("expected array field '") + key + "'");
      }
      std::vector<std::string> out;
      for (auto const& e : j.at(key)) {
        if (!e.is_string()) {
          bad_json(std::string("non-string entry in '") + key + "'");
        }
        out.push_back(e.template get<std::string>());
      }
      return out;
    }

    template <class J>
    PathExpr path_from_json(J const& j) {
      static std::map<std::string, PathExpr::Kind> const kinds{
          {"name", PathExpr::Kind::name},       {"apply", PathExpr::Kind::apply},
          {"happly", PathExpr::Kind::happly},   {"compose", PathExpr::Kind::compose},
          {"ap", PathExpr::Kind::ap},           {"concat", PathExpr::Kind::concat}};
      auto it = kinds.find(str_field(j, "kind"));
      if (it == kinds.end()) {
        bad_json("unknown path kind");
      }
      PathExpr p;
      p.kind = it->second;
      if (j.contains("head")) {
        p.head = str_field(j, "head");
      }
      if (j.contains("parts")) {
        if (!j.at("parts").is_array()) {
          bad_json("path parts must be an array");
        }
        for (auto const& q : j.at("parts")) {
          p.parts.push_back(path_from_json(q));
        }
      }
      return p;
    }

    template <class J>
    TypeExpr type_from_json(J const& j) {
      std::string kind = str_field(j, "kind");
      if (kind == "universe") {
        return Universe{};
      }
      if (kind == "ref") {
        return Ref{str_field(j, "name")};
      }
      if (kind == "family") {
        return FamilyApp{str_field(j, "family"), str_list(j, "args")};
      }
      if (kind == "fun") {
        if (!j.contains("domain") || !j.contains("codomain")) {
          bad_json("fun needs domain and codomain");
        }
        return FunType{type_from_json(j.at("domain")), type_from_json(j.at("codomain"))};
      }
      if (kind == "sigma") {
        if (!j.contains("bindings") || !j.at("bindings").is_array()) {
          bad_json("sigma needs bindings");
        }
        SigmaTel tel;
        for (auto const& b : j.at("bindings")) {
          if (!b.contains("type")) {
            bad_json("binding without type");
          }
          tel.bindings.push_back({str_field(b, "name"), type_from_json(b.at("type"))});
        }
        return tel;
      }
      if (kind == "eq") {
        if (!j.contains("lhs") || !j.contains("rhs")) {
          bad_json("eq needs lhs and rhs");
        }
        return EqType{path_from_json(j.at("lhs")), path_from_json(j.at("rhs"))};
      }
      if (kind == "is_equiv") {
        IsEquiv e{str_field(j, "subject"), std::nullopt, std::nullopt};
        if (j.contains("projection_target")) {
          e.projection_target = str_field(j, "projection_target");
        }
        if (j.contains("via")) {
          if (!j.at("via").is_number_unsigned()) {
            bad_json("via must be a natural number");
          }
          e.via = j.at("via").template get<std::size_t>();
        }
        return e;
      }
      if (kind == "opaque_t") {
        if (!j.contains("level") || !j.at("level").is_number_unsigned()) {
          bad_json("opaque_t needs a natural level");
        }
        return OpaqueT{j.at("level").template get<std::size_t>(), str_list(j, "boundary")};
      }
      bad_json("unknown type kind '" + kind + "'");
    }

  }  // namespace detail

  inline json schema_json(ContextSchema const& s) {
    json j;
    j["title"]    = s.title;
    j["metadata"] = json::object();
    for (auto const& [k, v] : s.metadata) {
      j["metadata"][k] = v;
    }
    j["components"] = json::array();
    for (auto const& c : s.components) {
      json cj;
      cj["name"] = c.name;
      cj["type"] = detail::type_json(c.type);
      if (!c.source.empty()) {
        cj["source"] = c.source;
      }
      j["components"].push_back(std::move(cj));
    }
    return j;
  }

  inline std::string render_json(ContextSchema const& s) {
    return schema_json(s).dump(2) + "\n";
  }

  inline std::string render_json(std::vector<ContextSchema> const& ss) {
    json arr = json::array();
    for (auto const& s : ss) {
      arr.push_back(schema_json(s));
    }
    return arr.dump(2) + "\n";
  }

  template <class J>
  ContextSchema schema_from_json(J const& j) {
    if (!j.is_object()) {
      detail::bad_json("a schema must be an object");
    }
    ContextSchema s;
    s.title = detail::str_field(j, "title");
    if (j.contains("metadata")) {
      if (!j.at("metadata").is_object()) {
        detail::bad_json("metadata must be an object");
      }
      for (auto const& [k, v] : j.at("metadata").items()) {
        if (!v.is_string()) {
          detail::bad_json("metadata values must be strings");
        }
        s.metadata[k] = v.template get<std::string>();
      }
    }
    if (!j.contains("components") || !j.at("components").is_array()) {
      detail::bad_json("expected array field 'components'");
    }
    for (auto const& c : j.at("components")) {
      if (!c.contains("type")) {
        detail::bad_json("component without type");
      }
      s.add(detail::str_field(c, "name"), detail::type_from_json(c.at("type")),
            c.contains("source") ? detail::str_field(c, "source") : std::string{});
    }
    return s;
  }

  inline ContextSchema parse_schema_json(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw SpecError(std::string("invalid JSON: ") + e.what());
    }
    return schema_from_json(j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Agda
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::set<std::string> const& agda_reserved() {
      static std::set<std::string> const words{
          "abstract", "codata", "coinductive", "constructor", "data", "do", "eta-equality",
          "field", "forall", "hiding", "import", "in", "inductive", "infix", "infixl", "infixr",
          "instance", "interleaved", "let", "macro", "module", "mutual", "no-eta-equality", "open",
          "overlap", "pattern", "postulate", "primitive", "private", "public", "quote",
          "quoteTerm", "record", "renaming", "rewrite", "syntax", "tactic", "to", "unquote",
          "unquoteDecl", "unquoteDef", "using", "variable", "where", "with", "Set", "Prop", "Setω",
          // prelude names
          "U", "T", "IsEquiv", "IsEquivProjection", "happly", "ap", "refl", "Boundary"};
      return words;
    }

  }  // namespace detail

  // Agda-safe identifier: brackets dropped, separators and other reserved
  // characters turned into '-', '∘' into '·', '→' into "to".
  inline std::string mangle_agda(std::string const& name) {
    std::string out;
    auto dash = [&] {
      if (!out.empty() && out.back() != '-') {
        out += '-';
      }
    };
    for (std::size_t k = 0; k < name.size();) {
      auto starts = [&](char const* s) { return name.compare(k, std::strlen(s), s) == 0; };
      if (starts("∘")) {
        out += "·";
        k += std::strlen("∘");
      } else if (starts("→")) {
        dash();
        out += "to-";
        k += std::strlen("→");
      } else {
        char ch = name[k];
        ++k;
        switch (ch) {
          case '(':
          case ')':
          case '[':
          case ']':
          case '{':
          case '}':
            break;
          case ',':
          case '_':
          case ':':
          case ';':
          case '.':
          case '"':
          case '@':
          case ' ':
          case '\t':
          case '-':
            dash();
            break;
          default:
            out += ch;
        }
      }
    }
    while (!out.empty() && out.back() == '-') {
      out.pop_back();
    }
    while (!out.empty() && out.front() == '-') {
      out.erase(out.begin());
    }
    if (out.empty()) {
      out = "c";
    }
    if (std::isdigit(static_cast<unsigned char>(out[0]))) {
      out = "c" + out;
    }
    if (detail::agda_reserved().count(out)) {
      out += "'";
    }
    return out;
  }

  namespace detail {

    struct AgdaNames {
      std::map<std::string, std::string> to_agda;
      std::map<std::string, std::string> from_agda;

      std::string declare(std::string const& name) {
        auto it = to_agda.find(name);
        if (it != to_agda.end()) {
          return it->second;
        }
        std::string m = mangle_agda(name);
        auto [jt, fresh] = from_agda.emplace(m, name);
        if (!fresh && jt->second != name) {
          throw NameCollision("'" + name + "' and '" + jt->second + "' both mangle to '" + m + "'");
        }
        to_agda.emplace(name, m);
        return m;
      }
      std::string operator()(std::string const& name) {
        return declare(name);
      }
    };

    inline bool atomic_path(PathExpr const& p) {
      return p.kind == PathExpr::Kind::name;
    }

    inline std::string agda_path(PathExpr const& p, AgdaNames& nm) {
      using K = PathExpr::Kind;
      auto sub = [&](PathExpr const& q) {
        std::string s = agda_path(q, nm);
        return atomic_path(q) ? s : "(" + s + ")";
      };
      switch (p.kind) {
        case K::name:
          return nm(p.head);
        case K::apply:
          return nm(p.head) + " " + sub(p.parts.at(0));
        case K::happly:
          return "happly " + nm(p.head) + " " + sub(p.parts.at(0));
        case K::ap:
          return "ap " + nm(p.head) + " " + sub(p.parts.at(0));
        case K::compose:
        case K::concat: {
          std::vector<std::string> parts;
          for (auto const& q : p.parts) {
            parts.push_back(sub(q));
          }
          return join(parts, p.kind == K::compose ? " ∘ " : " ∙ ");
        }
      }
      return {};
    }

    inline std::string agda_type(TypeExpr const& t, AgdaNames& nm);

    inline std::string agda_pi(SigmaTel const& tel, std::string const& codomain, AgdaNames& nm) {
      std::string out;
      for (auto const& b : tel.bindings) {
        out += "(" + nm(b.name) + " : " + agda_type(*b.type, nm) + ") → ";
      }
      return out + codomain;
    }

    inline std::string agda_type(TypeExpr const& t, AgdaNames& nm) {
      return std::visit(
          [&](auto const& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Universe>) {
              return "U";
            } else if constexpr (std::is_same_v<N, Ref>) {
              return nm(n.name);
            } else if constexpr (std::is_same_v<N, FamilyApp>) {
              std::string s = nm(n.family);
              for (auto const& a : n.args) {
                s += " " + nm(a);
              }
              return s;
            } else if constexpr (std::is_same_v<N, FunType>) {
              std::string cod = agda_type(*n.codomain, nm);
              if (n.domain->template is<SigmaTel>()) {
                return agda_pi(n.domain->template as<SigmaTel>(), cod, nm);
              }
              std::string d = agda_type(*n.domain, nm);
              if (n.domain->template is<FunType>()) {
                d = "(" + d + ")";
              }
              return d + " → " + cod;
            } else if constexpr (std::is_same_v<N, SigmaTel>) {
              if (n.bindings.empty()) {
                return "⊤";
              }
              std::string s;
              std::size_t close = 0;
              for (std::size_t k = 0; k + 1 < n.bindings.size(); ++k) {
                s += "Σ " + agda_type(*n.bindings[k].type, nm) + " (λ " + nm(n.bindings[k].name) + " → ";
                ++close;
              }
              s += agda_type(*n.bindings.back().type, nm);
              return s + std::string(close, ')');
            } else if constexpr (std::is_same_v<N, EqType>) {
              return agda_path(n.lhs, nm) + " ≡ " + agda_path(n.rhs, nm);
            } else if constexpr (std::is_same_v<N, IsEquiv>) {
              if (n.projection_target) {
                return "IsEquivProjection " + nm(n.subject) + " " + nm(*n.projection_target) + " "
                       + std::to_string(n.via.value_or(0));
              }
              return "IsEquiv " + nm(n.subject);
            } else {
              std::string b;
              for (auto const& x : n.boundary) {
                b += nm(x) + " ∷ᵇ ";
              }
              return "T " + std::to_string(n.level) + " (" + b + "[])";
            }
          },
          t.node);
    }

    inline void agda_fields(std::ostream& os, std::vector<Component> const& cs, AgdaNames& nm,
                            std::string const& indent) {
      os << indent << "field\n";
      for (auto const& c : cs) {
        std::string n = nm(c.name);
        os << indent << "  " << n << " : " << agda_type(c.type, nm) << "\n";
      }
    }

    inline std::string agda_header(std::string const& module) {
      return "module " + mangle_agda(module) + " where\n\nopen import DiagramForgePrelude\n\n";
    }

  }  // namespace detail

  // A record with one field per component.
  inline std::string render_agda(ContextSchema const& s, std::string const& module = "Diagram") {
    std::ostringstream os;
    os << detail::agda_header(module);
    if (auto k = detail::meta(s, "truncated"); !k.empty()) {
      os << "-- TRUNCATED: chains of length <= " << k << " only\n";
    }
    os << "record Diagram : Set₁ where\n";
    if (s.components.empty()) {
      return os.str();
    }
    detail::AgdaNames nm;
    detail::agda_fields(os, s.components, nm, "  ");
    return os.str();
  }

  // The weak diagram as a record, then one record per fiber over its
  // matching context, all parameterised by a weak diagram.
  inline std::string render_agda_strict(ContextSchema const& weak, std::vector<ContextSchema> const& fibers,
                                        std::string const& module = "Strict") {
    std::ostringstream os;
    os << detail::agda_header(module);
    detail::AgdaNames wn;
    os << "record Weak : Set₁ where\n";
    if (!weak.components.empty()) {
      detail::agda_fields(os, weak.components, wn, "  ");
    }
    os << "\nmodule Fibers (W : Weak) where\n  open Weak W\n";
    for (auto const& f : fibers) {
      detail::AgdaNames nm = wn;
      std::size_t m = std::stoul(detail::meta(f, "matching"));
      os << "\n  record " << nm(f.title);
      for (std::size_t k = 0; k < m; ++k) {
        auto const& c = f.components[k];
        os << " (" << nm(c.name) << " : " << detail::agda_type(c.type, nm) << ")";
      }
      os << " : Set where\n";
      std::vector<Component> rest(f.components.begin() + static_cast<std::ptrdiff_t>(m), f.components.end());
      if (!rest.empty()) {
        detail::agda_fields(os, rest, nm, "    ");
      }
    }
    return os.str();
  }

  inline std::string render(ContextSchema const& s, Format f, std::string const& module = "Diagram") {
    switch (f) {
      case Format::text:
        return render_text(s);
      case Format::json:
        return render_json(s);
      case Format::agda:
        return render_agda(s, module);
    }
    return {};
  }

}  // namespace diagram_forge
