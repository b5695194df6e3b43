#pragma once

// Telescopes of named, typed components: the emitted form of contexts,
// nested Σ-types and limits.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "report.hpp"

namespace diagram_forge {

  // A heap cell with value semantics, so that recursive variants can be
  // copied and compared like plain values.
  template <class T>
  class Box {
   public:
    Box() : p_(std::make_unique<T>()) {}
    Box(T v) : p_(std::make_unique<T>(std::move(v))) {}  // NOLINT(google-explicit-constructor)
    Box(Box const& o) : p_(std::make_unique<T>(*o.p_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(Box const& o) {
      p_ = std::make_unique<T>(*o.p_);
      return *this;
    }
    Box& operator=(Box&&) noexcept = default;
    ~Box() = default;

    T& operator*() noexcept {
      return *p_;
    }
    T const& operator*() const noexcept {
      return *p_;
    }
    T* operator->() noexcept {
      return p_.get();
    }
    T const* operator->() const noexcept {
      return p_.get();
    }

    friend bool operator==(Box const& a, Box const& b) {
      return *a.p_ == *b.p_;
    }

   private:
    std::unique_ptr<T> p_;
  };

  // Formal path/term expressions inside equality types.
  //   name    : head
  //   apply   : head(parts[0])
  //   happly  : head(parts[0]), pointwise use of an equality of functions
  //   compose : parts[0] ∘ parts[1] ∘ ...
  //   ap      : ap_head(parts[0])
  //   concat  : parts[0] · parts[1] · ...
  struct PathExpr {
    enum class Kind { name, apply, happly, compose, ap, concat };
    Kind kind = Kind::name;
    std::string head;
    std::vector<PathExpr> parts;

    friend bool operator==(PathExpr const&, PathExpr const&) = default;

    static PathExpr named(std::string n) {
      return {Kind::name, std::move(n), {}};
    }
    static PathExpr apply(std::string f, PathExpr arg) {
      return {Kind::apply, std::move(f), {std::move(arg)}};
    }
    static PathExpr happly(std::string p, PathExpr arg) {
      return {Kind::happly, std::move(p), {std::move(arg)}};
    }
    static PathExpr compose(std::vector<PathExpr> fs) {
      return {Kind::compose, {}, std::move(fs)};
    }
    static PathExpr ap(std::string f, PathExpr path) {
      return {Kind::ap, std::move(f), {std::move(path)}};
    }
    static PathExpr concat(std::vector<PathExpr> ps) {
      return {Kind::concat, {}, std::move(ps)};
    }
  };

  struct TypeExpr;

  struct Binding {
    std::string name;
    Box<TypeExpr> type;

    friend bool operator==(Binding const&, Binding const&) = default;
  };

  struct Universe {
    friend bool operator==(Universe const&, Universe const&) = default;
  };
  struct Ref {
    std::string name;
    friend bool operator==(Ref const&, Ref const&) = default;
  };
  struct FamilyApp {
    std::string family;
    std::vector<std::string> args;
    friend bool operator==(FamilyApp const&, FamilyApp const&) = default;
  };
  struct FunType {
    Box<TypeExpr> domain;
    Box<TypeExpr> codomain;
    friend bool operator==(FunType const&, FunType const&) = default;
  };
  struct SigmaTel {
    std::vector<Binding> bindings;
    friend bool operator==(SigmaTel const&, SigmaTel const&) = default;
  };
  struct EqType {
    PathExpr lhs;
    PathExpr rhs;
    friend bool operator==(EqType const&, EqType const&) = default;
  };
  // isEquiv(subject), or with a projection target: the projection from the
  // total space of the family `subject` to that of `projection_target`,
  // reading off boundary entry number `via`, is an equivalence.
  struct IsEquiv {
    std::string subject;
    std::optional<std::string> projection_target;
    std::optional<std::size_t> via;
    friend bool operator==(IsEquiv const&, IsEquiv const&) = default;
  };
  struct OpaqueT {
    std::size_t level = 0;
    std::vector<std::string> boundary;
    friend bool operator==(OpaqueT const&, OpaqueT const&) = default;
  };

  struct TypeExpr {
    std::variant<Universe, Ref, FamilyApp, FunType, SigmaTel, EqType, IsEquiv, OpaqueT> node;

    TypeExpr() = default;
    template <class T>
    TypeExpr(T t) : node(std::move(t)) {}  // NOLINT(google-explicit-constructor)

    template <class T>
    bool is() const noexcept {
      return std::holds_alternative<T>(node);
    }
    template <class T>
    T const& as() const {
      return std::get<T>(node);
    }

    friend bool operator==(TypeExpr const&, TypeExpr const&) = default;
  };

  inline TypeExpr fun(TypeExpr a, TypeExpr b) {
    return FunType{std::move(a), std::move(b)};
  }

  struct Component {
    std::string name;
    TypeExpr type;
    std::string source;  // which object / chain / list it came from

    friend bool operator==(Component const&, Component const&) = default;
  };

  struct ContextSchema {
    std::string title;
    std::vector<Component> components;
    std::map<std::string, std::string> metadata;

    std::size_t size() const noexcept {
      return components.size();
    }

    Component& add(std::string name, TypeExpr type, std::string source = {}) {
      for (auto const& c : components) {
        if (c.name == name) {
          throw NameCollision("component name '" + name + "' used twice in " + title);
        }
      }
      components.push_back({std::move(name), std::move(type), std::move(source)});
      return components.back();
    }

    Component const* find(std::string const& name) const {
      for (auto const& c : components) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }

    std::vector<std::string> names() const {
      std::vector<std::string> out;
      for (auto const& c : components) {
        out.push_back(c.name);
      }
      return out;
    }

    friend bool operator==(ContextSchema const&, ContextSchema const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Well-formedness
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    struct ScopeCheck {
      Report& report;
      std::string const& where;
      std::vector<std::string> scope;  // visible names, innermost last

      bool visible(std::string const& n) const {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (*it == n) {
            return true;
          }
        }
        return false;
      }
      void need(std::string const& n) {
        if (!visible(n)) {
          report.add("scope", where, "'" + n + "' is not declared earlier");
        }
      }
      void path(PathExpr const& p) {
        switch (p.kind) {
          case PathExpr::Kind::name:
            need(p.head);
            break;
          case PathExpr::Kind::apply:
          case PathExpr::Kind::happly:
          case PathExpr::Kind::ap:
            need(p.head);
            break;
          case PathExpr::Kind::compose:
          case PathExpr::Kind::concat:
            break;
        }
        for (auto const& q : p.parts) {
          path(q);
        }
      }
      void type(TypeExpr const& t) {
        std::visit(
            [&](auto const& n) {
              using N = std::decay_t<decltype(n)>;
              if constexpr (std::is_same_v<N, Ref>) {
                need(n.name);
              } else if constexpr (std::is_same_v<N, FamilyApp>) {
                need(n.family);
                for (auto const& a : n.args) {
                  need(a);
                }
              } else if constexpr (std::is_same_v<N, FunType>) {
                std::size_t mark = scope.size();
                type(*n.domain);
                if (n.domain->template is<SigmaTel>()) {
                  for (auto const& b : n.domain->template as<SigmaTel>().bindings) {
                    scope.push_back(b.name);
                  }
                }
                type(*n.codomain);
                scope.resize(mark);
              } else if constexpr (std::is_same_v<N, SigmaTel>) {
                std::size_t mark = scope.size();
                std::set<std::string> seen;
                for (auto const& b : n.bindings) {
                  type(*b.type);
                  if (!seen.insert(b.name).second) {
                    report.add("binder", where, "binder '" + b.name + "' repeated");
                  }
                  scope.push_back(b.name);
                }
                scope.resize(mark);
              } else if constexpr (std::is_same_v<N, EqType>) {
                path(n.lhs);
                path(n.rhs);
              } else if constexpr (std::is_same_v<N, IsEquiv>) {
                need(n.subject);
                if (n.projection_target) {
                  need(*n.projection_target);
                }
              } else if constexpr (std::is_same_v<N, OpaqueT>) {
                for (auto const& b : n.boundary) {
                  need(b);
                }
              }
            },
            t.node);
      }
    };

  }  // namespace detail

  // Every reference points to an ambient name, a component declared
  // strictly earlier, or an enclosing telescope binder; names are unique.
  inline Report check_well_formed(ContextSchema const& s, std::vector<std::string> const& ambient = {}) {
    Report r;
    r.title = "telescope " + s.title;
    std::vector<std::string> scope = ambient;
    std::set<std::string> declared;
    for (auto const& c : s.components) {
      if (c.name.empty()) {
        r.add("name", "#" + std::to_string(&c - s.components.data()), "empty component name");
      }
      if (!declared.insert(c.name).second) {
        r.add("name", c.name, "declared twice");
      }
      detail::ScopeCheck chk{r, c.name, scope};
      chk.type(c.type);
      scope.push_back(c.name);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alpha-equivalence
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    struct Renamer {
      std::vector<std::pair<std::string, std::string>> scope;  // old -> new
      std::size_t fresh = 0;

      std::string look(std::string const& n) const {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (it->first == n) {
            return it->second;
          }
        }
        return n;  // free (ambient) names are kept
      }
      std::string bind(std::string const& n) {
        std::string m = "#" + std::to_string(fresh++);
        scope.emplace_back(n, m);
        return m;
      }
      PathExpr path(PathExpr p) {
        if (!p.head.empty()) {
          p.head = look(p.head);
        }
        for (auto& q : p.parts) {
          q = path(std::move(q));
        }
        return p;
      }
      TypeExpr type(TypeExpr const& t) {
        return std::visit(
            [&](auto const& n) -> TypeExpr {
              using N = std::decay_t<decltype(n)>;
              if constexpr (std::is_same_v<N, Ref>) {
                return Ref{look(n.name)};
              } else if constexpr (std::is_same_v<N, FamilyApp>) {
                FamilyApp f{look(n.family), {}};
                for (auto const& a : n.args) {
                  f.args.push_back(look(a));
                }
                return f;
              } else if constexpr (std::is_same_v<N, FunType>) {
                std::size_t mark = scope.size();
                TypeExpr d       = type(*n.domain);
                TypeExpr c       = type(*n.codomain);
                scope.resize(mark);
                return FunType{std::move(d), std::move(c)};
              } else if constexpr (std::is_same_v<N, SigmaTel>) {
                // binders stay visible to a following codomain; the caller trims
                SigmaTel out;
                for (auto const& b : n.bindings) {
                  TypeExpr bt = type(*b.type);
                  out.bindings.push_back({bind(b.name), std::move(bt)});
                }
                return out;
              } else if constexpr (std::is_same_v<N, EqType>) {
                return EqType{path(n.lhs), path(n.rhs)};
              } else if constexpr (std::is_same_v<N, IsEquiv>) {
                IsEquiv e{look(n.subject), std::nullopt, std::nullopt};
                if (n.projection_target) {
                  e.projection_target = look(*n.projection_target);
                }
                e.via = n.via;
                return e;
              } else if constexpr (std::is_same_v<N, OpaqueT>) {
                OpaqueT o{n.level, {}};
                for (auto const& b : n.boundary) {
                  o.boundary.push_back(look(b));
                }
                return o;
              } else {
                return n;
              }
            },
            t.node);
      }
    };

    // Components and binders renamed to positional placeholders; titles,
    // sources and metadata dropped.
    inline std::vector<TypeExpr> nameless(ContextSchema const& s) {
      Renamer rn;
      std::vector<TypeExpr> out;
      for (auto const& c : s.components) {
        std::size_t mark = rn.scope.size();
        out.push_back(rn.type(c.type));
        rn.scope.resize(mark);
        rn.bind(c.name);
      }
      return out;
    }

  }  // namespace detail

  inline bool alpha_equivalent(ContextSchema const& a, ContextSchema const& b) {
    return detail::nameless(a) == detail::nameless(b);
  }

}  // namespace diagram_forge
