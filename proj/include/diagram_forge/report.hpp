#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diagram_forge {

  struct Violation {
    std::string check;   // which axiom failed, e.g. "degree"
    std::string where;   // the offending morphism / object, printable
    std::string detail;

    bool operator==(Violation const&) const = default;
  };

  // Result of a validation pass. An empty report means the property holds.
  struct Report {
    std::string title;
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
    std::size_t size() const noexcept {
      return violations.size();
    }
    void add(std::string check, std::string where, std::string detail) {
      violations.push_back({std::move(check), std::move(where), std::move(detail)});
    }
    void append(Report const& other) {
      violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    bool mentions(std::string const& where) const {
      for (auto const& v : violations) {
        if (v.where == where) {
          return true;
        }
      }
      return false;
    }
  };

  inline std::ostream& operator<<(std::ostream& os, Report const& r) {
    if (r.ok()) {
      return os << r.title << ": ok\n";
    }
    os << r.title << ": " << r.violations.size() << " violation(s)\n";
    for (auto const& v : r.violations) {
      os << "  [" << v.check << "] " << v.where;
      if (!v.detail.empty()) {
        os << ": " << v.detail;
      }
      os << '\n';
    }
    return os;
  }

}  // namespace diagram_forge
