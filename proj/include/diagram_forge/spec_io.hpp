#pragma once

// Reading category presentations from JSON documents:
//   {"objects":[{"name":"x","degree":0},...],
//    "generators":[{"name":"u","src":"y","dst":"x"},...],
//    "relations":[[["u","w"],["v","w"]],...]}
// Reedy presentations additionally carry "plus" and "minus" lists of words.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>  // nlohmann/json, vendored

#include "error.hpp"
#include "fincat.hpp"

namespace diagram_forge {

  struct ReedySpec {
    CategorySpec category;
    std::vector<NamedWord> plus;
    std::vector<NamedWord> minus;
  };

  namespace detail {

    inline std::string require_string(nlohmann::json const& j, char const* key, char const* what) {
      if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
        throw SpecError(std::string(what) + " needs a string field \"" + key + "\"");
      }
      return j.at(key).get<std::string>();
    }

    inline NamedWord read_word(nlohmann::json const& j) {
      if (!j.is_array() || j.empty()) {
        throw SpecError("a word must be a non-empty array of generator names");
      }
      NamedWord w;
      for (auto const& e : j) {
        if (!e.is_string()) {
          throw SpecError("word entries must be generator names");
        }
        w.push_back(e.get<std::string>());
      }
      return w;
    }

    inline std::vector<NamedWord> read_words(nlohmann::json const& j, char const* key) {
      std::vector<NamedWord> out;
      if (!j.contains(key)) {
        return out;
      }
      if (!j.at(key).is_array()) {
        throw SpecError(std::string("\"") + key + "\" must be an array of words");
      }
      for (auto const& w : j.at(key)) {
        out.push_back(read_word(w));
      }
      return out;
    }

  }  // namespace detail

  inline CategorySpec category_spec_from_json(nlohmann::json const& j) {
    if (!j.is_object()) {
      throw SpecError("category spec must be a JSON object");
    }
    CategorySpec spec;
    if (!j.contains("objects") || !j.at("objects").is_array()) {
      throw SpecError("category spec needs an \"objects\" array");
    }
    for (auto const& o : j.at("objects")) {
      ObjectSpec os;
      os.name = detail::require_string(o, "name", "object");
      if (o.contains("degree")) {
        auto const& d = o.at("degree");
        if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long long>() >= 0)) {
          throw SpecError("degree of '" + os.name + "' must be a natural number");
        }
        os.degree = d.get<std::size_t>();
      }
      spec.objects.push_back(std::move(os));
    }
    if (j.contains("generators")) {
      if (!j.at("generators").is_array()) {
        throw SpecError("\"generators\" must be an array");
      }
      for (auto const& g : j.at("generators")) {
        spec.generators.push_back({detail::require_string(g, "name", "generator"),
                                   detail::require_string(g, "src", "generator"),
                                   detail::require_string(g, "dst", "generator")});
      }
    }
    if (j.contains("relations")) {
      if (!j.at("relations").is_array()) {
        throw SpecError("\"relations\" must be an array");
      }
      for (auto const& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) {
          throw SpecError("a relation must be a pair of words");
        }
        spec.relations.emplace_back(detail::read_word(r[0]), detail::read_word(r[1]));
      }
    }
    return spec;
  }

  inline nlohmann::json category_spec_to_json(CategorySpec const& spec) {
    nlohmann::json j;
    j["objects"] = nlohmann::json::array();
    for (auto const& o : spec.objects) {
      nlohmann::json jo{{"name", o.name}};
      if (o.degree) {
        jo["degree"] = *o.degree;
      }
      j["objects"].push_back(jo);
    }
    j["generators"] = nlohmann::json::array();
    for (auto const& g : spec.generators) {
      j["generators"].push_back({{"name", g.name}, {"src", g.source}, {"dst", g.target}});
    }
    j["relations"] = nlohmann::json::array();
    for (auto const& [l, r] : spec.relations) {
      j["relations"].push_back(nlohmann::json::array({l, r}));
    }
    return j;
  }

  inline bool is_reedy_document(nlohmann::json const& j) {
    return j.is_object() && (j.contains("plus") || j.contains("minus"));
  }

  inline ReedySpec reedy_spec_from_json(nlohmann::json const& j) {
    ReedySpec r;
    r.category = category_spec_from_json(j);
    r.plus     = detail::read_words(j, "plus");
    r.minus    = detail::read_words(j, "minus");
    return r;
  }

  inline nlohmann::json parse_json_text(std::string const& text) {
    try {
      return nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw SpecError(std::string("invalid JSON: ") + e.what());
    }
  }

  inline nlohmann::json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw SpecError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
  }

}  // namespace diagram_forge
