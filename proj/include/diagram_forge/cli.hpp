#pragma once

// The diagram-forge command line. run() never throws: exit 0 on success,
// 1 on a non-empty validation report, 2 on bad input or usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "builtins.hpp"
#include "dot.hpp"
#include "emit.hpp"
#include "inverse.hpp"
#include "nerve.hpp"
#include "reedy.hpp"
#include "render.hpp"
#include "strictify.hpp"

namespace diagram_forge {

  inline constexpr char const* version_string = "diagram-forge 0.1.0";

  namespace cli_detail {

    enum class Exit : int { ok = 0, report = 1, input = 2 };

    struct Sink {
      std::ostream& out;
      std::string file;

      // Results go to -o when given, stdout otherwise.
      void write(std::string const& text) const {
        if (file.empty()) {
          out << text;
          return;
        }
        std::ofstream f(file, std::ios::binary);
        if (!f) {
          throw SpecError("cannot write '" + file + "'");
        }
        f << text;
      }
    };

    inline std::string report_text(Report const& r) {
      std::ostringstream os;
      os << r;
      return os.str();
    }

    inline std::string describe_category(FinCategory const& c, bool with_morphisms) {
      std::ostringstream os;
      os << "objects: " << c.object_count() << "\n";
      for (ObjectId x = 0; x < c.object_count(); ++x) {
        os << "  " << c.object(x).name << "  degree " << c.degree(x) << "\n";
      }
      std::size_t marked = 0;
      for (MorphismId f = 0; f < c.morphism_count(); ++f) {
        marked += c.morphism(f).marked && !c.is_identity(f);
      }
      os << "morphisms: " << c.morphism_count() << " (" << c.morphism_count() - c.object_count()
         << " non-identity, " << marked << " marked)\n";
      if (with_morphisms) {
        for (MorphismId f = 0; f < c.morphism_count(); ++f) {
          if (c.is_identity(f)) {
            continue;
          }
          auto const& m = c.morphism(f);
          os << "  " << m.label << " : " << c.object(m.source).name << " → " << c.object(m.target).name
             << (m.marked ? "  marked" : "") << "\n";
        }
      }
      return os.str();
    }

    inline std::string describe_nerve(ElementsCategory const& n) {
      std::ostringstream os;
      os << "chains: " << n.size() << "\n";
      for (auto const& s : n.objects()) {
        os << "  [" << shape(s) << "] " << n.label(s) << "\n";
      }
      return os.str();
    }

    inline std::string describe_coslice(FinCategory const& c, CosliceCategory const& k) {
      std::ostringstream os;
      os << "coslice under " << c.object(k.apex).name << ": " << k.entries.size() << " objects\n";
      for (auto const& e : k.entries) {
        os << "  " << c.morphism(e.arrow).label << " : " << c.object(k.apex).name << " → "
           << c.object(e.target).name << "\n";
      }
      return os.str();
    }

    inline std::string describe_plan(FinCategory const& c, StrictComponentPlan const& plan) {
      std::ostringstream os;
      os << "-- strictification plan\n";
      for (ObjectId i : detail::by_degree(c)) {
        auto const& p = plan.objects[i];
        os << "-- " << c.object(i).name << ": " << p.new_components.size() << " new, "
           << p.matching_components.size() << " matching\n";
      }
      return os.str();
    }

    struct Rendered {
      ContextSchema weak;
      std::vector<ContextSchema> fibers;
    };

    inline std::string render_strict(Rendered const& r, Format f, std::string const& module) {
      switch (f) {
        case Format::text: {
          std::string s = render_text(r.weak);
          for (auto const& fb : r.fibers) {
            s += "\n" + render_text(fb);
          }
          return s;
        }
        case Format::json: {
          json j;
          j["weak"]   = schema_json(r.weak);
          j["fibers"] = json::array();
          for (auto const& fb : r.fibers) {
            j["fibers"].push_back(schema_json(fb));
          }
          return j.dump(2) + "\n";
        }
        case Format::agda:
          return render_agda_strict(r.weak, r.fibers, module);
      }
      return {};
    }

    inline Rendered strict_schemas(FinCategory const& c) {
      Rendered r;
      r.weak   = weak_diagram_type(c);
      r.fibers = strict_fiber_schemas(c, r.weak);
      return r;
    }

  }  // namespace cli_detail

  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::Exit;
    CLI::App app{"Finite inverse and Reedy categories, nerves, and diagram-type emission", "diagram-forge"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    std::optional<std::size_t> bound;
    app.add_option("--max-word-length", bound, "Word-length bound for saturating presentations");

    std::string input;
    std::string output;

    auto* check = app.add_subcommand("check", "Validate an inverse or Reedy category");
    check->add_option("input", input, "Spec file or builtin:<name>")->required();

    auto* nerve = app.add_subcommand("nerve", "List the category of elements of the nerve");
    std::optional<std::size_t> identities;
    bool dot = false;
    std::string coslice_at;
    nerve->add_option("input", input, "Spec file or builtin:<name>")->required();
    nerve->add_option("--identities", identities, "Allow identities, chains of length <= k only");
    bool label_edges = false;
    nerve->add_flag("--dot", dot, "Export as DOT");
    nerve->add_flag("--label-edges", label_edges, "Label DOT edges with morphism names");
    nerve->add_option("--coslice", coslice_at, "Use the coslice under this object instead");
    nerve->add_option("-o,--output", output, "Output file");

    auto* strictify = app.add_subcommand("strictify", "Plan the strictification of a weak diagram");
    std::string format = "text";
    std::string module;
    strictify->add_option("input", input, "Spec file or builtin:<name>")->required();
    strictify->add_option("--format", format, "text, json or agda")->check(CLI::IsMember({"text", "json", "agda"}));
    strictify->add_option("--module", module, "Agda module name");
    strictify->add_option("-o,--output", output, "Output file");

    auto* dcat = app.add_subcommand("dcat", "The direct replacement of a Reedy category");
    std::optional<std::size_t> level;
    std::string general_spec;
    bool run_checks  = false;
    bool opfibration = false;
    auto* level_opt   = dcat->add_option("--level", level, "Build the replacement of the truncated simplex category");
    auto* general_opt = dcat->add_option("--general", general_spec, "Reedy spec file or builtin:delta:<n>");
    level_opt->excludes(general_opt);
    dcat->add_flag("--dot", dot, "Export as DOT");
    dcat->add_flag("--label-edges", label_edges, "Label DOT edges with morphism names");
    dcat->add_flag("--check", run_checks, "Check degrees and the absence of cycles");
    dcat->add_flag("--opfibration", opfibration, "Check the codomain projection is an opfibration")
        ->needs(general_opt);
    dcat->add_option("-o,--output", output, "Output file");

    auto* emit = app.add_subcommand("emit", "Emit a diagram type");
    std::string kind = "reedy";
    std::optional<std::size_t> semisimplicial;
    std::optional<std::size_t> simplicial;
    std::optional<std::size_t> general_k;
    std::string level_names;
    auto* emit_input = emit->add_option("input", input, "Spec file or builtin:<name>");
    auto* semi_opt   = emit->add_option("--semisimplicial", semisimplicial, "Semisimplicial types up to level n");
    auto* simp_opt   = emit->add_option("--simplicial", simplicial, "Simplicial types up to level n");
    auto* gen_opt    = emit->add_option("--general", general_k, "Coherent diagram truncated at chain length k");
    auto* kind_opt   = emit->add_option("--kind", kind, "reedy, weak or strict")
                         ->check(CLI::IsMember({"reedy", "weak", "strict"}));
    emit->add_option("--level-names", level_names, "Name nerve components <prefix><length>");
    emit->add_option("--format", format, "text, json or agda")->check(CLI::IsMember({"text", "json", "agda"}));
    emit->add_option("--module", module, "Agda module name");
    emit->add_option("-o,--output", output, "Output file");
    semi_opt->excludes(simp_opt)->excludes(emit_input)->excludes(gen_opt)->excludes(kind_opt);
    simp_opt->excludes(emit_input)->excludes(gen_opt)->excludes(kind_opt);
    gen_opt->excludes(kind_opt);

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return static_cast<int>(Exit::ok);
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return static_cast<int>(Exit::ok);
    } catch (CLI::CallForVersion const&) {
      out << version_string << "\n";
      return static_cast<int>(Exit::ok);
    } catch (CLI::ParseError const& e) {
      err << "diagram-forge: " << e.what() << "\n";
      return static_cast<int>(Exit::input);
    }

    cli_detail::Sink sink{out, output};
    try {
      if (check->parsed()) {
        LoadedInput in = load_input(input, bound);
        Report r       = in.reedy ? check_reedy(*in.reedy) : check_inverse(in.category);
        if (!r.ok()) {
          out << r;
          return static_cast<int>(Exit::report);
        }
        out << (in.reedy ? "reedy: ok, factorizations unique\n" : "inverse: ok, degrees ok\n");
        return static_cast<int>(Exit::ok);
      }

      if (nerve->parsed()) {
        LoadedInput in = load_input(input, bound);
        FinCategory base = in.category;
        if (!coslice_at.empty()) {
          auto k = coslice(in.category, in.category.object_named(coslice_at));
          if (dot) {
            DotOptions opt;
            opt.graph_name  = "coslice";
            opt.label_edges = label_edges;
            sink.write(render_dot(k.category, opt));
          } else {
            sink.write(cli_detail::describe_coslice(in.category, k));
          }
          return static_cast<int>(Exit::ok);
        }
        ElementsCategory n = identities ? nerve_elements_truncated(base, *identities) : positive_nerve_elements(base);
        if (dot) {
          DotOptions opt;
          opt.graph_name  = "nerve";
          opt.label_edges = label_edges;
          sink.write(render_dot(n.to_category().category, opt));
        } else {
          sink.write(cli_detail::describe_nerve(n));
        }
        return static_cast<int>(Exit::ok);
      }

      if (strictify->parsed()) {
        LoadedInput in = load_input(input, bound);
        require_inverse(in.category, "strictify");
        Format f   = parse_format(format);
        auto plan  = strict_components(in.category);
        auto claim = verify_matching_claim(in.category);
        auto r     = cli_detail::strict_schemas(in.category);
        std::string text = cli_detail::render_strict(r, f, module.empty() ? "Strict" : module);
        if (f == Format::text) {
          text = cli_detail::describe_plan(in.category, plan) + "\n" + text;
        }
        sink.write(text);
        if (!claim.ok()) {
          err << claim;
          return static_cast<int>(Exit::report);
        }
        return static_cast<int>(Exit::ok);
      }

      if (dcat->parsed()) {
        if (!level && general_spec.empty()) {
          throw SpecError("dcat needs --level n or --general <reedy-spec>");
        }
        Report r;
        r.title = "dcat";
        FinCategory c;
        if (level) {
          c = frak_d(*level).category;
          if (run_checks) {
            r.append(check_degree_monotone(c));
            r.append(check_no_infinite_chains(c));
          }
        } else {
          LoadedInput in = load_input(general_spec, bound);
          if (!in.reedy) {
            throw SpecError("'" + general_spec + "' is not a Reedy spec (needs \"plus\"/\"minus\")");
          }
          require_reedy(*in.reedy);
          GeneralD d = d_construction(*in.reedy);
          c          = d.category;
          if (run_checks) {
            r.append(check_degree_monotone(c));
            r.append(check_no_infinite_chains(c));
          }
          if (opfibration) {
            r.append(check_projection_opfibration(*in.reedy, d));
          }
        }
        if (dot) {
          DotOptions opt;
          opt.graph_name  = "dcat";
          opt.label_edges = label_edges;
          sink.write(render_dot(c, opt));
        } else {
          sink.write(cli_detail::describe_category(c, true));
        }
        if (run_checks || opfibration) {
          (dot || !output.empty() ? err : out) << r;
        }
        return static_cast<int>(r.ok() ? Exit::ok : Exit::report);
      }

      if (emit->parsed()) {
        Format f = parse_format(format);
        std::string mod = module.empty() ? "Diagram" : module;
        std::optional<std::string> prefix;
        if (!level_names.empty()) {
          prefix = level_names;
        }
        if (semisimplicial) {
          sink.write(render(semisimplicial_type(*semisimplicial), f, mod));
          return static_cast<int>(Exit::ok);
        }
        if (simplicial) {
          sink.write(render(simplicial_type(*simplicial), f, mod));
          return static_cast<int>(Exit::ok);
        }
        if (input.empty()) {
          if (!general_k) {
            throw SpecError("emit needs an input, --semisimplicial n, --simplicial n or --general k");
          }
          input = "builtin:terminal";
        }
        LoadedInput in = load_input(input, bound);
        if (general_k) {
          sink.write(render(general_hc_type(in.category, *general_k, prefix), f, mod));
          return static_cast<int>(Exit::ok);
        }
        if (kind == "reedy") {
          require_inverse(in.category, "emit --kind reedy");
          sink.write(render(reedy_diagram_type(in.category), f, mod));
        } else if (kind == "weak") {
          require_inverse(in.category, "emit --kind weak");
          ContextSchema s = prefix ? nerve_limit_schema(positive_nerve_elements(in.category), prefix)
                                   : weak_diagram_type(in.category);
          if (prefix) {
            s.title            = "weak";
            s.metadata["kind"] = "weak";
          }
          sink.write(render(s, f, mod));
        } else {
          require_inverse(in.category, "emit --kind strict");
          sink.write(cli_detail::render_strict(cli_detail::strict_schemas(in.category), f,
                                               module.empty() ? "Strict" : module));
        }
        return static_cast<int>(Exit::ok);
      }
    } catch (Error const& e) {
      err << "diagram-forge: " << e.what() << "\n";
      return static_cast<int>(Exit::input);
    } catch (std::exception const& e) {
      err << "diagram-forge: " << e.what() << "\n";
      return static_cast<int>(Exit::input);
    }
    err << "diagram-forge: no command\n";
    return static_cast<int>(Exit::input);
  }

}  // namespace diagram_forge
