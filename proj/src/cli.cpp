#include "hetcat/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hetcat/dot.hpp"
#include "hetcat/specfile.hpp"

namespace hetcat {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ElaboratedDoc load(const std::string& path) {
  SpecDocument doc = parse_spec(read_file(path));
  Result<ElaboratedDoc> r = elaborate(doc);
  if (!r.ok()) {
    throw DomainError(path + ": invalid declarations\n" + r.report().to_string());
  }
  return std::move(r).value();
}

const HetBifunctor& need_het(const ElaboratedDoc& doc, const std::string& name) {
  const HetBifunctor* h = doc.het(name);
  if (!h) throw DomainError("no het '" + name + "' declared in the file");
  return *h;
}

const FinFunctor& need_functor(const ElaboratedDoc& doc, const std::string& name) {
  const FinFunctor* f = doc.functor(name);
  if (!f) throw DomainError("no functor '" + name + "' declared in the file");
  return *f;
}

std::string object_map_line(const FinFunctor& fun) {
  std::string out;
  for (int o = 0; o < fun.source().object_count(); ++o) {
    if (o > 0) out += " ";
    out += fun.source().object_name(o) + "->" + fun.target().object_name(fun.obj_ix(o));
  }
  return out;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  SpecDocument doc = parse_spec(read_file(path));
  Result<ElaboratedDoc> r = elaborate(doc);
  if (!r.ok()) {
    err << path << ": invalid declarations\n" << r.report().to_string();
    return 2;
  }
  const ElaboratedDoc& e = r.value();
  for (const FinCategory& c : e.categories) {
    out << "category " << c.name() << ": ok (" << c.object_count() << " objects, "
        << c.morphism_count() << " morphisms)\n";
  }
  for (const FinFunctor& f : e.functors) {
    out << "functor " << f.name() << ": ok (" << f.source().name() << " -> "
        << f.target().name() << ")\n";
  }
  for (const HetBifunctor& h : e.hets) {
    out << "het " << h.name() << ": ok (" << h.element_count() << " elements)\n";
  }
  out << "all declarations valid\n";
  return 0;
}

int cmd_represent(bool left, const ElaboratedDoc& doc, const std::string& het_name,
                  const std::string& object, std::ostream& out) {
  const HetBifunctor& het = need_het(doc, het_name);
  auto arrow = left ? find_left_representation(het, object) : find_right_representation(het, object);
  if (!arrow) {
    out << "object " << object << " is not representable on the " << (left ? "left" : "right")
        << " in het " << het_name << "\n";
    return 1;
  }
  out << (left ? "F(" : "G(") << object << ") = " << arrow->rep
      << ", universal = " << arrow->universal << "\n";
  return 0;
}

// Builds and assembles the full adjunction over one het; negative results
// are printed and mapped to exit 1 through the returned status.
int build_adjunction(const ElaboratedDoc& doc, const std::string& het_name, std::ostream& out,
                     Adjunction* result) {
  const HetBifunctor& het = need_het(doc, het_name);
  Result<Semiadjunction> left = build_left_semiadjunction(het);
  if (!left.ok()) {
    out << "NOT REPRESENTABLE on the left in het " << het_name << ":\n"
        << left.report().to_string();
    return 1;
  }
  Result<Semiadjunction> right = build_right_semiadjunction(het);
  if (!right.ok()) {
    out << "NOT REPRESENTABLE on the right in het " << het_name << ":\n"
        << right.report().to_string();
    return 1;
  }
  Result<Adjunction> adj = assemble_adjunction(left.value(), right.value());
  if (!adj.ok()) {
    out << "ADJUNCTION FAILED over het " << het_name << ":\n" << adj.report().to_string();
    return 1;
  }
  *result = std::move(adj).value();
  return 0;
}

int cmd_adjunction(const ElaboratedDoc& doc, const std::string& het_name, std::ostream& out) {
  Adjunction adj;
  int status = build_adjunction(doc, het_name, out, &adj);
  if (status != 0) return status;
  out << "ADJUNCTION verified over het " << het_name << "\n";
  out << "F: " << object_map_line(adj.left.functor) << "\n";
  out << "G: " << object_map_line(adj.right.functor) << "\n";
  out << "checked " << adj.het().element_count() << " het elements, both factorizations each\n";
  return 0;
}

int report_brain(const Result<BrainFunctor>& brain, std::ostream& out) {
  if (!brain.ok()) {
    out << "BRAIN FUNCTOR: failed\n" << brain.report().to_string();
    return 1;
  }
  out << "BRAIN FUNCTOR: verified\n";
  out << "F: " << object_map_line(brain.value().functor) << "\n";
  out << "checked " << brain.value().out_semi.het.element_count() << " outgoing and "
      << brain.value().in_semi.het.element_count() << " incoming het elements\n";
  return 0;
}

int cmd_gallery(const std::string& name, const std::vector<int>& params, bool emit_spec,
                std::ostream& out) {
  Fixture fx = build_fixture(name, params);
  if (emit_spec) {
    out << serialize_spec(fixture_to_spec(fx));
    return 0;
  }
  out << "fixture " << fx.name;
  for (int p : fx.params) out << " " << p;
  out << "\n";
  for (const FinCategory& c : fx.categories) {
    out << "  category " << c.name() << ": " << c.object_count() << " objects, "
        << c.morphism_count() << " morphisms\n";
  }
  for (const FinFunctor& f : fx.functors) {
    out << "  functor " << f.name() << ": " << f.source().name() << " -> " << f.target().name()
        << "\n";
  }
  for (const HetBifunctor& h : fx.hets) {
    out << "  het " << h.name() << ": " << h.element_count() << " elements\n";
  }
  ValidationReport checks = run_fixture_checks(fx);
  if (!checks.ok()) {
    out << "expected results: " << fx.expected.size() << ", FAILURES:\n" << checks.to_string();
    return 1;
  }
  out << "expected results: " << fx.expected.size() << ", all confirmed\n";
  return 0;
}

int cmd_report_selection(const ElaboratedDoc& doc, const std::string& het_name,
                         const std::string& element, std::ostream& out) {
  const HetBifunctor& het = need_het(doc, het_name);
  het.require_element(element);
  Result<Semiadjunction> semi = build_left_semiadjunction(het);
  if (!semi.ok()) {
    out << "NOT REPRESENTABLE on the left in het " << het_name << ":\n"
        << semi.report().to_string();
    return 1;
  }
  out << selection_report(semi.value(), element);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite categories, heteromorphisms, semiadjunctions and brain functors"};
  app.name("hetcat");
  app.require_subcommand(1);

  std::string file, het_name, object, functor_name, out_het, in_het;
  std::string left_name, mid_name, right_name, element, element_out, element_in;
  std::string gallery_name, dot_kind;
  std::vector<int> gallery_params;
  bool emit_spec = false;

  CLI::App* validate = app.add_subcommand("validate", "check every declaration in a spec file");
  validate->add_option("file", file)->required();

  CLI::App* rep_left = app.add_subcommand("represent-left", "find a receiving universal");
  rep_left->add_option("file", file)->required();
  rep_left->add_option("--het", het_name)->required();
  rep_left->add_option("--object", object)->required();

  CLI::App* rep_right = app.add_subcommand("represent-right", "find a sending universal");
  rep_right->add_option("file", file)->required();
  rep_right->add_option("--het", het_name)->required();
  rep_right->add_option("--object", object)->required();

  CLI::App* adjunction = app.add_subcommand("adjunction", "assemble and verify an adjunction");
  adjunction->add_option("file", file)->required();
  adjunction->add_option("--het", het_name)->required();

  CLI::App* brain = app.add_subcommand("brain", "verify a brain functor from two het bifunctors");
  brain->add_option("file", file)->required();
  brain->add_option("--functor", functor_name)->required();
  brain->add_option("--out", out_het)->required();
  brain->add_option("--in", in_het)->required();

  CLI::App* bfa = app.add_subcommand("brain-from-adjoints",
                                     "verify H -| F -| G and derive the brain functor F");
  bfa->add_option("file", file)->required();
  bfa->add_option("--left", left_name)->required();
  bfa->add_option("--mid", mid_name)->required();
  bfa->add_option("--right", right_name)->required();

  CLI::App* gallery = app.add_subcommand("gallery", "build and check a canonical fixture");
  gallery->add_option("name", gallery_name)->required();
  gallery->add_option("params", gallery_params);
  gallery->add_flag("--emit-spec", emit_spec, "print the fixture as a spec file");

  CLI::App* selection = app.add_subcommand("report-selection",
                                           "selection vs instruction report for one het");
  selection->add_option("file", file)->required();
  selection->add_option("--het", het_name)->required();
  selection->add_option("--element", element)->required();

  CLI::App* dot = app.add_subcommand("emit-dot", "emit a DOT diagram");
  dot->add_option("kind", dot_kind)->required()->check(CLI::IsMember({"square", "butterfly"}));
  dot->add_option("file", file)->required();
  dot->add_option("--het", het_name);
  dot->add_option("--element", element);
  dot->add_option("--functor", functor_name);
  dot->add_option("--out", out_het);
  dot->add_option("--in", in_het);
  dot->add_option("--element-out", element_out);
  dot->add_option("--element-in", element_in);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file, out, err);
    if (app.got_subcommand(rep_left)) return cmd_represent(true, load(file), het_name, object, out);
    if (app.got_subcommand(rep_right)) {
      return cmd_represent(false, load(file), het_name, object, out);
    }
    if (app.got_subcommand(adjunction)) return cmd_adjunction(load(file), het_name, out);
    if (app.got_subcommand(brain)) {
      ElaboratedDoc doc = load(file);
      return report_brain(
          check_brain(need_functor(doc, functor_name), need_het(doc, out_het), need_het(doc, in_het)),
          out);
    }
    if (app.got_subcommand(bfa)) {
      ElaboratedDoc doc = load(file);
      return report_brain(brain_from_adjoints(need_functor(doc, left_name),
                                              need_functor(doc, mid_name),
                                              need_functor(doc, right_name)),
                          out);
    }
    if (app.got_subcommand(gallery)) return cmd_gallery(gallery_name, gallery_params, emit_spec, out);
    if (app.got_subcommand(selection)) {
      return cmd_report_selection(load(file), het_name, element, out);
    }
    if (app.got_subcommand(dot)) {
      ElaboratedDoc doc = load(file);
      if (dot_kind == "square") {
        if (het_name.empty() || element.empty()) {
          throw DomainError("emit-dot square needs --het and --element");
        }
        Adjunction adj;
        int status = build_adjunction(doc, het_name, out, &adj);
        if (status != 0) return status;
        out << emit_dot_square(adj, element);
        return 0;
      }
      if (functor_name.empty() || out_het.empty() || in_het.empty() || element_out.empty() ||
          element_in.empty()) {
        throw DomainError(
            "emit-dot butterfly needs --functor, --out, --in, --element-out and --element-in");
      }
      Result<BrainFunctor> b = check_brain(need_functor(doc, functor_name),
                                           need_het(doc, out_het), need_het(doc, in_het));
      if (!b.ok()) {
        out << "BRAIN FUNCTOR: failed\n" << b.report().to_string();
        return 1;
      }
      out << emit_dot_butterfly(b.value(), element_out, element_in);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand handled\n";
  return 2;
}

}  // namespace hetcat
