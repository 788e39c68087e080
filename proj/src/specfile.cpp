#include "hetcat/specfile.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hetcat {

namespace {

struct Token {
  std::string text;
  int col;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  int number = 1;
  size_t start = 0;
  while (start <= text.size()) {
    size_t eol = text.find('\n', start);
    size_t len = (eol == std::string::npos ? text.size() : eol) - start;
    Line line{number, {}};
    size_t i = 0;
    while (i < len) {
      char c = text[start + i];
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      size_t tok_start = i;
      while (i < len && text[start + i] != ' ' && text[start + i] != '\t' &&
             text[start + i] != '\r' && text[start + i] != '#') {
        ++i;
      }
      line.tokens.push_back(
          Token{text.substr(start + tok_start, i - tok_start), static_cast<int>(tok_start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string::npos) break;
    start = eol + 1;
    ++number;
  }
  return lines;
}

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : lines_(tokenize(text)) {}

  SpecDocument run() {
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_++];
      const std::string& head = line.tokens[0].text;
      if (head == "category") {
        parse_category(line);
      } else if (head == "functor") {
        parse_functor(line);
      } else if (head == "het") {
        parse_het(line);
      } else {
        fail(line, 0, "expected 'category', 'functor' or 'het'");
      }
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] static void fail(const Line& line, size_t tok_ix, const std::string& message) {
    int col = 1;
    if (tok_ix < line.tokens.size()) {
      col = line.tokens[tok_ix].col;
    } else if (!line.tokens.empty()) {
      const Token& last = line.tokens.back();
      col = last.col + static_cast<int>(last.text.size());
    }
    throw ParseError(line.number, col, message);
  }

  static void expect_count(const Line& line, size_t count, const std::string& usage) {
    if (line.tokens.size() != count) fail(line, std::min(line.tokens.size(), count), usage);
  }

  static void expect_tok(const Line& line, size_t ix, const std::string& text,
                         const std::string& usage) {
    if (ix >= line.tokens.size() || line.tokens[ix].text != text) fail(line, ix, usage);
  }

  static int expect_int(const Line& line, size_t ix, const std::string& usage) {
    if (ix >= line.tokens.size()) fail(line, ix, usage);
    const std::string& t = line.tokens[ix].text;
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
      fail(line, ix, usage);
    }
    return std::stoi(t);
  }

  const Line& next_line(const Line& header) {
    if (pos_ >= lines_.size()) {
      fail(header, header.tokens.size(), "unterminated block: missing 'end'");
    }
    return lines_[pos_++];
  }

  const CategorySpec* find_category(const std::string& name) const {
    for (const CategorySpec& c : doc_.categories) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void check_unique_name(const Line& line, size_t ix, const std::string& kind,
                         const std::string& name) const {
    bool taken = false;
    if (kind == "category") taken = find_category(name) != nullptr;
    if (kind == "functor") {
      taken = std::any_of(doc_.functors.begin(), doc_.functors.end(),
                          [&](const FunctorSpec& f) { return f.name == name; });
    }
    if (kind == "het") {
      taken = std::any_of(doc_.hets.begin(), doc_.hets.end(),
                          [&](const HetSpec& h) { return h.name == name; });
    }
    if (taken) fail(line, ix, "duplicate " + kind + " name '" + name + "'");
  }

  void parse_category(const Line& header) {
    expect_count(header, 2, "usage: category <name>");
    const std::string name = header.tokens[1].text;
    check_unique_name(header, 1, "category", name);

    CategorySpec spec;
    spec.name = name;
    std::set<std::string> objects;
    struct MorLine {
      bool identity;
      std::string name, dom, cod;
    };
    std::vector<MorLine> morphisms;
    struct ComposeLine {
      std::string g, f, h;
      int line, col;
    };
    std::vector<ComposeLine> composes;
    bool sugar_used = false;
    bool any_line = false;

    while (true) {
      const Line& line = next_line(header);
      const std::string& head = line.tokens[0].text;
      if (head == "end") {
        expect_count(line, 1, "'end' takes nothing else");
        break;
      }
      if (sugar_used) fail(line, 0, "a sugar line must be the only line of its block");
      if (head == "poset-chain" || head == "poset-powerset") {
        if (any_line) fail(line, 0, "a sugar line must be the only line of its block");
        sugar_used = true;
        int n = expect_int(line, 1, "usage: " + head + " <n>");
        expect_count(line, 2, "usage: " + head + " <n>");
        if (head == "poset-chain" && n > 32) fail(line, 1, "poset-chain supports 0..32");
        try {
          spec = head == "poset-chain" ? poset_chain(name, n).to_spec()
                                       : poset_powerset(name, n).to_spec();
        } catch (const DomainError& e) {
          fail(line, 1, e.what());
        }
        continue;
      }
      any_line = true;
      if (head == "objects") {
        if (line.tokens.size() < 2) fail(line, 1, "usage: objects <name> ...");
        for (size_t i = 1; i < line.tokens.size(); ++i) {
          if (!objects.insert(line.tokens[i].text).second) {
            fail(line, i, "duplicate object '" + line.tokens[i].text + "'");
          }
          spec.objects.push_back(line.tokens[i].text);
        }
      } else if (head == "identity") {
        expect_count(line, 4, "usage: identity <morphism> : <object>");
        expect_tok(line, 2, ":", "usage: identity <morphism> : <object>");
        const std::string& obj = line.tokens[3].text;
        if (!objects.count(obj)) fail(line, 3, "unknown object '" + obj + "'");
        if (spec.identities.count(obj)) fail(line, 3, "object '" + obj + "' already has an identity");
        spec.identities[obj] = line.tokens[1].text;
        morphisms.push_back({true, line.tokens[1].text, obj, obj});
      } else if (head == "arrow") {
        expect_count(line, 6, "usage: arrow <name> : <dom> -> <cod>");
        expect_tok(line, 2, ":", "usage: arrow <name> : <dom> -> <cod>");
        expect_tok(line, 4, "->", "usage: arrow <name> : <dom> -> <cod>");
        if (!objects.count(line.tokens[3].text)) {
          fail(line, 3, "unknown object '" + line.tokens[3].text + "'");
        }
        if (!objects.count(line.tokens[5].text)) {
          fail(line, 5, "unknown object '" + line.tokens[5].text + "'");
        }
        morphisms.push_back({false, line.tokens[1].text, line.tokens[3].text, line.tokens[5].text});
      } else if (head == "compose") {
        expect_count(line, 6, "usage: compose <g> . <f> = <h>");
        expect_tok(line, 2, ".", "usage: compose <g> . <f> = <h>");
        expect_tok(line, 4, "=", "usage: compose <g> . <f> = <h>");
        composes.push_back(
            {line.tokens[1].text, line.tokens[3].text, line.tokens[5].text, line.number,
             line.tokens[0].col});
      } else {
        fail(line, 0, "expected 'objects', 'identity', 'arrow', 'compose', sugar or 'end'");
      }
    }
    if (sugar_used) {
      doc_.categories.push_back(std::move(spec));
      return;
    }

    // Synthesized identities come first, in object order, then the
    // explicitly declared morphisms in file order.
    std::vector<MorphismDecl> ordered;
    for (const std::string& o : spec.objects) {
      if (!spec.identities.count(o)) {
        spec.identities[o] = "id_" + o;
        ordered.push_back({"id_" + o, o, o});
      }
    }
    for (const MorLine& m : morphisms) ordered.push_back({m.name, m.dom, m.cod});
    spec.morphisms = std::move(ordered);

    std::set<std::string> mor_names;
    for (const MorphismDecl& m : spec.morphisms) {
      if (!mor_names.insert(m.name).second) {
        throw ParseError(header.number, header.tokens[0].col,
                         "duplicate morphism '" + m.name + "' in category " + name);
      }
    }
    for (const ComposeLine& c : composes) {
      for (const std::string& ref : {c.g, c.f, c.h}) {
        if (!mor_names.count(ref)) {
          throw ParseError(c.line, c.col, "unknown morphism '" + ref + "'");
        }
      }
      if (spec.compose.count({c.g, c.f})) {
        throw ParseError(c.line, c.col, "duplicate compose entry (" + c.g + ", " + c.f + ")");
      }
      spec.compose[{c.g, c.f}] = c.h;
    }

    // Unit entries are forced by the laws; fill the ones not spelled out.
    std::map<std::string, std::pair<std::string, std::string>> bounds;
    for (const MorphismDecl& m : spec.morphisms) bounds[m.name] = {m.dom, m.cod};
    for (const MorphismDecl& m : spec.morphisms) {
      const std::string& id_dom = spec.identities.at(m.dom);
      const std::string& id_cod = spec.identities.at(m.cod);
      spec.compose.try_emplace({m.name, id_dom}, m.name);
      spec.compose.try_emplace({id_cod, m.name}, m.name);
    }
    doc_.categories.push_back(std::move(spec));
  }

  void parse_functor(const Line& header) {
    expect_count(header, 6, "usage: functor <name> : <source> -> <target>");
    expect_tok(header, 2, ":", "usage: functor <name> : <source> -> <target>");
    expect_tok(header, 4, "->", "usage: functor <name> : <source> -> <target>");
    check_unique_name(header, 1, "functor", header.tokens[1].text);
    const CategorySpec* src = find_category(header.tokens[3].text);
    if (!src) fail(header, 3, "unknown category '" + header.tokens[3].text + "'");
    const CategorySpec* tgt = find_category(header.tokens[5].text);
    if (!tgt) fail(header, 5, "unknown category '" + header.tokens[5].text + "'");

    auto obj_set = [](const CategorySpec& c) {
      return std::set<std::string>(c.objects.begin(), c.objects.end());
    };
    auto mor_set = [](const CategorySpec& c) {
      std::set<std::string> s;
      for (const MorphismDecl& m : c.morphisms) s.insert(m.name);
      return s;
    };
    std::set<std::string> src_objs = obj_set(*src), tgt_objs = obj_set(*tgt);
    std::set<std::string> src_mors = mor_set(*src), tgt_mors = mor_set(*tgt);

    FunctorSpec spec;
    spec.name = header.tokens[1].text;
    spec.source = src->name;
    spec.target = tgt->name;
    while (true) {
      const Line& line = next_line(header);
      const std::string& head = line.tokens[0].text;
      if (head == "end") break;
      if (head == "obj") {
        expect_count(line, 4, "usage: obj <x> -> <y>");
        expect_tok(line, 2, "->", "usage: obj <x> -> <y>");
        if (!src_objs.count(line.tokens[1].text)) {
          fail(line, 1, "unknown source object '" + line.tokens[1].text + "'");
        }
        if (!tgt_objs.count(line.tokens[3].text)) {
          fail(line, 3, "unknown target object '" + line.tokens[3].text + "'");
        }
        if (!spec.obj_map.emplace(line.tokens[1].text, line.tokens[3].text).second) {
          fail(line, 1, "object '" + line.tokens[1].text + "' already mapped");
        }
      } else if (head == "arrow") {
        expect_count(line, 4, "usage: arrow <f> -> <g>");
        expect_tok(line, 2, "->", "usage: arrow <f> -> <g>");
        if (!src_mors.count(line.tokens[1].text)) {
          fail(line, 1, "unknown source morphism '" + line.tokens[1].text + "'");
        }
        if (!tgt_mors.count(line.tokens[3].text)) {
          fail(line, 3, "unknown target morphism '" + line.tokens[3].text + "'");
        }
        if (!spec.mor_map.emplace(line.tokens[1].text, line.tokens[3].text).second) {
          fail(line, 1, "morphism '" + line.tokens[1].text + "' already mapped");
        }
      } else {
        fail(line, 0, "expected 'obj', 'arrow' or 'end'");
      }
    }
    doc_.functors.push_back(std::move(spec));
  }

  void parse_het(const Line& header) {
    expect_count(header, 6, "usage: het <name> : <sending> ~> <receiving>");
    expect_tok(header, 2, ":", "usage: het <name> : <sending> ~> <receiving>");
    expect_tok(header, 4, "~>", "usage: het <name> : <sending> ~> <receiving>");
    check_unique_name(header, 1, "het", header.tokens[1].text);
    const CategorySpec* send = find_category(header.tokens[3].text);
    if (!send) fail(header, 3, "unknown category '" + header.tokens[3].text + "'");
    const CategorySpec* recv = find_category(header.tokens[5].text);
    if (!recv) fail(header, 5, "unknown category '" + header.tokens[5].text + "'");

    std::set<std::string> send_objs(send->objects.begin(), send->objects.end());
    std::set<std::string> recv_objs(recv->objects.begin(), recv->objects.end());
    std::set<std::string> send_mors, recv_mors;
    for (const MorphismDecl& m : send->morphisms) send_mors.insert(m.name);
    for (const MorphismDecl& m : recv->morphisms) recv_mors.insert(m.name);

    HetSpec spec;
    spec.name = header.tokens[1].text;
    spec.sending = send->name;
    spec.receiving = recv->name;
    std::set<std::string> elems;
    struct ActLine {
      bool left;
      std::string a, b, result;  // lact: (k, u); ract: (u, h)
      int line, col;
    };
    std::vector<ActLine> actions;

    while (true) {
      const Line& line = next_line(header);
      const std::string& head = line.tokens[0].text;
      if (head == "end") break;
      if (head == "element" || head == "rel") {
        std::string elem_name, src, dst;
        if (head == "element") {
          expect_count(line, 6, "usage: element <u> : <x> ~> <a>");
          expect_tok(line, 2, ":", "usage: element <u> : <x> ~> <a>");
          expect_tok(line, 4, "~>", "usage: element <u> : <x> ~> <a>");
          elem_name = line.tokens[1].text;
          src = line.tokens[3].text;
          dst = line.tokens[5].text;
        } else {
          expect_count(line, 3, "usage: rel <x> <a>");
          src = line.tokens[1].text;
          dst = line.tokens[2].text;
          elem_name = "u_" + src + "_" + dst;
        }
        if (!send_objs.count(src)) fail(line, head == "rel" ? 1 : 3, "unknown object '" + src + "'");
        if (!recv_objs.count(dst)) fail(line, head == "rel" ? 2 : 5, "unknown object '" + dst + "'");
        if (!elems.insert(elem_name).second) {
          fail(line, 1, "duplicate element '" + elem_name + "'");
        }
        spec.elements.push_back(HetElementDecl{elem_name, src, dst});
      } else if (head == "lact") {
        expect_count(line, 5, "usage: lact <k> <u> = <v>");
        expect_tok(line, 3, "=", "usage: lact <k> <u> = <v>");
        if (!recv_mors.count(line.tokens[1].text)) {
          fail(line, 1, "unknown receiving morphism '" + line.tokens[1].text + "'");
        }
        actions.push_back({true, line.tokens[1].text, line.tokens[2].text, line.tokens[4].text,
                           line.number, line.tokens[2].col});
      } else if (head == "ract") {
        expect_count(line, 5, "usage: ract <u> <h> = <v>");
        expect_tok(line, 3, "=", "usage: ract <u> <h> = <v>");
        if (!send_mors.count(line.tokens[2].text)) {
          fail(line, 2, "unknown sending morphism '" + line.tokens[2].text + "'");
        }
        actions.push_back({false, line.tokens[1].text, line.tokens[2].text, line.tokens[4].text,
                           line.number, line.tokens[1].col});
      } else {
        fail(line, 0, "expected 'element', 'rel', 'lact', 'ract' or 'end'");
      }
    }

    for (const ActLine& a : actions) {
      const std::string& elem_ref = a.left ? a.b : a.a;
      if (!elems.count(elem_ref)) throw ParseError(a.line, a.col, "unknown element '" + elem_ref + "'");
      if (!elems.count(a.result)) throw ParseError(a.line, a.col, "unknown element '" + a.result + "'");
      auto& table = a.left ? spec.act_left : spec.act_right;
      if (!table.emplace(std::make_pair(a.a, a.b), a.result).second) {
        throw ParseError(a.line, a.col, "duplicate action entry");
      }
    }
    doc_.hets.push_back(std::move(spec));
  }

  std::vector<Line> lines_;
  size_t pos_ = 0;
  SpecDocument doc_;
};

}  // namespace

SpecDocument parse_spec(const std::string& text) { return SpecParser(text).run(); }

std::string serialize_spec(const SpecDocument& doc) {
  std::ostringstream out;
  bool first = true;
  for (const CategorySpec& c : doc.categories) {
    if (!first) out << "\n";
    first = false;
    out << "category " << c.name << "\n";
    out << "  objects";
    for (const std::string& o : c.objects) out << " " << o;
    out << "\n";
    std::map<std::string, std::pair<std::string, std::string>> bounds;
    for (const MorphismDecl& m : c.morphisms) {
      bounds[m.name] = {m.dom, m.cod};
      auto id = c.identities.find(m.dom);
      if (m.dom == m.cod && id != c.identities.end() && id->second == m.name) {
        out << "  identity " << m.name << " : " << m.dom << "\n";
      } else {
        out << "  arrow " << m.name << " : " << m.dom << " -> " << m.cod << "\n";
      }
    }
    for (const auto& [pair, res] : c.compose) {
      const auto& [g, f] = pair;
      auto gid = c.identities.find(bounds.at(g).first);
      if (gid != c.identities.end() && gid->second == f && res == g) continue;
      auto fid = c.identities.find(bounds.at(f).second);
      if (fid != c.identities.end() && fid->second == g && res == f) continue;
      out << "  compose " << g << " . " << f << " = " << res << "\n";
    }
    out << "end\n";
  }
  for (const FunctorSpec& f : doc.functors) {
    if (!first) out << "\n";
    first = false;
    out << "functor " << f.name << " : " << f.source << " -> " << f.target << "\n";
    for (const auto& [from, to] : f.obj_map) out << "  obj " << from << " -> " << to << "\n";
    for (const auto& [from, to] : f.mor_map) out << "  arrow " << from << " -> " << to << "\n";
    out << "end\n";
  }
  for (const HetSpec& h : doc.hets) {
    if (!first) out << "\n";
    first = false;
    out << "het " << h.name << " : " << h.sending << " ~> " << h.receiving << "\n";
    for (const HetElementDecl& e : h.elements) {
      out << "  element " << e.name << " : " << e.src << " ~> " << e.dst << "\n";
    }
    for (const auto& [pair, res] : h.act_left) {
      out << "  lact " << pair.first << " " << pair.second << " = " << res << "\n";
    }
    for (const auto& [pair, res] : h.act_right) {
      out << "  ract " << pair.first << " " << pair.second << " = " << res << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

SpecDocument fixture_to_spec(const Fixture& fixture) {
  SpecDocument doc;
  for (const FinCategory& c : fixture.categories) doc.categories.push_back(c.to_spec());
  for (const FinFunctor& f : fixture.functors) doc.functors.push_back(f.to_spec());
  for (const HetBifunctor& h : fixture.hets) doc.hets.push_back(h.to_spec());
  return doc;
}

const FinCategory* ElaboratedDoc::category(const std::string& name) const {
  for (const FinCategory& c : categories) {
    if (c.name() == name) return &c;
  }
  return nullptr;
}

const FinFunctor* ElaboratedDoc::functor(const std::string& name) const {
  for (const FinFunctor& f : functors) {
    if (f.name() == name) return &f;
  }
  return nullptr;
}

const HetBifunctor* ElaboratedDoc::het(const std::string& name) const {
  for (const HetBifunctor& h : hets) {
    if (h.name() == name) return &h;
  }
  return nullptr;
}

Result<ElaboratedDoc> elaborate(const SpecDocument& doc) {
  ValidationReport report;
  ElaboratedDoc out;
  for (const CategorySpec& spec : doc.categories) {
    Result<FinCategory> r = make_category(spec);
    if (r.ok()) {
      out.categories.push_back(std::move(r).value());
    } else {
      report.merge(r.report(), "category " + spec.name + ": ");
    }
  }
  for (const FunctorSpec& spec : doc.functors) {
    const FinCategory* src = out.category(spec.source);
    const FinCategory* tgt = out.category(spec.target);
    if (!src || !tgt) {
      report.add("functor " + spec.name + ": category-unavailable",
                 {!src ? spec.source : spec.target});
      continue;
    }
    Result<FinFunctor> r = make_functor(*src, *tgt, spec);
    if (r.ok()) {
      out.functors.push_back(std::move(r).value());
    } else {
      report.merge(r.report(), "functor " + spec.name + ": ");
    }
  }
  for (const HetSpec& spec : doc.hets) {
    const FinCategory* send = out.category(spec.sending);
    const FinCategory* recv = out.category(spec.receiving);
    if (!send || !recv) {
      report.add("het " + spec.name + ": category-unavailable",
                 {!send ? spec.sending : spec.receiving});
      continue;
    }
    Result<HetBifunctor> r = make_het(*send, *recv, spec);
    if (r.ok()) {
      out.hets.push_back(std::move(r).value());
    } else {
      report.merge(r.report(), "het " + spec.name + ": ");
    }
  }
  if (!report.ok()) return report;
  return out;
}

}  // namespace hetcat
