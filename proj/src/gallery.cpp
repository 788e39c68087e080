#include "hetcat/gallery.hpp"

#include <algorithm>
#include <functional>

namespace hetcat {

const FinCategory& Fixture::category(const std::string& name) const {
  for (const auto& c : categories) {
    if (c.name() == name) return c;
  }
  throw DomainError("fixture " + this->name + " has no category '" + name + "'");
}

const FinFunctor& Fixture::functor(const std::string& name) const {
  for (const auto& f : functors) {
    if (f.name() == name) return f;
  }
  throw DomainError("fixture " + this->name + " has no functor '" + name + "'");
}

const HetBifunctor& Fixture::het(const std::string& name) const {
  for (const auto& h : hets) {
    if (h.name() == name) return h;
  }
  throw DomainError("fixture " + this->name + " has no het '" + name + "'");
}

bool Fixture::operator==(const Fixture& other) const {
  return name == other.name && params == other.params && categories == other.categories &&
         functors == other.functors && hets == other.hets && expected == other.expected;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "chain-galois", "powerset-diagonal", "free-discrete-preorder", "coordinate-coding",
      "hom-identity"};
  return names;
}

namespace {

void require_params(const std::string& fixture, const std::vector<int>& params, size_t count,
                    const std::vector<std::pair<int, int>>& ranges, const char* usage) {
  if (params.size() != count) {
    throw DomainError(fixture + " takes " + std::to_string(count) + " parameter(s): " + usage);
  }
  for (size_t i = 0; i < count; ++i) {
    if (params[i] < ranges[i].first || params[i] > ranges[i].second) {
      throw DomainError(fixture + " parameter " + std::to_string(i + 1) + " out of range [" +
                        std::to_string(ranges[i].first) + ", " + std::to_string(ranges[i].second) +
                        "]: " + usage);
    }
  }
}

Fixture chain_galois(const std::vector<int>& params) {
  require_params("chain-galois", params, 2, {{1, 16}, {1, 8}}, "n m (chains 0..n and 0..m)");
  const int n = params[0];
  const int m = params[1];

  Fixture fx;
  fx.name = "chain-galois";
  fx.params = params;
  FinCategory sending = poset_chain("X" + std::to_string(n), n);
  FinCategory receiving = poset_chain("A" + std::to_string(m), m);

  std::vector<std::pair<std::string, std::string>> related;
  for (int x = 0; x <= n; ++x) {
    for (int a = 0; a <= m; ++a) {
      if (x <= 2 * a) related.push_back({std::to_string(x), std::to_string(a)});
    }
  }
  fx.hets.push_back(std::move(make_relation_het("ceil", sending, receiving, related)).value());
  fx.categories.push_back(std::move(sending));
  fx.categories.push_back(std::move(receiving));

  // Expected tables straight from the arithmetic: F(x) = ceil(x/2) when it
  // fits in the receiving chain, G(a) = min(2a, n).
  for (int x = 0; x <= n; ++x) {
    int fx_val = (x + 1) / 2;
    fx.expected["left.obj." + std::to_string(x)] =
        fx_val <= m ? std::to_string(fx_val) : "none";
    if (fx_val <= m) {
      fx.expected["left.universal." + std::to_string(x)] =
          "u_" + std::to_string(x) + "_" + std::to_string(fx_val);
    }
  }
  for (int a = 0; a <= m; ++a) {
    int ga_val = std::min(2 * a, n);
    fx.expected["right.obj." + std::to_string(a)] = std::to_string(ga_val);
    fx.expected["right.universal." + std::to_string(a)] =
        "u_" + std::to_string(ga_val) + "_" + std::to_string(a);
  }
  fx.expected["adjunction"] = n <= 2 * m ? "verified" : "left-incomplete";
  return fx;
}

std::string subset_name(unsigned mask) {
  if (mask == 0) return "0";
  std::string s;
  for (int b = 0; b < 3; ++b) {
    if (mask & (1u << b)) s += static_cast<char>('a' + b);
  }
  return s;
}

std::string subset_mor(unsigned s, unsigned t) {
  return s == t ? "id_" + subset_name(s) : "le_" + subset_name(s) + "_" + subset_name(t);
}

std::string pair_token(const std::string& l, const std::string& r) {
  return "(" + l + "," + r + ")";
}

Fixture powerset_diagonal(const std::vector<int>& params) {
  require_params("powerset-diagonal", params, 1, {{1, 3}}, "k (powerset of k generators)");
  const int k = params[0];
  const unsigned n = 1u << k;

  Fixture fx;
  fx.name = "powerset-diagonal";
  fx.params = params;
  FinCategory P = poset_powerset("P" + std::to_string(k), k);
  FinCategory PP = product(P, P);

  FunctorSpec diag;
  diag.name = "diag";
  diag.source = P.name();
  diag.target = PP.name();
  for (unsigned s = 0; s < n; ++s) {
    diag.obj_map[subset_name(s)] = pair_token(subset_name(s), subset_name(s));
  }
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned t = 0; t < n; ++t) {
      if ((s & t) == s) {
        diag.mor_map[subset_mor(s, t)] = pair_token(subset_mor(s, t), subset_mor(s, t));
      }
    }
  }

  FunctorSpec join;
  join.name = "join";
  join.source = PP.name();
  join.target = P.name();
  FunctorSpec meet;
  meet.name = "meet";
  meet.source = PP.name();
  meet.target = P.name();
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned t = 0; t < n; ++t) {
      join.obj_map[pair_token(subset_name(s), subset_name(t))] = subset_name(s | t);
      meet.obj_map[pair_token(subset_name(s), subset_name(t))] = subset_name(s & t);
    }
  }
  for (unsigned s1 = 0; s1 < n; ++s1) {
    for (unsigned s2 = 0; s2 < n; ++s2) {
      if ((s1 & s2) != s1) continue;
      for (unsigned t1 = 0; t1 < n; ++t1) {
        for (unsigned t2 = 0; t2 < n; ++t2) {
          if ((t1 & t2) != t1) continue;
          std::string name = pair_token(subset_mor(s1, s2), subset_mor(t1, t2));
          join.mor_map[name] = subset_mor(s1 | t1, s2 | t2);
          meet.mor_map[name] = subset_mor(s1 & t1, s2 & t2);
        }
      }
    }
  }

  FinFunctor diag_fun = std::move(make_functor(P, PP, diag)).value();
  fx.hets.push_back(induced_het_left(diag_fun, "out"));
  fx.hets.push_back(induced_het_right(diag_fun, "in"));
  fx.functors.push_back(std::move(make_functor(PP, P, join)).value());
  fx.functors.push_back(std::move(diag_fun));
  fx.functors.push_back(std::move(make_functor(PP, P, meet)).value());
  fx.categories.push_back(std::move(P));
  fx.categories.push_back(std::move(PP));

  for (unsigned s = 0; s < n; ++s) {
    fx.expected["F." + subset_name(s)] = pair_token(subset_name(s), subset_name(s));
    for (unsigned t = 0; t < n; ++t) {
      fx.expected["join." + pair_token(subset_name(s), subset_name(t))] = subset_name(s | t);
      fx.expected["meet." + pair_token(subset_name(s), subset_name(t))] = subset_name(s & t);
    }
  }
  fx.expected["brain"] = "verified";
  return fx;
}

// Carriers are 1..size; leq is the preorder relation on the carrier.
struct PreorderDef {
  std::string name;
  int size;
  std::function<bool(int, int)> leq;
};

std::string img_token(const std::vector<int>& img) {
  if (img.empty()) return "e";
  std::string s;
  for (int v : img) s += static_cast<char>('0' + v);
  return s;
}

bool is_identity_img(const std::vector<int>& img) {
  for (size_t i = 0; i < img.size(); ++i) {
    if (img[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

// All functions {1..dom_size} -> {1..cod_size} as image vectors, in
// lexicographic order.
std::vector<std::vector<int>> all_functions(int dom_size, int cod_size) {
  std::vector<std::vector<int>> out;
  if (dom_size == 0) {
    out.push_back({});
    return out;
  }
  if (cod_size == 0) return out;
  std::vector<int> img(dom_size, 1);
  while (true) {
    out.push_back(img);
    int i = dom_size - 1;
    while (i >= 0 && img[i] == cod_size) {
      img[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

std::vector<int> compose_img(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
  return out;
}

Fixture free_discrete_preorder(const std::vector<int>& params) {
  require_params("free-discrete-preorder", params, 1, {{1, 3}}, "n (largest carrier size)");
  const int n = params[0];

  std::vector<int> set_sizes;
  for (int i = 0; i <= n; ++i) set_sizes.push_back(i);
  auto set_name = [](int i) { return "s" + std::to_string(i); };

  std::vector<PreorderDef> preorders;
  preorders.push_back({"P0", 0, [](int, int) { return false; }});
  preorders.push_back({"D1", 1, [](int x, int y) { return x == y; }});
  if (n >= 2) {
    preorders.push_back({"D2", 2, [](int x, int y) { return x == y; }});
    preorders.push_back({"C2", 2, [](int x, int y) { return x <= y; }});
    preorders.push_back({"I2", 2, [](int, int) { return true; }});
  }
  if (n >= 3) {
    preorders.push_back({"D3", 3, [](int x, int y) { return x == y; }});
    preorders.push_back({"C3", 3, [](int x, int y) { return x <= y; }});
    preorders.push_back({"V3", 3, [](int x, int y) { return x == y || y == 3; }});
    preorders.push_back({"I3", 3, [](int, int) { return true; }});
  }

  // The category of the carrier sets with every function between them.
  struct Arrow {
    std::string name;
    int dom, cod;
    std::vector<int> img;
  };
  auto build_category = [](const std::string& cat_name, const std::vector<std::string>& obj_names,
                           const std::vector<int>& sizes) {
    std::vector<Arrow> arrows;
    CategorySpec spec;
    spec.name = cat_name;
    spec.objects = obj_names;
    const int count = static_cast<int>(obj_names.size());
    for (int o = 0; o < count; ++o) {
      std::vector<int> id_img(sizes[o]);
      for (int i = 0; i < sizes[o]; ++i) id_img[i] = i + 1;
      arrows.push_back({"id_" + obj_names[o], o, o, id_img});
      spec.identities[obj_names[o]] = "id_" + obj_names[o];
    }
    for (int d = 0; d < count; ++d) {
      for (int c = 0; c < count; ++c) {
        for (const auto& img : all_functions(sizes[d], sizes[c])) {
          if (d == c && is_identity_img(img)) continue;
          arrows.push_back({"m_" + obj_names[d] + "_" + obj_names[c] + "_" + img_token(img), d, c, img});
        }
      }
    }
    for (const Arrow& a : arrows) {
      spec.morphisms.push_back(MorphismDecl{a.name, obj_names[a.dom], obj_names[a.cod]});
    }
    auto find_name = [&](int d, int c, const std::vector<int>& img) -> std::string {
      if (d == c && is_identity_img(img)) return "id_" + obj_names[d];
      return "m_" + obj_names[d] + "_" + obj_names[c] + "_" + img_token(img);
    };
    for (const Arrow& g : arrows) {
      for (const Arrow& f : arrows) {
        if (f.cod != g.dom) continue;
        spec.compose[{g.name, f.name}] = find_name(f.dom, g.cod, compose_img(g.img, f.img));
      }
    }
    return std::move(make_category(spec)).value();
  };

  std::vector<std::string> set_names;
  for (int s : set_sizes) set_names.push_back(set_name(s));
  FinCategory finset = build_category("FinSet", set_names, set_sizes);

  std::vector<std::string> pre_names;
  for (const auto& p : preorders) pre_names.push_back(p.name);

  // Preord keeps only the monotone functions.
  struct PArrow {
    std::string name;
    int dom, cod;
    std::vector<int> img;
  };
  std::vector<PArrow> parrows;
  CategorySpec pspec;
  pspec.name = "Preord";
  pspec.objects = pre_names;
  for (size_t o = 0; o < preorders.size(); ++o) {
    std::vector<int> id_img(preorders[o].size);
    for (int i = 0; i < preorders[o].size; ++i) id_img[i] = i + 1;
    parrows.push_back({"id_" + pre_names[o], static_cast<int>(o), static_cast<int>(o), id_img});
    pspec.identities[pre_names[o]] = "id_" + pre_names[o];
  }
  for (size_t d = 0; d < preorders.size(); ++d) {
    for (size_t c = 0; c < preorders.size(); ++c) {
      for (const auto& img : all_functions(preorders[d].size, preorders[c].size)) {
        if (d == c && is_identity_img(img)) continue;
        bool monotone = true;
        for (int x = 1; x <= preorders[d].size && monotone; ++x) {
          for (int y = 1; y <= preorders[d].size && monotone; ++y) {
            if (preorders[d].leq(x, y) && !preorders[c].leq(img[x - 1], img[y - 1])) monotone = false;
          }
        }
        if (!monotone) continue;
        parrows.push_back({"m_" + pre_names[d] + "_" + pre_names[c] + "_" + img_token(img),
                           static_cast<int>(d), static_cast<int>(c), img});
      }
    }
  }
  for (const PArrow& a : parrows) {
    pspec.morphisms.push_back(MorphismDecl{a.name, pre_names[a.dom], pre_names[a.cod]});
  }
  auto pre_find = [&](int d, int c, const std::vector<int>& img) -> std::string {
    if (d == c && is_identity_img(img)) return "id_" + pre_names[d];
    return "m_" + pre_names[d] + "_" + pre_names[c] + "_" + img_token(img);
  };
  for (const PArrow& g : parrows) {
    for (const PArrow& f : parrows) {
      if (f.cod != g.dom) continue;
      pspec.compose[{g.name, f.name}] = pre_find(f.dom, g.cod, compose_img(g.img, f.img));
    }
  }
  FinCategory preord = std::move(make_category(pspec)).value();

  // The free het: every function from a carrier set into a preorder's
  // carrier, with composition on both sides.
  HetSpec het;
  het.name = "free";
  het.sending = finset.name();
  het.receiving = preord.name();
  auto elem_name = [&](int s, int p, const std::vector<int>& img) {
    return "u_" + set_name(s) + "_" + preorders[p].name + "_" + img_token(img);
  };
  struct Elem {
    int s, p;
    std::vector<int> img;
  };
  std::vector<Elem> elems;
  for (int s : set_sizes) {
    for (size_t p = 0; p < preorders.size(); ++p) {
      for (const auto& img : all_functions(s, preorders[p].size)) {
        het.elements.push_back(
            HetElementDecl{elem_name(s, static_cast<int>(p), img), set_name(s), preorders[p].name});
        elems.push_back({s, static_cast<int>(p), img});
      }
    }
  }
  std::vector<Arrow> sarrows;
  for (int o = 0; o <= n; ++o) {
    std::vector<int> id_img(o);
    for (int i = 0; i < o; ++i) id_img[i] = i + 1;
    sarrows.push_back({"id_" + set_name(o), o, o, id_img});
  }
  for (int d = 0; d <= n; ++d) {
    for (int c = 0; c <= n; ++c) {
      for (const auto& img : all_functions(d, c)) {
        if (d == c && is_identity_img(img)) continue;
        sarrows.push_back({"m_" + set_name(d) + "_" + set_name(c) + "_" + img_token(img), d, c, img});
      }
    }
  }
  for (const Elem& e : elems) {
    for (const PArrow& k : parrows) {
      if (k.dom != e.p) continue;
      het.act_left[{k.name, elem_name(e.s, e.p, e.img)}] =
          elem_name(e.s, k.cod, compose_img(k.img, e.img));
    }
    for (const Arrow& h : sarrows) {
      if (h.cod != e.s) continue;
      het.act_right[{elem_name(e.s, e.p, e.img), h.name}] =
          elem_name(h.dom, e.p, compose_img(e.img, h.img));
    }
  }

  Fixture fx;
  fx.name = "free-discrete-preorder";
  fx.params = params;
  fx.hets.push_back(std::move(make_het(finset, preord, het)).value());
  fx.categories.push_back(std::move(finset));
  fx.categories.push_back(std::move(preord));

  auto identity_img_token = [](int size) {
    std::vector<int> img(size);
    for (int i = 0; i < size; ++i) img[i] = i + 1;
    return img_token(img);
  };
  for (int s : set_sizes) {
    std::string disc = s == 0 ? "P0" : (s == 1 ? "D1" : "D" + std::to_string(s));
    fx.expected["left.obj." + set_name(s)] = disc;
    fx.expected["left.universal." + set_name(s)] =
        "u_" + set_name(s) + "_" + disc + "_" + identity_img_token(s);
  }
  for (const auto& p : preorders) {
    fx.expected["right.obj." + p.name] = set_name(p.size);
  }
  fx.expected["adjunction"] = "verified";
  return fx;
}

Fixture coordinate_coding(const std::vector<int>& params) {
  require_params("coordinate-coding", params, 2, {{1, 4}, {1, 4}}, "w h (grid extents)");
  const int w = params[0];
  const int h = params[1];

  auto grid_names = [&](const std::string& prefix) {
    std::vector<std::string> names;
    for (int x = 0; x < w; ++x) {
      for (int y = 0; y < h; ++y) {
        names.push_back(prefix + "_" + std::to_string(x) + "_" + std::to_string(y));
      }
    }
    return names;
  };
  auto discrete = [](const std::string& name, const std::vector<std::string>& objects) {
    CategorySpec spec;
    spec.name = name;
    spec.objects = objects;
    for (const auto& o : objects) {
      spec.morphisms.push_back(MorphismDecl{"id_" + o, o, o});
      spec.identities[o] = "id_" + o;
      spec.compose[{"id_" + o, "id_" + o}] = "id_" + o;
    }
    return std::move(make_category(spec)).value();
  };

  FinCategory points = discrete("Pts", grid_names("p"));
  FinCategory codes = discrete("Codes", grid_names("c"));

  FunctorSpec code;
  code.name = "code";
  code.source = points.name();
  code.target = codes.name();
  std::vector<std::pair<std::string, std::string>> coding_rel;
  std::vector<std::pair<std::string, std::string>> plotting_rel;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      std::string suffix = "_" + std::to_string(x) + "_" + std::to_string(y);
      code.obj_map["p" + suffix] = "c" + suffix;
      code.mor_map["id_p" + suffix] = "id_c" + suffix;
      coding_rel.push_back({"p" + suffix, "c" + suffix});
      plotting_rel.push_back({"c" + suffix, "p" + suffix});
    }
  }

  Fixture fx;
  fx.name = "coordinate-coding";
  fx.params = params;
  fx.hets.push_back(std::move(make_relation_het("coding", points, codes, coding_rel)).value());
  fx.hets.push_back(std::move(make_relation_het("plotting", codes, points, plotting_rel)).value());
  fx.functors.push_back(std::move(make_functor(points, codes, code)).value());
  fx.categories.push_back(std::move(points));
  fx.categories.push_back(std::move(codes));

  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      std::string suffix = "_" + std::to_string(x) + "_" + std::to_string(y);
      fx.expected["F.p" + suffix] = "c" + suffix;
    }
  }
  fx.expected["brain"] = "verified";
  return fx;
}

Fixture hom_identity(const std::vector<int>& params) {
  require_params("hom-identity", params, 1, {{1, 8}}, "n (chain 0..n)");
  const int n = params[0];

  Fixture fx;
  fx.name = "hom-identity";
  fx.params = params;
  FinCategory chain = poset_chain("C", n);
  fx.hets.push_back(hom_bifunctor(chain, "hom"));
  fx.categories.push_back(std::move(chain));

  for (int i = 0; i <= n; ++i) {
    fx.expected["left.obj." + std::to_string(i)] = std::to_string(i);
    fx.expected["left.universal." + std::to_string(i)] = "id_" + std::to_string(i);
    fx.expected["right.obj." + std::to_string(i)] = std::to_string(i);
    fx.expected["right.universal." + std::to_string(i)] = "id_" + std::to_string(i);
  }
  fx.expected["adjunction"] = "verified";
  return fx;
}

}  // namespace

Fixture build_fixture(const std::string& name, const std::vector<int>& params) {
  auto with_defaults = [&](std::vector<int> defaults) {
    return params.empty() ? defaults : params;
  };
  if (name == "chain-galois") return chain_galois(with_defaults({4, 2}));
  if (name == "powerset-diagonal") return powerset_diagonal(with_defaults({2}));
  if (name == "free-discrete-preorder") return free_discrete_preorder(with_defaults({2}));
  if (name == "coordinate-coding") return coordinate_coding(with_defaults({2, 2}));
  if (name == "hom-identity") return hom_identity(with_defaults({2}));
  throw DomainError("unknown fixture '" + name + "'");
}

namespace {

void check_value(ValidationReport& report, const Fixture& fx, const std::string& key,
                 const std::string& actual) {
  auto it = fx.expected.find(key);
  if (it == fx.expected.end()) {
    report.add("expected-missing", {key});
  } else if (it->second != actual) {
    report.add("expected-mismatch", {key, "expected", it->second, "got", actual});
  }
}

// Recomputes representations per object, and when the fixture promises a
// full adjunction, builds and assembles it and checks every square.
void check_two_sided(ValidationReport& report, const Fixture& fx, const HetBifunctor& het) {
  for (const std::string& X : het.sending().objects()) {
    auto arrow = find_left_representation(het, X);
    check_value(report, fx, "left.obj." + X, arrow ? arrow->rep : "none");
    if (arrow && fx.expected.count("left.universal." + X)) {
      check_value(report, fx, "left.universal." + X, arrow->universal);
    }
  }
  for (const std::string& A : het.receiving().objects()) {
    auto arrow = find_right_representation(het, A);
    check_value(report, fx, "right.obj." + A, arrow ? arrow->rep : "none");
    if (arrow && fx.expected.count("right.universal." + A)) {
      check_value(report, fx, "right.universal." + A, arrow->universal);
    }
  }
  auto promised = fx.expected.find("adjunction");
  if (promised == fx.expected.end() || promised->second != "verified") return;

  Result<Semiadjunction> left = build_left_semiadjunction(het);
  Result<Semiadjunction> right = build_right_semiadjunction(het);
  if (!left.ok() || !right.ok()) {
    report.add("expected-mismatch", {"adjunction", "expected", "verified", "got", "unrepresentable"});
    return;
  }
  Result<Adjunction> adj = assemble_adjunction(left.value(), right.value());
  if (!adj.ok()) {
    report.merge(adj.report(), "adjunction: ");
    return;
  }
  for (int e = 0; e < het.element_count(); ++e) {
    SquareReport square = verify_adjunctive_square(adj.value(), het.element(e).name);
    if (!square.ok()) report.add("square-fails", {het.element(e).name});
  }
}

}  // namespace

ValidationReport run_fixture_checks(const Fixture& fx) {
  ValidationReport report;
  if (fx.name == "chain-galois") {
    check_two_sided(report, fx, fx.het("ceil"));
  } else if (fx.name == "hom-identity") {
    check_two_sided(report, fx, fx.het("hom"));
  } else if (fx.name == "free-discrete-preorder") {
    check_two_sided(report, fx, fx.het("free"));
  } else if (fx.name == "powerset-diagonal") {
    const FinFunctor& diag = fx.functor("diag");
    Result<BrainFunctor> brain = brain_from_adjoints(fx.functor("join"), diag, fx.functor("meet"));
    check_value(report, fx, "brain", brain.ok() ? "verified" : "failed");
    if (!brain.ok()) report.merge(brain.report(), "brain: ");
    for (const std::string& S : diag.source().objects()) {
      check_value(report, fx, "F." + S, diag.obj(S));
    }
    Result<Semiadjunction> meet_semi = build_right_semiadjunction(fx.het("out"));
    if (meet_semi.ok()) {
      for (const std::string& A : fx.het("out").receiving().objects()) {
        check_value(report, fx, "meet." + A, meet_semi.value().functor.obj(A));
      }
    } else {
      report.merge(meet_semi.report(), "meet: ");
    }
    Result<Semiadjunction> join_semi = build_left_semiadjunction(fx.het("in"));
    if (join_semi.ok()) {
      for (const std::string& A : fx.het("in").sending().objects()) {
        check_value(report, fx, "join." + A, join_semi.value().functor.obj(A));
      }
    } else {
      report.merge(join_semi.report(), "join: ");
    }
  } else if (fx.name == "coordinate-coding") {
    const FinFunctor& code = fx.functor("code");
    Result<BrainFunctor> brain = check_brain(code, fx.het("coding"), fx.het("plotting"));
    check_value(report, fx, "brain", brain.ok() ? "verified" : "failed");
    if (!brain.ok()) report.merge(brain.report(), "brain: ");
    for (const std::string& P : code.source().objects()) {
      check_value(report, fx, "F." + P, code.obj(P));
    }
  } else {
    report.add("unknown-fixture", {fx.name});
  }
  return report;
}

std::string selection_report(const Semiadjunction& semi, const std::string& d) {
  if (semi.side != Side::left) {
    throw DomainError("selection reports read a left semiadjunction");
  }
  const HetBifunctor& het = semi.het;
  int e = het.require_element(d);
  const std::string& X = het.sending().object_name(het.element(e).src);
  const std::string& A = het.receiving().object_name(het.element(e).dst);
  const UniversalArrow& arrow = semi.arrows.at(X);
  std::string factor = factor_left(het, arrow, d);
  int factor_ix = het.receiving().require_morphism(factor);

  std::string out;
  out += "selection report for d = " + d + " : " + X + " ~> " + A + "\n";
  out += "  instruction (the direct het): " + d + " : " + X + " ~> " + A + "\n";
  out += "  selection through the receiving universal F(" + X + ") = " + arrow.rep + ":\n";
  out += "    generator of diversity: the universal object " + arrow.rep + "\n";
  out += "    polling interface (universal het): " + arrow.universal + " : " + X + " ~> " +
         arrow.rep + "\n";
  out += "    differential amplification (factor hom): " + factor + " : " + arrow.rep + " -> " +
         A + "\n";
  out += "  factorization: " + d + " = " + factor + " . " + arrow.universal + "\n";
  if (het.receiving().is_identity(factor_ix)) {
    out += "  note: the amplification hom is the identity; d is the universal het itself\n";
  }
  return out;
}

}  // namespace hetcat
