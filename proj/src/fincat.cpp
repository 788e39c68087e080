#include "hetcat/fincat.hpp"

namespace hetcat {

int FinCategory::object_index(std::string_view name) const {
  auto it = obj_ix_.find(std::string(name));
  return it == obj_ix_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(std::string_view name) const {
  auto it = mor_ix_.find(std::string(name));
  return it == mor_ix_.end() ? -1 : it->second;
}

int FinCategory::require_object(std::string_view name) const {
  int ix = object_index(name);
  if (ix < 0) throw DomainError("unknown object '" + std::string(name) + "' in category " + name_);
  return ix;
}

int FinCategory::require_morphism(std::string_view name) const {
  int ix = morphism_index(name);
  if (ix < 0) throw DomainError("unknown morphism '" + std::string(name) + "' in category " + name_);
  return ix;
}

const std::string& FinCategory::identity_name(int obj_ix) const {
  return morphisms_[identity_[obj_ix]].name;
}

bool FinCategory::is_identity(int mor_ix) const {
  const Morphism& m = morphisms_[mor_ix];
  return m.dom == m.cod && identity_[m.dom] == mor_ix;
}

std::string FinCategory::compose(const std::string& g, const std::string& f) const {
  int g_ix = require_morphism(g);
  int f_ix = require_morphism(f);
  const Morphism& gm = morphisms_[g_ix];
  const Morphism& fm = morphisms_[f_ix];
  if (fm.cod != gm.dom) {
    throw DomainError("morphisms not composable: cod(" + f + ")=" + objects_[fm.cod] +
                      " but dom(" + g + ")=" + objects_[gm.dom]);
  }
  int r = compose_ix(g_ix, f_ix);
  if (r < 0) throw IntegrityError("composition table has no entry for (" + g + ", " + f + ")");
  return morphisms_[r].name;
}

const std::vector<int>& FinCategory::hom_ixs(int dom_ix, int cod_ix) const {
  return homs_[dom_ix * objects_.size() + cod_ix];
}

std::vector<std::string> FinCategory::hom_set(const std::string& dom, const std::string& cod) const {
  int d = require_object(dom);
  int c = require_object(cod);
  std::vector<std::string> out;
  for (int m : hom_ixs(d, c)) out.push_back(morphisms_[m].name);
  return out;
}

bool FinCategory::operator==(const FinCategory& other) const {
  return objects_ == other.objects_ && morphisms_ == other.morphisms_ &&
         identity_ == other.identity_ && table_ == other.table_;
}

CategorySpec FinCategory::to_spec() const {
  CategorySpec spec;
  spec.name = name_;
  spec.objects = objects_;
  for (const Morphism& m : morphisms_) {
    spec.morphisms.push_back(MorphismDecl{m.name, objects_[m.dom], objects_[m.cod]});
  }
  for (int o = 0; o < object_count(); ++o) {
    spec.identities[objects_[o]] = morphisms_[identity_[o]].name;
  }
  const int n = morphism_count();
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      int r = table_[g * n + f];
      if (r >= 0) spec.compose[{morphisms_[g].name, morphisms_[f].name}] = morphisms_[r].name;
    }
  }
  return spec;
}

Result<FinCategory> make_category(const CategorySpec& spec) {
  ValidationReport report;

  // Structural pass: names must be declared and unique before the law
  // checks can be stated at all.
  std::unordered_map<std::string, int> obj_ix;
  for (int i = 0; i < static_cast<int>(spec.objects.size()); ++i) {
    if (!obj_ix.emplace(spec.objects[i], i).second) report.add("duplicate-object", {spec.objects[i]});
  }
  std::unordered_map<std::string, int> mor_ix;
  for (int i = 0; i < static_cast<int>(spec.morphisms.size()); ++i) {
    const MorphismDecl& m = spec.morphisms[i];
    if (!mor_ix.emplace(m.name, i).second) report.add("duplicate-morphism", {m.name});
    if (!obj_ix.count(m.dom)) report.add("unknown-object", {m.name, "dom", m.dom});
    if (!obj_ix.count(m.cod)) report.add("unknown-object", {m.name, "cod", m.cod});
  }
  for (const auto& [obj, mor] : spec.identities) {
    if (!obj_ix.count(obj)) report.add("unknown-object", {"identity-of", obj});
    if (!mor_ix.count(mor)) report.add("unknown-morphism", {"identity", mor});
  }
  for (const auto& [pair, res] : spec.compose) {
    if (!mor_ix.count(pair.first)) report.add("unknown-morphism", {"compose", pair.first});
    if (!mor_ix.count(pair.second)) report.add("unknown-morphism", {"compose", pair.second});
    if (!mor_ix.count(res)) report.add("unknown-morphism", {"compose-result", res});
  }
  if (!report.ok()) return report;

  FinCategory cat;
  cat.name_ = spec.name;
  cat.objects_ = spec.objects;
  cat.obj_ix_ = obj_ix;
  cat.mor_ix_ = mor_ix;
  for (const MorphismDecl& m : spec.morphisms) {
    cat.morphisms_.push_back(FinCategory::Morphism{m.name, obj_ix.at(m.dom), obj_ix.at(m.cod)});
  }

  const int nObj = cat.object_count();
  const int nMor = cat.morphism_count();

  cat.identity_.assign(nObj, -1);
  for (const auto& [obj, mor] : spec.identities) {
    int o = obj_ix.at(obj);
    int m = mor_ix.at(mor);
    cat.identity_[o] = m;
    if (cat.morphisms_[m].dom != o || cat.morphisms_[m].cod != o) {
      report.add("identity-boundary", {mor, "for", obj});
    }
  }
  for (int o = 0; o < nObj; ++o) {
    if (cat.identity_[o] < 0) report.add("missing-identity", {cat.objects_[o]});
  }

  cat.table_.assign(static_cast<size_t>(nMor) * nMor, -1);
  for (const auto& [pair, res] : spec.compose) {
    int g = mor_ix.at(pair.first);
    int f = mor_ix.at(pair.second);
    int r = mor_ix.at(res);
    if (cat.morphisms_[f].cod != cat.morphisms_[g].dom) {
      report.add("compose-not-composable", {pair.first, pair.second});
      continue;
    }
    cat.table_[g * nMor + f] = r;
    if (cat.morphisms_[r].dom != cat.morphisms_[f].dom) {
      report.add("compose-dom-mismatch", {pair.first, pair.second, "=", res});
    }
    if (cat.morphisms_[r].cod != cat.morphisms_[g].cod) {
      report.add("compose-cod-mismatch", {pair.first, pair.second, "=", res});
    }
  }

  // Totality on composable pairs.
  for (int g = 0; g < nMor; ++g) {
    for (int f = 0; f < nMor; ++f) {
      if (cat.morphisms_[f].cod == cat.morphisms_[g].dom && cat.table_[g * nMor + f] < 0) {
        report.add("compose-missing", {cat.morphisms_[g].name, cat.morphisms_[f].name});
      }
    }
  }

  // Unit laws, where the identity and the entry both exist.
  for (int f = 0; f < nMor; ++f) {
    int id_dom = cat.identity_[cat.morphisms_[f].dom];
    if (id_dom >= 0) {
      int r = cat.table_[f * nMor + id_dom];
      if (r >= 0 && r != f) report.add("right-unit", {cat.morphisms_[f].name});
    }
    int id_cod = cat.identity_[cat.morphisms_[f].cod];
    if (id_cod >= 0) {
      int r = cat.table_[id_cod * nMor + f];
      if (r >= 0 && r != f) report.add("left-unit", {cat.morphisms_[f].name});
    }
  }

  // Associativity over every composable triple whose inner composites are
  // defined and composable; boundary-broken entries are already reported.
  for (int h = 0; h < nMor; ++h) {
    for (int g = 0; g < nMor; ++g) {
      if (cat.morphisms_[g].cod != cat.morphisms_[h].dom) continue;
      int hg = cat.table_[h * nMor + g];
      for (int f = 0; f < nMor; ++f) {
        if (cat.morphisms_[f].cod != cat.morphisms_[g].dom) continue;
        int gf = cat.table_[g * nMor + f];
        if (gf < 0 || hg < 0) continue;
        int lhs = cat.morphisms_[gf].cod == cat.morphisms_[h].dom ? cat.table_[h * nMor + gf] : -1;
        int rhs = cat.morphisms_[f].cod == cat.morphisms_[hg].dom ? cat.table_[hg * nMor + f] : -1;
        if (lhs != rhs || lhs < 0) {
          report.add("associativity",
                     {cat.morphisms_[h].name, cat.morphisms_[g].name, cat.morphisms_[f].name});
        }
      }
    }
  }

  if (!report.ok()) return report;

  cat.homs_.assign(static_cast<size_t>(nObj) * nObj, {});
  for (int m = 0; m < nMor; ++m) {
    cat.homs_[cat.morphisms_[m].dom * nObj + cat.morphisms_[m].cod].push_back(m);
  }
  return cat;
}

FinCategory opposite(const FinCategory& cat) {
  CategorySpec spec = cat.to_spec();
  CategorySpec op;
  op.name = spec.name + "_op";
  op.objects = spec.objects;
  for (const MorphismDecl& m : spec.morphisms) op.morphisms.push_back({m.name, m.cod, m.dom});
  op.identities = spec.identities;
  for (const auto& [pair, res] : spec.compose) op.compose[{pair.second, pair.first}] = res;
  Result<FinCategory> r = make_category(op);
  if (!r.ok()) throw DomainError("opposite of an invalid category:\n" + r.report().to_string());
  return std::move(r).value();
}

namespace {
std::string pair_name(const std::string& l, const std::string& r) { return "(" + l + "," + r + ")"; }
}  // namespace

FinCategory product(const FinCategory& left, const FinCategory& right) {
  CategorySpec spec;
  spec.name = left.name() + "x" + right.name();
  for (const std::string& l : left.objects()) {
    for (const std::string& r : right.objects()) spec.objects.push_back(pair_name(l, r));
  }
  for (const auto& lm : left.morphisms()) {
    for (const auto& rm : right.morphisms()) {
      spec.morphisms.push_back(MorphismDecl{pair_name(lm.name, rm.name),
                                            pair_name(left.object_name(lm.dom), right.object_name(rm.dom)),
                                            pair_name(left.object_name(lm.cod), right.object_name(rm.cod))});
    }
  }
  for (int lo = 0; lo < left.object_count(); ++lo) {
    for (int ro = 0; ro < right.object_count(); ++ro) {
      spec.identities[pair_name(left.object_name(lo), right.object_name(ro))] =
          pair_name(left.identity_name(lo), right.identity_name(ro));
    }
  }
  for (int lg = 0; lg < left.morphism_count(); ++lg) {
    for (int lf = 0; lf < left.morphism_count(); ++lf) {
      int lr = left.compose_ix(lg, lf);
      if (lr < 0) continue;
      for (int rg = 0; rg < right.morphism_count(); ++rg) {
        for (int rf = 0; rf < right.morphism_count(); ++rf) {
          int rr = right.compose_ix(rg, rf);
          if (rr < 0) continue;
          spec.compose[{pair_name(left.morphism(lg).name, right.morphism(rg).name),
                        pair_name(left.morphism(lf).name, right.morphism(rf).name)}] =
              pair_name(left.morphism(lr).name, right.morphism(rr).name);
        }
      }
    }
  }
  Result<FinCategory> r = make_category(spec);
  if (!r.ok()) throw DomainError("product of invalid categories:\n" + r.report().to_string());
  return std::move(r).value();
}

FinCategory poset_chain(const std::string& name, int top) {
  if (top < 0) throw DomainError("poset-chain needs a non-negative top element");
  CategorySpec spec;
  spec.name = name;
  for (int i = 0; i <= top; ++i) spec.objects.push_back(std::to_string(i));
  for (int i = 0; i <= top; ++i) {
    spec.morphisms.push_back({"id_" + std::to_string(i), std::to_string(i), std::to_string(i)});
    spec.identities[std::to_string(i)] = "id_" + std::to_string(i);
  }
  auto le = [](int i, int j) { return "le_" + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i <= top; ++i) {
    for (int j = i + 1; j <= top; ++j) {
      spec.morphisms.push_back({le(i, j), std::to_string(i), std::to_string(j)});
    }
  }
  auto mor = [&](int i, int j) { return i == j ? "id_" + std::to_string(i) : le(i, j); };
  for (int i = 0; i <= top; ++i) {
    for (int j = i; j <= top; ++j) {
      for (int k = j; k <= top; ++k) {
        spec.compose[{mor(j, k), mor(i, j)}] = mor(i, k);
      }
    }
  }
  return std::move(make_category(spec)).value();
}

FinCategory poset_powerset(const std::string& name, int k) {
  if (k < 0 || k > 3) throw DomainError("poset-powerset supports 0..3 generators");
  auto subset_name = [&](unsigned mask) {
    if (mask == 0) return std::string("0");
    std::string s;
    for (int b = 0; b < k; ++b) {
      if (mask & (1u << b)) s += static_cast<char>('a' + b);
    }
    return s;
  };
  const unsigned n = 1u << k;
  CategorySpec spec;
  spec.name = name;
  for (unsigned m = 0; m < n; ++m) spec.objects.push_back(subset_name(m));
  for (unsigned m = 0; m < n; ++m) {
    spec.morphisms.push_back({"id_" + subset_name(m), subset_name(m), subset_name(m)});
    spec.identities[subset_name(m)] = "id_" + subset_name(m);
  }
  auto mor = [&](unsigned s, unsigned t) {
    return s == t ? "id_" + subset_name(s) : "le_" + subset_name(s) + "_" + subset_name(t);
  };
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned t = 0; t < n; ++t) {
      if (s != t && (s & t) == s) spec.morphisms.push_back({mor(s, t), subset_name(s), subset_name(t)});
    }
  }
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned t = 0; t < n; ++t) {
      if ((s & t) != s) continue;
      for (unsigned u = 0; u < n; ++u) {
        if ((t & u) != t) continue;
        spec.compose[{mor(t, u), mor(s, t)}] = mor(s, u);
      }
    }
  }
  return std::move(make_category(spec)).value();
}

}  // namespace hetcat
