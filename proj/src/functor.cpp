#include "hetcat/functor.hpp"

namespace hetcat {

std::string FinFunctor::obj(const std::string& object) const {
  return target_.object_name(obj_map_[source_.require_object(object)]);
}

std::string FinFunctor::apply(const std::string& morphism) const {
  return target_.morphism(mor_map_[source_.require_morphism(morphism)]).name;
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  return source_ == other.source_ && target_ == other.target_ && obj_map_ == other.obj_map_ &&
         mor_map_ == other.mor_map_;
}

FunctorSpec FinFunctor::to_spec() const {
  FunctorSpec spec;
  spec.name = name_;
  spec.source = source_.name();
  spec.target = target_.name();
  for (int o = 0; o < source_.object_count(); ++o) {
    spec.obj_map[source_.object_name(o)] = target_.object_name(obj_map_[o]);
  }
  for (int m = 0; m < source_.morphism_count(); ++m) {
    spec.mor_map[source_.morphism(m).name] = target_.morphism(mor_map_[m]).name;
  }
  return spec;
}

Result<FinFunctor> make_functor(const FinCategory& source, const FinCategory& target,
                                const FunctorSpec& spec) {
  ValidationReport report;

  FinFunctor fun;
  fun.name_ = spec.name;
  fun.source_ = source;
  fun.target_ = target;
  fun.obj_map_.assign(source.object_count(), -1);
  fun.mor_map_.assign(source.morphism_count(), -1);

  for (const auto& [from, to] : spec.obj_map) {
    int s = source.object_index(from);
    int t = target.object_index(to);
    if (s < 0) report.add("unknown-object", {"obj-map", from});
    if (t < 0) report.add("unknown-object", {"obj-map-target", to});
    if (s >= 0 && t >= 0) fun.obj_map_[s] = t;
  }
  for (const auto& [from, to] : spec.mor_map) {
    int s = source.morphism_index(from);
    int t = target.morphism_index(to);
    if (s < 0) report.add("unknown-morphism", {"mor-map", from});
    if (t < 0) report.add("unknown-morphism", {"mor-map-target", to});
    if (s >= 0 && t >= 0) fun.mor_map_[s] = t;
  }
  for (int o = 0; o < source.object_count(); ++o) {
    if (fun.obj_map_[o] < 0) report.add("obj-map-missing", {source.object_name(o)});
  }
  for (int m = 0; m < source.morphism_count(); ++m) {
    if (fun.mor_map_[m] < 0) report.add("mor-map-missing", {source.morphism(m).name});
  }
  if (!report.ok()) return report;

  // Boundary preservation through the object map.
  for (int m = 0; m < source.morphism_count(); ++m) {
    const auto& sm = source.morphism(m);
    const auto& tm = target.morphism(fun.mor_map_[m]);
    if (tm.dom != fun.obj_map_[sm.dom]) report.add("dom-preservation", {sm.name});
    if (tm.cod != fun.obj_map_[sm.cod]) report.add("cod-preservation", {sm.name});
  }

  for (int o = 0; o < source.object_count(); ++o) {
    if (fun.mor_map_[source.identity_ix(o)] != target.identity_ix(fun.obj_map_[o])) {
      report.add("identity-preservation", {source.object_name(o)});
    }
  }

  for (int g = 0; g < source.morphism_count(); ++g) {
    for (int f = 0; f < source.morphism_count(); ++f) {
      int gf = source.compose_ix(g, f);
      if (gf < 0) continue;
      int tg = fun.mor_map_[g];
      int tf = fun.mor_map_[f];
      int tgf = target.morphism(tf).cod == target.morphism(tg).dom ? target.compose_ix(tg, tf) : -1;
      if (tgf != fun.mor_map_[gf]) {
        report.add("composition-preservation", {source.morphism(g).name, source.morphism(f).name});
      }
    }
  }

  if (!report.ok()) return report;
  return fun;
}

FinFunctor identity_functor(const FinCategory& cat) {
  FunctorSpec spec;
  spec.name = "id_" + cat.name();
  spec.source = cat.name();
  spec.target = cat.name();
  for (const std::string& o : cat.objects()) spec.obj_map[o] = o;
  for (const auto& m : cat.morphisms()) spec.mor_map[m.name] = m.name;
  return std::move(make_functor(cat, cat, spec)).value();
}

HetBifunctor hom_bifunctor(const FinCategory& cat, const std::string& name) {
  HetSpec spec;
  spec.name = name.empty() ? "hom_" + cat.name() : name;
  spec.sending = cat.name();
  spec.receiving = cat.name();
  for (int x = 0; x < cat.object_count(); ++x) {
    for (int a = 0; a < cat.object_count(); ++a) {
      for (int f : cat.hom_ixs(x, a)) {
        spec.elements.push_back(
            HetElementDecl{cat.morphism(f).name, cat.object_name(x), cat.object_name(a)});
      }
    }
  }
  for (int k = 0; k < cat.morphism_count(); ++k) {
    for (int f = 0; f < cat.morphism_count(); ++f) {
      int kf = cat.compose_ix(k, f);
      if (kf < 0) continue;
      // Each composable pair feeds both actions: k.f is the hom k acting
      // on f-as-het from the left, and f acting on k-as-het from the right.
      spec.act_left[{cat.morphism(k).name, cat.morphism(f).name}] = cat.morphism(kf).name;
      spec.act_right[{cat.morphism(k).name, cat.morphism(f).name}] = cat.morphism(kf).name;
    }
  }
  Result<HetBifunctor> r = make_het(cat, cat, spec);
  if (!r.ok()) throw IntegrityError("hom bifunctor failed validation:\n" + r.report().to_string());
  return std::move(r).value();
}

HetBifunctor induced_het_left(const FinFunctor& F, const std::string& name) {
  const FinCategory& X = F.source();
  const FinCategory& A = F.target();

  std::vector<bool> hit(A.object_count(), false);
  bool injective = true;
  for (int x = 0; x < X.object_count(); ++x) {
    if (hit[F.obj_ix(x)]) injective = false;
    hit[F.obj_ix(x)] = true;
  }
  auto elem_name = [&](int x, int f) {
    std::string n = A.morphism(f).name;
    return injective ? n : n + "@" + X.object_name(x);
  };

  HetSpec spec;
  spec.name = name.empty() ? "lhet_" + F.name() : name;
  spec.sending = X.name();
  spec.receiving = A.name();
  for (int x = 0; x < X.object_count(); ++x) {
    for (int a = 0; a < A.object_count(); ++a) {
      for (int f : A.hom_ixs(F.obj_ix(x), a)) {
        spec.elements.push_back(HetElementDecl{elem_name(x, f), X.object_name(x), A.object_name(a)});
      }
    }
  }
  for (int x = 0; x < X.object_count(); ++x) {
    for (int a = 0; a < A.object_count(); ++a) {
      for (int f : A.hom_ixs(F.obj_ix(x), a)) {
        for (int k = 0; k < A.morphism_count(); ++k) {
          if (A.morphism(k).dom != a) continue;
          spec.act_left[{A.morphism(k).name, elem_name(x, f)}] = elem_name(x, A.compose_ix(k, f));
        }
        for (int h = 0; h < X.morphism_count(); ++h) {
          if (X.morphism(h).cod != x) continue;
          spec.act_right[{elem_name(x, f), X.morphism(h).name}] =
              elem_name(X.morphism(h).dom, A.compose_ix(f, F.mor_ix(h)));
        }
      }
    }
  }
  Result<HetBifunctor> r = make_het(X, A, spec);
  if (!r.ok()) throw IntegrityError("induced left het failed validation:\n" + r.report().to_string());
  return std::move(r).value();
}

HetBifunctor induced_het_right(const FinFunctor& G, const std::string& name) {
  const FinCategory& A = G.source();  // receiving category of the hets
  const FinCategory& X = G.target();  // sending category of the hets

  std::vector<bool> hit(X.object_count(), false);
  bool injective = true;
  for (int a = 0; a < A.object_count(); ++a) {
    if (hit[G.obj_ix(a)]) injective = false;
    hit[G.obj_ix(a)] = true;
  }
  auto elem_name = [&](int a, int g) {
    std::string n = X.morphism(g).name;
    return injective ? n : n + "@" + A.object_name(a);
  };

  HetSpec spec;
  spec.name = name.empty() ? "rhet_" + G.name() : name;
  spec.sending = X.name();
  spec.receiving = A.name();
  for (int x = 0; x < X.object_count(); ++x) {
    for (int a = 0; a < A.object_count(); ++a) {
      for (int g : X.hom_ixs(x, G.obj_ix(a))) {
        spec.elements.push_back(HetElementDecl{elem_name(a, g), X.object_name(x), A.object_name(a)});
      }
    }
  }
  for (int x = 0; x < X.object_count(); ++x) {
    for (int a = 0; a < A.object_count(); ++a) {
      for (int g : X.hom_ixs(x, G.obj_ix(a))) {
        for (int k = 0; k < A.morphism_count(); ++k) {
          if (A.morphism(k).dom != a) continue;
          spec.act_left[{A.morphism(k).name, elem_name(a, g)}] =
              elem_name(A.morphism(k).cod, X.compose_ix(G.mor_ix(k), g));
        }
        for (int h = 0; h < X.morphism_count(); ++h) {
          if (X.morphism(h).cod != x) continue;
          spec.act_right[{elem_name(a, g), X.morphism(h).name}] = elem_name(a, X.compose_ix(g, h));
        }
      }
    }
  }
  Result<HetBifunctor> r = make_het(X, A, spec);
  if (!r.ok()) throw IntegrityError("induced right het failed validation:\n" + r.report().to_string());
  return std::move(r).value();
}

}  // namespace hetcat
