#include "hetcat/represent.hpp"

namespace hetcat {

const std::string* Semiadjunction::elem_for(const std::string& X, const std::string& A,
                                            const std::string& hom) const {
  auto it = bijections.find({X, A});
  if (it == bijections.end()) return nullptr;
  for (const auto& [f, d] : it->second) {
    if (f == hom) return &d;
  }
  return nullptr;
}

const std::string* Semiadjunction::hom_for(const std::string& X, const std::string& A,
                                           const std::string& elem) const {
  auto it = bijections.find({X, A});
  if (it == bijections.end()) return nullptr;
  for (const auto& [f, d] : it->second) {
    if (d == elem) return &f;
  }
  return nullptr;
}

bool check_left_ump(const HetBifunctor& het, int base_ix, int rep_ix, int universal_elem) {
  const FinCategory& recv = het.receiving();
  for (int a = 0; a < recv.object_count(); ++a) {
    const auto& homs = recv.hom_ixs(rep_ix, a);
    const auto& dets = het.set_ixs(base_ix, a);
    if (homs.size() != dets.size()) return false;
    for (int d : dets) {
      int count = 0;
      for (int f : homs) {
        if (het.act_left_ix(f, universal_elem) == d) ++count;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

bool check_right_ump(const HetBifunctor& het, int base_ix, int rep_ix, int universal_elem) {
  const FinCategory& send = het.sending();
  for (int x = 0; x < send.object_count(); ++x) {
    const auto& homs = send.hom_ixs(x, rep_ix);
    const auto& dets = het.set_ixs(x, base_ix);
    if (homs.size() != dets.size()) return false;
    for (int d : dets) {
      int count = 0;
      for (int g : homs) {
        if (het.act_right_ix(universal_elem, g) == d) ++count;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

std::optional<UniversalArrow> find_left_representation(const HetBifunctor& het, const std::string& X) {
  int x = het.sending().require_object(X);
  for (int r = 0; r < het.receiving().object_count(); ++r) {
    for (int u : het.set_ixs(x, r)) {
      if (check_left_ump(het, x, r, u)) {
        return UniversalArrow{Side::left, X, het.receiving().object_name(r), het.element(u).name};
      }
    }
  }
  return std::nullopt;
}

std::optional<UniversalArrow> find_right_representation(const HetBifunctor& het, const std::string& A) {
  int a = het.receiving().require_object(A);
  for (int r = 0; r < het.sending().object_count(); ++r) {
    for (int u : het.set_ixs(r, a)) {
      if (check_right_ump(het, a, r, u)) {
        return UniversalArrow{Side::right, A, het.sending().object_name(r), het.element(u).name};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Checks the arrow's element against its declared base/rep boundaries;
// a mismatch means the arrow was not produced against this het.
int arrow_element(const HetBifunctor& het, const UniversalArrow& u) {
  int e = het.element_index(u.universal);
  if (e < 0) throw IntegrityError("universal arrow refers to unknown element '" + u.universal + "'");
  const auto& elem = het.element(e);
  int base = u.side == Side::left ? het.sending().object_index(u.base)
                                  : het.receiving().object_index(u.base);
  int rep = u.side == Side::left ? het.receiving().object_index(u.rep)
                                 : het.sending().object_index(u.rep);
  int src_expect = u.side == Side::left ? base : rep;
  int dst_expect = u.side == Side::left ? rep : base;
  if (base < 0 || rep < 0 || elem.src != src_expect || elem.dst != dst_expect) {
    throw IntegrityError("universal arrow for " + u.base + " does not match this het bifunctor");
  }
  return e;
}

}  // namespace

std::string factor_left(const HetBifunctor& het, const UniversalArrow& u, const std::string& d) {
  if (u.side != Side::left) throw DomainError("factor_left needs a left universal arrow");
  int u_elem = arrow_element(het, u);
  int d_ix = het.require_element(d);
  if (het.sending().object_name(het.element(d_ix).src) != u.base) {
    throw DomainError("het " + d + " does not start at " + u.base);
  }
  int rep = het.receiving().require_object(u.rep);
  int found = -1;
  for (int f : het.receiving().hom_ixs(rep, het.element(d_ix).dst)) {
    if (het.act_left_ix(f, u_elem) == d_ix) {
      if (found >= 0) {
        throw IntegrityError("factoring hom through " + u.universal + " for " + d + " is not unique");
      }
      found = f;
    }
  }
  if (found < 0) {
    throw IntegrityError("no hom factors " + d + " through " + u.universal +
                         ": the universal arrow fails its property");
  }
  return het.receiving().morphism(found).name;
}

std::string factor_right(const HetBifunctor& het, const UniversalArrow& u, const std::string& d) {
  if (u.side != Side::right) throw DomainError("factor_right needs a right universal arrow");
  int u_elem = arrow_element(het, u);
  int d_ix = het.require_element(d);
  if (het.receiving().object_name(het.element(d_ix).dst) != u.base) {
    throw DomainError("het " + d + " does not end at " + u.base);
  }
  int rep = het.sending().require_object(u.rep);
  int found = -1;
  for (int g : het.sending().hom_ixs(het.element(d_ix).src, rep)) {
    if (het.act_right_ix(u_elem, g) == d_ix) {
      if (found >= 0) {
        throw IntegrityError("factoring hom through " + u.universal + " for " + d + " is not unique");
      }
      found = g;
    }
  }
  if (found < 0) {
    throw IntegrityError("no hom factors " + d + " through " + u.universal +
                         ": the universal arrow fails its property");
  }
  return het.sending().morphism(found).name;
}

Result<Semiadjunction> build_left_semiadjunction(const HetBifunctor& het) {
  const FinCategory& send = het.sending();
  const FinCategory& recv = het.receiving();

  ValidationReport report;
  std::vector<std::pair<int, int>> reps(send.object_count(), {-1, -1});  // (rep obj, universal elem)
  for (int x = 0; x < send.object_count(); ++x) {
    for (int r = 0; r < recv.object_count() && reps[x].first < 0; ++r) {
      for (int u : het.set_ixs(x, r)) {
        if (check_left_ump(het, x, r, u)) {
          reps[x] = {r, u};
          break;
        }
      }
    }
    if (reps[x].first < 0) {
      bool all_empty = true;
      for (int a = 0; a < recv.object_count(); ++a) {
        if (!het.set_ixs(x, a).empty()) all_empty = false;
      }
      report.add("not-left-representable",
                 all_empty ? std::vector<std::string>{send.object_name(x), "Het(" + send.object_name(x) + ",-) is empty"}
                           : std::vector<std::string>{send.object_name(x)});
    }
  }
  if (!report.ok()) return report;

  Semiadjunction semi{Side::left, het, identity_functor(send), {}, {}};
  for (int x = 0; x < send.object_count(); ++x) {
    semi.arrows[send.object_name(x)] =
        UniversalArrow{Side::left, send.object_name(x), recv.object_name(reps[x].first),
                       het.element(reps[x].second).name};
  }

  // Induce F on morphisms: F(h) is the unique factorization of u_{cod h}.h
  // through u_{dom h}.
  FunctorSpec fspec;
  fspec.name = het.name() + "_left";
  fspec.source = send.name();
  fspec.target = recv.name();
  for (int x = 0; x < send.object_count(); ++x) {
    fspec.obj_map[send.object_name(x)] = recv.object_name(reps[x].first);
  }
  for (int h = 0; h < send.morphism_count(); ++h) {
    const auto& hm = send.morphism(h);
    int moved = het.act_right_ix(reps[hm.cod].second, h);
    fspec.mor_map[hm.name] =
        factor_left(het, semi.arrows.at(send.object_name(hm.dom)), het.element(moved).name);
  }
  Result<FinFunctor> fun = make_functor(send, recv, fspec);
  if (!fun.ok()) {
    throw IntegrityError("induced left functor fails functoriality:\n" + fun.report().to_string());
  }
  semi.functor = std::move(fun).value();

  for (int x = 0; x < send.object_count(); ++x) {
    for (int a = 0; a < recv.object_count(); ++a) {
      auto& table = semi.bijections[{send.object_name(x), recv.object_name(a)}];
      for (int f : recv.hom_ixs(reps[x].first, a)) {
        table.push_back({recv.morphism(f).name,
                         het.element(het.act_left_ix(f, reps[x].second)).name});
      }
    }
  }

  ValidationReport check = verify_semiadjunction(semi);
  if (!check.ok()) {
    throw IntegrityError("left semiadjunction fails re-verification:\n" + check.to_string());
  }
  return semi;
}

Result<Semiadjunction> build_right_semiadjunction(const HetBifunctor& het) {
  const FinCategory& send = het.sending();
  const FinCategory& recv = het.receiving();

  ValidationReport report;
  std::vector<std::pair<int, int>> reps(recv.object_count(), {-1, -1});
  for (int a = 0; a < recv.object_count(); ++a) {
    for (int r = 0; r < send.object_count() && reps[a].first < 0; ++r) {
      for (int u : het.set_ixs(r, a)) {
        if (check_right_ump(het, a, r, u)) {
          reps[a] = {r, u};
          break;
        }
      }
    }
    if (reps[a].first < 0) {
      bool all_empty = true;
      for (int x = 0; x < send.object_count(); ++x) {
        if (!het.set_ixs(x, a).empty()) all_empty = false;
      }
      report.add("not-right-representable",
                 all_empty ? std::vector<std::string>{recv.object_name(a), "Het(-," + recv.object_name(a) + ") is empty"}
                           : std::vector<std::string>{recv.object_name(a)});
    }
  }
  if (!report.ok()) return report;

  Semiadjunction semi{Side::right, het, identity_functor(recv), {}, {}};
  for (int a = 0; a < recv.object_count(); ++a) {
    semi.arrows[recv.object_name(a)] =
        UniversalArrow{Side::right, recv.object_name(a), send.object_name(reps[a].first),
                       het.element(reps[a].second).name};
  }

  // Induce G on morphisms: G(k) is the unique factorization of k.e_{dom k}
  // through e_{cod k}.
  FunctorSpec gspec;
  gspec.name = het.name() + "_right";
  gspec.source = recv.name();
  gspec.target = send.name();
  for (int a = 0; a < recv.object_count(); ++a) {
    gspec.obj_map[recv.object_name(a)] = send.object_name(reps[a].first);
  }
  for (int k = 0; k < recv.morphism_count(); ++k) {
    const auto& km = recv.morphism(k);
    int moved = het.act_left_ix(k, reps[km.dom].second);
    gspec.mor_map[km.name] =
        factor_right(het, semi.arrows.at(recv.object_name(km.cod)), het.element(moved).name);
  }
  Result<FinFunctor> fun = make_functor(recv, send, gspec);
  if (!fun.ok()) {
    throw IntegrityError("induced right functor fails functoriality:\n" + fun.report().to_string());
  }
  semi.functor = std::move(fun).value();

  for (int x = 0; x < send.object_count(); ++x) {
    for (int a = 0; a < recv.object_count(); ++a) {
      auto& table = semi.bijections[{send.object_name(x), recv.object_name(a)}];
      for (int g : send.hom_ixs(x, reps[a].first)) {
        table.push_back({send.morphism(g).name,
                         het.element(het.act_right_ix(reps[a].second, g)).name});
      }
    }
  }

  ValidationReport check = verify_semiadjunction(semi);
  if (!check.ok()) {
    throw IntegrityError("right semiadjunction fails re-verification:\n" + check.to_string());
  }
  return semi;
}

namespace {

// True when the stored element name denotes an element of Het(x, a); the
// bijection checks report entries that fail this, so the naturality loops
// can skip them instead of acting on broken boundaries.
bool stored_elem_in_set(const HetBifunctor& het, int x, int a, const std::string& name) {
  int ix = het.element_index(name);
  return ix >= 0 && het.element(ix).src == x && het.element(ix).dst == a;
}

ValidationReport verify_left(const Semiadjunction& semi) {
  ValidationReport report;
  const HetBifunctor& het = semi.het;
  const FinCategory& send = het.sending();
  const FinCategory& recv = het.receiving();
  const FinFunctor& F = semi.functor;

  if (!(F.source() == send) || !(F.target() == recv)) {
    report.add("functor-boundaries", {F.name()});
    return report;
  }

  for (int x = 0; x < send.object_count(); ++x) {
    const std::string& X = send.object_name(x);
    auto it = semi.arrows.find(X);
    if (it == semi.arrows.end()) {
      report.add("arrow-missing", {X});
      continue;
    }
    const UniversalArrow& u = it->second;
    int e = het.element_index(u.universal);
    if (u.side != Side::left || e < 0 || het.element(e).src != x ||
        recv.object_name(het.element(e).dst) != u.rep || u.base != X) {
      report.add("arrow-malformed", {X});
      continue;
    }
    if (u.rep != recv.object_name(F.obj_ix(x))) {
      report.add("arrow-functor-mismatch", {X, u.rep, recv.object_name(F.obj_ix(x))});
      continue;
    }
    if (!check_left_ump(het, x, het.element(e).dst, e)) {
      report.add("ump-fails", {X, u.universal});
    }
  }
  if (!report.ok()) return report;

  // Stored bijection tables must be exactly f |-> f.h_X and bijective.
  for (int x = 0; x < send.object_count(); ++x) {
    const std::string& X = send.object_name(x);
    int u = het.element_index(semi.arrows.at(X).universal);
    for (int a = 0; a < recv.object_count(); ++a) {
      const std::string& A = recv.object_name(a);
      auto it = semi.bijections.find({X, A});
      if (it == semi.bijections.end()) {
        report.add("bijection-missing", {X, A});
        continue;
      }
      std::vector<std::pair<std::string, std::string>> expect;
      for (int f : recv.hom_ixs(F.obj_ix(x), a)) {
        expect.push_back({recv.morphism(f).name, het.element(het.act_left_ix(f, u)).name});
      }
      if (it->second != expect) report.add("bijection-table", {X, A});
      std::vector<int> seen(het.element_count(), 0);
      bool in_set = true;
      for (const auto& [f, d] : it->second) {
        int dix = het.element_index(d);
        if (dix < 0 || het.element(dix).src != x || het.element(dix).dst != a) {
          in_set = false;
        } else {
          ++seen[dix];
        }
      }
      for (int dix : het.set_ixs(x, a)) {
        if (seen[dix] != 1) in_set = false;
      }
      if (!in_set) report.add("bijection-not-bijective", {X, A});
    }
  }

  // Naturality of the stored family in the receiving variable:
  // psi(k.f) = k.psi(f).
  for (int x = 0; x < send.object_count(); ++x) {
    const std::string& X = send.object_name(x);
    for (int a = 0; a < recv.object_count(); ++a) {
      for (int f : recv.hom_ixs(F.obj_ix(x), a)) {
        const std::string* d = semi.elem_for(X, recv.object_name(a), recv.morphism(f).name);
        if (!d || !stored_elem_in_set(het, x, a, *d)) continue;  // reported above
        for (int k = 0; k < recv.morphism_count(); ++k) {
          if (recv.morphism(k).dom != a) continue;
          int kf = recv.compose_ix(k, f);
          const std::string* lhs = semi.elem_for(X, recv.object_name(recv.morphism(k).cod),
                                                 recv.morphism(kf).name);
          std::string rhs = het.act_left(recv.morphism(k).name, *d);
          if (!lhs || *lhs != rhs) {
            report.add("naturality-receiving",
                       {X, recv.morphism(k).name, recv.morphism(f).name});
          }
        }
      }
    }
  }

  // Naturality in the sending variable: psi(f.F(h)) = psi(f).h.
  for (int h = 0; h < send.morphism_count(); ++h) {
    const auto& hm = send.morphism(h);
    const std::string& Xp = send.object_name(hm.dom);
    const std::string& X = send.object_name(hm.cod);
    for (int a = 0; a < recv.object_count(); ++a) {
      for (int f : recv.hom_ixs(F.obj_ix(hm.cod), a)) {
        const std::string* d = semi.elem_for(X, recv.object_name(a), recv.morphism(f).name);
        if (!d || !stored_elem_in_set(het, hm.cod, a, *d)) continue;
        int fFh = recv.compose_ix(f, F.mor_ix(h));
        const std::string* lhs = semi.elem_for(Xp, recv.object_name(a), recv.morphism(fFh).name);
        std::string rhs = het.act_right(*d, hm.name);
        if (!lhs || *lhs != rhs) {
          report.add("naturality-sending", {hm.name, recv.morphism(f).name});
        }
      }
    }
  }
  return report;
}

ValidationReport verify_right(const Semiadjunction& semi) {
  ValidationReport report;
  const HetBifunctor& het = semi.het;
  const FinCategory& send = het.sending();
  const FinCategory& recv = het.receiving();
  const FinFunctor& G = semi.functor;

  if (!(G.source() == recv) || !(G.target() == send)) {
    report.add("functor-boundaries", {G.name()});
    return report;
  }

  for (int a = 0; a < recv.object_count(); ++a) {
    const std::string& A = recv.object_name(a);
    auto it = semi.arrows.find(A);
    if (it == semi.arrows.end()) {
      report.add("arrow-missing", {A});
      continue;
    }
    const UniversalArrow& u = it->second;
    int e = het.element_index(u.universal);
    if (u.side != Side::right || e < 0 || het.element(e).dst != a ||
        send.object_name(het.element(e).src) != u.rep || u.base != A) {
      report.add("arrow-malformed", {A});
      continue;
    }
    if (u.rep != send.object_name(G.obj_ix(a))) {
      report.add("arrow-functor-mismatch", {A, u.rep, send.object_name(G.obj_ix(a))});
      continue;
    }
    if (!check_right_ump(het, a, het.element(e).src, e)) {
      report.add("ump-fails", {A, u.universal});
    }
  }
  if (!report.ok()) return report;

  for (int x = 0; x < send.object_count(); ++x) {
    const std::string& X = send.object_name(x);
    for (int a = 0; a < recv.object_count(); ++a) {
      const std::string& A = recv.object_name(a);
      int u = het.element_index(semi.arrows.at(A).universal);
      auto it = semi.bijections.find({X, A});
      if (it == semi.bijections.end()) {
        report.add("bijection-missing", {X, A});
        continue;
      }
      std::vector<std::pair<std::string, std::string>> expect;
      for (int g : send.hom_ixs(x, G.obj_ix(a))) {
        expect.push_back({send.morphism(g).name, het.element(het.act_right_ix(u, g)).name});
      }
      if (it->second != expect) report.add("bijection-table", {X, A});
      std::vector<int> seen(het.element_count(), 0);
      bool in_set = true;
      for (const auto& [g, d] : it->second) {
        int dix = het.element_index(d);
        if (dix < 0 || het.element(dix).src != x || het.element(dix).dst != a) {
          in_set = false;
        } else {
          ++seen[dix];
        }
      }
      for (int dix : het.set_ixs(x, a)) {
        if (seen[dix] != 1) in_set = false;
      }
      if (!in_set) report.add("bijection-not-bijective", {X, A});
    }
  }

  // Naturality of the stored family in the sending variable:
  // phi(g.h) = phi(g).h.
  for (int a = 0; a < recv.object_count(); ++a) {
    const std::string& A = recv.object_name(a);
    for (int h = 0; h < send.morphism_count(); ++h) {
      const auto& hm = send.morphism(h);
      for (int g : send.hom_ixs(hm.cod, G.obj_ix(a))) {
        const std::string* d = semi.elem_for(send.object_name(hm.cod), A, send.morphism(g).name);
        if (!d || !stored_elem_in_set(het, hm.cod, a, *d)) continue;  // reported above
        int gh = send.compose_ix(g, h);
        const std::string* lhs = semi.elem_for(send.object_name(hm.dom), A, send.morphism(gh).name);
        std::string rhs = het.act_right(*d, hm.name);
        if (!lhs || *lhs != rhs) {
          report.add("naturality-sending", {send.morphism(g).name, hm.name});
        }
      }
    }
  }

  // Naturality in the receiving variable: phi(G(k).g) = k.phi(g).
  for (int k = 0; k < recv.morphism_count(); ++k) {
    const auto& km = recv.morphism(k);
    const std::string& A = recv.object_name(km.dom);
    const std::string& Ap = recv.object_name(km.cod);
    for (int x = 0; x < send.object_count(); ++x) {
      const std::string& X = send.object_name(x);
      for (int g : send.hom_ixs(x, G.obj_ix(km.dom))) {
        const std::string* d = semi.elem_for(X, A, send.morphism(g).name);
        if (!d || !stored_elem_in_set(het, x, km.dom, *d)) continue;
        int Gkg = send.compose_ix(G.mor_ix(k), g);
        const std::string* lhs = semi.elem_for(X, Ap, send.morphism(Gkg).name);
        std::string rhs = het.act_left(km.name, *d);
        if (!lhs || *lhs != rhs) {
          report.add("naturality-receiving", {X, km.name, send.morphism(g).name});
        }
      }
    }
  }
  return report;
}

}  // namespace

ValidationReport verify_semiadjunction(const Semiadjunction& semi) {
  return semi.side == Side::left ? verify_left(semi) : verify_right(semi);
}

}  // namespace hetcat
