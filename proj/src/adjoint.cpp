#include "hetcat/adjoint.hpp"

namespace hetcat {

std::string SquareReport::text() const {
  std::string out;
  out += upper_ok ? "upper triangle commutes at " + element + ": d = " + upper_hom + " . h_X\n"
                  : "upper triangle fails at " + element + "\n";
  out += lower_ok ? "lower triangle commutes at " + element + ": d = e_A . " + lower_hom + "\n"
                  : "lower triangle fails at " + element + "\n";
  return out;
}

std::string WingReport::text() const {
  std::string out;
  out += upper_ok ? "upper wing commutes at " + d_out + ": d = " + upper_hom + " . h_X\n"
                  : "upper wing fails at " + d_out + "\n";
  out += lower_ok ? "lower wing commutes at " + d_in + ": d = e_X . " + lower_hom + "\n"
                  : "lower wing fails at " + d_in + "\n";
  return out;
}

namespace {

// Applies a stored left-family entry check: does act_left(f, h_X) give d?
bool upper_commutes(const Semiadjunction& left, const std::string& X, const std::string& f,
                    const std::string& d) {
  auto it = left.arrows.find(X);
  if (it == left.arrows.end()) return false;
  try {
    return left.het.act_left(f, it->second.universal) == d;
  } catch (const DomainError&) {
    return false;
  } catch (const IntegrityError&) {
    return false;
  }
}

bool lower_commutes(const Semiadjunction& right, const std::string& A, const std::string& g,
                    const std::string& d) {
  auto it = right.arrows.find(A);
  if (it == right.arrows.end()) return false;
  try {
    return right.het.act_right(it->second.universal, g) == d;
  } catch (const DomainError&) {
    return false;
  } catch (const IntegrityError&) {
    return false;
  }
}

}  // namespace

Result<Adjunction> assemble_adjunction(const Semiadjunction& left, const Semiadjunction& right) {
  if (left.side != Side::left || right.side != Side::right) {
    throw DomainError("assemble_adjunction takes a left and a right semiadjunction, in that order");
  }

  ValidationReport report;
  if (!(left.het == right.het)) {
    report.add("het-mismatch", {left.het.name(), right.het.name()});
    return report;
  }
  report.merge(verify_semiadjunction(left), "left: ");
  report.merge(verify_semiadjunction(right), "right: ");
  if (!report.ok()) return report;

  const HetBifunctor& het = left.het;
  const FinCategory& send = het.sending();
  const FinCategory& recv = het.receiving();
  const FinFunctor& F = left.functor;
  const FinFunctor& G = right.functor;

  // Composite bijection chi = phi^-1 . psi : Hom(F(X), A) -> Hom(X, G(A)),
  // materialized through the het sets; photographed here only to check it
  // is bijective and natural in both variables.
  auto chi = [&](int x, int a, int f) -> int {
    const std::string* d =
        left.elem_for(send.object_name(x), recv.object_name(a), recv.morphism(f).name);
    if (!d) return -1;
    const std::string* g = right.hom_for(send.object_name(x), recv.object_name(a), *d);
    return g ? send.morphism_index(*g) : -1;
  };

  for (int x = 0; x < send.object_count(); ++x) {
    for (int a = 0; a < recv.object_count(); ++a) {
      const auto& from = recv.hom_ixs(F.obj_ix(x), a);
      const auto& to = send.hom_ixs(x, G.obj_ix(a));
      std::vector<int> seen(send.morphism_count(), 0);
      bool bijective = from.size() == to.size();
      for (int f : from) {
        int g = chi(x, a, f);
        if (g < 0) {
          bijective = false;
        } else {
          ++seen[g];
        }
      }
      for (int g : to) {
        if (seen[g] != 1) bijective = false;
      }
      if (!bijective) {
        report.add("composite-not-bijective", {send.object_name(x), recv.object_name(a)});
      }
    }
  }
  if (!report.ok()) return report;

  // Naturality of chi in the receiving variable: chi(k.f) = G(k).chi(f).
  for (int x = 0; x < send.object_count(); ++x) {
    for (int a = 0; a < recv.object_count(); ++a) {
      for (int f : recv.hom_ixs(F.obj_ix(x), a)) {
        int g = chi(x, a, f);
        for (int k = 0; k < recv.morphism_count(); ++k) {
          if (recv.morphism(k).dom != a) continue;
          int lhs = chi(x, recv.morphism(k).cod, recv.compose_ix(k, f));
          int rhs = send.compose_ix(G.mor_ix(k), g);
          if (lhs != rhs || lhs < 0) {
            report.add("composite-naturality-receiving",
                       {send.object_name(x), recv.morphism(k).name, recv.morphism(f).name});
          }
        }
      }
    }
  }

  // Naturality of chi in the sending variable: chi(f.F(h)) = chi(f).h.
  for (int h = 0; h < send.morphism_count(); ++h) {
    const auto& hm = send.morphism(h);
    for (int a = 0; a < recv.object_count(); ++a) {
      for (int f : recv.hom_ixs(F.obj_ix(hm.cod), a)) {
        int lhs = chi(hm.dom, a, recv.compose_ix(f, F.mor_ix(h)));
        int rhs = send.compose_ix(chi(hm.cod, a, f), h);
        if (lhs != rhs || lhs < 0) {
          report.add("composite-naturality-sending", {hm.name, recv.morphism(f).name});
        }
      }
    }
  }
  if (!report.ok()) return report;

  // The adjunctive square at every het element: d = f(d).h_X = e_A.g(d).
  for (int e = 0; e < het.element_count(); ++e) {
    const auto& elem = het.element(e);
    const std::string& X = send.object_name(elem.src);
    const std::string& A = recv.object_name(elem.dst);
    const std::string* f = left.hom_for(X, A, elem.name);
    const std::string* g = right.hom_for(X, A, elem.name);
    if (!f || !upper_commutes(left, X, *f, elem.name)) {
      report.add("adjunctive-square-upper", {elem.name});
    }
    if (!g || !lower_commutes(right, A, *g, elem.name)) {
      report.add("adjunctive-square-lower", {elem.name});
    }
  }
  if (!report.ok()) return report;

  return Adjunction{left, right};
}

SquareReport verify_adjunctive_square(const Adjunction& adj, const std::string& d) {
  const HetBifunctor& het = adj.het();
  int e = het.require_element(d);
  const std::string& X = het.sending().object_name(het.element(e).src);
  const std::string& A = het.receiving().object_name(het.element(e).dst);

  SquareReport report;
  report.element = d;
  const std::string* f = adj.left.hom_for(X, A, d);
  if (f) {
    report.upper_hom = *f;
    report.upper_ok = upper_commutes(adj.left, X, *f, d);
  }
  const std::string* g = adj.right.hom_for(X, A, d);
  if (g) {
    report.lower_hom = *g;
    report.lower_ok = lower_commutes(adj.right, A, *g, d);
  }
  return report;
}

Result<BrainFunctor> check_brain(const FinFunctor& F, const HetBifunctor& het_out,
                                 const HetBifunctor& het_in) {
  const FinCategory& X = F.source();
  const FinCategory& A = F.target();
  if (!(het_out.sending() == X) || !(het_out.receiving() == A)) {
    throw DomainError("check_brain: outgoing hets must run from the source of F to its target");
  }
  if (!(het_in.sending() == A) || !(het_in.receiving() == X)) {
    throw DomainError("check_brain: incoming hets must run from the target of F to its source");
  }

  ValidationReport report;
  std::vector<int> out_universal(X.object_count(), -1);
  std::vector<int> in_universal(X.object_count(), -1);
  for (int x = 0; x < X.object_count(); ++x) {
    for (int u : het_out.set_ixs(x, F.obj_ix(x))) {
      if (check_left_ump(het_out, x, F.obj_ix(x), u)) {
        out_universal[x] = u;
        break;
      }
    }
    if (out_universal[x] < 0) {
      report.add("ump-out", {X.object_name(x), "F(" + X.object_name(x) +
                                                   ") does not left-represent the outgoing hets"});
    }
    for (int u : het_in.set_ixs(F.obj_ix(x), x)) {
      if (check_right_ump(het_in, x, F.obj_ix(x), u)) {
        in_universal[x] = u;
        break;
      }
    }
    if (in_universal[x] < 0) {
      report.add("ump-in", {X.object_name(x), "F(" + X.object_name(x) +
                                                  ") does not right-represent the incoming hets"});
    }
  }
  if (!report.ok()) return report;

  BrainFunctor brain{F, Semiadjunction{Side::left, het_out, F, {}, {}},
                     Semiadjunction{Side::right, het_in, F, {}, {}}};

  for (int x = 0; x < X.object_count(); ++x) {
    brain.out_semi.arrows[X.object_name(x)] =
        UniversalArrow{Side::left, X.object_name(x), A.object_name(F.obj_ix(x)),
                       het_out.element(out_universal[x]).name};
    brain.in_semi.arrows[X.object_name(x)] =
        UniversalArrow{Side::right, X.object_name(x), A.object_name(F.obj_ix(x)),
                       het_in.element(in_universal[x]).name};
  }
  for (int x = 0; x < X.object_count(); ++x) {
    for (int a = 0; a < A.object_count(); ++a) {
      auto& out_table = brain.out_semi.bijections[{X.object_name(x), A.object_name(a)}];
      for (int f : A.hom_ixs(F.obj_ix(x), a)) {
        out_table.push_back({A.morphism(f).name,
                             het_out.element(het_out.act_left_ix(f, out_universal[x])).name});
      }
      auto& in_table = brain.in_semi.bijections[{A.object_name(a), X.object_name(x)}];
      for (int g : A.hom_ixs(a, F.obj_ix(x))) {
        in_table.push_back({A.morphism(g).name,
                            het_in.element(het_in.act_right_ix(in_universal[x], g)).name});
      }
    }
  }

  // The naturality checks here pin the claimed F's morphism map to the
  // chosen universal families; a wrong map cannot slip past them.
  report.merge(verify_semiadjunction(brain.out_semi), "out: ");
  report.merge(verify_semiadjunction(brain.in_semi), "in: ");
  if (!report.ok()) return report;

  // Both butterfly wings at every element.
  for (int e = 0; e < het_out.element_count(); ++e) {
    const auto& elem = het_out.element(e);
    const std::string* f = brain.out_semi.hom_for(X.object_name(elem.src),
                                                  A.object_name(elem.dst), elem.name);
    if (!f || !upper_commutes(brain.out_semi, X.object_name(elem.src), *f, elem.name)) {
      report.add("butterfly-upper", {elem.name});
    }
  }
  for (int e = 0; e < het_in.element_count(); ++e) {
    const auto& elem = het_in.element(e);
    const std::string* g = brain.in_semi.hom_for(A.object_name(elem.src),
                                                 X.object_name(elem.dst), elem.name);
    if (!g || !lower_commutes(brain.in_semi, X.object_name(elem.dst), *g, elem.name)) {
      report.add("butterfly-lower", {elem.name});
    }
  }
  if (!report.ok()) return report;

  return brain;
}

namespace {

// First difference between a searched representing functor and a claimed
// one, rendered for a failure report.
std::vector<std::string> functor_mismatch(const FinFunctor& found, const FinFunctor& claimed) {
  for (int o = 0; o < found.source().object_count(); ++o) {
    if (found.obj_ix(o) != claimed.obj_ix(o)) {
      return {"object", found.source().object_name(o), "expected",
              claimed.target().object_name(claimed.obj_ix(o)), "found",
              found.target().object_name(found.obj_ix(o))};
    }
  }
  for (int m = 0; m < found.source().morphism_count(); ++m) {
    if (found.mor_ix(m) != claimed.mor_ix(m)) {
      return {"morphism", found.source().morphism(m).name, "expected",
              claimed.target().morphism(claimed.mor_ix(m)).name, "found",
              found.target().morphism(found.mor_ix(m)).name};
    }
  }
  return {};
}

}  // namespace

Result<BrainFunctor> brain_from_adjoints(const FinFunctor& H, const FinFunctor& F,
                                         const FinFunctor& G) {
  if (!(H.source() == F.target()) || !(H.target() == F.source())) {
    throw DomainError("brain_from_adjoints: H must run opposite to F");
  }
  if (!(G.source() == F.target()) || !(G.target() == F.source())) {
    throw DomainError("brain_from_adjoints: G must run opposite to F");
  }

  HetBifunctor het_out = induced_het_left(F, F.name() + "_out");
  HetBifunctor het_in = induced_het_right(F, F.name() + "_in");

  ValidationReport report;

  // Claimed F -| G, over the outgoing hets Hom(F(X), A).
  Result<Semiadjunction> ls_out = build_left_semiadjunction(het_out);
  Result<Semiadjunction> rs_out = build_right_semiadjunction(het_out);
  if (!ls_out.ok()) {
    report.merge(ls_out.report(), "right-adjunction-fails: ");
  } else if (!(ls_out.value().functor == F)) {
    report.add("right-adjunction-fails",
               functor_mismatch(ls_out.value().functor, F));
  }
  if (!rs_out.ok()) {
    report.merge(rs_out.report(), "right-adjunction-fails: ");
  } else if (!(rs_out.value().functor == G)) {
    auto detail = functor_mismatch(rs_out.value().functor, G);
    detail.insert(detail.begin(), "G");
    report.add("right-adjunction-fails", detail);
  }

  // Claimed H -| F, over the incoming hets Hom(A, F(X)).
  Result<Semiadjunction> ls_in = build_left_semiadjunction(het_in);
  Result<Semiadjunction> rs_in = build_right_semiadjunction(het_in);
  if (!ls_in.ok()) {
    report.merge(ls_in.report(), "left-adjunction-fails: ");
  } else if (!(ls_in.value().functor == H)) {
    auto detail = functor_mismatch(ls_in.value().functor, H);
    detail.insert(detail.begin(), "H");
    report.add("left-adjunction-fails", detail);
  }
  if (!rs_in.ok()) {
    report.merge(rs_in.report(), "left-adjunction-fails: ");
  } else if (!(rs_in.value().functor == F)) {
    report.add("left-adjunction-fails", functor_mismatch(rs_in.value().functor, F));
  }
  if (!report.ok()) return report;

  // Both adjunctions hold; assemble them fully so the squares are checked,
  // then hand both het bifunctors to the brain verifier.
  Result<Adjunction> out_adj = assemble_adjunction(ls_out.value(), rs_out.value());
  if (!out_adj.ok()) return out_adj.report();
  Result<Adjunction> in_adj = assemble_adjunction(ls_in.value(), rs_in.value());
  if (!in_adj.ok()) return in_adj.report();

  return check_brain(F, het_out, het_in);
}

WingReport verify_butterfly(const BrainFunctor& brain, const std::string& d_out,
                            const std::string& d_in) {
  const HetBifunctor& out = brain.out_semi.het;
  const HetBifunctor& in = brain.in_semi.het;
  int e_out = out.require_element(d_out);
  int e_in = in.require_element(d_in);

  const std::string& X = out.sending().object_name(out.element(e_out).src);
  const std::string& A = out.receiving().object_name(out.element(e_out).dst);
  if (in.sending().object_name(in.element(e_in).src) != A ||
      in.receiving().object_name(in.element(e_in).dst) != X) {
    throw DomainError("butterfly wings must sit over the same object pair: " + d_out + " runs " +
                      X + " ~> " + A + " but " + d_in + " does not run " + A + " ~> " + X);
  }

  WingReport report;
  report.d_out = d_out;
  report.d_in = d_in;
  const std::string* f = brain.out_semi.hom_for(X, A, d_out);
  if (f) {
    report.upper_hom = *f;
    report.upper_ok = upper_commutes(brain.out_semi, X, *f, d_out);
  }
  const std::string* g = brain.in_semi.hom_for(A, X, d_in);
  if (g) {
    report.lower_hom = *g;
    report.lower_ok = lower_commutes(brain.in_semi, X, *g, d_in);
  }
  return report;
}

}  // namespace hetcat
