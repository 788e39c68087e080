#include "hetcat/dot.hpp"

#include <sstream>

namespace hetcat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node_id(const FinCategory& cat, const std::string& object) {
  return quote(cat.name() + ":" + object);
}

void emit_node(std::ostringstream& out, const FinCategory& cat, const std::string& object,
               std::vector<std::string>& seen) {
  std::string id = cat.name() + ":" + object;
  for (const std::string& s : seen) {
    if (s == id) return;
  }
  seen.push_back(id);
  out << "  " << quote(id) << " [label=" << quote(object) << "];\n";
}

void emit_edge(std::ostringstream& out, const std::string& from, const std::string& to,
               const std::string& label, bool dashed) {
  out << "  " << from << " -> " << to << " [label=" << quote(label);
  if (dashed) out << ", style=dashed";
  out << "];\n";
}

}  // namespace

std::string emit_dot_square(const Adjunction& adj, const std::string& d) {
  const HetBifunctor& het = adj.het();
  int e = het.require_element(d);
  const FinCategory& send = het.sending();
  const FinCategory& recv = het.receiving();
  const std::string& X = send.object_name(het.element(e).src);
  const std::string& A = recv.object_name(het.element(e).dst);

  SquareReport square = verify_adjunctive_square(adj, d);
  if (!square.ok()) {
    throw DomainError("refusing to draw an unverified square:\n" + square.text());
  }
  const UniversalArrow& h_arrow = adj.left.arrows.at(X);
  const UniversalArrow& e_arrow = adj.right.arrows.at(A);

  std::ostringstream out;
  out << "digraph adjunctive_square {\n";
  out << "  rankdir=LR;\n";
  out << "  label=" << quote("adjunctive square at " + d + " : " + X + " ~> " + A) << ";\n";
  out << "  node [shape=ellipse];\n";
  std::vector<std::string> seen;
  emit_node(out, send, X, seen);
  emit_node(out, recv, h_arrow.rep, seen);
  emit_node(out, send, e_arrow.rep, seen);
  emit_node(out, recv, A, seen);
  emit_edge(out, node_id(send, X), node_id(recv, h_arrow.rep), h_arrow.universal, true);
  emit_edge(out, node_id(send, e_arrow.rep), node_id(recv, A), e_arrow.universal, true);
  emit_edge(out, node_id(recv, h_arrow.rep), node_id(recv, A), square.upper_hom, false);
  emit_edge(out, node_id(send, X), node_id(send, e_arrow.rep), square.lower_hom, false);
  out << "}\n";
  return out.str();
}

std::string emit_dot_butterfly(const BrainFunctor& brain, const std::string& d_out,
                               const std::string& d_in) {
  const HetBifunctor& het_out = brain.out_semi.het;
  const FinCategory& X_cat = het_out.sending();
  const FinCategory& A_cat = het_out.receiving();
  int e = het_out.require_element(d_out);
  const std::string& X = X_cat.object_name(het_out.element(e).src);
  const std::string& A = A_cat.object_name(het_out.element(e).dst);

  WingReport wings = verify_butterfly(brain, d_out, d_in);
  if (!wings.ok()) {
    throw DomainError("refusing to draw unverified butterfly wings:\n" + wings.text());
  }
  const std::string FX = brain.functor.obj(X);

  std::ostringstream out;
  out << "digraph brain_butterfly {\n";
  out << "  rankdir=LR;\n";
  out << "  label=" << quote("butterfly at " + d_out + " / " + d_in + " through F(" + X + ") = " + FX)
      << ";\n";
  out << "  node [shape=ellipse];\n";
  std::vector<std::string> seen;
  emit_node(out, X_cat, X, seen);
  emit_node(out, A_cat, FX, seen);
  emit_node(out, A_cat, A, seen);
  emit_edge(out, node_id(X_cat, X), node_id(A_cat, FX),
            brain.out_semi.arrows.at(X).universal, true);
  emit_edge(out, node_id(A_cat, FX), node_id(X_cat, X),
            brain.in_semi.arrows.at(X).universal, true);
  emit_edge(out, node_id(A_cat, FX), node_id(A_cat, A), wings.upper_hom, false);
  emit_edge(out, node_id(A_cat, A), node_id(A_cat, FX), wings.lower_hom, false);
  out << "}\n";
  return out.str();
}

}  // namespace hetcat
