#pragma once

#include <string>

#include "hetcat/represent.hpp"

namespace hetcat {

// A left and a right semiadjunction over one shared het bifunctor. Both
// factorizations of every het element are verified at assembly.
struct Adjunction {
  Semiadjunction left;   // F with psi: Hom(F(X), A) ~ Het(X, A)
  Semiadjunction right;  // G with phi: Hom(X, G(A)) ~ Het(X, A)

  const HetBifunctor& het() const { return left.het; }
};

// Outcome of checking both triangles of the adjunctive square at one het.
struct SquareReport {
  std::string element;    // d
  std::string upper_hom;  // f(d): F(X) -> A, empty when no candidate exists
  std::string lower_hom;  // g(d): X -> G(A)
  bool upper_ok = false;
  bool lower_ok = false;

  bool ok() const { return upper_ok && lower_ok; }
  std::string text() const;
};

// One functor that receives and sends through the same universal: F(X)
// left-represents the outgoing hets X ~> A and right-represents the
// incoming hets A ~> X.
struct BrainFunctor {
  FinFunctor functor;
  Semiadjunction out_semi;  // side left, over the outgoing hets
  Semiadjunction in_semi;   // side right, over the incoming hets
};

// Outcome of checking the two butterfly wings at one outgoing and one
// incoming het over the same object pair.
struct WingReport {
  std::string d_out;
  std::string d_in;
  std::string upper_hom;  // f(d_out): F(X) -> A
  std::string lower_hom;  // g(d_in): A -> F(X)
  bool upper_ok = false;
  bool lower_ok = false;

  bool ok() const { return upper_ok && lower_ok; }
  std::string text() const;
};

// Verifies that both semiadjunctions sit over the same het bifunctor,
// re-verifies each side, materializes the composite bijection
// Hom(F(X), A) ~ Hom(X, G(A)) and checks its naturality in both variables,
// and checks the adjunctive square at every het element.
Result<Adjunction> assemble_adjunction(const Semiadjunction& left, const Semiadjunction& right);

// Checks d = f(d).h_X and d = e_A.g(d) against the stored bijections.
SquareReport verify_adjunctive_square(const Adjunction& adj, const std::string& d);

// Verifies that F(X) left-represents the outgoing hets and right-represents
// the incoming hets at every object, assembling and re-verifying both
// bijection families (which pins F's morphism map through naturality).
Result<BrainFunctor> check_brain(const FinFunctor& F, const HetBifunctor& het_out,
                                 const HetBifunctor& het_in);

// The both-adjoints construction: given claimed adjunctions H -| F -| G,
// builds the outgoing hets Hom(F(X), A) and incoming hets Hom(A, F(X)),
// verifies both adjunctions by exhaustive representation search, and
// returns F as a verified brain functor.
Result<BrainFunctor> brain_from_adjoints(const FinFunctor& H, const FinFunctor& F,
                                         const FinFunctor& G);

// Checks the upper wing at d_out and the lower wing at d_in; both hets
// must connect the same object pair.
WingReport verify_butterfly(const BrainFunctor& brain, const std::string& d_out,
                            const std::string& d_in);

}  // namespace hetcat
