#pragma once

#include <map>
#include <string>
#include <vector>

#include "hetcat/het.hpp"

namespace hetcat {

// Raw description of a functor: object and morphism maps by name.
struct FunctorSpec {
  std::string name;
  std::string source;  // category name, for the file format
  std::string target;
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> mor_map;

  bool operator==(const FunctorSpec&) const = default;
};

// A validated functor between finite categories: total object and morphism
// maps preserving boundaries, identities and composition.
class FinFunctor {
 public:
  const std::string& name() const { return name_; }
  const FinCategory& source() const { return source_; }
  const FinCategory& target() const { return target_; }

  int obj_ix(int src_obj_ix) const { return obj_map_[src_obj_ix]; }
  int mor_ix(int src_mor_ix) const { return mor_map_[src_mor_ix]; }
  std::string obj(const std::string& object) const;
  std::string apply(const std::string& morphism) const;

  // Structural equality: same source and target structure and the same
  // maps. Display names are not compared.
  bool operator==(const FinFunctor& other) const;

  FunctorSpec to_spec() const;

  // Default-constructed: the empty functor between empty categories.
  FinFunctor() = default;

  friend Result<FinFunctor> make_functor(const FinCategory& source, const FinCategory& target,
                                         const FunctorSpec& spec);

 private:
  std::string name_;
  FinCategory source_;
  FinCategory target_;
  std::vector<int> obj_map_;  // source object ix -> target object ix
  std::vector<int> mor_map_;  // source morphism ix -> target morphism ix
};

// Validates the functor laws: totality of both maps, boundary preservation
// through the object map, identity preservation, and composition
// preservation over every composable pair. All failures are collected.
Result<FinFunctor> make_functor(const FinCategory& source, const FinCategory& target,
                                const FunctorSpec& spec);

FinFunctor identity_functor(const FinCategory& cat);

// The hom bifunctor of one category presented as a het bifunctor from the
// category to itself: Het(X, A) = Hom(X, A), elements named after the
// morphisms, with post- and pre-composition as the actions.
HetBifunctor hom_bifunctor(const FinCategory& cat, const std::string& name = "");

// The het bifunctor tautologically represented on the left by F:
// Het(X, A) = Hom(F(X), A), left action by post-composition, right action
// d.h = d o F(h). Elements reuse the target morphism name, qualified with
// "@<X>" when F is not injective on objects.
HetBifunctor induced_het_left(const FinFunctor& F, const std::string& name = "");

// Dual: for G mapping the receiving category of the hets into the sending
// one, Het(X, A) = Hom(X, G(A)) with action k.d = G(k) o d on the left and
// pre-composition on the right.
HetBifunctor induced_het_right(const FinFunctor& G, const std::string& name = "");

}  // namespace hetcat
