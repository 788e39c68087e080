#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hetcat/common.hpp"

namespace hetcat {

// Declaration of one morphism, by name, before index resolution.
struct MorphismDecl {
  std::string name;
  std::string dom;
  std::string cod;

  bool operator==(const MorphismDecl&) const = default;
};

// Raw description of a finite category: ordered objects and morphisms,
// the identity designation, and the composition table keyed (g, f) for
// the composite g after f. This is what the file format parses into and
// what make_category validates.
struct CategorySpec {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;  // identities are ordinary entries here
  std::map<std::string, std::string> identities;  // object -> morphism name
  std::map<std::pair<std::string, std::string>, std::string> compose;  // (g, f) -> g.f

  bool operator==(const CategorySpec&) const = default;
};

// A finite category as an immutable validated table: ordered identifier
// lists with O(1) lookup, a total identity map, and a composition table
// total on composable pairs. Construct through make_category; all
// operations on a validated instance are pure and freely shareable.
class FinCategory {
 public:
  struct Morphism {
    std::string name;
    int dom = -1;  // object index
    int cod = -1;

    bool operator==(const Morphism&) const = default;
  };

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const std::string& object_name(int ix) const { return objects_[ix]; }
  const Morphism& morphism(int ix) const { return morphisms_[ix]; }

  int object_index(std::string_view name) const;   // -1 if unknown
  int morphism_index(std::string_view name) const;  // -1 if unknown
  int require_object(std::string_view name) const;
  int require_morphism(std::string_view name) const;

  int identity_ix(int obj_ix) const { return identity_[obj_ix]; }
  const std::string& identity_name(int obj_ix) const;
  bool is_identity(int mor_ix) const;

  // Composition table lookup; -1 when the pair is not composable.
  int compose_ix(int g_ix, int f_ix) const { return table_[g_ix * morphisms_.size() + f_ix]; }

  // Named composition: total on composable pairs, DomainError otherwise.
  std::string compose(const std::string& g, const std::string& f) const;

  // All morphisms dom -> cod in declaration order.
  const std::vector<int>& hom_ixs(int dom_ix, int cod_ix) const;
  std::vector<std::string> hom_set(const std::string& dom, const std::string& cod) const;

  // Structural equality: ordered object/morphism lists, identity map and
  // composition table. The display name is a label, not structure.
  bool operator==(const FinCategory& other) const;

  CategorySpec to_spec() const;

  // Default-constructed: the empty category.
  FinCategory() = default;

  friend Result<FinCategory> make_category(const CategorySpec& spec);

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::unordered_map<std::string, int> obj_ix_;
  std::unordered_map<std::string, int> mor_ix_;
  std::vector<int> identity_;              // object ix -> morphism ix
  std::vector<int> table_;                 // g_ix * n + f_ix -> morphism ix, -1 undefined
  std::vector<std::vector<int>> homs_;     // dom_ix * nObj + cod_ix -> morphism ixs
};

// Validates a category description against the category laws. Collects
// every violation (missing identities, non-total composition, boundary
// errors, unit and associativity failures), each with a witness.
Result<FinCategory> make_category(const CategorySpec& spec);

// Same objects and morphism names with dom/cod swapped and the composition
// table transposed. Involutive up to structural equality.
FinCategory opposite(const FinCategory& cat);

// Componentwise product category. Objects "(x,y)", morphisms "(f,g)",
// left factor iterating slowest.
FinCategory product(const FinCategory& left, const FinCategory& right);

// The chain poset 0 <= 1 <= ... <= top as a category. Morphisms are
// id_<i> and le_<i>_<j> for i < j.
FinCategory poset_chain(const std::string& name, int top);

// The powerset lattice of {a, b, c, ...} (k letters, k <= 3) ordered by
// inclusion. Objects are named by their element letters, "0" for the
// empty set; morphisms are id_<S> and le_<S>_<T> for proper S < T.
FinCategory poset_powerset(const std::string& name, int k);

}  // namespace hetcat
