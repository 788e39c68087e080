#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hetcat/fincat.hpp"

namespace hetcat {

// Declaration of one het element d : src ~> dst between a sending-category
// object and a receiving-category object.
struct HetElementDecl {
  std::string name;
  std::string src;
  std::string dst;

  bool operator==(const HetElementDecl&) const = default;
};

// Raw description of a het bifunctor: the finite het sets plus the two
// action tables. act_left is keyed (k, d) for the composite k.d with a
// receiving hom k; act_right is keyed (d, h) for d.h with a sending hom h.
struct HetSpec {
  std::string name;
  std::string sending;    // category name, for the file format
  std::string receiving;  // category name, for the file format
  std::vector<HetElementDecl> elements;
  std::map<std::pair<std::string, std::string>, std::string> act_left;
  std::map<std::pair<std::string, std::string>, std::string> act_right;

  bool operator==(const HetSpec&) const = default;
};

// A validated het bifunctor: finite het sets Het(X, A) indexed by a
// sending object X and a receiving object A, with post-composition by
// receiving homs and pre-composition by sending homs. Hets never compose
// with hets; the only composition this type offers is hom action on
// either side. Immutable after construction, freely shareable.
class HetBifunctor {
 public:
  struct Element {
    std::string name;
    int src = -1;  // sending object index
    int dst = -1;  // receiving object index

    bool operator==(const Element&) const = default;
  };

  const std::string& name() const { return name_; }
  const FinCategory& sending() const { return sending_; }
  const FinCategory& receiving() const { return receiving_; }

  int element_count() const { return static_cast<int>(elements_.size()); }
  const Element& element(int ix) const { return elements_[ix]; }
  int element_index(std::string_view name) const;
  int require_element(std::string_view name) const;

  // Elements of Het(src, dst) in declaration order.
  const std::vector<int>& set_ixs(int src_ix, int dst_ix) const;
  std::vector<std::string> het_set(const std::string& src, const std::string& dst) const;

  // Index-level actions; defined exactly on the boundary-matching pairs.
  int act_left_ix(int k_mor, int elem) const { return act_left_[k_mor * elements_.size() + elem]; }
  int act_right_ix(int elem, int h_mor) const { return act_right_[h_mor * elements_.size() + elem]; }

  // Named actions with boundary checking.
  std::string act_left(const std::string& k, const std::string& d) const;
  std::string act_right(const std::string& d, const std::string& h) const;

  // The two-sided composite k.d.h; by the mixed associativity law the
  // evaluation order does not matter.
  std::string act(const std::string& k, const std::string& d, const std::string& h) const;

  // Structural equality; display names of the bifunctor are not compared.
  bool operator==(const HetBifunctor& other) const;

  HetSpec to_spec() const;

  // Default-constructed: the empty het bifunctor over empty categories.
  HetBifunctor() = default;

  friend Result<HetBifunctor> make_het(const FinCategory& sending, const FinCategory& receiving,
                                       const HetSpec& spec);

 private:
  std::string name_;
  FinCategory sending_;
  FinCategory receiving_;
  std::vector<Element> elements_;
  std::unordered_map<std::string, int> elem_ix_;
  std::vector<std::vector<int>> sets_;  // src_ix * nRecvObj + dst_ix -> element ixs
  std::vector<int> act_left_;           // k_ix * nElem + e_ix -> element ix, -1 undefined
  std::vector<int> act_right_;          // h_ix * nElem + e_ix -> element ix, -1 undefined
};

// Validates a het description against the bifunctor laws: identity actions,
// functoriality of both actions, and the mixed associativity law
// (k.d).h = k.(d.h), all checked exhaustively with witnesses. Action table
// entries missing from the spec are synthesized when the target set is a
// singleton (the monotone-relation case, where the actions are forced);
// any other gap is reported as a violation.
Result<HetBifunctor> make_het(const FinCategory& sending, const FinCategory& receiving,
                              const HetSpec& spec);

// A het bifunctor whose every set is empty or a singleton, given by the
// list of related (sending object, receiving object) pairs. Elements are
// named u_<src>_<dst> and all actions are synthesized. Fails validation
// when the relation is not closed under the hom actions.
Result<HetBifunctor> make_relation_het(const std::string& name, const FinCategory& sending,
                                       const FinCategory& receiving,
                                       const std::vector<std::pair<std::string, std::string>>& related);

}  // namespace hetcat
