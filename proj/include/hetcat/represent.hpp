#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hetcat/functor.hpp"

namespace hetcat {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

// A representing object together with its universal het. On the left the
// universal is the receiving het h_X : base ~> rep through which every het
// out of base factors by a unique receiving hom; on the right it is the
// sending het e_A : rep ~> base through which every het into base factors
// by a unique sending hom.
struct UniversalArrow {
  Side side;
  std::string base;
  std::string rep;
  std::string universal;

  bool operator==(const UniversalArrow&) const = default;
};

// Stored natural bijection family, keyed by (sending object, receiving
// object). On the left it lists (f, f.h_X) over f in Hom(F(X), A); on the
// right it lists (g, e_A.g) over g in Hom(X, G(A)). Stored rather than
// recomputed so seeded corruption is detectable by the verifiers.
using BijectionFamily =
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, std::string>>>;

struct Semiadjunction {
  Side side;
  HetBifunctor het;
  FinFunctor functor;  // left: F sending -> receiving; right: G receiving -> sending
  std::map<std::string, UniversalArrow> arrows;  // base object -> universal arrow
  BijectionFamily bijections;

  // Stored-table lookups; nullptr when the table has no such entry.
  const std::string* elem_for(const std::string& X, const std::string& A,
                              const std::string& hom) const;
  const std::string* hom_for(const std::string& X, const std::string& A,
                             const std::string& elem) const;
};

// Exhaustive universal-mapping-property checks: the action against the
// candidate universal element must be a bijection from the representing
// hom-set onto every het set at the base object.
bool check_left_ump(const HetBifunctor& het, int base_ix, int rep_ix, int universal_elem);
bool check_right_ump(const HetBifunctor& het, int base_ix, int rep_ix, int universal_elem);

// Searches all (candidate object, candidate element) pairs in declaration
// order and returns the first that passes the full UMP check. Absence is a
// value, not an error.
std::optional<UniversalArrow> find_left_representation(const HetBifunctor& het, const std::string& X);
std::optional<UniversalArrow> find_right_representation(const HetBifunctor& het, const std::string& A);

// The unique hom through which d factors across the universal arrow.
// DomainError when d does not start (end) at the arrow's base object;
// IntegrityError when the arrow fails its own universal property.
std::string factor_left(const HetBifunctor& het, const UniversalArrow& u, const std::string& d);
std::string factor_right(const HetBifunctor& het, const UniversalArrow& u, const std::string& d);

// Finds a representation for every base object (reporting each failure
// otherwise), induces the functor on morphisms by factorization, and
// re-verifies functoriality plus naturality of the stored bijections.
Result<Semiadjunction> build_left_semiadjunction(const HetBifunctor& het);
Result<Semiadjunction> build_right_semiadjunction(const HetBifunctor& het);

// Re-verifies a semiadjunction from its stored data alone: arrow/functor
// consistency, every UMP, the bijection tables, and the naturality squares
// in both variables.
ValidationReport verify_semiadjunction(const Semiadjunction& semi);

}  // namespace hetcat
