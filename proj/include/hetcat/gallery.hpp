#pragma once

#include <map>
#include <string>
#include <vector>

#include "hetcat/adjoint.hpp"

namespace hetcat {

// A canonical finite scenario: the categories, functors and het bifunctors
// that compose it, plus a table of expected results (object maps,
// representing objects, universal elements) computed independently at
// build time so the search machinery can be checked against them.
struct Fixture {
  std::string name;
  std::vector<int> params;
  std::vector<FinCategory> categories;
  std::vector<FinFunctor> functors;
  std::vector<HetBifunctor> hets;
  std::map<std::string, std::string> expected;

  const FinCategory& category(const std::string& name) const;
  const FinFunctor& functor(const std::string& name) const;
  const HetBifunctor& het(const std::string& name) const;

  bool operator==(const Fixture& other) const;
};

// Fixture names accepted by build_fixture, in display order.
const std::vector<std::string>& fixture_names();

// Builds a named fixture. Parameters are fixture-specific and validated;
// an empty list selects the documented defaults.
//
//   chain-galois n m          chains 0..n and 0..m with x <= 2a   (4 2)
//   powerset-diagonal k       powerset lattice, diagonal functor  (2)
//   free-discrete-preorder n  sets up to size n vs preorders      (2)
//   coordinate-coding w h     point/code grids with a coding map  (2 2)
//   hom-identity n            a chain with its hom bifunctor      (2)
Fixture build_fixture(const std::string& name, const std::vector<int>& params);

// Recomputes every expected entry of the fixture from scratch through the
// search and verification operations and reports any mismatch.
ValidationReport run_fixture_checks(const Fixture& fixture);

// Renders the contrast between the direct determination by d and its
// factorization through the receiving universal: the universal object as
// generator of diversity, the universal het as polling interface, and the
// factor hom as differential amplification.
std::string selection_report(const Semiadjunction& semi, const std::string& d);

}  // namespace hetcat
