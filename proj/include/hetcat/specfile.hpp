#pragma once

#include <string>
#include <vector>

#include "hetcat/gallery.hpp"

namespace hetcat {

// A parsed spec file: raw declarations in file order, references resolved.
// Law checking happens in elaborate(), not here.
struct SpecDocument {
  std::vector<CategorySpec> categories;
  std::vector<FunctorSpec> functors;
  std::vector<HetSpec> hets;

  bool operator==(const SpecDocument&) const = default;
};

struct ParseError : std::runtime_error {
  int line;
  int col;

  ParseError(int line_, int col_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                           ": " + message),
        line(line_),
        col(col_) {}
};

// Parses the line-oriented spec grammar:
//
//   category <name>
//     objects <o> ...
//     identity <m> : <o>          (implicit id_<o> when omitted)
//     arrow <m> : <a> -> <b>
//     compose <g> . <f> = <h>     (unit entries are implied)
//     poset-chain <n>             (stand-alone sugar)
//     poset-powerset <k>
//   end
//   functor <name> : <Src> -> <Tgt>
//     obj <x> -> <y>
//     arrow <f> -> <g>
//   end
//   het <name> : <Send> ~> <Recv>
//     element <u> : <x> ~> <a>
//     lact <k> <u> = <v>
//     ract <u> <h> = <v>
//     rel <x> <a>                 (sugar: singleton element u_<x>_<a>)
//   end
//
// Comments run from '#' to end of line. Every referenced name must be
// declared before use; violations raise ParseError with line and column.
SpecDocument parse_spec(const std::string& text);

// Canonical text form. parse_spec(serialize_spec(doc)) == doc for every
// document produced by parse_spec or fixture_to_spec.
std::string serialize_spec(const SpecDocument& doc);

SpecDocument fixture_to_spec(const Fixture& fixture);

// A document's declarations validated and built, in declaration order.
struct ElaboratedDoc {
  std::vector<FinCategory> categories;
  std::vector<FinFunctor> functors;
  std::vector<HetBifunctor> hets;

  const FinCategory* category(const std::string& name) const;
  const FinFunctor* functor(const std::string& name) const;
  const HetBifunctor* het(const std::string& name) const;
};

// Runs every declaration through its validator, collecting all violations
// across the document (prefixed by declaration kind and name).
Result<ElaboratedDoc> elaborate(const SpecDocument& doc);

}  // namespace hetcat
