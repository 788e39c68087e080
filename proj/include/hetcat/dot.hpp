#pragma once

#include <string>

#include "hetcat/adjoint.hpp"

namespace hetcat {

// DOT digraph of the adjunctive square at one het element d: the two
// universal hets as dashed edges and the two factorizations f(d), g(d) as
// solid edges. Node ids are qualified by category name; labels are the
// object names. Output is byte-stable for a fixed input.
std::string emit_dot_square(const Adjunction& adj, const std::string& d);

// DOT digraph of the butterfly at one outgoing and one incoming het over
// the same object pair: dashed universal hets into and out of the center
// F(X), solid factor homs as the wings.
std::string emit_dot_butterfly(const BrainFunctor& brain, const std::string& d_out,
                               const std::string& d_in);

}  // namespace hetcat
