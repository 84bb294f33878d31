#pragma once

#include <string>

#include "ringlab/constructions.hpp"

namespace ringlab {

/// Parses the line-oriented ring description format:
///
///   # comment
///   ring NAME
///   additive n1 n2 ... nk
///   default zero                  (optional)
///   mul e<i> e<j> = (c1,...,ck)
///
/// Products left unspecified error with MissingProduct unless `default
/// zero` is present.  Table validation is make_finite_ring's.
FiniteRing parse_ring_file(const std::string& text);

FiniteRing load_ring_file(const std::string& path);

/// Deterministic export: `default zero` plus the nonzero products in
/// row-major order.  parse(render(r)) re-renders to the identical bytes.
std::string render_ring_file(const FiniteRing& ring);

/// Parses "(c1,...,ck)" with coordinates reduced into range.  Rings whose
/// name carries a matrix layout ("M2(F2)") additionally accept matrix-unit
/// syntax: "E01", "E(0,1)", scaled terms "2*E01", sums "E01+E10", and "0".
RingElement parse_element(const FiniteRing& ring, const std::string& text);

/// Renders an element, in matrix-unit syntax when the layout applies.
std::string render_element(const FiniteRing& ring, const RingElement& e);

}  // namespace ringlab
