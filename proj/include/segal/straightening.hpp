// Unstraightening G-spaces to actions over Bar(G), straightening back, and the
// Borel construction against homotopy pullbacks of G-spaces.
#pragma once

#include <string>

#include "segal/gspace.hpp"
#include "segal/homology.hpp"
#include "segal/segal_checks.hpp"

namespace segal {

struct Unstraightening {
  BarConstruction bar;  // Bar(X, G) -> Bar(G)
  SegalReport report;   // action checks, then the inverted cross-check
};
Unstraightening unstraighten(const GSpace& x, int ext_truncation, int up_to, const OracleOptions& opts = {});

/// d^*(A x_{Bar G} Bar(G, G)) with G acting through the Bar(G, G) factor.
/// The target of pi must equal Bar(G) as built by bar_group.
GSpace straighten(const SpaceMap& pi, const SimplicialGroup& g, const Budget& budget = {});

struct RoundTrip {
  HomologySignature original;    // X
  HomologySignature underlying;  // straighten(unstraighten(X))
  HomologySignature borel;       // X // G
  HomologySignature quotient;    // straighten(unstraighten(X)) / G
  int compared_up_to = 0;
  Verdict verdict;
};
/// Uses external truncation N so the diagonal reaches X's truncation N.
RoundTrip roundtrip(const GSpace& x, int compared_up_to, const Budget& budget = {});
json to_json(const RoundTrip& r);

/// X -> Y <- Z, equivariant.
struct GCospan {
  GSpace x, y, z;
  SimplicialMap f;  // X -> Y
  SimplicialMap g;  // Z -> Y
};

struct BorelHolim {
  Verdict verdict;
  HomologySignature lhs;  // (X x^h_Y Z) // G
  HomologySignature rhs;  // X//G x^h_{Y//G} Z//G
  std::string mode;
};
BorelHolim borel_holim_check(const GCospan& c, int truncation, const OracleOptions& opts = {});
json to_json(const BorelHolim& r);

}  // namespace segal
