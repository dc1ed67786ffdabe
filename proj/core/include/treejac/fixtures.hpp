#pragma once

#include <cstdint>
#include <vector>

#include "treejac/curve.hpp"

// Reference curves used by the `examples` subcommand, the tests and the docs.
namespace treejac::fixtures {

/// C1(g=0,h=1) -P1- C2(g=0,h=1)
CurveGraph chain2_unit();
/// C1(g=0,h=1) -P1- C2(g=0,h=2)
CurveGraph chain2_h12();
/// Star around C3: P1:C1-C3, P2:C2-C3, P3:C3-C4 with h = (1,1,2,2), all rational.
CurveGraph star4();
/// C1(g=1,h=1) -P1- C2(g=2,h=1)
CurveGraph chain2_genus12();
/// A five-component tree of total polarization degree 7 (prime) with mixed genera.
CurveGraph prime_tree();

/// Three components joined in a cycle; rejected by validate_curve.
CurveDescription triangle();

}  // namespace treejac::fixtures
