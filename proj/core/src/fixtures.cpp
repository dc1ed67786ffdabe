#include "treejac/fixtures.hpp"

namespace treejac::fixtures {

CurveGraph chain2_unit() {
  return validate_curve({{{"C1", 0, 1}, {"C2", 0, 1}}, {{"P1", {"C1", "C2"}}}});
}

CurveGraph chain2_h12() {
  return validate_curve({{{"C1", 0, 1}, {"C2", 0, 2}}, {{"P1", {"C1", "C2"}}}});
}

CurveGraph star4() {
  return validate_curve({{{"C1", 0, 1}, {"C2", 0, 1}, {"C3", 0, 2}, {"C4", 0, 2}},
                         {{"P1", {"C1", "C3"}}, {"P2", {"C2", "C3"}}, {"P3", {"C3", "C4"}}}});
}

CurveGraph chain2_genus12() {
  return validate_curve({{{"C1", 1, 1}, {"C2", 2, 1}}, {{"P1", {"C1", "C2"}}}});
}

CurveGraph prime_tree() {
  return validate_curve({{{"C1", 0, 1}, {"C2", 1, 2}, {"C3", 0, 1}, {"C4", 2, 1}, {"C5", 1, 2}},
                         {{"P1", {"C1", "C2"}}, {"P2", {"C2", "C3"}}, {"P3", {"C2", "C4"}}, {"P4", {"C4", "C5"}}}});
}

CurveDescription triangle() {
  return {{{"C1", 0, 1}, {"C2", 0, 1}, {"C3", 0, 1}},
          {{"P1", {"C1", "C2"}}, {"P2", {"C2", "C3"}}, {"P3", {"C3", "C1"}}}};
}

}  // namespace treejac::fixtures
