#pragma once

namespace testsupport {

inline const char* kLength2 = R"(# two vertices, three loops at 4
name: length2
params: t, T0b, T0c, T0d
vertices: 0, 4
arrows: a: 0 -> 4, A: 4 -> 0,
        b: 4 -> 4, c: 4 -> 4, d: 4 -> 4
order: a, A, d, c, b
relations: a*A - t*e0 ; b*b - T0b*e4 ; c*c - T0c*e4
  d*d - T0d*e4
  A*a + b + c + d - (1/2)*t*e4
)";

inline const char* kLauferCon = R"(vertices: 0
arrows: b: 0 -> 0 (deg 3), c: 0 -> 0 (deg 2)
relations: c^3 - b^2 ; b*c + c*b
)";

}  // namespace testsupport
