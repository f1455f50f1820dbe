#pragma once

#include "patch.hpp"

namespace dplab::test {

// Hand-built plane graphs for the discharging rules; each realizes a specific
// vertex taxonomy around vertex 0 (see the construction comments).

// strong 4-vertex: one non-light 4-face, three 5-faces (rule R1, both rows)
PlaneGraph golden_strong();
// weak 4-vertex with one special 5-face (R3 rows 1, 1/2, 1/3, 1/6) next to a
// normal 4-vertex (R2) and two strong 4-vertices (R1)
PlaneGraph golden_weak();
// weak 4-vertex with two special 5-faces (R3's 1/3 row for the non-light
// 4-face) plus a 5-vertex sending into a 4-face (R5)
PlaneGraph golden_weak_two_specials();
// very weak 4-vertex on a (4,4,4,3)-face (R4 branch i) plus a 5-vertex (R5)
PlaneGraph golden_very_weak_4443();
// very weak 4-vertex without a (4,4,4,3)-face (R4 branch ii)
PlaneGraph golden_very_weak_plain();
// 6-vertex sending 4/3 and 2/3 (R6)
PlaneGraph golden_six_vertex();

// hosts for the structural predicates
PlaneGraph fig6_host();  // (4,4,4,3)-face and (4,4,3,3)-face meeting at a 4-vertex
PlaneGraph fig8_host();  // (4,4,4,3)-face with two very weak 4-vertices

struct GoldenCase {
    const char* name;
    PlaneGraph (*build)();
};

std::vector<GoldenCase> golden_cases();

} // namespace dplab::test
