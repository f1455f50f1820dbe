#include "fixtures.hpp"

namespace dplab::test {

PlaneGraph golden_strong() {
    // 0 = the strong 4-vertex with neighbors 1,3,6,9 in cyclic order;
    // one (4,3,2,3)-face and three 5-faces around it, big outer face.
    // 1,3,6,9 are 3-vertices, everything else has degree 2.
    return plane_from_inner_faces(12, {
                                          {0, 1, 2, 3},        // 4-face, no light pattern
                                          {0, 3, 4, 5, 6},     // 5-face
                                          {0, 6, 7, 8, 9},     // 5-face
                                          {0, 9, 10, 11, 1},   // 5-face
                                      });
}

PlaneGraph golden_weak() {
    // 0 weak: light (4,4,3,3)-face L=[0,1,2,3], no-3-vertex 4-face
    // F=[0,4,5,6], special 5-face S1 (across edge 0-3, a 3-neighbor) and
    // non-special 5-face N1. 1 is normal, 4 and 6 are strong via pendants.
    return plane_from_inner_faces(15,
                                  {
                                      {0, 1, 2, 3},      // L  light (4,4,3,3)
                                      {0, 3, 7, 8, 4},   // S1 five, special for 0 via 3
                                      {0, 4, 5, 6},      // F  (4,4,2,4), no 3-vertex
                                      {0, 6, 9, 10, 1},  // N1 five, non-special
                                  },
                                  {{2, 11}, {4, 12}, {6, 13}, {1, 14}});
}

PlaneGraph golden_weak_two_specials() {
    // 0 weak with light (4,3,5,3)-face [0,1,2,3] (2 is the 5-vertex); both
    // light-face spokes lead to 3-neighbors, so the 5-faces on their far
    // sides are both special; the non-light 4-face then receives 1/3.
    return plane_from_inner_faces(16,
                                  {
                                      {0, 1, 2, 3},      // L light (4,3,5,3)
                                      {1, 0, 4, 8, 7},   // S_a five, special via 1
                                      {4, 0, 6, 5},      // F (4,4,4,2), no 3-vertex
                                      {6, 0, 3, 10, 9},  // S_b five, special via 3
                                  },
                                  {{2, 11}, {2, 12}, {2, 13}, {4, 14}, {6, 15}});
}

PlaneGraph golden_very_weak_4443() {
    // 0 very weak: light (4,5,3,3)-face L=[3,0,1,2] with the 5-vertex 1,
    // (4,4,4,3)-face F=[4,0,6,5], special 5-face S across edge 0-3 and a
    // non-special 5-face N that receives 0 under R4(i). 1 exercises R5.
    return plane_from_inner_faces(17,
                                  {
                                      {3, 0, 1, 2},      // L light (3,4,5,3) walk
                                      {1, 0, 4, 7, 8},   // N five, non-special
                                      {4, 0, 6, 5},      // F (4,4,3,4) walk: the 4443 face
                                      {6, 0, 3, 10, 9},  // S five, special via 3
                                  },
                                  {{4, 11}, {5, 12}, {5, 13}, {1, 14}, {1, 15}, {2, 16}});
}

PlaneGraph golden_very_weak_plain() {
    // like golden_weak but the second 4-face carries a 3-vertex (6) and is
    // not a (4,4,4,3)-face, putting 0 in the R4(ii) branch
    return plane_from_inner_faces(14,
                                  {
                                      {0, 1, 2, 3},      // L light (4,4,3,3)
                                      {0, 3, 7, 8, 4},   // S1 five
                                      {0, 4, 5, 6},      // F (4,4,2,3): 3-vertex, not 4443
                                      {0, 6, 9, 10, 1},  // N1 five
                                  },
                                  {{2, 11}, {4, 12}, {1, 13}});
}

PlaneGraph golden_six_vertex() {
    // 0 has degree six: a 4-face, a 5-face and three pendants into the outer
    // face; R6 sends 4/3 and 2/3
    return plane_from_inner_faces(10,
                                  {
                                      {0, 1, 2, 3},     // 4-face
                                      {0, 3, 4, 5, 6},  // 5-face
                                  },
                                  {{0, 7}, {0, 8}, {0, 9}});
}

PlaneGraph fig6_host() {
    // two 4-faces sharing only the 4-vertex 4: [0,4,1,5] is a (4,4,4,3)-face,
    // [2,4,3,6] is a light (4,4,3,3)-face; pendants realize the degrees
    return plane_from_inner_faces(16,
                                  {
                                      {0, 4, 1, 5},
                                      {2, 4, 3, 6},
                                  },
                                  {{0, 7},
                                   {0, 8},
                                   {1, 9},
                                   {1, 10},
                                   {2, 11},
                                   {2, 12},
                                   {3, 13},
                                   {5, 14},
                                   {6, 15}});
}

PlaneGraph fig8_host() {
    // (4,4,4,3)-face [0,1,2,3] whose 4-vertices 0 and 1 both sit on
    // (4,3,5,3)-faces, making them both very weak
    return plane_from_inner_faces(21,
                                  {
                                      {0, 1, 2, 3},  // F (4,4,4,3)
                                      {0, 3, 4, 5},  // L1 light (4,3,5,3)
                                      {1, 6, 7, 8},  // L2 light (4,3,5,3)
                                  },
                                  {{0, 9},
                                   {2, 10},
                                   {2, 11},
                                   {4, 12},
                                   {4, 13},
                                   {4, 14},
                                   {5, 15},
                                   {6, 16},
                                   {7, 17},
                                   {7, 18},
                                   {7, 19},
                                   {8, 20}});
}

std::vector<GoldenCase> golden_cases() {
    return {
        {"golden_strong", golden_strong},
        {"golden_weak", golden_weak},
        {"golden_weak_two_specials", golden_weak_two_specials},
        {"golden_very_weak_4443", golden_very_weak_4443},
        {"golden_very_weak_plain", golden_very_weak_plain},
        {"golden_six_vertex", golden_six_vertex},
    };
}

} // namespace dplab::test
