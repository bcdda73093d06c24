// Named fixtures shared by the unit and acceptance suites.
#pragma once

#include "poq/partition.hpp"
#include "poq/poset.hpp"

namespace fixtures {

// p < q and q' < r, two components (element order: p, q, q', r).
inline poq::Poset two_component_poset() {
    return poq::from_covers(4, {{0, 1}, {2, 3}}, {"p", "q", "q'", "r"});
}

inline poq::Partition two_component_middle_blocks() {
    return poq::partition_from_blocks(4, {{0}, {1, 2}, {3}});
}

// The eight-element lattice made of two stacked diamonds sharing a vertical
// edge x11 -- y00: elements x00 x10 x01 x11 y00 y10 y01 y11 (indices 0..7).
inline poq::Poset stacked_diamonds() {
    return poq::from_covers(8,
                            {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}},
                            {"x00", "x10", "x01", "x11", "y00", "y10", "y01", "y11"});
}

inline poq::Partition stacked_diamonds_merge_middle() {
    return poq::partition_from_blocks(8, {{0}, {1}, {2}, {3, 4}, {5}, {6}, {7}});
}

// Pentagon: 0 < a < 1 and 0 < b < c < 1 (indices: 0, a=1, b=2, c=3, 1=4).
inline poq::Poset pentagon() {
    return poq::from_covers(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

// Crown on four elements: a, b below c, d with all four cross relations.
inline poq::Poset crown4() {
    return poq::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {"a", "b", "c", "d"});
}

}  // namespace fixtures
