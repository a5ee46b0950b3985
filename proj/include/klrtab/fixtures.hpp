#pragma once

#include "klrtab/binfinity.hpp"
#include "klrtab/tableaux.hpp"

// Built-in demo inputs used by the CLI and the acceptance suite.

namespace klrtab::fixtures {

// rank 5, shape (6,4,2,2,1); the standing worked example of the library
inline Tableau sl6_sample_tableau() {
    return Tableau::from_rows({{1, 1, 3, 3, 4, 6}, {2, 3, 4, 5}, {3, 5}, {5, 6}, {6}});
}

inline constexpr int sl6_sample_rank = 5;

// rank 3 marginally large sample
inline MLTableau sl4_sample_ml() { return MLTableau(3, {{2, 3, 4}, {}, {4}}); }

// rank 3, shape (5,3,1); embedding demo
inline Tableau sl4_embedding_sample() {
    return Tableau::from_rows({{1, 1, 2, 2, 3}, {2, 3, 3}, {4}});
}

}  // namespace klrtab::fixtures
