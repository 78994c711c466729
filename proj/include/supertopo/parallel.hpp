#pragma once

#include <cstddef>

namespace supertopo {

/// Selects the OpenMP kernel or its serial reference. Both produce
/// identical, canonically ordered results.
enum class Execution { serial, parallel };

/// Threads OpenMP will use for a parallel region (honours OMP_NUM_THREADS).
std::size_t available_threads();

}  // namespace supertopo
