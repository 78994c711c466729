#include "supertopo/parallel.hpp"

#include <omp.h>

namespace supertopo {

std::size_t available_threads() { return static_cast<std::size_t>(omp_get_max_threads()); }

}  // namespace supertopo
