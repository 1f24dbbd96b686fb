#pragma once

#include <cstdint>

namespace dispnet {

// Execution policy for the data-parallel kernels. `serial` is the reference
// path the tests compare against; both produce identical results.
enum class Exec { serial, parallel };

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

}  // namespace dispnet
