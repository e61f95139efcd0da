#pragma once

namespace fihris {

/// Selects between the serial reference implementation of a kernel and
/// the OpenMP one. Both produce identical results; the serial paths are
/// kept for testing and as the baseline in the benchmark.
enum class Execution { serial, parallel };

}  // namespace fihris
