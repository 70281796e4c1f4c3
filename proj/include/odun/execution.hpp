#pragma once

namespace odun {

/// Selects between the OpenMP kernel and its serial reference implementation.
/// Both produce identical results; the serial path is kept for testing and
/// benchmarking.
enum class Execution { serial, parallel };

/// Threads available to the parallel kernels (1 when built without OpenMP).
int max_threads() noexcept;

}  // namespace odun
