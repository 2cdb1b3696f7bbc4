#pragma once

namespace adeh {

/// Selects between the OpenMP kernels and the serial reference loops. Both give
/// identical exact results; the serial path exists for cross-checking and
/// benchmarking.
enum class ExecPolicy { serial, parallel };

/// Thread cap for parallel kernels: ADEH_THREADS if set to a positive integer,
/// otherwise the OpenMP default. Always 1 when built without OpenMP.
int thread_count();

/// Overrides ADEH_THREADS for the rest of the process (0 restores the default).
void set_thread_count(int n);

} // namespace adeh
