#pragma once

namespace rc {

// 0 means "whatever OpenMP would pick" (OMP_NUM_THREADS or core count).
int resolve_threads(int requested);

}  // namespace rc
