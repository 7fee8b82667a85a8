#ifndef MINCUT_RUNTIME_HPP_
#define MINCUT_RUNTIME_HPP_

#include <cstddef>

namespace mincut {

/// Worker cap from the MINCUT_THREADS environment variable; 0 or unset
/// means one worker per hardware thread. Always at least 1. Results are
/// identical for every setting; only wall time changes.
std::size_t worker_count();

}  // namespace mincut

#endif  // MINCUT_RUNTIME_HPP_
