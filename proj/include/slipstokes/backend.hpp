#pragma once

namespace slipstokes {

/// Execution policy for the cell- and facet-parallel kernels. Both backends
/// write per-entity slots in a fixed layout and reduce in a fixed order, so
/// results are bit-identical regardless of backend or thread count; `serial`
/// is the plain-loop reference the tests compare against.
enum class Backend {
    serial,
    openmp,
};

}  // namespace slipstokes
