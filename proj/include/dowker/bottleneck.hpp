#pragma once

#include <cstddef>

#include "dowker/diagram.hpp"

namespace dowker {

/// Bottleneck distance between the reported pairs of dimension `dim`.
///
/// Points may be matched to the diagonal at half their persistence. Points
/// with infinite death only match each other, by birth; unequal counts give
/// infinity. Censored deaths are compared as finite values, so both diagrams
/// must share the cutoff: Errc::InvalidArgument otherwise.
Extended bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, std::size_t dim);

}  // namespace dowker
