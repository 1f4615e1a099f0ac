#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dowker/diagram.hpp"
#include "dowker/network.hpp"
#include "dowker/structure.hpp"

namespace dowker {

enum class CycleCase { Consistent, Dom1, Dom2, Dom3Plus, Empty };

std::string_view to_string(CycleCase c) noexcept;

/// The H1 interval [birth, death) of a weighted cycle graph, if any.
struct CyclePersistenceResult {
  std::optional<std::pair<Extended, Extended>> interval;
  CycleCase tag = CycleCase::Empty;

  friend bool operator==(const CyclePersistenceResult&, const CyclePersistenceResult&) = default;
};

/// Closed forms for every orientation class, with d the completed distance:
///   consistent   [max w, min_{i != j} max(d(i,j), d(j,i)))
///   3+ sources   [max w, inf)
///   2 sources    [max w, max_{source k, sink s} d(k, s))
///   1 source k   [max w, max over the two k-to-s arcs of
///                  min_{interior i} max(d(k,s), d(k,i), d(i,s)))
/// Empty whenever birth >= death. Errc::NotACycle on non-cycles.
CyclePersistenceResult cycle_h1_oracle(const Network& g);

struct CactusBarcode {
  /// One result per cycle block, in cactus_decompose order.
  std::vector<CyclePersistenceResult> cycles;

  /// Non-empty intervals, sorted.
  std::vector<std::pair<Extended, Extended>> intervals() const;
};

/// Union of the per-block cycle oracles. Errc::NotCactus on non-cacti.
CactusBarcode cactus_h1_oracle(const Network& g);

/// Dimension-1 diagram holding the non-empty intervals.
PersistenceDiagram to_diagram(const CyclePersistenceResult& r);
PersistenceDiagram to_diagram(const CactusBarcode& b);

/// Removes v from a consistently oriented cycle, joining its in- and
/// out-edges into one edge of summed weight. Vertices above v shift down by
/// one. Errc::NotACycle unless consistent, Errc::TooSmall on a 3-cycle.
Network contract_cycle(const Network& g, Vertex v);

/// Whether the undirected graph of pairs with min(w(x,y), w(y,x)) <= delta
/// contains a cycle. Pipeline H1 at delta can only be non-zero when it does.
bool h1_cycle_support_check(const Network& g, Extended delta);

}  // namespace dowker
