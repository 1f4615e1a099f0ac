#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dowker/diagram.hpp"
#include "dowker/filtration.hpp"
#include "dowker/network.hpp"

namespace testsupport {

using dowker::Extended;
using dowker::Network;
using dowker::Vertex;
using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// Each ordered pair gets an edge with probability p, integer weight 1..max_w.
Network random_network(Rng& rng, std::size_t n, double p, int max_w = 20);

/// Cycle through a random vertex order, every edge randomly oriented.
Network random_cycle(Rng& rng, std::size_t n, int max_w = 20, bool shuffle = true);

/// Consistently oriented cycle 0 -> 1 -> ... -> n-1 -> 0 with the given weights.
Network directed_cycle(const std::vector<double>& weights);

/// Cacti built by gluing random cycles at existing vertices, with occasional
/// pendant bridges. At most `blocks` cycles and `max_n` vertices.
Network random_cactus(Rng& rng, std::size_t blocks, std::size_t max_n, int max_w = 20);

/// Disjoint union of a and b with b's vertex `vb` identified to a's `va`.
Network wedge(const Network& a, Vertex va, const Network& b, Vertex vb);

/// Relabels vertex v as perm[v].
Network permuted(const Network& g, const std::vector<Vertex>& perm);

/// Filtration on at most `max_simplices` simplices over a few vertices with
/// small integer values, so ties are common.
dowker::Filtration random_filtration(Rng& rng, std::size_t max_simplices);

/// Non-zero-length intervals (dim, birth, death) from ranks of the maps
/// H_k(K_a) -> H_k(K_b) between all sublevel complexes, over GF(2). Needs at
/// most 64 simplices per dimension.
std::vector<dowker::PersistencePair> rank_oracle(const dowker::Filtration& f, std::size_t max_dim);

/// min_w max_{x in s} d(w, x) computed directly.
Extended brute_value(const Network& d, const std::vector<Vertex>& s);

/// Reported pairs of one dimension as (birth, death) doubles.
std::vector<std::pair<double, double>> bars(const dowker::PersistenceDiagram& d, std::size_t dim);

std::string fixture(const std::string& name);
Network load_fixture(const std::string& name);

}  // namespace testsupport

namespace testsupport {

/// Calls fn(masks) for every reflexive transitive relation on n points;
/// masks[v] holds the points reachable from v, v included.
void for_each_preorder(std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn);

/// Unit-weight network with an edge v -> x for every x != v in masks[v].
Network network_from_masks(const std::vector<std::uint32_t>& masks);

/// Dominating-set statements on the path completion P of g:
///   - reduced Betti numbers of the maximal complex vanish from degree
///     |K| - 1 upward, K a minimum dominating set of P;
///   - the nerve of {N_P(k)} has the same reduced Betti numbers, both for
///     that K and for a minimum dominating set of g itself;
///   - the maximal complex of P restricted to the rows of K is unchanged.
/// Returns an empty string on success, otherwise a description.
std::string check_domination(const Network& g);

/// The same statements read on g without completion. Used to show the
/// completion is needed; returns true when every statement holds.
bool domination_holds_uncompleted(const Network& g);

}  // namespace testsupport
