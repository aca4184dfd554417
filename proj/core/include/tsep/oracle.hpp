#pragma once

#include <optional>

#include "tsep/separation.hpp"

namespace tsep {

/// Ground-truth implementations used only for cross-validation. Everything
/// here is deliberately naive (adjacency lists, DFS, exhaustive enumeration)
/// and shares no machinery with the relation-algebra engine.
namespace oracle {

/// No self-loops and no directed cycles (plain DFS three-coloring).
bool is_dag(const graph& g);

/// Classical d-separation on a DAG, decided by enumerating every simple
/// undirected path between b and c and checking that each is blocked:
/// a non-collider interior node blocks when it lies in W, a collider blocks
/// when neither it nor any descendant of it lies in W.
/// Throws scope_error on cyclic input and precondition_error when b == c or
/// an endpoint lies in W.
bool pearl_d_separated(const graph& g, const vertex_set& w, std::size_t b, std::size_t c);

/// Splitting search by exhaustive enumeration: tries every w_b subset of W in
/// lexicographic bitmask order (bit i = i-th smallest W vertex) and returns
/// the first one whose two saturation closures are disjoint. Guarded to
/// |W| <= 20 (scope_error beyond). Same disjointness preconditions as
/// find_splitting.
std::optional<split_certificate> brute_force_splitting(const cond_context& ctx,
                                                       const vertex_set& bs,
                                                       const vertex_set& cs);

} // namespace oracle
} // namespace tsep
