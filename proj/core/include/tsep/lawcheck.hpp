#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tsep/graph.hpp"

namespace tsep::laws {

/// A failing instance, shrunk by greedy vertex deletion, with the first
/// offending pair of vertices (meaning depends on the law: a differing pair
/// for relation equalities, the two seed singletons for the closure-union
/// law, a differing closure vertex for the downset law).
struct counterexample {
    graph g;
    vertex_set w;
    std::size_t a = 0;
    std::size_t b = 0;
};

struct report {
    std::string law;
    bool holds = true;
    bool extended = false; // true for the law extending the flanked identity to all of V
    std::optional<counterexample> witness;
};

/// L1..L10 plus the two lemma-level checks (lemma-witness, lemma-cousinhood).
const std::vector<std::string>& law_ids();

/// Evaluate one law on one instance. Both sides of every law are rebuilt here
/// from relation primitives (closures, compositions, converses, partial
/// identities); nothing is taken from the separation bundle, so a bundle bug
/// cannot mask a law failure. Unknown ids throw precondition_error.
report check_law(const cond_context& ctx, std::string_view id);

/// check_law over every id in law_ids().
std::vector<report> check_all(const cond_context& ctx);

/// Independent Bernoulli(p) draw per ordered vertex pair, self-loops
/// included; vertices are named v0..v{n-1}. Requires 1 <= n <= 16 and
/// 0 <= p <= 1 (precondition_error otherwise). Same seed, same graph.
graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Each vertex kept with probability p; deterministic per seed.
vertex_set random_vertex_subset(std::size_t n, double p, std::uint64_t seed);

/// Random DAG: a random vertex order, then each forward pair kept with
/// probability p. Same bounds as random_graph.
graph random_dag(std::size_t n, double p, std::uint64_t seed);

/// Stable seed derivation for instance streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Restriction to `keep` (reindexed, names preserved).
graph induced_subgraph(const graph& g, const vertex_set& keep);
cond_context restrict_context(const cond_context& ctx, const vertex_set& keep);

/// Greedy shrink: repeatedly delete any single vertex as long as `fails`
/// stays true. `fails(ctx)` must be true on entry.
cond_context shrink_instance(cond_context ctx,
                             const std::function<bool(const cond_context&)>& fails);

/// One JSON-lines record: {"law", "holds", "extended", "seed",
/// "counterexample"?} with the counterexample graph inline.
nlohmann::json report_to_json(const report& r, std::uint64_t seed);

} // namespace tsep::laws
