#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sidonlab/sets.hpp"

namespace sidonlab::search {

enum class Mode { kFirstWitness, kAllWitnesses, kCountOnly };

struct Config {
    Mode mode = Mode::kFirstWitness;
    /// Prune with cached minimal-diameter lower bounds.
    bool minlen_bounds = true;
    /// Break reflection/rotation symmetry where the mode allows it.
    bool symmetry_breaking = true;
    std::optional<double> time_budget_secs;
    int workers = 1;
    /// Resumable checkpointing for shortest_* searches (any k); empty = off.
    std::string checkpoint_path;
    /// Abort after roughly this many nodes (0 = unlimited). Testing hook.
    std::uint64_t node_limit = 0;
};

struct Stats {
    std::uint64_t nodes = 0;
    std::uint64_t feasibility_prunes = 0;
    std::uint64_t bound_prunes = 0;
    double wall_secs = 0.0;
};

/// `exact` is false when a budget or node limit stopped the search early;
/// the optimum is then only a bound (lower bound for max-cardinality
/// problems, upper bound for min-diameter problems).
struct SearchResult {
    Int optimum = 0;
    bool exact = true;
    std::vector<IntegerSet> witnesses;
    std::vector<ModularSet> modular_witnesses;
    Stats stats;
};

/// R_h(g,n): largest B*_h[g] subset of [1, n]. Depth-first branch and
/// bound; witnesses are valid B*_h[g] sets realizing the optimum.
SearchResult max_bstar_subset(Int n, int h, Int g, const Config& config = {});

/// C_h(g,n): largest B*_h[g] subset of Z/n. Fixes 0 in the set (translation
/// invariance) and, unless all witnesses are requested, prunes rotations
/// that do not place a minimal cyclic gap first.
SearchResult max_modular(Int n, int h, Int g, const Config& config = {});

/// Minimal diameter of a k-element B*_h[g] set, witnesses normalized to
/// start at 0 and deduplicated under reflection. h = 2 runs the fast
/// engine; h >= 3 a plain recursive search.
SearchResult shortest_bstar(int k, int h, Int g, const Config& config = {});

/// Optimal Golomb rulers: shortest_bstar(k, 2, 2) with all witnesses.
SearchResult shortest_sidon(int k, const Config& config = {});

/// Least n with R_h(g,n) >= k, i.e. minimal diameter + 1. Extends a shared
/// per-(h,g) table incrementally, so successive calls reuse earlier work.
/// Throws TimeBudgetExceededError if the budget runs out.
Int min_n_for_size(int h, Int g, int k, const Config& config = {});

/// Exhaustively decides whether a k-element B*_2[g] subset of [1, n]
/// exists. Uses only proven lower bounds for pruning, so a `false` answer
/// is a proof of nonexistence.
bool exists_bstar_subset(Int n, Int g, int k, Stats* stats = nullptr,
                         const Config& config = {});

/// Plain enumeration of all subsets with no pruning beyond feasibility of
/// the partial set; test oracle. Caps the space at 2^25 subsets.
SearchResult brute_force_oracle(Int n, int h, Int g);
SearchResult brute_force_oracle_mod(Int n, int h, Int g);

}  // namespace sidonlab::search
