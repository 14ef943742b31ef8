#pragma once

#include <functional>
#include <map>
#include <utility>

#include "sidonlab/sets.hpp"

namespace sidonlab::verify {

/// Representation counts: value k -> A*h(k) (convolution) or A°(k)
/// (correlation). Zero counts are omitted.
struct CountProfile {
    int h = 2;
    std::optional<Int> modulus;
    std::map<Int, Int> counts;

    Int max_count() const;
    /// Smallest k attaining max_count(); 0 when the profile is empty.
    Int worst_value() const;
    Int total() const;
};

/// Exact count of ordered h-tuples from A summing to each value (mod n for
/// modular sets). h >= 2.
CountProfile convolution_counts(const IntegerSet& a, int h);
CountProfile convolution_counts(const ModularSet& a, int h);

/// A°(k) = #{(a1,a2) : a1 - a2 = k}; includes k = 0 (count |A|) and both signs.
CountProfile correlation_counts(const IntegerSet& a);
CountProfile correlation_counts(const ModularSet& a);

/// True iff max_k A*h(k) <= g.
bool is_bstar(const IntegerSet& a, int h, Int g);
bool is_bstar_mod(const ModularSet& a, int h, Int g);
/// Validating variant: elements must lie in [0, n).
bool is_bstar_mod(const std::vector<Int>& elems, int h, Int g, Int n);

/// (max_{k!=0} A°(k) <= 1, max_k A*(k) <= 2); the two agree for finite
/// integer sets.
std::pair<bool, bool> sidon_iff_distinct_differences(const IntegerSet& a);

/// Canonical representative of A under the equivalence A ~ kA + r (mod n),
/// gcd(k, n) = 1: the lexicographically least image, with one transform
/// that realizes it. The representative contains 0 whenever A is nonempty.
struct CanonicalForm {
    ModularSet representative;
    Int k = 1;
    Int r = 0;
};
CanonicalForm canonical_form(const ModularSet& a);

/// Caller-supplied override for what counts as a trivial solution.
using TrivialityPredicate = std::function<bool(const std::vector<Int>&)>;

/// True iff L*a = 0 has no nontrivial solution with all coordinates in A.
///
/// Default triviality rule: a solution is trivial iff (a) it is constant
/// and the all-ones vector solves L, or (b) for every column-coefficient
/// vector v of L, the multiset of coordinates under v equals the multiset
/// of coordinates under -v (zero columns are ignored). For L=[1,1,-1,-1]
/// this is {a1,a2} = {a3,a4}; for L=[1,-2,1] it is a1=a2=a3.
///
/// Enumeration is exhaustive; |A|^ncols is capped at 2^25.
bool avoids_linear_form(const std::vector<std::vector<Int>>& L, const IntegerSet& a,
                        const TrivialityPredicate& trivial = nullptr);

}  // namespace sidonlab::verify
