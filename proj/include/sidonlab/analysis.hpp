#pragma once

#include <string>
#include <utility>

#include "sidonlab/search.hpp"
#include "sidonlab/sets.hpp"

namespace sidonlab::analysis {

/// A(n) = #(A n [n]).
Int counting_function(const IntegerSet& a, Int n);

/// Finite-n density ratio R_h(g,n) / (floor(g/h!) * n)^(1/h).
struct SigmaEstimate {
    int h;
    Int g;
    Int n;
    Int r;
    double ratio;
};
SigmaEstimate sigma_estimate(int h, Int g, Int n, const search::Config& config = {});

/// Maximal runs of consecutive integers in A+A.
struct IntervalDecomposition {
    std::vector<std::pair<Int, Int>> intervals;  // inclusive [start, end]
    Int count() const { return static_cast<Int>(intervals.size()); }
    Int longest() const;
};
IntervalDecomposition sumset_intervals(const IntegerSet& a);

/// Exact residue-class counts of A mod m.
struct DistributionReport {
    Int modulus = 2;
    std::vector<Int> class_counts;
    double discrepancy = 0.0;            // max |count - |A|/m|
    std::optional<Int> parity_gap;       // |r0 - r1| when m = 2
};
DistributionReport residue_distribution(const IntegerSet& a, Int m);

/// Exact rational value with a float rendering.
struct RationalValue {
    std::string numerator = "0";
    std::string denominator = "1";
    double approx = 0.0;
};

/// Exact comparison (-1, 0, 1) of two rational values.
int compare_rational(const RationalValue& a, const RationalValue& b);

/// Partial sums of sum(1/a) over prefixes of A. Elements must be >= 1.
struct ReciprocalSum {
    std::vector<std::pair<std::size_t, RationalValue>> partial_sums;
};
ReciprocalSum reciprocal_sum(const IntegerSet& a, const std::vector<std::size_t>& prefix_lengths);

/// Points (k, log_k(gamma_k)) for the greedy B*_h[g] sequence; k starts at 2.
std::vector<std::pair<int, double>> greedy_growth_data(int h, Int g, const IntegerSet& seeds,
                                                       int count);

}  // namespace sidonlab::analysis
