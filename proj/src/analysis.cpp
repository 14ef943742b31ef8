#include "sidonlab/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "sidonlab/constructions.hpp"

namespace sidonlab::analysis {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

RationalValue to_value(const BigRat& r) {
    RationalValue v;
    v.numerator = boost::multiprecision::numerator(r).str();
    v.denominator = boost::multiprecision::denominator(r).str();
    v.approx = static_cast<double>(r);
    return v;
}

}  // namespace

Int counting_function(const IntegerSet& a, Int n) {
    const auto& e = a.elements();
    return std::upper_bound(e.begin(), e.end(), n) - e.begin();
}

SigmaEstimate sigma_estimate(int h, Int g, Int n, const search::Config& config) {
    const Int unit = g / factorial(h);
    if (unit < 1) throw Error("sigma_estimate: needs g >= h!");
    auto r = search::max_bstar_subset(n, h, g, config);
    if (!r.exact) throw TimeBudgetExceededError("sigma_estimate: search budget exhausted");
    SigmaEstimate out;
    out.h = h;
    out.g = g;
    out.n = n;
    out.r = r.optimum;
    out.ratio = static_cast<double>(r.optimum) /
                std::pow(static_cast<double>(unit) * static_cast<double>(n), 1.0 / h);
    return out;
}

Int IntervalDecomposition::longest() const {
    Int best = 0;
    for (const auto& [s, e] : intervals) best = std::max(best, e - s + 1);
    return best;
}

IntervalDecomposition sumset_intervals(const IntegerSet& a) {
    IntervalDecomposition out;
    if (a.empty()) return out;
    std::vector<char> hit(static_cast<std::size_t>(2 * a.max() + 1), 0);
    const auto& e = a.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j) hit[e[i] + e[j]] = 1;
    const Int limit = 2 * a.max();
    for (Int v = 2 * a.min(); v <= limit; ++v) {
        if (!hit[v]) continue;
        Int end = v;
        while (end + 1 <= limit && hit[end + 1]) ++end;
        out.intervals.emplace_back(v, end);
        v = end;
    }
    return out;
}

DistributionReport residue_distribution(const IntegerSet& a, Int m) {
    if (m < 2) throw Error("residue_distribution: m must be >= 2");
    DistributionReport out;
    out.modulus = m;
    out.class_counts.assign(static_cast<std::size_t>(m), 0);
    for (Int x : a.elements()) out.class_counts[x % m] += 1;
    const double mean = static_cast<double>(a.size()) / static_cast<double>(m);
    for (Int c : out.class_counts)
        out.discrepancy = std::max(out.discrepancy, std::abs(static_cast<double>(c) - mean));
    if (m == 2) out.parity_gap = std::abs(out.class_counts[0] - out.class_counts[1]);
    return out;
}

int compare_rational(const RationalValue& a, const RationalValue& b) {
    BigRat ra(BigInt(a.numerator), BigInt(a.denominator));
    BigRat rb(BigInt(b.numerator), BigInt(b.denominator));
    if (ra < rb) return -1;
    if (rb < ra) return 1;
    return 0;
}

ReciprocalSum reciprocal_sum(const IntegerSet& a,
                             const std::vector<std::size_t>& prefix_lengths) {
    if (a.empty()) throw Error("reciprocal_sum: set is empty");
    if (a.min() < 1) throw ZeroElementError("reciprocal_sum: elements must be >= 1");

    std::vector<std::size_t> wanted = prefix_lengths;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    ReciprocalSum out;
    BigRat sum = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < a.size() && next < wanted.size(); ++i) {
        sum += BigRat(1, a.elements()[i]);
        if (i + 1 == wanted[next]) {
            out.partial_sums.emplace_back(i + 1, to_value(sum));
            ++next;
        }
    }
    if (next < wanted.size())
        throw Error("reciprocal_sum: prefix length exceeds set size");
    return out;
}

std::vector<std::pair<int, double>> greedy_growth_data(int h, Int g, const IntegerSet& seeds,
                                                       int count) {
    if (count < 2) throw Error("greedy_growth_data: count must be >= 2");
    auto seq = constructions::greedy(h, g, seeds, count);
    std::vector<std::pair<int, double>> points;
    for (int k = 2; k <= count; ++k) {
        double gamma = static_cast<double>(seq.elements()[k - 1]);
        points.emplace_back(k, std::log(gamma) / std::log(static_cast<double>(k)));
    }
    return points;
}

}  // namespace sidonlab::analysis
