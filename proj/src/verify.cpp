#include "sidonlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sidonlab::verify {

namespace {

constexpr Int kDenseRangeCap = Int(1) << 22;
constexpr Int kLinearFormCap = Int(1) << 25;

void check_order(int h) {
    if (h < 2) throw Error("convolution order h must be >= 2");
}

// Dense h-fold self-convolution of the indicator vector of `a` over
// [0, h*max]. Only used when the range is small enough.
std::vector<Int> dense_convolution(const std::vector<Int>& a, int h, Int range) {
    std::vector<Int> cur(range + 1, 0);
    for (Int x : a) cur[x] = 1;
    for (int j = 2; j <= h; ++j) {
        std::vector<Int> next(range + 1, 0);
        for (Int s = 0; s <= range; ++s) {
            if (cur[s] == 0) continue;
            for (Int x : a) {
                if (s + x > range) break;
                next[s + x] += cur[s];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::map<Int, Int> map_convolution(const std::vector<Int>& a, int h) {
    std::map<Int, Int> cur;
    for (Int x : a) cur[x] = 1;
    for (int j = 2; j <= h; ++j) {
        std::map<Int, Int> next;
        for (const auto& [s, c] : cur)
            for (Int x : a) next[s + x] += c;
        cur = std::move(next);
    }
    return cur;
}

std::vector<Int> modular_convolution(const std::vector<Int>& a, int h, Int n) {
    std::vector<Int> cur(n, 0);
    for (Int x : a) cur[x] += 1;
    for (int j = 2; j <= h; ++j) {
        std::vector<Int> next(n, 0);
        for (Int s = 0; s < n; ++s) {
            if (cur[s] == 0) continue;
            for (Int x : a) {
                Int t = s + x;
                if (t >= n) t -= n;
                next[t] += cur[s];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Int gcd_ll(Int a, Int b) { return std::gcd(a, b); }

}  // namespace

Int CountProfile::max_count() const {
    Int m = 0;
    for (const auto& [k, c] : counts) m = std::max(m, c);
    return m;
}

Int CountProfile::worst_value() const {
    Int m = max_count();
    if (m == 0) return 0;
    for (const auto& [k, c] : counts)
        if (c == m) return k;
    return 0;
}

Int CountProfile::total() const {
    Int t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

CountProfile convolution_counts(const IntegerSet& a, int h) {
    check_order(h);
    CountProfile p;
    p.h = h;
    if (a.empty()) return p;
    Int range = h * a.max();
    if (range <= kDenseRangeCap) {
        auto dense = dense_convolution(a.elements(), h, range);
        for (Int k = 0; k <= range; ++k)
            if (dense[k] != 0) p.counts[k] = dense[k];
    } else {
        p.counts = map_convolution(a.elements(), h);
    }
    return p;
}

CountProfile convolution_counts(const ModularSet& a, int h) {
    check_order(h);
    CountProfile p;
    p.h = h;
    p.modulus = a.modulus();
    if (a.empty()) return p;
    auto dense = modular_convolution(a.elements(), h, a.modulus());
    for (Int k = 0; k < a.modulus(); ++k)
        if (dense[k] != 0) p.counts[k] = dense[k];
    return p;
}

CountProfile correlation_counts(const IntegerSet& a) {
    CountProfile p;
    p.h = 2;
    for (Int x : a.elements())
        for (Int y : a.elements()) p.counts[x - y] += 1;
    return p;
}

CountProfile correlation_counts(const ModularSet& a) {
    CountProfile p;
    p.h = 2;
    p.modulus = a.modulus();
    const Int n = a.modulus();
    for (Int x : a.elements())
        for (Int y : a.elements()) p.counts[((x - y) % n + n) % n] += 1;
    return p;
}

bool is_bstar(const IntegerSet& a, int h, Int g) {
    check_order(h);
    if (g < 1) throw Error("bound g must be >= 1");
    if (a.empty()) return true;
    if (h == 2) {
        // Ordered pair counts, built from unordered pairs with early exit.
        Int range = 2 * a.max();
        if (range <= kDenseRangeCap) {
            std::vector<Int> cnt(range + 1, 0);
            const auto& e = a.elements();
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i; j < e.size(); ++j) {
                    Int s = e[i] + e[j];
                    cnt[s] += (i == j) ? 1 : 2;
                    if (cnt[s] > g) return false;
                }
            return true;
        }
    }
    return convolution_counts(a, h).max_count() <= g;
}

bool is_bstar_mod(const ModularSet& a, int h, Int g) {
    check_order(h);
    if (g < 1) throw Error("bound g must be >= 1");
    if (a.empty()) return true;
    if (h == 2) {
        const Int n = a.modulus();
        std::vector<Int> cnt(n, 0);
        const auto& e = a.elements();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i; j < e.size(); ++j) {
                Int s = e[i] + e[j];
                if (s >= n) s -= n;
                cnt[s] += (i == j) ? 1 : 2;
                if (cnt[s] > g) return false;
            }
        return true;
    }
    return convolution_counts(a, h).max_count() <= g;
}

bool is_bstar_mod(const std::vector<Int>& elems, int h, Int g, Int n) {
    return is_bstar_mod(ModularSet(n, elems), h, g);
}

std::pair<bool, bool> sidon_iff_distinct_differences(const IntegerSet& a) {
    bool diffs_ok = true;
    auto corr = correlation_counts(a);
    for (const auto& [k, c] : corr.counts)
        if (k != 0 && c > 1) {
            diffs_ok = false;
            break;
        }
    bool sums_ok = is_bstar(a, 2, 2);
    return {diffs_ok, sums_ok};
}

CanonicalForm canonical_form(const ModularSet& a) {
    const Int n = a.modulus();
    CanonicalForm best;
    best.representative = a;
    best.k = 1;
    best.r = 0;
    if (n == 1 || a.empty()) return best;

    bool have = false;
    std::vector<Int> image(a.size());
    for (Int k = 1; k < n; ++k) {
        if (gcd_ll(k, n) != 1) continue;
        // The least sorted image contains 0, so only translations that map
        // some element to 0 can win.
        for (Int e : a.elements()) {
            Int r = ((-k * e) % n + n) % n;
            for (std::size_t i = 0; i < a.size(); ++i)
                image[i] = (k * a.elements()[i] + r) % n;
            std::sort(image.begin(), image.end());
            if (!have || image < best.representative.elements()) {
                best.representative = ModularSet(n, image);
                best.k = k;
                best.r = r;
                have = true;
            }
        }
    }
    return best;
}

bool avoids_linear_form(const std::vector<std::vector<Int>>& L, const IntegerSet& a,
                        const TrivialityPredicate& trivial) {
    if (L.empty() || L[0].empty()) throw Error("linear form needs at least one row");
    const std::size_t rows = L.size();
    const std::size_t ncols = L[0].size();
    for (const auto& row : L)
        if (row.size() != ncols) throw Error("ragged linear form matrix");
    if (a.empty()) return true;

    double space = std::pow(static_cast<double>(a.size()), static_cast<double>(ncols));
    if (space > static_cast<double>(kLinearFormCap))
        throw CapExceededError("linear form enumeration exceeds 2^25 tuples");

    // Column vectors and their pairing under negation, for the default
    // triviality rule.
    std::vector<std::vector<Int>> cols(ncols, std::vector<Int>(rows));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) cols[c][r] = L[r][c];

    bool ones_solve = true;
    for (const auto& row : L) {
        Int s = std::accumulate(row.begin(), row.end(), Int(0));
        if (s != 0) {
            ones_solve = false;
            break;
        }
    }

    auto default_trivial = [&](const std::vector<Int>& sol) {
        if (ones_solve &&
            std::all_of(sol.begin(), sol.end(), [&](Int v) { return v == sol[0]; }))
            return true;
        // Group coordinates by column vector; require multiset equality
        // between each +v group and its -v group.
        std::map<std::vector<Int>, std::vector<Int>> groups;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (std::all_of(cols[c].begin(), cols[c].end(), [](Int x) { return x == 0; }))
                continue;
            groups[cols[c]].push_back(sol[c]);
        }
        for (auto& [v, vals] : groups) std::sort(vals.begin(), vals.end());
        for (const auto& [v, vals] : groups) {
            std::vector<Int> nv(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) nv[i] = -v[i];
            auto it = groups.find(nv);
            if (it == groups.end()) return false;  // unmatched group
            if (v < nv) continue;                  // compared once, from the larger side
            if (it->second != vals) return false;
        }
        return true;
    };

    const auto& elems = a.elements();
    std::vector<std::size_t> idx(ncols, 0);
    std::vector<Int> sol(ncols, elems[0]);
    while (true) {
        bool solves = true;
        for (std::size_t r = 0; r < rows && solves; ++r) {
            Int s = 0;
            for (std::size_t c = 0; c < ncols; ++c) s += L[r][c] * sol[c];
            solves = (s == 0);
        }
        if (solves) {
            bool is_trivial = trivial ? trivial(sol) : default_trivial(sol);
            if (!is_trivial) return false;
        }
        // odometer
        std::size_t pos = 0;
        while (pos < ncols) {
            if (++idx[pos] < elems.size()) {
                sol[pos] = elems[idx[pos]];
                break;
            }
            idx[pos] = 0;
            sol[pos] = elems[0];
            ++pos;
        }
        if (pos == ncols) break;
    }
    return true;
}

}  // namespace sidonlab::verify
