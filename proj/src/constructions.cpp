#include "sidonlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "sidonlab/verify.hpp"

namespace sidonlab::constructions {

namespace {

Int binom(int n, int k) {
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Int mod_pow(Int base, Int exp, Int mod) {
    Int r = 1 % mod;
    base %= mod;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
    }
    return r;
}

// Multiplicative order of theta mod p equals p-1.
bool is_primitive_root(Int theta, Int p) {
    theta = ((theta % p) + p) % p;
    if (theta == 0) return false;
    Int n = p - 1;
    std::vector<Int> fs;
    Int m = n;
    for (Int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fs.push_back(m);
    for (Int r : fs)
        if (mod_pow(theta, n / r, p) == 1) return false;
    return true;
}

// Incremental convolution state for the greedy construction: cnt[j] holds
// the ordered j-fold sum counts of the current set, dense over [0, range].
class GreedyState {
public:
    GreedyState(int h, Int g) : h_(h), g_(g), cnt_(h + 1) {}

    const std::vector<Int>& elements() const { return elems_; }

    bool can_add(Int m) {
        ensure_range(h_ * m);
        if (h_ == 2) {
            if (cnt_[2][2 * m] + 1 > g_) return false;
            for (Int a : elems_)
                if (cnt_[2][a + m] + 2 > g_) return false;
            return true;
        }
        // Added mass at k: sum_i C(h,i) * cnt[h-i][k - i*m], cnt[0] = [k=0].
        touched_.clear();
        bool ok = true;
        for (int i = 1; i <= h_ && ok; ++i) {
            const Int c = binom(h_, i);
            if (i == h_) {
                ok = bump(h_ * m, c);
                break;
            }
            const auto& lower = cnt_[h_ - i];
            for (Int s = 0; s < static_cast<Int>(lower.size()) && ok; ++s) {
                if (lower[s] == 0) continue;
                ok = bump(s + i * m, c * lower[s]);
            }
        }
        for (Int k : touched_) delta_[k] = 0;
        return ok;
    }

    void add(Int m) {
        ensure_range(h_ * m);
        // Update orders top-down so every lower-order array is still "old".
        for (int j = h_; j >= 1; --j) {
            for (int i = j; i >= 1; --i) {
                const Int c = binom(j, i);
                if (i == j) {
                    cnt_[j][j * m] += c;
                    continue;
                }
                const auto& lower = cnt_[j - i];
                for (Int s = 0; s < static_cast<Int>(lower.size()); ++s)
                    if (lower[s] != 0) cnt_[j][s + i * m] += c * lower[s];
            }
        }
        elems_.push_back(m);
    }

private:
    void ensure_range(Int range) {
        if (static_cast<Int>(cnt_[h_].size()) > range) return;
        Int cap = std::max<Int>(range + 1, 64);
        cap += cap / 2;
        for (int j = 1; j <= h_; ++j) cnt_[j].resize(cap, 0);
        if (static_cast<Int>(delta_.size()) < cap) delta_.resize(cap, 0);
    }

    bool bump(Int k, Int amount) {
        if (delta_[k] == 0) touched_.push_back(k);
        delta_[k] += amount;
        return cnt_[h_][k] + delta_[k] <= g_;
    }

    int h_;
    Int g_;
    std::vector<std::vector<Int>> cnt_;
    std::vector<Int> delta_;
    std::vector<Int> touched_;
    std::vector<Int> elems_;
};

Int crt_pair(Int a, Int x, Int b, Int y) {
    // Solve z = a (mod x), z = b (mod y) for coprime x, y via Bezout.
    Int g = 0, u = 0, v = 0;
    {
        Int r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            Int q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
        }
        g = r0, u = s0, v = t0;
    }
    if (g != 1) throw NotCoprimeError("moduli are not coprime");
    const Int n = x * y;
    // z = a*v*y + b*u*x mod n
    Int z = (a % n) * ((v % n + n) % n) % n * (y % n) % n;
    z = (z + (b % n) * ((u % n + n) % n) % n * (x % n)) % n;
    return ((z % n) + n) % n;
}

}  // namespace

IntegerSet greedy(int h, Int g, const IntegerSet& seeds, std::size_t count) {
    if (h < 2) throw Error("greedy: h must be >= 2");
    if (g < 1) throw Error("greedy: g must be >= 1");
    if (count < seeds.size()) throw Error("greedy: count below seed size");
    if (!verify::is_bstar(seeds, h, g)) throw BadSeedError("seed set is not B*_h[g]");

    GreedyState state(h, g);
    for (Int a : seeds.elements()) state.add(a);
    Int m = seeds.empty() ? 0 : seeds.max();
    while (state.elements().size() < count) {
        ++m;
        while (!state.can_add(m)) ++m;
        state.add(m);
    }
    return IntegerSet(state.elements());
}

CertifiedModularSet ruzsa_set(Int p, Int theta, Int k) {
    if (!gf::is_prime(p) || p < 3) throw NotPrimeError(p);
    theta = ((theta % p) + p) % p;
    if (!is_primitive_root(theta, p))
        throw NotPrimitiveError("theta is not a primitive root mod p");
    if (k < 1 || k >= p) throw ElementOutOfRangeError("k must lie in [1, p-1]");

    const Int n = p * p - p;
    std::vector<Int> elems;
    elems.reserve(p - 1);
    Int theta_t = 1;
    for (Int t = 1; t <= p - 1; ++t) {
        theta_t = theta_t * theta % p;
        Int x = k * theta_t % p;
        elems.push_back(crt_pair(t, p - 1, x, p) % n);
    }
    CertifiedModularSet out;
    out.set = ModularSet(n, std::move(elems));
    out.cert = {2, 2, n,
                "ruzsa(p=" + std::to_string(p) + ",theta=" + std::to_string(theta) +
                    ",k=" + std::to_string(k) + ")"};
    return out;
}

CertifiedModularSet ruzsa_union(Int p, Int theta, const std::vector<Int>& K) {
    if (K.empty()) throw Error("ruzsa_union: K must be nonempty");
    std::set<Int> uniq(K.begin(), K.end());
    std::vector<Int> elems;
    for (Int k : uniq) {
        auto row = ruzsa_set(p, theta, k);
        elems.insert(elems.end(), row.set.elements().begin(), row.set.elements().end());
    }
    const Int n = p * p - p;
    const Int kk = static_cast<Int>(uniq.size());
    CertifiedModularSet out;
    out.set = ModularSet(n, std::move(elems));
    out.cert = {2, 2 * kk * kk, n,
                "ruzsa_union(p=" + std::to_string(p) + ",|K|=" + std::to_string(kk) + ")"};
    return out;
}

std::pair<Int, int> factor_prime_power(Int q) {
    if (q < 2) throw Error("not a prime power: " + std::to_string(q));
    Int p = q;
    for (Int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int a = 0;
    Int m = q;
    while (m % p == 0) {
        m /= p;
        ++a;
    }
    if (m != 1) throw Error("not a prime power: " + std::to_string(q));
    return {p, a};
}

std::vector<std::uint8_t> subfield_mask(const gf::Field& field, Int subfield_order) {
    const Int Q = field.order();
    if (subfield_order < 2 || (Q - 1) % (subfield_order - 1) != 0)
        throw Error("invalid subfield order");
    std::vector<std::uint8_t> mask(Q, 0);
    mask[0] = 1;  // zero element
    const auto prim = field.find_primitive();
    const auto mu = field.pow(prim, (Q - 1) / (subfield_order - 1));
    auto cur = field.one();
    for (Int j = 0; j < subfield_order - 1; ++j) {
        mask[field.index_of(cur)] = 1;
        cur = field.mul(cur, mu);
    }
    return mask;
}

CertifiedModularSet bose_set(int h, const gf::Field& field, const gf::FieldElement& theta,
                             const gf::FieldElement& k) {
    if (h < 2) throw Error("bose_set: h must be >= 2");
    if (field.degree() % h != 0)
        throw Error("bose_set: field degree not divisible by h");
    const Int p = field.characteristic();
    Int q = 1;
    for (int i = 0; i < field.degree() / h; ++i) q *= p;
    const Int Q = field.order();
    if (!field.is_primitive(theta)) throw NotPrimitiveError("theta is not primitive");

    auto mask = subfield_mask(field, q);
    if (k.is_zero() || !mask[field.index_of(k)])
        throw ElementOutOfRangeError("k must be a nonzero element of GF(q)");

    const auto k_theta = field.mul(k, theta);
    std::vector<Int> elems;
    elems.reserve(q);
    auto power = field.one();
    for (Int a = 1; a <= Q - 1; ++a) {
        power = field.mul(power, theta);
        if (mask[field.index_of(field.sub(power, k_theta))]) elems.push_back(a);
    }
    if (static_cast<Int>(elems.size()) != q || (!elems.empty() && elems.back() >= Q - 1))
        throw Error("bose_set: internal consistency check failed");

    CertifiedModularSet out;
    out.set = ModularSet(Q - 1, std::move(elems));
    out.cert = {h, factorial(h), Q - 1,
                "bose(h=" + std::to_string(h) + ",q=" + std::to_string(q) +
                    ",k_idx=" + std::to_string(field.index_of(k)) + ")"};
    return out;
}

CertifiedModularSet bose_set(int h, Int q, Int k_index) {
    auto [p, a] = factor_prime_power(q);
    auto field = gf::Field::make(p, a * h);
    return bose_set(h, field, field.find_primitive(), field.from_index(k_index));
}

CertifiedModularSet bose_union(const gf::Field& field, const gf::FieldElement& theta,
                               const std::vector<gf::FieldElement>& K) {
    if (K.empty()) throw Error("bose_union: K must be nonempty");
    std::set<Int> seen;
    std::vector<Int> elems;
    for (const auto& k : K) {
        if (!seen.insert(field.index_of(k)).second) continue;
        auto part = bose_set(2, field, theta, k);
        elems.insert(elems.end(), part.set.elements().begin(), part.set.elements().end());
    }
    const Int n = field.order() - 1;
    const Int kk = static_cast<Int>(seen.size());
    CertifiedModularSet out;
    out.set = ModularSet(n, std::move(elems));
    out.cert = {2, 2 * kk * kk, n, "bose_union(|K|=" + std::to_string(kk) + ")"};
    return out;
}

namespace {

ModularSet singer_raw(int h, const gf::Field& field, const gf::FieldElement& theta,
                      const std::vector<gf::FieldElement>& kvec, Int* q_out) {
    if (h < 2) throw Error("singer_set: h must be >= 2");
    if (field.degree() % (h + 1) != 0)
        throw Error("singer_set: field degree not divisible by h+1");
    const Int p = field.characteristic();
    Int q = 1;
    for (int i = 0; i < field.degree() / (h + 1); ++i) q *= p;
    if (q_out) *q_out = q;
    const Int Q = field.order();
    if (!field.is_primitive(theta)) throw NotPrimitiveError("theta is not primitive");
    if (static_cast<int>(kvec.size()) != h)
        throw Error("singer_set: kvec must have h coordinates");

    auto mask = subfield_mask(field, q);
    auto target = field.zero();
    auto theta_i = field.one();
    for (int i = 1; i <= h; ++i) {
        theta_i = field.mul(theta_i, theta);
        target = field.add(target, field.mul(kvec[i - 1], theta_i));
    }

    const Int v = (Q - 1) / (q - 1);
    std::set<Int> classes;
    classes.insert(0);
    auto power = field.one();
    for (Int a = 1; a <= Q - 1; ++a) {
        power = field.mul(power, theta);
        if (mask[field.index_of(field.sub(power, target))]) classes.insert(a % v);
    }
    return ModularSet(v, std::vector<Int>(classes.begin(), classes.end()));
}

}  // namespace

CertifiedModularSet singer_set(int h, const gf::Field& field, const gf::FieldElement& theta) {
    std::vector<gf::FieldElement> kvec(h, field.zero());
    kvec[0] = field.one();
    Int q = 0;
    auto set = singer_raw(h, field, theta, kvec, &q);
    if (static_cast<Int>(set.size()) != q + 1)
        throw Error("singer_set: internal consistency check failed");
    CertifiedModularSet out;
    out.set = std::move(set);
    out.cert = {h, factorial(h), out.set.modulus(),
                "singer(h=" + std::to_string(h) + ",q=" + std::to_string(q) + ")"};
    return out;
}

CertifiedModularSet singer_set(int h, Int q) {
    auto [p, a] = factor_prime_power(q);
    auto field = gf::Field::make(p, a * (h + 1));
    return singer_set(h, field, field.find_primitive());
}

ModularSet singer_set_general(int h, const gf::Field& field, const gf::FieldElement& theta,
                              const std::vector<gf::FieldElement>& kvec) {
    return singer_raw(h, field, theta, kvec, nullptr);
}

CertifiedIntegerSet erdos_turan_set(Int p) {
    if (!gf::is_prime(p) || p < 3) throw NotPrimeError(p);
    std::vector<Int> elems;
    elems.reserve(p - 1);
    for (Int k = 1; k < p; ++k) {
        Int sq = k * k % p;  // k^2 mod p is never 0 for 1 <= k < p
        elems.push_back(2 * p * k + sq);
    }
    CertifiedIntegerSet out;
    out.set = IntegerSet(std::move(elems));
    out.cert = {2, 2, std::nullopt, "erdos_turan(p=" + std::to_string(p) + ")"};
    return out;
}

CertifiedIntegerSet interleave(const CertifiedIntegerSet& a, Int m) {
    if (m < 1) throw Error("interleave: m must be >= 1");
    const int h = a.cert.h;
    if (a.cert.modulus || a.cert.g != factorial(h) || !verify::is_bstar(a.set, h, a.cert.g))
        throw BadCertificateError("interleave requires an integer B_h set (g = h!)");

    std::vector<Int> elems;
    elems.reserve(a.set.size() * m);
    for (Int x : a.set.elements())
        for (Int b = 0; b < m; ++b) elems.push_back(m * x + b);

    Int g = factorial(h);
    for (int i = 0; i < h - 1; ++i) g *= m;
    CertifiedIntegerSet out;
    out.set = IntegerSet(std::move(elems));
    out.cert = {h, g, std::nullopt, "interleave(m=" + std::to_string(m) + ")"};
    return out;
}

CertifiedModularSet crt_combine(const CertifiedModularSet& a, const CertifiedModularSet& b) {
    if (a.cert.h != 2 || b.cert.h != 2) throw Error("crt_combine: certificates must be h=2");
    const Int x = a.set.modulus(), y = b.set.modulus();
    if (std::gcd(x, y) != 1) throw NotCoprimeError("crt_combine: moduli share a factor");

    std::vector<Int> elems;
    elems.reserve(a.set.size() * b.set.size());
    for (Int u : a.set.elements())
        for (Int v : b.set.elements()) elems.push_back(crt_pair(u, x, v, y));

    CertifiedModularSet out;
    out.set = ModularSet(x * y, std::move(elems));
    if (out.set.size() != a.set.size() * b.set.size())
        throw Error("crt_combine: CRT images collided");
    out.cert = {2, a.cert.g * b.cert.g, x * y, "crt(" + a.cert.construction + " x " +
                                                   b.cert.construction + ")"};
    return out;
}

RandomBstarSample random_bstar_set(Int g, double epsilon, Int N, std::uint64_t seed) {
    if (g < 1) throw Error("random_bstar_set: g must be >= 1");
    if (N < 0) throw Error("random_bstar_set: N must be >= 0");
    if (!(epsilon > 1.0 / static_cast<double>(g + 1)))
        throw BadEpsilonError("epsilon must exceed 1/(g+1)");

    std::mt19937_64 rng(seed);
    std::vector<Int> elems;
    for (Int n = 1; n <= N; ++n) {
        double pn = std::pow(static_cast<double>(n), -0.5 - epsilon);
        // Explicit 53-bit uniform draw: implementation-independent.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < pn) elems.push_back(n);
    }

    RandomBstarSample out;
    out.sample = IntegerSet(std::move(elems));
    out.g = g;
    std::map<Int, Int> f;  // unordered-pair counts, k <= n/2
    const auto& e = out.sample.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j) f[e[i] + e[j]] += 1;
    for (const auto& [n, cnt] : f)
        if (2 * cnt > g) out.offending_sums.push_back(n);
    return out;
}

IntegerSet delete_offenders(const RandomBstarSample& sample) {
    const Int g = sample.g;
    std::vector<Int> elems = sample.sample.elements();
    while (true) {
        std::map<Int, Int> f;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i; j < elems.size(); ++j) f[elems[i] + elems[j]] += 1;
        std::vector<Int> offending;
        for (const auto& [n, cnt] : f)
            if (2 * cnt > g) offending.push_back(n);
        if (offending.empty()) break;
        // Remove the largest element participating in any offending sum.
        Int victim = -1;
        for (auto it = elems.rbegin(); it != elems.rend() && victim < 0; ++it)
            for (Int n : offending) {
                Int partner = n - *it;
                if (partner >= 0 && std::binary_search(elems.begin(), elems.end(), partner)) {
                    victim = *it;
                    break;
                }
            }
        elems.erase(std::remove(elems.begin(), elems.end(), victim), elems.end());
    }
    return IntegerSet(std::move(elems));
}

}  // namespace sidonlab::constructions
