#pragma once

#include <cstdint>

#include "sidonlab/finite_field.hpp"
#include "sidonlab/sets.hpp"

namespace sidonlab::constructions {

/// Extends `seeds` greedily to `count` elements: repeatedly append the
/// least m above the current maximum that keeps the set B*_h[g].
/// Deterministic. Throws BadSeedError if the seeds themselves are not
/// B*_h[g].
IntegerSet greedy(int h, Int g, const IntegerSet& seeds, std::size_t count);

/// Ruzsa's Sidon set mod p^2-p: the residues a_t with a_t = t (mod p-1)
/// and a_t = k*theta^t (mod p), 1 <= t <= p-1. Requires p an odd prime,
/// theta a primitive root mod p, k in [1, p-1]. Certificate (2, 2, p^2-p).
CertifiedModularSet ruzsa_set(Int p, Int theta, Int k);

/// Union of Ruzsa rows over k in K; certificate (2, 2|K|^2, p^2-p).
CertifiedModularSet ruzsa_union(Int p, Int theta, const std::vector<Int>& K);

/// Bose set in Z/(q^h - 1): {a : theta^a - k*theta in GF(q)} where the
/// field is GF(q^h), theta primitive, k a nonzero element of the subfield
/// GF(q). Always has exactly q elements. Certificate (h, h!, q^h-1).
CertifiedModularSet bose_set(int h, const gf::Field& field, const gf::FieldElement& theta,
                             const gf::FieldElement& k);

/// Convenience: GF(q^h) with the default (lexicographically least) modulus
/// and least primitive theta; k is a packed element index (default 1, the
/// field's one).
CertifiedModularSet bose_set(int h, Int q, Int k_index = 1);

/// Union of Bose sets over k in K (h = 2); certificate (2, 2|K|^2, q^2-1).
CertifiedModularSet bose_union(const gf::Field& field, const gf::FieldElement& theta,
                               const std::vector<gf::FieldElement>& K);

/// Singer's perfect difference set mod (q^{h+1}-1)/(q-1): congruence
/// classes meeting T = {0} u {a : theta^a - theta in GF(q)} over GF(q^{h+1}).
/// This is the kvec = <1,0,...,0> case; q+1 elements, certificate
/// (h, h!, (q^{h+1}-1)/(q-1)).
CertifiedModularSet singer_set(int h, const gf::Field& field, const gf::FieldElement& theta);

/// Convenience: default field and theta for GF(q^{h+1}).
CertifiedModularSet singer_set(int h, Int q);

/// General kvec variant: T = {0} u {a : theta^a - sum k_i theta^i in GF(q)}.
/// No certified bound is attached (the survey does not pin one for general
/// kvec), so callers must verify the property they need.
ModularSet singer_set_general(int h, const gf::Field& field, const gf::FieldElement& theta,
                              const std::vector<gf::FieldElement>& kvec);

/// Erdos-Turan quadratic-residue set {2pk + (k^2 mod p) : 1 <= k < p},
/// Sidon inside [2p+1, 2p(p-1)+1]. Certificate (2, 2).
CertifiedIntegerSet erdos_turan_set(Int p);

/// Lindstrom interleaving m*A + {0..m-1}. Requires A certified B_h
/// (g = h!), verified on entry. Certificate (h, h! * m^{h-1}).
CertifiedIntegerSet interleave(const CertifiedIntegerSet& a, Int m);

/// CRT product of a B*_2[g] set mod x and a B*_2[f] set mod y with
/// gcd(x, y) = 1; |A||B| elements mod xy, certificate (2, g*f, xy).
CertifiedModularSet crt_combine(const CertifiedModularSet& a, const CertifiedModularSet& b);

/// Erdos-Renyi style random sample: each n in [1, N] kept independently
/// with probability n^(-1/2-epsilon). `offending_sums` lists the n whose
/// unordered-pair count f(n) exceeds g/2.
struct RandomBstarSample {
    IntegerSet sample;
    std::vector<Int> offending_sums;
    Int g = 0;
};

/// Requires epsilon > 1/(g+1). Reproducible for a fixed seed.
RandomBstarSample random_bstar_set(Int g, double epsilon, Int N, std::uint64_t seed);

/// Removes elements (largest first) until no sum has f(n) > g/2; the result
/// is a B*_2[g] set.
IntegerSet delete_offenders(const RandomBstarSample& sample);

/// Decomposes a prime power q = p^a; throws if q is not one.
std::pair<Int, int> factor_prime_power(Int q);

/// Membership mask for the order-q subfield of `field` (indexed by packed
/// element index).
std::vector<std::uint8_t> subfield_mask(const gf::Field& field, Int subfield_order);

}  // namespace sidonlab::constructions
