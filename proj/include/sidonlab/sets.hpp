#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidonlab/errors.hpp"

namespace sidonlab {

using Int = long long;

/// Sorted, duplicate-free finite set of nonnegative integers.
class IntegerSet {
public:
    IntegerSet() = default;
    /// Normalizes (sorts, removes duplicates); rejects negative elements.
    explicit IntegerSet(std::vector<Int> elems);

    const std::vector<Int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    Int min() const { return elems_.front(); }
    Int max() const { return elems_.back(); }
    bool contains(Int x) const;

    bool operator==(const IntegerSet&) const = default;

private:
    std::vector<Int> elems_;
};

/// Subset of Z/n, stored reduced to [0, n) and sorted.
class ModularSet {
public:
    ModularSet() : modulus_(1) {}
    /// Elements must already lie in [0, modulus); throws ElementOutOfRangeError otherwise.
    ModularSet(Int modulus, std::vector<Int> elems);
    /// Reduces arbitrary integers mod `modulus` first.
    static ModularSet reduced(Int modulus, const std::vector<Int>& elems);

    Int modulus() const { return modulus_; }
    const std::vector<Int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(Int x) const;

    bool operator==(const ModularSet&) const = default;

private:
    Int modulus_;
    std::vector<Int> elems_;
};

/// Binds a constructed set to its claimed B*_h[g] guarantee.
struct Certificate {
    int h = 2;
    Int g = 2;
    std::optional<Int> modulus;  // present for modular sets
    std::string construction;    // e.g. "ruzsa(p=13,theta=2,k=1)"
};

struct CertifiedIntegerSet {
    IntegerSet set;
    Certificate cert;
};

struct CertifiedModularSet {
    ModularSet set;
    Certificate cert;
};

Int factorial(int h);

}  // namespace sidonlab
