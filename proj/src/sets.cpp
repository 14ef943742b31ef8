#include "sidonlab/sets.hpp"

#include <algorithm>

namespace sidonlab {

IntegerSet::IntegerSet(std::vector<Int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 0)
        throw ElementOutOfRangeError("IntegerSet elements must be nonnegative");
}

bool IntegerSet::contains(Int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

ModularSet::ModularSet(Int modulus, std::vector<Int> elems)
    : modulus_(modulus), elems_(std::move(elems)) {
    if (modulus_ < 1) throw ElementOutOfRangeError("modulus must be >= 1");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (Int e : elems_)
        if (e < 0 || e >= modulus_)
            throw ElementOutOfRangeError("element " + std::to_string(e) +
                                         " outside [0, " + std::to_string(modulus_) + ")");
}

ModularSet ModularSet::reduced(Int modulus, const std::vector<Int>& elems) {
    if (modulus < 1) throw ElementOutOfRangeError("modulus must be >= 1");
    std::vector<Int> r;
    r.reserve(elems.size());
    for (Int e : elems) r.push_back(((e % modulus) + modulus) % modulus);
    return ModularSet(modulus, std::move(r));
}

bool ModularSet::contains(Int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

Int factorial(int h) {
    Int f = 1;
    for (int i = 2; i <= h; ++i) f *= i;
    return f;
}

}  // namespace sidonlab
