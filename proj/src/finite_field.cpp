#include "sidonlab/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace sidonlab::gf {

namespace {

constexpr Int kOrderCap = Int(1) << 24;
constexpr Int kDenseLogCap = Int(1) << 20;

// Polynomials over GF(p) as coefficient vectors, constant term first,
// no trailing zeros (zero polynomial = empty vector).
using Poly = std::vector<Int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f divided by monic g.
Poly poly_mod(Poly f, const Poly& g, Int p) {
    trim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg) {
        const Int c = f.back();
        const int shift = static_cast<int>(f.size()) - 1 - dg;
        if (c != 0) {
            for (int i = 0; i <= dg; ++i) {
                Int& fi = f[i + shift];
                fi = ((fi - c * g[i]) % p + p) % p;
            }
        }
        f.pop_back();
        trim(f);
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, Int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> fs;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible(Int p, const std::vector<Int>& poly) {
    Poly f = poly;
    trim(f);
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // A reducible polynomial has a monic factor of degree <= deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        Int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (Int idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            Int t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

namespace detail {

struct FieldImpl {
    Int p = 0;
    int e = 0;
    Int order = 0;
    Poly modulus;  // length e+1, monic

    std::vector<Int> order_prime_factors;  // of order-1

    mutable std::mutex cache_mutex;
    mutable std::vector<Int> primitive_coeffs;  // empty until computed
    mutable std::unordered_map<Int, std::vector<int32_t>> log_tables;  // base index -> table
};

}  // namespace detail

using detail::FieldImpl;

namespace {

std::shared_ptr<FieldImpl> make_impl(Int p, int e, Poly modulus) {
    auto impl = std::make_shared<FieldImpl>();
    impl->p = p;
    impl->e = e;
    impl->order = 1;
    for (int i = 0; i < e; ++i) impl->order *= p;
    impl->modulus = std::move(modulus);
    impl->order_prime_factors = prime_factors(impl->order - 1);
    return impl;
}

void check_element(const FieldImpl& impl, const FieldElement& a) {
    if (a.coeffs().size() != static_cast<std::size_t>(impl.e))
        throw FieldMismatchError();
}

void check_same_field(const FieldImpl& impl, const FieldElement& a) {
    check_element(impl, a);
    const FieldImpl* other = a.impl().get();
    if (other && other != &impl && (other->p != impl.p || other->modulus != impl.modulus))
        throw FieldMismatchError();
}

}  // namespace

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

Field Field::make(Int p, int e) {
    if (!is_prime(p)) throw NotPrimeError(p);
    if (e < 1) throw DegreeTooLargeError("extension degree must be >= 1");
    double bits = e * std::log2(static_cast<double>(p));
    if (bits > 24.0) throw DegreeTooLargeError("field order exceeds 2^24 cap");

    Int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (Int idx = 0; idx < count; ++idx) {
        Poly f(e + 1, 0);
        Int t = idx;
        for (int i = 0; i < e; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[e] = 1;
        if (is_irreducible(p, f))
            return Field(make_impl(p, e, std::move(f)));
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

Field Field::with_modulus(Int p, const std::vector<Int>& modulus_coeffs) {
    if (!is_prime(p)) throw NotPrimeError(p);
    Poly f = modulus_coeffs;
    for (Int& c : f) c = ((c % p) + p) % p;
    trim(f);
    const int e = static_cast<int>(f.size()) - 1;
    if (e < 1) throw DegreeTooLargeError("modulus degree must be >= 1");
    if (f.back() != 1) throw Error("modulus must be monic");
    double bits = e * std::log2(static_cast<double>(p));
    if (bits > 24.0) throw DegreeTooLargeError("field order exceeds 2^24 cap");
    if (!is_irreducible(p, f)) throw Error("modulus is reducible over GF(p)");
    return Field(make_impl(p, e, std::move(f)));
}

Int Field::characteristic() const { return impl_->p; }
int Field::degree() const { return impl_->e; }
Int Field::order() const { return impl_->order; }
const std::vector<Int>& Field::modulus() const { return impl_->modulus; }

FieldElement Field::zero() const {
    return FieldElement(std::vector<Int>(impl_->e, 0), impl_);
}

FieldElement Field::one() const {
    std::vector<Int> c(impl_->e, 0);
    c[0] = 1;
    return FieldElement(std::move(c), impl_);
}

FieldElement Field::element(std::vector<Int> coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(impl_->e)) {
        Poly r = poly_mod(std::move(coeffs), impl_->modulus, impl_->p);
        r.resize(impl_->e, 0);
        coeffs = std::move(r);
    }
    coeffs.resize(impl_->e, 0);
    for (Int& c : coeffs) c = ((c % impl_->p) + impl_->p) % impl_->p;
    return FieldElement(std::move(coeffs), impl_);
}

FieldElement Field::from_index(Int idx) const {
    if (idx < 0 || idx >= impl_->order)
        throw ElementOutOfRangeError("element index out of range");
    std::vector<Int> c(impl_->e, 0);
    for (int i = 0; i < impl_->e; ++i) {
        c[i] = idx % impl_->p;
        idx /= impl_->p;
    }
    return FieldElement(std::move(c), impl_);
}

Int Field::index_of(const FieldElement& a) const {
    check_element(*impl_, a);
    Int idx = 0;
    for (int i = impl_->e - 1; i >= 0; --i) idx = idx * impl_->p + a.coeffs()[i];
    return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check_same_field(*impl_, a);
    check_same_field(*impl_, b);
    std::vector<Int> c(impl_->e);
    for (int i = 0; i < impl_->e; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % impl_->p;
    return FieldElement(std::move(c), impl_);
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    check_same_field(*impl_, a);
    check_same_field(*impl_, b);
    std::vector<Int> c(impl_->e);
    for (int i = 0; i < impl_->e; ++i)
        c[i] = ((a.coeffs()[i] - b.coeffs()[i]) % impl_->p + impl_->p) % impl_->p;
    return FieldElement(std::move(c), impl_);
}

FieldElement Field::neg(const FieldElement& a) const {
    check_element(*impl_, a);
    std::vector<Int> c(impl_->e);
    for (int i = 0; i < impl_->e; ++i) c[i] = (impl_->p - a.coeffs()[i]) % impl_->p;
    return FieldElement(std::move(c), impl_);
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check_same_field(*impl_, a);
    check_same_field(*impl_, b);
    Poly prod = poly_mul(a.coeffs_, b.coeffs_, impl_->p);
    Poly r = poly_mod(std::move(prod), impl_->modulus, impl_->p);
    r.resize(impl_->e, 0);
    return FieldElement(std::move(r), impl_);
}

FieldElement Field::pow(const FieldElement& a, Int k) const {
    check_element(*impl_, a);
    if (k < 0) throw Error("negative exponent");
    FieldElement result = one();
    FieldElement base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

bool Field::is_primitive(const FieldElement& a) const {
    check_element(*impl_, a);
    if (a.is_zero()) return false;
    const Int n = impl_->order - 1;
    if (pow(a, n) != one()) return false;
    for (Int r : impl_->order_prime_factors)
        if (pow(a, n / r) == one()) return false;
    return true;
}

FieldElement Field::find_primitive() const {
    {
        std::lock_guard<std::mutex> lock(impl_->cache_mutex);
        if (!impl_->primitive_coeffs.empty())
            return FieldElement(impl_->primitive_coeffs, impl_);
    }
    for (Int idx = 1; idx < impl_->order; ++idx) {
        FieldElement cand = from_index(idx);
        if (is_primitive(cand)) {
            std::lock_guard<std::mutex> lock(impl_->cache_mutex);
            impl_->primitive_coeffs = cand.coeffs();
            return cand;
        }
    }
    throw Error("no primitive element found");  // unreachable for a valid field
}

Int Field::discrete_log(const FieldElement& base, const FieldElement& target) const {
    check_element(*impl_, base);
    check_element(*impl_, target);
    if (target.is_zero()) throw ZeroTargetError();
    const Int n = impl_->order - 1;

    if (impl_->order <= kDenseLogCap) {
        const Int base_idx = index_of(base);
        {
            std::lock_guard<std::mutex> lock(impl_->cache_mutex);
            auto it = impl_->log_tables.find(base_idx);
            if (it == impl_->log_tables.end()) {
                std::vector<int32_t> table(impl_->order, 0);
                FieldElement power = one();
                for (Int k = 1; k <= n; ++k) {
                    power = mul(power, base);
                    Int idx = index_of(power);
                    if (table[idx] == 0) table[idx] = static_cast<int32_t>(k);
                }
                it = impl_->log_tables.emplace(base_idx, std::move(table)).first;
            }
            Int k = it->second[index_of(target)];
            if (k == 0)
                throw NotPrimitiveError("target not in the cyclic group generated by base");
            return k;
        }
    }

    // Baby-step/giant-step; unique answer in [1, n] when base is primitive.
    const Int m = static_cast<Int>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::unordered_map<Int, Int> baby;  // element index -> j, base^j, smallest j in [0, m)
    FieldElement cur = one();
    for (Int j = 0; j < m; ++j) {
        baby.emplace(index_of(cur), j);
        cur = mul(cur, base);
    }
    // cur = base^m; giant steps multiply by base^{-m} = base^{n-m}.
    FieldElement giant = pow(base, n - m);
    FieldElement gamma = target;
    for (Int i = 0; i <= m; ++i) {
        auto it = baby.find(index_of(gamma));
        if (it != baby.end()) {
            Int k = i * m + it->second;
            if (k == 0) k = n;  // least positive exponent for target = 1
            return k;
        }
        gamma = mul(gamma, giant);
    }
    throw NotPrimitiveError("target not in the cyclic group generated by base");
}

bool Field::operator==(const Field& other) const {
    return impl_->p == other.impl_->p && impl_->modulus == other.impl_->modulus;
}

}  // namespace sidonlab::gf
