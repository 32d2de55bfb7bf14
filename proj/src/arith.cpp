#include "powerpairs/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace powerpairs {

namespace {

constexpr u64 kDefaultSieveMemCap = 900'000'000; // admits limit = 1e8

} // namespace

u64 sieve_memory_cap() {
    if (const char* env = std::getenv("POWERPAIRS_SIEVE_MEM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<u64>(v);
    }
    return kDefaultSieveMemCap;
}

u64 sieve_memory_estimate(u64 limit) {
    // spf (u32) + mobius (i8) per entry, k-free bitmap, slack for vector
    // headers and allocator rounding.
    return (limit + 1) * 5 + (limit / 8 + 16) + 4096;
}

SieveTables build_sieves(u64 limit, unsigned k, u64 memory_cap) {
    if (k < 2)
        throw std::domain_error("build_sieves: k must be >= 2");
    if (limit == 0)
        throw resource_error("build_sieves: limit must be positive");
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw resource_error("build_sieves: limit exceeds 32-bit spf range");
    const u64 cap = memory_cap ? memory_cap : sieve_memory_cap();
    if (sieve_memory_estimate(limit) > cap)
        throw resource_error("build_sieves: memory estimate " +
                             std::to_string(sieve_memory_estimate(limit)) +
                             " bytes exceeds cap " + std::to_string(cap));

    SieveTables t;
    t.limit_ = limit;
    t.k_ = k;
    t.spf_.assign(limit + 1, 0);
    t.mobius_.assign(limit + 1, 0);
    t.mobius_[0] = 0;
    if (limit >= 1)
        t.mobius_[1] = 1;

    // Linear sieve: each composite is crossed off once, by its least prime
    // factor times a prior integer.
    std::vector<std::uint32_t> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (t.spf_[i] == 0) {
            t.spf_[i] = static_cast<std::uint32_t>(i);
            t.mobius_[i] = -1;
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > t.spf_[i])
                break;
            const u64 ip = i * static_cast<u64>(p);
            if (ip > limit)
                break;
            t.spf_[ip] = p;
            t.mobius_[ip] = (p == t.spf_[i]) ? 0 : static_cast<std::int8_t>(-t.mobius_[i]);
        }
    }

    // k-free flags: clear every multiple of p^k.
    t.kfree_bits_.assign(limit / 64 + 1, ~u64{0});
    for (std::uint32_t p : primes) {
        if (!pow_at_most(static_cast<u64>(p), k, limit))
            break;
        u64 pk = 1;
        for (unsigned e = 0; e < k; ++e)
            pk *= p;
        for (u64 m = pk; m <= limit; m += pk)
            t.kfree_bits_[m >> 6] &= ~(u64{1} << (m & 63));
    }
    return t;
}

Factorization factorize(u64 n, const SieveTables& tables) {
    if (n < 1 || n > tables.limit())
        throw std::out_of_range("factorize: n outside table range");
    Factorization f;
    f.n = n;
    // spf increases as n is divided down, so factors come out sorted.
    while (n > 1) {
        const u64 p = tables.smallest_prime_factor(n);
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    return f;
}

u64 radical(u64 n, const SieveTables& tables) {
    if (n < 1 || n > tables.limit())
        throw std::out_of_range("radical: n outside table range");
    u64 r = 1;
    while (n > 1) {
        const u64 p = tables.smallest_prime_factor(n);
        r *= p;
        while (n % p == 0)
            n /= p;
    }
    return r;
}

bool pow_at_most(u64 base, unsigned k, u64 bound) {
    if (base <= 1)
        return base <= bound || k == 0;
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= base; // acc <= bound < 2^64 before the multiply, no overflow
        if (acc > bound)
            return false;
    }
    return true;
}

bool pow_at_most(u128 base, unsigned k, u128 bound) {
    if (base <= 1)
        return base <= bound || k == 0;
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (acc > bound / base)
            return false;
        acc *= base;
    }
    return acc <= bound;
}

u64 integer_kth_root(u64 n, unsigned k) {
    if (k == 0)
        throw std::domain_error("integer_kth_root: k must be >= 1");
    if (k == 1 || n <= 1)
        return n;
    if (k >= 64)
        return 1; // 2^64 > n for every u64 n

    // Floating estimate, then exact integer correction. The estimate is
    // within ~1 of the true root for all u64 inputs; the loops below are
    // exact regardless.
    u64 r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / k));
    r = (r > 1) ? r - 1 : 1;
    while (pow_at_most(r + 1, k, n))
        ++r;
    while (!pow_at_most(r, k, n))
        --r;
    return r;
}

u128 integer_kth_root_u128(u128 n, unsigned k) {
    if (k == 0)
        throw std::domain_error("integer_kth_root_u128: k must be >= 1");
    if (k == 1 || n <= 1)
        return n;
    if (k >= 128)
        return 1;

    u128 r = static_cast<u128>(std::pow(static_cast<double>(n), 1.0 / k));
    // double -> u128 conversion of a ~128-bit value can be off by a few
    // thousand ulps near the top of the range; back off generously first.
    r = (r > 4) ? r - 4 : 1;
    while (!pow_at_most(r, k, n))
        r /= 2;
    while (pow_at_most(r + 1, k, n))
        ++r;
    return r;
}

bool is_kth_power(u64 n, unsigned k) {
    if (k < 2)
        throw std::domain_error("is_kth_power: k must be >= 2");
    if (n <= 1)
        return true;
    const u64 r = integer_kth_root(n, k);
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i)
        acc *= r;
    return acc == n;
}

bool is_kfree(u64 n, unsigned k, const SieveTables& tables) {
    if (k < 2)
        throw std::domain_error("is_kfree: k must be >= 2");
    if (n < 1 || n > tables.limit())
        throw std::out_of_range("is_kfree: n outside table range");
    if (tables.has_kfree_flags() && tables.kfree_k() == k)
        return tables.kfree_flag(n);
    while (n > 1) {
        const u64 p = tables.smallest_prime_factor(n);
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e >= k)
            return false;
    }
    return true;
}

u64 tau_of_power(u64 n, unsigned k, const SieveTables& tables) {
    if (k < 2)
        throw std::domain_error("tau_of_power: k must be >= 2");
    if (n < 1 || n > tables.limit())
        throw std::out_of_range("tau_of_power: n outside table range");
    u64 tau = 1;
    while (n > 1) {
        const u64 p = tables.smallest_prime_factor(n);
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        tau *= static_cast<u64>(k) * e + 1;
    }
    return tau;
}

} // namespace powerpairs
