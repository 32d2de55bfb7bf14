#pragma once

#include <cstdint>
#include <vector>

#include "powerpairs/errors.hpp"

namespace powerpairs {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization of n, factors sorted by prime ascending. n = 1 has an
// empty factor list.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;
};

// Smallest-prime-factor, Mobius and k-free lookup tables for 1..limit.
// Construction is single-threaded; lookups on a completed table are
// read-only and safe to share across threads.
class SieveTables {
public:
    u64 limit() const { return limit_; }
    unsigned kfree_k() const { return k_; }
    bool has_kfree_flags() const { return !kfree_bits_.empty(); }

    // Least prime dividing n, 2 <= n <= limit.
    u64 smallest_prime_factor(u64 n) const {
        check_range(n, 2);
        return spf_[n];
    }

    // mu(n) in {-1, 0, 1}, 1 <= n <= limit.
    int mobius(u64 n) const {
        check_range(n, 1);
        return mobius_[n];
    }

    bool is_squarefree(u64 n) const { return mobius(n) != 0; }

    // Flag table lookup: true iff n is kfree_k()-free. Only valid when the
    // flag table was built.
    bool kfree_flag(u64 n) const {
        check_range(n, 1);
        return (kfree_bits_[n >> 6] >> (n & 63)) & 1u;
    }

private:
    friend SieveTables build_sieves(u64, unsigned, u64);

    void check_range(u64 n, u64 lo) const {
        if (n < lo || n > limit_)
            throw std::out_of_range("SieveTables: n outside table range");
    }

    u64 limit_ = 0;
    unsigned k_ = 2;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> mobius_;
    std::vector<u64> kfree_bits_;
};

// Memory cap for sieve construction, in bytes. Reads POWERPAIRS_SIEVE_MEM_CAP
// from the environment; the default admits tables up to limit = 1e8.
u64 sieve_memory_cap();

// Estimated allocation size of build_sieves(limit, ...) in bytes.
u64 sieve_memory_estimate(u64 limit);

// Build spf/mobius tables for 1..limit plus the k-free flag table.
// memory_cap = 0 means "use sieve_memory_cap()". Throws resource_error when
// limit is 0 or the estimate exceeds the cap.
SieveTables build_sieves(u64 limit, unsigned k, u64 memory_cap = 0);

// Factorization of n via the spf table, 1 <= n <= tables.limit().
Factorization factorize(u64 n, const SieveTables& tables);

// Radical: product of the distinct primes dividing n. radical(1) = 1.
u64 radical(u64 n, const SieveTables& tables);

// Exact: does base^k <= bound hold? Never overflows.
bool pow_at_most(u64 base, unsigned k, u64 bound);
bool pow_at_most(u128 base, unsigned k, u128 bound);

// Floor of n^(1/k), exact over the whole u64/u128 range. k = 0 is a domain
// error; k = 1 returns n.
u64 integer_kth_root(u64 n, unsigned k);
u128 integer_kth_root_u128(u128 n, unsigned k);

// True iff n is a perfect k-th power, k >= 2.
bool is_kth_power(u64 n, unsigned k);

// True iff no prime k-th power divides n, k >= 2. Uses the flag table when
// it matches k, otherwise the spf factorization.
bool is_kfree(u64 n, unsigned k, const SieveTables& tables);

// tau(n^k) = prod (k*e + 1) over the prime exponents e of n, computed
// without forming n^k.
u64 tau_of_power(u64 n, unsigned k, const SieveTables& tables);

} // namespace powerpairs
