#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace mdscodex {

bool is_prime(std::int64_t n);

// MDSCODEX_BUDGET environment override for enumeration budgets.
std::optional<std::uint64_t> env_budget_override();

// Least non-negative residue, works for negative inputs.
std::int64_t mod_reduce(std::int64_t a, std::int64_t m);

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m);

// Inverse of a modulo a prime m; throws on a == 0 (mod m).
std::int64_t mod_inv(std::int64_t a, std::int64_t m);

// Multiplicative order of a modulo a prime m.
std::int64_t mod_order(std::int64_t a, std::int64_t m);

mpz_class binomial(std::uint64_t n, std::uint64_t k);

// Binomial that must fit in uint64; throws std::overflow_error otherwise.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

// k-subsets of {0..n-1} in lexicographic order.
// Advances c in place; returns false when c was the last subset.
bool next_combination(std::vector<int>& c, int n);

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k);
std::uint64_t rank_combination(const std::vector<int>& c, int n);

}  // namespace mdscodex
