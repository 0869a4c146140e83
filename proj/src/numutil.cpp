#include "mdscodex/numutil.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mdscodex {

std::optional<std::uint64_t> env_budget_override() {
    const char* raw = std::getenv("MDSCODEX_BUDGET");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    return std::stoull(std::string(raw));
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m) {
    std::int64_t result = 1 % m;
    std::int64_t b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return result;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod_reduce(a, m);
    if (r1 == 0) throw std::domain_error("mod_inv: zero is not invertible");
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inv: operand shares a factor with the modulus");
    return mod_reduce(s0, m);
}

std::int64_t mod_order(std::int64_t a, std::int64_t m) {
    std::int64_t x = mod_reduce(a, m);
    if (x == 0) throw std::domain_error("mod_order: zero input");
    std::int64_t order = 1;
    std::int64_t cur = x;
    while (cur != 1) {
        cur = cur * x % m;
        ++order;
        if (order > m) throw std::logic_error("mod_order: no finite order (modulus not prime?)");
    }
    return order;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    mpz_class b = binomial(n, k);
    if (!b.fits_ulong_p()) throw std::overflow_error("binomial_u64: result exceeds uint64");
    return static_cast<std::uint64_t>(b.get_ui());
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    int v = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binomial_u64(static_cast<std::uint64_t>(n - v - 1),
                                               static_cast<std::uint64_t>(k - i - 1));
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        c[static_cast<std::size_t>(i)] = v++;
    }
    return c;
}

std::uint64_t rank_combination(const std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    std::uint64_t rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < c[static_cast<std::size_t>(i)]; ++v) {
            rank += binomial_u64(static_cast<std::uint64_t>(n - v - 1),
                                 static_cast<std::uint64_t>(k - i - 1));
        }
        prev = c[static_cast<std::size_t>(i)];
    }
    return rank;
}

}  // namespace mdscodex
