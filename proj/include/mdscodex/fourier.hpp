#pragma once

/// Fourier matrices F_p = [omega^{ij}] over admissible fields, exhaustive
/// Chebotarev verification, and the number-theoretic predicates that
/// guarantee or refute the property without scanning.

#include <cstdint>
#include <optional>
#include <vector>

#include "mdscodex/matrix.hpp"
#include "mdscodex/poly.hpp"

namespace mdscodex {

struct FourierMatrix {
    std::int64_t p;
    const FieldSpec* field;
    FieldElement omega;
    MatrixF forward;   // (i,j) = omega^{ij}
    MatrixF inverse;   // (1/p) [omega^{-ij}], verified against forward
};

/// Requires p prime with p | (cardinality - 1) in the finite case, or the
/// matching cyclotomic-rational field. The omega override must have order
/// exactly p; the default comes from find_root_of_unity (finite) or the coset
/// of x (cyclotomic).
FourierMatrix fourier_build(const FieldSpec& field, std::int64_t p,
                            const std::optional<FieldElement>& omega = std::nullopt);

struct ChebotarevWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    FieldElement det;  // exactly zero
};

struct ChebotarevReport {
    bool holds = true;
    std::optional<ChebotarevWitness> witness;
    /// When holds: the full count over the scanned sizes. When failed: the
    /// number of submatrices up to and including the witness in canonical
    /// order (size ascending, then row set, then column set), independent of
    /// the worker count.
    std::uint64_t submatrices_checked = 0;
};

struct ChebotarevOptions {
    std::optional<int> max_order;  // scan submatrix sizes 1..max_order only
    int jobs = 1;
    /// The planned determinant count is capped (default 2*10^7, covering
    /// p <= 13 in full); larger scans require force = true.
    bool force = false;
    std::optional<std::uint64_t> budget;
};

/// Exhaustive submatrix scan of a square matrix. Enumerates (rowset, colset)
/// pairs of equal size, sizes ascending, lexicographic within a size, and
/// reports the first zero determinant as witness. With jobs > 1 the scan is
/// sharded by row set with a shared early-exit bound; the reported witness
/// and count are identical to the sequential ones.
ChebotarevReport chebotarev_check(const MatrixF& m, const ChebotarevOptions& opts = {});

/// ord_p(q) == p-1; guarantees F_p over GF(q^{p-1}) has the Chebotarev
/// property. Both arguments must be distinct primes.
bool predicate_nicely(std::int64_t p, std::int64_t q);

/// 2p+1 is prime (p is a Germain prime). Small instances (p = 3, 5) satisfy
/// the Chebotarev property over GF(2p+1), but the implication does not hold
/// in general: over GF(23) the 11th roots 1 + 4 + 18 sum to zero, so F_11
/// has a singular 3x3 submatrix. Treat this predicate as a construction
/// hint, not a certificate; chebotarev_check is the certificate.
bool predicate_germain(std::int64_t p);

struct IsaacsReport {
    int t;                 // nonzero coefficients of f
    int deg_h;             // deg gcd(x^p - 1, f)
    std::int64_t d;        // p - deg_h, the cyclic span dimension
    bool violates;         // t <= deg_h, i.e. t + d <= p
};

/// Support-versus-span criterion for a nonzero f with deg f < p over a field
/// of characteristic != p. violates = true witnesses failure of the
/// Chebotarev property for F_p over any extension containing the p-th roots.
IsaacsReport isaacs_criterion(const Poly& f, std::int64_t p);

enum class PairGuarantee { None, Nicely, Germain };

struct PrimePair {
    std::int64_t p;
    std::int64_t q;
    PairGuarantee guarantee;
};

/// All prime pairs 3 <= p <= p_max, 2 <= q <= q_max, p != q, each with its
/// strongest applicable guarantee, ordered by (p, q).
std::vector<PrimePair> scan_prime_pairs(std::int64_t p_max, std::int64_t q_max);

}  // namespace mdscodex
