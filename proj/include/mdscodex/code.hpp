#pragma once

/// Linear codes built from Fourier-matrix row subsets (unit-derived) or from
/// circulant idempotent index subsets, with exact parameter computation.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mdscodex/fourier.hpp"
#include "mdscodex/idempotent.hpp"

namespace mdscodex {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ProvenanceKind { UnitRows, IdempotentIndices };

struct Provenance {
    ProvenanceKind kind;
    std::vector<int> indices;  // sorted ascending
};

class LinearCode {
   public:
    LinearCode(const FieldSpec& field, MatrixF generator, MatrixF check, Provenance provenance,
               FieldElement omega);

    const FieldSpec& field() const { return *field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const MatrixF& generator() const { return generator_; }
    const MatrixF& check() const { return check_; }
    const Provenance& provenance() const { return provenance_; }
    /// The root of unity the construction came from; rebuilds the source unit.
    const FieldElement& omega() const { return omega_; }

    std::optional<int> cached_distance() const;
    /// Write-once: a second store must agree or this aborts the program state
    /// with a logic_error.
    void store_distance(int d) const;

   private:
    const FieldSpec* field_;
    int n_;
    int k_;
    MatrixF generator_;
    MatrixF check_;
    Provenance provenance_;
    FieldElement omega_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Generator = the selected forward rows; check = transpose of the inverse
/// columns at the complementary indices. Both ranks and the orthogonality
/// G H^T = 0 are verified.
LinearCode unit_code_build(const FourierMatrix& fourier, const std::vector<int>& rows);

LinearCode idempotent_code_build(const IdempotentSet& set, const std::vector<int>& indices);

/// Smallest w such that some w columns of the check matrix are dependent.
/// Enumerates column subsets by size with early exit; each size class is
/// guarded by the budget (default 10^6 subsets, MDSCODEX_BUDGET override).
int min_distance(const LinearCode& code, std::optional<std::uint64_t> budget = std::nullopt);

bool is_mds(const LinearCode& code, std::optional<std::uint64_t> budget = std::nullopt);

std::vector<FieldElement> encode(const LinearCode& code, const std::vector<FieldElement>& message);

/// check * word^T; zero exactly on codewords.
std::vector<FieldElement> syndrome(const LinearCode& code, const std::vector<FieldElement>& word);

/// K = {0..n-1} minus {n-j mod n : j in J}: the row indices spanning the dual.
std::vector<int> dual_row_indices(const std::vector<int>& indices, int n);

/// Row spaces of the generators coincide.
bool codes_equal(const LinearCode& a, const LinearCode& b);

/// All size-r row subsets in lexicographic order (or the first `limit`).
void for_each_code(const FourierMatrix& fourier, int r, std::optional<std::uint64_t> limit,
                   const std::function<void(const LinearCode&)>& fn);
std::vector<LinearCode> enumerate_codes(const FourierMatrix& fourier, int r,
                                        std::optional<std::uint64_t> limit = std::nullopt);

}  // namespace mdscodex
