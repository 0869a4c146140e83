#pragma once

/// The complete orthogonal family of circulant rank-1 idempotents of the
/// cyclic group ring: E_i = (1/n) circ(1, w^i, w^{2i}, ..., w^{(n-1)i}).

#include <cstdint>
#include <vector>

#include "mdscodex/matrix.hpp"

namespace mdscodex {

struct IdempotentSet {
    std::int64_t n;
    const FieldSpec* field;
    FieldElement omega;
    std::vector<MatrixF> members;  // E_0 .. E_{n-1}, index order
};

/// Builds the full family and verifies the completeness axioms (idempotency,
/// pairwise orthogonality, sum to identity) plus rank = trace = 1 per member,
/// failing loudly if any check fails. omega must have order exactly n and n
/// must be invertible in the field.
IdempotentSet idempotent_set_build(const FieldSpec& field, std::int64_t n, const FieldElement& omega);

/// Nonzero idempotency, pairwise orthogonality and sum-to-identity, checked
/// exactly on an arbitrary family of square matrices.
bool verify_complete_orthogonal(const std::vector<MatrixF>& set);

/// rank(sum over J), asserted equal to trace(sum) and to |J|.
int rank_of_sum(const IdempotentSet& set, const std::vector<int>& indices);

struct IdempotentCodeMatrices {
    MatrixF g_full;     // sum over J, n x n
    MatrixF h_full;     // sum over the complement, n x n
    MatrixF generator;  // first |J| rows of g_full, full rank
    MatrixF check;      // first n-|J| rows of h_full transposed, full rank
};

/// Generator/check pair from an index subset; requires a proper nonempty J.
/// Verifies G*H = 0 and both reduced ranks before returning.
IdempotentCodeMatrices idempotent_code_matrices(const IdempotentSet& set, const std::vector<int>& indices);

}  // namespace mdscodex
