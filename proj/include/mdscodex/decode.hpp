#pragma once

/// Star products, t-error-correcting pairs for arithmetic-progression row
/// sets, the locator/erasure decoding algorithm, and the exhaustive and
/// randomized error-pattern harnesses.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mdscodex/code.hpp"

namespace mdscodex {

/// Componentwise product; on Fourier rows e_i * e_j = e_{i+j mod n}.
std::vector<FieldElement> star(const std::vector<FieldElement>& u, const std::vector<FieldElement>& v);

struct ErrorCorrectingPair {
    LinearCode code;
    int t;
    int start;                // progression parameters of the code's row set
    int step;
    std::vector<int> u_rows;  // Fourier row indices spanning U, t+1 of them
    std::vector<int> v_rows;  // Fourier row indices spanning V, t of them
    MatrixF u_basis;          // (t+1) x n
    MatrixF v_basis;          // t x n
};

/// Pair for the code generated by rows {start + i*step mod p : 0 <= i < r},
/// with t = floor((p-r)/2) >= 1. U and V are spanned by rows in the same
/// progression starting at -start/2 mod p; all four pair conditions are
/// verified before returning.
ErrorCorrectingPair ecp_build(const FourierMatrix& fourier, int start, int step, int r);

/// Recognizes the row set of a unit-derived code as an arithmetic progression
/// mod p (smallest (step, start) accepted) and builds the pair for it.
ErrorCorrectingPair ecp_build_for_code(const FourierMatrix& fourier, const std::vector<int>& rows);

struct EcpConditions {
    bool star_products_in_dual;  // (i)   U*V inside C-perp
    bool u_dimension;            // (ii)  dim U > t
    bool v_perp_distance;        // (iii) d(V-perp) > t
    bool distance_sum;           // (iv)  d(C) + d(U) > n
    bool all() const { return star_products_in_dual && u_dimension && v_perp_distance && distance_sum; }
};

EcpConditions ecp_verify(const ErrorCorrectingPair& pair);

enum class DecodeStatus { NoError, Corrected, Failure };

struct DecodeResult {
    DecodeStatus status;
    std::optional<std::vector<FieldElement>> codeword;
    std::optional<std::vector<FieldElement>> error_vector;
    std::optional<std::vector<int>> error_positions;
};

/// Two-phase locator/erasure decoding. Deterministic: the locator is the
/// first kernel basis vector of the constraint system.
DecodeResult ecp_decode(const ErrorCorrectingPair& pair, const std::vector<FieldElement>& received);

struct WeightBucket {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
};

struct TrialCounterexample {
    std::size_t message_index;
    std::vector<FieldElement> error;
};

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::vector<WeightBucket> per_weight;  // index = weight 0..max_weight
    std::optional<TrialCounterexample> counterexample;
};

/// Decodes every error pattern of weight <= max_weight against each message's
/// codeword; finite fields only. Patterns are sharded across jobs by support
/// set with a deterministic merge; the counterexample, if any, is the first
/// failing pattern in canonical order (message, weight, support, magnitudes).
TrialReport exhaustive_trial(const ErrorCorrectingPair& pair, int max_weight,
                             const std::vector<std::vector<FieldElement>>& messages, int jobs = 1,
                             std::optional<std::uint64_t> budget = std::nullopt);

/// Deterministic message sample for trial harnesses: the zero message first,
/// then seeded pseudo-random messages (distinct, mt19937_64 driven).
std::vector<std::vector<FieldElement>> sample_messages(const LinearCode& code, std::size_t count,
                                                       std::uint64_t seed);

struct WeightDistribution {
    int min_weight;
    int max_weight;  // inclusive; equal bounds give a fixed weight
};

struct ChannelBucket {
    std::uint64_t trials = 0;
    std::uint64_t no_error = 0;
    std::uint64_t corrected = 0;      // decoded to the transmitted codeword
    std::uint64_t miscorrected = 0;   // decoder accepted or produced a wrong word
    std::uint64_t failed = 0;
};

struct ChannelStats {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::map<int, ChannelBucket> per_weight;
};

/// Seeded random messages and error patterns; identical seed implies an
/// identical report.
ChannelStats channel_simulate(const ErrorCorrectingPair& pair, std::uint64_t trials,
                              const WeightDistribution& dist, std::uint64_t seed);

}  // namespace mdscodex
