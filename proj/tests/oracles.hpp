#pragma once

// Independent test oracles. These deliberately avoid the library's
// elimination and distance code paths: determinants by cofactor expansion,
// minimum distance by codeword enumeration, encodings by explicit dot
// products.

#include <cstdint>
#include <vector>

#include "mdscodex/field.hpp"
#include "mdscodex/matrix.hpp"

namespace oracles {

using mdscodex::FieldElement;
using mdscodex::FieldSpec;
using mdscodex::MatrixF;

inline FieldElement cofactor_det(const MatrixF& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    FieldElement acc = m.base().zero();
    std::vector<int> rest;
    for (int r = 1; r < n; ++r) rest.push_back(r);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        std::vector<int> cols;
        for (int cc = 0; cc < n; ++cc) {
            if (cc != c) cols.push_back(cc);
        }
        FieldElement term = m.at(0, c) * cofactor_det(mdscodex::submatrix(m, rest, cols));
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Minimum Hamming weight over all nonzero messages; finite fields only.
inline int brute_min_distance(const MatrixF& generator) {
    const FieldSpec& f = generator.base();
    const int k = generator.rows();
    const int n = generator.cols();
    std::uint64_t card = f.cardinality().get_ui();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= card;
    int best = n + 1;
    std::vector<FieldElement> msg(static_cast<std::size_t>(k), f.zero());
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint64_t rest = m;
        for (int i = 0; i < k; ++i) {
            msg[static_cast<std::size_t>(i)] = f.element_from_encoding(rest % card);
            rest /= card;
        }
        int weight = 0;
        for (int c = 0; c < n; ++c) {
            FieldElement acc = f.zero();
            for (int r = 0; r < k; ++r) acc = acc + msg[static_cast<std::size_t>(r)] * generator.at(r, c);
            if (!acc.is_zero()) ++weight;
        }
        if (weight < best) best = weight;
    }
    return best;
}

// Explicit message * generator product, summed coordinate by coordinate.
inline std::vector<FieldElement> dot_encode(const MatrixF& generator,
                                            const std::vector<FieldElement>& msg) {
    std::vector<FieldElement> word;
    for (int c = 0; c < generator.cols(); ++c) {
        FieldElement acc = generator.base().zero();
        for (int r = 0; r < generator.rows(); ++r) {
            acc = acc + msg[static_cast<std::size_t>(r)] * generator.at(r, c);
        }
        word.push_back(acc);
    }
    return word;
}

// Deterministic pseudo-random elements for property tests (splitmix64).
struct Sampler {
    std::uint64_t state;
    explicit Sampler(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    FieldElement element(const FieldSpec& f) {
        return f.element_from_encoding(next() % f.cardinality().get_ui());
    }
    MatrixF matrix(const FieldSpec& f, int rows, int cols) {
        MatrixF m(f, rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) m.set(r, c, element(f));
        }
        return m;
    }
};

}  // namespace oracles
