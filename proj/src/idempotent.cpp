#include "mdscodex/idempotent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mdscodex/numutil.hpp"

namespace mdscodex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Order check that also works for composite n and for the cyclotomic field:
// omega^n = 1 and omega^{n/l} != 1 for every prime l dividing n.
bool has_order(const FieldElement& w, std::int64_t n) {
    if (w.is_zero() || !w.pow(n).is_one()) return false;
    std::int64_t rest = n;
    for (std::int64_t l = 2; l * l <= rest; ++l) {
        if (rest % l != 0) continue;
        if (w.pow(n / l).is_one()) return false;
        while (rest % l == 0) rest /= l;
    }
    if (rest > 1 && w.pow(n / rest).is_one()) return false;
    return true;
}

std::vector<int> validated_indices(const std::vector<int>& indices, std::int64_t n, const char* what) {
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    int prev = -1;
    for (int i : sorted) {
        if (i < 0 || i >= n) throw std::out_of_range(std::string(what) + ": index out of range");
        if (i == prev) throw std::invalid_argument(std::string(what) + ": duplicate index");
        prev = i;
    }
    return sorted;
}

FieldElement trace(const MatrixF& m) {
    FieldElement acc = m.base().zero();
    for (int i = 0; i < m.rows(); ++i) acc = acc + m.at(i, i);
    return acc;
}

}  // namespace

IdempotentSet idempotent_set_build(const FieldSpec& field, std::int64_t n, const FieldElement& omega) {
    require(n >= 2, "idempotent_set_build: group order must be at least 2");
    require(&omega.field() == &field, "idempotent_set_build: omega belongs to a different field");
    if (field.is_finite()) {
        require(field.characteristic() == 0 || n % field.characteristic() != 0,
                "idempotent_set_build: characteristic divides n, 1/n does not exist");
    }
    require(has_order(omega, n),
            "idempotent_set_build: omega does not have order " + std::to_string(n));

    const int size = static_cast<int>(n);
    const FieldElement inv_n = field.from_integer(n).inv();
    std::vector<FieldElement> powers(static_cast<std::size_t>(n), field.one());
    for (int i = 1; i < size; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i - 1)] * omega;

    std::vector<MatrixF> members;
    members.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < size; ++i) {
        // first row (1/n)(1, w^i, w^{2i}, ...), each later row rotated right
        MatrixF e(field, size, size);
        for (int r = 0; r < size; ++r) {
            for (int c = 0; c < size; ++c) {
                std::int64_t exp = static_cast<std::int64_t>(i) * ((c - r + size) % size) % n;
                e.set(r, c, inv_n * powers[static_cast<std::size_t>(exp)]);
            }
        }
        members.push_back(std::move(e));
    }

    if (!verify_complete_orthogonal(members)) {
        throw std::runtime_error("idempotent_set_build: completeness axioms failed");
    }
    for (const MatrixF& e : members) {
        if (rank(e) != 1 || trace(e) != field.one()) {
            throw std::runtime_error("idempotent_set_build: member is not a rank-1 idempotent");
        }
    }
    return IdempotentSet{n, &field, omega, std::move(members)};
}

bool verify_complete_orthogonal(const std::vector<MatrixF>& set) {
    require(!set.empty(), "verify_complete_orthogonal: empty family");
    const FieldSpec& field = set[0].base();
    const int n = set[0].rows();
    for (const MatrixF& e : set) {
        require(&e.base() == &field, "verify_complete_orthogonal: mixed fields");
        require(e.rows() == n && e.cols() == n, "verify_complete_orthogonal: dimension mismatch");
    }
    for (const MatrixF& e : set) {
        if (e.is_zero()) return false;
        if (e * e != e) return false;
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (i == j) continue;
            if (!(set[i] * set[j]).is_zero()) return false;
        }
    }
    MatrixF sum = set[0];
    for (std::size_t i = 1; i < set.size(); ++i) sum = sum + set[i];
    return sum == MatrixF::identity(field, n);
}

int rank_of_sum(const IdempotentSet& set, const std::vector<int>& indices) {
    std::vector<int> sorted = validated_indices(indices, set.n, "rank_of_sum");
    MatrixF sum(*set.field, static_cast<int>(set.n), static_cast<int>(set.n));
    for (int j : sorted) sum = sum + set.members[static_cast<std::size_t>(j)];
    const int r = rank(sum);
    if (r != static_cast<int>(sorted.size()) ||
        trace(sum) != set.field->from_integer(static_cast<std::int64_t>(sorted.size()))) {
        throw std::logic_error("rank_of_sum: rank/trace disagreement");
    }
    return r;
}

IdempotentCodeMatrices idempotent_code_matrices(const IdempotentSet& set, const std::vector<int>& indices) {
    std::vector<int> sorted = validated_indices(indices, set.n, "idempotent_code_matrices");
    const int n = static_cast<int>(set.n);
    const int k = static_cast<int>(sorted.size());
    require(k > 0 && k < n, "idempotent_code_matrices: index set must be a proper nonempty subset");

    MatrixF g(*set.field, n, n);
    MatrixF h(*set.field, n, n);
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
        if (next < sorted.size() && sorted[next] == i) {
            g = g + set.members[static_cast<std::size_t>(i)];
            ++next;
        } else {
            h = h + set.members[static_cast<std::size_t>(i)];
        }
    }
    if (!(g * h).is_zero()) throw std::runtime_error("idempotent_code_matrices: G*H != 0");

    MatrixF generator = g.top_rows(k);
    MatrixF check = h.transpose().top_rows(n - k);
    if (rank(generator) != k) throw std::runtime_error("idempotent_code_matrices: reduced generator rank deficit");
    if (rank(check) != n - k) throw std::runtime_error("idempotent_code_matrices: reduced check rank deficit");
    return IdempotentCodeMatrices{std::move(g), std::move(h), std::move(generator), std::move(check)};
}

}  // namespace mdscodex
