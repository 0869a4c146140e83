#include "mdscodex/code.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "mdscodex/numutil.hpp"

namespace mdscodex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

constexpr std::uint64_t kDefaultDistanceBudget = 1'000'000;  // per size class

std::vector<int> sorted_unique(const std::vector<int>& indices, int n, const char* what) {
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

}  // namespace

struct LinearCode::Cache {
    std::mutex mu;
    std::optional<int> distance;
};

LinearCode::LinearCode(const FieldSpec& field, MatrixF generator, MatrixF check, Provenance provenance,
                       FieldElement omega)
    : field_(&field),
      n_(generator.cols()),
      k_(generator.rows()),
      generator_(std::move(generator)),
      check_(std::move(check)),
      provenance_(std::move(provenance)),
      omega_(std::move(omega)),
      cache_(std::make_shared<Cache>()) {
    require(&generator_.base() == field_ && &check_.base() == field_, "code: matrix field mismatch");
    require(check_.cols() == n_, "code: check matrix length mismatch");
    require(check_.rows() == n_ - k_, "code: check matrix row count must be n-k");
    require(k_ >= 1 && k_ < n_, "code: dimension must satisfy 0 < k < n");
    if (rank(generator_) != k_) throw std::runtime_error("code: generator is rank deficient");
    if (rank(check_) != n_ - k_) throw std::runtime_error("code: check matrix is rank deficient");
    if (!(generator_ * check_.transpose()).is_zero()) {
        throw std::runtime_error("code: generator and check matrices are not orthogonal");
    }
}

std::optional<int> LinearCode::cached_distance() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->distance;
}

void LinearCode::store_distance(int d) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->distance.has_value()) {
        if (*cache_->distance != d) {
            throw std::logic_error("distance cache: recomputation disagrees with the stored value");
        }
        return;
    }
    cache_->distance = d;
}

LinearCode unit_code_build(const FourierMatrix& fourier, const std::vector<int>& rows) {
    const int n = static_cast<int>(fourier.p);
    std::vector<int> sorted = sorted_unique(rows, n, "unit_code_build");
    require(!sorted.empty() && static_cast<int>(sorted.size()) < n,
            "unit_code_build: row set must be a proper nonempty subset");
    const int k = static_cast<int>(sorted.size());
    const FieldSpec& field = *fourier.field;

    MatrixF generator(field, k, n);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < n; ++c) generator.set(r, c, fourier.forward.at(sorted[static_cast<std::size_t>(r)], c));
    }

    std::vector<int> complement;
    {
        std::size_t next = 0;
        for (int i = 0; i < n; ++i) {
            if (next < sorted.size() && sorted[next] == i) {
                ++next;
            } else {
                complement.push_back(i);
            }
        }
    }
    // rows of the check matrix are the complementary inverse columns
    MatrixF check(field, n - k, n);
    for (int r = 0; r < n - k; ++r) {
        for (int c = 0; c < n; ++c) check.set(r, c, fourier.inverse.at(c, complement[static_cast<std::size_t>(r)]));
    }

    return LinearCode(field, std::move(generator), std::move(check),
                      Provenance{ProvenanceKind::UnitRows, std::move(sorted)}, fourier.omega);
}

LinearCode idempotent_code_build(const IdempotentSet& set, const std::vector<int>& indices) {
    IdempotentCodeMatrices parts = idempotent_code_matrices(set, indices);
    std::vector<int> sorted = sorted_unique(indices, static_cast<int>(set.n), "idempotent_code_build");
    return LinearCode(*set.field, std::move(parts.generator), std::move(parts.check),
                      Provenance{ProvenanceKind::IdempotentIndices, std::move(sorted)}, set.omega);
}

int min_distance(const LinearCode& code, std::optional<std::uint64_t> budget) {
    if (auto cached = code.cached_distance()) return *cached;
    const std::uint64_t cap = budget ? *budget : env_budget_override().value_or(kDefaultDistanceBudget);
    const int n = code.n();
    const int redundancy = n - code.k();
    const MatrixF& check = code.check();

    for (int w = 1; w <= redundancy + 1; ++w) {
        if (w > redundancy) {
            // rank(check) = n-k, so any n-k+1 columns are dependent
            code.store_distance(w);
            return w;
        }
        mpz_class subsets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(w));
        if (subsets > cap) {
            throw BudgetExceeded("min_distance: C(" + std::to_string(n) + "," + std::to_string(w) +
                                 ") column subsets exceed the budget of " + std::to_string(cap));
        }
        std::vector<int> cols(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) cols[static_cast<std::size_t>(i)] = i;
        std::vector<int> all_rows(static_cast<std::size_t>(redundancy));
        for (int i = 0; i < redundancy; ++i) all_rows[static_cast<std::size_t>(i)] = i;
        do {
            if (rank(submatrix(check, all_rows, cols)) < w) {
                code.store_distance(w);
                return w;
            }
        } while (next_combination(cols, n));
    }
    throw std::logic_error("min_distance: unreachable");
}

bool is_mds(const LinearCode& code, std::optional<std::uint64_t> budget) {
    return min_distance(code, budget) == code.n() - code.k() + 1;
}

std::vector<FieldElement> encode(const LinearCode& code, const std::vector<FieldElement>& message) {
    require(static_cast<int>(message.size()) == code.k(), "encode: message length must be k");
    for (const auto& m : message) {
        require(&m.field() == &code.field(), "encode: message symbol from a different field");
    }
    return vec_mat(message, code.generator());
}

std::vector<FieldElement> syndrome(const LinearCode& code, const std::vector<FieldElement>& word) {
    require(static_cast<int>(word.size()) == code.n(), "syndrome: word length must be n");
    for (const auto& w : word) {
        require(&w.field() == &code.field(), "syndrome: symbol from a different field");
    }
    return mat_vec(code.check(), word);
}

std::vector<int> dual_row_indices(const std::vector<int>& indices, int n) {
    std::vector<int> sorted = sorted_unique(indices, n, "dual_row_indices");
    std::vector<bool> in_hat(static_cast<std::size_t>(n), false);
    for (int j : sorted) in_hat[static_cast<std::size_t>((n - j) % n)] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (!in_hat[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

bool codes_equal(const LinearCode& a, const LinearCode& b) {
    require(&a.field() == &b.field(), "codes_equal: field mismatch");
    require(a.n() == b.n(), "codes_equal: length mismatch");
    return row_space_equal(a.generator(), b.generator());
}

void for_each_code(const FourierMatrix& fourier, int r, std::optional<std::uint64_t> limit,
                   const std::function<void(const LinearCode&)>& fn) {
    const int n = static_cast<int>(fourier.p);
    require(r > 0 && r < n, "for_each_code: r must satisfy 0 < r < p");
    std::uint64_t emitted = 0;
    std::vector<int> rows(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) rows[static_cast<std::size_t>(i)] = i;
    do {
        if (limit.has_value() && emitted >= *limit) return;
        fn(unit_code_build(fourier, rows));
        ++emitted;
    } while (next_combination(rows, n));
}

std::vector<LinearCode> enumerate_codes(const FourierMatrix& fourier, int r,
                                        std::optional<std::uint64_t> limit) {
    std::vector<LinearCode> out;
    for_each_code(fourier, r, limit, [&](const LinearCode& c) { out.push_back(c); });
    return out;
}

}  // namespace mdscodex
