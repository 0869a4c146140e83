#include "mdscodex/fourier.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "mdscodex/numutil.hpp"

namespace mdscodex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

constexpr std::uint64_t kDefaultScanBudget = 20'000'000;  // covers p = 13 in full

constexpr std::uint64_t kNoWitness = UINT64_MAX;

struct SizeClassWitness {
    std::uint64_t row_rank = kNoWitness;
    std::uint64_t col_rank = kNoWitness;
    std::vector<int> rows, cols;
};

// Scans one submatrix size class. det_is_zero(rowset, colset) must be pure.
// Workers own disjoint row-set stripes and scan them in ascending rank order,
// so each worker's first hit is its stripe minimum and the merged minimum is
// the canonical (sequential) witness. The shared bound only ever prunes row
// sets that rank after an already-found witness.
template <typename DetIsZero>
std::optional<SizeClassWitness> scan_size_class(int n, int k, int jobs, const DetIsZero& det_is_zero) {
    const std::uint64_t row_total = binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    std::atomic<std::uint64_t> bound{kNoWitness};
    std::vector<SizeClassWitness> found(static_cast<std::size_t>(jobs));

    auto worker = [&](int wid) {
        std::vector<int> colset_init(static_cast<std::size_t>(k));
        for (std::uint64_t rrank = static_cast<std::uint64_t>(wid); rrank < row_total;
             rrank += static_cast<std::uint64_t>(jobs)) {
            if (rrank > bound.load(std::memory_order_relaxed)) break;
            std::vector<int> rowset = unrank_combination(rrank, n, k);
            std::vector<int> colset = colset_init;
            for (int i = 0; i < k; ++i) colset[static_cast<std::size_t>(i)] = i;
            std::uint64_t crank = 0;
            bool hit = false;
            do {
                if (det_is_zero(rowset, colset)) {
                    hit = true;
                    break;
                }
                ++crank;
            } while (next_combination(colset, n));
            if (hit) {
                auto& w = found[static_cast<std::size_t>(wid)];
                w.row_rank = rrank;
                w.col_rank = crank;
                w.rows = rowset;
                w.cols = colset;
                std::uint64_t cur = bound.load(std::memory_order_relaxed);
                while (rrank < cur && !bound.compare_exchange_weak(cur, rrank, std::memory_order_relaxed)) {
                }
                break;
            }
        }
    };

    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int wid = 0; wid < jobs; ++wid) threads.emplace_back(worker, wid);
        for (auto& t : threads) t.join();
    }

    const SizeClassWitness* best = nullptr;
    for (const auto& w : found) {
        if (w.row_rank == kNoWitness) continue;
        if (best == nullptr || w.row_rank < best->row_rank ||
            (w.row_rank == best->row_rank && w.col_rank < best->col_rank)) {
            best = &w;
        }
    }
    if (best == nullptr) return std::nullopt;
    return *best;
}

}  // namespace

FourierMatrix fourier_build(const FieldSpec& field, std::int64_t p,
                            const std::optional<FieldElement>& omega) {
    require(is_prime(p), "fourier_build: p must be prime, got " + std::to_string(p));

    FieldElement w = field.zero();
    if (field.kind() == FieldKind::Cyclotomic) {
        require(field.cyclotomic_p() == p,
                "fourier_build: " + field.describe() + " has no primitive root of order " + std::to_string(p));
        w = omega.has_value() ? *omega : field.generator_x();
        require(&w.field() == &field, "fourier_build: omega belongs to a different field");
        require(!w.is_zero() && w.pow(p).is_one() && !w.is_one(),
                "fourier_build: omega does not have order " + std::to_string(p));
    } else {
        require(field.characteristic() != p,
                "fourier_build: characteristic divides p, no inverse of p exists");
        mpz_class group = field.cardinality() - 1;
        require(group % p == 0, "fourier_build: " + std::to_string(p) + " does not divide |" +
                                    field.describe() + "*| = " + group.get_str());
        w = find_root_of_unity(field, p, omega);
    }

    const int n = static_cast<int>(p);
    std::vector<FieldElement> powers(static_cast<std::size_t>(p), field.one());
    for (int i = 1; i < n; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i - 1)] * w;

    MatrixF forward(field, n, n);
    MatrixF inverse(field, n, n);
    const FieldElement inv_p = field.from_integer(p).inv();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::int64_t e = static_cast<std::int64_t>(i) * j % p;
            forward.set(i, j, powers[static_cast<std::size_t>(e)]);
            inverse.set(i, j, inv_p * powers[static_cast<std::size_t>((p - e) % p)]);
        }
    }
    if (forward * inverse != MatrixF::identity(field, n)) {
        throw std::runtime_error("fourier_build: inverse verification failed");
    }
    return FourierMatrix{p, &field, std::move(w), std::move(forward), std::move(inverse)};
}

ChebotarevReport chebotarev_check(const MatrixF& m, const ChebotarevOptions& opts) {
    require(m.rows() == m.cols(), "chebotarev_check: matrix is not square");
    const int n = m.rows();
    int max_order = opts.max_order.value_or(n);
    require(max_order >= 1, "chebotarev_check: max_order must be positive");
    if (max_order > n) max_order = n;
    const int jobs = opts.jobs >= 1 ? opts.jobs : 1;

    mpz_class planned = 0;
    for (int k = 1; k <= max_order; ++k) {
        mpz_class b = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
        planned += b * b;
    }
    std::uint64_t budget = opts.budget ? *opts.budget : env_budget_override().value_or(kDefaultScanBudget);
    if (!opts.force && planned > budget) {
        throw std::runtime_error("chebotarev_check: planned scan of " + planned.get_str() +
                                 " determinants exceeds the budget of " + std::to_string(budget) +
                                 "; pass force or raise the budget");
    }

    // Cumulative counts per size for the canonical checked total.
    std::vector<std::uint64_t> size_count(static_cast<std::size_t>(max_order) + 1, 0);
    for (int k = 1; k <= max_order; ++k) {
        std::uint64_t b = binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
        size_count[static_cast<std::size_t>(k)] = b * b;
    }

    ChebotarevReport report;
    std::uint64_t checked_before = 0;

    const bool prime_path = m.base().kind() == FieldKind::Prime;
    // Flat residue table for the prime fast path.
    std::vector<std::int64_t> table;
    const std::int64_t q = m.base().characteristic();
    if (prime_path) {
        table.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                auto coeffs = m.at(r, c).finite_coeffs();
                table[static_cast<std::size_t>(r * n + c)] = coeffs.empty() ? 0 : coeffs[0];
            }
        }
    }

    for (int k = 1; k <= max_order; ++k) {
        std::optional<SizeClassWitness> hit;
        if (prime_path) {
            auto det_is_zero = [&](const std::vector<int>& rowset, const std::vector<int>& colset) {
                // Gaussian elimination mod q on a stack copy of the submatrix.
                std::int64_t sub[13 * 13];
                const int kk = static_cast<int>(rowset.size());
                for (int r = 0; r < kk; ++r) {
                    for (int c = 0; c < kk; ++c) {
                        sub[r * kk + c] =
                            table[static_cast<std::size_t>(rowset[static_cast<std::size_t>(r)] * n +
                                                           colset[static_cast<std::size_t>(c)])];
                    }
                }
                for (int pc = 0; pc < kk; ++pc) {
                    int sel = -1;
                    for (int r = pc; r < kk; ++r) {
                        if (sub[r * kk + pc] != 0) {
                            sel = r;
                            break;
                        }
                    }
                    if (sel < 0) return true;
                    if (sel != pc) {
                        for (int c = pc; c < kk; ++c) std::swap(sub[pc * kk + c], sub[sel * kk + c]);
                    }
                    const std::int64_t inv = mod_inv(sub[pc * kk + pc], q);
                    for (int r = pc + 1; r < kk; ++r) {
                        const std::int64_t head = sub[r * kk + pc];
                        if (head == 0) continue;
                        const std::int64_t factor = head * inv % q;
                        for (int c = pc; c < kk; ++c) {
                            sub[r * kk + c] = mod_reduce(sub[r * kk + c] - factor * sub[pc * kk + c], q);
                        }
                    }
                }
                return false;
            };
            if (n <= 13) {
                hit = scan_size_class(n, k, jobs, det_is_zero);
            } else {
                // forced large scans: same elimination without the stack bound
                auto det_is_zero_big = [&](const std::vector<int>& rowset, const std::vector<int>& colset) {
                    return determinant(submatrix(m, rowset, colset)).is_zero();
                };
                hit = scan_size_class(n, k, jobs, det_is_zero_big);
            }
        } else {
            auto det_is_zero = [&](const std::vector<int>& rowset, const std::vector<int>& colset) {
                return determinant(submatrix(m, rowset, colset)).is_zero();
            };
            hit = scan_size_class(n, k, jobs, det_is_zero);
        }

        if (hit.has_value()) {
            report.holds = false;
            report.witness = ChebotarevWitness{hit->rows, hit->cols, m.base().zero()};
            report.submatrices_checked = checked_before +
                                         hit->row_rank * binomial_u64(static_cast<std::uint64_t>(n),
                                                                      static_cast<std::uint64_t>(k)) +
                                         hit->col_rank + 1;
            return report;
        }
        checked_before += size_count[static_cast<std::size_t>(k)];
    }

    report.holds = true;
    report.submatrices_checked = checked_before;
    return report;
}

bool predicate_nicely(std::int64_t p, std::int64_t q) {
    require(is_prime(p) && is_prime(q), "predicate_nicely: both arguments must be prime");
    require(p != q, "predicate_nicely: primes must be distinct");
    return mod_order(q % p, p) == p - 1;
}

bool predicate_germain(std::int64_t p) {
    require(is_prime(p), "predicate_germain: input must be prime");
    return is_prime(2 * p + 1);
}

IsaacsReport isaacs_criterion(const Poly& f, std::int64_t p) {
    require(is_prime(p), "isaacs_criterion: p must be prime");
    require(!f.is_zero(), "isaacs_criterion: zero polynomial");
    require(f.degree() < p, "isaacs_criterion: deg f must be less than p");
    require(f.base().characteristic() != p, "isaacs_criterion: base characteristic equals p");
    const int t = f.nonzero_term_count();
    Poly h = poly_gcd(Poly::x_pow_minus_one(f.base(), p), f);
    const int deg_h = h.degree();
    return IsaacsReport{t, deg_h, p - deg_h, t <= deg_h};
}

std::vector<PrimePair> scan_prime_pairs(std::int64_t p_max, std::int64_t q_max) {
    std::vector<PrimePair> out;
    for (std::int64_t p = 3; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t q = 2; q <= q_max; ++q) {
            if (q == p || !is_prime(q)) continue;
            PairGuarantee g = PairGuarantee::None;
            if (q == 2 * p + 1) {
                g = PairGuarantee::Germain;
            } else if (mod_order(q % p, p) == p - 1) {
                g = PairGuarantee::Nicely;
            }
            out.push_back(PrimePair{p, q, g});
        }
    }
    return out;
}

}  // namespace mdscodex
