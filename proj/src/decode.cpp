#include "mdscodex/decode.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "mdscodex/numutil.hpp"

namespace mdscodex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

constexpr std::uint64_t kDefaultTrialBudget = 100'000'000;

std::vector<FieldElement> zero_vector(const FieldSpec& field, int n) {
    return std::vector<FieldElement>(static_cast<std::size_t>(n), field.zero());
}

}  // namespace

std::vector<FieldElement> star(const std::vector<FieldElement>& u, const std::vector<FieldElement>& v) {
    require(!u.empty() && u.size() == v.size(), "star: length mismatch");
    std::vector<FieldElement> out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] * v[i]);
    return out;
}

ErrorCorrectingPair ecp_build(const FourierMatrix& fourier, int start, int step, int r) {
    const std::int64_t p = fourier.p;
    require(r > 0 && r < p, "ecp_build: r must satisfy 0 < r < p");
    require(step % p != 0, "ecp_build: step must be coprime to p");
    const int t = static_cast<int>((p - r) / 2);
    if (t < 1) {
        throw std::invalid_argument("ecp_build: t = floor((p-r)/2) is zero, no pair exists; "
                                    "use syndrome detection only");
    }

    std::vector<int> rows(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        rows[static_cast<std::size_t>(i)] = static_cast<int>(mod_reduce(start + static_cast<std::int64_t>(i) * step, p));
    }
    LinearCode code = unit_code_build(fourier, rows);

    // Shift that carries the progression onto the worked consecutive case:
    // the U/V progression starts at -start/2 mod p, making every U*V index
    // land inside the dual's row set.
    const std::int64_t anchor = mod_reduce(-static_cast<std::int64_t>(start) * mod_inv(2, p), p);
    std::vector<int> u_rows, v_rows;
    for (int i = 0; i <= t; ++i) {
        u_rows.push_back(static_cast<int>(mod_reduce(anchor + static_cast<std::int64_t>(i) * step, p)));
    }
    for (int i = 1; i <= t; ++i) {
        v_rows.push_back(static_cast<int>(mod_reduce(anchor + static_cast<std::int64_t>(i) * step, p)));
    }

    const int n = static_cast<int>(p);
    MatrixF u_basis(*fourier.field, t + 1, n);
    for (int i = 0; i <= t; ++i) {
        for (int c = 0; c < n; ++c) u_basis.set(i, c, fourier.forward.at(u_rows[static_cast<std::size_t>(i)], c));
    }
    MatrixF v_basis(*fourier.field, t, n);
    for (int i = 0; i < t; ++i) {
        for (int c = 0; c < n; ++c) v_basis.set(i, c, fourier.forward.at(v_rows[static_cast<std::size_t>(i)], c));
    }

    ErrorCorrectingPair pair{std::move(code), t,           static_cast<int>(mod_reduce(start, p)),
                             static_cast<int>(mod_reduce(step, p)), std::move(u_rows), std::move(v_rows),
                             std::move(u_basis), std::move(v_basis)};
    EcpConditions conditions = ecp_verify(pair);
    if (!conditions.all()) {
        throw std::runtime_error("ecp_build: pair verification failed (conditions " +
                                 std::string(conditions.star_products_in_dual ? "" : "i ") +
                                 std::string(conditions.u_dimension ? "" : "ii ") +
                                 std::string(conditions.v_perp_distance ? "" : "iii ") +
                                 std::string(conditions.distance_sum ? "" : "iv") + ")");
    }
    return pair;
}

ErrorCorrectingPair ecp_build_for_code(const FourierMatrix& fourier, const std::vector<int>& rows) {
    const int p = static_cast<int>(fourier.p);
    std::set<int> want(rows.begin(), rows.end());
    require(!want.empty() && static_cast<int>(want.size()) < p, "ecp_build_for_code: improper row set");
    const int r = static_cast<int>(want.size());
    for (int step = 1; step < p; ++step) {
        for (int start = 0; start < p; ++start) {
            std::set<int> probe;
            for (int i = 0; i < r; ++i) {
                probe.insert(static_cast<int>(mod_reduce(start + static_cast<std::int64_t>(i) * step, p)));
            }
            if (probe == want) return ecp_build(fourier, start, step, r);
        }
    }
    throw std::invalid_argument(
        "ecp_build_for_code: row set is not an arithmetic progression mod p; "
        "no pair construction is available for general row sets");
}

EcpConditions ecp_verify(const ErrorCorrectingPair& pair) {
    EcpConditions out{true, false, false, false};
    const LinearCode& code = pair.code;
    const MatrixF& generator = code.generator();

    // (i) every basis star product lies in the dual: G (u*v)^T = 0
    for (int i = 0; i < pair.u_basis.rows() && out.star_products_in_dual; ++i) {
        for (int j = 0; j < pair.v_basis.rows(); ++j) {
            std::vector<FieldElement> prod = star(pair.u_basis.row(i), pair.v_basis.row(j));
            bool in_dual = true;
            for (const FieldElement& s : mat_vec(generator, prod)) {
                if (!s.is_zero()) {
                    in_dual = false;
                    break;
                }
            }
            if (!in_dual) {
                out.star_products_in_dual = false;
                break;
            }
        }
    }

    // (ii) dim U > t
    out.u_dimension = rank(pair.u_basis) > pair.t;

    // (iii) and (iv) are distances of Fourier row-subset codes; rebuild the
    // source matrix from the carried omega.
    FourierMatrix fourier = fourier_build(code.field(), code.n(), code.omega());

    // (iii) d(V-perp) > t, with V-perp spanned by the complementary dual rows
    {
        std::vector<int> v_sorted = pair.v_rows;
        std::sort(v_sorted.begin(), v_sorted.end());
        std::vector<int> perp_rows = dual_row_indices(v_sorted, code.n());
        LinearCode v_perp = unit_code_build(fourier, perp_rows);
        out.v_perp_distance = min_distance(v_perp) > pair.t;
    }

    // (iv) d(C) + d(U) > n
    {
        std::vector<int> u_sorted = pair.u_rows;
        std::sort(u_sorted.begin(), u_sorted.end());
        LinearCode u_code = unit_code_build(fourier, u_sorted);
        out.distance_sum = min_distance(code) + min_distance(u_code) > code.n();
    }

    return out;
}

DecodeResult ecp_decode(const ErrorCorrectingPair& pair, const std::vector<FieldElement>& received) {
    const LinearCode& code = pair.code;
    const FieldSpec& field = code.field();
    const int n = code.n();
    require(static_cast<int>(received.size()) == n, "ecp_decode: received word length must be n");
    for (const auto& s : received) {
        require(&s.field() == &field, "ecp_decode: symbol from a different field");
    }

    std::vector<FieldElement> synd = syndrome(code, received);
    bool clean = true;
    for (const auto& s : synd) {
        if (!s.is_zero()) {
            clean = false;
            break;
        }
    }
    if (clean) {
        return DecodeResult{DecodeStatus::NoError, received, zero_vector(field, n), std::vector<int>{}};
    }

    // Locator: a in U with (a * received) orthogonal to every row of V.
    const int t = pair.t;
    MatrixF system(field, t, t + 1);
    for (int j = 0; j < t; ++j) {
        for (int i = 0; i <= t; ++i) {
            FieldElement acc = field.zero();
            for (int c = 0; c < n; ++c) {
                acc = acc + pair.u_basis.at(i, c) * received[static_cast<std::size_t>(c)] * pair.v_basis.at(j, c);
            }
            system.set(j, i, std::move(acc));
        }
    }
    auto kernel = kernel_basis(system);
    if (kernel.empty()) return DecodeResult{DecodeStatus::Failure, {}, {}, {}};
    const std::vector<FieldElement>& locator_coefs = kernel[0];

    std::vector<FieldElement> locator = zero_vector(field, n);
    for (int c = 0; c < n; ++c) {
        FieldElement acc = field.zero();
        for (int i = 0; i <= t; ++i) acc = acc + locator_coefs[static_cast<std::size_t>(i)] * pair.u_basis.at(i, c);
        locator[static_cast<std::size_t>(c)] = std::move(acc);
    }

    std::vector<int> support;  // error positions = zeros of the locator
    for (int c = 0; c < n; ++c) {
        if (locator[static_cast<std::size_t>(c)].is_zero()) support.push_back(c);
    }
    if (support.empty() || static_cast<int>(support.size()) > n - code.k()) {
        return DecodeResult{DecodeStatus::Failure, {}, {}, {}};
    }

    // Erasure fill: solve check * e^T = syndrome with e supported on `support`.
    MatrixF columns(field, n - code.k(), static_cast<int>(support.size()));
    for (int r = 0; r < n - code.k(); ++r) {
        for (std::size_t c = 0; c < support.size(); ++c) {
            columns.set(r, static_cast<int>(c), code.check().at(r, support[c]));
        }
    }
    auto filled = solve(columns, synd);
    if (!filled.has_value()) return DecodeResult{DecodeStatus::Failure, {}, {}, {}};

    std::vector<FieldElement> error = zero_vector(field, n);
    std::vector<int> positions;
    int weight = 0;
    for (std::size_t c = 0; c < support.size(); ++c) {
        if ((*filled)[c].is_zero()) continue;
        error[static_cast<std::size_t>(support[c])] = (*filled)[c];
        positions.push_back(support[c]);
        ++weight;
    }
    if (weight > t) return DecodeResult{DecodeStatus::Failure, {}, {}, {}};

    std::vector<FieldElement> codeword;
    codeword.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        codeword.push_back(received[static_cast<std::size_t>(c)] - error[static_cast<std::size_t>(c)]);
    }
    for (const auto& s : syndrome(code, codeword)) {
        if (!s.is_zero()) throw std::logic_error("ecp_decode: corrected word fails the syndrome check");
    }
    return DecodeResult{DecodeStatus::Corrected, std::move(codeword), std::move(error), std::move(positions)};
}

std::vector<std::vector<FieldElement>> sample_messages(const LinearCode& code, std::size_t count,
                                                       std::uint64_t seed) {
    const FieldSpec& field = code.field();
    require(field.is_finite(), "sample_messages: finite fields only");
    const std::uint64_t card = field.cardinality().get_ui();
    std::vector<std::vector<FieldElement>> out;
    out.push_back(std::vector<FieldElement>(static_cast<std::size_t>(code.k()), field.zero()));
    std::mt19937_64 rng(seed);
    while (out.size() < count) {
        std::vector<FieldElement> msg;
        msg.reserve(static_cast<std::size_t>(code.k()));
        for (int i = 0; i < code.k(); ++i) msg.push_back(field.element_from_encoding(rng() % card));
        if (std::find(out.begin(), out.end(), msg) == out.end()) out.push_back(std::move(msg));
    }
    return out;
}

TrialReport exhaustive_trial(const ErrorCorrectingPair& pair, int max_weight,
                             const std::vector<std::vector<FieldElement>>& messages, int jobs,
                             std::optional<std::uint64_t> budget) {
    const LinearCode& code = pair.code;
    const FieldSpec& field = code.field();
    require(field.is_finite(), "exhaustive_trial: finite fields only");
    require(max_weight >= 0 && max_weight <= code.n(), "exhaustive_trial: weight out of range");
    require(!messages.empty(), "exhaustive_trial: at least one message required");
    const int n = code.n();
    const std::uint64_t card = field.cardinality().get_ui();
    const std::uint64_t nonzero = card - 1;

    mpz_class planned = 0;
    for (int w = 0; w <= max_weight; ++w) {
        mpz_class patterns = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(w));
        for (int i = 0; i < w; ++i) patterns *= nonzero;
        planned += patterns;
    }
    planned *= static_cast<unsigned long>(messages.size());
    const std::uint64_t cap = budget ? *budget : env_budget_override().value_or(kDefaultTrialBudget);
    if (planned > cap) {
        throw BudgetExceeded("exhaustive_trial: " + planned.get_str() + " patterns exceed the budget of " +
                             std::to_string(cap));
    }

    TrialReport report;
    report.per_weight.assign(static_cast<std::size_t>(max_weight) + 1, WeightBucket{});

    // Nonzero magnitudes in encoding order, reused across patterns.
    std::vector<FieldElement> magnitudes;
    magnitudes.reserve(nonzero);
    for (std::uint64_t enc = 1; enc < card; ++enc) magnitudes.push_back(field.element_from_encoding(enc));

    struct WorkerHit {
        std::uint64_t support_rank = UINT64_MAX;
        std::uint64_t magnitude_rank = UINT64_MAX;
        std::vector<FieldElement> error;
    };

    for (std::size_t m = 0; m < messages.size(); ++m) {
        const std::vector<FieldElement> codeword = encode(code, messages[m]);
        for (int w = 0; w <= max_weight; ++w) {
            auto& bucket = report.per_weight[static_cast<std::size_t>(w)];
            if (w == 0) {
                DecodeResult res = ecp_decode(pair, codeword);
                bool ok = res.status == DecodeStatus::NoError && res.codeword == codeword;
                ++bucket.trials;
                ++report.trials;
                if (!ok) {
                    ++bucket.failures;
                    ++report.failures;
                    if (!report.counterexample.has_value()) {
                        report.counterexample = TrialCounterexample{m, zero_vector(field, n)};
                    }
                }
                continue;
            }

            const std::uint64_t support_total =
                binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(w));
            std::uint64_t magnitude_total = 1;
            for (int i = 0; i < w; ++i) magnitude_total *= nonzero;

            const int worker_count = jobs >= 1 ? jobs : 1;
            std::vector<WorkerHit> hits(static_cast<std::size_t>(worker_count));
            std::vector<std::uint64_t> fail_counts(static_cast<std::size_t>(worker_count), 0);

            auto run = [&](int wid) {
                std::vector<FieldElement> received = codeword;
                for (std::uint64_t srank = static_cast<std::uint64_t>(wid); srank < support_total;
                     srank += static_cast<std::uint64_t>(worker_count)) {
                    std::vector<int> support = unrank_combination(srank, n, w);
                    for (std::uint64_t mrank = 0; mrank < magnitude_total; ++mrank) {
                        // decompose mrank into per-position magnitude digits, last fastest
                        std::uint64_t rest = mrank;
                        for (int i = w - 1; i >= 0; --i) {
                            const auto& mag = magnitudes[rest % nonzero];
                            rest /= nonzero;
                            const int pos = support[static_cast<std::size_t>(i)];
                            received[static_cast<std::size_t>(pos)] =
                                codeword[static_cast<std::size_t>(pos)] + mag;
                        }
                        DecodeResult res = ecp_decode(pair, received);
                        const bool ok = res.status == DecodeStatus::Corrected && res.codeword == codeword;
                        if (!ok) {
                            ++fail_counts[static_cast<std::size_t>(wid)];
                            auto& hit = hits[static_cast<std::size_t>(wid)];
                            if (srank < hit.support_rank ||
                                (srank == hit.support_rank && mrank < hit.magnitude_rank)) {
                                hit.support_rank = srank;
                                hit.magnitude_rank = mrank;
                                hit.error.assign(static_cast<std::size_t>(n), field.zero());
                                std::uint64_t rr = mrank;
                                for (int i = w - 1; i >= 0; --i) {
                                    hit.error[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] =
                                        magnitudes[rr % nonzero];
                                    rr /= nonzero;
                                }
                            }
                        }
                    }
                    for (int i : support) received[static_cast<std::size_t>(i)] = codeword[static_cast<std::size_t>(i)];
                }
            };

            if (worker_count <= 1) {
                run(0);
            } else {
                std::vector<std::thread> threads;
                threads.reserve(static_cast<std::size_t>(worker_count));
                for (int wid = 0; wid < worker_count; ++wid) threads.emplace_back(run, wid);
                for (auto& th : threads) th.join();
            }

            const std::uint64_t weight_trials = support_total * magnitude_total;
            bucket.trials += weight_trials;
            report.trials += weight_trials;
            std::uint64_t weight_failures = 0;
            const WorkerHit* best = nullptr;
            for (int wid = 0; wid < worker_count; ++wid) {
                weight_failures += fail_counts[static_cast<std::size_t>(wid)];
                const auto& hit = hits[static_cast<std::size_t>(wid)];
                if (hit.support_rank == UINT64_MAX) continue;
                if (best == nullptr || hit.support_rank < best->support_rank ||
                    (hit.support_rank == best->support_rank && hit.magnitude_rank < best->magnitude_rank)) {
                    best = &hit;
                }
            }
            bucket.failures += weight_failures;
            report.failures += weight_failures;
            if (best != nullptr && !report.counterexample.has_value()) {
                report.counterexample = TrialCounterexample{m, best->error};
            }
        }
    }
    return report;
}

ChannelStats channel_simulate(const ErrorCorrectingPair& pair, std::uint64_t trials,
                              const WeightDistribution& dist, std::uint64_t seed) {
    const LinearCode& code = pair.code;
    const FieldSpec& field = code.field();
    require(field.is_finite(), "channel_simulate: finite fields only");
    require(trials >= 1, "channel_simulate: at least one trial required");
    require(dist.min_weight >= 0 && dist.min_weight <= dist.max_weight && dist.max_weight <= code.n(),
            "channel_simulate: invalid weight distribution");

    const int n = code.n();
    const std::uint64_t card = field.cardinality().get_ui();
    std::mt19937_64 rng(seed);
    // plain modulo keeps the stream portable and reproducible
    auto below = [&](std::uint64_t bound) { return rng() % bound; };

    ChannelStats stats;
    stats.trials = trials;
    stats.seed = seed;

    std::vector<int> index_pool(static_cast<std::size_t>(n));
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::vector<FieldElement> message;
        message.reserve(static_cast<std::size_t>(code.k()));
        for (int i = 0; i < code.k(); ++i) message.push_back(field.element_from_encoding(below(card)));
        const std::vector<FieldElement> codeword = encode(code, message);

        const int w = dist.min_weight +
                      static_cast<int>(below(static_cast<std::uint64_t>(dist.max_weight - dist.min_weight + 1)));
        for (int i = 0; i < n; ++i) index_pool[static_cast<std::size_t>(i)] = i;
        std::vector<FieldElement> received = codeword;
        for (int i = 0; i < w; ++i) {
            const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(index_pool[static_cast<std::size_t>(i)], index_pool[static_cast<std::size_t>(j)]);
            const int pos = index_pool[static_cast<std::size_t>(i)];
            received[static_cast<std::size_t>(pos)] =
                received[static_cast<std::size_t>(pos)] + field.element_from_encoding(1 + below(card - 1));
        }

        DecodeResult res = ecp_decode(pair, received);
        ChannelBucket& bucket = stats.per_weight[w];
        ++bucket.trials;
        if (w == 0) {
            if (res.status == DecodeStatus::NoError) {
                ++bucket.no_error;
            } else {
                ++bucket.failed;
            }
            continue;
        }
        switch (res.status) {
            case DecodeStatus::NoError:
                // nonzero error accepted as a codeword
                ++bucket.miscorrected;
                break;
            case DecodeStatus::Corrected:
                if (res.codeword == codeword) {
                    ++bucket.corrected;
                } else {
                    ++bucket.miscorrected;
                }
                break;
            case DecodeStatus::Failure:
                ++bucket.failed;
                break;
        }
    }
    return stats;
}

}  // namespace mdscodex
