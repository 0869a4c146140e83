#include "mdscodex/matrix.hpp"

#include <stdexcept>

#include "mdscodex/numutil.hpp"

namespace mdscodex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct Echelon {
    MatrixF reduced;
    std::vector<int> pivot_cols;  // one per pivot row
};

// Row-reduced echelon form; pivot choice is the first row with a nonzero
// entry in the current column (no magnitude pivoting in exact arithmetic).
Echelon rref(MatrixF work) {
    const int rows = work.rows();
    const int cols = work.cols();
    std::vector<int> pivots;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int sel = -1;
        for (int r = pr; r < rows; ++r) {
            if (!work.at(r, pc).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pr) {
            for (int c = 0; c < cols; ++c) {
                FieldElement tmp = work.at(pr, c);
                work.set(pr, c, work.at(sel, c));
                work.set(sel, c, tmp);
            }
        }
        const FieldElement inv = work.at(pr, pc).inv();
        for (int c = pc; c < cols; ++c) work.set(pr, c, work.at(pr, c) * inv);
        for (int r = 0; r < rows; ++r) {
            if (r == pr || work.at(r, pc).is_zero()) continue;
            const FieldElement factor = work.at(r, pc);
            for (int c = pc; c < cols; ++c) {
                work.set(r, c, work.at(r, c) - factor * work.at(pr, c));
            }
        }
        pivots.push_back(pc);
        ++pr;
    }
    return {std::move(work), std::move(pivots)};
}

FieldElement determinant_generic(const MatrixF& m) {
    const FieldSpec& base = m.base();
    const int n = m.rows();
    MatrixF work = m;
    FieldElement det = base.one();
    for (int pc = 0; pc < n; ++pc) {
        int sel = -1;
        for (int r = pc; r < n; ++r) {
            if (!work.at(r, pc).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) return base.zero();
        if (sel != pc) {
            for (int c = pc; c < n; ++c) {
                FieldElement tmp = work.at(pc, c);
                work.set(pc, c, work.at(sel, c));
                work.set(sel, c, tmp);
            }
            det = -det;
        }
        const FieldElement pivot = work.at(pc, pc);
        det = det * pivot;
        const FieldElement inv = pivot.inv();
        for (int r = pc + 1; r < n; ++r) {
            if (work.at(r, pc).is_zero()) continue;
            const FieldElement factor = work.at(r, pc) * inv;
            for (int c = pc; c < n; ++c) {
                work.set(r, c, work.at(r, c) - factor * work.at(pc, c));
            }
        }
    }
    return det;
}

std::int64_t determinant_prime(const MatrixF& m) {
    const std::int64_t q = m.base().characteristic();
    const int n = m.rows();
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            auto coeffs = m.at(r, c).finite_coeffs();
            a[static_cast<std::size_t>(r * n + c)] = coeffs.empty() ? 0 : coeffs[0];
        }
    }
    std::int64_t det = 1;
    for (int pc = 0; pc < n; ++pc) {
        int sel = -1;
        for (int r = pc; r < n; ++r) {
            if (a[static_cast<std::size_t>(r * n + pc)] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) return 0;
        if (sel != pc) {
            for (int c = pc; c < n; ++c) {
                std::swap(a[static_cast<std::size_t>(pc * n + c)], a[static_cast<std::size_t>(sel * n + c)]);
            }
            det = q - det;
        }
        const std::int64_t pivot = a[static_cast<std::size_t>(pc * n + pc)];
        det = det * pivot % q;
        const std::int64_t inv = mod_inv(pivot, q);
        for (int r = pc + 1; r < n; ++r) {
            const std::int64_t head = a[static_cast<std::size_t>(r * n + pc)];
            if (head == 0) continue;
            const std::int64_t factor = head * inv % q;
            for (int c = pc; c < n; ++c) {
                auto& dst = a[static_cast<std::size_t>(r * n + c)];
                dst = mod_reduce(dst - factor * a[static_cast<std::size_t>(pc * n + c)], q);
            }
        }
    }
    return det % q;
}

}  // namespace

MatrixF::MatrixF(const FieldSpec& base, int rows, int cols)
    : base_(&base), rows_(rows), cols_(cols) {
    require(rows >= 1 && cols >= 1, "matrix: dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), base.zero());
}

MatrixF MatrixF::identity(const FieldSpec& base, int n) {
    MatrixF m(base, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, base.one());
    return m;
}

MatrixF MatrixF::from_rows(const FieldSpec& base, std::vector<std::vector<FieldElement>> rows) {
    require(!rows.empty() && !rows[0].empty(), "from_rows: empty input");
    MatrixF m(base, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == rows[0].size(), "from_rows: ragged rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m.set(static_cast<int>(r), static_cast<int>(c), std::move(rows[r][c]));
        }
    }
    return m;
}

std::size_t MatrixF::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

void MatrixF::set(int r, int c, FieldElement v) {
    require(&v.field() == base_, "matrix: entry from a different field");
    entries_[index(r, c)] = std::move(v);
}

std::vector<FieldElement> MatrixF::row(int r) const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

std::vector<FieldElement> MatrixF::col(int c) const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

MatrixF MatrixF::transpose() const {
    MatrixF m(*base_, cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
    }
    return m;
}

MatrixF MatrixF::scaled(const FieldElement& s) const {
    MatrixF m(*base_, rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c) * s);
    }
    return m;
}

MatrixF MatrixF::top_rows(int count) const {
    require(count >= 1 && count <= rows_, "top_rows: count out of range");
    MatrixF m(*base_, count, cols_);
    for (int r = 0; r < count; ++r) {
        for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
    }
    return m;
}

MatrixF MatrixF::stacked(const MatrixF& other) const {
    require(base_ == other.base_ && cols_ == other.cols_, "stacked: shape or base mismatch");
    MatrixF m(*base_, rows_ + other.rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
    }
    for (int r = 0; r < other.rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.set(rows_ + r, c, other.at(r, c));
    }
    return m;
}

MatrixF operator+(const MatrixF& a, const MatrixF& b) {
    require(a.base_ == b.base_ && a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix add: shape or base mismatch");
    MatrixF m(*a.base_, a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c) + b.at(r, c));
    }
    return m;
}

MatrixF operator-(const MatrixF& a, const MatrixF& b) {
    require(a.base_ == b.base_ && a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sub: shape or base mismatch");
    MatrixF m(*a.base_, a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c) - b.at(r, c));
    }
    return m;
}

MatrixF operator*(const MatrixF& a, const MatrixF& b) {
    require(a.base_ == b.base_, "matrix mul: base mismatch");
    require(a.cols_ == b.rows_, "matrix mul: inner dimension mismatch");
    MatrixF m(*a.base_, a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < b.cols_; ++c) {
            FieldElement acc = a.base_->zero();
            for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(r, k) * b.at(k, c);
            m.set(r, c, std::move(acc));
        }
    }
    return m;
}

bool operator==(const MatrixF& a, const MatrixF& b) {
    if (a.base_ != b.base_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.entries_ == b.entries_;
}

bool MatrixF::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

FieldElement determinant(const MatrixF& m) {
    require(m.rows() == m.cols(), "determinant: matrix is not square");
    if (m.base().kind() == FieldKind::Prime) {
        return m.base().from_integer(determinant_prime(m));
    }
    return determinant_generic(m);
}

int rank(const MatrixF& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<std::vector<FieldElement>> kernel_basis(const MatrixF& m) {
    const FieldSpec& base = m.base();
    Echelon e = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int pc : e.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<FieldElement> v(static_cast<std::size_t>(cols), base.zero());
        v[static_cast<std::size_t>(free)] = base.one();
        for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr) {
            int pc = e.pivot_cols[pr];
            v[static_cast<std::size_t>(pc)] = -e.reduced.at(static_cast<int>(pr), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> solve(const MatrixF& m, const std::vector<FieldElement>& b) {
    require(static_cast<int>(b.size()) == m.rows(), "solve: right-hand side length mismatch");
    const FieldSpec& base = m.base();
    MatrixF aug(base, m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, m.cols(), b[static_cast<std::size_t>(r)]);
    }
    Echelon e = rref(std::move(aug));
    for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr) {
        if (e.pivot_cols[pr] == m.cols()) return std::nullopt;  // pivot in the constant column
    }
    std::vector<FieldElement> x(static_cast<std::size_t>(m.cols()), base.zero());
    for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr) {
        x[static_cast<std::size_t>(e.pivot_cols[pr])] = e.reduced.at(static_cast<int>(pr), m.cols());
    }
    return x;
}

MatrixF submatrix(const MatrixF& m, const std::vector<int>& rowset, const std::vector<int>& colset) {
    require(!rowset.empty() && !colset.empty(), "submatrix: empty index set");
    auto check = [](const std::vector<int>& idx, int bound, const char* what) {
        int prev = -1;
        for (int i : idx) {
            if (i <= prev) throw std::invalid_argument(std::string("submatrix: ") + what +
                                                       " indices must be strictly increasing");
            if (i < 0 || i >= bound) throw std::out_of_range(std::string("submatrix: ") + what +
                                                             " index out of range");
            prev = i;
        }
    };
    check(rowset, m.rows(), "row");
    check(colset, m.cols(), "column");
    MatrixF out(m.base(), static_cast<int>(rowset.size()), static_cast<int>(colset.size()));
    for (std::size_t r = 0; r < rowset.size(); ++r) {
        for (std::size_t c = 0; c < colset.size(); ++c) {
            out.set(static_cast<int>(r), static_cast<int>(c), m.at(rowset[r], colset[c]));
        }
    }
    return out;
}

bool row_space_equal(const MatrixF& a, const MatrixF& b) {
    require(&a.base() == &b.base(), "row_space_equal: base field mismatch");
    require(a.cols() == b.cols(), "row_space_equal: column count mismatch");
    const int ra = rank(a);
    const int rb = rank(b);
    if (ra != rb) return false;
    return rank(a.stacked(b)) == ra;
}

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    require(!a.empty() && a.size() == b.size(), "dot: length mismatch");
    FieldElement acc = a[0].field().zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

std::vector<FieldElement> mat_vec(const MatrixF& m, const std::vector<FieldElement>& x) {
    require(static_cast<int>(x.size()) == m.cols(), "mat_vec: length mismatch");
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) out.push_back(dot(m.row(r), x));
    return out;
}

std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& x, const MatrixF& m) {
    require(static_cast<int>(x.size()) == m.rows(), "vec_mat: length mismatch");
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) out.push_back(dot(x, m.col(c)));
    return out;
}

}  // namespace mdscodex
