#pragma once

#include <optional>
#include <vector>

#include "mdscodex/field.hpp"

namespace mdscodex {

/// Dense matrix over one field. Value semantics; operations never mutate
/// their inputs, so matrices can be shared freely across scan workers.
class MatrixF {
   public:
    MatrixF(const FieldSpec& base, int rows, int cols);
    static MatrixF identity(const FieldSpec& base, int n);
    static MatrixF from_rows(const FieldSpec& base, std::vector<std::vector<FieldElement>> rows);

    const FieldSpec& base() const { return *base_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const FieldElement& at(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, FieldElement v);

    std::vector<FieldElement> row(int r) const;
    std::vector<FieldElement> col(int c) const;

    MatrixF transpose() const;
    MatrixF scaled(const FieldElement& s) const;
    /// Rows [0, count) as a new matrix.
    MatrixF top_rows(int count) const;
    /// Stacks this on top of other (same base and column count).
    MatrixF stacked(const MatrixF& other) const;

    friend MatrixF operator+(const MatrixF& a, const MatrixF& b);
    friend MatrixF operator-(const MatrixF& a, const MatrixF& b);
    friend MatrixF operator*(const MatrixF& a, const MatrixF& b);
    friend bool operator==(const MatrixF& a, const MatrixF& b);
    friend bool operator!=(const MatrixF& a, const MatrixF& b) { return !(a == b); }

    bool is_zero() const;

   private:
    std::size_t index(int r, int c) const;
    const FieldSpec* base_;
    int rows_;
    int cols_;
    std::vector<FieldElement> entries_;
};

/// Exact determinant by Gaussian elimination, pivoting on the first nonzero
/// entry of each column. Prime fields take a flat residue path.
FieldElement determinant(const MatrixF& m);

int rank(const MatrixF& m);

/// Basis of {x : Mx = 0}; one vector per free column, in ascending free-column
/// order, each with a 1 in its free position.
std::vector<std::vector<FieldElement>> kernel_basis(const MatrixF& m);

/// One solution of Mx = b (free variables zero), or nullopt when inconsistent.
std::optional<std::vector<FieldElement>> solve(const MatrixF& m, const std::vector<FieldElement>& b);

/// Entries (rowset[i], colset[j]); index lists must be strictly increasing and
/// in range.
MatrixF submatrix(const MatrixF& m, const std::vector<int>& rowset, const std::vector<int>& colset);

/// Row spaces coincide (same base field and column count required).
bool row_space_equal(const MatrixF& a, const MatrixF& b);

// Vector helpers used by the code and decode layers.
FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);
std::vector<FieldElement> mat_vec(const MatrixF& m, const std::vector<FieldElement>& x);
std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& x, const MatrixF& m);

}  // namespace mdscodex
