#pragma once

// Exact linear algebra over the integers: Hermite and Smith normal forms,
// integer kernels and integer solutions of linear systems.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace galcoh {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row_a += k * row_b
    void add_row_multiple(std::size_t a, std::size_t b, const BigInt& k);
    void add_col_multiple(std::size_t a, std::size_t b, const BigInt& k);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

    IntVector operator*(const IntVector& v) const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Row-style Hermite normal form: `transform * input == form`, where the
/// first `rank` rows of `form` are echelon with positive pivots and entries
/// above each pivot reduced into [0, pivot); remaining rows are zero.
struct HermiteForm {
    IntMatrix form;
    IntMatrix transform;  // unimodular; empty unless requested
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

HermiteForm row_hermite(IntMatrix a, bool track_transform);

/// `left * input * right == diag(diagonal)`, diagonal entries nonnegative,
/// each dividing the next among the nonzero ones.
struct SmithForm {
    std::vector<BigInt> diagonal;  // length min(rows, cols)
    IntMatrix left;
    IntMatrix right;
    IntMatrix right_inverse;
    std::size_t rank = 0;
};

SmithForm smith(IntMatrix a);

/// Basis (as rows) of {x in Z^n : a x = 0}, reduced to Hermite form.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Some x in Z^n with a x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// A lattice in Z^n held as a Hermite basis; supports membership, coordinates
/// and canonical reduction of vectors modulo the lattice.
class Lattice {
public:
    Lattice() = default;
    Lattice(const std::vector<IntVector>& generators, std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<IntVector>& basis() const { return basis_; }

    /// Coordinates of v in the Hermite basis, or nullopt if v is not in the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;
    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

    /// Unique representative of v + lattice with every pivot coordinate in [0, pivot).
    IntVector reduce(IntVector v) const;

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> basis_;
    std::vector<std::size_t> pivots_;
};

// Floor division for possibly negative numerators.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& m);

}  // namespace galcoh
