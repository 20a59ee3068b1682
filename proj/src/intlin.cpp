#include "galcoh/intlin.hpp"

#include <algorithm>
#include <sstream>

namespace galcoh {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r < 0) r += abs(m);
    return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const BigInt& src = (*this)(b, j);
        if (src != 0) (*this)(a, j) += k * src;
    }
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const BigInt& src = (*this)(i, b);
        if (src != 0) (*this)(i, a) += k * src;
    }
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other(k, j) != 0) out(i, j) += x * other(k, j);
        }
    return out;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

HermiteForm row_hermite(IntMatrix a, bool track_transform) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    HermiteForm out;
    if (track_transform) out.transform = IntMatrix::identity(m);

    auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        a.add_row_multiple(dst, src, k);
        if (track_transform) out.transform.add_row_multiple(dst, src, k);
    };
    auto swap = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        if (track_transform) out.transform.swap_rows(x, y);
    };

    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (a(i, col) == 0) continue;
                if (best == m || abs(a(i, col)) < abs(a(best, col))) best = i;
            }
            if (best == m) break;
            swap(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, col) == 0) continue;
                BigInt q = floor_div(a(i, col), a(r, col));
                row_op(i, r, -q);
                if (a(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(r, col) == 0) continue;
        if (a(r, col) < 0) {
            a.negate_row(r);
            if (track_transform) out.transform.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (a(i, col) == 0) continue;
            row_op(i, r, -floor_div(a(i, col), a(r, col)));
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.form = std::move(a);
    return out;
}

SmithForm smith(IntMatrix a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm out;
    out.left = IntMatrix::identity(m);
    out.right = IntMatrix::identity(n);
    out.right_inverse = IntMatrix::identity(n);

    auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        a.add_row_multiple(dst, src, k);
        out.left.add_row_multiple(dst, src, k);
    };
    // column dst += k * column src
    auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        a.add_col_multiple(dst, src, k);
        out.right.add_col_multiple(dst, src, k);
        out.right_inverse.add_row_multiple(src, dst, -k);
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        out.left.swap_rows(x, y);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        out.right.swap_cols(x, y);
        out.right_inverse.swap_rows(x, y);
    };

    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // global minimum of the trailing block as the first pivot
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                if (bi == m || abs(a(i, j)) < abs(a(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == m) break;
        swap_rows(t, bi);
        swap_cols(t, bj);

        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                row_op(i, t, -floor_div(a(i, t), a(t, t)));
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                col_op(j, t, -floor_div(a(t, j), a(t, t)));
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // bring the smallest remainder on the cross to the pivot
                std::size_t bi2 = t, bj2 = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi2, bj2))) { bi2 = i; bj2 = t; }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi2, bj2))) { bi2 = t; bj2 = j; }
                swap_rows(t, bi2);
                swap_cols(t, bj2);
                continue;
            }
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_op(t, bad, BigInt(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            out.left.negate_row(t);
        }
    }
    out.rank = t;
    out.diagonal.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = a(i, i);
    return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    const std::size_t n = a.cols();
    HermiteForm h = row_hermite(a.transpose(), true);
    std::vector<IntVector> raw;
    for (std::size_t i = h.rank(); i < n; ++i) raw.push_back(h.transform.row(i));
    if (raw.empty()) return raw;
    HermiteForm reduced = row_hermite(IntMatrix::from_rows(raw, n), false);
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < reduced.rank(); ++i) out.push_back(reduced.form.row(i));
    return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    SmithForm s = smith(a);
    IntVector c = s.left * b;
    IntVector y(a.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < s.rank) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), s.diagonal[i].get_mpz_t())) return std::nullopt;
            y[i] = c[i] / s.diagonal[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.right * y;
}

Lattice::Lattice(const std::vector<IntVector>& generators, std::size_t dim) : dim_(dim) {
    if (generators.empty()) return;
    HermiteForm h = row_hermite(IntMatrix::from_rows(generators, dim), false);
    for (std::size_t i = 0; i < h.rank(); ++i) basis_.push_back(h.form.row(i));
    pivots_ = h.pivot_cols;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
    IntVector rest = v;
    IntVector coords(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const std::size_t p = pivots_[k];
        for (std::size_t j = (k == 0 ? 0 : pivots_[k - 1] + 1); j < p; ++j)
            if (rest[j] != 0) return std::nullopt;
        if (rest[p] == 0) continue;
        if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_[k][p].get_mpz_t())) return std::nullopt;
        BigInt q = rest[p] / basis_[k][p];
        coords[k] = q;
        for (std::size_t j = p; j < dim_; ++j)
            if (basis_[k][j] != 0) rest[j] -= q * basis_[k][j];
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

IntVector Lattice::reduce(IntVector v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const std::size_t p = pivots_[k];
        BigInt q = floor_div(v[p], basis_[k][p]);
        if (q == 0) continue;
        for (std::size_t j = p; j < dim_; ++j)
            if (basis_[k][j] != 0) v[j] -= q * basis_[k][j];
    }
    return v;
}

}  // namespace galcoh
