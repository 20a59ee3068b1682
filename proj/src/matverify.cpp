#include "galcoh/matverify.hpp"

#include <sstream>

#include "galcoh/error.hpp"

namespace galcoh {

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    const mpq_class n = o.norm();
    if (n == 0) fail(ErrorKind::Singular, "division by zero");
    const GaussianRational p = *this * o.conj();
    return {p.re / n, p.im / n};
}

std::string GaussianRational::str() const {
    if (im == 0) return re.get_str();
    if (re == 0) return im.get_str() + "i";
    return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
}

GaussMatrix GaussMatrix::identity(std::size_t n) {
    GaussMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

GaussMatrix GaussMatrix::diagonal(const std::vector<GaussianRational>& d) {
    GaussMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

GaussMatrix GaussMatrix::operator*(const GaussMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::InvalidInput, "matrix shapes do not match");
    GaussMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
        }
    return r;
}

GaussMatrix GaussMatrix::operator+(const GaussMatrix& o) const {
    GaussMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

GaussMatrix GaussMatrix::operator-(const GaussMatrix& o) const {
    GaussMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

GaussMatrix GaussMatrix::transpose() const {
    GaussMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

GaussMatrix GaussMatrix::conj() const {
    GaussMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].conj();
    return r;
}

GaussianRational GaussMatrix::det() const {
    if (rows_ != cols_) fail(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    GaussMatrix a = *this;
    GaussianRational d = 1;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            d = -d;
        }
        d = d * a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k).is_zero()) continue;
            const GaussianRational f = a(r, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(r, j) = a(r, j) - f * a(k, j);
        }
    }
    return d;
}

GaussMatrix GaussMatrix::inverse() const {
    if (rows_ != cols_) fail(ErrorKind::InvalidInput, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    GaussMatrix a = *this;
    GaussMatrix inv = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) fail(ErrorKind::Singular, "matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        const GaussianRational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = a(k, j) / piv;
            inv(k, j) = inv(k, j) / piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a(r, k).is_zero()) continue;
            const GaussianRational f = a(r, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(k, j);
                inv(r, j) = inv(r, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

bool GaussMatrix::is_real() const {
    for (const auto& x : data_)
        if (x.im != 0) return false;
    return true;
}

std::string GaussMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
}

GaussMatrix i4() { return GaussMatrix::identity(4); }
GaussMatrix i22() { return GaussMatrix::diagonal({1, 1, -1, -1}); }

HermitianForm::HermitianForm(GaussMatrix j) : j_(std::move(j)) {
    if (j_.rows() != j_.cols() || !(j_ == j_.conj_transpose()))
        fail(ErrorKind::InvalidInput, "form matrix is not Hermitian");
    j_inv_ = j_.inverse();
}

GaussMatrix SemilinearStructure::apply(const GaussMatrix& g) const {
    return form_.matrix() * g.conj_transpose().inverse() * form_.inverse();
}

GaussMatrix apply_structure(const SemilinearStructure& s, const GaussMatrix& g) { return s.apply(g); }

TwistedStructure::TwistedStructure(SemilinearStructure base, GaussMatrix ctilde)
    : base_(std::move(base)), c_(std::move(ctilde)) {
    c_inv_ = c_.inverse();
    if (!(c_ * base_.apply(c_) == GaussMatrix::identity(c_.rows())))
        fail(ErrorKind::NotACocycleForStructure, "c~ * S(c~) is not the identity");
}

GaussMatrix TwistedStructure::apply(const GaussMatrix& g) const { return c_ * base_.apply(g) * c_inv_; }

TwistedStructure twist_structure(const SemilinearStructure& s, const GaussMatrix& ctilde) {
    return TwistedStructure(s, ctilde);
}

namespace {

void require_sl(const GaussMatrix& g) {
    if (g.rows() != g.cols()) fail(ErrorKind::InvalidInput, "matrix is not square");
    if (!(g.det() == GaussianRational(1))) fail(ErrorKind::NotSL, "determinant is " + g.det().str() + ", not 1");
}

}  // namespace

bool unitary_check(const GaussMatrix& g, const GaussMatrix& j) {
    require_sl(g);
    return g * j * g.conj_transpose() == j;
}

bool transporter_check(const GaussMatrix& g, const GaussMatrix& j1, const GaussMatrix& j2) {
    require_sl(g);
    return g * j1 * g.conj_transpose() == j2;
}

bool transporter_check(const GaussMatrix& g) { return transporter_check(g, i4(), i22()); }

TransporterPoint transporter_point(const GaussMatrix& g, const GaussMatrix& j1, const GaussMatrix& j2) {
    return {g, ((g * j1).inverse() * j2).transpose()};
}

bool transporter_point_check(const TransporterPoint& p, const GaussMatrix& j1, const GaussMatrix& j2) {
    const GaussianRational one(1);
    return p.g.det() == one && p.gp.det() == one && p.g * j1 * p.gp.transpose() == j2;
}

TransporterPoint conjugate_point(const TransporterPoint& p) { return {p.gp.conj(), p.g.conj()}; }

std::pair<GaussMatrix, GaussMatrix> group_point(const GaussMatrix& h, const GaussMatrix& j) {
    return {h, j * h.transpose().inverse() * j.inverse()};
}

TransporterPoint act_on_point(const std::pair<GaussMatrix, GaussMatrix>& h1,
                              const std::pair<GaussMatrix, GaussMatrix>& h2, const TransporterPoint& p) {
    return {h1.first * p.g * h2.first.inverse(), h1.second * p.gp * h2.second.inverse()};
}

Signature hermitian_signature(const GaussMatrix& m) {
    if (m.rows() != m.cols() || !(m == m.conj_transpose()))
        fail(ErrorKind::NotSymmetric, "matrix is not Hermitian");
    GaussMatrix a = m;
    const std::size_t n = a.rows();
    // congruence a <- E a E*, applied as a row operation and its conjugate column operation
    auto add_row_col = [&](std::size_t dst, std::size_t src, const GaussianRational& f) {
        for (std::size_t j = 0; j < n; ++j) a(dst, j) = a(dst, j) + f * a(src, j);
        const GaussianRational fc = f.conj();
        for (std::size_t i = 0; i < n; ++i) a(i, dst) = a(i, dst) + fc * a(i, src);
    };
    auto swap_row_col = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
    };
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p).is_zero()) ++p;
        if (p == n) {
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j) {
                    if (a(i, j).is_zero()) continue;
                    // makes a(i, i) = 2 Re a(i,j), or 2 Im a(i,j) with the factor i
                    add_row_col(i, j, a(i, j).re != 0 ? GaussianRational(1) : GaussianRational::i());
                    p = i;
                    found = true;
                }
            if (!found) {
                sig.zero += static_cast<int>(n - k);
                break;
            }
        }
        swap_row_col(p, k);
        const GaussianRational piv = a(k, k);
        for (std::size_t r = k + 1; r < n; ++r)
            if (!a(r, k).is_zero()) add_row_col(r, k, -(a(r, k) / piv));
        if (piv.re > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

Signature signature(const GaussMatrix& a) {
    if (!a.is_real() || !(a == a.transpose())) fail(ErrorKind::NotSymmetric, "matrix is not real symmetric");
    return hermitian_signature(a);
}

// ---------------------------------------------------------------------------

GaussianRational MatrixSampler::scalar(bool real) {
    std::uniform_int_distribution<int> num(-height_, height_);
    std::uniform_int_distribution<int> den(1, height_);
    mpq_class re(num(rng_), den(rng_));
    re.canonicalize();
    if (real) return {re, 0};
    mpq_class im(num(rng_), den(rng_));
    im.canonicalize();
    return {re, im};
}

GaussMatrix MatrixSampler::matrix(std::size_t n, bool real) {
    GaussMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar(real);
    return m;
}

GaussMatrix MatrixSampler::invertible(std::size_t n, bool real) {
    while (true) {
        GaussMatrix m = matrix(n, real);
        if (!m.det().is_zero()) return m;
    }
}

GaussMatrix MatrixSampler::special(std::size_t n) {
    GaussMatrix m = invertible(n);
    const GaussianRational d = m.det();
    for (std::size_t j = 0; j < n; ++j) m(0, j) = m(0, j) / d;
    return m;
}

GaussMatrix MatrixSampler::special_unitary(const GaussMatrix& j) {
    const std::size_t n = j.rows();
    const GaussMatrix id = GaussMatrix::identity(n);
    while (true) {
        GaussMatrix k(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            k(r, r) = GaussianRational(0, scalar(true).re);
            for (std::size_t c = r + 1; c < n; ++c) {
                k(r, c) = scalar();
                k(c, r) = -k(r, c).conj();
            }
        }
        const GaussMatrix x = k * j;
        const GaussMatrix minus = id - x;
        if (minus.det().is_zero()) continue;
        GaussMatrix u = minus.inverse() * (id + x);
        const GaussianRational d = u.det();
        for (std::size_t r = 0; r < n; ++r) u(r, 0) = u(r, 0) / d;
        return u;
    }
}

// ---------------------------------------------------------------------------

std::vector<Check> run_paper_example(std::uint64_t seed, int samples) {
    MatrixSampler rng(seed);
    std::vector<Check> out;
    const std::string n = std::to_string(samples);
    const SemilinearStructure s22{HermitianForm(i22())};
    const SemilinearStructure s4{HermitianForm(i4())};

    out.push_back({"unitary_check(I4, I22) holds", unitary_check(i4(), i22())});
    const GaussMatrix d1 = GaussMatrix::diagonal({GaussianRational::i(), -GaussianRational::i(), 1, 1});
    out.push_back({"diag(i,-i,1,1) is I4-unitary", unitary_check(d1, i4())});
    const GaussMatrix d2 = GaussMatrix::diagonal({2, mpq_class(1, 2), 1, 1});
    out.push_back({"diag(2,1/2,1,1) is not I4-unitary", !unitary_check(d2, i4())});
    out.push_back({"S_I22(diag(2,1/2,1,1)) = diag(1/2,2,1,1)",
                   s22.apply(d2) == GaussMatrix::diagonal({mpq_class(1, 2), 2, 1, 1})});

    bool involution = true;
    for (int k = 0; k < samples; ++k) {
        const GaussMatrix g = rng.invertible(4);
        involution = involution && s22.apply(s22.apply(g)) == g && s4.apply(s4.apply(g)) == g;
    }
    out.push_back({"S_I22 and S_I4 are involutions on " + n + " samples", involution});

    bool fixed = true;
    std::vector<GaussMatrix> curated{i4(), i22(), d1, d2};
    for (int k = 0; k < samples / 4; ++k) {
        curated.push_back(rng.special_unitary(i22()));
        curated.push_back(rng.special_unitary(i4()));
        curated.push_back(rng.special(4));
    }
    for (const auto& g : curated)
        for (const SemilinearStructure* s : {&s22, &s4}) {
            if (!(g.det() == GaussianRational(1))) continue;
            fixed = fixed && ((s->apply(g) == g) == unitary_check(g, s->form().matrix()));
        }
    out.push_back({"S_J(g) = g iff g J g* = J on curated and sampled matrices", fixed});

    bool cocycle = false;
    std::optional<TwistedStructure> tw;
    try {
        tw.emplace(twist_structure(s22, i22()));
        cocycle = true;
    } catch (const Error&) {
    }
    out.push_back({"c(gamma) = I22 satisfies c * S_I22(c) = I4", cocycle});
    if (!tw) return out;

    bool identity = true, lemma = true;
    for (int k = 0; k < samples; ++k) {
        const GaussMatrix g = rng.invertible(4);
        const GaussMatrix h = rng.invertible(4);
        identity = identity && tw->apply(g) == s4.apply(g) && s4.apply(g) == g.conj_transpose().inverse();
        // μ⁰(g) = c̃ S(g) is σ⁰-equivariant for left multiplication
        lemma = lemma && i22() * s22.apply(h * g) == tw->apply(h) * (i22() * s22.apply(g));
    }
    out.push_back({"I22 * S_I22(g) * I22^-1 = S_I4(g) = (g*)^-1 on " + n + " samples", identity});
    out.push_back({"mu0(h g) = sigma0(h) mu0(g) for mu0 = c~ S on " + n + " samples", lemma});

    bool model_inv = true, model_eq = true;
    const GaussMatrix i22inv = i22().inverse();
    auto mu0 = [&](const GaussMatrix& y) { return s22.apply(y) * i22inv; };
    for (int k = 0; k < samples; ++k) {
        const GaussMatrix y = rng.special(4);
        const GaussMatrix h1 = rng.special(4);
        const GaussMatrix h2 = rng.special(4);
        model_inv = model_inv && mu0(mu0(y)) == y;
        model_eq = model_eq && mu0(h1 * y * h2.inverse()) == s22.apply(h1) * mu0(y) * s4.apply(h2).inverse();
    }
    out.push_back({"bi-action model mu0(y) = S_I22(y) I22^-1 is an involution on " + n + " samples", model_inv});
    out.push_back({"mu0((h1,h2)*y) = (S_I22(h1), S_I4(h2))*mu0(y) on " + n + " samples", model_eq});

    bool closure = true, real_structure = true;
    for (int k = 0; k < samples; ++k) {
        const TransporterPoint p = transporter_point(rng.special(4), i4(), i22());
        const auto h1 = group_point(rng.special_unitary(i22()), i22());
        const auto h2 = group_point(rng.special_unitary(i4()), i4());
        closure = closure && transporter_point_check(p, i4(), i22()) &&
                  transporter_point_check(act_on_point(h1, h2, p), i4(), i22());
        real_structure = real_structure && transporter_point_check(conjugate_point(p), i4(), i22()) &&
                         h1.second == h1.first.conj() && h2.second == h2.first.conj();
    }
    out.push_back({"transporter closed under (h1,h2)*g = h1 g h2^-1, h1 in SU(2,2), h2 in SU(4), on " + n +
                       " samples",
                   closure});
    out.push_back({"real structure preserves the transporter; SU(2,2), SU(4) samples are real points", real_structure});

    bool no_literal = true;
    for (int k = 0; k < samples; ++k) {
        const GaussMatrix g = rng.special(4);
        no_literal = no_literal && hermitian_signature(g * g.conj_transpose()) == Signature{4, 0, 0} &&
                     !transporter_check(g);
    }
    out.push_back({"g g* has signature (4,0,0) != sig(I22) on " + n + " samples: no g with g g* = I22",
                   no_literal && hermitian_signature(i22()) == Signature{2, 2, 0}});

    bool real_obstruction = true;
    for (int k = 0; k < samples; ++k) {
        const GaussMatrix g = rng.invertible(4, true);
        real_obstruction = real_obstruction && signature(g * g.transpose()) == Signature{4, 0, 0};
    }
    out.push_back({"signature(g g^t) = (4,0,0) for " + n + " random invertible real rational g",
                   real_obstruction && signature(i4()) == Signature{4, 0, 0} &&
                       signature(i22()) == Signature{2, 2, 0}});

    bool not_sl = false;
    try {
        transporter_check(GaussMatrix::diagonal({1, 1, GaussianRational::i(), GaussianRational::i()}));
    } catch (const Error& e) {
        not_sl = e.kind() == ErrorKind::NotSL;
    }
    out.push_back({"transporter_check(diag(1,1,i,i)) rejects det = -1", not_sl});
    return out;
}

}  // namespace galcoh
