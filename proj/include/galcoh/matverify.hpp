#pragma once

// Exact matrices over ℚ(i): Hermitian forms, the semilinear structures
// g ↦ J (ḡᵗ)⁻¹ J⁻¹ of special unitary groups, their cocycle twists, the
// transporter between two forms, and Sylvester signatures.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "galcoh/deciders.hpp"

namespace galcoh {

struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() = default;
    GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    static GaussianRational i() { return {0, 1}; }

    GaussianRational conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    /// Throws Singular on division by zero.
    GaussianRational operator/(const GaussianRational& o) const;
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

    std::string str() const;
};

class GaussMatrix {
public:
    GaussMatrix() = default;
    GaussMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static GaussMatrix identity(std::size_t n);
    static GaussMatrix diagonal(const std::vector<GaussianRational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    GaussMatrix operator*(const GaussMatrix& o) const;
    GaussMatrix operator+(const GaussMatrix& o) const;
    GaussMatrix operator-(const GaussMatrix& o) const;
    bool operator==(const GaussMatrix& o) const = default;

    GaussMatrix transpose() const;
    GaussMatrix conj() const;
    GaussMatrix conj_transpose() const { return conj().transpose(); }
    GaussianRational det() const;
    /// Throws Singular.
    GaussMatrix inverse() const;
    bool is_real() const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

GaussMatrix i4();
GaussMatrix i22();

/// J Hermitian and invertible (checked).
class HermitianForm {
public:
    explicit HermitianForm(GaussMatrix j);
    const GaussMatrix& matrix() const { return j_; }
    const GaussMatrix& inverse() const { return j_inv_; }

private:
    GaussMatrix j_;
    GaussMatrix j_inv_;
};

/// σ(g) = J (ḡᵗ)⁻¹ J⁻¹; fixed points are the g with g J ḡᵗ = J.
class SemilinearStructure {
public:
    explicit SemilinearStructure(HermitianForm form) : form_(std::move(form)) {}
    const HermitianForm& form() const { return form_; }
    GaussMatrix apply(const GaussMatrix& g) const;

private:
    HermitianForm form_;
};

GaussMatrix apply_structure(const SemilinearStructure& s, const GaussMatrix& g);

/// g ↦ c̃ S(g) c̃⁻¹ for c̃ with c̃ S(c̃) = 1.
class TwistedStructure {
public:
    TwistedStructure(SemilinearStructure base, GaussMatrix ctilde);
    GaussMatrix apply(const GaussMatrix& g) const;
    const GaussMatrix& cocycle() const { return c_; }
    const SemilinearStructure& base() const { return base_; }

private:
    SemilinearStructure base_;
    GaussMatrix c_;
    GaussMatrix c_inv_;
};

/// Throws NotACocycleForStructure.
TwistedStructure twist_structure(const SemilinearStructure& s, const GaussMatrix& ctilde);

/// det g = 1 (else NotSL) and g J ḡᵗ = J.
bool unitary_check(const GaussMatrix& g, const GaussMatrix& j);

/// det g = 1 (else NotSL) and g J₁ ḡᵗ = J₂; the defaults give {g : g ḡᵗ = I_{2,2}}.
bool transporter_check(const GaussMatrix& g, const GaussMatrix& j1, const GaussMatrix& j2);
bool transporter_check(const GaussMatrix& g);

/// Points of the transporter over ℂ written as pairs (g, g') where g' stands
/// for the conjugate coordinate: g J₁ g'ᵗ = J₂, det g = det g' = 1. The real
/// structure swaps and conjugates: (g, g') ↦ (ḡ', ḡ).
struct TransporterPoint {
    GaussMatrix g;
    GaussMatrix gp;
};
TransporterPoint transporter_point(const GaussMatrix& g, const GaussMatrix& j1, const GaussMatrix& j2);
bool transporter_point_check(const TransporterPoint& p, const GaussMatrix& j1, const GaussMatrix& j2);
TransporterPoint conjugate_point(const TransporterPoint& p);
/// The point of the unitary group of J over ℂ attached to h: (h, J (hᵗ)⁻¹ J⁻¹).
std::pair<GaussMatrix, GaussMatrix> group_point(const GaussMatrix& h, const GaussMatrix& j);
/// (h₁, h₂) * (g, g') = (h₁ g h₂⁻¹, h₁' g' h₂'⁻¹)
TransporterPoint act_on_point(const std::pair<GaussMatrix, GaussMatrix>& h1,
                              const std::pair<GaussMatrix, GaussMatrix>& h2, const TransporterPoint& p);

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Signature&) const = default;
};

/// Symmetric rational matrix (imaginary parts zero). Throws NotSymmetric.
Signature signature(const GaussMatrix& a);
/// Hermitian Gaussian-rational matrix. Throws NotSymmetric.
Signature hermitian_signature(const GaussMatrix& a);

/// Seeded samplers; entries have numerators in [-height, height] and
/// denominators in [1, height].
class MatrixSampler {
public:
    explicit MatrixSampler(std::uint64_t seed, int height = 5) : rng_(seed), height_(height) {}

    GaussianRational scalar(bool real = false);
    GaussMatrix matrix(std::size_t n, bool real = false);
    GaussMatrix invertible(std::size_t n, bool real = false);
    /// Invertible with determinant 1.
    GaussMatrix special(std::size_t n);
    /// Element of SU(J) for diagonal ±1 J via a Cayley transform, det fixed to 1.
    GaussMatrix special_unitary(const GaussMatrix& j);

private:
    std::mt19937_64 rng_;
    int height_;
};

/// The SU(2,2)/SU(4) example: every checked identity as one line.
std::vector<Check> run_paper_example(std::uint64_t seed, int samples = 100);

/// Description of the model chosen for the twisted variety, echoed by the report.
inline constexpr const char* kModelChoice =
    "model for Y = SL4 with (h1,h2)*y = h1 y h2^-1: mu(y) = S_{I22}(y); "
    "twisted by c~ = (1, I22): mu0(y) = S_{I22}(y) * I22^-1 = I22 (y*)^-1, whose fixed points are "
    "{y : y y* = I22}; transporter points are taken over C as pairs (g, g') with g g'^t = I22";

}  // namespace galcoh
