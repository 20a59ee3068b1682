#include "galcoh/gmod.hpp"

#include <algorithm>
#include <string>

#include "galcoh/error.hpp"
#include "galcoh/kernels.hpp"

namespace galcoh {

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Column k of `a`, reduced modulo the coordinate moduli of `m`.
ModElem column_reduced(const AbelianGammaModule& m, const IntMatrix& a, std::size_t k) {
    return m.reduce(a.col(k));
}

}  // namespace

// ---------------------------------------------------------------------------
// AbelianGammaModule

AbelianGammaModule::AbelianGammaModule(FiniteGroup gamma, std::vector<BigInt> invariant_factors, int free_rank,
                                       std::vector<IntMatrix> action)
    : gamma_(std::move(gamma)), factors_(std::move(invariant_factors)), free_rank_(free_rank),
      action_(std::move(action)) {
    for (const auto& f : factors_)
        if (f < 2) fail(ErrorKind::InvalidInput, "invariant factors must be >= 2, got " + f.get_str());
    if (free_rank_ < 0) fail(ErrorKind::InvalidInput, "negative free rank");
    if (static_cast<int>(action_.size()) != gamma_.order())
        fail(ErrorKind::InvalidInput, "need one action matrix per element of gamma");
    const std::size_t r = rank();
    for (int s = 0; s < gamma_.order(); ++s) {
        const IntMatrix& a = action_[s];
        if (a.rows() != r || a.cols() != r)
            fail(ErrorKind::InvalidInput, "action matrix of element " + std::to_string(s) + " is not " +
                                              std::to_string(r) + "x" + std::to_string(r));
        for (std::size_t k = 0; k < factors_.size(); ++k)
            for (std::size_t i = 0; i < r; ++i) {
                const BigInt image = a(i, k) * factors_[k];
                const BigInt mod = modulus(i);
                const bool ok = mod == 0 ? image == 0 : mpz_divisible_p(image.get_mpz_t(), mod.get_mpz_t()) != 0;
                if (!ok)
                    fail(ErrorKind::InvalidInput, "action matrix of element " + std::to_string(s) +
                                                      " does not respect the torsion at entry (" +
                                                      std::to_string(i) + ", " + std::to_string(k) + ")");
            }
    }
    const IntMatrix id = IntMatrix::identity(r);
    for (std::size_t k = 0; k < r; ++k)
        if (column_reduced(*this, action_[gamma_.identity()], k) != column_reduced(*this, id, k))
            fail(ErrorKind::InvalidInput, "identity of gamma does not act trivially");
    for (int s = 0; s < gamma_.order(); ++s)
        for (int t = 0; t < gamma_.order(); ++t) {
            const IntMatrix prod = action_[s] * action_[t];
            const IntMatrix& st = action_[gamma_.mul(s, t)];
            for (std::size_t k = 0; k < r; ++k)
                if (column_reduced(*this, prod, k) != column_reduced(*this, st, k))
                    fail(ErrorKind::InvalidInput, "action is not multiplicative at (" + std::to_string(s) + ", " +
                                                      std::to_string(t) + ")");
        }
}

AbelianGammaModule AbelianGammaModule::trivial(FiniteGroup gamma, std::vector<BigInt> invariant_factors,
                                               int free_rank) {
    const std::size_t r = invariant_factors.size() + static_cast<std::size_t>(free_rank);
    std::vector<IntMatrix> action(gamma.order(), IntMatrix::identity(r));
    return AbelianGammaModule(std::move(gamma), std::move(invariant_factors), free_rank, std::move(action));
}

ModElem AbelianGammaModule::reduce(ModElem v) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) v[i] = mod_floor(v[i], factors_[i]);
    return v;
}

ModElem AbelianGammaModule::act(int s, const ModElem& v) const { return reduce(action_[s] * v); }

ModElem AbelianGammaModule::add(const ModElem& a, const ModElem& b) const {
    ModElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
}

ModElem AbelianGammaModule::sub(const ModElem& a, const ModElem& b) const {
    ModElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return reduce(std::move(r));
}

ModElem AbelianGammaModule::neg(const ModElem& a) const {
    ModElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return reduce(std::move(r));
}

std::size_t AbelianGammaModule::size() const {
    if (!is_finite()) fail(ErrorKind::InvalidInput, "module has a free part");
    std::size_t n = 1;
    for (const auto& f : factors_) n *= f.get_ui();
    return n;
}

std::size_t AbelianGammaModule::index_of(const ModElem& v) const {
    const ModElem w = reduce(v);
    std::size_t idx = 0, radix = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx += w[i].get_ui() * radix;
        radix *= factors_[i].get_ui();
    }
    return idx;
}

ModElem AbelianGammaModule::element_at(std::size_t index) const {
    ModElem v(rank());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::size_t f = factors_[i].get_ui();
        v[i] = static_cast<unsigned long>(index % f);
        index /= f;
    }
    return v;
}

FiniteGroup AbelianGammaModule::as_group() const {
    const std::size_t n = size();
    std::vector<ModElem> elems(n);
    for (std::size_t i = 0; i < n; ++i) elems[i] = element_at(i);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<int>(index_of(add(elems[a], elems[b])));
    return make_group(table);
}

// ---------------------------------------------------------------------------
// Cochains

Cochain zero_cochain(const AbelianGammaModule& m, int degree) {
    return {degree, std::vector<ModElem>(ipow(m.gamma().order(), degree), m.zero())};
}

bool cochain_equal(const AbelianGammaModule& m, const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!m.equal(a.values[i], b.values[i])) return false;
    return true;
}

Cochain cochain_add(const AbelianGammaModule& m, const Cochain& a, const Cochain& b) {
    Cochain r{a.degree, a.values};
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = m.add(a.values[i], b.values[i]);
    return r;
}

Cochain cochain_sub(const AbelianGammaModule& m, const Cochain& a, const Cochain& b) {
    Cochain r{a.degree, a.values};
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = m.sub(a.values[i], b.values[i]);
    return r;
}

Cochain differential(const AbelianGammaModule& m, const Cochain& c) {
    const FiniteGroup& g = m.gamma();
    const int n = g.order();
    if (c.degree < 0 || c.degree > 2) fail(ErrorKind::InvalidInput, "differential defined for degrees 0..2");
    if (c.values.size() != ipow(n, c.degree))
        fail(ErrorKind::InvalidInput, "cochain of degree " + std::to_string(c.degree) + " needs " +
                                          std::to_string(ipow(n, c.degree)) + " values");
    Cochain out = zero_cochain(m, c.degree + 1);
    switch (c.degree) {
        case 0:
            for (int s = 0; s < n; ++s) out.values[s] = m.sub(m.act(s, c.values[0]), c.values[0]);
            break;
        case 1:
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    ModElem v = m.act(s, c.values[t]);
                    v = m.sub(v, c.values[g.mul(s, t)]);
                    out.values[s * n + t] = m.add(v, c.values[s]);
                }
            break;
        case 2:
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    for (int u = 0; u < n; ++u) {
                        ModElem v = m.act(s, c.values[t * n + u]);
                        v = m.sub(v, c.values[g.mul(s, t) * n + u]);
                        v = m.add(v, c.values[s * n + g.mul(t, u)]);
                        out.values[(s * n + t) * n + u] = m.sub(v, c.values[s * n + t]);
                    }
            break;
    }
    return out;
}

bool is_cocycle(const AbelianGammaModule& m, const Cochain& c) {
    if (c.degree > 2) fail(ErrorKind::InvalidInput, "cocycle test defined for degrees 0..2");
    return cochain_equal(m, differential(m, c), zero_cochain(m, c.degree + 1));
}

// ---------------------------------------------------------------------------
// Normalized complex

namespace detail {

std::vector<int> non_identity(const FiniteGroup& g) {
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (x != g.identity()) out.push_back(x);
    return out;
}

std::size_t normalized_size(const AbelianGammaModule& m, int degree) {
    if (degree < 0) return 0;
    return ipow(static_cast<std::size_t>(m.gamma().order() - 1), degree) * m.rank();
}

IntVector differential_column(const AbelianGammaModule& m, int degree, std::size_t column) {
    const FiniteGroup& g = m.gamma();
    const std::vector<int> nid = non_identity(g);
    const std::size_t q = nid.size();
    const std::size_t r = m.rank();
    const std::size_t k = column % r;
    std::size_t tuple_index = column / r;
    // decode the normalized source tuple
    std::vector<int> tau(degree);
    for (int i = degree - 1; i >= 0; --i) {
        tau[i] = nid[tuple_index % q];
        tuple_index /= q;
    }
    IntVector out(normalized_size(m, degree + 1));
    auto add_unit = [&](std::size_t row_tuple, const BigInt& sign) { out[row_tuple * r + k] += sign; };
    auto add_action = [&](std::size_t row_tuple, int s) {
        const IntMatrix& a = m.action(s);
        for (std::size_t i = 0; i < r; ++i) out[row_tuple * r + i] += a(i, k);
    };
    const BigInt one(1), minus(-1);
    switch (degree) {
        case 0:
            for (std::size_t si = 0; si < q; ++si) {
                add_action(si, nid[si]);
                add_unit(si, minus);
            }
            break;
        case 1:
            for (std::size_t si = 0; si < q; ++si)
                for (std::size_t ti = 0; ti < q; ++ti) {
                    const int s = nid[si], t = nid[ti];
                    const std::size_t row = si * q + ti;
                    if (t == tau[0]) add_action(row, s);
                    if (g.mul(s, t) == tau[0]) add_unit(row, minus);
                    if (s == tau[0]) add_unit(row, one);
                }
            break;
        case 2:
            for (std::size_t si = 0; si < q; ++si)
                for (std::size_t ti = 0; ti < q; ++ti)
                    for (std::size_t ui = 0; ui < q; ++ui) {
                        const int s = nid[si], t = nid[ti], u = nid[ui];
                        const std::size_t row = (si * q + ti) * q + ui;
                        if (t == tau[0] && u == tau[1]) add_action(row, s);
                        if (g.mul(s, t) == tau[0] && u == tau[1]) add_unit(row, minus);
                        if (s == tau[0] && g.mul(t, u) == tau[1]) add_unit(row, one);
                        if (s == tau[0] && t == tau[1]) add_unit(row, minus);
                    }
            break;
        default:
            fail(ErrorKind::InvalidInput, "normalized differential defined for degrees 0..2");
    }
    return out;
}

}  // namespace detail

IntMatrix normalized_differential_matrix(const AbelianGammaModule& m, int degree) {
    return kernels::omp::differential_matrix(m, degree);
}

namespace {

std::vector<BigInt> coordinate_moduli(const AbelianGammaModule& m, int degree) {
    const std::size_t n = detail::normalized_size(m, degree);
    std::vector<BigInt> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = m.modulus(i % m.rank());
    return out;
}

// Generators of {x : a x ∈ L_target}.
std::vector<IntVector> relative_kernel(const IntMatrix& a, const std::vector<BigInt>& target_moduli) {
    std::vector<std::size_t> torsion_rows;
    for (std::size_t i = 0; i < target_moduli.size(); ++i)
        if (target_moduli[i] != 0) torsion_rows.push_back(i);
    IntMatrix aug(a.rows(), a.cols() + torsion_rows.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t t = 0; t < torsion_rows.size(); ++t) aug(torsion_rows[t], a.cols() + t) = target_moduli[torsion_rows[t]];
    std::vector<IntVector> out;
    for (auto& v : integer_kernel(aug)) {
        v.resize(a.cols());
        if (std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x != 0; })) out.push_back(std::move(v));
    }
    return out;
}

struct Subquotient {
    Lattice numerator;
    Lattice denominator;
    SmithForm snf;
    AbelianInvariants invariants;
    std::size_t first_nontrivial = 0;
};

Subquotient make_subquotient(const IntMatrix& kernel_map, const std::vector<BigInt>& source_moduli,
                             const std::vector<BigInt>& target_moduli, std::vector<IntVector> image_generators) {
    const std::size_t dim = source_moduli.size();
    Subquotient sq;
    if (kernel_map.rows() == 0) {
        std::vector<IntVector> unit;
        for (std::size_t i = 0; i < dim; ++i) {
            IntVector e(dim);
            e[i] = 1;
            unit.push_back(std::move(e));
        }
        sq.numerator = Lattice(unit, dim);
    } else {
        sq.numerator = Lattice(relative_kernel(kernel_map, target_moduli), dim);
    }
    for (std::size_t i = 0; i < dim; ++i)
        if (source_moduli[i] != 0) {
            IntVector e(dim);
            e[i] = source_moduli[i];
            image_generators.push_back(std::move(e));
        }
    sq.denominator = Lattice(image_generators, dim);

    const std::size_t rk = sq.numerator.rank();
    std::vector<IntVector> rel;
    for (const auto& b : sq.denominator.basis()) {
        auto c = sq.numerator.coordinates(b);
        if (!c) fail(ErrorKind::InternalInvariantViolation, "coboundary outside the cocycle lattice");
        rel.push_back(std::move(*c));
    }
    IntMatrix r = rel.empty() ? IntMatrix(0, rk) : IntMatrix::from_rows(rel, rk);
    sq.snf = smith(r);
    // pad the diagonal to the numerator rank: missing entries are free
    std::vector<BigInt> diag(rk);
    for (std::size_t i = 0; i < rk; ++i) diag[i] = i < sq.snf.diagonal.size() ? sq.snf.diagonal[i] : BigInt(0);
    sq.snf.diagonal = diag;
    sq.first_nontrivial = rk;
    for (std::size_t i = 0; i < rk; ++i)
        if (diag[i] != 1) {
            sq.first_nontrivial = i;
            break;
        }
    for (std::size_t i = sq.first_nontrivial; i < rk; ++i) {
        if (diag[i] == 0)
            ++sq.invariants.free_rank;
        else
            sq.invariants.torsion.push_back(diag[i]);
    }
    return sq;
}

}  // namespace

AbelianInvariants subquotient_invariants(const IntMatrix& kernel_map, const std::vector<BigInt>& source_moduli,
                                         const std::vector<BigInt>& target_moduli,
                                         const std::vector<IntVector>& image_generators) {
    return make_subquotient(kernel_map, source_moduli, target_moduli, image_generators).invariants;
}

// ---------------------------------------------------------------------------
// Cohomology

namespace {

// Shift a 2-cocycle by the coboundary of the constant z(e,e) so that it
// vanishes whenever an argument is the identity.
Cochain normalize2(const AbelianGammaModule& m, const Cochain& z, ModElem* shift) {
    const int n = m.gamma().order();
    const int e = m.gamma().identity();
    const ModElem c = z.values[e * n + e];
    Cochain constant{1, std::vector<ModElem>(n, c)};
    if (shift) *shift = c;
    return cochain_sub(m, z, differential(m, constant));
}

}  // namespace

IntVector CohomologyGroup::to_normalized(const Cochain& c) const {
    const FiniteGroup& g = module_.gamma();
    const int n = g.order();
    const std::vector<int> nid = detail::non_identity(g);
    const std::size_t r = module_.rank();
    IntVector flat(detail::normalized_size(module_, degree_));
    const std::size_t tuples = flat.size() / (r ? r : 1);
    for (std::size_t ti = 0; ti < tuples; ++ti) {
        std::size_t rem = ti, full = 0, scale = 1;
        for (int d = 0; d < degree_; ++d) {
            full += static_cast<std::size_t>(nid[rem % nid.size()]) * scale;
            rem /= nid.size();
            scale *= static_cast<std::size_t>(n);
        }
        const ModElem& v = c.values[full];
        for (std::size_t i = 0; i < r; ++i) flat[ti * r + i] = v[i];
    }
    return flat;
}

Cochain CohomologyGroup::from_normalized(const IntVector& flat) const {
    const FiniteGroup& g = module_.gamma();
    const int n = g.order();
    const std::vector<int> nid = detail::non_identity(g);
    const std::size_t r = module_.rank();
    Cochain c = zero_cochain(module_, degree_);
    const std::size_t tuples = r ? flat.size() / r : 0;
    for (std::size_t ti = 0; ti < tuples; ++ti) {
        std::size_t rem = ti, full = 0, scale = 1;
        for (int d = 0; d < degree_; ++d) {
            full += static_cast<std::size_t>(nid[rem % nid.size()]) * scale;
            rem /= nid.size();
            scale *= static_cast<std::size_t>(n);
        }
        ModElem v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = flat[ti * r + i];
        c.values[full] = module_.reduce(std::move(v));
    }
    return c;
}

CohomologyGroup cohomology(const AbelianGammaModule& m, int degree) {
    if (degree < 0 || degree > 2) fail(ErrorKind::InvalidInput, "cohomology implemented for degrees 0..2");
    CohomologyGroup h;
    h.module_ = m;
    h.degree_ = degree;
    const IntMatrix d_out = normalized_differential_matrix(m, degree);
    std::vector<IntVector> image;
    if (degree > 0) {
        const IntMatrix d_in = normalized_differential_matrix(m, degree - 1);
        for (std::size_t j = 0; j < d_in.cols(); ++j) image.push_back(d_in.col(j));
    }
    Subquotient sq = make_subquotient(d_out, coordinate_moduli(m, degree), coordinate_moduli(m, degree + 1),
                                      std::move(image));
    h.invariants_ = sq.invariants;
    h.cocycles_ = std::move(sq.numerator);
    h.coboundaries_ = std::move(sq.denominator);
    h.snf_right_ = sq.snf.right;
    h.snf_diagonal_ = sq.snf.diagonal;
    h.first_nontrivial_ = sq.first_nontrivial;

    const std::size_t rk = h.cocycles_.rank();
    const std::size_t dim = h.cocycles_.dim();
    for (std::size_t i = h.first_nontrivial_; i < rk; ++i) {
        IntVector flat(dim);
        for (std::size_t j = 0; j < rk; ++j) {
            const BigInt& coef = sq.snf.right_inverse(i, j);
            if (coef == 0) continue;
            const IntVector& b = h.cocycles_.basis()[j];
            for (std::size_t x = 0; x < dim; ++x) flat[x] += coef * b[x];
        }
        h.generators_.push_back(h.from_normalized(h.coboundaries_.reduce(flat)));
    }
    return h;
}

IntVector CohomologyGroup::class_of(const Cochain& cocycle) const {
    if (cocycle.degree != degree_) fail(ErrorKind::InvalidInput, "degree mismatch");
    if (!is_cocycle(module_, cocycle)) fail(ErrorKind::NotACocycle, "cochain is not a cocycle");
    const Cochain normal = degree_ == 2 ? normalize2(module_, cocycle, nullptr) : cocycle;
    auto coords = cocycles_.coordinates(to_normalized(normal));
    if (!coords) fail(ErrorKind::InternalInvariantViolation, "normalized cocycle outside the cocycle lattice");
    const std::size_t rk = cocycles_.rank();
    IntVector out;
    for (std::size_t j = first_nontrivial_; j < rk; ++j) {
        BigInt v = 0;
        for (std::size_t i = 0; i < rk; ++i)
            if ((*coords)[i] != 0) v += (*coords)[i] * snf_right_(i, j);
        out.push_back(snf_diagonal_[j] == 0 ? v : mod_floor(v, snf_diagonal_[j]));
    }
    return out;
}

bool CohomologyGroup::is_trivial_class(const Cochain& cocycle) const {
    const IntVector c = class_of(cocycle);
    return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 0; });
}

Cochain CohomologyGroup::canonical(const Cochain& cocycle) const {
    if (!is_cocycle(module_, cocycle)) fail(ErrorKind::NotACocycle, "cochain is not a cocycle");
    const Cochain normal = degree_ == 2 ? normalize2(module_, cocycle, nullptr) : cocycle;
    return from_normalized(coboundaries_.reduce(to_normalized(normal)));
}

std::vector<Cochain> CohomologyGroup::representatives(std::size_t limit) const {
    if (!is_finite()) fail(ErrorKind::InvalidInput, "cohomology group is infinite");
    std::size_t count = 1;
    for (const auto& t : invariants_.torsion) {
        if (t > static_cast<unsigned long>(limit) || count * t.get_ui() > limit)
            fail(ErrorKind::SearchBudgetExceeded, "more than " + std::to_string(limit) + " classes");
        count *= t.get_ui();
    }
    const std::size_t dim = cocycles_.dim();
    std::vector<Cochain> reps;
    reps.reserve(count);
    std::vector<unsigned long> digits(generators_.size(), 0);
    std::vector<IntVector> gens;
    for (const auto& g : generators_) gens.push_back(to_normalized(g));
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rem = idx;
        IntVector flat(dim);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const unsigned long t = invariants_.torsion[g].get_ui();
            const unsigned long coef = rem % t;
            rem /= t;
            if (coef == 0) continue;
            for (std::size_t x = 0; x < dim; ++x) flat[x] += gens[g][x] * coef;
        }
        reps.push_back(from_normalized(coboundaries_.reduce(flat)));
    }
    std::sort(reps.begin(), reps.end(), [](const Cochain& a, const Cochain& b) { return a.values < b.values; });
    return reps;
}

std::size_t CohomologyGroup::representative_index(const Cochain& cocycle) const {
    const Cochain c = canonical(cocycle);
    const auto reps = representatives();
    auto it = std::lower_bound(reps.begin(), reps.end(), c,
                               [](const Cochain& a, const Cochain& b) { return a.values < b.values; });
    if (it == reps.end() || it->values != c.values)
        fail(ErrorKind::InternalInvariantViolation, "canonical cocycle missing from representatives");
    return static_cast<std::size_t>(it - reps.begin());
}

std::optional<Cochain> is_coboundary2(const AbelianGammaModule& m, const Cochain& z) {
    if (z.degree != 2) fail(ErrorKind::InvalidInput, "expected a 2-cochain");
    if (!is_cocycle(m, z)) fail(ErrorKind::NotACocycle, "2-cochain violates the cocycle law");
    const FiniteGroup& g = m.gamma();
    const int n = g.order();
    ModElem shift;
    const Cochain normal = normalize2(m, z, &shift);

    const IntMatrix d1 = normalized_differential_matrix(m, 1);
    const std::vector<BigInt> row_moduli = coordinate_moduli(m, 2);
    std::vector<std::size_t> torsion_rows;
    for (std::size_t i = 0; i < row_moduli.size(); ++i)
        if (row_moduli[i] != 0) torsion_rows.push_back(i);
    IntMatrix aug(d1.rows(), d1.cols() + torsion_rows.size());
    for (std::size_t i = 0; i < d1.rows(); ++i)
        for (std::size_t j = 0; j < d1.cols(); ++j) aug(i, j) = d1(i, j);
    for (std::size_t t = 0; t < torsion_rows.size(); ++t) aug(torsion_rows[t], d1.cols() + t) = row_moduli[torsion_rows[t]];

    // flatten the normalized cocycle over non-identity pairs
    const std::vector<int> nid = detail::non_identity(g);
    const std::size_t r = m.rank();
    IntVector rhs(d1.rows());
    for (std::size_t si = 0; si < nid.size(); ++si)
        for (std::size_t ti = 0; ti < nid.size(); ++ti)
            for (std::size_t i = 0; i < r; ++i)
                rhs[(si * nid.size() + ti) * r + i] = normal.values[nid[si] * n + nid[ti]][i];

    auto sol = solve_integer(aug, rhs);
    if (!sol) return std::nullopt;
    Cochain a{1, std::vector<ModElem>(n, shift)};
    for (std::size_t si = 0; si < nid.size(); ++si) {
        ModElem v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = (*sol)[si * r + i];
        a.values[nid[si]] = m.add(v, shift);
    }
    if (!cochain_equal(m, differential(m, a), z))
        fail(ErrorKind::InternalInvariantViolation, "solved 1-cochain does not bound the 2-cocycle");
    return a;
}

AbelianInvariants tate_cyclic_oracle(const AbelianGammaModule& m, int degree) {
    const FiniteGroup& g = m.gamma();
    int sigma = -1;
    for (int x = 0; x < g.order() && sigma < 0; ++x)
        if (g.element_order(x) == g.order()) sigma = x;
    if (sigma < 0) fail(ErrorKind::NotCyclic, "gamma is not cyclic");
    if (degree < 0) fail(ErrorKind::InvalidInput, "negative degree");
    const std::size_t r = m.rank();
    std::vector<BigInt> moduli(r);
    for (std::size_t i = 0; i < r; ++i) moduli[i] = m.modulus(i);

    IntMatrix sigma_minus_one = m.action(sigma);
    for (std::size_t i = 0; i < r; ++i) sigma_minus_one(i, i) -= 1;
    IntMatrix norm(r, r);
    IntMatrix power = IntMatrix::identity(r);
    for (int k = 0; k < g.order(); ++k) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) norm(i, j) += power(i, j);
        power = m.action(sigma) * power;
    }
    auto columns = [&](const IntMatrix& a) {
        std::vector<IntVector> out;
        for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.col(j));
        return out;
    };
    if (degree == 0) return subquotient_invariants(sigma_minus_one, moduli, moduli, {});
    if (degree % 2 == 1) return subquotient_invariants(norm, moduli, moduli, columns(sigma_minus_one));
    return subquotient_invariants(sigma_minus_one, moduli, moduli, columns(norm));
}

AbelianGammaModule permutation_module(const FiniteGroup& gamma, std::span<const int> subgroup) {
    if (!is_subgroup(gamma, subgroup)) fail(ErrorKind::InvalidInput, "permutation module needs a subgroup");
    std::vector<int> coset(gamma.order(), -1);
    std::vector<int> mins;
    for (int x = 0; x < gamma.order(); ++x) {
        if (coset[x] >= 0) continue;
        const int idx = static_cast<int>(mins.size());
        mins.push_back(x);
        for (int h : subgroup) coset[gamma.mul(x, h)] = idx;
    }
    const std::size_t k = mins.size();
    std::vector<IntMatrix> action;
    for (int s = 0; s < gamma.order(); ++s) {
        IntMatrix a(k, k);
        for (std::size_t j = 0; j < k; ++j) a(coset[gamma.mul(s, mins[j])], j) = 1;
        action.push_back(std::move(a));
    }
    return AbelianGammaModule(gamma, {}, static_cast<int>(k), std::move(action));
}

}  // namespace galcoh
