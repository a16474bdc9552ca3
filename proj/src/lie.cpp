#include "liecrown/lie.hpp"

#include <stdexcept>

namespace liecrown {

LieAlgebraBuilder::LieAlgebraBuilder(PrimeField F, u32 dim)
    : F_(F), n_(dim), upper_(std::size_t(dim) * (dim ? dim - 1 : 0) / 2, Vec(dim, 0)) {}

void LieAlgebraBuilder::set(u32 i, u32 j, Vec value) {
    if (i >= n_ || j >= n_) throw std::invalid_argument("set: basis index out of range");
    if (i == j) {
        if (!is_zero(value)) throw std::invalid_argument("set: [e_i, e_i] must be zero");
        return;
    }
    for (u32& x : value) x %= F_.p();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    std::size_t idx = std::size_t(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
    upper_[idx] = flip ? vec_scale(F_, F_.neg(1), value) : value;
}

void LieAlgebraBuilder::add_term(u32 i, u32 j, u32 coeff, u32 k) {
    if (i >= n_ || j >= n_ || k >= n_) throw std::invalid_argument("add_term: index range");
    if (i == j) throw std::invalid_argument("add_term: diagonal bracket");
    bool flip = i > j;
    if (flip) std::swap(i, j);
    std::size_t idx = std::size_t(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
    u32 c = coeff % F_.p();
    upper_[idx][k] = F_.add(upper_[idx][k], flip ? F_.neg(c) : c);
}

LieAlgebra LieAlgebraBuilder::build(std::vector<std::string> names) const {
    if (names.empty()) {
        names.reserve(n_);
        for (u32 i = 0; i < n_; ++i) names.push_back("e" + std::to_string(i + 1));
    }
    if (names.size() != n_) throw std::invalid_argument("build: wrong number of names");
    LieAlgebra L(F_, n_, upper_, std::move(names));
    // Jacobi on all basis triples i < j < k.
    auto unit = [&](u32 k) {
        Vec v(n_, 0);
        v[k] = 1;
        return v;
    };
    for (u32 i = 0; i < n_; ++i)
        for (u32 j = i + 1; j < n_; ++j)
            for (u32 k = j + 1; k < n_; ++k) {
                Vec s = L.bracket(L.basis_bracket(i, j), unit(k));
                Vec t = L.bracket(L.basis_bracket(j, k), unit(i));
                Vec u = L.bracket(L.basis_bracket(k, i), unit(j));
                Vec total = vec_add(F_, vec_add(F_, s, t), u);
                if (!is_zero(total))
                    throw std::invalid_argument("Jacobi identity fails on basis triple (" +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                "," + std::to_string(k) + ")");
            }
    return L;
}

LieAlgebra::LieAlgebra(PrimeField F, u32 n, std::vector<Vec> upper,
                       std::vector<std::string> names)
    : F_(F), n_(n), upper_(std::move(upper)), names_(std::move(names)) {}

Vec LieAlgebra::basis_bracket(u32 i, u32 j) const {
    if (i == j) return Vec(n_, 0);
    if (i < j) return upper_[pair_index(i, j)];
    return vec_scale(F_, F_.neg(1), upper_[pair_index(j, i)]);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("bracket: dimension");
    Vec out(n_, 0);
    for (u32 i = 0; i < n_; ++i) {
        if (!x[i] && !y[i]) continue;
        for (u32 j = i + 1; j < n_; ++j) {
            // coefficient of c_ij in [x, y] is x_i y_j - x_j y_i
            u32 c = F_.sub(F_.mul(x[i], y[j]), F_.mul(x[j], y[i]));
            if (c) row_axpy(F_, out.data(), upper_[pair_index(i, j)].data(), c, n_);
        }
    }
    return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
    Mat m(n_, n_);
    for (u32 r = 0; r < n_; ++r) {
        Vec img(n_, 0);
        for (u32 i = 0; i < n_; ++i)
            if (x[i]) {
                // [e_i, e_r] contribution scaled by x_i
                if (i < r)
                    row_axpy(F_, img.data(), upper_[pair_index(i, r)].data(), x[i], n_);
                else if (i > r)
                    row_axpy(F_, img.data(), upper_[pair_index(r, i)].data(), F_.neg(x[i]), n_);
            }
        m.set_row(r, img);
    }
    return m;
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (!s.contains(F_, bracket(s.basis.row_vec(i), s.basis.row_vec(j)))) return false;
    return true;
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
    for (u32 i = 0; i < n_; ++i) {
        Vec ei(n_, 0);
        ei[i] = 1;
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.contains(F_, bracket(ei, s.basis.row_vec(j)))) return false;
    }
    return true;
}

Subspace LieAlgebra::closure(const std::vector<Vec>& gens, bool ideal_mode) const {
    Subspace S = Subspace::span_vectors(F_, gens, n_);
    while (true) {
        std::vector<Vec> vs;
        vs.reserve(S.dim() * (ideal_mode ? n_ : S.dim()) + S.dim());
        for (std::size_t r = 0; r < S.dim(); ++r) vs.push_back(S.basis.row_vec(r));
        std::size_t base = vs.size();
        if (ideal_mode) {
            for (u32 i = 0; i < n_; ++i) {
                Vec ei(n_, 0);
                ei[i] = 1;
                for (std::size_t r = 0; r < base; ++r) vs.push_back(bracket(ei, vs[r]));
            }
        } else {
            for (std::size_t a = 0; a < base; ++a)
                for (std::size_t b = a + 1; b < base; ++b) vs.push_back(bracket(vs[a], vs[b]));
        }
        Subspace S2 = Subspace::span_vectors(F_, vs, n_);
        if (S2.dim() == S.dim()) return S;
        S = std::move(S2);
    }
}

Subspace LieAlgebra::centralizer_of_section(const Subspace& a, const Subspace& b) const {
    if (!a.contains(F_, b) || !is_ideal(a) || !is_ideal(b))
        throw std::invalid_argument("centralizer_of_section: a/b is not a section of ideals");
    // x ↦ (reduce_b([x, u]) for each basis u of a) is linear in x; stack the
    // per-basis-vector matrices horizontally and take the left kernel.
    if (a.dim() == 0) return Subspace::full(n_);
    Mat stacked(n_, a.dim() * n_);
    for (u32 k = 0; k < n_; ++k) {
        Vec ek(n_, 0);
        ek[k] = 1;
        for (std::size_t u = 0; u < a.dim(); ++u) {
            Vec res = b.reduce(F_, bracket(ek, a.basis.row_vec(u)));
            for (u32 c = 0; c < n_; ++c) stacked.at(k, u * n_ + c) = res[c];
        }
    }
    Mat ker = left_nullspace(F_, stacked);
    return Subspace::span(F_, ker, n_);
}

Subspace LieAlgebra::center() const {
    if (n_ == 0) return Subspace::zero(0);
    return centralizer_of_section(Subspace::full(n_), Subspace::zero(n_));
}

Subspace LieAlgebra::derived_subalgebra_of(const Subspace& s) const {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            vs.push_back(bracket(s.basis.row_vec(i), s.basis.row_vec(j)));
    return Subspace::span_vectors(F_, vs, n_);
}

std::vector<Subspace> LieAlgebra::derived_series() const {
    std::vector<Subspace> series{Subspace::full(n_)};
    while (true) {
        Subspace next = derived_subalgebra_of(series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(next);
        if (next.dim() == 0) break;
    }
    return series;
}

bool LieAlgebra::is_solvable() const { return derived_series().back().dim() == 0; }

bool LieAlgebra::is_abelian_section(const Subspace& a, const Subspace& b) const {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!b.contains(F_, bracket(a.basis.row_vec(i), a.basis.row_vec(j)))) return false;
    return true;
}

Subspace LieAlgebra::core_of(const Subspace& u) const {
    // K_{t+1} = {x ∈ K_t : [L, x] ⊆ K_t}; the fixed point is the largest
    // ideal of L inside u.
    Subspace K = u;
    while (true) {
        // membership residue block plus one block per basis element of L
        Mat stacked(n_, (n_ + 1) * n_);
        for (u32 k = 0; k < n_; ++k) {
            Vec ek(n_, 0);
            ek[k] = 1;
            Vec res = K.reduce(F_, ek);
            for (u32 c = 0; c < n_; ++c) stacked.at(k, c) = res[c];
            for (u32 i = 0; i < n_; ++i) {
                Vec ei(n_, 0);
                ei[i] = 1;
                Vec r2 = K.reduce(F_, bracket(ei, ek));
                for (u32 c = 0; c < n_; ++c) stacked.at(k, (i + 1) * n_ + c) = r2[c];
            }
        }
        Subspace K2 = Subspace::span(F_, left_nullspace(F_, stacked), n_);
        if (K2.dim() == K.dim()) return K2;
        K = std::move(K2);
    }
}

std::size_t LieAlgebra::content_hash() const {
    std::size_t h = 1469598103934665603ull ^ F_.p() ^ (std::size_t(n_) << 24);
    for (const Vec& v : upper_)
        for (u32 x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
    return h;
}

SubInfo classify_subspace(const LieAlgebra& L, const Subspace& s) {
    SubInfo info{s, L.is_subalgebra(s), false};
    info.is_ideal = info.is_subalgebra && L.is_ideal(s);
    return info;
}

Vec QuotientMap::project(const Vec& v) const { return vec_mat(parent.field(), v, projection); }
Vec QuotientMap::lift(const Vec& w) const { return vec_mat(parent.field(), w, section); }

Subspace QuotientMap::pull_back(const Subspace& s) const {
    std::vector<Vec> vs;
    for (std::size_t r = 0; r < s.dim(); ++r) vs.push_back(lift(s.basis.row_vec(r)));
    for (std::size_t r = 0; r < kernel.dim(); ++r) vs.push_back(kernel.basis.row_vec(r));
    return Subspace::span_vectors(parent.field(), vs, parent.dim());
}

Subspace QuotientMap::push_forward(const Subspace& s) const {
    std::vector<Vec> vs;
    for (std::size_t r = 0; r < s.dim(); ++r) vs.push_back(project(s.basis.row_vec(r)));
    return Subspace::span_vectors(parent.field(), vs, quotient.dim());
}

QuotientMap quotient(const LieAlgebra& L, const Subspace& ideal) {
    if (!L.is_ideal(ideal)) throw std::invalid_argument("quotient: kernel is not an ideal");
    const PrimeField& F = L.field();
    const u32 n = L.dim();
    const u32 q = n - static_cast<u32>(ideal.dim());
    std::vector<bool> is_piv(n, false);
    for (auto c : ideal.pivots()) is_piv[c] = true;
    std::vector<u32> reps;  // non-pivot coordinates
    for (u32 c = 0; c < n; ++c)
        if (!is_piv[c]) reps.push_back(c);

    Mat section(q, n), projection(n, q);
    for (u32 j = 0; j < q; ++j) section.at(j, reps[j]) = 1;
    for (u32 r = 0; r < n; ++r) {
        Vec ek(n, 0);
        ek[r] = 1;
        Vec res = ideal.reduce(F, ek);  // supported on non-pivot coordinates
        for (u32 j = 0; j < q; ++j) projection.at(r, j) = res[reps[j]];
    }

    LieAlgebraBuilder b(F, q);
    for (u32 i = 0; i < q; ++i)
        for (u32 j = i + 1; j < q; ++j) {
            Vec br = L.bracket(section.row_vec(i), section.row_vec(j));
            b.set(i, j, vec_mat(F, br, projection));
        }
    std::vector<std::string> names;
    names.reserve(q);
    for (u32 j = 0; j < q; ++j) names.push_back(L.names()[reps[j]] + "~");

    QuotientMap qm{L, ideal, b.build(std::move(names)), std::move(section), std::move(projection)};
    return qm;
}

StructurePredicates structure_predicates(const LieAlgebra& L) {
    StructurePredicates sp;
    sp.center = L.center();
    sp.derived_series = L.derived_series();
    sp.is_solvable = sp.derived_series.back().dim() == 0;
    sp.jacobi_ok = true;
    return sp;
}

}  // namespace liecrown
