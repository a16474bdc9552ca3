#include "liecrown/lmodule.hpp"

#include <sstream>
#include <stdexcept>

namespace liecrown {

namespace {

// Operator composition in row convention: first g then f is M_g · M_f, so the
// bracket of operators θ(x_i)θ(x_j) − θ(x_j)θ(x_i) has matrix T_j·T_i − T_i·T_j.
Mat operator_bracket(const PrimeField& F, const Mat& ti, const Mat& tj) {
    return mat_sub(F, mat_mul(F, tj, ti), mat_mul(F, ti, tj));
}

Vec unit_vec(u32 n, u32 i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

Vec LAlgebraModule::act(const Vec& x, const Vec& a) const {
    const PrimeField& F = acting.field();
    Vec out(adim(), 0);
    for (u32 i = 0; i < ldim(); ++i) {
        if (x[i] == 0) continue;
        out = vec_add(F, out, vec_scale(F, x[i], vec_mat(F, a, action[i])));
    }
    return out;
}

Mat LAlgebraModule::action_of(const Vec& x) const {
    const PrimeField& F = acting.field();
    Mat t(adim(), adim());
    for (u32 i = 0; i < ldim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t e = 0; e < t.a.size(); ++e)
            t.a[e] = F.add(t.a[e], F.mul(x[i], action[i].a[e]));
    }
    return t;
}

bool LAlgebraModule::abelian_carrier() const {
    for (u32 r = 0; r < adim(); ++r)
        for (u32 s = r + 1; s < adim(); ++s)
            if (!is_zero(carrier.basis_bracket(r, s))) return false;
    return true;
}

std::size_t LAlgebraModule::content_hash() const {
    std::size_t h = acting.content_hash() * 1000003u ^ carrier.content_hash();
    for (const Mat& t : action)
        for (u32 e : t.a) h = (h * 1099511628211ull) ^ (e + 0x9e3779b9u);
    return h;
}

LAlgebraModule make_module(LieAlgebra L, LieAlgebra A, std::vector<Mat> action) {
    const PrimeField& F = L.field();
    if (!(F == A.field()))
        throw std::invalid_argument("module: acting and carrier fields differ");
    if (action.size() != L.dim())
        throw std::invalid_argument("module: need one action matrix per acting basis element");
    for (const Mat& t : action)
        if (t.rows != A.dim() || t.cols != A.dim())
            throw std::invalid_argument("module: action matrix shape mismatch");

    const u32 n = L.dim(), d = A.dim();
    // θ is a homomorphism of Lie algebras into derivations.
    for (u32 i = 0; i < n; ++i) {
        for (u32 j = i + 1; j < n; ++j) {
            Vec c = L.basis_bracket(i, j);
            Mat lhs(d, d);
            for (u32 k = 0; k < n; ++k) {
                if (c[k] == 0) continue;
                for (std::size_t e = 0; e < lhs.a.size(); ++e)
                    lhs.a[e] = F.add(lhs.a[e], F.mul(c[k], action[k].a[e]));
            }
            if (!(lhs == operator_bracket(F, action[i], action[j]))) {
                std::ostringstream os;
                os << "module: action is not a homomorphism at acting pair (" << i << "," << j
                   << "): theta([x_" << i << ",x_" << j << "]) != [theta(x_" << i << "),theta(x_"
                   << j << ")]";
                throw std::invalid_argument(os.str());
            }
        }
    }
    // Each θ(x_i) is a derivation of the carrier product.
    for (u32 i = 0; i < n; ++i) {
        for (u32 r = 0; r < d; ++r) {
            for (u32 s = r + 1; s < d; ++s) {
                Vec lhs = vec_mat(F, A.basis_bracket(r, s), action[i]);
                Vec rhs = vec_add(F, A.bracket(vec_mat(F, unit_vec(d, r), action[i]), unit_vec(d, s)),
                                  A.bracket(unit_vec(d, r), vec_mat(F, unit_vec(d, s), action[i])));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "module: theta(x_" << i << ") is not a derivation at carrier pair (" << r
                       << "," << s << ")";
                    throw std::invalid_argument(os.str());
                }
            }
        }
    }
    return LAlgebraModule{std::move(L), std::move(A), std::move(action), std::nullopt};
}

LAlgebraModule chief_factor_module(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    const PrimeField& F = L.field();
    if (a.n != L.dim() || b.n != L.dim())
        throw std::invalid_argument("section module: ambient dimension mismatch");
    if (!L.is_ideal(a) || !L.is_ideal(b))
        throw std::invalid_argument("section module: both section terms must be ideals");
    if (!a.contains(F, b))
        throw std::invalid_argument("section module: lower term not contained in upper term");
    if (a.dim() == b.dim()) throw std::invalid_argument("section module: zero section");

    // Coset representatives: residues of a's basis modulo b (span of residues
    // complements b inside a and has zeros at b's pivot columns).
    std::vector<Vec> residues;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        Vec res = b.reduce(F, a.basis.row_vec(r));
        if (!is_zero(res)) residues.push_back(res);
    }
    Subspace rep = Subspace::span_vectors(F, residues, a.n);
    const u32 q = u32(rep.dim());

    auto to_coords = [&](const Vec& ambient) { return rep.coords(b.reduce(F, ambient)); };

    LieAlgebraBuilder bld(F, q);
    for (u32 i = 0; i < q; ++i)
        for (u32 j = i + 1; j < q; ++j)
            bld.set(i, j, to_coords(L.bracket(rep.basis.row_vec(i), rep.basis.row_vec(j))));
    std::vector<std::string> names;
    for (u32 i = 0; i < q; ++i) names.push_back("s" + std::to_string(i));
    LieAlgebra carrier = bld.build(names);

    std::vector<Mat> action;
    for (u32 i = 0; i < L.dim(); ++i) {
        Mat t(q, q);
        for (u32 r = 0; r < q; ++r)
            t.set_row(r, to_coords(L.bracket(unit_vec(L.dim(), i), rep.basis.row_vec(r))));
        action.push_back(std::move(t));
    }
    LAlgebraModule m = make_module(L, std::move(carrier), std::move(action));
    m.origin = SectionOrigin{a, b, rep.basis};
    return m;
}

Vec section_project(const LAlgebraModule& m, const PrimeField& F, const Vec& ambient) {
    if (!m.origin) throw std::logic_error("section_project: module has no section origin");
    const SectionOrigin& o = *m.origin;
    Subspace rep = Subspace::from_rref(o.rep_basis, o.a.n);
    return rep.coords(o.b.reduce(F, ambient));
}

Vec section_lift(const LAlgebraModule& m, const PrimeField& F, const Vec& carrier_coords) {
    if (!m.origin) throw std::logic_error("section_lift: module has no section origin");
    return vec_mat(F, carrier_coords, m.origin->rep_basis);
}

LAlgebraModule inflate_through_quotient(const LAlgebraModule& m, const QuotientMap& qm) {
    const PrimeField& F = m.acting.field();
    if (!(qm.parent == m.acting))
        throw std::invalid_argument("inflate: quotient map is not over the acting algebra");
    for (std::size_t r = 0; r < qm.kernel.dim(); ++r) {
        Mat t = m.action_of(qm.kernel.basis.row_vec(r));
        if (!(t == Mat(m.adim(), m.adim())))
            throw std::invalid_argument("inflate: quotient kernel does not act trivially");
    }
    std::vector<Mat> action;
    for (std::size_t j = 0; j < qm.quotient.dim(); ++j)
        action.push_back(m.action_of(qm.section.row_vec(j)));
    LAlgebraModule out = make_module(qm.quotient, m.carrier, std::move(action));
    out.origin = m.origin;
    (void)F;
    return out;
}

SemidirectSum semidirect_sum(const LAlgebraModule& m) {
    const PrimeField& F = m.acting.field();
    const u32 dA = m.adim(), dL = m.ldim(), n = dA + dL;

    auto embed_a = [&](const Vec& a) {
        Vec v(n, 0);
        for (u32 c = 0; c < dA; ++c) v[c] = a[c];
        return v;
    };
    auto embed_l = [&](const Vec& x) {
        Vec v(n, 0);
        for (u32 c = 0; c < dL; ++c) v[dA + c] = x[c];
        return v;
    };

    LieAlgebraBuilder bld(F, n);
    for (u32 r = 0; r < dA; ++r)
        for (u32 s = r + 1; s < dA; ++s) bld.set(r, s, embed_a(m.carrier.basis_bracket(r, s)));
    for (u32 i = 0; i < dL; ++i)
        for (u32 j = i + 1; j < dL; ++j)
            bld.set(dA + i, dA + j, embed_l(m.acting.basis_bracket(i, j)));
    for (u32 i = 0; i < dL; ++i)
        for (u32 r = 0; r < dA; ++r) bld.set(dA + i, r, embed_a(m.action[i].row_vec(r)));

    std::vector<std::string> names;
    for (u32 r = 0; r < dA; ++r) names.push_back("a." + m.carrier.names()[r]);
    for (u32 i = 0; i < dL; ++i) names.push_back("l." + m.acting.names()[i]);
    LieAlgebra S = bld.build(names);

    Mat embA(dA, n), embL(dL, n);
    for (u32 r = 0; r < dA; ++r) embA.at(r, r) = 1;
    for (u32 i = 0; i < dL; ++i) embL.at(i, dA + i) = 1;
    Subspace imgA = Subspace::from_rref(embA, n);
    Subspace imgL = Subspace::from_rref(embL, n);
    return SemidirectSum{std::move(S), std::move(embA), std::move(embL), std::move(imgA),
                         std::move(imgL)};
}

bool is_irreducible(const LAlgebraModule& m, const Budget& budget) {
    const PrimeField& F = m.acting.field();
    const u32 d = m.adim();
    if (d == 0) return false;

    u64 est = 1;
    const u64 limit = budget.vectors();
    for (u32 i = 0; i < d; ++i) {
        if (est > limit / F.p()) throw BudgetError("irreducibility vector sweep", limit + 1, limit);
        est *= F.p();
    }
    if (est > limit) throw BudgetError("irreducibility vector sweep", est, limit);

    // One representative per scalar class: first nonzero coordinate equals 1.
    Vec v(d, 0);
    for (u32 lead = 0; lead < d; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        bool more = true;
        while (more) {
            // Cyclic submodule closure of v under all θ(x_i).
            Subspace s = Subspace::span_vectors(F, {v}, d);
            bool grew = true;
            while (grew && s.dim() < d) {
                grew = false;
                for (u32 i = 0; i < m.ldim() && !grew; ++i) {
                    for (std::size_t r = 0; r < s.dim(); ++r) {
                        Vec w = vec_mat(F, s.basis.row_vec(r), m.action[i]);
                        if (!s.contains(F, w)) {
                            s = sum(F, s, Subspace::span_vectors(F, {w}, d));
                            grew = true;
                            break;
                        }
                    }
                }
            }
            if (s.dim() < d) return false;
            // Advance the free coordinates lead+1..d-1 as a base-p odometer.
            more = false;
            for (u32 c = d; c-- > lead + 1;) {
                if (++v[c] < F.p()) {
                    more = true;
                    break;
                }
                v[c] = 0;
            }
        }
    }
    return true;
}

std::vector<Mat> hom_space(const LAlgebraModule& m1, const LAlgebraModule& m2) {
    if (!(m1.acting == m2.acting))
        throw std::invalid_argument("hom_space: modules over different acting algebras");
    const PrimeField& F = m1.acting.field();
    const u32 d1 = m1.adim(), d2 = m2.adim(), nL = m1.ldim();

    // Unknowns: h_{k,c'} = H[k][c'], row-major. Equations: (T1_i H − H T2_i)[r,c] = 0.
    Mat sys(std::size_t(d1) * d2, std::size_t(nL) * d1 * d2);
    for (u32 i = 0; i < nL; ++i) {
        for (u32 r = 0; r < d1; ++r) {
            for (u32 c = 0; c < d2; ++c) {
                std::size_t eq = (std::size_t(i) * d1 + r) * d2 + c;
                for (u32 k = 0; k < d1; ++k)
                    sys.at(std::size_t(k) * d2 + c, eq) =
                        F.add(sys.at(std::size_t(k) * d2 + c, eq), m1.action[i].at(r, k));
                for (u32 c2 = 0; c2 < d2; ++c2)
                    sys.at(std::size_t(r) * d2 + c2, eq) =
                        F.sub(sys.at(std::size_t(r) * d2 + c2, eq), m2.action[i].at(c2, c));
            }
        }
    }
    Mat sols = left_nullspace(F, sys);
    std::vector<Mat> basis;
    for (std::size_t r = 0; r < sols.rows; ++r) {
        Mat h(d1, d2);
        h.a = sols.row_vec(r);
        basis.push_back(std::move(h));
    }
    return basis;
}

namespace {

bool is_multiplicative(const PrimeField& F, const LAlgebraModule& m1, const LAlgebraModule& m2,
                       const Mat& h) {
    for (u32 r = 0; r < m1.adim(); ++r) {
        Vec hr = h.row_vec(r);
        for (u32 s = r + 1; s < m1.adim(); ++s) {
            Vec lhs = vec_mat(F, m1.carrier.basis_bracket(r, s), h);
            Vec rhs = m2.carrier.bracket(hr, h.row_vec(s));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool intertwines(const PrimeField& F, const LAlgebraModule& m1, const LAlgebraModule& m2,
                 const Mat& h) {
    for (u32 i = 0; i < m1.ldim(); ++i)
        if (!(mat_mul(F, m1.action[i], h) == mat_mul(F, h, m2.action[i]))) return false;
    return true;
}

bool is_l_iso(const PrimeField& F, const LAlgebraModule& m1, const LAlgebraModule& m2,
              const Mat& h) {
    return rank_of(F, h) == h.rows && is_multiplicative(F, m1, m2, h) &&
           intertwines(F, m1, m2, h);
}

}  // namespace

VerdictWith<Mat> l_isomorphism(const LAlgebraModule& m1, const LAlgebraModule& m2,
                               const Budget& budget) {
    const PrimeField& F = m1.acting.field();
    if (m1.adim() != m2.adim())
        return {Verdict::no_exhaustive("carrier dimensions differ"), std::nullopt};
    const u32 d = m1.adim();
    if (d == 0) return {Verdict::yes_exhaustive("both carriers are zero"), Mat(0, 0)};

    std::vector<Mat> homs = hom_space(m1, m2);
    const std::size_t h = homs.size();
    if (h == 0) return {Verdict::no_exhaustive("hom space is zero"), std::nullopt};

    u64 est = 1;
    bool exhaustive = true;
    const u64 limit = budget.vectors();
    for (std::size_t i = 0; i < h; ++i) {
        if (est > limit / F.p()) {
            exhaustive = false;
            break;
        }
        est *= F.p();
    }
    if (exhaustive && est > limit) exhaustive = false;

    if (exhaustive) {
        // Lexicographic sweep over coefficient tuples (c_0,...,c_{h-1}),
        // last coordinate fastest; skip the zero tuple.
        Vec c(h, 0);
        for (;;) {
            bool more = false;
            for (std::size_t i = h; i-- > 0;) {
                if (++c[i] < F.p()) {
                    more = true;
                    break;
                }
                c[i] = 0;
            }
            if (!more) break;
            Mat cand(d, d);
            for (std::size_t i = 0; i < h; ++i) {
                if (c[i] == 0) continue;
                for (std::size_t e = 0; e < cand.a.size(); ++e)
                    cand.a[e] = F.add(cand.a[e], F.mul(u32(c[i]), homs[i].a[e]));
            }
            if (is_l_iso(F, m1, m2, cand))
                return {Verdict::yes_exhaustive("isomorphism found by full hom-space sweep"),
                        std::move(cand)};
        }
        return {Verdict::no_exhaustive("no bijective multiplicative intertwiner in hom space"),
                std::nullopt};
    }

    // Witness mode: scalar multiples of each hom-space basis element only.
    for (const Mat& h0 : homs) {
        for (u32 cc = 1; cc < F.p(); ++cc) {
            Mat cand(d, d);
            for (std::size_t e = 0; e < cand.a.size(); ++e) cand.a[e] = F.mul(cc, h0.a[e]);
            if (is_l_iso(F, m1, m2, cand))
                return {Verdict::yes_witness("isomorphism found among scaled hom basis elements"),
                        std::move(cand)};
        }
    }
    return {Verdict::unknown("hom space too large to sweep; no basis-element witness"),
            std::nullopt};
}

ICResult i_and_c(const LAlgebraModule& m) {
    const PrimeField& F = m.acting.field();
    const u32 n = m.ldim(), d = m.adim();
    const std::size_t dd = std::size_t(d) * d;

    Mat theta(n, dd);
    for (u32 i = 0; i < n; ++i)
        for (std::size_t e = 0; e < dd; ++e) theta.at(i, e) = m.action[i].a[e];

    Subspace c_l = Subspace::span(F, left_nullspace(F, theta), n);

    // Inner-derivation matrices of the carrier: row s of Ad_r is [e_r, e_s].
    Mat stacked(n + d, dd);
    for (u32 i = 0; i < n; ++i)
        for (std::size_t e = 0; e < dd; ++e) stacked.at(i, e) = m.action[i].a[e];
    for (u32 r = 0; r < d; ++r) {
        for (u32 s = 0; s < d; ++s) {
            Vec w = m.carrier.basis_bracket(r, s);
            for (u32 c = 0; c < d; ++c) stacked.at(n + r, std::size_t(s) * d + c) = w[c];
        }
    }
    Mat ker = left_nullspace(F, stacked);
    std::vector<Vec> xs;
    for (std::size_t rr = 0; rr < ker.rows; ++rr) {
        Vec x(ker.row(rr), ker.row(rr) + n);
        xs.push_back(std::move(x));
    }
    Subspace i_l = Subspace::span_vectors(F, xs, n);
    return ICResult{std::move(c_l), std::move(i_l)};
}

LAlgebraModule trivial_module(const LieAlgebra& L) {
    LieAlgebraBuilder bld(L.field(), 1);
    LieAlgebra A = bld.build({"t0"});
    std::vector<Mat> action(L.dim(), Mat(1, 1));
    return make_module(L, std::move(A), std::move(action));
}

}  // namespace liecrown
