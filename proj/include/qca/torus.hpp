// torus.hpp — the quantum torus T_Lambda: Z^m-graded Laurent combinations
// X^alpha with ExactScalar coefficients and the twisted product
// X^alpha * X^beta = v^{Lambda(alpha,beta)} X^{alpha+beta}, plus the quantum
// cluster character attached to a decorated object I[-1] (+) M (+) P[1].

#pragma once

#include "qca/catalog.hpp"

namespace qca {

// Exponent -> coefficient; invariant: no explicit zero coefficients.
using TorusElement = std::map<DimVec, ExactScalar>;

inline void torus_insert(TorusElement& t, const DimVec& alpha, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(alpha);
    if (it == t.end()) {
        t.emplace(alpha, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

inline TorusElement torus_monomial(const DimVec& alpha, const ExactScalar& c = ExactScalar(1)) {
    TorusElement t;
    torus_insert(t, alpha, c);
    return t;
}

inline TorusElement torus_add(const TorusElement& x, const TorusElement& y) {
    TorusElement t = x;
    for (const auto& [a, c] : y) torus_insert(t, a, c);
    return t;
}

inline TorusElement torus_scale(const ExactScalar& c, const TorusElement& x) {
    TorusElement t;
    for (const auto& [a, k] : x) torus_insert(t, a, c * k);
    return t;
}

// Lambda-twisted product in T_Lambda.
inline TorusElement torus_mul(const QuiverContext& ctx, const TorusElement& x,
                              const TorusElement& y) {
    TorusElement t;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            torus_insert(t, dim_add(a, b),
                         ca * cb * ExactScalar::vpow(ctx.lambda_form(a, b), ctx.q0));
    return t;
}

// Product in the commutative torus T_m (no twist).
inline TorusElement comm_mul(const TorusElement& x, const TorusElement& y) {
    TorusElement t;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) torus_insert(t, dim_add(a, b), ca * cb);
    return t;
}

inline std::string torus_str(const TorusElement& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [a, c] : t) {
        if (!s.empty()) s += " + ";
        std::string cs = c.to_string();
        if (cs != "1") s += cs + "*";
        s += "X^" + dim_str(a);
    }
    return s;
}

// Dimension vector of an injective/projective vertex multiset.
inline DimVec inj_multiset_dim(Catalog& cat, const std::vector<int>& verts) {
    DimVec d = cat.ctx().zero_vec();
    for (int v : verts) d = dim_add(d, cat.rec(cat.inj_class(v)).dim);
    return d;
}
inline DimVec proj_multiset_dim(Catalog& cat, const std::vector<int>& verts) {
    DimVec d = cat.ctx().zero_vec();
    for (int v : verts) d = dim_add(d, cat.rec(cat.proj_class(v)).dim);
    return d;
}

// Quantum cluster character of I[-1] (+) M (+) P[1]:
//   sum_e v^{<p-e, m-e-i>} |Gr_e M| X^{(p-e)* - *(m-e-i)}.
inline TorusElement character(Catalog& cat, const std::vector<int>& inj, ClassId mod,
                              const std::vector<int>& proj) {
    const QuiverContext& ctx = cat.ctx();
    DimVec i = inj_multiset_dim(cat, inj);
    DimVec p = proj_multiset_dim(cat, proj);
    DimVec m = cat.rec(mod).dim;
    TorusElement t;
    DimVec e = ctx.zero_vec();
    while (true) {
        long long gr = cat.grassmannian_count(mod, e);
        if (gr != 0) {
            DimVec pe = dim_sub(p, e);
            DimVec mei = dim_sub(dim_sub(m, e), i);
            ExactScalar c = ExactScalar(static_cast<long>(gr)) *
                            ExactScalar::vpow(ctx.euler(pe, mei), ctx.q0);
            torus_insert(t, dim_sub(ctx.star_right(pe), ctx.star_left(mei)), c);
        }
        int v = 0;
        while (v < ctx.m && e[v] == m[v]) e[v++] = 0;
        if (v == ctx.m) break;
        ++e[v];
    }
    return t;
}

} // namespace qca
