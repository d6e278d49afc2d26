// rep.hpp — quiver representations over F_{q0^d} and the linear algebra the
// counting layer consumes: Hom spaces as intertwiner systems, kernels and
// cokernels of morphisms, sub/quotient representations from invariant
// subspace tuples, extension groups with explicit middle terms, radical,
// socle, and the path-basis models of the indecomposable projectives and
// injectives (with the Nakayama correspondence between their Hom spaces).

#pragma once

#include "qca/context.hpp"
#include "qca/linalg.hpp"

#include <cassert>
#include <tuple>

namespace qca {

struct ResourceError : std::runtime_error {
    ResourceError(const std::string& bound, long long limit, long long asked)
        : std::runtime_error("resource bound '" + bound + "' exceeded: need " +
                             std::to_string(asked) + " > limit " + std::to_string(limit)) {}
};

struct Bounds {
    long long rep_space = 1LL << 20;       // points of a representation space
    long long hom_space = 1LL << 20;       // points of a Hom/End space
    long long subspace_tuples = 1LL << 22; // subspace tuple candidates
    long long group_sweep = 1LL << 20;     // |GL| product driving an orbit sweep
};

struct Rep {
    DimVec dim;            // length m
    std::vector<Mat> maps; // one per expanded arrow, shape dim[tgt] x dim[src]

    bool operator==(const Rep& o) const { return dim == o.dim && maps == o.maps; }
};

// A morphism M -> N: one block per vertex, shape N.dim[v] x M.dim[v].
struct RepHom {
    std::vector<Mat> f;
};

inline Rep rep_zero(const QuiverContext& c) {
    Rep r;
    r.dim.assign(c.m, 0);
    r.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < r.maps.size(); ++a) r.maps[a] = Mat(0, 0);
    return r;
}

inline Rep rep_of_dim(const QuiverContext& c, const DimVec& dim) {
    Rep r;
    r.dim = dim;
    r.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < r.maps.size(); ++a)
        r.maps[a] = Mat(dim[c.expanded_arrows[a].second], dim[c.expanded_arrows[a].first]);
    return r;
}

inline Rep rep_simple(const QuiverContext& c, int v1based) {
    return rep_of_dim(c, c.unit_vec(v1based));
}

inline Rep direct_sum(const QuiverContext& c, const Rep& A, const Rep& B) {
    Rep r = rep_of_dim(c, dim_add(A.dim, B.dim));
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        for (int i = 0; i < A.dim[t]; ++i)
            for (int j = 0; j < A.dim[s]; ++j) r.maps[a].at(i, j) = A.maps[a].at(i, j);
        for (int i = 0; i < B.dim[t]; ++i)
            for (int j = 0; j < B.dim[s]; ++j)
                r.maps[a].at(A.dim[t] + i, A.dim[s] + j) = B.maps[a].at(i, j);
    }
    return r;
}

// Indecomposable projective P_i: basis of (P_i)_v is paths(i, v); an arrow
// acts by appending itself to the path.
inline Rep rep_projective(const QuiverContext& c, int v1based) {
    int i = v1based - 1;
    Rep r;
    r.dim.resize(c.m);
    for (int v = 0; v < c.m; ++v) r.dim[v] = static_cast<int>(c.paths(i, v).size());
    r.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        const auto& ps = c.paths(i, s);
        const auto& pt = c.paths(i, t);
        Mat mm(static_cast<int>(pt.size()), static_cast<int>(ps.size()));
        for (size_t col = 0; col < ps.size(); ++col) {
            std::vector<int> ext = ps[col];
            ext.push_back(static_cast<int>(a));
            auto it = std::find(pt.begin(), pt.end(), ext);
            assert(it != pt.end());
            mm.at(static_cast<int>(it - pt.begin()), static_cast<int>(col)) = 1;
        }
        r.maps[a] = std::move(mm);
    }
    return r;
}

// Indecomposable injective I_i: basis of (I_i)_v is paths(v, i); an arrow
// acts by stripping itself from the front of the path.
inline Rep rep_injective(const QuiverContext& c, int v1based) {
    int i = v1based - 1;
    Rep r;
    r.dim.resize(c.m);
    for (int v = 0; v < c.m; ++v) r.dim[v] = static_cast<int>(c.paths(v, i).size());
    r.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        const auto& ps = c.paths(s, i);
        const auto& pt = c.paths(t, i);
        Mat mm(static_cast<int>(pt.size()), static_cast<int>(ps.size()));
        for (size_t col = 0; col < ps.size(); ++col) {
            const auto& w = ps[col];
            if (!w.empty() && w.front() == static_cast<int>(a)) {
                std::vector<int> rest(w.begin() + 1, w.end());
                auto it = std::find(pt.begin(), pt.end(), rest);
                assert(it != pt.end());
                mm.at(static_cast<int>(it - pt.begin()), static_cast<int>(col)) = 1;
            }
        }
        r.maps[a] = std::move(mm);
    }
    return r;
}

// Composite of the arrow matrices along a path leaving src.
inline Mat path_matrix(const QuiverContext& c, const GaloisField& F, const Rep& r,
                       const std::vector<int>& path, int src) {
    Mat m = Mat::eye(r.dim[src]);
    for (int a : path) m = mat_mul(F, r.maps[a], m);
    return m;
}

// Flat encoding: dims then all map entries; lexicographic order on this is
// the canonical order used for class representatives.
inline std::vector<FElem> rep_encode(const Rep& r) {
    std::vector<FElem> e;
    for (int dv : r.dim) e.push_back(static_cast<FElem>(dv));
    for (const auto& mm : r.maps) e.insert(e.end(), mm.a.begin(), mm.a.end());
    return e;
}

// ---------------------------------------------------------------------------
// Hom spaces. The standard 2-term complex for path-algebra modules:
//   Phi : (+)_v Hom(M_v, N_v) -> (+)_a Hom(M_{s(a)}, N_{t(a)}),
//   Phi(f)_a = N_a f_{s(a)} - f_{t(a)} M_a,
// has kernel Hom(M,N) and cokernel Ext^1(M,N) (the algebra is hereditary).
// ---------------------------------------------------------------------------

struct HomSystem {
    // layout bookkeeping
    std::vector<int> dom_off;  // per vertex offset into domain coordinates
    std::vector<int> cod_off;  // per arrow offset into codomain coordinates
    int dom_dim = 0, cod_dim = 0;
    Mat phi;                   // cod_dim x dom_dim
};

inline HomSystem hom_system(const QuiverContext& c, const GaloisField& F, const Rep& M,
                            const Rep& N) {
    HomSystem s;
    s.dom_off.resize(c.m + 1, 0);
    for (int v = 0; v < c.m; ++v) s.dom_off[v + 1] = s.dom_off[v] + M.dim[v] * N.dim[v];
    s.dom_dim = s.dom_off[c.m];
    s.cod_off.resize(c.expanded_arrows.size() + 1, 0);
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [sv, tv] = c.expanded_arrows[a];
        s.cod_off[a + 1] = s.cod_off[a] + M.dim[sv] * N.dim[tv];
    }
    s.cod_dim = s.cod_off.back();
    s.phi = Mat(s.cod_dim, s.dom_dim);
    // domain coordinate (v, r, cidx): entry f_v(r, cidx), r < N.dim[v], cidx < M.dim[v]
    auto dom_at = [&](int v, int r, int cc) { return s.dom_off[v] + r * M.dim[v] + cc; };
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [sv, tv] = c.expanded_arrows[a];
        auto cod_at = [&](int r, int cc) { return s.cod_off[a] + r * M.dim[sv] + cc; };
        // (N_a f_s)(r,c) = sum_k N_a(r,k) f_s(k,c)
        for (int r = 0; r < N.dim[tv]; ++r)
            for (int cc = 0; cc < M.dim[sv]; ++cc)
                for (int k = 0; k < N.dim[sv]; ++k) {
                    FElem v = N.maps[a].at(r, k);
                    if (v == 0) continue;
                    int col = dom_at(sv, k, cc);
                    s.phi.at(cod_at(r, cc), col) = F.add(s.phi.at(cod_at(r, cc), col), v);
                }
        // -(f_t M_a)(r,c) = -sum_k f_t(r,k) M_a(k,c)
        for (int r = 0; r < N.dim[tv]; ++r)
            for (int cc = 0; cc < M.dim[sv]; ++cc)
                for (int k = 0; k < M.dim[tv]; ++k) {
                    FElem v = M.maps[a].at(k, cc);
                    if (v == 0) continue;
                    int col = dom_at(tv, r, k);
                    s.phi.at(cod_at(r, cc), col) =
                        F.sub(s.phi.at(cod_at(r, cc), col), v);
                }
    }
    return s;
}

inline RepHom hom_from_coords(const QuiverContext& c, const Rep& M, const Rep& N,
                              const HomSystem& s, const std::vector<FElem>& x) {
    RepHom h;
    h.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        h.f[v] = Mat(N.dim[v], M.dim[v]);
        for (int r = 0; r < N.dim[v]; ++r)
            for (int cc = 0; cc < M.dim[v]; ++cc)
                h.f[v].at(r, cc) = x[s.dom_off[v] + r * M.dim[v] + cc];
    }
    return h;
}

// Basis of Hom(M, N) over the vertex field.
inline std::vector<RepHom> hom_basis(const QuiverContext& c, const GaloisField& F, const Rep& M,
                                     const Rep& N) {
    HomSystem s = hom_system(c, F, M, N);
    Mat k = kernel_basis(F, s.phi);
    std::vector<RepHom> out;
    for (int j = 0; j < k.cols; ++j) {
        std::vector<FElem> x(s.dom_dim);
        for (int i = 0; i < s.dom_dim; ++i) x[i] = k.at(i, j);
        out.push_back(hom_from_coords(c, M, N, s, x));
    }
    return out;
}

inline int hom_dim_field(const QuiverContext& c, const GaloisField& F, const Rep& M,
                         const Rep& N) {
    HomSystem s = hom_system(c, F, M, N);
    return s.dom_dim - mat_rank(F, s.phi);
}

// Kernel basis of the intertwiner system as flat coordinate vectors; the
// hot enumeration loops (Aut orders, idempotent search, iso search) walk
// the span incrementally instead of materializing RepHoms.
struct HomSpace {
    HomSystem sys;
    std::vector<std::vector<FElem>> basis; // coordinate vectors, length dom_dim
    int dim() const { return static_cast<int>(basis.size()); }
};

inline HomSpace hom_space(const QuiverContext& c, const GaloisField& F, const Rep& M,
                          const Rep& N) {
    HomSpace hs;
    hs.sys = hom_system(c, F, M, N);
    Mat k = kernel_basis(F, hs.sys.phi);
    for (int j = 0; j < k.cols; ++j) {
        std::vector<FElem> x(hs.sys.dom_dim);
        for (int i = 0; i < hs.sys.dom_dim; ++i) x[i] = k.at(i, j);
        hs.basis.push_back(std::move(x));
    }
    return hs;
}

// Walk every F-combination of the basis (zero included), updating the
// current coordinate vector by one axpy per odometer step. fn may return
// false to stop early.
template <typename Fn>
void scan_span(const GaloisField& F, const HomSpace& hs, Fn&& fn) {
    int k = hs.dim();
    std::vector<FElem> coef(k, 0);
    std::vector<FElem> cur(hs.sys.dom_dim, 0);
    if (!fn(static_cast<const std::vector<FElem>&>(cur))) return;
    while (true) {
        int t = 0;
        while (t < k && coef[t] == F.size() - 1) ++t;
        if (t == k) break;
        // digits 0..t-1 wrap from q'-1 to 0, digit t steps forward
        for (int i = 0; i < t; ++i) {
            FElem delta = F.sub(0, coef[i]);
            coef[i] = 0;
            for (int j = 0; j < hs.sys.dom_dim; ++j)
                cur[j] = F.axpy(cur[j], delta, hs.basis[i][j]);
        }
        FElem delta = F.sub(coef[t] + 1, coef[t]);
        ++coef[t];
        for (int j = 0; j < hs.sys.dom_dim; ++j)
            cur[j] = F.axpy(cur[j], delta, hs.basis[t][j]);
        if (!fn(static_cast<const std::vector<FElem>&>(cur))) return;
    }
}

// Per-vertex block of a flat coordinate vector as a matrix N_v x M_v.
inline Mat coords_block(const Rep& M, const Rep& N, const HomSystem& sys,
                        const std::vector<FElem>& x, int v) {
    Mat b(N.dim[v], M.dim[v]);
    for (int r = 0; r < N.dim[v]; ++r)
        for (int cc = 0; cc < M.dim[v]; ++cc)
            b.at(r, cc) = x[sys.dom_off[v] + r * M.dim[v] + cc];
    return b;
}

inline bool coords_invertible(const QuiverContext& c, const GaloisField& F, const Rep& M,
                              const Rep& N, const HomSystem& sys, const std::vector<FElem>& x) {
    thread_local std::vector<FElem> buf;
    for (int v = 0; v < c.m; ++v) {
        int n = M.dim[v];
        if (n != N.dim[v]) return false;
        if (n == 0) continue;
        buf.assign(x.begin() + sys.dom_off[v], x.begin() + sys.dom_off[v] + n * n);
        if (!invertible_inplace(F, buf.data(), n)) return false;
    }
    return true;
}

inline RepHom hom_zero(const Rep& M, const Rep& N) {
    RepHom h;
    h.f.resize(M.dim.size());
    for (size_t v = 0; v < M.dim.size(); ++v) h.f[v] = Mat(N.dim[v], M.dim[v]);
    return h;
}

inline RepHom hom_identity(const Rep& M) {
    RepHom h;
    h.f.resize(M.dim.size());
    for (size_t v = 0; v < M.dim.size(); ++v) h.f[v] = Mat::eye(M.dim[v]);
    return h;
}

inline RepHom hom_compose(const GaloisField& F, const RepHom& g, const RepHom& h) {
    // g after h
    RepHom r;
    r.f.resize(h.f.size());
    for (size_t v = 0; v < h.f.size(); ++v) r.f[v] = mat_mul(F, g.f[v], h.f[v]);
    return r;
}

inline RepHom hom_add(const GaloisField& F, const RepHom& x, const RepHom& y) {
    RepHom r;
    r.f.resize(x.f.size());
    for (size_t v = 0; v < x.f.size(); ++v) r.f[v] = mat_add(F, x.f[v], y.f[v]);
    return r;
}

inline RepHom hom_scale(const GaloisField& F, FElem cc, const RepHom& x) {
    RepHom r;
    r.f.resize(x.f.size());
    for (size_t v = 0; v < x.f.size(); ++v) r.f[v] = mat_scale(F, cc, x.f[v]);
    return r;
}

inline bool hom_is_zero(const RepHom& h) {
    return std::all_of(h.f.begin(), h.f.end(), [](const Mat& m) { return m.is_zero(); });
}

inline bool hom_is_invertible(const GaloisField& F, const RepHom& h) {
    for (const auto& b : h.f)
        if (!mat_invertible(F, b)) return false;
    return true;
}

inline bool hom_equal(const RepHom& x, const RepHom& y) { return std::equal(
    x.f.begin(), x.f.end(), y.f.begin(), [](const Mat& a, const Mat& b) { return a == b; }); }

// Kernel of f: M -> N as a representation plus its inclusion into M.
inline std::pair<Rep, RepHom> kernel_rep(const QuiverContext& c, const GaloisField& F,
                                         const Rep& M, const Rep& N, const RepHom& f) {
    std::vector<Mat> kb(c.m); // columns span ker f_v
    Rep K;
    K.dim.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        kb[v] = kernel_basis(F, f.f[v]);
        K.dim[v] = kb[v].cols;
    }
    K.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        // M_a * kb_s factors through kb_t: solve kb_t * X = M_a * kb_s columnwise
        Mat img = mat_mul(F, M.maps[a], kb[s]);
        Mat X(K.dim[t], K.dim[s]);
        for (int j = 0; j < K.dim[s]; ++j) {
            std::vector<FElem> b(M.dim[t]);
            for (int i = 0; i < M.dim[t]; ++i) b[i] = img.at(i, j);
            std::vector<FElem> x;
            bool ok = mat_solve(F, kb[t], b, x);
            if (!ok) throw std::logic_error("kernel_rep: kernel not invariant");
            for (int i = 0; i < K.dim[t]; ++i) X.at(i, j) = x[i];
        }
        K.maps[a] = std::move(X);
    }
    RepHom incl;
    incl.f = std::move(kb);
    return {std::move(K), std::move(incl)};
}

// Cokernel of f: M -> N as a representation plus the projection N -> C.
inline std::pair<Rep, RepHom> coker_rep(const QuiverContext& c, const GaloisField& F,
                                        const Rep& M, const Rep& N, const RepHom& f) {
    // Per vertex: rows of rr span im(f_v); quotient coordinates live on the
    // non-pivot columns after reduction.
    std::vector<Rref> im(c.m);
    std::vector<std::vector<int>> qcols(c.m);
    Rep C;
    C.dim.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        Mat rows(M.dim[v], N.dim[v]); // rows = images of domain basis
        for (int j = 0; j < M.dim[v]; ++j)
            for (int i = 0; i < N.dim[v]; ++i) rows.at(j, i) = f.f[v].at(i, j);
        im[v] = rref(F, std::move(rows));
        std::vector<bool> is_piv(N.dim[v], false);
        for (int cidx : im[v].pivots) is_piv[cidx] = true;
        for (int cidx = 0; cidx < N.dim[v]; ++cidx)
            if (!is_piv[cidx]) qcols[v].push_back(cidx);
        C.dim[v] = static_cast<int>(qcols[v].size());
    }
    // projection pi_v: reduce a vector by im rows, read off non-pivot coords
    auto project = [&](int v, std::vector<FElem> x) {
        for (int i = 0; i < im[v].rank; ++i) {
            FElem cc = x[im[v].pivots[i]];
            if (cc == 0) continue;
            FElem fac = F.neg(cc);
            for (int j = 0; j < N.dim[v]; ++j) x[j] = F.axpy(x[j], fac, im[v].m.at(i, j));
        }
        std::vector<FElem> y(qcols[v].size());
        for (size_t j = 0; j < qcols[v].size(); ++j) y[j] = x[qcols[v][j]];
        return y;
    };
    RepHom proj;
    proj.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        proj.f[v] = Mat(C.dim[v], N.dim[v]);
        for (int j = 0; j < N.dim[v]; ++j) {
            std::vector<FElem> e(N.dim[v], 0);
            e[j] = 1;
            auto y = project(v, std::move(e));
            for (int i = 0; i < C.dim[v]; ++i) proj.f[v].at(i, j) = y[i];
        }
    }
    C.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        // C_a(pi_s(e_j)) = pi_t(N_a e_j); the section e_j -> coset basis uses qcols
        Mat X(C.dim[t], C.dim[s]);
        for (int j = 0; j < C.dim[s]; ++j) {
            std::vector<FElem> e(N.dim[s], 0);
            e[qcols[s][j]] = 1;
            std::vector<FElem> img(N.dim[t], 0);
            for (int i = 0; i < N.dim[t]; ++i) {
                FElem acc = 0;
                for (int k = 0; k < N.dim[s]; ++k)
                    acc = F.axpy(acc, N.maps[a].at(i, k), e[k]);
                img[i] = acc;
            }
            auto y = project(t, std::move(img));
            for (int i = 0; i < C.dim[t]; ++i) X.at(i, j) = y[i];
        }
        C.maps[a] = std::move(X);
    }
    return {std::move(C), std::move(proj)};
}

// Image of f: M -> N as a subrepresentation of N with its inclusion.
inline std::pair<Rep, RepHom> image_rep(const QuiverContext& c, const GaloisField& F,
                                        const Rep& M, const Rep& N, const RepHom& f) {
    std::vector<Mat> basis(c.m); // columns span im f_v
    Rep I;
    I.dim.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        Mat rows(M.dim[v], N.dim[v]);
        for (int j = 0; j < M.dim[v]; ++j)
            for (int i = 0; i < N.dim[v]; ++i) rows.at(j, i) = f.f[v].at(i, j);
        Rref rr = rref(F, std::move(rows));
        basis[v] = Mat(N.dim[v], rr.rank);
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < N.dim[v]; ++j) basis[v].at(j, i) = rr.m.at(i, j);
        I.dim[v] = rr.rank;
    }
    I.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        Mat img = mat_mul(F, N.maps[a], basis[s]);
        Mat X(I.dim[t], I.dim[s]);
        for (int j = 0; j < I.dim[s]; ++j) {
            std::vector<FElem> b(N.dim[t]);
            for (int i = 0; i < N.dim[t]; ++i) b[i] = img.at(i, j);
            std::vector<FElem> x;
            if (!mat_solve(F, basis[t], b, x))
                throw std::logic_error("image_rep: image not invariant");
            for (int i = 0; i < I.dim[t]; ++i) X.at(i, j) = x[i];
        }
        I.maps[a] = std::move(X);
    }
    RepHom incl;
    incl.f = std::move(basis);
    return {std::move(I), std::move(incl)};
}

// ---------------------------------------------------------------------------
// Invariant subspace tuples (submodules by dimension vector).
// ---------------------------------------------------------------------------

inline Rref rref_of_echelon(const Mat& b) {
    Rref r;
    r.m = b;
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            if (b.at(i, j) != 0) { r.pivots.push_back(j); break; }
    r.rank = b.rows;
    return r;
}

// Visit every submodule of M with dimension vector e; fn receives the
// per-vertex RREF row-bases. Returns the visit count.
template <typename Fn>
long long for_each_submodule(const QuiverContext& c, const GaloisField& F, const Rep& M,
                             const DimVec& e, const Bounds& bounds, Fn&& fn) {
    if (!dim_leq(e, M.dim)) return 0;
    std::vector<std::vector<Mat>> choices(c.m);
    long long total = 1;
    for (int v = 0; v < c.m; ++v) {
        choices[v] = subspaces(F, M.dim[v], e[v]);
        total *= static_cast<long long>(choices[v].size());
        if (total > bounds.subspace_tuples)
            throw ResourceError("subspace_tuples", bounds.subspace_tuples, total);
    }
    std::vector<size_t> idx(c.m, 0);
    long long hits = 0;
    while (true) {
        std::vector<Rref> rr(c.m);
        for (int v = 0; v < c.m; ++v) rr[v] = rref_of_echelon(choices[v][idx[v]]);
        bool invariant = true;
        for (size_t a = 0; a < c.expanded_arrows.size() && invariant; ++a) {
            auto [s, t] = c.expanded_arrows[a];
            const Mat& Vs = choices[s][idx[s]];
            for (int r = 0; r < Vs.rows && invariant; ++r) {
                std::vector<FElem> img(M.dim[t], 0);
                for (int i = 0; i < M.dim[t]; ++i) {
                    FElem acc = 0;
                    for (int k = 0; k < M.dim[s]; ++k)
                        acc = F.axpy(acc, M.maps[a].at(i, k), Vs.at(r, k));
                    img[i] = acc;
                }
                if (!in_rowspace(F, rr[t], std::move(img))) invariant = false;
            }
        }
        if (invariant) {
            ++hits;
            fn(choices, idx);
        }
        int v = 0;
        while (v < c.m && idx[v] + 1 == choices[v].size()) idx[v++] = 0;
        if (v == c.m) break;
        ++idx[v];
    }
    return hits;
}

// Subrepresentation on the given invariant subspace tuple (bases as RREF rows).
inline Rep sub_rep(const QuiverContext& c, const GaloisField& F, const Rep& M,
                   const std::vector<Mat>& bases) {
    Rep U;
    U.dim.resize(c.m);
    for (int v = 0; v < c.m; ++v) U.dim[v] = bases[v].rows;
    U.maps.resize(c.expanded_arrows.size());
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        Rref rt = rref_of_echelon(bases[t]);
        Mat X(U.dim[t], U.dim[s]);
        for (int r = 0; r < U.dim[s]; ++r) {
            std::vector<FElem> img(M.dim[t], 0);
            for (int i = 0; i < M.dim[t]; ++i) {
                FElem acc = 0;
                for (int k = 0; k < M.dim[s]; ++k)
                    acc = F.axpy(acc, M.maps[a].at(i, k), bases[s].at(r, k));
                img[i] = acc;
            }
            // coordinates in the RREF basis of V_t: coefficient at each pivot
            for (int i = 0; i < rt.rank; ++i) {
                FElem cc = img[rt.pivots[i]];
                X.at(i, r) = cc;
                if (cc == 0) continue;
                FElem fac = F.neg(cc);
                for (int j = 0; j < M.dim[t]; ++j)
                    img[j] = F.axpy(img[j], fac, bases[t].at(i, j));
            }
            if (!std::all_of(img.begin(), img.end(), [](FElem x) { return x == 0; }))
                throw std::logic_error("sub_rep: tuple not invariant");
        }
        U.maps[a] = std::move(X);
    }
    return U;
}

// Quotient of M by the submodule spanned by the tuple.
inline Rep quotient_rep(const QuiverContext& c, const GaloisField& F, const Rep& M,
                        const std::vector<Mat>& bases) {
    RepHom incl;
    incl.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        incl.f[v] = Mat(M.dim[v], bases[v].rows);
        for (int r = 0; r < bases[v].rows; ++r)
            for (int j = 0; j < M.dim[v]; ++j) incl.f[v].at(j, r) = bases[v].at(r, j);
    }
    Rep U = sub_rep(c, F, M, bases);
    return coker_rep(c, F, U, M, incl).first;
}

// ---------------------------------------------------------------------------
// Extensions: coset representatives of im(Phi) and their middle terms.
// ---------------------------------------------------------------------------

struct ExtSpace {
    HomSystem sys;
    std::vector<std::vector<FElem>> complement; // cocycle basis of Ext^1(M,N)
    int dim = 0;                                // over the vertex field
};

inline ExtSpace ext_space(const QuiverContext& c, const GaloisField& F, const Rep& M,
                          const Rep& N) {
    ExtSpace e;
    e.sys = hom_system(c, F, M, N);
    // rows of rr.m span im(Phi)^T; complement = standard vectors at non-pivots
    Mat rows(e.sys.dom_dim, e.sys.cod_dim);
    for (int i = 0; i < e.sys.cod_dim; ++i)
        for (int j = 0; j < e.sys.dom_dim; ++j) rows.at(j, i) = e.sys.phi.at(i, j);
    Rref rr = rref(F, std::move(rows));
    std::vector<bool> is_piv(e.sys.cod_dim, false);
    for (int p : rr.pivots) is_piv[p] = true;
    for (int i = 0; i < e.sys.cod_dim; ++i)
        if (!is_piv[i]) {
            std::vector<FElem> v(e.sys.cod_dim, 0);
            v[i] = 1;
            e.complement.push_back(std::move(v));
        }
    e.dim = static_cast<int>(e.complement.size());
    return e;
}

// Middle term of the extension 0 -> N -> E -> M -> 0 attached to a cocycle.
inline Rep extension_rep(const QuiverContext& c, const Rep& M, const Rep& N,
                         const HomSystem& sys, const std::vector<FElem>& cocycle) {
    Rep E = rep_of_dim(c, dim_add(N.dim, M.dim));
    for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
        auto [s, t] = c.expanded_arrows[a];
        for (int i = 0; i < N.dim[t]; ++i)
            for (int j = 0; j < N.dim[s]; ++j) E.maps[a].at(i, j) = N.maps[a].at(i, j);
        for (int i = 0; i < M.dim[t]; ++i)
            for (int j = 0; j < M.dim[s]; ++j)
                E.maps[a].at(N.dim[t] + i, N.dim[s] + j) = M.maps[a].at(i, j);
        // cocycle block g_a : M_s -> N_t in the upper right
        for (int i = 0; i < N.dim[t]; ++i)
            for (int j = 0; j < M.dim[s]; ++j)
                E.maps[a].at(i, N.dim[s] + j) = cocycle[sys.cod_off[a] + i * M.dim[s] + j];
    }
    return E;
}

// ---------------------------------------------------------------------------
// Radical, socle, top.
// ---------------------------------------------------------------------------

// rad(M)_v = sum of images of incoming arrows; returned as per-vertex RREF bases.
inline std::vector<Rref> radical_bases(const QuiverContext& c, const GaloisField& F,
                                       const Rep& M) {
    std::vector<Rref> out(c.m);
    for (int v = 0; v < c.m; ++v) {
        int total_rows = 0;
        for (size_t a = 0; a < c.expanded_arrows.size(); ++a)
            if (c.expanded_arrows[a].second == v) total_rows += M.dim[c.expanded_arrows[a].first];
        Mat rows(total_rows, M.dim[v]);
        int r = 0;
        for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
            auto [s, t] = c.expanded_arrows[a];
            if (t != v) continue;
            for (int j = 0; j < M.dim[s]; ++j, ++r)
                for (int i = 0; i < M.dim[v]; ++i) rows.at(r, i) = M.maps[a].at(i, j);
        }
        out[v] = rref(F, std::move(rows));
    }
    return out;
}

// soc(M)_v = joint kernel of outgoing arrows; columns span the socle.
inline std::vector<Mat> socle_bases(const QuiverContext& c, const GaloisField& F, const Rep& M) {
    std::vector<Mat> out(c.m);
    for (int v = 0; v < c.m; ++v) {
        int total_rows = 0;
        for (size_t a = 0; a < c.expanded_arrows.size(); ++a)
            if (c.expanded_arrows[a].first == v) total_rows += M.dim[c.expanded_arrows[a].second];
        Mat stack(total_rows, M.dim[v]);
        int r = 0;
        for (size_t a = 0; a < c.expanded_arrows.size(); ++a) {
            auto [s, t] = c.expanded_arrows[a];
            if (s != v) continue;
            for (int i = 0; i < M.dim[t]; ++i, ++r)
                for (int j = 0; j < M.dim[v]; ++j) stack.at(r, j) = M.maps[a].at(i, j);
        }
        out[v] = kernel_basis(F, stack);
    }
    return out;
}

} // namespace qca
