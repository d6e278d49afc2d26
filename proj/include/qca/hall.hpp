// hall.hpp — the Lambda-twisted derived Hall subalgebra on decorated objects
// I[-1] (+) M (+) P[1], with structure constants backed by the counting
// layer. Products are computed by splitting each basis symbol into
// normal-ordered generator factors, rewriting words to the normal order
// I[-1] < modules < P[1] with the eight generator relations, and re-fusing.
// Also: the comultiplication, the twisted tensor products, the integration
// map into the commutative torus, mu, and both constructions of psi.

#pragma once

#include "qca/torus.hpp"

namespace qca {

struct DecoratedObject {
    std::vector<int> inj;  // sorted vertex multiset of the I[-1] part
    ClassId mod = -1;      // the module part (zero class allowed)
    std::vector<int> proj; // sorted vertex multiset of the P[1] part

    bool operator<(const DecoratedObject& o) const {
        return std::tie(inj, mod, proj) < std::tie(o.inj, o.mod, o.proj);
    }
    bool operator==(const DecoratedObject& o) const {
        return inj == o.inj && mod == o.mod && proj == o.proj;
    }
};

using HallElement = std::map<DecoratedObject, ExactScalar>;
using TensorElement = std::map<std::pair<DecoratedObject, DecoratedObject>, ExactScalar>;
using TorusTensor = std::map<std::pair<DimVec, DimVec>, ExactScalar>;

inline void hall_insert(HallElement& h, const DecoratedObject& o, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = h.find(o);
    if (it == h.end()) {
        h.emplace(o, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
}

inline void tensor_insert(TensorElement& t, const DecoratedObject& a, const DecoratedObject& b,
                          const ExactScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

class HallAlgebra {
public:
    explicit HallAlgebra(Catalog& cat) : cat_(&cat), ctx_(&cat.ctx()) {}

    Catalog& catalog() { return *cat_; }
    const QuiverContext& ctx() const { return *ctx_; }

    ExactScalar v(long k) const { return ExactScalar::vpow(k, ctx_->q0); }

    DecoratedObject object(std::vector<int> inj, ClassId mod, std::vector<int> proj) const {
        std::sort(inj.begin(), inj.end());
        std::sort(proj.begin(), proj.end());
        return DecoratedObject{std::move(inj), mod, std::move(proj)};
    }
    DecoratedObject module_object(ClassId mod) const { return object({}, mod, {}); }

    HallElement unit() { return basis(module_object(cat_->zero_class())); }
    HallElement basis(const DecoratedObject& o) {
        HallElement h;
        hall_insert(h, o, ExactScalar(1));
        return h;
    }

    // Dim of the decorated object in K(D^b): m - i - p.
    DimVec grading(const DecoratedObject& o) {
        return dim_sub(dim_sub(cat_->rec(o.mod).dim, inj_multiset_dim(*cat_, o.inj)),
                       proj_multiset_dim(*cat_, o.proj));
    }

    // --- the Lambda-twisted product -----------------------------------------

    HallElement hall_mul(const HallElement& a, const HallElement& b) {
        HallElement out;
        for (const auto& [x, cx] : a)
            for (const auto& [y, cy] : b) {
                const HallElement& p = basis_mul(x, y);
                ExactScalar c = cx * cy;
                for (const auto& [o, co] : p) hall_insert(out, o, c * co);
            }
        return out;
    }

    // The untwisted (q-level) product of the derived Hall algebra: the
    // Lambda twist is by gradings, so it divides off termwise.
    HallElement hall_mul_untwisted(const HallElement& a, const HallElement& b) {
        HallElement out;
        for (const auto& [x, cx] : a)
            for (const auto& [y, cy] : b) {
                const HallElement& p = basis_mul(x, y);
                ExactScalar c =
                    cx * cy *
                    v(-ctx_->lambda_form(ctx_->star_right(grading(x)), ctx_->star_right(grading(y))));
                for (const auto& [o, co] : p) hall_insert(out, o, c * co);
            }
        return out;
    }

    // --- comultiplication and tensor products --------------------------------

    // Delta(u_{I[-1] (+) L (+) P[1]}) =
    //   sum q^{<m-i, n-p>} F^L_{MN} (u_{M (+) I[-1]} (x) u_{N (+) P[1]})
    TensorElement comult(const HallElement& a) {
        TensorElement out;
        for (const auto& [o, c] : a) {
            const Rep& L = cat_->rec(o.mod).canonical;
            DimVec ih = inj_multiset_dim(*cat_, o.inj);
            DimVec ph = proj_multiset_dim(*cat_, o.proj);
            DimVec e = ctx_->zero_vec();
            while (true) {
                for_each_submodule(
                    *ctx_, cat_->field(), L, e, cat_->bounds(),
                    [&](const std::vector<std::vector<Mat>>& choices,
                        const std::vector<size_t>& idx) {
                        std::vector<Mat> bases(ctx_->m);
                        for (int vtx = 0; vtx < ctx_->m; ++vtx) bases[vtx] = choices[vtx][idx[vtx]];
                        ClassId sub = cat_->class_of(sub_rep(*ctx_, cat_->field(), L, bases));
                        ClassId quot = cat_->class_of(quotient_rep(*ctx_, cat_->field(), L, bases));
                        DimVec mh = cat_->rec(quot).dim, nh = cat_->rec(sub).dim;
                        ExactScalar coef =
                            c * v(2 * ctx_->euler(dim_sub(mh, ih), dim_sub(nh, ph)));
                        tensor_insert(out, object(o.inj, quot, {}), object({}, sub, o.proj), coef);
                    });
                int vtx = 0;
                while (vtx < ctx_->m && e[vtx] == L.dim[vtx]) e[vtx++] = 0;
                if (vtx == ctx_->m) break;
                ++e[vtx];
            }
        }
        return out;
    }

    // q-level twisted tensor product:
    //   (u_A (x) u_B) * (u_A' (x) u_B') = q^{x0} (u_A * u_A') (x) (u_B * u_B'),
    //   x0 = (gr B, gr A') + <gr A, gr B'>.
    TensorElement tensor_mul_q(const TensorElement& x, const TensorElement& y) {
        TensorElement out;
        for (const auto& [xp, cx] : x)
            for (const auto& [yp, cy] : y) {
                long x0 = ctx_->sym(grading(xp.second), grading(yp.first)) +
                          ctx_->euler(grading(xp.first), grading(yp.second));
                ExactScalar c = cx * cy * v(2 * x0);
                HallElement left = hall_mul_untwisted(basis(xp.first), basis(yp.first));
                HallElement right = hall_mul_untwisted(basis(xp.second), basis(yp.second));
                for (const auto& [lo, lc] : left)
                    for (const auto& [ro, rc] : right)
                        tensor_insert(out, lo, ro, c * lc * rc);
            }
        return out;
    }

    // Lambda-twisted tensor product: v^lambda with
    //   lambda = Lambda((gr A + gr B)*, (gr A' + gr B')*)
    // stacked on the q-level product.
    TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) {
        TensorElement out;
        for (const auto& [xp, cx] : x)
            for (const auto& [yp, cy] : y) {
                DimVec gl = dim_add(grading(xp.first), grading(xp.second));
                DimVec gr = dim_add(grading(yp.first), grading(yp.second));
                long lam = ctx_->lambda_form(ctx_->star_right(gl), ctx_->star_right(gr));
                TensorElement xe, ye;
                tensor_insert(xe, xp.first, xp.second, cx);
                tensor_insert(ye, yp.first, yp.second, cy);
                TensorElement q = tensor_mul_q(xe, ye);
                for (const auto& [key, c] : q)
                    tensor_insert(out, key.first, key.second, c * v(lam));
            }
        return out;
    }

    // --- integration, mu, psi -------------------------------------------------

    // u_{X.} -> X^{Dim X.} into the commutative torus T_m.
    TorusElement integrate(const HallElement& a) {
        TorusElement t;
        for (const auto& [o, c] : a) torus_insert(t, grading(o), c);
        return t;
    }

    TorusTensor integrate2(const TensorElement& a) {
        TorusTensor t;
        for (const auto& [key, c] : a) {
            auto k = std::make_pair(grading(key.first), grading(key.second));
            auto it = t.find(k);
            if (it == t.end()) t.emplace(k, c);
            else {
                it->second += c;
                if (it->second.is_zero()) t.erase(it);
            }
        }
        return t;
    }

    // Twisted product on T_m (x) T_m:
    //   (X^a (x) X^b) * (X^c (x) X^d) =
    //     q^{1/2 Lambda((a+b)*, (c+d)*) + (b,c) + <a,d>} X^{a+c} (x) X^{b+d}.
    TorusTensor torus_tensor_mul(const TorusTensor& x, const TorusTensor& y) {
        TorusTensor out;
        for (const auto& [xp, cx] : x)
            for (const auto& [yp, cy] : y) {
                long e = ctx_->lambda_form(ctx_->star_right(dim_add(xp.first, xp.second)),
                                           ctx_->star_right(dim_add(yp.first, yp.second))) +
                         2 * ctx_->sym(xp.second, yp.first) +
                         2 * ctx_->euler(xp.first, yp.second);
                auto k = std::make_pair(dim_add(xp.first, yp.first), dim_add(xp.second, yp.second));
                ExactScalar c = cx * cy * v(e);
                auto it = out.find(k);
                if (it == out.end()) out.emplace(k, c);
                else {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        return out;
    }

    // mu(X^a (x) X^b) = v^{-(a,b) - <a,b>} X^{-*a - b*}
    TorusElement mu(const TorusTensor& x) {
        TorusElement t;
        for (const auto& [key, c] : x) {
            const DimVec& a = key.first;
            const DimVec& b = key.second;
            ExactScalar coef = c * v(-ctx_->sym(a, b) - ctx_->euler(a, b));
            torus_insert(t, dim_sub(dim_neg(ctx_->star_left(a)), ctx_->star_right(b)), coef);
        }
        return t;
    }

    // psi by the closed character formula.
    TorusElement psi_closed(const HallElement& a) {
        TorusElement t;
        for (const auto& [o, c] : a)
            t = torus_add(t, torus_scale(c, character(*cat_, o.inj, o.mod, o.proj)));
        return t;
    }

    // psi as the composite mu . (int (x) int) . Delta.
    TorusElement psi_composed(const HallElement& a) { return mu(integrate2(comult(a))); }

    // --- basis products (memoized) --------------------------------------------

    const HallElement& basis_mul(const DecoratedObject& x, const DecoratedObject& y) {
        auto key = std::make_pair(x, y);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        HallElement out = rewrite(x, y);
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    struct Atom {
        int kind; // 0 = I[-1], 1 = module, 2 = P[1]
        std::vector<int> verts;
        ClassId mod = -1;
    };
    struct Term {
        ExactScalar coef;
        std::vector<Atom> word;
    };

    std::vector<Atom> word_of(const DecoratedObject& o) const {
        std::vector<Atom> w;
        if (!o.inj.empty()) w.push_back({0, o.inj, -1});
        if (o.mod != cat_->zero_class()) w.push_back({1, {}, o.mod});
        if (!o.proj.empty()) w.push_back({2, o.proj, -1});
        return w;
    }

    // v-exponent of the fusion constant: u_{I[-1](+)M(+)P[1]} =
    // v^{L(i*,m*) + L(m*,p*) - L(i*,p*)} u_{I[-1]} * u_M * u_{P[1]}
    long fusion_exponent(const DimVec& i, const DimVec& m, const DimVec& p) const {
        auto L = [&](const DimVec& a, const DimVec& b) {
            return ctx_->lambda_form(ctx_->star_right(a), ctx_->star_right(b));
        };
        return L(i, m) + L(m, p) - L(i, p);
    }

    DimVec atom_dim(const Atom& a) {
        if (a.kind == 1) return cat_->rec(a.mod).dim;
        return a.kind == 0 ? inj_multiset_dim(*cat_, a.verts) : proj_multiset_dim(*cat_, a.verts);
    }

    HallElement rewrite(const DecoratedObject& x, const DecoratedObject& y) {
        auto L = [&](const DimVec& a, const DimVec& b) {
            return ctx_->lambda_form(ctx_->star_right(a), ctx_->star_right(b));
        };
        DimVec xi = inj_multiset_dim(*cat_, x.inj), xp = proj_multiset_dim(*cat_, x.proj);
        DimVec yi = inj_multiset_dim(*cat_, y.inj), yp = proj_multiset_dim(*cat_, y.proj);
        Term start;
        start.coef = v(fusion_exponent(xi, cat_->rec(x.mod).dim, xp) +
                       fusion_exponent(yi, cat_->rec(y.mod).dim, yp));
        start.word = word_of(x);
        for (Atom& a : word_of(y)) start.word.push_back(std::move(a));

        HallElement out;
        std::vector<Term> work{std::move(start)};
        while (!work.empty()) {
            Term t = std::move(work.back());
            work.pop_back();
            // leftmost reducible adjacent pair
            int pos = -1;
            for (size_t i = 0; i + 1 < t.word.size(); ++i)
                if (t.word[i].kind >= t.word[i + 1].kind) {
                    pos = static_cast<int>(i);
                    break;
                }
            if (pos < 0) {
                // normal order: fuse into a basis symbol
                DecoratedObject o{{}, cat_->zero_class(), {}};
                for (const Atom& a : t.word) {
                    if (a.kind == 0) o.inj = a.verts;
                    else if (a.kind == 2) o.proj = a.verts;
                    else o.mod = a.mod;
                }
                ExactScalar c =
                    t.coef * v(-fusion_exponent(inj_multiset_dim(*cat_, o.inj),
                                                cat_->rec(o.mod).dim,
                                                proj_multiset_dim(*cat_, o.proj)));
                hall_insert(out, o, c);
                continue;
            }
            const Atom a = t.word[pos];
            const Atom b = t.word[pos + 1];
            auto emit = [&](ExactScalar scale, std::vector<Atom> repl) {
                Term nt;
                nt.coef = t.coef * scale;
                nt.word.assign(t.word.begin(), t.word.begin() + pos);
                for (Atom& r : repl) nt.word.push_back(std::move(r));
                nt.word.insert(nt.word.end(), t.word.begin() + pos + 2, t.word.end());
                work.push_back(std::move(nt));
            };
            if (a.kind == 0 && b.kind == 0) { // I[-1] fusion
                std::vector<int> verts = a.verts;
                verts.insert(verts.end(), b.verts.begin(), b.verts.end());
                std::sort(verts.begin(), verts.end());
                emit(v(L(atom_dim(a), atom_dim(b))), {Atom{0, std::move(verts), -1}});
            } else if (a.kind == 2 && b.kind == 2) { // P[1] fusion
                std::vector<int> verts = a.verts;
                verts.insert(verts.end(), b.verts.begin(), b.verts.end());
                std::sort(verts.begin(), verts.end());
                emit(v(L(atom_dim(a), atom_dim(b))), {Atom{2, std::move(verts), -1}});
            } else if (a.kind == 1 && b.kind == 1) {
                // u_M * u_N = q^{1/2 L(m*,n*) + <m,n>} sum_L eps^L_{MN}/|Hom| u_L,
                // with eps obtained by enumerating Ext^1(M,N) elementwise
                DimVec m = atom_dim(a), n = atom_dim(b);
                ExactScalar pre = v(L(m, n) + 2 * ctx_->euler(m, n)) /
                                  ExactScalar(Rational(cat_->hom_size(a.mod, b.mod)));
                for (const auto& [l, eps] : cat_->ext_middle_counts(a.mod, b.mod)) {
                    std::vector<Atom> repl;
                    if (l != cat_->zero_class()) repl.push_back(Atom{1, {}, l});
                    emit(pre * ExactScalar(static_cast<long>(eps)), std::move(repl));
                }
            } else if (a.kind == 1 && b.kind == 0) {
                // u_M * u_{I[-1]} = q^{-1/2 L(m*,i*) - <m,i>} sum |_G Hom(M,I)_{I'}| u_{G (+) I'[-1]}
                DimVec m = atom_dim(a), i = atom_dim(b);
                ClassId icls = cat_->class_of_inj_multiset(b.verts);
                ExactScalar pre = v(-L(m, i) - 2 * ctx_->euler(m, i));
                for (const auto& [key, count] : cat_->hom_strata(a.mod, icls)) {
                    auto [ker, cok] = key;
                    auto [rest, iverts] = cat_->split_injective(cok);
                    if (rest != cat_->zero_class())
                        throw std::logic_error("cokernel into an injective is not injective");
                    DimVec g = cat_->rec(ker).dim;
                    ExactScalar c = pre * ExactScalar(static_cast<long>(count)) *
                                    v(L(inj_multiset_dim(*cat_, iverts), g));
                    std::vector<Atom> repl;
                    if (!iverts.empty()) repl.push_back(Atom{0, iverts, -1});
                    if (ker != cat_->zero_class()) repl.push_back(Atom{1, {}, ker});
                    emit(c, std::move(repl));
                }
            } else if (a.kind == 2 && b.kind == 1) {
                // u_{P[1]} * u_M = q^{-1/2 L(p*,m*) - <p,m>} sum |_{P'} Hom(P,M)_F| u_{F (+) P'[1]}
                DimVec p = atom_dim(a), m = atom_dim(b);
                ClassId pcls = cat_->class_of_proj_multiset(a.verts);
                ExactScalar pre = v(-L(p, m) - 2 * ctx_->euler(p, m));
                for (const auto& [key, count] : cat_->hom_strata(pcls, b.mod)) {
                    auto [ker, cok] = key;
                    auto [rest, pverts] = cat_->strip_projective(ker);
                    if (rest != cat_->zero_class())
                        throw std::logic_error("kernel of a projective is not projective");
                    DimVec f = cat_->rec(cok).dim;
                    ExactScalar c = pre * ExactScalar(static_cast<long>(count)) *
                                    v(L(f, proj_multiset_dim(*cat_, pverts)));
                    std::vector<Atom> repl;
                    if (cok != cat_->zero_class()) repl.push_back(Atom{1, {}, cok});
                    if (!pverts.empty()) repl.push_back(Atom{2, pverts, -1});
                    emit(c, std::move(repl));
                }
            } else if (a.kind == 2 && b.kind == 0) {
                // u_{P[1]} * u_{I[-1]} = q^{-L(i*,p*) + <p,i>} u_{I[-1]} * u_{P[1]}
                DimVec p = atom_dim(a), i = atom_dim(b);
                emit(v(-2 * L(i, p) + 2 * ctx_->euler(p, i)), {b, a});
            } else {
                throw std::logic_error("rewrite: unexpected atom pair");
            }
        }
        return out;
    }

    Catalog* cat_;
    const QuiverContext* ctx_;
    std::map<std::pair<DecoratedObject, DecoratedObject>, HallElement> memo_;
};

} // namespace qca
