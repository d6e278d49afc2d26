// catalog.hpp — isomorphism classes of representations and every count the
// torus formulas consume: Aut orders, Hom/Ext dimensions, Grassmannian
// counts, Hall numbers, Riedtmann extension-class counts, Hom strata, the
// theta stratification 0 -> D -> N -> tau M' -> tau A' (+) I -> 0, and the
// AR translates computed from minimal (co)presentations via the Nakayama
// correspondence on path bases.
//
// Classification of a full dimension vector enumerates the representation
// space in lexicographic encoding order and sweeps GL-orbits, so the stored
// canonical representative is the lexicographically least encoding and the
// class ordinals are independent of discovery history. Dimension vectors
// outside the classification bound grow lazily: representations reaching
// them (tau images, cokernels) register through fingerprint + isomorphism
// insertion.

#pragma once

#include "qca/rep.hpp"

#include <deque>
#include <map>
#include <limits>
#include <memory>
#include <optional>
#include <set>

namespace qca {

using ClassId = int;

struct ClassRecord {
    ClassId id = -1;
    DimVec dim;
    Rep canonical;
    int dim_end = -1;                    // over the vertex field; -1 = unknown
    BigInt aut = 0;                      // 0 = unknown
    int indec = -1;                      // -1 unknown
    bool is_proj_indec = false, is_inj_indec = false;
    std::string name;                    // "S1", "P2", ... for the named classes
    std::vector<ClassId> summands;       // with multiplicity, sorted; empty = unknown
    bool summands_known = false;
    std::vector<int> fingerprint;        // [dim_end, top dims, soc dims]
    bool fingerprint_known = false;
};

struct ThetaKey {
    ClassId D = -1, A = -1;
    std::vector<int> inj; // vertex multiset of the injective part
    bool operator<(const ThetaKey& o) const {
        return std::tie(D, A, inj) < std::tie(o.D, o.A, o.inj);
    }
};

class Catalog {
public:
    // Holds an immutable copy of the context, so temporaries are fine and
    // catalog copies (worker pools) stay self-contained.
    Catalog(const QuiverContext& ctx, Bounds bounds = {})
        : ctx_(std::make_shared<const QuiverContext>(ctx)), bounds_(bounds),
          F_(&GaloisField::get(ctx.q0, ctx.d())) {
        if (!ctx.counting_ready())
            throw ContextError("context is symbolic-only; catalog unavailable");
        init_named_classes();
    }

    const QuiverContext& ctx() const { return *ctx_; }
    const GaloisField& field() const { return *F_; }
    const Bounds& bounds() const { return bounds_; }

    int qprime() const { return F_->size(); } // |F_{q0^d}|

    // --- class access -------------------------------------------------------

    const ClassRecord& rec(ClassId id) const { return recs_[id]; }
    ClassId zero_class() const { return zero_; }
    ClassId simple_class(int v1) const { return simples_[v1 - 1]; }
    ClassId proj_class(int v1) const { return projs_[v1 - 1]; }
    ClassId inj_class(int v1) const { return injs_[v1 - 1]; }

    bool is_proj_indec(ClassId id) const { return recs_[id].is_proj_indec; }
    bool is_inj_indec(ClassId id) const { return recs_[id].is_inj_indec; }

    // Ordinal of a class within its dimension vector (canonical-encoding order).
    int ordinal(ClassId id) const {
        const auto& e = dims_.at(recs_[id].dim);
        auto it = std::find(e.classes.begin(), e.classes.end(), id);
        return static_cast<int>(it - e.classes.begin());
    }
    std::string class_name(ClassId id) const {
        const ClassRecord& r = recs_[id];
        if (!r.name.empty()) return r.name;
        return dim_str(r.dim) + "#" + std::to_string(ordinal(id));
    }
    ClassId class_by_ordinal(const DimVec& dim, int ord) {
        classify(dim);
        const auto& e = dims_.at(dim);
        if (ord < 0 || ord >= static_cast<int>(e.classes.size()))
            throw std::out_of_range("class ordinal out of range for " + dim_str(dim));
        return e.classes[ord];
    }

    bool dim_classified(const DimVec& dim) const {
        auto it = dims_.find(dim);
        return it != dims_.end() && it->second.complete;
    }
    const std::vector<ClassId>& classes_of_dim(const DimVec& dim) {
        classify(dim);
        return dims_.at(dim).classes;
    }
    std::vector<ClassId> registered_classes_of_dim(const DimVec& dim) const {
        auto it = dims_.find(dim);
        if (it == dims_.end()) return {};
        return it->second.classes;
    }

    // All classes with componentwise dim <= cap (classifying each dim).
    std::vector<ClassId> classes_up_to(const DimVec& cap, int total_cap = -1) {
        std::vector<ClassId> out;
        DimVec cur(ctx_->m, 0);
        while (true) {
            if (total_cap < 0 || dim_total(cur) <= total_cap)
                for (ClassId c : classes_of_dim(cur)) out.push_back(c);
            int v = 0;
            while (v < ctx_->m && cur[v] == cap[v]) cur[v++] = 0;
            if (v == ctx_->m) break;
            ++cur[v];
        }
        return out;
    }

    // --- classification -----------------------------------------------------

    // Enumerate all representations of the dimension vector and bucket them
    // into GL-orbits. Canonical representative = lex-least encoding.
    void classify(const DimVec& dim) {
        auto& entry = dims_[dim];
        if (entry.complete) return;
        long long entries = 0;
        for (auto [s, t] : ctx_->expanded_arrows)
            entries += static_cast<long long>(dim[s]) * dim[t];
        long long points = checked_pow(qprime(), entries, bounds_.rep_space, "rep_space");

        BigInt gl_product = 1;
        std::vector<const std::vector<std::pair<Mat, Mat>>*> gls(ctx_->m);
        for (int v = 0; v < ctx_->m; ++v) {
            gls[v] = &gl_cache(dim[v]);
            gl_product *= static_cast<long>(gls[v]->size());
        }
        // the sweep applies every group tuple to every new class
        if (gl_product > bounds_.group_sweep)
            throw ResourceError("group_sweep", bounds_.group_sweep,
                                static_cast<long long>(std::min<BigInt>(
                                    gl_product, BigInt(std::numeric_limits<long long>::max()))));

        std::vector<int32_t> lookup(points, -1);
        std::vector<Rep> canon;
        std::vector<long long> orbit_sizes;
        for (long long idx = 0; idx < points; ++idx) {
            if (lookup[idx] >= 0) continue;
            int32_t cls = static_cast<int32_t>(canon.size());
            Rep base = decode_rep(dim, idx);
            canon.push_back(base);
            orbit_sizes.push_back(mark_orbit(base, gls, lookup, cls));
        }

        // match previously registered classes of this dim by orbit membership
        std::vector<ClassId> ids(canon.size(), -1);
        for (ClassId old : entry.classes) {
            long long j = encode_index(recs_[old].canonical);
            int32_t pos = lookup[j];
            if (ids[pos] != -1) throw std::logic_error("classify: duplicate registered class");
            ids[pos] = old;
            recs_[old].canonical = canon[pos];
        }
        for (size_t p = 0; p < canon.size(); ++p) {
            if (ids[p] != -1) continue;
            ids[p] = new_record(dim, canon[p]);
        }

        // orbit-stabilizer consistency, per classify call
        long long total = 0;
        for (size_t p = 0; p < canon.size(); ++p) {
            total += orbit_sizes[p];
            ensure_aut(ids[p]);
            if (recs_[ids[p]].aut * orbit_sizes[p] != gl_product)
                throw std::logic_error("classify: orbit-stabilizer mismatch at " +
                                       dim_str(dim) + "#" + std::to_string(p));
        }
        if (total != points) throw std::logic_error("classify: orbits do not partition");

        entry.classes.assign(ids.begin(), ids.end());
        entry.lookup = std::move(lookup);
        entry.complete = true;
    }

    // Class of an arbitrary representation (register when unseen).
    ClassId class_of(const Rep& r) {
        auto it = dims_.find(r.dim);
        if (it != dims_.end() && it->second.complete) {
            long long j = encode_index(r);
            return it->second.classes[it->second.lookup[j]];
        }
        std::vector<int> fp = fingerprint_of(r);
        if (it != dims_.end())
            for (ClassId c : it->second.classes) {
                ensure_fingerprint(c);
                if (recs_[c].fingerprint != fp) continue;
                if (is_isomorphic(recs_[c].canonical, r)) return c;
            }
        ClassId id = new_record(r.dim, r);
        recs_[id].fingerprint = fp;
        recs_[id].fingerprint_known = true;
        auto& entry = dims_[r.dim];
        auto enc = rep_encode(r);
        auto pos = std::find_if(entry.classes.begin(), entry.classes.end(), [&](ClassId c) {
            return rep_encode(recs_[c].canonical) > enc;
        });
        entry.classes.insert(pos, id);
        return id;
    }

    // --- basic invariants ---------------------------------------------------

    int dim_end(ClassId id) {
        ensure_dim_end(id);
        return recs_[id].dim_end;
    }

    const BigInt& aut_order(ClassId id) {
        ensure_aut(id);
        return recs_[id].aut;
    }

    // [M,N]^0 over the base field F_{q0}
    int hom_dim_base(ClassId a, ClassId b) { return ctx_->d() * hom_dim_vertex(a, b); }
    // Hom dimension over the vertex field
    int hom_dim_vertex(ClassId a, ClassId b) {
        auto key = std::make_pair(a, b);
        auto it = homdim_.find(key);
        if (it != homdim_.end()) return it->second;
        int hd = hom_dim_field(*ctx_, *F_, recs_[a].canonical, recs_[b].canonical);
        homdim_[key] = hd;
        return hd;
    }
    BigInt hom_size(ClassId a, ClassId b) { return bigint_pow(qprime(), hom_dim_vertex(a, b)); }

    // [M,N]^1 over the base field; hereditary: [M,N]^0 - <m,n>.
    int ext_count(ClassId a, ClassId b) {
        long e = hom_dim_base(a, b) - ctx_->euler(recs_[a].dim, recs_[b].dim);
        if (e < 0)
            throw std::logic_error("negative Ext dimension: corrupted context");
        return static_cast<int>(e);
    }

    // --- counting -----------------------------------------------------------

    long long grassmannian_count(ClassId m, const DimVec& e) {
        auto key = std::make_pair(m, e);
        auto it = grass_.find(key);
        if (it != grass_.end()) return it->second;
        long long n = for_each_submodule(*ctx_, *F_, recs_[m].canonical, e, bounds_,
                                         [](const auto&, const auto&) {});
        grass_[key] = n;
        return n;
    }

    // F^L_{MN}: submodules U of L with U iso N and L/U iso M.
    long long hall_number(ClassId L, ClassId M, ClassId N) {
        if (dim_add(recs_[M].dim, recs_[N].dim) != recs_[L].dim) return 0;
        auto key = std::make_tuple(L, M, N);
        auto it = hall_.find(key);
        if (it != hall_.end()) return it->second;
        long long n = hall_number_of_rep(recs_[L].canonical, M, N);
        hall_[key] = n;
        return n;
    }
    long long hall_number_of_rep(const Rep& L, ClassId M, ClassId N) {
        if (dim_add(recs_[M].dim, recs_[N].dim) != L.dim) return 0;
        long long count = 0;
        for_each_submodule(*ctx_, *F_, L, recs_[N].dim, bounds_,
                           [&](const std::vector<std::vector<Mat>>& choices,
                               const std::vector<size_t>& idx) {
                               std::vector<Mat> bases(ctx_->m);
                               for (int v = 0; v < ctx_->m; ++v) bases[v] = choices[v][idx[v]];
                               if (class_of(sub_rep(*ctx_, *F_, L, bases)) != N) return;
                               if (class_of(quotient_rep(*ctx_, *F_, L, bases)) != M) return;
                               ++count;
                           });
        return count;
    }

    // eps^E_{MN} = |Ext^1(M,N)_E| via the Riedtmann-Peng identity.
    BigInt ext_class_count(ClassId M, ClassId N, ClassId E) {
        auto key = std::make_tuple(M, N, E);
        auto it = eps_.find(key);
        if (it != eps_.end()) return it->second;
        BigInt eps = 0;
        if (dim_add(recs_[M].dim, recs_[N].dim) == recs_[E].dim) {
            long long f = hall_number(E, M, N);
            if (f != 0) {
                Rational val = Rational(f) * Rational(hom_size(M, N)) *
                               Rational(aut_order(M)) * Rational(aut_order(N)) /
                               Rational(aut_order(E));
                if (boost::multiprecision::denominator(val) != 1)
                    throw std::logic_error("Riedtmann-Peng count is not integral");
                eps = boost::multiprecision::numerator(val);
            }
        }
        eps_[key] = eps;
        return eps;
    }

    // Middle-term classes of Ext^1(M,N) with elementwise multiplicities;
    // groups ext_middle_terms and is memoized. Agrees with ext_class_count
    // by the Riedtmann-Peng identity (asserted in the counting suites).
    const std::map<ClassId, long long>& ext_middle_counts(ClassId M, ClassId N) {
        auto key = std::make_pair(M, N);
        auto it = extmid_.find(key);
        if (it != extmid_.end()) return it->second;
        std::map<ClassId, long long> counts;
        for (ClassId e : ext_middle_terms(M, N)) counts[e]++;
        return extmid_.emplace(key, std::move(counts)).first->second;
    }

    // Enumerate Ext^1(M,N) elementwise; returns the class of each middle term.
    // Independent of the Riedtmann route by construction.
    std::vector<ClassId> ext_middle_terms(ClassId M, ClassId N) {
        const Rep& Mr = recs_[M].canonical;
        const Rep& Nr = recs_[N].canonical;
        ExtSpace es = ext_space(*ctx_, *F_, Mr, Nr);
        checked_pow(qprime(), es.dim, bounds_.hom_space, "hom_space");
        std::vector<ClassId> out;
        std::vector<FElem> coef(es.dim, 0);
        while (true) {
            std::vector<FElem> cocycle(es.sys.cod_dim, 0);
            for (int t = 0; t < es.dim; ++t) {
                if (coef[t] == 0) continue;
                for (int i = 0; i < es.sys.cod_dim; ++i)
                    cocycle[i] = F_->axpy(cocycle[i], coef[t], es.complement[t][i]);
            }
            out.push_back(class_of(extension_rep(*ctx_, Mr, Nr, es.sys, cocycle)));
            int t = 0;
            while (t < es.dim && coef[t] == F_->size() - 1) coef[t++] = 0;
            if (t == es.dim) break;
            ++coef[t];
        }
        return out;
    }

    // |_X Hom(M,N)_Y|: counts keyed by (kernel class, cokernel class).
    const std::map<std::pair<ClassId, ClassId>, long long>& hom_strata(ClassId M, ClassId N) {
        auto key = std::make_pair(M, N);
        auto it = strata_.find(key);
        if (it != strata_.end()) return it->second;
        const Rep& Mr = recs_[M].canonical;
        const Rep& Nr = recs_[N].canonical;
        std::map<std::pair<ClassId, ClassId>, long long> counts;
        long long total = 0;
        for_each_hom(Mr, Nr, [&](const RepHom& f) {
            ClassId ker = class_of(kernel_rep(*ctx_, *F_, Mr, Nr, f).first);
            ClassId cok = class_of(coker_rep(*ctx_, *F_, Mr, Nr, f).first);
            counts[{ker, cok}]++;
            ++total;
        });
        if (BigInt(total) != hom_size(M, N))
            throw std::logic_error("hom_strata: counts do not sum to |Hom|");
        return strata_.emplace(key, std::move(counts)).first->second;
    }

    // --- Krull-Schmidt ------------------------------------------------------

    struct Summand {
        Rep rep;
        RepHom emb; // into the decomposed module
    };

    std::vector<Summand> decompose_rep(const Rep& M) {
        std::vector<Summand> out;
        if (dim_is_zero(M.dim)) return out;
        std::vector<Summand> work;
        work.push_back({M, hom_identity(M)});
        while (!work.empty()) {
            Summand cur = std::move(work.back());
            work.pop_back();
            std::optional<RepHom> split = find_splitter(cur.rep);
            if (!split) {
                out.push_back(std::move(cur));
                continue;
            }
            auto [K, ik] = kernel_rep(*ctx_, *F_, cur.rep, cur.rep, *split);
            auto [I, ii] = image_rep(*ctx_, *F_, cur.rep, cur.rep, *split);
            if (dim_add(K.dim, I.dim) != cur.rep.dim)
                throw std::logic_error("decompose: Fitting split is not a decomposition");
            work.push_back({std::move(I), hom_compose(*F_, cur.emb, ii)});
            work.push_back({std::move(K), hom_compose(*F_, cur.emb, ik)});
        }
        return out;
    }

    // Summand class ids with multiplicity, sorted.
    const std::vector<ClassId>& decompose(ClassId id) {
        ClassRecord& r = recs_[id];
        if (r.summands_known) return r.summands;
        std::vector<ClassId> s;
        for (const auto& sm : decompose_rep(r.canonical)) s.push_back(class_of(sm.rep));
        std::sort(s.begin(), s.end());
        r.summands = std::move(s);
        r.summands_known = true;
        r.indec = (r.summands.size() == 1) ? 1 : 0;
        return r.summands;
    }

    bool indecomposable(ClassId id) {
        if (recs_[id].indec < 0) decompose(id);
        return recs_[id].indec == 1;
    }

    // M = M' (+) P' with P' the maximal projective direct summand.
    std::pair<ClassId, std::vector<int>> strip_projective(ClassId id) {
        auto it = strip_.find(id);
        if (it != strip_.end()) return it->second;
        std::vector<int> pverts;
        Rep rest = rep_zero(*ctx_);
        for (ClassId s : decompose(id)) {
            int pv = proj_vertex_of(s);
            if (pv > 0) pverts.push_back(pv);
            else rest = direct_sum(*ctx_, rest, recs_[s].canonical);
        }
        std::sort(pverts.begin(), pverts.end());
        auto res = std::make_pair(class_of(rest), std::move(pverts));
        strip_[id] = res;
        return res;
    }

    // C = C' (+) I with I the maximal injective direct summand.
    std::pair<ClassId, std::vector<int>> split_injective(ClassId id) {
        auto it = split_.find(id);
        if (it != split_.end()) return it->second;
        std::vector<int> iverts;
        Rep rest = rep_zero(*ctx_);
        for (ClassId s : decompose(id)) {
            int iv = inj_vertex_of(s);
            if (iv > 0) iverts.push_back(iv);
            else rest = direct_sum(*ctx_, rest, recs_[s].canonical);
        }
        std::sort(iverts.begin(), iverts.end());
        auto res = std::make_pair(class_of(rest), std::move(iverts));
        split_[id] = res;
        return res;
    }

    int proj_vertex_of(ClassId s) const {
        for (int v = 1; v <= ctx_->m; ++v)
            if (projs_[v - 1] == s) return v;
        return 0;
    }
    int inj_vertex_of(ClassId s) const {
        for (int v = 1; v <= ctx_->m; ++v)
            if (injs_[v - 1] == s) return v;
        return 0;
    }

    ClassId class_of_proj_multiset(const std::vector<int>& verts) {
        Rep r = rep_zero(*ctx_);
        for (int v : verts) r = direct_sum(*ctx_, r, recs_[projs_[v - 1]].canonical);
        return class_of(r);
    }
    ClassId class_of_inj_multiset(const std::vector<int>& verts) {
        Rep r = rep_zero(*ctx_);
        for (int v : verts) r = direct_sum(*ctx_, r, recs_[injs_[v - 1]].canonical);
        return class_of(r);
    }
    ClassId sum_of_classes(ClassId a, ClassId b) {
        return class_of(direct_sum(*ctx_, recs_[a].canonical, recs_[b].canonical));
    }

    // --- AR translates ------------------------------------------------------

    // tau via the Nakayama functor on a minimal projective presentation;
    // precondition: no projective direct summands.
    ClassId tau(ClassId id) {
        auto it = tau_.find(id);
        if (it != tau_.end()) return it->second;
        if (strip_projective(id).second.size())
            throw std::invalid_argument("tau: module has projective direct summands");
        ClassId r = class_of(tau_rep(recs_[id].canonical));
        tau_[id] = r;
        return r;
    }
    ClassId tau_inv(ClassId id) {
        auto it = tauinv_.find(id);
        if (it != tauinv_.end()) return it->second;
        if (split_injective(id).second.size())
            throw std::invalid_argument("tau_inv: module has injective direct summands");
        ClassId r = class_of(tauinv_rep(recs_[id].canonical));
        tauinv_[id] = r;
        return r;
    }

    Rep tau_rep(const Rep& M);    // definitions below (presentation machinery)
    Rep tauinv_rep(const Rep& M);

    // --- theta stratification -----------------------------------------------

    // For M = M' (+) P' and each theta in Hom(N, tau M'):
    //   D = Ker theta, Coker theta = tau A' (+) I, A = A' (+) P'.
    // Counts keyed by (class D, class A, injective vertex multiset).
    const std::map<ThetaKey, long long>& theta_strata(ClassId N, ClassId M) {
        auto key = std::make_pair(N, M);
        auto it = theta_.find(key);
        if (it != theta_.end()) return it->second;
        std::map<ThetaKey, long long> counts;
        auto [Mp, pverts] = strip_projective(M);
        if (Mp == zero_) {
            // Hom(N, 0) = {0}: D = N, A = M, I = 0
            counts[{N, M, {}}] = 1;
        } else {
            Rep tauMp = recs_[tau(Mp)].canonical;
            const Rep& Nr = recs_[N].canonical;
            long long total = 0;
            for_each_hom(Nr, tauMp, [&](const RepHom& f) {
                ClassId D = class_of(kernel_rep(*ctx_, *F_, Nr, tauMp, f).first);
                Rep C = coker_rep(*ctx_, *F_, Nr, tauMp, f).first;
                auto [Cp, iverts] = split_injective(class_of(C));
                ClassId Ap = (Cp == zero_) ? zero_ : tau_inv(Cp);
                Rep Arep = direct_sum(*ctx_, recs_[Ap].canonical,
                                      recs_[class_of_proj_multiset(pverts)].canonical);
                counts[{D, class_of(Arep), iverts}]++;
                ++total;
            });
            // AR formula cross-check: |Hom(N, tau M')| = q0^{[M,N]^1}
            if (BigInt(total) != bigint_pow(ctx_->q0, ext_count(M, N)))
                throw std::logic_error("theta_strata: AR formula violated");
        }
        return theta_.emplace(key, std::move(counts)).first->second;
    }

    // --- iso test -----------------------------------------------------------

    bool is_isomorphic(const Rep& A, const Rep& B) {
        if (A.dim != B.dim) return false;
        if (dim_is_zero(A.dim)) return true;
        if (rep_encode(A) == rep_encode(B)) return true;
        HomSpace hs = hom_space(*ctx_, *F_, A, B);
        int k = hs.dim();
        if (k == 0) return false;
        if (k != hom_dim_field(*ctx_, *F_, A, A) || k != hom_dim_field(*ctx_, *F_, B, B))
            return false;
        return search_invertible(A, B, hs) != nullptr;
    }

    // Find an explicit isomorphism A -> B; returns false when none exists.
    bool find_iso(const Rep& A, const Rep& B, RepHom& iso) {
        if (A.dim != B.dim) return false;
        if (dim_is_zero(A.dim)) {
            iso = hom_zero(A, B);
            return true;
        }
        HomSpace hs = hom_space(*ctx_, *F_, A, B);
        if (hs.dim() == 0) return false;
        auto coords = search_invertible(A, B, hs);
        if (!coords) return false;
        iso.f.resize(ctx_->m);
        for (int v = 0; v < ctx_->m; ++v) iso.f[v] = coords_block(A, B, hs.sys, *coords, v);
        return true;
    }

    // Enumerate all of Hom(M,N), zero map included.
    template <typename Fn>
    void for_each_hom(const Rep& M, const Rep& N, Fn&& fn) {
        auto basis = hom_basis(*ctx_, *F_, M, N);
        int k = static_cast<int>(basis.size());
        checked_pow(qprime(), k, bounds_.hom_space, "hom_space");
        std::vector<FElem> coef(k, 0);
        while (true) {
            RepHom h = hom_zero(M, N);
            for (int i = 0; i < k; ++i)
                if (coef[i] != 0) h = hom_add(*F_, h, hom_scale(*F_, coef[i], basis[i]));
            fn(h);
            int t = 0;
            while (t < k && coef[t] == F_->size() - 1) coef[t++] = 0;
            if (t == k) break;
            ++coef[t];
        }
    }

    static BigInt bigint_pow(int base, long long e) {
        BigInt r = 1;
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    }

    // --- cache file -----------------------------------------------------------

    nlohmann::json to_cache_json() const {
        nlohmann::json dims = nlohmann::json::array();
        for (const auto& [dim, entry] : dims_) {
            nlohmann::json classes = nlohmann::json::array();
            for (ClassId id : entry.classes) {
                const ClassRecord& rec = recs_[id];
                nlohmann::json maps = nlohmann::json::array();
                for (const Mat& mm : rec.canonical.maps)
                    maps.push_back(std::vector<int>(mm.a.begin(), mm.a.end()));
                nlohmann::json jc = {{"maps", maps}};
                if (rec.aut != 0) jc["aut"] = rec.aut.str();
                if (rec.dim_end >= 0) jc["dim_end"] = rec.dim_end;
                jc["proj"] = rec.is_proj_indec;
                jc["inj"] = rec.is_inj_indec;
                auto t = tau_.find(id);
                if (t != tau_.end())
                    jc["tau"] = {recs_[t->second].dim, ordinal(t->second)};
                classes.push_back(std::move(jc));
            }
            dims.push_back({{"dim", dim}, {"complete", entry.complete}, {"classes", classes}});
        }
        return {{"version", 1},
                {"context_hash", ctx_->hash()},
                {"bounds",
                 {{"rep_space", bounds_.rep_space},
                  {"hom_space", bounds_.hom_space},
                  {"subspace_tuples", bounds_.subspace_tuples},
                  {"group_sweep", bounds_.group_sweep}}},
                {"dims", dims}};
    }

    // Adopt a cache produced for the same context and bounds; returns false
    // (and loads nothing) on any header mismatch.
    bool load_cache_json(const nlohmann::json& j) {
        if (j.value("version", 0) != 1) return false;
        if (j.value("context_hash", "") != ctx_->hash()) return false;
        const auto& jb = j.at("bounds");
        if (jb.value("rep_space", -1LL) != bounds_.rep_space ||
            jb.value("hom_space", -1LL) != bounds_.hom_space ||
            jb.value("subspace_tuples", -1LL) != bounds_.subspace_tuples ||
            jb.value("group_sweep", -1LL) != bounds_.group_sweep)
            return false;
        std::vector<std::pair<ClassId, std::pair<DimVec, int>>> tau_links;
        for (const auto& jd : j.at("dims")) {
            DimVec dim = jd.at("dim").get<DimVec>();
            std::vector<ClassId> ids;
            for (const auto& jc : jd.at("classes")) {
                Rep r = rep_of_dim(*ctx_, dim);
                const auto& maps = jc.at("maps");
                for (size_t a = 0; a < r.maps.size(); ++a) {
                    auto ents = maps.at(a).get<std::vector<int>>();
                    for (size_t i = 0; i < r.maps[a].a.size(); ++i)
                        r.maps[a].a[i] = static_cast<FElem>(ents.at(i));
                }
                // merge with anything already registered (named classes)
                ClassId id = -1;
                auto it = dims_.find(dim);
                if (it != dims_.end())
                    for (ClassId c : it->second.classes)
                        if (is_isomorphic(recs_[c].canonical, r)) { id = c; break; }
                if (id < 0) id = new_record(dim, r);
                recs_[id].canonical = std::move(r);
                if (jc.contains("aut")) recs_[id].aut = BigInt(jc.at("aut").get<std::string>());
                if (jc.contains("dim_end")) recs_[id].dim_end = jc.at("dim_end").get<int>();
                if (jc.contains("tau"))
                    tau_links.push_back({id,
                                         {jc.at("tau").at(0).get<DimVec>(),
                                          jc.at("tau").at(1).get<int>()}});
                ids.push_back(id);
            }
            auto& entry = dims_[dim];
            entry.classes = std::move(ids);
            bool complete = jd.value("complete", false);
            if (complete && !entry.complete) rebuild_lookup(dim);
        }
        for (const auto& [id, link] : tau_links) {
            const auto& e = dims_.at(link.first);
            tau_[id] = e.classes.at(link.second);
        }
        return true;
    }

private:
    struct DimEntry {
        bool complete = false;
        std::vector<ClassId> classes;
        std::vector<int32_t> lookup;
    };

    void init_named_classes() {
        zero_ = class_of(rep_zero(*ctx_));
        recs_[zero_].name = "0";
        simples_.resize(ctx_->m);
        projs_.resize(ctx_->m);
        injs_.resize(ctx_->m);
        for (int v = 1; v <= ctx_->m; ++v) {
            simples_[v - 1] = class_of(rep_simple(*ctx_, v));
            if (recs_[simples_[v - 1]].name.empty())
                recs_[simples_[v - 1]].name = "S" + std::to_string(v);
        }
        for (int v = 1; v <= ctx_->m; ++v) {
            projs_[v - 1] = class_of(rep_projective(*ctx_, v));
            recs_[projs_[v - 1]].is_proj_indec = true;
            if (recs_[projs_[v - 1]].name.empty())
                recs_[projs_[v - 1]].name = "P" + std::to_string(v);
        }
        for (int v = 1; v <= ctx_->m; ++v) {
            injs_[v - 1] = class_of(rep_injective(*ctx_, v));
            recs_[injs_[v - 1]].is_inj_indec = true;
            if (recs_[injs_[v - 1]].name.empty())
                recs_[injs_[v - 1]].name = "I" + std::to_string(v);
        }
    }

    ClassId new_record(const DimVec& dim, Rep canonical) {
        ClassRecord r;
        r.id = static_cast<ClassId>(recs_.size());
        r.dim = dim;
        r.canonical = std::move(canonical);
        recs_.push_back(std::move(r));
        return recs_.back().id;
    }

    void ensure_dim_end(ClassId id) {
        if (recs_[id].dim_end >= 0) return;
        recs_[id].dim_end = hom_dim_vertex(id, id);
    }

    void ensure_aut(ClassId id) {
        ClassRecord& r = recs_[id];
        if (r.aut != 0) return;
        if (dim_is_zero(r.dim)) { r.aut = 1; return; }
        const Rep& X = r.canonical;
        HomSpace hs = hom_space(*ctx_, *F_, X, X);
        checked_pow(qprime(), hs.dim(), bounds_.hom_space, "hom_space");
        long long count = 0;
        scan_span(*F_, hs, [&](const std::vector<FElem>& x) {
            if (coords_invertible(*ctx_, *F_, X, X, hs.sys, x)) ++count;
            return true;
        });
        r.aut = count;
    }

    void ensure_fingerprint(ClassId id) {
        ClassRecord& r = recs_[id];
        if (r.fingerprint_known) return;
        r.fingerprint = fingerprint_of(r.canonical);
        r.fingerprint_known = true;
    }

    std::vector<int> fingerprint_of(const Rep& r) {
        std::vector<int> fp;
        fp.push_back(hom_dim_field(*ctx_, *F_, r, r));
        auto rad = radical_bases(*ctx_, *F_, r);
        for (int v = 0; v < ctx_->m; ++v) fp.push_back(r.dim[v] - rad[v].rank); // top
        auto soc = socle_bases(*ctx_, *F_, r);
        for (int v = 0; v < ctx_->m; ++v) fp.push_back(soc[v].cols);
        return fp;
    }

    // Fitting splitter: an endomorphism h with ker h^N (+) im h^N a proper
    // nontrivial decomposition (N past every vertex dimension). Basis
    // elements shifted by every scalar are tried first; the bounded span
    // scan is the certification fallback (every element a unit or nilpotent
    // means End is local, i.e. X is indecomposable).
    std::optional<RepHom> find_splitter(const Rep& X) {
        HomSpace hs = hom_space(*ctx_, *F_, X, X);
        int k = hs.dim();
        if (k <= 1) return std::nullopt;
        int maxdim = *std::max_element(X.dim.begin(), X.dim.end());
        auto fitting = [&](const RepHom& h) -> std::optional<RepHom> {
            RepHom p = h;
            for (int n = 1; n < maxdim; n *= 2) p = hom_compose(*F_, p, p);
            int rank = 0, total = 0;
            for (int v = 0; v < ctx_->m; ++v) {
                rank += mat_rank(*F_, p.f[v]);
                total += X.dim[v];
            }
            if (rank == 0 || rank == total) return std::nullopt;
            return p;
        };
        for (const auto& bc : hs.basis) {
            RepHom h;
            h.f.resize(ctx_->m);
            for (int v = 0; v < ctx_->m; ++v) h.f[v] = coords_block(X, X, hs.sys, bc, v);
            for (FElem lam = 0; lam < F_->size(); ++lam) {
                RepHom shifted = h;
                for (int v = 0; v < ctx_->m; ++v)
                    shifted.f[v] = mat_sub(*F_, h.f[v], mat_scale(*F_, lam, Mat::eye(X.dim[v])));
                if (auto p = fitting(shifted)) return p;
            }
        }
        checked_pow(qprime(), k, bounds_.hom_space, "hom_space");
        std::optional<RepHom> out;
        scan_span(*F_, hs, [&](const std::vector<FElem>& x) {
            if (coords_invertible(*ctx_, *F_, X, X, hs.sys, x)) return true;
            RepHom h;
            h.f.resize(ctx_->m);
            for (int v = 0; v < ctx_->m; ++v) h.f[v] = coords_block(X, X, hs.sys, x, v);
            if (auto p = fitting(h)) {
                out = std::move(p);
                return false;
            }
            return true; // nilpotent
        });
        return out;
    }

    // Invertible element of the span, or nullptr when the span holds none.
    // Isomorphic targets are caught quickly: invertibles are dense in an
    // iso-space, so a deterministic batch of pseudo-random probes runs first;
    // the exhaustive sweep certifies the negative and counts against the
    // hom_space bound (the search result itself is order-independent).
    std::unique_ptr<std::vector<FElem>> search_invertible(const Rep& A, const Rep& B,
                                                          const HomSpace& hs) {
        int k = hs.dim();
        uint64_t state = 0x9e3779b97f4a7c15ULL ^ (static_cast<uint64_t>(k) << 32);
        auto next = [&state]() {
            state += 0x9e3779b97f4a7c15ULL;
            uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        std::vector<FElem> x(hs.sys.dom_dim);
        for (int probe = 0; probe < 64; ++probe) {
            std::fill(x.begin(), x.end(), 0);
            for (int i = 0; i < k; ++i) {
                FElem cc = static_cast<FElem>(next() % F_->size());
                if (cc == 0) continue;
                for (int j = 0; j < hs.sys.dom_dim; ++j)
                    x[j] = F_->axpy(x[j], cc, hs.basis[i][j]);
            }
            if (coords_invertible(*ctx_, *F_, A, B, hs.sys, x))
                return std::make_unique<std::vector<FElem>>(x);
        }
        std::unique_ptr<std::vector<FElem>> out;
        long long seen = 0;
        scan_span(*F_, hs, [&](const std::vector<FElem>& cur) {
            if (++seen > bounds_.hom_space)
                throw ResourceError("hom_space", bounds_.hom_space, seen);
            if (coords_invertible(*ctx_, *F_, A, B, hs.sys, cur)) {
                out = std::make_unique<std::vector<FElem>>(cur);
                return false;
            }
            return true;
        });
        return out;
    }

    // Mark the GL-orbit of base in the lookup table; returns the orbit size.
    // The transformed encoding g_t M_a g_s^{-1} is folded digit by digit,
    // no intermediate representation is materialized.
    long long mark_orbit(const Rep& base,
                         const std::vector<const std::vector<std::pair<Mat, Mat>>*>& gls,
                         std::vector<int32_t>& lookup, int32_t cls) {
        const DimVec& dim = base.dim;
        std::vector<FElem> tmp;
        long long orbit = 0;
        std::vector<size_t> gidx(ctx_->m, 0);
        while (true) {
            long long idx = 0;
            for (size_t a = 0; a < ctx_->expanded_arrows.size(); ++a) {
                auto [s, t] = ctx_->expanded_arrows[a];
                const Mat& g = (*gls[t])[gidx[t]].first;
                const Mat& gi = (*gls[s])[gidx[s]].second;
                const Mat& b = base.maps[a];
                int rt = dim[t], cs = dim[s];
                tmp.assign(static_cast<size_t>(rt) * cs, 0);
                for (int i = 0; i < rt; ++i)
                    for (int k = 0; k < cs; ++k) {
                        FElem bv = b.at(i, k);
                        if (bv == 0) continue;
                        for (int j = 0; j < cs; ++j)
                            tmp[i * cs + j] = F_->axpy(tmp[i * cs + j], bv, gi.at(k, j));
                    }
                for (int i = 0; i < rt; ++i)
                    for (int j = 0; j < cs; ++j) {
                        FElem acc = 0;
                        for (int k = 0; k < rt; ++k)
                            acc = F_->axpy(acc, g.at(i, k), tmp[k * cs + j]);
                        idx = idx * qprime() + acc;
                    }
            }
            if (lookup[idx] < 0) {
                lookup[idx] = cls;
                ++orbit;
            }
            int v = 0;
            while (v < ctx_->m && gidx[v] + 1 == gls[v]->size()) gidx[v++] = 0;
            if (v == ctx_->m) break;
            ++gidx[v];
        }
        return orbit;
    }

    // Regenerate the class-id lookup of a dimension from stored canonical
    // representatives (cache load path).
    void rebuild_lookup(const DimVec& dim) {
        auto& entry = dims_[dim];
        long long entries = 0;
        for (auto [s, t] : ctx_->expanded_arrows)
            entries += static_cast<long long>(dim[s]) * dim[t];
        long long points = checked_pow(qprime(), entries, bounds_.rep_space, "rep_space");
        BigInt gl_product = 1;
        std::vector<const std::vector<std::pair<Mat, Mat>>*> gls(ctx_->m);
        for (int v = 0; v < ctx_->m; ++v) {
            gls[v] = &gl_cache(dim[v]);
            gl_product *= static_cast<long>(gls[v]->size());
        }
        if (gl_product > bounds_.group_sweep)
            throw ResourceError("group_sweep", bounds_.group_sweep,
                                static_cast<long long>(std::min<BigInt>(
                                    gl_product, BigInt(std::numeric_limits<long long>::max()))));
        std::vector<int32_t> lookup(points, -1);
        for (size_t p = 0; p < entry.classes.size(); ++p)
            mark_orbit(recs_[entry.classes[p]].canonical, gls, lookup,
                       static_cast<int32_t>(p));
        for (long long i = 0; i < points; ++i)
            if (lookup[i] < 0)
                throw std::logic_error("cache: class list does not cover " + dim_str(dim));
        entry.lookup = std::move(lookup);
        entry.complete = true;
    }

    long long checked_pow(int base, long long e, long long limit, const char* bound) const {
        long long r = 1;
        for (long long i = 0; i < e; ++i) {
            r *= base;
            if (r > limit) throw ResourceError(bound, limit, r);
        }
        return r;
    }

    long long encode_index(const Rep& r) const {
        long long idx = 0;
        for (const auto& mm : r.maps)
            for (FElem x : mm.a) idx = idx * qprime() + x;
        return idx;
    }
    Rep decode_rep(const DimVec& dim, long long idx) const {
        Rep r = rep_of_dim(*ctx_, dim);
        long long total = 0;
        for (const auto& mm : r.maps) total += static_cast<long long>(mm.a.size());
        std::vector<FElem> flat(total);
        for (long long i = total - 1; i >= 0; --i) {
            flat[i] = static_cast<FElem>(idx % qprime());
            idx /= qprime();
        }
        size_t off = 0;
        for (auto& mm : r.maps) {
            std::copy(flat.begin() + off, flat.begin() + off + mm.a.size(), mm.a.begin());
            off += mm.a.size();
        }
        return r;
    }

    const std::vector<std::pair<Mat, Mat>>& gl_cache(int nn) {
        auto it = gl_.find(nn);
        if (it != gl_.end()) return it->second;
        std::vector<std::pair<Mat, Mat>> out;
        long long count = 1;
        for (int i = 0; i < nn * nn; ++i) {
            count *= qprime();
            if (count > bounds_.rep_space)
                throw ResourceError("rep_space", bounds_.rep_space, count);
        }
        for (long long idx = 0; idx < count; ++idx) {
            Mat g(nn, nn);
            long long t = idx;
            for (int i = nn * nn - 1; i >= 0; --i) {
                g.a[i] = static_cast<FElem>(t % qprime());
                t /= qprime();
            }
            if (!mat_invertible(*F_, g)) continue;
            // invert by solving g X = I
            Mat inv(nn, nn);
            for (int j = 0; j < nn; ++j) {
                std::vector<FElem> b(nn, 0), x;
                b[j] = 1;
                mat_solve(*F_, g, b, x);
                for (int i = 0; i < nn; ++i) inv.at(i, j) = x[i];
            }
            out.emplace_back(std::move(g), std::move(inv));
        }
        return gl_.emplace(nn, std::move(out)).first->second;
    }

    std::shared_ptr<const QuiverContext> ctx_;
    Bounds bounds_;
    const GaloisField* F_;

    std::deque<ClassRecord> recs_;
    std::map<DimVec, DimEntry> dims_;
    ClassId zero_ = -1;
    std::vector<ClassId> simples_, projs_, injs_;
    std::map<int, std::vector<std::pair<Mat, Mat>>> gl_;

    std::map<std::pair<ClassId, ClassId>, int> homdim_;
    std::map<std::pair<ClassId, DimVec>, long long> grass_;
    std::map<std::tuple<ClassId, ClassId, ClassId>, long long> hall_;
    std::map<std::tuple<ClassId, ClassId, ClassId>, BigInt> eps_;
    std::map<std::pair<ClassId, ClassId>, std::map<ClassId, long long>> extmid_;
    std::map<std::pair<ClassId, ClassId>, std::map<std::pair<ClassId, ClassId>, long long>> strata_;
    std::map<std::pair<ClassId, ClassId>, std::map<ThetaKey, long long>> theta_;
    std::map<ClassId, std::pair<ClassId, std::vector<int>>> strip_, split_;
    std::map<ClassId, ClassId> tau_, tauinv_;
};

// ---------------------------------------------------------------------------
// Nakayama-of-presentation machinery.
// ---------------------------------------------------------------------------

namespace detail {

// Direct sum of path-basis modules (all projective or all injective) with the
// per-block vertex offsets needed to slice morphisms blockwise.
struct PathSum {
    Rep rep;
    std::vector<int> block_vertex;          // 1-based vertex of each block
    std::vector<std::vector<int>> off;      // off[b][v] = offset of block b at vertex v
};

inline PathSum path_sum(const QuiverContext& c, const std::vector<int>& verts, bool projective) {
    PathSum s;
    s.rep = rep_zero(c);
    for (int v1 : verts) {
        Rep blk = projective ? rep_projective(c, v1) : rep_injective(c, v1);
        std::vector<int> off(c.m);
        for (int v = 0; v < c.m; ++v) off[v] = s.rep.dim[v];
        s.off.push_back(std::move(off));
        s.block_vertex.push_back(v1);
        s.rep = direct_sum(c, s.rep, blk);
    }
    return s;
}

// Basis morphism P_{src} -> P_{tgt} attached to a path p: tgt ~> src
// (append p in front).
inline RepHom proj_path_hom(const QuiverContext& c, int src1, int tgt1,
                            const std::vector<int>& p) {
    int src = src1 - 1, tgt = tgt1 - 1;
    RepHom h;
    h.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        const auto& dom = c.paths(src, v);
        const auto& cod = c.paths(tgt, v);
        h.f[v] = Mat(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
        for (size_t j = 0; j < dom.size(); ++j) {
            std::vector<int> w = p;
            w.insert(w.end(), dom[j].begin(), dom[j].end());
            auto it = std::find(cod.begin(), cod.end(), w);
            assert(it != cod.end());
            h.f[v].at(static_cast<int>(it - cod.begin()), static_cast<int>(j)) = 1;
        }
    }
    return h;
}

// Basis morphism I_{src} -> I_{tgt} attached to a path p: tgt ~> src
// (strip p from the back).
inline RepHom inj_path_hom(const QuiverContext& c, int src1, int tgt1,
                           const std::vector<int>& p) {
    int src = src1 - 1, tgt = tgt1 - 1;
    RepHom h;
    h.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) {
        const auto& dom = c.paths(v, src);
        const auto& cod = c.paths(v, tgt);
        h.f[v] = Mat(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
        for (size_t j = 0; j < dom.size(); ++j) {
            const auto& w = dom[j];
            if (w.size() < p.size()) continue;
            if (!std::equal(p.begin(), p.end(), w.end() - p.size())) continue;
            std::vector<int> rest(w.begin(), w.end() - p.size());
            auto it = std::find(cod.begin(), cod.end(), rest);
            assert(it != cod.end());
            h.f[v].at(static_cast<int>(it - cod.begin()), static_cast<int>(j)) = 1;
        }
    }
    return h;
}

} // namespace detail

inline Rep Catalog::tau_rep(const Rep& M) {
    const QuiverContext& c = *ctx_;
    const GaloisField& F = *F_;
    if (dim_is_zero(M.dim)) return rep_zero(c);

    // projective cover P0 -> M from lifts of top(M)
    auto rad = radical_bases(c, F, M);
    std::vector<int> cover_verts;
    std::vector<std::vector<FElem>> lifts;
    for (int v = 0; v < c.m; ++v) {
        std::vector<bool> is_piv(M.dim[v], false);
        for (int p : rad[v].pivots) is_piv[p] = true;
        for (int j = 0; j < M.dim[v]; ++j)
            if (!is_piv[j]) {
                cover_verts.push_back(v + 1);
                std::vector<FElem> x(M.dim[v], 0);
                x[j] = 1;
                lifts.push_back(std::move(x));
            }
    }
    detail::PathSum P0 = detail::path_sum(c, cover_verts, true);
    RepHom cover;
    cover.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) cover.f[v] = Mat(M.dim[v], P0.rep.dim[v]);
    for (size_t b = 0; b < cover_verts.size(); ++b) {
        int i = cover_verts[b] - 1;
        for (int v = 0; v < c.m; ++v) {
            const auto& paths = c.paths(i, v);
            for (size_t pidx = 0; pidx < paths.size(); ++pidx) {
                Mat mw = path_matrix(c, F, M, paths[pidx], i);
                for (int r = 0; r < M.dim[v]; ++r) {
                    FElem acc = 0;
                    for (int k = 0; k < M.dim[i]; ++k)
                        acc = F.axpy(acc, mw.at(r, k), lifts[b][k]);
                    cover.f[v].at(r, P0.off[b][v] + static_cast<int>(pidx)) = acc;
                }
            }
        }
    }
    auto [K, incl] = kernel_rep(c, F, P0.rep, M, cover);
    if (dim_is_zero(K.dim))
        throw std::invalid_argument("tau: module is projective");

    // K is projective (hereditary); identify its indecomposable summands
    std::vector<Summand> parts = decompose_rep(K);
    std::vector<int> src_verts;
    std::vector<RepHom> src_maps; // P_{j_s} -> P0
    for (const auto& part : parts) {
        int jv = 0;
        RepHom iso;
        for (int v = 1; v <= c.m && jv == 0; ++v) {
            Rep pv = rep_projective(c, v);
            if (pv.dim != part.rep.dim) continue;
            if (find_iso(pv, part.rep, iso)) jv = v;
        }
        if (jv == 0) throw std::logic_error("tau: syzygy summand is not projective");
        src_verts.push_back(jv);
        src_maps.push_back(hom_compose(F, incl, hom_compose(F, part.emb, iso)));
    }

    // nu(phi): assemble the injective-side presentation map blockwise
    detail::PathSum I1 = detail::path_sum(c, src_verts, false);
    detail::PathSum I0 = detail::path_sum(c, cover_verts, false);
    RepHom nuphi;
    nuphi.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) nuphi.f[v] = Mat(I0.rep.dim[v], I1.rep.dim[v]);
    for (size_t s = 0; s < src_verts.size(); ++s) {
        int j = src_verts[s] - 1;
        for (size_t b = 0; b < cover_verts.size(); ++b) {
            int i = cover_verts[b] - 1;
            const auto& pij = c.paths(i, j);
            for (size_t pidx = 0; pidx < pij.size(); ++pidx) {
                // coefficient of path p in the (b,s) block of phi: column of
                // the trivial path of P_j at vertex j, rows of block b
                FElem lam = src_maps[s].f[j].at(P0.off[b][j] + static_cast<int>(pidx), 0);
                if (lam == 0) continue;
                RepHom basis = detail::inj_path_hom(c, src_verts[s], cover_verts[b], pij[pidx]);
                for (int v = 0; v < c.m; ++v) {
                    Rep iblkd = rep_injective(c, src_verts[s]);
                    Rep iblkc = rep_injective(c, cover_verts[b]);
                    for (int r = 0; r < iblkc.dim[v]; ++r)
                        for (int cc = 0; cc < iblkd.dim[v]; ++cc)
                            nuphi.f[v].at(I0.off[b][v] + r, I1.off[s][v] + cc) =
                                F.add(nuphi.f[v].at(I0.off[b][v] + r, I1.off[s][v] + cc),
                                      F.mul(lam, basis.f[v].at(r, cc)));
                }
            }
        }
    }
    return kernel_rep(c, F, I1.rep, I0.rep, nuphi).first;
}

inline Rep Catalog::tauinv_rep(const Rep& M) {
    const QuiverContext& c = *ctx_;
    const GaloisField& F = *F_;
    if (dim_is_zero(M.dim)) return rep_zero(c);

    // injective envelope M -> I0 from functionals extending a socle dual basis
    auto soc = socle_bases(c, F, M);
    std::vector<int> env_verts;
    std::vector<std::vector<FElem>> functionals; // rows on M_v
    for (int v = 0; v < c.m; ++v) {
        int sv = soc[v].cols;
        if (sv == 0) continue;
        // complete socle columns to a basis and invert; top rows give the duals
        Mat full(M.dim[v], M.dim[v]);
        for (int i = 0; i < M.dim[v]; ++i)
            for (int j = 0; j < sv; ++j) full.at(i, j) = soc[v].at(i, j);
        Rref rr = rref(F, [&] {
            Mat rows(sv, M.dim[v]);
            for (int j = 0; j < sv; ++j)
                for (int i = 0; i < M.dim[v]; ++i) rows.at(j, i) = soc[v].at(i, j);
            return rows;
        }());
        std::vector<bool> is_piv(M.dim[v], false);
        for (int p : rr.pivots) is_piv[p] = true;
        int col = sv;
        for (int j = 0; j < M.dim[v]; ++j)
            if (!is_piv[j]) full.at(j, col++) = 1;
        // invert full
        Mat inv(M.dim[v], M.dim[v]);
        for (int j = 0; j < M.dim[v]; ++j) {
            std::vector<FElem> b(M.dim[v], 0), x;
            b[j] = 1;
            if (!mat_solve(F, full, b, x))
                throw std::logic_error("tau_inv: socle completion not invertible");
            for (int i = 0; i < M.dim[v]; ++i) inv.at(i, j) = x[i];
        }
        for (int r = 0; r < sv; ++r) {
            env_verts.push_back(v + 1);
            std::vector<FElem> mu(M.dim[v]);
            for (int j = 0; j < M.dim[v]; ++j) mu[j] = inv.at(r, j);
            functionals.push_back(std::move(mu));
        }
    }
    detail::PathSum I0 = detail::path_sum(c, env_verts, false);
    RepHom emb;
    emb.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) emb.f[v] = Mat(I0.rep.dim[v], M.dim[v]);
    for (size_t b = 0; b < env_verts.size(); ++b) {
        int i = env_verts[b] - 1;
        for (int v = 0; v < c.m; ++v) {
            const auto& paths = c.paths(v, i);
            for (size_t pidx = 0; pidx < paths.size(); ++pidx) {
                Mat mw = path_matrix(c, F, M, paths[pidx], v);
                // row = mu . M_w
                for (int j = 0; j < M.dim[v]; ++j) {
                    FElem acc = 0;
                    for (int k = 0; k < M.dim[i]; ++k)
                        acc = F.axpy(acc, functionals[b][k], mw.at(k, j));
                    emb.f[v].at(I0.off[b][v] + static_cast<int>(pidx), j) = acc;
                }
            }
        }
    }
    auto [C, proj] = coker_rep(c, F, M, I0.rep, emb);
    if (dim_is_zero(C.dim))
        throw std::invalid_argument("tau_inv: module is injective");

    std::vector<Summand> parts = decompose_rep(C);
    // projections C -> part: stack the embeddings and invert per vertex
    std::vector<RepHom> projections(parts.size());
    {
        std::vector<Mat> stacked(c.m);
        for (int v = 0; v < c.m; ++v) {
            stacked[v] = Mat(C.dim[v], C.dim[v]);
            int col = 0;
            for (const auto& part : parts)
                for (int j = 0; j < part.rep.dim[v]; ++j, ++col)
                    for (int i = 0; i < C.dim[v]; ++i)
                        stacked[v].at(i, col) = part.emb.f[v].at(i, j);
        }
        std::vector<Mat> inv(c.m);
        for (int v = 0; v < c.m; ++v) {
            inv[v] = Mat(C.dim[v], C.dim[v]);
            for (int j = 0; j < C.dim[v]; ++j) {
                std::vector<FElem> b(C.dim[v], 0), x;
                b[j] = 1;
                if (!mat_solve(F, stacked[v], b, x))
                    throw std::logic_error("tau_inv: summand embeddings not a basis");
                for (int i = 0; i < C.dim[v]; ++i) inv[v].at(i, j) = x[i];
            }
        }
        int row = 0;
        for (size_t pi = 0; pi < parts.size(); ++pi) {
            projections[pi].f.resize(c.m);
            for (int v = 0; v < c.m; ++v) projections[pi].f[v] = Mat(parts[pi].rep.dim[v], C.dim[v]);
        }
        for (int v = 0; v < c.m; ++v) {
            row = 0;
            for (size_t pi = 0; pi < parts.size(); ++pi)
                for (int i = 0; i < parts[pi].rep.dim[v]; ++i, ++row)
                    for (int j = 0; j < C.dim[v]; ++j)
                        projections[pi].f[v].at(i, j) = inv[v].at(row, j);
        }
    }

    std::vector<int> tgt_verts;
    std::vector<RepHom> tgt_maps; // I0 -> I_{j_k}
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        int jv = 0;
        RepHom iso;
        for (int v = 1; v <= c.m && jv == 0; ++v) {
            Rep iv = rep_injective(c, v);
            if (iv.dim != parts[pi].rep.dim) continue;
            if (find_iso(parts[pi].rep, iv, iso)) jv = v;
        }
        if (jv == 0) throw std::logic_error("tau_inv: cosyzygy summand is not injective");
        tgt_verts.push_back(jv);
        tgt_maps.push_back(hom_compose(F, iso, hom_compose(F, projections[pi], proj)));
    }

    // nu^{-1}(psi): projective-side copresentation map
    detail::PathSum Psrc = detail::path_sum(c, env_verts, true);
    detail::PathSum Ptgt = detail::path_sum(c, tgt_verts, true);
    RepHom nupsi;
    nupsi.f.resize(c.m);
    for (int v = 0; v < c.m; ++v) nupsi.f[v] = Mat(Ptgt.rep.dim[v], Psrc.rep.dim[v]);
    for (size_t b = 0; b < env_verts.size(); ++b) {
        int i = env_verts[b] - 1;
        for (size_t s = 0; s < tgt_verts.size(); ++s) {
            int j = tgt_verts[s] - 1;
            const auto& pji = c.paths(j, i);
            for (size_t pidx = 0; pidx < pji.size(); ++pidx) {
                // coefficient of path p in the block I_i -> I_j of psi: row of
                // the trivial path of I_j at vertex j, columns of block b
                FElem lam = tgt_maps[s].f[j].at(0, I0.off[b][j] + static_cast<int>(pidx));
                if (lam == 0) continue;
                RepHom basis = detail::proj_path_hom(c, env_verts[b], tgt_verts[s], pji[pidx]);
                for (int v = 0; v < c.m; ++v) {
                    Rep pblkd = rep_projective(c, env_verts[b]);
                    Rep pblkc = rep_projective(c, tgt_verts[s]);
                    for (int r = 0; r < pblkc.dim[v]; ++r)
                        for (int cc = 0; cc < pblkd.dim[v]; ++cc)
                            nupsi.f[v].at(Ptgt.off[s][v] + r, Psrc.off[b][v] + cc) =
                                F.add(nupsi.f[v].at(Ptgt.off[s][v] + r, Psrc.off[b][v] + cc),
                                      F.mul(lam, basis.f[v].at(r, cc)));
                }
            }
        }
    }
    return coker_rep(c, F, Psrc.rep, Ptgt.rep, nupsi).first;
}

} // namespace qca
