// context.hpp — acyclic valued quiver configuration: the matrices R, R', B,
// E, E', D, Lambda, the bilinear forms they induce on Z^m, the star maps
// *x = E x and x* = E' x, and the derived translate on the Grothendieck
// group. Contexts are validated once and immutable afterwards.

#pragma once

#include "qca/scalar.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qca {

using DimVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<long>>;

inline DimVec dim_add(const DimVec& x, const DimVec& y) {
    DimVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}
inline DimVec dim_sub(const DimVec& x, const DimVec& y) {
    DimVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}
inline DimVec dim_neg(const DimVec& x) {
    DimVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
    return z;
}
inline bool dim_leq(const DimVec& x, const DimVec& y) {
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}
inline bool dim_is_zero(const DimVec& x) {
    return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
}
inline int dim_total(const DimVec& x) { return std::accumulate(x.begin(), x.end(), 0); }

inline std::string dim_str(const DimVec& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

struct ContextError : std::runtime_error {
    explicit ContextError(const std::string& what) : std::runtime_error(what) {}
};

struct Arrow {
    int from = 0, to = 0, mult = 1; // 1-based vertices
};

class QuiverContext {
public:
    int m = 0;          // total vertices (frozen included)
    int n = 0;          // mutable vertices
    int q0 = 2;         // base prime, |F_q0|
    std::vector<int> valuations; // d_i per vertex
    std::vector<Arrow> arrows;
    IntMatrix lambda;

    // derived
    IntMatrix R, Rp, B, E, Ep, ED, Einv, Cox; // Cox = -E^{-1} E'
    std::vector<std::pair<int, int>> expanded_arrows; // 0-based (src,tgt), one per mult unit
    bool uniform_valued = true;

    QuiverContext() = default;

    static QuiverContext from_json(const nlohmann::json& j) {
        QuiverContext c;
        c.m = j.at("m").get<int>();
        c.n = j.at("n").get<int>();
        c.q0 = j.at("q0").get<int>();
        if (j.contains("valuations"))
            c.valuations = j.at("valuations").get<std::vector<int>>();
        else
            c.valuations.assign(c.m, j.at("d").get<int>());
        for (const auto& ja : j.at("arrows")) {
            Arrow a;
            a.from = ja.at("from").get<int>();
            a.to = ja.at("to").get<int>();
            a.mult = ja.value("mult", 1);
            c.arrows.push_back(a);
        }
        c.lambda.assign(c.m, std::vector<long>(c.m, 0));
        const auto& jl = j.at("lambda");
        if (static_cast<int>(jl.size()) != c.m) throw ContextError("lambda: wrong row count");
        for (int i = 0; i < c.m; ++i)
            for (int k = 0; k < c.m; ++k) c.lambda[i][k] = jl[i][k].get<long>();
        c.finalize();
        return c;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["m"] = m;
        j["n"] = n;
        j["q0"] = q0;
        if (uniform_valued) j["d"] = valuations.empty() ? 1 : valuations[0];
        else j["valuations"] = valuations;
        j["arrows"] = nlohmann::json::array();
        for (const auto& a : arrows)
            j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
        j["lambda"] = lambda;
        return j;
    }

    // Uniform valuation; throws when the context is symbolic-only.
    int d() const {
        if (!uniform_valued)
            throw ContextError("context has non-uniform valuations: counting layer unavailable");
        return valuations[0];
    }
    bool counting_ready() const { return uniform_valued && is_supported_prime(q0); }

    // <alpha, beta> = alpha^T (E D) beta, measured over F_{q0}.
    long euler(const DimVec& a, const DimVec& b) const { return bilinear(ED, a, b); }
    // symmetrized Euler form (alpha,beta) = <a,b> + <b,a>
    long sym(const DimVec& a, const DimVec& b) const { return euler(a, b) + euler(b, a); }
    long lambda_form(const DimVec& a, const DimVec& b) const { return bilinear(lambda, a, b); }

    DimVec star_left(const DimVec& x) const { return apply(E, x); }   // *x
    DimVec star_right(const DimVec& x) const { return apply(Ep, x); } // x*
    DimVec coxeter(const DimVec& x) const { return apply(Cox, x); }   // derived translate on K-group

    DimVec zero_vec() const { return DimVec(m, 0); }
    DimVec unit_vec(int v1based) const {
        DimVec e(m, 0);
        e[v1based - 1] = 1;
        return e;
    }

    // All paths src -> dst (0-based) as expanded-arrow index sequences,
    // ordered by (length, lexicographic arrows). Memoized.
    const std::vector<std::vector<int>>& paths(int src, int dst) const {
        auto key = std::make_pair(src, dst);
        auto it = path_cache_.find(key);
        if (it != path_cache_.end()) return it->second;
        std::vector<std::vector<int>> acc;
        std::vector<int> cur;
        walk(src, dst, cur, acc);
        std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) {
            if (x.size() != y.size()) return x.size() < y.size();
            return x < y;
        });
        return path_cache_.emplace(key, std::move(acc)).first->second;
    }

    std::string hash() const { return hash_; }

    void finalize() {
        validate_basics();
        validate_acyclic();
        build_matrices();
        validate_compatibility();
        hash_ = fnv_hash(to_json().dump());
    }

    std::string render_matrices() const {
        std::string s;
        auto dump = [&](const char* name, const IntMatrix& mm) {
            s += name;
            s += " =\n";
            for (const auto& row : mm) {
                s += "  [";
                for (size_t k = 0; k < row.size(); ++k) {
                    if (k) s += ", ";
                    s += std::to_string(row[k]);
                }
                s += "]\n";
            }
        };
        dump("R", R);
        dump("R'", Rp);
        dump("B", B);
        dump("E", E);
        dump("E'", Ep);
        dump("E*D (Euler form)", ED);
        dump("Lambda", lambda);
        dump("Coxeter (-E^{-1}E')", Cox);
        return s;
    }

private:
    long bilinear(const IntMatrix& mat, const DimVec& a, const DimVec& b) const {
        if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m)
            throw ContextError("dimension vector length mismatch with m=" + std::to_string(m));
        long s = 0;
        for (int i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            long row = 0;
            for (int j = 0; j < m; ++j) row += mat[i][j] * b[j];
            s += a[i] * row;
        }
        return s;
    }
    DimVec apply(const IntMatrix& mat, const DimVec& x) const {
        if (static_cast<int>(x.size()) != m)
            throw ContextError("dimension vector length mismatch with m=" + std::to_string(m));
        DimVec y(m, 0);
        for (int i = 0; i < m; ++i) {
            long s = 0;
            for (int j = 0; j < m; ++j) s += mat[i][j] * x[j];
            y[i] = static_cast<int>(s);
        }
        return y;
    }

    void validate_basics() const {
        if (m <= 0 || n <= 0 || n > m) throw ContextError("need 0 < n <= m");
        if (!is_supported_prime(q0))
            throw ContextError("q0 must be one of {2,3,5,7}, got " + std::to_string(q0));
        if (static_cast<int>(valuations.size()) != m) throw ContextError("valuations: wrong length");
        for (int v : valuations)
            if (v <= 0) throw ContextError("valuations must be positive");
        for (const auto& a : arrows) {
            if (a.from < 1 || a.from > m || a.to < 1 || a.to > m)
                throw ContextError("arrow endpoint out of range");
            if (a.from == a.to) throw ContextError("loops are not acyclic");
            if (a.mult <= 0) throw ContextError("arrow multiplicity must be positive");
        }
    }

    void build_matrices() {
        uniform_valued = std::all_of(valuations.begin(), valuations.end(),
                                     [&](int v) { return v == valuations[0]; });
        Rp.assign(m, std::vector<long>(m, 0));
        for (const auto& a : arrows) Rp[a.from - 1][a.to - 1] += a.mult;
        // r_{ji} = d_i r'_{ij} / d_j (transpose in the equal-valued case)
        R.assign(m, std::vector<long>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (Rp[i][j] == 0) continue;
                long num = static_cast<long>(valuations[i]) * Rp[i][j];
                if (num % valuations[j] != 0)
                    throw ContextError("valuations incompatible with arrow (" +
                                       std::to_string(i + 1) + "->" + std::to_string(j + 1) + ")");
                R[j][i] = num / valuations[j];
            }
        B.assign(m, std::vector<long>(m, 0));
        E.assign(m, std::vector<long>(m, 0));
        Ep.assign(m, std::vector<long>(m, 0));
        ED.assign(m, std::vector<long>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                B[i][j] = Rp[i][j] - R[i][j];
                E[i][j] = (i == j ? 1 : 0) - Rp[i][j];
                Ep[i][j] = (i == j ? 1 : 0) - R[i][j];
                ED[i][j] = 0;
            }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) ED[i][j] = E[i][j] * valuations[j];

        expanded_arrows.clear();
        for (const auto& a : arrows)
            for (int t = 0; t < a.mult; ++t)
                expanded_arrows.emplace_back(a.from - 1, a.to - 1);

        Einv = invert_unimodular(E);
        // Cox = -Einv * Ep
        Cox.assign(m, std::vector<long>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                long s = 0;
                for (int k = 0; k < m; ++k) s += Einv[i][k] * Ep[k][j];
                Cox[i][j] = -s;
            }
    }

    void validate_acyclic() const {
        // topological sort on all m vertices
        std::vector<int> indeg(m, 0);
        for (const auto& a : arrows) indeg[a.to - 1]++;
        std::vector<int> queue;
        for (int i = 0; i < m; ++i)
            if (indeg[i] == 0) queue.push_back(i);
        int seen = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++seen;
            for (const auto& a : arrows)
                if (a.from - 1 == v && --indeg[a.to - 1] == 0) queue.push_back(a.to - 1);
        }
        if (seen != m) throw ContextError("quiver is not acyclic");
    }

    void validate_compatibility() const {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (lambda[i][j] != -lambda[j][i])
                    throw ContextError("Lambda is not skew-symmetric at entry (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        // compatibility Lambda(-B) = diag(d_1..d_m)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                long s = 0;
                for (int k = 0; k < m; ++k) s -= lambda[i][k] * B[k][j];
                long want = (i == j) ? valuations[i] : 0;
                if (s != want)
                    throw ContextError("compatibility Lambda(-B)=diag(d) fails at entry (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                       "): got " + std::to_string(s) + ", want " +
                                       std::to_string(want));
            }
        // E D = D E holds automatically in the equal-valued case; non-uniform
        // contexts stay loadable as symbolic-only and the counting layer
        // refuses them instead.
        if (uniform_valued)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (E[i][j] * valuations[j] != valuations[i] * E[i][j])
                        throw ContextError("E D != D E at entry (" + std::to_string(i + 1) +
                                           "," + std::to_string(j + 1) + ")");
    }

    // E is unimodular for acyclic quivers (unitriangular in topological order);
    // invert over Q and insist on integrality.
    static IntMatrix invert_unimodular(const IntMatrix& mat) {
        int k = static_cast<int>(mat.size());
        std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(2 * k, 0));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) aug[i][j] = mat[i][j];
            aug[i][k + i] = 1;
        }
        for (int c = 0, r = 0; c < k && r < k; ++c) {
            int pr = -1;
            for (int i = r; i < k; ++i)
                if (aug[i][c] != 0) { pr = i; break; }
            if (pr < 0) throw ContextError("E is singular");
            std::swap(aug[pr], aug[r]);
            Rational piv = aug[r][c];
            for (int j = 0; j < 2 * k; ++j) aug[r][j] /= piv;
            for (int i = 0; i < k; ++i) {
                if (i == r || aug[i][c] == 0) continue;
                Rational f = aug[i][c];
                for (int j = 0; j < 2 * k; ++j) aug[i][j] -= f * aug[r][j];
            }
            ++r;
        }
        IntMatrix inv(k, std::vector<long>(k, 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const Rational& v = aug[i][k + j];
                if (boost::multiprecision::denominator(v) != 1)
                    throw ContextError("E^{-1} is not integral");
                inv[i][j] = static_cast<long>(boost::multiprecision::numerator(v));
            }
        return inv;
    }

    void walk(int v, int dst, std::vector<int>& cur, std::vector<std::vector<int>>& acc) const {
        if (v == dst) acc.push_back(cur);
        for (size_t a = 0; a < expanded_arrows.size(); ++a) {
            if (expanded_arrows[a].first != v) continue;
            cur.push_back(static_cast<int>(a));
            walk(expanded_arrows[a].second, dst, cur, acc);
            cur.pop_back();
        }
    }

    static std::string fnv_hash(const std::string& s) {
        uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        char buf[17];
        snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }

    mutable std::map<std::pair<int, int>, std::vector<std::vector<int>>> path_cache_;
    std::string hash_;
};

// The two contexts the verification suites ship with.
inline QuiverContext kronecker_context(int q0 = 2) {
    nlohmann::json j = {
        {"m", 2}, {"n", 2}, {"d", 2}, {"q0", q0},
        {"arrows", {{{"from", 1}, {"to", 2}, {"mult", 2}}}},
        {"lambda", {{0, 1}, {-1, 0}}},
    };
    return QuiverContext::from_json(j);
}

inline QuiverContext a2_valued_context(int q0 = 2) {
    nlohmann::json j = {
        {"m", 2}, {"n", 2}, {"d", 2}, {"q0", q0},
        {"arrows", {{{"from", 1}, {"to", 2}, {"mult", 1}}}},
        {"lambda", {{0, 2}, {-2, 0}}},
    };
    return QuiverContext::from_json(j);
}

} // namespace qca
