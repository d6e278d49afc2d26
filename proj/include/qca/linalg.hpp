// linalg.hpp — table-driven arithmetic in F_{p^d} (p^d <= 343) and the small
// dense-matrix kit the representation layer runs on: RREF, rank, kernel,
// solving, and echelon-form subspace enumeration.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qca {

using FElem = int16_t; // index into the field tables; 0 is zero, 1 is one

class GaloisField {
public:
    GaloisField(int p, int d) : p_(p), d_(d) {
        if (p < 2 || d < 1) throw std::invalid_argument("bad field parameters");
        long sz = 1;
        for (int i = 0; i < d; ++i) {
            sz *= p;
            if (sz > 343) throw std::invalid_argument("field size p^d exceeds 343");
        }
        size_ = static_cast<int>(sz);
        build_tables();
        check_axioms();
    }

    int p() const { return p_; }
    int d() const { return d_; }
    int size() const { return size_; }

    FElem add(FElem x, FElem y) const { return addt_[x * size_ + y]; }
    FElem sub(FElem x, FElem y) const { return addt_[x * size_ + negt_[y]]; }
    FElem mul(FElem x, FElem y) const { return mult_[x * size_ + y]; }
    FElem neg(FElem x) const { return negt_[x]; }
    FElem inv(FElem x) const {
        if (x == 0) throw std::domain_error("field inverse of zero");
        return invt_[x];
    }
    // x + y*z, the elimination workhorse
    FElem axpy(FElem x, FElem y, FElem z) const { return add(x, mul(y, z)); }

    // Shared registry; fields are immutable once built.
    static const GaloisField& get(int p, int d) {
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::unique_ptr<GaloisField>> reg;
        std::lock_guard<std::mutex> lk(mu);
        auto key = std::make_pair(p, d);
        auto it = reg.find(key);
        if (it == reg.end())
            it = reg.emplace(key, std::make_unique<GaloisField>(p, d)).first;
        return *it->second;
    }

private:
    // Elements are polynomials over F_p modulo an irreducible monic poly of
    // degree d, encoded base p (constant digit first).
    void build_tables() {
        std::vector<int> modpoly = find_irreducible();
        addt_.resize(size_ * size_);
        mult_.resize(size_ * size_);
        negt_.resize(size_);
        invt_.assign(size_, 0);
        for (int x = 0; x < size_; ++x) {
            negt_[x] = static_cast<FElem>(poly_neg(x));
            for (int y = 0; y < size_; ++y) {
                addt_[x * size_ + y] = static_cast<FElem>(poly_add(x, y));
                mult_[x * size_ + y] = static_cast<FElem>(poly_mul(x, y, modpoly));
            }
        }
        for (int x = 1; x < size_; ++x) {
            for (int y = 1; y < size_; ++y)
                if (mult_[x * size_ + y] == 1) { invt_[x] = static_cast<FElem>(y); break; }
            if (invt_[x] == 0) throw std::logic_error("field table: missing inverse");
        }
    }

    // Full axiom sweep over the tables. Worst case (343 elements) stays well
    // under a second and runs once per process thanks to the registry.
    void check_axioms() const {
        for (int x = 0; x < size_; ++x)
            for (int y = 0; y < size_; ++y) {
                if (add(x, y) != add(y, x) || mul(x, y) != mul(y, x))
                    throw std::logic_error("field axioms: commutativity");
            }
        for (int x = 0; x < size_; ++x) {
            if (add(x, 0) != x || mul(x, 1) != x || mul(x, 0) != 0)
                throw std::logic_error("field axioms: identities");
            if (add(x, neg(x)) != 0) throw std::logic_error("field axioms: negation");
            if (x != 0 && mul(x, inv(x)) != 1) throw std::logic_error("field axioms: inverse");
        }
        for (int x = 0; x < size_; ++x)
            for (int y = 0; y < size_; ++y)
                for (int z = 0; z < size_; ++z) {
                    if (add(add(x, y), z) != add(x, add(y, z)))
                        throw std::logic_error("field axioms: + associativity");
                    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                        throw std::logic_error("field axioms: * associativity");
                    if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
                        throw std::logic_error("field axioms: distributivity");
                }
    }

    std::vector<int> digits(int x) const {
        std::vector<int> ds(d_);
        for (int i = 0; i < d_; ++i) { ds[i] = x % p_; x /= p_; }
        return ds;
    }
    int undigits(const std::vector<int>& ds) const {
        int x = 0;
        for (int i = d_ - 1; i >= 0; --i) x = x * p_ + ds[i];
        return x;
    }
    int poly_add(int x, int y) const {
        auto a = digits(x), b = digits(y);
        for (int i = 0; i < d_; ++i) a[i] = (a[i] + b[i]) % p_;
        return undigits(a);
    }
    int poly_neg(int x) const {
        auto a = digits(x);
        for (int i = 0; i < d_; ++i) a[i] = (p_ - a[i]) % p_;
        return undigits(a);
    }
    int poly_mul(int x, int y, const std::vector<int>& modpoly) const {
        auto a = digits(x), b = digits(y);
        std::vector<int> c(2 * d_ - 1, 0);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        // reduce modulo the monic modpoly (degree d)
        for (int k = 2 * d_ - 2; k >= d_; --k) {
            int coef = c[k];
            if (coef == 0) continue;
            c[k] = 0;
            for (int i = 0; i < d_; ++i)
                c[k - d_ + i] = ((c[k - d_ + i] - coef * modpoly[i]) % p_ + p_) % p_;
        }
        c.resize(d_);
        return undigits(c);
    }
    // Monic irreducible of degree d over F_p, found by trial division.
    std::vector<int> find_irreducible() const {
        if (d_ == 1) return {0}; // x - 0: F_p itself, coefficient unused
        long count = 1;
        for (int i = 0; i < d_; ++i) count *= p_;
        for (long lo = 0; lo < count; ++lo) {
            std::vector<int> cand(d_);
            long t = lo;
            for (int i = 0; i < d_; ++i) { cand[i] = t % p_; t /= p_; }
            if (is_irreducible(cand)) return cand;
        }
        throw std::logic_error("no irreducible polynomial found");
    }
    // cand holds the low coefficients of x^d + cand[d-1] x^(d-1) + ... + cand[0]
    bool is_irreducible(const std::vector<int>& cand) const {
        // no roots, and no factor of degree 2..d/2 by direct trial division
        for (int r = 0; r < p_; ++r) {
            long v = 1, acc = 0;
            for (int i = 0; i < d_; ++i) { acc = (acc + cand[i] * v) % p_; v = v * r % p_; }
            acc = (acc + v) % p_;
            if (acc == 0) return false;
        }
        for (int deg = 2; 2 * deg <= d_; ++deg) {
            long nf = 1;
            for (int i = 0; i < deg; ++i) nf *= p_;
            for (long lo = 0; lo < nf; ++lo) {
                std::vector<int> f(deg + 1);
                long t = lo;
                for (int i = 0; i < deg; ++i) { f[i] = t % p_; t /= p_; }
                f[deg] = 1;
                if (divides(f, cand)) return false;
            }
        }
        return true;
    }
    bool divides(const std::vector<int>& f, const std::vector<int>& cand) const {
        std::vector<int> rem(d_ + 1);
        for (int i = 0; i < d_; ++i) rem[i] = cand[i];
        rem[d_] = 1;
        int deg = d_, fdeg = static_cast<int>(f.size()) - 1;
        while (deg >= fdeg) {
            int lead = rem[deg];
            if (lead != 0)
                for (int i = 0; i <= fdeg; ++i)
                    rem[deg - fdeg + i] = ((rem[deg - fdeg + i] - lead * f[i]) % p_ + p_) % p_;
            --deg;
        }
        for (int i = 0; i < fdeg; ++i)
            if (rem[i] != 0) return false;
        return true;
    }

    int p_, d_, size_;
    std::vector<FElem> addt_, mult_, negt_, invt_;
};

// Dense matrix over a table field. Rows*cols may be zero.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<FElem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    FElem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    FElem at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat eye(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_zero() const { return std::all_of(a.begin(), a.end(), [](FElem x) { return x == 0; }); }
};

inline Mat mat_mul(const GaloisField& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::logic_error("mat_mul: shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            FElem v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = F.axpy(z.at(i, j), v, y.at(k, j));
        }
    return z;
}

inline Mat mat_add(const GaloisField& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("mat_add: shape mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.add(x.a[i], y.a[i]);
    return z;
}

inline Mat mat_sub(const GaloisField& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("mat_sub: shape mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.sub(x.a[i], y.a[i]);
    return z;
}

inline Mat mat_scale(const GaloisField& F, FElem c, const Mat& x) {
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.mul(c, x.a[i]);
    return z;
}

struct Rref {
    Mat m;
    std::vector<int> pivots; // pivot column per nonzero row
    int rank = 0;
};

inline Rref rref(const GaloisField& F, Mat m) {
    Rref out;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        FElem piv = F.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(piv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            FElem f = F.neg(m.at(i, c));
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.axpy(m.at(i, j), f, m.at(r, j));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

inline int mat_rank(const GaloisField& F, const Mat& m) { return rref(F, m).rank; }

// Allocation-free invertibility test on a row-major n x n buffer
// (destroys the buffer).
inline bool invertible_inplace(const GaloisField& F, FElem* a, int n) {
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (a[i * n + c] != 0) { pr = i; break; }
        if (pr < 0) return false;
        if (pr != c)
            for (int j = c; j < n; ++j) std::swap(a[pr * n + j], a[c * n + j]);
        FElem inv = F.inv(a[c * n + c]);
        for (int j = c; j < n; ++j) a[c * n + j] = F.mul(inv, a[c * n + j]);
        for (int i = c + 1; i < n; ++i) {
            FElem f = a[i * n + c];
            if (f == 0) continue;
            f = F.neg(f);
            for (int j = c; j < n; ++j) a[i * n + j] = F.axpy(a[i * n + j], f, a[c * n + j]);
        }
    }
    return true;
}

inline bool mat_invertible(const GaloisField& F, const Mat& m) {
    if (m.rows != m.cols) return false;
    if (m.rows == 0) return true;
    thread_local std::vector<FElem> buf;
    buf.assign(m.a.begin(), m.a.end());
    return invertible_inplace(F, buf.data(), m.rows);
}

// Basis of { x : m x = 0 }, one column per kernel dimension.
inline Mat kernel_basis(const GaloisField& F, const Mat& m) {
    Rref r = rref(F, m);
    std::vector<int> free_cols;
    {
        std::vector<bool> is_piv(m.cols, false);
        for (int c : r.pivots) is_piv[c] = true;
        for (int c = 0; c < m.cols; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
    }
    Mat k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        k.at(fc, static_cast<int>(j)) = 1;
        for (int i = 0; i < r.rank; ++i)
            k.at(r.pivots[i], static_cast<int>(j)) = F.neg(r.m.at(i, fc));
    }
    return k;
}

// Solve m x = b for a single solution; returns false when inconsistent.
inline bool mat_solve(const GaloisField& F, const Mat& m, const std::vector<FElem>& b,
                      std::vector<FElem>& x) {
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    Rref r = rref(F, aug);
    x.assign(m.cols, 0);
    for (int i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == m.cols) return false; // pivot in the constant column
        x[r.pivots[i]] = r.m.at(i, m.cols);
    }
    return true;
}

// Reduce v against echelon rows (rows of rr.m); true iff v lies in the row space.
inline bool in_rowspace(const GaloisField& F, const Rref& rr, std::vector<FElem> v) {
    for (int i = 0; i < rr.rank; ++i) {
        FElem c = v[rr.pivots[i]];
        if (c == 0) continue;
        FElem f = F.neg(c);
        for (int j = 0; j < rr.m.cols; ++j) v[j] = F.axpy(v[j], f, rr.m.at(i, j));
    }
    return std::all_of(v.begin(), v.end(), [](FElem t) { return t == 0; });
}

// All k-dimensional subspaces of F^n as RREF row-bases, in a fixed order
// (pivot sets lexicographic, then free entries in odometer order).
inline std::vector<Mat> subspaces(const GaloisField& F, int n, int k) {
    std::vector<Mat> out;
    if (k < 0 || k > n) return out;
    if (k == 0) { out.emplace_back(0, n); return out; }
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    auto emit_for_pivots = [&]() {
        // free positions: (row i, col j) with j > piv[i], j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(n, false);
        for (int c : piv) is_piv[c] = true;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::vector<FElem> vals(free_pos.size(), 0);
        while (true) {
            Mat b(k, n);
            for (int i = 0; i < k; ++i) b.at(i, piv[i]) = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                b.at(free_pos[t].first, free_pos[t].second) = vals[t];
            out.push_back(std::move(b));
            size_t t = 0;
            while (t < vals.size() && vals[t] == F.size() - 1) vals[t++] = 0;
            if (t == vals.size()) break;
            ++vals[t];
        }
    };
    // iterate k-subsets of {0..n-1}
    while (true) {
        emit_for_pivots();
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

// Gaussian binomial [n choose k]_q as a plain integer count (fits easily
// at the field sizes this engine admits).
inline long long subspace_count(int q, int n, int k) {
    if (k < 0 || k > n) return 0;
    // prod_{i=0}^{k-1} (q^(n-i)-1)/(q^(i+1)-1)
    long long num = 1, den = 1;
    auto ipow = [](long long b, int e) { long long r = 1; while (e--) r *= b; return r; };
    for (int i = 0; i < k; ++i) {
        num *= ipow(q, n - i) - 1;
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

} // namespace qca
