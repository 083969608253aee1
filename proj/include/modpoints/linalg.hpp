#pragma once

// Exact linear algebra: dense matrices over Z (bigint entries), Smith normal
// form with recorded transforms, integer kernels via unimodular column
// reduction, fraction-free rank/determinant, and echelon machinery over
// Z/p^m (chain-ring pivoting with globally minimal valuation).

#include <cstdint>
#include <vector>

#include "arith.hpp"
#include "bigint.hpp"

namespace modpoints {

struct MatI {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    MatI() = default;
    MatI(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static MatI identity(size_t n) {
        MatI m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Int(1);
        return m;
    }
    friend MatI operator*(const MatI& x, const MatI& y) {
        if (x.cols != y.rows) fail(errc::internal, "matrix product shape mismatch");
        MatI r(x.rows, y.cols);
        for (size_t i = 0; i < x.rows; ++i)
            for (size_t k = 0; k < x.cols; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }
    friend MatI operator+(const MatI& x, const MatI& y) {
        MatI r(x.rows, x.cols);
        for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
        return r;
    }
    friend MatI operator-(const MatI& x, const MatI& y) {
        MatI r(x.rows, x.cols);
        for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    friend bool operator==(const MatI& x, const MatI& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    bool is_zero() const {
        for (const Int& v : a)
            if (!v.is_zero()) return false;
        return true;
    }
};

struct Mat64 {
    size_t rows = 0, cols = 0;
    std::vector<i64> a;

    Mat64() = default;
    Mat64(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    i64& at(size_t i, size_t j) { return a[i * cols + j]; }
    i64 at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Mat64 identity(size_t n) {
        Mat64 m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    MatI to_int() const {
        MatI m(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = Int(a[i]);
        return m;
    }
    Mat64 reduced(i64 mod) const {
        Mat64 m(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = mod_pos(a[i], mod);
        return m;
    }
    friend bool operator==(const Mat64& x, const Mat64& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline Mat64 mul_mod(const Mat64& x, const Mat64& y, i64 mod) {
    if (x.cols != y.rows) fail(errc::internal, "matrix product shape mismatch");
    Mat64 r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            i64 v = x.at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = mod_pos(r.at(i, j) + mulmod(v, y.at(k, j), mod), mod);
        }
    return r;
}

// stack matrices vertically (same column count)
inline MatI vstack(const std::vector<MatI>& parts) {
    size_t rows = 0, cols = parts.empty() ? 0 : parts[0].cols;
    for (const MatI& p : parts) rows += p.rows;
    MatI r(rows, cols);
    size_t off = 0;
    for (const MatI& p : parts) {
        for (size_t i = 0; i < p.rows; ++i)
            for (size_t j = 0; j < cols; ++j) r.at(off + i, j) = p.at(i, j);
        off += p.rows;
    }
    return r;
}

// --- integer kernel -------------------------------------------------------

// Z-basis of ker(A) as columns: unimodular column reduction of A while
// mirroring the operations on an identity matrix.  The kernel of a map to a
// torsion-free group is saturated, so this basis is primitive.
inline MatI kernel_basis_z(const MatI& A) {
    MatI B = A;
    MatI V = MatI::identity(A.cols);
    auto colsub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < B.rows; ++i) B.at(i, dst) -= q * B.at(i, src);
        for (size_t i = 0; i < V.rows; ++i) V.at(i, dst) -= q * V.at(i, src);
    };
    auto colswap = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t i = 0; i < B.rows; ++i) std::swap(B.at(i, x), B.at(i, y));
        for (size_t i = 0; i < V.rows; ++i) std::swap(V.at(i, x), V.at(i, y));
    };
    size_t c = 0;
    for (size_t r = 0; r < B.rows && c < B.cols; ++r) {
        for (;;) {
            size_t best = B.cols;
            for (size_t j = c; j < B.cols; ++j) {
                if (B.at(r, j).is_zero()) continue;
                if (best == B.cols || B.at(r, j).abs() < B.at(r, best).abs()) best = j;
            }
            if (best == B.cols) break;  // row r is zero on the live columns
            bool lone = true;
            for (size_t j = c; j < B.cols; ++j) {
                if (j == best || B.at(r, j).is_zero()) continue;
                lone = false;
                colsub(j, best, rounded_div(B.at(r, j), B.at(r, best)));
            }
            if (lone) {
                colswap(c, best);
                ++c;
                break;
            }
        }
    }
    MatI K(A.cols, A.cols - c);
    for (size_t i = 0; i < A.cols; ++i)
        for (size_t j = c; j < A.cols; ++j) K.at(i, j - c) = V.at(i, j);
    return K;
}

// --- Smith normal form ----------------------------------------------------

struct SmithForm {
    MatI D;  // diagonal, divisibility chain, nonnegative
    MatI S;  // unimodular, rows
    MatI T;  // unimodular, cols;  S * A * T = D
    std::vector<Int> diag() const {
        std::vector<Int> out;
        for (size_t i = 0; i < std::min(D.rows, D.cols); ++i) out.push_back(D.at(i, i));
        return out;
    }
};

inline SmithForm smith(const MatI& A) {
    SmithForm f;
    f.D = A;
    f.S = MatI::identity(A.rows);
    f.T = MatI::identity(A.cols);
    MatI& D = f.D;
    auto rowsub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t j = 0; j < D.cols; ++j) D.at(dst, j) -= q * D.at(src, j);
        for (size_t j = 0; j < f.S.cols; ++j) f.S.at(dst, j) -= q * f.S.at(src, j);
    };
    auto colsub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < D.rows; ++i) D.at(i, dst) -= q * D.at(i, src);
        for (size_t i = 0; i < f.T.rows; ++i) f.T.at(i, dst) -= q * f.T.at(i, src);
    };
    auto rowswap = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t j = 0; j < D.cols; ++j) std::swap(D.at(x, j), D.at(y, j));
        for (size_t j = 0; j < f.S.cols; ++j) std::swap(f.S.at(x, j), f.S.at(y, j));
    };
    auto colswap = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t i = 0; i < D.rows; ++i) std::swap(D.at(i, x), D.at(i, y));
        for (size_t i = 0; i < f.T.rows; ++i) std::swap(f.T.at(i, x), f.T.at(i, y));
    };
    auto rownegate = [&](size_t x) {
        for (size_t j = 0; j < D.cols; ++j) D.at(x, j) = -D.at(x, j);
        for (size_t j = 0; j < f.S.cols; ++j) f.S.at(x, j) = -f.S.at(x, j);
    };

    size_t n = std::min(D.rows, D.cols);
    for (size_t k = 0; k < n; ++k) {
        for (;;) {
            // smallest nonzero pivot in the trailing block
            size_t pi = D.rows, pj = D.cols;
            for (size_t i = k; i < D.rows; ++i)
                for (size_t j = k; j < D.cols; ++j) {
                    if (D.at(i, j).is_zero()) continue;
                    if (pi == D.rows || D.at(i, j).abs() < D.at(pi, pj).abs()) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == D.rows) {
                k = n;
                break;
            }
            rowswap(k, pi);
            colswap(k, pj);
            bool clean = true;
            for (size_t i = k + 1; i < D.rows; ++i) {
                if (D.at(i, k).is_zero()) continue;
                rowsub(i, k, rounded_div(D.at(i, k), D.at(k, k)));
                if (!D.at(i, k).is_zero()) clean = false;
            }
            for (size_t j = k + 1; j < D.cols; ++j) {
                if (D.at(k, j).is_zero()) continue;
                colsub(j, k, rounded_div(D.at(k, j), D.at(k, k)));
                if (!D.at(k, j).is_zero()) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold in any entry the pivot misses
            bool fixed = false;
            for (size_t i = k + 1; i < D.rows && !fixed; ++i)
                for (size_t j = k + 1; j < D.cols && !fixed; ++j)
                    if (!(D.at(i, j) % D.at(k, k)).is_zero()) {
                        rowsub(k, i, Int(-1));  // add row i into row k
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (k >= n) break;
    }
    for (size_t k = 0; k < n; ++k)
        if (D.at(k, k).sign() < 0) rownegate(k);
    return f;
}

// --- solving and invariants -----------------------------------------------

// X with K * X = B, where the columns of B lie in the integer span of the
// columns of K (K has full column rank).  Errors out otherwise.
inline MatI solve_in_span(const MatI& K, const MatI& B) {
    SmithForm f = smith(K);
    size_t k = K.cols;
    for (size_t i = 0; i < k; ++i)
        if (f.D.at(i, i).is_zero()) fail(errc::internal, "solve_in_span: basis not full rank");
    MatI SB = f.S * B;
    MatI Z(k, B.cols);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < B.cols; ++j) Z.at(i, j) = exact_div(SB.at(i, j), f.D.at(i, i));
    for (size_t i = k; i < SB.rows; ++i)
        for (size_t j = 0; j < B.cols; ++j)
            if (!SB.at(i, j).is_zero()) fail(errc::internal, "solve_in_span: vector outside span");
    return f.T * Z;
}

// fraction-free Gaussian elimination (Bareiss); returns rank, optionally det
inline size_t rank_z(const MatI& A, Int* det_out = nullptr) {
    MatI B = A;
    Int prev(1);
    size_t r = 0;
    Int det(1);
    bool detsign = false;
    for (size_t c = 0; c < B.cols && r < B.rows; ++c) {
        size_t piv = B.rows;
        for (size_t i = r; i < B.rows; ++i)
            if (!B.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == B.rows) continue;
        if (piv != r) {
            for (size_t j = 0; j < B.cols; ++j) std::swap(B.at(piv, j), B.at(r, j));
            detsign = !detsign;
        }
        for (size_t i = r + 1; i < B.rows; ++i) {
            for (size_t j = c + 1; j < B.cols; ++j)
                B.at(i, j) = exact_div(B.at(r, c) * B.at(i, j) - B.at(i, c) * B.at(r, j), prev);
            B.at(i, c) = Int(0);
        }
        prev = B.at(r, c);
        ++r;
    }
    if (det_out) {
        if (A.rows != A.cols || r < A.rows)
            *det_out = Int(0);
        else
            *det_out = detsign ? -prev : prev;
    }
    return r;
}

// --- Z/p^m echelon machinery ----------------------------------------------

// Triangularizes the column span of A over Z/p^m picking pivots of globally
// minimal p-valuation; with that pivoting rule the span order is exactly
// prod p^(m - v_i) over the pivots.
struct ChainEchelon {
    std::vector<std::pair<size_t, int>> pivots;  // (row, valuation)
    Mat64 reduced;                               // column-reduced copy
    Mat64 transform;                             // column ops applied to identity
    long long span_exponent = 0;                 // |span| = p^this
};

inline ChainEchelon chain_echelon(const Mat64& A_in, i64 p, int m) {
    i64 mod = 1;
    for (int i = 0; i < m; ++i) mod *= p;
    auto val = [&](i64 x) {
        x = mod_pos(x, mod);
        if (x == 0) return m;
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    ChainEchelon e;
    e.reduced = A_in.reduced(mod);
    e.transform = Mat64::identity(A_in.cols);
    Mat64& B = e.reduced;
    Mat64& V = e.transform;
    std::vector<bool> rowdone(B.rows, false), coldone(B.cols, false);
    for (;;) {
        int bestv = m;
        size_t bi = B.rows, bj = B.cols;
        for (size_t i = 0; i < B.rows; ++i) {
            if (rowdone[i]) continue;
            for (size_t j = 0; j < B.cols; ++j) {
                if (coldone[j]) continue;
                int v = val(B.at(i, j));
                if (v < bestv) {
                    bestv = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == B.rows) break;  // all remaining entries are 0 mod p^m
        // scale pivot column by a unit so the pivot becomes p^v
        i64 piv = mod_pos(B.at(bi, bj), mod);
        i64 unit = piv;
        for (int i = 0; i < bestv; ++i) unit /= p;
        i64 uinv = invmod(unit, mod);
        for (size_t i = 0; i < B.rows; ++i) B.at(i, bj) = mulmod(B.at(i, bj), uinv, mod);
        for (size_t i = 0; i < V.rows; ++i) V.at(i, bj) = mulmod(V.at(i, bj), uinv, mod);
        i64 pv = 1;
        for (int i = 0; i < bestv; ++i) pv *= p;
        // clear the pivot row in the other live columns
        for (size_t j = 0; j < B.cols; ++j) {
            if (j == bj || coldone[j]) continue;
            i64 q = mod_pos(B.at(bi, j), mod) / pv;  // exact: global min valuation
            if (mod_pos(B.at(bi, j), mod) % pv != 0) fail(errc::internal, "chain_echelon pivot");
            if (q == 0) continue;
            for (size_t i = 0; i < B.rows; ++i)
                B.at(i, j) = mod_pos(B.at(i, j) - mulmod(q, B.at(i, bj), mod), mod);
            for (size_t i = 0; i < V.rows; ++i)
                V.at(i, j) = mod_pos(V.at(i, j) - mulmod(q, V.at(i, bj), mod), mod);
        }
        rowdone[bi] = true;
        coldone[bj] = true;
        e.pivots.emplace_back(bi, bestv);
        e.span_exponent += m - bestv;
    }
    return e;
}

// |ker(A : (Z/p^m)^cols -> (Z/p^m)^rows)| as an exponent of p
inline long long kernel_exponent_mod(const Mat64& A, i64 p, int m) {
    ChainEchelon e = chain_echelon(A, p, m);
    return static_cast<long long>(m) * static_cast<long long>(A.cols) - e.span_exponent;
}

// Generating set for ker(A) over Z/p^m, as columns.
inline Mat64 kernel_gens_mod(const Mat64& A, i64 p, int m) {
    i64 mod = 1;
    for (int i = 0; i < m; ++i) mod *= p;
    ChainEchelon e = chain_echelon(A, p, m);
    std::vector<bool> ispivot(A.cols, false);
    std::vector<int> pivval(A.cols, 0);
    {
        // recover which column ended up as each pivot: pivot columns are the
        // ones whose reduced image is nonzero
        size_t idx = 0;
        for (size_t j = 0; j < A.cols; ++j) {
            bool nz = false;
            for (size_t i = 0; i < A.rows; ++i)
                if (mod_pos(e.reduced.at(i, j), mod) != 0) nz = true;
            if (nz) {
                ispivot[j] = true;
                int v = m;
                for (size_t i = 0; i < A.rows; ++i) {
                    i64 x = mod_pos(e.reduced.at(i, j), mod);
                    if (x == 0) continue;
                    int w = 0;
                    while (x % p == 0) {
                        x /= p;
                        ++w;
                    }
                    v = std::min(v, w);
                }
                pivval[j] = v;
                ++idx;
            }
        }
        (void)idx;
    }
    std::vector<std::vector<i64>> gens;
    for (size_t j = 0; j < A.cols; ++j) {
        if (!ispivot[j]) {
            std::vector<i64> g(A.cols);
            for (size_t i = 0; i < A.cols; ++i) g[i] = e.transform.at(i, j);
            gens.push_back(std::move(g));
        } else if (pivval[j] > 0) {
            i64 scale = 1;
            for (int i = 0; i < m - pivval[j]; ++i) scale *= p;
            std::vector<i64> g(A.cols);
            for (size_t i = 0; i < A.cols; ++i) g[i] = mulmod(scale, e.transform.at(i, j), mod);
            gens.push_back(std::move(g));
        }
    }
    Mat64 K(A.cols, gens.size());
    for (size_t j = 0; j < gens.size(); ++j)
        for (size_t i = 0; i < A.cols; ++i) K.at(i, j) = gens[j][i];
    return K;
}

// --- F_p Gaussian elimination ----------------------------------------------

// kernel basis of A over F_p, columns of the result
inline Mat64 kernel_basis_fp(const Mat64& A_in, i64 p) {
    Mat64 B = A_in.reduced(p);
    size_t rows = B.rows, cols = B.cols;
    std::vector<size_t> pivot_of_col(cols, rows + 1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (B.at(i, c) % p != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        for (size_t j = 0; j < cols; ++j) std::swap(B.at(piv, j), B.at(r, j));
        i64 inv = invmod(B.at(r, c), p);
        for (size_t j = 0; j < cols; ++j) B.at(r, j) = mulmod(B.at(r, j), inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || B.at(i, c) == 0) continue;
            i64 f = B.at(i, c);
            for (size_t j = 0; j < cols; ++j)
                B.at(i, j) = mod_pos(B.at(i, j) - mulmod(f, B.at(r, j), p), p);
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<size_t> freecols;
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] > rows) freecols.push_back(c);
    Mat64 K(cols, freecols.size());
    for (size_t k = 0; k < freecols.size(); ++k) {
        size_t fc = freecols[k];
        K.at(fc, k) = 1;
        for (size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] <= rows) K.at(c, k) = mod_pos(-B.at(pivot_of_col[c], fc), p);
    }
    return K;
}

inline size_t rank_fp(const Mat64& A_in, i64 p) {
    Mat64 B = A_in.reduced(p);
    size_t rows = B.rows, cols = B.cols, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (B.at(i, c) % p != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        for (size_t j = c; j < cols; ++j) std::swap(B.at(piv, j), B.at(r, j));
        i64 inv = invmod(B.at(r, c), p);
        for (size_t j = c; j < cols; ++j) B.at(r, j) = mulmod(B.at(r, j), inv, p);
        for (size_t i = r + 1; i < rows; ++i) {
            i64 f = B.at(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j)
                B.at(i, j) = mod_pos(B.at(i, j) - mulmod(f, B.at(r, j), p), p);
        }
        ++r;
    }
    return r;
}

}  // namespace modpoints
