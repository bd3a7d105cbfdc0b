// Smith normal form by smallest-nonzero-entry pivoting. Row operations
// accumulate into U, column operations into V (and inversely into Vinv);
// the decomposition U*M*V = D and unimodularity of U, V are checked before
// returning.

#include "twistcover/intmatrix.hpp"

#include <stdexcept>

namespace twistcover {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Integer& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant needs a square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct Worker {
    IntegerMatrix D, U, V, Vinv;

    explicit Worker(const IntegerMatrix& m)
        : D(m),
          U(IntegerMatrix::identity(m.rows)),
          V(IntegerMatrix::identity(m.cols)),
          Vinv(IntegerMatrix::identity(m.cols)) {}

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < D.cols; ++j) std::swap(D.at(r1, j), D.at(r2, j));
        for (int j = 0; j < U.cols; ++j) std::swap(U.at(r1, j), U.at(r2, j));
    }

    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, c1), D.at(i, c2));
        for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, c1), V.at(i, c2));
        for (int j = 0; j < Vinv.cols; ++j) std::swap(Vinv.at(c1, j), Vinv.at(c2, j));
    }

    // row r1 += f * row r2
    void add_row(int r1, int r2, const Integer& f) {
        if (f == 0) return;
        for (int j = 0; j < D.cols; ++j) D.at(r1, j) += f * D.at(r2, j);
        for (int j = 0; j < U.cols; ++j) U.at(r1, j) += f * U.at(r2, j);
    }

    // col c1 += f * col c2; Vinv gets the inverse op (row c2 -= f * row c1)
    void add_col(int c1, int c2, const Integer& f) {
        if (f == 0) return;
        for (int i = 0; i < D.rows; ++i) D.at(i, c1) += f * D.at(i, c2);
        for (int i = 0; i < V.rows; ++i) V.at(i, c1) += f * V.at(i, c2);
        for (int j = 0; j < Vinv.cols; ++j) Vinv.at(c2, j) -= f * Vinv.at(c1, j);
    }

    void negate_row(int r) {
        for (int j = 0; j < D.cols; ++j) D.at(r, j) = -D.at(r, j);
        for (int j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
    }

    void run() {
        int t = 0;
        int limit = std::min(D.rows, D.cols);
        while (t < limit) {
            // smallest nonzero entry of the trailing block becomes the pivot
            int pr = -1, pc = -1;
            Integer best = 0;
            for (int i = t; i < D.rows; ++i)
                for (int j = t; j < D.cols; ++j) {
                    const Integer& v = D.at(i, j);
                    if (v == 0) continue;
                    Integer av = abs(v);
                    if (pr < 0 || av < best) {
                        best = av;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break;  // trailing block is zero
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = true;
            for (int i = t + 1; i < D.rows; ++i) {
                Integer q = D.at(i, t) / D.at(t, t);
                add_row(i, t, -q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < D.cols; ++j) {
                Integer q = D.at(t, j) / D.at(t, t);
                add_col(j, t, -q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders left; pick a smaller pivot

            // pivot must divide everything below and to the right
            bool divides = true;
            for (int i = t + 1; i < D.rows && divides; ++i)
                for (int j = t + 1; j < D.cols; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (!divides) continue;

            if (D.at(t, t) < 0) negate_row(t);
            ++t;
        }
    }
};

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
    Worker w(m);
    w.run();

    if (multiply(multiply(w.U, m), w.V) != w.D)
        throw std::logic_error("smith normal form: U*M*V != D");
    Integer du = determinant(w.U), dv = determinant(w.V);
    if (du != 1 && du != -1) throw std::logic_error("smith normal form: U not unimodular");
    if (dv != 1 && dv != -1) throw std::logic_error("smith normal form: V not unimodular");
    if (multiply(w.V, w.Vinv) != IntegerMatrix::identity(m.cols))
        throw std::logic_error("smith normal form: Vinv is not the inverse of V");
    int limit = std::min(m.rows, m.cols);
    for (int i = 0; i + 1 < limit; ++i) {
        const Integer& a = w.D.at(i, i);
        const Integer& b = w.D.at(i + 1, i + 1);
        if (a == 0 && b != 0) throw std::logic_error("smith normal form: zero before nonzero");
        if (a != 0 && b % a != 0) throw std::logic_error("smith normal form: divisibility chain broken");
    }

    SnfResult res;
    res.D = std::move(w.D);
    res.U = std::move(w.U);
    res.V = std::move(w.V);
    res.Vinv = std::move(w.Vinv);
    return res;
}

std::vector<Integer> smith_diagonal(const IntegerMatrix& m) {
    SnfResult r = smith_normal_form(m);
    int limit = std::min(m.rows, m.cols);
    std::vector<Integer> d(limit);
    for (int i = 0; i < limit; ++i) d[i] = r.D.at(i, i);
    return d;
}

}  // namespace twistcover
