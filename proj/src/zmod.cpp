#include "mckay/zmod.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace mckay::zmod {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
    IntMat m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw std::invalid_argument("IntMat::from_rows: ragged rows");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat::mul: shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = t;
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

struct SnfState {
    IntMat a, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const Int& f) { // R_dst += f * R_src
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(int dst, int src, const Int& f) { // C_dst += f * C_src
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

} // namespace

SmithResult smith(const IntMat& m) {
    int r = m.rows(), c = m.cols();
    SnfState s{m, IntMat::identity(r), IntMat::identity(c)};
    int t = 0;
    int steps = std::min(r, c);
    for (; t < steps; ++t) {
        // pivot: smallest nonzero |entry| in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (s.a.at(i, j) == 0) continue;
                if (pi < 0 || mpz_cmpabs(s.a.at(i, j).get_mpz_t(), s.a.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (s.a.at(i, t) == 0) continue;
                Int q = s.a.at(i, t) / s.a.at(t, t); // truncated division
                s.add_row(i, t, -q);
                if (s.a.at(i, t) != 0) { // remainder smaller than pivot: promote it
                    s.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < c; ++j) {
                if (s.a.at(t, j) == 0) continue;
                Int q = s.a.at(t, j) / s.a.at(t, t);
                s.add_col(j, t, -q);
                if (s.a.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the block
            for (int i = t + 1; i < r && clean; ++i)
                for (int j = t + 1; j < c && clean; ++j)
                    if (s.a.at(i, j) % s.a.at(t, t) != 0) {
                        s.add_row(t, i, 1);
                        clean = false;
                    }
        }
        if (s.a.at(t, t) < 0) s.negate_row(t);
    }
    assert(s.u.mul(m).mul(s.v) == s.a);
    assert(abs(det(s.u)) == 1 && abs(det(s.v)) == 1);
    for (int i = 0; i + 1 < steps; ++i)
        assert(s.a.at(i + 1, i + 1) == 0 || (s.a.at(i, i) != 0 && s.a.at(i + 1, i + 1) % s.a.at(i, i) == 0));
    return {s.u, s.a, s.v};
}

std::int64_t GroupShape::order() const {
    std::int64_t o = 1;
    for (auto d : divisors) o *= d;
    return o;
}

GroupShape free_shape(int rank, std::int64_t n) {
    GroupShape g;
    if (n > 1) g.divisors.assign(rank, n);
    return g;
}

std::optional<std::vector<std::int64_t>> solve_mod(const IntMat& m,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t n) {
    if (n < 1) throw std::invalid_argument("solve_mod: modulus must be >= 1");
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve_mod: rhs length mismatch");
    int r = m.rows(), c = m.cols();
    SmithResult snf = smith(m);
    Int nn = n;

    // c' = U b; solve D y = c' (mod n) coordinatewise.
    std::vector<Int> cb(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cb[i] += snf.u.at(i, j) * b[j];

    std::vector<Int> y(c, 0);
    for (int i = 0; i < r; ++i) {
        Int d = (i < std::min(r, c)) ? snf.d.at(i, i) : Int(0);
        Int dd = d % nn; // in [0, n): d >= 0 from SNF
        Int ci = cb[i] % nn;
        if (ci < 0) ci += nn;
        Int g = gcd(dd, nn); // gcd(0, n) = n
        if (ci % g != 0) return std::nullopt;
        if (i < c && dd != 0) {
            Int n1 = nn / g;
            Int inv;
            mpz_invert(inv.get_mpz_t(), Int(dd / g).get_mpz_t(), n1.get_mpz_t());
            y[i] = (ci / g) * inv % n1;
        }
    }
    std::vector<std::int64_t> x(c, 0);
    for (int j = 0; j < c; ++j) {
        Int acc = 0;
        for (int k = 0; k < c; ++k) acc += snf.v.at(j, k) * y[k];
        acc %= nn;
        if (acc < 0) acc += nn;
        x[j] = acc.get_si();
    }
    return x;
}

GroupShape kernel_shape(const IntMat& m, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("kernel_shape: modulus must be >= 1");
    int r = m.rows(), c = m.cols();
    IntMat stacked(r + c, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) stacked.at(i, j) = m.at(i, j);
    for (int j = 0; j < c; ++j) stacked.at(r + j, j) = n;
    SmithResult snf = smith(stacked);
    GroupShape g;
    for (int i = 0; i < c; ++i) {
        const Int& d = snf.d.at(i, i);
        assert(d != 0 && n % d == 0);
        if (d > 1) g.divisors.push_back(d.get_si());
    }
    return g;
}

std::int64_t torsion_count(const GroupShape& shape, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("torsion_count: t must be >= 0");
    std::int64_t count = 1;
    for (auto d : shape.divisors) count *= std::gcd(d, t);
    return count;
}

} // namespace mckay::zmod
