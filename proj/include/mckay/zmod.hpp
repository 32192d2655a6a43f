#ifndef MCKAY_ZMOD_HPP
#define MCKAY_ZMOD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

/*
 * Integer linear algebra modulo N: Smith normal form over Z with exact
 * (GMP) entries, affine solvability mod N, kernel structure mod N, and
 * torsion counts of finite abelian groups.
 *
 * Conventions:
 *  - smith(M) returns U, D, V with U*M*V = D, D diagonal with a
 *    divisibility chain of nonnegative entries, U and V unimodular.
 *  - kernel_shape(M, N) describes {x in (Z/N)^cols : M x = 0 (mod N)} by
 *    its elementary divisors; computed as the SNF of the stacked matrix
 *    [M; N*I] (the invariant factors of Z^cols / (rowspace(M) + N Z^cols),
 *    which has the same shape as the kernel by duality).
 */

namespace mckay::zmod {

using Int = mpz_class;

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    IntMat mul(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Exact determinant (fraction-free Bareiss); square matrices only.
Int det(const IntMat& m);

struct SmithResult {
    IntMat u, d, v;
};

SmithResult smith(const IntMat& m);

// Elementary divisors d_1 | d_2 | ... (trivial factors dropped) of a finite
// abelian group, ascending.
struct GroupShape {
    std::vector<std::int64_t> divisors;
    std::int64_t order() const;
};

// Shape of (Z/N)^rank.
GroupShape free_shape(int rank, std::int64_t n);

// Some x with M x = b (mod N) if one exists; entries reduced to [0, N).
// Deterministic: derived from the SNF with free coordinates set to zero.
std::optional<std::vector<std::int64_t>> solve_mod(const IntMat& m,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t n);

GroupShape kernel_shape(const IntMat& m, std::int64_t n);

// #{x in the group : t*x = 0} = prod gcd(d_i, t), with gcd(d, 0) = d.
// Equivalently the number of characters lambda of the group with
// lambda^t = 1.
std::int64_t torsion_count(const GroupShape& shape, std::int64_t t);

} // namespace mckay::zmod

#endif
