#ifndef MCKAY_SSCLASSES_HPP
#define MCKAY_SSCLASSES_HPP

#include <cstdint>
#include <vector>

#include "mckay/gf.hpp"
#include "mckay/labels.hpp"

/*
 * Semisimple conjugacy classes of GL_{n+1}(q), their Steinberg-style
 * labels, and the Galois action s -> s^k on classes.
 *
 * A class is determined by a multiset of Frobenius orbits of nonzero
 * eigenvalues with total multiplicity n+1, or equivalently by its
 * characteristic polynomial (monic, degree n+1, nonzero constant term).
 * All eigenvalues live in a single ambient field F_{q^J}, J = lcm(1..n+1);
 * the subfield F_{q^j} is enumerated inside it as zero plus the subgroup
 * of order q^j - 1.
 */

namespace mckay::ssclasses {

struct EigenOrbit {
    gf::FieldElem rep; // smallest-code element of the Frobenius-q orbit
    int degree = 1;    // orbit length = degree of its minimal polynomial over F_q
    friend bool operator==(const EigenOrbit& a, const EigenOrbit& b) {
        return a.rep == b.rep && a.degree == b.degree;
    }
};

struct SsClass {
    // entries repeat according to eigenvalue multiplicity; sorted by rep code
    std::vector<EigenOrbit> orbits;
    // charpoly coefficients c_0..c_n of x^{n+1} + sum c_i x^i, all in the
    // F_q-subfield of the ambient field, c_0 != 0
    std::vector<gf::FieldElem> charpoly;

    std::vector<std::uint32_t> key() const; // canonical: the charpoly codes
};

struct GlobalLabel {
    gf::FieldElem b0;              // determinant = product of eigenvalues
    std::vector<gf::FieldElem> b;  // b_i = trace of the i-th exterior power
    friend bool operator==(const GlobalLabel& a, const GlobalLabel& b_) {
        return a.b0 == b_.b0 && a.b == b_.b;
    }
};

class GlClassModel {
public:
    // GL_{n_plus_1}(p^f).  Throws UnsupportedError when the ambient field
    // or the class count exceeds desk scale.
    GlClassModel(int n_plus_1, std::int64_t p, int f);
    GlClassModel(const GlClassModel&) = delete;
    GlClassModel& operator=(const GlClassModel&) = delete;

    int n_plus_1() const { return n1_; }
    std::int64_t q() const { return q_; }
    const gf::Field& ambient() const { return big_; }

    // all (q-1) q^n classes, deterministic order
    const std::vector<SsClass>& enumerate() const;

    // b_i = i-th elementary symmetric function of the eigenvalue multiset,
    // expanded in the ambient field; asserts every value lands in F_q.
    GlobalLabel steinberg_label(const SsClass& cls) const;

    // the class of s^k: eigenvalues raised to the k-th power, orbits
    // renormalized
    SsClass class_power(const SsClass& cls, std::uint64_t k) const;
    // the class of s^{p^e} (same map with the exponent handled exactly)
    SsClass class_frobenius(const SsClass& cls, std::uint64_t e) const;

    // #{classes : class of s^{p^e} equals the class of s}
    std::int64_t count_sigma_fixed(const labels::GaloisParam& g) const;

private:
    int n1_;
    std::int64_t p_;
    int f_;
    std::int64_t q_;
    int ambient_deg_; // f * lcm(1..n1)
    gf::Field big_;
    mutable std::vector<SsClass> classes_; // lazy

    SsClass class_from_eigenvalues(std::vector<gf::FieldElem> eigen) const;
};

// Semisimple class count of GU_3(q): enumerates multisets of
// <x -> x^{-q}>-orbits of eigenvalues with total multiplicity 3.
std::int64_t gu3_class_count(std::int64_t p, int f);

} // namespace mckay::ssclasses

#endif
