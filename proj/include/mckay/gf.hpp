#ifndef MCKAY_GF_HPP
#define MCKAY_GF_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

/*
 * Exact arithmetic in small finite fields F_{p^m}.
 *
 * A Field is F_p[x]/(modulus) where modulus is the lexicographically
 * smallest monic irreducible polynomial of degree m over F_p (constant
 * coefficient least significant in the ordering).  Elements are encoded
 * by the integer code  sum_i c_i p^i  of their coefficient vector
 * (c_0,...,c_{m-1}).  The generator is the element of smallest code with
 * multiplicative order exactly p^m - 1.
 *
 * Subfield identifications between different Field objects are fixed
 * multiplicatively: embed() maps the source generator g to
 * h^((p^m'-1)/(p^m-1)) where h is the target generator.  This composes
 * along divisibility chains and commutes with Frobenius powers.
 *
 * A Field is immutable after construction and safe to share across
 * threads; every operation is pure.  FieldElem values hold a non-owning
 * pointer to their field and must not outlive it.
 */

namespace mckay::gf {

class Field;

struct FieldElem {
    const Field* field = nullptr;
    std::uint32_t code = 0;

    bool is_zero() const { return code == 0; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.field == b.field && a.code == b.code;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.code < b.code; }

    FieldElem operator+(const FieldElem&) const;
    FieldElem operator-(const FieldElem&) const;
    FieldElem operator*(const FieldElem&) const;
    FieldElem operator-() const;
};

class Field {
public:
    static constexpr std::uint64_t default_size_bound = std::uint64_t(1) << 20;

    // Throws std::invalid_argument if p is not prime or m < 1, and
    // std::overflow_error if p^m exceeds the size bound.
    Field(std::uint64_t p, unsigned m, std::uint64_t size_bound = default_size_bound);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return q_; }

    // Monic modulus, coefficients c_0..c_{m-1} of x^m + sum c_i x^i.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return {this, 0}; }
    FieldElem one() const { return {this, 1}; }
    FieldElem generator() const { return {this, gen_}; }
    FieldElem element(std::uint32_t code) const;
    FieldElem from_coeffs(const std::vector<std::uint32_t>& c) const;
    FieldElem from_int(std::int64_t v) const; // image in the prime subfield
    std::vector<std::uint32_t> coeffs(FieldElem x) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;   // throws std::domain_error on zero
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    // x^(p^e); frobenius_pow(x, 0) = x.  e may be arbitrarily large.
    FieldElem frobenius_pow(FieldElem x, std::uint64_t e) const;

    // #{x in F_{p^m} : x^(p^e) = x} = p^gcd(e, m)  (gcd(0, m) = m).
    std::uint64_t count_frobenius_fixed(std::uint64_t e) const;

    // Discrete log base the generator, in [0, q-2].  Baby-step/giant-step.
    // Throws std::domain_error on zero.
    std::uint64_t dlog(FieldElem x) const;

    std::uint64_t mult_order(FieldElem x) const;

    // generator^((q-1)/n); requires n | q-1.
    FieldElem root_of_unity(std::uint64_t n) const;
    // The n elements of the cyclic subgroup of order n, as successive
    // powers of root_of_unity(n); requires n | q-1.
    std::vector<FieldElem> subgroup(std::uint64_t n) const;
    // The subfield F_{p^d} inside this field (d | m): zero followed by the
    // subgroup of order p^d - 1.
    std::vector<FieldElem> subfield_elems(unsigned d) const;
    bool in_subfield(FieldElem x, unsigned d) const;

    std::string to_string(FieldElem x) const; // polynomial form, for diagnostics

private:
    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;          // c_0..c_{m-1}
    std::vector<std::vector<std::uint32_t>> red_; // x^{m+k} mod modulus, k = 0..m-2
    std::uint32_t gen_ = 0;

    // baby-step table g^j -> j for j < bsgs_m_, giant_ = g^{-bsgs_m_}
    std::uint32_t bsgs_m_ = 0;
    std::uint32_t giant_ = 0;
    std::unordered_map<std::uint32_t, std::uint32_t> baby_;

    void check_same(FieldElem a) const;
    std::uint32_t mul_codes(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_code(std::uint32_t a, std::uint64_t e) const;
};

// The fixed multiplicative identification of F_{p^m} with the subfield of
// the same order inside `target` (degrees must divide).  0 -> 0 and the
// source generator maps to target_generator^((p^m'-1)/(p^m-1)).
FieldElem embed(FieldElem x, const Field& target);

} // namespace mckay::gf

#endif
