#ifndef MCKAY_LABELS_HPP
#define MCKAY_LABELS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mckay/gf.hpp"
#include "mckay/rootdata.hpp"

/*
 * The label set A attached to a twisted group over F_q and the Galois
 * action on it.
 *
 * A label is a tuple (c_0, (c_1, ..., c_r)) where c_0 has dbar components,
 * the j-th ranging over the cyclic subgroup of F_{q^w}^x of order z_j, and
 * c_i lies in the subfield F_{q^{|A_i|}} of F_{q^w} (zero allowed; zero
 * coordinates mark the support pattern).  A Galois parameter (e, kappa)
 * acts by raising every component to the p^e-th power; kappa only matters
 * at the level of the Borel model, never on labels.
 */

namespace mckay::labels {

struct GaloisParam {
    std::int64_t p = 2;     // ambient characteristic
    std::uint64_t e = 0;    // p'-part exponent: roots of unity of p'-order go to the p^e power
    std::int64_t kappa = 1; // unit mod p, the action on p-power roots of unity

    GaloisParam(std::int64_t p_, std::uint64_t e_, std::int64_t kappa_);

    std::int64_t s(std::int64_t m) const; // gcd(e, m), with gcd(0, m) = m
    std::int64_t k_mod(std::int64_t n) const; // p^e mod n
    std::int64_t fixed_in_cyclic(std::int64_t z) const; // gcd(z, p^e - 1), gcd(z, 0) = z
};

struct Label {
    std::vector<gf::FieldElem> c0; // dbar nonzero components
    std::vector<gf::FieldElem> ci; // r components, zero allowed
    bool operator==(const Label&) const = default;
};

class LabelSpace {
public:
    // q = p^f.  Throws ExcludedError when (type, w, q) is in the exclusion
    // table, std::invalid_argument on bad parameters.
    LabelSpace(const lie::TwistedGroup& tg, std::int64_t p, int f);

    std::int64_t q() const { return q_; }
    const gf::Field& field() const { return ambient_; } // F_{q^w}
    const std::vector<std::int64_t>& center_orders() const { return z_; }

    // |A| = prod_j z_j * prod_i q^{|A_i|}; equals (q-1)^d q^n for w = 1.
    std::int64_t size() const;

    Label act(const Label& lab, const GaloisParam& g) const;
    bool is_valid(const Label& lab) const;

    // prod_j gcd(z_j, p^e - 1) * prod_i p^{gcd(e, f |A_i|)}
    std::int64_t count_fixed(const GaloisParam& g) const;
    // exhaustive check over all of A
    std::int64_t count_fixed_enumerated(const GaloisParam& g) const;

    void for_each_label(const std::function<void(const Label&)>& fn) const;

    // projection onto the c_0 part; partitions A into prod z_j classes of
    // equal size prod_i q^{|A_i|}
    std::vector<gf::FieldElem> central_character(const Label& lab) const;
    std::int64_t central_class_count() const;

    std::string to_string(const Label& lab) const; // components as "0" or "g^k"

private:
    const lie::TwistedGroup* tg_;
    std::int64_t p_;
    int f_;
    std::int64_t q_;
    gf::Field ambient_;
    std::vector<std::int64_t> z_;
    std::vector<int> comp_field_degree_; // f * |A_i| per orbit, degree over F_p
};

} // namespace mckay::labels

#endif
