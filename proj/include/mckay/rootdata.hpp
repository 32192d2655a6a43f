#ifndef MCKAY_ROOTDATA_HPP
#define MCKAY_ROOTDATA_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mckay/zmod.hpp"

/*
 * Indecomposable root systems for the simple types A..G with Bourbaki
 * numbering, their diagram automorphisms, and the combinatorial invariants
 * the counting code needs.
 *
 * Cartan convention: cartan(i, j) = <alpha_i, alpha_j^vee>, so the torus
 * element prod_j alpha_j^vee(s_j) scales the i-th simple-root coordinate
 * by prod_j s_j^cartan(i, j).  For type C_2 this gives [[2,-1],[-2,2]].
 */

namespace mckay::lie {

struct RootSystem {
    char type = 0; // 'A'..'G'
    int rank = 0;
    zmod::IntMat cartan;
    std::vector<std::vector<int>> positive_roots; // coefficient vectors, simple-root basis
    std::vector<int> highest_root;
    std::int64_t fund_group_order = 1;    // |Z(G_sc)| as abstract group = det(cartan)
    std::int64_t fund_group_exponent = 1; // l
    std::set<std::int64_t> bad_primes;    // primes dividing a highest-root coefficient

    std::string name() const; // e.g. "C2"
};

// Throws std::invalid_argument for invalid (type, rank).
// Supported: A n>=1, B n>=2, C n>=2, D n>=3, E 6..8, F 4, G 2.
RootSystem root_system(char type, int rank);

bool is_good_prime(const RootSystem& rs, std::int64_t p);

// Order z(q) of one cyclic factor of the center of the ambient group with
// connected center, as a function of q: z = q^qexp + offset.
struct CenterFactor {
    int qexp = 1;
    int offset = -1;
    std::int64_t value(std::int64_t q) const;
};

struct TwistedGroup {
    RootSystem roots;
    int w = 1;                            // order of the diagram automorphism
    std::vector<int> tau;                 // 0-based permutation of simple roots
    std::vector<std::vector<int>> orbits; // tau-orbits A_1..A_r, ascending reps
    std::vector<int> orbit_reps;          // smallest index in each orbit
    int num_orbits = 0;                   // r
    int d = 0;                            // max over p of the minimal generator count of Z(G_sc)
    int dbar = 0;
    std::vector<CenterFactor> center_orders; // dbar entries

    int d_p(std::int64_t p) const; // minimal generator count of the p'-part of Z(G_sc)

    // Row of the exclusion table matching (type, q, w), if any.
    std::optional<std::string> excluded(std::int64_t q) const;
    std::string name(std::int64_t q) const; // e.g. "2A2(q=3)"
};

// Throws std::invalid_argument for unsupported (type, w) pairs.
// w = 2: A_n (n >= 2), D_n, E_6; w = 3: D_4.
TwistedGroup twist(RootSystem rs, int w);

} // namespace mckay::lie

#endif
