#ifndef MCKAY_BOREL_HPP
#define MCKAY_BOREL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "mckay/gf.hpp"
#include "mckay/labels.hpp"
#include "mckay/rootdata.hpp"
#include "mckay/zmod.hpp"

/*
 * Brute-force Clifford-theory model for the p'-characters of a Borel
 * subgroup B = T U and of its overgroup B~ = T~ U with connected-center
 * torus, in the untwisted case.
 *
 * The linear characters of U^F are coordinatized by F_q^n; we work in
 * dlog coordinates, so a character is a length-n vector with entry -1
 * for a zero coordinate and the discrete log in Z/(q-1) otherwise.  The
 * torus T acts through the Cartan matrix: t = prod_j alpha_j^vee(s_j)
 * scales coordinate i by prod_j s_j^C(i,j), i.e. shifts the dlog vector
 * by C|_S x on the support.  T~ acts through the adjoint torus, i.e.
 * coordinatewise by all of (F_q^x)^n.
 *
 * A p'-character is a pair (orbit of a linear character phi, lambda in
 * Irr(Stab(phi))); no character values are ever materialized.  A Galois
 * parameter sigma = (e, kappa) acts on pairs by
 * (O, lambda) -> (kappa O, lambda^{p^e}), where kappa O shifts every
 * coordinate dlog by dlog_q(kappa).
 */

namespace mckay::borel {

enum class Level { B, Btilde };

struct OrbitClass {
    std::vector<int> support;           // 0-based coordinate indices
    std::vector<std::int64_t> orbit_rep; // length n; -1 off support, dlog on support
    Level level = Level::B;
    zmod::GroupShape stabilizer;
    std::int64_t orbit_size = 0;
    std::int64_t lambda_count = 0; // = |stabilizer| characters above this orbit
};

struct CentralPartition {
    std::int64_t center_order = 0;
    // key: canonical dual vector of the central character; value: (total, sigma-fixed)
    std::map<std::vector<std::int64_t>, std::pair<std::int64_t, std::int64_t>> classes;
};

class BorelModel {
public:
    // Untwisted only.  Throws ExcludedError for excluded (type, q) and
    // UnsupportedError when the enumeration exceeds desk scale.
    BorelModel(const lie::RootSystem& rs, std::int64_t p, int f);
    ~BorelModel();
    BorelModel(const BorelModel&) = delete;
    BorelModel& operator=(const BorelModel&) = delete;

    std::int64_t q() const { return q_; }
    int rank() const { return n_; }
    const lie::TwistedGroup& group() const { return tg_; }
    const gf::Field& coordinate_field() const { return fq_; }

    // The exponent matrix of the T-action on the coordinates = the Cartan
    // matrix in our convention.
    static zmod::IntMat torus_action_matrix(const lie::RootSystem& rs);

    // dlog coordinates of the all-ones character (full support).
    std::vector<std::int64_t> psi_one() const;
    std::int64_t total_characters() const; // q^n

    std::vector<OrbitClass> enum_orbits(Level level) const;
    std::int64_t count_pprime(Level level) const;

    // Direct pair action: enumerate orbits, shift by kappa, compare
    // canonical representatives, count fixed lambdas per fixed orbit.
    std::int64_t count_sigma_fixed(Level level, const labels::GaloisParam& g) const;

    // Second route at B-level: a support contributes iff the canonical
    // torus element acting as the scalar kappa lies in I_B~(phi_S) B,
    // tested by mod-(q-1) solvability; orbit counts and stabilizers come
    // from Smith normal forms only.
    std::int64_t count_sigma_fixed_inertia(const labels::GaloisParam& g) const;

    // B-level pairs partitioned by the restriction of lambda to Z(G^F).
    CentralPartition central_partition(const labels::GaloisParam& g) const;

private:
    lie::TwistedGroup tg_; // w = 1
    std::int64_t p_;
    int f_;
    std::int64_t q_, N_;
    int n_, d_;
    gf::Field fq_;
    std::vector<std::vector<std::int64_t>> cartan_;

    struct Stratum; // per-support orbit data at B-level
    const std::vector<Stratum>& strata() const;
    mutable std::unique_ptr<std::vector<Stratum>> strata_;

    std::int64_t kappa_dlog(const labels::GaloisParam& g) const;
};

// Closed-form sigma-fixed count for type C_n at B-level:
// p^{sn} + 3 p^{s(n-1)} when the dlog of kappa in F_q is even,
// p^{sn} -   p^{s(n-1)} when it is odd, with s = gcd(e, f).
// Requires p odd.
std::int64_t closed_form_type_c(int n, std::int64_t p, int f, std::uint64_t e, bool c_even);

} // namespace mckay::borel

#endif
