#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mckay/borel.hpp"
#include "mckay/errors.hpp"
#include "mckay/numtheory.hpp"

using namespace mckay;
using namespace mckay::borel;
using mckay::labels::GaloisParam;

namespace {

// Independent oracle: explicit linear characters of U^ab as vectors over
// F_q, explicit torus vectors, orbits by full application of the torus,
// stabilizers as explicit subgroups.  No dlogs, no Smith normal forms.
struct FieldOracle {
    const lie::RootSystem& rs;
    gf::Field f;
    int n;
    std::vector<std::vector<gf::FieldElem>> chars;  // all of F_q^n
    std::vector<std::vector<gf::FieldElem>> torus;  // all of (F_q^x)^n

    FieldOracle(const lie::RootSystem& rs_, std::int64_t p, int fdeg)
        : rs(rs_), f(p, fdeg), n(rs_.rank) {
        std::vector<gf::FieldElem> all, units;
        for (std::uint32_t c = 0; c < f.order(); ++c) all.push_back(f.element(c));
        for (std::uint32_t c = 1; c < f.order(); ++c) units.push_back(f.element(c));
        chars = tuples(all);
        torus = tuples(units);
    }

    std::vector<std::vector<gf::FieldElem>> tuples(const std::vector<gf::FieldElem>& pool) const {
        std::vector<std::vector<gf::FieldElem>> out;
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<gf::FieldElem> v;
            for (int i = 0; i < n; ++i) v.push_back(pool[idx[i]]);
            out.push_back(v);
            int k = 0;
            for (; k < n; ++k) {
                if (++idx[k] < pool.size()) break;
                idx[k] = 0;
            }
            if (k == n) break;
        }
        return out;
    }

    std::vector<gf::FieldElem> apply(const std::vector<gf::FieldElem>& t,
                                     const std::vector<gf::FieldElem>& chi) const {
        std::vector<gf::FieldElem> out(n, f.zero());
        for (int i = 0; i < n; ++i) {
            gf::FieldElem scale = f.one();
            for (int j = 0; j < n; ++j) {
                std::int64_t c = rs.cartan.at(i, j).get_si();
                gf::FieldElem tc = c >= 0 ? f.pow(t[j], static_cast<std::uint64_t>(c))
                                          : f.inv(f.pow(t[j], static_cast<std::uint64_t>(-c)));
                scale = f.mul(scale, tc);
            }
            out[i] = f.mul(chi[i], scale);
        }
        return out;
    }

    std::vector<std::uint32_t> key(const std::vector<gf::FieldElem>& v) const {
        std::vector<std::uint32_t> k;
        for (auto x : v) k.push_back(x.code);
        return k;
    }

    // (total p'-count, sigma-fixed count) at B-level
    std::pair<std::int64_t, std::int64_t> counts(const GaloisParam& g) const {
        std::set<std::vector<std::uint32_t>> done;
        std::int64_t total = 0, fixed = 0;
        for (const auto& chi : chars) {
            if (done.count(key(chi))) continue;
            std::set<std::vector<std::uint32_t>> orbit;
            std::vector<std::vector<gf::FieldElem>> stab;
            for (const auto& t : torus) {
                auto img = apply(t, chi);
                orbit.insert(key(img));
                if (key(img) == key(chi)) stab.push_back(t);
            }
            for (const auto& k : orbit) done.insert(k);

            std::int64_t n_lambda = 0, n_lambda_fixed = 0;
            for (const auto& t : stab) {
                ++n_lambda;
                bool frob_fixed = true;
                for (auto s : t)
                    if (f.frobenius_pow(s, g.e) != s) frob_fixed = false;
                if (frob_fixed) ++n_lambda_fixed;
            }
            total += n_lambda;

            // kappa-scaled orbit: same set of characters?
            auto kap = f.from_int(g.kappa);
            std::set<std::vector<std::uint32_t>> scaled;
            for (const auto& t : torus) {
                auto img = apply(t, chi);
                for (auto& x : img) x = f.mul(x, kap);
                scaled.insert(key(img));
            }
            if (scaled == orbit) fixed += n_lambda_fixed;
        }
        return {total, fixed};
    }
};

const lie::RootSystem& rootof(char type, int rank) {
    static std::map<std::pair<char, int>, lie::RootSystem> cache;
    auto k = std::make_pair(type, rank);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, lie::root_system(type, rank)).first;
    return it->second;
}

} // namespace

TEST_CASE("torus action matrix") {
    auto a1 = BorelModel::torus_action_matrix(rootof('A', 1));
    CHECK(a1.rows() == 1);
    CHECK(a1.at(0, 0) == 2);
    auto c2 = BorelModel::torus_action_matrix(rootof('C', 2));
    CHECK(c2 == rootof('C', 2).cartan);
}

TEST_CASE("orbit enumeration: A_1, q = 5") {
    BorelModel m(rootof('A', 1), 5, 1);
    auto orbits = m.enum_orbits(Level::B);
    REQUIRE(orbits.size() == 3);
    // empty support: the trivial character, full torus stabilizer
    CHECK(orbits[0].support.empty());
    CHECK(orbits[0].orbit_size == 1);
    CHECK(orbits[0].stabilizer.order() == 4);
    // support {1}: squares have index 2, so two orbits with stabilizer {+-1}
    CHECK(orbits[1].support == std::vector<int>{0});
    CHECK(orbits[2].support == std::vector<int>{0});
    for (int i : {1, 2}) {
        CHECK(orbits[i].orbit_size == 2);
        CHECK(orbits[i].stabilizer.divisors == std::vector<std::int64_t>{2});
        CHECK(orbits[i].lambda_count == 2);
    }

    auto borbits = m.enum_orbits(Level::Btilde);
    CHECK(borbits.size() == 2); // one per support
    std::int64_t stab_sum = 0;
    for (const auto& oc : borbits) stab_sum += oc.lambda_count;
    CHECK(stab_sum == 20); // (q-1)^d q^n

    CHECK(m.psi_one() == std::vector<std::int64_t>{0});
    CHECK(m.total_characters() == 5);
}

TEST_CASE("p'-degree counts") {
    CHECK(BorelModel(rootof('C', 2), 3, 1).count_pprime(Level::B) == 18); // q^2 + 3q
    CHECK(BorelModel(rootof('A', 1), 7, 1).count_pprime(Level::B) == 10); // q + 3
    CHECK(BorelModel(rootof('A', 1), 5, 1).count_pprime(Level::Btilde) == 20);
}

TEST_CASE("orbit-stabilizer invariants") {
    using Cfg = std::tuple<char, int, std::int64_t, int>;
    for (auto [type, rank, p, f] :
         {Cfg{'A', 1, 5, 1}, Cfg{'A', 2, 3, 1}, Cfg{'C', 2, 3, 1}, Cfg{'B', 2, 5, 1},
          Cfg{'G', 2, 5, 1}, Cfg{'A', 1, 3, 2}, Cfg{'A', 3, 2, 1}, Cfg{'D', 4, 3, 1}}) {
        CAPTURE(type);
        CAPTURE(rank);
        BorelModel m(rootof(type, rank), p, f);
        std::int64_t N = m.q() - 1;
        std::int64_t torus_order = 1;
        for (int i = 0; i < rank; ++i) torus_order *= N;

        auto orbits = m.enum_orbits(Level::B);
        std::map<std::vector<int>, std::int64_t> size_per_support;
        for (const auto& oc : orbits) {
            CHECK(oc.orbit_size * oc.stabilizer.order() == torus_order);
            CHECK(oc.lambda_count == oc.stabilizer.order());
            size_per_support[oc.support] += oc.orbit_size;
        }
        for (const auto& [support, total] : size_per_support) {
            std::int64_t expect = 1;
            for (std::size_t i = 0; i < support.size(); ++i) expect *= N;
            CHECK(total == expect);
        }
        // B~: exactly one orbit per support, 2^n entries
        auto bt = m.enum_orbits(Level::Btilde);
        CHECK(bt.size() == (std::size_t(1) << rank));
        std::int64_t d = m.group().d;
        std::int64_t bt_torus = torus_order;
        for (int j = 0; j < d; ++j) bt_torus *= N;
        for (const auto& oc : bt) CHECK(oc.orbit_size * oc.stabilizer.order() == bt_torus);
    }
}

TEST_CASE("sigma-fixed counts: stated cases") {
    // A_1, q = 5, e = 0, kappa nonsquare: q - 1 = 4
    BorelModel a15(rootof('A', 1), 5, 1);
    CHECK(a15.count_sigma_fixed(Level::B, GaloisParam(5, 0, 2)) == 4);
    // C_2, q = 3, e = 0, kappa square: q^2 + 3q = 18
    BorelModel c23(rootof('C', 2), 3, 1);
    CHECK(c23.count_sigma_fixed(Level::B, GaloisParam(3, 0, 1)) == 18);
    // A_1, q = 9, e = 1: kappa is always a square in F_9, 3 + 3 = 6
    BorelModel a19(rootof('A', 1), 3, 2);
    CHECK(a19.count_sigma_fixed(Level::B, GaloisParam(3, 1, 1)) == 6);
    CHECK(a19.count_sigma_fixed(Level::B, GaloisParam(3, 1, 2)) == 6);
}

TEST_CASE("B-level counts match the explicit field oracle") {
    using Cfg = std::tuple<char, int, std::int64_t, int>;
    for (auto [type, rank, p, f] :
         {Cfg{'A', 1, 5, 1}, Cfg{'A', 1, 3, 2}, Cfg{'A', 2, 3, 1}, Cfg{'A', 2, 2, 2},
          Cfg{'C', 2, 3, 1}, Cfg{'C', 2, 5, 1}, Cfg{'B', 2, 3, 1}, Cfg{'G', 2, 5, 1},
          Cfg{'A', 3, 3, 1}, Cfg{'A', 1, 2, 3}}) {
        CAPTURE(type);
        CAPTURE(rank);
        CAPTURE(p);
        CAPTURE(f);
        BorelModel m(rootof(type, rank), p, f);
        FieldOracle oracle(rootof(type, rank), p, f);
        for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(f); ++e) {
            for (std::int64_t kappa = 1; kappa < p; ++kappa) {
                GaloisParam g(p, e, kappa);
                auto [total, fixed] = oracle.counts(g);
                CHECK(m.count_pprime(Level::B) == total);
                CHECK(m.count_sigma_fixed(Level::B, g) == fixed);
            }
        }
    }
}

TEST_CASE("two methods agree") {
    using Cfg = std::tuple<char, int, std::int64_t, int>;
    for (auto [type, rank, p, f] :
         {Cfg{'A', 1, 3, 1}, Cfg{'A', 1, 5, 1}, Cfg{'A', 1, 7, 1}, Cfg{'A', 1, 3, 2},
          Cfg{'A', 2, 3, 2}, Cfg{'A', 2, 5, 1}, Cfg{'C', 2, 3, 1}, Cfg{'C', 2, 5, 1},
          Cfg{'C', 2, 3, 2}, Cfg{'B', 3, 3, 1}, Cfg{'D', 4, 5, 1}, Cfg{'G', 2, 7, 1}}) {
        CAPTURE(type);
        CAPTURE(rank);
        CAPTURE(p);
        CAPTURE(f);
        BorelModel m(rootof(type, rank), p, f);
        for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(f); ++e)
            for (std::int64_t kappa = 1; kappa < p; ++kappa) {
                GaloisParam g(p, e, kappa);
                CHECK(m.count_sigma_fixed(Level::B, g) == m.count_sigma_fixed_inertia(g));
            }
        // identity fixes everything
        CHECK(m.count_sigma_fixed(Level::B, GaloisParam(p, 0, 1)) == m.count_pprime(Level::B));
        CHECK(m.count_sigma_fixed(Level::Btilde, GaloisParam(p, 0, 1)) ==
              m.count_pprime(Level::Btilde));
    }
}

TEST_CASE("Btilde counts are kappa-independent and match the label formula") {
    using Cfg = std::tuple<char, int, std::int64_t, int>;
    for (auto [type, rank, p, f] :
         {Cfg{'A', 2, 5, 1}, Cfg{'C', 3, 3, 1}, Cfg{'D', 4, 3, 1}, Cfg{'F', 4, 3, 1},
          Cfg{'A', 1, 3, 2}}) {
        CAPTURE(type);
        CAPTURE(rank);
        const auto& tg = BorelModel(rootof(type, rank), p, f).group();
        BorelModel m(rootof(type, rank), p, f);
        labels::LabelSpace ls(m.group(), p, f);
        (void)tg;
        CHECK(m.count_pprime(Level::Btilde) == ls.size());
        for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(f); ++e) {
            std::set<std::int64_t> values;
            for (std::int64_t kappa = 1; kappa < p; ++kappa)
                values.insert(m.count_sigma_fixed(Level::Btilde, GaloisParam(p, e, kappa)));
            CHECK(values.size() == 1);
            CHECK(*values.begin() == ls.count_fixed(GaloisParam(p, e, 1)));
        }
    }
}

TEST_CASE("inverse-direction action has the same fixed-point count") {
    // the pair action is a bijection, so sigma and sigma^{-1} fix the same
    // pairs; sigma^{-1} is realized by (e', kappa^{-1}) with
    // p^{e'} = p^{-e} mod (q-1)
    using Cfg = std::tuple<char, int, std::int64_t, int>;
    for (auto [type, rank, p, f] :
         {Cfg{'A', 1, 5, 1}, Cfg{'C', 2, 3, 1}, Cfg{'A', 2, 3, 2}, Cfg{'B', 2, 7, 1}}) {
        CAPTURE(type);
        CAPTURE(rank);
        BorelModel m(rootof(type, rank), p, f);
        std::int64_t N = m.q() - 1;
        std::uint64_t ord = 1;
        if (N > 1) {
            std::int64_t acc = p % N;
            while (acc != 1) {
                acc = acc * p % N;
                ++ord;
            }
        }
        for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(f); ++e)
            for (std::int64_t kappa = 1; kappa < p; ++kappa) {
                std::uint64_t e_inv = e % ord == 0 ? 0 : (ord - e % ord);
                std::int64_t kappa_inv =
                    static_cast<std::int64_t>(mckay::nt::modpow(
                        static_cast<std::uint64_t>(kappa), static_cast<std::uint64_t>(p - 2),
                        static_cast<std::uint64_t>(p)));
                GaloisParam g(p, e, kappa), ginv(p, e_inv, kappa_inv);
                CHECK(m.count_sigma_fixed(Level::B, g) == m.count_sigma_fixed(Level::B, ginv));
                CHECK(m.count_sigma_fixed(Level::Btilde, g) ==
                      m.count_sigma_fixed(Level::Btilde, ginv));
            }
    }
}

TEST_CASE("counts are periodic in e with period f") {
    BorelModel m(rootof('C', 2), 3, 2);
    for (std::int64_t kappa = 1; kappa < 3; ++kappa)
        for (std::uint64_t e = 0; e <= 3; ++e)
            for (std::uint64_t k = 1; k <= 2; ++k) {
                GaloisParam g1(3, e, kappa), g2(3, e + 2 * k, kappa);
                CHECK(m.count_sigma_fixed(Level::B, g1) == m.count_sigma_fixed(Level::B, g2));
                CHECK(m.count_sigma_fixed(Level::Btilde, g1) ==
                      m.count_sigma_fixed(Level::Btilde, g2));
            }
}

TEST_CASE("central partition") {
    // A_1, q = 5, sigma = id: |Z| = 2, q + 3 = 8 splits as 4 + 4
    BorelModel a15(rootof('A', 1), 5, 1);
    auto part = a15.central_partition(GaloisParam(5, 0, 1));
    CHECK(part.center_order == 2);
    REQUIRE(part.classes.size() == 2);
    for (const auto& [key, cell] : part.classes) {
        CHECK(cell.first == 4);
        CHECK(cell.second == 4);
    }

    // trivial center: single class
    BorelModel g25(rootof('G', 2), 5, 1);
    auto gp = g25.central_partition(GaloisParam(5, 0, 1));
    CHECK(gp.center_order == 1);
    CHECK(gp.classes.size() == 1);

    // column sums on a grid
    using Cfg = std::tuple<char, int, std::int64_t, int>;
    for (auto [type, rank, p, f] :
         {Cfg{'A', 1, 5, 1}, Cfg{'A', 2, 3, 1}, Cfg{'C', 2, 3, 1}, Cfg{'A', 1, 3, 2}}) {
        CAPTURE(type);
        CAPTURE(rank);
        BorelModel m(rootof(type, rank), p, f);
        for (std::uint64_t e = 0; e <= static_cast<std::uint64_t>(2 * f); ++e)
            for (std::int64_t kappa = 1; kappa < p; ++kappa) {
                GaloisParam g(p, e, kappa);
                auto pp = m.central_partition(g);
                std::int64_t total = 0, fixed = 0;
                for (const auto& [key, cell] : pp.classes) {
                    total += cell.first;
                    fixed += cell.second;
                }
                CHECK(total == m.count_pprime(Level::B));
                CHECK(fixed == m.count_sigma_fixed(Level::B, g));
                CHECK(static_cast<std::int64_t>(pp.classes.size()) == pp.center_order);
            }
    }
}

TEST_CASE("closed form for type C") {
    CHECK(closed_form_type_c(2, 3, 1, 0, true) == 18);
    CHECK(closed_form_type_c(1, 5, 1, 0, false) == 4);
    CHECK(closed_form_type_c(2, 3, 2, 1, true) == 18); // s = 1: 9 + 9
    CHECK(closed_form_type_c(1, 7, 1, 0, true) == 10);
    CHECK_THROWS_AS(closed_form_type_c(2, 2, 1, 0, true), std::invalid_argument);
}

TEST_CASE("excluded and unsupported configurations") {
    CHECK_THROWS_AS(BorelModel(rootof('C', 2), 2, 1), ExcludedError);
    CHECK_THROWS_AS(BorelModel(rootof('G', 2), 3, 1), ExcludedError);
    CHECK_THROWS_AS(BorelModel(rootof('G', 2), 2, 1), ExcludedError);
    // A_n at q = 2 is fine
    BorelModel a32(rootof('A', 3), 2, 1);
    CHECK(a32.count_pprime(Level::B) == 8);
    CHECK(a32.count_pprime(Level::Btilde) == 8);
}
