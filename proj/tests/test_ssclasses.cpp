#include "doctest.h"

#include <map>
#include <set>
#include <tuple>

#include "mckay/errors.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/ssclasses.hpp"

using namespace mckay;
using namespace mckay::ssclasses;
using mckay::labels::GaloisParam;

namespace {

// Oracle: enumerate monic degree-(n+1) polynomials over the F_q-subfield
// with nonzero constant term directly from coefficient tuples and find the
// eigenvalue multiset by root search in the ambient field.  Completely
// ignores the block/orbit construction of the implementation.
std::set<std::vector<std::uint32_t>> oracle_class_keys(const GlClassModel& m) {
    const auto& big = m.ambient();
    int n1 = m.n_plus_1();
    auto pf = nt::as_prime_power(m.q()).value();
    unsigned f = static_cast<unsigned>(pf.second);

    auto fq = big.subfield_elems(f);
    std::set<std::vector<std::uint32_t>> keys;
    std::vector<std::size_t> idx(n1, 0);
    while (true) {
        // candidate coefficients c_0..c_n of x^{n+1} + sum c_i x^i
        std::vector<gf::FieldElem> coeff;
        for (int i = 0; i < n1; ++i) coeff.push_back(fq[idx[i]]);
        if (!coeff[0].is_zero()) {
            std::vector<std::uint32_t> key;
            for (auto c : coeff) key.push_back(c.code);
            keys.insert(key);
        }
        int k = 0;
        for (; k < n1; ++k) {
            if (++idx[k] < fq.size()) break;
            idx[k] = 0;
        }
        if (k == n1) break;
    }
    return keys;
}

} // namespace

TEST_CASE("class enumeration counts") {
    CHECK(GlClassModel(2, 3, 1).enumerate().size() == 6);   // (q-1) q
    CHECK(GlClassModel(2, 5, 1).enumerate().size() == 20);
    CHECK(GlClassModel(3, 3, 1).enumerate().size() == 18);  // (q-1) q^2
    CHECK(GlClassModel(2, 2, 1).enumerate().size() == 2);
    CHECK(GlClassModel(2, 3, 2).enumerate().size() == 72);
}

TEST_CASE("classes are exactly the monic polynomials with nonzero constant term") {
    for (auto [n1, p, f] : {std::tuple{2, 3, 1}, {2, 5, 1}, {3, 3, 1}, {3, 2, 2}}) {
        CAPTURE(n1);
        CAPTURE(p);
        CAPTURE(f);
        GlClassModel m(n1, p, f);
        auto expected = oracle_class_keys(m);
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& cls : m.enumerate()) {
            got.insert(cls.key());
            // eigen data multiplicities sum to n+1
            int total = 0;
            for (const auto& eo : cls.orbits) total += eo.degree;
            CHECK(total == n1);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("steinberg label: stated cases") {
    GlClassModel m(2, 5, 1);
    const auto& big = m.ambient();

    // identity class: b_i = binom(n+1, i) mod p, b0 = 1
    std::vector<gf::FieldElem> ones{big.one(), big.one()};
    // find the class with eigenvalues {1, 1} via charpoly (x-1)^2 = x^2 - 2x + 1
    const SsClass* id_cls = nullptr;
    for (const auto& cls : m.enumerate())
        if (cls.charpoly[0] == big.one() && cls.charpoly[1] == big.from_int(-2)) id_cls = &cls;
    REQUIRE(id_cls != nullptr);
    auto lab = m.steinberg_label(*id_cls);
    CHECK(lab.b0 == big.one());
    CHECK(lab.b[0] == big.from_int(2)); // binom(2,1) = 2

    // diag(a, a^{-1}) class: b_1 = a + a^{-1}, b0 = 1
    for (const auto& cls : m.enumerate()) {
        auto l = m.steinberg_label(cls);
        // self-consistency: b_i = (-1)^i coeff(x^{n+1-i}), b0 = (-1)^{n+1} c_0
        gf::FieldElem sign = big.neg(big.one());
        CHECK(l.b[0] == big.mul(sign, cls.charpoly[1])); // e_1 = -c_1
        CHECK(l.b0 == cls.charpoly[0]);                  // e_2 = c_0 for n+1 = 2
        if (l.b0 == big.one()) {
            // eigenvalues a, a^{-1}: trace = a + a^{-1}
            gf::FieldElem a = cls.orbits.front().rep;
            gf::FieldElem expect = big.zero();
            gf::FieldElem conj = a;
            for (int t = 0; t < cls.orbits.front().degree; ++t) {
                expect = big.add(expect, conj);
                conj = big.frobenius_pow(conj, 1);
            }
            if (cls.orbits.size() == 2)
                expect = big.add(cls.orbits[0].rep, cls.orbits[1].rep);
            CHECK(l.b[0] == expect);
        }
    }
}

TEST_CASE("label components are the signed charpoly coefficients") {
    // b_i = (-1)^i coeff(x^{n+1-i}), b0 = (-1)^{n+1} c_0
    for (auto [n1, p, f] : {std::tuple{2, 3, 1}, {2, 5, 1}, {3, 3, 1}, {3, 2, 2}, {4, 3, 1}}) {
        CAPTURE(n1);
        CAPTURE(p);
        GlClassModel m(n1, p, f);
        const auto& big = m.ambient();
        for (const auto& cls : m.enumerate()) {
            auto lab = m.steinberg_label(cls);
            gf::FieldElem sign = big.one();
            for (int i = 1; i < n1; ++i) {
                sign = big.neg(sign); // (-1)^i
                CHECK(lab.b[i - 1] == big.mul(sign, cls.charpoly[n1 - i]));
            }
            sign = big.neg(sign); // (-1)^{n+1}
            CHECK(lab.b0 == big.mul(sign, cls.charpoly[0]));
        }
    }
}

TEST_CASE("steinberg label separates classes (exhaustive, GL_2/GL_3, q <= 5)") {
    for (auto [n1, p, f] : {std::tuple{2, 2, 1}, {2, 3, 1}, {2, 2, 2}, {2, 5, 1},
                            {3, 2, 1}, {3, 3, 1}, {3, 2, 2}, {3, 5, 1}}) {
        CAPTURE(n1);
        CAPTURE(p);
        CAPTURE(f);
        GlClassModel m(n1, p, f);
        std::set<std::vector<std::uint32_t>> labels_seen;
        for (const auto& cls : m.enumerate()) {
            auto lab = m.steinberg_label(cls);
            std::vector<std::uint32_t> key{lab.b0.code};
            for (auto b : lab.b) key.push_back(b.code);
            CHECK(labels_seen.insert(key).second); // pairwise distinct
        }
        CHECK(labels_seen.size() == m.enumerate().size());
    }
}

TEST_CASE("class_power basics and the commuting square") {
    GlClassModel m(2, 3, 2); // GL_2(9)
    const auto& big = m.ambient();
    for (const auto& cls : m.enumerate()) {
        CHECK(m.class_power(cls, 1).key() == cls.key());
        // q^2-power fixes every eigenvalue of a GL_2 class
        CHECK(m.class_power(cls, 81).key() == cls.key());
        CHECK(m.class_frobenius(cls, 4).key() == cls.key());
    }

    // label(s^p) = label(s)^p, exhaustively for GL_2, GL_3 at q <= 5
    for (auto [n1, p, f] : {std::tuple{2, 3, 1}, {2, 5, 1}, {3, 3, 1}, {3, 2, 2}, {3, 5, 1}}) {
        CAPTURE(n1);
        CAPTURE(p);
        GlClassModel mm(n1, p, f);
        const auto& b = mm.ambient();
        for (const auto& cls : mm.enumerate()) {
            auto lp = mm.steinberg_label(mm.class_power(cls, static_cast<std::uint64_t>(p)));
            auto l = mm.steinberg_label(cls);
            CHECK(lp.b0 == b.pow(l.b0, static_cast<std::uint64_t>(p)));
            for (std::size_t i = 0; i < l.b.size(); ++i)
                CHECK(lp.b[i] == b.pow(l.b[i], static_cast<std::uint64_t>(p)));
        }
    }
    (void)big;
}

TEST_CASE("sigma-fixed class counts") {
    CHECK(GlClassModel(2, 5, 1).count_sigma_fixed(GaloisParam(5, 0, 1)) == 20);
    CHECK(GlClassModel(3, 3, 1).count_sigma_fixed(GaloisParam(3, 0, 1)) == 18);
    // GL_2(9), e = 1: (p^s - 1) p^s with s = gcd(1, 2) = 1 -> 2 * 3 = 6
    GlClassModel m29(2, 3, 2);
    CHECK(m29.enumerate().size() == 72);
    CHECK(m29.count_sigma_fixed(GaloisParam(3, 1, 1)) == 6);

    // closed form across a grid: (p^s - 1) p^{s n}
    for (auto [n1, p, f] : {std::tuple{2, 3, 1}, {2, 3, 2}, {2, 7, 1}, {3, 3, 1}, {3, 2, 2}}) {
        CAPTURE(n1);
        CAPTURE(p);
        CAPTURE(f);
        GlClassModel m(n1, p, f);
        for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(f); ++e) {
            GaloisParam g(p, e, 1);
            std::int64_t s = g.s(f);
            std::int64_t ps = nt::ipow(p, static_cast<std::uint64_t>(s));
            std::int64_t expect = ps - 1;
            for (int i = 1; i < n1; ++i) expect *= ps;
            CHECK(m.count_sigma_fixed(g) == expect);
        }
    }
}

TEST_CASE("GU_3 class count") {
    CHECK(gu3_class_count(2, 1) == 12);  // q^2 (q+1) at q = 2
    CHECK(gu3_class_count(3, 1) == 36);
    CHECK(gu3_class_count(5, 1) == 150);
}

TEST_CASE("scale bounds") {
    CHECK_THROWS_AS(GlClassModel(3, 5, 2), UnsupportedError);  // 25^6 too large
    CHECK_THROWS_AS(GlClassModel(2, 2, 12), UnsupportedError); // class count
}
