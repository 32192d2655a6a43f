#include "doctest.h"

#include <numeric>
#include <vector>

#include "mckay/zmod.hpp"

using namespace mckay::zmod;

namespace {

// brute-force kernel size of M x = 0 (mod n) over (Z/n)^cols
std::int64_t brute_kernel_size(const IntMat& m, std::int64_t n) {
    int c = m.cols(), r = m.rows();
    std::int64_t total = 1;
    for (int i = 0; i < c; ++i) total *= n;
    std::int64_t count = 0;
    std::vector<std::int64_t> x(c, 0);
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t t = code;
        for (int i = 0; i < c; ++i) { x[i] = t % n; t /= n; }
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            Int acc = 0;
            for (int j = 0; j < c; ++j) acc += m.at(i, j) * x[j];
            ok = (acc % n == 0);
        }
        if (ok) ++count;
    }
    return count;
}

bool brute_solvable(const IntMat& m, const std::vector<std::int64_t>& b, std::int64_t n) {
    int c = m.cols(), r = m.rows();
    std::int64_t total = 1;
    for (int i = 0; i < c; ++i) total *= n;
    std::vector<std::int64_t> x(c, 0);
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t t = code;
        for (int i = 0; i < c; ++i) { x[i] = t % n; t /= n; }
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            Int acc = -b[i];
            for (int j = 0; j < c; ++j) acc += m.at(i, j) * x[j];
            Int rmod = acc % n;
            ok = (rmod == 0);
        }
        if (ok) return true;
    }
    return false;
}

void check_snf(const IntMat& m) {
    auto s = smith(m);
    CHECK(s.u.mul(m).mul(s.v) == s.d);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    int steps = std::min(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    for (int i = 0; i + 1 < steps; ++i) {
        CHECK(s.d.at(i, i) >= 0);
        if (s.d.at(i + 1, i + 1) != 0) {
            REQUIRE(s.d.at(i, i) != 0);
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
        }
    }
}

} // namespace

TEST_CASE("smith normal form: stated cases") {
    auto id2 = IntMat::identity(2);
    auto s = smith(id2);
    CHECK(s.d == id2);

    // Cartan matrix of type C_2; hand reduction gives diag(1, 2), det 2
    auto c2 = IntMat::from_rows({{2, -1}, {-2, 2}}, 2);
    auto sc = smith(c2);
    CHECK(sc.d.at(0, 0) == 1);
    CHECK(sc.d.at(1, 1) == 2);
    CHECK(det(c2) == 2);

    IntMat z(2, 3);
    auto sz = smith(z);
    CHECK(sz.d == z);
}

TEST_CASE("smith normal form: property battery") {
    std::vector<IntMat> battery = {
        IntMat::from_rows({{2}}, 1),
        IntMat::from_rows({{0}}, 1),
        IntMat::from_rows({{6, 4}, {4, 8}}, 2),
        IntMat::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 3),
        IntMat::from_rows({{-3, 1, 2}, {0, 0, 5}}, 3),
        IntMat::from_rows({{1, 2}, {3, 4}, {5, 6}}, 2),
        IntMat::from_rows({{12, 8, 4}, {8, 12, 4}, {4, 4, 8}}, 3),
        IntMat(0, 3),
        IntMat(3, 0),
    };
    // deterministic pseudorandom small matrices
    std::uint64_t state = 12345;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::int64_t>((state >> 33) % 11) - 5;
    };
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c)
            for (int rep = 0; rep < 8; ++rep) {
                IntMat m(r, c);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < c; ++j) m.at(i, j) = next();
                battery.push_back(m);
            }
    for (const auto& m : battery) check_snf(m);
}

TEST_CASE("solve_mod: stated cases") {
    auto m = IntMat::from_rows({{2}}, 1);
    CHECK(!solve_mod(m, {1}, 4).has_value());
    auto sol = solve_mod(m, {2}, 4);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
}

TEST_CASE("solve_mod agrees with brute force, cols <= 3, N <= 8") {
    std::uint64_t state = 999;
    auto next = [&state](std::int64_t span) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::int64_t>((state >> 33) % (2 * span + 1)) - span;
    };
    for (std::int64_t n : {1, 2, 4, 6, 8}) {
        for (int r = 0; r <= 3; ++r)
            for (int c = 1; c <= 3; ++c)
                for (int rep = 0; rep < 6; ++rep) {
                    IntMat m(r, c);
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < c; ++j) m.at(i, j) = next(3);
                    std::vector<std::int64_t> b(r);
                    for (int i = 0; i < r; ++i) b[i] = (next(3) % n + n) % n;
                    auto sol = solve_mod(m, b, n);
                    CHECK(sol.has_value() == brute_solvable(m, b, n));
                    if (sol) {
                        for (int i = 0; i < r; ++i) {
                            Int acc = -b[i];
                            for (int j = 0; j < c; ++j) {
                                CHECK((*sol)[j] >= 0);
                                CHECK((*sol)[j] < n);
                                acc += m.at(i, j) * (*sol)[j];
                            }
                            CHECK(acc % n == 0);
                        }
                    }
                }
    }
}

TEST_CASE("kernel_shape: stated cases") {
    // the SL_2 stabilizer {+-1}: 2x = 0 mod 4
    auto m = IntMat::from_rows({{2}}, 1);
    auto g = kernel_shape(m, 4);
    CHECK(g.divisors == std::vector<std::int64_t>{2});
    CHECK(g.order() == 2);

    IntMat empty(0, 3);
    auto full = kernel_shape(empty, 6);
    CHECK(full.divisors == std::vector<std::int64_t>{6, 6, 6});

    auto trivial = kernel_shape(IntMat::identity(3), 6);
    CHECK(trivial.divisors.empty());
    CHECK(trivial.order() == 1);
}

TEST_CASE("kernel_shape order agrees with brute force") {
    std::uint64_t state = 4242;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::int64_t>((state >> 33) % 7) - 3;
    };
    for (std::int64_t n : {2, 3, 4, 6, 8}) {
        for (int r = 0; r <= 3; ++r)
            for (int c = 1; c <= 3; ++c)
                for (int rep = 0; rep < 6; ++rep) {
                    IntMat m(r, c);
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < c; ++j) m.at(i, j) = next();
                    auto g = kernel_shape(m, n);
                    CHECK(g.order() == brute_kernel_size(m, n));
                    for (std::size_t i = 0; i + 1 < g.divisors.size(); ++i)
                        CHECK(g.divisors[i + 1] % g.divisors[i] == 0);
                    for (auto d : g.divisors) CHECK(n % d == 0);
                }
    }
}

TEST_CASE("torsion_count") {
    GroupShape z2{{2}};
    CHECK(torsion_count(z2, 4) == 2);  // p^e-1 even, both characters fixed
    CHECK(torsion_count(z2, 0) == 2);  // t = 0 fixes everything
    GroupShape z4{{4}};
    CHECK(torsion_count(z4, 2) == 2);
    GroupShape s{{2, 4, 8}};
    CHECK(torsion_count(s, 0) == 64);

    // against brute force over direct sums, orders <= 64
    std::vector<GroupShape> shapes = {{{2}}, {{3}}, {{4}}, {{2, 2}}, {{2, 4}}, {{2, 2, 4}},
                                      {{8}}, {{2, 8}}, {{3, 3}}, {{6}}, {{2, 6}}, {{}}};
    for (const auto& sh : shapes) {
        for (std::int64_t t = 0; t <= 12; ++t) {
            std::int64_t total = sh.order();
            std::int64_t brute = 0;
            for (std::int64_t code = 0; code < total; ++code) {
                std::int64_t x = code;
                bool killed = true;
                for (auto d : sh.divisors) {
                    std::int64_t comp = x % d;
                    x /= d;
                    if (comp * t % d != 0) killed = false;
                }
                if (killed) ++brute;
            }
            CHECK(torsion_count(sh, t) == brute);
        }
    }
}

TEST_CASE("free_shape") {
    CHECK(free_shape(3, 4).divisors == std::vector<std::int64_t>{4, 4, 4});
    CHECK(free_shape(2, 1).divisors.empty()); // trivial over Z/1
    CHECK(free_shape(0, 5).order() == 1);
}
