#include "mckay/selfcheck.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mckay/borel.hpp"
#include "mckay/errors.hpp"
#include "mckay/gf.hpp"
#include "mckay/labels.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/rootdata.hpp"
#include "mckay/ssclasses.hpp"
#include "mckay/zmod.hpp"

namespace mckay::selfcheck {

namespace {

struct Runner {
    SuiteResult result;

    explicit Runner(std::string suite) { result.suite = std::move(suite); }

    void check(const std::string& name, const std::function<void()>& fn) {
        CheckResult r;
        r.name = name;
        try {
            fn();
            r.status = "PASS";
            ++result.passed;
        } catch (const ExcludedError& e) {
            r.status = "SKIP";
            r.detail = e.row();
            ++result.skipped;
        } catch (const std::exception& e) {
            r.status = "FAIL";
            r.detail = e.what();
            ++result.failed;
        }
        result.checks.push_back(std::move(r));
    }
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        throw std::runtime_error(os.str());
    }
}

// ---------------------------------------------------------------- fields

SuiteResult suite_fields() {
    Runner r("fields");
    r.check("axioms", [] {
        for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 1u}}) {
            gf::Field f(p, m);
            for (std::uint32_t a = 0; a < f.order(); ++a)
                for (std::uint32_t b = 0; b < f.order(); ++b) {
                    auto ea = f.element(a), eb = f.element(b);
                    expect(f.add(ea, eb) == f.add(eb, ea), "commutative +");
                    expect(f.mul(ea, eb) == f.mul(eb, ea), "commutative *");
                    auto c = f.element((a * 7 + b * 3 + 1) % f.order());
                    expect(f.mul(ea, f.add(eb, c)) == f.add(f.mul(ea, eb), f.mul(ea, c)),
                           "distributive");
                }
        }
    });
    r.check("frobenius-composition", [] {
        gf::Field f(3, 4);
        for (std::uint32_t c = 0; c < f.order(); c += 5)
            for (std::uint64_t e1 = 0; e1 <= 4; ++e1)
                for (std::uint64_t e2 = 0; e2 <= 4; ++e2)
                    expect(f.frobenius_pow(f.element(c), e1 + e2) ==
                               f.frobenius_pow(f.frobenius_pow(f.element(c), e1), e2),
                           "frobenius additivity");
    });
    r.check("frobenius-fixed-count", [] {
        for (auto [p, m] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}, {7u, 2u}}) {
            gf::Field f(p, m);
            for (std::uint64_t e = 0; e <= 2 * m; ++e) {
                std::uint64_t n = 0;
                for (std::uint32_t c = 0; c < f.order(); ++c)
                    if (f.frobenius_pow(f.element(c), e) == f.element(c)) ++n;
                expect_eq(f.count_frobenius_fixed(e), n, "fixed count vs enumeration");
            }
        }
    });
    r.check("dlog-homomorphism", [] {
        gf::Field f(3, 2);
        for (std::uint32_t a = 1; a < 9; ++a) {
            expect(f.pow(f.generator(), f.dlog(f.element(a))) == f.element(a), "dlog inverts");
            for (std::uint32_t b = 1; b < 9; ++b)
                expect(f.dlog(f.mul(f.element(a), f.element(b))) ==
                           (f.dlog(f.element(a)) + f.dlog(f.element(b))) % 8,
                       "dlog additive");
        }
    });
    r.check("embed-chains", [] {
        gf::Field f2(2, 1), f4(2, 2), f16(2, 4);
        for (std::uint32_t a = 0; a < 2; ++a)
            expect(embed(embed(f2.element(a), f4), f16) == embed(f2.element(a), f16),
                   "chain through F_4");
        gf::Field f3(3, 1), f9(3, 2), f81(3, 4);
        for (std::uint32_t a = 0; a < 3; ++a)
            expect(embed(embed(f3.element(a), f9), f81) == embed(f3.element(a), f81),
                   "chain through F_9");
        expect(embed(f3.element(2), f9) == f9.neg(f9.one()), "-1 maps to -1");
    });
    return r.result;
}

// ---------------------------------------------------------------- linalg

SuiteResult suite_linalg() {
    Runner r("linalg");
    r.check("smith-properties", [] {
        std::vector<zmod::IntMat> battery = {
            zmod::IntMat::identity(2),
            zmod::IntMat::from_rows({{2, -1}, {-2, 2}}, 2),
            zmod::IntMat::from_rows({{6, 4}, {4, 8}}, 2),
            zmod::IntMat::from_rows({{1, 2}, {3, 4}, {5, 6}}, 2),
            zmod::IntMat::from_rows({{-3, 1, 2}, {0, 0, 5}}, 3),
            zmod::IntMat(2, 3),
        };
        for (const auto& m : battery) {
            auto s = zmod::smith(m);
            expect(s.u.mul(m).mul(s.v) == s.d, "U M V = D");
            expect(abs(zmod::det(s.u)) == 1, "U unimodular");
            expect(abs(zmod::det(s.v)) == 1, "V unimodular");
        }
        auto s = zmod::smith(zmod::IntMat::from_rows({{2, -1}, {-2, 2}}, 2));
        expect(s.d.at(0, 0) == 1 && s.d.at(1, 1) == 2, "C_2 cartan -> diag(1,2)");
    });
    r.check("solve-and-kernel-vs-brute-force", [] {
        std::int64_t n = 6;
        for (std::int64_t a = -2; a <= 2; ++a)
            for (std::int64_t b = -2; b <= 2; ++b) {
                auto m = zmod::IntMat::from_rows({{a, b}}, 2);
                // brute force over (Z/6)^2
                for (std::int64_t rhs = 0; rhs < n; ++rhs) {
                    bool brute = false;
                    std::int64_t kernel = 0;
                    for (std::int64_t x = 0; x < n; ++x)
                        for (std::int64_t y = 0; y < n; ++y) {
                            std::int64_t v = ((a * x + b * y) % n + n) % n;
                            if (v == rhs) brute = true;
                            if (v == 0 && rhs == 0) ++kernel;
                        }
                    auto sol = zmod::solve_mod(m, {rhs}, n);
                    expect(sol.has_value() == brute, "solvability");
                    if (rhs == 0)
                        expect_eq(zmod::kernel_shape(m, n).order(), kernel, "kernel order");
                }
            }
    });
    r.check("torsion-counts", [] {
        zmod::GroupShape s{{2, 4}};
        for (std::int64_t t = 0; t <= 8; ++t) {
            std::int64_t brute = 0;
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 4; ++y)
                    if (x * t % 2 == 0 && y * t % 4 == 0) ++brute;
            expect_eq(zmod::torsion_count(s, t), brute, "torsion count");
        }
    });
    return r.result;
}

// -------------------------------------------------------------- rootdata

SuiteResult suite_rootdata() {
    Runner r("rootdata");
    r.check("classical-invariants", [] {
        struct Row { char t; int n; std::size_t roots; std::int64_t det; };
        for (auto row : {Row{'A', 4, 10, 5}, {'B', 3, 9, 2}, {'C', 4, 16, 2}, {'D', 4, 12, 4},
                         {'E', 6, 36, 3}, {'E', 7, 63, 2}, {'E', 8, 120, 1}, {'F', 4, 24, 1},
                         {'G', 2, 6, 1}}) {
            auto rs = lie::root_system(row.t, row.n);
            expect_eq(rs.positive_roots.size(), row.roots, rs.name() + " positive roots");
            expect_eq(rs.fund_group_order, row.det, rs.name() + " fundamental group");
        }
    });
    r.check("twist-data", [] {
        for (auto [t, n, w] : {std::tuple{'A', 3, 2}, {'D', 4, 2}, {'D', 4, 3}, {'E', 6, 2}}) {
            auto tg = lie::twist(lie::root_system(t, n), w);
            std::size_t total = 0;
            for (const auto& o : tg.orbits) total += o.size();
            expect(total == static_cast<std::size_t>(n), "orbits partition the diagram");
        }
        expect_eq(lie::twist(lie::root_system('D', 4), 3).dbar, 0, "3D_4 dbar");
        expect_eq(lie::twist(lie::root_system('D', 4), 2).dbar, 1, "2D_4 dbar");
        expect_eq(lie::twist(lie::root_system('C', 2), 1).dbar, 1, "C_2 dbar");
    });
    r.check("exclusion-table", [] {
        expect(lie::twist(lie::root_system('G', 2), 1).excluded(3).has_value(), "G_2(3)");
        expect(lie::twist(lie::root_system('B', 2), 1).excluded(2).has_value(), "B_2(2)");
        expect(lie::twist(lie::root_system('F', 4), 1).excluded(2).has_value(), "F_4(2)");
        expect(lie::twist(lie::root_system('D', 4), 2).excluded(2).has_value(), "2D_4(2)");
        expect(!lie::twist(lie::root_system('A', 2), 1).excluded(2).has_value(), "A_2(2) fine");
    });
    return r.result;
}

// ---------------------------------------------------------------- labels

SuiteResult suite_labels() {
    Runner r("labels");
    struct Cfg { char t; int n; int w; std::int64_t p; int f; };
    std::vector<Cfg> grid = {{'A', 1, 1, 5, 1}, {'A', 1, 1, 3, 2}, {'A', 2, 1, 3, 1},
                             {'C', 2, 1, 3, 1}, {'C', 2, 1, 3, 2}, {'A', 2, 2, 3, 1},
                             {'D', 4, 3, 2, 1}, {'G', 2, 1, 3, 1}}; // last one excluded -> SKIP
    for (const auto& c : grid) {
        std::ostringstream name;
        name << "fixed-count-" << (c.w > 1 ? std::to_string(c.w) : "") << c.t << c.n << "-q"
             << nt::ipow(c.p, static_cast<std::uint64_t>(c.f));
        r.check(name.str(), [c] {
            auto tg = lie::twist(lie::root_system(c.t, c.n), c.w);
            labels::LabelSpace ls(tg, c.p, c.f);
            if (c.w == 1) {
                std::int64_t expect_size = 1;
                for (int j = 0; j < tg.d; ++j) expect_size *= ls.q() - 1;
                for (int i = 0; i < c.n; ++i) expect_size *= ls.q();
                expect_eq(ls.size(), expect_size, "(q-1)^d q^n");
            }
            for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(c.f); ++e) {
                labels::GaloisParam g(c.p, e, 1);
                expect_eq(ls.count_fixed(g), ls.count_fixed_enumerated(g),
                          "formula vs enumeration");
            }
            // the action permutes A
            labels::GaloisParam g1(c.p, 1, 1);
            std::set<std::string> images;
            std::int64_t total = 0;
            ls.for_each_label([&](const labels::Label& lab) {
                images.insert(ls.to_string(ls.act(lab, g1)));
                ++total;
            });
            expect_eq(static_cast<std::int64_t>(images.size()), total, "action is a bijection");
        });
    }
    return r.result;
}

// ----------------------------------------------------------------- borel

SuiteResult suite_borel() {
    Runner r("borel");
    struct Cfg { char t; int n; std::int64_t p; int f; };
    std::vector<Cfg> grid = {{'A', 1, 5, 1}, {'A', 2, 3, 1}, {'C', 2, 3, 1}, {'C', 2, 5, 1},
                             {'B', 2, 3, 1}, {'A', 1, 3, 2}, {'G', 2, 3, 1}}; // last excluded
    for (const auto& c : grid) {
        std::ostringstream name;
        name << "counts-" << c.t << c.n << "-q" << nt::ipow(c.p, static_cast<std::uint64_t>(c.f));
        r.check(name.str(), [c] {
            auto rs = lie::root_system(c.t, c.n);
            borel::BorelModel m(rs, c.p, c.f);
            labels::LabelSpace ls(m.group(), c.p, c.f);
            std::int64_t N = m.q() - 1, torus = 1;
            for (int i = 0; i < c.n; ++i) torus *= N;
            for (const auto& oc : m.enum_orbits(borel::Level::B))
                expect(oc.orbit_size * oc.stabilizer.order() == torus, "orbit-stabilizer");
            expect(m.enum_orbits(borel::Level::Btilde).size() == (std::size_t(1) << c.n),
                   "one Btilde orbit per support");
            expect_eq(m.count_pprime(borel::Level::Btilde), ls.size(), "Btilde = labels");
            for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(c.f); ++e)
                for (std::int64_t kappa = 1; kappa < c.p; ++kappa) {
                    labels::GaloisParam g(c.p, e, kappa);
                    expect_eq(m.count_sigma_fixed(borel::Level::B, g),
                              m.count_sigma_fixed_inertia(g), "two methods");
                    expect_eq(m.count_sigma_fixed(borel::Level::Btilde, g), ls.count_fixed(g),
                              "Btilde sigma-fixed = label formula");
                }
            expect_eq(m.count_sigma_fixed(borel::Level::B, labels::GaloisParam(c.p, 0, 1)),
                      m.count_pprime(borel::Level::B), "identity fixes everything");
        });
    }
    r.check("type-C-closed-forms", [] {
        for (int n : {1, 2}) {
            auto rs = lie::root_system(n == 1 ? 'A' : 'C', n == 1 ? 1 : n);
            for (auto [p, f] : {std::pair<std::int64_t, int>{3, 1}, {5, 1}}) {
                borel::BorelModel m(rs, p, f);
                for (std::uint64_t e = 0; e <= 2; ++e)
                    for (std::int64_t kappa = 1; kappa < p; ++kappa) {
                        labels::GaloisParam g(p, e, kappa);
                        auto c = m.coordinate_field().dlog(m.coordinate_field().from_int(kappa));
                        bool even = c % 2 == 0;
                        expect_eq(m.count_sigma_fixed(borel::Level::B, g),
                                  borel::closed_form_type_c(n, p, f, e, even), "closed form");
                    }
            }
        }
    });
    r.check("central-partition-sums", [] {
        for (auto [t, n, p] : {std::tuple{'A', 1, std::int64_t(5)}, {'C', 2, std::int64_t(3)}}) {
            borel::BorelModel m(lie::root_system(t, n), p, 1);
            labels::GaloisParam g(p, 1, 1);
            auto part = m.central_partition(g);
            std::int64_t total = 0, fixed = 0;
            for (const auto& [key, cell] : part.classes) {
                total += cell.first;
                fixed += cell.second;
            }
            expect_eq(total, m.count_pprime(borel::Level::B), "partition totals");
            expect_eq(fixed, m.count_sigma_fixed(borel::Level::B, g), "partition fixed");
        }
    });
    return r.result;
}

// ---------------------------------------------------------------- global

SuiteResult suite_global() {
    Runner r("global");
    r.check("class-counts", [] {
        expect_eq(ssclasses::GlClassModel(2, 3, 1).enumerate().size(), std::size_t(6), "GL_2(3)");
        expect_eq(ssclasses::GlClassModel(2, 5, 1).enumerate().size(), std::size_t(20), "GL_2(5)");
        expect_eq(ssclasses::GlClassModel(3, 3, 1).enumerate().size(), std::size_t(18), "GL_3(3)");
    });
    r.check("steinberg-separation", [] {
        for (auto [n1, p, f] : {std::tuple{2, 3, 1}, {2, 5, 1}, {3, 3, 1}}) {
            ssclasses::GlClassModel m(n1, p, f);
            std::set<std::vector<std::uint32_t>> seen;
            for (const auto& cls : m.enumerate()) {
                auto lab = m.steinberg_label(cls);
                std::vector<std::uint32_t> key{lab.b0.code};
                for (auto b : lab.b) key.push_back(b.code);
                expect(seen.insert(key).second, "labels pairwise distinct");
            }
        }
    });
    r.check("steinberg-p-power-square", [] {
        for (auto [n1, p, f] : {std::tuple{2, 3, 1}, {3, 3, 1}, {2, 5, 1}}) {
            ssclasses::GlClassModel m(n1, p, f);
            const auto& big = m.ambient();
            for (const auto& cls : m.enumerate()) {
                auto l = m.steinberg_label(cls);
                auto lp = m.steinberg_label(m.class_power(cls, static_cast<std::uint64_t>(p)));
                expect(lp.b0 == big.pow(l.b0, static_cast<std::uint64_t>(p)), "b0 commutes");
                for (std::size_t i = 0; i < l.b.size(); ++i)
                    expect(lp.b[i] == big.pow(l.b[i], static_cast<std::uint64_t>(p)),
                           "b_i commutes");
            }
        }
    });
    r.check("triple-equality", [] {
        for (int n : {1, 2})
            for (std::int64_t q : {3, 5, 9}) {
                auto pf = nt::as_prime_power(q).value();
                ssclasses::GlClassModel m(n + 1, pf.first, pf.second);
                auto rs = lie::root_system('A', n);
                borel::BorelModel bm(rs, pf.first, pf.second);
                labels::LabelSpace ls(bm.group(), pf.first, pf.second);
                for (std::uint64_t e = 0; e <= 2 * static_cast<std::uint64_t>(pf.second); ++e) {
                    labels::GaloisParam g(pf.first, e, 1);
                    auto a = m.count_sigma_fixed(g);
                    auto b = ls.count_fixed(g);
                    auto c = bm.count_sigma_fixed(borel::Level::Btilde, g);
                    expect(a == b && b == c, "classes = labels = Btilde");
                }
            }
    });
    r.check("gu3-vs-twisted-labels", [] {
        for (std::int64_t q : {2, 3, 5}) {
            auto pf = nt::as_prime_power(q).value();
            auto tg = lie::twist(lie::root_system('A', 2), 2);
            labels::LabelSpace ls(tg, pf.first, pf.second);
            expect_eq(ssclasses::gu3_class_count(pf.first, pf.second), ls.size(),
                      "GU_3 classes = 2A_2 labels");
        }
    });
    return r.result;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"fields",  "linalg", "rootdata", "labels",
                                                   "borel",   "global", "all"};
    return names;
}

SuiteResult run_suite(const std::string& name) {
    if (name == "fields") return suite_fields();
    if (name == "linalg") return suite_linalg();
    if (name == "rootdata") return suite_rootdata();
    if (name == "labels") return suite_labels();
    if (name == "borel") return suite_borel();
    if (name == "global") return suite_global();
    if (name == "all") {
        SuiteResult all;
        all.suite = "all";
        for (const auto& n : suite_names()) {
            if (n == "all") continue;
            auto sub = run_suite(n);
            for (auto& c : sub.checks) {
                c.name = sub.suite + "/" + c.name;
                all.checks.push_back(std::move(c));
            }
            all.passed += sub.passed;
            all.failed += sub.failed;
            all.skipped += sub.skipped;
        }
        return all;
    }
    throw std::invalid_argument("unknown verify suite: " + name);
}

} // namespace mckay::selfcheck
