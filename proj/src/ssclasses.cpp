#include "mckay/ssclasses.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mckay/errors.hpp"
#include "mckay/numtheory.hpp"

namespace mckay::ssclasses {

namespace {
constexpr std::int64_t kClassBound = 200000;

int lcm_up_to(int n) {
    int l = 1;
    for (int i = 2; i <= n; ++i) l = std::lcm(l, i);
    return l;
}
} // namespace

std::vector<std::uint32_t> SsClass::key() const {
    std::vector<std::uint32_t> k;
    k.reserve(charpoly.size());
    for (auto c : charpoly) k.push_back(c.code);
    return k;
}

GlClassModel::GlClassModel(int n_plus_1, std::int64_t p, int f)
    : n1_(n_plus_1),
      p_(p),
      f_(f),
      q_(nt::ipow(p, static_cast<std::uint64_t>(f))),
      ambient_deg_(f * lcm_up_to(n_plus_1)),
      big_([&] {
          if (n_plus_1 < 1) throw std::invalid_argument("GlClassModel: need n+1 >= 1");
          try {
              return gf::Field(static_cast<std::uint64_t>(p),
                               static_cast<unsigned>(f * lcm_up_to(n_plus_1)));
          } catch (const std::overflow_error&) {
              throw UnsupportedError("GL class model: splitting field exceeds the size bound");
          }
      }()) {
    std::int64_t count = q_ - 1;
    for (int i = 1; i < n1_; ++i) count = nt::checked_mul(count, q_);
    if (count > kClassBound)
        throw UnsupportedError("GL class model: class count exceeds the desk-scale bound");
}

SsClass GlClassModel::class_from_eigenvalues(std::vector<gf::FieldElem> eigen) const {
    assert(static_cast<int>(eigen.size()) == n1_);
    SsClass cls;
    std::map<std::uint32_t, int> mult;
    for (auto x : eigen) {
        if (x.is_zero()) throw std::invalid_argument("semisimple class: eigenvalue zero");
        ++mult[x.code];
    }
    while (!mult.empty()) {
        std::uint32_t rep_code = mult.begin()->first;
        int m = mult.begin()->second;
        gf::FieldElem rep = big_.element(rep_code);
        // Frobenius-q orbit of the representative
        std::vector<std::uint32_t> orbit{rep_code};
        gf::FieldElem cur = big_.frobenius_pow(rep, static_cast<std::uint64_t>(f_));
        while (cur.code != rep_code) {
            orbit.push_back(cur.code);
            cur = big_.frobenius_pow(cur, static_cast<std::uint64_t>(f_));
        }
        // stability: every conjugate carries the same multiplicity
        for (auto c : orbit) {
            auto it = mult.find(c);
            assert(it != mult.end() && it->second == m);
            mult.erase(it);
        }
        EigenOrbit eo{rep, static_cast<int>(orbit.size())};
        for (int i = 0; i < m; ++i) cls.orbits.push_back(eo);
    }
    std::sort(cls.orbits.begin(), cls.orbits.end(),
              [](const EigenOrbit& a, const EigenOrbit& b) { return a.rep.code < b.rep.code; });

    // charpoly = prod (x - lambda) over the full eigenvalue multiset
    std::vector<gf::FieldElem> poly{big_.one()}; // leading coefficient first
    for (const auto& eo : cls.orbits) {
        gf::FieldElem conj = eo.rep;
        for (int t = 0; t < eo.degree; ++t) {
            std::vector<gf::FieldElem> next(poly.size() + 1, big_.zero());
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] = big_.add(next[i], poly[i]);                       // x * poly
                next[i + 1] = big_.sub(next[i + 1], big_.mul(poly[i], conj)); // - lambda * poly
            }
            poly = std::move(next);
            conj = big_.frobenius_pow(conj, static_cast<std::uint64_t>(f_));
        }
    }
    assert(static_cast<int>(poly.size()) == n1_ + 1);
    assert(poly[0] == big_.one());
    cls.charpoly.assign(n1_, big_.zero());
    for (int i = 0; i < n1_; ++i) {
        gf::FieldElem c = poly[n1_ - i]; // coefficient of x^i
        assert(big_.in_subfield(c, static_cast<unsigned>(f_)));
        cls.charpoly[i] = c;
    }
    assert(!cls.charpoly[0].is_zero());
    return cls;
}

const std::vector<SsClass>& GlClassModel::enumerate() const {
    if (!classes_.empty()) return classes_;

    // irreducible building blocks: Frobenius-q orbits of exact degree j
    struct Block {
        gf::FieldElem rep;
        int degree;
    };
    std::vector<Block> blocks;
    for (int j = 1; j <= n1_; ++j) {
        auto elems = big_.subfield_elems(static_cast<unsigned>(f_ * j));
        std::set<std::uint32_t> seen;
        for (auto x : elems) {
            if (x.is_zero() || seen.count(x.code)) continue;
            std::vector<std::uint32_t> orbit{x.code};
            auto cur = big_.frobenius_pow(x, static_cast<std::uint64_t>(f_));
            while (cur.code != x.code) {
                orbit.push_back(cur.code);
                cur = big_.frobenius_pow(cur, static_cast<std::uint64_t>(f_));
            }
            for (auto c : orbit) seen.insert(c);
            if (static_cast<int>(orbit.size()) == j)
                blocks.push_back({big_.element(*std::min_element(orbit.begin(), orbit.end())), j});
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return std::pair(a.degree, a.rep.code) < std::pair(b.degree, b.rep.code);
    });

    // multisets of blocks with total degree n1
    std::vector<SsClass> out;
    std::vector<gf::FieldElem> eigen;
    auto emit = [&]() { out.push_back(class_from_eigenvalues(eigen)); };
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            emit();
            return;
        }
        for (std::size_t b = start; b < blocks.size(); ++b) {
            if (blocks[b].degree > remaining) continue;
            auto conj = blocks[b].rep;
            for (int t = 0; t < blocks[b].degree; ++t) {
                eigen.push_back(conj);
                conj = big_.frobenius_pow(conj, static_cast<std::uint64_t>(f_));
            }
            rec(b, remaining - blocks[b].degree);
            eigen.resize(eigen.size() - blocks[b].degree);
        }
    };
    rec(0, n1_);

    std::sort(out.begin(), out.end(),
              [](const SsClass& a, const SsClass& b) { return a.key() < b.key(); });
    std::int64_t expect = q_ - 1;
    for (int i = 1; i < n1_; ++i) expect *= q_;
    assert(static_cast<std::int64_t>(out.size()) == expect);
    (void)expect;
    classes_ = std::move(out);
    return classes_;
}

GlobalLabel GlClassModel::steinberg_label(const SsClass& cls) const {
    // elementary symmetric functions of the eigenvalue multiset, expanded
    // in the splitting field
    std::vector<gf::FieldElem> e(n1_ + 1, big_.zero());
    e[0] = big_.one();
    int filled = 0;
    for (const auto& eo : cls.orbits) {
        gf::FieldElem conj = eo.rep;
        for (int t = 0; t < eo.degree; ++t) {
            for (int k = std::min(filled + 1, n1_); k >= 1; --k)
                e[k] = big_.add(e[k], big_.mul(e[k - 1], conj));
            ++filled;
            conj = big_.frobenius_pow(conj, static_cast<std::uint64_t>(f_));
        }
    }
    assert(filled == n1_);
    GlobalLabel lab;
    lab.b.assign(n1_ - 1 >= 0 ? n1_ - 1 : 0, big_.zero());
    for (int i = 1; i < n1_; ++i) {
        assert(big_.in_subfield(e[i], static_cast<unsigned>(f_)));
        lab.b[i - 1] = e[i];
    }
    assert(big_.in_subfield(e[n1_], static_cast<unsigned>(f_)));
    lab.b0 = e[n1_]; // determinant
    assert(!lab.b0.is_zero());
    return lab;
}

SsClass GlClassModel::class_power(const SsClass& cls, std::uint64_t k) const {
    std::vector<gf::FieldElem> eigen;
    for (const auto& eo : cls.orbits) {
        gf::FieldElem conj = eo.rep;
        for (int t = 0; t < eo.degree; ++t) {
            eigen.push_back(big_.pow(conj, k));
            conj = big_.frobenius_pow(conj, static_cast<std::uint64_t>(f_));
        }
    }
    return class_from_eigenvalues(std::move(eigen));
}

SsClass GlClassModel::class_frobenius(const SsClass& cls, std::uint64_t e) const {
    std::vector<gf::FieldElem> eigen;
    for (const auto& eo : cls.orbits) {
        gf::FieldElem conj = eo.rep;
        for (int t = 0; t < eo.degree; ++t) {
            eigen.push_back(big_.frobenius_pow(conj, e));
            conj = big_.frobenius_pow(conj, static_cast<std::uint64_t>(f_));
        }
    }
    return class_from_eigenvalues(std::move(eigen));
}

std::int64_t GlClassModel::count_sigma_fixed(const labels::GaloisParam& g) const {
    if (g.p != p_) throw std::invalid_argument("count_sigma_fixed: characteristic mismatch");
    std::int64_t fixed = 0;
    for (const auto& cls : enumerate())
        if (class_frobenius(cls, g.e).key() == cls.key()) ++fixed;
    return fixed;
}

std::int64_t gu3_class_count(std::int64_t p, int f) {
    std::int64_t q = nt::ipow(p, static_cast<std::uint64_t>(f));
    gf::Field big = [&] {
        try {
            return gf::Field(static_cast<std::uint64_t>(p), static_cast<unsigned>(6 * f));
        } catch (const std::overflow_error&) {
            throw UnsupportedError("GU_3 oracle: splitting field exceeds the size bound");
        }
    }();
    auto rho = [&](gf::FieldElem x) { // x -> x^{-q}
        return big.inv(big.frobenius_pow(x, static_cast<std::uint64_t>(f)));
    };

    // eigenvalues of semisimple unitary classes of size 3: the union of
    // mu_{q+1}, F_{q^2}^x and mu_{q^3+1}
    std::set<std::uint32_t> candidates;
    for (auto x : big.subgroup(static_cast<std::uint64_t>(q + 1))) candidates.insert(x.code);
    for (auto x : big.subfield_elems(static_cast<unsigned>(2 * f)))
        if (!x.is_zero()) candidates.insert(x.code);
    for (auto x : big.subgroup(static_cast<std::uint64_t>(q * q * q + 1))) candidates.insert(x.code);

    std::int64_t n1 = 0, n2 = 0, n3 = 0;
    std::set<std::uint32_t> seen;
    for (auto code : candidates) {
        if (seen.count(code)) continue;
        std::vector<std::uint32_t> orbit{code};
        auto cur = rho(big.element(code));
        while (cur.code != code) {
            orbit.push_back(cur.code);
            cur = rho(cur);
        }
        for (auto c : orbit) {
            assert(candidates.count(c));
            seen.insert(c);
        }
        switch (orbit.size()) {
        case 1: ++n1; break;
        case 2: ++n2; break;
        case 3: ++n3; break;
        default: assert(false && "rho-orbit of size > 3 among candidates");
        }
    }
    // multisets of orbits with degrees summing to 3
    return n1 * (n1 + 1) * (n1 + 2) / 6 + n1 * n2 + n3;
}

} // namespace mckay::ssclasses
