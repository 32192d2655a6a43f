#include "mckay/labels.hpp"

#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mckay/errors.hpp"
#include "mckay/numtheory.hpp"

namespace mckay::labels {

GaloisParam::GaloisParam(std::int64_t p_in, std::uint64_t e_in, std::int64_t kappa_in)
    : p(p_in), e(e_in), kappa(kappa_in) {
    if (!nt::is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("GaloisParam: p must be prime");
    kappa %= p;
    if (kappa < 0) kappa += p;
    if (kappa == 0) throw std::invalid_argument("GaloisParam: kappa must be a unit mod p");
}

std::int64_t GaloisParam::s(std::int64_t m) const {
    return std::gcd(static_cast<std::int64_t>(e), m);
}

std::int64_t GaloisParam::k_mod(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("k_mod: modulus must be >= 1");
    return static_cast<std::int64_t>(
        nt::modpow(static_cast<std::uint64_t>(p), e, static_cast<std::uint64_t>(n)));
}

std::int64_t GaloisParam::fixed_in_cyclic(std::int64_t z) const {
    return nt::gcd_pow_minus_one(p, e, z);
}

LabelSpace::LabelSpace(const lie::TwistedGroup& tg, std::int64_t p, int f)
    : tg_(&tg),
      p_(p),
      f_(f),
      q_(nt::ipow(p, static_cast<std::uint64_t>(f))),
      ambient_(static_cast<std::uint64_t>(p), static_cast<unsigned>(f * tg.w)) {
    if (auto row = tg.excluded(q_)) throw ExcludedError(tg.name(q_), *row);
    for (const auto& cf : tg_->center_orders) {
        std::int64_t z = cf.value(q_);
        assert((ambient_.order() - 1) % static_cast<std::uint64_t>(z) == 0);
        z_.push_back(z);
    }
    for (const auto& orbit : tg_->orbits)
        comp_field_degree_.push_back(f * static_cast<int>(orbit.size()));
}

std::int64_t LabelSpace::size() const {
    std::int64_t total = 1;
    for (auto z : z_) total = nt::checked_mul(total, z);
    for (auto deg : comp_field_degree_)
        total = nt::checked_mul(total, nt::ipow(p_, static_cast<std::uint64_t>(deg)));
    return total;
}

bool LabelSpace::is_valid(const Label& lab) const {
    if (lab.c0.size() != z_.size() || lab.ci.size() != comp_field_degree_.size()) return false;
    for (std::size_t j = 0; j < z_.size(); ++j) {
        if (lab.c0[j].is_zero()) return false;
        if (ambient_.pow(lab.c0[j], static_cast<std::uint64_t>(z_[j])) != ambient_.one())
            return false;
    }
    for (std::size_t i = 0; i < lab.ci.size(); ++i)
        if (!ambient_.in_subfield(lab.ci[i], static_cast<unsigned>(comp_field_degree_[i])))
            return false;
    return true;
}

Label LabelSpace::act(const Label& lab, const GaloisParam& g) const {
    Label out = lab;
    for (auto& x : out.c0) x = ambient_.frobenius_pow(x, g.e);
    for (auto& x : out.ci) x = ambient_.frobenius_pow(x, g.e);
    return out;
}

std::int64_t LabelSpace::count_fixed(const GaloisParam& g) const {
    if (g.p != p_) throw std::invalid_argument("count_fixed: characteristic mismatch");
    std::int64_t total = 1;
    for (auto z : z_) total = nt::checked_mul(total, g.fixed_in_cyclic(z));
    for (auto deg : comp_field_degree_) {
        std::int64_t s = std::gcd(static_cast<std::int64_t>(g.e), static_cast<std::int64_t>(deg));
        total = nt::checked_mul(total, nt::ipow(p_, static_cast<std::uint64_t>(s)));
    }
    return total;
}

void LabelSpace::for_each_label(const std::function<void(const Label&)>& fn) const {
    std::vector<std::vector<gf::FieldElem>> pools;
    for (auto z : z_) pools.push_back(ambient_.subgroup(static_cast<std::uint64_t>(z)));
    for (auto deg : comp_field_degree_)
        pools.push_back(ambient_.subfield_elems(static_cast<unsigned>(deg)));

    Label lab;
    lab.c0.resize(z_.size(), ambient_.zero());
    lab.ci.resize(comp_field_degree_.size(), ambient_.zero());
    std::vector<std::size_t> idx(pools.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < pools.size(); ++k) {
            auto v = pools[k][idx[k]];
            if (k < z_.size()) lab.c0[k] = v;
            else lab.ci[k - z_.size()] = v;
        }
        fn(lab);
        std::size_t k = 0;
        for (; k < pools.size(); ++k) {
            if (++idx[k] < pools[k].size()) break;
            idx[k] = 0;
        }
        if (k == pools.size()) break;
    }
}

std::int64_t LabelSpace::count_fixed_enumerated(const GaloisParam& g) const {
    if (g.p != p_) throw std::invalid_argument("count_fixed_enumerated: characteristic mismatch");
    std::int64_t fixed = 0;
    for_each_label([&](const Label& lab) {
        if (act(lab, g) == lab) ++fixed;
    });
    return fixed;
}

std::vector<gf::FieldElem> LabelSpace::central_character(const Label& lab) const {
    return lab.c0;
}

std::int64_t LabelSpace::central_class_count() const {
    std::int64_t total = 1;
    for (auto z : z_) total = nt::checked_mul(total, z);
    return total;
}

std::string LabelSpace::to_string(const Label& lab) const {
    std::ostringstream os;
    auto put = [&](gf::FieldElem x) {
        if (x.is_zero()) os << "0";
        else os << "g^" << ambient_.dlog(x);
    };
    os << "(";
    for (std::size_t j = 0; j < lab.c0.size(); ++j) {
        if (j) os << ",";
        put(lab.c0[j]);
    }
    os << ";";
    for (std::size_t i = 0; i < lab.ci.size(); ++i) {
        if (i) os << ",";
        put(lab.ci[i]);
    }
    os << ")";
    return os.str();
}

} // namespace mckay::labels
