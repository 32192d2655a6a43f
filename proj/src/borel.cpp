#include "mckay/borel.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "mckay/errors.hpp"
#include "mckay/numtheory.hpp"

namespace mckay::borel {

namespace {
constexpr std::int64_t kStratumBound = std::int64_t(1) << 22;
constexpr std::int64_t kPartitionBound = std::int64_t(1) << 13;
} // namespace

struct BorelModel::Stratum {
    std::vector<int> support; // ascending 0-based indices
    std::int64_t stratum_size = 1;
    std::vector<std::vector<std::int64_t>> image; // subgroup of (Z/N)^{|S|}, ascending codes
    std::vector<std::vector<std::int64_t>> orbit_reps; // canonical (min-code) coset reps
    zmod::GroupShape stab;

    std::int64_t encode(const std::vector<std::int64_t>& v, std::int64_t n) const {
        std::int64_t code = 0;
        for (std::size_t t = v.size(); t-- > 0;) code = code * n + v[t];
        return code;
    }
    std::vector<std::int64_t> shift(const std::vector<std::int64_t>& v,
                                    const std::vector<std::int64_t>& by,
                                    std::int64_t n) const {
        std::vector<std::int64_t> out(v.size());
        for (std::size_t t = 0; t < v.size(); ++t) out[t] = (v[t] + by[t]) % n;
        return out;
    }
    // canonical representative of the coset through v
    std::vector<std::int64_t> canonical(const std::vector<std::int64_t>& v, std::int64_t n) const {
        std::vector<std::int64_t> best = v;
        std::int64_t best_code = encode(v, n);
        for (const auto& g : image) {
            auto cand = shift(v, g, n);
            std::int64_t code = encode(cand, n);
            if (code < best_code) {
                best_code = code;
                best = std::move(cand);
            }
        }
        return best;
    }
};

BorelModel::BorelModel(const lie::RootSystem& rs, std::int64_t p, int f)
    : tg_(lie::twist(rs, 1)),
      p_(p),
      f_(f),
      q_(nt::ipow(p, static_cast<std::uint64_t>(f))),
      N_(q_ - 1),
      n_(rs.rank),
      fq_(static_cast<std::uint64_t>(p), static_cast<unsigned>(f)) {
    if (auto row = tg_.excluded(q_)) throw ExcludedError(tg_.name(q_), *row);
    d_ = tg_.d;
    cartan_.assign(n_, std::vector<std::int64_t>(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) cartan_[i][j] = tg_.roots.cartan.at(i, j).get_si();
}

BorelModel::~BorelModel() = default;

zmod::IntMat BorelModel::torus_action_matrix(const lie::RootSystem& rs) { return rs.cartan; }

std::vector<std::int64_t> BorelModel::psi_one() const {
    return std::vector<std::int64_t>(n_, 0); // all coordinates 1 = g^0
}

std::int64_t BorelModel::total_characters() const {
    return nt::ipow(q_, static_cast<std::uint64_t>(n_));
}

const std::vector<BorelModel::Stratum>& BorelModel::strata() const {
    if (strata_) return *strata_;
    if (nt::ipow(q_, static_cast<std::uint64_t>(n_)) > kStratumBound)
        throw UnsupportedError("B-level enumeration exceeds the desk-scale bound for " +
                               tg_.name(q_));
    auto out = std::make_unique<std::vector<Stratum>>();
    for (int mask = 0; mask < (1 << n_); ++mask) {
        Stratum st;
        for (int i = 0; i < n_; ++i)
            if (mask & (1 << i)) st.support.push_back(i);
        int k = static_cast<int>(st.support.size());
        for (int t = 0; t < k; ++t) st.stratum_size *= N_;

        // subgroup of (Z/N)^k generated by the S-rows of the Cartan columns
        std::vector<char> in_image(st.stratum_size, 0);
        std::vector<std::vector<std::int64_t>> frontier;
        std::vector<std::int64_t> zero(k, 0);
        in_image[0] = 1;
        frontier.push_back(zero);
        st.image.push_back(zero);
        std::vector<std::vector<std::int64_t>> gens;
        for (int j = 0; j < n_; ++j) {
            std::vector<std::int64_t> g(k);
            for (int t = 0; t < k; ++t) {
                std::int64_t v = cartan_[st.support[t]][j] % N_;
                if (v < 0) v += N_;
                g[t] = v;
            }
            gens.push_back(std::move(g));
        }
        while (!frontier.empty()) {
            auto cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                auto nxt = st.shift(cur, g, N_);
                auto code = st.encode(nxt, N_);
                if (!in_image[code]) {
                    in_image[code] = 1;
                    st.image.push_back(nxt);
                    frontier.push_back(nxt);
                }
            }
        }
        std::sort(st.image.begin(), st.image.end(),
                  [&](const auto& a, const auto& b) { return st.encode(a, N_) < st.encode(b, N_); });

        // cosets: scanning codes in ascending order makes the first element
        // of each coset its canonical representative
        std::vector<char> visited(st.stratum_size, 0);
        for (std::int64_t code = 0; code < st.stratum_size; ++code) {
            if (visited[code]) continue;
            std::vector<std::int64_t> v(k);
            std::int64_t c = code;
            for (int t = 0; t < k; ++t) {
                v[t] = c % N_;
                c /= N_;
            }
            st.orbit_reps.push_back(v);
            for (const auto& g : st.image) visited[st.encode(st.shift(v, g, N_), N_)] = 1;
        }

        // stabilizer: kernel of the S-rows of the Cartan matrix mod N
        zmod::IntMat cs(k, n_);
        for (int t = 0; t < k; ++t)
            for (int j = 0; j < n_; ++j) cs.at(t, j) = cartan_[st.support[t]][j];
        st.stab = zmod::kernel_shape(cs, N_);
        assert(st.stab.order() * static_cast<std::int64_t>(st.image.size()) ==
               nt::ipow(N_, static_cast<std::uint64_t>(n_)));

        out->push_back(std::move(st));
    }
    strata_ = std::move(out);
    return *strata_;
}

std::vector<OrbitClass> BorelModel::enum_orbits(Level level) const {
    std::vector<OrbitClass> out;
    if (level == Level::Btilde) {
        for (int mask = 0; mask < (1 << n_); ++mask) {
            OrbitClass oc;
            oc.level = level;
            oc.orbit_rep.assign(n_, -1);
            oc.orbit_size = 1;
            for (int i = 0; i < n_; ++i)
                if (mask & (1 << i)) {
                    oc.support.push_back(i);
                    oc.orbit_rep[i] = 0;
                    oc.orbit_size *= N_;
                }
            int free_rank = n_ + d_ - static_cast<int>(oc.support.size());
            oc.stabilizer = zmod::free_shape(free_rank, N_);
            oc.lambda_count = nt::ipow(N_, static_cast<std::uint64_t>(free_rank));
            out.push_back(std::move(oc));
        }
        return out;
    }
    for (const auto& st : strata()) {
        for (const auto& rep : st.orbit_reps) {
            OrbitClass oc;
            oc.level = Level::B;
            oc.support = st.support;
            oc.orbit_rep.assign(n_, -1);
            for (std::size_t t = 0; t < st.support.size(); ++t)
                oc.orbit_rep[st.support[t]] = rep[t];
            oc.orbit_size = static_cast<std::int64_t>(st.image.size());
            oc.stabilizer = st.stab;
            oc.lambda_count = st.stab.order();
            out.push_back(std::move(oc));
        }
    }
    return out;
}

std::int64_t BorelModel::count_pprime(Level level) const {
    std::int64_t total = 0;
    for (const auto& oc : enum_orbits(level)) total += oc.lambda_count;
    return total;
}

std::int64_t BorelModel::kappa_dlog(const labels::GaloisParam& g) const {
    if (g.p != p_) throw std::invalid_argument("GaloisParam characteristic mismatch");
    if (N_ == 0) return 0;
    return static_cast<std::int64_t>(fq_.dlog(fq_.from_int(g.kappa)));
}

std::int64_t BorelModel::count_sigma_fixed(Level level, const labels::GaloisParam& g) const {
    std::int64_t c = kappa_dlog(g);
    std::int64_t total = 0;
    if (level == Level::Btilde) {
        // adjoint action is coordinatewise, so every orbit is kappa-stable
        std::int64_t fm = g.fixed_in_cyclic(N_);
        for (int mask = 0; mask < (1 << n_); ++mask) {
            int s = __builtin_popcount(static_cast<unsigned>(mask));
            total += nt::ipow(fm, static_cast<std::uint64_t>(n_ + d_ - s));
        }
        return total;
    }
    for (const auto& st : strata()) {
        std::int64_t fixed_lambda = 1;
        for (auto div : st.stab.divisors) fixed_lambda *= g.fixed_in_cyclic(div);
        std::vector<std::int64_t> shift_vec(st.support.size(), c % std::max<std::int64_t>(N_, 1));
        for (const auto& rep : st.orbit_reps) {
            auto moved = st.canonical(st.shift(rep, shift_vec, N_), N_);
            if (moved == rep) total += fixed_lambda;
        }
    }
    return total;
}

std::int64_t BorelModel::count_sigma_fixed_inertia(const labels::GaloisParam& g) const {
    std::int64_t c = kappa_dlog(g);
    std::int64_t total = 0;
    for (int mask = 0; mask < (1 << n_); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < n_; ++i)
            if (mask & (1 << i)) support.push_back(i);
        int k = static_cast<int>(support.size());
        zmod::IntMat cs(k, n_);
        for (int t = 0; t < k; ++t)
            for (int j = 0; j < n_; ++j) cs.at(t, j) = cartan_[support[t]][j];

        // the canonical torus element realizing sigma on phi_S acts as the
        // scalar kappa: it lies in I_B~(phi_S) B iff C|_S x = c*1 is solvable
        if (!zmod::solve_mod(cs, std::vector<std::int64_t>(k, c), N_).has_value()) continue;

        auto snf = zmod::smith(cs);
        std::int64_t orbit_count = 1;
        for (int t = 0; t < k; ++t) {
            std::int64_t dt = t < std::min(k, n_) ? snf.d.at(t, t).get_si() : 0;
            orbit_count *= std::gcd(dt, N_) == 0 ? N_ : std::gcd(dt, N_);
        }
        std::int64_t fixed_lambda = 1;
        for (auto div : zmod::kernel_shape(cs, N_).divisors)
            fixed_lambda *= g.fixed_in_cyclic(div);
        total += orbit_count * fixed_lambda;
    }
    return total;
}

CentralPartition BorelModel::central_partition(const labels::GaloisParam& g) const {
    std::int64_t c = kappa_dlog(g);
    std::int64_t space = nt::ipow(std::max<std::int64_t>(N_, 1), static_cast<std::uint64_t>(n_));
    if (space > kPartitionBound)
        throw UnsupportedError("central partition exceeds the desk-scale bound for " +
                               tg_.name(q_));

    auto decode = [&](std::int64_t code) {
        std::vector<std::int64_t> v(n_);
        for (int i = 0; i < n_; ++i) {
            v[i] = code % N_;
            code /= N_;
        }
        return v;
    };
    auto encode = [&](const std::vector<std::int64_t>& v) {
        std::int64_t code = 0;
        for (int i = n_; i-- > 0;) code = code * N_ + v[i];
        return code;
    };
    auto dot = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::int64_t acc = 0;
        for (int i = 0; i < n_; ++i) acc = (acc + a[i] * b[i]) % N_;
        return acc;
    };

    if (N_ == 1) space = 1;

    // Z(G^F): kernel of the full Cartan action
    std::vector<std::vector<std::int64_t>> center;
    for (std::int64_t code = 0; code < space; ++code) {
        auto x = decode(code);
        bool ker = true;
        for (int i = 0; i < n_ && ker; ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < n_; ++j) acc += cartan_[i][j] * x[j];
            ker = (acc % N_ == 0);
        }
        if (ker) center.push_back(std::move(x));
    }
    // its annihilator Z^perp in the dual
    std::vector<std::vector<std::int64_t>> zperp;
    for (std::int64_t code = 0; code < space; ++code) {
        auto y = decode(code);
        bool ann = true;
        for (const auto& z : center)
            if (dot(y, z) != 0) { ann = false; break; }
        if (ann) zperp.push_back(std::move(y));
    }

    std::int64_t t_lambda = 0; // p^e - 1 mod N
    if (N_ > 1)
        t_lambda = static_cast<std::int64_t>(
            (nt::modpow(static_cast<std::uint64_t>(p_), g.e, static_cast<std::uint64_t>(N_)) +
             static_cast<std::uint64_t>(N_) - 1) %
            static_cast<std::uint64_t>(N_));

    CentralPartition result;
    result.center_order = static_cast<std::int64_t>(center.size());

    for (const auto& st : strata()) {
        // explicit stabilizer K and its annihilator
        std::vector<std::vector<std::int64_t>> K;
        for (std::int64_t code = 0; code < space; ++code) {
            auto x = decode(code);
            bool ker = true;
            for (int i : st.support) {
                std::int64_t acc = 0;
                for (int j = 0; j < n_; ++j) acc += cartan_[i][j] * x[j];
                if (acc % N_ != 0) { ker = false; break; }
            }
            if (ker) K.push_back(std::move(x));
        }
        // the explicit kernel must match the SNF-derived shape
        assert(static_cast<std::int64_t>(K.size()) == st.stab.order());
        std::unordered_set<std::int64_t> kperp;
        std::vector<std::vector<std::int64_t>> kperp_vecs;
        for (std::int64_t code = 0; code < space; ++code) {
            auto y = decode(code);
            bool ann = true;
            for (const auto& x : K)
                if (dot(y, x) != 0) { ann = false; break; }
            if (ann) {
                kperp.insert(code);
                kperp_vecs.push_back(std::move(y));
            }
        }

        // lambda in Irr(K) <-> cosets of K^perp; scan gives canonical reps
        std::vector<std::vector<std::int64_t>> lambdas;
        std::vector<char> seen(space, 0);
        for (std::int64_t code = 0; code < space; ++code) {
            if (seen[code]) continue;
            auto y = decode(code);
            lambdas.push_back(y);
            for (const auto& w : kperp_vecs) {
                std::vector<std::int64_t> s(n_);
                for (int i = 0; i < n_; ++i) s[i] = (y[i] + w[i]) % N_;
                seen[encode(s)] = 1;
            }
        }
        assert(static_cast<std::int64_t>(lambdas.size()) == st.stab.order());

        std::vector<std::int64_t> shift_vec(st.support.size(), N_ > 1 ? c % N_ : 0);
        for (const auto& y : lambdas) {
            // central character: the class of y modulo Z^perp, canonical rep
            std::int64_t best = -1;
            std::vector<std::int64_t> key;
            for (const auto& w : zperp) {
                std::vector<std::int64_t> s(n_);
                for (int i = 0; i < n_; ++i) s[i] = (y[i] + w[i]) % N_;
                std::int64_t code = encode(s);
                if (best < 0 || code < best) {
                    best = code;
                    key = std::move(s);
                }
            }
            bool lambda_fixed = kperp.count([&] {
                std::vector<std::int64_t> ty(n_);
                for (int i = 0; i < n_; ++i) ty[i] = t_lambda * y[i] % N_;
                return encode(ty);
            }()) > 0;

            auto& cell = result.classes[key];
            for (const auto& rep : st.orbit_reps) {
                auto moved = st.canonical(st.shift(rep, shift_vec, N_), N_);
                bool orbit_fixed = (moved == rep);
                cell.first += 1;
                if (orbit_fixed && lambda_fixed) cell.second += 1;
            }
        }
    }
    return result;
}

std::int64_t closed_form_type_c(int n, std::int64_t p, int f, std::uint64_t e, bool c_even) {
    if (p == 2) throw std::invalid_argument("closed_form_type_c: p must be odd");
    if (n < 1 || f < 1) throw std::invalid_argument("closed_form_type_c: bad parameters");
    std::int64_t s = std::gcd(static_cast<std::int64_t>(e), static_cast<std::int64_t>(f));
    std::int64_t hi = nt::ipow(p, static_cast<std::uint64_t>(s * n));
    std::int64_t lo = nt::ipow(p, static_cast<std::uint64_t>(s * (n - 1)));
    return c_even ? hi + 3 * lo : hi - lo;
}

} // namespace mckay::borel
