#include "mckay/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mckay/numtheory.hpp"

namespace mckay::lie {

namespace {

// Cartan matrix entries a[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering.
std::vector<std::vector<std::int64_t>> cartan_entries(char type, int n) {
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; }; // 0-based
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B': // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;
        break;
    case 'C': // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        // chain 1-3-4-5-6(-7etc), node 2 hangs off node 4
        link(0, 2);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        link(1, 3);
        break;
    case 'F':
        link(0, 1);
        link(2, 3);
        a[1][2] = -2;
        a[2][1] = -1;
        break;
    case 'G':
        a[0][1] = -1;
        a[1][0] = -3;
        break;
    default:
        throw std::invalid_argument("unknown type");
    }
    return a;
}

void validate_pair(char type, int n) {
    bool ok = false;
    switch (type) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
    }
    if (!ok) throw std::invalid_argument(std::string("invalid root system ") + type +
                                         std::to_string(n));
}

} // namespace

std::string RootSystem::name() const { return std::string(1, type) + std::to_string(rank); }

RootSystem root_system(char type, int rank) {
    validate_pair(type, rank);
    int n = rank;
    auto a = cartan_entries(type, n);

    RootSystem rs;
    rs.type = type;
    rs.rank = n;
    rs.cartan = zmod::IntMat::from_rows(a, n);

    // Closure of the simple roots under root strings, processed by height.
    // For a positive root r, <r, alpha_i^vee> = sum_j r_j a[j][i]; the string
    // through alpha_i gives q = p - <r, alpha_i^vee> further roots upward.
    std::set<std::vector<int>> roots;
    std::vector<std::vector<std::vector<int>>> by_height(1);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        by_height[0].push_back(e);
    }
    for (std::size_t h = 0; h < by_height.size(); ++h) {
        for (const auto& r : by_height[h]) {
            for (int i = 0; i < n; ++i) {
                std::int64_t pairing = 0;
                for (int j = 0; j < n; ++j) pairing += std::int64_t(r[j]) * a[j][i];
                int down = 0;
                {
                    std::vector<int> s = r;
                    while (true) {
                        s[i] -= 1;
                        bool nonneg = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; });
                        if (!nonneg || !roots.count(s)) break;
                        ++down;
                    }
                }
                if (down - pairing >= 1) {
                    std::vector<int> up = r;
                    up[i] += 1;
                    if (roots.insert(up).second) {
                        if (by_height.size() < h + 2) by_height.resize(h + 2);
                        by_height[h + 1].push_back(up);
                    }
                }
            }
        }
    }
    rs.positive_roots.assign(roots.begin(), roots.end());

    auto height = [](const std::vector<int>& r) {
        return std::accumulate(r.begin(), r.end(), 0);
    };
    rs.highest_root = rs.positive_roots.front();
    for (const auto& r : rs.positive_roots)
        if (height(r) > height(rs.highest_root)) rs.highest_root = r;
    int top = height(rs.highest_root);
    assert(std::count_if(rs.positive_roots.begin(), rs.positive_roots.end(),
                         [&](const auto& r) { return height(r) == top; }) == 1);
    (void)top;

    for (int c : rs.highest_root)
        for (auto p : nt::prime_factors(static_cast<std::uint64_t>(c)))
            rs.bad_primes.insert(static_cast<std::int64_t>(p));

    rs.fund_group_order = zmod::det(rs.cartan).get_si();
    assert(rs.fund_group_order >= 1);
    // center of the simply connected group: cyclic of order det(cartan),
    // except D_even where it is Z/2 x Z/2
    if (type == 'D' && n % 2 == 0)
        rs.fund_group_exponent = 2;
    else
        rs.fund_group_exponent = rs.fund_group_order;
    return rs;
}

bool is_good_prime(const RootSystem& rs, std::int64_t p) {
    if (!nt::is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("is_good_prime: p must be prime");
    return rs.bad_primes.count(p) == 0;
}

std::int64_t CenterFactor::value(std::int64_t q) const {
    return nt::ipow(q, static_cast<std::uint64_t>(qexp)) + offset;
}

int TwistedGroup::d_p(std::int64_t p) const {
    if (roots.type == 'D' && roots.rank % 2 == 0) return p == 2 ? 0 : 2;
    std::int64_t m = roots.fund_group_order;
    while (m % p == 0) m /= p;
    return m > 1 ? 1 : 0;
}

std::optional<std::string> TwistedGroup::excluded(std::int64_t q) const {
    char t = roots.type;
    if (q == 2 && w == 2 && t == 'D') return "D_n with q=2, w=2";
    if (q == 2 && w == 1 && (t == 'B' || t == 'C' || t == 'D' || t == 'G' || t == 'F'))
        return "B_n, C_n, D_n, G_2, F_4 with q=2, w=1";
    if (q == 3 && w == 1 && t == 'G') return "G_2 with q=3, w=1";
    return std::nullopt;
}

std::string TwistedGroup::name(std::int64_t q) const {
    std::string s = w > 1 ? std::to_string(w) : "";
    return s + roots.name() + "(q=" + std::to_string(q) + ")";
}

TwistedGroup twist(RootSystem rs, int w) {
    int n = rs.rank;
    TwistedGroup tg;
    tg.w = w;
    tg.tau.resize(n);
    for (int i = 0; i < n; ++i) tg.tau[i] = i;

    char t = rs.type;
    if (w == 1) {
        // identity
    } else if (w == 2 && t == 'A' && n >= 2) {
        for (int i = 0; i < n; ++i) tg.tau[i] = n - 1 - i;
    } else if (w == 2 && t == 'D') {
        std::swap(tg.tau[n - 2], tg.tau[n - 1]);
    } else if (w == 3 && t == 'D' && n == 4) {
        tg.tau[0] = 2; // 1 -> 3 -> 4 -> 1, node 2 fixed (0-based: 0->2->3->0)
        tg.tau[2] = 3;
        tg.tau[3] = 0;
    } else if (w == 2 && t == 'E' && n == 6) {
        tg.tau = {5, 1, 4, 3, 2, 0};
    } else {
        throw std::invalid_argument("unsupported (type, w) twist");
    }

    // tau must preserve the Cartan matrix
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            assert(rs.cartan.at(tg.tau[i], tg.tau[j]) == rs.cartan.at(i, j));
    {
        std::vector<int> power = tg.tau;
        for (int k = 1; k < w; ++k) {
            std::vector<int> nxt(n);
            for (int i = 0; i < n; ++i) nxt[i] = tg.tau[power[i]];
            power = nxt;
        }
        for (int i = 0; i < n; ++i) assert(power[i] == i);
    }

    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        int j = i;
        do {
            orbit.push_back(j);
            seen[j] = true;
            j = tg.tau[j];
        } while (j != i);
        std::sort(orbit.begin(), orbit.end());
        tg.orbits.push_back(orbit);
        tg.orbit_reps.push_back(orbit.front());
    }
    tg.num_orbits = static_cast<int>(tg.orbits.size());

    if (t == 'D' && n % 2 == 0)
        tg.d = 2;
    else
        tg.d = rs.fund_group_order > 1 ? 1 : 0;

    bool d_even = (t == 'D' && n % 2 == 0);
    if (d_even && w == 2)
        tg.dbar = 1;
    else if (d_even && w == 3)
        tg.dbar = 0;
    else
        tg.dbar = tg.d;

    // orders of the cyclic factors of Z(G~^F) as functions of q
    if (w == 1) {
        tg.center_orders.assign(tg.dbar, CenterFactor{1, -1}); // q - 1 each
    } else if (t == 'A') {
        tg.center_orders = {CenterFactor{1, 1}}; // q + 1
    } else if (t == 'D' && n % 2 == 0 && w == 2) {
        tg.center_orders = {CenterFactor{2, -1}}; // q^2 - 1
    } else if (t == 'D' && n % 2 == 1) {
        tg.center_orders = {CenterFactor{1, 1}};
    } else if (t == 'E') {
        tg.center_orders = {CenterFactor{1, 1}};
    } // 3D_4: dbar = 0, none
    assert(static_cast<int>(tg.center_orders.size()) == tg.dbar);

    tg.roots = std::move(rs);
    return tg;
}

} // namespace mckay::lie
