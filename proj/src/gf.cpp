#include "mckay/gf.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mckay/numtheory.hpp"

namespace mckay::gf {

namespace {

// Dense polynomial helpers over F_p used only during Field construction
// (irreducibility search), deliberately independent of the field's own
// reduction tables.  Polynomials are coefficient vectors, low degree first,
// with trailing zeros trimmed.

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce mod f (monic)
    std::size_t df = f.size() - 1;
    for (std::size_t k = c.size(); k-- > df;) {
        std::uint64_t t = c[k];
        if (t == 0) continue;
        c[k] = 0;
        for (std::size_t j = 0; j < df; ++j)
            c[k - df + j] = (c[k - df + j] + t * (p - f[j])) % p;
    }
    c.resize(df);
    trim(c);
    return c;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly acc{1};
    while (e > 0) {
        if (e & 1) acc = poly_mul_mod(acc, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    std::size_t df = f.size() - 1;
    trim(a);
    while (a.size() > df) {
        std::uint64_t t = a.back();
        std::size_t k = a.size() - 1;
        a.pop_back();
        if (t == 0) continue;
        for (std::size_t j = 0; j < df; ++j)
            a[k - df + j] = (a[k - df + j] + t * (p - f[j])) % p;
        trim(a);
    }
    return a;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    return nt::modpow(a, p - 2, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b, with b made monic on the fly
        std::uint64_t lead_inv = inv_mod_p(b.back(), p);
        Poly bm(b);
        for (auto& c : bm) c = c * lead_inv % p;
        Poly f = bm;
        Poly r = poly_mod(a, f, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// No irreducible factor of degree <= m/2, hence irreducible for monic f of
// degree m: gcd(x^{p^j} - x, f) constant for j = 1..m/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    std::size_t m = f.size() - 1;
    if (m == 1) return true;
    Poly xp{0, 1}; // running x^{p^j} mod f
    for (std::size_t j = 1; j <= m / 2; ++j) {
        xp = poly_pow_mod(xp, p, f, p);
        Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

} // namespace

Field::Field(std::uint64_t p, unsigned m, std::uint64_t size_bound) : p_(p), m_(m) {
    if (!nt::is_prime(p)) throw std::invalid_argument("Field: p must be prime");
    if (m < 1) throw std::invalid_argument("Field: degree must be >= 1");
    q_ = nt::ipow_checked(p, m, size_bound);

    // Lexicographically smallest monic irreducible of degree m: scan the
    // low-coefficient encodings in ascending order.
    modulus_.assign(m, 0);
    if (m == 1) {
        // modulus x: elements are the constants
    } else {
        bool found = false;
        for (std::uint64_t code = 0; code < q_ && !found; ++code) {
            Poly f(m + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < m_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[m] = 1;
            if (f[0] == 0) continue; // reducible: x divides
            if (is_irreducible(f, p_)) {
                for (unsigned i = 0; i < m_; ++i) modulus_[i] = static_cast<std::uint32_t>(f[i]);
                found = true;
            }
        }
        assert(found && "irreducible polynomial of every degree exists");
    }

    // Reduction table: x^{m+k} mod modulus for k = 0..m-2.
    if (m_ > 1) {
        red_.resize(m_ - 1);
        std::vector<std::uint32_t> cur(m_); // x^m
        for (unsigned i = 0; i < m_; ++i)
            cur[i] = static_cast<std::uint32_t>((p_ - modulus_[i]) % p_);
        red_[0] = cur;
        for (unsigned k = 1; k + 1 < m_; ++k) {
            std::vector<std::uint32_t> nxt(m_, 0);
            std::uint32_t top = cur[m_ - 1];
            for (unsigned i = m_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top != 0)
                for (unsigned i = 0; i < m_; ++i)
                    nxt[i] = static_cast<std::uint32_t>((nxt[i] + std::uint64_t(top) * red_[0][i]) % p_);
            red_[k] = nxt;
            cur = std::move(nxt);
        }
    }

    // Generator: smallest code of full multiplicative order.
    auto primes = nt::prime_factors(q_ - 1);
    for (std::uint32_t code = 1; code < q_; ++code) {
        bool full = true;
        for (auto ell : primes) {
            if (pow_code(code, (q_ - 1) / ell) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            gen_ = code;
            break;
        }
    }
    assert(gen_ != 0);

    bsgs_m_ = static_cast<std::uint32_t>(std::ceil(std::sqrt(double(q_ - 1))));
    if (bsgs_m_ == 0) bsgs_m_ = 1;
    std::uint32_t g = 1;
    baby_.reserve(bsgs_m_ * 2);
    for (std::uint32_t j = 0; j < bsgs_m_; ++j) {
        baby_.emplace(g, j); // first wins: smallest j for repeated values (q=2)
        g = mul_codes(g, gen_);
    }
    giant_ = pow_code(pow_code(gen_, bsgs_m_), q_ - 2); // g^{-bsgs_m_}
}

void Field::check_same(FieldElem a) const {
    if (a.field != this) throw std::logic_error("FieldElem used with the wrong field");
}

FieldElem Field::element(std::uint32_t code) const {
    if (code >= q_) throw std::out_of_range("Field::element: code out of range");
    return {this, code};
}

FieldElem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != m_) throw std::invalid_argument("from_coeffs: wrong length");
    std::uint64_t code = 0;
    for (unsigned i = m_; i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("from_coeffs: coefficient not reduced");
        code = code * p_ + c[i];
    }
    return {this, static_cast<std::uint32_t>(code)};
}

FieldElem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {this, static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem x) const {
    check_same(x);
    std::vector<std::uint32_t> c(m_);
    std::uint64_t code = x.code;
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return c;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    check_same(a);
    check_same(b);
    std::uint64_t code = 0, mul = 1, ca = a.code, cb = b.code;
    for (unsigned i = 0; i < m_; ++i) {
        code += (ca % p_ + cb % p_) % p_ * mul;
        ca /= p_;
        cb /= p_;
        mul *= p_;
    }
    return {this, static_cast<std::uint32_t>(code)};
}

FieldElem Field::neg(FieldElem a) const {
    check_same(a);
    std::uint64_t code = 0, mul = 1, ca = a.code;
    for (unsigned i = 0; i < m_; ++i) {
        code += (p_ - ca % p_) % p_ * mul;
        ca /= p_;
        mul *= p_;
    }
    return {this, static_cast<std::uint32_t>(code)};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_codes(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t da[24], db[24];
    std::uint64_t conv[48] = {0};
    std::uint64_t ca = a, cb = b;
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = ca % p_;
        ca /= p_;
        db[i] = cb % p_;
        cb /= p_;
    }
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) conv[i + j] += da[i] * db[j];
    }
    for (unsigned k = 2 * m_ - 2; k >= m_ && k != unsigned(-1); --k) {
        std::uint64_t t = conv[k] % p_;
        if (t == 0) continue;
        const auto& r = red_[k - m_];
        for (unsigned i = 0; i < m_; ++i) conv[i] += t * r[i];
        conv[k] = 0;
        if (k == m_) break;
    }
    std::uint64_t code = 0, mul = 1;
    for (unsigned i = 0; i < m_; ++i) {
        code += conv[i] % p_ * mul;
        mul *= p_;
    }
    return static_cast<std::uint32_t>(code);
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    check_same(a);
    check_same(b);
    return {this, mul_codes(a.code, b.code)};
}

std::uint32_t Field::pow_code(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint32_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul_codes(acc, a);
        a = mul_codes(a, a);
        e >>= 1;
    }
    return acc;
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
    check_same(a);
    return {this, pow_code(a.code, e)};
}

FieldElem Field::inv(FieldElem a) const {
    check_same(a);
    if (a.code == 0) throw std::domain_error("Field::inv: zero");
    return {this, pow_code(a.code, q_ - 2)};
}

FieldElem Field::frobenius_pow(FieldElem x, std::uint64_t e) const {
    check_same(x);
    if (x.code == 0) return x;
    if (q_ == 2) return x;
    std::uint64_t t = nt::modpow(p_, e, q_ - 1); // x^(p^e) = x^(p^e mod (q-1)) on units
    if (t == 0) t = q_ - 1;
    return {this, pow_code(x.code, t)};
}

std::uint64_t Field::count_frobenius_fixed(std::uint64_t e) const {
    std::uint64_t s = std::gcd(e, static_cast<std::uint64_t>(m_));
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < s; ++i) r *= p_;
    return r;
}

std::uint64_t Field::dlog(FieldElem x) const {
    check_same(x);
    if (x.code == 0) throw std::domain_error("Field::dlog: zero");
    std::uint32_t y = x.code;
    std::uint64_t steps = (q_ - 2) / bsgs_m_ + 1;
    for (std::uint64_t i = 0; i < steps; ++i) {
        auto it = baby_.find(y);
        if (it != baby_.end()) {
            std::uint64_t d = i * bsgs_m_ + it->second;
            return d % (q_ - 1);
        }
        y = mul_codes(y, giant_);
    }
    assert(false && "dlog: generator does not generate");
    return 0;
}

std::uint64_t Field::mult_order(FieldElem x) const {
    check_same(x);
    if (x.code == 0) throw std::domain_error("mult_order: zero");
    std::uint64_t n = (q_ - 1) / std::gcd(q_ - 1, dlog(x));
    return n == 0 ? 1 : n;
}

FieldElem Field::root_of_unity(std::uint64_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        throw std::invalid_argument("root_of_unity: order must divide q-1");
    return {this, pow_code(gen_, (q_ - 1) / n)};
}

std::vector<FieldElem> Field::subgroup(std::uint64_t n) const {
    FieldElem w = root_of_unity(n);
    std::vector<FieldElem> out;
    out.reserve(n);
    FieldElem cur = one();
    for (std::uint64_t i = 0; i < n; ++i) {
        out.push_back(cur);
        cur = mul(cur, w);
    }
    return out;
}

std::vector<FieldElem> Field::subfield_elems(unsigned d) const {
    if (d == 0 || m_ % d != 0) throw std::invalid_argument("subfield_elems: degree must divide m");
    std::uint64_t sub_order = 1;
    for (unsigned i = 0; i < d; ++i) sub_order *= p_;
    std::vector<FieldElem> out;
    out.reserve(sub_order);
    out.push_back(zero());
    auto units = subgroup(sub_order - 1);
    out.insert(out.end(), units.begin(), units.end());
    return out;
}

bool Field::in_subfield(FieldElem x, unsigned d) const {
    check_same(x);
    return frobenius_pow(x, d) == x;
}

std::string Field::to_string(FieldElem x) const {
    check_same(x);
    auto c = coeffs(x);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < m_; ++i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FieldElem embed(FieldElem x, const Field& target) {
    const Field& src = *x.field;
    if (&src == &target) return x;
    if (src.characteristic() != target.characteristic())
        throw std::invalid_argument("embed: characteristics differ");
    if (target.degree() % src.degree() != 0)
        throw std::invalid_argument("embed: source degree must divide target degree");
    if (x.is_zero()) return target.zero();
    std::uint64_t t = (target.order() - 1) / (src.order() - 1);
    unsigned __int128 exp = static_cast<unsigned __int128>(src.dlog(x)) * t % (target.order() - 1);
    return target.pow(target.generator(), static_cast<std::uint64_t>(exp));
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return field->add(*this, o); }
FieldElem FieldElem::operator-(const FieldElem& o) const { return field->sub(*this, o); }
FieldElem FieldElem::operator*(const FieldElem& o) const { return field->mul(*this, o); }
FieldElem FieldElem::operator-() const { return field->neg(*this); }

} // namespace mckay::gf
