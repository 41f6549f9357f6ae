#include "fewnomial/modp.hpp"

#include "fewnomial/error.hpp"

namespace fewnomial::modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) raise(ErrorKind::DivisionByZero, "inverse of 0 mod p");
    return pow(a % p, p - 2, p);
}

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = add(x, y, p);
    }
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = sub(x, y, p);
    }
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
    }
    return trim(std::move(r));
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
    Poly r = a;
    for (auto& x : r) x = mul(x, c % p, p);
    return trim(std::move(r));
}

void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, std::uint64_t p) {
    if (b.empty()) raise(ErrorKind::DivisionByZero, "division by zero polynomial mod p");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    std::uint64_t lead_inv = inv(b.back(), p);
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        std::uint64_t c = mul(r.back(), lead_inv, p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = sub(r[shift + i], mul(c, b[i], p), p);
        r = trim(std::move(r));
    }
    q = trim(std::move(q));
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly q, r;
    divrem(a, b, q, r, p);
    return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, std::uint64_t p) {
    Poly r0 = trim(a), r1 = trim(b);
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        Poly q, r;
        divrem(r0, r1, q, r, p);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        g = {};
        s = {};
        t = {};
        return;
    }
    std::uint64_t c = inv(r0.back(), p);
    g = scale(r0, c, p);
    s = scale(s0, c, p);
    t = scale(t0, c, p);
}

Poly derivative(const Poly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1, 0);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p, p);
    return trim(std::move(r));
}

Poly make_monic(const Poly& f, std::uint64_t p) {
    if (f.empty() || f.back() == 1) return f;
    return scale(f, inv(f.back(), p), p);
}

Poly pow_mod(const Poly& a, const Int& e, const Poly& f, std::uint64_t p) {
    Poly result{1 % p};
    Poly base = rem(a, f, p);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = rem(mul(result, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        k >>= 1;
    }
    return trim(std::move(result));
}

Poly reduce(const std::vector<Int>& f, std::uint64_t p) {
    Poly r(f.size(), 0);
    Int pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int m = f[i] % pz;
        if (m < 0) m += pz;
        r[i] = m.get_ui();
    }
    return trim(std::move(r));
}

} // namespace fewnomial::modp
