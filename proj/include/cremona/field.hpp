#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

using code_t = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomials over GF(p), coefficients low -> high, used only for
// modulus bookkeeping during field construction
using PPoly = std::vector<code_t>;

inline void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PPoly pmul(const PPoly& a, const PPoly& b, code_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<code_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    ptrim(r);
    return r;
}

// remainder of a by monic b
inline PPoly pmod(PPoly a, const PPoly& b, code_t p) {
    ptrim(a);
    while (a.size() >= b.size()) {
        code_t c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = std::uint64_t(c) * b[i] % p;
            a[i + shift] = static_cast<code_t>((a[i + shift] + p - sub) % p);
        }
        ptrim(a);
    }
    return a;
}

inline code_t peval(const PPoly& f, code_t x, code_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return static_cast<code_t>(acc);
}

// Irreducibility over GF(p): no roots, then trial division by every monic
// polynomial of degree 2 .. deg/2.  Fine for the small degrees we support.
inline bool is_irreducible(const PPoly& f, code_t p) {
    std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (code_t x = 0; x < p; ++x)
        if (peval(f, x, p) == 0) return false;
    if (deg <= 3) return true;
    for (std::size_t d = 2; d <= deg / 2; ++d) {
        // enumerate monic divisor candidates by their p-ary encoding
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            PPoly g(d + 1, 0);
            std::uint64_t e = enc;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<code_t>(e % p);
                e /= p;
            }
            g[d] = 1;
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace detail

// Built-in default moduli (coefficients low -> high, leading 1 implicit in
// the x^k position).  The table is fixed so that reports are reproducible;
// entries outside it fall back to the lexicographically smallest monic
// irreducible, which is equally deterministic.
inline std::optional<std::vector<code_t>> default_modulus_table(code_t p, unsigned k) {
    struct Entry {
        code_t p;
        unsigned k;
        std::vector<code_t> low_coeffs; // degree < k part
    };
    static const std::vector<Entry> table = {
        {2, 2, {1, 1}},
        {2, 3, {1, 1, 0}},
        {2, 4, {1, 1, 0, 0}},
        {2, 5, {1, 0, 1, 0, 0}},
        {2, 6, {1, 1, 0, 0, 0, 0}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0}},
        {2, 8, {1, 1, 0, 1, 1, 0, 0, 0}},
        {3, 2, {2, 1}},
        {3, 3, {1, 2, 0}},
        {3, 4, {2, 1, 0, 0}},
        {5, 2, {1, 1}},
        {5, 3, {1, 1, 0}},
        {7, 2, {3, 1}},
    };
    for (const auto& e : table)
        if (e.p == p && e.k == k) {
            std::vector<code_t> m = e.low_coeffs;
            m.push_back(1);
            return m;
        }
    return std::nullopt;
}

class Field;

// An element of GF(p^k); `code` is the base-p digit encoding of the unique
// reduced representative of degree < k.
class FieldElement;

class Field {
  public:
    Field() = default;

    code_t p() const { return d_->p; }
    unsigned k() const { return d_->k; }
    code_t q() const { return d_->q; }
    const std::vector<code_t>& modulus() const { return d_->modulus; }

    bool same(const Field& o) const {
        if (d_ == o.d_) return true;
        return d_ && o.d_ && d_->p == o.d_->p && d_->k == o.d_->k && d_->modulus == o.d_->modulus;
    }

    code_t add(code_t a, code_t b) const {
        const Data& d = *d_;
        if (d.p == 2) return a ^ b;
        if (d.k == 1) return (a + b) % d.p;
        code_t r = 0, mul = 1;
        for (unsigned i = 0; i < d.k; ++i) {
            r += ((a % d.p) + (b % d.p)) % d.p * mul;
            a /= d.p;
            b /= d.p;
            mul *= d.p;
        }
        return r;
    }

    code_t neg(code_t a) const {
        const Data& d = *d_;
        if (d.p == 2) return a;
        if (d.k == 1) return (d.p - a) % d.p;
        code_t r = 0, mul = 1;
        for (unsigned i = 0; i < d.k; ++i) {
            r += (d.p - a % d.p) % d.p * mul;
            a /= d.p;
            mul *= d.p;
        }
        return r;
    }

    code_t sub(code_t a, code_t b) const { return add(a, neg(b)); }

    code_t mul(code_t a, code_t b) const {
        const Data& d = *d_;
        if (!d.mul_table.empty()) return d.mul_table[a * d.q + b];
        if (d.k == 1) return static_cast<code_t>(std::uint64_t(a) * b % d.p);
        return mul_schoolbook(a, b);
    }

    code_t inv(code_t a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero");
        const Data& d = *d_;
        if (!d.inv_table.empty()) return d.inv_table[a];
        return pow(a, d.q - 2);
    }

    code_t pow(code_t a, std::uint64_t e) const {
        code_t r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // absolute trace down to GF(p), returned as an integer in [0, p)
    code_t abs_trace(code_t a) const {
        code_t acc = 0, x = a;
        for (unsigned i = 0; i < d_->k; ++i) {
            acc = add(acc, x);
            x = pow(x, d_->p);
        }
        return acc; // lies in the prime subfield, so the code is < p
    }

    FieldElement element(code_t c) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long n) const;
    // the adjoined generator (class of x); requires k > 1
    FieldElement gen() const;

    std::string element_str(code_t a) const {
        const Data& d = *d_;
        if (d.k == 1) return std::to_string(a);
        if (a == 0) return "0";
        std::string s;
        std::vector<code_t> digits(d.k, 0);
        code_t t = a;
        for (unsigned i = 0; i < d.k; ++i) {
            digits[i] = t % d.p;
            t /= d.p;
        }
        for (unsigned i = d.k; i-- > 0;) {
            if (digits[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(digits[i]);
            } else {
                if (digits[i] != 1) s += std::to_string(digits[i]) + "*";
                s += (i == 1) ? "a" : "a^" + std::to_string(i);
            }
        }
        return s;
    }

    friend Field field_make(code_t p, unsigned k, const std::vector<code_t>* modulus);

  private:
    struct Data {
        code_t p = 0;
        unsigned k = 0;
        code_t q = 0;
        std::vector<code_t> modulus; // empty when k == 1
        std::vector<code_t> mul_table;
        std::vector<code_t> inv_table;
    };

    std::shared_ptr<const Data> d_;

    code_t mul_schoolbook(code_t a, code_t b) const {
        const Data& d = *d_;
        std::vector<code_t> da(d.k, 0), db(d.k, 0);
        for (unsigned i = 0; i < d.k; ++i) {
            da[i] = a % d.p;
            a /= d.p;
            db[i] = b % d.p;
            b /= d.p;
        }
        detail::PPoly prod = detail::pmul(da, db, d.p);
        detail::PPoly rem = detail::pmod(std::move(prod), d.modulus, d.p);
        code_t r = 0, mul = 1;
        for (unsigned i = 0; i < d.k; ++i) {
            r += (i < rem.size() ? rem[i] : 0) * mul;
            mul *= d.p;
        }
        return r;
    }
};

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field f, code_t c) : f_(std::move(f)), c_(c) {}

    const Field& field() const { return f_; }
    code_t code() const { return c_; }
    bool is_zero() const { return c_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.f_, a.f_.add(a.c_, b.c_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.f_, a.f_.sub(a.c_, b.c_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.f_, a.f_.mul(a.c_, b.c_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.f_, a.f_.mul(a.c_, b.f_.inv(b.c_))};
    }
    FieldElement operator-() const { return {f_, f_.neg(c_)}; }
    FieldElement inverse() const { return {f_, f_.inv(c_)}; }
    FieldElement pow(std::uint64_t e) const { return {f_, f_.pow(c_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string str() const { return f_.element_str(c_); }

  private:
    Field f_;
    code_t c_ = 0;

    void check(const FieldElement& o) const {
        if (!f_.same(o.f_)) throw DescriptorMismatchError("elements of different fields");
    }
};

inline FieldElement Field::element(code_t c) const { return {*this, c}; }
inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }
inline FieldElement Field::from_int(long long n) const {
    long long m = n % static_cast<long long>(d_->p);
    if (m < 0) m += d_->p;
    return {*this, static_cast<code_t>(m)};
}
inline FieldElement Field::gen() const {
    if (d_->k < 2) throw UnsupportedSizeError("prime field has no adjoined generator");
    return {*this, d_->p};
}

inline Field field_make(code_t p, unsigned k, const std::vector<code_t>* modulus = nullptr) {
    if (!detail::is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw UnsupportedSizeError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) throw UnsupportedSizeError("field size exceeds 2^16");
    }

    auto data = std::make_shared<Field::Data>();
    data->p = p;
    data->k = k;
    data->q = static_cast<code_t>(q);

    if (k == 1) {
        if (modulus) throw UnsupportedSizeError("prime field takes no modulus");
    } else {
        std::vector<code_t> m;
        if (modulus) {
            m = *modulus;
            if (m.size() != k + 1 || m.back() != 1)
                throw ReducibleModulusError("modulus must be monic of degree k");
            for (auto& c : m) c %= p;
            if (m.back() != 1) throw ReducibleModulusError("modulus must be monic of degree k");
            if (!detail::is_irreducible(m, p))
                throw ReducibleModulusError("modulus is reducible over GF(p)");
        } else if (auto tab = default_modulus_table(p, k)) {
            m = *tab;
            if (!detail::is_irreducible(m, p))
                throw ReducibleModulusError("built-in modulus table entry failed verification");
        } else {
            // deterministic fallback: smallest monic irreducible in p-ary encoding
            std::uint64_t count = 1;
            for (unsigned i = 0; i < k; ++i) count *= p;
            for (std::uint64_t enc = 0; enc < count; ++enc) {
                std::vector<code_t> g(k + 1, 0);
                std::uint64_t e = enc;
                for (unsigned i = 0; i < k; ++i) {
                    g[i] = static_cast<code_t>(e % p);
                    e /= p;
                }
                g[k] = 1;
                if (detail::is_irreducible(g, p)) {
                    m = g;
                    break;
                }
            }
            if (m.empty()) throw ReducibleModulusError("no irreducible modulus found");
        }
        data->modulus = std::move(m);
    }

    if (q <= 256) {
        Field tmp;
        tmp.d_ = data;
        std::vector<code_t> mt(q * q, 0), it(q, 0);
        for (code_t a = 0; a < q; ++a)
            for (code_t b = a; b < q; ++b) {
                code_t v = (k == 1) ? static_cast<code_t>(std::uint64_t(a) * b % p)
                                    : tmp.mul_schoolbook(a, b);
                mt[a * q + b] = v;
                mt[b * q + a] = v;
                if (v == 1) {
                    it[a] = b;
                    it[b] = a;
                }
            }
        data->mul_table = std::move(mt);
        data->inv_table = std::move(it);
    }

    Field f;
    f.d_ = data;
    return f;
}

inline Field field_make(code_t p, unsigned k, const std::vector<code_t>& modulus) {
    return field_make(p, k, &modulus);
}

// unique square root in characteristic 2 (squaring is a bijection there)
inline FieldElement sqrt_char2(const FieldElement& a) {
    const Field& f = a.field();
    if (f.p() != 2) throw WrongCharacteristicError("sqrt_char2 needs characteristic 2");
    if (f.k() == 1) return a; // 0 and 1 are their own roots
    return a.pow(std::uint64_t(1) << (f.k() - 1));
}

// both solutions of x^2 + x = c in characteristic 2, when the absolute
// trace of c vanishes; otherwise there are none
inline std::optional<std::pair<FieldElement, FieldElement>>
artin_schreier_solve(const FieldElement& c) {
    const Field& f = c.field();
    if (f.p() != 2) throw WrongCharacteristicError("Artin-Schreier solving needs characteristic 2");
    if (f.abs_trace(c.code()) != 0) return std::nullopt;
    for (code_t x = 0; x < f.q(); ++x) {
        if (f.add(f.mul(x, x), x) == c.code()) {
            code_t other = f.add(x, 1);
            return std::make_pair(f.element(std::min(x, other)), f.element(std::max(x, other)));
        }
    }
    return std::nullopt; // unreachable when the trace is zero
}

// Embedding GF(p^k) -> GF(p^m) for k | m.  The image of the source generator
// is the root of the source modulus with the smallest code, which makes the
// embedding deterministic.
class FieldEmbedding {
  public:
    FieldEmbedding(Field src, Field dst) : src_(std::move(src)), dst_(std::move(dst)) {
        if (src_.p() != dst_.p()) throw DescriptorMismatchError("different characteristics");
        if (dst_.k() % src_.k() != 0)
            throw DescriptorMismatchError("source degree does not divide target degree");
        if (src_.k() == 1) {
            root_ = 0; // unused
            return;
        }
        const auto& m = src_.modulus();
        for (code_t x = 0; x < dst_.q(); ++x) {
            code_t acc = 0;
            for (std::size_t i = m.size(); i-- > 0;)
                acc = dst_.add(dst_.mul(acc, x), m[i] % src_.p());
            if (acc == 0) {
                root_ = x;
                return;
            }
        }
        throw DescriptorMismatchError("modulus has no root in target field");
    }

    FieldElement operator()(const FieldElement& a) const {
        if (!a.field().same(src_)) throw DescriptorMismatchError("element not in source field");
        if (src_.k() == 1) return dst_.element(a.code() % src_.p());
        code_t acc = 0, t = a.code();
        std::vector<code_t> digits(src_.k(), 0);
        for (unsigned i = 0; i < src_.k(); ++i) {
            digits[i] = t % src_.p();
            t /= src_.p();
        }
        for (unsigned i = src_.k(); i-- > 0;)
            acc = dst_.add(dst_.mul(acc, root_), digits[i]);
        return dst_.element(acc);
    }

    const Field& src() const { return src_; }
    const Field& dst() const { return dst_; }

  private:
    Field src_, dst_;
    code_t root_ = 0;
};

// smallest element alpha with alpha^2 + alpha + 1 = 0, if the field has one
inline std::optional<FieldElement> find_cube_root_generator(const Field& f) {
    for (code_t x = 0; x < f.q(); ++x)
        if (f.add(f.add(f.mul(x, x), x), 1) == 0) return f.element(x);
    return std::nullopt;
}

} // namespace cremona
