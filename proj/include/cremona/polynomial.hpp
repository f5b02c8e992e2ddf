#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"

namespace cremona {

// Ordered list of named variables with positive integer weights.  Shared and
// immutable; two polynomials interoperate when their variable sets agree.
class VarSet {
  public:
    static std::shared_ptr<const VarSet> make(std::vector<std::pair<std::string, unsigned>> vars) {
        auto vs = std::make_shared<VarSet>();
        for (auto& [n, w] : vars) {
            if (w == 0) throw ParseError("variable weight must be positive");
            vs->names_.push_back(n);
            vs->weights_.push_back(w);
        }
        return vs;
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    unsigned weight(std::size_t i) const { return weights_[i]; }

    std::optional<std::size_t> index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return std::nullopt;
    }

    bool operator==(const VarSet& o) const {
        return names_ == o.names_ && weights_ == o.weights_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<unsigned> weights_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// "u:1" or plain "u" (weight 1)
inline VarSetPtr parse_vars(const std::vector<std::string>& decls) {
    std::vector<std::pair<std::string, unsigned>> vars;
    for (const auto& d : decls) {
        auto colon = d.find(':');
        if (colon == std::string::npos) {
            vars.emplace_back(d, 1);
        } else {
            unsigned w = static_cast<unsigned>(std::stoul(d.substr(colon + 1)));
            vars.emplace_back(d.substr(0, colon), w);
        }
    }
    return VarSet::make(std::move(vars));
}

using Expo = std::vector<std::uint32_t>;

namespace detail {

inline std::uint64_t weighted_degree(const Expo& e, const VarSet& vs) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += std::uint64_t(e[i]) * vs.weight(i);
    return d;
}

// canonical term order: weighted degree, ties broken lexicographically on the
// exponent vector in declared variable order
inline int cmp_expo(const Expo& a, const Expo& b, const VarSet& vs) {
    std::uint64_t da = weighted_degree(a, vs), db = weighted_degree(b, vs);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace detail

class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero(const Field& f, VarSetPtr vs) { return Polynomial(f, std::move(vs)); }

    static Polynomial constant(const Field& f, VarSetPtr vs, code_t c) {
        Polynomial r(f, std::move(vs));
        if (c != 0) r.terms_.emplace_back(Expo(r.vars_->size(), 0), c);
        return r;
    }

    static Polynomial variable(const Field& f, VarSetPtr vs, std::size_t i) {
        if (i >= vs->size()) throw UnknownVariableError("variable index out of range");
        Polynomial r(f, std::move(vs));
        Expo e(r.vars_->size(), 0);
        e[i] = 1;
        r.terms_.emplace_back(std::move(e), 1);
        return r;
    }

    static Polynomial monomial(const Field& f, VarSetPtr vs, Expo e, code_t c) {
        Polynomial r(f, std::move(vs));
        if (e.size() != r.vars_->size()) throw UnknownVariableError("exponent vector size mismatch");
        if (c != 0) r.terms_.emplace_back(std::move(e), c);
        return r;
    }

    const Field& field() const { return f_; }
    const VarSetPtr& vars() const { return vars_; }
    const std::vector<std::pair<Expo, code_t>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                            [](std::uint32_t e) { return e == 0; }));
    }

    code_t constant_value() const {
        if (terms_.empty()) return 0;
        return terms_.front().second;
    }

    // weighted degree of the leading term; -1 for the zero polynomial
    long long degree() const {
        if (terms_.empty()) return -1;
        return static_cast<long long>(detail::weighted_degree(terms_.front().first, *vars_));
    }

    bool is_weighted_homogeneous(std::uint64_t d) const {
        for (const auto& [e, c] : terms_)
            if (detail::weighted_degree(e, *vars_) != d) return false;
        return true;
    }

    code_t leading_coeff() const {
        if (terms_.empty()) return 0;
        return terms_.front().second;
    }

    code_t coeff(const Expo& e) const {
        for (const auto& [te, c] : terms_)
            if (te == e) return c;
        return 0;
    }

    // indices of variables that actually occur
    std::vector<std::size_t> support() const {
        std::vector<bool> used(vars_->size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) used[i] = true;
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i]) r.push_back(i);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.f_, a.vars_);
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() &&
                 detail::cmp_expo(a.terms_[i].first, b.terms_[j].first, *a.vars_) > 0)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() ||
                       detail::cmp_expo(a.terms_[i].first, b.terms_[j].first, *a.vars_) < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                code_t c = a.f_.add(a.terms_[i].second, b.terms_[j].second);
                if (c != 0) r.terms_.emplace_back(a.terms_[i].first, c);
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = f_.neg(c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        auto cmp = [&vs = *a.vars_](const Expo& x, const Expo& y) {
            return detail::cmp_expo(x, y, vs) > 0;
        };
        std::map<Expo, code_t, decltype(cmp)> acc(cmp);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                code_t prod = a.f_.mul(ca, cb);
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(std::move(e), prod);
                else
                    it->second = a.f_.add(it->second, prod);
            }
        Polynomial r(a.f_, a.vars_);
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.emplace_back(e, c);
        return r;
    }

    Polynomial scaled(code_t c) const {
        Polynomial r(f_, vars_);
        if (c == 0) return r;
        for (const auto& [e, tc] : terms_) r.terms_.emplace_back(e, f_.mul(tc, c));
        return r;
    }

    Polynomial pow(std::uint64_t n) const {
        Polynomial r = constant(f_, vars_, 1);
        Polynomial base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // formal partial derivative with characteristic-p exponent reduction
    Polynomial partial(std::size_t v) const {
        if (v >= vars_->size()) throw UnknownVariableError("no such variable");
        Polynomial r(f_, vars_);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            code_t factor = f_.from_int(static_cast<long long>(e[v])).code();
            code_t nc = f_.mul(c, factor);
            if (nc == 0) continue;
            Expo ne = e;
            --ne[v];
            r.terms_.emplace_back(std::move(ne), nc);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [&vs = *vars_](const auto& x, const auto& y) {
                      return detail::cmp_expo(x.first, y.first, vs) > 0;
                  });
        return r;
    }

    // simultaneous substitution; every occurring variable must have an image,
    // and all images must share one variable set and field
    Polynomial subst(const std::map<std::size_t, Polynomial>& images) const {
        const Field* tf = nullptr;
        VarSetPtr tvs;
        for (const auto& [i, img] : images) {
            if (i >= vars_->size()) throw UnknownVariableError("substitution for unknown variable");
            if (!tf) {
                tf = &img.field();
                tvs = img.vars();
            } else if (!tf->same(img.field()) || !(*tvs == *img.vars())) {
                throw DescriptorMismatchError("substitution images disagree");
            }
        }
        if (!tf) {
            tf = &f_;
            tvs = vars_;
        }
        for (std::size_t v : support())
            if (images.find(v) == images.end())
                throw UnknownVariableError("substitution misses variable " + vars_->name(v));

        Polynomial acc = Polynomial::zero(*tf, tvs);
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(*tf, tvs, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) term = term * images.at(i).pow(e[i]);
            acc = acc + term;
        }
        return acc;
    }

    // replace one variable, leaving the others in place
    Polynomial subst_var(std::size_t v, const Polynomial& image) const {
        std::map<std::size_t, Polynomial> images;
        for (std::size_t i = 0; i < vars_->size(); ++i)
            images.emplace(i, i == v ? image : Polynomial::variable(f_, vars_, i));
        return subst(images);
    }

    code_t eval_codes(const std::vector<code_t>& point) const {
        if (point.size() != vars_->size()) throw UnknownVariableError("point arity mismatch");
        code_t acc = 0;
        for (const auto& [e, c] : terms_) {
            code_t t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = f_.mul(t, f_.pow(point[i], e[i]));
            acc = f_.add(acc, t);
        }
        return acc;
    }

    FieldElement eval(const std::vector<FieldElement>& point) const {
        std::vector<code_t> codes;
        codes.reserve(point.size());
        for (const auto& x : point) {
            if (!x.field().same(f_)) throw DescriptorMismatchError("evaluation point in wrong field");
            codes.push_back(x.code());
        }
        return f_.element(eval_codes(codes));
    }

    // coefficient of var^e, as a polynomial with that variable removed from
    // the exponents (the variable stays declared)
    Polynomial coeff_of(std::size_t v, std::uint32_t e) const {
        Polynomial r(f_, vars_);
        for (const auto& [te, c] : terms_) {
            if (te[v] != e) continue;
            Expo ne = te;
            ne[v] = 0;
            r.terms_.emplace_back(std::move(ne), c);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [&vs = *vars_](const auto& x, const auto& y) {
                      return detail::cmp_expo(x.first, y.first, vs) > 0;
                  });
        return r;
    }

    std::uint32_t max_exponent(std::size_t v) const {
        std::uint32_t m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, e[v]);
        return m;
    }

    // map every coefficient through a field embedding
    Polynomial mapped(const FieldEmbedding& emb, VarSetPtr target_vars = nullptr) const {
        Polynomial r(emb.dst(), target_vars ? target_vars : vars_);
        for (const auto& [e, c] : terms_) {
            code_t nc = emb(f_.element(c)).code();
            if (nc != 0) r.terms_.emplace_back(e, nc);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            bool has_var = false;
            for (auto x : e) has_var |= (x != 0);
            std::string cs = f_.element_str(c);
            bool trivial_coeff = (c == 1);
            std::string part;
            if (!has_var || !trivial_coeff) {
                part = (cs.find('+') != std::string::npos) ? "(" + cs + ")" : cs;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!part.empty()) part += "*";
                part += vars_->name(i);
                if (e[i] > 1) part += "^" + std::to_string(e[i]);
            }
            s += part;
        }
        return s;
    }

  private:
    Field f_;
    VarSetPtr vars_;
    std::vector<std::pair<Expo, code_t>> terms_; // canonical descending, no zeros

    Polynomial(Field f, VarSetPtr vs) : f_(std::move(f)), vars_(std::move(vs)) {}

    void check(const Polynomial& o) const {
        if (!f_.same(o.f_)) throw DescriptorMismatchError("polynomials over different fields");
        if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
            throw DescriptorMismatchError("polynomials over different variable sets");
    }
};

// ---------------------------------------------------------------------------
// univariate helpers

// index of the single occurring variable; constants report nullopt
inline std::optional<std::size_t> univariate_in(const Polynomial& f) {
    auto sup = f.support();
    if (sup.empty()) return std::nullopt;
    if (sup.size() == 1) return sup[0];
    throw NotUnivariateError("polynomial uses more than one variable");
}

inline std::vector<code_t> to_dense(const Polynomial& f, std::size_t v) {
    std::vector<code_t> d(f.max_exponent(v) + 1, 0);
    for (const auto& [e, c] : f.terms()) d[e[v]] = c;
    return d;
}

inline Polynomial from_dense(const Field& f, const VarSetPtr& vs, std::size_t v,
                             const std::vector<code_t>& d) {
    Polynomial r = Polynomial::zero(f, vs);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        Expo e(vs->size(), 0);
        e[v] = static_cast<std::uint32_t>(i);
        r = r + Polynomial::monomial(f, vs, std::move(e), d[i]);
    }
    return r;
}

namespace detail {

inline void dtrim(std::vector<code_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo b (b nonzero), in place division over the field
inline std::vector<code_t> drem(std::vector<code_t> a, const std::vector<code_t>& b,
                                const Field& f) {
    dtrim(a);
    code_t lb_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        code_t q = f.mul(a.back(), lb_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = f.sub(a[i + shift], f.mul(q, b[i]));
        dtrim(a);
    }
    return a;
}

// exact quotient a / b; throws if the division leaves a remainder
inline std::vector<code_t> dquo_exact(std::vector<code_t> a, const std::vector<code_t>& b,
                                      const Field& f) {
    dtrim(a);
    if (a.empty()) return {};
    std::vector<code_t> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    code_t lb_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        code_t c = f.mul(a.back(), lb_inv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = f.sub(a[i + shift], f.mul(c, b[i]));
        dtrim(a);
    }
    if (!a.empty()) throw NotUnivariateError("division is not exact");
    return q;
}

inline std::vector<code_t> dgcd(std::vector<code_t> a, std::vector<code_t> b, const Field& f) {
    dtrim(a);
    dtrim(b);
    while (!b.empty()) {
        auto r = drem(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        code_t inv = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, inv); // monic normalization
    }
    return a;
}

} // namespace detail

// monic gcd of two univariate polynomials (shared single variable)
inline Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b) {
    auto va = univariate_in(a), vb = univariate_in(b);
    std::size_t v;
    if (va && vb && *va != *vb) throw NotUnivariateError("gcd of different variables");
    if (va)
        v = *va;
    else if (vb)
        v = *vb;
    else
        v = 0;
    if (a.is_zero() && b.is_zero()) return a;
    auto g = detail::dgcd(to_dense(a, v), to_dense(b, v), a.field());
    return from_dense(a.field(), a.vars(), v, g);
}

// true iff f is squarefree; a vanishing derivative (a p-th power) reports false
inline bool univariate_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw NotUnivariateError("squarefree test of zero polynomial");
    auto v = univariate_in(f);
    std::size_t var = v ? *v : 0;
    Polynomial d = f.partial(var);
    if (d.is_zero()) return false;
    Polynomial g = univariate_gcd(f, d);
    return g.is_constant();
}

// ---------------------------------------------------------------------------
// rational functions

class RationalFunction {
  public:
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroError("zero denominator");
        reduce();
    }

    static RationalFunction from(const Polynomial& p) {
        return {p, Polynomial::constant(p.field(), p.vars(), 1)};
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

  private:
    Polynomial num_, den_;

    void reduce() {
        const Field& f = num_.field();
        // reduce by the univariate gcd when both parts live in one variable
        std::vector<std::size_t> sup;
        for (auto i : num_.support()) sup.push_back(i);
        for (auto i : den_.support())
            if (std::find(sup.begin(), sup.end(), i) == sup.end()) sup.push_back(i);
        if (sup.size() <= 1 && !num_.is_zero()) {
            std::size_t v = sup.empty() ? 0 : sup[0];
            auto g = detail::dgcd(to_dense(num_, v), to_dense(den_, v), f);
            if (g.size() > 1) {
                num_ = from_dense(f, num_.vars(), v, detail::dquo_exact(to_dense(num_, v), g, f));
                den_ = from_dense(f, den_.vars(), v, detail::dquo_exact(to_dense(den_, v), g, f));
            }
        }
        code_t lc = den_.leading_coeff();
        if (lc != 1) {
            code_t inv = f.inv(lc);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
};

// ---------------------------------------------------------------------------
// text syntax: terms like "y^2 + u^3*y + x^3", coefficients as integers or
// `a` for the adjoined generator

class PolynomialParser {
  public:
    PolynomialParser(const Field& f, VarSetPtr vs, std::string_view text)
        : f_(f), vs_(std::move(vs)), s_(text) {}

    Polynomial parse() {
        Polynomial r = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at position " + std::to_string(pos_));
        return r;
    }

  private:
    const Field& f_;
    VarSetPtr vs_;
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial parse_expr() {
        bool negate = eat('-');
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            std::uint64_t e = parse_uint();
            return base.pow(e);
        }
        return base;
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer at position " + std::to_string(pos_));
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        return v;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (!eat(')')) throw ParseError("missing closing parenthesis");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = parse_uint();
            return Polynomial::constant(f_, vs_, f_.from_int(static_cast<long long>(v % f_.p())).code());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (auto i = vs_->index_of(name)) return Polynomial::variable(f_, vs_, *i);
            if (name == "a" && f_.k() > 1) {
                Expo e(vs_->size(), 0);
                return Polynomial::monomial(f_, vs_, std::move(e), f_.gen().code());
            }
            throw UnknownVariableError("undeclared variable '" + name + "'");
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

inline Polynomial parse_polynomial(const Field& f, const VarSetPtr& vs, std::string_view text) {
    return PolynomialParser(f, vs, text).parse();
}

} // namespace cremona
