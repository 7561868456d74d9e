#ifndef POSITROID_MPOLY_HPP
#define POSITROID_MPOLY_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "positroid/rat.hpp"

namespace positroid {

// ---------------------------------------------------------------------------
// Variables.  Names are interned once, globally; the declaration order fixes
// the graded-lex monomial order used everywhere (serialization depends on it).
// ---------------------------------------------------------------------------

class VarTable {
  public:
    static VarTable& instance() {
        static VarTable t;
        return t;
    }

    int intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }

    int lookup(const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        return it == ids_.end() ? -1 : it->second;
    }

  private:
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

struct Var {
    int id = -1;
    Var() = default;
    explicit Var(const std::string& name) : id(VarTable::instance().intern(name)) {}
    const std::string& name() const { return VarTable::instance().name(id); }
    bool operator==(const Var& o) const { return id == o.id; }
    bool operator<(const Var& o) const { return id < o.id; }
};

// Monomial: sparse exponent vector, sorted by variable id, exponents > 0.
using Mono = std::vector<std::pair<int, int>>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

// graded lex: higher total degree first, then larger exponent on the
// earliest-declared variable.
inline int mono_cmp(const Mono& a, const Mono& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int va = i < a.size() ? a[i].first : INT32_MAX;
        int vb = j < b.size() ? b[j].first : INT32_MAX;
        if (va != vb) return va < vb ? 1 : -1;  // earlier variable present => larger
        if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

struct MonoGrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return r;
}

// a / b, or nullptr-equivalent (false) if not divisible
inline bool mono_div(const Mono& a, const Mono& b, Mono& out) {
    out.clear();
    size_t i = 0;
    for (auto& [v, e] : b) {
        while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != v || a[i].second < e) return false;
        if (a[i].second > e) out.emplace_back(v, a[i].second - e);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return true;
}

// ---------------------------------------------------------------------------
// Multivariate polynomials over Rat.
// ---------------------------------------------------------------------------

class MPoly {
  public:
    using Terms = std::map<Mono, Rat, MonoGrlexDesc>;

    MPoly() = default;
    MPoly(const Rat& c) {  // NOLINT: implicit by design
        if (!positroid::is_zero(c)) terms_[Mono{}] = c;
    }
    MPoly(long c) : MPoly(Rat(c)) {}  // NOLINT
    static MPoly variable(Var v) {
        MPoly p;
        p.terms_[Mono{{v.id, 1}}] = Rat(1);
        return p;
    }
    static MPoly term(const Rat& c, Mono m) {
        MPoly p;
        if (!positroid::is_zero(c)) p.terms_[std::move(m)] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("MPoly: not a constant");
        return terms_.begin()->second;
    }
    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }
    const Terms& terms() const { return terms_; }

    const Mono& leading_mono() const {
        if (terms_.empty()) throw std::logic_error("MPoly: leading term of 0");
        return terms_.begin()->first;
    }
    const Rat& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("MPoly: leading term of 0");
        return terms_.begin()->second;
    }

    MPoly& operator+=(const MPoly& o) {
        if (this == &o) return *this *= Rat(2);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        if (this == &o) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : o.terms_) add_term(m, Rat(-c));
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rat& c) {
        if (positroid::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, cc] : terms_) cc *= c;
        return *this;
    }
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
        MPoly acc(Rat(1)), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    // exact formal partial derivative
    MPoly partial(Var v) const {
        MPoly r;
        for (auto& [m, c] : terms_) {
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i].first != v.id) continue;
                Mono d = m;
                if (d[i].second == 1)
                    d.erase(d.begin() + static_cast<long>(i));
                else
                    d[i].second -= 1;
                r.add_term(d, c * Rat(m[i].second));
            }
        }
        return r;
    }

    template <typename F>  // F: Var -> Rat
    Rat eval(F&& value_of) const {
        Rat total(0);
        for (auto& [m, c] : terms_) {
            Rat t = c;
            for (auto& [v, e] : m) t *= rat_pow(value_of(Var_from_id(v)), e);
            total += t;
        }
        return total;
    }

    // substitute polynomials for variables
    template <typename F>  // F: Var -> MPoly
    MPoly subst(F&& poly_of) const {
        MPoly total;
        for (auto& [m, c] : terms_) {
            MPoly t(c);
            for (auto& [v, e] : m) t *= poly_of(Var_from_id(v)).pow(e);
            total += t;
        }
        return total;
    }

    std::vector<Var> variables() const {
        std::vector<int> ids;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m) ids.push_back(v);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::vector<Var> out;
        for (int id : ids) out.push_back(Var_from_id(id));
        return out;
    }

    // positive rational c with (*this)/c having coprime integer coefficients
    Rat content() const {
        if (terms_.empty()) return Rat(1);
        Int g(0), l(1);
        for (auto& [m, c] : terms_) {
            g = gcd(g, c.get_num());
            l = lcm(l, c.get_den());
        }
        return Rat(g, l);
    }

    // exact division; throws if the division leaves a remainder
    MPoly div_exact(const MPoly& d) const {
        if (d.is_zero()) throw std::domain_error("MPoly: division by zero");
        MPoly rem = *this, q;
        while (!rem.is_zero()) {
            Mono qm;
            if (!mono_div(rem.leading_mono(), d.leading_mono(), qm))
                throw std::domain_error("MPoly: inexact division");
            Rat qc = rem.leading_coeff() / d.leading_coeff();
            MPoly t = MPoly::term(qc, qm);
            q += t;
            rem -= t * d;
        }
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rat a = c;
            if (first) {
                if (sgn(a) < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (sgn(a) < 0 ? " - " : " + ");
                if (sgn(a) < 0) a = -a;
            }
            bool coeff_shown = (a != Rat(1)) || m.empty();
            if (coeff_shown) os << rat_str(a);
            bool need_star = coeff_shown;
            for (auto& [v, e] : m) {
                if (need_star) os << "*";
                os << VarTable::instance().name(v);
                if (e > 1) os << "^" << e;
                need_star = true;
            }
            first = false;
        }
        return os.str();
    }

  private:
    static Var Var_from_id(int id) {
        Var v;
        v.id = id;
        return v;
    }
    void add_term(const Mono& m, const Rat& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!positroid::is_zero(c)) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (positroid::is_zero(it->second)) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

// ---------------------------------------------------------------------------
// Rational functions: quotients of MPoly.  Normalization is best-effort
// (content + common monomial factor); equality is by cross-multiplication.
// ---------------------------------------------------------------------------

class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}    // NOLINT
    RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}     // NOLINT
    RatFunc(const MPoly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
    RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    static RatFunc variable(Var v) { return RatFunc(MPoly::variable(v)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc partial(Var v) const {
        return RatFunc(num_.partial(v) * den_ - num_ * den_.partial(v), den_ * den_);
    }

    template <typename F>  // F: Var -> Rat
    Rat eval(F&& value_of) const {
        Rat d = den_.eval(value_of);
        if (positroid::is_zero(d)) throw std::domain_error("RatFunc: denominator vanishes");
        return num_.eval(value_of) / d;
    }

    std::string str() const {
        if (den_ == MPoly(Rat(1))) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = MPoly(Rat(1));
            return;
        }
        // strip the common monomial factor
        Mono gn = common_mono(num_), gd = common_mono(den_), g;
        size_t i = 0, j = 0;
        while (i < gn.size() && j < gd.size()) {
            if (gn[i].first < gd[j].first)
                ++i;
            else if (gd[j].first < gn[i].first)
                ++j;
            else {
                g.emplace_back(gn[i].first, std::min(gn[i].second, gd[j].second));
                ++i, ++j;
            }
        }
        if (!g.empty()) {
            MPoly m = MPoly::term(Rat(1), g);
            num_ = num_.div_exact(m);
            den_ = den_.div_exact(m);
        }
        // content + sign of the denominator's leading coefficient
        Rat c = den_.content();
        if (sgn(den_.leading_coeff()) < 0) c = -c;
        Rat scale = Rat(1) / c;
        num_ *= scale;
        den_ *= scale;
    }

    static Mono common_mono(const MPoly& p) {
        bool first = true;
        Mono g;
        for (auto& [m, c] : p.terms()) {
            if (first) {
                g = m;
                first = false;
                continue;
            }
            Mono ng;
            size_t i = 0, j = 0;
            while (i < g.size() && j < m.size()) {
                if (g[i].first < m[j].first)
                    ++i;
                else if (m[j].first < g[i].first)
                    ++j;
                else {
                    ng.emplace_back(g[i].first, std::min(g[i].second, m[j].second));
                    ++i, ++j;
                }
            }
            g = ng;
            if (g.empty()) break;
        }
        return g;
    }

    MPoly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

// Scalar trait helpers shared by the generic linear algebra and measurement
// code.  K is Rat or RatFunc (MPoly is a ring, handled separately).
template <typename K>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool nonzero(const Rat& x) { return !positroid::is_zero(x); }
    static std::string str(const Rat& x) { return rat_str(x); }
};

template <>
struct ScalarOps<MPoly> {
    static MPoly zero() { return MPoly(); }
    static MPoly one() { return MPoly(Rat(1)); }
    static bool nonzero(const MPoly& x) { return !x.is_zero(); }
    static std::string str(const MPoly& x) { return x.str(); }
};

template <>
struct ScalarOps<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rat(1)); }
    static bool nonzero(const RatFunc& x) { return !x.is_zero(); }
    static std::string str(const RatFunc& x) { return x.str(); }
};

}  // namespace positroid

#endif
