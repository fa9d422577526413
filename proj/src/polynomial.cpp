#include "hadstar/polynomial.hpp"

#include <algorithm>

namespace hadstar {

int exp_degree(const Exp& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

namespace {

// Graded reverse lex on a contiguous index range [lo, hi).
// a > b  iff  deg(a) > deg(b), or degrees tie and the rightmost nonzero
// entry of a - b is negative.
int grevlex_cmp(const Exp& a, const Exp& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int lex_cmp(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

bool MonomialOrder::greater(const Exp& a, const Exp& b) const {
    const int n = static_cast<int>(a.size());
    switch (kind) {
        case Kind::Lex:
            return lex_cmp(a, b) > 0;
        case Kind::Grevlex:
            return grevlex_cmp(a, b, 0, n) > 0;
        case Kind::Block: {
            int c = grevlex_cmp(a, b, 0, block);
            if (c != 0) return c > 0;
            return grevlex_cmp(a, b, block, n) > 0;
        }
    }
    return false;
}

std::string MonomialOrder::describe() const {
    switch (kind) {
        case Kind::Lex:
            return "lex";
        case Kind::Grevlex:
            return "grevlex";
        case Kind::Block:
            return "elim(" + std::to_string(block) + ")";
    }
    return "?";
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Exp(nvars, 0), c);
    return p;
}

Poly Poly::monomial(int nvars, Exp e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars) throw InternalError("monomial exponent length mismatch");
    for (int x : e)
        if (x < 0) throw InternalError("negative exponent");
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Exp e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, std::move(e), 1);
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
    return d;
}

int Poly::degree_in(const std::vector<int>& vars) const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int v : vars) t += e[v];
        d = std::max(d, t);
    }
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = exp_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_degree(e) != d) return false;
    return true;
}

bool Poly::is_multihomogeneous(const std::vector<std::vector<int>>& blocks) const {
    if (terms_.empty()) return true;
    for (const auto& block : blocks) {
        int want = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int v : block) d += e[v];
            if (want < 0)
                want = d;
            else if (d != want)
                return false;
        }
    }
    return true;
}

Rat Poly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != nvars_) throw InternalError("term exponent length mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_ring(const Poly& rhs) const {
    if (nvars_ != rhs.nvars_) throw InternalError("polynomial ring mismatch");
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out = *this;
    out += rhs;
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly out = *this;
    out -= rhs;
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    check_ring(rhs);
    Poly out(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw InternalError("negative power");
    Poly out = Poly::constant(nvars_, 1);
    Poly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

Poly Poly::derivative(int var) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InternalError("evaluation point length mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw InternalError("compose: one image per variable required");
    int target = images.empty() ? 0 : images[0].nvars();
    for (const Poly& im : images)
        if (im.nvars() != target) throw InternalError("compose: images live in different rings");

    // Per-variable power cache; exponents in this toolkit stay tiny.
    std::vector<std::vector<Poly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(Poly::constant(target, 1));

    auto power = [&](int i, int e) -> const Poly& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        out += term;
    }
    return out;
}

Poly Poly::set_zero(const std::vector<int>& vars) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        bool kill = false;
        for (int v : vars)
            if (e[v] > 0) {
                kill = true;
                break;
            }
        if (!kill) out.add_term(e, c);
    }
    return out;
}

Poly Poly::drop_vars(const std::vector<int>& vars) const {
    std::vector<bool> drop(nvars_, false);
    for (int v : vars) drop.at(v) = true;
    Poly out(nvars_ - static_cast<int>(vars.size()));
    Exp ne(out.nvars());
    for (const auto& [e, c] : terms_) {
        int k = 0;
        for (int i = 0; i < nvars_; ++i) {
            if (drop[i]) {
                if (e[i] != 0) throw InternalError("drop_vars: variable still occurs");
            } else {
                ne[k++] = e[i];
            }
        }
        out.add_term(ne, c);
    }
    return out;
}

std::optional<Exp> Poly::leading_exp(const MonomialOrder& ord) const {
    if (terms_.empty()) return std::nullopt;
    const Exp* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (ord.greater(e, *best)) best = &e;
    return *best;
}

Rat Poly::leading_coeff(const MonomialOrder& ord) const {
    auto le = leading_exp(ord);
    return le ? coeff(*le) : Rat(0);
}

Poly Poly::normalized() const {
    if (terms_.empty()) return *this;
    Int den_lcm = 1, content = 0;
    for (const auto& [e, c] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [e, c] : terms_) {
        Rat x = c * den_lcm;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (leading_coeff(MonomialOrder::grevlex()) < 0) content = -content;
    Rat factor(den_lcm, content);
    factor.canonicalize();
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
    return out;
}

bool Poly::proportional(const Poly& rhs) const {
    if (nvars_ != rhs.nvars_) return false;
    if (is_zero() || rhs.is_zero()) return is_zero() == rhs.is_zero();
    return normalized() == rhs.normalized();
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;

    // Render in descending grevlex so output reads leading-term first.
    std::vector<const std::pair<const Exp, Rat>*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(ordered.begin(), ordered.end(),
              [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

    std::string out;
    for (auto* t : ordered) {
        const auto& [e, c] = *t;
        Rat mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += rat_str(mag);
        else if (mag == 1)
            out += mono;
        else
            out += rat_str(mag) + "*" + mono;
    }
    return out;
}

Poly euler_defect(const Poly& p) {
    int d = p.degree();
    if (d < 0) return p;
    Poly acc = p * Rat(d);
    for (int i = 0; i < p.nvars(); ++i)
        acc -= Poly::variable(p.nvars(), i) * p.derivative(i);
    return acc;
}

void euler_check(const Poly& p) {
    if (!euler_defect(p).is_zero())
        throw DegenerateError("polynomial is not homogeneous (Euler identity fails)");
}

std::vector<Exp> monomials_of_degree(int nvars, int d) {
    std::vector<Exp> out;
    Exp cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == nvars - 1) {
            cur[var] = rest;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rest - e);
        }
        cur[var] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw InternalError("poly_det of empty matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw InternalError("poly_det needs a square matrix");
    if (n == 1) return m[0][0];
    const int nv = m[0][0].nvars();
    Poly det(nv);
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (int r = 1; r < n; ++r) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_det(minor);
        if (j % 2)
            det -= term;
        else
            det += term;
    }
    return det;
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace hadstar
