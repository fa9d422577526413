#include "hadstar/projective.hpp"

#include <algorithm>

#include "hadstar/errors.hpp"

namespace hadstar {

ProjPoint::ProjPoint(std::vector<Rat> coords) : c_(std::move(coords)) {
    if (c_.size() != 4) throw InputError("projective point needs exactly 4 coordinates");
    make_primitive(c_);
    bool any = std::any_of(c_.begin(), c_.end(), [](const Rat& x) { return x != 0; });
    if (!any) throw InputError("projective point has all coordinates zero");
}

ProjPoint::ProjPoint(const Rat& x0, const Rat& x1, const Rat& x2, const Rat& x3)
    : ProjPoint(std::vector<Rat>{x0, x1, x2, x3}) {}

int ProjPoint::zero_count() const {
    return static_cast<int>(std::count(c_.begin(), c_.end(), Rat(0)));
}

std::string ProjPoint::str() const {
    std::string out = "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += " : ";
        out += rat_str(c_[i]);
    }
    return out + ")";
}

ProjPoint coordinate_point(int i) {
    std::vector<Rat> c(4, Rat(0));
    c[static_cast<size_t>(i)] = 1;
    return ProjPoint(std::move(c));
}

ProjPoint hadamard_point(const ProjPoint& p, const ProjPoint& q) {
    std::vector<Rat> c(4);
    bool any = false;
    for (size_t i = 0; i < 4; ++i) {
        c[i] = p[i] * q[i];
        if (c[i] != 0) any = true;
    }
    if (!any)
        throw DegenerateError("Hadamard product of " + p.str() + " and " + q.str() +
                              " vanishes (complementary supports)");
    return ProjPoint(std::move(c));
}

std::array<Rat, 6> pluecker_of_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    auto minor2 = [&](int i, int j) -> Rat { return a[i] * b[j] - a[j] * b[i]; };
    return {minor2(0, 1), minor2(0, 2), minor2(0, 3), minor2(1, 2), minor2(1, 3), minor2(2, 3)};
}

Rat pluecker_relation(const std::array<Rat, 6>& p) {
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

LineP3::LineP3(ProjPoint a, ProjPoint b, std::array<Rat, 6> pl)
    : a_(std::move(a)), b_(std::move(b)), pl_(std::move(pl)) {}

LineP3 LineP3::through(const ProjPoint& a, const ProjPoint& b) {
    Mat m(2, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = a[static_cast<size_t>(j)];
        m.at(1, j) = b[static_cast<size_t>(j)];
    }
    Mat r = rref(m);
    if (rank(r) < 2)
        throw DegenerateError("line through " + a.str() + " and " + b.str() +
                              " is undefined (points coincide)");
    ProjPoint ca(r.row(0)), cb(r.row(1));
    std::array<Rat, 6> pl = pluecker_of_pair(ca.coords(), cb.coords());
    std::vector<Rat> v(pl.begin(), pl.end());
    make_primitive(v);
    std::copy(v.begin(), v.end(), pl.begin());
    return LineP3(std::move(ca), std::move(cb), std::move(pl));
}

bool LineP3::contains(const ProjPoint& p) const {
    Mat m(3, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = a_[static_cast<size_t>(j)];
        m.at(1, j) = b_[static_cast<size_t>(j)];
        m.at(2, j) = p[static_cast<size_t>(j)];
    }
    return rank(m) == 2;
}

bool LineP3::in_coordinate_plane() const {
    for (size_t i = 0; i < 4; ++i)
        if (a_[i] == 0 && b_[i] == 0) return true;
    return false;
}

bool LineP3::pluecker_all_nonzero() const {
    return std::all_of(pl_.begin(), pl_.end(), [](const Rat& x) { return x != 0; });
}

std::string LineP3::str() const { return "line[" + a_.str() + ", " + b_.str() + "]"; }

StarImage point_star_line(const ProjPoint& p, const LineP3& line) {
    std::vector<Rat> u(4), v(4);
    bool any_u = false, any_v = false;
    for (size_t i = 0; i < 4; ++i) {
        u[i] = p[i] * line.a()[i];
        v[i] = p[i] * line.b()[i];
        any_u = any_u || u[i] != 0;
        any_v = any_v || v[i] != 0;
    }
    if (!any_u && !any_v)
        throw DegenerateError("Hadamard product of " + p.str() + " with " + line.str() +
                              " vanishes identically");
    if (!any_u) return {StarImage::Kind::Point, std::nullopt, ProjPoint(std::move(v))};
    if (!any_v) return {StarImage::Kind::Point, std::nullopt, ProjPoint(std::move(u))};
    Mat m(2, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = u[static_cast<size_t>(j)];
        m.at(1, j) = v[static_cast<size_t>(j)];
    }
    if (rank(m) == 1) return {StarImage::Kind::Point, std::nullopt, ProjPoint(std::move(u))};
    return {StarImage::Kind::Line, LineP3::through(ProjPoint(std::move(u)), ProjPoint(std::move(v))),
            std::nullopt};
}

std::array<Rat, 3> hadamard_family_biquadratics(const LineP3& l, const LineP3& m) {
    const auto& q = l.pluecker();
    const auto& r = m.pluecker();
    // Index key: 0 -> 01, 1 -> 02, 2 -> 03, 3 -> 12, 4 -> 13, 5 -> 23.
    Rat a = q[0] * q[5], b = q[1] * q[4], c = q[2] * q[3];
    Rat x = r[0] * r[5], y = r[1] * r[4], z = r[2] * r[3];
    return {a * y - b * x, a * z - c * x, b * z - c * y};
}

bool in_hadamard_family(const LineP3& l, const LineP3& m) {
    auto v = hadamard_family_biquadratics(l, m);
    return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

DiagonalAuto::DiagonalAuto(std::vector<Rat> weights) : w_(std::move(weights)) {
    if (w_.size() != 4) throw InputError("diagonal automorphism needs exactly 4 weights");
    for (const Rat& x : w_)
        if (x == 0) throw InputError("diagonal automorphism weights must all be nonzero");
    make_primitive(w_);
}

DiagonalAuto DiagonalAuto::inverse() const {
    std::vector<Rat> inv(4);
    for (size_t i = 0; i < 4; ++i) inv[i] = Rat(1) / w_[i];
    return DiagonalAuto(std::move(inv));
}

ProjPoint DiagonalAuto::act(const ProjPoint& p) const {
    std::vector<Rat> c(4);
    for (size_t i = 0; i < 4; ++i) c[i] = w_[i] * p[i];
    return ProjPoint(std::move(c));
}

LineP3 DiagonalAuto::act(const LineP3& line) const {
    return LineP3::through(act(line.a()), act(line.b()));
}

ParamCurve::ParamCurve(std::vector<Poly> forms) : forms_(std::move(forms)) {
    if (forms_.size() != 4) throw InputError("curve needs exactly 4 coordinate forms");
    int deg = -1;
    for (const Poly& f : forms_) {
        if (f.nvars() != 2) throw InputError("curve forms must live in a 2-variable ring (s, t)");
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) throw InputError("curve forms must be homogeneous");
        if (deg == -1) deg = f.degree();
        if (f.degree() != deg) throw InputError("curve forms must share one common degree");
    }
    if (deg == -1) throw InputError("curve forms are all zero");
    if (deg == 0) throw InputError("curve forms must have degree at least 1");
    degree_ = deg;
    Poly g = binary_form_gcd(forms_);
    if (g.degree() > 0)
        throw InputError("curve forms share the common factor " + g.str({"s", "t"}));
}

ParamCurve ParamCurve::from_line(const LineP3& line) {
    Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
    std::vector<Poly> forms;
    for (size_t i = 0; i < 4; ++i) forms.push_back(s * line.a()[i] + t * line.b()[i]);
    return ParamCurve(std::move(forms));
}

ParamCurve ParamCurve::conic_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    Mat m(3, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = a[static_cast<size_t>(j)];
        m.at(1, j) = b[static_cast<size_t>(j)];
        m.at(2, j) = c[static_cast<size_t>(j)];
    }
    if (rank(m) != 3)
        throw DegenerateError("conic through " + a.str() + ", " + b.str() + ", " + c.str() +
                              " is degenerate (points do not span a plane)");
    Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
    std::vector<Poly> forms;
    for (size_t i = 0; i < 4; ++i)
        forms.push_back(s * s * a[i] + s * t * b[i] + t * t * c[i]);
    return ParamCurve(std::move(forms));
}

int ParamCurve::span_rank() const {
    Mat m(degree_ + 1, 4);
    for (int k = 0; k <= degree_; ++k)
        for (int j = 0; j < 4; ++j)
            m.at(k, j) = forms_[static_cast<size_t>(j)].coeff(Exp{degree_ - k, k});
    return rank(m);
}

ProjPoint ParamCurve::evaluate(const Rat& s, const Rat& t) const {
    std::vector<Rat> c(4);
    bool any = false;
    for (size_t i = 0; i < 4; ++i) {
        c[i] = forms_[i].evaluate({s, t});
        if (c[i] != 0) any = true;
    }
    if (!any)
        throw DegenerateError("parametrization vanishes at (s : t) = (" + rat_str(s) + " : " +
                              rat_str(t) + ")");
    return ProjPoint(std::move(c));
}

ParamCurve torus_act(const DiagonalAuto& t, const ParamCurve& c) {
    std::vector<Poly> forms;
    for (size_t i = 0; i < 4; ++i) forms.push_back(c.forms()[i] * t.weights()[i]);
    return ParamCurve(std::move(forms));
}

namespace {

/// Minimal exponent of variable `var` over the terms of a nonzero form.
int min_exponent(const Poly& f, int var) {
    int m = -1;
    for (const auto& [e, c] : f.terms()) m = (m < 0) ? e[static_cast<size_t>(var)] : std::min(m, e[static_cast<size_t>(var)]);
    return m;
}

/// Univariate polynomial as dense ascending coefficients in s.
using UniPoly = std::vector<Rat>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Strips s^i t^j so the remainder touches neither axis form, dehomogenizes
/// at t = 1, and reports the stripped exponents.
UniPoly dehomogenize(const Poly& f, int& spow, int& tpow) {
    spow = min_exponent(f, 0);
    tpow = min_exponent(f, 1);
    int deg = f.degree() - spow - tpow;
    UniPoly u(static_cast<size_t>(deg) + 1, Rat(0));
    for (const auto& [e, c] : f.terms()) u[static_cast<size_t>(e[0] - spow)] = c;
    return u;
}

Poly rehomogenize(const UniPoly& u, int spow, int tpow) {
    Poly f(2);
    int deg = static_cast<int>(u.size()) - 1;
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k] != 0) f.add_term(Exp{static_cast<int>(k) + spow, deg - static_cast<int>(k) + tpow}, u[k]);
    return f;
}

}  // namespace

Poly binary_form_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    if (f.nvars() != 2 || g.nvars() != 2)
        throw InternalError("binary_form_gcd expects a 2-variable ring");
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw InternalError("binary_form_gcd expects homogeneous forms");
    int fs, ft, gs, gt;
    UniPoly uf = dehomogenize(f, fs, ft);
    UniPoly ug = dehomogenize(g, gs, gt);
    UniPoly h = uni_gcd(std::move(uf), std::move(ug));
    return rehomogenize(h, std::min(fs, gs), std::min(ft, gt)).normalized();
}

Poly binary_form_gcd(const std::vector<Poly>& fs) {
    Poly g = fs.empty() ? Poly::zero(2) : Poly::zero(fs.front().nvars());
    for (const Poly& f : fs) {
        g = binary_form_gcd(g, f);
        if (!g.is_zero() && g.degree() == 0) break;  // gcd already trivial
    }
    return g;
}

}  // namespace hadstar
