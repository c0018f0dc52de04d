#include "ddlab/r4.hpp"

#include <cmath>
#include <stdexcept>

#include "ddlab/curves.hpp"
#include "ddlab/univar.hpp"

namespace ddlab {

Hyperplane4 hyperplane_of(const Point2& p, const Point2& q) {
    if (p.is_origin() && q.is_origin())
        throw std::invalid_argument("hyperplane_of: p = q = (0,0) gives no hyperplane");
    Point4 n{{p.x1, p.x2, -q.x1, -q.x2}};
    return {n, (sq_norm(p) - sq_norm(q)) / Rational(2)};
}

namespace {

// t with n2 == t * n1, if the normals are proportional
std::optional<Rational> proportionality(const Point4& n1, const Point4& n2) {
    std::optional<Rational> t;
    for (size_t i = 0; i < 4; ++i) {
        if (n1[i].is_zero()) {
            if (!n2[i].is_zero()) return std::nullopt;
            continue;
        }
        Rational r = n2[i] / n1[i];
        if (t && !(*t == r)) return std::nullopt;
        t = r;
    }
    return t;  // engaged unless n1 == 0
}

struct AffineSolution {
    bool consistent = false;
    Point4 base;
    std::vector<Point4> dirs;
};

// Exact Gauss-Jordan elimination of n . w = offset rows; the solution set is
// base + span(dirs).
AffineSolution solve_hyperplanes(const std::vector<Hyperplane4>& eqs) {
    size_t m = eqs.size();
    std::vector<std::array<Rational, 5>> rows(m);
    for (size_t i = 0; i < m; ++i)
        rows[i] = {eqs[i].normal[0], eqs[i].normal[1], eqs[i].normal[2], eqs[i].normal[3],
                   eqs[i].offset};
    std::vector<int> pivot_cols;
    size_t r = 0;
    for (int col = 0; col < 4 && r < m; ++col) {
        size_t sel = r;
        while (sel < m && rows[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = rows[r][col].inverse();
        for (int j = col; j <= 4; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Rational f = rows[i][col];
            for (int j = col; j <= 4; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (!rows[i][4].is_zero()) return {};  // inconsistent
    AffineSolution sol;
    sol.consistent = true;
    std::array<bool, 4> is_pivot{};
    for (size_t k = 0; k < pivot_cols.size(); ++k) {
        is_pivot[pivot_cols[k]] = true;
        sol.base[pivot_cols[k]] = rows[k][4];
    }
    for (int f = 0; f < 4; ++f) {
        if (is_pivot[f]) continue;
        Point4 d;
        d[f] = Rational(1);
        for (size_t k = 0; k < pivot_cols.size(); ++k) d[pivot_cols[k]] = -rows[k][f];
        sol.dirs.push_back(d);
    }
    return sol;
}

struct Vec2 {
    Rational a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

Vec2 upart(const Point4& w) { return {w[0], w[1]}; }
Vec2 vpart(const Point4& w) { return {w[2], w[3]}; }
Rational dot2(const Vec2& x, const Vec2& y) { return x.a * y.a + x.b * y.b; }

// ----- quadratic surd sign evaluation, for roots of degree-2 gcd loci -----

// value a + b*sqrt(g), with g > 0 and not a perfect square
struct QuadSurd {
    Rational a, b, g;
};

int sign_of(const QuadSurd& s) {
    int sa = s.a.sign(), sb = s.b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b| sqrt(g) decides
    Rational lhs = s.a.squared(), rhs = s.b.squared() * s.g;
    int cmp = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
    return sa > 0 ? cmp : -cmp;
}

// f(e + fr*sqrt(g)), Horner over Q(sqrt(g))
QuadSurd eval_at_surd(const UnivarPoly& f, const Rational& e, const Rational& fr,
                      const Rational& g) {
    QuadSurd acc{Rational(0), Rational(0), g};
    for (int i = f.degree(); i >= 0; --i) {
        Rational na = acc.a * e + acc.b * fr * g + f.coeff(i);
        Rational nb = acc.a * fr + acc.b * e;
        acc.a = na;
        acc.b = nb;
    }
    return acc;
}

// ----- restricted circle equations -----

// |base + s*dir|^2 - 1 as a polynomial in s
UnivarPoly line_circle(const Vec2& base, const Vec2& dir) {
    return UnivarPoly::of(
        {dot2(base, base) - Rational(1), Rational(2) * dot2(base, dir), dot2(dir, dir)});
}

// |base + x e1 + y e2|^2 - 1 split by powers of y:  A2 y^2 + A1(x) y + A0(x),
// with A2 a constant (guaranteed by the shear chosen in plane_case)
struct YQuadric {
    Rational A2;
    UnivarPoly A1, A0;
};

YQuadric restrict_circle(const Vec2& base, const Vec2& e1, const Vec2& e2) {
    YQuadric q;
    q.A2 = dot2(e2, e2);
    q.A1 = UnivarPoly::of({Rational(2) * dot2(base, e2), Rational(2) * dot2(e1, e2)});
    q.A0 = UnivarPoly::of(
        {dot2(base, base) - Rational(1), Rational(2) * dot2(base, e1), dot2(e1, e1)});
    return q;
}

std::array<double, 4> to_witness(const Point4& base, const Point4& d1, double s) {
    std::array<double, 4> w;
    for (size_t i = 0; i < 4; ++i) w[i] = base[i].to_double() + s * d1[i].to_double();
    return w;
}

std::array<double, 4> to_witness(const Point4& base, const Point4& d1, const Point4& d2,
                                 double x, double y) {
    std::array<double, 4> w;
    for (size_t i = 0; i < 4; ++i)
        w[i] = base[i].to_double() + x * d1[i].to_double() + y * d2[i].to_double();
    return w;
}

// rational midpoint of the interval after shrinking it below ~2^-62 of scale
Rational refined_root(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    Rational scale = Rational(1) + lo.abs() + hi.abs();
    Rational width = scale / Rational(mpz_class(1) << 62, mpz_class(1));
    auto [a, b] = chain.refine(lo, hi, width);
    return (a + b) / Rational(2);
}

// Gauss-Newton on the full constraint set (two unit circles plus the linear
// equations). Drives all residuals to machine precision independently of how
// well-conditioned the flat's affine parametrization is.
void polish_witness(const std::vector<Hyperplane4>& eqs, std::array<double, 4>& w) {
    size_t m = 2 + eqs.size();
    for (int iter = 0; iter < 6; ++iter) {
        std::vector<double> r(m);
        std::vector<std::array<double, 4>> J(m);
        r[0] = w[0] * w[0] + w[1] * w[1] - 1;
        J[0] = {2 * w[0], 2 * w[1], 0, 0};
        r[1] = w[2] * w[2] + w[3] * w[3] - 1;
        J[1] = {0, 0, 2 * w[2], 2 * w[3]};
        for (size_t k = 0; k < eqs.size(); ++k) {
            double acc = -eqs[k].offset.to_double();
            for (int i = 0; i < 4; ++i) {
                J[2 + k][i] = eqs[k].normal[i].to_double();
                acc += J[2 + k][i] * w[i];
            }
            r[2 + k] = acc;
        }
        // normal equations (J^T J) dx = J^T r, 4x4 with partial pivoting
        double A[4][5] = {};
        for (size_t row = 0; row < m; ++row)
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) A[i][j] += J[row][i] * J[row][j];
                A[i][4] += J[row][i] * r[row];
            }
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int i = col + 1; i < 4; ++i)
                if (std::abs(A[i][col]) > std::abs(A[piv][col])) piv = i;
            if (std::abs(A[piv][col]) < 1e-13) return;  // singular, keep what we have
            std::swap(A[col], A[piv]);
            for (int i = 0; i < 4; ++i) {
                if (i == col) continue;
                double f = A[i][col] / A[col][col];
                for (int j = col; j <= 4; ++j) A[i][j] -= f * A[col][j];
            }
        }
        double step = 0;
        for (int i = 0; i < 4; ++i) {
            double dx = A[i][4] / A[i][i];
            w[i] -= dx;
            step = std::max(step, std::abs(dx));
        }
        if (step < 1e-15) break;
    }
}

// intersection of the 1-dimensional solution line with both circles
IntersectionResult line_case(const AffineSolution& sol, const std::vector<Hyperplane4>& eqs) {
    const Point4& d = sol.dirs[0];
    UnivarPoly g1 = line_circle(upart(sol.base), upart(d));
    UnivarPoly g2 = line_circle(vpart(sol.base), vpart(d));
    if (g1.is_zero() && g2.is_zero())
        throw std::logic_error("line_case: both circle restrictions vanished");
    UnivarPoly h = UnivarPoly::gcd(g1, g2);
    IntersectionResult res;
    if (h.is_constant()) return res;  // coprime restrictions, count 0
    SturmChain chain(h);
    res.count = chain.count_all_roots();
    for (auto& [lo, hi] : chain.isolate_roots()) {
        auto w = to_witness(sol.base, d, refined_root(chain, lo, hi).to_double());
        polish_witness(eqs, w);
        res.witnesses.push_back(w);
    }
    return res;
}

int multiplicity_from_disc_sign(int s) { return s > 0 ? 2 : (s == 0 ? 1 : 0); }

IntersectionResult plane_case(const AffineSolution& sol, const std::vector<Hyperplane4>& eqs) {
    // a vanishing constant restriction forces the other circle restriction to
    // be a genuine ellipse: positive-dimensional intersection
    for (auto part : {upart, vpart}) {
        if (part(sol.dirs[0]).is_zero() && part(sol.dirs[1]).is_zero()) {
            Rational val = dot2(part(sol.base), part(sol.base)) - Rational(1);
            if (val.is_zero()) return {.degenerate = true};
            return {};  // that circle equation is unsatisfiable on the flat
        }
    }
    // shear the y-direction so both restricted quadrics keep constant nonzero
    // leading coefficients in y; at most one lambda per part is bad
    Point4 e1 = sol.dirs[0], e2 = sol.dirs[1];
    bool sheared = false;
    for (long lam = 0; lam <= 2 && !sheared; ++lam) {
        Point4 cand;
        for (size_t i = 0; i < 4; ++i) cand[i] = sol.dirs[1][i] + Rational(lam) * sol.dirs[0][i];
        if (!upart(cand).is_zero() && !vpart(cand).is_zero()) {
            e2 = cand;
            sheared = true;
        }
    }
    if (!sheared) throw std::logic_error("plane_case: no valid shear found");

    YQuadric q1 = restrict_circle(upart(sol.base), upart(e1), upart(e2));
    YQuadric q2 = restrict_circle(vpart(sol.base), vpart(e1), vpart(e2));

    // eliminate y^2: T = B2*Q1 - A2*Q2 = a(x) y + b(x)
    UnivarPoly a = q1.A1.scaled(q2.A2) - q2.A1.scaled(q1.A2);
    UnivarPoly b = q1.A0.scaled(q2.A2) - q2.A0.scaled(q1.A2);
    if (a.is_zero() && b.is_zero()) return {.degenerate = true};  // identical quadrics

    // resultant of Q2 and T in y: degree <= 4 in x
    UnivarPoly R1 = (b * b).scaled(q2.A2) - q2.A1 * a * b + q2.A0 * a * a;
    if (R1.is_zero()) return {.degenerate = true};  // common linear-in-y factor

    // where a and b vanish together the two quadrics are proportional; the
    // shared y-roots there are counted from the discriminant sign
    UnivarPoly c = UnivarPoly::gcd(a, b);
    UnivarPoly D1 = q1.A1 * q1.A1 - q1.A0.scaled(Rational(4) * q1.A2);

    struct PropRoot {
        double x;
        int m;
    };
    std::vector<PropRoot> prop;
    if (c.degree() == 1) {
        Rational x0 = -c.coeff(0) / c.coeff(1);
        prop.push_back({x0.to_double(), multiplicity_from_disc_sign(D1.eval(x0).sign())});
    } else if (c.degree() == 2) {
        Rational disc = c.coeff(1).squared() - Rational(4) * c.coeff(2) * c.coeff(0);
        if (disc.is_zero()) {
            Rational x0 = -c.coeff(1) / (Rational(2) * c.coeff(2));
            prop.push_back({x0.to_double(), multiplicity_from_disc_sign(D1.eval(x0).sign())});
        } else if (disc.sign() > 0) {
            Rational e = -c.coeff(1) / (Rational(2) * c.coeff(2));
            Rational fr = (Rational(2) * c.coeff(2)).inverse();
            if (auto root = disc.exact_sqrt()) {
                for (const Rational& x0 : {e + fr * *root, e - fr * *root})
                    prop.push_back(
                        {x0.to_double(), multiplicity_from_disc_sign(D1.eval(x0).sign())});
            } else {
                double ed = e.to_double(), fd = fr.to_double(), rd = std::sqrt(disc.to_double());
                prop.push_back({ed + fd * rd, multiplicity_from_disc_sign(
                                                  sign_of(eval_at_surd(D1, e, fr, disc)))});
                prop.push_back({ed - fd * rd, multiplicity_from_disc_sign(
                                                  sign_of(eval_at_surd(D1, e, -fr, disc)))});
            }
        }
    }

    SturmChain chain_r(R1), chain_c(c);
    IntersectionResult res;
    // every root of c is a root of R1 (c^2 divides R1), so the difference
    // counts exactly the one-point lifts
    res.count = chain_r.count_all_roots() - chain_c.count_all_roots();
    for (const auto& pr : prop) res.count += pr.m;

    for (auto& [lo, hi] : chain_r.isolate_roots()) {
        bool on_prop_locus =
            c.degree() >= 1 &&
            (lo == hi ? c.eval(lo).is_zero() : chain_c.count_roots_in(lo, hi) > 0);
        if (on_prop_locus) continue;
        // lift y exactly at the rational midpoint, so a small a(x) cannot
        // amplify floating-point noise
        Rational xr = refined_root(chain_r, lo, hi);
        double x = xr.to_double();
        double y = (-b.eval(xr) / a.eval(xr)).to_double();
        auto w = to_witness(sol.base, e1, e2, x, y);
        polish_witness(eqs, w);
        res.witnesses.push_back(w);
    }
    double a2 = q1.A2.to_double();
    for (const auto& pr : prop) {
        if (pr.m == 0) continue;
        double mid = -q1.A1.eval_double(pr.x) / (2 * a2);
        double off = pr.m == 1 ? 0.0
                               : std::sqrt(std::max(0.0, D1.eval_double(pr.x))) /
                                     (2 * std::abs(a2));
        for (int k = 0; k < pr.m; ++k) {
            auto w = to_witness(sol.base, e1, e2, pr.x, k == 0 ? mid + off : mid - off);
            polish_witness(eqs, w);
            res.witnesses.push_back(w);
        }
    }
    return res;
}

}  // namespace

TwoFlat::TwoFlat(Hyperplane4 h1, Hyperplane4 h2) : h1_(std::move(h1)), h2_(std::move(h2)) {
    if (h1_.normal.is_zero() || h2_.normal.is_zero())
        throw std::invalid_argument("TwoFlat: zero normal");
    if (proportionality(h1_.normal, h2_.normal))
        throw std::invalid_argument("TwoFlat: hyperplane normals are linearly dependent");
}

IntersectionResult intersect_with_2flat(const Point2& p, const Point2& q, const TwoFlat& K) {
    std::vector<Hyperplane4> eqs{K.h1(), K.h2(), hyperplane_of(p, q)};
    AffineSolution sol = solve_hyperplanes(eqs);
    if (!sol.consistent) return {};  // flat misses the curve's hyperplane
    if (sol.dirs.size() == 1) return line_case(sol, eqs);
    if (sol.dirs.size() == 2) return plane_case(sol, eqs);
    throw std::logic_error("intersect_with_2flat: unexpected solution dimension");
}

IntersectionResult curve_pair_intersection(const Point2& p, const Point2& q, const Point2& p2,
                                           const Point2& q2) {
    if (p == p2 && q == q2)
        throw std::invalid_argument("curve_pair_intersection: identical curves");
    Hyperplane4 h1 = hyperplane_of(p, q);
    Hyperplane4 h2 = hyperplane_of(p2, q2);
    if (auto t = proportionality(h1.normal, h2.normal)) {
        // (p2, q2) = t (p, q): parallel hyperplanes, disjoint unless the
        // offsets agree, in which case the curves coincide
        if (h2.offset == *t * h1.offset) return {.degenerate = true};
        return {};  // count 0
    }
    return intersect_with_2flat(p, q, TwoFlat(h1, h2));
}

std::array<double, 4> isolated_point_probe(const Point2& p, const Point2& q,
                                           const Point4& point, double t) {
    if (p.is_origin() || q.is_origin())
        throw std::invalid_argument("isolated_point_probe: p and q must be nonzero");
    if (sq_norm(p) == sq_norm(q))
        throw std::invalid_argument("isolated_point_probe: requires |p| != |q|");
    if (norm_gap_is_two(p, q))
        throw std::invalid_argument("isolated_point_probe: requires | |p| - |q| | != 2");
    Point2 u{point[0], point[1]}, v{point[2], point[3]};
    if (!on_unit_circle(u) || !on_unit_circle(v) || !f_pq_eval(p, q, u, v).is_zero())
        throw std::invalid_argument("isolated_point_probe: point is not on the curve");

    double ru = std::sqrt(sq_norm(p).to_double());
    double rv = std::sqrt(sq_norm(q).to_double());
    double du = std::sqrt(sq_dist(u, p).to_double());
    double dv = std::sqrt(sq_dist(v, q).to_double());
    double safe =
        std::min(std::min(ru + 1 - du, du - (ru - 1)), std::min(rv + 1 - dv, dv - (rv - 1))) / 2;
    if (std::abs(t) > safe)
        throw std::invalid_argument("isolated_point_probe: |t| exceeds the safe radius");
    if (t == 0.0)
        return {point[0].to_double(), point[1].to_double(), point[2].to_double(),
                point[3].to_double()};

    // unit circle /\ circle(center, d0 + t), staying on start's side of the
    // line through the center and the origin
    auto continue_on_circle = [&](const Point2& center, const Point2& start, double r,
                                  double d0) -> std::array<double, 2> {
        double d = d0 + t;
        double a = (1 + r * r - d * d) / (2 * r);
        double b = std::sqrt(std::max(0.0, 1 - a * a));
        int side = cross(center, start).sign();
        if (side == 0)
            throw std::invalid_argument(
                "isolated_point_probe: point lies on the line through the center and the origin");
        double cx = center.x1.to_double() / r, cy = center.x2.to_double() / r;
        return {a * cx - side * b * cy, a * cy + side * b * cx};
    };

    auto ut = continue_on_circle(p, u, ru, du);
    auto vt = continue_on_circle(q, v, rv, dv);
    std::array<double, 4> out{ut[0], ut[1], vt[0], vt[1]};

    auto dist = [](double x1, double y1, double x2, double y2) {
        return std::sqrt((x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2));
    };
    double e1 = std::abs(out[0] * out[0] + out[1] * out[1] - 1);
    double e2 = std::abs(out[2] * out[2] + out[3] * out[3] - 1);
    double e3 = std::abs(dist(out[0], out[1], p.x1.to_double(), p.x2.to_double()) - (du + t));
    double e4 = std::abs(dist(out[2], out[3], q.x1.to_double(), q.x2.to_double()) - (dv + t));
    if (std::max(std::max(e1, e2), std::max(e3, e4)) > 1e-12)
        throw std::runtime_error("isolated_point_probe: no solution within tolerance budget");
    return out;
}

}  // namespace ddlab
