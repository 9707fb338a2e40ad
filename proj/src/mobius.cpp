#include "lieaut/mobius.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lieaut {

std::complex<double> numeric(const Cyc& c) {
    std::complex<double> s = 0;
    const double t = 2 * M_PI / c.conductor();
    for (std::size_t k = 0; k < c.coeffs().size(); ++k)
        if (sgn(c.coeffs()[k])) s += c.coeffs()[k].get_d() * std::polar(1.0, t * (double)k);
    return s;
}

namespace {

/* sqrt(p) for a prime p, or sqrt(-1) for p = -1. */
Cyc sqrt_prime(long p) {
    if (p == -1) return Cyc::zeta(4);
    if (p == 2) return Cyc::zeta(8) + Cyc::zeta(8, 7);
    // quadratic Gauss sum: g^2 = (-1)^((p-1)/2) p
    Cyc g;
    for (long a = 1; a < p; ++a) {
        long r = 1, base = a % p, e = (p - 1) / 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        g += Cyc::zeta((int)p, a) * Rational(r == 1 ? 1 : -1);
    }
    return p % 4 == 1 ? g : g * -Cyc::zeta(4);
}

/* n = r^2 m with m squarefree */
void split_square(mpz_class n, mpz_class& r, std::vector<long>& primes) {
    r = 1;
    for (long p = 2; mpz_class(p) * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) r *= p;
        if (e % 2) primes.push_back(p);
    }
    if (n > 1) {
        if (!n.fits_slong_p()) throw std::domain_error("sqrt_rational: prime factor too large");
        primes.push_back(n.get_si());
    }
}

} // namespace

Cyc sqrt_rational(const Rational& q0) {
    Rational q = q0;
    q.canonicalize();
    if (q == 0) return Cyc(0);
    std::vector<long> primes;
    if (q < 0) primes.push_back(-1);
    mpz_class num = abs(q.get_num()), den = q.get_den();
    // sqrt(num/den) = sqrt(num*den)/den
    mpz_class r;
    split_square(num * den, r, primes);
    Cyc s(Rational(r, den));
    for (long p : primes) s *= sqrt_prime(p);
    return s;
}

ProjPoint ProjPoint::normalized() const {
    if (is_infinity()) return infinity();
    return affine(x * y.inverse());
}

std::complex<double> ProjPoint::value() const {
    if (is_infinity()) return {INFINITY, 0};
    return numeric(x) / numeric(y);
}

std::string ProjPoint::str() const {
    if (is_infinity()) return "[1:0]";
    ProjPoint n = normalized();
    return "[" + n.x.str() + ":1]";
}

ProjPoint MobiusMap::operator()(const ProjPoint& p) const {
    return {a * p.x + b * p.y, c * p.x + d * p.y};
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

MobiusMap MobiusMap::normalized() const {
    const Cyc* lead = !a.is_zero() ? &a : &b;
    Cyc inv = lead->inverse();
    return {a * inv, b * inv, c * inv, d * inv};
}

bool MobiusMap::is_identity() const {
    return b.is_zero() && c.is_zero() && a == d;
}

int MobiusMap::order(int bound) const {
    MobiusMap p = *this;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_identity()) return k;
        p = compose(p).normalized();
    }
    throw std::domain_error("Mobius map of infinite or large order");
}

std::string MobiusMap::str() const {
    MobiusMap n = normalized();
    return "[[" + n.a.str() + ", " + n.b.str() + "], [" + n.c.str() + ", " + n.d.str() + "]]";
}

bool same_map(const MobiusMap& f, const MobiusMap& g) {
    const Cyc* u[4] = {&f.a, &f.b, &f.c, &f.d};
    const Cyc* v[4] = {&g.a, &g.b, &g.c, &g.d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
    return true;
}

namespace {

Cyc det2(const ProjPoint& p, const ProjPoint& q) { return p.x * q.y - p.y * q.x; }

/* Sends infinity, 0, 1 to p2, p1, p3. */
MobiusMap frame(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    Cyc d = det2(p2, p1);
    if (d.is_zero()) throw std::invalid_argument("Mobius frame: points not distinct");
    // p3 ~ mu p2 + nu p1, scaled by d
    Cyc mu = det2(p3, p1), nu = det2(p2, p3);
    if (mu.is_zero() || nu.is_zero()) throw std::invalid_argument("Mobius frame: points not distinct");
    return {mu * p2.x, nu * p1.x, mu * p2.y, nu * p1.y};
}

} // namespace

MobiusMap mobius_from_triples(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& q1,
                              const ProjPoint& q2, const ProjPoint& q3) {
    return frame(q1, q2, q3).compose(frame(p1, p2, p3).inverse());
}

std::vector<ProjPoint> fixed_points(const MobiusMap& m) {
    // c z^2 + (d - a) z - b = 0 in z = x/y
    if (m.is_identity()) throw std::invalid_argument("fixed_points: identity fixes every point");
    std::vector<ProjPoint> out;
    if (m.c.is_zero()) {
        out.push_back(ProjPoint::infinity());
        Cyc da = m.d - m.a;
        if (!da.is_zero()) out.push_back(ProjPoint::affine(m.b * da.inverse()));
        return out;
    }
    Cyc tr = m.a + m.d;
    Cyc disc = tr * tr - Cyc(4) * m.det();
    if (!disc.is_rational()) throw std::domain_error("fixed_points: discriminant is not rational");
    Cyc s = sqrt_rational(disc.rational());
    Cyc den = (Cyc(2) * m.c).inverse();
    out.push_back(ProjPoint::affine((m.a - m.d + s) * den));
    if (!s.is_zero()) out.push_back(ProjPoint::affine((m.a - m.d - s) * den));
    return out;
}

std::vector<MobiusMap> group_closure(const std::vector<MobiusMap>& gens, std::size_t bound) {
    std::vector<MobiusMap> g{MobiusMap::identity()};
    auto known = [&](const MobiusMap& m) {
        for (const auto& h : g)
            if (same_map(h, m)) return true;
        return false;
    };
    for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& s : gens) {
            MobiusMap m = s.compose(g[i]);
            if (known(m)) continue;
            g.push_back(m);
            if (g.size() > bound) throw std::domain_error("group_closure: group exceeds the bound");
        }
    return g;
}

int common_conductor(const std::vector<ProjPoint>& pts) {
    int n = 1;
    for (const auto& p : pts) n = std::lcm(n, std::lcm(p.x.conductor(), p.y.conductor()));
    return n;
}

std::vector<ProjPoint> common_field(std::vector<ProjPoint> pts) {
    for (auto& p : pts) p = p.normalized();
    int n = common_conductor(pts);
    for (auto& p : pts) p = {p.x.lift(n), p.y.lift(n)};
    return pts;
}

bool point_less(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    if (a.is_infinity()) return false;
    return a.x < b.x;
}

std::vector<ProjPoint> orbit(const std::vector<MobiusMap>& group, const ProjPoint& p) {
    std::vector<ProjPoint> out;
    for (const auto& g : group) {
        ProjPoint q = g(p);
        bool seen = false;
        for (const auto& r : out)
            if (same_point(q, r)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(q.normalized());
    }
    return out;
}

} // namespace lieaut
