#include "lieaut/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lieaut {

std::string to_string(const Rational& q) {
    return q.get_str();
}

int euler_phi(int n) {
    int r = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<long>> cache;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const std::vector<long>& q = cyclotomic_polynomial(d);
        int dq = (int)q.size() - 1;
        int dp = (int)p.size() - 1;
        std::vector<long> quo(dp - dq + 1, 0);
        for (int i = dp; i >= dq; --i) {
            long c = p[i];
            if (!c) continue;
            quo[i - dq] = c;
            for (int j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
        }
        p = quo;
    }
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(n, p).first->second;
}

int lcm_conductor(int a, int b) {
    return std::lcm(a, b);
}

Cyc::Cyc() : n_(1), c_(1, Rational(0)) {}
Cyc::Cyc(long v) : n_(1), c_(1, Rational(v)) {}
Cyc::Cyc(const Rational& v) : n_(1), c_(1, v) { c_[0].canonicalize(); }

Cyc::Cyc(int conductor, std::vector<Rational> coeffs) : n_(conductor) {
    if (conductor < 1) throw std::invalid_argument("Cyc: conductor must be positive");
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    for (auto& c : coeffs) c.canonicalize();
    reduce_poly(coeffs);
    c_ = std::move(coeffs);
}

void Cyc::reduce_poly(std::vector<Rational>& p) const {
    const std::vector<long>& phi = cyclotomic_polynomial(n_);
    int deg = (int)phi.size() - 1;
    for (int i = (int)p.size() - 1; i >= deg; --i) {
        if (sgn(p[i]) == 0) continue;
        Rational c = p[i];
        for (int j = 0; j < deg; ++j) {
            if (phi[j]) p[i - deg + j] -= c * phi[j];
        }
        p[i] = 0;
    }
    p.resize(deg, Rational(0));
}

Cyc Cyc::zeta(int n, long k) {
    if (n < 1) throw std::invalid_argument("zeta: order must be positive");
    long e = ((k % n) + n) % n;
    std::vector<Rational> p(e + 1, Rational(0));
    p[e] = 1;
    return Cyc(n, std::move(p));
}

Cyc Cyc::lift(int n) const {
    if (n == n_) return *this;
    if (n % n_) throw std::invalid_argument("Cyc::lift: target conductor is not a multiple");
    int step = n / n_;
    std::vector<Rational> p((c_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    return Cyc(n, std::move(p));
}

bool Cyc::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q)) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i])) return false;
    return true;
}

Rational Cyc::rational() const {
    if (!is_rational()) throw std::domain_error("Cyc::rational: value is not rational");
    return c_[0];
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (o.n_ != n_) {
        int n = lcm_conductor(n_, o.n_);
        *this = lift(n);
        return *this += o.lift(n);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    return *this += -o;
}

Cyc& Cyc::operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (o.n_ != n_) {
        int n = lcm_conductor(n_, o.n_);
        *this = lift(n);
        return *this *= o.lift(n);
    }
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        Rational q = c_[0];
        *this = o;
        return *this *= q;
    }
    std::vector<Rational> p(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!sgn(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (sgn(o.c_[j])) p[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce_poly(p);
    c_ = std::move(p);
    return *this;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc::inverse: zero has no inverse");
    if (is_rational()) return Cyc(n_, {Rational(1) / c_[0]});
    // columns of the multiplication matrix: this * x^j
    int m = (int)c_.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
    Cyc col = *this;
    Cyc x = zeta(n_, 1);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) a[i][j] = col.c_[i];
        col *= x;
    }
    a[0][m] = 1;
    for (int c = 0; c < m; ++c) {
        int piv = c;
        while (piv < m && !sgn(a[piv][c])) ++piv;
        if (piv == m) throw std::logic_error("Cyc::inverse: singular multiplication matrix");
        std::swap(a[piv], a[c]);
        Rational inv = Rational(1) / a[c][c];
        for (int j = c; j <= m; ++j) a[c][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == c || !sgn(a[i][c])) continue;
            Rational f = a[i][c];
            for (int j = c; j <= m; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> u(m);
    for (int i = 0; i < m; ++i) u[i] = a[i][m];
    return Cyc(n_, std::move(u));
}

Cyc& Cyc::operator/=(const Cyc& o) {
    return *this *= o.inverse();
}

Cyc Cyc::galois(long k) const {
    long e = ((k % n_) + n_) % n_;
    if (std::gcd(e, (long)n_) != 1) throw std::invalid_argument("Cyc::galois: exponent not a unit");
    std::vector<Rational> p((c_.size() - 1) * e + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i])) p[(i * e) % n_] += c_[i];
    }
    return Cyc(n_, std::move(p));
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.n_ != b.n_) {
        int n = lcm_conductor(a.n_, b.n_);
        return a.lift(n).c_ == b.lift(n).c_;
    }
    return a.c_ == b.c_;
}

bool operator<(const Cyc& a, const Cyc& b) {
    if (a.n_ != b.n_) {
        int n = lcm_conductor(a.n_, b.n_);
        return a.lift(n) < b.lift(n);
    }
    return a.c_ < b.c_;
}

std::string Cyc::str() const {
    if (is_rational()) return to_string(c_[0]);
    std::ostringstream os;
    os << "cyclotomic(" << n_ << "): ";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << to_string(c_[i]);
    }
    return os.str();
}

std::size_t Cyc::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& q : c_) {
        h ^= std::hash<std::string>{}(q.get_str());
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

Rational parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s[0] == '+') s = s.substr(1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + raw + "'");
    q.canonicalize();
    return q;
}

} // namespace

Cyc parse_cyc(const std::string& raw) {
    std::string s = trim(raw);
    const std::string tag = "cyclotomic(";
    if (s.rfind(tag, 0) == 0) {
        std::size_t close = s.find(')');
        std::size_t colon = s.find(':', close);
        if (close == std::string::npos || colon == std::string::npos)
            throw std::invalid_argument("bad cyclotomic scalar: '" + raw + "'");
        int n = std::stoi(s.substr(tag.size(), close - tag.size()));
        if (n < 1) throw std::invalid_argument("conductor must be positive");
        std::vector<Rational> c;
        std::stringstream ss(s.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
        return Cyc(n, std::move(c));
    }
    return Cyc(parse_rational(s));
}

std::vector<Cyc> parse_cyc_list(const std::string& raw) {
    std::vector<Cyc> out;
    char sep = raw.find("cyclotomic") != std::string::npos || raw.find(';') != std::string::npos ? ';' : ',';
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (trim(item).empty()) continue;
        out.push_back(parse_cyc(item));
    }
    return out;
}

} // namespace lieaut
