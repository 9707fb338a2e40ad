#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lieaut {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/* Integer coefficients of the N-th cyclotomic polynomial, constant term first. */
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

/*
 * Element of Q(zeta_N), stored as a residue modulo Phi_N.
 * Mixed-conductor arithmetic lifts both sides to the lcm.
 */
class Cyc {
public:
    Cyc();
    Cyc(long v);
    Cyc(const Rational& v);
    Cyc(int conductor, std::vector<Rational> coeffs);

    static Cyc zeta(int n, long k = 1);

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyc lift(int n) const;
    bool is_zero() const;
    bool is_rational() const;
    Rational rational() const;

    Cyc inverse() const;
    /* Galois automorphism zeta -> zeta^k, gcd(k,N)=1. */
    Cyc galois(long k) const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);
    Cyc& operator*=(const Rational& q);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    friend Cyc operator*(Cyc a, const Rational& q) { return a *= q; }
    friend Cyc operator*(const Rational& q, Cyc a) { return a *= q; }

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
    /* Total order on coefficient vectors after lifting; only for containers. */
    friend bool operator<(const Cyc& a, const Cyc& b);

    std::string str() const;
    std::size_t hash() const;

private:
    int n_ = 1;
    std::vector<Rational> c_;
    void reduce_poly(std::vector<Rational>& p) const;
};

/* Parses "p/q" or "cyclotomic(N): c0,c1,...". */
Cyc parse_cyc(const std::string& s);
/* Items separated by ';' (or ',' when every item is rational). */
std::vector<Cyc> parse_cyc_list(const std::string& s);

int lcm_conductor(int a, int b);

} // namespace lieaut
