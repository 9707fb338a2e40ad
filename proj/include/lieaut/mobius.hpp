#pragma once

#include "lieaut/cyclotomic.hpp"

#include <complex>
#include <string>
#include <vector>

namespace lieaut {

std::complex<double> numeric(const Cyc& c);

/* Exact square root of a rational number, in Q(zeta_N) for the N it needs (Gauss sums). */
Cyc sqrt_rational(const Rational& q);

/* [x : y] on the projective line; [z : 1] is the affine point z, [1 : 0] is infinity. */
struct ProjPoint {
    Cyc x{1}, y{0};

    static ProjPoint affine(const Cyc& z) { return {z, Cyc(1)}; }
    static ProjPoint infinity() { return {Cyc(1), Cyc(0)}; }
    bool is_infinity() const { return y.is_zero(); }
    /* Scaled to [z : 1] or [1 : 0]. */
    ProjPoint normalized() const;
    std::complex<double> value() const;   // affine value; infinite for [1 : 0]
    std::string str() const;

    friend bool same_point(const ProjPoint& a, const ProjPoint& b) { return a.x * b.y == a.y * b.x; }
};

/* z -> (a z + b) / (c z + d), up to scalars. */
struct MobiusMap {
    Cyc a{1}, b{0}, c{0}, d{1};

    static MobiusMap identity() { return {}; }
    ProjPoint operator()(const ProjPoint& p) const;
    Cyc det() const { return a * d - b * c; }
    /* this o o */
    MobiusMap compose(const MobiusMap& o) const;
    /* adjugate */
    MobiusMap inverse() const { return {d, -b, -c, a}; }
    /* First nonzero entry scaled to 1. */
    MobiusMap normalized() const;
    bool is_identity() const;
    int order(int bound = 120) const;
    std::string str() const;

    friend bool same_map(const MobiusMap& f, const MobiusMap& g);
};

/* The unique map sending p_i to q_i. */
MobiusMap mobius_from_triples(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& q1,
                              const ProjPoint& q2, const ProjPoint& q3);

/* Fixed points of a map whose fixed-point discriminant is rational (always so for order 2 and 3 with rational det). */
std::vector<ProjPoint> fixed_points(const MobiusMap& m);

/* Group generated by the maps (finite). Elements are products of the generators, so a rational det stays rational. */
std::vector<MobiusMap> group_closure(const std::vector<MobiusMap>& gens, std::size_t bound = 200);
std::vector<ProjPoint> orbit(const std::vector<MobiusMap>& group, const ProjPoint& p);

/* All points lifted to one conductor and normalized, so they can be compared and sorted. */
std::vector<ProjPoint> common_field(std::vector<ProjPoint> pts);
bool point_less(const ProjPoint& a, const ProjPoint& b);

} // namespace lieaut
