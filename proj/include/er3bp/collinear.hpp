#ifndef ER3BP_COLLINEAR_HPP
#define ER3BP_COLLINEAR_HPP

#include <vector>

#include "er3bp/types.hpp"

namespace er3bp {

enum class CollinearPoint { L1 = 1, L2 = 2, L3 = 3 };

const char* to_string(CollinearPoint p);
CollinearPoint collinear_point_from_string(const std::string& s);

// Euler quintic P(gamma) for the given point, and its derivative.
double euler_quintic(CollinearPoint point, double mu, double gamma);
double euler_quintic_deriv(CollinearPoint point, double mu, double gamma);

// Unique positive root of the Euler quintic: distance from the closest
// primary.  Bracketed bisection to width 1e-10 followed by Newton polish.
double solve_gamma(CollinearPoint point, double mu);

// Geometry of one collinear point: root gamma, synodic offset a_j, and the
// sign convention of the local-frame transform (upper signs for L1/L2,
// lower for L3).  Note the frame orientation follows the convention in
// which L2 lies at the left of the smaller primary and L3 at the right of
// the larger one.
class CollinearFrame {
public:
    CollinearFrame(CollinearPoint point, double mu);

    CollinearPoint point() const { return point_; }
    double mu() const { return mu_; }
    double gamma() const { return gamma_; }
    double a_offset() const { return a_; }
    int sign() const { return sign_; }   // +1: L1/L2, -1: L3

    // synodic X position of the point itself: mu + a_j
    double synodic_x() const { return mu_ + a_; }

    // expansion coefficient c_n(mu); cached up to the requested order
    double cn(int n) const;

    Vec3 local_from_synodic(const Vec3& XYZ) const;
    Vec3 synodic_from_local(const Vec3& xyz) const;
    // velocities transform with the same linear map
    Vec3 local_from_synodic_vel(const Vec3& V) const { return local_from_synodic_linear(V); }
    Vec3 synodic_from_local_vel(const Vec3& v) const { return synodic_from_local_linear(v); }

    // affine energy map E_synodic = gamma^2 * E_local + const(point, mu)
    double energy_synodic_from_local(double e_local) const;
    double energy_local_from_synodic(double e_synodic) const;
    double energy_intercept() const;

private:
    Vec3 local_from_synodic_linear(const Vec3& v) const;
    Vec3 synodic_from_local_linear(const Vec3& v) const;

    CollinearPoint point_;
    double mu_;
    double gamma_;
    double a_;
    int sign_;
    mutable std::vector<double> cn_cache_;
};

// c_n(mu) closed forms; gamma must be the solved root for (point, mu).
double c_n(CollinearPoint point, double mu, double gamma, int n);

// T_n(x,y,z) = rho^n P_n(x/rho) via the stable three-term recursion.
double legendre_T(int n, double x, double y, double z);

}  // namespace er3bp

#endif
