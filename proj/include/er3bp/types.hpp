#ifndef ER3BP_TYPES_HPP
#define ER3BP_TYPES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace er3bp {

// Exit-code-bearing error categories used across the library and the CLI.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

class IntegrationError : public std::runtime_error {
public:
    explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mass ratio and primary-orbit eccentricity; defines the whole problem instance.
// Primaries sit at (mu,0,0) and (mu-1,0,0) in the rotating-pulsating frame.
struct SystemParams {
    double mu = 0.0;
    double e = 0.0;

    void validate() const {
        if (!(mu > 0.0) || !(mu <= 0.5))
            throw ValidationError("SystemParams: mu must satisfy 0 < mu <= 0.5");
        if (!(e >= 0.0) || !(e < 1.0))
            throw ValidationError("SystemParams: e must satisfy 0 <= e < 1");
    }

    static SystemParams earth_moon() { return {0.012150586, 0.0549}; }
};

using Vec3 = std::array<double, 3>;
using Vec6 = std::array<double, 6>;

// State in the rotating-pulsating frame; primes are derivatives with
// respect to the true anomaly f.
struct PulsatingState {
    double X = 0.0, Y = 0.0, Z = 0.0;
    double Xp = 0.0, Yp = 0.0, Zp = 0.0;
    double f = 0.0;

    Vec6 vec() const { return {X, Y, Z, Xp, Yp, Zp}; }

    static PulsatingState from_vec(const Vec6& v, double f_anomaly) {
        return {v[0], v[1], v[2], v[3], v[4], v[5], f_anomaly};
    }
};

// Pulsating state plus the dummy action F conjugate to f.  Along the exact
// flow H + F is constant (zero when F is initialized as -H at epoch).
struct ExtendedState {
    PulsatingState state;
    double F = 0.0;
};

inline double norm6(const Vec6& a, const Vec6& b) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace er3bp

#endif
