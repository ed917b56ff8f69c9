#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qcubic/ratfun/ppart.hpp"

namespace qcubic::ratfun {

/// (1-x)^5 (1+x) (1+4x+11x^2+10x^3-11x^4+11x^6-4x^7-x^8), expanded.
inline QPoly p_polynomial()
{
    const QPoly one(Q(1));
    const QPoly x = QPoly::x();
    const QPoly tail{Q(1), Q(4), Q(11), Q(10), Q(-11), Q(0), Q(11), Q(-4), Q(-1)};
    return (one - x).pow(5) * (one + x) * tail;
}

/// Per-prime weights of the three sieve cases, as polynomials in x.
struct EulerLines {
    QPoly u1, u2, u3;
};

inline EulerLines standard_lines()
{
    const QPoly one(Q(1));
    const QPoly x = QPoly::x();
    const QPoly base = (one - x).pow(8) * (one + x);
    return {
        base * (one + x) * QPoly{Q(1), Q(6), Q(1)},
        base * QPoly{Q(3), Q(7), Q(3)},
        base * QPoly{Q(1), Q(7), Q(13), Q(7), Q(1)},
    };
}

struct IdentityResult {
    bool pass = false;
    QRF lhs;        // in t
    QRF diagnostic; // lhs - P(t^2); zero on pass
};

/// 1 - [t^10 u1 F + t^8 u2 G1 + t^6 u3 G0] against P(x), all in t = p^(-1/4).
inline IdentityResult euler_factor_identity(const EulerLines& lines = standard_lines())
{
    const PPart pp = PPart::formal();
    const QRF t = QRF::variable();
    const QRF F = pp.F().exact();
    const QRF G1 = pp.G1().exact();
    const QRF G0 = pp.G0().exact();

    const QRF sum = t.pow(10) * QRF(lines.u1.inflate(2)) * F
                  + t.pow(8) * QRF(lines.u2.inflate(2)) * G1
                  + t.pow(6) * QRF(lines.u3.inflate(2)) * G0;

    IdentityResult r;
    r.lhs = QRF(Q(1)) - sum;
    r.diagnostic = r.lhs - QRF(p_polynomial().inflate(2));
    r.pass = r.diagnostic.is_zero();
    return r;
}

inline nlohmann::json identity_certificate(const std::string& name, const IdentityResult& r,
                                           std::uint64_t seed)
{
    nlohmann::json j;
    j["identity"] = name;
    j["status"] = r.pass ? "pass" : "fail";
    j["diagnostic"] = r.pass ? nlohmann::json(nullptr) : nlohmann::json(r.diagnostic.str("t"));
    j["seed"] = seed;
    return j;
}

} // namespace qcubic::ratfun
