#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qcubic/arith/factor.hpp"
#include "qcubic/arith/kronecker.hpp"

namespace qcubic::arith {

/// Real character m -> chi_d(m). Built either from a squarefree d directly
/// or from a pair (a, c) with a in {+-1, +-2} and c odd squarefree, d = a*c.
class QuadraticCharacter {
public:
    enum class Kind { chi_d, chi_ac };

    static QuadraticCharacter from_d(std::int64_t d)
    {
        if (d == 0)
            throw std::invalid_argument("QuadraticCharacter: d must be nonzero");
        if (!is_squarefree(static_cast<std::uint64_t>(std::llabs(d))))
            throw std::invalid_argument("QuadraticCharacter: d = " + std::to_string(d) +
                                        " is not squarefree");
        return QuadraticCharacter(Kind::chi_d, d, 0, 0);
    }

    static QuadraticCharacter from_ac(int a, std::int64_t c)
    {
        if (a != 1 && a != -1 && a != 2 && a != -2)
            throw std::invalid_argument("QuadraticCharacter: a must be one of +-1, +-2");
        if (c <= 0 || (c & 1) == 0)
            throw std::invalid_argument("QuadraticCharacter: c must be odd and positive");
        if (!is_squarefree(static_cast<std::uint64_t>(c)))
            throw std::invalid_argument("QuadraticCharacter: c = " + std::to_string(c) +
                                        " is not squarefree");
        return QuadraticCharacter(Kind::chi_ac, a * c, a, c);
    }

    Kind kind() const { return kind_; }
    std::int64_t d() const { return d_; }
    int a() const { return a_; }
    std::int64_t c() const { return c_; }

    /// |d| if d = 1 mod 4, else 4|d|.
    std::int64_t conductor() const
    {
        const std::int64_t ad = std::llabs(d_);
        return mod4() == 1 ? ad : 4 * ad;
    }

    int operator()(std::int64_t m) const
    {
        if (m <= 0)
            throw std::invalid_argument("chi_eval: argument must be positive");
        return mod4() == 1 ? kronecker(d_, m) : kronecker(4 * d_, m);
    }

private:
    QuadraticCharacter(Kind k, std::int64_t d, int a, std::int64_t c)
        : kind_(k), d_(d), a_(a), c_(c)
    {}

    int mod4() const { return static_cast<int>(((d_ % 4) + 4) % 4); }

    Kind kind_;
    std::int64_t d_;
    int a_;
    std::int64_t c_;
};

inline int chi_eval(const QuadraticCharacter& chi, std::int64_t m)
{
    return chi(m);
}

} // namespace qcubic::arith
