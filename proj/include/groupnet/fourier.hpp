#pragma once

#include <vector>

#include "groupnet/group.hpp"
#include "groupnet/hom.hpp"

namespace gn {

/// A character of a finite Abelian group, indexed by dual coordinates over
/// the same moduli: chi_c(x) = exp(2 pi i sum_j c_j x_j / m_j).
struct Character {
    FiniteAbelianGroup group;
    Element dual_coords;

    Character(FiniteAbelianGroup g, Element coords);
    cplx eval(const Element& x) const;
};

cplx character_eval(const FiniteAbelianGroup& g, const Element& dual_coords,
                    const Element& x);

/// Function or spectrum values indexed by mixed-radix element index.
using Table = std::vector<cplx>;

/// Forward transform under the group's stored Haar mode:
///   F(c) = sum_x f(x) conj(chi_c(x)) w(x).
Table fourier_transform(const FiniteAbelianGroup& g, const Table& f);

/// Inverse with the dual counting measure, scaled so that
/// inverse(forward(f)) == f exactly in either Haar mode.
Table inverse_fourier(const FiniteAbelianGroup& g, const Table& spectrum);

/// (f * h)(x) = sum_y f(x - y) h(y) w(y); satisfies (f*h)^ = f^ h^.
Table convolve(const FiniteAbelianGroup& g, const Table& f, const Table& h);

/// sigma_phi(B) = sigma(phi^{-1}(B)): fiber-summed mass on the target group.
SignedMeasure pushforward(const SignedMeasure& sigma, const Homomorphism& phi);
SignedMeasure pushforward(const SignedMeasure& sigma, const AffineMap& phi);

/// Fourier transform of a measure (no Haar weight): sum_x conj(chi_c(x)) mass(x).
Table measure_fourier(const SignedMeasure& sigma);

/// True iff x -> (chi -> chi(x)) is a bijective homomorphism onto the double
/// dual, checked by exhaustive evaluation-table comparison.
bool verify_double_dual(const FiniteAbelianGroup& g,
                        std::uint64_t budget = 1u << 12, double tol = 1e-9);

}  // namespace gn
