#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gn {

using Coord = long long;
using Element = std::vector<Coord>;
using cplx = std::complex<double>;

enum class HaarMode { counting, probability };

/// A finite Abelian group presented as a product of cyclic factors
/// Z_{m_1} x ... x Z_{m_k}. Elements are coordinate tuples stored reduced.
/// The Haar normalization (counting vs probability) travels with the group.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<Coord> moduli,
                                HaarMode mode = HaarMode::probability);

    const std::vector<Coord>& moduli() const { return moduli_; }
    std::size_t num_factors() const { return moduli_.size(); }
    std::uint64_t order() const { return order_; }
    HaarMode haar_mode() const { return mode_; }
    FiniteAbelianGroup with_haar_mode(HaarMode mode) const;

    Element identity() const { return Element(moduli_.size(), 0); }
    Element reduce(Element x) const;
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;

    /// Mixed-radix index, row-major over the moduli (last coordinate fastest).
    std::uint64_t index_of(const Element& x) const;
    Element element_at(std::uint64_t idx) const;

    /// Haar mass of a single point under the stored mode.
    double point_weight() const;

    bool same_presentation(const FiniteAbelianGroup& other) const {
        return moduli_ == other.moduli_;
    }

    std::string spec_string() const;

private:
    void check_element(const Element& x) const;

    std::vector<Coord> moduli_;
    std::uint64_t order_;
    HaarMode mode_;
};

FiniteAbelianGroup make_group(const std::vector<Coord>& moduli,
                              HaarMode mode = HaarMode::probability);

double haar_integrate(const FiniteAbelianGroup& g,
                      const std::function<double(const Element&)>& f);
cplx haar_integrate_c(const FiniteAbelianGroup& g,
                      const std::function<cplx(const Element&)>& f);

/// True iff the Haar mass of B equals the mass of g + B.
bool check_haar_invariance(const FiniteAbelianGroup& g,
                           const std::vector<Element>& b_set,
                           const Element& shift);

/// All nondecreasing factor lists (entries >= 2) with product <= max_order,
/// including the empty list for the trivial group. Distinct presentations of
/// isomorphic groups (e.g. [6] and [2,3]) both appear.
std::vector<std::vector<Coord>> enumerate_moduli_lists(std::uint64_t max_order);

/// A finitely supported signed (complex) measure on a finite Abelian group;
/// mass vector is indexed by mixed-radix element index.
struct SignedMeasure {
    FiniteAbelianGroup group;
    std::vector<cplx> mass;

    SignedMeasure(FiniteAbelianGroup g, std::vector<cplx> m);

    double total_variation() const;
    cplx total_mass() const;
    /// Scaled copy with unit total variation; the zero measure is returned as-is.
    SignedMeasure normalized() const;
};

}  // namespace gn
