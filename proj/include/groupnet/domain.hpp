#pragma once

#include <optional>
#include <string>

#include "groupnet/group.hpp"

namespace gn {

enum class DomainKind { finite, torus_grid, lattice_window };

/// Evaluation domain for networks and dictionaries: a finite Abelian group,
/// a discretized torus grid (stored as Z_R^d with a 1/R^d quadrature weight
/// and an angle embedding), or a lattice window [-N, N]^d in Z^d with the
/// lexicographic order attached. Torus grids are exact as groups; the window
/// is an ordered compact subset, not a group, and addition that leaves it is
/// flagged rather than wrapped.
class Domain {
public:
    static Domain finite(FiniteAbelianGroup g);
    static Domain torus_grid(int dims, int resolution);
    static Domain lattice_window(int dims, int radius);

    DomainKind kind() const { return kind_; }
    bool is_group() const { return kind_ != DomainKind::lattice_window; }
    bool ordered() const { return kind_ == DomainKind::lattice_window; }

    /// Underlying group for finite and torus-grid domains.
    const FiniteAbelianGroup& group() const;

    int dims() const { return dims_; }
    int resolution() const { return resolution_; }
    int radius() const { return radius_; }

    std::size_t size() const;
    /// Point at the given index; window points are listed in lexicographic
    /// order with coordinates in [-N, N], group points in mixed-radix order.
    std::vector<Coord> point(std::size_t idx) const;
    std::size_t index_of_point(const std::vector<Coord>& p) const;
    /// Quadrature / Haar weight of a single point (uniform on every domain).
    double point_weight() const;

    bool contains(const std::vector<Coord>& p) const;
    /// Window addition; empty when the sum leaves the window.
    std::optional<std::vector<Coord>> window_add(const std::vector<Coord>& a,
                                                const std::vector<Coord>& b) const;

    std::string spec_string() const;

private:
    Domain() = default;

    DomainKind kind_ = DomainKind::finite;
    std::optional<FiniteAbelianGroup> group_;
    int dims_ = 0;
    int resolution_ = 0;
    int radius_ = 0;
};

/// Strict lexicographic order on coordinate tuples (the window's bi-order).
bool lex_less(const std::vector<Coord>& a, const std::vector<Coord>& b);

}  // namespace gn
