#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "groupnet/domain.hpp"
#include "groupnet/group.hpp"

namespace gn {

using Rng = std::mt19937_64;

/// Raised when an enumeration would exceed its configured budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using IntMatrix = std::vector<std::vector<Coord>>;  // [source gen][target gen]

/// A homomorphism between finite Abelian groups, stored as the matrix of
/// generator images reduced mod the target moduli. Row i is the image of the
/// i-th source generator; validity requires a_i * M[i][j] == 0 (mod b_j).
class Homomorphism {
public:
    Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                 IntMatrix matrix);

    static bool valid_matrix(const IntMatrix& matrix,
                             const FiniteAbelianGroup& source,
                             const FiniteAbelianGroup& target);

    static Homomorphism identity(const FiniteAbelianGroup& g);
    static Homomorphism zero(const FiniteAbelianGroup& source,
                             const FiniteAbelianGroup& target);

    const FiniteAbelianGroup& source() const { return source_; }
    const FiniteAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    Element apply(const Element& x) const;

    /// this after inner: (f.compose(g))(x) == f(g(x)).
    Homomorphism compose(const Homomorphism& inner) const;

    std::uint64_t image_order() const;
    bool is_endomorphism() const;
    /// Trivial kernel, equivalently full image cardinality; endomorphisms only.
    bool is_automorphism() const;

    /// Adjoint map between the dual groups (dual coords of the target map to
    /// dual coords of the source): chi_c(f(x)) == chi_{dual(f)(c)}(x).
    Homomorphism dual_map() const;

    bool operator==(const Homomorphism& other) const {
        return source_.moduli() == other.source_.moduli() &&
               target_.moduli() == other.target_.moduli() &&
               matrix_ == other.matrix_;
    }

private:
    Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                 IntMatrix matrix, bool /*unchecked*/);

    // The enumerator mutates one matrix entry per step instead of
    // re-constructing; entries stay within the validity lattice.
    friend bool visit_homs(const FiniteAbelianGroup&, const FiniteAbelianGroup&,
                           const std::function<bool(const Homomorphism&)>&);

    FiniteAbelianGroup source_, target_;
    IntMatrix matrix_;
};

/// apply(x) = hom(x) + shift; zero shift reduces to the homomorphism.
struct AffineMap {
    Homomorphism hom;
    Element shift;

    AffineMap(Homomorphism h, Element s);
    Element apply(const Element& x) const;
    bool operator==(const AffineMap& other) const {
        return hom == other.hom && shift == other.shift;
    }
};

/// Integer affine map on Z^d used over lattice windows; no reduction, so the
/// image may leave the window (activations handle raw coordinates).
struct WindowAffineMap {
    IntMatrix matrix;  // [in dim][out dim]
    std::vector<Coord> shift;

    std::vector<Coord> apply(const std::vector<Coord>& x) const;
    bool operator==(const WindowAffineMap& other) const {
        return matrix == other.matrix && shift == other.shift;
    }
};

using AnyMap = std::variant<Homomorphism, AffineMap, WindowAffineMap>;

std::vector<Coord> apply_map(const AnyMap& m, const std::vector<Coord>& x);

/// Number of homomorphisms G -> H: product of gcd(a_i, b_j) over all entries.
std::uint64_t hom_count(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

/// Visit every homomorphism G -> H in a fixed deterministic order. The
/// callback returns false to stop early; the function returns false iff it
/// was stopped.
bool visit_homs(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h,
                const std::function<bool(const Homomorphism&)>& fn);

std::vector<Homomorphism> enumerate_homs(const FiniteAbelianGroup& g,
                                         const FiniteAbelianGroup& h,
                                         std::uint64_t budget = 1u << 20);
std::vector<Homomorphism> enumerate_automorphisms(const FiniteAbelianGroup& g,
                                                  std::uint64_t budget = 1u << 20);

enum class FamilyKind {
    aut,
    endo,
    hom,          // Hom(G, H) with an explicit target group
    affine_end,
    affine_aut,
    translations,
    torus_linear,
    affine_torus,
    affine_window
};

/// A dictionary-generating family of maps over a domain. `budget` caps both
/// materialized enumeration and the sample count; `k_max` bounds integer
/// frequency / slope entries for torus and window families.
struct FamilySpec {
    FamilyKind kind = FamilyKind::translations;
    std::optional<FiniteAbelianGroup> target;  // FamilyKind::hom only
    int k_max = 1;
    std::uint64_t budget = 1u << 20;
    std::uint64_t seed = 0;
    bool shared_map = false;

    std::string spec_string() const;
};

/// Number of raw candidates a full enumeration visits (for aut kinds this is
/// the size of the unfiltered endomorphism pool).
std::uint64_t family_enumeration_cost(const Domain& domain, const FamilySpec& family);

/// Exact family size when cheap to compute, nullopt for aut-filtered kinds.
std::optional<std::uint64_t> family_size(const Domain& domain, const FamilySpec& family);

bool visit_family(const Domain& domain, const FamilySpec& family,
                  const std::function<bool(const AnyMap&)>& fn);

std::vector<AnyMap> enumerate_family(const Domain& domain, const FamilySpec& family);

AnyMap sample_map(const Domain& domain, const FamilySpec& family, Rng& rng);

/// Domain the family's maps land in (differs from the source for hom kind).
Domain family_target_domain(const Domain& domain, const FamilySpec& family);

}  // namespace gn
