#include "groupnet/hom.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace gn {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::vector<Coord> prime_factors(std::uint64_t n) {
    std::vector<Coord> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(static_cast<Coord>(p));
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(static_cast<Coord>(n));
    return out;
}

// Order of Z^l / L where L is the lattice spanned by the rows of `rows`
// (assumed full column rank). Computed by reducing to Hermite-like upper
// triangular form with row operations only; the quotient order is the
// product of the pivots.
std::uint64_t lattice_quotient_order(std::vector<std::vector<Coord>> rows,
                                     std::size_t l) {
    std::uint64_t det = 1;
    std::size_t row0 = 0;
    for (std::size_t col = 0; col < l; ++col) {
        // Euclidean elimination within this column.
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t r = row0; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (piv == rows.size() ||
                     std::abs(rows[r][col]) < std::abs(rows[piv][col])))
                    piv = r;
            if (piv == rows.size())
                return 0;  // not full rank; cannot happen with diag rows present
            std::swap(rows[row0], rows[piv]);
            bool reduced = true;
            for (std::size_t r = row0 + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Coord q = rows[r][col] / rows[row0][col];
                for (std::size_t c = col; c < l; ++c)
                    rows[r][c] -= q * rows[row0][c];
                if (rows[r][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        det = sat_mul(det, static_cast<std::uint64_t>(std::abs(rows[row0][col])));
        ++row0;
    }
    return det;
}

// Gaussian elimination mod p on a row-major n x n buffer (mutated in place);
// kept allocation-free because automorphism filtering calls this in the inner
// loop of endomorphism enumeration.
bool invertible_mod_p(Coord* m, std::size_t n, Coord p) {
    for (std::size_t i = 0; i < n * n; ++i) {
        m[i] %= p;
        if (m[i] < 0) m[i] += p;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (m[r * n + col] != 0) {
                piv = r;
                break;
            }
        if (piv == n) return false;
        if (piv != col)
            for (std::size_t c = col; c < n; ++c)
                std::swap(m[col * n + c], m[piv * n + c]);
        // scale pivot row to 1
        Coord inv = 1;
        for (Coord t = 1; t < p; ++t)
            if (m[col * n + col] * t % p == 1) {
                inv = t;
                break;
            }
        for (std::size_t c = col; c < n; ++c)
            m[col * n + c] = m[col * n + c] * inv % p;
        for (std::size_t r = col + 1; r < n; ++r) {
            Coord f = m[r * n + col];
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c)
                m[r * n + c] = (m[r * n + c] - f * m[col * n + c] % p + p * p) % p;
        }
    }
    return true;
}

}  // namespace

Homomorphism::Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                           IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)) {
    if (matrix.size() != source_.num_factors())
        throw std::invalid_argument("hom matrix row count does not match source");
    for (auto& row : matrix)
        if (row.size() != target_.num_factors())
            throw std::invalid_argument("hom matrix column count does not match target");
    // Reduce entries mod the target moduli before validating.
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix[i].size(); ++j) {
            Coord b = target_.moduli()[j];
            matrix[i][j] %= b;
            if (matrix[i][j] < 0) matrix[i][j] += b;
        }
    if (!valid_matrix(matrix, source_, target_))
        throw std::invalid_argument("matrix does not define a homomorphism");
    matrix_ = std::move(matrix);
}

Homomorphism::Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                           IntMatrix matrix, bool)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {}

bool Homomorphism::valid_matrix(const IntMatrix& matrix,
                                const FiniteAbelianGroup& source,
                                const FiniteAbelianGroup& target) {
    if (matrix.size() != source.num_factors()) return false;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        if (matrix[i].size() != target.num_factors()) return false;
        Coord a = source.moduli()[i];
        for (std::size_t j = 0; j < matrix[i].size(); ++j) {
            Coord b = target.moduli()[j];
            if (a % b * (matrix[i][j] % b) % b != 0) return false;
        }
    }
    return true;
}

Homomorphism Homomorphism::identity(const FiniteAbelianGroup& g) {
    IntMatrix m(g.num_factors(), std::vector<Coord>(g.num_factors(), 0));
    for (std::size_t i = 0; i < g.num_factors(); ++i) m[i][i] = 1;
    return Homomorphism(g, g, std::move(m), true);
}

Homomorphism Homomorphism::zero(const FiniteAbelianGroup& source,
                                const FiniteAbelianGroup& target) {
    IntMatrix m(source.num_factors(),
                std::vector<Coord>(target.num_factors(), 0));
    return Homomorphism(source, target, std::move(m), true);
}

Element Homomorphism::apply(const Element& x) const {
    if (x.size() != source_.num_factors())
        throw std::invalid_argument("element does not belong to the source group");
    Element out(target_.num_factors(), 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        Coord b = target_.moduli()[j];
        Coord acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            acc = (acc + x[i] % b * (matrix_[i][j] % b)) % b;
        out[j] = acc;
    }
    return out;
}

Homomorphism Homomorphism::compose(const Homomorphism& inner) const {
    if (!inner.target_.same_presentation(source_))
        throw std::invalid_argument("compose: inner target does not match outer source");
    const std::size_t k = inner.source_.num_factors();
    const std::size_t m = target_.num_factors();
    const std::size_t l = source_.num_factors();
    IntMatrix out(k, std::vector<Coord>(m, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Coord b = target_.moduli()[j];
            Coord acc = 0;
            for (std::size_t t = 0; t < l; ++t)
                acc = (acc + inner.matrix_[i][t] % b * (matrix_[t][j] % b)) % b;
            out[i][j] = acc;
        }
    return Homomorphism(inner.source_, target_, std::move(out), true);
}

std::uint64_t Homomorphism::image_order() const {
    const std::size_t l = target_.num_factors();
    if (l == 0) return 1;
    // |image| = |H| / |Z^l / (rowspan(M) + diag(b) Z^l)|.
    std::vector<std::vector<Coord>> rows = matrix_;
    for (std::size_t j = 0; j < l; ++j) {
        std::vector<Coord> r(l, 0);
        r[j] = target_.moduli()[j];
        rows.push_back(std::move(r));
    }
    std::uint64_t q = lattice_quotient_order(std::move(rows), l);
    return target_.order() / q;
}

bool Homomorphism::is_endomorphism() const {
    return source_.same_presentation(target_);
}

bool Homomorphism::is_automorphism() const {
    if (!is_endomorphism())
        throw std::invalid_argument("is_automorphism requires source == target");
    // Surjective iff the induced map on G/pG is invertible for every prime p
    // dividing |G|; surjective endomorphisms of finite groups are bijective.
    const std::size_t k = source_.num_factors();
    if (k <= 16) {  // fixed buffers keep the enumeration hot loop alloc-free
        std::uint64_t rem = source_.order();
        for (std::uint64_t p = 2; rem > 1; ++p) {
            if (p * p > rem) p = rem;
            if (rem % p != 0) continue;
            while (rem % p == 0) rem /= p;
            std::size_t idx[16];
            std::size_t n = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (source_.moduli()[i] % static_cast<Coord>(p) == 0) idx[n++] = i;
            Coord sub[16 * 16];
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    sub[r * n + c] = matrix_[idx[r]][idx[c]];
            if (!invertible_mod_p(sub, n, static_cast<Coord>(p))) return false;
        }
        return true;
    }
    for (Coord p : prime_factors(source_.order())) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            if (source_.moduli()[i] % p == 0) idx.push_back(i);
        std::vector<Coord> sub(idx.size() * idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                sub[r * idx.size() + c] = matrix_[idx[r]][idx[c]];
        if (!invertible_mod_p(sub.data(), idx.size(), p)) return false;
    }
    return true;
}

Homomorphism Homomorphism::dual_map() const {
    // chi_c(f(x)) = exp(2 pi i sum_j c_j (Mx)_j / b_j); collecting the x_i
    // coefficient gives dual coords d_i = a_i * M[i][j] / b_j summed over j.
    const std::size_t k = source_.num_factors();
    const std::size_t l = target_.num_factors();
    IntMatrix dual(l, std::vector<Coord>(k, 0));
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            Coord a = source_.moduli()[i];
            Coord b = target_.moduli()[j];
            dual[j][i] = a * matrix_[i][j] / b % a;
        }
    return Homomorphism(target_, source_, std::move(dual), true);
}

AffineMap::AffineMap(Homomorphism h, Element s) : hom(std::move(h)), shift(std::move(s)) {
    if (shift.size() != hom.target().num_factors())
        throw std::invalid_argument("affine shift does not belong to the target group");
    shift = hom.target().reduce(std::move(shift));
}

Element AffineMap::apply(const Element& x) const {
    return hom.target().add(hom.apply(x), shift);
}

std::vector<Coord> WindowAffineMap::apply(const std::vector<Coord>& x) const {
    if (x.size() != matrix.size())
        throw std::invalid_argument("window map dimension mismatch");
    const std::size_t d_out = shift.size();
    std::vector<Coord> out(d_out);
    for (std::size_t j = 0; j < d_out; ++j) {
        Coord acc = shift[j];
        for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * matrix[i][j];
        out[j] = acc;
    }
    return out;
}

std::vector<Coord> apply_map(const AnyMap& m, const std::vector<Coord>& x) {
    return std::visit([&](const auto& f) { return f.apply(x); }, m);
}

std::uint64_t hom_count(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) {
    std::uint64_t n = 1;
    for (Coord a : g.moduli())
        for (Coord b : h.moduli())
            n = sat_mul(n, static_cast<std::uint64_t>(std::gcd(a, b)));
    return n;
}

bool visit_homs(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h,
                const std::function<bool(const Homomorphism&)>& fn) {
    const std::size_t k = g.num_factors();
    const std::size_t l = h.num_factors();
    // Entry (i,j) ranges over the gcd(a_i, b_j) multiples of b_j / gcd.
    struct Digit {
        std::size_t i, j;
        Coord step, count, value;
    };
    std::vector<Digit> digits;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            Coord gcd = std::gcd(g.moduli()[i], h.moduli()[j]);
            digits.push_back({i, j, h.moduli()[j] / gcd, gcd, 0});
        }
    Homomorphism current(g, h, IntMatrix(k, std::vector<Coord>(l, 0)), true);
    while (true) {
        if (!fn(current)) return false;
        std::size_t d = digits.size();
        while (d-- > 0) {
            Digit& dig = digits[d];
            if (++dig.value < dig.count) {
                current.matrix_[dig.i][dig.j] = dig.value * dig.step;
                break;
            }
            dig.value = 0;
            current.matrix_[dig.i][dig.j] = 0;
        }
        if (d == static_cast<std::size_t>(-1)) break;
    }
    return true;
}

std::vector<Homomorphism> enumerate_homs(const FiniteAbelianGroup& g,
                                         const FiniteAbelianGroup& h,
                                         std::uint64_t budget) {
    if (hom_count(g, h) > budget)
        throw resource_error("Hom(" + g.spec_string() + "," + h.spec_string() +
                             ") exceeds the enumeration budget; use sample_map");
    std::vector<Homomorphism> out;
    visit_homs(g, h, [&](const Homomorphism& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::vector<Homomorphism> enumerate_automorphisms(const FiniteAbelianGroup& g,
                                                  std::uint64_t budget) {
    if (hom_count(g, g) > budget)
        throw resource_error("End(" + g.spec_string() +
                             ") exceeds the enumeration budget; use sample_map");
    std::vector<Homomorphism> out;
    visit_homs(g, g, [&](const Homomorphism& f) {
        if (f.is_automorphism()) out.push_back(f);
        return true;
    });
    return out;
}

std::string FamilySpec::spec_string() const {
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::aut: return "aut";
        case FamilyKind::endo: return "end";
        case FamilyKind::affine_end: return "affine-end";
        case FamilyKind::affine_aut: return "affine-aut";
        case FamilyKind::translations: return "translations";
        case FamilyKind::hom:
            os << "hom:" << (target ? target->spec_string() : "?");
            return os.str();
        case FamilyKind::torus_linear: os << "torus-linear:K=" << k_max; return os.str();
        case FamilyKind::affine_torus: os << "affine-torus:K=" << k_max; return os.str();
        case FamilyKind::affine_window: os << "affine-window:K=" << k_max; return os.str();
    }
    return "?";
}

namespace {

void require_kind(const Domain& domain, const FamilySpec& family) {
    const bool group_family =
        family.kind == FamilyKind::aut || family.kind == FamilyKind::endo ||
        family.kind == FamilyKind::hom || family.kind == FamilyKind::affine_end ||
        family.kind == FamilyKind::affine_aut ||
        family.kind == FamilyKind::translations;
    switch (domain.kind()) {
        case DomainKind::finite:
            if (!group_family)
                throw std::invalid_argument("family kind requires a torus or window domain");
            break;
        case DomainKind::torus_grid:
            if (!group_family && family.kind != FamilyKind::torus_linear &&
                family.kind != FamilyKind::affine_torus)
                throw std::invalid_argument("family kind not applicable to a torus grid");
            break;
        case DomainKind::lattice_window:
            if (family.kind != FamilyKind::affine_window)
                throw std::invalid_argument("lattice windows support affine-window families only");
            break;
    }
    if (family.kind == FamilyKind::hom && !family.target)
        throw std::invalid_argument("hom family requires a target group");
}

std::uint64_t pow_sat(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t e = 0; e < exp; ++e) r = sat_mul(r, base);
    return r;
}

// Visit all d_in x d_out integer matrices with entries in [-k, k], paired
// with all shifts from `shifts` (pass {{}} for none).
bool visit_int_matrices(std::size_t d_in, std::size_t d_out, Coord k,
                        const std::function<bool(const IntMatrix&)>& fn) {
    IntMatrix m(d_in, std::vector<Coord>(d_out, -k));
    while (true) {
        if (!fn(m)) return false;
        std::size_t idx = d_in * d_out;
        while (idx-- > 0) {
            Coord& v = m[idx / d_out][idx % d_out];
            if (++v <= k) break;
            v = -k;
        }
        if (idx == static_cast<std::size_t>(-1)) break;
    }
    return true;
}

}  // namespace

std::uint64_t family_enumeration_cost(const Domain& domain, const FamilySpec& family) {
    require_kind(domain, family);
    const std::uint64_t d2 =
        static_cast<std::uint64_t>(domain.dims()) * domain.dims();
    switch (family.kind) {
        case FamilyKind::translations: return domain.group().order();
        case FamilyKind::endo:
        case FamilyKind::aut: return hom_count(domain.group(), domain.group());
        case FamilyKind::hom: return hom_count(domain.group(), *family.target);
        case FamilyKind::affine_end:
        case FamilyKind::affine_aut:
            return sat_mul(hom_count(domain.group(), domain.group()),
                           domain.group().order());
        case FamilyKind::torus_linear:
            return pow_sat(2 * family.k_max + 1, d2);
        case FamilyKind::affine_torus:
            return sat_mul(pow_sat(2 * family.k_max + 1, d2),
                           domain.group().order());
        case FamilyKind::affine_window:
            return sat_mul(pow_sat(2 * family.k_max + 1, d2),
                           pow_sat(2 * (2 * static_cast<std::uint64_t>(domain.radius()) + 1) + 1,
                                   domain.dims()));
    }
    return 0;
}

std::optional<std::uint64_t> family_size(const Domain& domain, const FamilySpec& family) {
    require_kind(domain, family);
    if (family.kind == FamilyKind::aut || family.kind == FamilyKind::affine_aut)
        return std::nullopt;
    return family_enumeration_cost(domain, family);
}

bool visit_family(const Domain& domain, const FamilySpec& family,
                  const std::function<bool(const AnyMap&)>& fn) {
    require_kind(domain, family);
    switch (family.kind) {
        case FamilyKind::translations: {
            const FiniteAbelianGroup& g = domain.group();
            Homomorphism id = Homomorphism::identity(g);
            for (std::uint64_t t = 0; t < g.order(); ++t)
                if (!fn(AffineMap(id, g.element_at(t)))) return false;
            return true;
        }
        case FamilyKind::endo:
            return visit_homs(domain.group(), domain.group(),
                              [&](const Homomorphism& f) { return fn(f); });
        case FamilyKind::aut:
            return visit_homs(domain.group(), domain.group(),
                              [&](const Homomorphism& f) {
                                  return f.is_automorphism() ? fn(f) : true;
                              });
        case FamilyKind::hom:
            return visit_homs(domain.group(), *family.target,
                              [&](const Homomorphism& f) { return fn(f); });
        case FamilyKind::affine_end:
        case FamilyKind::affine_aut: {
            const FiniteAbelianGroup& g = domain.group();
            const bool aut_only = family.kind == FamilyKind::affine_aut;
            return visit_homs(g, g, [&](const Homomorphism& f) {
                if (aut_only && !f.is_automorphism()) return true;
                for (std::uint64_t t = 0; t < g.order(); ++t)
                    if (!fn(AffineMap(f, g.element_at(t)))) return false;
                return true;
            });
        }
        case FamilyKind::torus_linear:
        case FamilyKind::affine_torus: {
            const FiniteAbelianGroup& g = domain.group();
            const std::size_t d = g.num_factors();
            const bool affine = family.kind == FamilyKind::affine_torus;
            return visit_int_matrices(d, d, family.k_max, [&](const IntMatrix& m) {
                Homomorphism f(g, g, m);  // frequency matrix reduced mod R
                if (!affine) return fn(f);
                for (std::uint64_t t = 0; t < g.order(); ++t)
                    if (!fn(AffineMap(f, g.element_at(t)))) return false;
                return true;
            });
        }
        case FamilyKind::affine_window: {
            const std::size_t d = static_cast<std::size_t>(domain.dims());
            const Coord s_max = 2 * static_cast<Coord>(domain.radius()) + 1;
            return visit_int_matrices(d, d, family.k_max, [&](const IntMatrix& m) {
                WindowAffineMap w{m, std::vector<Coord>(d, -s_max)};
                while (true) {
                    if (!fn(w)) return false;
                    std::size_t j = d;
                    while (j-- > 0) {
                        if (++w.shift[j] <= s_max) break;
                        w.shift[j] = -s_max;
                    }
                    if (j == static_cast<std::size_t>(-1)) break;
                }
                return true;
            });
        }
    }
    return true;
}

std::vector<AnyMap> enumerate_family(const Domain& domain, const FamilySpec& family) {
    if (family_enumeration_cost(domain, family) > family.budget)
        throw resource_error("family " + family.spec_string() +
                             " exceeds the enumeration budget; use sample_map");
    std::vector<AnyMap> out;
    visit_family(domain, family, [&](const AnyMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

namespace {

Homomorphism sample_hom(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h,
                        Rng& rng) {
    IntMatrix m(g.num_factors(), std::vector<Coord>(h.num_factors(), 0));
    for (std::size_t i = 0; i < g.num_factors(); ++i)
        for (std::size_t j = 0; j < h.num_factors(); ++j) {
            Coord gcd = std::gcd(g.moduli()[i], h.moduli()[j]);
            Coord step = h.moduli()[j] / gcd;
            std::uniform_int_distribution<Coord> pick(0, gcd - 1);
            m[i][j] = pick(rng) * step;
        }
    return Homomorphism(g, h, std::move(m));
}

Homomorphism sample_aut(const FiniteAbelianGroup& g, Rng& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Homomorphism f = sample_hom(g, g, rng);
        if (f.is_automorphism()) return f;
    }
    // Degenerate densities fall back to exhaustive enumeration.
    std::vector<Homomorphism> auts = enumerate_automorphisms(g);
    std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
    return auts[pick(rng)];
}

Element sample_element(const FiniteAbelianGroup& g, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
    return g.element_at(pick(rng));
}

IntMatrix sample_int_matrix(std::size_t d_in, std::size_t d_out, Coord k, Rng& rng) {
    std::uniform_int_distribution<Coord> pick(-k, k);
    IntMatrix m(d_in, std::vector<Coord>(d_out));
    for (auto& row : m)
        for (auto& v : row) v = pick(rng);
    return m;
}

}  // namespace

AnyMap sample_map(const Domain& domain, const FamilySpec& family, Rng& rng) {
    require_kind(domain, family);
    switch (family.kind) {
        case FamilyKind::translations:
            return AffineMap(Homomorphism::identity(domain.group()),
                             sample_element(domain.group(), rng));
        case FamilyKind::endo: return sample_hom(domain.group(), domain.group(), rng);
        case FamilyKind::aut: return sample_aut(domain.group(), rng);
        case FamilyKind::hom: return sample_hom(domain.group(), *family.target, rng);
        case FamilyKind::affine_end:
            return AffineMap(sample_hom(domain.group(), domain.group(), rng),
                             sample_element(domain.group(), rng));
        case FamilyKind::affine_aut:
            return AffineMap(sample_aut(domain.group(), rng),
                             sample_element(domain.group(), rng));
        case FamilyKind::torus_linear: {
            const FiniteAbelianGroup& g = domain.group();
            return Homomorphism(
                g, g, sample_int_matrix(g.num_factors(), g.num_factors(),
                                        family.k_max, rng));
        }
        case FamilyKind::affine_torus: {
            const FiniteAbelianGroup& g = domain.group();
            return AffineMap(
                Homomorphism(g, g,
                             sample_int_matrix(g.num_factors(), g.num_factors(),
                                               family.k_max, rng)),
                sample_element(g, rng));
        }
        case FamilyKind::affine_window: {
            const std::size_t d = static_cast<std::size_t>(domain.dims());
            const Coord s_max = 2 * static_cast<Coord>(domain.radius()) + 1;
            WindowAffineMap w{sample_int_matrix(d, d, family.k_max, rng),
                              std::vector<Coord>(d)};
            std::uniform_int_distribution<Coord> pick(-s_max, s_max);
            for (auto& v : w.shift) v = pick(rng);
            return w;
        }
    }
    throw std::logic_error("unreachable family kind");
}

Domain family_target_domain(const Domain& domain, const FamilySpec& family) {
    if (family.kind == FamilyKind::hom) return Domain::finite(*family.target);
    return domain;
}

}  // namespace gn
