#include "groupnet/group.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gn {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Coord> moduli, HaarMode mode)
    : mode_(mode) {
    for (Coord m : moduli) {
        if (m < 1) throw std::invalid_argument("group modulus must be >= 1");
        if (m > 1) moduli_.push_back(m);
    }
    order_ = 1;
    for (Coord m : moduli_) order_ *= static_cast<std::uint64_t>(m);
}

FiniteAbelianGroup FiniteAbelianGroup::with_haar_mode(HaarMode mode) const {
    FiniteAbelianGroup g = *this;
    g.mode_ = mode;
    return g;
}

void FiniteAbelianGroup::check_element(const Element& x) const {
    if (x.size() != moduli_.size())
        throw std::invalid_argument("element dimension does not match group");
}

Element FiniteAbelianGroup::reduce(Element x) const {
    check_element(x);
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] %= moduli_[j];
        if (x[j] < 0) x[j] += moduli_[j];
    }
    return x;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
    check_element(a);
    check_element(b);
    Element out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out[j] = (a[j] + b[j]) % moduli_[j];
    return out;
}

Element FiniteAbelianGroup::neg(const Element& a) const {
    check_element(a);
    Element out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out[j] = (moduli_[j] - a[j]) % moduli_[j];
    return out;
}

Element FiniteAbelianGroup::sub(const Element& a, const Element& b) const {
    return add(a, neg(b));
}

std::uint64_t FiniteAbelianGroup::index_of(const Element& x) const {
    check_element(x);
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < 0 || x[j] >= moduli_[j])
            throw std::invalid_argument("element coordinate out of range");
        idx = idx * static_cast<std::uint64_t>(moduli_[j]) +
              static_cast<std::uint64_t>(x[j]);
    }
    return idx;
}

Element FiniteAbelianGroup::element_at(std::uint64_t idx) const {
    Element x(moduli_.size());
    for (std::size_t j = moduli_.size(); j-- > 0;) {
        x[j] = static_cast<Coord>(idx % static_cast<std::uint64_t>(moduli_[j]));
        idx /= static_cast<std::uint64_t>(moduli_[j]);
    }
    return x;
}

double FiniteAbelianGroup::point_weight() const {
    return mode_ == HaarMode::counting ? 1.0
                                       : 1.0 / static_cast<double>(order_);
}

std::string FiniteAbelianGroup::spec_string() const {
    if (moduli_.empty()) return "Z1";
    std::ostringstream os;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        if (j) os << 'x';
        os << 'Z' << moduli_[j];
    }
    return os.str();
}

FiniteAbelianGroup make_group(const std::vector<Coord>& moduli, HaarMode mode) {
    return FiniteAbelianGroup(moduli, mode);
}

double haar_integrate(const FiniteAbelianGroup& g,
                      const std::function<double(const Element&)>& f) {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < g.order(); ++i) sum += f(g.element_at(i));
    return sum * g.point_weight();
}

cplx haar_integrate_c(const FiniteAbelianGroup& g,
                      const std::function<cplx(const Element&)>& f) {
    cplx sum = 0.0;
    for (std::uint64_t i = 0; i < g.order(); ++i) sum += f(g.element_at(i));
    return sum * g.point_weight();
}

bool check_haar_invariance(const FiniteAbelianGroup& g,
                           const std::vector<Element>& b_set,
                           const Element& shift) {
    // Both masses are |B| * point_weight; compare the integer cardinalities
    // of B and shift+B so the test is exact.
    std::vector<char> in_b(g.order(), 0), in_shifted(g.order(), 0);
    for (const Element& x : b_set) in_b[g.index_of(x)] = 1;
    for (const Element& x : b_set) in_shifted[g.index_of(g.add(shift, x))] = 1;
    std::uint64_t n_b = 0, n_s = 0;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        n_b += in_b[i];
        n_s += in_shifted[i];
    }
    return n_b == n_s;
}

namespace {
void moduli_lists_rec(std::uint64_t max_order, Coord min_factor,
                      std::uint64_t product, std::vector<Coord>& current,
                      std::vector<std::vector<Coord>>& out) {
    out.push_back(current);
    for (Coord m = min_factor; product * static_cast<std::uint64_t>(m) <= max_order; ++m) {
        current.push_back(m);
        moduli_lists_rec(max_order, m, product * static_cast<std::uint64_t>(m),
                         current, out);
        current.pop_back();
    }
}
}  // namespace

std::vector<std::vector<Coord>> enumerate_moduli_lists(std::uint64_t max_order) {
    std::vector<std::vector<Coord>> out;
    std::vector<Coord> current;
    moduli_lists_rec(max_order, 2, 1, current, out);
    return out;
}

SignedMeasure::SignedMeasure(FiniteAbelianGroup g, std::vector<cplx> m)
    : group(std::move(g)), mass(std::move(m)) {
    if (mass.size() != group.order())
        throw std::invalid_argument("measure dimension does not match group order");
}

double SignedMeasure::total_variation() const {
    double tv = 0.0;
    for (const cplx& v : mass) tv += std::abs(v);
    return tv;
}

cplx SignedMeasure::total_mass() const {
    cplx s = 0.0;
    for (const cplx& v : mass) s += v;
    return s;
}

SignedMeasure SignedMeasure::normalized() const {
    double tv = total_variation();
    if (tv == 0.0) return *this;
    SignedMeasure out = *this;
    for (cplx& v : out.mass) v /= tv;
    return out;
}

}  // namespace gn
