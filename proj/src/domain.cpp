#include "groupnet/domain.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gn {

Domain Domain::finite(FiniteAbelianGroup g) {
    Domain d;
    d.kind_ = DomainKind::finite;
    d.dims_ = static_cast<int>(g.num_factors());
    d.group_ = std::move(g);
    return d;
}

Domain Domain::torus_grid(int dims, int resolution) {
    if (dims < 1 || resolution < 2)
        throw std::invalid_argument("torus grid needs dims >= 1, resolution >= 2");
    Domain d;
    d.kind_ = DomainKind::torus_grid;
    d.dims_ = dims;
    d.resolution_ = resolution;
    d.group_ = FiniteAbelianGroup(std::vector<Coord>(dims, resolution),
                                  HaarMode::probability);
    return d;
}

Domain Domain::lattice_window(int dims, int radius) {
    if (dims < 1 || radius < 0)
        throw std::invalid_argument("lattice window needs dims >= 1, radius >= 0");
    Domain d;
    d.kind_ = DomainKind::lattice_window;
    d.dims_ = dims;
    d.radius_ = radius;
    return d;
}

const FiniteAbelianGroup& Domain::group() const {
    if (!group_) throw std::logic_error("lattice window has no group structure");
    return *group_;
}

std::size_t Domain::size() const {
    if (group_) return static_cast<std::size_t>(group_->order());
    std::size_t n = 1;
    for (int j = 0; j < dims_; ++j) n *= static_cast<std::size_t>(2 * radius_ + 1);
    return n;
}

std::vector<Coord> Domain::point(std::size_t idx) const {
    if (group_) return group_->element_at(idx);
    const std::size_t side = static_cast<std::size_t>(2 * radius_ + 1);
    std::vector<Coord> p(dims_);
    for (int j = dims_; j-- > 0;) {
        p[j] = static_cast<Coord>(idx % side) - radius_;
        idx /= side;
    }
    return p;
}

std::size_t Domain::index_of_point(const std::vector<Coord>& p) const {
    if (group_) return group_->index_of(p);
    if (!contains(p)) throw std::invalid_argument("point outside lattice window");
    const std::size_t side = static_cast<std::size_t>(2 * radius_ + 1);
    std::size_t idx = 0;
    for (int j = 0; j < dims_; ++j)
        idx = idx * side + static_cast<std::size_t>(p[j] + radius_);
    return idx;
}

double Domain::point_weight() const {
    switch (kind_) {
        case DomainKind::finite: return group_->point_weight();
        case DomainKind::torus_grid: return 1.0 / static_cast<double>(size());
        case DomainKind::lattice_window: return 1.0;
    }
    return 1.0;
}

bool Domain::contains(const std::vector<Coord>& p) const {
    if (p.size() != static_cast<std::size_t>(dims_)) return false;
    if (group_) {
        for (int j = 0; j < dims_; ++j)
            if (p[j] < 0 || p[j] >= group_->moduli()[j]) return false;
        return true;
    }
    for (int j = 0; j < dims_; ++j)
        if (p[j] < -radius_ || p[j] > radius_) return false;
    return true;
}

std::optional<std::vector<Coord>> Domain::window_add(
    const std::vector<Coord>& a, const std::vector<Coord>& b) const {
    if (kind_ != DomainKind::lattice_window)
        throw std::logic_error("window_add applies to lattice windows only");
    std::vector<Coord> s(dims_);
    for (int j = 0; j < dims_; ++j) s[j] = a[j] + b[j];
    if (!contains(s)) return std::nullopt;
    return s;
}

std::string Domain::spec_string() const {
    std::ostringstream os;
    switch (kind_) {
        case DomainKind::finite: return group_->spec_string();
        case DomainKind::torus_grid: os << 'T' << dims_ << '@' << resolution_; break;
        case DomainKind::lattice_window: os << 'W' << dims_ << '@' << radius_; break;
    }
    return os.str();
}

bool lex_less(const std::vector<Coord>& a, const std::vector<Coord>& b) {
    return a < b;
}

}  // namespace gn
