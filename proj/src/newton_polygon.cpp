#include "heightlab/newton_polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace hl {

NewtonPolygon NewtonPolygon::from_points(std::vector<Vertex> points) {
    if (points.empty()) throw std::domain_error("empty point set");
    std::sort(points.begin(), points.end(),
              [](const Vertex& a, const Vertex& b) { return a.index < b.index; });
    for (size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i].index == points[i + 1].index)
            throw std::domain_error("duplicate indices");

    // Andrew-style lower hull: pop while the new point does not turn left.
    NewtonPolygon np;
    auto& h = np.vertices_;
    for (const auto& p : points) {
        while (h.size() >= 2) {
            const Vertex& a = h[h.size() - 2];
            const Vertex& b = h[h.size() - 1];
            // cross product of (b-a) x (p-a); keep strictly convex (pop
            // collinear points too)
            Rat cr = Rat(b.index - a.index) * (p.valuation - a.valuation) -
                     (b.valuation - a.valuation) * Rat(p.index - a.index);
            if (cr <= 0)
                h.pop_back();
            else
                break;
        }
        // also drop a single previous point that lies above (non-hull) when
        // only one point is held and the candidate is not to the right
        h.push_back(p);
    }
    for (size_t i = 0; i + 1 < h.size(); ++i) {
        Rat slope = (h[i + 1].valuation - h[i].valuation) /
                    Rat(h[i + 1].index - h[i].index);
        np.segments_.push_back({slope, h[i + 1].index - h[i].index});
    }
    return np;
}

std::vector<std::pair<Rat, long>> NewtonPolygon::root_valuations() const {
    std::vector<std::pair<Rat, long>> out;
    for (const auto& s : segments_) out.emplace_back(Rat(-s.slope), s.length);
    return out;
}

NewtonPolygon padic_newton_polygon(const IntPoly& f, const Int& p) {
    if (f.is_zero()) throw std::domain_error("newton polygon of zero polynomial");
    if (!is_prime(p)) throw std::domain_error("newton polygon: p is not prime");
    std::vector<NewtonPolygon::Vertex> pts;
    for (long i = 0; i <= f.degree(); ++i)
        if (f.coeff(i) != 0) pts.push_back({i, Rat(vp(f.coeff(i), p))});
    return NewtonPolygon::from_points(std::move(pts));
}

std::vector<std::pair<Rat, long>> padic_root_valuations(const IntPoly& f,
                                                        const Int& p) {
    return padic_newton_polygon(f, p).root_valuations();
}

}  // namespace hl
