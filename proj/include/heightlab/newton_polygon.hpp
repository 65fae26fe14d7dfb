#ifndef HEIGHTLAB_NEWTON_POLYGON_HPP
#define HEIGHTLAB_NEWTON_POLYGON_HPP

#include "heightlab/int_poly.hpp"

namespace hl {

/// Lower Newton polygon of a finite point set {(index, valuation)}.
/// Root valuations of the associated polynomial are the negated segment
/// slopes, with multiplicity equal to the segment's horizontal length.
class NewtonPolygon {
public:
    struct Vertex {
        long index;
        Rat valuation;
    };
    struct Segment {
        Rat slope;
        long length;  // horizontal extent, = number of roots on the segment
    };

    /// Lower convex hull of the given points (at least one required).
    /// Points must have distinct indices.
    static NewtonPolygon from_points(std::vector<Vertex> points);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Segment>& segments() const { return segments_; }

    /// Negated slopes with multiplicities: the valuations of the roots
    /// "covered" by the polygon (roots of valuation +infinity, i.e. zero
    /// roots, are NOT included; they correspond to indices below the first
    /// vertex).
    std::vector<std::pair<Rat, long>> root_valuations() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Segment> segments_;
};

/// p-adic Newton polygon of f: hull of {(i, v_p(a_i)) : a_i != 0}.
/// Throws if p is not prime or f is zero.
NewtonPolygon padic_newton_polygon(const IntPoly& f, const Int& p);

/// Valuations of the nonzero roots of f in \bar Q_p, as (valuation,
/// multiplicity) pairs (zero roots excluded; there are order_at_zero many).
std::vector<std::pair<Rat, long>> padic_root_valuations(const IntPoly& f,
                                                        const Int& p);

}  // namespace hl

#endif
