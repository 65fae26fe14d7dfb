#include <doctest.h>

#include <cmath>

#include "heightlab/siegel.hpp"

using namespace hl;

namespace {
RatMatrix rows(std::initializer_list<std::initializer_list<long>> m) {
    RatMatrix out;
    for (auto& r : m) {
        std::vector<Rat> row;
        for (long v : r) row.push_back(Rat(v));
        out.push_back(std::move(row));
    }
    return out;
}
}  // namespace

TEST_CASE("subspace heights from Plucker coordinates") {
    CHECK(subspace_height(rows({{1, 0}, {0, 1}})).h_s.mid_d() == 0.0);
    CHECK(std::abs(subspace_height(rows({{1, 2}})).h_s.mid_d() -
                   0.5 * std::log(5.0)) < 1e-12);
    CHECK(std::abs(subspace_height(rows({{1, 0, 1}, {0, 1, 1}})).h_s.mid_d() -
                   0.5 * std::log(3.0)) < 1e-12);
    CHECK_THROWS(subspace_height(rows({{1, 2}, {2, 4}})));
}

TEST_CASE("orthogonal complement preserves the height") {
    RatMatrix W = rows({{1, 2}});
    CHECK(std::abs(subspace_height(W).h_s.mid_d() -
                   subspace_height(orthogonal_complement(W, 2)).h_s.mid_d()) <
          1e-12);
    RatMatrix W3 = rows({{1, 0, 1}, {0, 1, 1}});
    CHECK(std::abs(subspace_height(W3).h_s.mid_d() -
                   subspace_height(orthogonal_complement(W3, 3)).h_s.mid_d()) <
          1e-12);
    // complement of the full space is the zero subspace, height 0
    CHECK(subspace_height(orthogonal_complement(rows({{1, 0}, {0, 1}}), 2))
              .h_s.mid_d() == 0.0);
}

TEST_CASE("basis invariance of the Plucker vector") {
    RatMatrix a = rows({{1, 0, 1}, {0, 1, 1}});
    RatMatrix b = rows({{1, 1, 2}, {1, -1, 0}});  // same span, different basis
    CHECK(subspace_height(a).plucker == subspace_height(b).plucker);
}

TEST_CASE("small kernel vector meets the Siegel corollary bound") {
    auto r1 = small_kernel_vector(rows({{1, 1, 1}}), 3);
    CHECK(r1.meets_bound);
    CHECK(r1.h_p.mid_d() == 0.0);  // a 0/+-1 solution exists

    auto r2 = small_kernel_vector(rows({{1, -1}}), 2);
    CHECK(r2.meets_bound);
    CHECK(r2.vector == std::vector<Int>{Int(1), Int(1)});

    auto r3 = small_kernel_vector(rows({{1, 2, 3}, {3, 2, 1}}), 3);
    CHECK(r3.meets_bound);
    // one-dimensional kernel: (1, -2, 1) up to sign
    CHECK(r3.vector == std::vector<Int>{Int(1), Int(-2), Int(1)});

    CHECK_THROWS(small_kernel_vector(rows({{1, 0}, {0, 1}}), 2));
}
