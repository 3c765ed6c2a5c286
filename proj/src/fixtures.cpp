#include "toric/fixtures.hpp"

namespace toric {

namespace fixtures {

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<IntVector> out;
    for (const auto& r : rows) {
        IntVector v;
        for (int x : r) v.emplace_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

RatVector rats(std::initializer_list<const char*> xs) {
    RatVector out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

}  // namespace

Arrangement hirzebruch() {
    return Arrangement(2, vecs({{1, 0}, {0, 1}, {-1, -1}, {0, -1}}), rats({"1", "1", "1", "1"}), "hirzebruch");
}

Arrangement a2_resolution() { return Arrangement(1, vecs({{-1}, {1}, {1}}), rats({"1", "-1/2", "0"}), "a2-resolution"); }

Arrangement trivial_product() {
    return Arrangement(2, vecs({{1, 0}, {1, 0}, {0, 1}}), rats({"0", "1", "0"}), "trivial-product");
}

Arrangement projective_plane_pair() {
    return Arrangement(2, vecs({{1, 0}, {0, 1}, {-1, -1}, {0, -1}}), rats({"1", "1", "1", "3"}), "projective-plane-pair");
}

TorusData diagonal_circle() {
    return make_torus_data(IntMatrix::from_columns(3, vecs({{1, 1, 1}})), rats({"1", "1", "1"}));
}

}  // namespace fixtures

}  // namespace toric
