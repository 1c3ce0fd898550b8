#include <doctest.h>

#include <cmath>

#include "geopc/error.hpp"
#include "geopc/json_io.hpp"
#include "geopc/metrics.hpp"
#include "geopc/serial_ref.hpp"
#include "support/test_util.hpp"

using namespace geopc;

namespace {

PointCloud points(std::initializer_list<Vec3> ps) {
    PointCloud cloud;
    cloud.positions = ps;
    return cloud;
}

PointCloud rigid_motion(const PointCloud& cloud, double angle, const Vec3& shift) {
    const double c = std::cos(angle), s = std::sin(angle);
    PointCloud out = cloud;
    for (Vec3& p : out.positions) {
        const Vec3 q = p;
        p[0] = c * q[0] - s * q[1] + shift[0];
        p[1] = s * q[0] + c * q[1] + shift[1];
        p[2] = q[2] + shift[2];
    }
    return out;
}

} // namespace

TEST_CASE("chamfer: identity is zero") {
    const PointCloud p = testutil::random_cloud(50, 1);
    CHECK(chamfer(p, p, ChamferVariant::l1) == 0.0);
    CHECK(chamfer(p, p, ChamferVariant::l2) == 0.0);
}

TEST_CASE("chamfer: hand-evaluated pairs") {
    const PointCloud a = points({{0, 0, 0}});
    const PointCloud b = points({{1, 0, 0}});
    CHECK(chamfer(a, b, ChamferVariant::l2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(chamfer(a, b, ChamferVariant::l1) == doctest::Approx(1.0).epsilon(1e-12));

    const PointCloud c = points({{0, 0, 0}, {3, 0, 0}});
    CHECK(chamfer(a, c, ChamferVariant::l2) == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(chamfer(a, c, ChamferVariant::l1) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("f_score: hand-evaluated cases") {
    const PointCloud p = points({{0, 0, 0}, {5, 0, 0}});
    const PointCloud q = points({{0, 0, 0}});
    CHECK(f_score(p, q, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(f_score(q, q, 0.5) == 1.0);

    const PointCloud far = points({{100, 0, 0}});
    CHECK(f_score(q, far, 1.0) == 0.0);
    CHECK_THROWS_AS(f_score(p, q, 0.0), ValidationError);
    CHECK_THROWS_AS(f_score(p, q, -1.0), ValidationError);
}

TEST_CASE("metrics: symmetry under argument swap (property)") {
    for (std::uint64_t seed = 40; seed < 44; ++seed) {
        const PointCloud p = testutil::random_cloud(60, seed);
        const PointCloud q = testutil::random_cloud(45, seed + 100);
        CHECK(chamfer(p, q, ChamferVariant::l1) == chamfer(q, p, ChamferVariant::l1));
        CHECK(chamfer(p, q, ChamferVariant::l2) == chamfer(q, p, ChamferVariant::l2));
        CHECK(f_score(p, q, 0.2) == f_score(q, p, 0.2));
    }
}

TEST_CASE("metrics: rigid motion invariance") {
    const PointCloud p = testutil::random_cloud(64, 50);
    const PointCloud q = testutil::random_cloud(48, 51);
    const PointCloud pr = rigid_motion(p, 0.73, {1.5, -2.0, 0.25});
    const PointCloud qr = rigid_motion(q, 0.73, {1.5, -2.0, 0.25});
    CHECK(chamfer(pr, qr, ChamferVariant::l1) ==
          doctest::Approx(chamfer(p, q, ChamferVariant::l1)).epsilon(1e-9));
    CHECK(chamfer(pr, qr, ChamferVariant::l2) ==
          doctest::Approx(chamfer(p, q, ChamferVariant::l2)).epsilon(1e-9));
    CHECK(f_score(pr, qr, 0.2) == doctest::Approx(f_score(p, q, 0.2)).epsilon(1e-9));
}

TEST_CASE("chamfer: finite-difference sanity on a stable assignment") {
    // q's nearest P point is p0; p1's nearest Q point is q. Moving p1 by
    // delta toward q changes cd_l1 by -delta / (2 |P|).
    const PointCloud q = points({{0, 0, 0}});
    PointCloud p = points({{0.1, 0, 0}, {1, 0, 0}});
    const double before = chamfer(p, q, ChamferVariant::l1);
    const double delta = 1e-4;
    p.positions[1][0] -= delta;
    const double after = chamfer(p, q, ChamferVariant::l1);
    const double expected_change = -delta / (2.0 * p.n());
    CHECK(after - before == doctest::Approx(expected_change).epsilon(0.1));
}

TEST_CASE("f_score: monotone non-increasing as the threshold shrinks") {
    const PointCloud p = testutil::random_cloud(80, 60);
    const PointCloud q = testutil::random_cloud(70, 61);
    double prev = 2.0;
    for (double threshold : {1.0, 0.5, 0.25, 0.1, 0.05, 0.01}) {
        const double f = f_score(p, q, threshold);
        CHECK(f <= prev);
        prev = f;
    }
}

TEST_CASE("total_loss: composition of chamfer terms") {
    const PointCloud gt = points({{0, 0, 0}, {1, 0, 0}});
    const PointCloud coarse = points({{0, 0.5, 0}, {1, 0.5, 0}});
    const PointCloud stage = points({{0, 0.25, 0}, {1, 0.25, 0}});

    CHECK(total_loss(coarse, {}, gt, ChamferVariant::l1) ==
          chamfer(coarse, gt, ChamferVariant::l1));
    CHECK(total_loss(gt, std::vector<PointCloud>{gt}, gt, ChamferVariant::l2) == 0.0);

    const std::vector<PointCloud> stages{stage};
    const double expect =
        chamfer(coarse, gt, ChamferVariant::l2) + chamfer(stage, gt, ChamferVariant::l2);
    CHECK(total_loss(coarse, stages, gt, ChamferVariant::l2) ==
          doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("metrics: empty cloud rejected") {
    const PointCloud p = points({{0, 0, 0}});
    const PointCloud empty;
    CHECK_THROWS_AS(chamfer(p, empty, ChamferVariant::l1), ValidationError);
    CHECK_THROWS_AS(f_score(empty, p, 0.1), ValidationError);
}

TEST_CASE("metrics: parallel path equals the serial reference exactly (property)") {
    for (std::uint64_t seed = 70; seed < 76; ++seed) {
        const PointCloud p = testutil::random_cloud(90, seed);
        const PointCloud q = testutil::random_cloud(75, seed + 1000);
        CHECK(chamfer(p, q, ChamferVariant::l1) == ref::chamfer(p, q, ChamferVariant::l1));
        CHECK(chamfer(p, q, ChamferVariant::l2) == ref::chamfer(p, q, ChamferVariant::l2));
        CHECK(f_score(p, q, 0.15) == ref::f_score(p, q, 0.15));
    }
}

TEST_CASE("metric report serialization") {
    const PointCloud p = testutil::random_cloud(30, 80);
    const MetricReport report = evaluate_completion(p, p, 0.01);
    CHECK(report.cd_l1 == 0.0);
    CHECK(report.cd_l2 == 0.0);
    CHECK(report.f_score == 1.0);
    const nlohmann::json j = metric_report_to_json(report);
    CHECK(j.at("cd_l1") == 0.0);
    CHECK(j.at("threshold") == 0.01);
    CHECK(j.at("f_score") == 1.0);
}
