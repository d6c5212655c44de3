#include <gtest/gtest.h>

#include "random_specs.hpp"

using namespace eqindex;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::invalid_spec;
}

SpecDocument sphere(std::int64_t m) { return load_fixture("s2_complex_m5", {{"m", std::to_string(m)}}); }

}  // namespace

TEST(Quantize, Components) {
  ReducedSpace r;
  r.components.push_back(PointComp{1});
  r.components.push_back(PointComp{-1});
  r.components.push_back(SurfaceComp{1, 4, 1, std::nullopt});
  EXPECT_EQ(quantize(r, Flavor::AlmostComplex), 4);  // 1 - 1 + (4 + 1 - 1)
  EXPECT_EQ(quantize(r, Flavor::SpinC), 2);          // 1 - 1 + 4/2
  ReducedSpace odd;
  odd.components.push_back(SurfaceComp{0, 3, 1, std::nullopt});
  EXPECT_EQ(code_of([&] { quantize(odd, Flavor::SpinC); }), errc::parity_violation);
  EXPECT_EQ(quantize(odd, Flavor::StableComplex), 4);
  EXPECT_EQ(quantize(ReducedSpace{}, Flavor::SpinC), 0);
}

TEST(VerifyQR, SphereDegreeFive) {
  SpecDocument d = sphere(5);
  for (int a = 1; a <= 4; ++a) {
    QRReport r = verify_qr(d.manifold, std::nullopt, d.reduced.at(Rat(a)), a);
    EXPECT_TRUE(r.equal) << a;
    EXPECT_TRUE(r.conditions_hold) << a;
    EXPECT_EQ(r.lhs, 1);
  }
  QRReport out = verify_qr(d.manifold, std::nullopt, d.reduced.at(Rat(6)), 6);
  EXPECT_TRUE(out.equal);
  EXPECT_EQ(out.lhs, 0);
  EXPECT_EQ(code_of([&] { verify_qr(d.manifold, std::nullopt, ReducedSpace{}, 5); }), errc::irregular_level);
  EXPECT_EQ(code_of([&] { verify_qr(d.manifold, std::nullopt, ReducedSpace{}, 0); }), errc::irregular_level);
}

TEST(VerifyQR, SphereNegativeDegree) {
  SpecDocument d = sphere(-3);
  const ReducedSpace& red = d.reduced.at(Rat(-1));
  ASSERT_EQ(red.components.size(), 1u);
  EXPECT_EQ(component_sign(red.components[0]), -1);
  QRReport r = verify_qr(d.manifold, std::nullopt, red, -1);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, -1);
  EXPECT_EQ(r.rhs, -1);
  EXPECT_TRUE(verify_qr(d.manifold, std::nullopt, d.reduced.at(Rat(-2)), -2).equal);
}

TEST(VerifyQR, PresymplecticSphere) {
  SpecDocument d = load_fixture("o10_presymplectic");
  QRReport r = verify_qr(d.manifold, std::nullopt, d.reduced.at(Rat(0)), 0);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);
  for (int a = 2; a <= 10; ++a) EXPECT_TRUE(verify_qr(d.manifold, std::nullopt, d.reduced.at(Rat(a)), a).equal) << a;
}

TEST(VerifyQR, StableSphereFamily) {
  for (int m = -3; m <= 3; ++m) {
    SpecDocument d = load_fixture("s4_stable_m", {{"m", std::to_string(m)}});
    QRReport r = verify_qr(d.manifold, d.partitions.at(Rat(0)), d.reduced.at(Rat(0)), 0);
    EXPECT_EQ(r.lhs, 0);
    EXPECT_EQ(r.rhs, m + 1);
    EXPECT_EQ(r.equal, m == -1) << m;
    EXPECT_EQ(r.conditions_hold, m == -1) << m;
    EXPECT_EQ(r.warnings.empty(), m == -1) << m;
  }
  SpecDocument d = load_fixture("s4_stable_m");
  EXPECT_EQ(code_of([&] { verify_qr(d.manifold, std::nullopt, d.reduced.at(Rat(0)), 0); }), errc::invalid_spec);
}

TEST(VerifyQR, TorusRefuses) {
  SpecDocument d = load_fixture("torus");
  EXPECT_EQ(code_of([&] { verify_qr(d.manifold, d.partitions.at(Rat(0)), d.reduced.at(Rat(0)), 0); }), errc::not_splitting);
  // An empty or bounding reduced space is expressible, and then both sides vanish.
  EXPECT_TRUE(verify_qr(d.manifold, Partition{}, ReducedSpace{}, 0).equal);
  ReducedSpace bounding;
  bounding.components = {PointComp{1}, PointComp{-1}};
  EXPECT_TRUE(verify_qr(d.manifold, Partition{}, bounding, 0).equal);
}

TEST(Window, SpinCSphere) {
  ManifoldSpec s = load_fixture("s2_spinc_m4").manifold;
  LevelWindow w = condition_window(s, 0);
  EXPECT_FALSE(w.empty);
  EXPECT_TRUE(w.contains_interval(Rat::parse("-1/2"), Rat::parse("1/2")));
  EXPECT_TRUE(w.contains(Rat(0)));
  EXPECT_TRUE(w.contains(Rat::parse("-1/4")));
  EXPECT_FALSE(w.contains(Rat::parse("-1/2")));
  ASSERT_TRUE(w.lo && w.hi);
  EXPECT_EQ(*w.lo, Rat::parse("-1/2"));
  EXPECT_EQ(*w.hi, Rat::parse("7/2"));
}

TEST(Window, ComplexSphereAndErrors) {
  ManifoldSpec s = sphere(5).manifold;
  LevelWindow w = condition_window(s, 2);
  EXPECT_TRUE(w.contains(Rat::parse("5/2")));
  EXPECT_TRUE(w.contains(Rat(2)));
  EXPECT_FALSE(w.contains(Rat(5)));
  EXPECT_EQ(code_of([&] { condition_window(load_fixture("s4_stable_m").manifold, 0); }), errc::invalid_spec);
}

TEST(Cut, SphereAtHalfLevel) {
  SpecDocument d = sphere(5);
  Rat t = Rat::parse("5/2");
  CutReport r = verify_cut_identities(d.manifold, partition_at(d.manifold, t), d.reduced.at(t));
  ASSERT_TRUE(r.cut);
  EXPECT_EQ(r.cut->reduced_labels.size(), 1u);
  EXPECT_EQ(r.cut_multiplicity, 0);
  EXPECT_EQ(r.multiplicity, 1);
  EXPECT_EQ(r.reduced, 1);
  EXPECT_EQ(r.cut_at_infinity, Rat(0));
  EXPECT_EQ(r.cut_at_zero, Rat(0));
  EXPECT_TRUE(r.holds());
  EXPECT_TRUE(validate(r.cut->base).empty());
}

TEST(Cut, PresymplecticTwoReducedPoints) {
  SpecDocument d = load_fixture("o10_presymplectic");
  CutReport r = verify_cut_identities(d.manifold, partition_at(d.manifold, Rat(0)), d.reduced.at(Rat(0)));
  ASSERT_TRUE(r.cut);
  ASSERT_EQ(r.cut->reduced_labels.size(), 2u);
  const FixedPoint* a = r.cut->base.find(r.cut->reduced_labels[0]);
  const FixedPoint* b = r.cut->base.find(r.cut->reduced_labels[1]);
  EXPECT_NE(a->orientation_matches, b->orientation_matches);
  EXPECT_TRUE(r.holds());
}

TEST(Cut, StableSphereSurface) {
  SpecDocument d = load_fixture("s4_stable_m", {{"m", "-1"}});
  CutReport r = verify_cut_identities(d.manifold, d.partitions.at(Rat(0)), d.reduced.at(Rat(0)));
  EXPECT_FALSE(r.cut);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.cut_at_infinity, Rat(0));
  EXPECT_EQ(r.cut_at_zero, Rat(0));
  SpecDocument bad = load_fixture("s4_stable_m", {{"m", "0"}});
  EXPECT_EQ(code_of([&] { verify_cut_identities(bad.manifold, bad.partitions.at(Rat(0)), bad.reduced.at(Rat(0))); }), errc::conditions_violated);
}

TEST(Cut, Errors) {
  SpecDocument d = sphere(5);
  ReducedSpace surf;
  surf.components.push_back(SurfaceComp{0, 1, 1, -1});
  EXPECT_EQ(code_of([&] { cut(d.manifold, partition_at(d.manifold, Rat(2)), surf); }), errc::unsupported_dimension);
  SpecDocument four = load_fixture("s4_stable_m", {{"m", "-1"}});
  EXPECT_EQ(code_of([&] { cut(four.manifold, four.partitions.at(Rat(0)), four.reduced.at(Rat(0))); }), errc::unsupported_dimension);
  SpecDocument torus = load_fixture("torus");
  EXPECT_EQ(code_of([&] { cut(torus.manifold, Partition{}, torus.reduced.at(Rat(0))); }), errc::not_splitting);
  SurfaceComp no_normal{0, -1, 1, std::nullopt};
  EXPECT_EQ(code_of([&] { reduced_surface_contribution(no_normal, Flavor::StableComplex); }), errc::invalid_spec);
}

TEST(Cut, ReducedLabelsAvoidCollisions) {
  SpecDocument d = sphere(5);
  d.manifold.points[1].label = "red1";
  Rat t = Rat::parse("5/2");
  CutSpec c = cut(d.manifold, partition_at(d.manifold, t), d.reduced.at(t));
  ASSERT_EQ(c.reduced_labels.size(), 1u);
  EXPECT_NE(c.reduced_labels[0], "red1");
  EXPECT_TRUE(validate(c.base).empty());
}
