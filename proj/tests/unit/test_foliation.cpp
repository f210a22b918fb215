#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spinflow/emt_bounds.hpp"
#include "spinflow/errors.hpp"
#include "spinflow/foliation.hpp"

using namespace spinflow;
using fixtures::max_abs;

TEST(Flow, HeisenbergFlowData) {
  for (double tau : {0.5, 1.0, 2.0}) {
    const auto m = fixtures::nil3(tau);
    const auto flow = flow_structure(m, levi_civita(m), 2);
    EXPECT_NEAR(flow.h(0, 1), -tau, 1e-12);  // h(e_1) = -tau e_2
    EXPECT_NEAR(flow.h(1, 0), tau, 1e-12);   // h(e_2) = tau e_1
    EXPECT_LT(flow.h.row(2).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(flow.riemannian);
    EXPECT_TRUE(flow.minimal);
    ASSERT_TRUE(flow.b.has_value());
    EXPECT_NEAR(*flow.b, -tau, 1e-12);
    EXPECT_LE(flow.xi_column_residual, 1e-12);
    EXPECT_EQ(flow.q, (std::vector<int>{0, 1}));
  }
}

TEST(Flow, SolvableFlowIsMinimalButNotRiemannian) {
  const auto m = fixtures::sol3();
  const auto flow = flow_structure(m, levi_civita(m), 2);
  EXPECT_NEAR(flow.h(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(flow.h(1, 1), -1.0, 1e-12);
  EXPECT_FALSE(flow.riemannian);
  EXPECT_TRUE(flow.minimal);
  EXPECT_LE(flow.xi_column_residual, 1e-12);
}

TEST(Flow, ProductFlowIsTrivial) {
  const auto m = fixtures::flat(3);
  const auto flow = flow_structure(m, levi_civita(m), 0);
  EXPECT_TRUE(flow.riemannian);
  EXPECT_TRUE(flow.minimal);
  ASSERT_TRUE(flow.b.has_value());
  EXPECT_EQ(*flow.b, 0.0);
}

TEST(Flow, NonMinimalFlowHasMeanCurvature) {
  // [e1, e2] = e2, [e1, e3] = e3 with xi = e2: nabla_xi xi = e1.
  const auto m = validate_frame(3, {{0, 1, 1, 1.0}, {0, 2, 2, 1.0}});
  const auto flow = flow_structure(m, levi_civita(m), 1);
  EXPECT_FALSE(flow.minimal);
  EXPECT_NEAR(flow.kappa(0), 1.0, 1e-12);
  EXPECT_TRUE(flow.riemannian);
}

TEST(Flow, RejectsBadIndex) {
  const auto m = fixtures::nil3(1.0);
  EXPECT_THROW(flow_structure(m, levi_civita(m), 3), InvalidArgument);
}

TEST(Oneill, VanishesForTrivialFlow) {
  const auto m = fixtures::flat(3);
  const auto conn = levi_civita(m);
  const auto r = oneill(m, conn, flow_structure(m, conn, 2));
  EXPECT_EQ(max_abs(r.a_zw), 0.0);
  EXPECT_EQ(max_abs(r.a_z_xi), 0.0);
}

TEST(Oneill, SphereValue) {
  const auto m = fixtures::su2();
  const auto conn = levi_civita(m);
  const auto r = oneill(m, conn, flow_structure(m, conn, 2));
  EXPECT_NEAR(r.a_zw(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(r.half_bracket(0, 1), 1.0, 1e-12);
  EXPECT_LE(r.bracket_residual, 1e-12);
  EXPECT_LE(r.h_residual, 1e-12);
  EXPECT_LE(r.skew_residual, 1e-12);
}

TEST(Oneill, RejectsNonRiemannianFlow) {
  const auto m = fixtures::sol3();
  const auto conn = levi_civita(m);
  EXPECT_THROW(oneill(m, conn, flow_structure(m, conn, 2)), NonRiemannianFlow);
}

TEST(Hypersurface, FlatParallelSpinorRestrictsToParallel) {
  const auto b = fixtures::build(fixtures::flat(3));
  const auto r = hypersurface_restrict(b.field, 2, b.conn);
  EXPECT_TRUE(r.parallel_ambient);
  EXPECT_TRUE(r.riemannian);
  EXPECT_EQ(max_abs(r.t_phi.entries()), 0.0);
  EXPECT_EQ(r.rep_l.dim(), 2);
}

TEST(Hypersurface, UmbilicShapeGivesHalfWeingarten) {
  const auto b = fixtures::build(fixtures::flat(3));
  for (double a : {0.3, -1.0, 2.5}) {
    RMatrix h = RMatrix::Zero(3, 3);
    h(0, 0) = h(1, 1) = a;
    const auto r = hypersurface_restrict(b.field, 2, h);
    EXPECT_NEAR(r.t_phi(0, 0), -a / 2, 1e-12);
    EXPECT_NEAR(r.t_phi(1, 1), -a / 2, 1e-12);
    EXPECT_NEAR(r.t_phi(0, 1), 0.0, 1e-12);
    EXPECT_LE(r.weingarten_residual, 1e-10);
    EXPECT_LE(r.lie_residual, 1e-10);
    EXPECT_TRUE(r.normal_t_phi_vanishes);
  }
}

TEST(Hypersurface, HeisenbergSliceMatchesLieDerivative) {
  const auto b = fixtures::build(fixtures::nil3(1.0));
  const auto r = hypersurface_restrict(b.field, 2, b.conn);
  EXPECT_LE(r.lie_residual, 1e-10);
  EXPECT_LE(r.normal_residual, 1e-10);
  EXPECT_THROW(hypersurface_restrict(b.field, 2, RMatrix::Zero(2, 2)), DimensionError);
}

TEST(Transversal, HeisenbergKernelIsEverything) {
  for (double tau : {0.5, 1.0, 2.0}) {
    const auto b = fixtures::build(fixtures::nil3(tau));
    const auto flow = flow_structure(b.m, b.conn, 2);
    const auto tc = transversal_connection(b.m, b.conn, b.field, flow);
    EXPECT_EQ(tc.kernel_dim, 2);
    EXPECT_NEAR(tc.scal_direct, 0.0, 1e-9);
    EXPECT_NEAR(tc.scal_oneill, 0.0, 1e-9);
    EXPECT_LE(tc.xi_curvature_residual, 1e-10);
    EXPECT_LT(tc.field_residual, 1e-12);
    ASSERT_TRUE(tc.route_residual.has_value());
    EXPECT_LT(*tc.route_residual, 1e-12);
  }
}

TEST(Transversal, SphereHasPositiveTransversalCurvature) {
  const auto b = fixtures::build(fixtures::su2());
  const auto flow = flow_structure(b.m, b.conn, 2);
  const auto tc = transversal_connection(b.m, b.conn, b.field, flow);
  EXPECT_EQ(tc.kernel_dim, 0);
  EXPECT_NEAR(tc.scal_direct, 8.0, 1e-9);
  EXPECT_NEAR(tc.scal_oneill, 8.0, 1e-9);
}

TEST(Transversal, TrivialFlowKeepsAmbientDerivatives) {
  const auto b = fixtures::build(fixtures::flat(3));
  const auto flow = flow_structure(b.m, b.conn, 2);
  const auto tc = transversal_connection(b.m, b.conn, b.field, flow);
  for (int i = 0; i < 3; ++i)
    EXPECT_LT(max_abs(CMatrix(tc.derivative[i] - b.field.derivative(i))), 1e-15);
  EXPECT_EQ(tc.kernel_dim, 2);
}

TEST(Transversal, RejectsNonRiemannianFlow) {
  const auto b = fixtures::build(fixtures::sol3());
  const auto flow = flow_structure(b.m, b.conn, 2);
  EXPECT_THROW(transversal_connection(b.m, b.conn, b.field, flow), NonRiemannianFlow);
}

TEST(Transversal, CommonKernelDimension) {
  EXPECT_EQ(common_kernel_dim({CMatrix::Zero(3, 3)}), 3);
  EXPECT_EQ(common_kernel_dim({CMatrix::Identity(3, 3)}), 0);
  CMatrix a = CMatrix::Zero(3, 3), b = CMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  EXPECT_EQ(common_kernel_dim({a, b}), 1);
  EXPECT_THROW(common_kernel_dim({}), InvalidArgument);
  EXPECT_THROW(common_kernel_dim({a, CMatrix::Zero(2, 2)}), DimensionError);
}

TEST(FlowTensors, HeisenbergSkewPartIsHalfShape) {
  for (double tau : {0.5, 1.0, 2.0}) {
    const auto b = fixtures::build(fixtures::nil3(tau));
    const auto flow = flow_structure(b.m, b.conn, 2);
    const auto f = flow_emt(b.field, flow);
    EXPECT_NEAR(f.Q(0, 1), tau / 2, 1e-12);
    EXPECT_NEAR(f.Q(0, 1), -0.5 * flow.h(0, 1), 1e-12);
    EXPECT_TRUE(f.q_parallel);
    EXPECT_TRUE(f.xi_parallel);
    ASSERT_TRUE(f.oneill_residual.has_value());
    EXPECT_LE(*f.oneill_residual, 1e-10);
    ASSERT_TRUE(f.bracket_residual.has_value());
    EXPECT_LE(*f.bracket_residual, 1e-10);
  }
}

TEST(FlowTensors, SolvableLieAndBracketIdentities) {
  const auto b = fixtures::build(fixtures::sol3());
  const auto flow = flow_structure(b.m, b.conn, 2);
  const auto f = flow_emt(b.field, flow);
  const auto lie = lie_derivative_metric(b.conn, 2);
  EXPECT_NEAR(f.T(0, 0), -0.5, 1e-12);
  EXPECT_NEAR(f.T(0, 0), -0.25 * lie(0, 0), 1e-12);
  EXPECT_NEAR(f.Q(0, 1), 0.0, 1e-12);
  EXPECT_NEAR(f.Q(0, 1), 0.25 * b.m.c(0, 1, 2), 1e-12);
  EXPECT_TRUE(f.q_parallel);
  ASSERT_TRUE(f.lie_residual.has_value());
  EXPECT_LE(*f.lie_residual, 1e-10);
  EXPECT_FALSE(f.oneill_residual.has_value());
}

TEST(FlowTensors, ParallelFieldOnProductVanishes) {
  const auto b = fixtures::build(fixtures::flat(3));
  const auto f = flow_emt(b.field, flow_structure(b.m, b.conn, 2));
  EXPECT_EQ(max_abs(f.E.entries()), 0.0);
  EXPECT_EQ(f.e_q_norm_sq, 0.0);
  EXPECT_TRUE(f.minimal_iff_mixed_t_vanishes);
}

TEST(ThreeD, HeisenbergKernelMatchesDiracSolution) {
  for (double tau : {0.5, 1.0, 2.0}) {
    const auto b = fixtures::build(fixtures::nil3(tau));
    const auto flow = flow_structure(b.m, b.conn, 2);
    const auto tc = transversal_connection(b.m, b.conn, b.field, flow);
    const auto r = three_d_equivalence(b.field, flow, tc);
    EXPECT_NEAR(r.b, -tau, 1e-12);
    EXPECT_TRUE(r.kernel_nonempty);
    EXPECT_TRUE(r.solution_exists);
    EXPECT_TRUE(r.equivalent);
    EXPECT_LT(r.dirac_b_residual, 1e-12);
    EXPECT_LT(r.dirac_split_residual, 1e-12);
  }
}

TEST(ThreeD, FlatTorus) {
  const auto b = fixtures::build(fixtures::flat(3));
  const auto flow = flow_structure(b.m, b.conn, 2);
  const auto r = three_d_equivalence(b.field, flow, transversal_connection(b.m, b.conn, b.field, flow));
  EXPECT_TRUE(r.kernel_nonempty);
  EXPECT_TRUE(r.solution_exists);
  EXPECT_TRUE(r.equivalent);
}

TEST(ThreeD, SphereHasNoTransversalParallelSpinor) {
  const auto b = fixtures::build(fixtures::su2());
  const auto flow = flow_structure(b.m, b.conn, 2);
  const auto r = three_d_equivalence(b.field, flow, transversal_connection(b.m, b.conn, b.field, flow));
  EXPECT_FALSE(r.kernel_nonempty);
  EXPECT_FALSE(r.solution_exists);
  EXPECT_TRUE(r.equivalent);
  EXPECT_NEAR(r.dirac_b_residual, 1.0, 1e-12);  // D = -3/2, b/2 = -1/2
  EXPECT_TRUE(r.scal_nonnegative);
}

TEST(ThreeD, Preconditions) {
  const auto b = fixtures::build(fixtures::nil3(1.0));
  const auto flow = flow_structure(b.m, b.conn, 2);
  const auto tc = transversal_connection(b.m, b.conn, b.field, flow);
  auto bent = flow;
  bent.minimal = false;
  EXPECT_THROW(three_d_equivalence(b.field, bent, tc), InvalidArgument);
  auto twisted = flow;
  twisted.riemannian = false;
  EXPECT_THROW(three_d_equivalence(b.field, twisted, tc), NonRiemannianFlow);
  const auto four = fixtures::build(fixtures::flat(4));
  const auto f4 = flow_structure(four.m, four.conn, 3);
  EXPECT_THROW(three_d_equivalence(four.field, f4, transversal_connection(four.m, four.conn, four.field, f4)),
               InvalidArgument);
}
