#include <gtest/gtest.h>

#include "gmclab/errors.hpp"
#include "gmclab/verify.hpp"

using namespace gmclab;

namespace {
void expect_pass(const SuiteReport& r) {
    for (const auto& c : r.checks)
        EXPECT_TRUE(c.pass) << r.name << ": " << c.name << " residual " << c.residual << " tol " << c.tolerance;
}
}  // namespace

TEST(Verify, AnalyticSuitesPass) {
    for (const char* s : {"multigamma", "morris", "critical", "complex", "involution"}) expect_pass(run_suite(s));
}

TEST(Verify, SampledSuitesPassAtReducedSize) {
    VerifyOptions o;
    o.mc_scale = 0.1;
    expect_pass(run_suite("barnesbeta", o));
    expect_pass(run_suite("selberg", o));
}

TEST(Verify, UnknownSuiteAndCriterion) {
    EXPECT_THROW(run_suite("nope"), DomainError);
    EXPECT_THROW(acceptance_criterion(14), DomainError);
    EXPECT_EQ(suite_names().size(), 8u);
}

TEST(Verify, DemoNeverFails) {
    SuiteReport r;
    r.demo = true;
    r.checks.push_back({"x", 0, 0, 1.0, 0.0, false});
    EXPECT_TRUE(r.pass());
}
