#include "doctest.h"
#include "fault_plan.hpp"
#include "hecke/lusztig.hpp"
#include "hecke/verifier.hpp"
#include "json.hpp"

using namespace hecke;

namespace {

CheckOptions small_options(int order = 4) {
  CheckOptions o;
  o.order = order;
  o.relation_samples = 20;
  o.morphism_samples = 8;
  o.diagram_samples = 5;
  o.module_samples = 4;
  return o;
}

void require_reproducible_failure(const CheckReport& r,
                                  const std::function<CheckReport(std::size_t)>& replay) {
  REQUIRE(r.status == Status::Fail);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness_case.has_value());
  CHECK(r.witness->find("difference = ") != std::string::npos);
  const CheckReport again = replay(*r.witness_case);
  CHECK(again.status == Status::Fail);
  CHECK(again.witness == r.witness);
}

}  // namespace

TEST_CASE("all checks pass on A1") {
  const RootDatum d = root_datum_of_type('A', 1);
  const CheckOptions o = small_options(6);
  for (const auto& r : {check_presentation(d, o), check_morphisms(d, o), check_diagram(d, o),
                        check_display_identity(d, o, 0), check_modules(d, o)}) {
    CAPTURE(r.name);
    CAPTURE(r.witness.value_or(""));
    CHECK(r.status == Status::Pass);
    CHECK(!r.witness.has_value());
    CHECK(r.datum == describe(d));
    CHECK(r.order == 6);
    CHECK(r.guard == 2);
  }
}

TEST_CASE("corrupted Bernstein relation fails with a reproducible witness") {
  const RootDatum d = root_datum_of_type('A', 2);
  const CheckOptions o = small_options();
  detail::FaultPlan f;
  f.flip_relation_sign = true;
  const CheckReport r = detail::check_presentation(d, o, f);
  require_reproducible_failure(r, [&](std::size_t k) { return detail::check_presentation(d, o, f, k); });
  CHECK(r.witness->find("bernstein") != std::string::npos);
  // The same case passes without the corruption.
  CHECK(detail::check_presentation(d, o, {}, *r.witness_case).status == Status::Pass);
}

TEST_CASE("dropping the e_B conjugation breaks the square on T_s") {
  const RootDatum d = root_datum_of_type('A', 1);
  const CheckOptions o = small_options(6);
  detail::FaultPlan f;
  f.drop_eb_conjugation = true;
  const CheckReport r = detail::check_diagram(d, o, f);
  require_reproducible_failure(r, [&](std::size_t k) { return detail::check_diagram(d, o, f, k); });
  CHECK(r.witness->find("T(s1)") != std::string::npos);
}

TEST_CASE("sign module with t_s acting by +1 fails") {
  const RootDatum d = root_datum_of_type('A', 1);
  const CheckOptions o = small_options();
  detail::FaultPlan f;
  f.sign_module_plus = true;
  const CheckReport r = detail::check_modules(d, o, f);
  require_reproducible_failure(r, [&](std::size_t k) { return detail::check_modules(d, o, f, k); });
}

TEST_CASE("corrupted twist fails the morphism check") {
  const RootDatum d = root_datum_of_type('A', 1);
  const CheckOptions o = small_options();
  detail::FaultPlan f;
  f.corrupt_twist = true;
  const CheckReport r = detail::check_morphisms(d, o, f);
  require_reproducible_failure(r, [&](std::size_t k) { return detail::check_morphisms(d, o, f, k); });
}

TEST_CASE("sign-flipped rho fails the display identity") {
  const RootDatum d = root_datum_of_type('A', 2);
  const CheckOptions o = small_options();
  detail::FaultPlan f;
  f.flip_rho_sign = true;
  for (int i = 0; i < 2; ++i) {
    const CheckReport r = detail::check_display_identity(d, o, i, f);
    require_reproducible_failure(
        r, [&](std::size_t k) { return detail::check_display_identity(d, o, i, f, k); });
  }
}

TEST_CASE("display identity at r = 0 reduces to 1 - t_s on both sides") {
  // exp(-rho) e_B is W-invariant, so setting r = 0 collapses the right side.
  auto at_r_zero = [](const GradedElement& a) {
    GradedElement out(a.nvars(), a.order());
    for (const auto& [w, f] : a.terms()) {
      FormalSeries g(f.nvars(), f.order());
      for (const auto& [m, c] : f.terms())
        if (m[f.nvars() - 1] == 0) g.add_term(m, c);
      out.add_term(w, g);
    }
    return out;
  };
  for (auto [t, n, order] : std::vector<std::tuple<char, int, int>>{{'A', 1, 10}, {'A', 2, 5}, {'B', 2, 5}}) {
    const RootDatum d = root_datum_of_type(t, n);
    const GradedHecke G(d);
    const LinearForm rho = diff(d.rho());
    const LinearForm two_r = G.r_form(2);
    const FormalSeries e = G.todd_eB(order);
    for (int i = 0; i < n; ++i) {
      const GradedElement one = G.one(order);
      const GradedElement ts = G.t_simple(i, order);
      const GradedElement f_plus = GradedElement::series(lusztig_twist(G, i, order));
      const GradedElement f_minus = GradedElement::series(lusztig_twist(G, i, order, -1));
      const GradedElement inner = G.mul(ts + one, f_plus) - one;
      const GradedElement rhs =
          one - G.mul(G.mul(GradedElement::series(exp_linear(-rho - two_r, order) * e), inner),
                      GradedElement::series(fs_inv(e) * exp_linear(rho, order)));
      const GradedElement lhs = G.mul(f_minus, one - ts);
      const GradedElement shadow = (one - ts).truncated(order - 1);
      CHECK(at_r_zero(lhs).truncated(order - 1) == shadow);
      CHECK(at_r_zero(rhs).truncated(order - 1) == shadow);
    }
  }
}

TEST_CASE("guard zero suffices; a negative guard is reported as an error") {
  // Every division by a root is followed by a multiplication by 2r, so the
  // graded side never loses a degree.
  const RootDatum d = root_datum_of_type('A', 2);
  CheckOptions o = small_options();
  o.guard = 0;
  CHECK(check_diagram(d, o).status == Status::Pass);
  o.guard = -1;
  const CheckReport r = check_diagram(d, o);
  CHECK(r.status == Status::Error);
  REQUIRE(r.witness.has_value());
  CHECK(!r.witness->empty());
}

TEST_CASE("reports are deterministic, sorted, and independent of concurrency") {
  const RootDatum d = root_datum_of_type('A', 2);
  CheckOptions o = small_options();
  o.seed = 42;
  const auto a = run_suites(d, {Suite::All}, o, false);
  const auto b = run_suites(d, {Suite::All}, o, true);
  REQUIRE(a.size() == 6);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].name == b[k].name);
    CHECK(a[k].status == b[k].status);
    CHECK(a[k].witness == b[k].witness);
    if (k) CHECK(a[k - 1].name < a[k].name);
  }
  CHECK(a.front().name == "check_diagram");
  CHECK(a[1].name == "check_display_identity[s1]");
  RunReport ra{describe(d), o.order, o.guard, o.seed, a};
  RunReport rb{describe(d), o.order, o.guard, o.seed, b};
  CHECK(to_json(ra, false) == to_json(rb, false));
  CHECK(to_text(ra, false) == to_text(rb, false));
}

TEST_CASE("JSON report layout") {
  const RootDatum d = root_datum_of_type('B', 2);
  const CheckOptions o = small_options();
  RunReport rep{describe(d), o.order, o.guard, o.seed, run_suites(d, {Suite::Display}, o)};
  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["artifact_version"] == kArtifactVersion);
  CHECK(j["datum"]["type"] == "B");
  CHECK(j["datum"]["rank"] == 2);
  CHECK(j["datum"]["cartan"] == nlohmann::json({{2, -1}, {-2, 2}}));
  CHECK(j["order"] == 4);
  CHECK(j["guard"] == 2);
  CHECK(j["seed"] == 0);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "check_display_identity[s1]");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0].contains("elapsed_ms"));
  CHECK(!j["checks"][0].contains("witness"));
  CHECK(rep.all_passed());

  detail::FaultPlan f;
  f.flip_rho_sign = true;
  rep.checks = {detail::check_display_identity(d, o, 0, f)};
  const auto jf = nlohmann::json::parse(to_json(rep));
  CHECK(jf["checks"][0]["status"] == "fail");
  CHECK(jf["checks"][0]["witness"].is_string());
  CHECK(!rep.all_passed());
  CHECK(to_text(rep).find("witness: ") != std::string::npos);
}

TEST_CASE("suite names parse") {
  CHECK(parse_suite("diagram") == Suite::Diagram);
  CHECK(parse_suite("all") == Suite::All);
  CHECK(!parse_suite("everything").has_value());
}
