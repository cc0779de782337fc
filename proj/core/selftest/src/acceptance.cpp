#include "curvegen/testing/acceptance.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "curvegen/dsl.hpp"
#include "curvegen/gentime.hpp"
#include "curvegen/p1_oracle.hpp"
#include "curvegen/report.hpp"
#include "curvegen/testing/generators.hpp"

namespace curvegen::testing {

namespace {

constexpr int kGeneratorCorpus = 10'000;
constexpr int kGenusOneCorpus = 1'000;
constexpr int kSerrePairs = 1'000;
constexpr int kEquivarianceObjects = 100;
constexpr int kEquivarianceActions = 100;

struct Check {
  bool ok = true;
  std::string first_failure;
  std::int64_t cases = 0;
  std::int64_t failures = 0;

  void expect(bool cond, const std::function<std::string()>& what) {
    ++cases;
    if (cond) return;
    ++failures;
    if (ok) first_failure = what();
    ok = false;
  }

  std::string summary(const std::string& unit) const {
    std::ostringstream os;
    os << (cases - failures) << "/" << cases << " " << unit;
    if (!ok) os << "; first failure: " << first_failure;
    return os.str();
  }
};

CriterionResult nonclassical_generator() {
  Check c;
  for (std::int64_t g = 2; g <= 10; ++g) {
    const std::string src = "curve genus " + std::to_string(g) +
                            "\nobject E = bundle(r=1,d=0) + bundle(r=1,d=1,id=L)\n"
                            "assume hom(E.1, L) = 0\nanalyze E\n";
    const Report report = run(dsl::parse(src));
    const auto* r = std::get_if<AnalyzeResult>(&report.queries.at(0).outcome);
    c.expect(r && r->is_generator && r->classical.decision == Decision::No &&
                 r->classical.rule == Rule::SimpleOrthogonal && !r->classical.citation.empty(),
             [&] { return "genus " + std::to_string(g); });
  }
  return {1, "nonclassical-generator", c.ok, c.summary("genera 2..10 give a generator that is not classical (rule 7)")};
}

CriterionResult generator_criterion(std::uint64_t seed) {
  Generator gen(seed);
  GenOptions opt;
  opt.annotations = false;
  Check c;
  std::int64_t semistable = 0;
  for (int i = 0; i < kGeneratorCorpus; ++i) {
    const Curve curve = gen.curve(opt);
    const FormalObject obj = gen.object(curve, opt);
    const bool gen_flag = is_generator(obj, curve);
    const bool classified = classify(obj).is_semistable();
    const bool oracle = oracle_semistable(obj);
    semistable += oracle;
    c.expect(gen_flag == !classified && classified == oracle, [&] { return "object " + std::to_string(i); });
  }
  return {2, "generator-criterion", c.ok,
          c.summary("objects agree (" + std::to_string(semistable) + " semistable)")};
}

CriterionResult genus_one(std::uint64_t seed) {
  Generator gen(seed + 1);
  GenOptions opt;
  opt.min_genus = opt.max_genus = 1;
  opt.hn_only = false;
  Check c;
  for (int i = 0; i < kGenusOneCorpus; ++i) {
    const Sample s = gen.sample(opt);
    const Verdict v = classical_status(s.object, s.curve, s.assumptions);
    c.expect(v.decision != Decision::Unknown && (v.decision == Decision::Yes) == is_generator(s.object, s.curve),
             [&] { return "object " + std::to_string(i) + " got " + std::string(rule_id(v.rule)); });
  }
  return {3, "genus-one-trichotomy", c.ok, c.summary("split genus-one objects decided, verdict = is_generator")};
}

CriterionResult riemann_roch_oracle() {
  const auto r = p1::euler_cross_check(20);
  const bool ok = r.pairs == 1681 && r.failures == 0;
  return {4, "riemann-roch-oracle", ok,
          std::to_string(r.pairs - r.failures) + "/" + std::to_string(r.pairs) + " pairs agree on P^1"};
}

CriterionResult slope_law() {
  constexpr std::int64_t n = 20;
  const Curve p1(0);
  Check c;
  std::set<std::pair<std::int64_t, std::int64_t>> found;
  for (const auto& ab : p1::semiorthogonal_pairs(n)) found.insert(ab);
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t b = -n; b <= n; ++b) {
      const bool law = b == a - 1;
      const auto check = semiorthogonality_check(FormalObject::sheaf(FormalSheaf({SemistablePiece::bundle(1, a)})),
                                                 FormalObject::sheaf(FormalSheaf({SemistablePiece::bundle(1, b)})), p1);
      c.expect(found.count({a, b}) == static_cast<std::size_t>(law) && check.possible == law,
               [&] { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; });
    }
  }
  return {5, "semiorthogonality-slope-law", c.ok,
          c.summary("pairs match b = a - 1 (" + std::to_string(found.size()) + " Ext-orthogonal)")};
}

CriterionResult gentime_table() {
  Check c;
  const std::pair<const char*, std::int64_t> fixtures[] = {
      {"tors(len=1) + bundle(r=1,d=0)", 97},
      {"tors(len=2) + bundle(r=2,d=1)", 195},
      {"bundle(r=1,d=0) + bundle(r=1,d=5)", 391},
  };
  for (const auto& [expr, expected] : fixtures) {
    const Report report = run(dsl::parse(std::string("curve genus 2\nobject G = ") + expr + "\nanalyze G\n"));
    const auto* r = std::get_if<AnalyzeResult>(&report.queries.at(0).outcome);
    c.expect(r && r->gentime.value == expected, [&, e = expr] { return std::string(e); });
  }
  for (std::int64_t g = 0; g <= 1000; ++g) {
    const Curve curve(g);
    c.expect(line_plus_skyscraper_bound(curve) < torsion_plus_bundle_bound(curve) &&
                 torsion_plus_bundle_bound(curve) < sufficiently_unstable_bound(curve),
             [&] { return "ordering at genus " + std::to_string(g); });
  }
  for (std::int64_t g = 1; g <= 10; ++g) {
    c.expect(compose_bound(1, 24 * g + 1) == 48 * g + 1, [&] { return "composition at genus " + std::to_string(g); });
  }
  return {6, "generating-time-table", c.ok, c.summary("checks (97/195/391 at g=2, ordering g<=1000, composition)")};
}

CriterionResult serre_antisymmetry(std::uint64_t seed) {
  Generator gen(seed + 2);
  GenOptions opt;
  Check c;
  for (int i = 0; i < kSerrePairs; ++i) {
    const Curve curve = gen.curve(opt);
    const ChernPair e = gen.bundle_class(opt);
    const ChernPair f = gen.bundle_class(opt);
    c.expect(euler_pairing(e, f, curve) == -euler_pairing(f, serre_twist(e, curve), curve),
             [&] { return e.to_string() + ", " + f.to_string() + " at genus " + std::to_string(curve.genus()); });
  }
  return {7, "serre-antisymmetry", c.ok, c.summary("pairs")};
}

CriterionResult soundness(std::uint64_t seed) {
  Check c;
  std::int64_t yes = 0;
  Generator plain(seed);
  GenOptions unannotated;
  unannotated.annotations = false;
  for (int i = 0; i < kGeneratorCorpus; ++i) {
    const Curve curve = plain.curve(unannotated);
    const FormalObject obj = plain.object(curve, unannotated);
    const Verdict v = classical_status(obj, curve);
    yes += v.decision == Decision::Yes;
    c.expect(v.decision != Decision::Yes || is_generator(obj, curve), [&] { return "plain object " + std::to_string(i); });
  }
  Generator annotated(seed + 3);
  GenOptions full;
  for (int i = 0; i < kGeneratorCorpus; ++i) {
    const Sample s = annotated.sample(full);
    const Verdict v = classical_status(s.object, s.curve, s.assumptions);
    yes += v.decision == Decision::Yes;
    c.expect(v.decision != Decision::Yes || is_generator(s.object, s.curve),
             [&] { return "annotated object " + std::to_string(i); });
  }
  return {8, "soundness", c.ok, c.summary("verdicts sound (" + std::to_string(yes) + " Yes)")};
}

CriterionResult equivariance(std::uint64_t seed) {
  Generator gen(seed + 4);
  GenOptions opt;
  opt.annotations = false;
  Check c;
  for (int i = 0; i < kEquivarianceObjects; ++i) {
    const Curve curve = gen.curve(opt);
    const FormalObject obj = strip_annotations(gen.object(curve, opt));
    const Verdict base = classical_status(obj, curve);
    for (int k = 0; k < kEquivarianceActions; ++k) {
      const std::int64_t n = gen.uniform(-5, 5);
      const std::int64_t t = gen.uniform(-30, 30);
      const Verdict moved = classical_status(twist(shift(obj, n), t), curve);
      c.expect(moved.decision == base.decision && moved.rule == base.rule, [&] {
        return "object " + std::to_string(i) + " under shift " + std::to_string(n) + ", twist " + std::to_string(t);
      });
    }
  }
  return {9, "equivariance", c.ok, c.summary("(object, shift, twist) verdicts unchanged")};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  return {nonclassical_generator(),          generator_criterion(seed), genus_one(seed),        riemann_roch_oracle(), slope_law(),
          gentime_table(),    serre_antisymmetry(seed),  soundness(seed),        equivariance(seed)};
}

std::string format_line(const CriterionResult& result) {
  return std::string(result.passed ? "PASS" : "FAIL") + "  " + std::to_string(result.number) + " " + result.name +
         ": " + result.detail;
}

}  // namespace curvegen::testing
