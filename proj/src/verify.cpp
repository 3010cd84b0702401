#include "frobpoly/verify.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "frobpoly/algebra.hpp"
#include "frobpoly/errors.hpp"
#include "frobpoly/frobenius.hpp"
#include "frobpoly/io.hpp"
#include "frobpoly/rng.hpp"
#include "frobpoly/solver.hpp"
#include "frobpoly/upoly.hpp"
#include "frobpoly/ypoly.hpp"

namespace frobpoly {

namespace {

const std::string kC8Alg = R"({
  "p": 3,
  "e": 1,
  "n": 2,
  "generators": [
    [["0", "2"], ["1", "0"]]
  ],
  "basis": [
    [["1", "0"], ["0", "1"]],
    [["0", "2"], ["1", "0"]]
  ]
}
)";

const std::string kA4Alg = R"({
  "p": 2,
  "e": 1,
  "n": 3,
  "generators": [
    [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["1", "0", "1"], ["0", "1", "0"], ["0", "0", "1"]],
    [["1", "1", "0"], ["0", "1", "1"], ["0", "1", "0"]]
  ],
  "basis": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["1", "1", "0"], ["0", "1", "1"], ["0", "1", "0"]],
    [["1", "0", "1"], ["0", "0", "1"], ["0", "1", "1"]],
    [["1", "0", "1"], ["0", "1", "0"], ["0", "0", "1"]],
    [["1", "0", "0"], ["0", "1", "1"], ["0", "1", "0"]]
  ]
}
)";

const std::string kP5Alg = R"({
  "p": 5,
  "e": 1,
  "n": 2,
  "generators": [
    [["0", "2"], ["1", "0"]]
  ],
  "basis": [
    [["1", "0"], ["0", "1"]],
    [["0", "2"], ["1", "0"]]
  ]
}
)";

// Canonical rendering of the quartic divisor of the a4 example's emitted
// polynomial (monic in Y, coefficients polynomials over F_2 in t1..t5).
const std::string kA4Divisor =
    "Y^4 + (1*t1^2+1*t1*t2+1*t1*t3+1*t1*t5+1*t2^2+1*t2*t3+1*t2*t4+1*t3^2+"
    "1*t3*t4+1*t3*t5+1*t4^2+1*t4*t5+1*t5^2)*Y^2 + (1*t1^2*t2+1*t1^2*t3+"
    "1*t1^2*t5+1*t1*t2^2+1*t1*t3^2+1*t1*t5^2+1*t2^3+1*t2^2*t4+1*t2^2*t5+"
    "1*t2*t4^2+1*t2*t5^2+1*t3^3+1*t3^2*t4+1*t3*t4^2+1*t4^2*t5+1*t4*t5^2+"
    "1*t5^3)*Y + 1*t1^2*t2*t4+1*t1^2*t3*t4+1*t1^2*t4^2+1*t1^2*t4*t5+"
    "1*t1*t2^2*t5+1*t1*t2*t3*t4+1*t1*t3^2*t4+1*t1*t3^2*t5+1*t1*t3*t4*t5+"
    "1*t1*t5^3+1*t2^3*t4+1*t2^3*t5+1*t2^2*t3*t5+1*t2^2*t4^2+1*t2^2*t5^2+"
    "1*t2*t3^2*t4+1*t2*t3^2*t5+1*t2*t3*t4^2+1*t2*t4^3+1*t2*t4*t5^2+"
    "1*t2*t5^3+1*t3^3*t5+1*t3^2*t5^2+1*t3*t4^3+1*t3*t4^2*t5+1*t3*t5^3+"
    "1*t4^4+1*t4^3*t5+1*t4^2*t5^2+1*t5^4\n";

const std::vector<std::string> kA4Slices = {
    "Y^4 + Y^2 + Y + 1*t1",
    "Y^4 + 1*t1^2*Y^2 + 1*t1^3*Y + 1*t1^2",
};

// Collects named pass/fail lines; every check records a detail string so a
// failing report is self-explanatory.
struct Suite {
  std::vector<CheckResult> out;

  bool check(const std::string& name, bool ok, std::string detail) {
    out.push_back(CheckResult{name, ok, std::move(detail)});
    return ok;
  }

  bool check_eq(const std::string& name, const std::string& expected,
                const std::string& actual) {
    if (expected == actual) return check(name, true, actual);
    return check(name, false, "expected " + expected + ", got " + actual);
  }
};

RatFun ratfun_power(const RatFun& x, unsigned long long k) {
  RatFun acc = RatFun::constant(x.ctx(), x.arity(), x.ctx()->one());
  for (unsigned long long i = 0; i < k; ++i) acc = acc * x;
  return acc;
}

// delta must be the companion matrix of the module (A, d) built from the
// cyclic-vector matrix with determinant det_n.
void check_det_identity(Suite& s, const CompanionForm& cf,
                        unsigned long long q) {
  RatFun expected = cf.d * ratfun_power(cf.cyclic.det_n, q - 1);
  s.check("determinant identity", cf.delta.det() == expected,
          "det Delta == det A * det N^(q-1)");
}

std::vector<MPoly> constant_vector(const FieldCtxPtr& fq, int arity,
                                   const std::vector<long long>& v) {
  std::vector<MPoly> out;
  out.reserve(v.size());
  for (long long c : v) out.push_back(MPoly::constant(fq, arity, c));
  return out;
}

std::string pattern_of(const std::map<int, int>& pattern) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [deg, count] : pattern)
    for (int i = 0; i < count; ++i) {
      if (!first) os << ",";
      first = false;
      os << deg;
    }
  os << "}";
  return os.str();
}

std::vector<CheckResult> verify_c8() {
  Suite s;
  Algebra alg = Algebra::close(parse_algebra_spec_text(kC8Alg));
  const FieldCtxPtr& f3 = alg.fq();
  s.check_eq("closure dimension", "2", std::to_string(alg.dim()));
  s.check_eq("unit group fingerprint",
             "order=8 profile=1:1,2:1,4:2,8:4 abelian=true",
             group_fingerprint(alg.unit_group()).str());

  GenericMatrix gm = alg.generic_matrix();
  SymbolicModule fm = module_of(gm);
  CompanionForm cf =
      companion_form(fm, cyclic_vector(fm, constant_vector(f3, 2, {1, 0})));
  s.check_eq("cyclic-vector matrix", "[1, 1*t1; 0, 1*t2]",
             cf.cyclic.n_matrix.str());
  s.check_eq("companion matrix",
             "[0, 2*t1^2*t2^2+2*t2^4; 1, 1*t1^3+1*t1*t2^2]", cf.delta.str());
  check_det_identity(s, cf, f3->q());

  AdditivePolynomial f = emit_additive_poly(cf);
  s.check_eq("emitted polynomial",
             "Y^9 + (2*t1^3+2*t1*t2^2)*Y^3 + (1*t1^2*t2^2+1*t2^4)*Y",
             f.to_ypoly().str());

  std::vector<FieldElem> xi = {f3->from_int(0), f3->from_int(1)};
  s.check_eq("specialization at (0,1)", "Y^9 + Y",
             specialize(f, xi).to_upoly().str());

  SolverCaps caps;
  SplittingReport rep = splitting_report(specialize_module(fm, xi), caps, &alg);
  s.check_eq("splitting degree at (0,1)", "4", std::to_string(rep.degree));
  s.check_eq("frobenius order at (0,1)", "4", std::to_string(rep.g_order));
  s.check("algebra membership at (0,1)", rep.membership_ok,
          "frobenius element lies in the algebra");
  s.check_eq("root-ladder degree at (0,1)", "4",
             std::to_string(additive_splitting_degree(specialize(f, xi), caps)));
  return std::move(s.out);
}

std::vector<CheckResult> verify_p5() {
  Suite s;
  Algebra alg = Algebra::close(parse_algebra_spec_text(kP5Alg));
  const FieldCtxPtr& f5 = alg.fq();
  s.check_eq("closure dimension", "2", std::to_string(alg.dim()));
  s.check_eq("unit group fingerprint",
             "order=24 profile=1:1,2:1,3:2,4:2,6:2,8:4,12:4,24:8 abelian=true",
             group_fingerprint(alg.unit_group()).str());

  GenericMatrix gm = alg.generic_matrix();
  SymbolicModule fm = module_of(gm);
  CompanionForm cf =
      companion_form(fm, cyclic_vector(fm, constant_vector(f5, 2, {1, 0})));
  s.check_eq("cyclic-vector matrix", "[1, 1*t1; 0, 1*t2]",
             cf.cyclic.n_matrix.str());
  check_det_identity(s, cf, f5->q());

  AdditivePolynomial f = emit_additive_poly(cf);
  s.check_eq("emitted polynomial",
             "Y^25 + (4*t1^5+4*t1*t2^4)*Y^5 + (1*t1^2*t2^4+3*t2^6)*Y",
             f.to_ypoly().str());

  std::vector<FieldElem> xi = {f5->from_int(0), f5->from_int(1)};
  s.check_eq("specialization at (0,1)", "Y^25 + 3*Y",
             specialize(f, xi).to_upoly().str());
  return std::move(s.out);
}

std::vector<CheckResult> verify_a4() {
  Suite s;
  Algebra alg = Algebra::close(parse_algebra_spec_text(kA4Alg));
  const FieldCtxPtr& f2 = alg.fq();
  s.check_eq("closure dimension", "5", std::to_string(alg.dim()));
  s.check_eq("unit group fingerprint",
             "order=12 profile=1:1,2:3,3:8 abelian=false",
             group_fingerprint(alg.unit_group()).str());

  GenericMatrix gm = alg.generic_matrix();
  s.check_eq("generic matrix",
             "[1*t1+1*t2+1*t3+1*t4+1*t5, 1*t2, 1*t3+1*t4; "
             "0, 1*t1+1*t2+1*t4+1*t5, 1*t2+1*t3+1*t5; "
             "0, 1*t2+1*t3+1*t5, 1*t1+1*t3+1*t4]",
             gm.a.str());

  SymbolicModule fm = module_of(gm);
  CompanionForm cf = companion_form(
      fm, cyclic_vector(fm, constant_vector(f2, 5, {1, 0, 1})));
  const MPoly& det_n_num = cf.cyclic.det_n.num();
  s.check("cyclic vector (1,0,1)",
          !cf.cyclic.det_n.is_zero() && det_n_num.degree() == 4 &&
              det_n_num.terms().size() == 24,
          "det N is a 24-term quartic");
  check_det_identity(s, cf, f2->q());

  AdditivePolynomial f = emit_additive_poly(cf);
  YPoly fy = f.to_ypoly();
  s.check_eq("emitted degree", "8", std::to_string(fy.degree()));

  YPoly g = parse_ypoly(builtin_divisor_text(), f2, 5);
  auto [quot, rem] = fy.divrem(g);
  s.check("divisor divides emitted polynomial",
          rem.is_zero() && quot.degree() == 4,
          "remainder zero, quotient degree 4");

  // Factorization patterns of seeded divisor specializations: squarefree
  // quartics must factor as {1,1,1,1}, {2,2} or {1,3}; the latter two must
  // both occur; {4} and {1,1,2} never do.
  Lcg rng{1};
  std::map<std::string, int> seen;
  int squarefree = 0;
  bool allowed = true;
  std::string offender;
  for (int k = 1; k <= 6; ++k) {
    FieldCtxPtr field = FieldCtx::make(2, k);
    for (int i = 0; i < 12; ++i) {
      std::vector<FieldElem> xi;
      for (int c = 0; c < 5; ++c)
        xi.push_back(field->element(rng.next() % field->q()));
      DdfReport ddf = ddf_pattern(g.specialize(xi));
      if (!ddf.squarefree) continue;
      ++squarefree;
      std::string pat = pattern_of(ddf.pattern);
      ++seen[pat];
      if (pat != "{1,1,1,1}" && pat != "{2,2}" && pat != "{1,3}") {
        allowed = false;
        offender = pat;
      }
    }
  }
  std::ostringstream tally;
  tally << squarefree << " squarefree draws:";
  for (const auto& [pat, count] : seen) tally << " " << pat << "x" << count;
  if (!allowed) tally << " (forbidden " << offender << ")";
  s.check("divisor specialization factor patterns",
          allowed && seen.count("{2,2}") && seen.count("{1,3}"),
          tally.str());

  YPoly slice1 = parse_ypoly(builtin_divisor_slices()[0], f2, 1);
  DdfReport at_one = ddf_pattern(slice1.specialize({f2->one()}));
  s.check("divisor slice at 1 factors as {1,3}",
          at_one.squarefree && pattern_of(at_one.pattern) == "{1,3}",
          "pattern " + pattern_of(at_one.pattern));
  return std::move(s.out);
}

}  // namespace

const std::vector<std::string>& builtin_example_ids() {
  static const std::vector<std::string> ids = {"c8", "a4", "p5"};
  return ids;
}

const std::string& builtin_algebra_text(const std::string& id) {
  if (id == "c8") return kC8Alg;
  if (id == "a4") return kA4Alg;
  if (id == "p5") return kP5Alg;
  throw SpecError("unknown example id: " + id +
                  " (expected one of c8, a4, p5)");
}

const std::string& builtin_divisor_text() { return kA4Divisor; }

const std::vector<std::string>& builtin_divisor_slices() { return kA4Slices; }

std::vector<CheckResult> verify_example(const std::string& id) {
  if (id == "c8") return verify_c8();
  if (id == "a4") return verify_a4();
  if (id == "p5") return verify_p5();
  throw SpecError("unknown example id: " + id +
                  " (expected one of c8, a4, p5)");
}

}  // namespace frobpoly
