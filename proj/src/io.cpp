#include "frobpoly/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frobpoly/errors.hpp"

namespace frobpoly {

namespace {

using json = nlohmann::ordered_json;

// Field-element entries may arrive as text forms or, for convenience over
// prime fields, as plain JSON integers.
std::string entry_text(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw SpecError(std::string(what) +
                  ": matrix entries must be strings or integers");
}

FMatrix parse_matrix(const json& rows, const FieldCtxPtr& ctx, int n,
                     const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw SpecError(what + ": expected " + std::to_string(n) + " rows");
  FMatrix m(ctx, n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SpecError(what + ": row " + std::to_string(r + 1) + " must have " +
                      std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c)
      m.at(r, c) = parse_field_elem(entry_text(row[c], what.c_str()), ctx);
  }
  return m;
}

std::vector<FMatrix> parse_matrix_list(const json& list,
                                       const FieldCtxPtr& ctx, int n,
                                       const std::string& what) {
  if (!list.is_array() || list.empty())
    throw SpecError(what + ": expected a nonempty array of matrices");
  std::vector<FMatrix> out;
  out.reserve(list.size());
  for (size_t i = 0; i < list.size(); ++i)
    out.push_back(
        parse_matrix(list[i], ctx, n, what + "[" + std::to_string(i) + "]"));
  return out;
}

json matrix_json(const FMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const MatRF& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json field_json(const FieldCtxPtr& ctx) {
  json f;
  f["p"] = ctx->p();
  f["e"] = ctx->e();
  f["desc"] = ctx->describe();
  return f;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join_dims(const std::vector<int>& dims) {
  std::ostringstream os;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ',';
    os << dims[i];
  }
  return os.str();
}

json get_required(const json& j, const char* key, const char* what) {
  if (!j.contains(key))
    throw SpecError(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

long long get_ll(const json& j, const char* key, const char* what) {
  json v = get_required(j, key, what);
  if (!v.is_number_integer())
    throw SpecError(std::string(what) + ": field '" + key +
                    "' must be an integer");
  return v.get<long long>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraSpec parse_algebra_spec_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& ex) {
    throw SpecError(std::string("algebra spec is not valid JSON: ") +
                    ex.what());
  }
  if (!j.is_object()) throw SpecError("algebra spec must be a JSON object");
  const char* what = "algebra spec";
  long long p = get_ll(j, "p", what);
  long long e = j.contains("e") ? get_ll(j, "e", what) : 1;
  long long n = get_ll(j, "n", what);
  if (n <= 0) throw SpecError("algebra spec: n must be positive");
  if (e <= 0) throw SpecError("algebra spec: e must be positive");
  FieldCtxPtr ctx = FieldCtx::make(p, static_cast<int>(e));

  AlgebraSpec spec;
  spec.fq = ctx;
  spec.n = static_cast<int>(n);
  spec.generators = parse_matrix_list(get_required(j, "generators", what), ctx,
                                      spec.n, "algebra spec: generators");
  if (j.contains("basis"))
    spec.basis = parse_matrix_list(j.at("basis"), ctx, spec.n,
                                   "algebra spec: basis");
  return spec;
}

AlgebraSpec load_algebra_spec(const std::string& path) {
  return parse_algebra_spec_text(read_text_file(path));
}

std::vector<FMatrix> load_basis_override(const std::string& path,
                                         const FieldCtxPtr& fq, int n) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& ex) {
    throw SpecError(std::string("basis file is not valid JSON: ") + ex.what());
  }
  return parse_matrix_list(j, fq, n, "basis file");
}

std::string render_gen(const GenBundle& b, OutputFormat fmt) {
  const Algebra& alg = *b.alg;
  const CompanionForm& cf = *b.cf;
  if (fmt == OutputFormat::kStructured) {
    json j;
    j["schema"] = "frobpoly.gen.v1";
    j["field"] = field_json(alg.fq());
    j["n"] = alg.n();
    j["m"] = alg.dim();
    json basis = json::array();
    for (const FMatrix& bm : alg.basis()) basis.push_back(matrix_json(bm));
    j["basis"] = std::move(basis);
    j["a"] = matrix_json(b.gm->a);
    j["d"] = b.gm->d.str();
    json v = json::array();
    for (const MPoly& c : cf.cyclic.v) v.push_back(c.str());
    j["cyclic_vector"] = std::move(v);
    j["n_matrix"] = matrix_json(cf.cyclic.n_matrix);
    j["det_n"] = cf.cyclic.det_n.str();
    j["delta"] = matrix_json(cf.delta);
    j["f"] = b.f->to_ypoly().str();
    json fc = json::array();
    for (const RatFun& c : b.f->coeffs) fc.push_back(c.str());
    j["f_coeffs"] = std::move(fc);
    if (b.divisor_exact.has_value()) {
      json dc;
      dc["divisor"] = b.divisor_text;
      dc["exact"] = *b.divisor_exact;
      j["divisor_check"] = std::move(dc);
    }
    return dump(j);
  }

  std::ostringstream os;
  os << "field: " << alg.fq()->describe() << "\n";
  os << "n: " << alg.n() << "\n";
  os << "m: " << alg.dim() << "\n";
  for (int i = 0; i < alg.dim(); ++i)
    os << "basis b" << (i + 1) << ": " << alg.basis()[i].str() << "\n";
  os << "A(t): " << b.gm->a.str() << "\n";
  os << "d = det A: " << b.gm->d.str() << "\n";
  os << "v: (";
  for (size_t i = 0; i < cf.cyclic.v.size(); ++i) {
    if (i) os << ", ";
    os << cf.cyclic.v[i].str();
  }
  os << ")\n";
  os << "N: " << cf.cyclic.n_matrix.str() << "\n";
  os << "det N: " << cf.cyclic.det_n.str() << "\n";
  os << "Delta: " << cf.delta.str() << "\n";
  os << "f(Y): " << b.f->to_ypoly().str() << "\n";
  if (b.divisor_exact.has_value())
    os << "divisor check: "
       << (*b.divisor_exact ? "remainder zero" : "REMAINDER NONZERO") << "\n";
  return os.str();
}

std::string render_splitting(const SplittingReport& rep, OutputFormat fmt) {
  if (fmt == OutputFormat::kStructured) {
    json j;
    j["schema"] = "frobpoly.split.v1";
    j["dims"] = rep.dims;
    j["degree"] = rep.degree;
    j["extension"] = field_json(rep.ext);
    j["g"] = matrix_json(rep.g);
    j["g_order"] = rep.g_order;
    j["aligned"] = rep.aligned;
    if (rep.aligned) {
      j["membership_ok"] = rep.membership_ok;
      if (rep.membership.has_value()) {
        json coords = json::array();
        for (const FieldElem& c : *rep.membership) coords.push_back(c.str());
        j["membership"] = std::move(coords);
      }
    }
    return dump(j);
  }

  std::ostringstream os;
  os << "dims: " << join_dims(rep.dims) << "\n";
  os << "splitting degree: " << rep.degree << "\n";
  os << "extension: " << rep.ext->describe() << "\n";
  os << "g: " << rep.g.str() << "\n";
  os << "g order: " << rep.g_order << "\n";
  if (rep.aligned) {
    if (rep.membership_ok && rep.membership.has_value()) {
      os << "membership: ok, coords (";
      for (size_t i = 0; i < rep.membership->size(); ++i) {
        if (i) os << ", ";
        os << (*rep.membership)[i].str();
      }
      os << ")\n";
    } else {
      os << "membership: FAILED\n";
    }
  }
  return os.str();
}

std::string render_additive_splitting(const AdditiveSplittingReport& rep,
                                      OutputFormat fmt) {
  if (fmt == OutputFormat::kStructured) {
    json j;
    j["schema"] = "frobpoly.addsplit.v1";
    j["dims"] = rep.dims;
    j["degree"] = rep.degree;
    return dump(j);
  }
  std::ostringstream os;
  os << "dims: " << join_dims(rep.dims) << "\n";
  os << "splitting degree: " << rep.degree << "\n";
  return os.str();
}

std::string render_coverage(const CoverageReport& rep, OutputFormat fmt) {
  if (fmt == OutputFormat::kStructured) {
    json j;
    j["schema"] = "frobpoly.sample.v1";
    j["seed"] = rep.seed;
    j["requested"] = rep.requested;
    j["valid"] = rep.valid;
    json sk = json::object();
    for (const auto& [reason, count] : rep.skipped) sk[reason] = count;
    j["skipped"] = std::move(sk);
    json fv = json::object();
    for (const auto& [field, count] : rep.field_valid) fv[field] = count;
    j["field_valid"] = std::move(fv);
    json oc = json::object();
    for (const auto& [order, count] : rep.order_counts)
      oc[std::to_string(order)] = count;
    j["order_counts"] = std::move(oc);
    return dump(j);
  }

  std::ostringstream os;
  os << "seed: " << rep.seed << "\n";
  os << "requested: " << rep.requested << "\n";
  os << "valid: " << rep.valid << "\n";
  os << "skipped:";
  if (rep.skipped.empty()) os << " none";
  for (const auto& [reason, count] : rep.skipped)
    os << " " << reason << "=" << count;
  os << "\n";
  for (const auto& [field, count] : rep.field_valid)
    os << "valid over " << field << ": " << count << "\n";
  os << "orders:";
  for (const auto& [order, count] : rep.order_counts)
    os << " " << order << ":" << count;
  os << "\n";
  return os.str();
}

std::string render_fingerprint(const GroupFingerprint& fp, OutputFormat fmt) {
  if (fmt == OutputFormat::kStructured) {
    json j;
    j["schema"] = "frobpoly.unitgroup.v1";
    j["order"] = fp.order;
    json pr = json::object();
    for (const auto& [ord, count] : fp.profile) pr[std::to_string(ord)] = count;
    j["profile"] = std::move(pr);
    j["abelian"] = fp.abelian;
    return dump(j);
  }
  return fp.str() + "\n";
}

std::string render_specialized(const UPoly& f, OutputFormat fmt) {
  if (fmt == OutputFormat::kStructured) {
    json j;
    j["schema"] = "frobpoly.specialize.v1";
    j["field"] = field_json(f.ctx());
    j["f"] = f.str();
    return dump(j);
  }
  return f.str() + "\n";
}

AdditivePolynomial parse_gen_polynomial(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& ex) {
    throw SpecError(std::string("polynomial file is not valid JSON: ") +
                    ex.what());
  }
  const char* what = "polynomial file";
  if (!j.is_object() || !j.contains("schema") ||
      j.at("schema") != "frobpoly.gen.v1")
    throw SpecError(
        "polynomial file: expected structured gen output "
        "(schema frobpoly.gen.v1)");
  json field = get_required(j, "field", what);
  long long p = get_ll(field, "p", what);
  long long e = get_ll(field, "e", what);
  FieldCtxPtr ctx = FieldCtx::make(p, static_cast<int>(e));
  int n = static_cast<int>(get_ll(j, "n", what));
  int m = static_cast<int>(get_ll(j, "m", what));
  if (n <= 0 || m <= 0)
    throw SpecError("polynomial file: n and m must be positive");

  json fc = get_required(j, "f_coeffs", what);
  if (!fc.is_array() || static_cast<int>(fc.size()) != n)
    throw SpecError("polynomial file: f_coeffs must list " +
                    std::to_string(n) + " coefficients");
  std::vector<RatFun> coeffs;
  coeffs.reserve(fc.size());
  for (const json& c : fc) {
    if (!c.is_string())
      throw SpecError("polynomial file: f_coeffs entries must be strings");
    coeffs.push_back(parse_ratfun(c.get<std::string>(), ctx, m));
  }
  json d = get_required(j, "d", what);
  json det_n = get_required(j, "det_n", what);
  if (!d.is_string() || !det_n.is_string())
    throw SpecError("polynomial file: d and det_n must be strings");
  return AdditivePolynomial{ctx->q(),
                            n,
                            ctx,
                            std::move(coeffs),
                            parse_ratfun(d.get<std::string>(), ctx, m),
                            parse_ratfun(det_n.get<std::string>(), ctx, m)};
}

}  // namespace frobpoly
