#include "bfp/problem.hpp"

#include <limits>

#include "bfp/errors.hpp"

namespace bfp {

TMatrix Problem::generating_matrix() const { return matrix ? *matrix : assemble_A(*list, cfg); }

MatrixList Problem::matrix_list() const { return list ? *list : decompose_A(*matrix, cfg); }

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ValidationError("problem field '" + field + "': " + what);
}

std::uint64_t read_uint(const Json& j, const std::string& field) {
  if (!j.contains(field)) field_error(field, "missing");
  const Json& v = j.at(field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) field_error(field, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

Matrix read_matrix(const Json& j, const std::string& field, const Ring& ring, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) field_error(field, "expected " + std::to_string(rank) + " rows");
  Matrix m(ring, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const std::string row = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != rank) field_error(row, "expected " + std::to_string(rank) + " entries");
    for (std::size_t k = 0; k < rank; ++k) {
      const std::string cell = row + "[" + std::to_string(k) + "]";
      if (!j[i][k].is_string()) field_error(cell, "expected a polynomial string");
      try {
        m.at(i, k) = parse_poly(j[i][k].get<std::string>(), ring);
      } catch (const ValidationError& ex) {
        field_error(cell, ex.what());
      }
    }
  }
  return m;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw ValidationError(std::string("malformed problem JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ValidationError("problem JSON must be an object");
  const auto p = read_uint(j, "p");
  if (p > std::numeric_limits<std::uint32_t>::max()) field_error("p", "too large");
  const auto gamma = j.contains("gamma") ? read_uint(j, "gamma") : 1;
  std::optional<CharConfig> cfg;
  try {
    cfg.emplace(static_cast<std::uint32_t>(p), static_cast<unsigned>(gamma));
  } catch (const ValidationError& ex) {
    field_error("p", ex.what());
  }
  Problem out{*cfg, 0, 0, std::nullopt, std::nullopt};
  out.num_vars = read_uint(j, "num_vars");
  out.rank = read_uint(j, "rank");
  if (out.rank == 0) field_error("rank", "must be positive");
  const bool has_matrix = j.contains("matrix");
  const bool has_list = j.contains("list");
  if (has_matrix == has_list) throw ValidationError("problem must contain exactly one of 'matrix' and 'list'");
  const Ring base = make_ring(out.cfg, out.num_vars);
  if (has_matrix) {
    out.matrix = read_matrix(j.at("matrix"), "matrix", base.with_extra(Extra::t), out.rank);
  } else {
    const Json& l = j.at("list");
    if (!l.is_array()) field_error("list", "expected an array");
    MatrixList list(base, out.rank);
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::string f = "list[" + std::to_string(i) + "]";
      if (!l[i].is_object()) field_error(f, "expected an object");
      std::uint64_t k = 0, n = 0;
      try {
        k = read_uint(l[i], "k");
        n = read_uint(l[i], "n");
      } catch (const ValidationError& ex) {
        field_error(f, ex.what());
      }
      if (Integer(n) >= out.cfg.q()) field_error(f + ".n", "must be below q");
      if (!l[i].contains("matrix")) field_error(f + ".matrix", "missing");
      if (list.entries.count({Integer(k), static_cast<std::size_t>(n)}) != 0) field_error(f, "duplicate (k, n)");
      list.set(k, static_cast<std::size_t>(n), read_matrix(l[i].at("matrix"), f + ".matrix", base, out.rank));
    }
    out.list = std::move(list);
  }
  return out;
}

Json problem_to_json(const CharConfig& cfg, std::size_t num_vars, const TMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"p", cfg.p()}, {"gamma", cfg.gamma()}, {"num_vars", num_vars}, {"rank", a.rows()}, {"matrix", rows}};
}

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Json rational_json(const Rational& x) {
  return Json{{"num", integer_json(numerator(x))}, {"den", integer_json(denominator(x))}};
}

Json grid_json(const GridRational& g) { return Json(g.to_string()); }

Json submodule_json(const Submodule& n) {
  Json gens = Json::array();
  for (const auto& v : n.basis()) {
    if (n.rank() == 1) {
      gens.push_back(v[0].to_string());
    } else {
      Json entry = Json::array();
      for (const auto& f : v) entry.push_back(f.to_string());
      gens.push_back(std::move(entry));
    }
  }
  return gens;
}

Json s_sets_json(const std::vector<SeReport>& s_sets) {
  Json out = Json::object();
  for (const auto& s : s_sets) {
    Json list = Json::array();
    for (const auto& g : s.jumps) list.push_back(grid_json(g));
    out[std::to_string(s.e)] = std::move(list);
  }
  return out;
}

Json chains_json(const std::vector<Chain>& chains) {
  Json out = Json::array();
  for (const auto& c : chains) {
    Json members = Json::array();
    for (const auto& g : c.members) members.push_back(grid_json(g));
    out.push_back(std::move(members));
  }
  return out;
}

Json bfunction_json(const BFunctionResult& r) {
  Json roots = Json::array();
  for (const auto& x : r.roots) roots.push_back(rational_json(x));
  Json jumps = Json::array();
  for (const auto& j : r.jumping_numbers) {
    Json w = Json::array();
    for (const auto& g : j.witnesses) w.push_back(grid_json(g));
    jumps.push_back(Json{{"lambda", rational_json(j.lambda)}, {"witnesses", std::move(w)}});
  }
  Json out;
  out["roots"] = std::move(roots);
  out["shift_N"] = r.shift_N ? Json(*r.shift_N) : Json(nullptr);
  out["unresolved"] = chains_json(r.unresolved);
  out["s_sets"] = s_sets_json(r.evidence);
  out["b"] = b_polynomial_string(r.roots);
  out["divides_only"] = r.divides_only;
  out["jumping_numbers"] = std::move(jumps);
  out["diagnostics"] = r.diagnostics;
  return out;
}

}  // namespace bfp
