#pragma once

// Problem files and JSON reports shared by the command-line tool.

#include <optional>
#include <string>

#include <json.hpp>

#include "bfp/bfun.hpp"

namespace bfp {

using Json = nlohmann::ordered_json;

struct Problem {
  CharConfig cfg;
  std::size_t num_vars = 0;
  std::size_t rank = 0;
  std::optional<TMatrix> matrix;
  std::optional<MatrixList> list;

  /// A(t), assembled from the list when the file gave one.
  TMatrix generating_matrix() const;
  /// {A_{k,n}}, decomposed from the matrix when the file gave one.
  MatrixList matrix_list() const;
};

/// Parses problem JSON. Errors name the offending field.
Problem parse_problem(const std::string& text);

Json problem_to_json(const CharConfig& cfg, std::size_t num_vars, const TMatrix& a);

/// Integer as a JSON number when it fits in 64 bits, otherwise as a string.
Json integer_json(const Integer& x);
Json rational_json(const Rational& x);
Json grid_json(const GridRational& g);
Json submodule_json(const Submodule& n);
Json s_sets_json(const std::vector<SeReport>& s_sets);
Json chains_json(const std::vector<Chain>& chains);
Json bfunction_json(const BFunctionResult& r);

}  // namespace bfp
