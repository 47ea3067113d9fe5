// Built-in machine-readable catalog of the classified defining matrices and
// toric polytopes, plus instantiation from parameter points.
#pragma once

#include <latgeo/coxring.hpp>
#include <latgeo/cplxone.hpp>
#include <latgeo/polytope.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace latgeo {

using Json = nlohmann::ordered_json;

/// Parsed embedded catalog data file (grids, aliases, notes, controls).
const Json& catalog_data();

struct MatrixInstance {
  std::string entry_id;
  Json params;
  DefiningMatrix matrix;
  NFCase expected_case;
  BigInt expected_iota;
  BigInt expected_zeta;
  std::optional<BigInt> expected_mu;
  bool expected_canonical = true;
  bool expected_terminal = false;
};

struct ToricInstance {
  std::string entry_id;
  Json params;
  VPolytope polytope;
  BigInt expected_iota;
  ClassGroup expected_cl;
  /// Expected torsion grading row, compared up to unit scaling and variable
  /// permutation; absent where only the group is asserted.
  std::optional<IntVec> expected_q_row;
  bool expected_terminal = false;
};

struct NegativeControl {
  std::string id;
  DefiningMatrix matrix;
  IntVec expected_witness;  // global coordinates of the published point
};

/// Ids in catalog order.
std::vector<std::string> catalog_entry_ids();

bool is_toric_entry(const std::string& id);

/// Instantiates a matrix entry at a parameter point; throws
/// std::invalid_argument citing the violated constraint.
MatrixInstance instantiate_matrix(const std::string& id, const Json& params);

/// Instantiates a toric entry (cases ii..vi).
ToricInstance instantiate_toric(const std::string& id, const Json& params);

/// Either kind, by id.
std::variant<MatrixInstance, ToricInstance> instantiate(const std::string& id,
                                                        const Json& params);

std::vector<NegativeControl> negative_controls();

/// Toric verification grids (acceptance ranges).
std::vector<ToricInstance> toric_grid();

/// Every matrix instance of every catalog grid, in catalog order.
std::vector<MatrixInstance> catalog_matrix_instances();

}  // namespace latgeo
