// Defining matrices P of complexity-one threefold singularities: validation,
// admissible operations, zeta/iota normal-form recognition, tropical-leaf
// data, elementary cones, leafwise anticanonical-complex polytopes and the
// canonical/terminal verdict.
#pragma once

#include <latgeo/bigint.hpp>
#include <latgeo/intmat.hpp>
#include <latgeo/polytope.hpp>

#include <string>
#include <vector>

namespace latgeo {

/// One column block: exponents l_i (positive) and the two d-rows, stored
/// per column as (penultimate, last) = (d_ij1, d_ij2).
struct Block {
  IntVec l;
  std::vector<std::array<BigInt, 2>> d;
};

struct DefiningMatrix {
  std::vector<Block> blocks;                   // r+1 blocks, r >= 1
  std::vector<std::array<BigInt, 2>> dprime;   // m lineality columns

  int r() const { return static_cast<int>(blocks.size()) - 1; }
  size_t n() const;
  size_t m() const { return dprime.size(); }
  size_t num_cols() const { return n() + m(); }
  size_t num_rows() const { return blocks.size() + 1; }  // r + 2

  /// Assemble the full (r+2) x (n+m) integer matrix of Construction-style
  /// block layout: upper r rows carry -l_0 / l_i, last two rows the d data.
  IntMat assemble() const;

  IntVec column(size_t block, size_t j) const;   // a block column
  IntVec lineality_column(size_t k) const;       // a d' column
  std::vector<IntVec> all_columns() const;       // block order, then d'
};

struct Validation {
  std::vector<std::string> issues;
  bool irredundant = true;  // every max-exponent-1 block has >= 2 columns
  bool ok() const { return issues.empty(); }
};

/// Structural checks: shapes, primitivity, pairwise distinct columns,
/// full-dimensional pointed column cone, irredundancy.
Validation validate(const DefiningMatrix& p);

/// Platonic tuples characterize log-terminality: after sorting decreasingly,
/// length <= 2, or entries beyond the third are 1 and the leading triple is
/// (5,3,2), (4,3,2), (3,3,2), (a,2,2) or (a,b,1).
bool is_platonic(IntVec tuple);

bool is_log_terminal(const DefiningMatrix& p);

// ---- admissible operations -------------------------------------------------

struct AdmissibleOp {
  enum class Kind {
    SwapColumnsInBlock,    // block, j1, j2
    ExchangeBlockData,     // block, block2
    AddUpperRowToDRow,     // upper row index `row` in [1..r], coeff, to_last
    SwapLastTwoRows,
    NegateDRow,            // to_last selects which of the two d-rows
    AddDRowToDRow,         // coeff * (other d-row) added; to_last = target
    SwapLinealityColumns,  // j1, j2
  };
  Kind kind;
  size_t block = 0, block2 = 0;
  size_t j1 = 0, j2 = 0;
  size_t row = 0;
  BigInt coeff = 0;
  bool to_last = false;
};

/// Applies one admissible operation; the result is validated.
DefiningMatrix admissible(const DefiningMatrix& p, const AdmissibleOp& op);

// ---- normal form -----------------------------------------------------------

enum class NFCase { Zeta1, I, II, III, IV, V, VI };

std::string to_string(NFCase c);

struct NormalFormInfo {
  NFCase case_id;
  BigInt iota;
  BigInt zeta;
  BigInt mu;  // only meaningful in case VI
};

/// Recognizes which normal-form case the d-data satisfies and recovers
/// (iota, zeta, mu). Throws std::runtime_error when no case matches.
NormalFormInfo normal_form_info(const DefiningMatrix& p);

// ---- tropical leaves, elementary cones, anticanonical complex --------------

/// A point of a tropical leaf in leaf-local coordinates: t along the leaf
/// direction (0 on the lineality part), then the last two global coordinates.
struct LeafPoint {
  int leaf;  // 0..r, or -1 for the lineality part
  Rat t, a, b;

  bool is_integral() const { return is_integer(t) && is_integer(a) && is_integer(b); }
};

/// Global coordinates (length r+2) of a leaf point.
RatVec leaf_point_global(const LeafPoint& p, int r);

struct ElementaryCone {
  std::vector<size_t> choice;  // column j_i chosen in block i
  bool is_face = false;        // face of the column cone: P-elementary
  IntVec ell;                  // ell_{tau,i}
  BigInt ell_tau;
  IntVec v_tau;                // integer generator of lambda cap tau
  RatVec v_tau_prime;          // v_tau / ell_tau
};

/// All prod(n_i) choices of one column per leaf, with face status decided by
/// exact LP. Throws when some ell_tau <= 0 (non-log-terminal input).
std::vector<ElementaryCone> elementary_cones(const DefiningMatrix& p);

struct LeafComplex {
  int leaf;
  VPolytope polytope;  // conv(0, leaf columns, v(tau)' of P-elementary cones,
                       //      lineality columns), in (t,a,b) coordinates
  Rat plane_zeta;      // the plane zeta*b + coef*t - iota = 0 carries all
  Rat plane_coef;      // leaf columns; its coefficient is
  Rat plane_iota;      // (iota - zeta*d_{i12}) / l_{i1}
};

LeafComplex leaf_complex(const DefiningMatrix& p, int leaf);

// ---- verdict ----------------------------------------------------------------

struct VerdictWitness {
  enum class Kind { OffPlane, OnPlaneNonColumn };
  Kind kind;
  LeafPoint point;
};

struct SingularityVerdict {
  bool log_terminal = false;
  bool canonical = false;
  bool terminal = false;
  std::vector<VerdictWitness> witnesses;
};

/// Canonical iff every nonzero lattice point of every leaf polytope lies on
/// that leaf's plane; terminal iff additionally each such point is a column.
SingularityVerdict verdict(const DefiningMatrix& p);

/// Discrepancy of the ray through an integral leaf point: the normalized
/// plane functional at p over iota, minus 1 (0 exactly on the plane,
/// negative strictly inside). Errors when the ray never reaches the plane
/// at a positive parameter.
Rat discrepancy(const DefiningMatrix& p, const LeafPoint& pt);

}  // namespace latgeo
