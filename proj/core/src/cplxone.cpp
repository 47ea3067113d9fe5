#include <latgeo/cplxone.hpp>

#include <latgeo/lp.hpp>
#include <latgeo/ratlin.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latgeo {

size_t DefiningMatrix::n() const {
  size_t total = 0;
  for (const auto& b : blocks) total += b.l.size();
  return total;
}

IntMat DefiningMatrix::assemble() const {
  int rr = r();
  size_t rows = num_rows(), cols = num_cols();
  IntMat m(rows, cols);
  size_t c = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    for (size_t j = 0; j < b.l.size(); ++j, ++c) {
      if (i == 0) {
        for (int t = 0; t < rr; ++t) m.at(t, c) = -b.l[j];
      } else {
        m.at(i - 1, c) = b.l[j];
      }
      m.at(rows - 2, c) = b.d[j][0];
      m.at(rows - 1, c) = b.d[j][1];
    }
  }
  for (size_t k = 0; k < dprime.size(); ++k, ++c) {
    m.at(rows - 2, c) = dprime[k][0];
    m.at(rows - 1, c) = dprime[k][1];
  }
  return m;
}

IntVec DefiningMatrix::column(size_t block, size_t j) const {
  int rr = r();
  IntVec v(num_rows(), BigInt(0));
  const auto& b = blocks.at(block);
  if (block == 0) {
    for (int t = 0; t < rr; ++t) v[t] = -b.l.at(j);
  } else {
    v[block - 1] = b.l.at(j);
  }
  v[num_rows() - 2] = b.d.at(j)[0];
  v[num_rows() - 1] = b.d.at(j)[1];
  return v;
}

IntVec DefiningMatrix::lineality_column(size_t k) const {
  IntVec v(num_rows(), BigInt(0));
  v[num_rows() - 2] = dprime.at(k)[0];
  v[num_rows() - 1] = dprime.at(k)[1];
  return v;
}

std::vector<IntVec> DefiningMatrix::all_columns() const {
  std::vector<IntVec> cols;
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = 0; j < blocks[i].l.size(); ++j) cols.push_back(column(i, j));
  for (size_t k = 0; k < dprime.size(); ++k) cols.push_back(lineality_column(k));
  return cols;
}

Validation validate(const DefiningMatrix& p) {
  Validation v;
  if (p.blocks.size() < 2) {
    v.issues.push_back("need r >= 1 (at least two column blocks)");
    return v;
  }
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& b = p.blocks[i];
    if (b.l.empty()) v.issues.push_back("block " + std::to_string(i) + " is empty");
    if (b.l.size() != b.d.size())
      v.issues.push_back("block " + std::to_string(i) + ": l/d size mismatch");
    for (const auto& e : b.l)
      if (e <= 0) v.issues.push_back("block " + std::to_string(i) + ": nonpositive exponent");
  }
  if (!v.issues.empty()) return v;

  auto cols = p.all_columns();
  for (size_t c = 0; c < cols.size(); ++c) {
    if (vec_gcd(cols[c]) == 0)
      v.issues.push_back("column " + std::to_string(c) + " is zero");
    else if (vec_gcd(cols[c]) != 1)
      v.issues.push_back("column " + std::to_string(c) + " is not primitive");
  }
  for (size_t a = 0; a < cols.size(); ++a)
    for (size_t b = a + 1; b < cols.size(); ++b)
      if (cols[a] == cols[b])
        v.issues.push_back("columns " + std::to_string(a) + " and " + std::to_string(b) +
                           " coincide");

  // Full-dimensional: rank r+2.
  RatMat rm;
  for (const auto& c : cols) {
    RatVec row(c.size());
    for (size_t j = 0; j < c.size(); ++j) row[j] = Rat(c[j]);
    rm.push_back(std::move(row));
  }
  if (rat_rank(rm) != p.num_rows())
    v.issues.push_back("column cone is not full-dimensional");

  // Pointed: some covector is >= 1 on every column.
  {
    std::vector<LinearConstraint> cs;
    for (const auto& c : cols) {
      RatVec row(c.size());
      for (size_t j = 0; j < c.size(); ++j) row[j] = Rat(c[j]);
      cs.push_back(make_ge(std::move(row), Rat(1)));
    }
    if (!lp_feasible(cs, p.num_rows()).feasible)
      v.issues.push_back("column cone is not pointed");
  }

  for (size_t i = 0; i < p.blocks.size(); ++i) {
    BigInt mx = 0;
    for (const auto& e : p.blocks[i].l) mx = std::max(mx, e);
    if (mx == 1 && p.blocks[i].l.size() < 2) v.irredundant = false;
  }
  if (!v.irredundant) v.issues.push_back("not irredundant: a block with all exponents 1 has a single column");
  return v;
}

bool is_platonic(IntVec t) {
  if (t.empty()) throw std::invalid_argument("is_platonic: empty tuple");
  std::sort(t.begin(), t.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
  if (t.size() <= 2) return true;
  for (size_t i = 3; i < t.size(); ++i)
    if (t[i] != 1) return false;
  const BigInt &a = t[0], &b = t[1], &c = t[2];
  if (c == 1) return true;                       // (a, b, 1)
  if (b == 2 && c == 2) return true;             // (a, 2, 2)
  if (b == 3 && c == 2 && a <= 5) return true;   // (3,3,2), (4,3,2), (5,3,2)
  return false;
}

bool is_log_terminal(const DefiningMatrix& p) {
  IntVec maxima;
  for (const auto& b : p.blocks) {
    BigInt mx = 0;
    for (const auto& e : b.l) mx = std::max(mx, e);
    maxima.push_back(mx);
  }
  return is_platonic(std::move(maxima));
}

DefiningMatrix admissible(const DefiningMatrix& p, const AdmissibleOp& op) {
  DefiningMatrix q = p;
  using K = AdmissibleOp::Kind;
  switch (op.kind) {
    case K::SwapColumnsInBlock: {
      auto& b = q.blocks.at(op.block);
      std::swap(b.l.at(op.j1), b.l.at(op.j2));
      std::swap(b.d.at(op.j1), b.d.at(op.j2));
      break;
    }
    case K::ExchangeBlockData:
      std::swap(q.blocks.at(op.block), q.blocks.at(op.block2));
      break;
    case K::AddUpperRowToDRow: {
      // Adding coeff * (row `row`) of the upper block rows to a d-row: the
      // upper row has -l_{0j} on block 0, +l_{row,j} on block `row`.
      if (op.row < 1 || op.row > static_cast<size_t>(q.r()))
        throw std::invalid_argument("admissible: upper row index out of range");
      size_t slot = op.to_last ? 1 : 0;
      for (size_t j = 0; j < q.blocks[0].l.size(); ++j)
        q.blocks[0].d[j][slot] -= op.coeff * q.blocks[0].l[j];
      for (size_t j = 0; j < q.blocks[op.row].l.size(); ++j)
        q.blocks[op.row].d[j][slot] += op.coeff * q.blocks[op.row].l[j];
      break;
    }
    case K::SwapLastTwoRows: {
      for (auto& b : q.blocks)
        for (auto& d : b.d) std::swap(d[0], d[1]);
      for (auto& d : q.dprime) std::swap(d[0], d[1]);
      break;
    }
    case K::NegateDRow: {
      size_t slot = op.to_last ? 1 : 0;
      for (auto& b : q.blocks)
        for (auto& d : b.d) d[slot] = -d[slot];
      for (auto& d : q.dprime) d[slot] = -d[slot];
      break;
    }
    case K::AddDRowToDRow: {
      size_t dst = op.to_last ? 1 : 0, src = 1 - dst;
      for (auto& b : q.blocks)
        for (auto& d : b.d) d[dst] += op.coeff * d[src];
      for (auto& d : q.dprime) d[dst] += op.coeff * d[src];
      break;
    }
    case K::SwapLinealityColumns:
      std::swap(q.dprime.at(op.j1), q.dprime.at(op.j2));
      break;
  }
  auto check = validate(q);
  if (!check.ok()) {
    std::string msg = "admissible: resulting matrix invalid:";
    for (const auto& s : check.issues) msg += " " + s + ";";
    throw std::invalid_argument(msg);
  }
  return q;
}

std::string to_string(NFCase c) {
  switch (c) {
    case NFCase::Zeta1: return "zeta1";
    case NFCase::I: return "i";
    case NFCase::II: return "ii";
    case NFCase::III: return "iii";
    case NFCase::IV: return "iv";
    case NFCase::V: return "v";
    case NFCase::VI: return "vi";
  }
  return "?";
}

namespace {

// d-pattern kinds of the zeta > 1 table rows: each block entry is one of
// zeta*d = iota + l, iota - l, iota*(1 - l), or identically 0.
enum class Pat { PlusL, MinusL, OneMinusL };

bool check_pattern(const Block& b, Pat pat, const BigInt& iota, const BigInt& zeta) {
  for (size_t j = 0; j < b.l.size(); ++j) {
    BigInt lhs = zeta * b.d[j][1];
    BigInt rhs;
    switch (pat) {
      case Pat::PlusL: rhs = iota + b.l[j]; break;
      case Pat::MinusL: rhs = iota - b.l[j]; break;
      case Pat::OneMinusL: rhs = iota * (1 - b.l[j]); break;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool trailing_zero_and_dprime(const DefiningMatrix& p, size_t first_zero_block,
                              const BigInt& iota, const BigInt& zeta) {
  for (size_t i = first_zero_block; i < p.blocks.size(); ++i)
    for (const auto& d : p.blocks[i].d)
      if (d[1] != 0) return false;
  for (const auto& d : p.dprime)
    if (zeta * d[1] != iota) return false;
  return true;
}

std::optional<NormalFormInfo> try_zeta1(const DefiningMatrix& p) {
  BigInt iota = p.blocks[1].d[0][1];
  if (iota < 1) return std::nullopt;
  for (size_t i = 1; i < p.blocks.size(); ++i)
    for (const auto& d : p.blocks[i].d)
      if (d[1] != iota) return std::nullopt;
  for (const auto& d : p.dprime)
    if (d[1] != iota) return std::nullopt;
  BigInt rm1 = p.r() - 1;
  for (size_t j = 0; j < p.blocks[0].l.size(); ++j)
    if (p.blocks[0].d[j][1] != iota * (1 - rm1 * p.blocks[0].l[j])) return std::nullopt;
  return NormalFormInfo{NFCase::Zeta1, iota, 1, 0};
}

struct CaseSpec {
  NFCase id;
  // leading (l01, l11, l21) requirement: l11, l21 exact; l01 parity -1 = odd,
  // +1 = even, 0 = any; l01 minimum.
  long l11, l21;
  int l01_parity;
  long l01_min;
  Pat p0, p1, p2;
  BigInt zeta;
  BigInt iota_mod, iota_res;  // congruence iota = iota_res mod iota_mod
};

std::optional<NormalFormInfo> try_case(const DefiningMatrix& p, const CaseSpec& cs) {
  const BigInt& l01 = p.blocks[0].l[0];
  const BigInt& l11 = p.blocks[1].l[0];
  const BigInt& l21 = p.blocks[2].l[0];
  if (l11 != cs.l11 || l21 != cs.l21) return std::nullopt;
  if (l01 < cs.l01_min) return std::nullopt;
  if (cs.l01_parity != 0 && mod_floor(l01, 2) != (cs.l01_parity < 0 ? 1 : 0))
    return std::nullopt;
  // Solve iota from the first entry of the first block whose pattern pins it.
  auto solve = [&](Pat pat, const Block& b) -> std::optional<BigInt> {
    const BigInt& l = b.l[0];
    const BigInt& d2 = b.d[0][1];
    switch (pat) {
      case Pat::PlusL: return cs.zeta * d2 - l;
      case Pat::MinusL: return cs.zeta * d2 + l;
      case Pat::OneMinusL: {
        BigInt den = 1 - l;
        if (den == 0) return std::nullopt;  // can't pin iota from this block
        BigInt num = cs.zeta * d2;
        if (num % den != 0) return std::nullopt;
        return num / den;
      }
    }
    return std::nullopt;
  };
  std::optional<BigInt> iota = solve(cs.p0, p.blocks[0]);
  if (!iota) iota = solve(cs.p1, p.blocks[1]);
  if (!iota) iota = solve(cs.p2, p.blocks[2]);
  if (!iota || *iota < 1) return std::nullopt;
  if (mod_floor(*iota, cs.iota_mod) != cs.iota_res) return std::nullopt;
  if (!check_pattern(p.blocks[0], cs.p0, *iota, cs.zeta)) return std::nullopt;
  if (!check_pattern(p.blocks[1], cs.p1, *iota, cs.zeta)) return std::nullopt;
  if (!check_pattern(p.blocks[2], cs.p2, *iota, cs.zeta)) return std::nullopt;
  if (!trailing_zero_and_dprime(p, 3, *iota, cs.zeta)) return std::nullopt;
  return NormalFormInfo{cs.id, *iota, cs.zeta, 0};
}

std::optional<NormalFormInfo> try_case_vi(const DefiningMatrix& p) {
  if (p.blocks[2].l[0] != 1) return std::nullopt;
  for (size_t i = 2; i < p.blocks.size(); ++i)
    for (const auto& e : p.blocks[i].l)
      if (e != 1) return std::nullopt;
  // zeta * d_{0j2} + mu * l_{0j} - iota = 0 and
  // zeta * d_{1j2} - mu * l_{1j} - iota = 0: one-dimensional kernel in
  // (zeta, mu, iota).
  RatMat sys;
  for (size_t j = 0; j < p.blocks[0].l.size(); ++j)
    sys.push_back({Rat(p.blocks[0].d[j][1]), Rat(p.blocks[0].l[j]), Rat(-1)});
  for (size_t j = 0; j < p.blocks[1].l.size(); ++j)
    sys.push_back({Rat(p.blocks[1].d[j][1]), Rat(-p.blocks[1].l[j]), Rat(-1)});
  auto kern = rat_kernel(sys);
  if (kern.size() != 1) return std::nullopt;
  IntVec gen = primitive_integer(kern[0]);
  BigInt zeta = gen[0], mu = gen[1], iota = gen[2];
  if (zeta < 0) {
    zeta = -zeta;
    mu = -mu;
    iota = -iota;
  }
  if (zeta < 2 || iota < 1) return std::nullopt;
  if (!trailing_zero_and_dprime(p, 2, iota, zeta)) return std::nullopt;
  // Primitivity of the kernel generator is exactly gcd(iota, zeta, mu) = 1.
  return NormalFormInfo{NFCase::VI, iota, zeta, mu};
}

}  // namespace

NormalFormInfo normal_form_info(const DefiningMatrix& p) {
  if (p.blocks.size() < 2) throw std::invalid_argument("normal_form_info: need r >= 1");
  std::vector<NormalFormInfo> matches;
  if (auto z1 = try_zeta1(p)) matches.push_back(*z1);
  if (p.r() >= 2) {
    static const CaseSpec specs[] = {
        {NFCase::I, 3, 2, 0, 4, Pat::PlusL, Pat::OneMinusL, Pat::MinusL, 2, 2, 0},
        {NFCase::II, 3, 2, 0, 3, Pat::MinusL, Pat::PlusL, Pat::OneMinusL, 3, 3, 0},
        {NFCase::III, 2, 2, -1, 3, Pat::OneMinusL, Pat::MinusL, Pat::PlusL, 4, 4, 2},
        {NFCase::IV, 2, 2, +1, 2, Pat::MinusL, Pat::PlusL, Pat::OneMinusL, 2, 2, 0},
        {NFCase::V, 2, 2, 0, 2, Pat::OneMinusL, Pat::MinusL, Pat::PlusL, 2, 2, 0},
    };
    for (const auto& cs : specs) {
      if (cs.id == NFCase::I && p.blocks[0].l[0] != 4) continue;
      if (cs.id == NFCase::II && p.blocks[0].l[0] != 3) continue;
      if (auto m = try_case(p, cs)) matches.push_back(*m);
    }
    if (auto m = try_case_vi(p)) matches.push_back(*m);
  }
  if (matches.empty())
    throw std::runtime_error("normal_form_info: matrix is not in normal form");
  if (matches.size() > 1)
    throw std::logic_error("normal_form_info: ambiguous normal form match");
  return matches.front();
}

RatVec leaf_point_global(const LeafPoint& p, int r) {
  RatVec v(static_cast<size_t>(r) + 2, Rat(0));
  if (p.leaf == 0) {
    for (int t = 0; t < r; ++t) v[t] = -p.t;
  } else if (p.leaf > 0) {
    v[p.leaf - 1] = p.t;
  }
  v[r] = p.a;
  v[r + 1] = p.b;
  return v;
}

std::vector<ElementaryCone> elementary_cones(const DefiningMatrix& p) {
  auto check = validate(p);
  if (!check.ok()) throw std::invalid_argument("elementary_cones: invalid matrix");
  size_t nblocks = p.blocks.size();
  auto cols = p.all_columns();
  size_t rows = p.num_rows();

  std::vector<size_t> block_offset(nblocks);
  {
    size_t off = 0;
    for (size_t i = 0; i < nblocks; ++i) {
      block_offset[i] = off;
      off += p.blocks[i].l.size();
    }
  }

  std::vector<ElementaryCone> out;
  std::vector<size_t> choice(nblocks, 0);
  for (;;) {
    ElementaryCone ec;
    ec.choice = choice;
    BigInt prod = 1;
    for (size_t i = 0; i < nblocks; ++i) prod *= p.blocks[i].l[choice[i]];
    ec.ell.resize(nblocks);
    BigInt sum = 0;
    for (size_t i = 0; i < nblocks; ++i) {
      ec.ell[i] = prod / p.blocks[i].l[choice[i]];
      sum += ec.ell[i];
    }
    ec.ell_tau = (1 - BigInt(p.r())) * prod + sum;
    if (ec.ell_tau <= 0) {
      std::ostringstream os;
      os << "elementary_cones: ell_tau <= 0 for cone (";
      for (size_t i = 0; i < nblocks; ++i) os << (i ? "," : "") << choice[i];
      os << "); matrix is not log-terminal";
      throw std::runtime_error(os.str());
    }
    ec.v_tau.assign(rows, BigInt(0));
    for (size_t i = 0; i < nblocks; ++i) {
      IntVec c = p.column(i, choice[i]);
      for (size_t t = 0; t < rows; ++t) ec.v_tau[t] += ec.ell[i] * c[t];
    }
    ec.v_tau_prime.resize(rows);
    for (size_t t = 0; t < rows; ++t) ec.v_tau_prime[t] = Rat(ec.v_tau[t], ec.ell_tau);

    // Face test: a covector vanishing on the generators, >= 1 elsewhere.
    {
      std::vector<LinearConstraint> cs;
      std::vector<bool> is_gen(cols.size(), false);
      for (size_t i = 0; i < nblocks; ++i) is_gen[block_offset[i] + choice[i]] = true;
      for (size_t c = 0; c < cols.size(); ++c) {
        RatVec row(rows);
        for (size_t t = 0; t < rows; ++t) row[t] = Rat(cols[c][t]);
        if (is_gen[c])
          cs.push_back(make_eq(std::move(row), Rat(0)));
        else
          cs.push_back(make_ge(std::move(row), Rat(1)));
      }
      ec.is_face = lp_feasible(cs, rows).feasible;
    }
    out.push_back(std::move(ec));

    // Next choice, lexicographic.
    size_t i = nblocks;
    bool done = true;
    while (i-- > 0) {
      if (choice[i] + 1 < p.blocks[i].l.size()) {
        ++choice[i];
        for (size_t j = i + 1; j < nblocks; ++j) choice[j] = 0;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return out;
}

LeafComplex leaf_complex(const DefiningMatrix& p, int leaf) {
  if (leaf < 0 || leaf > p.r()) throw std::invalid_argument("leaf_complex: leaf out of range");
  auto info = normal_form_info(p);
  auto cones = elementary_cones(p);
  int r = p.r();

  Rat zeta(info.zeta), iota(info.iota);
  const Block& blk = p.blocks[static_cast<size_t>(leaf)];
  Rat coef = (iota - zeta * Rat(blk.d[0][1])) / Rat(blk.l[0]);

  std::vector<RatVec> pts;
  pts.push_back({Rat(0), Rat(0), Rat(0)});
  for (size_t j = 0; j < blk.l.size(); ++j) {
    pts.push_back({Rat(blk.l[j]), Rat(blk.d[j][0]), Rat(blk.d[j][1])});
    // All leaf columns must lie on the plane.
    Rat val = zeta * Rat(blk.d[j][1]) + coef * Rat(blk.l[j]) - iota;
    if (val != 0)
      throw std::logic_error("leaf_complex: a leaf column misses the leaf plane");
  }
  for (const auto& ec : cones) {
    if (!ec.is_face) continue;
    pts.push_back({Rat(0), ec.v_tau_prime[static_cast<size_t>(r)],
                   ec.v_tau_prime[static_cast<size_t>(r) + 1]});
  }
  for (size_t k = 0; k < p.dprime.size(); ++k) {
    pts.push_back({Rat(0), Rat(p.dprime[k][0]), Rat(p.dprime[k][1])});
    Rat val = zeta * Rat(p.dprime[k][1]) - iota;
    if (val != 0)
      throw std::logic_error("leaf_complex: a lineality column misses the leaf plane");
  }
  return LeafComplex{leaf, VPolytope(3, std::move(pts)), zeta, coef, iota};
}

namespace {

bool is_column_point(const DefiningMatrix& p, int leaf, const BigInt& t, const BigInt& a,
                     const BigInt& b) {
  const Block& blk = p.blocks[static_cast<size_t>(leaf)];
  for (size_t j = 0; j < blk.l.size(); ++j)
    if (blk.l[j] == t && blk.d[j][0] == a && blk.d[j][1] == b) return true;
  if (t == 0)
    for (const auto& d : p.dprime)
      if (d[0] == a && d[1] == b) return true;
  return false;
}

}  // namespace

SingularityVerdict verdict(const DefiningMatrix& p) {
  auto check = validate(p);
  if (!check.ok()) throw std::invalid_argument("verdict: invalid defining matrix");
  SingularityVerdict out;
  out.log_terminal = is_log_terminal(p);
  if (!out.log_terminal) return out;

  // Throws with a diagnostic when the matrix is not in normal form.
  normal_form_info(p);

  bool off_plane = false, on_plane_extra = false;
  for (int leaf = 0; leaf <= p.r(); ++leaf) {
    LeafComplex lc = leaf_complex(p, leaf);
    for (const auto& q : lc.polytope.lattice_points()) {
      const BigInt &t = q[0], &a = q[1], &b = q[2];
      if (t == 0 && a == 0 && b == 0) continue;
      if (t < 0) continue;  // not in the leaf's cone region (cannot happen: all generators have t >= 0)
      Rat val = lc.plane_zeta * Rat(b) + lc.plane_coef * Rat(t) - lc.plane_iota;
      LeafPoint lp{leaf, Rat(t), Rat(a), Rat(b)};
      if (val != 0) {
        off_plane = true;
        out.witnesses.push_back({VerdictWitness::Kind::OffPlane, std::move(lp)});
      } else if (!is_column_point(p, leaf, t, a, b)) {
        on_plane_extra = true;
        out.witnesses.push_back({VerdictWitness::Kind::OnPlaneNonColumn, std::move(lp)});
      }
    }
  }
  out.canonical = !off_plane;
  out.terminal = out.canonical && !on_plane_extra;
  return out;
}

Rat discrepancy(const DefiningMatrix& p, const LeafPoint& pt) {
  auto info = normal_form_info(p);
  Rat zeta(info.zeta), iota(info.iota);
  Rat val;
  if (pt.leaf < 0) {
    val = zeta * pt.b;
  } else {
    if (pt.leaf > p.r()) throw std::invalid_argument("discrepancy: leaf out of range");
    const Block& blk = p.blocks[static_cast<size_t>(pt.leaf)];
    Rat coef = (iota - zeta * Rat(blk.d[0][1])) / Rat(blk.l[0]);
    val = zeta * pt.b + coef * pt.t;
  }
  if (val <= 0)
    throw std::invalid_argument("discrepancy: ray through the point never meets the leaf plane at positive parameter");
  return val / iota - 1;
}

}  // namespace latgeo
