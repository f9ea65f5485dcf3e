#include "stpef/extform.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stpef {

namespace {

void validate_rows(const std::vector<SparseRow>& rows, int dim, const char* what) {
  for (const auto& r : rows) {
    int prev = -1;
    for (const auto& [c, q] : r.terms) {
      if (c < 0 || c >= dim) throw std::invalid_argument(std::string(what) + ": column out of range");
      if (c <= prev) throw std::invalid_argument(std::string(what) + ": columns not ascending");
      if (q == 0) throw std::invalid_argument(std::string(what) + ": stored zero coefficient");
      prev = c;
    }
  }
}

// Applies a column permutation/translation to every term.
SparseRow remap_row(const SparseRow& r, const std::vector<int>& col_map) {
  std::vector<std::pair<int, Rat>> terms;
  terms.reserve(r.terms.size());
  for (const auto& [c, q] : r.terms) terms.push_back({col_map[c], q});
  return make_row(std::move(terms), r.rhs);
}

std::vector<int> shift_map(int dim, int x_end, int x_shift, int aux_shift) {
  std::vector<int> map(dim);
  for (int c = 0; c < dim; ++c) map[c] = c < x_end ? c + x_shift : c + aux_shift;
  return map;
}

}  // namespace

void validate_ef(const ExtForm& ef) {
  if (ef.aux_count < 0) throw std::invalid_argument("ef: negative aux count");
  std::set<std::string> seen;
  for (const auto& l : ef.x_labels) {
    if (l.empty()) throw std::invalid_argument("ef: empty label");
    if (!seen.insert(l).second) throw std::invalid_argument("ef: duplicate label " + l);
  }
  validate_rows(ef.ineqs, ef.dim(), "ef inequality");
  validate_rows(ef.eqs, ef.dim(), "ef equality");
}

int x_index(const ExtForm& ef, const std::string& label) {
  for (int i = 0; i < ef.nx(); ++i)
    if (ef.x_labels[i] == label) return i;
  throw std::invalid_argument("ef: no x label " + label);
}

LPProblem ef_lp(const ExtForm& ef) {
  LPProblem p;
  p.nvar = ef.dim();
  p.sense = Sense::maximize;
  p.objective.assign(p.nvar, Rat(0));
  p.ineqs = ef.ineqs;
  p.eqs = ef.eqs;
  return p;
}

bool ef_contains_x(const ExtForm& ef, const RatVec& x) {
  check(static_cast<int>(x.size()) == ef.nx(), "ef_contains_x: dimension mismatch");
  LPProblem p = ef_lp(ef);
  for (int j = 0; j < ef.nx(); ++j) p.eqs.push_back(make_row({{j, Rat(1)}}, x[j]));
  return lp_solve(p).status == LPStatus::optimal;
}

ExtForm intersect(const ExtForm& a, const ExtForm& b) {
  check(a.x_labels == b.x_labels, "intersect: label mismatch");
  ExtForm out;
  out.x_labels = a.x_labels;
  out.aux_count = a.aux_count + b.aux_count;
  int nx = out.nx();
  auto bmap = shift_map(b.dim(), nx, 0, a.aux_count);
  out.ineqs = a.ineqs;
  for (const auto& r : b.ineqs) out.ineqs.push_back(remap_row(r, bmap));
  out.eqs = a.eqs;
  for (const auto& r : b.eqs) out.eqs.push_back(remap_row(r, bmap));
  out.note = "intersect";
  return out;
}

ExtForm product(const ExtForm& a, const ExtForm& b) {
  ExtForm out;
  out.x_labels = a.x_labels;
  out.x_labels.insert(out.x_labels.end(), b.x_labels.begin(), b.x_labels.end());
  out.aux_count = a.aux_count + b.aux_count;
  auto amap = shift_map(a.dim(), a.nx(), 0, b.nx());
  auto bmap = shift_map(b.dim(), b.nx(), a.nx(), a.nx() + a.aux_count);
  for (const auto& r : a.ineqs) out.ineqs.push_back(remap_row(r, amap));
  for (const auto& r : b.ineqs) out.ineqs.push_back(remap_row(r, bmap));
  for (const auto& r : a.eqs) out.eqs.push_back(remap_row(r, amap));
  for (const auto& r : b.eqs) out.eqs.push_back(remap_row(r, bmap));
  out.note = "product";
  validate_ef(out);
  return out;
}

ExtForm face_restrict(ExtForm ef, SparseRow eq) {
  validate_rows({eq}, ef.dim(), "face_restrict row");
  ef.eqs.push_back(std::move(eq));
  ef.note = "face_restrict";
  return ef;
}

ExtForm embed_zero(const ExtForm& ef, const std::vector<std::string>& target) {
  ExtForm out;
  out.x_labels = target;
  out.aux_count = ef.aux_count;
  std::vector<int> col_map(ef.dim());
  std::vector<bool> covered(target.size(), false);
  for (int j = 0; j < ef.nx(); ++j) {
    auto it = std::find(target.begin(), target.end(), ef.x_labels[j]);
    if (it == target.end())
      throw std::invalid_argument("embed_zero: source label " + ef.x_labels[j] + " missing");
    col_map[j] = static_cast<int>(it - target.begin());
    covered[col_map[j]] = true;
  }
  for (int j = 0; j < ef.aux_count; ++j)
    col_map[ef.nx() + j] = static_cast<int>(target.size()) + j;
  for (const auto& r : ef.ineqs) out.ineqs.push_back(remap_row(r, col_map));
  for (const auto& r : ef.eqs) out.eqs.push_back(remap_row(r, col_map));
  for (size_t j = 0; j < target.size(); ++j)
    if (!covered[j]) out.eqs.push_back(make_row({{static_cast<int>(j), Rat(1)}}, Rat(0)));
  out.note = "embed_zero";
  validate_ef(out);
  return out;
}

ExtForm monotonize(const ExtForm& ef) {
  ExtForm out;
  out.x_labels = ef.x_labels;
  int nx = ef.nx();
  out.aux_count = nx + ef.aux_count;
  // old columns move up by nx: old x block becomes the z block
  std::vector<int> col_map(ef.dim());
  for (int c = 0; c < ef.dim(); ++c) col_map[c] = c + nx;
  for (const auto& r : ef.ineqs) out.ineqs.push_back(remap_row(r, col_map));
  for (int j = 0; j < nx; ++j) {
    out.ineqs.push_back(make_row({{j, Rat(-1)}}, Rat(0)));                    // 0 <= x_j
    out.ineqs.push_back(make_row({{j, Rat(1)}, {nx + j, Rat(-1)}}, Rat(0)));  // x_j <= z_j
  }
  for (const auto& r : ef.eqs) out.eqs.push_back(remap_row(r, col_map));
  out.note = "monotonize";
  return out;
}

ExtForm balas_union(const std::vector<ExtForm>& parts) {
  check(!parts.empty(), "balas_union: no parts");
  int k = static_cast<int>(parts.size());
  const auto& labels = parts[0].x_labels;
  for (const auto& p : parts)
    check(p.x_labels == labels, "balas_union: label mismatch across parts");
  int nx = static_cast<int>(labels.size());

  ExtForm out;
  out.x_labels = labels;
  // copy blocks per part, then the lambda block
  std::vector<int> block_start(k);
  int cursor = nx;
  for (int i = 0; i < k; ++i) {
    block_start[i] = cursor;
    cursor += parts[i].dim();
  }
  int lambda_start = cursor;
  out.aux_count = cursor + k - nx;

  auto homogenize = [&](const SparseRow& r, int part) {
    std::vector<std::pair<int, Rat>> terms;
    for (const auto& [c, q] : r.terms) terms.push_back({block_start[part] + c, q});
    if (r.rhs != 0) terms.push_back({lambda_start + part, -r.rhs});
    return make_row(std::move(terms), Rat(0));
  };

  for (int i = 0; i < k; ++i)
    for (const auto& r : parts[i].ineqs) out.ineqs.push_back(homogenize(r, i));
  for (int i = 0; i < k; ++i)
    out.ineqs.push_back(make_row({{lambda_start + i, Rat(-1)}}, Rat(0)));  // lambda_i >= 0
  for (int i = 0; i < k; ++i)
    for (const auto& r : parts[i].eqs) out.eqs.push_back(homogenize(r, i));
  for (int j = 0; j < nx; ++j) {
    std::vector<std::pair<int, Rat>> terms{{j, Rat(1)}};
    for (int i = 0; i < k; ++i) terms.push_back({block_start[i] + j, Rat(-1)});
    out.eqs.push_back(make_row(std::move(terms), Rat(0)));  // x = sum x_i
  }
  {
    std::vector<std::pair<int, Rat>> terms;
    for (int i = 0; i < k; ++i) terms.push_back({lambda_start + i, Rat(1)});
    out.eqs.push_back(make_row(std::move(terms), Rat(1)));  // sum lambda = 1
  }
  out.note = "balas_union";
  validate_ef(out);
  return out;
}

ExtForm robust_counterpart(const ExtForm& inner, const std::vector<std::string>& outer_labels,
                           const std::vector<SparseRow>& directions, const SparseRow& budget) {
  check(static_cast<int>(directions.size()) == inner.nx(),
        "robust_counterpart: one direction per inner x column required");
  ExtForm out;
  out.x_labels = outer_labels;
  int nox = out.nx();
  int ni = static_cast<int>(inner.ineqs.size());
  int ne = static_cast<int>(inner.eqs.size());
  out.aux_count = ni + ne;
  int lambda0 = nox, mu0 = nox + ni;
  validate_rows(directions, nox, "robust_counterpart direction");
  validate_rows({budget}, nox, "robust_counterpart budget");

  for (int i = 0; i < ni; ++i)
    out.ineqs.push_back(make_row({{lambda0 + i, Rat(-1)}}, Rat(0)));  // lambda_i >= 0
  {
    // lambda.b + mu.d - budget.terms.x <= budget.rhs
    std::vector<std::pair<int, Rat>> terms;
    for (int i = 0; i < ni; ++i)
      if (inner.ineqs[i].rhs != 0) terms.push_back({lambda0 + i, inner.ineqs[i].rhs});
    for (int kk = 0; kk < ne; ++kk)
      if (inner.eqs[kk].rhs != 0) terms.push_back({mu0 + kk, inner.eqs[kk].rhs});
    for (const auto& [c, q] : budget.terms) terms.push_back({c, -q});
    out.ineqs.push_back(make_row(std::move(terms), budget.rhs));
  }
  // transposed rows: one equality per inner column
  std::vector<std::vector<std::pair<int, Rat>>> cols(inner.dim());
  for (int i = 0; i < ni; ++i)
    for (const auto& [c, q] : inner.ineqs[i].terms) cols[c].push_back({lambda0 + i, q});
  for (int kk = 0; kk < ne; ++kk)
    for (const auto& [c, q] : inner.eqs[kk].terms) cols[c].push_back({mu0 + kk, q});
  for (int c = 0; c < inner.dim(); ++c) {
    auto terms = cols[c];
    Rat rhs(0);
    if (c < inner.nx()) {
      for (const auto& [oc, q] : directions[c].terms) terms.push_back({oc, -q});
      rhs = directions[c].rhs;
    }
    out.eqs.push_back(make_row(std::move(terms), rhs));
  }
  out.note = "robust_counterpart";
  validate_ef(out);
  return out;
}

}  // namespace stpef
