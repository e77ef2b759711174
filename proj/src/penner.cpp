#include "penner.hpp"

#include "error.hpp"

namespace fm {

long intersection_count(const PolyMatrix& intersection) {
  Integer total(0);
  for (const auto& e : intersection.entries()) {
    for (const auto& [g, c] : e.terms()) {
      if (c < 0) throw Error(ErrorCode::InvalidArgument, "intersection matrix has a negative coefficient");
      total += c;
    }
  }
  if (!total.fits_slong_p()) throw Error(ErrorCode::Limit, "intersection count too large");
  return total.get_si();
}

namespace {

void check_step(const PennerSpec& spec, const PennerStep& step) {
  if (step.kind != 'a' && step.kind != 'b') throw Error(ErrorCode::InvalidArgument, "word step kind must be a or b");
  size_t want = step.kind == 'a' ? spec.m() : spec.n();
  if (step.mult.size() != want) {
    throw Error(ErrorCode::DimensionMismatch, std::string("multiplicity vector of a ") + step.kind + "-step has length " +
                                                   std::to_string(step.mult.size()) + ", expected " + std::to_string(want));
  }
  for (long x : step.mult) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative twist multiplicity");
  }
}

GroupPoly diag_times_row(long k, const GroupPoly& p) { return scale(p, Integer(k)); }

}  // namespace

PolyMatrix twist_block(const PennerSpec& spec, const PennerStep& step) {
  check_step(spec, step);
  const size_t m = spec.m(), n = spec.n();
  const auto& vars = spec.intersection.vars();
  PolyMatrix out = PolyMatrix::identity(m + n, vars);
  if (step.kind == 'a') {
    // upper-right block diag(v) M(t)
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) out.at(i, m + j) = diag_times_row(step.mult[i], spec.intersection.at(i, j));
  } else {
    // lower-left block diag(w) M^T(t^-1)
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < m; ++i) out.at(m + j, i) = diag_times_row(step.mult[j], reverse_all(spec.intersection.at(i, j)));
  }
  return out;
}

std::vector<PennerStep> normalize_word(const std::vector<PennerStep>& word) {
  if (word.empty()) throw Error(ErrorCode::InvalidArgument, "empty twist word");
  std::vector<PennerStep> w;
  size_t start = 0;
  while (start < word.size() && word[start].kind != 'a') ++start;
  if (start == word.size()) throw Error(ErrorCode::InvalidArgument, "twist word has no a-step");
  for (size_t k = 0; k < word.size(); ++k) {
    const PennerStep& s = word[(start + k) % word.size()];
    if (!w.empty() && w.back().kind == s.kind) {
      if (w.back().mult.size() != s.mult.size()) throw Error(ErrorCode::DimensionMismatch, "inconsistent multiplicity lengths");
      for (size_t i = 0; i < s.mult.size(); ++i) w.back().mult[i] += s.mult[i];
    } else {
      w.push_back(s);
    }
  }
  if (w.back().kind != 'b') throw Error(ErrorCode::InvalidArgument, "twist word has no b-step");
  return w;
}

PolyMatrix word_product(const PennerSpec& spec, const std::vector<PennerStep>& word) {
  PolyMatrix p = PolyMatrix::identity(spec.m() + spec.n(), spec.intersection.vars());
  // later steps act on the left
  for (const auto& step : word) p = mat_mul(twist_block(spec, step), p);
  return p;
}

GroupPoly phi(const PennerSpec& spec) {
  const size_t m = spec.m(), n = spec.n();
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "Penner spec needs at least one a-curve and one b-curve");
  for (const auto& s : spec.word) check_step(spec, s);
  long r = intersection_count(spec.intersection);
  if (spec.r >= 0 && spec.r != r) {
    throw Error(ErrorCode::InvalidArgument, "declared intersection count " + std::to_string(spec.r) +
                                                " differs from the matrix total " + std::to_string(r));
  }
  std::vector<PennerStep> word = normalize_word(spec.word);
  std::vector<long> a_total(m, 0), b_total(n, 0);
  for (const auto& s : word) {
    auto& tot = s.kind == 'a' ? a_total : b_total;
    for (size_t i = 0; i < s.mult.size(); ++i) tot[i] += s.mult[i];
  }
  for (long x : a_total)
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "some a-curve is never twisted");
  for (long x : b_total)
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "some b-curve is never twisted");
  const long e = r - static_cast<long>(m) - static_cast<long>(n);
  if (e < 0) throw Error(ErrorCode::Domain, "degenerate curve system");

  GroupPoly det = char_det(word_product(spec, word), spec.new_var, kDefaultDetLimit);
  if (word.size() != spec.word.size() || word.front().mult != spec.word.front().mult ||
      word.front().kind != spec.word.front().kind) {
    // the word was conjugated or merged; the cyclic product must agree
    std::vector<PennerStep> raw = spec.word;
    GroupPoly raw_det = char_det(word_product(spec, raw), spec.new_var, kDefaultDetLimit);
    if (raw_det != det) throw Error(ErrorCode::Internal, "conjugated word changed the characteristic polynomial");
  }
  GroupPoly u_minus_1 = GroupPoly::variable(det.vars(), 0);
  u_minus_1.add_term(ExpVec(det.nvars(), 0), -1);
  return normalize_unit(mul(pow(u_minus_1, static_cast<unsigned>(e)), det));
}

bool symmetry_check(const PennerSpec& spec) {
  GroupPoly p = phi(spec);
  GroupPoly q = p;
  for (size_t i = 1; i < p.nvars(); ++i) q = substitute_inverse(q, i);
  return normalize_unit(p) == normalize_unit(q);
}

}  // namespace fm
