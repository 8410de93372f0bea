#include "eqehr/normal_form.hpp"

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// row_i += f * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Int& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix H = m;
  IntMatrix U = IntMatrix::identity(m.rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols && r < H.rows; ++c) {
    // eliminate below row r in column c by euclidean steps
    while (true) {
      std::size_t p = r;
      bool any = false;
      Int best;
      for (std::size_t i = r; i < H.rows; ++i) {
        if (H.at(i, c) == 0) continue;
        Int v = abs(H.at(i, c));
        if (!any || v < best) {
          best = v;
          p = i;
          any = true;
        }
      }
      if (!any) break;
      if (p != r) {
        swap_rows(H, r, p);
        swap_rows(U, r, p);
      }
      if (H.at(r, c) < 0) {
        negate_row(H, r);
        negate_row(U, r);
      }
      bool done = true;
      for (std::size_t i = r + 1; i < H.rows; ++i) {
        if (H.at(i, c) == 0) continue;
        Int q = fdiv(H.at(i, c), H.at(r, c));
        add_row(H, i, r, -q);
        add_row(U, i, r, -q);
        if (H.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H.at(r, c) != 0) {
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < r; ++i) {
        Int q = fdiv(H.at(i, c), H.at(r, c));
        add_row(H, i, r, -q);
        add_row(U, i, r, -q);
      }
      ++r;
    }
  }
  return {H, U};
}

SnfResult snf(const IntMatrix& m) {
  IntMatrix S = m;
  IntMatrix U = IntMatrix::identity(m.rows);
  IntMatrix V = IntMatrix::identity(m.cols);

  auto swap_cols = [&](IntMatrix& mm, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < mm.rows; ++r) std::swap(mm.at(r, i), mm.at(r, j));
  };
  auto add_col = [&](IntMatrix& mm, std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < mm.rows; ++r) mm.at(r, i) += f * mm.at(r, j);
  };

  std::size_t k = 0;
  std::size_t n = std::min(S.rows, S.cols);
  while (k < n) {
    // find a nonzero pivot in the trailing block
    std::size_t pi = k, pj = k;
    bool found = false;
    Int best;
    for (std::size_t i = k; i < S.rows; ++i)
      for (std::size_t j = k; j < S.cols; ++j) {
        if (S.at(i, j) == 0) continue;
        Int v = abs(S.at(i, j));
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != k) {
      swap_rows(S, k, pi);
      swap_rows(U, k, pi);
    }
    if (pj != k) {
      swap_cols(S, k, pj);
      swap_cols(V, k, pj);
    }
    if (S.at(k, k) < 0) {
      negate_row(S, k);
      negate_row(U, k);
    }
    bool clean = true;
    for (std::size_t i = k + 1; i < S.rows; ++i) {
      Int q = fdiv(S.at(i, k), S.at(k, k));
      add_row(S, i, k, -q);
      add_row(U, i, k, -q);
      if (S.at(i, k) != 0) clean = false;
    }
    for (std::size_t j = k + 1; j < S.cols; ++j) {
      Int q = fdiv(S.at(k, j), S.at(k, k));
      add_col(S, j, k, -q);
      add_col(V, j, k, -q);
      if (S.at(k, j) != 0) clean = false;
    }
    if (!clean) continue;
    // enforce divisibility d_k | trailing entries
    bool divides = true;
    for (std::size_t i = k + 1; i < S.rows && divides; ++i)
      for (std::size_t j = k + 1; j < S.cols && divides; ++j)
        if (S.at(i, j) % S.at(k, k) != 0) {
          add_row(S, k, i, 1);
          add_row(U, k, i, 1);
          divides = false;
        }
    if (divides) ++k;
  }
  std::vector<Int> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = S.at(i, i);
  return {diag, U, V};
}

IntMatrix integer_kernel(const IntMatrix& A) {
  // Row-HNF of A^T: zero rows of H correspond to left-kernel rows of A^T,
  // i.e. integer vectors x with A x = 0.
  auto [H, U] = hnf(A.transpose());
  std::size_t r = 0;
  while (r < H.rows && !std::all_of(H.a.begin() + r * H.cols, H.a.begin() + (r + 1) * H.cols,
                                    [](const Int& v) { return v == 0; }))
    ++r;
  IntMatrix K(H.rows - r, A.cols);
  for (std::size_t i = r; i < H.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) K.at(i - r, j) = U.at(i, j);
  return hnf(K).H;
}

IntMatrix saturate_rows(const IntMatrix& m) {
  // {y : m y = 0} is saturated, and so is its kernel, which has the same
  // Q-span as the rows of m.
  IntMatrix K = integer_kernel(m);
  IntMatrix S = integer_kernel(K);
  return hnf(S).H;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b) {
  // Solve A x = b: column operations tracked on the right. Use HNF of A^T:
  // U A^T = H  =>  A V = H^T with V = U^T; solve H^T y = b by forward
  // substitution (H^T is lower "column echelon"), then x = V y.
  auto [H, U] = hnf(A.transpose());
  // H is rows x ... : H (cols(A) x rows(A))? A^T is cols x rows.
  IntMatrix Ht = H.transpose();  // rows(A) x cols(A), column echelon
  std::size_t nrows = A.rows, ncols = A.cols;
  std::vector<Int> y(ncols, Int(0));
  std::vector<Int> rem = b;
  std::size_t col = 0;
  for (std::size_t i = 0; i < nrows && col < ncols; ++i) {
    if (Ht.at(i, col) == 0) continue;
    Int q = rem[i] / Ht.at(i, col);
    if (rem[i] % Ht.at(i, col) != 0) return std::nullopt;
    y[col] = q;
    for (std::size_t r2 = 0; r2 < nrows; ++r2) rem[r2] -= q * Ht.at(r2, col);
    ++col;
  }
  for (std::size_t i = 0; i < nrows; ++i)
    if (rem[i] != 0) return std::nullopt;
  // x = U^T y
  IntMatrix Ut = U.transpose();
  return Ut.apply(y);
}

}  // namespace eqehr
