#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace diamond {

template <class T>
struct ScalarTraits {
    static constexpr bool exact = true;
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
};

template <class T>
struct GameSolution {
    T value{};                   // max-min value of the original (unshifted) game
    std::vector<T> row_mixture;  // maximizing player's distribution over rows
    std::vector<T> col_mixture;  // minimizing player's distribution over columns
    std::size_t pivots = 0;
};

namespace detail {

/// Dense-tableau primal simplex for max 1'u s.t. P'u <= 1, u >= 0 with
/// P' > 0. The slack basis is feasible, so no phase-1 is needed.
///
/// These games are heavily degenerate (states and cuts tie constantly), so
/// the floating-point path needs care on two fronts: pivot selection quality
/// (Devex pricing keeps the pivot count near the row count) and pivot element
/// size (a Harris-style two-pass ratio test trades a bounded feasibility
/// slack for large pivot elements; tiny pivots would amplify roundoff
/// catastrophically). `safe_mode` switches to Bland's rule with an exact
/// min-ratio test, which is the anti-cycling reference path and the retry
/// strategy when the certified duality gap of a fast solve is too wide.
/// Exact scalar types always use the safe path and exact comparisons.
template <class T>
class GameTableau {
  public:
    GameTableau(std::size_t rows, std::size_t cols,
                const std::function<void(std::size_t, T*)>& fill)
        : rows_(rows), cols_(cols), width_(cols + rows + 1), tab_(width_ * (rows + 1), T(0)),
          basis_(rows), weight_() {
        for (std::size_t s = 0; s < rows_; ++s) {
            T* row = tab_.data() + s * width_;
            fill(s, row);
            row[cols_ + s] = T(1);
            row[width_ - 1] = T(1);
            basis_[s] = cols_ + s;
        }
        T* orow = tab_.data() + rows_ * width_;
        for (std::size_t j = 0; j < cols_; ++j) orow[j] = T(1);
    }

    std::size_t run(bool safe_mode) {
        constexpr bool exact = ScalarTraits<T>::exact;
        if constexpr (exact) safe_mode = true;
        if (!safe_mode) weight_.assign(width_ - 1, 1.0);

        const std::size_t max_pivots = 600 * rows_ + 60000;
        std::size_t pivots = 0;
        for (;; ++pivots) {
            if (pivots > max_pivots) throw std::runtime_error("simplex did not terminate");
            const std::size_t pc = safe_mode ? enter_bland() : enter_devex();
            if (pc == width_) return pivots;  // optimal
            const std::size_t pr = safe_mode ? leave_min_ratio(pc) : leave_harris(pc);
            pivot(pr, pc, safe_mode);
        }
    }

    T objective() const { return -tab_[rows_ * width_ + width_ - 1]; }
    T reduced_cost(std::size_t j) const { return tab_[rows_ * width_ + j]; }
    T rhs(std::size_t s) const { return tab_[s * width_ + width_ - 1]; }
    std::size_t basic_var(std::size_t s) const { return basis_[s]; }
    std::size_t cols() const { return cols_; }
    std::size_t rows() const { return rows_; }

  private:
    static bool positive(const T& x) {
        if constexpr (ScalarTraits<T>::exact) {
            return x > T(0);
        } else {
            return x > 1e-9;
        }
    }

    std::size_t enter_bland() const {
        const T* orow = tab_.data() + rows_ * width_;
        for (std::size_t j = 0; j + 1 < width_; ++j) {
            if (positive(orow[j])) return j;
        }
        return width_;
    }

    std::size_t enter_devex() const {
        if constexpr (ScalarTraits<T>::exact) {
            return enter_bland();
        } else {
            const double* orow = tab_.data() + rows_ * width_;
            std::size_t pc = width_;
            double best = 0.0;
            for (std::size_t j = 0; j + 1 < width_; ++j) {
                const double d = orow[j];
                if (d <= 1e-9) continue;
                const double score = d * d / weight_[j];
                if (score > best) {
                    best = score;
                    pc = j;
                }
            }
            return pc;
        }
    }

    std::size_t leave_min_ratio(std::size_t pc) const {
        std::size_t pr = rows_;
        T best_t{};
        for (std::size_t s = 0; s < rows_; ++s) {
            const T a = tab_[s * width_ + pc];
            if (!positive(a)) continue;
            T b = tab_[s * width_ + width_ - 1];
            if (b < T(0)) b = T(0);
            const T t = b / a;
            if (pr == rows_ || t < best_t || (t == best_t && basis_[s] < basis_[pr])) {
                pr = s;
                best_t = t;
            }
        }
        if (pr == rows_) throw std::runtime_error("unbounded game LP");
        return pr;
    }

    /// Two-pass Harris test: pass one sets the ratio bound with a small
    /// feasibility slack, pass two takes the largest admissible pivot.
    std::size_t leave_harris(std::size_t pc) const {
        if constexpr (ScalarTraits<T>::exact) {
            return leave_min_ratio(pc);
        } else {
            constexpr double kPivTol = 1e-9;
            constexpr double kFeasTol = 1e-9;
            double limit = -1.0;
            for (std::size_t s = 0; s < rows_; ++s) {
                const double a = tab_[s * width_ + pc];
                if (a <= kPivTol) continue;
                double b = tab_[s * width_ + width_ - 1];
                if (b < 0.0) b = 0.0;
                const double t = (b + kFeasTol) / a;
                if (limit < 0.0 || t < limit) limit = t;
            }
            if (limit < 0.0) throw std::runtime_error("unbounded game LP");
            std::size_t pr = rows_;
            double best_a = 0.0;
            for (std::size_t s = 0; s < rows_; ++s) {
                const double a = tab_[s * width_ + pc];
                if (a <= kPivTol) continue;
                double b = tab_[s * width_ + width_ - 1];
                if (b < 0.0) b = 0.0;
                if (b / a <= limit && a > best_a) {
                    best_a = a;
                    pr = s;
                }
            }
            if (pr == rows_) throw std::runtime_error("empty Harris candidate set");
            return pr;
        }
    }

    void pivot(std::size_t pr, std::size_t pc, bool safe_mode) {
        T* prow = tab_.data() + pr * width_;
        const T inv = T(1) / prow[pc];
        for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
        prow[pc] = T(1);
        for (std::size_t s = 0; s <= rows_; ++s) {
            if (s == pr) continue;
            T* row = tab_.data() + s * width_;
            const T f = row[pc];
            if (f == T(0)) continue;
            for (std::size_t j = 0; j < width_; ++j) row[j] -= f * prow[j];
            row[pc] = T(0);
        }
        basis_[pr] = pc;
        if constexpr (!ScalarTraits<T>::exact) {
            if (!safe_mode) {
                const double wq = weight_[pc];
                double peak = 1.0;
                for (std::size_t j = 0; j + 1 < width_; ++j) {
                    const double cand = prow[j] * prow[j] * wq;
                    if (cand > weight_[j]) weight_[j] = cand;
                    if (weight_[j] > peak) peak = weight_[j];
                }
                weight_[pc] = 1.0;
                if (peak > 1e10) weight_.assign(width_ - 1, 1.0);  // reset reference framework
            }
        }
    }

    std::size_t rows_, cols_, width_;
    std::vector<T> tab_;
    std::vector<std::size_t> basis_;
    std::vector<double> weight_;
};

}  // namespace detail

/// Solves the zero-sum matrix game
///     value = max_{lambda in simplex} min_{columns A} sum_rows lambda_s P[s][A]
/// on the column player's bounded LP form; see detail::GameTableau for the
/// pivoting strategy. `fill(s, out)` must write the s-th row of the shifted
/// payoff P + shift (strictly positive) into out[0..cols). Both returned
/// mixtures are basic (vertex) solutions: the column mixture comes from the
/// final basis, the row mixture from the simplex multipliers.
template <class T>
GameSolution<T> solve_matrix_game(std::size_t rows, std::size_t cols,
                                  const std::function<void(std::size_t, T*)>& fill,
                                  const T& shift, bool safe_mode = false) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("empty game");
    detail::GameTableau<T> tab(rows, cols, fill);
    GameSolution<T> out;
    out.pivots = tab.run(safe_mode);

    const T objective = tab.objective();
    if (!(objective > T(0))) throw std::runtime_error("game LP returned a nonpositive objective");
    out.value = T(1) / objective - shift;
    out.row_mixture.assign(rows, T(0));
    out.col_mixture.assign(cols, T(0));
    for (std::size_t s = 0; s < rows; ++s) {
        const T pi = -tab.reduced_cost(cols + s);
        if (pi > T(0)) out.row_mixture[s] = pi / objective;
    }
    for (std::size_t s = 0; s < rows; ++s) {
        if (tab.basic_var(s) < cols) {
            const T u = tab.rhs(s);
            if (u > T(0)) out.col_mixture[tab.basic_var(s)] = u / objective;
        }
    }
    return out;
}

}  // namespace diamond
