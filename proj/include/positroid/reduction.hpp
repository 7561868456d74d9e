#ifndef POSITROID_REDUCTION_HPP
#define POSITROID_REDUCTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "positroid/network.hpp"
#include "positroid/plucker.hpp"

namespace positroid {

struct NotTNN : std::invalid_argument {
    NotTNN() : std::invalid_argument("point is not totally nonnegative") {}
};
struct WrongCell : std::invalid_argument {
    WrongCell() : std::invalid_argument("point does not lie in the chart's cell") {}
};

struct ReductionStep {
    enum class Kind { LollipopBlack, LollipopWhite, Bridge } kind;
    int i = 0;
    Rat a = Rat(0);  // bridge weight, positive when bound to a point

    bool same_shape(const ReductionStep& o) const { return kind == o.kind && i == o.i; }
};

// Deterministic reduction plan for a cell: lollipops (smallest position
// first, black before white) until no fixed points remain, else the bridge
// at the smallest admissible i.  The plan depends only on f, so it doubles
// as the chart of the cell.
inline std::vector<ReductionStep> plan_steps(Baff f) {
    std::vector<ReductionStep> steps;
    auto delete_position = [](const Baff& g, int i) {
        int n = g.n();
        std::vector<int> w;
        auto shrink = [&](int v) {
            // renumber Z minus the residue class of i; anchored so labels
            // below i are fixed
            int count = 0;
            int base = i;
            while (base <= v) {
                ++count;
                base += n;
            }
            base = i - n;
            while (base > v) {
                --count;
                base -= n;
            }
            return v - count;
        };
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            int nv = shrink(g(j));
            w.push_back(nv);
        }
        // window positions also shift: position j > i becomes j-1; the
        // vector above is already in that order
        return Baff(n - 1, w);
    };
    while (f.n() >= 1) {
        int n = f.n();
        int pick = -1;
        for (int i = 1; i <= n; ++i)
            if (f(i) == i) {
                pick = i;
                break;
            }
        if (pick > 0) {
            steps.push_back({ReductionStep::Kind::LollipopBlack, pick, Rat(0)});
            if (n == 1) break;
            f = delete_position(f, pick);
            continue;
        }
        for (int i = 1; i <= n; ++i)
            if (f(i) == i + n) {
                pick = i;
                break;
            }
        if (pick > 0) {
            steps.push_back({ReductionStep::Kind::LollipopWhite, pick, Rat(0)});
            if (n == 1) break;
            f = delete_position(f, pick);
            continue;
        }
        for (int i = 1; i <= n; ++i)
            if (f(i) < f(i + 1) && f(i + 1) <= i + n) {
                pick = i;
                break;
            }
        if (pick < 0) throw std::logic_error("reduction: no admissible bridge");
        steps.push_back({ReductionStep::Kind::Bridge, pick, Rat(0)});
        f = f.times_s(pick);
    }
    return steps;
}

struct CellChart {
    Baff f;
    std::vector<ReductionStep> steps;  // outermost first; bridges carry no weight
    std::vector<Var> params;           // one per bridge, in step order

    int dim() const { return static_cast<int>(params.size()); }
};

inline CellChart graph_for(const Baff& f) {
    CellChart c;
    c.f = f;
    c.steps = plan_steps(f);
    int t = 0;
    for (const ReductionStep& s : c.steps)
        if (s.kind == ReductionStep::Kind::Bridge)
            c.params.push_back(Var("t" + std::to_string(++t)));
    if (c.dim() != f.k() * (f.n() - f.k()) - length(f))
        throw std::logic_error("reduction: wrong parameter count");
    return c;
}

namespace detail {

template <typename K>
Mat<K> insert_zero_column(const Mat<K>& m, int i) {
    Mat<K> r(m.rows, m.cols + 1);
    for (int row = 0; row < m.rows; ++row)
        for (int col = 0; col < m.cols + 1; ++col) {
            if (col == i - 1) continue;
            r.at(row, col) = m.at(row, col < i - 1 ? col : col - 1);
        }
    return r;
}

// Insert a coloop column at position i: new top row e_i, old matrix shifted
// right of column i, columns left of i negated (and column i negated when
// the old k is odd) so that Delta_{i u J}(out) = Delta_J(in) on the nose.
template <typename K>
Mat<K> insert_coloop(const Mat<K>& m, int i) {
    int k = m.rows, n = m.cols;
    Mat<K> r(k + 1, n + 1);
    r.at(0, i - 1) = (k % 2 == 1) ? K(0) - K(1) : K(1);
    for (int row = 0; row < k; ++row)
        for (int col = 0; col < n; ++col) {
            int dst = col < i - 1 ? col : col + 1;
            K val = m.at(row, col);
            if (dst < i - 1) val = K(0) - val;
            r.at(row + 1, dst) = val;
        }
    return r;
}

}  // namespace detail

// Rebuild a matrix representative from bound steps (innermost last).
template <typename K>
Mat<K> matrix_of_steps(const std::vector<ReductionStep>& steps,
                       const std::vector<K>& bridge_values) {
    Mat<K> m(0, 0);
    size_t b = bridge_values.size();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
            case ReductionStep::Kind::LollipopBlack: {
                m = detail::insert_zero_column(m, it->i);
                break;
            }
            case ReductionStep::Kind::LollipopWhite: {
                m = detail::insert_coloop(m, it->i);
                break;
            }
            case ReductionStep::Kind::Bridge: {
                m = apply_x(m, it->i, bridge_values[--b]);
                break;
            }
        }
    }
    if (b != 0) throw std::invalid_argument("matrix_of_steps: value count mismatch");
    return m;
}

// Rebuild the planar bipartite network from bound steps.
template <typename K>
PlanarNetwork<K> network_of_steps(const std::vector<ReductionStep>& steps,
                                  const std::vector<K>& bridge_values) {
    PlanarNetwork<K> g = PlanarNetwork<K>::with_boundary(0);
    size_t b = bridge_values.size();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
            case ReductionStep::Kind::LollipopBlack:
                g.add_lollipop(it->i, Color::Black);
                break;
            case ReductionStep::Kind::LollipopWhite:
                g.add_lollipop(it->i, Color::White);
                break;
            case ReductionStep::Kind::Bridge:
                g.add_bridge(it->i, bridge_values[--b]);
                break;
        }
    }
    return g;
}

// positive parameters -> totally nonnegative matrix representative
inline Mat<Rat> parametrize(const CellChart& chart, const std::vector<Rat>& values) {
    if (static_cast<int>(values.size()) != chart.dim())
        throw std::invalid_argument("parametrize: wrong number of parameters");
    for (const Rat& v : values)
        if (sgn(v) <= 0) throw std::invalid_argument("parametrize: parameters must be positive");
    return matrix_of_steps(chart.steps, values);
}

inline PlanarNetwork<Rat> network_for(const CellChart& chart, const std::vector<Rat>& values) {
    return network_of_steps(chart.steps, values);
}

inline PlanarNetwork<RatFunc> symbolic_network_for(const CellChart& chart) {
    std::vector<RatFunc> vals;
    for (Var v : chart.params) vals.push_back(RatFunc::variable(v));
    return network_of_steps(chart.steps, vals);
}

// One reduction move applied to a TNN point: the step taken and the smaller
// point.  Follows the plan order exactly.
inline std::pair<ReductionStep, Mat<Rat>> reduce_step(const Mat<Rat>& x) {
    auto v = plucker_of(x);
    if (!is_tnn(v)) throw NotTNN();
    Baff f = perm_of_point(x);
    int n = f.n();
    for (int i = 1; i <= n; ++i)
        if (f(i) == i) {
            // zero column: drop it
            Mat<Rat> r(x.rows, n - 1);
            for (int row = 0; row < x.rows; ++row)
                for (int col = 0, w = 0; col < n; ++col) {
                    if (col == i - 1) continue;
                    r.at(row, w++) = x.at(row, col);
                }
            return {{ReductionStep::Kind::LollipopBlack, i, Rat(0)}, r};
        }
    for (int i = 1; i <= n; ++i)
        if (f(i) == i + n) {
            // put a pivot in column i on the top row, strip row and column,
            // and undo the sign normalization of insert_coloop
            Mat<Rat> a = x;
            int piv = -1;
            for (int row = 0; row < a.rows; ++row)
                if (!is_zero(a.at(row, i - 1))) {
                    piv = row;
                    break;
                }
            if (piv < 0) throw std::logic_error("reduce: coloop column is zero");
            if (piv != 0)
                for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(0, c));
            Rat inv = Rat(1) / a.at(0, i - 1);
            for (int c = 0; c < n; ++c) a.at(0, c) *= inv;
            for (int row = 1; row < a.rows; ++row) {
                Rat f0 = a.at(row, i - 1);
                if (is_zero(f0)) continue;
                for (int c = 0; c < n; ++c) a.at(row, c) -= f0 * a.at(0, c);
            }
            Mat<Rat> r(x.rows - 1, n - 1);
            for (int row = 1; row < x.rows; ++row)
                for (int col = 0, w = 0; col < n; ++col) {
                    if (col == i - 1) continue;
                    Rat val = a.at(row, col);
                    if (col < i - 1) val = -val;
                    r.at(row - 1, w++) = val;
                }
            return {{ReductionStep::Kind::LollipopWhite, i, Rat(0)}, r};
        }
    GrassmannNecklace nec = necklace_of(f);
    for (int i = 1; i <= n; ++i) {
        if (!(f(i) < f(i + 1) && f(i + 1) <= i + n)) continue;
        int j = i % n + 1;  // label i+1
        const Subset& Ij = nec.subsets[static_cast<size_t>(j - 1)];
        if (!contains(Ij, j) || contains(Ij, i))
            throw std::logic_error("reduce: necklace shape unexpected at a bridge");
        Subset Ij2 = set_plus(set_minus(Ij, j), i);
        Rat num = v.at(Ij);
        Rat den = v.at(Ij2);
        if (is_zero(den)) throw std::logic_error("reduce: vanishing bridge denominator");
        Rat a = num / den;
        if (sgn(a) <= 0) throw std::logic_error("reduce: bridge ratio not positive");
        Mat<Rat> r = apply_x(x, i, Rat(-a));
        return {{ReductionStep::Kind::Bridge, i, a}, r};
    }
    throw std::logic_error("reduce: no admissible step");
}

// full reduction: the bound step sequence of a TNN point
inline std::vector<ReductionStep> reduce_fully(Mat<Rat> x) {
    std::vector<ReductionStep> steps;
    while (x.cols >= 1) {
        if (x.cols == 1) {
            // Gr(0,1) or Gr(1,1)
            steps.push_back({x.rows == 0 ? ReductionStep::Kind::LollipopBlack
                                         : ReductionStep::Kind::LollipopWhite,
                             1, Rat(0)});
            break;
        }
        auto [s, nx] = reduce_step(x);
        steps.push_back(s);
        x = nx;
    }
    return steps;
}

// factorize a TNN point into a planar bipartite network with positive
// weights; measurements recover the point projectively
inline PlanarNetwork<Rat> factorize(const Mat<Rat>& x) {
    std::vector<ReductionStep> steps = reduce_fully(x);
    std::vector<Rat> values;
    for (const ReductionStep& s : steps)
        if (s.kind == ReductionStep::Kind::Bridge) values.push_back(s.a);
    return network_of_steps(steps, values);
}

// recover the chart parameters of a point of the open cell
inline std::vector<Rat> coordinates(const CellChart& chart, const Mat<Rat>& x) {
    if (!(perm_of_point(x) == chart.f)) throw WrongCell();
    std::vector<ReductionStep> steps = reduce_fully(x);
    if (steps.size() != chart.steps.size()) throw WrongCell();
    std::vector<Rat> values;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (!steps[i].same_shape(chart.steps[i])) throw WrongCell();
        if (steps[i].kind == ReductionStep::Kind::Bridge) values.push_back(steps[i].a);
    }
    return values;
}

}  // namespace positroid

#endif
