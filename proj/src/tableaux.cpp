#include "positroid/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace positroid {

bool RectTableau::semistandard() const {
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (at(r, c) < 1) return false;
            if (c + 1 < cols && at(r, c) > at(r, c + 1)) return false;
            if (r + 1 < rows && at(r, c) >= at(r + 1, c)) return false;
        }
    return true;
}

Subset RectTableau::column(int c) const {
    Subset s;
    for (int r = 0; r < rows; ++r) s.push_back(at(r, c));
    return s;
}

std::string RectTableau::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) os << (c ? " " : "") << at(r, c);
        os << "\n";
    }
    return os.str();
}

RectTableau RectTableau::of_rows(std::vector<std::vector<int>> rws) {
    RectTableau t;
    t.rows = static_cast<int>(rws.size());
    t.cols = t.rows ? static_cast<int>(rws[0].size()) : 0;
    t.t = std::move(rws);
    return t;
}

RectTableau RectTableau::highest(const Subset& I, int d) {
    RectTableau t;
    t.rows = static_cast<int>(I.size());
    t.cols = d;
    for (int x : I) t.t.push_back(std::vector<int>(static_cast<size_t>(d), x));
    return t;
}

RectTableau promote(const RectTableau& T, int n) {
    int k = T.rows, d = T.cols;
    const int HOLE = 0;
    std::vector<std::vector<int>> g = T.t;
    std::vector<std::pair<int, int>> holes;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < d; ++c)
            if (g[static_cast<size_t>(r)][static_cast<size_t>(c)] == n) {
                g[static_cast<size_t>(r)][static_cast<size_t>(c)] = HOLE;
                holes.emplace_back(r, c);
            }
    auto filled = [&](int r, int c) {
        return r >= 0 && c >= 0 && g[static_cast<size_t>(r)][static_cast<size_t>(c)] != HOLE;
    };
    // repeatedly slide a hole whose upper and left neighbors are filled
    std::vector<std::pair<int, int>> pending = holes;
    while (!pending.empty()) {
        size_t pick = pending.size();
        for (size_t i = 0; i < pending.size(); ++i) {
            auto [r, c] = pending[i];
            bool up_hole = r > 0 && !filled(r - 1, c);
            bool left_hole = c > 0 && !filled(r, c - 1);
            if (!up_hole && !left_hole) {
                pick = i;
                break;
            }
        }
        if (pick == pending.size()) throw std::logic_error("promotion: no slidable hole");
        auto [r, c] = pending[pick];
        pending.erase(pending.begin() + static_cast<long>(pick));
        while (true) {
            bool has_up = filled(r - 1, c), has_left = filled(r, c - 1);
            if (!has_up && !has_left) break;
            // move the larger neighbor in; ties resolve upward to keep the
            // columns strict
            if (has_up && (!has_left || g[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >=
                                            g[static_cast<size_t>(r)][static_cast<size_t>(c - 1)])) {
                g[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    g[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
                g[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] = HOLE;
                --r;
            } else {
                g[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    g[static_cast<size_t>(r)][static_cast<size_t>(c - 1)];
                g[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] = HOLE;
                --c;
            }
        }
    }
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < d; ++c) {
            int& v = g[static_cast<size_t>(r)][static_cast<size_t>(c)];
            v = v == HOLE ? 1 : v + 1;
        }
    RectTableau out = RectTableau::of_rows(std::move(g));
    if (!out.semistandard()) throw std::logic_error("promotion: result not semistandard");
    return out;
}

RectTableau promote_inverse(const RectTableau& T, int n) {
    RectTableau cur = T;
    for (int i = 0; i < n - 1; ++i) cur = promote(cur, n);
    return cur;
}

std::vector<RectTableau> all_rect_tableaux(int k, int d, int n) {
    std::vector<Subset> cols = all_subsets(n, k);
    std::vector<RectTableau> out;
    std::vector<const Subset*> chosen;
    std::function<void(size_t)> rec = [&](size_t depth) {
        if (depth == static_cast<size_t>(d)) {
            RectTableau t;
            t.rows = k;
            t.cols = d;
            t.t.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(d)));
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < k; ++r)
                    t.t[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                        (*chosen[static_cast<size_t>(c)])[static_cast<size_t>(r)];
            out.push_back(std::move(t));
            return;
        }
        for (const Subset& s : cols) {
            if (!chosen.empty() && !leq_entrywise(*chosen.back(), s)) continue;
            chosen.push_back(&s);
            rec(depth + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RectTableau> demazure_crystal(const Subset& I, int d, int n) {
    RectTableau lo = RectTableau::highest(I, d);
    std::vector<RectTableau> out;
    for (const RectTableau& t : all_rect_tableaux(static_cast<int>(I.size()), d, n)) {
        bool ok = true;
        for (int r = 0; r < t.rows && ok; ++r)
            for (int c = 0; c < t.cols && ok; ++c) ok = t.at(r, c) >= lo.at(r, c);
        if (ok) out.push_back(t);
    }
    return out;
}

std::vector<RectTableau> cyclic_demazure(const Baff& f, int d) {
    int n = f.n(), k = f.k();
    GrassmannNecklace nec = necklace_of(f);
    std::vector<RectTableau> out;
    for (const RectTableau& t : all_rect_tableaux(k, d, n)) {
        // chi^{-(a-1)}(T) must lie in B_{chi^{1-a}(I_a)}
        RectTableau rot = t;
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a) {
            Subset Ia = rotate_subset(nec.subsets[static_cast<size_t>(a - 1)], a, n);
            RectTableau lo = RectTableau::highest(Ia, d);
            for (int r = 0; r < k && ok; ++r)
                for (int c = 0; c < d && ok; ++c) ok = rot.at(r, c) >= lo.at(r, c);
            if (a < n) rot = promote_inverse(rot, n);
        }
        if (ok) out.push_back(t);
    }
    return out;
}

MPoly crystal_character(const std::vector<RectTableau>& S, int n) {
    std::vector<Var> xs;
    for (int i = 1; i <= n; ++i) xs.emplace_back("x" + std::to_string(i));
    MPoly total;
    for (const RectTableau& t : S) {
        MPoly term(Rat(1));
        for (const auto& row : t.t)
            for (int v : row) term *= MPoly::variable(xs[static_cast<size_t>(v - 1)]);
        total += term;
    }
    return total;
}

RectTableau theta(const NonCrossingPairing& p) {
    Subset c1 = p.T, c2 = p.T;
    for (auto [a, b] : p.arcs) {
        if (a >= b) throw InvalidPairing();
        c1 = set_plus(c1, a);
        c2 = set_plus(c2, b);
    }
    if (!arcs_noncrossing(p.arcs)) throw InvalidPairing();
    RectTableau t;
    t.rows = static_cast<int>(c1.size());
    t.cols = 2;
    for (size_t r = 0; r < c1.size(); ++r) t.t.push_back({c1[r], c2[r]});
    if (!t.semistandard()) throw InvalidPairing();
    return t;
}

NonCrossingPairing theta_inverse(const RectTableau& T, int n) {
    if (T.cols != 2) throw std::invalid_argument("theta_inverse: need two columns");
    Subset c1 = T.column(0), c2 = T.column(1);
    NonCrossingPairing p;
    p.n = n;
    p.k = T.rows;
    for (int x : c1)
        if (contains(c2, x)) p.T.push_back(x);
    // match openers (first column only) with closers scanning left to right
    std::vector<int> stack;
    for (int x = 1; x <= n; ++x) {
        bool in1 = contains(c1, x) && !contains(p.T, x);
        bool in2 = contains(c2, x) && !contains(p.T, x);
        if (in1) stack.push_back(x);
        if (in2) {
            if (stack.empty()) throw InvalidPairing();
            p.arcs.emplace_back(stack.back(), x);
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw InvalidPairing();
    std::sort(p.arcs.begin(), p.arcs.end());
    return p;
}

}  // namespace positroid
