// positroid: exact combinatorics of the totally nonnegative Grassmannian.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "positroid/acceptance.hpp"
#include "positroid/forms.hpp"
#include "positroid/io.hpp"
#include "positroid/polytope.hpp"
#include "positroid/reduction.hpp"
#include "positroid/relspace.hpp"
#include "positroid/symfun.hpp"
#include "positroid/tableaux.hpp"
#include "positroid/tl.hpp"

using namespace positroid;

namespace {

Mat<Rat> read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::vector<std::vector<Rat>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rat(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix file");
    Mat<Rat> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("ragged matrix file");
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

std::string matrix_str(const Mat<Rat>& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << rat_str(m.at(i, j));
        os << "\n";
    }
    return os.str();
}

Subset parse_subset(const std::string& s) {
    Subset out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rat> parse_values(const std::vector<std::string>& raw) {
    std::vector<Rat> out;
    for (const auto& s : raw) out.push_back(parse_rat(s));
    return out;
}

RectTableau read_tableau(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int x;
        while (ls >> x) row.push_back(x);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return RectTableau::of_rows(std::move(rows));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positroid combinatorics of the totally nonnegative Grassmannian"};
    app.require_subcommand(1);
    std::uint64_t seed = 20260808ULL;
    int threads = 1;
    app.add_option("--seed", seed, "seed for all randomized subcommands");
    app.add_option("--threads", threads, "worker threads for Monte-Carlo loops");

    std::string file, window, necklace_str, arcs_str, tset_str, subset_str_opt;
    int d = 2, r = 0, nn = 6, kk = 1, samples = 10000;
    std::vector<std::string> values;
    int glue_a = 1, glue_b = 2;

    auto* c_measure = app.add_subcommand("measure", "boundary measurements of a network file");
    c_measure->add_option("file", file)->required();

    auto* c_fact = app.add_subcommand("factorize", "factor a TNN matrix into a network");
    c_fact->add_option("matrix", file)->required();

    auto* c_par = app.add_subcommand("parametrize", "matrix point of a cell chart");
    c_par->add_option("window", window)->required();
    c_par->add_option("values", values);

    auto* c_neck = app.add_subcommand("necklace", "Grassmann necklace of a window");
    c_neck->add_option("window", window)->required();

    auto* c_perm = app.add_subcommand("perm", "window of a Grassmann necklace");
    c_perm->add_option("necklace", necklace_str)->required();

    auto* c_pos = app.add_subcommand("positroid", "bases of the positroid of a window");
    c_pos->add_option("window", window)->required();

    auto* c_stan = app.add_subcommand("stanley", "affine Stanley symmetric function");
    c_stan->add_option("window", window)->required();

    auto* c_class = app.add_subcommand("class", "cohomology class of the positroid variety");
    c_class->add_option("window", window)->required();

    auto* c_trunc = app.add_subcommand("truncate", "truncated class in H*(Gr(k,r))");
    c_trunc->add_option("window", window)->required();
    c_trunc->add_option("r", r)->required();

    auto* c_bcfw = app.add_subcommand("bcfw", "BCFW cell collection C(k,n)");
    c_bcfw->add_option("k", kk)->required();
    c_bcfw->add_option("n", nn)->required();

    auto* c_tri = app.add_subcommand("triangulate-check", "k=1 triangulation certificate");
    c_tri->add_option("--n", nn)->required();
    c_tri->add_option("--samples", samples);

    auto* c_rel = app.add_subcommand("relspace", "relation space of a network file");
    c_rel->add_option("file", file)->required();

    auto* c_signs = app.add_subcommand("signs", "sign vector of a planar network file");
    c_signs->add_option("file", file)->required();

    auto* c_form = app.add_subcommand("form-density", "canonical form density of a cell chart");
    c_form->add_option("window", window)->required();

    auto* c_res = app.add_subcommand("residue-check", "residues against all covers of a cell");
    c_res->add_option("window", window)->required();
    c_res->add_option("--samples", samples);

    auto* c_prom = app.add_subcommand("promote", "promotion of a rectangular tableau (stdin)");
    c_prom->add_option("--n", nn)->required();

    auto* c_cry = app.add_subcommand("crystal", "cyclic Demazure crystal of a cell");
    c_cry->add_option("window", window)->required();
    c_cry->add_option("--d", d);

    auto* c_imm = app.add_subcommand("immanant", "Temperley-Lieb immanant of a network file");
    c_imm->add_option("file", file)->required();
    c_imm->add_option("--arcs", arcs_str, "e.g. \"(1,6)(2,3)\"");
    c_imm->add_option("--T", tset_str, "comma list");

    auto* c_glue = app.add_subcommand("glue", "glue two boundary vertices of a relation space");
    c_glue->add_option("file", file)->required();
    c_glue->add_option("a", glue_a)->required();
    c_glue->add_option("b", glue_b)->required();

    auto* c_probe = app.add_subcommand("sign-probe", "facet sign probe of Delta(Y, Z_I)");
    c_probe->add_option("--I", subset_str_opt)->required();
    c_probe->add_option("--n", nn);
    c_probe->add_option("--k", kk);
    c_probe->add_option("--samples", samples);

    auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");

    // allow --seed/--threads after the subcommand name too
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*c_measure) {
            NetworkFile f = read_network_file(file);
            if (f.symbolic)
                std::cout << f.sym.boundary_measurements().str();
            else
                std::cout << f.numeric.boundary_measurements().str();
        } else if (*c_fact) {
            Mat<Rat> m = read_matrix(file);
            auto net = factorize(m);
            std::cout << write_network(net, m.rows);
        } else if (*c_par) {
            auto chart = graph_for(parse_window(window));
            std::cout << matrix_str(parametrize(chart, parse_values(values)));
        } else if (*c_neck) {
            std::cout << necklace_of(parse_window(window)).str() << "\n";
        } else if (*c_perm) {
            // parse "(13,23,34,46,56,16)" or comma-of-comma lists
            GrassmannNecklace nec;
            std::vector<Subset> subsets;
            std::string cur;
            for (char ch : necklace_str) {
                if (ch == '(' || ch == ' ') continue;
                if (ch == ',' || ch == ')') {
                    if (!cur.empty()) {
                        Subset s;
                        for (char digit : cur) s.push_back(digit - '0');
                        std::sort(s.begin(), s.end());
                        subsets.push_back(s);
                        cur.clear();
                    }
                } else {
                    cur += ch;
                }
            }
            nec.subsets = subsets;
            nec.n = static_cast<int>(subsets.size());
            nec.k = subsets.empty() ? 0 : static_cast<int>(subsets[0].size());
            std::cout << perm_of(nec).str() << "\n";
        } else if (*c_pos) {
            Baff f = parse_window(window);
            for (const Subset& b : positroid_of(f).bases)
                std::cout << subset_str(b, f.n()) << "\n";
        } else if (*c_stan) {
            std::cout << affine_stanley(parse_window(window)).str() << "\n";
        } else if (*c_class) {
            std::cout << positroid_class(parse_window(window)).str() << "\n";
        } else if (*c_trunc) {
            std::cout << truncate(positroid_class(parse_window(window)), r).str()
                      << "   (times 1/d_f with d_f unknown)\n";
        } else if (*c_bcfw) {
            auto c = bcfw_cells(kk, nn);
            for (const Baff& f : c.cells) std::cout << f.str() << "\n";
            std::cout << "count " << c.cells.size() << "\n";
        } else if (*c_tri) {
            Rng rng(seed);
            ZMap zm = sample_positive_z(nn, 5, 1, rng);
            auto rep = k1_triangulation_check(nn, zm.Z, samples, seed, threads);
            std::cout << rep.str() << "\n";
            if (!rep.clean()) return 1;
        } else if (*c_rel) {
            NetworkFile f = read_network_file(file);
            auto bic = f.symbolic ? bicolored_of_planar(f.sym)
                                  : bicolored_of_planar(symbolize(f.numeric));
            auto rel = relation_space(bic);
            if (!rel.defined()) {
                std::cout << "undefined (dimension != k_N = " << rel.kN << ")\n";
            } else {
                std::cout << rel.pluckers().str();
            }
        } else if (*c_signs) {
            NetworkFile f = read_network_file(file);
            if (f.symbolic) throw std::invalid_argument("signs needs a numeric network");
            auto eps = sign_vector(f.numeric);
            for (size_t e = 0; e < eps.size(); ++e)
                if (f.numeric.edges[e].alive)
                    std::cout << "edge " << e << " : " << (eps[e] > 0 ? "+1" : "-1") << "\n";
        } else if (*c_form) {
            Baff f = parse_window(window);
            auto chart = graph_for(f);
            auto fam = bridge_family(chart);
            Subset I;
            size_t idx = 0;
            for (const Subset& s : all_subsets(f.n(), f.k())) {
                if (ScalarOps<RatFunc>::nonzero(fam.v.coords[idx])) {
                    I = s;
                    break;
                }
                ++idx;
            }
            auto active = choose_active(fam, I);
            std::cout << "chart Omega_" << subset_str(I, f.n()) << "; coordinates";
            for (auto [rr, cc] : active) std::cout << " x[" << rr << "," << cc << "]";
            std::cout << "\n";
            if (fam.dim() == 0) {
                std::cout << "density = 1\n";
            } else {
                auto x = chart_matrix(fam.v, I);
                Mat<RatFunc> J(fam.dim(), fam.dim());
                for (size_t p = 0; p < active.size(); ++p)
                    for (size_t q = 0; q < fam.params.size(); ++q)
                        J.at(static_cast<int>(p), static_cast<int>(q)) =
                            x.at(active[p].first - 1, active[p].second - 1)
                                .partial(fam.params[q]);
                RatFunc dj = det_cofactor(J);
                RatFunc prod(Rat(1));
                for (Var v : fam.params) prod = prod * RatFunc::variable(v);
                RatFunc rho = RatFunc(Rat(1)) / (prod * dj);
                std::cout << "parameters";
                for (Var v : fam.params) std::cout << " " << v.name();
                std::cout << "\ndensity = " << rho.str() << "\n";
            }
        } else if (*c_res) {
            Baff f = parse_window(window);
            auto chart0 = graph_for(f);
            auto G = network_for(chart0, std::vector<Rat>(static_cast<size_t>(chart0.dim()), Rat(1)))
                         .m2_simplify();
            Rng rng(seed);
            for (const Baff& f2 : covers(f)) {
                int e = find_cover_edge(G, f2);
                if (e < 0) {
                    std::cout << "cover " << f2.str() << ": no deletable edge on this graph\n";
                    continue;
                }
                auto Gdel = delete_edge(G, e);
                auto ep = coordinate_edges(Gdel);
                auto fam_res = eprime_family(Gdel, ep, "clir_");
                auto chart2 = graph_for(f2);
                auto fam2 = bridge_family(chart2);
                Subset I;
                size_t idx = 0;
                for (const Subset& s : all_subsets(f.n(), f.k())) {
                    if (ScalarOps<RatFunc>::nonzero(fam2.v.coords[idx])) {
                        I = s;
                        break;
                    }
                    ++idx;
                }
                auto active = choose_active(fam2, I);
                int sign = 0, bad = 0;
                int npts = std::max(1, samples / 500);
                for (int t = 0; t < npts; ++t) {
                    std::vector<Rat> t0;
                    for (int i = 0; i < fam_res.dim(); ++i) t0.push_back(rng.positive_rat());
                    PlanarNetwork<Rat> num = Gdel;
                    for (auto& ed : num.edges) ed.weight = Rat(1);
                    for (size_t i = 0; i < ep.size(); ++i)
                        num.edges[static_cast<size_t>(ep[i])].weight = t0[i];
                    auto X0 = representative(num.boundary_measurements());
                    auto a0 = coordinates(chart2, X0);
                    Rat r1 = density_at(fam_res, I, active, t0);
                    Rat r2 = density_at(fam2, I, active, a0);
                    if (!(rat_abs(r1) == rat_abs(r2))) ++bad;
                    int s = sgn(r1) * sgn(r2);
                    if (sign == 0) sign = s;
                    if (s != sign) ++bad;
                }
                std::cout << "cover " << f2.str() << ": " << (bad == 0 ? "OK" : "MISMATCH")
                          << " over " << npts << " points\n";
                if (bad != 0) return 1;
            }
        } else if (*c_prom) {
            RectTableau t = read_tableau(std::cin);
            std::cout << promote(t, nn).str();
        } else if (*c_cry) {
            Baff f = parse_window(window);
            auto crystal = cyclic_demazure(f, d);
            for (const RectTableau& t : crystal) std::cout << t.str() << "\n";
            std::cout << "count " << crystal.size() << "\n";
            std::cout << "character " << crystal_character(crystal, f.n()).str() << "\n";
        } else if (*c_imm) {
            NetworkFile nf = read_network_file(file);
            NonCrossingPairing p;
            p.T = tset_str.empty() ? Subset{} : parse_subset(tset_str);
            // parse "(1,6)(2,3)"
            std::string cur;
            std::vector<int> nums;
            for (char ch : arcs_str) {
                if (isdigit(static_cast<unsigned char>(ch))) {
                    cur += ch;
                } else if (!cur.empty()) {
                    nums.push_back(std::stoi(cur));
                    cur.clear();
                }
            }
            if (!cur.empty()) nums.push_back(std::stoi(cur));
            for (size_t i = 0; i + 1 < nums.size(); i += 2)
                p.arcs.emplace_back(std::min(nums[i], nums[i + 1]), std::max(nums[i], nums[i + 1]));
            std::sort(p.arcs.begin(), p.arcs.end());
            if (nf.symbolic) {
                p.n = nf.sym.n;
                std::cout << immanant(nf.sym, p).str() << "\n";
            } else {
                p.n = nf.numeric.n;
                std::cout << rat_str(immanant(nf.numeric, p)) << "\n";
            }
        } else if (*c_glue) {
            NetworkFile nf = read_network_file(file);
            auto bic = nf.symbolic ? bicolored_of_planar(nf.sym)
                                   : bicolored_of_planar(symbolize(nf.numeric));
            auto rel = relation_space(bic);
            if (!rel.defined()) throw std::invalid_argument("relation space undefined");
            std::cout << glue_pluckers(rel, glue_a, glue_b).str();
        } else if (*c_probe) {
            Subset I = parse_subset(subset_str_opt);
            int m = static_cast<int>(I.size());
            Rng rng(seed);
            ZMap zm = sample_positive_z(nn, kk + m, kk, rng);
            auto rep = evenness_sign_probe(zm.Z, kk, I, samples, seed, threads);
            std::cout << "seed=" << seed << " evenness="
                      << (satisfies_evenness(I, nn) ? "yes" : "no") << " " << rep.str() << "\n";
        } else if (*c_self) {
            int fails = run_acceptance(std::cout, threads, seed);
            return fails == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
