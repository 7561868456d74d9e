#include "positroid/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace positroid {

namespace {

bool is_rat_literal(const std::string& s) {
    bool digit = false;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (isdigit(static_cast<unsigned char>(c))) digit = true;
        else if (c == '-' && i == 0) continue;
        else if (c == '/') continue;
        else return false;
    }
    return digit;
}

template <typename K>
void build(PlanarNetwork<K>& g, int n,
           const std::vector<std::tuple<int, std::string>>& vlines,
           const std::vector<std::tuple<int, int, int, std::string>>& elines,
           const std::vector<std::pair<int, std::vector<int>>>& rlines,
           const std::function<K(const std::string&)>& weight_of, bool validate) {
    g.n = n;
    int maxid = -1;
    for (auto& [id, kind] : vlines) maxid = std::max(maxid, id);
    g.verts.resize(static_cast<size_t>(maxid + 1));
    for (auto& v : g.verts) v.alive = false;
    for (auto& [id, kind] : vlines) {
        auto& v = g.verts[static_cast<size_t>(id)];
        v.alive = true;
        if (kind.rfind("boundary:", 0) == 0) {
            v.boundary = true;
            v.label = std::stoi(kind.substr(9));
        } else if (kind == "black") {
            v.color = Color::Black;
        } else if (kind == "white") {
            v.color = Color::White;
        } else {
            throw std::invalid_argument("network file: bad vertex kind " + kind);
        }
    }
    int maxe = -1;
    for (auto& [id, u, v, w] : elines) maxe = std::max(maxe, id);
    g.edges.resize(static_cast<size_t>(maxe + 1));
    for (auto& e : g.edges) e.alive = false;
    for (auto& [id, u, v, w] : elines) {
        auto& e = g.edges[static_cast<size_t>(id)];
        e.u = u;
        e.v = v;
        e.weight = weight_of(w);
        e.alive = true;
    }
    for (auto& [v, rot] : rlines) g.verts[static_cast<size_t>(v)].rot = rot;
    if (validate) {
        g.validate();
    } else {
        // no embedding: synthesize incidence lists where rot lines are absent
        for (size_t v = 0; v < g.verts.size(); ++v) {
            if (!g.verts[v].alive || !g.verts[v].rot.empty()) continue;
            for (size_t e = 0; e < g.edges.size(); ++e)
                if (g.edges[e].alive &&
                    (g.edges[e].u == static_cast<int>(v) || g.edges[e].v == static_cast<int>(v)))
                    g.verts[v].rot.push_back(static_cast<int>(e));
        }
    }
}

}  // namespace

NetworkFile read_network(std::istream& in) {
    std::string line;
    int n = -1;
    bool nonplanar = false;
    std::vector<std::tuple<int, std::string>> vlines;
    std::vector<std::tuple<int, int, int, std::string>> elines;
    std::vector<std::pair<int, std::vector<int>>> rlines;
    bool symbolic = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "#") continue;
        if (n < 0) {
            n = std::stoi(tok);
            std::string extra;
            while (ls >> extra)
                if (extra == "nonplanar") nonplanar = true;
            continue;
        }
        if (tok == "v") {
            int id;
            std::string kind;
            ls >> id >> kind;
            vlines.emplace_back(id, kind);
        } else if (tok == "e") {
            int id, u, v;
            std::string w;
            ls >> id >> u >> v >> w;
            if (!is_rat_literal(w)) symbolic = true;
            elines.emplace_back(id, u, v, w);
        } else if (tok == "rot") {
            int v;
            ls >> v;
            std::vector<int> rot;
            int e;
            while (ls >> e) rot.push_back(e);
            rlines.emplace_back(v, rot);
        } else {
            throw std::invalid_argument("network file: unknown line " + line);
        }
    }
    if (n < 0) throw std::invalid_argument("network file: missing header");
    NetworkFile out;
    out.symbolic = symbolic;
    out.nonplanar = nonplanar;
    if (symbolic) {
        build<RatFunc>(
            out.sym, n, vlines, elines, rlines,
            [](const std::string& w) {
                if (is_rat_literal(w)) return RatFunc(parse_rat(w));
                return RatFunc::variable(Var(w));
            },
            !nonplanar);
    } else {
        build<Rat>(
            out.numeric, n, vlines, elines, rlines,
            [](const std::string& w) { return parse_rat(w); }, !nonplanar);
    }
    return out;
}

NetworkFile read_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_network(in);
}

namespace {

std::string weight_str(const Rat& w) { return rat_str(w); }
std::string weight_str(const RatFunc& w) {
    if (w.is_constant()) return rat_str(w.constant_value());
    // single-variable weights round-trip by name
    if (w.den() == MPoly(Rat(1)) && w.num().terms().size() == 1) {
        auto& [mono, coeff] = *w.num().terms().begin();
        if (coeff == Rat(1) && mono.size() == 1 && mono[0].second == 1)
            return VarTable::instance().name(mono[0].first);
    }
    return w.str();
}

template <typename K>
std::string write_impl(const PlanarNetwork<K>& g, int k) {
    std::ostringstream os;
    os << g.n;
    if (k >= 0) os << " " << k;
    os << "\n";
    for (size_t i = 0; i < g.verts.size(); ++i) {
        const auto& v = g.verts[i];
        if (!v.alive) continue;
        os << "v " << i << " ";
        if (v.boundary)
            os << "boundary:" << v.label;
        else
            os << (v.color == Color::Black ? "black" : "white");
        os << "\n";
    }
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (!e.alive) continue;
        os << "e " << i << " " << e.u << " " << e.v << " " << weight_str(e.weight) << "\n";
    }
    for (size_t i = 0; i < g.verts.size(); ++i) {
        const auto& v = g.verts[i];
        if (!v.alive || v.rot.empty()) continue;
        os << "rot " << i;
        for (int e : v.rot) os << " " << e;
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string write_network(const PlanarNetwork<Rat>& g, int k) { return write_impl(g, k); }
std::string write_network(const PlanarNetwork<RatFunc>& g, int k) { return write_impl(g, k); }

template <typename K>
PlanarNetwork<RatFunc> symbolize(const PlanarNetwork<K>& g) {
    PlanarNetwork<RatFunc> out;
    out.n = g.n;
    for (const auto& v : g.verts) {
        PlanarNetwork<RatFunc>::Vertex w;
        w.boundary = v.boundary;
        w.label = v.label;
        w.color = v.color;
        w.rot = v.rot;
        w.alive = v.alive;
        out.verts.push_back(w);
    }
    for (const auto& e : g.edges) {
        PlanarNetwork<RatFunc>::Edge ed;
        ed.u = e.u;
        ed.v = e.v;
        ed.weight = RatFunc(Rat(1)) * RatFunc(e.weight);
        ed.alive = e.alive;
        out.edges.push_back(ed);
    }
    return out;
}

template PlanarNetwork<RatFunc> symbolize<Rat>(const PlanarNetwork<Rat>&);

}  // namespace positroid
