#include "nac/sat_reduction.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace nac {

void CnfFormula::validate() const {
    if (variable_count < 0)
        throw ContractError("negative variable count");
    for (const auto& c : clauses)
        for (const auto& l : c)
            if (l.var < 1 || l.var > variable_count)
                throw ContractError("literal refers to variable " + std::to_string(l.var) + " outside 1.." +
                                    std::to_string(variable_count));
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    if (static_cast<int>(assignment.size()) != variable_count)
        throw ContractError("assignment size does not match variable count");
    for (const auto& c : clauses) {
        bool sat = false;
        for (const auto& l : c)
            sat = sat || (assignment[static_cast<std::size_t>(l.var - 1)] != l.negated);
        if (!sat)
            return false;
    }
    return true;
}

CnfFormula parse_dimacs(std::string_view text, bool pad_clauses) {
    CnfFormula f;
    bool header = false;
    long long declared = 0;
    std::vector<Literal> current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool stop = false;

    auto finish_clause = [&](std::size_t line) {
        if (current.empty())
            throw ParseError("empty clause at line " + std::to_string(line), line);
        if (current.size() > 3)
            throw ParseError("clause with " + std::to_string(current.size()) + " literals at line " +
                                 std::to_string(line) + "; only 3-CNF is supported",
                             line);
        if (current.size() < 3 && !pad_clauses)
            throw ParseError("clause with " + std::to_string(current.size()) + " literals at line " +
                                 std::to_string(line) + "; use padding to accept short clauses",
                             line);
        while (current.size() < 3)
            current.push_back(current.back());
        f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
    };

    while (pos <= text.size() && !stop) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok))
            continue;
        if (tok[0] == 'c')
            continue;
        if (tok == "%") {
            stop = true;
            break;
        }
        if (tok == "p") {
            if (header)
                throw ParseError("duplicate problem line at line " + std::to_string(line_no), line_no);
            std::string fmt;
            long long n = -1, k = -1;
            if (!(in >> fmt >> n >> k) || fmt != "cnf" || n < 0 || k < 0)
                throw ParseError("malformed problem line at line " + std::to_string(line_no), line_no);
            f.variable_count = static_cast<int>(n);
            declared = k;
            header = true;
            continue;
        }
        if (!header)
            throw ParseError("clause before problem line at line " + std::to_string(line_no), line_no);
        do {
            char* stop_ptr = nullptr;
            const long long lit = std::strtoll(tok.c_str(), &stop_ptr, 10);
            if (stop_ptr == tok.c_str() || *stop_ptr != '\0')
                throw ParseError("invalid literal '" + tok + "' at line " + std::to_string(line_no), line_no);
            if (lit == 0) {
                finish_clause(line_no);
                continue;
            }
            const long long var = std::llabs(lit);
            if (var > f.variable_count)
                throw ParseError("literal " + tok + " exceeds declared variable count at line " + std::to_string(line_no),
                                 line_no);
            current.push_back({static_cast<int>(var), lit < 0});
        } while (in >> tok);
    }
    if (!header)
        throw ParseError("missing problem line", line_no);
    if (!current.empty())
        finish_clause(line_no);
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw ParseError("problem line declares " + std::to_string(declared) + " clauses but " +
                             std::to_string(f.clauses.size()) + " were read",
                         line_no);
    return f;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (const auto& l : c)
            out << (l.negated ? -l.var : l.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

std::optional<std::vector<bool>> solve_brute_force(const CnfFormula& f) {
    f.validate();
    if (f.variable_count > 20)
        throw OracleLimitError("SAT brute force is limited to 20 variables, got " + std::to_string(f.variable_count));
    const std::uint32_t total = 1U << f.variable_count;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (const auto& l : c)
                sat = sat || ((((mask >> (l.var - 1)) & 1U) != 0) != l.negated);
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> a(static_cast<std::size_t>(f.variable_count));
            for (int i = 0; i < f.variable_count; ++i)
                a[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
            return a;
        }
    }
    return std::nullopt;
}

bool sat_brute_force(const CnfFormula& f) { return solve_brute_force(f).has_value(); }

std::string EdgeLabel::name() const {
    switch (kind) {
    case True:
        return "t";
    case False:
        return "f";
    case Positive:
        return "x" + std::to_string(var);
    case Negative:
        return "~x" + std::to_string(var);
    }
    return "?";
}

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;

struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels;
    std::vector<int> degree;

    int vertex() {
        degree.push_back(0);
        return n++;
    }
    void edge(int u, int v, int label) {
        edges.emplace_back(u, v);
        labels.push_back(label);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
};

// Braced ladder with three columns per attachment slot. Slot s offers the top
// edge (top[3s+1], top[3s+2]).
struct Train {
    int label = 0;
    std::vector<int> top, bottom;
    int next_slot = 0;

    Train(Builder& b, int label_, int slots) : label(label_) {
        const int cols = 3 * slots + 1;
        for (int j = 0; j < cols; ++j) {
            top.push_back(b.vertex());
            bottom.push_back(b.vertex());
        }
        for (int j = 0; j < cols; ++j) {
            b.edge(top[j], bottom[j], label);
            if (j + 1 < cols) {
                b.edge(top[j], top[j + 1], label);
                b.edge(bottom[j], bottom[j + 1], label);
                // diagonals alternate so every column stays at degree <= 5
                if (j % 3 == 2)
                    b.edge(bottom[j], top[j + 1], label);
                else
                    b.edge(top[j], bottom[j + 1], label);
            }
        }
    }
};

// Named vertices of one gadget instance.
struct Local {
    Builder& b;
    std::map<std::string, int, std::less<>> ids;

    int operator()(std::string_view name) {
        auto it = ids.find(name);
        if (it != ids.end())
            return it->second;
        const int v = b.vertex();
        ids.emplace(std::string(name), v);
        return v;
    }
    // spec: space separated "a-b" pairs
    void edges(std::string_view spec, int label) {
        std::istringstream in{std::string(spec)};
        std::string tok;
        while (in >> tok) {
            const auto dash = tok.find('-');
            b.edge((*this)(tok.substr(0, dash)), (*this)(tok.substr(dash + 1)), label);
        }
    }
    // Attach the end rung (a, b) to the next free slot of `t` with a braced square.
    void glue(std::string_view an, std::string_view bn, Train& t) {
        int a = (*this)(an), c = (*this)(bn);
        if (b.degree[static_cast<std::size_t>(c)] < b.degree[static_cast<std::size_t>(a)])
            std::swap(a, c);
        const int s = t.next_slot++;
        if (3 * s + 2 >= static_cast<int>(t.top.size()))
            throw std::logic_error("train has no free attachment slot");
        const int p = t.top[static_cast<std::size_t>(3 * s + 1)];
        const int q = t.top[static_cast<std::size_t>(3 * s + 2)];
        b.edge(p, a, t.label);
        b.edge(q, c, t.label);
        b.edge(q, a, t.label);
    }
    std::vector<std::pair<int, int>> cycle(std::string_view spec) {
        std::istringstream in{std::string(spec)};
        std::vector<int> vs;
        std::string tok;
        while (in >> tok)
            vs.push_back((*this)(tok));
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < vs.size(); ++i)
            out.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
        return out;
    }
};

void add_literal_part(Local& L, char j, int label, Train& t_train, Train& lit_train) {
    // j selects one of the three geometric placements around the clause cycle
    auto P = [&](std::string s) {
        for (auto& ch : s)
            if (ch == '#')
                ch = j;
        return s;
    };
    static const char* gadget[] = {
        "35-46 46-57 57-37 36-37 46-37 37-27 36-26 37-26 35-36 46-36 27-26 26-p#m1 27-p#m1",
        "75-66 66-57 57-77 76-77 66-77 77-87 76-86 77-86 75-76 66-76 87-86 86-p#m1 87-p#m1",
        "75-64 64-53 53-73 74-73 64-73 73-83 74-84 73-84 75-74 64-74 83-84 84-p#m1 83-p#m1",
    };
    static const char* rungs[] = {"26-16 27-17", "86-96 87-97", "84-94 83-93"};
    static const char* train_side[] = {
        "16-p#m2 17-p#m2 16-17 06-07 16-06 17-07 16-07",
        "96-p#m2 97-p#m2 96-97 A6-A7 96-A6 97-A7 96-A7",
        "94-p#m2 93-p#m2 94-93 A4-A3 94-A4 93-A3 94-A3",
    };
    static const char* ends[][2] = {{"06", "07"}, {"A6", "A7"}, {"A4", "A3"}};
    const int k = j - '1';
    L.edges(P(gadget[k]), label);
    L.edges(rungs[k], kTrue);
    L.edges(P("p#m1-p#m2 p#t1-p#t2 p#m1-p#t1 p#m2-p#t2 p#m1-p#t2"), kTrue);
    L.edges(P(train_side[k]), label);
    L.glue(P("p#t1"), P("p#t2"), t_train);
    L.glue(ends[k][0], ends[k][1], lit_train);
}

EdgeSet cycle_set(const Graph& g, const std::vector<std::pair<int, int>>& cyc) {
    EdgeSet s = g.empty_edge_set();
    for (auto [u, v] : cyc) {
        const int e = g.edge_index(u, v);
        if (e < 0)
            throw std::logic_error("gadget cycle uses a missing edge");
        s.set(static_cast<std::size_t>(e));
    }
    return s;
}

}  // namespace

ReductionArtifact build_reduction(const CnfFormula& f) {
    f.validate();
    const int n = f.variable_count;
    const int label_count = 2 * n + 2;

    std::vector<int> demand(static_cast<std::size_t>(label_count), 0);
    demand[kTrue] = 2 * n + 4 * static_cast<int>(f.clauses.size());
    demand[kFalse] = n;
    for (int i = 1; i <= n; ++i) {
        demand[static_cast<std::size_t>(2 * i)] += 2;
        demand[static_cast<std::size_t>(2 * i + 1)] += 2;
    }
    for (const auto& c : f.clauses)
        for (const auto& l : c)
            ++demand[static_cast<std::size_t>(ReductionArtifact::label_index(l))];

    Builder b;
    std::vector<Train> trains;
    trains.reserve(static_cast<std::size_t>(label_count));
    for (int l = 0; l < label_count; ++l)
        trains.emplace_back(b, l, demand[static_cast<std::size_t>(l)]);

    std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> cycles;

    for (int i = 1; i <= n; ++i) {
        const int x = 2 * i, nx = 2 * i + 1;
        Train& tx = trains[static_cast<std::size_t>(x)];
        Train& tnx = trains[static_cast<std::size_t>(nx)];

        Local A{b, {}};
        A.edges("32-42 33-43 32-33 32-43 22-32 23-33 22-23 22-33 32-S 42-S 33-44 43-44 42-43", x);
        A.edges("52-62 53-63 62-63 53-62 62-72 63-73 72-73 63-72 62-S 52-S 63-54 53-54 52-53", nx);
        A.edges("44-45 54-55 44-55 45-46 55-56 45-56 44-54 45-55 46-56", kTrue);
        A.glue("22", "23", tx);
        A.glue("72", "73", tnx);
        A.glue("46", "56", trains[kTrue]);
        cycles.emplace_back("A" + std::to_string(i), A.cycle("S 42 43 44 54 53 52"));

        Local B{b, {}};
        B.edges("33-34", x);
        B.edges("34-44", kTrue);
        B.edges("43-44", nx);
        B.edges("33-43", kFalse);
        B.edges("23-33 24-34 23-24 23-34 13-23 14-24 13-14 13-24", x);
        B.edges("43-53 44-54 53-54 43-54 53-63 54-64 63-64 53-64", nx);
        B.edges("34-35 44-45 35-45 35-44 35-36 45-46 36-46 36-45", kTrue);
        B.edges("32-33 42-43 32-42 33-42 31-32 41-42 31-41 32-41", kFalse);
        B.glue("13", "14", tx);
        B.glue("63", "64", tnx);
        B.glue("36", "46", trains[kTrue]);
        B.glue("31", "41", trains[kFalse]);
        cycles.emplace_back("B" + std::to_string(i), B.cycle("33 34 44 43"));
    }

    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        const auto& c = f.clauses[ci];
        Local C{b, {}};
        C.edges("14-24 15-25 14-15 24-25 14-25 53-35 53-24 35-25 35-24", kTrue);
        C.glue("14", "15", trains[kTrue]);
        for (int j = 0; j < 3; ++j) {
            const int lab = ReductionArtifact::label_index(c[static_cast<std::size_t>(j)]);
            add_literal_part(C, static_cast<char>('1' + j), lab, trains[kTrue], trains[static_cast<std::size_t>(lab)]);
        }
        cycles.emplace_back("C" + std::to_string(ci + 1), C.cycle("35 53 64 75 66 57 46"));
    }

    ReductionArtifact r;
    r.formula = f;
    r.graph = Graph(b.n, b.edges);
    r.edge_label = b.labels;
    r.labels.push_back({EdgeLabel::True, 0});
    r.labels.push_back({EdgeLabel::False, 0});
    for (int i = 1; i <= n; ++i) {
        r.labels.push_back({EdgeLabel::Positive, i});
        r.labels.push_back({EdgeLabel::Negative, i});
    }
    for (const auto& t : trains) {
        if (t.next_slot != demand[static_cast<std::size_t>(t.label)])
            throw std::logic_error("train slot demand mismatch");
        r.train_anchor.push_back(r.graph.edge_index(t.top[0], t.bottom[0]));
    }
    for (const auto& [name, cyc] : cycles)
        r.gadgets.push_back({name, cycle_set(r.graph, cyc)});
    if (r.graph.max_degree() != 5)
        throw std::logic_error("reduction graph must have maximum degree 5, got " +
                               std::to_string(r.graph.max_degree()));
    return r;
}

std::int64_t density_column_count(std::int64_t vertices, std::int64_t num, std::int64_t den) {
    if (num <= 0 || den <= 0 || 2 * num >= den)
        throw ContractError("epsilon must lie strictly between 0 and 1/2");
    const std::int64_t top = vertices * (den - 2 * num);
    const std::int64_t bottom = 4 * num;
    return (top + bottom - 1) / bottom;
}

ReductionArtifact extend_for_density(const ReductionArtifact& r, std::int64_t num, std::int64_t den) {
    const std::int64_t k = density_column_count(r.graph.vertex_count(), num, den);
    const Graph& g = r.graph;

    // the first square of the t train: rung (t0, b0), next rung (t1, b1), diagonal t0-b1
    const Edge anchor = g.edge(r.train_anchor[kTrue]);
    int t0 = anchor.u, b0 = anchor.v;
    if (g.degree(b0) != 2)
        std::swap(t0, b0);
    if (g.degree(b0) != 2 || g.degree(t0) != 3)
        throw std::logic_error("t train does not start with a braced square");
    const int b1 = g.neighbors(b0)[0] == t0 ? g.neighbors(b0)[1] : g.neighbors(b0)[0];
    int t1 = -1;
    for (int w : g.neighbors(t0))
        if (w != b0 && w != b1)
            t1 = w;
    if (t1 < 0 || !g.adjacent(t1, b1))
        throw std::logic_error("t train does not start with a braced square");

    const std::pair<int, int> removed[] = {{t0, t1}, {b0, b1}, {t0, b1}};
    EdgeSet drop = g.empty_edge_set();
    for (auto [u, v] : removed)
        drop.set(static_cast<std::size_t>(g.edge_index(u, v)));

    Builder b;
    for (int v = 0; v < g.vertex_count(); ++v)
        b.vertex();
    std::vector<int> new_index(static_cast<std::size_t>(g.edge_count()), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (drop.test(static_cast<std::size_t>(e)))
            continue;
        new_index[static_cast<std::size_t>(e)] = static_cast<int>(b.edges.size());
        b.edge(g.edge(e).u, g.edge(e).v, r.edge_label[static_cast<std::size_t>(e)]);
    }
    int lt = t0, lb = b0;
    for (std::int64_t i = 0; i < k; ++i) {
        const int nt = b.vertex(), nb = b.vertex();
        b.edge(lt, nt, kTrue);
        b.edge(lb, nb, kTrue);
        b.edge(nt, nb, kTrue);
        b.edge(lt, nb, kTrue);
        lt = nt;
        lb = nb;
    }
    b.edge(lt, t1, kTrue);
    b.edge(lb, b1, kTrue);
    b.edge(lt, b1, kTrue);

    ReductionArtifact out;
    out.formula = r.formula;
    out.labels = r.labels;
    out.graph = Graph(b.n, b.edges);
    out.edge_label = b.labels;
    for (int a : r.train_anchor)
        out.train_anchor.push_back(new_index[static_cast<std::size_t>(a)]);
    for (const auto& gr : r.gadgets) {
        EdgeSet s = out.graph.empty_edge_set();
        gr.cycle.for_each([&](std::size_t e) { s.set(static_cast<std::size_t>(new_index[e])); });
        out.gadgets.push_back({gr.name, s});
    }
    out.density_units = r.density_units + static_cast<int>(k);

    const std::int64_t E = out.graph.edge_count(), V = out.graph.vertex_count();
    if (E * den > (2 * den + num) * V)
        throw std::logic_error("density bound not reached after extension");
    return out;
}

std::vector<bool> decode_assignment(const ReductionArtifact& r, const NacColoring& c) {
    const auto m = static_cast<std::size_t>(r.graph.edge_count());
    if (c.red.size() != m || c.blue.size() != m)
        throw ContractError("coloring does not match the reduction graph");
    // blue(e) after normalizing the t train to blue
    const bool flip = c.red.test(static_cast<std::size_t>(r.train_anchor[kTrue]));
    auto blue = [&](int e) { return c.blue.test(static_cast<std::size_t>(e)) != flip; };

    std::vector<bool> label_blue;
    for (int a : r.train_anchor)
        label_blue.push_back(blue(a));
    for (std::size_t e = 0; e < m; ++e)
        if (blue(static_cast<int>(e)) != label_blue[static_cast<std::size_t>(r.edge_label[e])])
            throw ConsistencyError("edge " + std::to_string(e) + " differs in color from its label " +
                                   r.labels[static_cast<std::size_t>(r.edge_label[e])].name());
    if (label_blue[kFalse])
        throw ConsistencyError("t and f trains share a color");

    const int n = r.formula.variable_count;
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const bool x = label_blue[static_cast<std::size_t>(2 * i)];
        if (x == label_blue[static_cast<std::size_t>(2 * i + 1)])
            throw ConsistencyError("x" + std::to_string(i) + " and its negation share a color");
        a[static_cast<std::size_t>(i - 1)] = x;
    }
    if (!r.formula.satisfied_by(a))
        throw ConsistencyError("decoded assignment does not satisfy the formula");
    return a;
}

}  // namespace nac
