#include <effint/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace effint;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct Options {
    int weight = 4;
    std::string format = "text";
    std::string basis = "words";
    int bound = 6;
    unsigned seed = kDefaultSeed;
    std::string structure;
    bool free_mode = false;
    std::string target;
    int vertices = 0;
    int bottom = 1;
    int top = 1;
    std::string g1 = "3; e(2,1), e(2,3)";
    std::string g2 = "2; e(1,2)";
    int at = 2;
};

int default_weight()
{
    if (const char* env = std::getenv("EFFINT_WEIGHT")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw PreconditionError(std::string("EFFINT_WEIGHT is not an integer: ") + env);
        }
    }
    return 4;
}

void require_weight(int N, int limit, const std::string& what)
{
    if (N < 1) throw PreconditionError("--weight must be at least 1");
    if (N > limit) throw BoundError(what + ": weight " + std::to_string(N) + " exceeds the bound " + std::to_string(limit));
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <BasisObject B>
void emit(const Series<B>& s, const Options& o, const std::string& label)
{
    std::cout << render(s, parse_format(o.format), label);
}

void emit_lyndon(const WordSeries& s, const Options& o, const std::string& label)
{
    auto coords = lyndon_coordinates(s);
    std::sort(coords.begin(), coords.end(), [&](const auto& a, const auto& b) {
        int wa = a.first.word.weight(s.letters()), wb = b.first.word.weight(s.letters());
        return wa != wb ? wa < wb : a.first.word < b.first.word;
    });
    Format f = parse_format(o.format);
    if (f == Format::Json) {
        Json terms = Json::array();
        for (const auto& [b, c] : coords)
            terms.push_back({{"basis", b.text}, {"weight", b.word.weight(s.letters())}, {"coefficient", to_string(c)}});
        emit_json({{"name", label}, {"family", "lyndon"}, {"truncation", s.truncation()}, {"terms", terms}});
    } else if (f == Format::Latex) {
        std::string out;
        bool first = true;
        for (const auto& [b, c] : coords) {
            out += latex_rational(c, first) + "\\," + b.text;
            first = false;
        }
        std::cout << label << " = " << (first ? "0" : out) << "\n";
    } else {
        std::cout << label << ":\n";
        for (const auto& [b, c] : coords) std::cout << to_string(c) << "  " << b.text << "\n";
        if (coords.empty()) std::cout << "0\n";
    }
}

int run_bch(const Options& o)
{
    require_weight(o.weight, 12, "bch");
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    WordSeries z = bch_dynkin(word_generator(a, o.weight, "x"), word_generator(a, o.weight, "y"));
    if (o.basis == "lyndon") emit_lyndon(z, o, "BCH(x,y)");
    else if (o.basis == "words") emit(z, o, "BCH(x,y)");
    else throw PreconditionError("unknown basis '" + o.basis + "' (expected lyndon or words)");
    return 0;
}

int run_magnus(const Options& o)
{
    require_weight(o.weight, 8, "magnus");
    auto a = make_alphabet({{"λ", 0, 1}});
    emit(magnus(tree_unit(a, o.weight) + tree_generator(a, o.weight, "λ")), o, "Ω(λ)");
    return 0;
}

int run_prelie_inverse(const Options& o)
{
    require_weight(o.weight, 8, "prelie-inverse");
    auto a = make_alphabet({{"λ", 0, 1}});
    emit(grouplike_inverse(tree_unit(a, o.weight) + tree_generator(a, o.weight, "λ")), o, "(1+λ)^{-1}");
    return 0;
}

int run_graph_exp(const Options& o)
{
    require_weight(o.weight, o.bound, "graph-exp");
    auto a = make_alphabet({{"λ", 0, 1}});
    emit(graph_exp(graph_generator(a, o.weight, "λ")), o, "exp(λ)");
    return 0;
}

int run_graph_log(const Options& o)
{
    require_weight(o.weight, o.bound, "graph-log");
    auto a = make_alphabet({{"λ", 0, 1}});
    emit(graph_log(graph_unit(a, o.weight) + graph_generator(a, o.weight, "λ")), o, "ln(1+λ)");
    return 0;
}

int run_graph_compose(const Options& o)
{
    Digraph g1 = parse_digraph(o.g1), g2 = parse_digraph(o.g2);
    if (g1.n + g2.n - 1 > o.bound) throw BoundError("graph-compose: result exceeds the vertex bound");
    emit(partial_composition(g1, o.at, g2), o, "g1 o_" + std::to_string(o.at) + " g2");
    return 0;
}

int run_graph_circle(const Options& o)
{
    require_weight(o.weight, o.bound, "graph-circle");
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    GraphSeries one = graph_unit(a, o.weight);
    emit(graph_circle_product(one + graph_generator(a, o.weight, "x"), one + graph_generator(a, o.weight, "y")), o,
         "(1+x)⊚(1+y)");
    return 0;
}

int run_bowtie(const Options& o)
{
    require_weight(o.weight, o.bound, "bowtie");
    auto a = make_alphabet({{"x", 0, 1}, {"α", -1, 1}, {"y", 0, 1}});
    GraphSeries one = graph_unit(a, o.weight);
    emit(bowtie(one + graph_generator(a, o.weight, "x"), graph_generator(a, o.weight, "α"),
                one + graph_generator(a, o.weight, "y")),
         o, "bowtie(1+x, α, 1+y)");
    return 0;
}

int run_gauge_act(const Options& o)
{
    const int N = o.weight;
    auto a = make_alphabet({{"λ", 0, 1}, {"α", -1, 1}, {"dλ", -1, 1}});
    if (o.target == "assoc") {
        require_weight(N, 10, "gauge-act assoc");
        emit(assoc_gauge_action(word_generator(a, N, "λ"), word_generator(a, N, "α"), word_generator(a, N, "dλ")), o,
             "λ.α");
    } else if (o.target == "prelie") {
        require_weight(N, 7, "gauge-act prelie");
        emit(prelie_gauge_action(tree_generator(a, N, "λ"), tree_generator(a, N, "α"), tree_generator(a, N, "dλ")), o,
             "λ.α");
    } else if (o.target == "liegraph") {
        require_weight(N, o.bound, "gauge-act liegraph");
        emit(liegraph_gauge_action(graph_generator(a, N, "λ"), graph_generator(a, N, "α"), graph_generator(a, N, "dλ")),
             o, "λ.α");
    } else if (o.target == "slinfty") {
        require_weight(N, 6, "gauge-act slinfty");
        auto u = universal_gauge_setup(N);
        emit(gauge_flow(u.algebra, u.lambda, u.a), o, "λ.a");
    } else {
        throw PreconditionError("gauge-act: unknown target '" + o.target + "'");
    }
    return 0;
}

int run_enumerate(const Options& o)
{
    Format f = parse_format(o.format);
    Json rows = Json::array();
    std::vector<std::string> lines;
    if (o.target == "dsgra") {
        int n = o.vertices > 0 ? o.vertices : o.weight;
        for (const Digraph& g : enumerate_dsgra(n, o.bound)) {
            rows.push_back({{"graph", g.encode()},
                            {"automorphisms", automorphism_order(g).get_str()},
                            {"linear_extensions", linear_extension_count(g).get_str()}});
            lines.push_back(g.encode() + "  aut=" + automorphism_order(g).get_str() +
                            "  ext=" + linear_extension_count(g).get_str());
        }
    } else if (o.target == "leveled") {
        if (o.bottom + o.top > o.bound) throw BoundError("enumerate leveled: vertex count exceeds the bound");
        for (const auto& lg : enumerate_two_leveled(o.bottom, o.top)) {
            std::string lv;
            for (std::size_t i = 0; i < lg.level.size(); ++i) lv += (i ? "," : "") + std::to_string(lg.level[i]);
            rows.push_back({{"graph", lg.graph.encode()}, {"levels", lv}, {"automorphisms", lg.automorphisms.get_str()}});
            lines.push_back(lg.graph.encode() + "  levels=" + lv + "  aut=" + lg.automorphisms.get_str());
        }
    } else if (o.target == "paprt") {
        int n = o.vertices > 0 ? o.vertices : o.weight;
        for (const auto& b : enumerate_paprt(n)) {
            rows.push_back(paprt_json(b));
            lines.push_back(b.encode());
        }
    } else if (o.target == "laprt") {
        for (const auto& t : enumerate_laprt(o.weight)) {
            rows.push_back(laprt_json(t));
            lines.push_back(t.encode());
        }
    } else {
        throw PreconditionError("enumerate: unknown family '" + o.target + "'");
    }
    if (f == Format::Json) {
        emit_json({{"family", o.target}, {"count", rows.size()}, {"items", rows}});
    } else {
        for (const auto& l : lines) std::cout << (f == Format::Latex ? "\\mathtt{" + l + "}" : l) << "\n";
        std::cout << (f == Format::Latex ? "% count " : "count ") << lines.size() << "\n";
    }
    return 0;
}

int run_elinfty_terms(const Options& o)
{
    auto terms = enumerate_laprt(o.weight);
    Format f = parse_format(o.format);
    if (f == Format::Json) {
        Json rows = Json::array();
        for (const auto& t : terms) rows.push_back(laprt_json(t));
        emit_json({{"family", "laprt"}, {"weight", o.weight}, {"terms", rows}});
    } else if (f == Format::Latex) {
        std::string out;
        for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + std::string("\\mathtt{") + terms[i].encode() + "}";
        std::cout << (out.empty() ? "0" : out) << "\n";
    } else {
        for (const auto& t : terms) std::cout << "1/1  " << t.encode() << "\n";
        if (terms.empty()) std::cout << "0\n";
    }
    return 0;
}

int run_gauge_flow(const Options& o)
{
    if (o.free_mode == !o.structure.empty())
        throw PreconditionError("gauge-flow: give exactly one of --structure FILE or --free");
    if (o.free_mode) {
        require_weight(o.weight, 6, "gauge-flow");
        auto u = universal_gauge_setup(o.weight);
        emit(gauge_flow(u.algebra, u.lambda, u.a), o, "λ.a");
        return 0;
    }
    require_weight(o.weight, 12, "gauge-flow");
    StructureFile s = load_structure(o.structure, o.weight);
    auto problems = check_structure(s.algebra);
    if (!problems.empty()) throw PreconditionError("structure file: " + problems.front());
    emit(gauge_flow(s.algebra, s.lambda, s.alpha), o, "λ.α");
    return 0;
}

int run_verify(const Options& o)
{
    if (o.weight < 1) throw PreconditionError("--weight must be at least 1");
    auto checks = verify_suite(o.target, o.weight, o.seed);
    int failed = 0;
    Format f = parse_format(o.format);
    Json rows = Json::array();
    for (const auto& c : checks) {
        if (!c.pass) ++failed;
        if (f == Format::Json) {
            Json r = {{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}};
            if (!c.pass) r.update({{"basis", c.basis}, {"left", c.left}, {"right", c.right}, {"detail", c.detail}});
            rows.push_back(r);
            continue;
        }
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
        if (!c.pass) {
            if (!c.basis.empty()) std::cout << "  at " << c.basis << ": " << c.left << " vs " << c.right;
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        }
        std::cout << "\n";
    }
    if (f == Format::Json) emit_json({{"weight", o.weight}, {"failed", failed}, {"checks", rows}});
    else std::cout << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
    return failed ? kExitVerify : 0;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact expansions for gauge actions, BCH-type group laws and their tree and graph combinatorics"};
    app.require_subcommand(1);
    try {
        o.weight = default_weight();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto common = [&](CLI::App* sub) {
        sub->add_option("-w,--weight", o.weight, "truncation weight (default: $EFFINT_WEIGHT or 4)");
        sub->add_option("-f,--format", o.format, "output format")->check(CLI::IsMember({"json", "latex", "text"}));
        sub->add_option("--bound", o.bound, "brute-force vertex bound for graph families")->check(CLI::Range(1, kGraphBruteForceBound));
        return sub;
    };

    auto* bch = common(app.add_subcommand("bch", "Baker-Campbell-Hausdorff series via Dynkin's formula"));
    bch->add_option("--basis", o.basis, "output basis: words or lyndon")->check(CLI::IsMember({"words", "lyndon"}));
    auto* mag = common(app.add_subcommand("magnus", "pre-Lie Magnus expansion of 1+λ on rooted trees"));
    auto* pinv = common(app.add_subcommand("prelie-inverse", "inverse of 1+λ for the circle product on rooted trees"));
    auto* gexp = common(app.add_subcommand("graph-exp", "graph exponential of λ"));
    auto* glog = common(app.add_subcommand("graph-log", "graph logarithm of 1+λ"));
    auto* gcomp = common(app.add_subcommand("graph-compose", "partial composition g1 o_i g2 of directed simple graphs"));
    gcomp->add_option("--g1", o.g1, "outer graph, e.g. \"3; e(2,1), e(2,3)\"");
    gcomp->add_option("--g2", o.g2, "inserted graph");
    gcomp->add_option("--at", o.at, "vertex of g1 (1-based)");
    auto* gcirc = common(app.add_subcommand("graph-circle", "graph circle product (1+x)⊚(1+y)"));
    auto* bow = common(app.add_subcommand("bowtie", "bowtie element of 1+x, α, 1+y"));
    auto* act = common(app.add_subcommand("gauge-act", "gauge action of λ on α"));
    act->add_option("target", o.target, "assoc | prelie | liegraph | slinfty")->required()
        ->check(CLI::IsMember({"assoc", "prelie", "liegraph", "slinfty"}));
    auto* en = common(app.add_subcommand("enumerate", "list a basis family"));
    en->add_option("family", o.target, "dsgra | leveled | paprt | laprt")->required()
        ->check(CLI::IsMember({"dsgra", "leveled", "paprt", "laprt"}));
    en->add_option("--size", o.vertices, "vertex count (dsgra) or size (paprt); defaults to --weight");
    en->add_option("--bottom", o.bottom, "bottom level vertex count (leveled)");
    en->add_option("--top", o.top, "top level vertex count (leveled)");
    auto* flow = common(app.add_subcommand("gauge-flow", "shifted L-infinity gauge flow"));
    flow->add_option("--structure", o.structure, "structure-constant JSON file");
    flow->add_flag("--free", o.free_mode, "universal symbolic mode on the free algebra");
    auto* el = common(app.add_subcommand("elinfty-terms", "labelled planar rooted trees indexing the gauge sum"));
    auto* ver = common(app.add_subcommand("verify", "run an exact invariant suite"));
    ver->add_option("suite", o.target, "assoc | lie | prelie | liegraph | slinfty | all")->required()
        ->check(CLI::IsMember({"assoc", "lie", "prelie", "liegraph", "slinfty", "all"}));
    ver->add_option("--seed", o.seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*bch) return run_bch(o);
        if (*mag) return run_magnus(o);
        if (*pinv) return run_prelie_inverse(o);
        if (*gexp) return run_graph_exp(o);
        if (*glog) return run_graph_log(o);
        if (*gcomp) return run_graph_compose(o);
        if (*gcirc) return run_graph_circle(o);
        if (*bow) return run_bowtie(o);
        if (*act) return run_gauge_act(o);
        if (*en) return run_enumerate(o);
        if (*flow) return run_gauge_flow(o);
        if (*el) return run_elinfty_terms(o);
        if (*ver) return run_verify(o);
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
