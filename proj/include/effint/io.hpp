#pragma once

#include <effint/laprt.hpp>
#include <effint/paprt.hpp>
#include <effint/series.hpp>
#include <effint/slinfty.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace effint {

using Json = nlohmann::ordered_json;

enum class Format { Json, Latex, Text };

inline Format parse_format(const std::string& s)
{
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    if (s == "text") return Format::Text;
    throw PreconditionError("unknown output format '" + s + "'");
}

template <BasisObject B>
Json series_json(const Series<B>& s, const std::string& label = "")
{
    Json j;
    if (!label.empty()) j["name"] = label;
    j["family"] = std::string(B::family);
    j["truncation"] = s.truncation();
    Json gens = Json::array();
    for (std::size_t i = 0; i < s.letters().size(); ++i) {
        const Generator& g = s.letters()[static_cast<int>(i)];
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"weight", g.weight}});
    }
    j["generators"] = gens;
    Json terms = Json::array();
    for (const auto& [enc, bc] : s.ordered_terms())
        terms.push_back({{"basis", enc}, {"weight", s.weight_of(*bc.first)}, {"coefficient", to_string(bc.second)}});
    j["terms"] = terms;
    return j;
}

inline std::string latex_rational(const Rational& r, bool leading)
{
    Rational c = r;
    c.canonicalize();
    std::string sign = c < 0 ? "-" : (leading ? "" : "+");
    Rational a = abs(c);
    std::string body;
    if (a.get_den() == 1) body = a == 1 ? "" : a.get_num().get_str();
    else body = "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    return leading ? sign + body : " " + sign + " " + body;
}

template <BasisObject B>
std::string series_latex(const Series<B>& s)
{
    std::string out;
    bool first = true;
    for (const auto& [enc, bc] : s.ordered_terms()) {
        out += latex_rational(bc.second, first) + "\\,\\mathtt{" + enc + "}";
        first = false;
    }
    return first ? "0" : out;
}

template <BasisObject B>
std::string series_text(const Series<B>& s)
{
    std::ostringstream os;
    for (const auto& [enc, bc] : s.ordered_terms()) os << to_string(bc.second) << "  " << enc << "\n";
    if (s.empty()) os << "0\n";
    return os.str();
}

template <BasisObject B>
std::string render(const Series<B>& s, Format f, const std::string& label = "")
{
    switch (f) {
    case Format::Json: return series_json(s, label).dump(2) + "\n";
    case Format::Latex: return (label.empty() ? "" : label + " = ") + series_latex(s) + "\n";
    case Format::Text: return (label.empty() ? "" : label + ":\n") + series_text(s);
    }
    return {};
}

/// Structure-constant input for gauge-flow.
struct StructureFile {
    AlphabetPtr basis;
    StructureAlgebra algebra;
    VectorSeries alpha;
    VectorSeries lambda;
};

namespace detail {

inline VectorSeries vector_from_json(const Json& j, const AlphabetPtr& a, int N)
{
    VectorSeries v(a, N);
    if (!j.is_object()) throw PreconditionError("structure file: a vector must be an object of coefficients");
    for (const auto& [name, coeff] : j.items()) {
        if (!coeff.is_string()) throw PreconditionError("structure file: coefficients must be \"p/q\" strings");
        v.add_term(BasisIndex{a->index(name)}, parse_rational(coeff.get<std::string>()));
    }
    return v;
}

} // namespace detail

/// Reads {"basis": [{name, degree, weight}], "differential": {b: {b': "p/q"}},
/// "brackets": [{"args": [...], "value": {...}}], "alpha": {...}, "lambda": {...}}.
inline StructureFile parse_structure(const Json& j, int N)
{
    try {
        std::vector<Generator> gens;
        for (const auto& b : j.at("basis"))
            gens.push_back({b.at("name").get<std::string>(), b.value("degree", 0), b.value("weight", 1)});
        AlphabetPtr a = make_alphabet(gens);
        StructureAlgebra alg(a, N);
        if (j.contains("differential"))
            for (const auto& [name, img] : j.at("differential").items())
                alg.set_differential(a->index(name), detail::vector_from_json(img, a, N));
        if (j.contains("brackets"))
            for (const auto& br : j.at("brackets")) {
                std::vector<int> args;
                for (const auto& n : br.at("args")) args.push_back(a->index(n.get<std::string>()));
                alg.set_bracket(args, detail::vector_from_json(br.at("value"), a, N));
            }
        VectorSeries alpha = j.contains("alpha") ? detail::vector_from_json(j.at("alpha"), a, N) : VectorSeries(a, N);
        VectorSeries lambda = j.contains("lambda") ? detail::vector_from_json(j.at("lambda"), a, N) : VectorSeries(a, N);
        return {a, alg, alpha, lambda};
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("structure file: ") + e.what());
    }
}

inline StructureFile load_structure(const std::string& path, int N)
{
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open structure file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("structure file is not valid JSON: ") + e.what());
    }
    return parse_structure(j, N);
}

/// Violations of the defining relations up to weight N: d² on basis vectors and
/// d(ℓ_m(e…)) against the relation, for every sorted basis tuple of weight ≤ N.
inline std::vector<std::string> check_structure(const StructureAlgebra& alg)
{
    std::vector<std::string> out;
    const Alphabet& a = *alg.alphabet();
    const int N = alg.truncation();
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        VectorSeries e = VectorSeries::single(alg.alphabet(), N, BasisIndex{i});
        if (!alg.differential(alg.differential(e)).empty()) out.push_back("d^2(" + a[i].name + ") != 0");
    }
    std::vector<int> idx;
    std::function<void(int, int)> rec = [&](int start, int w) {
        if (idx.size() >= 2) {
            std::vector<VectorSeries> us;
            for (int i : idx) us.push_back(VectorSeries::single(alg.alphabet(), N, BasisIndex{i}));
            VectorSeries lhs = alg.differential(alg.bracket(us));
            VectorSeries rhs = structural_differential(alg, us);
            if (!(lhs == rhs)) {
                std::string s = "relation fails on l" + std::to_string(idx.size()) + "(";
                for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + a[idx[k]].name;
                out.push_back(s + ")");
            }
        }
        if (static_cast<int>(idx.size()) >= 2 * alg.max_arity() - 1) return;
        for (int i = start; i < n; ++i) {
            if (w + a[i].weight > N) continue;
            idx.push_back(i);
            rec(i, w + a[i].weight);
            idx.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

inline Json laprt_json(const LaTree& t)
{
    return {{"tree", t.encode()}, {"weight", t.weight()}, {"coefficient", "1/1"}};
}

inline Json paprt_json(const PaBlock& b) { return {{"tree", b.encode()}, {"size", b.size()}}; }

} // namespace effint
