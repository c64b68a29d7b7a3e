#include "qonsager/serialize.hpp"

#include "qonsager/parse.hpp"

namespace qonsager {

json poly_to_json(const NCPolynomial& p) {
    json j;
    j["alphabet"] = p.alphabet() == AlphabetTag::Concrete ? "concrete" : "abstract";
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json t;
        t["word"] = word_name(it->first);
        t["coeff"] = it->second.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

NCPolynomial poly_from_json(const json& j) {
    const std::string alpha = j.at("alphabet").get<std::string>();
    AlphabetTag tag;
    if (alpha == "concrete") tag = AlphabetTag::Concrete;
    else if (alpha == "abstract") tag = AlphabetTag::Abstract;
    else throw std::invalid_argument("poly_from_json: unknown alphabet " + alpha);
    NCPolynomial p(tag);
    for (const auto& t : j.at("terms")) {
        Word w = parse_word(t.at("word").get<std::string>(), tag);
        p.add_term(std::move(w), parse_scalar(t.at("coeff").get<std::string>()));
    }
    return p;
}

json coeff_table_to_json(const CoefficientTable& t) {
    json j;
    j["k"] = t.k;
    j["kbar"] = t.kbar;
    j["alpha"] = t.alpha;
    auto dump_map = [](const std::map<std::pair<int, int>, ScalarFraction>& m) {
        json out = json::array();
        for (const auto& [idx, v] : m) {
            json e;
            e["i"] = idx.first;
            e["j"] = idx.second;
            e["value"] = v.to_string();
            out.push_back(std::move(e));
        }
        return out;
    };
    j["a"] = dump_map(t.a);
    j["b"] = dump_map(t.b);
    j["e"] = dump_map(t.e);
    j["const"] = t.constant.to_string();
    return j;
}

json generator_table_to_json(const GeneratorTable& t) {
    json j;
    j["K"] = t.K;
    j["rho"] = t.rho ? json(t.rho->to_string()) : json("formal");
    json ac = json::array();
    for (const auto& c : t.a_consts) ac.push_back(c.to_string());
    j["a_consts"] = std::move(ac);
    auto dump_family = [](const std::vector<NCPolynomial>& v) {
        json out = json::array();
        for (const auto& p : v) out.push_back(poly_to_json(p));
        return out;
    };
    j["Wm"] = dump_family(t.Wm);
    j["Wp"] = dump_family(t.Wp);
    j["G"] = dump_family(t.G);
    j["Gt"] = dump_family(t.Gt);
    json cs = json::array();
    for (const auto& c : t.coeffs) cs.push_back(coeff_table_to_json(c));
    j["coefficients"] = std::move(cs);
    return j;
}

json report_to_json(const RelationReport& r) {
    json out = json::array();
    for (const auto& e : r.entries) {
        json j;
        j["relation"] = e.relation;
        j["k"] = e.k;
        j["l"] = e.l ? json(*e.l) : json(nullptr);
        j["rep"] = e.rep;
        j["passed"] = e.passed;
        out.push_back(std::move(j));
    }
    json top;
    top["all_passed"] = r.all_passed;
    top["entries"] = std::move(out);
    return top;
}

json aw_relation_to_json(const AWRelation& r) {
    json j;
    j["N"] = r.N;
    json alphas = json::array();
    for (const auto& a : r.alphas) alphas.push_back(a.to_string());
    j["alphas"] = std::move(alphas);
    return j;
}

namespace {

std::string family_text(const GeneratorTable& t, bool latex) {
    std::string out;
    auto line = [&](const std::string& name, const NCPolynomial& p) {
        out += name + " = " + (latex ? p.to_latex() : p.to_string()) + "\n";
    };
    for (int k = 0; k < static_cast<int>(t.Wm.size()); ++k) {
        line(latex ? "\\mathcal{W}_{-" + std::to_string(k) + "}"
                   : "W_{-" + std::to_string(k) + "}",
             t.Wm[k]);
        line(latex ? "\\mathcal{W}_{" + std::to_string(k + 1) + "}"
                   : "W_{" + std::to_string(k + 1) + "}",
             t.Wp[k]);
    }
    for (int k = 0; k < static_cast<int>(t.G.size()); ++k) {
        line(latex ? "\\mathcal{G}_{" + std::to_string(k + 1) + "}"
                   : "G_{" + std::to_string(k + 1) + "}",
             t.G[k]);
        line(latex ? "\\tilde{\\mathcal{G}}_{" + std::to_string(k + 1) + "}"
                   : "Gt_{" + std::to_string(k + 1) + "}",
             t.Gt[k]);
    }
    return out;
}

}  // namespace

std::string generator_table_to_text(const GeneratorTable& t) { return family_text(t, false); }
std::string generator_table_to_latex(const GeneratorTable& t) { return family_text(t, true); }

}  // namespace qonsager
