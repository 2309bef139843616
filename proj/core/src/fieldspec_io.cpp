#include "orderlab/fieldspec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace orderlab {

namespace {

Int json_to_int(nlohmann::json const& v, char const* what) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (std::invalid_argument const&) {
        }
    }
    throw input_error(std::string("expected integer for ") + what);
}

std::vector<std::vector<Rat>> json_to_rat_matrix(nlohmann::json const& v, char const* what) {
    if (!v.is_array()) throw input_error(std::string(what) + ": expected array of arrays");
    std::vector<std::vector<Rat>> out;
    for (auto const& row : v) {
        if (!row.is_array()) throw input_error(std::string(what) + ": expected array of arrays");
        std::vector<Rat> r;
        for (auto const& cell : row) {
            if (cell.is_string())
                r.push_back(parse_rational(cell.get<std::string>()));
            else if (cell.is_number_integer())
                r.push_back(Rat(Int(cell.get<long long>())));
            else
                throw input_error(std::string(what) + ": entries must be rational strings");
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

FieldSpec field_spec_from_json(nlohmann::json const& j) {
    static std::set<std::string> const allowed{
        "min_poly",  "maximal_basis", "class_number", "class_group",
        "fundamental_units", "torsion_order", "label"};
    if (!j.is_object()) throw input_error("field file: expected a JSON object");
    for (auto const& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key)) throw input_error("field file: unknown key \"" + key + "\"");
    }
    for (auto const& key : allowed)
        if (!j.contains(key)) throw input_error("field file: missing key \"" + key + "\"");

    std::vector<Int> min_poly;
    for (auto const& c : j.at("min_poly")) min_poly.push_back(json_to_int(c, "min_poly"));
    std::vector<Int> class_group;
    for (auto const& c : j.at("class_group")) class_group.push_back(json_to_int(c, "class_group"));

    return FieldSpec::make(std::move(min_poly),
                           json_to_rat_matrix(j.at("maximal_basis"), "maximal_basis"),
                           json_to_int(j.at("class_number"), "class_number"),
                           std::move(class_group),
                           json_to_rat_matrix(j.at("fundamental_units"), "fundamental_units"),
                           json_to_int(j.at("torsion_order"), "torsion_order"),
                           j.at("label").get<std::string>());
}

FieldSpec load_field_spec(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open field file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (nlohmann::json::exception const& e) {
        throw input_error("bad JSON in " + path + ": " + e.what());
    }
    return field_spec_from_json(j);
}

namespace {

std::string trim(std::string const& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(std::string const& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

}  // namespace

OrderRing parse_order(std::string const& desc, FieldSpec const& spec) {
    std::string d = trim(desc);
    if (d == "maximal") return maximal_order(spec);
    if (d.rfind("Z_plus_ideal", 0) == 0) {
        std::string rest = trim(d.substr(12));
        unsigned long expo = 1;
        std::size_t caret = rest.rfind('^');
        if (caret != std::string::npos) {
            std::string e = trim(rest.substr(caret + 1));
            if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
                throw input_error("order description: bad exponent in \"" + desc + "\"");
            expo = std::stoul(e);
            rest = trim(rest.substr(0, caret));
        }
        auto gen_texts = split(rest, ',');
        if (gen_texts.empty()) throw input_error("order description: no ideal generators");
        std::vector<FieldElement> gens;
        ZLattice acc;
        bool first = true;
        for (auto const& t : gen_texts) {
            FieldElement g = parse_element(t, spec);
            ZLattice part = lat_scale(spec.maximal_lattice(), g, spec);
            acc = first ? part : lat_sum(acc, part);
            first = false;
        }
        OIdeal ideal = OIdeal::from_lattice(acc, spec);
        return z_plus_ideal(ideal_pow(ideal, expo, spec), spec);
    }
    if (d.rfind("Z_plus", 0) == 0) {
        std::string rest = trim(d.substr(6));
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("order description: bad multiplier in \"" + desc + "\"");
        return z_plus_m(Int(rest), spec);
    }
    if (d.rfind("Z_adjoin", 0) == 0) {
        std::string rest = trim(d.substr(8));
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("order description: bad multiplier in \"" + desc + "\"");
        return z_adjoin_m_theta(Int(rest), spec);
    }
    if (d.rfind("basis", 0) == 0) {
        std::string rest = trim(d.substr(5));
        std::vector<FieldElement> rows;
        for (auto const& row_text : split(rest, ';')) {
            auto cells = split(row_text, ',');
            if (cells.size() != spec.degree())
                throw input_error("order description: basis row of wrong length");
            std::vector<Rat> coords;
            for (auto const& c : cells) coords.push_back(parse_rational(c));
            rows.push_back(FieldElement(std::move(coords)));
        }
        return OrderRing::make(ZLattice::from_generators(rows), spec);
    }
    throw input_error("order description: expected Z_plus / Z_plus_ideal / Z_adjoin / basis / maximal");
}

nlohmann::json json_of_element(FieldElement const& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& q : x.coords) arr.push_back(rational_str(q));
    return arr;
}

nlohmann::json json_of_lattice(ZLattice const& l) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto const& row : l.hnf()) {
        nlohmann::json r = nlohmann::json::array();
        for (auto const& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"den", l.den().get_str()}, {"rows", std::move(rows)}};
}

nlohmann::json json_of_report(PropertyReport const& rep) {
    nlohmann::json assoc{{"verdict", rep.associated.verdict},
                         {"residues", rep.associated.residues.get_str()},
                         {"coset_reps", rep.associated.rep_count.get_str()}};
    if (rep.associated.counterexample)
        assoc["counterexample"] = json_of_element(*rep.associated.counterexample);
    if (rep.associated.verdict && rep.associated.witness.size() <= 256)
        assoc["witness_rep_exponents"] = rep.associated.witness;
    else if (rep.associated.verdict) {
        std::map<long, long> histogram;
        for (long w : rep.associated.witness) ++histogram[w];
        nlohmann::json h;
        for (auto const& [exp, count] : histogram) h[std::to_string(exp)] = count;
        assoc["witness_histogram"] = std::move(h);
    }

    nlohmann::json ipo{{"verdict", rep.ideal_preserving.verdict}};
    {
        nlohmann::json factors = nlohmann::json::array();
        for (auto const& [pr, e] : rep.ideal_preserving.conductor_factors)
            factors.push_back({{"p", pr.p.get_str()},
                               {"second_gen", json_of_element(pr.second_gen)},
                               {"residue_degree", pr.residue_degree},
                               {"ramification", pr.ramification},
                               {"exponent", e}});
        ipo["conductor_factorization"] = std::move(factors);
        if (rep.ideal_preserving.violation)
            ipo["violation"] = {{"i", rep.ideal_preserving.violation->first},
                                {"j", rep.ideal_preserving.violation->second}};
    }

    nlohmann::json lao{{"verdict", rep.locally_associated.verdict},
                       {"unit_index", rep.locally_associated.unit_index.get_str()},
                       {"units_mod_conductor_maximal",
                        rep.locally_associated.units_maximal_mod.get_str()},
                       {"units_mod_conductor_order",
                        rep.locally_associated.units_order_mod.get_str()},
                       {"class_number_order",
                        rep.locally_associated.class_number_order.get_str()}};

    return nlohmann::json{{"associated", std::move(assoc)},
                          {"ideal_preserving", std::move(ipo)},
                          {"locally_associated", std::move(lao)},
                          {"conductor_radical", rep.conductor_radical}};
}

nlohmann::json json_of_length_set(LengthSet const& ls) {
    nlohmann::json out{{"element", json_of_element(ls.element)},
                       {"complete", ls.complete}};
    nlohmann::json lengths = nlohmann::json::array();
    for (long l : ls.lengths) lengths.push_back(l);
    out["lengths"] = std::move(lengths);
    if (!ls.lengths.empty()) out["elasticity"] = rational_str(elasticity_of(ls));
    nlohmann::json wit;
    for (auto const& [l, chain] : ls.witnesses) {
        nlohmann::json factors = nlohmann::json::array();
        for (auto const& f : chain) factors.push_back(json_of_element(f));
        wit[std::to_string(l)] = std::move(factors);
    }
    out["witnesses"] = std::move(wit);
    return out;
}

nlohmann::json json_of_deg1(Deg1Certificate const& cert) {
    nlohmann::json branches = nlohmann::json::array();
    for (auto const& b : cert.branches)
        branches.push_back({{"constant_divisor", json_of_element(b.g0)},
                            {"constant_cofactor", json_of_element(b.h0)},
                            {"module", json_of_lattice(b.module)},
                            {"admits_linear_term", b.admits_linear}});
    nlohmann::json out{
        {"verdict", cert.verdict == Deg1Verdict::irreducible ? "irreducible-degree-1"
                                                             : "inconclusive"},
        {"branches", std::move(branches)}};
    if (cert.surviving) out["surviving_branch"] = *cert.surviving;
    return out;
}

nlohmann::json json_of_obstruction(ObstructionResult const& res) {
    if (std::holds_alternative<AssociationWitness>(res)) {
        auto const& w = std::get<AssociationWitness>(res);
        nlohmann::json rc = nlohmann::json::array(), uc = nlohmann::json::array();
        for (auto const& c : w.r.coeffs) rc.push_back(json_of_element(c));
        for (auto const& c : w.u.coeffs) uc.push_back(json_of_element(c));
        return nlohmann::json{{"result", "witness"}, {"r", std::move(rc)}, {"u", std::move(uc)}};
    }
    auto const& cert = std::get<ObstructionCertificate>(res);
    nlohmann::json branches = nlohmann::json::array();
    for (auto const& b : cert.branches) {
        nlohmann::json jb{{"rep_exponent", b.rep_exponent},
                          {"translate_path", b.translate_path},
                          {"failing_level", b.failing_level}};
        if (b.accumulated) jb["unsatisfiable_residue"] = json_of_element(*b.accumulated);
        branches.push_back(std::move(jb));
    }
    return nlohmann::json{{"result", "certificate"},
                          {"level", cert.level},
                          {"branches", std::move(branches)}};
}

nlohmann::json json_of_hfd_witness(HfdViolationWitness const& w) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto const& c : w.coefficients) coeffs.push_back(json_of_element(c));
    return nlohmann::json{{"m", w.m},
                          {"k", w.k},
                          {"power", w.power},
                          {"coefficients", std::move(coeffs)},
                          {"all_coefficients_in_order", w.all_coefficients_in_order},
                          {"left_irreducibles", w.left_irreducibles},
                          {"right_min_irreducibles", w.right_min_irreducibles}};
}

}  // namespace orderlab
