#include <CLI11.hpp>

#include <iostream>

#include "orderlab/verify.hpp"

using namespace orderlab;

namespace {

int const kExitVerdictFalse = 1;
int const kExitInconclusive = 2;
int const kExitInputError = 3;

FieldElement parse_element_or_coords(std::string const& text, FieldSpec const& spec) {
    auto commas = std::count(text.begin(), text.end(), ',');
    if (static_cast<std::size_t>(commas) + 1 == spec.degree()) {
        std::vector<Rat> coords;
        std::stringstream ss(text);
        std::string cell;
        while (std::getline(ss, cell, ',')) coords.push_back(parse_rational(cell));
        return FieldElement(std::move(coords));
    }
    return parse_element(text, spec);
}

TruncSeries parse_series(std::string const& text, FieldSpec const& spec, std::size_t trunc) {
    std::vector<FieldElement> coeffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) coeffs.push_back(parse_element_or_coords(part, spec));
    if (coeffs.empty()) throw input_error("empty series");
    while (coeffs.size() <= trunc) coeffs.push_back(spec.zero());
    return ts_make(std::move(coeffs));
}

void emit(nlohmann::json const& j, bool as_json, std::string const& table) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with non-maximal orders in number fields"};
    app.require_subcommand(1);

    std::string field_path, order_desc = "maximal", element_text, series_text, mode = "assoc";
    std::string only, fields_dir = "fields";
    long trunc = 4, max_len = 48;
    long long bound = 0;
    bool as_json = false, as_table = false;
    std::string cof_text, lin_a, lin_b, ideal_gens;

    auto* props = app.add_subcommand("props", "structure predicates of an order");
    props->add_option("field", field_path, "field description JSON")->required();
    props->add_option("--order", order_desc, "order description");
    props->add_option("--bound", bound, "also report half-factoriality evidence up to |norm| <= bound");
    props->add_flag("--json", as_json);
    props->add_flag("--table", as_table);

    auto* factor = app.add_subcommand("factor", "length set of an element");
    factor->add_option("field", field_path)->required();
    factor->add_option("--order", order_desc);
    factor->add_option("--element", element_text)->required();
    factor->add_option("--max-len", max_len);
    factor->add_flag("--json", as_json);
    factor->add_flag("--table", as_table);

    std::vector<long long> dav_orders;
    auto* dav = app.add_subcommand("davenport", "Davenport constant of an abelian group");
    dav->add_option("orders", dav_orders, "invariant factors")->required();

    auto* cert = app.add_subcommand("pseries-cert", "truncated power-series certificates");
    cert->add_option("field", field_path)->required();
    cert->add_option("--order", order_desc);
    cert->add_option("--series", series_text, "coefficients c0; c1; ... (coords or expressions)")
        ->required();
    cert->add_option("--mode", mode)->check(CLI::IsMember({"assoc", "irred", "hfd-witness"}));
    cert->add_option("--trunc", trunc, "truncation degree (default 4)");
    cert->add_option("--cofactor", cof_text, "hfd-witness: the series g with f = g*(a+bx)");
    cert->add_option("--linear-a", lin_a, "hfd-witness: constant a of the linear factor");
    cert->add_option("--linear-b", lin_b, "hfd-witness: coefficient b of the linear factor");
    cert->add_option("--ideal-gens", ideal_gens, "hfd-witness: generators of J (a in J, J^2 in I)");
    cert->add_flag("--json", as_json);
    cert->add_flag("--table", as_table);

    auto* verify = app.add_subcommand("verify-paper", "run the bundled verification suite");
    verify->add_option("--fields-dir", fields_dir, "directory with the bundled field files");
    verify->add_option("--only", only, "run only cases whose id contains this substring");
    verify->add_flag("--json", as_json);
    verify->add_flag("--table", as_table);

    CLI11_PARSE(app, argc, argv);
    (void)as_table;

    try {
        if (props->parsed()) {
            FieldSpec spec = load_field_spec(field_path);
            OrderRing r = parse_order(order_desc, spec);
            PropertyReport rep = property_report(r);
            nlohmann::json out = json_of_report(rep);
            out["order"] = json_of_lattice(r.lattice());
            out["conductor"] = json_of_lattice(r.conductor().lattice());
            if (bound > 0) {
                ClassEngine eng(spec);
                auto ev = hfd_evidence(r, Int(static_cast<long>(bound)), eng);
                out["hfd_evidence"] = {{"consistent", ev.consistent},
                                       {"reason", ev.reason},
                                       {"elements_checked", ev.elements_checked},
                                       {"norm_bound", ev.norm_bound.get_str()}};
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (factor->parsed()) {
            FieldSpec spec = load_field_spec(field_path);
            OrderRing r = parse_order(order_desc, spec);
            ClassEngine eng(spec);
            FieldElement x = parse_element_or_coords(element_text, spec);
            LengthSet ls = length_set(x, r, eng, max_len);
            std::cout << json_of_length_set(ls).dump(2) << "\n";
            return 0;
        }
        if (dav->parsed()) {
            AbelianGroup g;
            for (auto v : dav_orders) g.cyclic_orders.push_back(Int(static_cast<long>(v)));
            std::cout << davenport(g).get_str() << "\n";
            return 0;
        }
        if (cert->parsed()) {
            FieldSpec spec = load_field_spec(field_path);
            OrderRing r = parse_order(order_desc, spec);
            ClassEngine eng(spec);
            TruncSeries f = parse_series(series_text, spec, static_cast<std::size_t>(trunc));
            if (mode == "assoc") {
                auto res = association_obstruction(f, r);
                std::cout << json_of_obstruction(res).dump(2) << "\n";
                return std::holds_alternative<AssociationWitness>(res) ? 0 : kExitVerdictFalse;
            }
            if (mode == "irred") {
                auto c = irreducibility_cert_deg1(f, r, eng);
                std::cout << json_of_deg1(c).dump(2) << "\n";
                return c.verdict == Deg1Verdict::irreducible ? 0 : kExitInconclusive;
            }
            // hfd-witness
            if (cof_text.empty() || lin_a.empty() || lin_b.empty() || ideal_gens.empty())
                throw input_error(
                    "hfd-witness needs --cofactor, --linear-a, --linear-b, --ideal-gens");
            TruncSeries g = parse_series(cof_text, spec, f.trunc_degree());
            FieldElement a = parse_element_or_coords(lin_a, spec);
            FieldElement b = parse_element_or_coords(lin_b, spec);
            std::vector<FieldElement> gens;
            {
                std::stringstream ss(ideal_gens);
                std::string part;
                while (std::getline(ss, part, ';')) gens.push_back(parse_element_or_coords(part, spec));
            }
            ZLattice acc;
            bool first = true;
            for (auto const& gen : gens) {
                ZLattice part = lat_scale(spec.maximal_lattice(), gen, spec);
                acc = first ? part : lat_sum(acc, part);
                first = false;
            }
            auto w = hfd_violation_witness(f, g, a, b, OIdeal::from_lattice(acc, spec), r);
            std::cout << json_of_hfd_witness(w).dump(2) << "\n";
            return w.all_coefficients_in_order ? 0 : kExitVerdictFalse;
        }
        if (verify->parsed()) {
            VerificationSuite suite = run_verification(fields_dir, only);
            if (as_json)
                emit(json_of_suite(suite), true, "");
            else
                std::cout << table_of_suite(suite);
            if (suite.cases.empty()) {
                std::cerr << "no cases selected\n";
                return kExitInputError;
            }
            return suite.all_pass() ? 0 : kExitVerdictFalse;
        }
    } catch (input_error const& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (inconclusive_error const& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (unsupported_error const& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (error const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
