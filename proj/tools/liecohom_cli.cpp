#include <CLI11.hpp>
#include <json.hpp>

#include "liecohom/extensions.hpp"
#include "liecohom/fiveterm.hpp"
#include "liecohom/io.hpp"
#include "liecohom/schur.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace {

using namespace liecohom;
using nlohmann::json;

struct Options {
    bool json_out = false;
    std::size_t max_order = 32;
};

json invariants_json(const std::vector<Int>& inv) {
    json arr = json::array();
    for (const Int& x : inv) arr.push_back(to_ll_checked(x));
    return arr;
}

std::string invariants_str(const std::vector<Int>& inv) {
    if (inv.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < inv.size(); ++i) os << (i ? " x " : "") << "Z/" << inv[i];
    return os.str();
}

void emit(const Options& opt, const std::string& command, const json& inputs, const json& result,
          const std::vector<std::string>& human) {
    if (opt.json_out) {
        json report;
        report["command"] = command;
        report["format"] = io::kFormatVersion;
        report["inputs"] = inputs;
        report["result"] = result;
        report["rng"] = "none";
        report["version"] = io::kToolVersion;
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& line : human) std::cout << line << "\n";
    }
}

struct LoadedRing {
    LieRingPtr ring;
    json input_echo;
};

LoadedRing load_ring(const std::string& path) {
    std::string text = io::read_file(path);
    io::LieRingDocument doc = io::parse_liering(text);
    LoadedRing lr;
    lr.ring = io::ring_from_document(doc);
    lr.input_echo = {{"path", path}, {"digest", io::digest(text)}};
    return lr;
}

GroupPtr parse_coeff(const std::string& spec) {
    std::vector<Int> moduli;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            long m = std::stol(item);
            if (m < 1) throw std::invalid_argument("");
            moduli.emplace_back(m);
        } catch (...) {
            throw io::ParseError("--coeff: expected comma-separated moduli >= 1, got \"" + spec + "\"");
        }
    }
    if (moduli.empty()) throw io::ParseError("--coeff: empty modulus list");
    return FinAbGroup::make(std::move(moduli));
}

LieIdeal parse_ideal(const LieRingPtr& ring, const std::string& spec) {
    if (spec == "center") return center(*ring);
    std::vector<GroupElement> gens;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::vector<Int> coeffs;
        std::stringstream es(item);
        std::string num;
        while (std::getline(es, num, ',')) {
            try {
                coeffs.emplace_back(std::stol(num));
            } catch (...) {
                throw io::ParseError("--ideal: bad coefficient \"" + num + "\"");
            }
        }
        if (coeffs.size() != ring->rank())
            throw io::ParseError("--ideal: generator needs " + std::to_string(ring->rank()) + " coefficients");
        gens.push_back(element(ring->additive(), std::move(coeffs)));
    }
    LieIdeal ideal = make_ideal(*ring, std::move(gens));
    if (!ideal.central) throw std::domain_error("--ideal: the given ideal is not central");
    return ideal;
}

int run(int argc, char** argv) {
    CLI::App app{"second cohomology, central extensions and Schur multipliers of finite Lie rings"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("LIECOHOM_MAX_ORDER")) {
        try {
            opt.max_order = std::stoul(env);
        } catch (...) {
            throw io::ParseError("LIECOHOM_MAX_ORDER: not a positive integer");
        }
    }
    app.add_flag("--json", opt.json_out, "machine-readable report on stdout");
    app.add_option("--max-order", opt.max_order, "largest ring order the cohomology engine accepts");

    std::string ring_path, coeff_spec, ideal_spec = "center", cocycle_path;
    std::size_t budget = 10000;

    CLI::App* validate = app.add_subcommand("validate", "check a Lie ring file against the ring axioms");
    validate->add_option("file", ring_path)->required();

    CLI::App* info = app.add_subcommand("info", "orders, center and derived subring of a ring");
    info->add_option("file", ring_path)->required();

    CLI::App* h2cmd = app.add_subcommand("h2", "second cohomology group H2(L, A)");
    h2cmd->add_option("file", ring_path)->required();
    h2cmd->add_option("--coeff", coeff_spec, "coefficient moduli, e.g. 2,4")->required();

    CLI::App* classify = app.add_subcommand("classify", "central extensions of L by A up to equivalence");
    classify->add_option("file", ring_path)->required();
    classify->add_option("--coeff", coeff_spec)->required();
    classify->add_option("--budget", budget, "largest |H2| that will be enumerated");

    CLI::App* five = app.add_subcommand("five-term", "exactness of the five-term sequence for a central ideal");
    five->add_option("file", ring_path)->required();
    five->add_option("--ideal", ideal_spec, "\"center\" or generators \"a,b,..;c,d,..\"");
    five->add_option("--coeff", coeff_spec)->required();

    CLI::App* schur = app.add_subcommand("schur", "Schur multiplier M(L)");
    schur->add_option("file", ring_path)->required();

    CLI::App* ccheck = app.add_subcommand("cocycle-check", "verify the five cocycle conditions for a table pair");
    ccheck->add_option("file", cocycle_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    CohomOptions copts;
    copts.max_order = opt.max_order;

    if (*validate) {
        LoadedRing lr = load_ring(ring_path);
        LieIdeal z = center(*lr.ring);
        std::ostringstream os;
        os << "valid Lie ring, order " << lr.ring->order() << ", center order " << z.sub.order();
        emit(opt, "validate", {{"lie", lr.input_echo}},
             {{"valid", true},
              {"order", to_ll_checked(lr.ring->order())},
              {"center_order", to_ll_checked(z.sub.order())}},
             {os.str()});
    } else if (*info) {
        LoadedRing lr = load_ring(ring_path);
        LieIdeal z = center(*lr.ring);
        LieIdeal d = derived(*lr.ring);
        auto zpres = subgroup_as_group(z.sub);
        auto dpres = subgroup_as_group(d.sub);
        json result = {{"order", to_ll_checked(lr.ring->order())},
                       {"additive", invariants_json(lr.ring->additive()->canonical_invariants())},
                       {"abelian", lr.ring->is_abelian()},
                       {"center",
                        {{"order", to_ll_checked(z.sub.order())},
                         {"invariants", invariants_json(zpres.group->canonical_invariants())}}},
                       {"derived",
                        {{"order", to_ll_checked(d.sub.order())},
                         {"invariants", invariants_json(dpres.group->canonical_invariants())}}}};
        std::vector<std::string> human;
        std::ostringstream l1, l2, l3, l4;
        l1 << "order " << lr.ring->order() << (lr.ring->is_abelian() ? " (abelian)" : "");
        l2 << "additive group: " << invariants_str(lr.ring->additive()->canonical_invariants());
        l3 << "center: order " << z.sub.order() << ", " << invariants_str(zpres.group->canonical_invariants());
        l4 << "derived subring: order " << d.sub.order() << ", "
           << invariants_str(dpres.group->canonical_invariants());
        emit(opt, "info", {{"lie", lr.input_echo}}, result, {l1.str(), l2.str(), l3.str(), l4.str()});
    } else if (*h2cmd) {
        LoadedRing lr = load_ring(ring_path);
        GroupPtr a = parse_coeff(coeff_spec);
        H2Group h = h2(lr.ring, a, copts);
        auto inv = h.group->canonical_invariants();
        emit(opt, "h2", {{"lie", lr.input_echo}, {"coeff", invariants_json(a->moduli())}},
             {{"invariants", invariants_json(inv)}, {"order", to_ll_checked(h.group->order())}},
             {"H2 = " + invariants_str(inv)});
    } else if (*classify) {
        LoadedRing lr = load_ring(ring_path);
        GroupPtr a = parse_coeff(coeff_spec);
        ClassifyOptions copt2;
        copt2.budget = budget;
        copt2.cohom = copts;
        auto classes = classify_extensions(lr.ring, a, copt2);
        json arr = json::array();
        std::vector<std::string> human;
        human.push_back(std::to_string(classes.size()) + " equivalence classes");
        for (const auto& cls : classes) {
            json cj = {{"class", invariants_json(cls.class_element.coeffs)},
                       {"b_invariants", invariants_json(cls.b_invariants)},
                       {"split", cls.split}};
            arr.push_back(std::move(cj));
            std::ostringstream os;
            os << "class (";
            for (std::size_t i = 0; i < cls.class_element.coeffs.size(); ++i)
                os << (i ? "," : "") << cls.class_element.coeffs[i];
            os << "): B additive " << invariants_str(cls.b_invariants) << (cls.split ? ", split" : "");
            human.push_back(os.str());
        }
        emit(opt, "classify", {{"lie", lr.input_echo}, {"coeff", invariants_json(a->moduli())}},
             {{"count", classes.size()}, {"classes", arr}}, human);
    } else if (*five) {
        LoadedRing lr = load_ring(ring_path);
        GroupPtr a = parse_coeff(coeff_spec);
        LieIdeal ideal = parse_ideal(lr.ring, ideal_spec);
        FiveTermReport rep = check_five_term(lr.ring, ideal, a, copts);
        auto verdict = [](bool b) { return b ? "exact" : "FAILS"; };
        std::vector<std::string> human = {
            std::string("inflation Hom(L/H,A) -> Hom(L,A) injective: ") + verdict(rep.inf_hom_injective),
            std::string("at Hom(L,A): ") + verdict(rep.exact_at_hom_l),
            std::string("at Hom(H,A): ") + verdict(rep.exact_at_hom_h),
            std::string("at H2(L/H,A): ") + verdict(rep.exact_at_h2_quotient),
        };
        json result = {{"groups",
                        {{"hom_quotient", invariants_json(rep.hom_quotient_inv)},
                         {"hom_l", invariants_json(rep.hom_l_inv)},
                         {"hom_h", invariants_json(rep.hom_h_inv)},
                         {"h2_quotient", invariants_json(rep.h2_quotient_inv)},
                         {"h2_l", invariants_json(rep.h2_l_inv)}}},
                       {"verdicts",
                        {{"inf_injective", rep.inf_hom_injective},
                         {"exact_at_hom_l", rep.exact_at_hom_l},
                         {"exact_at_hom_h", rep.exact_at_hom_h},
                         {"exact_at_h2_quotient", rep.exact_at_h2_quotient}}},
                       {"all_exact", rep.all_exact()}};
        emit(opt, "five-term",
             {{"lie", lr.input_echo}, {"coeff", invariants_json(a->moduli())}, {"ideal", ideal_spec}}, result,
             human);
    } else if (*schur) {
        LoadedRing lr = load_ring(ring_path);
        MultiplierResult res = schur_multiplier(lr.ring, copts);
        json sched = json::array();
        for (const Int& n : res.schedule) sched.push_back(to_ll_checked(n));
        json per = json::array();
        for (const auto& f : res.factors_per_n) per.push_back(invariants_json(f));
        std::ostringstream os;
        os << "M(L) = " << invariants_str(res.group->moduli()) << (res.stable ? " (stable)" : " (NOT stable)");
        emit(opt, "schur", {{"lie", lr.input_echo}},
             {{"invariants", invariants_json(res.group->moduli())},
              {"stable", res.stable},
              {"schedule", sched},
              {"per_n", per}},
             {os.str()});
    } else if (*ccheck) {
        std::string text = io::read_file(cocycle_path);
        std::string base = std::filesystem::path(cocycle_path).parent_path().string();
        io::CocycleDocument doc = io::parse_cocycle(text, base.empty() ? "." : base);
        Cocycle c = io::cocycle_from_document(doc);
        CocycleCheck check = is_cocycle(c, opt.max_order);
        std::vector<std::string> human;
        if (check.ok) {
            human.push_back("cocycle: valid");
        } else {
            human.push_back("not a cocycle: " + check.message);
        }
        json witness = json::array();
        for (std::size_t w : check.witness) witness.push_back(w);
        emit(opt, "cocycle-check", {{"cocycle", {{"path", cocycle_path}, {"digest", io::digest(text)}}}},
             {{"cocycle", check.ok}, {"condition", check.condition}, {"witness", witness},
              {"message", check.message}},
             human);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
