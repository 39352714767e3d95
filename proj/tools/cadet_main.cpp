// cadet command line: linear codes, weight distributions, combinatorial
// designs and design-support criteria, wired into reproducible pipelines
// with JSON on stdout and diagnostics on stderr.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget
// exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cadet/am.hpp"
#include "cadet/boolfn.hpp"
#include "cadet/code.hpp"
#include "cadet/constructions.hpp"
#include "cadet/designs.hpp"
#include "cadet/errors.hpp"
#include "cadet/gf.hpp"
#include "cadet/json_out.hpp"
#include "cadet/moments.hpp"
#include "cadet/predictor.hpp"
#include "cadet/repro.hpp"

namespace {

using nlohmann::json;
using namespace cadet;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

std::vector<unsigned> parse_unsigned_list(const std::string& csv) {
    std::vector<unsigned> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(static_cast<unsigned>(std::stoul(item)));
    return out;
}

struct Options {
    std::string field_spec;
    std::string in_path;      // code file
    std::string fn_path;      // function table file
    std::string out_path;
    std::string coords;
    std::string s_list;
    std::string unknown;
    std::string dual_prefix;
    std::string family;
    std::string subset = "all";
    unsigned t = 1;
    unsigned weight = 0;
    unsigned n = 0, i = 0, m = 0, ell = 0, s = 0, nu_f = 0;
    std::uint64_t lambda = 0, mu = 0;
    std::uint64_t budget_codewords = code::kDefaultCodewordBudget;
    std::uint64_t budget_design_steps = designs::kDefaultStepBudget;
    std::uint64_t seed = 0;
    unsigned t_max = 5;
    unsigned nu = 0, dim = 0;
    std::uint64_t exponent = 1;
    std::string scale;
    unsigned trace_to = 0;
    std::uint64_t q = 2;
    bool single_walsh = false;
};

gf::FieldPtr load_field(const Options& opt) {
    if (opt.field_spec.empty()) return nullptr;
    return gf::FieldTable::parse(opt.field_spec);
}

code::LinearCode load_code(const Options& opt) {
    return code::LinearCode::from_text(slurp(opt.in_path), load_field(opt));
}

boolfn::VectorialFunction load_fn(const Options& opt) {
    return boolfn::VectorialFunction::from_text(slurp(opt.fn_path));
}

am::Budgets budgets_of(const Options& opt) {
    return {opt.budget_codewords, opt.budget_design_steps};
}

int run(CLI::App& app, const Options& opt) {
    // field: print the parsed field table summary.
    if (app.got_subcommand("field")) {
        auto f = load_field(opt);
        if (!f) throw std::invalid_argument("field: --field is required");
        json j;
        j["schema"] = 1;
        j["p"] = f->p();
        j["m"] = f->m();
        j["q"] = f->q();
        j["modulus"] = f->modulus();
        j["generator"] = f->generator();
        j["spec"] = f->spec_string();
        emit(j, opt.out_path);
        return 0;
    }

    if (app.got_subcommand("code")) {
        auto* sub = app.get_subcommand("code");
        auto c = load_code(opt);
        code::LinearCode result = c;
        if (sub->got_subcommand("dual")) {
            result = c.dual();
        } else if (sub->got_subcommand("shorten")) {
            result = c.shortened(parse_unsigned_list(opt.coords));
        } else if (sub->got_subcommand("puncture")) {
            result = c.punctured(parse_unsigned_list(opt.coords));
        }
        const auto wd = result.weight_distribution(opt.budget_codewords);
        emit(jsonio::distribution_json(wd, result.dimension()), opt.out_path);
        if (!opt.out_path.empty() && !sub->got_subcommand("wdist"))
            write_file(opt.out_path + ".code", result.to_text());
        return 0;
    }

    if (app.got_subcommand("moments")) {
        auto* sub = app.get_subcommand("moments");
        if (sub->got_subcommand("check")) {
            // --in: JSON file with {"a": <dist>, "adual": <dist>}.
            const json j = json::parse(slurp(opt.in_path));
            const auto a = jsonio::distribution_from_json(j.at("a"));
            const auto ad = jsonio::distribution_from_json(j.at("adual"));
            const auto res = moments::moment_check(opt.q, a, ad, opt.t_max);
            emit(jsonio::moment_check_json(res), opt.out_path);
            return res.ok ? 0 : 1;
        }
        // solve: --in holds the known distribution (unknown entries arbitrary).
        const auto known = jsonio::distribution_from_json(json::parse(slurp(opt.in_path)));
        std::vector<Int> dual_prefix;
        for (unsigned v : parse_unsigned_list(opt.dual_prefix)) dual_prefix.emplace_back(v);
        const auto res = moments::solve_distribution(opt.nu, opt.dim, opt.q,
                                                     parse_unsigned_list(opt.unknown), known.counts,
                                                     dual_prefix);
        json j = jsonio::distribution_json(res.distribution, opt.dim);
        json used = json::array();
        for (const auto& v : res.dual_prefix_used) used.push_back(v.str());
        j["dual_prefix_used"] = used;
        emit(j, opt.out_path);
        return 0;
    }

    if (app.got_subcommand("design")) {
        auto* sub = app.get_subcommand("design");
        if (sub->got_subcommand("extract")) {
            auto c = load_code(opt);
            const auto d = designs::support_design(c, opt.weight, opt.budget_codewords);
            emit(jsonio::design_json(d), opt.out_path);
            return 0;
        }
        // verify: --in is a design JSON file.
        const json j = json::parse(slurp(opt.in_path));
        designs::Design d;
        d.nu = j.at("nu").get<unsigned>();
        for (const auto& b : j.at("blocks")) d.blocks.push_back(b.get<std::vector<std::uint32_t>>());
        if (j.contains("mult"))
            d.mult = j.at("mult").get<std::vector<std::uint64_t>>();
        else
            d.mult.assign(d.blocks.size(), 1);
        const auto lambda = designs::is_t_design(d, opt.t, opt.budget_design_steps);
        json out;
        out["schema"] = 1;
        out["t"] = opt.t;
        out["is_design"] = lambda.has_value();
        out["lambda"] = lambda ? json(lambda->str()) : json();
        emit(out, opt.out_path);
        return lambda ? 0 : 1;
    }

    if (app.got_subcommand("predict")) {
        auto* sub = app.get_subcommand("predict");
        if (sub->got_subcommand("table")) {
            predictor::TableParams tp;
            tp.n = opt.n;
            tp.nu_f = opt.nu_f;
            tp.m = opt.m;
            tp.ell = opt.ell;
            tp.s = opt.s;
            const auto p = predictor::table_predict(predictor::table_family_from_name(opt.family), tp);
            emit(jsonio::predicted_json(p), opt.out_path);
            return 0;
        }
        const auto a = jsonio::distribution_from_json(json::parse(slurp(opt.in_path)));
        const auto p = sub->got_subcommand("shorten")
                           ? predictor::shortened_predict(a.counts, a.nu, opt.t)
                           : predictor::punctured_predict(a.counts, a.nu, opt.t);
        emit(jsonio::predicted_json(p), opt.out_path);
        return 0;
    }

    if (app.got_subcommand("fn")) {
        auto* sub = app.get_subcommand("fn");
        if (sub->got_subcommand("power")) {
            auto field = load_field(opt);
            if (!field) throw std::invalid_argument("fn power: --field is required");
            auto f = boolfn::VectorialFunction::from_exponent(field, opt.exponent);
            if (!opt.scale.empty()) {
                const std::uint32_t c = opt.scale == "alpha"
                                            ? field->generator()
                                            : static_cast<std::uint32_t>(std::stoul(opt.scale));
                f = f.scaled(c);
            }
            if (opt.trace_to) f = f.traced_to(opt.trace_to);
            json j;
            j["schema"] = 1;
            j["n"] = f.n();
            j["l"] = f.l();
            j["exponent"] = opt.exponent;
            emit(j, opt.out_path);
            if (!opt.out_path.empty()) write_file(opt.out_path + ".fn", f.to_text());
            return 0;
        }
        if (sub->got_subcommand("family")) {
            boolfn::FamilyFunction fam = [&] {
                if (opt.family == "kasami") return boolfn::kasami(opt.n, opt.i);
                if (opt.family == "gold") return boolfn::gold(opt.n, opt.i);
                if (opt.family == "bracken-tan-tan") return boolfn::bracken_tan_tan(opt.m, opt.i);
                throw std::invalid_argument("fn family: unknown family " + opt.family);
            }();
            json j;
            j["schema"] = 1;
            j["family"] = opt.family;
            j["n"] = fam.f.n();
            j["l"] = fam.f.l();
            j["predicted_s"] = fam.predicted_s;
            if (fam.exponent) j["exponent"] = fam.exponent;
            emit(j, opt.out_path);
            if (!opt.out_path.empty()) write_file(opt.out_path + ".fn", fam.f.to_text());
            return 0;
        }
        auto f = load_fn(opt);
        if (sub->got_subcommand("walsh")) {
            json j;
            j["schema"] = 1;
            if (opt.single_walsh) {
                j["lambda"] = opt.lambda;
                j["mu"] = opt.mu;
                j["walsh"] = f.walsh_direct(static_cast<std::uint32_t>(opt.lambda),
                                            static_cast<std::uint32_t>(opt.mu));
            } else {
                json vals = json::array();
                for (auto v : f.walsh_value_set()) vals.push_back(v);
                j["value_set"] = vals;
                j["bent_vectorial"] = f.is_bent_vectorial();
            }
            emit(j, opt.out_path);
            return 0;
        }
        // diffspec
        const auto sp = f.diff_spectrum();
        json j;
        j["schema"] = 1;
        j["delta"] = sp.delta;
        json hist;
        for (const auto& [v, c] : sp.histogram) hist[std::to_string(v)] = c;
        j["histogram"] = hist;
        const auto s = f.two_valued_s();
        j["two_valued_s"] = s ? json(*s) : json();
        emit(j, opt.out_path);
        return 0;
    }

    if (app.got_subcommand("build")) {
        auto* sub = app.get_subcommand("build");
        constructions::ConstructionReport rep = [&] {
            if (sub->got_subcommand("bent-support"))
                return constructions::code_from_bent_support(load_fn(opt), opt.budget_codewords);
            if (sub->got_subcommand("vectorial"))
                return constructions::code_from_vectorial(load_fn(opt), opt.budget_codewords);
            return constructions::ternary_code(opt.m, opt.budget_codewords);
        }();
        emit(jsonio::construction_json(rep), opt.out_path);
        if (!opt.out_path.empty()) write_file(opt.out_path + ".code", rep.code.to_text());
        return rep.predicted && !rep.match ? 1 : 0;
    }

    if (app.got_subcommand("steiner")) {
        const auto d = constructions::steiner_from_function(load_fn(opt));
        emit(jsonio::design_json(d), opt.out_path);
        return 0;
    }

    if (app.got_subcommand("am")) {
        auto* sub = app.get_subcommand("am");
        auto c = load_code(opt);
        if (sub->got_subcommand("classic")) {
            const auto rep = am::classic_am(c, opt.t, budgets_of(opt));
            emit(jsonio::am_json(rep), opt.out_path);
            return 0;
        }
        if (sub->got_subcommand("generalized")) {
            const auto rep =
                am::generalized_am(c, opt.t, parse_unsigned_list(opt.s_list), budgets_of(opt));
            emit(jsonio::am_json(rep), opt.out_path);
            return 0;
        }
        const auto rep = am::characterization(c, opt.t, budgets_of(opt));
        emit(jsonio::characterization_json(rep), opt.out_path);
        return 0;
    }

    if (app.got_subcommand("repro")) {
        const auto results = repro::run_acceptance(opt.subset);
        bool all = true;
        for (const auto& r : results) {
            all &= r.pass;
            std::ostringstream line;
            line << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ", "
                 << std::fixed << std::setprecision(2) << r.seconds << "s): " << r.detail;
            std::cerr << line.str() << "\n";
        }
        emit(jsonio::acceptance_json(results), opt.out_path);
        return all ? 0 : 1;
    }

    throw CLI::CallForHelp();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes, weight distributions and combinatorial t-designs"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--budget-codewords", opt.budget_codewords, "max codewords to enumerate");
    app.add_option("--budget-design-steps", opt.budget_design_steps, "max design-check steps");
    app.add_option("--seed", opt.seed, "seed for randomized witnesses");
    app.add_option("--out", opt.out_path, "also write the JSON result to this path");

    auto add_field = [&](CLI::App* s) { s->add_option("--field", opt.field_spec, "field spec 'p m [c_m..c_0]'"); };
    auto add_in = [&](CLI::App* s) { s->add_option("--in", opt.in_path, "input file (- for stdin)")->required(); };
    auto add_fn = [&](CLI::App* s) { s->add_option("--fn,--f", opt.fn_path, "function table file")->required(); };

    auto* field = app.add_subcommand("field", "parse and verify a field spec");
    add_field(field);

    auto* codec = app.add_subcommand("code", "weight distribution, dual, shorten, puncture");
    add_field(codec);
    add_in(codec);
    codec->require_subcommand(1);
    codec->add_subcommand("wdist", "exact weight distribution");
    codec->add_subcommand("dual", "dual code distribution");
    auto* shorten = codec->add_subcommand("shorten", "shortened code distribution");
    shorten->add_option("--coords", opt.coords, "coordinate set, e.g. 0,5,7")->required();
    auto* puncture = codec->add_subcommand("puncture", "punctured code distribution");
    puncture->add_option("--coords", opt.coords, "coordinate set")->required();

    auto* mom = app.add_subcommand("moments", "power-moment identities");
    mom->require_subcommand(1);
    auto* mcheck = mom->add_subcommand("check", "verify moments of a (primal, dual) pair");
    mcheck->add_option("--in", opt.in_path, "JSON file {a: dist, adual: dist}")->required();
    mcheck->add_option("--q", opt.q, "field size");
    mcheck->add_option("--t-max", opt.t_max, "check moments t = 0..t_max");
    auto* msolve = mom->add_subcommand("solve", "solve for unknown counts");
    msolve->add_option("--in", opt.in_path, "JSON distribution with known counts")->required();
    msolve->add_option("--unknown", opt.unknown, "unknown weight indices, e.g. 16,20")->required();
    msolve->add_option("--nu", opt.nu, "length")->required();
    msolve->add_option("--m", opt.dim, "dimension")->required();
    msolve->add_option("--q", opt.q, "field size");
    msolve->add_option("--dual-prefix", opt.dual_prefix, "Adual_1..Adual_{s-1}, comma separated");

    auto* des = app.add_subcommand("design", "support designs and verification");
    des->require_subcommand(1);
    auto* dex = des->add_subcommand("extract", "support design of a weight class");
    add_field(dex);
    dex->add_option("--in", opt.in_path, "code file")->required();
    dex->add_option("--weight", opt.weight, "codeword weight")->required();
    auto* dver = des->add_subcommand("verify", "exhaustive t-design check");
    dver->add_option("--in", opt.in_path, "design JSON file")->required();
    dver->add_option("--t", opt.t, "design strength")->required();

    auto* pred = app.add_subcommand("predict", "closed-form distributions");
    pred->require_subcommand(1);
    auto* psh = pred->add_subcommand("shorten", "shortened-code prediction");
    psh->add_option("--in", opt.in_path, "parent distribution JSON")->required();
    psh->add_option("--t", opt.t, "coordinates removed")->required();
    auto* ppu = pred->add_subcommand("puncture", "punctured-code prediction");
    ppu->add_option("--in", opt.in_path, "parent distribution JSON")->required();
    ppu->add_option("--t", opt.t, "coordinates removed")->required();
    auto* pta = pred->add_subcommand("table", "parameterized family tables");
    pta->add_option("--family", opt.family, "bent_code, vbent_short1, two_valued_code, ...")->required();
    pta->add_option("--n", opt.n, "input degree");
    pta->add_option("--nu-f", opt.nu_f, "bent support size");
    pta->add_option("--m", opt.m, "half input degree (vectorial families)");
    pta->add_option("--ell", opt.ell, "output degree");
    pta->add_option("--s", opt.s, "differential exponent");

    auto* fn = app.add_subcommand("fn", "vectorial Boolean functions");
    fn->require_subcommand(1);
    auto* fp = fn->add_subcommand("power", "table of c * x^e, optionally trace-compressed");
    add_field(fp);
    fp->add_option("--e", opt.exponent, "exponent")->required();
    fp->add_option("--scale", opt.scale, "output scale: an element code, or 'alpha'");
    fp->add_option("--trace-to", opt.trace_to, "compose with the trace onto GF(2^d)");
    auto* fw = fn->add_subcommand("walsh", "Walsh value set or a single coefficient");
    add_fn(fw);
    fw->add_option("--lambda", opt.lambda, "output mask (single-coefficient mode)");
    fw->add_option("--mu", opt.mu, "input mask (single-coefficient mode)");
    fw->add_flag("--single", opt.single_walsh, "compute W(lambda, mu) by direct summation");
    auto* fd = fn->add_subcommand("diffspec", "differential spectrum");
    add_fn(fd);
    auto* ff = fn->add_subcommand("family", "named function families");
    ff->add_option("--family,family", opt.family, "kasami | gold | bracken-tan-tan")->required();
    ff->add_option("--n", opt.n, "input degree (kasami, gold)");
    ff->add_option("--i", opt.i, "family index");
    ff->add_option("--m", opt.m, "third of the input degree (bracken-tan-tan)");

    auto* build = app.add_subcommand("build", "code constructions");
    build->require_subcommand(1);
    auto* bb = build->add_subcommand("bent-support", "code on the support of a bent function");
    add_fn(bb);
    add_field(bb);
    auto* bv = build->add_subcommand("vectorial", "length-2^n code of a vectorial function");
    add_fn(bv);
    auto* bt = build->add_subcommand("ternary", "ternary two-dimensional trace code");
    bt->add_option("--m", opt.m, "odd extension degree")->required();

    auto* st = app.add_subcommand("steiner", "weight-4 dual blocks of a function code");
    add_fn(st);

    auto* amc = app.add_subcommand("am", "design-support criteria");
    amc->require_subcommand(1);
    auto* amcl = amc->add_subcommand("classic", "weight-count criterion");
    add_field(amcl);
    amcl->add_option("--in", opt.in_path, "code file")->required();
    amcl->add_option("--t", opt.t, "design strength")->required();
    auto* amge = amc->add_subcommand("generalized", "exempted-weights criterion");
    add_field(amge);
    amge->add_option("--in", opt.in_path, "code file")->required();
    amge->add_option("--t", opt.t, "design strength")->required();
    amge->add_option("--S", opt.s_list, "exempted weights, e.g. 28,36")->required();
    auto* amch = amc->add_subcommand("characterize", "shortened/punctured invariance statements");
    add_field(amch);
    amch->add_option("--in", opt.in_path, "code file")->required();
    amch->add_option("--t", opt.t, "design strength")->required();

    auto* rep = app.add_subcommand("repro", "rebuild and verify the reference examples");
    auto* repex = rep->add_subcommand("paper-examples", "run the acceptance criteria");
    repex->add_option("--subset", opt.subset, "one criterion name, or 'all'");
    rep->require_subcommand(1);

    // Global flags may appear after a subcommand name.
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        return run(app, opt);
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
