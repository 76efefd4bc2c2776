#include "vinc/cli.hpp"

#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vinc/expression.hpp"
#include "vinc/guards.hpp"
#include "vinc/hopf_tools.hpp"
#include "vinc/series.hpp"
#include "vinc/signatures.hpp"

namespace vinc {

namespace {

using json = nlohmann::ordered_json;

Composition parse_partition(std::string text) {
    if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size() || v < 1) throw ParseError("bad partition part '" + tok + "'");
        parts.push_back(v);
    }
    return Composition(parts);
}

struct CountOpts {
    std::string file, pattern, partition;
    int column = 0;
    bool json = false;
};

struct EntropyOpts {
    std::string file, mode = "consecutive";
    int order = 0, column = 0;
    std::vector<std::string> patterns;
    double base = 0;
    bool json = false;
};

struct EvalOpts {
    std::string expr;
    bool json = false;
};

struct VerifyOpts {
    std::string law;
    int max_size = -1, pattern_size = -1, spots = 8;
    std::uint64_t seed = 0;
    bool json = false, list = false;
};

std::optional<int> column_of(int c) { return c > 0 ? std::optional<int>(c) : std::nullopt; }

int cmd_count(const CountOpts& o, std::ostream& out, std::istream& in) {
    auto series = read_series(o.file, column_of(o.column), in);
    VincularPattern pat = VincularPattern::parse(o.pattern);
    const int n = static_cast<int>(series.size());
    Composition host = n == 0 ? Composition{} : Composition({n});
    if (!o.partition.empty()) {
        host = parse_partition(o.partition);
        if (host.size() != n)
            throw ParseError("partition " + host.to_string() + " has size " + std::to_string(host.size()) +
                             " but the series has " + std::to_string(n) + " values");
    }
    Integer c = gpc_count(host, standardize_series(series), pat);
    if (o.json) {
        json j;
        j["command"] = "count";
        j["pattern"] = pat.to_string();
        j["partition"] = host.parts();
        j["length"] = n;
        j["count"] = c.get_str();
        out << j.dump(2) << "\n";
    } else {
        out << c.get_str() << "\n";
    }
    return 0;
}

int cmd_entropy(const EntropyOpts& o, std::ostream& out, std::istream& in) {
    if (o.base < 0 || o.base == 1) throw ParseError("--base must be positive and not 1");
    auto series = read_series(o.file, column_of(o.column), in);
    EntropyReport r;
    if (o.mode == "consecutive") {
        if (o.order < 1) throw ParseError("--order is required in consecutive mode");
        r = consecutive_entropy(series, o.order, o.base);
    } else {
        if (o.patterns.empty()) throw ParseError("vincular mode needs at least one --pattern");
        std::vector<VincularPattern> pats;
        for (const auto& p : o.patterns) pats.push_back(VincularPattern::parse(p));
        r = vincular_entropy(series, pats, o.base);
    }
    out << (o.json ? r.to_json() : r.to_text()) << "\n";
    return 0;
}

int cmd_eval(const EvalOpts& o, std::ostream& out) {
    Value v = evaluate_expression(o.expr);
    if (o.json) {
        json j;
        j["command"] = "eval";
        j["expression"] = o.expr;
        j["kind"] = value_kind(v);
        j["result"] = value_string(v);
        j["terms"] = json::array();
        for (const auto& t : value_terms(v)) {
            json e;
            e["coeff"] = t.coeff;
            if (!t.basis.empty()) e["basis"] = t.basis;
            if (!t.legs.empty()) e["legs"] = t.legs;
            j["terms"].push_back(e);
        }
        out << j.dump(2) << "\n";
    } else {
        out << value_string(v) << "\n";
    }
    return 0;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
    if (o.list) {
        if (o.json) {
            json j = json::array();
            for (const auto& l : law_catalog())
                j.push_back({{"name", l.name},
                             {"description", l.description},
                             {"default_bound", l.default_bound},
                             {"exhaustive_cap", l.exhaustive_cap}});
            out << j.dump(2) << "\n";
        } else {
            for (const auto& l : law_catalog()) out << l.name << " (default " << l.default_bound << "): " << l.description << "\n";
        }
        return 0;
    }
    if (o.law.empty()) {
        err << "error: --law is required (see --list)\n";
        return 2;
    }
    if (!is_known_law(o.law)) {
        err << "error: unknown law '" << o.law << "' (see --list)\n";
        return 2;
    }
    int bound = o.max_size;
    if (bound < 0)
        for (const auto& l : law_catalog())
            if (l.name == o.law) bound = l.default_bound;
    VerifyOptions vo;
    vo.seed = o.seed;
    vo.spot_checks = o.spots;
    vo.pattern_size = o.pattern_size;
    LawReport r = verify_law(o.law, bound, vo);
    out << (o.json ? r.to_json() : r.to_text()) << "\n";
    return r.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Hopf algebras of interval partitions, permutations and vincular patterns", "vinc"};
    app.require_subcommand(1);

    CountOpts co;
    auto* count = app.add_subcommand("count", "Count a vincular pattern in a numeric series");
    count->add_option("file", co.file, "Series file, or - for stdin")->required();
    count->add_option("pattern", co.pattern, "Pattern such as 21|3")->required();
    count->add_option("--partition", co.partition, "Host blocks, e.g. 1,2,2 (default: one block)");
    count->add_option("--column", co.column, "1-based CSV column")->check(CLI::PositiveNumber);
    count->add_flag("--json", co.json, "JSON output");

    EntropyOpts eo;
    auto* entropy = app.add_subcommand("entropy", "Ordinal pattern entropy of a numeric series");
    entropy->add_option("file", eo.file, "Series file, or - for stdin")->required();
    entropy->add_option("--order", eo.order, "Window length (consecutive mode)");
    entropy->add_option("--mode", eo.mode, "consecutive or vincular")->check(CLI::IsMember({"consecutive", "vincular"}));
    entropy->add_option("--pattern", eo.patterns, "Pattern to tabulate (vincular mode, repeatable)");
    entropy->add_option("--base", eo.base, "Logarithm base (default e)");
    entropy->add_option("--column", eo.column, "1-based CSV column")->check(CLI::PositiveNumber);
    entropy->add_flag("--json", eo.json, "JSON output");

    EvalOpts vo;
    auto* eval = app.add_subcommand("eval", "Evaluate an algebra expression");
    eval->add_option("expression", vo.expr, "e.g. qspart([2],[2])")->required();
    eval->add_flag("--json", vo.json, "JSON output");

    VerifyOpts wo;
    auto* verify = app.add_subcommand("verify", "Check an algebraic law up to a size bound");
    verify->add_option("--law", wo.law, "Law name");
    verify->add_option("--max-size", wo.max_size, "Size bound (default: the law's own)");
    verify->add_option("--seed", wo.seed, "Seed for spot checks");
    verify->add_option("--pattern-size", wo.pattern_size, "Pattern size for signature laws");
    verify->add_option("--spots", wo.spots, "Random instances per size above the exhaustive cap");
    verify->add_flag("--json", wo.json, "JSON output");
    verify->add_flag("--list", wo.list, "List the known laws");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count) return cmd_count(co, out, in);
        if (*entropy) return cmd_entropy(eo, out, in);
        if (*eval) return cmd_eval(vo, out);
        if (*verify) return cmd_verify(wo, out, err);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace vinc
