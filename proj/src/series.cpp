#include "vinc/series.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "vinc/guards.hpp"
#include "vinc/signatures.hpp"

namespace vinc {

namespace {

std::optional<double> to_number(const std::string& tok) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string bad_token(const std::string& tok, int line) {
    return "not a number: '" + tok + "' on line " + std::to_string(line);
}

}  // namespace

std::vector<double> parse_series(std::istream& in, std::optional<int> column) {
    std::vector<double> out;
    std::string line;
    int lineno = 0;
    if (column && *column < 1) throw ParseError("column index must be >= 1");
    while (std::getline(in, line)) {
        ++lineno;
        if (!column) {
            for (char& c : line)
                if (c == ',') c = ' ';
            std::istringstream is(line);
            std::string tok;
            while (is >> tok) {
                auto v = to_number(tok);
                if (!v) throw ParseError(bad_token(tok, lineno));
                out.push_back(*v);
            }
            continue;
        }
        if (trim(line).empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(trim(f));
        if (!line.empty() && line.back() == ',') fields.push_back("");
        if (static_cast<int>(fields.size()) < *column)
            throw ParseError("line " + std::to_string(lineno) + " has no column " + std::to_string(*column));
        const std::string& tok = fields[static_cast<std::size_t>(*column - 1)];
        auto v = to_number(tok);
        if (!v) {
            if (out.empty() && lineno == 1) continue;  // header
            throw ParseError(bad_token(tok, lineno));
        }
        out.push_back(*v);
    }
    return out;
}

std::vector<double> read_series(const std::string& path, std::optional<int> column, std::istream& stdin_stream) {
    if (path == "-") return parse_series(stdin_stream, column);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open series file '" + path + "'");
    return parse_series(f, column);
}

Permutation standardize_series(const std::vector<double>& series) {
    return standardize_word<double>(std::span<const double>(series));
}

double shannon_entropy(const std::vector<Rational>& freqs, double base) {
    double h = 0;
    for (const auto& p : freqs) {
        if (p <= 0) continue;
        double x = p.get_d();
        h -= x * std::log(x);
    }
    if (base > 0) h /= std::log(base);
    return h == 0 ? 0.0 : h;  // no -0
}

namespace {

void finish(EntropyReport& r) {
    std::vector<Rational> f;
    for (auto& p : r.patterns) {
        p.frequency = r.total == 0 ? Rational(0) : Rational(p.count, r.total);
        p.frequency.canonicalize();
        f.push_back(p.frequency);
    }
    r.entropy = shannon_entropy(f, r.base);
}

}  // namespace

EntropyReport consecutive_entropy(const std::vector<double>& series, int order, double base) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    if (static_cast<std::size_t>(order) > series.size())
        throw std::invalid_argument("order " + std::to_string(order) + " exceeds series length " +
                                    std::to_string(series.size()));
    std::map<Permutation, Integer> counts;
    for (std::size_t i = 0; i + static_cast<std::size_t>(order) <= series.size(); ++i) {
        std::span<const double> w(series.data() + i, static_cast<std::size_t>(order));
        counts[standardize_word<double>(w)] += 1;
    }
    EntropyReport r;
    r.mode = "consecutive";
    r.order = order;
    r.base = base;
    r.total = static_cast<unsigned long>(series.size() - static_cast<std::size_t>(order) + 1);
    for (const auto& [p, c] : counts) r.patterns.push_back({p.to_string(), c, 0});
    finish(r);
    return r;
}

EntropyReport vincular_entropy(const std::vector<double>& series, const std::vector<VincularPattern>& patterns,
                               double base) {
    EntropyReport r;
    r.mode = "vincular";
    r.base = base;
    r.total = 0;
    for (const auto& pat : patterns) {
        r.order = std::max(r.order, pat.size());
        Integer c = pattern_count_in_series(series, pat);
        r.total += c;
        r.patterns.push_back({pat.to_string(), c, 0});
    }
    finish(r);
    return r;
}

namespace {
std::string base_name(double base) {
    if (base <= 0) return "nats";
    if (base == 2) return "bits";
    std::ostringstream os;
    os << "base " << base;
    return os.str();
}
}  // namespace

std::string EntropyReport::to_text() const {
    std::ostringstream os;
    os << mode << " order " << order << ", total " << total.get_str() << "\n";
    for (const auto& p : patterns) os << p.pattern << " " << p.count.get_str() << " " << rational_string(p.frequency) << "\n";
    os << "entropy " << std::fixed << std::setprecision(6) << entropy << " " << base_name(base);
    return os.str();
}

std::string EntropyReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = "entropy";
    j["mode"] = mode;
    j["order"] = order;
    j["total"] = total.get_str();
    j["patterns"] = nlohmann::ordered_json::array();
    for (const auto& p : patterns)
        j["patterns"].push_back({{"pattern", p.pattern}, {"count", p.count.get_str()}, {"frequency", rational_string(p.frequency)}});
    if (base > 0)
        j["base"] = base;
    else
        j["base"] = "e";
    j["entropy"] = entropy;
    return j.dump(2);
}

}  // namespace vinc
