#include "moran/measure.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "moran/errors.hpp"

namespace moran {

ContractionRatio canonicalize_ratio(Integer p, Integer q, std::int64_t r) {
    if (r < 1)
        throw std::domain_error("contraction ratio: r must be >= 1");
    if (p < 1)
        throw std::domain_error("contraction ratio: p must be >= 1");
    if (p >= q)
        throw std::domain_error("contraction ratio: requires p < q so that rho < 1");
    if (gcd_int(p, q) != 1)
        throw std::domain_error("contraction ratio: p/q must be in lowest terms");

    // p and q are both m-th powers exactly when m divides their maximal
    // perfect-power exponents, so the largest common exponent is the gcd of
    // the two (p = 1 is an m-th power for every m). Pulling the common g-th
    // root for g = gcd(m, r) preserves (p/q)^(1/r) and shrinks r until no
    // prime divisor of r admits further extraction.
    for (;;) {
        unsigned long eq = perfect_power_decompose(q).exponent;
        unsigned long m = (p == 1) ? eq : std::gcd(static_cast<unsigned long>(perfect_power_decompose(p).exponent), eq);
        auto g = std::gcd(static_cast<std::int64_t>(m), r);
        if (g <= 1)
            break;
        p = pow_int(*exact_root(p, m), m / g);
        q = pow_int(*exact_root(q, m), m / g);
        r /= g;
    }
    return {p, q, r};
}

DigitSequence make_digit_sequence(std::vector<std::int64_t> preperiod,
                                  std::vector<std::int64_t> period) {
    if (period.empty())
        throw std::domain_error("digit sequence: period must be nonempty");
    for (auto d : preperiod)
        if (!is_prime(Integer(d)))
            throw std::domain_error("digit " + std::to_string(d) + " is not prime");
    for (auto d : period)
        if (!is_prime(Integer(d)))
            throw std::domain_error("digit " + std::to_string(d) + " is not prime");
    return {std::move(preperiod), std::move(period)};
}

std::int64_t digit_at(const DigitSequence& seq, std::int64_t n) {
    if (n < 1)
        throw std::domain_error("digit_at: levels start at n = 1");
    auto pre = static_cast<std::int64_t>(seq.preperiod.size());
    if (n <= pre)
        return seq.preperiod[static_cast<std::size_t>(n - 1)];
    auto idx = (n - pre - 1) % static_cast<std::int64_t>(seq.period.size());
    return seq.period[static_cast<std::size_t>(idx)];
}

std::int64_t sup_digit(const DigitSequence& seq) {
    std::int64_t m = 0;
    for (auto d : seq.preperiod)
        m = std::max(m, d);
    for (auto d : seq.period)
        m = std::max(m, d);
    return m;
}

std::vector<std::int64_t> distinct_digits(const DigitSequence& seq) {
    std::vector<std::int64_t> all(seq.preperiod);
    all.insert(all.end(), seq.period.begin(), seq.period.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

struct ConfigValue {
    std::string text;
    int line;
    int column;
};

Integer parse_integer_field(const ConfigValue& v, const std::string& key) {
    const std::string& s = v.text;
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size())
        throw ParseError("key '" + key + "' expects an integer", v.line, v.column);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("key '" + key + "' expects an integer", v.line, v.column);
    return Integer(s);
}

std::vector<std::int64_t> parse_list_field(const ConfigValue& v, const std::string& key) {
    const std::string& s = v.text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("key '" + key + "' expects a list like [3,5]", v.line, v.column);
    std::vector<std::int64_t> out;
    std::string inner = s.substr(1, s.size() - 2);
    // tolerate spaces around entries; empty brackets mean the empty list
    std::stringstream ss(inner);
    std::string item;
    bool any_char = inner.find_first_not_of(" \t") != std::string::npos;
    if (!any_char)
        return out;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ParseError("empty entry in list for key '" + key + "'", v.line, v.column);
        std::string tok = item.substr(b, e - b + 1);
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("list entry '" + tok + "' is not a positive integer", v.line, v.column);
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::out_of_range&) {
            throw ParseError("list entry '" + tok + "' is out of range", v.line, v.column);
        }
    }
    return out;
}

} // namespace

MoranMeasure parse_measure_config(std::string_view text) {
    static const std::vector<std::string> known = {"p", "q", "r", "preperiod", "period"};
    std::map<std::string, ConfigValue> fields;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key = value'", line_no, static_cast<int>(first) + 1);
        auto key_end = line.find_last_not_of(" \t", eq - 1);
        if (key_end == std::string_view::npos || key_end < first)
            throw ParseError("missing key before '='", line_no, 1);
        std::string key(line.substr(first, key_end - first + 1));
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError("unknown key '" + key + "'", line_no, static_cast<int>(first) + 1);
        if (fields.count(key))
            throw ParseError("duplicate key '" + key + "'", line_no, static_cast<int>(first) + 1);

        auto val_begin = line.find_first_not_of(" \t", eq + 1);
        auto val_end = line.find_last_not_of(" \t\r");
        if (val_begin == std::string_view::npos || val_end < val_begin)
            throw ParseError("missing value for key '" + key + "'", line_no, static_cast<int>(eq) + 2);
        fields[key] = ConfigValue{std::string(line.substr(val_begin, val_end - val_begin + 1)),
                                  line_no, static_cast<int>(val_begin) + 1};
    }

    for (const auto& req : {"p", "q", "r", "period"})
        if (!fields.count(req))
            throw ParseError(std::string("missing required key '") + req + "'");

    Integer p = parse_integer_field(fields.at("p"), "p");
    Integer q = parse_integer_field(fields.at("q"), "q");
    Integer r_raw = parse_integer_field(fields.at("r"), "r");
    if (r_raw < 1 || r_raw > 1000000)
        throw ParseError("r must be in [1, 10^6]", fields.at("r").line, fields.at("r").column);

    std::vector<std::int64_t> preperiod;
    if (fields.count("preperiod"))
        preperiod = parse_list_field(fields.at("preperiod"), "preperiod");
    std::vector<std::int64_t> period = parse_list_field(fields.at("period"), "period");

    MoranMeasure m;
    try {
        m.ratio = canonicalize_ratio(p, q, r_raw.get_si());
        m.digits = make_digit_sequence(std::move(preperiod), std::move(period));
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    return m;
}

MoranMeasure load_measure_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open measure config '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_measure_config(ss.str());
}

} // namespace moran
