#include "qcong/dissect.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "qcong/expr.hpp"

namespace qcong {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::string binding_string(const std::map<std::string, long long>& b) {
    std::string s;
    for (const auto& [k, v] : b) {
        if (!s.empty()) s += ' ';
        s += k + "=" + std::to_string(v);
    }
    return s;
}

std::optional<std::size_t> first_nonzero(const TruncatedSeries& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0) return i;
    return std::nullopt;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::map<std::string, long long> parse_binding_group(const std::string& body,
                                                     const std::string& where) {
    std::map<std::string, long long> m;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw error("fixture " + where + ": malformed binding '" + item + "'");
        std::string name = strip(item.substr(0, eq));
        std::string val = strip(item.substr(eq + 1));
        try {
            m[name] = std::stoll(val);
        } catch (const std::exception&) {
            throw error("fixture " + where + ": bad integer '" + val + "'");
        }
    }
    return m;
}

} // namespace

TruncatedSeries extract(const TruncatedSeries& s, const Progression& p) {
    const long long a = p.modulus;
    const long long b = p.residue;
    if (b > static_cast<long long>(s.order()))
        throw range_error("extraction residue " + std::to_string(b) +
                          " exceeds series order " + std::to_string(s.order()));
    std::size_t out_order =
        static_cast<std::size_t>((static_cast<long long>(s.order()) - b) / a);
    std::vector<Coeff> c(out_order + 1);
    for (std::size_t i = 0; i <= out_order; ++i)
        c[i] = s[static_cast<std::size_t>(a * static_cast<long long>(i) + b)];
    return TruncatedSeries(out_order, std::move(c));
}

std::vector<IdentityFixture> parse_fixtures(const std::string& text) {
    std::vector<IdentityFixture> out;
    IdentityFixture cur;
    bool open = false;

    auto flush = [&]() {
        if (!open) return;
        if (cur.name.empty() || cur.lhs.empty() || cur.rhs.empty())
            throw error("fixture record missing name/lhs/rhs near '" + cur.name +
                        "'");
        if (cur.dissect_modulus && (cur.dissect_residue < 0 ||
                                    cur.dissect_residue >= *cur.dissect_modulus))
            throw error("fixture " + cur.name + ": residue out of range");
        out.push_back(std::move(cur));
        cur = IdentityFixture{};
        open = false;
    };

    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::string t = strip(line);
        if (t.empty()) {
            flush();
            continue;
        }
        if (t[0] == '#') continue;
        auto colon = t.find(':');
        if (colon == std::string::npos)
            throw error("fixture file: expected 'key: value', got '" + t + "'");
        std::string key = strip(t.substr(0, colon));
        std::string val = strip(t.substr(colon + 1));
        open = true;
        if (key == "name") {
            cur.name = val;
        } else if (key == "lhs") {
            cur.lhs = val;
        } else if (key == "rhs") {
            cur.rhs = val;
        } else if (key == "mod") {
            cur.mod_text = val;
        } else if (key == "order") {
            cur.order = std::stol(val);
        } else if (key == "dissect") {
            cur.dissect_modulus = std::stoll(val);
        } else if (key == "residue") {
            cur.dissect_residue = std::stoll(val);
        } else if (key == "note") {
            cur.note = val;
        } else if (key == "params") {
            // whitespace-separated {a=2,b=1} groups
            std::size_t i = 0;
            while (i < val.size()) {
                if (val[i] != '{') {
                    ++i;
                    continue;
                }
                std::size_t close = val.find('}', i);
                if (close == std::string::npos)
                    throw error("fixture " + cur.name + ": unterminated '{' in params");
                cur.params.push_back(
                    parse_binding_group(val.substr(i + 1, close - i - 1), cur.name));
                i = close + 1;
            }
        } else {
            throw error("fixture file: unknown key '" + key + "'");
        }
    }
    flush();
    return out;
}

VerificationReport check_identity(const IdentityFixture& f, std::size_t N) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = f.name;
    rep.note = f.note;

    const std::size_t order = f.order ? static_cast<std::size_t>(*f.order) : N;
    rep.order = static_cast<long>(order);

    std::vector<std::map<std::string, long long>> bindings = f.params;
    if (bindings.empty()) bindings.push_back({});

    rep.pass = true;
    std::string checked_params;
    for (const auto& b : bindings) {
        std::string lhs_text = parametrize(f.lhs, b);
        std::string rhs_text = parametrize(f.rhs, b);
        if (!checked_params.empty()) checked_params += "; ";
        checked_params += binding_string(b);

        TruncatedSeries lhs = eval(parse(lhs_text), order, lhs_text);
        TruncatedSeries diff(0);
        if (f.dissect_modulus) {
            TruncatedSeries got = extract(lhs, Progression(*f.dissect_modulus,
                                                           f.dissect_residue));
            TruncatedSeries want = eval(parse(rhs_text), got.order(), rhs_text);
            diff = sub(got, want);
        } else {
            TruncatedSeries rhs = eval(parse(rhs_text), order, rhs_text);
            diff = sub(lhs, rhs);
        }
        if (f.mod_text) {
            Coeff m(parametrize(*f.mod_text, b));
            diff = reduce_mod(diff, m);
        }
        ++rep.instances_checked;
        if (auto bad = first_nonzero(diff)) {
            rep.pass = false;
            rep.first_violation = {static_cast<long>(*bad), diff[*bad].get_str()};
            std::string msg = "binding {" + binding_string(b) +
                              "} differs first at q^" + std::to_string(*bad);
            if (!f.note.empty())
                msg += "; possible source discrepancy: " + f.note;
            rep.note = msg;
            break;
        }
    }
    rep.params = checked_params;
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_dissection_consistency(
    const std::string& expr, long long a,
    const std::vector<std::pair<long long, std::string>>& parts, std::size_t N,
    bool complete, std::optional<Coeff> modulus) {
    auto t0 = std::chrono::steady_clock::now();

    std::set<long long> seen;
    for (const auto& [r, _] : parts) {
        if (r < 0 || r >= a)
            throw domain_error("residue " + std::to_string(r) +
                               " outside [0," + std::to_string(a) + ")");
        if (!seen.insert(r).second)
            throw domain_error("duplicate residue " + std::to_string(r));
    }

    VerificationReport rep;
    rep.id = "dissection(" + std::to_string(a) + ") of '" + expr + "'";
    rep.order = static_cast<long>(N);
    rep.pass = true;

    TruncatedSeries whole = eval(parse(expr), N, expr);

    auto check_residue = [&](long long r, const TruncatedSeries& want) {
        TruncatedSeries got = extract(whole, Progression(a, r));
        TruncatedSeries diff = sub(got, want);
        if (modulus) diff = reduce_mod(diff, *modulus);
        ++rep.instances_checked;
        if (rep.pass) {
            if (auto bad = first_nonzero(diff)) {
                rep.pass = false;
                rep.first_violation = {static_cast<long>(*bad),
                                       diff[*bad].get_str()};
                rep.note = "residue " + std::to_string(r) +
                           " differs first at q^" + std::to_string(*bad);
            }
        }
    };

    for (const auto& [r, part_text] : parts) {
        std::size_t part_order =
            static_cast<std::size_t>((static_cast<long long>(N) - r) / a);
        TruncatedSeries want = eval(parse(part_text), part_order, part_text);
        check_residue(r, want);
    }
    if (complete) {
        for (long long r = 0; r < a; ++r) {
            if (seen.count(r)) continue;
            if (r > static_cast<long long>(N)) break;
            std::size_t part_order =
                static_cast<std::size_t>((static_cast<long long>(N) - r) / a);
            check_residue(r, TruncatedSeries::zero(part_order));
        }
    }
    rep.runtime_ms = ms_since(t0);
    return rep;
}

} // namespace qcong
