#include "livlab/scenario.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "livlab/error.hpp"

namespace livlab {

HyperbolicAutomorphism Scenario::base() const {
    return HyperbolicAutomorphism::from_matrix(matrix[0], matrix[1], matrix[2], matrix[3]);
}

FourierCocycle Scenario::cocycle() const {
    FourierCocycle phi(mean);
    for (const auto& m : modes)
        phi.add_mode(static_cast<std::int64_t>(m[0]), static_cast<std::int64_t>(m[1]), m[2], m[3]);
    return phi;
}

SkewSystem Scenario::skew() const { return {base(), cocycle(), fiber}; }

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

double parse_double(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::parse_error, "scenario: bad number '" + s + "' in " + where);
    }
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::parse_error, "scenario: bad integer '" + s + "' in " + where);
    }
}

bool looks_numeric(const std::string& s) {
    return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' ||
                          s[0] == '+' || s[0] == '.');
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    s.modes.clear();
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        std::string where = "line " + std::to_string(lineno);
        if (toks[0].front() == '[') {
            if (toks.size() != 1 || toks[0].back() != ']')
                fail(ErrorKind::parse_error, "scenario: malformed section header at " + where);
            section = toks[0].substr(1, toks[0].size() - 2);
            if (section != "base" && section != "cocycle" && section != "fiber" &&
                section != "run" && section != "path")
                fail(ErrorKind::parse_error, "scenario: unknown section [" + section + "]");
            continue;
        }
        const std::string& key = toks[0];
        auto need = [&](std::size_t n) {
            if (toks.size() != n + 1)
                fail(ErrorKind::parse_error,
                     "scenario: key '" + key + "' expects " + std::to_string(n) + " values at " +
                         where);
        };
        if (section == "base") {
            if (key == "matrix") {
                need(4);
                for (int i = 0; i < 4; ++i) s.matrix[i] = parse_int(toks[i + 1], where);
            } else {
                fail(ErrorKind::parse_error, "scenario: unknown key '" + key + "' in [base]");
            }
        } else if (section == "cocycle") {
            if (key == "mean") {
                need(1);
                s.mean = parse_double(toks[1], where);
            } else if (looks_numeric(key)) {
                if (toks.size() != 4)
                    fail(ErrorKind::parse_error, "scenario: mode line needs 'k1 k2 a b' at " + where);
                s.modes.push_back({static_cast<double>(parse_int(toks[0], where)),
                                   static_cast<double>(parse_int(toks[1], where)),
                                   parse_double(toks[2], where), parse_double(toks[3], where)});
            } else {
                fail(ErrorKind::parse_error, "scenario: unknown key '" + key + "' in [cocycle]");
            }
        } else if (section == "fiber") {
            if (key == "kind") {
                need(1);
                if (toks[1] == "circle")
                    s.fiber = FiberKind::circle;
                else if (toks[1] == "line")
                    s.fiber = FiberKind::line;
                else
                    fail(ErrorKind::parse_error, "scenario: fiber kind must be circle or line");
            } else {
                fail(ErrorKind::parse_error, "scenario: unknown key '" + key + "' in [fiber]");
            }
        } else if (section == "run") {
            if (key == "grid_n") {
                need(1);
                s.grid_n = static_cast<int>(parse_int(toks[1], where));
            } else if (key == "tol") {
                need(1);
                s.tol = parse_double(toks[1], where);
                if (!(s.tol > 0.0)) fail(ErrorKind::parse_error, "scenario: tol must be > 0");
            } else if (key == "seed") {
                need(1);
                s.seed = static_cast<std::uint64_t>(parse_int(toks[1], where));
            } else if (key == "max_period") {
                need(1);
                s.max_period = static_cast<int>(parse_int(toks[1], where));
            } else if (key == "n_alternates") {
                need(1);
                s.n_alternates = static_cast<int>(parse_int(toks[1], where));
            } else if (key == "radius") {
                need(1);
                s.radius = parse_double(toks[1], where);
            } else if (key == "anchor") {
                need(2);
                s.anchor = wrap(parse_double(toks[1], where), parse_double(toks[2], where));
            } else {
                fail(ErrorKind::parse_error, "scenario: unknown key '" + key + "' in [run]");
            }
        } else if (section == "path") {
            if (key == "quad") {
                need(4);
                s.path.kind = PathSpec::Kind::quad;
                s.path.start = wrap(parse_double(toks[1], where), parse_double(toks[2], where));
                s.path.a = parse_double(toks[3], where);
                s.path.b = parse_double(toks[4], where);
            } else if (key == "between") {
                need(4);
                s.path.kind = PathSpec::Kind::between;
                s.path.start = wrap(parse_double(toks[1], where), parse_double(toks[2], where));
                s.path.target = wrap(parse_double(toks[3], where), parse_double(toks[4], where));
            } else if (key == "leg") {
                need(4);
                if (s.path.kind != PathSpec::Kind::legs) {
                    s.path.kind = PathSpec::Kind::legs;
                    s.path.legs.clear();
                }
                PathSpec::LegSpec leg;
                if (toks[1] != "u" && toks[1] != "s")
                    fail(ErrorKind::parse_error, "scenario: leg kind must be u or s at " + where);
                leg.kind = toks[1][0];
                leg.start = wrap(parse_double(toks[2], where), parse_double(toks[3], where));
                leg.displacement = parse_double(toks[4], where);
                s.path.legs.push_back(leg);
            } else {
                fail(ErrorKind::parse_error, "scenario: unknown key '" + key + "' in [path]");
            }
        } else {
            fail(ErrorKind::parse_error, "scenario: content before any section at " + where);
        }
    }
    return s;
}

Scenario load_scenario(const std::string& file) {
    std::ifstream in(file);
    if (!in) fail(ErrorKind::parse_error, "scenario: cannot open '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream os;
    os << "[base]\n";
    os << "matrix " << s.matrix[0] << " " << s.matrix[1] << " " << s.matrix[2] << " "
       << s.matrix[3] << "\n";
    os << "[cocycle]\n";
    os << "mean " << fmt(s.mean) << "\n";
    for (const auto& m : s.modes)
        os << static_cast<std::int64_t>(m[0]) << " " << static_cast<std::int64_t>(m[1]) << " "
           << fmt(m[2]) << " " << fmt(m[3]) << "\n";
    os << "[fiber]\n";
    os << "kind " << (s.fiber == FiberKind::circle ? "circle" : "line") << "\n";
    os << "[run]\n";
    os << "grid_n " << s.grid_n << "\n";
    os << "tol " << fmt(s.tol) << "\n";
    os << "seed " << s.seed << "\n";
    os << "max_period " << s.max_period << "\n";
    os << "n_alternates " << s.n_alternates << "\n";
    os << "radius " << fmt(s.radius) << "\n";
    os << "anchor " << fmt(s.anchor.x1) << " " << fmt(s.anchor.x2) << "\n";
    if (s.path.kind == PathSpec::Kind::quad) {
        os << "[path]\n";
        os << "quad " << fmt(s.path.start.x1) << " " << fmt(s.path.start.x2) << " "
           << fmt(s.path.a) << " " << fmt(s.path.b) << "\n";
    } else if (s.path.kind == PathSpec::Kind::between) {
        os << "[path]\n";
        os << "between " << fmt(s.path.start.x1) << " " << fmt(s.path.start.x2) << " "
           << fmt(s.path.target.x1) << " " << fmt(s.path.target.x2) << "\n";
    } else if (s.path.kind == PathSpec::Kind::legs) {
        os << "[path]\n";
        for (const auto& leg : s.path.legs)
            os << "leg " << leg.kind << " " << fmt(leg.start.x1) << " " << fmt(leg.start.x2) << " "
               << fmt(leg.displacement) << "\n";
    }
    return os.str();
}

}  // namespace livlab
