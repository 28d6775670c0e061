#include "ncdisc/algebra_file.hpp"

#include <fstream>
#include <sstream>

#include "ncdisc/errors.hpp"
#include "ncdisc/expr.hpp"

namespace ncdisc {

namespace {

[[noreturn]] void fail_line(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) fail_line(line, what + " is not an integer");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail_line(line, what + " is not an integer");
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

struct RawRelation {
    int line;
    int i, j; // 0-based, i < j
    std::string literal;
};

LoadedAlgebra preset(const std::string& kind, const std::string& arg) {
    if (kind == "Wn" || kind == "kminus1") {
        int n = 0;
        try {
            n = std::stoi(arg);
        } catch (const std::exception&) {
            throw ParseError("preset " + kind + ": bad generator count '" +
                             arg + "'");
        }
        if (n < 1 || n > 16)
            throw ParseError("preset " + kind +
                             ": generator count out of range 1..16");
        FieldPtr field = MinimalPolynomial::rationals();
        LoadedAlgebra out;
        out.algebra = kind == "Wn" ? make_wn(n, field)
                                   : make_kminus1(n, field);
        out.center_powers = std::vector<int>(static_cast<size_t>(n), 2);
        return out;
    }
    if (kind == "Aq") {
        Rational q;
        try {
            q = parse_rational(arg);
        } catch (const EngineError& e) {
            throw ParseError("preset Aq: bad rational '" + arg +
                             "': " + e.what());
        }
        FieldPtr field = MinimalPolynomial::rationals();
        Coefficient qc = Coefficient::from_rational(field, q);
        if (qc.is_zero()) throw ParseError("preset Aq: q must be a unit");
        if (qc.is_one())
            throw ParseError(
                "preset Aq: q = 1 has no root-of-unity order; the powers "
                "x_i^l are not central");
        std::optional<unsigned> maybe_order = multiplicative_order(qc);
        if (!maybe_order)
            throw ParseError(
                "preset Aq: q is not a root of unity, so no power of the "
                "generators is central; declare a center in a file instead");
        unsigned order = *maybe_order;
        std::vector<Coefficient> qs{qc};
        std::vector<Coefficient> as{Coefficient::one(field)};
        LoadedAlgebra out;
        out.algebra = make_algebra("Aq(" + arg + ")", 2, field, qs, as,
                                   std::vector<int>{1, 1});
        out.center_powers =
            std::vector<int>{static_cast<int>(order), static_cast<int>(order)};
        return out;
    }
    if (kind == "Ex5.9") {
        int ell = 0;
        try {
            ell = std::stoi(arg);
        } catch (const std::exception&) {
            throw ParseError("preset Ex5.9: bad order '" + arg + "'");
        }
        if (ell < 2 || ell > 16)
            throw ParseError("preset Ex5.9: order out of range 2..16");
        FieldPtr field = MinimalPolynomial::cyclotomic(ell);
        Coefficient zeta = Coefficient::zeta(field);
        Coefficient one = Coefficient::one(field);
        Coefficient zero = Coefficient::zero(field);
        // pairs (1,2), (1,3), (2,3): x3 is central
        std::vector<Coefficient> qs{zeta, one, one};
        std::vector<Coefficient> as{zero, zero, zero};
        LoadedAlgebra out;
        out.algebra = make_algebra("Ex5.9(" + arg + ")", 3, field, qs, as,
                                   std::vector<int>{1, 1, 1});
        out.center_powers = std::vector<int>{ell, ell, 1};
        return out;
    }
    throw ParseError("unknown preset '" + kind + "'");
}

} // namespace

bool is_preset_name(const std::string& source) {
    for (const char* prefix : {"Wn:", "kminus1:", "Aq:", "Ex5.9:"})
        if (source.rfind(prefix, 0) == 0) return true;
    return false;
}

LoadedAlgebra parse_algebra_text(const std::string& text) {
    std::string name = "A";
    int n = -1;
    int n_line = 0;
    std::optional<std::vector<Rational>> minpoly;
    std::vector<RawRelation> raw_q, raw_a;
    std::optional<std::vector<int>> degrees;
    std::optional<std::vector<int>> powers;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        std::vector<std::string> toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];

        if (key == "name") {
            if (toks.size() < 2) fail_line(line_no, "name needs a value");
            name = toks[1];
            for (size_t k = 2; k < toks.size(); ++k) name += " " + toks[k];
        } else if (key == "n") {
            if (n >= 0)
                fail_line(line_no, "n already declared on line " +
                                       std::to_string(n_line));
            if (toks.size() != 2) fail_line(line_no, "n needs one integer");
            n = parse_int(toks[1], line_no, "n");
            n_line = line_no;
            if (n < 1) fail_line(line_no, "n must be at least 1");
        } else if (key == "minpoly") {
            if (minpoly) fail_line(line_no, "minpoly already declared");
            if (toks.size() < 3)
                fail_line(line_no,
                          "minpoly needs at least two coefficients");
            std::vector<Rational> cs;
            for (size_t k = 1; k < toks.size(); ++k) {
                try {
                    cs.push_back(parse_rational(toks[k]));
                } catch (const EngineError& e) {
                    fail_line(line_no, std::string("bad coefficient: ") +
                                           e.what());
                }
            }
            minpoly = std::move(cs);
        } else if (key == "q" || key == "a") {
            if (n < 0)
                fail_line(line_no,
                          "n must be declared before relation entries");
            if (toks.size() < 4)
                fail_line(line_no,
                          key + " needs indices i j and a value literal");
            int i = parse_int(toks[1], line_no, "relation index i");
            int j = parse_int(toks[2], line_no, "relation index j");
            if (i < 1 || j < 1 || i > n || j > n)
                throw IndexError("line " + std::to_string(line_no) +
                                 ": relation indices must lie in 1.." +
                                 std::to_string(n));
            if (j <= i)
                throw IndexError("line " + std::to_string(line_no) +
                                 ": relation entries need i < j (got i=" +
                                 std::to_string(i) + ", j=" +
                                 std::to_string(j) + ")");
            std::string lit = toks[3];
            for (size_t k = 4; k < toks.size(); ++k) lit += " " + toks[k];
            auto& bucket = key == "q" ? raw_q : raw_a;
            for (const auto& r : bucket)
                if (r.i == i - 1 && r.j == j - 1)
                    fail_line(line_no, key + " entry for (" +
                                           std::to_string(i) + "," +
                                           std::to_string(j) +
                                           ") declared twice");
            bucket.push_back({line_no, i - 1, j - 1, lit});
        } else if (key == "degrees" || key == "center_powers") {
            if (n < 0)
                fail_line(line_no, "n must be declared before " + key);
            if (static_cast<int>(toks.size()) != n + 1)
                fail_line(line_no, key + " needs exactly " +
                                       std::to_string(n) + " integers");
            std::vector<int> vals;
            for (int k = 1; k <= n; ++k) {
                int v = parse_int(toks[static_cast<size_t>(k)], line_no, key);
                if (v < 1) fail_line(line_no, key + " must be positive");
                vals.push_back(v);
            }
            if (key == "degrees") {
                if (degrees) fail_line(line_no, "degrees already declared");
                degrees = std::move(vals);
            } else {
                if (powers)
                    fail_line(line_no, "center_powers already declared");
                powers = std::move(vals);
            }
        } else {
            fail_line(line_no, "unknown key '" + key + "'");
        }
    }
    if (n < 0) throw ParseError("document never declares n");

    FieldPtr field;
    if (minpoly) {
        try {
            field = std::make_shared<const MinimalPolynomial>(*minpoly);
        } catch (const EngineError& e) {
            throw ParseError(std::string("invalid minpoly: ") + e.what());
        }
    } else {
        field = MinimalPolynomial::rationals();
    }

    const size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<Coefficient> qs(pairs, Coefficient::one(field));
    std::vector<Coefficient> as(pairs, Coefficient::zero(field));
    auto fill = [&](const std::vector<RawRelation>& raw,
                    std::vector<Coefficient>& dst, const char* what) {
        for (const auto& r : raw) {
            Coefficient v(Coefficient::zero(field));
            try {
                v = parse_coefficient(r.literal, field);
            } catch (const EngineError& e) {
                fail_line(r.line, std::string("bad ") + what +
                                      " literal: " + e.what());
            }
            size_t idx = static_cast<size_t>(r.j) * (r.j - 1) / 2 +
                         static_cast<size_t>(r.i);
            dst[idx] = v;
        }
    };
    fill(raw_q, qs, "q");
    fill(raw_a, as, "a");

    LoadedAlgebra out;
    out.algebra = make_algebra(
        name, n, field, qs, as,
        degrees ? *degrees : std::vector<int>(static_cast<size_t>(n), 1));
    out.center_powers = powers;
    return out;
}

LoadedAlgebra load_algebra(const std::string& source) {
    if (is_preset_name(source)) {
        auto colon = source.find(':');
        return preset(source.substr(0, colon), source.substr(colon + 1));
    }
    std::ifstream in(source);
    if (!in)
        throw ParseError("cannot read algebra file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str());
}

} // namespace ncdisc
