#include "surfenum/poly_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace surfenum {

namespace {

// ---- tiny recursive-descent parser for polynomial expressions ----

struct Parser {
    const std::string& text;
    size_t pos = 0;
    const std::vector<std::string>& symbols;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw DomainError("parse_polynomial: " + msg + " at offset " + std::to_string(pos) +
                          " in '" + text + "'");
    }

    using Mono = std::map<std::vector<int>, Rational>;  // exps -> coeff

    static Mono mono_const(const Rational& c, size_t n) {
        Mono m;
        if (c != 0) m.emplace(std::vector<int>(n, 0), c);
        return m;
    }
    Mono add(const Mono& a, const Mono& b) {
        Mono r = a;
        for (const auto& [e, c] : b) {
            auto [it, ins] = r.emplace(e, c);
            if (!ins) { it->second += c; if (it->second == 0) r.erase(it); }
        }
        return r;
    }
    Mono mul(const Mono& a, const Mono& b) {
        Mono r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                std::vector<int> e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, ins] = r.emplace(std::move(e), ca * cb);
                if (!ins) { it->second += ca * cb; if (it->second == 0) r.erase(it); }
            }
        return r;
    }
    Mono neg(const Mono& a) {
        Mono r;
        for (const auto& [e, c] : a) r.emplace(e, -c);
        return r;
    }
    Mono pow(const Mono& a, long k) {
        Mono r = mono_const(Rational(1), symbols.size());
        for (long i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    Mono parse_expr() {
        Mono lhs = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+')) lhs = add(lhs, parse_term());
            else if (eat('-')) lhs = add(lhs, neg(parse_term()));
            else return lhs;
        }
    }
    Mono parse_term() {
        Mono lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) { lhs = mul(lhs, parse_factor()); continue; }
            // implicit multiplication: "3y", "y(1+y)", "y u"
            if (pos < text.size()) {
                char c = text[pos];
                if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                    std::isdigit(static_cast<unsigned char>(c))) {
                    lhs = mul(lhs, parse_factor());
                    continue;
                }
            }
            return lhs;
        }
    }
    Mono parse_factor() {
        Mono base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            long k = std::stol(text.substr(start, pos - start));
            return pow(base, k);
        }
        return base;
    }
    Mono parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Mono inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') { ++pos; return neg(parse_factor()); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '/'))
                ++pos;
            std::string num = text.substr(start, pos - start);
            return mono_const(rational_from_string(num), symbols.size());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            auto it = std::find(symbols.begin(), symbols.end(), name);
            if (it == symbols.end()) fail("unknown symbol '" + name + "'");
            std::vector<int> e(symbols.size(), 0);
            e[it - symbols.begin()] = 1;
            Mono m;
            m.emplace(std::move(e), Rational(1));
            return m;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

Polynomial mono_to_poly(const Parser::Mono& m) {
    Polynomial p;
    for (const auto& [e, c] : m) p.terms.push_back({c, e});
    return p;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& symbols) {
    Parser parser{text, 0, symbols};
    auto eq = text.find('=');
    if (eq != std::string::npos) {
        std::string lhs = text.substr(0, eq);
        std::string rhs = text.substr(eq + 1);
        Parser pl{lhs, 0, symbols}, pr{rhs, 0, symbols};
        auto ml = pl.parse_expr();
        pl.skip_ws();
        if (pl.pos != lhs.size()) pl.fail("trailing input");
        auto mr = pr.parse_expr();
        pr.skip_ws();
        if (pr.pos != rhs.size()) pr.fail("trailing input");
        return mono_to_poly(pl.add(ml, pl.neg(mr)));
    }
    auto m = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return mono_to_poly(m);
}

std::string polynomial_to_string(const Polynomial& p, const std::vector<std::string>& symbols) {
    // Canonical: terms sorted by exponent vector (they already are when built
    // through the parser); "coeff*sym^e*..." joined by " + ".
    std::vector<Polynomial::Term> terms = p.terms;
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.exps < b.exps; });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(t.coeff);
        for (size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            os << "*" << symbols[i];
            if (t.exps[i] != 1) os << "^" << t.exps[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

void PolynomialSystem::add_equation(const std::string& text) {
    std::vector<std::string> symbols = unknowns;
    symbols.insert(symbols.end(), vars.begin(), vars.end());
    equations.push_back(parse_polynomial(text, symbols));
    sources.push_back(text);
}

std::string PolynomialSystem::canonical_text() const {
    std::vector<std::string> symbols = unknowns;
    symbols.insert(symbols.end(), vars.begin(), vars.end());
    std::ostringstream os;
    os << "symbols:";
    for (const auto& s : symbols) os << " " << s;
    os << "\n";
    for (const auto& eq : equations) os << polynomial_to_string(eq, symbols) << " = 0\n";
    return os.str();
}

TruncatedSeries evaluate_polynomial(const Polynomial& p,
                                    const std::vector<TruncatedSeries>& values) {
    if (values.empty()) throw DomainError("evaluate_polynomial: no values");
    const TruncatedSeries& model = values.front();
    TruncatedSeries acc = TruncatedSeries::zero(model.vars(), model.trunc_var(),
                                                model.truncation());
    for (const auto& t : p.terms) {
        TruncatedSeries term = TruncatedSeries::constant(model.vars(), model.trunc_var(),
                                                         model.truncation(), t.coeff);
        for (size_t i = 0; i < t.exps.size(); ++i)
            for (int k = 0; k < t.exps[i]; ++k) term = term * values[i];
        acc = acc + term;
    }
    return acc;
}

Polynomial differentiate_polynomial(const Polynomial& p, int idx) {
    Polynomial d;
    for (const auto& t : p.terms) {
        if (t.exps[idx] == 0) continue;
        Polynomial::Term nt = t;
        nt.coeff *= t.exps[idx];
        nt.exps[idx] -= 1;
        d.terms.push_back(std::move(nt));
    }
    return d;
}

namespace {

// Solve J * delta = rhs over the truncated-series ring by Gaussian
// elimination; pivots need an invertible constant term.
std::vector<TruncatedSeries> solve_linear(std::vector<std::vector<TruncatedSeries>> J,
                                          std::vector<TruncatedSeries> rhs) {
    const size_t n = rhs.size();
    std::vector<int> perm(n);
    for (size_t col = 0; col < n; ++col) {
        // pivot: row with constant-term-invertible entry in this column
        size_t pivot = n;
        for (size_t r = col; r < n; ++r) {
            const TruncatedSeries& e = J[r][col];
            if (e.coeff1(0) == 0) continue;
            // inverse() needs the degree-0 slice to be a lone constant
            bool plain = true;
            for (const auto& [exps, c] : e.terms())
                if (exps[e.trunc_var()] == 0 &&
                    exps != TruncatedSeries::Exponents(exps.size(), 0)) {
                    plain = false;
                    break;
                }
            if (plain) { pivot = r; break; }
        }
        if (pivot == n) throw NoUniqueBranch("newton_solve: singular Jacobian at order 0");
        std::swap(J[col], J[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        TruncatedSeries inv = J[col][col].inverse();
        for (size_t c = col; c < n; ++c) J[col][c] = J[col][c] * inv;
        rhs[col] = rhs[col] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || J[r][col].is_zero()) continue;
            TruncatedSeries f = J[r][col];
            for (size_t c = col; c < n; ++c) J[r][c] = J[r][c] - f * J[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

std::vector<TruncatedSeries> newton_solve(const PolynomialSystem& system, int order,
                                          const std::vector<TruncatedSeries>& seed) {
    const size_t n = system.unknowns.size();
    if (n != system.equations.size())
        throw DomainError("newton_solve: system is not square");
    if (seed.size() != n) throw DomainError("newton_solve: seed size mismatch");

    // Symbol order: unknowns then vars; build variable value series once.
    std::vector<TruncatedSeries> x = seed;
    for (auto& s : x) s = s.truncated(order);
    const auto& model = x.front();

    std::vector<TruncatedSeries> var_values;
    for (size_t i = 0; i < system.vars.size(); ++i) {
        TruncatedSeries::Exponents e(model.vars().size(), 0);
        e[model.var_index(system.vars[i])] = 1;
        var_values.push_back(TruncatedSeries::monomial(model.vars(), model.trunc_var(), order, e,
                                                       Rational(1)));
    }

    std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            jac[i][j] = differentiate_polynomial(system.equations[i], static_cast<int>(j));

    auto all_values = [&](const std::vector<TruncatedSeries>& cur) {
        std::vector<TruncatedSeries> vals = cur;
        vals.insert(vals.end(), var_values.begin(), var_values.end());
        return vals;
    };

    // Newton doubles the correct order each step; 2*ceil(log2(order+1)) + a
    // cushion bounds the iteration count.
    int max_iter = 2;
    for (int o = 1; o <= order + 1; o *= 2) max_iter += 2;

    for (int iter = 0; iter < max_iter; ++iter) {
        auto vals = all_values(x);
        std::vector<TruncatedSeries> residual;
        bool zero = true;
        for (size_t i = 0; i < n; ++i) {
            residual.push_back(evaluate_polynomial(system.equations[i], vals));
            zero = zero && residual.back().is_zero();
        }
        if (zero) return x;

        std::vector<std::vector<TruncatedSeries>> J(n, std::vector<TruncatedSeries>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) J[i][j] = evaluate_polynomial(jac[i][j], vals);
        std::vector<TruncatedSeries> delta = solve_linear(std::move(J), std::move(residual));
        for (size_t i = 0; i < n; ++i) x[i] = x[i] - delta[i];
    }
    throw InternalError("newton_solve: residual nonzero after maximum iterations");
}

std::vector<TruncatedSeries> newton_solve(const PolynomialSystem& system, int order,
                                          const std::vector<Rational>& seed_constants) {
    std::vector<TruncatedSeries> seed;
    std::vector<std::string> series_vars = system.vars;
    for (const auto& c : seed_constants)
        seed.push_back(TruncatedSeries::constant(series_vars, 0, order, c));
    return newton_solve(system, order, seed);
}

bool residuals_vanish(const PolynomialSystem& system,
                      const std::vector<TruncatedSeries>& solution) {
    if (solution.empty()) return false;
    const auto& model = solution.front();
    std::vector<TruncatedSeries> vals = solution;
    for (size_t i = 0; i < system.vars.size(); ++i) {
        TruncatedSeries::Exponents e(model.vars().size(), 0);
        e[model.var_index(system.vars[i])] = 1;
        vals.push_back(TruncatedSeries::monomial(model.vars(), model.trunc_var(),
                                                 model.truncation(), e, Rational(1)));
    }
    for (const auto& eq : system.equations)
        if (!evaluate_polynomial(eq, vals).is_zero()) return false;
    return true;
}

}  // namespace surfenum
