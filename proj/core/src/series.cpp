#include "surfenum/series.hpp"

#include <algorithm>

namespace surfenum {

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, int trunc_var, int truncation)
    : vars_(std::move(vars)), trunc_var_(trunc_var), truncation_(truncation) {
    if (trunc_var_ < 0 || trunc_var_ >= static_cast<int>(vars_.size()))
        throw UnknownVariable("truncation variable index out of range");
}

TruncatedSeries TruncatedSeries::zero(std::vector<std::string> vars, int trunc_var,
                                      int truncation) {
    return TruncatedSeries(std::move(vars), trunc_var, truncation);
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> vars, int trunc_var,
                                          int truncation, const Rational& c) {
    TruncatedSeries s(std::move(vars), trunc_var, truncation);
    s.add_term(Exponents(s.vars_.size(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<std::string> vars, int trunc_var,
                                          int truncation, const Exponents& exps,
                                          const Rational& c) {
    TruncatedSeries s(std::move(vars), trunc_var, truncation);
    if (exps.size() != s.vars_.size())
        throw IncompatibleVariables("monomial: exponent vector length mismatch");
    s.add_term(exps, c);
    return s;
}

int TruncatedSeries::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UnknownVariable("unknown variable '" + name + "'");
    return static_cast<int>(it - vars_.begin());
}

Rational TruncatedSeries::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coeff1(int k) const {
    Exponents e(vars_.size(), 0);
    e[trunc_var_] = k;
    return coeff(e);
}

void TruncatedSeries::add_term(const Exponents& exps, const Rational& c) {
    if (c == 0) return;
    if (exps[trunc_var_] > truncation_) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::truncated(int new_truncation) const {
    TruncatedSeries out(vars_, trunc_var_, std::min(truncation_, new_truncation));
    for (const auto& [e, c] : terms_)
        if (e[trunc_var_] <= out.truncation_) out.terms_.emplace(e, c);
    return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (vars_ != o.vars_ || trunc_var_ != o.trunc_var_)
        throw IncompatibleVariables("series have different variable sets");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(vars_, trunc_var_, truncation_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries out(vars_, trunc_var_, std::min(truncation_, o.truncation_));
    for (const auto& [e, c] : terms_)
        if (e[trunc_var_] <= out.truncation_) out.add_term(e, c);
    for (const auto& [e, c] : o.terms_)
        if (e[trunc_var_] <= out.truncation_) out.add_term(e, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries out(vars_, trunc_var_, std::min(truncation_, o.truncation_));
    const size_t nv = vars_.size();
    Exponents e(nv, 0);
    for (const auto& [ea, ca] : terms_) {
        if (ea[trunc_var_] > out.truncation_) continue;
        for (const auto& [eb, cb] : o.terms_) {
            if (ea[trunc_var_] + eb[trunc_var_] > out.truncation_) continue;
            for (size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries out(vars_, trunc_var_, truncation_);
    if (c == 0) return out;
    for (const auto& [e, q] : terms_) out.terms_.emplace(e, q * c);
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return vars_ == o.vars_ && trunc_var_ == o.trunc_var_ && truncation_ == o.truncation_ &&
           terms_ == o.terms_;
}

TruncatedSeries TruncatedSeries::inverse() const {
    // The degree-0 part (in the progress variable) must be a lone constant.
    Exponents zero_e(vars_.size(), 0);
    Rational c0 = coeff(zero_e);
    if (c0 == 0) throw DomainError("inverse: constant term is zero");
    for (const auto& [e, c] : terms_)
        if (e[trunc_var_] == 0 && e != zero_e)
            throw DomainError("inverse: degree-0 part is not a constant");

    // x_{k+1} = x_k (2 - a x_k) doubles the correct order each step.
    TruncatedSeries x = constant(vars_, trunc_var_, truncation_, 1 / c0);
    TruncatedSeries two = constant(vars_, trunc_var_, truncation_, Rational(2));
    int correct = 1;
    while (correct <= truncation_) {
        x = x * (two - (*this) * x);
        correct *= 2;
    }
    return x;
}

TruncatedSeries TruncatedSeries::exp() const {
    Exponents zero_e(vars_.size(), 0);
    if (coeff(zero_e) != 0) throw DomainError("exp: nonzero constant term");
    TruncatedSeries out = constant(vars_, trunc_var_, truncation_, Rational(1));
    TruncatedSeries pow = constant(vars_, trunc_var_, truncation_, Rational(1));
    Rational fact(1);
    for (int k = 1; k <= truncation_; ++k) {
        pow = pow * (*this);
        if (pow.is_zero()) break;
        fact *= k;
        out = out + pow * (1 / fact);
    }
    return out;
}

TruncatedSeries TruncatedSeries::pointing(const std::string& var) const {
    int idx = var_index(var);
    TruncatedSeries out(vars_, trunc_var_, truncation_);
    for (const auto& [e, c] : terms_)
        if (e[idx] != 0) out.terms_.emplace(e, c * e[idx]);
    return out;
}

TruncatedSeries TruncatedSeries::substitute(const std::string& var,
                                            const TruncatedSeries& replacement) const {
    int idx = var_index(var);
    check_compatible(replacement);

    // Truncation consistency: if the replacement has a nonzero constant term
    // (in the progress variable), powers of it do not gain progress-degree, so
    // the source must be polynomial in `var`.
    Exponents zero_e(vars_.size(), 0);
    bool repl_has_const = false;
    for (const auto& [e, c] : replacement.terms_)
        if (e[trunc_var_] == 0) { repl_has_const = true; break; }
    (void)zero_e;

    int max_pow = 0;
    for (const auto& [e, c] : terms_) max_pow = std::max(max_pow, e[idx]);
    if (repl_has_const && idx == trunc_var_) {
        // Substituting into the progress variable itself with a constant term
        // present is only well-defined for polynomials; max_pow is finite here
        // by construction, but degrees above truncation were already cut, so
        // reject unless the caller's series is genuinely polynomial.
        if (max_pow >= truncation_)
            throw SubstitutionError(
                "substitute: replacement with nonzero constant term into a non-polynomial");
    }

    int out_trunc = std::min(truncation_, replacement.truncation_);
    TruncatedSeries out = zero(vars_, trunc_var_, out_trunc);

    // Precompute replacement powers.
    std::vector<TruncatedSeries> powers;
    powers.push_back(constant(vars_, trunc_var_, out_trunc, Rational(1)));
    for (int p = 1; p <= max_pow; ++p) powers.push_back(powers.back() * replacement);

    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[idx] = 0;
        if (rest[trunc_var_] > out_trunc) continue;
        TruncatedSeries mono = monomial(vars_, trunc_var_, out_trunc, rest, c);
        out = out + mono * powers[e[idx]];
    }
    return out;
}

TruncatedSeries TruncatedSeries::at_zero(const std::string& var) const {
    int idx = var_index(var);
    TruncatedSeries out(vars_, trunc_var_, truncation_);
    for (const auto& [e, c] : terms_)
        if (e[idx] == 0) out.terms_.emplace(e, c);
    return out;
}

TruncatedSeries univariate_substitute(const TruncatedSeries& s, SubstitutionMode mode) {
    // Expected variables: a subset of {x,y,z,w}; absent variables behave as
    // exponent zero.
    int ix = -1, iy = -1, iz = -1, iw = -1;
    const auto& vars = s.vars();
    for (int i = 0; i < static_cast<int>(vars.size()); ++i) {
        if (vars[i] == "x") ix = i;
        else if (vars[i] == "y") iy = i;
        else if (vars[i] == "z") iz = i;
        else if (vars[i] == "w") iw = i;
        else throw UnknownVariable("univariate_substitute: unexpected variable '" + vars[i] + "'");
    }

    // Output truncation: v^n comes from x^{2n}; the input is truncated in its
    // own progress variable. Infer the deepest complete v-order from the
    // truncation variable: x -> trunc/2, y -> trunc/3 (m = 3n for pure cubic
    // series), z/w unusual; default to trunc.
    int in_trunc = s.truncation();
    int out_trunc;
    const std::string& tv = vars[s.trunc_var()];
    if (tv == "x") out_trunc = in_trunc / 2;
    else if (tv == "y") out_trunc = in_trunc / 3;
    else out_trunc = in_trunc;

    TruncatedSeries out = TruncatedSeries::zero({"v"}, 0, out_trunc);
    for (const auto& [e, c] : s.terms()) {
        long a = ix >= 0 ? e[ix] : 0;  // x-exponent = 2n
        long m = iy >= 0 ? e[iy] : 0;
        long k = iz >= 0 ? e[iz] : 0;
        long l = iw >= 0 ? e[iw] : 0;
        if (a % 2 != 0 || 2 * k + l + m != 3 * (a / 2))
            throw ParityError("univariate_substitute: non-cubic monomial x^" + std::to_string(a) +
                              " y^" + std::to_string(m) + " z^" + std::to_string(k) + " w^" +
                              std::to_string(l));
        long n = a / 2;
        if (n > out_trunc) continue;
        Rational coef = c;
        switch (mode) {
            case SubstitutionMode::weighted: {
                Rational scale(1);
                scale <<= static_cast<unsigned>(k + l);  // 2^{k+l}
                coef /= scale;
                break;
            }
            case SubstitutionMode::unweighted:
                break;
            case SubstitutionMode::simple:
                if (k != 0 || l != 0) continue;
                break;
        }
        out.add_term({static_cast<int>(n)}, coef);
    }
    return out;
}

bool theta_v_check(const TruncatedSeries& f, SubstitutionMode mode) {
    TruncatedSeries lhs = univariate_substitute(f, mode).pointing("v") * Rational(3);
    TruncatedSeries rhs = univariate_substitute(f.pointing("y"), mode);
    return lhs == rhs;
}

bool dominance_check(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    if (lhs.vars() != rhs.vars() || lhs.trunc_var() != rhs.trunc_var())
        throw IncompatibleVariables("dominance_check: different variable sets");
    if (lhs.truncation() != rhs.truncation())
        throw TruncationMismatch("dominance_check: different truncations");
    for (const auto& [e, c] : lhs.terms()) {
        if (c < 0) return false;
        if (c > rhs.coeff(e)) return false;
    }
    for (const auto& [e, c] : rhs.terms())
        if (c < 0) return false;
    return true;
}

}  // namespace surfenum
