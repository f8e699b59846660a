#include "orbizeta/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbizeta {

IntPolynomial IntPolynomial::constant(std::vector<std::string> variables, const BigInt& c)
{
    IntPolynomial p(std::move(variables));
    p.add_term(c, Exponents(p.num_vars(), 0));
    return p;
}

IntPolynomial IntPolynomial::variable(std::vector<std::string> variables, const std::string& name)
{
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw std::invalid_argument("unknown variable " + name);
    IntPolynomial p(std::move(variables));
    Exponents e(p.num_vars(), 0);
    e[static_cast<std::size_t>(it - p.variables_.begin())] = 1;
    p.add_term(1, e);
    return p;
}

void IntPolynomial::add_term(const BigInt& c, const Exponents& exps)
{
    if (exps.size() != variables_.size()) throw std::invalid_argument("exponent tuple has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::rebased(const std::vector<std::string>& variables) const
{
    std::vector<std::size_t> slot(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        auto it = std::find(variables.begin(), variables.end(), variables_[i]);
        slot[i] = it == variables.end() ? variables.size() : static_cast<std::size_t>(it - variables.begin());
    }
    IntPolynomial out(variables);
    for (const auto& [exps, c] : terms_) {
        Exponents e(variables.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (slot[i] == variables.size())
                throw std::invalid_argument("variable " + variables_[i] + " missing from target variable list");
            e[slot[i]] = exps[i];
        }
        out.add_term(c, e);
    }
    return out;
}

void IntPolynomial::require_same_vars(const IntPolynomial& o) const
{
    if (variables_ != o.variables_) throw std::invalid_argument("polynomials over different variable lists");
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o)
{
    require_same_vars(o);
    IntPolynomial r(variables_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(ca * cb, e);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r(variables_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned n) const
{
    IntPolynomial r = constant(variables_, 1);
    IntPolynomial base = *this;
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

std::string IntPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    // highest total degree first, then reverse map order for stability
    std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
    auto degree = [](const Exponents& e) {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    };
    std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        if (degree(a.first) != degree(b.first)) return degree(a.first) > degree(b.first);
        return a.first > b.first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || degree(e) == 0) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << variables_[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace orbizeta
