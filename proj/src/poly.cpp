#include "permlat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permlat {

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::t_power_minus_one(int k) {
    if (k < 1) throw std::invalid_argument("t^k - 1 requires k >= 1");
    std::vector<Int> c(static_cast<std::size_t>(k + 1), Int(0));
    c[0] = -1;
    c[static_cast<std::size_t>(k)] = 1;
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& g) const {
    std::vector<Int> c(std::max(coeffs_.size(), g.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& g) const {
    std::vector<Int> c(std::max(coeffs_.size(), g.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(static_cast<int>(i)) - g.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& g) const {
    if (is_zero() || g.is_zero()) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() + g.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * g.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact_by_monic(const IntPolynomial& divisor) const {
    if (!divisor.is_monic())
        throw std::invalid_argument("divisor must be monic");
    if (is_zero()) return IntPolynomial();
    if (degree() < divisor.degree())
        throw std::invalid_argument("division is not exact");
    std::vector<Int> rem = coeffs_;
    const int dq = degree() - divisor.degree();
    std::vector<Int> quot(static_cast<std::size_t>(dq + 1), Int(0));
    for (int i = dq; i >= 0; --i) {
        Int c = rem[static_cast<std::size_t>(i + divisor.degree())];
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -= c * divisor.coeff(j);
    }
    for (const Int& r : rem)
        if (r != 0) throw std::invalid_argument("division is not exact");
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Int c = coeff(i);
        if (c == 0) continue;
        const bool first = out.empty();
        if (c < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        if (c != 1 || i == 0) out += c.get_str();
        if (i >= 1) {
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    // terms: [sign] [integer] [t [^ exponent]], '*' between factors tolerated
    std::vector<Int> coeffs;
    std::size_t i = 0;
    const std::size_t len = text.size();
    auto skip_ws = [&] { while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    bool any = false;
    skip_ws();
    while (i < len) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' in polynomial: '" + text + "'");
        }
        std::string digits;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws();
        if (i < len && text[i] == '*') { ++i; skip_ws(); }
        Int c = digits.empty() ? Int(1) : Int(digits);
        int exp = 0;
        if (i < len && (text[i] == 't' || text[i] == 'x')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < len && text[i] == '^') {
                ++i;
                skip_ws();
                std::string e;
                while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
                if (e.empty()) throw std::invalid_argument("missing exponent in '" + text + "'");
                exp = std::stoi(e);
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("bad polynomial term in '" + text + "'");
        }
        if (static_cast<std::size_t>(exp) >= coeffs.size())
            coeffs.resize(static_cast<std::size_t>(exp) + 1, Int(0));
        coeffs[static_cast<std::size_t>(exp)] += sign * c;
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return IntPolynomial(std::move(coeffs));
}

void RatPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
    for (const Int& c : p.coefficients()) coeffs_.emplace_back(c);
    normalize();
}

Rat RatPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& g) const {
    std::vector<Rat> c(std::max(coeffs_.size(), g.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(static_cast<int>(i)) - g.coeff(static_cast<int>(i));
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const Rat& c) const {
    std::vector<Rat> out = coeffs_;
    for (Rat& x : out) x *= c;
    return RatPolynomial(std::move(out));
}

RatPolynomial::DivMod RatPolynomial::divmod(const RatPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = coeffs_;
    std::vector<Rat> quot;
    const int dd = divisor.degree();
    if (degree() >= dd) quot.assign(static_cast<std::size_t>(degree() - dd + 1), Rat(0));
    const Rat lead = divisor.coeff(dd);
    for (int i = degree() - dd; i >= 0; --i) {
        Rat c = rem[static_cast<std::size_t>(i + dd)] / lead;
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i + j)] -= c * divisor.coeff(j);
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

unsigned long euler_phi(unsigned long d) {
    if (d < 1) throw std::invalid_argument("euler_phi requires d >= 1");
    unsigned long count = 0;
    for (unsigned long m = 1; m <= d; ++m)
        if (std::gcd(m, d) == 1) ++count;
    return count;
}

IntPolynomial cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic requires d >= 1");
    static std::map<int, IntPolynomial> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
    IntPolynomial result = IntPolynomial::t_power_minus_one(d);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) result = result.divide_exact_by_monic(cyclotomic(e));
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(d, result);
    }
    return result;
}

IntPolynomial char_poly(const CycleType& ct) {
    IntPolynomial p = IntPolynomial::one();
    for (int k : ct.lengths) p = p * IntPolynomial::t_power_minus_one(k);
    return p;
}

namespace {

std::set<int> distinct_cycle_divisors(const CycleType& ct) {
    std::set<int> divs;
    for (int k : ct.lengths)
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) divs.insert(d);
    return divs;
}

}  // namespace

IntPolynomial min_poly(const CycleType& ct) {
    IntPolynomial m = IntPolynomial::one();
    for (int d : distinct_cycle_divisors(ct)) m = m * cyclotomic(d);
    return m;
}

GenericOrder generic_order(const CycleType& ct) {
    long deg = 0;
    for (int d : distinct_cycle_divisors(ct)) deg += static_cast<long>(euler_phi(static_cast<unsigned long>(d)));

    // literal pairwise reading of the displayed sum, each divisor counted per pair
    long pairwise = 0;
    const auto& ks = ct.lengths;
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = i + 1; j < ks.size(); ++j) {
            const int g = std::gcd(ks[i], ks[j]);
            for (int d = 1; d <= g; ++d)
                if (g % d == 0) pairwise += static_cast<long>(euler_phi(static_cast<unsigned long>(d)));
        }
    const long pairwise_total = static_cast<long>(ct.n()) - pairwise;
    return {static_cast<int>(deg), pairwise_total, deg == pairwise_total};
}

bool poly_divides(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero()) throw std::invalid_argument("poly_divides: divisor is zero");
    if (g.is_zero()) return true;
    if (g.degree() < f.degree()) return false;
    auto dm = RatPolynomial(g).divmod(RatPolynomial(f));
    return dm.remainder.is_zero();
}

IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    RatPolynomial a(f), b(g);
    while (!b.is_zero()) {
        RatPolynomial r = a.divmod(b).remainder;
        a = b;
        b = r;
    }
    // clear denominators, divide by content, fix the sign
    Int den_lcm = 1;
    for (const Rat& c : a.coefficients()) den_lcm = lcm(den_lcm, Int(c.get_den()));
    std::vector<Int> ic;
    for (const Rat& c : a.coefficients()) {
        Rat scaled = c * Rat(den_lcm);
        ic.emplace_back(scaled.get_num());
    }
    Int content = 0;
    for (const Int& c : ic) content = gcd(content, c);
    if (content != 0)
        for (Int& c : ic) c /= content;
    if (!ic.empty() && ic.back() < 0)
        for (Int& c : ic) c = -c;
    return IntPolynomial(std::move(ic));
}

RatPolynomial vector_to_poly(const std::vector<Rat>& a) {
    return RatPolynomial(a);
}

IntPolynomial vector_to_poly(const std::vector<Int>& a) {
    return IntPolynomial(a);
}

}  // namespace permlat
