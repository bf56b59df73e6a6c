#include "permlat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permlat/rng.hpp"

namespace permlat {

std::string format_int_vector(const std::vector<Int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

std::vector<Int> parse_int_vector(const std::string& text) {
    std::vector<Int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim spaces
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty entry in integer vector: '" + text + "'");
        out.emplace_back(token.substr(a, b - a + 1));
    }
    if (out.empty()) throw std::invalid_argument("empty integer vector");
    return out;
}

CycleType::CycleType(std::vector<int> ls) : lengths(std::move(ls)) {
    if (lengths.empty()) throw std::invalid_argument("cycle type must have at least one length");
    for (int k : lengths)
        if (k < 1) throw std::invalid_argument("cycle lengths must be positive");
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
}

int CycleType::n() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0);
}

int CycleType::fixed_point_count() const {
    return static_cast<int>(std::count(lengths.begin(), lengths.end(), 1));
}

bool CycleType::is_identity() const {
    return fixed_point_count() == cycle_count();
}

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lengths[i]);
    }
    return out;
}

CycleType CycleType::parse(const std::string& text) {
    std::vector<int> ls;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            ls.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cycle type: '" + text + "'");
        }
    }
    return CycleType(ls);
}

Permutation::Permutation(const std::vector<int>& images_1based) : images_(images_1based) {
    const int n = degree();
    if (n == 0) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation image out of range");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(im);
}

Permutation Permutation::standard_cycle(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = (i % n) + 1;
    return Permutation(im);
}

int Permutation::image(int i) const {
    if (i < 1 || i > degree()) throw std::invalid_argument("point out of range");
    return images_[static_cast<std::size_t>(i - 1)];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (image(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= degree(); ++i)
        im[static_cast<std::size_t>(image(i) - 1)] = i;
    return Permutation(im);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("cannot compose permutations of different degree");
    std::vector<int> im(a.images_.size());
    for (int i = 1; i <= a.degree(); ++i)
        im[static_cast<std::size_t>(i - 1)] = b.image(a.image(i));
    return Permutation(im);
}

Permutation Permutation::power(int k) const {
    const int o = order();
    k %= o;
    if (k < 0) k += o;
    Permutation acc = identity(degree());
    for (int j = 0; j < k; ++j) acc = acc * *this;
    return acc;
}

Permutation Permutation::conjugated_by(const Permutation& rho) const {
    if (rho.degree() != degree())
        throw std::invalid_argument("conjugate: degree mismatch");
    return rho * *this * rho.inverse();
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = degree();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (visited[static_cast<std::size_t>(s - 1)]) continue;
        std::vector<int> cyc;
        int p = s;
        do {
            visited[static_cast<std::size_t>(p - 1)] = true;
            cyc.push_back(p);
            p = image(p);
        } while (p != s);
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleType Permutation::cycle_type() const {
    std::vector<int> ls;
    for (const auto& c : cycles()) ls.push_back(static_cast<int>(c.size()));
    return CycleType(ls);
}

int Permutation::order() const {
    long o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<long>(c.size()));
    return static_cast<int>(o);
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        out += "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(c[i]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::string Permutation::to_image_string() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(images_[i]);
    }
    return out;
}

Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int from = c[i];
            int to = c[(i + 1) % c.size()];
            if (from < 1 || from > n)
                throw std::invalid_argument("cycle entry out of range");
            if (used[static_cast<std::size_t>(from - 1)])
                throw std::invalid_argument("cycles are not disjoint");
            used[static_cast<std::size_t>(from - 1)] = true;
            im[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return Permutation(im);
}

namespace {

Permutation parse_cycle_notation(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    int max_point = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] != '(') throw std::invalid_argument("bad cycle notation: '" + text + "'");
        ++i;
        std::vector<int> cyc;
        std::string num;
        while (i < text.size() && text[i] != ')') {
            char ch = text[i];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                num += ch;
            } else if (ch == ' ' || ch == ',') {
                if (!num.empty()) { cyc.push_back(std::stoi(num)); num.clear(); }
            } else {
                throw std::invalid_argument("bad cycle notation: '" + text + "'");
            }
            ++i;
        }
        if (i == text.size()) throw std::invalid_argument("unterminated cycle in '" + text + "'");
        ++i;  // skip ')'
        if (!num.empty()) { cyc.push_back(std::stoi(num)); }
        if (!cyc.empty()) {
            for (int p : cyc) max_point = std::max(max_point, p);
            cycles.push_back(std::move(cyc));
        }
    }
    int n = degree > 0 ? degree : max_point;
    if (n < 1) throw std::invalid_argument("cannot infer permutation degree from '" + text + "'");
    if (max_point > n) throw std::invalid_argument("cycle mentions a point beyond the degree");
    return from_cycles(cycles, n);
}

}  // namespace

Permutation Permutation::parse(const std::string& text, int degree) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty permutation text");
    if (text[first] == '(') return parse_cycle_notation(text, degree);

    // image list
    std::vector<int> images;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            images.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad permutation image list: '" + text + "'");
        }
    }
    if (degree > 0 && static_cast<int>(images.size()) != degree)
        throw std::invalid_argument("image list length does not match the requested degree");
    return Permutation(images);
}

Permutation sample_permutation(const CycleType& ct, std::uint64_t seed) {
    const int n = ct.n();
    std::vector<int> points(static_cast<std::size_t>(n));
    std::iota(points.begin(), points.end(), 1);
    SplitMix64 rng(seed);
    // Fisher-Yates, then chop into cycles of the requested lengths
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
        std::swap(points[static_cast<std::size_t>(i)], points[j]);
    }
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    for (int k : ct.lengths) {
        cycles.emplace_back(points.begin() + static_cast<long>(pos),
                            points.begin() + static_cast<long>(pos) + k);
        pos += static_cast<std::size_t>(k);
    }
    return from_cycles(cycles, n);
}

Permutation canonical_of_type(const CycleType& ct) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int k : ct.lengths) {
        std::vector<int> c(static_cast<std::size_t>(k));
        std::iota(c.begin(), c.end(), next);
        next += k;
        cycles.push_back(std::move(c));
    }
    return from_cycles(cycles, ct.n());
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& cur,
                    std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<CycleType> all_cycle_types(int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    std::vector<CycleType> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace permlat
