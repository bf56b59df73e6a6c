#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlat/numeric.hpp"

namespace permlat {

// Multiset of cycle lengths, fixed points included as 1-cycles.
// Lengths are kept sorted descending; their sum is the degree n.
struct CycleType {
    std::vector<int> lengths;

    explicit CycleType(std::vector<int> ls);
    int n() const;
    int cycle_count() const { return static_cast<int>(lengths.size()); }
    int fixed_point_count() const;
    bool is_n_cycle() const { return lengths.size() == 1; }
    bool is_identity() const;

    bool operator==(const CycleType& other) const { return lengths == other.lengths; }

    std::string to_string() const;                       // "2,2,1"
    static CycleType parse(const std::string& text);
};

// A permutation tau of {1..n}. All public I/O is 1-indexed; the action on
// vectors is tau(x)_i = x_{tau(i)}.
class Permutation {
public:
    explicit Permutation(const std::vector<int>& images_1based);

    static Permutation identity(int n);
    static Permutation standard_cycle(int n);            // sigma_n = (1 2 ... n)

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int i) const;                              // tau(i), 1-indexed
    bool is_identity() const;

    Permutation inverse() const;

    // compose(a, b)(i) = b(a(i)); with this product,
    // permutation_matrix(a * b) = permutation_matrix(a) * permutation_matrix(b).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

    Permutation power(int k) const;                      // k may be negative
    Permutation conjugated_by(const Permutation& rho) const;  // rho tau rho^{-1}

    // disjoint cycles ordered by smallest element, each cycle starting at its
    // smallest element; fixed points included as 1-cycles
    std::vector<std::vector<int>> cycles() const;
    CycleType cycle_type() const;
    int order() const;                                   // lcm of cycle lengths
    bool is_n_cycle() const { return cycle_type().is_n_cycle(); }

    template <typename T>
    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != degree())
            throw std::invalid_argument("apply: vector length does not match permutation degree");
        std::vector<T> out(x.size());
        for (int i = 0; i < degree(); ++i)
            out[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)] - 1)];
        return out;
    }

    std::string to_cycle_string() const;                 // "(1 2)(3 4 5)", "()" for identity
    std::string to_image_string() const;                 // "2,1,4,5,3"

    // Accepts cycle notation "(1 2)(3 4 5)" (unmentioned points fixed) or an
    // image list "2,1,4,5,3". degree < 0 means: infer from the text.
    static Permutation parse(const std::string& text, int degree = -1);

private:
    std::vector<int> images_;  // images_[i] = tau(i+1), stored 1-based values
};

// rebuild a permutation from disjoint cycles over {1..n}
Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n);

// uniformly seeded permutation with the requested cycle type
Permutation sample_permutation(const CycleType& ct, std::uint64_t seed);

// representative with contiguous cycles (1..k1)(k1+1..k1+k2)...
Permutation canonical_of_type(const CycleType& ct);

// all cycle types of degree n (integer partitions), lengths descending
std::vector<CycleType> all_cycle_types(int n);

}  // namespace permlat
