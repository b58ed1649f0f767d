#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylchar/bigint.hpp"
#include "weylchar/weight.hpp"

namespace weylchar {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Element of the Weyl group acting on fundamental-weight coordinates.
struct WeylElement {
    std::vector<Coord> matrix;  // rank x rank, row major
    int sign = 1;               // epsilon(w) = (-1)^length
    int length = 0;             // word length in simple reflections
};

// Position of a weight in the lattice chain P* > P > m(Phi)P* > m(Phi)P.
struct LatticeClass {
    enum class Kind {
        InMiPNotMi1Pstar,   // lambda in m^i P \ m^{i+1} P*
        InMi1PstarNotMi1P,  // lambda in m^{i+1} P* \ m^{i+1} P
        MultipleOfRho,
        MultipleOfRhoTilde,
    };
    int i = 0;
    Kind kind = Kind::InMiPNotMi1Pstar;

    bool dual_branch() const { return kind == Kind::InMi1PstarNotMi1P; }
    std::string kind_name() const;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

struct CornerData {
    RootSystemPtr sub;          // the based simple root system on Delta \ {alpha}
    std::vector<int> sub_to_orig;  // sub simple-root index -> original index
};

// Immutable based simple root system with its fully enumerated Weyl group.
class RootSystem {
public:
    static constexpr std::size_t kDefaultWeylCap = 2000;

    // Builds a root system of the given type.  Throws std::invalid_argument for
    // combinations outside the classification and std::runtime_error when the
    // Weyl group would exceed the cap.
    static RootSystemPtr build(Family family, int rank,
                               std::size_t weyl_cap = kDefaultWeylCap);
    // Parses names like "A2", "B3", "G2".
    static RootSystemPtr parse(const std::string& name,
                               std::size_t weyl_cap = kDefaultWeylCap);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const;

    // cartan(i, j) = <alpha_i^*, alpha_j>
    Coord cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
    // Simple root alpha_j in fundamental-weight coordinates (column j of the Cartan matrix).
    const Weight& simple_root(int j) const { return simple_roots_[static_cast<std::size_t>(j)]; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    bool positive_root_is_long(int k) const { return pos_root_is_long_[static_cast<std::size_t>(k)]; }
    bool simple_root_is_long(int j) const { return simple_is_long_[static_cast<std::size_t>(j)]; }
    int m_phi() const { return m_phi_; }

    const std::vector<WeylElement>& weyl() const { return weyl_; }
    std::size_t weyl_order() const { return weyl_.size(); }
    // s_i; the breadth-first closure lists them right after the identity.
    const WeylElement& simple_reflection(int i) const { return weyl_[static_cast<std::size_t>(1 + i)]; }

    Weight apply(const WeylElement& w, const Weight& mu) const;

    // w_{ab} = <omega_a^*, omega_b>, an entry of the inverse Cartan matrix.
    const Rat& pairing_w(int a, int b) const { return inv_cartan_[static_cast<std::size_t>(a * rank_ + b)]; }

    // Term order: graded by the Weyl-height functional (scaled to integers so it
    // refines the dominance order), ties broken lexicographically on coordinates.
    Coord grade(const std::vector<Coord>& coords) const;
    Coord grade(const Weight& mu) const { return grade(mu.coords); }
    bool term_less(const std::vector<Coord>& a, const std::vector<Coord>& b) const;

    const std::vector<int>& corner_roots() const { return corners_; }
    bool is_corner(int a) const;
    const CornerData& corner_data(int a) const;
    // Drops coordinate alpha and relabels into the subsystem's numbering.
    Weight project(int a, const Weight& mu) const;

    ~RootSystem() = default;
    RootSystem(const RootSystem&) = delete;
    RootSystem& operator=(const RootSystem&) = delete;

private:
    RootSystem() = default;
    static std::shared_ptr<RootSystem> build_impl(Family family, int rank, std::size_t weyl_cap);

    Family family_ = Family::A;
    int rank_ = 0;
    std::vector<Coord> cartan_;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> positive_roots_;
    std::vector<bool> pos_root_is_long_;
    std::vector<bool> simple_is_long_;
    int m_phi_ = 1;
    std::vector<WeylElement> weyl_;
    std::vector<Rat> inv_cartan_;
    std::vector<Coord> grade_vec_;
    std::vector<int> corners_;
    std::vector<std::optional<CornerData>> corner_data_;
};

std::string family_name(Family f);

// rho (all ones) and rho~ (m(Phi) at short simple roots, 1 at long ones).
struct WeylVectors {
    Weight rho;
    Weight rho_tilde;
};
WeylVectors weyl_vectors(const RootSystem& rs);

// d(lambda) = gcd of coordinates; d*(lambda) = largest e with e*rho~ | lambda,
// absent when rho~ does not divide lambda.  Rejects non-regular weights.
struct GcdInvariants {
    Coord d = 0;
    std::optional<Coord> d_star;
};
GcdInvariants gcd_invariants(const RootSystem& rs, const Weight& lambda);

LatticeClass lattice_class(const RootSystem& rs, const Weight& lambda);

bool has_minus_one(const RootSystem& rs);

}  // namespace weylchar
