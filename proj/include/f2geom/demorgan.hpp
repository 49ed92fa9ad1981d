#pragma once

#include "f2geom/dga.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace f2geom {

// Ā: the elements of A with a·̄b = ab+a+b and a+̄b = a+b+1. Unit 0, zero 1.
class BarAlgebra {
public:
    explicit BarAlgebra(std::shared_ptr<const Algebra> base) : A_(std::move(base)) {}

    const Algebra& base() const { return *A_; }
    BitVec add(const BitVec& a, const BitVec& b) const;
    BitVec mul(const BitVec& a, const BitVec& b) const;
    BitVec zero() const { return A_->one(); }
    BitVec one() const { return A_->zero(); }
    BitVec scale(bool mu, const BitVec& a) const { return mu ? a : zero(); }
    BitVec complement(const BitVec& a) const { return A_->one() + a; } // the isomorphism A -> Ā
    BitVec power(const BitVec& a, std::size_t k) const;

private:
    std::shared_ptr<const Algebra> A_;
};

// all elements when 2^dim ≤ 2^max_bits, otherwise the basis, 0, 1 and `extra` random elements
std::vector<BitVec> algebra_samples(const Algebra& A, std::size_t max_bits = 4, std::size_t extra = 24,
                                    std::uint64_t seed = 1);

// unital algebra axioms for Ā, a ↦ 1+a an isomorphism, a·̄a = a², Boolean iff A is
Diagnostic check_bar_algebra(const Algebra& A, std::size_t max_bits = 4);

BitVec frobenius(const Algebra& A, const BitVec& a);      // a²
BitVec frobenius_part(const Algebra& A, const BitVec& a); // ∂a = a + a²
bool is_boolean(const Algebra& A);

struct FrobeniusReport {
    std::vector<std::string> additive_failures;   // ∂(a+b) = ∂a + ∂b
    std::vector<std::string> bar_product_failures; // ∂(ab) = ∂a + ∂b + ∂a ∂b
    std::vector<std::string> twisted_failures;    // ∂(ab) = a ∂b + (∂a) b + ∂a ∂b
};
// on all pairs of basis elements
FrobeniusReport check_frobenius_part(const Algebra& A);

struct ChangeOfVariables {
    std::uint64_t f = 0, g = 0; // coefficient bits; g(y) = f(1+y)
    bool identity_holds = false; // g evaluated in Ā at every a equals 1 + f(a)
    bool relation_holds = false; // g_Ā(x) = 0̄ in Ā for x the generator
};
std::uint64_t poly_shift(std::uint64_t f); // f(1+y)
std::string poly_format(std::uint64_t f, char var = 'x');
ChangeOfVariables change_of_variables_check(std::uint64_t f);

// Ω̄¹: ω+̄η = θ+ω+η, a·̄ω = aθ+(a+1)ω, ω·̄a = θa+ω(a+1), d̄a = θ+da
class BarCalculus {
public:
    BarCalculus(std::shared_ptr<const Calculus> calc, BitVec theta);

    const Calculus& base() const { return *calc_; }
    const BarAlgebra& algebra() const { return bar_; }
    const BitVec& theta() const { return theta_; }

    BitVec zero() const { return theta_; }
    BitVec complement(const BitVec& w) const { return theta_ + w; }
    BitVec add(const BitVec& w, const BitVec& e) const { return theta_ + w + e; }
    BitVec left(const BitVec& a, const BitVec& w) const;
    BitVec right(const BitVec& w, const BitVec& a) const;
    BitVec d(const BitVec& a) const;

private:
    std::shared_ptr<const Calculus> calc_;
    BitVec theta_;
    BarAlgebra bar_;
};

// bimodule axioms and Leibniz for Ω̄¹, and facts: complementation intertwines everything, θ is
// the bar zero, θ inner for Ω¹ iff 0 inner for Ω̄¹
Diagnostic check_bar_calculus(const BarCalculus& bc, std::size_t max_bits = 4);
bool is_inner_by(const Calculus& calc, const BitVec& theta);
bool bar_inner_by_zero(const BarCalculus& bc);

// Ω̄¹⊗Ω̄¹: same space as Ω¹⊗Ω¹ with θ⊗θ in place of θ; ω⊗̄η = ω⊗η + θ⊗η + ω⊗θ
class BarTensor {
public:
    BarTensor(const BarCalculus& bc, const TensorProduct& t2);

    const BitVec& theta2() const { return tt_; }
    BitVec zero() const { return tt_; }
    BitVec complement(const BitVec& x) const { return tt_ + x; }
    BitVec add(const BitVec& x, const BitVec& y) const { return tt_ + x + y; }
    BitVec left(const BitVec& a, const BitVec& x) const;
    BitVec right(const BitVec& x, const BitVec& a) const;
    BitVec tensor(const BitVec& w, const BitVec& e) const;

private:
    const BarCalculus* bc_;
    const TensorProduct* t2_;
    BitVec tt_;
};

Diagnostic check_bar_tensor(const BarCalculus& bc, const TensorProduct& t2, std::size_t max_bits = 4);

// Ω̄² with θ² in place of θ, d̄ω = θ²+dω and ω·̄η = ωη+θη+ωθ. Throws unless dθ = 0.
class BarOmega2 {
public:
    BarOmega2(const BarCalculus& bc, const SecondOrder& so);

    const BitVec& theta2() const { return tt_; }
    BitVec zero() const { return tt_; }
    BitVec complement(const BitVec& x) const { return tt_ + x; }
    BitVec add(const BitVec& x, const BitVec& y) const { return tt_ + x + y; }
    BitVec left(const BitVec& a, const BitVec& x) const;
    BitVec right(const BitVec& x, const BitVec& a) const;
    BitVec d(const BitVec& w) const;                       // Ω¹ -> Ω²
    BitVec wedge(const BitVec& w, const BitVec& e) const; // Ω¹ × Ω¹ -> Ω²

private:
    const BarCalculus* bc_;
    const SecondOrder* so_;
    BitVec tt_;
};

Diagnostic check_bar_omega2(const BarCalculus& bc, const SecondOrder& so, std::size_t max_bits = 4);

} // namespace f2geom
