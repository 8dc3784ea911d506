#pragma once

// Real root counting and isolation for rational polynomials via Sturm
// sequences. Counts are of DISTINCT roots unless stated otherwise.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "segbounds/polynomial.hpp"

namespace segbounds {

enum class Bounds { open, closed, closed_open, open_closed };

/// Positive rational multiple of p with coprime integer coefficients.
inline PolyQ primitive_part(const PolyQ& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        Integer q = c.get_num() * (den_lcm / c.get_den());
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), num_gcd.get_mpz_t());
        v.emplace_back(q);
    }
    return PolyQ(std::move(v));
}

namespace detail {

using IntPoly = std::vector<Integer>;  // ascending, trimmed

inline IntPoly to_int_poly(const PolyQ& p) {
    IntPoly v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.push_back(c.get_num());  // caller ensures integrality
    return v;
}

inline PolyQ to_poly(const IntPoly& v, int sign = 1) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(sign < 0 ? Integer(-x) : x);
    return PolyQ(std::move(c));
}

inline void trim(IntPoly& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

/// Pseudo-remainder lc(b)^{deg a - deg b + 1} a mod b, in Z[x].
inline IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& l = b.back();
    long e = static_cast<long>(r.size()) - static_cast<long>(db);
    while (!r.empty() && r.size() >= b.size()) {
        const Integer t = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c *= l;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= t * b[j];
        r.pop_back();
        trim(r);
        --e;
    }
    if (e > 0 && !r.empty()) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

/// sign of p(num/den), den > 0, by homogeneous Horner in Z.
inline int sign_at(const IntPoly& p, const Integer& num, const Integer& den) {
    if (p.empty()) return 0;
    Integer acc = p.back();
    Integer den_pow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        acc += p[i] * den_pow;
    }
    return sgn(acc);
}

}  // namespace detail

/// Sturm chain of the square-free part of p. Members after the first two are
/// negated remainders rescaled by positive constants (sign pattern unchanged).
///
/// The chain is built as a subresultant remainder sequence in Z[x]: exact
/// divisions keep coefficient growth linear without any gcd computations,
/// and the sign of each member relative to the true Euclidean remainder is
/// tracked explicitly.
class SturmSequence {
public:
    explicit SturmSequence(const PolyQ& p) {
        if (p.is_zero()) throw std::domain_error("indeterminate root count");
        const PolyQ last = build(primitive_part(p));
        // The chain of p ends in gcd(p, p'); restart on p / gcd if nontrivial.
        gcd_degree_ = last.degree();
        if (gcd_degree_ > 0) build(primitive_part(base_ / last));
    }

    /// Degree of gcd(p, p'); 0 iff p is square-free.
    int gcd_degree() const { return gcd_degree_; }

    const PolyQ& square_free() const { return base_; }
    const std::vector<PolyQ>& chain() const { return chain_; }

    /// Sign changes at x, zeros skipped. Right-continuous in x for a
    /// square-free chain, so V(a) - V(b) counts roots in (a, b].
    int variations(const Rational& x) const {
        int count = 0;
        int last = 0;
        for (const auto& q : int_chain_) {
            const int s = detail::sign_at(q, x.get_num(), x.get_den());
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int count(const Rational& a, const Rational& b, Bounds bounds) const {
        if (!(a < b)) throw std::invalid_argument("sturm count needs a < b");
        int n = variations(a) - variations(b);
        const bool a_root = sgn(base_(a)) == 0;
        const bool b_root = sgn(base_(b)) == 0;
        if (a_root && (bounds == Bounds::closed || bounds == Bounds::closed_open)) ++n;
        if (b_root && (bounds == Bounds::open || bounds == Bounds::closed_open)) --n;
        return n;
    }

private:
    // Fills the chain for a primitive integer base; returns the last nonzero
    // subresultant, a scalar multiple of gcd(base, base').
    PolyQ build(PolyQ base) {
        base_ = std::move(base);
        chain_.clear();
        int_chain_.clear();
        auto push = [&](detail::IntPoly v, int sign) {
            if (sign < 0)
                for (auto& c : v) c = -c;
            chain_.push_back(detail::to_poly(v));
            int_chain_.push_back(std::move(v));
        };
        detail::IntPoly A = detail::to_int_poly(base_);
        push(A, 1);
        if (base_.degree() <= 0) return base_;
        detail::IntPoly B = detail::to_int_poly(primitive_part(base_.derivative()));
        push(B, 1);

        int sign_a = 1, sign_b = 1;  // raw member = (sign * positive) * Sturm member
        Integer g = 1, h = 1;
        while (B.size() > 1) {
            const std::size_t delta = A.size() - B.size();
            detail::IntPoly R = detail::pseudo_remainder(A, B);
            if (R.empty()) break;
            Integer divisor;
            mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
            divisor *= g;
            for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
            // raw R = lc(B)^{delta+1} rem(A, B) / (g h^delta) and rem(A, B) = -sign_a * next.
            int sign_r = -sign_a * sgn(divisor);
            if ((delta + 1) % 2 == 1 && sgn(B.back()) < 0) sign_r = -sign_r;
            push(R, sign_r);
            A = std::move(B);
            B = std::move(R);
            sign_a = sign_b;
            sign_b = sign_r;
            g = A.back();
            if (delta == 1) {
                h = g;
            } else {
                Integer num, den;
                mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
                mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
        }
        return detail::to_poly(B);
    }

    PolyQ base_;
    std::vector<PolyQ> chain_;
    std::vector<detail::IntPoly> int_chain_;
    int gcd_degree_ = 0;
};

/// Number of distinct real roots of p in the interval; `closed` selects [a, b]
/// versus (a, b).
inline int sturm_count(const PolyQ& p, const Rational& a, const Rational& b, bool closed) {
    return SturmSequence(p).count(a, b, closed ? Bounds::closed : Bounds::open);
}

inline int count_roots(const PolyQ& p, const Rational& a, const Rational& b, Bounds bounds) {
    return SturmSequence(p).count(a, b, bounds);
}

/// Real roots counted with multiplicity, via square-free factorization.
inline int count_roots_with_multiplicity(const PolyQ& p, const Rational& a, const Rational& b, Bounds bounds) {
    if (p.is_zero()) throw std::domain_error("indeterminate root count");
    int total = 0;
    auto factors = square_free_factorization(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        total += static_cast<int>(i + 1) * SturmSequence(factors[i]).count(a, b, bounds);
    }
    return total;
}

/// A real root known to lie in the open interval (lo, hi), or exactly at lo
/// when exact is set (then lo == hi).
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;
};

/// Disjoint isolating intervals for all distinct roots of p in [a, b],
/// ascending.
inline std::vector<RootInterval> isolate_roots(const SturmSequence& seq, const Rational& a, const Rational& b) {
    std::vector<RootInterval> out;
    const PolyQ& p = seq.square_free();
    if (p.degree() <= 0) return out;
    if (sgn(p(a)) == 0) out.push_back({a, a, true});

    struct Piece {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Piece> stack{{a, b, seq.variations(a), seq.variations(b)}};
    std::vector<RootInterval> found;
    while (!stack.empty()) {
        Piece piece = std::move(stack.back());
        stack.pop_back();
        const int n = piece.vlo - piece.vhi;  // roots in (lo, hi]
        if (n == 0) continue;
        if (n == 1) {
            if (sgn(p(piece.hi)) == 0)
                found.push_back({piece.hi, piece.hi, true});
            else
                found.push_back({piece.lo, piece.hi, false});
            continue;
        }
        Rational mid = (piece.lo + piece.hi) / 2;
        int vm = seq.variations(mid);
        stack.push_back({mid, piece.hi, vm, piece.vhi});
        stack.push_back({piece.lo, mid, piece.vlo, vm});
    }
    std::sort(found.begin(), found.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

inline std::vector<RootInterval> isolate_roots(const PolyQ& p, const Rational& a, const Rational& b) {
    return isolate_roots(SturmSequence(p), a, b);
}

/// Halves a non-exact isolating interval once; may land exactly on the root.
inline void bisect_once(const SturmSequence& seq, RootInterval& root) {
    if (root.exact) return;
    Rational mid = (root.lo + root.hi) / 2;
    if (sgn(seq.square_free()(mid)) == 0) {
        root = {mid, mid, true};
        return;
    }
    if (seq.count(root.lo, mid, Bounds::open) == 1)
        root.hi = mid;
    else
        root.lo = mid;
}

/// Sign of q at the root isolated by `root` (a root of seq's polynomial),
/// with qs the Sturm sequence of q. Requires q(root) != 0; throws after
/// max_steps refinements otherwise.
inline int sign_at_root(const SturmSequence& seq, RootInterval root, const PolyQ& q, const SturmSequence& qs,
                        int max_steps = 4000) {
    if (q.is_zero()) return 0;
    if (root.exact) return sgn(q(root.lo));
    if (q.degree() == 0) return sgn(q.leading());
    for (int step = 0; step < max_steps; ++step) {
        if (root.exact) return sgn(q(root.lo));
        if (qs.count(root.lo, root.hi, Bounds::closed) == 0) {
            Rational mid = (root.lo + root.hi) / 2;
            return sgn(q(mid));
        }
        bisect_once(seq, root);
    }
    throw std::runtime_error("sign_at_root: polynomials share the isolated root");
}

inline int sign_at_root(const SturmSequence& seq, const RootInterval& root, const PolyQ& q) {
    if (q.is_zero()) return 0;
    return sign_at_root(seq, root, q, SturmSequence(q));
}

}  // namespace segbounds
