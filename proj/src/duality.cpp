#include "rbcoalg/duality.hpp"

#include <stdexcept>

namespace rbcoalg {

namespace {

Counterexample vec_counterexample(std::vector<int> basis, std::string detail, const Vec& lhs,
                                  const Vec& rhs) {
    return Counterexample{std::move(basis), std::move(detail), sparse_entries(lhs),
                          sparse_entries(rhs)};
}

}  // namespace

Report check_associativity(const Algebra& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                const Vec left = a.mult.product(a.mult.product_basis(i, j), unit_vec(a.dim, k));
                const Vec right = a.mult.product(unit_vec(a.dim, i), a.mult.product_basis(j, k));
                if (left != right) {
                    return Report::fail("associativity",
                                        vec_counterexample({i, j, k}, "", left, right));
                }
            }
    return Report::ok("associativity");
}

Report check_unit(const Algebra& a) {
    if (!a.unital()) throw std::invalid_argument("check_unit: algebra has no unit");
    for (int k = 0; k < a.dim; ++k) {
        const Vec ek = unit_vec(a.dim, k);
        const Vec lu = a.mult.product(*a.unit, ek);
        if (lu != ek) return Report::fail("unit", vec_counterexample({k}, "left unit", lu, ek));
        const Vec ru = a.mult.product(ek, *a.unit);
        if (ru != ek) return Report::fail("unit", vec_counterexample({k}, "right unit", ru, ek));
    }
    return Report::ok("unit");
}

Report check_rb_algebra_axiom(const Algebra& a, const LinearOperator& p, const Rational& weight) {
    if (p.rows != a.dim || p.cols != a.dim) {
        throw std::invalid_argument("check_rb_algebra_axiom: operator dimension mismatch");
    }
    for (int i = 0; i < a.dim; ++i) {
        const Vec pi = p.col(i);
        for (int j = 0; j < a.dim; ++j) {
            const Vec pj = p.col(j);
            const Vec lhs = a.mult.product(pi, pj);
            Vec inner = a.mult.product(unit_vec(a.dim, i), pj);           // x·P(y)
            inner = vec_add(inner, a.mult.product(pi, unit_vec(a.dim, j)));  // + P(x)·y
            inner = vec_add(inner, vec_scale(weight, a.mult.product_basis(i, j)));  // + λ·xy
            const Vec rhs = mat_apply(p, inner);
            if (lhs != rhs) {
                return Report::fail("rb-algebra-axiom",
                                    vec_counterexample({i, j},
                                                       "P(x)P(y) ≠ P(xP(y)) + P(P(x)y) + λP(xy)",
                                                       lhs, rhs));
            }
        }
    }
    return Report::ok("rb-algebra-axiom");
}

RBAlgebra dualize(const RBCoalgebra& rb) {
    const Coalgebra& c = rb.coalgebra;
    Algebra a;
    a.dim = c.dim;
    for (const auto& name : c.basis_names) a.basis_names.push_back(name + "*");
    a.mult = MultTable(c.dim);
    for (int k = 0; k < c.dim; ++k) {
        const Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        for (int i = 0; i < c.dim; ++i)
            for (int j = 0; j < c.dim; ++j)
                if (!dk.at(i, j).is_zero()) a.mult.at(i, j, k) = dk.at(i, j);
    }
    if (c.counital()) a.unit = *c.counit;
    return RBAlgebra{a, rb.op.transpose(), rb.weight};
}

Algebra double_product(const RBAlgebra& rb) {
    const Algebra& a = rb.algebra;
    if (rb.op.rows != a.dim || rb.op.cols != a.dim) {
        throw std::invalid_argument("double_product: operator dimension mismatch");
    }
    Algebra out;
    out.dim = a.dim;
    out.basis_names = a.basis_names;
    out.unit = std::nullopt;
    out.mult = MultTable(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            for (int k = 0; k < a.dim; ++k) {
                Rational acc = rb.weight * a.mult.at(i, j, k);
                for (int s = 0; s < a.dim; ++s) {
                    const Rational& psj = rb.op.at(s, j);
                    if (!psj.is_zero()) acc += a.mult.at(i, s, k) * psj;  // x·P(y)
                    const Rational& psi = rb.op.at(s, i);
                    if (!psi.is_zero()) acc += a.mult.at(s, j, k) * psi;  // P(x)·y
                }
                if (!acc.is_zero()) out.mult.at(i, j, k) = acc;
            }
        }
    return out;
}

RBAlgebra q_polynomial_truncation(const Rational& q, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("q_polynomial_truncation: negative degree");
    for (int n = 1; n <= max_degree; ++n) {
        if (rational_pow(q, n) == 1) {
            throw std::invalid_argument(
                "q_polynomial_truncation: q^" + std::to_string(n) + " = 1 inside the truncation");
        }
    }
    Algebra a;
    a.dim = max_degree;  // basis t^1 … t^N
    for (int i = 1; i <= max_degree; ++i) a.basis_names.push_back("t^" + std::to_string(i));
    a.mult = MultTable(max_degree);
    for (int i = 0; i < max_degree; ++i)
        for (int j = 0; j < max_degree; ++j) {
            const int k = i + j + 1;  // t^(i+1)·t^(j+1) = t^(i+j+2)
            if (k < max_degree) a.mult.at(i, j, k) = 1;
        }
    LinearOperator p(max_degree, max_degree);
    for (int i = 0; i < max_degree; ++i) {
        const Rational qn = rational_pow(q, i + 1);
        p.at(i, i) = qn / (Rational(1) - qn);
    }
    return RBAlgebra{a, p, Rational(1)};
}

GradedAlgebraTruncation q_graded_truncation(const Rational& q, int max_degree) {
    GradedAlgebraTruncation g;
    g.rb = q_polynomial_truncation(q, max_degree);
    g.max_degree = max_degree;
    for (int i = 1; i <= max_degree; ++i) g.degree.push_back(i);
    return g;
}

RBCoalgebra graded_dual(const GradedAlgebraTruncation& g) {
    const Algebra& a = g.rb.algebra;
    if (static_cast<int>(g.degree.size()) != a.dim) {
        throw std::invalid_argument("graded_dual: degree list does not match dimension");
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                if (!a.mult.at(i, j, k).is_zero() &&
                    g.degree[static_cast<std::size_t>(k)] !=
                        g.degree[static_cast<std::size_t>(i)] + g.degree[static_cast<std::size_t>(j)]) {
                    throw std::invalid_argument(
                        "graded_dual: multiplication does not respect the grading");
                }
            }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            if (!g.rb.op.at(i, j).is_zero() &&
                g.degree[static_cast<std::size_t>(i)] != g.degree[static_cast<std::size_t>(j)]) {
                throw std::invalid_argument("graded_dual: grading not preserved by operator");
            }
        }
    Coalgebra c;
    c.dim = a.dim;
    for (const auto& name : a.basis_names) c.basis_names.push_back(name + "*");
    c.delta.assign(static_cast<std::size_t>(a.dim), Tensor2(a.dim));
    for (int k = 0; k < a.dim; ++k) {
        Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                if (!a.mult.at(i, j, k).is_zero()) dk.at(i, j) = a.mult.at(i, j, k);
    }
    if (a.unital()) c.counit = *a.unit;
    return RBCoalgebra{c, g.rb.op.transpose(), g.rb.weight};
}

}  // namespace rbcoalg
