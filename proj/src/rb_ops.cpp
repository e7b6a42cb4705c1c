#include "rbcoalg/rb_ops.hpp"

#include <stdexcept>

namespace rbcoalg {

namespace {

void require_square(const Coalgebra& c, const LinearOperator& p, const char* who) {
    if (p.rows != c.dim || p.cols != c.dim) {
        throw std::invalid_argument(std::string(who) + ": operator dimension mismatch");
    }
}

bool is_idempotent(const Matrix& p) { return mat_mul(p, p) == p; }

/// Image of an operator as the span of its columns.
Subspace operator_image(const Matrix& p) {
    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(p.cols));
    for (int c = 0; c < p.cols; ++c) cols.push_back(p.col(c));
    return Subspace::span(p.rows, cols);
}

}  // namespace

Report check_rb_axiom(const Coalgebra& c, const LinearOperator& p, const Rational& weight) {
    require_square(c, p, "check_rb_axiom");
    for (int k = 0; k < c.dim; ++k) {
        // lhs = (P⊗P)Δ(e_k)
        Tensor2 lhs(c.dim);
        const Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        for (int a = 0; a < c.dim; ++a) {
            for (int b = 0; b < c.dim; ++b) {
                const Rational& mu = dk.at(a, b);
                if (mu.is_zero()) continue;
                for (int i = 0; i < c.dim; ++i) {
                    const Rational& pia = p.at(i, a);
                    if (pia.is_zero()) continue;
                    const Rational w = mu * pia;
                    for (int j = 0; j < c.dim; ++j) {
                        const Rational& pjb = p.at(j, b);
                        if (!pjb.is_zero()) lhs.at(i, j) += w * pjb;
                    }
                }
            }
        }
        // d = Δ(P e_k)
        const Tensor2 d = apply_delta(c, p.col(k));
        // rhs = (id⊗P)d + (P⊗id)d + λ·d
        Tensor2 rhs(c.dim);
        for (int i = 0; i < c.dim; ++i) {
            for (int b = 0; b < c.dim; ++b) {
                const Rational& dib = d.at(i, b);
                if (dib.is_zero()) continue;
                for (int j = 0; j < c.dim; ++j) {
                    const Rational& pjb = p.at(j, b);
                    if (!pjb.is_zero()) rhs.at(i, j) += dib * pjb;
                }
                for (int a = 0; a < c.dim; ++a) {
                    const Rational& pai = p.at(a, i);
                    if (!pai.is_zero()) rhs.at(a, b) += dib * pai;
                }
                rhs.at(i, b) += weight * dib;
            }
        }
        if (!(lhs == rhs)) {
            return Report::fail("rb-coalgebra-axiom",
                                Counterexample{{k},
                                               "(P⊗P)delta ≠ (id⊗P)delta P + (P⊗id)delta P + λ delta P",
                                               sparse_entries(lhs),
                                               sparse_entries(rhs)});
        }
    }
    return Report::ok("rb-coalgebra-axiom");
}

Report check_coideal(const Coalgebra& c, const Subspace& j) {
    if (j.ambient() != c.dim) throw std::invalid_argument("check_coideal: dimension mismatch");
    for (int r = 0; r < j.dim(); ++r) {
        const Vec u = j.basis().row(r);
        const Tensor2 t = apply_delta(c, u);
        if (!tensor_subspace_sum_membership(j, j, t)) {
            return Report::fail("noncounitary-coideal",
                                Counterexample{{r},
                                               "delta of basis row not in C⊗J + J⊗C",
                                               sparse_entries(t),
                                               {}});
        }
    }
    return Report::ok("noncounitary-coideal");
}

RBCoalgebra grouplike_projector(const Coalgebra& c, const Vec& g) {
    if (!c.counital()) {
        throw std::invalid_argument("grouplike_projector: coalgebra has no counit");
    }
    if (!check_grouplike(c, g)) {
        throw std::invalid_argument("grouplike_projector: element is not group-like");
    }
    LinearOperator p(c.dim, c.dim);
    for (int k = 0; k < c.dim; ++k) {
        const Rational& ek = (*c.counit)[static_cast<std::size_t>(k)];
        if (ek.is_zero()) continue;
        for (int i = 0; i < c.dim; ++i) p.at(i, k) = ek * g[static_cast<std::size_t>(i)];
    }
    return RBCoalgebra{c, p, Rational(-1)};
}

RBCoalgebra rescale_weight(const RBCoalgebra& rb, const Rational& mu) {
    if (rb.weight == 0) throw std::invalid_argument("rescale_weight: weight is zero");
    const Rational factor = mu / rb.weight;
    return RBCoalgebra{rb.coalgebra, mat_scale(factor, rb.op), mu};
}

RBCoalgebra complement_operator(const RBCoalgebra& rb) {
    const Matrix bar =
        mat_sub(mat_scale(-rb.weight, Matrix::identity(rb.coalgebra.dim)), rb.op);
    return RBCoalgebra{rb.coalgebra, bar, rb.weight};
}

RBCoalgebra double_coproduct(const RBCoalgebra& rb) {
    const Coalgebra& c = rb.coalgebra;
    require_square(c, rb.op, "double_coproduct");
    Coalgebra out;
    out.dim = c.dim;
    out.basis_names = c.basis_names;
    out.counit = std::nullopt;
    out.delta.assign(static_cast<std::size_t>(c.dim), Tensor2(c.dim));
    for (int k = 0; k < c.dim; ++k) {
        const Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        Tensor2& tk = out.delta[static_cast<std::size_t>(k)];
        for (int a = 0; a < c.dim; ++a) {
            for (int b = 0; b < c.dim; ++b) {
                const Rational& mu = dk.at(a, b);
                if (mu.is_zero()) continue;
                for (int i = 0; i < c.dim; ++i) {
                    const Rational& pia = rb.op.at(i, a);
                    if (!pia.is_zero()) tk.at(i, b) += mu * pia;  // (P⊗id)Δ
                }
                for (int j = 0; j < c.dim; ++j) {
                    const Rational& pjb = rb.op.at(j, b);
                    if (!pjb.is_zero()) tk.at(a, j) += mu * pjb;  // (id⊗P)Δ
                }
                tk.at(a, b) += rb.weight * mu;  // λΔ
            }
        }
    }
    return RBCoalgebra{out, rb.op, rb.weight};
}

RBCoalgebra counitize(const Coalgebra& c, const LinearOperator& p) {
    if (c.counital()) {
        throw std::invalid_argument("counitize: input must be noncounitary");
    }
    require_square(c, p, "counitize");
    if (!is_idempotent(p)) {
        throw std::invalid_argument("counitize: operator not idempotent");
    }
    if (!check_rb_axiom(c, p, Rational(-1)).pass) {
        throw std::invalid_argument(
            "counitize: input fails the weight -1 Rota-Baxter identity");
    }
    const int n = c.dim + 1;  // index 0 is the adjoined group-like
    Coalgebra out;
    out.dim = n;
    out.basis_names.push_back("1");
    for (const auto& name : c.basis_names) out.basis_names.push_back(name);
    out.delta.assign(static_cast<std::size_t>(n), Tensor2(n));
    out.delta[0].at(0, 0) = 1;
    for (int k = 0; k < c.dim; ++k) {
        Tensor2& tk = out.delta[static_cast<std::size_t>(k) + 1];
        const Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        for (int i = 0; i < c.dim; ++i)
            for (int j = 0; j < c.dim; ++j)
                if (!dk.at(i, j).is_zero()) tk.at(i + 1, j + 1) = dk.at(i, j);
        tk.at(0, k + 1) += 1;
        tk.at(k + 1, 0) += 1;
    }
    Vec counit = zero_vec(n);
    counit[0] = 1;
    out.counit = counit;
    LinearOperator pt(n, n);
    pt.at(0, 0) = 1;
    for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j) pt.at(i + 1, j + 1) = p.at(i, j);
    return RBCoalgebra{out, pt, Rational(-1)};
}

ImageCoidealResult image_coideal(const RBCoalgebra& rb) {
    if (rb.weight == 0) throw std::invalid_argument("image_coideal: weight is zero");
    require_square(rb.coalgebra, rb.op, "image_coideal");
    ImageCoidealResult res{operator_image(rb.op), Report::ok("noncounitary-coideal"), std::nullopt};
    res.coideal = check_coideal(rb.coalgebra, res.image);
    if (rb.coalgebra.counital()) {
        bool inside = true;
        for (int r = 0; r < res.image.dim(); ++r) {
            if (apply_counit(rb.coalgebra, res.image.basis().row(r)) != 0) {
                inside = false;
                break;
            }
        }
        res.in_counit_kernel = inside;
    }
    return res;
}

RBCoalgebra quotient_by_image(const RBCoalgebra& rb) {
    if (rb.weight == 0) throw std::invalid_argument("quotient_by_image: weight is zero");
    const Coalgebra& c = rb.coalgebra;
    require_square(c, rb.op, "quotient_by_image");
    const Subspace image = operator_image(rb.op);
    const Matrix proj = image.quotient_map();
    const Matrix proj_t = proj.transpose();

    // Well-definedness: Δ must kill J = P(C) in both slots, and P must
    // preserve J; both are re-verified rather than trusted.
    for (int r = 0; r < image.dim(); ++r) {
        const Vec u = image.basis().row(r);
        const Tensor2 t = apply_delta(c, u);
        Matrix coeff(c.dim, c.dim);
        coeff.a = t.a;
        if (!is_zero_matrix(mat_mul(mat_mul(proj, coeff), proj_t))) {
            throw std::invalid_argument(
                "quotient_by_image: image of the operator is not a coideal; quotient undefined");
        }
        if (!image.contains(mat_apply(rb.op, u))) {
            throw std::invalid_argument(
                "quotient_by_image: operator does not preserve its image; quotient undefined");
        }
    }

    const std::vector<int> comp = image.complement_indices();
    const int m = static_cast<int>(comp.size());
    Coalgebra out;
    out.dim = m;
    for (int u = 0; u < m; ++u) {
        out.basis_names.push_back(c.basis_names[static_cast<std::size_t>(comp[u])] + "~");
    }
    out.delta.assign(static_cast<std::size_t>(m), Tensor2(m));
    for (int u = 0; u < m; ++u) {
        const Tensor2 t = apply_delta(c, unit_vec(c.dim, comp[u]));
        Matrix coeff(c.dim, c.dim);
        coeff.a = t.a;
        const Matrix reduced = mat_mul(mat_mul(proj, coeff), proj_t);
        out.delta[static_cast<std::size_t>(u)].a = reduced.a;
    }

    // Section of the quotient: class u ↦ e_{comp[u]}.
    Matrix section(c.dim, m);
    for (int u = 0; u < m; ++u) section.at(comp[u], u) = 1;
    const LinearOperator op_bar = mat_mul(mat_mul(proj, rb.op), section);

    if (c.counital()) {
        bool inside = true;
        for (int r = 0; r < image.dim(); ++r) {
            if (apply_counit(c, image.basis().row(r)) != 0) {
                inside = false;
                break;
            }
        }
        if (inside) {
            Vec eps(static_cast<std::size_t>(m));
            for (int u = 0; u < m; ++u) eps[u] = (*c.counit)[static_cast<std::size_t>(comp[u])];
            out.counit = eps;
        }
    }
    return RBCoalgebra{out, op_bar, rb.weight};
}

SplitDecomposition split_idempotent(const RBCoalgebra& rb) {
    if (rb.weight != -1) throw std::invalid_argument("split_idempotent: weight must be -1");
    require_square(rb.coalgebra, rb.op, "split_idempotent");
    if (!is_idempotent(rb.op)) {
        throw std::invalid_argument("split_idempotent: operator not idempotent");
    }
    const Subspace c1 = operator_image(rb.op);
    const Subspace c2 =
        operator_image(mat_sub(Matrix::identity(rb.coalgebra.dim), rb.op));
    if (c1.dim() + c2.dim() != rb.coalgebra.dim) {
        throw std::runtime_error("split_idempotent: images do not form a direct sum");
    }
    if (!check_coideal(rb.coalgebra, c1).pass) {
        throw std::runtime_error("split_idempotent: im P is not a noncounitary coideal");
    }
    if (!check_coideal(rb.coalgebra, c2).pass) {
        throw std::runtime_error("split_idempotent: im(id-P) is not a noncounitary coideal");
    }
    return SplitDecomposition{c1, c2};
}

RBCoalgebra projector_from_split(const Coalgebra& c, const Subspace& c1, const Subspace& c2) {
    if (c1.ambient() != c.dim || c2.ambient() != c.dim) {
        throw std::invalid_argument("projector_from_split: ambient dimension mismatch");
    }
    std::vector<Vec> all;
    for (int r = 0; r < c1.dim(); ++r) all.push_back(c1.basis().row(r));
    for (int r = 0; r < c2.dim(); ++r) all.push_back(c2.basis().row(r));
    if (c1.dim() + c2.dim() != c.dim || Subspace::span(c.dim, all).dim() != c.dim) {
        throw std::invalid_argument("projector_from_split: subspaces do not form a direct sum");
    }
    if (!check_coideal(c, c1).pass) {
        throw std::invalid_argument(
            "projector_from_split: first subspace is not a noncounitary coideal");
    }
    if (!check_coideal(c, c2).pass) {
        throw std::invalid_argument(
            "projector_from_split: second subspace is not a noncounitary coideal");
    }
    // Columns of B are the chosen bases of C₁ then C₂; the projection onto
    // C₁ along C₂ is B·diag(1..1,0..0)·B⁻¹.
    Matrix b(c.dim, c.dim);
    for (int r = 0; r < c1.dim(); ++r)
        for (int i = 0; i < c.dim; ++i) b.at(i, r) = c1.basis().at(r, i);
    for (int r = 0; r < c2.dim(); ++r)
        for (int i = 0; i < c.dim; ++i) b.at(i, c1.dim() + r) = c2.basis().at(r, i);
    const auto binv = inverse(b);
    if (!binv) throw std::runtime_error("projector_from_split: basis matrix not invertible");
    Matrix selector(c.dim, c.dim);
    for (int r = 0; r < c1.dim(); ++r) selector.at(r, r) = 1;
    const LinearOperator p = mat_mul(b, mat_mul(selector, *binv));
    return RBCoalgebra{c, p, Rational(-1)};
}

}  // namespace rbcoalg
